"""Drinfeld doubles of finite groups and morphisms between them.

D(G) has basis delta_g # h stored at index g*|G| + h, product
(delta_g # h)(delta_g' # h') = [g = h g' h^-1] delta_g # h h' and the
coproduct of du(G) (x) kG.  A morphism D(G) -> D(K) is encoded by a
quadruple (u, r, p, v):

    u : du(G) -> du(K)   unital coalgebra map
    r : G -> K-hat       characters
    p : du(G) -> kK      Hopf map (built from a pairing of A <= G, B <= K)
    v : G -> K           group hom

with  delta_a # g  ->  sum  u(a1) r(g) # p(a2) v(g).
"""
from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from math import lcm
from typing import Optional, Sequence

from .cyclotomic import CycNumber, euler_phi, one
from .groups import (FiniteGroup, GroupHom, abelian_normal_with_dual_embedding, character_group,
                     direct_product, enumerate_homs, remak_decompose)
from .hopf import (FinHopf, HopfError, HopfMap, Origin, build_dual_group_algebra,
                   build_group_algebra, cocomm_check, comm_check, fourier_map,
                   normality, tensor_hopf)
from .linalg import Mat, Vec, vec_axpy

__all__ = [
    "drinfeld_double", "tensor_form", "Quadruple", "build_p", "quadruple_to_map",
    "map_to_quadruple", "verify_relations", "enumerate_double_homs", "enumerate_double_auts",
    "zenthom_doubles", "twistability", "commutative_image_properties",
    "purely_non_abelian_equivalences", "gamma_group", "block_aut_order", "dihedral_aut_order",
    "EnumerationReport", "DoubleContext",
]

DOUBLE_GUARD = 12


class QuadrupleError(HopfError):
    pass


def _scalar_order(*groups: FiniteGroup) -> int:
    return lcm(*(G.exponent for G in groups))


def drinfeld_double(G: FiniteGroup, order: int | None = None) -> FinHopf:
    N = order or G.exponent
    if N % G.exponent:
        raise HopfError(f"scalar order {N} must be divisible by exponent {G.exponent}")
    n, u = G.size, one(N)
    d = n * n
    t, inv = G.table, G.inv
    mult = []
    for p in range(d):
        g, h = divmod(p, n)
        for q in range(d):
            g2, h2 = divmod(q, n)
            mult.append({g * n + t[h][h2]: u} if g == G.conj(h, g2) else {})
    comult = []
    for p in range(d):
        g, h = divmod(p, n)
        comult.append({(x * n + h) * d + (t[inv[x]][g] * n + h): u for x in range(n)})
    unit = Mat(N, d, 1, [{g * n + G.identity: u for g in range(n)}])
    counit = Mat(N, 1, d, [({0: u} if p // n == G.identity else {}) for p in range(d)])
    S = Mat(N, d, d, [{G.conj(inv[p % n], inv[p // n]) * n + inv[p % n]: u} for p in range(d)])
    return FinHopf(d, N, Mat(N, d, d * d, mult), unit, Mat(N, d * d, d, comult), counit, S,
                   Origin("double", G), f"D({G.name or n})")


def tensor_form(G: FiniteGroup, order: int | None = None) -> FinHopf:
    """du(G) (x) kG with the untwisted product; same coalgebra as D(G)."""
    N = order or G.exponent
    return tensor_hopf(build_dual_group_algebra(G, N), build_group_algebra(G, N))


# ---------------------------------------------------------------------------
# quadruples
# ---------------------------------------------------------------------------

@dataclass
class DoubleContext:
    """Everything needed to move between quadruples and matrices for D(G) -> D(K)."""
    G: FiniteGroup
    K: FiniteGroup
    order: int
    DG: FinHopf = None
    DK: FinHopf = None
    duG: FinHopf = None
    duK: FinHopf = None
    kG: FinHopf = None
    kK: FinHopf = None
    Khat: FiniteGroup = None
    chars: list = None
    char_vals: list = None

    @classmethod
    def make(cls, G: FiniteGroup, K: FiniteGroup, order: int | None = None) -> "DoubleContext":
        N = order or _scalar_order(G, K)
        Khat, chars = character_group(K)
        ctx = cls(G, K, N, drinfeld_double(G, N), drinfeld_double(K, N),
                  build_dual_group_algebra(G, N), build_dual_group_algebra(K, N),
                  build_group_algebra(G, N), build_group_algebra(K, N), Khat, chars,
                  [c.materialize(N) for c in chars])
        if G is K:
            ctx.DK, ctx.duK, ctx.kK = ctx.DG, ctx.duG, ctx.kG
        return ctx


@dataclass
class Quadruple:
    U: Mat                  # |K| x |G|, du(G) -> du(K)
    r: tuple[int, ...]      # g -> index into the character list of K
    P: Mat                  # |K| x |G|, du(G) -> kK
    v: tuple[int, ...]      # g -> v(g)
    sigma: Optional[tuple[int, ...]] = None   # U = sigma^* when known
    triple: Optional[tuple] = None            # (A, B, pairing) when known

    def key(self):
        return (self.U, self.r, self.P, self.v)

    @property
    def p_trivial(self) -> bool:
        return self.triple is not None and len(self.triple[0]) == 1


def sigma_dual(ctx: DoubleContext, sigma: Sequence[int]) -> Mat:
    """u = sigma^*: delta_a -> sum_{sigma(k) = a} delta_k."""
    cols = [dict() for _ in range(ctx.G.size)]
    u = one(ctx.order)
    for k, a in enumerate(sigma):
        cols[a][k] = u
    return Mat(ctx.order, ctx.K.size, ctx.G.size, cols)


def build_p(ctx: DoubleContext, triple) -> Mat:
    A, B, theta = triple
    return fourier_map(ctx.G, ctx.K, theta, ctx.order)


def quadruple_to_map(ctx: DoubleContext, q: Quadruple, dom: FinHopf | None = None,
                     cod: FinHopf | None = None) -> HopfMap:
    """delta_a # g -> sum_x sum_k sum_b U[k,x] chi_g(k) P[b, x^-1 a] delta_k # b v(g)."""
    G, K, N = ctx.G, ctx.K, ctx.order
    n, m = G.size, K.size
    tK = K.table
    cols = []
    Ucols = [q.U.col(x) for x in range(n)]
    Pcols = [q.P.col(y) for y in range(n)]
    for a in range(n):
        # split delta_a = sum_{xy=a}; y = x^-1 a
        pairs = [(Ucols[x], Pcols[G.table[G.inv[x]][a]]) for x in range(n)]
        pairs = [(uc, pc) for uc, pc in pairs if uc and pc]
        for g in range(n):
            chi = ctx.char_vals[q.r[g]]
            vg = q.v[g]
            acc: Vec = {}
            for uc, pc in pairs:
                for k, cu in uc.items():
                    ck = cu * chi[k]
                    for b, cp in pc.items():
                        vec_axpy(acc, ck * cp, {k * m + tK[b][vg]: one(N)})
            cols.append(acc)
    return HopfMap(dom or ctx.DG, cod or ctx.DK, Mat(N, m * m, n * n, cols))


def map_to_quadruple(ctx: DoubleContext, f: HopfMap) -> Quadruple:
    """Read (u, r, p, v) off a morphism D(G) -> D(K)."""
    G, K, N = ctx.G, ctx.K, ctx.order
    n, m = G.size, K.size
    e = G.identity
    Ucols, Pcols = [], []
    for a in range(n):
        col = f.mat.col(a * n + e)
        uc: Vec = {}
        pc: Vec = {}
        for idx, c in col.items():
            k, h = divmod(idx, m)
            vec_axpy(uc, c, {k: one(N)})
            if k == K.identity:
                pc[h] = c
        Ucols.append(uc)
        Pcols.append(pc)
    r, v = [], []
    lookup = {tuple(vals): i for i, vals in enumerate(ctx.char_vals)}
    for g in range(n):
        acc: Vec = {}
        for a in range(n):
            vec_axpy(acc, one(N), f.mat.col(a * n + g))
        hs = {idx % m for idx in acc}
        if len(hs) != 1:
            raise QuadrupleError("image of 1 # g is not of the form chi # k")
        h = hs.pop()
        vals = tuple(acc.get(k * m + h, CycNumber.rational(N, 0)) for k in range(m))
        if vals not in lookup:
            raise QuadrupleError("image of 1 # g does not carry a linear character")
        r.append(lookup[vals])
        v.append(h)
    return Quadruple(Mat(N, m, n, Ucols), tuple(r), Mat(N, m, n, Pcols), tuple(v))


def _conj_vec(K: FiniteGroup, t: int, phi: Vec) -> Vec:
    """t acting on du(K) or kK by conjugation of basis labels."""
    return {K.conj(t, k): c for k, c in phi.items()}


def _u_equivariant(ctx, U: Mat, v) -> bool:
    G, K = ctx.G, ctx.K
    for g in range(G.size):
        for a in range(G.size):
            if U.col(G.conj(g, a)) != _conj_vec(K, v[g], U.col(a)):
                return False
    return True


def _u_equivariant_group(ctx, sigma, v) -> bool:
    """u-equivariance for u = sigma^*: sigma(v(g) k v(g)^-1) = g sigma(k) g^-1."""
    G, K = ctx.G, ctx.K
    for g in range(G.size):
        vg = v[g]
        for k in range(K.size):
            if sigma[K.conj(vg, k)] != G.conj(g, sigma[k]):
                return False
    return True


def _u_p_cocommute(ctx, U: Mat, P: Mat) -> bool:
    return cocomm_check(HopfMap(ctx.duG, ctx.duK, U), HopfMap(ctx.duG, ctx.kK, P))


def _u_twisted_mult(ctx, U: Mat, P: Mat) -> bool:
    """u(ab) = u(a1) (p(a2) -> u(b)) on basis a = delta_x, b = delta_y."""
    G, K, N = ctx.G, ctx.K, ctx.order
    n = G.size
    conj_cache = {}
    for y in range(n):
        uy = U.col(y)
        for x in range(n):
            rhs: Vec = {}
            for x1 in range(n):
                x2 = G.table[G.inv[x1]][x]
                u1, p2 = U.col(x1), P.col(x2)
                if not u1 or not p2:
                    continue
                acted: Vec = {}
                for b, cb in p2.items():
                    key = (b, y)
                    if key not in conj_cache:
                        conj_cache[key] = _conj_vec(K, b, uy)
                    vec_axpy(acted, cb, conj_cache[key])
                for k, c in u1.items():
                    if k in acted:
                        vec_axpy(rhs, c * acted[k], {k: one(N)})
            lhs = uy if x == y else {}
            if lhs != rhs:
                return False
    return True


def _p_equivariant(ctx, P: Mat, v) -> bool:
    G, K = ctx.G, ctx.K
    for g in range(G.size):
        for a in range(G.size):
            if P.col(G.conj(g, a)) != _conj_vec(K, v[g], P.col(a)):
                return False
    return True


def verify_relations(ctx: DoubleContext, q: Quadruple, cross_check: bool = False) -> dict:
    """Component types plus the four compatibility relations; optionally compare with a matrix check."""
    G, K = ctx.G, ctx.K
    rep = {}
    u_map = HopfMap(ctx.duG, ctx.duK, q.U)
    p_map = HopfMap(ctx.duG, ctx.kK, q.P)
    rep["u_coalgebra_unital"] = u_map.is_coalgebra and u_map.is_unital
    rep["p_hopf"] = p_map.is_hopf
    rep["v_hom"] = GroupHom(G, K, tuple(q.v)).is_hom()
    rep["r_hom"] = GroupHom(G, ctx.Khat, tuple(q.r)).is_hom()
    rep["u_equivariant"] = _u_equivariant(ctx, q.U, q.v)
    rep["u_p_cocommute"] = _u_p_cocommute(ctx, q.U, q.P)
    rep["u_twisted_mult"] = _u_twisted_mult(ctx, q.U, q.P)
    rep["p_equivariant"] = _p_equivariant(ctx, q.P, q.v)
    rep["all"] = all(rep.values())
    if cross_check:
        m = quadruple_to_map(ctx, q)
        rep["matrix_hopf"] = m.is_hopf
        rep["agree"] = rep["matrix_hopf"] == rep["all"]
    return rep


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------

@dataclass
class EnumerationReport:
    G: FiniteGroup
    K: FiniteGroup
    maps: list[HopfMap]
    quadruples: list[Quadruple]
    complete: bool
    reason: str
    stats: dict = field(default_factory=dict)

    def __len__(self):
        return len(self.maps)


def _verify_candidate(args):
    ctx, q, need_bijective = args
    f = quadruple_to_map(ctx, q)
    if need_bijective and not f.mat.is_bijective():
        return None
    if not f.is_hopf:
        return None
    return f.mat


def enumerate_double_homs(G: FiniteGroup, K: FiniteGroup, order: int | None = None,
                          automorphisms: bool = False, jobs: int = 1,
                          max_order: int = DOUBLE_GUARD) -> EnumerationReport:
    """Quadruple search with u ranging over duals of group homs.

    Stage 1 prunes with group-level equivariance of u and p and small
    matrix checks of cocommutation and twisted multiplicativity; stage 2 verifies each survivor as a matrix."""
    from .groups import SizeGuardError
    if max(G.size, K.size) > max_order:
        raise SizeGuardError(f"double enumeration guard: groups must have order <= {max_order}")
    ctx = DoubleContext.make(G, K, order)
    V = [h.images for h in enumerate_homs(G, K)]
    R = [h.images for h in enumerate_homs(G, ctx.Khat)]
    Sig = [h.images for h in enumerate_homs(K, G)]
    triples = abelian_normal_with_dual_embedding(G, K)
    Pm = [build_p(ctx, t) for t in triples]
    Um = [sigma_dual(ctx, s) for s in Sig]
    p_eq = [[_p_equivariant(ctx, P, v) for v in V] for P in Pm]
    u_eq = [[_u_equivariant_group(ctx, s, v) for v in V] for s in Sig]
    mid = {}
    for ip, P in enumerate(Pm):
        if not any(p_eq[ip]):
            continue
        for iu, U in enumerate(Um):
            mid[iu, ip] = _u_p_cocommute(ctx, U, P) and _u_twisted_mult(ctx, U, P)
    nontrivial_live = [ip for ip, t in enumerate(triples) if len(t[0]) > 1 and any(p_eq[ip])]
    cands = []
    for (iu, ip), ok in sorted(mid.items()):
        if not ok:
            continue
        for iv, v in enumerate(V):
            if not (u_eq[iu][iv] and p_eq[ip][iv]):
                continue
            if automorphisms and len(triples[ip][0]) == 1:
                # p trivial: psi is bijective iff sigma and v are
                if len(set(v)) != G.size or len(set(Sig[iu])) != K.size:
                    continue
            for r in R:
                cands.append(Quadruple(Um[iu], tuple(r), Pm[ip], tuple(v), Sig[iu], triples[ip]))
    work = [(ctx, q, automorphisms) for q in cands]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(jobs) as ex:
            mats = list(ex.map(_verify_candidate, work, chunksize=max(1, len(work) // (4 * jobs))))
    else:
        mats = [_verify_candidate(w) for w in work]
    maps, quads = [], []
    seen = set()
    for q, M in zip(cands, mats):
        if M is None or M in seen:
            continue
        seen.add(M)
        maps.append(HopfMap(ctx.DG, ctx.DK, M))
        quads.append(q)
    if nontrivial_live:
        complete = False
        reason = (f"{len(nontrivial_live)} nontrivial p survive p-equivariance; u restricted to "
                  "duals of group homs on that branch")
    else:
        complete = True
        reason = ("every nontrivial p fails p-equivariance, so p is trivial, u is multiplicative "
                  "and hence dual to a group hom; search is exhaustive")
    stats = {"v": len(V), "r": len(R), "sigma": len(Sig), "triples": len(triples),
             "candidates": len(cands), "found": len(maps), "order": ctx.order}
    return EnumerationReport(G, K, maps, quads, complete, reason, stats)


def enumerate_double_auts(G: FiniteGroup, order: int | None = None, jobs: int = 1) -> EnumerationReport:
    return enumerate_double_homs(G, G, order, automorphisms=True, jobs=jobs)


def is_composition_group(maps: Sequence[HopfMap]) -> bool:
    mats = {f.mat for f in maps}
    if not maps or not any(M.is_identity() for M in mats):
        return False
    for f in maps:
        for g in maps:
            if (f.mat @ g.mat) not in mats:
                return False
        if f.mat.inverse() not in mats:
            return False
    return True


def zenthom_doubles(G: FiniteGroup, K: FiniteGroup, order: int | None = None,
                    jobs: int = 1) -> EnumerationReport:
    """psi: D(G) -> D(K) commuting with id_D(K) and cocommuting with id_D(G)."""
    rep = enumerate_double_homs(G, K, order, jobs=jobs)
    DG, DK = rep.maps[0].dom, rep.maps[0].cod
    idG, idK = DG.identity_map(), DK.identity_map()
    keep = [(f, q) for f, q in zip(rep.maps, rep.quadruples)
            if comm_check(f, idK) and cocomm_check(f, idG)]
    stats = dict(rep.stats, homs=len(rep.maps))
    reason = ("components of central-cocentral maps are Hopf maps, so u is dual to a group hom "
              "and the search covers all of them")
    if G.is_abelian:
        # D(G) is spanned by grouplikes: compare with Hom(Gamma_G, Z(Gamma_K))
        stats["group_oracle"] = len(hom_gamma_to_center(G, K))
    return EnumerationReport(G, K, [f for f, _ in keep], [q for _, q in keep], True, reason, stats)


# ---------------------------------------------------------------------------
# Gamma groups and the block formula
# ---------------------------------------------------------------------------

def gamma_group(G: FiniteGroup) -> FiniteGroup:
    """Grouplikes of D(G): G-hat x G."""
    Ghat, _ = character_group(G)
    return direct_product(Ghat, G)


def hom_gamma_to_center(C: FiniteGroup, H: FiniteGroup) -> list[GroupHom]:
    GC, GH = gamma_group(C), gamma_group(H)
    Z, _ = GH.subgroup(GH.center)
    return enumerate_homs(GC, Z)


def dihedral_aut_order(n: int) -> int:
    """|Hopfaut(D(D_2n))| for n = 2 mod 4, n > 2."""
    if n <= 2 or n % 4 != 2:
        raise ValueError(f"formula needs n = 2 mod 4 and n > 2, got {n}")
    return 2 ** 5 * 3 * n * euler_phi(n // 2)


@dataclass
class BlockResult:
    C: FiniteGroup
    H: FiniteGroup
    aut_gamma_C: int
    zenthom_HC: int
    hom_gamma_C_center: int
    aut_double_H: int
    aut_double_H_source: str
    zenthom_complete: bool
    aut_complete: bool
    zenthom_CH: Optional[int] = None

    @property
    def order(self) -> int:
        return self.aut_gamma_C * self.zenthom_HC * self.hom_gamma_C_center * self.aut_double_H

    def breakdown(self) -> dict:
        return {"aut_gamma_C": self.aut_gamma_C, "zenthom_D_H_to_D_C": self.zenthom_HC,
                "hom_gamma_C_to_center_gamma_H": self.hom_gamma_C_center,
                "aut_D_H": self.aut_double_H, "aut_D_H_source": self.aut_double_H_source,
                "zenthom_D_C_to_D_H": self.zenthom_CH,
                "complete": {"zenthom": self.zenthom_complete, "aut_D_H": self.aut_complete},
                "order": self.order}


def block_aut_order(C: FiniteGroup, H: FiniteGroup, oracle_aut_h: int | None = None,
                    cross_check: bool = False, jobs: int = 1) -> BlockResult:
    if not C.is_abelian:
        raise ValueError("C must be abelian")
    if not remak_decompose(H).is_purely_non_abelian:
        raise ValueError("H must be purely non-abelian")
    N = _scalar_order(C, H)
    GC = gamma_group(C)
    aut_gc = len(enumerate_homs(GC, GC, "automorphisms"))
    if H.size == 1:
        return BlockResult(C, H, aut_gc, 1, 1, 1, "trivial", True, True)
    if C.size == 1:
        z, hg = 1, 1
        zc = True
    else:
        zrep = zenthom_doubles(H, C, N, jobs=jobs)
        z, zc = len(zrep), zrep.complete
        hg = len(hom_gamma_to_center(C, H))
    if oracle_aut_h is not None:
        a, src, ac = oracle_aut_h, "oracle", True
    else:
        arep = enumerate_double_auts(H, N, jobs=jobs)
        a, src, ac = len(arep), "enumerated", arep.complete
    res = BlockResult(C, H, aut_gc, z, hg, a, src, zc, ac)
    if cross_check and C.size > 1:
        res.zenthom_CH = len(zenthom_doubles(C, H, N, jobs=jobs))
    return res


def split_abelian_part(G: FiniteGroup) -> tuple[FiniteGroup, FiniteGroup]:
    """G = C x H with C abelian and H purely non-abelian (from the Remak factors)."""
    res = remak_decompose(G)
    C, _ = G.subgroup(res.abelian_part)
    H, _ = G.subgroup(res.purely_non_abelian_part)
    return C, H


# ---------------------------------------------------------------------------
# twisting between D(G) and du(G) (x) kG
# ---------------------------------------------------------------------------

def _swap_legs(n: int, N: int) -> Mat:
    """(g, h) -> (h, g): the self-duality of du(G) (x) kG in basis coordinates."""
    return Mat(N, n * n, n * n, [{(p % n) * n + p // n: one(N)} for p in range(n * n)])


def _support(P: Mat) -> set[int]:
    return {j for j in range(P.cols) if P.col(j)}


def _image_support(P: Mat) -> set[int]:
    return {i for c in P.columns for i in c}


@dataclass
class TwistReport:
    direction: str
    condition: bool
    matrix: bool
    transported: Optional[HopfMap]
    dual_quadruple: Optional[Quadruple] = None

    @property
    def agree(self) -> bool:
        return self.condition == self.matrix

    @property
    def ok(self) -> bool:
        return self.condition and self.matrix


def twistability(ctx: DoubleContext, f: HopfMap, direction: str) -> TwistReport:
    """untwist: f on doubles -> tensor forms; twist: tensor forms -> doubles;
    flip: f on doubles, and its dual quadruple on D(K) -> D(G)."""
    G, K, N = ctx.G, ctx.K, ctx.order
    TG, TK = tensor_form(G, N), (tensor_form(K, N) if K is not G else None)
    TK = TK or TG
    q = map_to_quadruple(ctx, f)
    u_map = HopfMap(ctx.duG, ctx.duK, q.U)
    p_map = HopfMap(ctx.duG, ctx.kK, q.P)
    v_map = HopfMap(ctx.kG, ctx.kK, Mat.from_columns(N, K.size, [{x: 1} for x in q.v]))
    if direction == "untwist":
        cond = comm_check(p_map, v_map) and u_map.is_hopf
        g = HopfMap(TG, TK, f.mat)
        return TwistReport(direction, cond, g.is_hopf, g)
    if direction == "twist":
        # u intertwines conjugation along v on all of K; the composite u^* v
        # being normal is the same test restricted to the image of v
        A = _support(q.P)
        cond = _u_equivariant(ctx, q.U, q.v) and A <= set(G.center)
        g = HopfMap(ctx.DG, ctx.DK, f.mat)
        return TwistReport(direction, cond, g.is_hopf, g)
    if direction == "flip":
        un = twistability(ctx, f, "untwist")
        B = _image_support(q.P)
        back = DoubleContext.make(K, G, N)
        cond = un.condition and B <= set(K.center)
        if cond:
            # the dual quadruple has u' = v^* and v' = sigma where u = sigma^*
            sigma = [next(a for a in range(G.size) if k in q.U.col(a)) for k in range(K.size)]
            cond = _u_equivariant_group(back, q.v, sigma)
        dual = _swap_legs(G.size, N) @ f.mat.T @ _swap_legs(K.size, N)
        g = HopfMap(back.DG, back.DK, dual)
        ok = un.matrix and g.is_hopf
        dq = map_to_quadruple(back, g) if g.is_hopf else None
        return TwistReport(direction, cond, ok, g, dq)
    raise ValueError(f"unknown direction {direction!r}")


def commutative_image_properties(ctx: DoubleContext, f: HopfMap) -> dict:
    """Facts about an untwistable map with commutative image, each as a
    boolean; entries that need G = K are None when G != K."""
    G, K, N = ctx.G, ctx.K, ctx.order
    un = twistability(ctx, f, "untwist")
    if not un.ok:
        raise QuadrupleError("precondition: map must be untwistable")
    if not comm_check(f, f):
        raise QuadrupleError("precondition: image must be commutative")
    fp = un.transported
    rep: dict = {"commutative_image_tensor": comm_check(fp, fp)}
    if G is not K:
        rep.update({"conormal_preserved": None, "tensor_normal_criterion": None,
                    "double_normal_criterion": None, "double_conormal": None})
    else:
        q = map_to_quadruple(ctx, f)
        rep["conormal_preserved"] = normality(f, "conormal") == normality(fp, "conormal")
        v_normal = GroupHom(G, G, tuple(q.v)).is_normal_endo()
        B = _image_support(q.P)
        crit = v_normal and B <= set(G.center)
        rep["tensor_normal_criterion"] = normality(fp, "normal") == crit
        trivial_action = all(q.U.col(a) == {G.conj(g, k): c for k, c in q.U.col(a).items()}
                             for a in range(G.size) for g in range(G.size))
        rep["double_normal_criterion"] = (normality(f, "normal")
                                          == (normality(fp, "normal") and trivial_action))
        rep["double_conormal"] = normality(f, "conormal")
    rep["all"] = all(v for v in rep.values() if v is not None)
    return rep


def _has_abelian_idempotent(H: FinHopf) -> bool:
    from .decomposition import enumerate_hopf_morphisms
    triv = H.trivial_map().mat
    for f in enumerate_hopf_morphisms(H, H):
        M = f.mat
        if M == triv or (M @ M) != M:
            continue
        if comm_check(f, f) and cocomm_check(f, f) and normality(f, "binormal"):
            return True
    return False


def purely_non_abelian_equivalences(G: FiniteGroup) -> dict:
    """Abelian tensor factor existence for kG, du(G), tensor_form(G), D(G) versus
    the group being purely non-abelian."""
    from .decomposition import krs_decompose
    N = G.exponent
    res = remak_decompose(G)
    out = {"group": res.is_purely_non_abelian}
    algs = {"kG": build_group_algebra(G, N), "duG": build_dual_group_algebra(G, N),
            "tensor_form": tensor_form(G, N), "double": drinfeld_double(G, N)}
    exhibited = {}
    for key, H in algs.items():
        TF = krs_decompose(H)
        ab = [lab for F, lab in zip(TF.factors, TF.labels)
              if F.dim > 1 and F.is_commutative() and F.is_cocommutative()]
        out[key] = not ab
        exhibited[key] = ab
    keys = ("group", "kG", "duG", "tensor_form", "double")
    out["agree"] = len({out[k] for k in keys}) == 1
    # independent route for kG and k^G: a proper binormal idempotent with
    # commutative image exists exactly when there is an abelian tensor factor
    out["endo_check"] = {k: not _has_abelian_idempotent(algs[k]) for k in ("kG", "duG")}
    out["agree"] = out["agree"] and all(v == out["group"] for v in out["endo_check"].values())
    out["abelian_factors"] = exhibited
    return out
