"""Finite-dimensional Hopf algebras as structure constants.

Shapes (d = dim):  mult d x d^2 (column i*d+j holds e_i e_j), unit d x 1,
comult d^2 x d, counit 1 x d, antipode d x d.  The braiding is the plain
swap everywhere, so H (x) K is always a Hopf algebra.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from math import lcm
from typing import Optional, Sequence

from .cyclotomic import CycNumber, one, zero
from .groups import FiniteGroup, linear_characters
from .linalg import (EchelonBasis, Mat, Vec, canonical_span, vec_add, vec_axpy,
                     vec_scale, vec_sub)


class HopfError(ValueError):
    pass


class UnsupportedOrigin(HopfError):
    """Operation needs group-origin metadata that this algebra lacks."""


@dataclass(frozen=True)
class Origin:
    """Where a FinHopf came from: group, dualgroup, double, tensor or generic."""
    kind: str
    group: Optional[FiniteGroup] = None
    parts: tuple = ()

    def describe(self) -> str:
        if self.kind == "tensor":
            return "tensor(" + ", ".join(p.describe() for p in self.parts) + ")"
        if self.group is not None:
            return f"{self.kind}({self.group.name or self.group.size})"
        return self.kind

    def to_json(self) -> dict:
        out: dict = {"kind": self.kind}
        if self.group is not None:
            out["group"] = {"size": self.group.size, "table": [list(r) for r in self.group.table],
                            "labels": list(self.group.labels), "name": self.group.name}
        if self.parts:
            out["parts"] = [p.to_json() for p in self.parts]
        return out

    @classmethod
    def from_json(cls, data: dict) -> "Origin":
        G = None
        if data.get("group"):
            g = data["group"]
            G = FiniteGroup(g["table"], g.get("labels"), name=g.get("name"))
        parts = tuple(cls.from_json(p) for p in data.get("parts", ()))
        return cls(data["kind"], G, parts)


GENERIC = Origin("generic")


@dataclass(frozen=True, eq=False)
class FinHopf:
    dim: int
    order: int
    mult: Mat
    unit: Mat
    comult: Mat
    counit: Mat
    antipode: Mat
    origin: Origin = GENERIC
    name: str = ""

    def __post_init__(self):
        d = self.dim
        shapes = {"mult": (d, d * d), "unit": (d, 1), "comult": (d * d, d),
                  "counit": (1, d), "antipode": (d, d)}
        for key, shp in shapes.items():
            m = getattr(self, key)
            if m.shape != shp:
                raise HopfError(f"{key} has shape {m.shape}, expected {shp}")
            if m.order != self.order:
                object.__setattr__(self, key, m.lift(lcm(m.order, self.order)))
        orders = {getattr(self, k).order for k in shapes}
        if len(orders) != 1:
            raise HopfError("structure tensors must share one scalar order")

    # -- fast sparse access ----------------------------------------------------
    @cached_property
    def _L(self) -> tuple:
        return tuple(tuple(c.items()) for c in self.mult.columns)

    @cached_property
    def _D(self) -> tuple:
        return tuple(tuple(c.items()) for c in self.comult.columns)

    @cached_property
    def _eps(self) -> tuple:
        z = zero(self.order)
        return tuple(c.get(0, z) for c in self.counit.columns)

    @cached_property
    def unit_vec(self) -> Vec:
        return dict(self.unit.col(0))

    def basis(self, i: int) -> Vec:
        return {i: one(self.order)}

    def mul_vec(self, x: Vec, y: Vec) -> Vec:
        d, L = self.dim, self._L
        acc: Vec = {}
        for i, a in x.items():
            base = i * d
            for j, b in y.items():
                ab = a * b
                for k, c in L[base + j]:
                    w = ab * c
                    if k in acc:
                        s = acc[k] + w
                        if s:
                            acc[k] = s
                        else:
                            del acc[k]
                    else:
                        acc[k] = w
        return acc

    def comul_vec(self, x: Vec) -> Vec:
        return self.comult.apply(x)

    def antipode_vec(self, x: Vec) -> Vec:
        return self.antipode.apply(x)

    def counit_val(self, x: Vec) -> CycNumber:
        s = zero(self.order)
        for i, a in x.items():
            e = self._eps[i]
            if e:
                s = s + a * e
        return s

    def tensor_mul(self, X: Vec, Y: Vec, other: "FinHopf | None" = None) -> Vec:
        """Product in H (x) K (K = other or H) on vectors indexed h*dK + k."""
        K = other or self
        dK = K.dim
        acc: Vec = {}
        for p, a in X.items():
            h1, k1 = divmod(p, dK)
            for q, b in Y.items():
                h2, k2 = divmod(q, dK)
                hh = self.mul_vec({h1: a}, {h2: b})
                if not hh:
                    continue
                kk = K.mul_vec({k1: one(self.order)}, {k2: one(self.order)})
                for x, u in hh.items():
                    for y, v in kk.items():
                        idx = x * dK + y
                        w = u * v
                        s = acc.get(idx)
                        s = w if s is None else s + w
                        if s:
                            acc[idx] = s
                        else:
                            acc.pop(idx, None)
        return acc

    def lift(self, order: int) -> "FinHopf":
        if order == self.order:
            return self
        return FinHopf(self.dim, order, self.mult.lift(order), self.unit.lift(order),
                       self.comult.lift(order), self.counit.lift(order),
                       self.antipode.lift(order), self.origin, self.name)

    def with_antipode(self, S: Mat) -> "FinHopf":
        return FinHopf(self.dim, self.order, self.mult, self.unit, self.comult,
                       self.counit, S, GENERIC, self.name + "'")

    def same_structure(self, other: "FinHopf") -> bool:
        return (self.dim == other.dim and self.mult == other.mult and self.unit == other.unit
                and self.comult == other.comult and self.counit == other.counit
                and self.antipode == other.antipode)

    def identity_map(self) -> "HopfMap":
        return HopfMap(self, self, Mat.identity(self.dim, self.order))

    def trivial_map(self, cod: "FinHopf | None" = None) -> "HopfMap":
        """eta o epsilon : self -> cod."""
        cod = cod or self
        order = lcm(self.order, cod.order)
        return HopfMap(self, cod, (cod.unit.lift(order) @ self.counit.lift(order)))

    def is_commutative(self) -> bool:
        d, L = self.dim, self._L
        return all(L[i * d + j] == L[j * d + i] for i in range(d) for j in range(i))

    def is_cocommutative(self) -> bool:
        d = self.dim
        for c in self.comult.columns:
            for idx, v in c.items():
                a, b = divmod(idx, d)
                if c.get(b * d + a) != v:
                    return False
        return True

    def __repr__(self):
        return f"FinHopf({self.name or self.origin.describe()}, dim={self.dim}, order={self.order})"

    # -- serialization ---------------------------------------------------------------
    def to_json(self) -> dict:
        return {"dim": self.dim, "order": self.order, "mult": self.mult.to_json(),
                "comult": self.comult.to_json(), "unit": self.unit.to_json(),
                "counit": self.counit.to_json(), "antipode": self.antipode.to_json(),
                "origin": self.origin.to_json(), "name": self.name}

    @classmethod
    def from_json(cls, data: dict) -> "FinHopf":
        mats = {k: Mat.from_json(data[k]) for k in ("mult", "comult", "unit", "counit", "antipode")}
        origin = Origin.from_json(data["origin"]) if data.get("origin") else GENERIC
        return cls(int(data["dim"]), int(data["order"]), mats["mult"], mats["unit"],
                   mats["comult"], mats["counit"], mats["antipode"], origin, data.get("name", ""))


def _check_pair(dom: FinHopf, cod: FinHopf) -> int:
    return lcm(dom.order, cod.order)


class HopfMap:
    """A linear map between FinHopf objects with write-once property flags."""

    def __init__(self, dom: FinHopf, cod: FinHopf, mat: Mat):
        if mat.shape != (cod.dim, dom.dim):
            raise HopfError(f"map shape {mat.shape} does not fit {dom.dim} -> {cod.dim}")
        self.dom, self.cod, self.mat = dom, cod, mat
        self._flags: dict[str, bool] = {}

    def __repr__(self):
        return f"HopfMap({self.dom.dim} -> {self.cod.dim})"

    def __call__(self, x: Vec) -> Vec:
        return self.mat.apply(x)

    def __eq__(self, other):
        return isinstance(other, HopfMap) and self.mat == other.mat

    def __hash__(self):
        return hash(self.mat)

    def __matmul__(self, other: "HopfMap") -> "HopfMap":
        """self o other."""
        if other.cod.dim != self.dom.dim:
            raise HopfError("composition dimension mismatch")
        return HopfMap(other.dom, self.cod, self.mat @ other.mat)

    @property
    def is_endo(self) -> bool:
        return self.dom is self.cod or (self.dom.dim == self.cod.dim and self.dom.same_structure(self.cod))

    def _flag(self, key, fn):
        if key not in self._flags:
            self._flags[key] = fn()
        return self._flags[key]

    @property
    def is_unital(self) -> bool:
        return self._flag("unital", lambda: self.mat.apply(self.dom.unit_vec) == self.cod.unit_vec)

    @property
    def is_counital(self) -> bool:
        return self._flag("counital", lambda: (self.cod.counit @ self.mat) == self.dom.counit)

    @property
    def is_multiplicative(self) -> bool:
        return self._flag("mult", self._check_mult)

    @property
    def is_comultiplicative(self) -> bool:
        return self._flag("comult", self._check_comult)

    @property
    def is_algebra(self) -> bool:
        return self.is_unital and self.is_multiplicative

    @property
    def is_coalgebra(self) -> bool:
        return self.is_counital and self.is_comultiplicative

    @property
    def is_hopf(self) -> bool:
        # antipode compatibility is automatic for bialgebra maps between Hopf algebras
        return self.is_algebra and self.is_coalgebra

    def _check_mult(self) -> bool:
        H, K, f = self.dom, self.cod, self.mat
        d = H.dim
        images = [f.col(i) for i in range(d)]
        L = H.mult.columns
        for i in range(d):
            fi = images[i]
            for j in range(d):
                lhs = f.apply(L[i * d + j])
                rhs = K.mul_vec(fi, images[j]) if fi and images[j] else {}
                if lhs != rhs:
                    return False
        return True

    def _check_comult(self) -> bool:
        H, K, f = self.dom, self.cod, self.mat
        dK = K.dim
        for i in range(H.dim):
            fi = f.col(i)
            lhs = K.comult.apply(fi)
            rhs: Vec = {}
            for idx, c in H.comult.col(i).items():
                a, b = divmod(idx, H.dim)
                fa, fb = f.col(a), f.col(b)
                if not fa or not fb:
                    continue
                for x, u in fa.items():
                    cu = c * u
                    for y, v in fb.items():
                        vec_axpy(rhs, cu * v, {x * dK + y: one(K.order)})
            if lhs != rhs:
                return False
        return True

    def flags(self) -> dict:
        return {"is_unital": self.is_unital, "is_counital": self.is_counital,
                "is_algebra": self.is_algebra, "is_coalgebra": self.is_coalgebra,
                "is_hopf": self.is_hopf}

    def is_bijective(self) -> bool:
        return self._flag("bijective", self.mat.is_bijective)

    def to_json(self) -> dict:
        return self.mat.to_json()


def morphism_check(f: HopfMap) -> dict:
    return f.flags()


def identity(H: FinHopf) -> HopfMap:
    return H.identity_map()


def trivial(H: FinHopf, K: FinHopf | None = None) -> HopfMap:
    return H.trivial_map(K)


# ---------------------------------------------------------------------------
# axioms
# ---------------------------------------------------------------------------

def verify_hopf_axioms(H: FinHopf, stop_early: bool = False) -> dict[str, bool]:
    """Exact check of every Hopf axiom; failures are reported, never raised."""
    d = H.dim
    L = H._L
    rep: dict[str, bool] = {}
    u = one(H.order)

    ok = True
    for i in range(d):
        for j in range(d):
            ij = L[i * d + j]
            for k in range(d):
                left: Vec = {}
                for a, c in ij:
                    vec_axpy(left, c, dict(L[a * d + k]))
                right: Vec = {}
                for b, c in L[j * d + k]:
                    vec_axpy(right, c, dict(L[i * d + b]))
                if left != right:
                    ok = False
                    break
            if not ok:
                break
        if not ok:
            break
    rep["associativity"] = ok

    one_vec = H.unit_vec
    rep["unit"] = all(H.mul_vec(one_vec, {j: u}) == {j: u} == H.mul_vec({j: u}, one_vec)
                      for j in range(d))

    ok = True
    for i in range(d):
        left: Vec = {}
        right: Vec = {}
        for idx, c in H.comult.col(i).items():
            a, b = divmod(idx, d)
            for idx2, c2 in H.comult.col(a).items():
                vec_axpy(left, c * c2, {idx2 * d + b: u})
            for idx2, c2 in H.comult.col(b).items():
                vec_axpy(right, c * c2, {a * d * d + idx2: u})
        if left != right:
            ok = False
            break
    rep["coassociativity"] = ok

    eps = H._eps
    ok = True
    for i in range(d):
        left: Vec = {}
        right: Vec = {}
        for idx, c in H.comult.col(i).items():
            a, b = divmod(idx, d)
            if eps[a]:
                vec_axpy(left, c * eps[a], {b: u})
            if eps[b]:
                vec_axpy(right, c * eps[b], {a: u})
        if not left == right == {i: u}:
            ok = False
            break
    rep["counit"] = ok

    # epsilon and Delta are algebra maps
    rep["counit_multiplicative"] = all(
        H.counit_val(dict(L[i * d + j])) == eps[i] * eps[j] for i in range(d) for j in range(d)
    ) and H.counit_val(one_vec) == 1
    ok = H.comul_vec(one_vec) == _tensor_vec(one_vec, one_vec, d)
    if ok:
        D = [H.comult.col(i) for i in range(d)]
        for i in range(d):
            for j in range(d):
                lhs = H.comult.apply(dict(L[i * d + j]))
                rhs = H.tensor_mul(D[i], D[j]) if D[i] and D[j] else {}
                if lhs != rhs:
                    ok = False
                    break
            if not ok:
                break
    rep["comult_multiplicative"] = ok

    S = H.antipode
    ok = True
    for i in range(d):
        left: Vec = {}
        right: Vec = {}
        for idx, c in H.comult.col(i).items():
            a, b = divmod(idx, d)
            sa, sb = S.col(a), S.col(b)
            if sa:
                vec_axpy(left, c, H.mul_vec(sa, {b: u}))
            if sb:
                vec_axpy(right, c, H.mul_vec({a: u}, sb))
        target = vec_scale(eps[i], one_vec) if eps[i] else {}
        if not left == target == right:
            ok = False
            break
    rep["antipode"] = ok
    rep["all"] = all(rep.values())
    return rep


def _tensor_vec(x: Vec, y: Vec, dy: int) -> Vec:
    return {i * dy + j: a * b for i, a in x.items() for j, b in y.items()}


# ---------------------------------------------------------------------------
# builders
# ---------------------------------------------------------------------------

def build_group_algebra(G: FiniteGroup, order: int | None = None) -> FinHopf:
    """kG: basis = group elements, g grouplike, S(g) = g^-1."""
    N = order or G.exponent
    n, u = G.size, one(N)
    mult = Mat(N, n, n * n, [{G.table[a][b]: u} for a in range(n) for b in range(n)])
    comult = Mat(N, n * n, n, [{g * n + g: u} for g in range(n)])
    unit = Mat(N, n, 1, [{G.identity: u}])
    counit = Mat(N, 1, n, [{0: u} for _ in range(n)])
    S = Mat(N, n, n, [{G.inv[g]: u} for g in range(n)])
    return FinHopf(n, N, mult, unit, comult, counit, S, Origin("group", G), f"k[{G.name or n}]")


def build_dual_group_algebra(G: FiniteGroup, order: int | None = None) -> FinHopf:
    """k^G: basis delta_g, pointwise product, Delta(delta_g) = sum_{xy=g} delta_x (x) delta_y."""
    N = order or G.exponent
    if N % G.exponent:
        raise HopfError(f"scalar order {N} must be divisible by exponent {G.exponent}")
    n, u = G.size, one(N)
    mult = Mat(N, n, n * n, [({a: u} if a == b else {}) for a in range(n) for b in range(n)])
    comult_cols = []
    for g in range(n):
        col = {}
        for x in range(n):
            y = G.table[G.inv[x]][g]
            col[x * n + y] = u
        comult_cols.append(col)
    comult = Mat(N, n * n, n, comult_cols)
    unit = Mat(N, n, 1, [{g: u for g in range(n)}])
    counit = Mat(N, 1, n, [({0: u} if g == G.identity else {}) for g in range(n)])
    S = Mat(N, n, n, [{G.inv[g]: u} for g in range(n)])
    return FinHopf(n, N, mult, unit, comult, counit, S, Origin("dualgroup", G),
                   f"k^[{G.name or n}]")


def _dual_origin(o: Origin) -> Origin:
    if o.kind == "group":
        return Origin("dualgroup", o.group)
    if o.kind == "dualgroup":
        return Origin("group", o.group)
    if o.kind == "tensor":
        return Origin("tensor", None, tuple(_dual_origin(p) for p in o.parts))
    return GENERIC


def dualize(H: FinHopf) -> FinHopf:
    """Dual Hopf algebra in the dual basis: structure maps are transposed."""
    return FinHopf(H.dim, H.order, H.comult.T, H.counit.T, H.mult.T, H.unit.T,
                   H.antipode.T, _dual_origin(H.origin), f"dual({H.name})")


def tensor_hopf(H: FinHopf, K: FinHopf) -> FinHopf:
    """H (x) K with basis index h*dim(K) + k and the swap in the middle."""
    N = lcm(H.order, K.order)
    H, K = H.lift(N), K.lift(N)
    dH, dK = H.dim, K.dim
    d = dH * dK
    mult_cols = []
    LH, LK = H.mult.columns, K.mult.columns
    for p in range(d):
        h1, k1 = divmod(p, dK)
        for q in range(d):
            h2, k2 = divmod(q, dK)
            hh, kk = LH[h1 * dH + h2], LK[k1 * dK + k2]
            mult_cols.append({x * dK + y: a * b for x, a in hh.items() for y, b in kk.items()})
    comult_cols = []
    for p in range(d):
        h, k = divmod(p, dK)
        col: Vec = {}
        for i1, a in H.comult.col(h).items():
            x1, x2 = divmod(i1, dH)
            for i2, b in K.comult.col(k).items():
                y1, y2 = divmod(i2, dK)
                col[(x1 * dK + y1) * d + (x2 * dK + y2)] = a * b
        comult_cols.append(col)
    parts = []
    for o in (H.origin, K.origin):
        parts.extend(o.parts if o.kind == "tensor" else (o,))
    return FinHopf(d, N, Mat(N, d, d * d, mult_cols), H.unit.kron(K.unit),
                   Mat(N, d * d, d, comult_cols), H.counit.kron(K.counit),
                   H.antipode.kron(K.antipode), Origin("tensor", None, tuple(parts)),
                   f"{H.name}(x){K.name}")


def tensor_maps(f: HopfMap, g: HopfMap, dom: FinHopf | None = None,
                cod: FinHopf | None = None) -> HopfMap:
    """f (x) g between tensor algebras (built on demand when not given)."""
    dom = dom or tensor_hopf(f.dom, g.dom)
    cod = cod or tensor_hopf(f.cod, g.cod)
    return HopfMap(dom, cod, f.mat.kron(g.mat))


# ---------------------------------------------------------------------------
# convolution and (co)commutation
# ---------------------------------------------------------------------------

def convolution(f: HopfMap, g: HopfMap) -> HopfMap:
    """f * g = mult_cod o (f (x) g) o comult_dom."""
    if f.mat.shape != g.mat.shape:
        raise HopfError("convolution needs maps with the same domain and codomain")
    H, K = f.dom, f.cod
    dH = H.dim
    cols = []
    for i in range(dH):
        acc: Vec = {}
        for idx, c in H.comult.col(i).items():
            a, b = divmod(idx, dH)
            fa, gb = f.mat.col(a), g.mat.col(b)
            if fa and gb:
                vec_axpy(acc, c, K.mul_vec(fa, gb))
        cols.append(acc)
    return HopfMap(H, K, Mat(lcm(f.mat.order, g.mat.order), K.dim, dH, cols))


def conv_power(f: HopfMap, k: int) -> HopfMap:
    r = f.dom.trivial_map(f.cod)
    for _ in range(k):
        r = convolution(r, f)
    return r


def comm_check(f: HopfMap, g: HopfMap) -> bool:
    """f and g multiplication-commute: f(x) g(y) = g(y) f(x) for all x, y."""
    A = f.cod
    if g.cod.dim != A.dim:
        raise HopfError("comm_check needs a shared codomain")
    fc = [c for c in f.mat.columns if c]
    gc = [c for c in g.mat.columns if c]
    # spans suffice: compare on bases of the images
    fb = canonical_span(fc, A.dim, A.order).columns
    gb = canonical_span(gc, A.dim, A.order).columns
    return all(A.mul_vec(x, y) == A.mul_vec(y, x) for x in fb for y in gb)


def cocomm_check(f: HopfMap, g: HopfMap) -> bool:
    """f(c1) (x) g(c2) = f(c2) (x) g(c1) for every basis c of the shared domain."""
    C = f.dom
    if g.dom.dim != C.dim:
        raise HopfError("cocomm_check needs a shared domain")
    d, dY = C.dim, g.cod.dim
    F, Gm = f.mat, g.mat
    for i in range(d):
        left: Vec = {}
        right: Vec = {}
        for idx, c in C.comult.col(i).items():
            a, b = divmod(idx, d)
            for x, u in F.col(a).items():
                for y, v in Gm.col(b).items():
                    vec_axpy(left, c * u * v, {x * dY + y: one(C.order)})
            for x, u in F.col(b).items():
                for y, v in Gm.col(a).items():
                    vec_axpy(right, c * u * v, {x * dY + y: one(C.order)})
        if left != right:
            return False
    return True


# ---------------------------------------------------------------------------
# adjoint action, coadjoint coaction, normality
# ---------------------------------------------------------------------------

def adjoint_action(H: FinHopf) -> Mat:
    """ad(h (x) x) = h1 x S(h2), as a d x d^2 matrix."""
    d = H.dim
    S = H.antipode
    cols = []
    for h in range(d):
        terms = [(divmod(idx, d), c) for idx, c in H.comult.col(h).items()]
        for x in range(d):
            acc: Vec = {}
            for (a, b), c in terms:
                left = H.mul_vec({a: c}, {x: one(H.order)})
                if left:
                    vec_axpy(acc, one(H.order), H.mul_vec(left, S.col(b)))
            cols.append(acc)
    return Mat(H.order, d, d * d, cols)


def coadjoint_coaction(H: FinHopf) -> Mat:
    """coad(x) = x1 S(x3) (x) x2, as a d^2 x d matrix."""
    d = H.dim
    S = H.antipode
    cols = []
    for x in range(d):
        acc: Vec = {}
        for idx, c in H.comult.col(x).items():
            a, b = divmod(idx, d)  # x1 (x) x_(2)
            for idx2, c2 in H.comult.col(b).items():
                m, r = divmod(idx2, d)  # x2 (x) x3
                prod = H.mul_vec({a: c * c2}, S.col(r))
                for k, v in prod.items():
                    vec_axpy(acc, v, {k * d + m: one(H.order)})
        cols.append(acc)
    return Mat(H.order, d * d, d, cols)


def _ad(H: FinHopf) -> Mat:
    cache = H.__dict__.setdefault("_ad_cache", {})
    if "ad" not in cache:
        cache["ad"] = adjoint_action(H)
    return cache["ad"]


def _coad(H: FinHopf) -> Mat:
    cache = H.__dict__.setdefault("_ad_cache", {})
    if "coad" not in cache:
        cache["coad"] = coadjoint_coaction(H)
    return cache["coad"]


def eq3_check(H: FinHopf) -> bool:
    """ad(h1 (x) x) h2 = h x for all basis h, x."""
    d = H.dim
    ad = _ad(H)
    for h in range(d):
        for x in range(d):
            acc: Vec = {}
            for idx, c in H.comult.col(h).items():
                a, b = divmod(idx, d)
                acc = vec_add(acc, vec_scale(c, H.mul_vec(ad.col(a * d + x), {b: one(H.order)})))
            if acc != H.mul_vec({h: one(H.order)}, {x: one(H.order)}):
                return False
    return True


def is_normal(f: HopfMap) -> bool:
    H = f.dom
    ad = _ad(H)
    d = H.dim
    F = f.mat
    for h in range(d):
        for x in range(d):
            lhs = F.apply(ad.col(h * d + x))
            rhs: Vec = {}
            for y, c in F.col(x).items():
                vec_axpy(rhs, c, ad.col(h * d + y))
            if lhs != rhs:
                return False
    return True


def is_conormal(f: HopfMap) -> bool:
    H = f.dom
    coad = _coad(H)
    d = H.dim
    F = f.mat
    for x in range(d):
        lhs: Vec = {}
        for idx, c in F.col(x).items():
            vec_axpy(lhs, c, coad.col(idx))
        rhs: Vec = {}
        for idx, c in coad.col(x).items():
            a, b = divmod(idx, d)
            for y, v in F.col(b).items():
                vec_axpy(rhs, c * v, {a * d + y: one(H.order)})
        if lhs != rhs:
            return False
    return True


def normality(f: HopfMap, which: str = "binormal") -> bool:
    if f.dom.dim != f.cod.dim or not f.dom.same_structure(f.cod):
        raise HopfError("normality is defined for endomorphisms only")
    if which == "normal":
        return f._flag("normal", lambda: is_normal(f))
    if which == "conormal":
        return f._flag("conormal", lambda: is_conormal(f))
    if which == "binormal":
        return normality(f, "normal") and normality(f, "conormal")
    raise ValueError(f"unknown normality kind {which!r}")


# ---------------------------------------------------------------------------
# coinvariants and invariant quotients
# ---------------------------------------------------------------------------

@dataclass
class SubobjectBasis:
    ambient: FinHopf
    basis: Mat
    kind: str
    closed: Optional[bool] = None

    @property
    def dim(self) -> int:
        return self.basis.cols

    def contains(self, v: Vec) -> bool:
        eb = EchelonBasis(self.basis.order)
        for c in self.basis.columns:
            eb.add(c)
        return eb.contains(v)

    def __eq__(self, other):
        return isinstance(other, SubobjectBasis) and self.basis == other.basis


def is_unital_subalgebra(H: FinHopf, basis: Mat) -> bool:
    eb = EchelonBasis(H.order)
    for c in basis.columns:
        eb.add(c)
    if not eb.contains(H.unit_vec):
        return False
    cols = basis.columns
    return all(eb.contains(H.mul_vec(x, y)) for x in cols for y in cols)


def coinvariants(f: HopfMap, side: str = "left", check_closure: bool = True) -> SubobjectBasis:
    """Left: ker((f (x) id)Delta - eta (x) id).  Right: ker((id (x) f)Delta - id (x) eta)."""
    H, G = f.dom, f.cod
    N = lcm(H.order, G.order)
    I = Mat.identity(H.dim, N)
    if side == "left":
        M = f.mat.kron(I) @ H.comult - G.unit.kron(I)
    elif side == "right":
        M = I.kron(f.mat) @ H.comult - I.kron(G.unit)
    else:
        raise ValueError("side must be 'left' or 'right'")
    basis = M.kernel()
    sub = SubobjectBasis(H, basis, f"coinvariant-{side}")
    if check_closure:
        sub.closed = is_unital_subalgebra(H, basis)
    return sub


@dataclass
class QuotientData:
    ambient: FinHopf
    relations: Mat          # canonical basis of the subspace divided out
    section: Mat            # standard basis vectors on non-pivot coordinates
    projection: Mat         # ambient -> quotient coordinates

    @property
    def dim(self) -> int:
        return self.section.cols


def invariant_quotient(f: HopfMap, side: str = "left") -> QuotientData:
    """Left: coker(mult(f (x) id) - eps (x) id) on K (x) H; right the mirror."""
    K, H = f.dom, f.cod
    N = lcm(H.order, K.order)
    I = Mat.identity(H.dim, N)
    if side == "left":
        M = H.mult @ f.mat.kron(I) - K.counit.kron(I)
    elif side == "right":
        M = H.mult @ I.kron(f.mat) - I.kron(K.counit)
    else:
        raise ValueError("side must be 'left' or 'right'")
    rel = M.image()
    eb = EchelonBasis(N)
    for c in rel.columns:
        eb.add(c)
    free = [j for j in range(H.dim) if j not in eb.pivots]
    pos = {j: k for k, j in enumerate(free)}
    section = Mat(N, H.dim, len(free), [{j: one(N)} for j in free])
    proj_cols = []
    for j in range(H.dim):
        r = eb.reduce({j: one(N)})
        proj_cols.append({pos[k]: v for k, v in r.items()})
    return QuotientData(H, rel, section, Mat(N, len(free), H.dim, proj_cols))


# ---------------------------------------------------------------------------
# grouplikes
# ---------------------------------------------------------------------------

def _grouplikes_of(o: Origin, N: int) -> list[Vec]:
    if o.kind == "group":
        return [{g: one(N)} for g in range(o.group.size)]
    if o.kind == "dualgroup":
        out = []
        for ch in linear_characters(o.group):
            vals = ch.materialize(N)
            out.append({g: v for g, v in enumerate(vals)})
        return out
    if o.kind == "double":
        G = o.group
        n = G.size
        out = []
        for ch in linear_characters(G):
            vals = ch.materialize(N)
            for g in range(n):
                out.append({a * n + g: vals[a] for a in range(n)})
        return out
    if o.kind == "tensor":
        vecs = [{0: one(N)}]
        dim = 1
        for p in o.parts:
            pd = p.group.size ** (2 if p.kind == "double" else 1)
            new = []
            for v in vecs:
                for w in _grouplikes_of(p, N):
                    new.append(_tensor_vec(v, w, pd))
            vecs, dim = new, dim * pd
        return vecs
    raise UnsupportedOrigin(f"no grouplike solver for origin {o.kind!r}")


def is_grouplike(H: FinHopf, x: Vec) -> bool:
    return H.comul_vec(x) == _tensor_vec(x, x, H.dim) and H.counit_val(x) == 1


def grouplikes(H: FinHopf) -> list[Vec]:
    """All grouplikes, read off from the origin data and then verified."""
    out = _grouplikes_of(H.origin, H.order)
    for x in out:
        if not is_grouplike(H, x):
            raise HopfError("origin-derived vector is not grouplike; scalar order too small?")
    return out


def map_from_vectors(dom: FinHopf, cod: FinHopf, images: Sequence[Vec]) -> HopfMap:
    N = lcm(dom.order, cod.order)
    return HopfMap(dom, cod, Mat.from_columns(N, cod.dim, images))


def group_hom_map(H: FinHopf, K: FinHopf, images: Sequence[int]) -> HopfMap:
    """kG -> kK induced by a group hom given by its images."""
    return map_from_vectors(H, K, [{x: 1} for x in images])


def dual_hom_map(H: FinHopf, K: FinHopf, sigma_images: Sequence[int]) -> HopfMap:
    """k^G -> k^K dual to sigma: K -> G, delta_g -> sum_{sigma(k)=g} delta_k."""
    cols = [dict() for _ in range(H.dim)]
    for k, g in enumerate(sigma_images):
        cols[g][k] = 1
    return map_from_vectors(H, K, cols)


def fourier_map(G: FiniteGroup, K: FiniteGroup, theta, order: int) -> Mat:
    """k^G -> kK: delta_g -> [g in A] |B|^-1 sum_b <g, b>^-1 b for a pairing theta of A, B."""
    if order % theta.e:
        raise HopfError(f"pairing exponent {theta.e} does not divide scalar order {order}")
    step = order // theta.e
    nB = len(theta.B)
    scale = CycNumber.rational(order, Fraction(1, nB))
    cols: list[Vec] = [dict() for _ in range(G.size)]
    for i, a in enumerate(theta.A):
        cols[a] = {b: scale * CycNumber.zeta(order, -theta.values[i][j] * step)
                   for j, b in enumerate(theta.B)}
    return Mat(order, K.size, G.size, cols)
