"""Finite groups given by multiplication tables.

Elements are the integers 0..n-1; ``table[a][b]`` is the index of a*b.
Everything here is field-free combinatorics; characters are stored as
residues mod e and only turned into cyclotomic numbers by the Hopf layer.
"""
from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass, field
from functools import cached_property
from math import factorial, gcd, lcm
from typing import Iterable, Iterator, Optional, Sequence

from .cyclotomic import euler_phi  # re-exported for callers of this module

__all__ = [
    "FiniteGroup", "GroupHom", "Character", "DualityPairing", "GroupError",
    "SizeGuardError", "cyclic", "dihedral", "symmetric", "quaternion",
    "direct_product", "from_table", "parse_group_spec", "enumerate_homs",
    "iter_homs", "linear_characters", "character_group", "remak_decompose",
    "abelian_normal_with_dual_embedding", "euler_phi", "find_isomorphism",
    "identify_group", "all_subgroups", "normal_subgroups", "group_invariants",
]

DEFAULT_HOM_GUARD = 24
REMAK_GUARD = 64
EXHAUSTIVE_ASSOC_LIMIT = 64


class GroupError(ValueError):
    """Invalid group data or an invalid group spec."""


class SizeGuardError(RuntimeError):
    """An enumeration was asked for beyond its configured size guard."""


class FiniteGroup:
    """A finite group as a verified Cayley table."""

    def __init__(self, table: Sequence[Sequence[int]], labels: Sequence[str] | None = None,
                 name: str | None = None, verify: bool = True):
        n = len(table)
        if n == 0:
            raise GroupError("empty group table")
        self.table = tuple(tuple(int(x) for x in row) for row in table)
        self.size = n
        self.labels = tuple(labels) if labels is not None else tuple(str(i) for i in range(n))
        if len(self.labels) != n:
            raise GroupError("label count does not match table size")
        self.name = name
        ident = [e for e in range(n) if all(self.table[e][x] == x and self.table[x][e] == x
                                            for x in range(n))]
        if verify:
            for row in self.table:
                if len(row) != n or sorted(row) != list(range(n)):
                    raise GroupError("table rows must be permutations of 0..n-1")
            for j in range(n):
                if sorted(self.table[i][j] for i in range(n)) != list(range(n)):
                    raise GroupError("table columns must be permutations of 0..n-1")
            if len(ident) != 1:
                raise GroupError("table has no two-sided identity")
        self.identity = ident[0] if ident else 0
        inv = [0] * n
        for a in range(n):
            for b in range(n):
                if self.table[a][b] == self.identity:
                    inv[a] = b
                    break
        self.inv = tuple(inv)
        if verify:
            self._check_assoc()

    def _check_assoc(self):
        t, n = self.table, self.size
        if n <= EXHAUSTIVE_ASSOC_LIMIT:
            triples = itertools.product(range(n), repeat=3)
        else:
            rng = random.Random(n)
            triples = ((rng.randrange(n), rng.randrange(n), rng.randrange(n))
                       for _ in range(20000))
        for a, b, c in triples:
            if t[t[a][b]][c] != t[a][t[b][c]]:
                raise GroupError(f"associativity fails at ({a},{b},{c})")

    # -- basic operations ----------------------------------------------------
    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def prod(self, elems: Iterable[int]) -> int:
        r = self.identity
        for x in elems:
            r = self.table[r][x]
        return r

    def inverse(self, a: int) -> int:
        return self.inv[a]

    def conj(self, g: int, x: int) -> int:
        """g x g^-1."""
        return self.table[self.table[g][x]][self.inv[g]]

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = self.inv[a], -k
        r = self.identity
        for _ in range(k):
            r = self.table[r][a]
        return r

    @cached_property
    def element_orders(self) -> tuple[int, ...]:
        out = []
        for a in range(self.size):
            k, x = 1, a
            while x != self.identity:
                x = self.table[x][a]
                k += 1
            out.append(k)
        return tuple(out)

    def order_of(self, a: int) -> int:
        return self.element_orders[a]

    @cached_property
    def is_abelian(self) -> bool:
        t = self.table
        return all(t[a][b] == t[b][a] for a in range(self.size) for b in range(a))

    @cached_property
    def exponent(self) -> int:
        return lcm(*self.element_orders)

    def elements(self) -> range:
        return range(self.size)

    def __len__(self):
        return self.size

    def __eq__(self, other):
        return isinstance(other, FiniteGroup) and self.table == other.table

    def __hash__(self):
        return hash(self.table)

    def __repr__(self):
        return f"FiniteGroup({self.name or 'table'}, order={self.size})"

    # -- subgroups -----------------------------------------------------------------
    def generated(self, gens: Iterable[int]) -> frozenset[int]:
        gens = list(gens)
        seen = {self.identity}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for x in frontier:
                for s in gens:
                    y = self.table[x][s]
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return frozenset(seen)

    def is_subgroup(self, elems: Iterable[int]) -> bool:
        s = set(elems)
        if self.identity not in s:
            return False
        return all(self.table[a][self.inv[b]] in s for a in s for b in s)

    def is_normal(self, elems: Iterable[int]) -> bool:
        s = frozenset(elems)
        return all(self.conj(g, x) in s for g in range(self.size) for x in s)

    @cached_property
    def center(self) -> frozenset[int]:
        t = self.table
        return frozenset(z for z in range(self.size)
                         if all(t[z][g] == t[g][z] for g in range(self.size)))

    @cached_property
    def commutator_subgroup(self) -> frozenset[int]:
        t, inv = self.table, self.inv
        comms = {t[t[a][b]][t[inv[a]][inv[b]]] for a in range(self.size) for b in range(self.size)}
        return self.generated(comms)

    def centralizer(self, elems: Iterable[int]) -> frozenset[int]:
        s = list(elems)
        t = self.table
        return frozenset(g for g in range(self.size) if all(t[g][x] == t[x][g] for x in s))

    def is_abelian_subset(self, elems: Iterable[int]) -> bool:
        s = list(elems)
        t = self.table
        return all(t[a][b] == t[b][a] for a in s for b in s)

    def generating_set(self) -> tuple[int, ...]:
        """Greedy generating set: highest-order elements first, deterministic."""
        order = sorted(range(self.size), key=lambda a: (-self.element_orders[a], a))
        gens: list[int] = []
        cur = frozenset({self.identity})
        for a in order:
            if len(cur) == self.size:
                break
            if a not in cur:
                gens.append(a)
                cur = self.generated(gens)
        return tuple(gens)

    def subgroup(self, elems: Iterable[int], name: str | None = None) -> tuple["FiniteGroup", tuple[int, ...]]:
        """Subgroup as its own FiniteGroup plus the embedding (new index -> old)."""
        emb = tuple(sorted(elems))
        if self.identity != emb[0]:
            # keep the identity first so the subgroup labels stay readable
            emb = (self.identity,) + tuple(x for x in emb if x != self.identity)
        pos = {x: i for i, x in enumerate(emb)}
        try:
            table = [[pos[self.table[a][b]] for b in emb] for a in emb]
        except KeyError as exc:
            raise GroupError("subset is not closed under multiplication") from exc
        return FiniteGroup(table, [self.labels[x] for x in emb], name=name, verify=False), emb

    def quotient(self, normal: Iterable[int]) -> tuple["FiniteGroup", tuple[int, ...]]:
        """G/N with cosets ordered by smallest element, plus the projection."""
        N = frozenset(normal)
        if not self.is_subgroup(N) or not self.is_normal(N):
            raise GroupError("quotient needs a normal subgroup")
        proj = [-1] * self.size
        reps: list[int] = []
        for g in range(self.size):
            if proj[g] < 0:
                k = len(reps)
                reps.append(g)
                for x in N:
                    proj[self.table[g][x]] = k
        table = [[proj[self.table[a][b]] for b in reps] for a in reps]
        labels = [f"{self.labels[r]}N" for r in reps]
        return FiniteGroup(table, labels, verify=False), tuple(proj)

    @cached_property
    def abelianization(self) -> tuple["FiniteGroup", tuple[int, ...]]:
        return self.quotient(self.commutator_subgroup)


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------

def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise GroupError("cyclic group order must be >= 1")
    table = [[(a + b) % n for b in range(n)] for a in range(n)]
    return FiniteGroup(table, [str(k) for k in range(n)], name=f"cyclic:{n}", verify=False)


def dihedral(order: int) -> FiniteGroup:
    """Dihedral group of the given ORDER 2m; element a*m + i is s^a r^i."""
    if order < 2 or order % 2:
        raise GroupError(f"dihedral order must be even and >= 2, got {order}")
    m = order // 2

    def mul(x, y):
        a, i = divmod(x, m)
        b, j = divmod(y, m)
        # s^a r^i s^b r^j = s^(a+b) r^((-1)^b i + j)
        k = (-i if b else i) + j
        return ((a + b) % 2) * m + k % m

    table = [[mul(x, y) for y in range(order)] for x in range(order)]
    labels = []
    for a in range(2):
        for i in range(m):
            labels.append(("s" if a else "") + (f"r^{i}" if i else ("" if a else "e")))
    return FiniteGroup(table, labels, name=f"dihedral:{order}", verify=False)


def _cycle_label(p: tuple[int, ...]) -> str:
    seen, parts = set(), []
    for s in range(len(p)):
        if s in seen or p[s] == s:
            seen.add(s)
            continue
        cyc, x = [], s
        while x not in seen:
            seen.add(x)
            cyc.append(str(x + 1))
            x = p[x]
        parts.append("(" + "".join(cyc) + ")")
    return "".join(parts) or "e"


def symmetric(n: int) -> FiniteGroup:
    """S_n on {1..n}; (p*q)(x) = p(q(x)); identity first."""
    if not 1 <= n <= 5:
        raise GroupError("symmetric groups are supported for n <= 5")
    perms = sorted(itertools.permutations(range(n)))
    pos = {p: i for i, p in enumerate(perms)}
    table = [[pos[tuple(p[q[x]] for x in range(n))] for q in perms] for p in perms]
    return FiniteGroup(table, [_cycle_label(p) for p in perms], name=f"symmetric:{n}", verify=False)


def quaternion() -> FiniteGroup:
    """Q8 as {+-1, +-i, +-j, +-k}; index 2*u + sign."""
    units = ["1", "i", "j", "k"]
    # unit products: (u, v) -> (sign, w)
    rule = {
        (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
        (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
        (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
        (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0),
    }

    def mul(x, y):
        u, s1 = divmod(x, 2)
        v, s2 = divmod(y, 2)
        sign, w = rule[(u, v)]
        neg = (s1 + s2 + (sign < 0)) % 2
        return 2 * w + neg

    table = [[mul(x, y) for y in range(8)] for x in range(8)]
    labels = [("-" if s else "") + u for u in units for s in range(2)]
    return FiniteGroup(table, labels, name="quaternion:8", verify=False)


def direct_product(*groups: FiniteGroup) -> FiniteGroup:
    """Direct product; element (g1, g2) has index g1*|G2| + g2 (nested for more)."""
    if not groups:
        return cyclic(1)
    G = groups[0]
    for H in groups[1:]:
        n, m = G.size, H.size
        table = [[G.table[a // m][b // m] * m + H.table[a % m][b % m]
                  for b in range(n * m)] for a in range(n * m)]
        labels = [f"({G.labels[a]},{H.labels[b]})" for a in range(n) for b in range(m)]
        G = FiniteGroup(table, labels, verify=False)
    if all(g.name for g in groups) and len(groups) > 1:
        G.name = "product:(" + ",".join(g.name for g in groups) + ")"
    return G


def from_table(table: Sequence[Sequence[int]], labels=None, name=None) -> FiniteGroup:
    return FiniteGroup(table, labels, name=name, verify=True)


def _split_top(s: str) -> list[str]:
    parts, depth, cur = [], 0, []
    for ch in s:
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
            continue
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise GroupError("unbalanced parentheses in group spec")
        cur.append(ch)
    if depth:
        raise GroupError("unbalanced parentheses in group spec")
    parts.append("".join(cur))
    return [p.strip() for p in parts if p.strip()]


def parse_group_spec(spec: str) -> FiniteGroup:
    """Parse "cyclic:n", "dihedral:n" (n = order), "symmetric:n",
    "quaternion:8", "product:(spec,...)" or a JSON Cayley table."""
    spec = spec.strip()
    if spec.startswith("{"):
        try:
            data = json.loads(spec)
            table = data["table"]
        except (ValueError, KeyError, TypeError) as exc:
            raise GroupError(f"bad JSON group table: {exc}") from exc
        if "size" in data and int(data["size"]) != len(table):
            raise GroupError("JSON size disagrees with table")
        return from_table(table, data.get("labels"))
    if spec.startswith("@"):
        with open(spec[1:]) as fh:
            return parse_group_spec(fh.read())
    kind, _, arg = spec.partition(":")
    kind = kind.strip().lower()
    if kind == "product":
        arg = arg.strip()
        if not (arg.startswith("(") and arg.endswith(")")):
            raise GroupError("product spec must look like product:(a,b,...)")
        parts = _split_top(arg[1:-1])
        if not parts:
            raise GroupError("empty product")
        G = direct_product(*(parse_group_spec(p) for p in parts))
        G.name = "product:(" + ",".join(parse_group_spec(p).name or p for p in parts) + ")"
        return G
    try:
        n = int(arg)
    except ValueError as exc:
        raise GroupError(f"bad group spec {spec!r}") from exc
    if kind == "cyclic":
        return cyclic(n)
    if kind == "dihedral":
        return dihedral(n)
    if kind == "symmetric":
        return symmetric(n)
    if kind == "quaternion":
        if n != 8:
            raise GroupError("only quaternion:8 is available")
        return quaternion()
    raise GroupError(f"unknown group kind {kind!r}")


# ---------------------------------------------------------------------------
# homomorphisms
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GroupHom:
    dom: FiniteGroup
    cod: FiniteGroup
    images: tuple[int, ...]

    def __call__(self, g: int) -> int:
        return self.images[g]

    def is_hom(self) -> bool:
        t, u, im = self.dom.table, self.cod.table, self.images
        n = self.dom.size
        return all(im[t[a][b]] == u[im[a]][im[b]] for a in range(n) for b in range(n))

    def compose(self, other: "GroupHom") -> "GroupHom":
        """self after other."""
        return GroupHom(other.dom, self.cod, tuple(self.images[x] for x in other.images))

    def __matmul__(self, other):
        return self.compose(other)

    @property
    def image(self) -> frozenset[int]:
        return frozenset(self.images)

    @property
    def kernel(self) -> frozenset[int]:
        return frozenset(g for g, x in enumerate(self.images) if x == self.cod.identity)

    def is_injective(self) -> bool:
        return len(set(self.images)) == self.dom.size

    def is_bijective(self) -> bool:
        return self.is_injective() and self.dom.size == self.cod.size

    def is_normal_endo(self) -> bool:
        """Commutes with every inner automorphism: f(g x g^-1) = g f(x) g^-1."""
        G = self.dom
        return all(self.images[G.conj(g, x)] == G.conj(g, self.images[x])
                   for g in range(G.size) for x in range(G.size))

    def inverse(self) -> "GroupHom":
        if not self.is_bijective():
            raise GroupError("only bijective homomorphisms are invertible")
        inv = [0] * self.dom.size
        for g, x in enumerate(self.images):
            inv[x] = g
        return GroupHom(self.cod, self.dom, tuple(inv))

    @classmethod
    def identity(cls, G: FiniteGroup) -> "GroupHom":
        return cls(G, G, tuple(range(G.size)))

    @classmethod
    def trivial(cls, G: FiniteGroup, K: FiniteGroup) -> "GroupHom":
        return cls(G, K, (K.identity,) * G.size)

    def __hash__(self):
        return hash(self.images)

    def __eq__(self, other):
        return (isinstance(other, GroupHom) and self.images == other.images
                and self.dom == other.dom and self.cod == other.cod)


def _extend(G: FiniteGroup, K: FiniteGroup, gens, imgs) -> Optional[tuple[int, ...]]:
    """Extend generator images to a hom, or None when inconsistent."""
    f = {G.identity: K.identity}
    frontier = [G.identity]
    while frontier:
        nxt = []
        for x in frontier:
            fx = f[x]
            for s, t in zip(gens, imgs):
                y = G.table[x][s]
                fy = K.table[fx][t]
                if y in f:
                    if f[y] != fy:
                        return None
                else:
                    f[y] = fy
                    nxt.append(y)
        frontier = nxt
    images = tuple(f[g] for g in range(G.size))
    # a word-consistent extension is a hom exactly when it respects the table
    t, u = G.table, K.table
    for a in range(G.size):
        ia = images[a]
        for b in range(G.size):
            if images[t[a][b]] != u[ia][images[b]]:
                return None
    return images


def iter_homs(G: FiniteGroup, K: FiniteGroup, filter: str = "all",
              max_order: int = DEFAULT_HOM_GUARD) -> Iterator[GroupHom]:
    """Generator-image backtracking; yields in lexicographic order of images."""
    if G.size > max_order or K.size > max_order:
        raise SizeGuardError(
            f"hom enumeration guard: |G|={G.size}, |K|={K.size} > {max_order}")
    if filter not in ("all", "injective", "automorphisms"):
        raise ValueError(f"unknown filter {filter!r}")
    if filter == "automorphisms" and G != K:
        raise GroupError("automorphisms need G == K")
    if filter != "all" and G.size > K.size:
        return
    gens = G.generating_set()
    cand = []
    for s in gens:
        o = G.element_orders[s]
        opts = [t for t in range(K.size) if o % K.element_orders[t] == 0]
        if filter != "all":
            opts = [t for t in opts if K.element_orders[t] == o]
        cand.append(opts)
    found = []
    for imgs in itertools.product(*cand):
        images = _extend(G, K, gens, imgs)
        if images is None:
            continue
        h = GroupHom(G, K, images)
        if filter != "all" and not h.is_injective():
            continue
        found.append(h)
    found.sort(key=lambda h: h.images)
    yield from found


def enumerate_homs(G: FiniteGroup, K: FiniteGroup, filter: str = "all",
                   max_order: int = DEFAULT_HOM_GUARD) -> list[GroupHom]:
    return list(iter_homs(G, K, filter, max_order))


def composition_table(auts: Sequence[GroupHom]) -> list[list[int]]:
    """table[i][j] = index of auts[i] o auts[j]."""
    pos = {a.images: k for k, a in enumerate(auts)}
    return [[pos[(a @ b).images] for b in auts] for a in auts]


def find_isomorphism(G: FiniteGroup, H: FiniteGroup,
                     max_order: int = REMAK_GUARD) -> Optional[GroupHom]:
    if G.size != H.size or G.is_abelian != H.is_abelian:
        return None
    if sorted(G.element_orders) != sorted(H.element_orders):
        return None
    gens = G.generating_set()
    cand = [[t for t in range(H.size) if H.element_orders[t] == G.element_orders[s]]
            for s in gens]
    for imgs in itertools.product(*cand):
        images = _extend(G, H, gens, imgs)
        if images is not None and len(set(images)) == G.size:
            return GroupHom(G, H, images)
    return None


def identify_group(G: FiniteGroup) -> str:
    """A spec string for a group isomorphic to G (table fallback)."""
    n = G.size
    cands = []
    if G.is_abelian:
        cands.append(f"cyclic:{n}")
    else:
        if n % 2 == 0 and n >= 6:
            cands.append(f"dihedral:{n}")
        for k in range(3, 6):
            if factorial(k) == n:
                cands.append(f"symmetric:{k}")
        if n == 8:
            cands.append("quaternion:8")
    for c in cands:
        if find_isomorphism(G, parse_group_spec(c)) is not None:
            return c
    if G.is_abelian:
        # product of cyclic groups of prime-power order via Remak
        res = remak_decompose(G)
        if len(res.factors) > 1:
            return "product:(" + ",".join(identify_group(F) for F in res.factor_groups) + ")"
    return json.dumps({"size": n, "table": [list(r) for r in G.table]}, separators=(",", ":"))


# ---------------------------------------------------------------------------
# subgroup lattice
# ---------------------------------------------------------------------------

def all_subgroups(G: FiniteGroup) -> list[frozenset[int]]:
    """Every subgroup, sorted by (size, sorted elements)."""
    if G.size > REMAK_GUARD:
        raise SizeGuardError(f"subgroup enumeration guard: |G|={G.size} > {REMAK_GUARD}")
    cyc = {G.generated([a]) for a in range(G.size)}
    subs = set(cyc)
    frontier = set(cyc)
    while frontier:
        nxt = set()
        for H in frontier:
            for C in cyc:
                if C <= H:
                    continue
                J = G.generated(set(H) | set(C))
                if J not in subs:
                    subs.add(J)
                    nxt.add(J)
        frontier = nxt
    return sorted(subs, key=lambda s: (len(s), sorted(s)))


def normal_subgroups(G: FiniteGroup) -> list[frozenset[int]]:
    return [H for H in all_subgroups(G) if G.is_normal(H)]


def group_invariants(G: FiniteGroup) -> dict:
    ab, proj = G.abelianization
    return {
        "center": G.center,
        "commutator": G.commutator_subgroup,
        "abelianization": ab,
        "abelianization_projection": proj,
        "exponent": G.exponent,
        "is_abelian": G.is_abelian,
    }


# ---------------------------------------------------------------------------
# Remak decomposition
# ---------------------------------------------------------------------------

@dataclass
class RemakResult:
    group: FiniteGroup
    factors: list[frozenset[int]]
    factor_groups: list[FiniteGroup]
    embeddings: list[tuple[int, ...]]
    abelian_part: frozenset[int]
    purely_non_abelian_part: frozenset[int]
    is_purely_non_abelian: bool
    projections: list[tuple[int, ...]] = field(default_factory=list)

    def recompose(self, parts: Sequence[int]) -> int:
        return self.group.prod(parts)


def _normal_subgroups_of(G: FiniteGroup, H: frozenset[int]) -> list[frozenset[int]]:
    sub, emb = G.subgroup(H)
    return [frozenset(emb[x] for x in N) for N in normal_subgroups(sub)]


def _split(G: FiniteGroup, H: frozenset[int], reverse: bool) -> list[frozenset[int]]:
    if len(H) == 1:
        return []
    normals = [N for N in _normal_subgroups_of(G, H) if 1 < len(N) < len(H)]
    if reverse:
        normals = normals[::-1]
    for N in normals:
        need = len(H) // len(N)
        for M in normals:
            if len(M) != need or M & N != {G.identity}:
                continue
            # N, M normal with trivial meet and |N||M| = |H| gives H = N x M
            return _split(G, N, reverse) + _split(G, M, reverse)
    return [H]


def remak_decompose(G: FiniteGroup, reverse: bool = False,
                    max_order: int = REMAK_GUARD) -> RemakResult:
    """Internal direct decomposition into indecomposable factors.

    ``reverse`` flips the order in which candidate normal subgroups are
    tried, which can produce a different (isomorphic) factorization.
    """
    if G.size > max_order:
        raise SizeGuardError(f"Remak guard: |G|={G.size} > {max_order}")
    factors = _split(G, frozenset(range(G.size)), reverse)
    if not factors:
        factors = [frozenset({G.identity})] if G.size == 1 else []
    factors.sort(key=lambda s: (len(s), sorted(s)))
    groups, embs = [], []
    for F in factors:
        sub, emb = G.subgroup(F)
        sub.name = None
        groups.append(sub)
        embs.append(emb)
    ab = [F for F, S in zip(factors, groups) if S.is_abelian and len(F) > 1]
    nab = [F for F, S in zip(factors, groups) if not S.is_abelian]
    C = G.generated(set().union(*ab)) if ab else frozenset({G.identity})
    Hn = G.generated(set().union(*nab)) if nab else frozenset({G.identity})
    res = RemakResult(G, factors, groups, embs, C, Hn, is_purely_non_abelian=not ab)
    res.projections = _component_projections(G, factors)
    return res


def _component_projections(G: FiniteGroup, factors) -> list[tuple[int, ...]]:
    """Verify the product map is a bijection and return g -> component maps."""
    flist = [sorted(F) for F in factors]
    decomp: dict[int, tuple[int, ...]] = {}
    for parts in itertools.product(*flist):
        g = G.prod(parts)
        if g in decomp:
            raise GroupError("factors do not form a direct decomposition")
        decomp[g] = parts
    if len(decomp) != G.size:
        raise GroupError("factors do not generate the group")
    return [tuple(decomp[g][k] for g in range(G.size)) for k in range(len(factors))]


# ---------------------------------------------------------------------------
# characters and duality
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Character:
    """A linear character stored as residues: g -> zeta_e ** values[g]."""
    group: FiniteGroup
    values: tuple[int, ...]
    e: int

    def __call__(self, g: int) -> int:
        return self.values[g]

    def is_trivial(self) -> bool:
        return not any(self.values)

    def materialize(self, order: int):
        """Values as CycNumbers in Q(zeta_order); needs e | order."""
        from .cyclotomic import CycNumber
        if order % self.e:
            raise ValueError(f"character exponent {self.e} does not divide scalar order {order}")
        step = order // self.e
        return [CycNumber.zeta(order, v * step) for v in self.values]

    def __hash__(self):
        return hash((self.values, self.e))

    def __eq__(self, other):
        return isinstance(other, Character) and self.values == other.values and self.e == other.e


def linear_characters(G: FiniteGroup) -> list[Character]:
    """All homs G -> Z/e through the abelianization; trivial character first."""
    ab, proj = G.abelianization
    e = ab.exponent
    target = cyclic(e)
    homs = enumerate_homs(ab, target, max_order=max(REMAK_GUARD, ab.size, e))
    chars = [Character(G, tuple(h.images[proj[g]] for g in range(G.size)), e) for h in homs]
    chars.sort(key=lambda c: c.values)
    return chars


def character_group(G: FiniteGroup) -> tuple[FiniteGroup, list[Character]]:
    """G-hat as a FiniteGroup under pointwise addition, with its characters."""
    chars = linear_characters(G)
    pos = {c.values: i for i, c in enumerate(chars)}
    e = chars[0].e
    table = [[pos[tuple((x + y) % e for x, y in zip(a.values, b.values))] for b in chars]
             for a in chars]
    labels = ["chi" + str(i) for i in range(len(chars))]
    labels[0] = "1"
    return FiniteGroup(table, labels, name=f"dual({G.name})" if G.name else None,
                       verify=False), chars


@dataclass(frozen=True)
class DualityPairing:
    """theta: B -> A-hat given by <a, b> = zeta_e ** values[(a, b)].

    ``A`` and ``B`` are element tuples of the ambient groups G and K.
    """
    G: FiniteGroup
    K: FiniteGroup
    A: tuple[int, ...]
    B: tuple[int, ...]
    e: int
    values: tuple[tuple[int, ...], ...]  # values[i][j] for A[i], B[j]

    def __call__(self, a: int, b: int) -> int:
        return self.values[self.A.index(a)][self.B.index(b)]

    def is_trivial(self) -> bool:
        return len(self.A) == 1

    def check(self) -> bool:
        """Bilinear and nondegenerate in b (so B is iso to A-hat)."""
        G, K, e = self.G, self.K, self.e
        ai = {a: i for i, a in enumerate(self.A)}
        bi = {b: j for j, b in enumerate(self.B)}
        V = self.values
        for a1 in self.A:
            for a2 in self.A:
                a3 = G.mul(a1, a2)
                for b in self.B:
                    j = bi[b]
                    if V[ai[a3]][j] != (V[ai[a1]][j] + V[ai[a2]][j]) % e:
                        return False
        for b1 in self.B:
            for b2 in self.B:
                b3 = K.mul(b1, b2)
                for a in self.A:
                    i = ai[a]
                    if V[i][bi[b3]] != (V[i][bi[b1]] + V[i][bi[b2]]) % e:
                        return False
        cols = {tuple(V[i][j] for i in range(len(self.A))) for j in range(len(self.B))}
        return len(cols) == len(self.B) and len(self.A) == len(self.B)


def abelian_normal_with_dual_embedding(G: FiniteGroup, K: FiniteGroup) -> list[
        tuple[frozenset[int], frozenset[int], DualityPairing]]:
    """All (A, B, theta): A abelian normal in G, B abelian in K, theta: B ~ A-hat."""
    out = []
    K_abelian = [B for B in all_subgroups(K) if K.is_abelian_subset(B)]
    for A in normal_subgroups(G):
        if not G.is_abelian_subset(A):
            continue
        Asub, Aemb = G.subgroup(A)
        Ahat, chars = character_group(Asub)
        e = chars[0].e
        for B in K_abelian:
            if len(B) != len(A):
                continue
            Bsub, Bemb = K.subgroup(B)
            for iso in iter_homs(Bsub, Ahat, "injective", max_order=REMAK_GUARD):
                values = tuple(
                    tuple(chars[iso.images[j]].values[i] for j in range(len(Bemb)))
                    for i in range(len(Aemb)))
                out.append((A, B, DualityPairing(G, K, Aemb, Bemb, e, values)))
    return out
