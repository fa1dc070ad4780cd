"""Everything specific to the free product of n copies of the order-2 group.

Level-m representations split into (m+1)**n components indexed by dimension
vectors (a_i+, a_i-) with constant pair sum m, acted on by the signed
permutations of the pairs.  The 2**n one-dimensional characters span a
quiver of their own (the "one quiver") whose Euler matrix has the closed
form 1 - |A delta B|; simplicity, moduli dimensions, and the census of
level-2 components are all decided through it.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

import numpy as np

from .combinat import (
    DimVector,
    check_ground,
    check_subset,
    full_mask,
    parse_subset,
    subset_str,
)
from .quiver import Quiver, UnsupportedInputError, is_simple_dimvector


def build_Qn(n: int) -> Quiver:
    """The 2n-vertex quiver with one arrow from each of the two level-1
    vertices (1+, 1-) to every vertex i+/- with i >= 2; 4(n-1) arrows."""
    check_ground(n)
    if n < 2:
        raise ValueError(f"need n >= 2 vertex pairs, got {n}")
    arrows = np.zeros((2 * n, 2 * n), dtype=np.int64)
    arrows[0, 2:] = 1
    arrows[1, 2:] = 1
    return Quiver(arrows)


def component_count(n: int, m: int) -> int:
    if n < 1 or m < 0:
        raise ValueError("need n >= 1 and m >= 0")
    return (m + 1) ** n


def components(n: int, m: int) -> Iterator[DimVector]:
    """All dimension vectors with pair sum m, one per component."""
    if n < 1 or m < 0:
        raise ValueError("need n >= 1 and m >= 0")
    for plus in itertools.product(range(m + 1), repeat=n):
        yield DimVector(tuple((p, m - p) for p in plus))


def orbit_count(n: int, m: int) -> int:
    """Components up to signed pair permutations: C(m/2+n, n) for even m,
    C((m-1)/2+n, n) for odd m."""
    if n < 1 or m < 0:
        raise ValueError("need n >= 1 and m >= 0")
    if m % 2 == 0:
        return math.comb(m // 2 + n, n)
    return math.comb((m - 1) // 2 + n, n)


def orbit_representatives(n: int, m: int) -> list[DimVector]:
    """Canonical representatives of the component orbits, sorted."""
    return sorted({alpha.canonical() for alpha in components(n, m)})


@lru_cache(maxsize=None)
def build_one_quiver(n: int) -> Quiver:
    """The quiver on the 2**n characters (vertices ordered by bitmask, the
    empty set first): |A delta B| - 1 arrows each way when that is positive,
    no loops."""
    check_ground(n)
    masks = np.arange(1 << n, dtype=np.uint32)
    dist = np.bitwise_count(np.bitwise_xor.outer(masks, masks)).astype(np.int64)
    return Quiver(np.maximum(dist - 1, 0))


def one_quiver_euler_closed(n: int) -> np.ndarray:
    """Euler matrix of the character quiver via the closed form 1 - |A delta B|."""
    check_ground(n)
    masks = np.arange(1 << n, dtype=np.uint32)
    dist = np.bitwise_count(np.bitwise_xor.outer(masks, masks)).astype(np.int64)
    return 1 - dist


def one_quiver_euler_recursive(n: int) -> np.ndarray:
    """Same matrix built by doubling: M_0 = [1] and
    M_j = [[M_{j-1}, M_{j-1}-P], [M_{j-1}-P, M_{j-1}]] with P all ones."""
    check_ground(n)
    m = np.array([[1]], dtype=np.int64)
    for _ in range(n):
        shifted = m - np.ones_like(m)
        m = np.block([[m, shifted], [shifted, m]])
    return m


@dataclass(frozen=True)
class CharacterMultiset:
    """Formal sum of characters with positive multiplicities, the summands
    indexed by subsets of {1..n}."""

    n: int
    counts: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        check_ground(self.n)
        if not self.counts:
            raise ValueError("character multiset must be nonempty")
        seen = set()
        for mask, mult in self.counts:
            check_subset(mask, self.n)
            if mask in seen:
                raise ValueError("duplicate subset in character multiset")
            seen.add(mask)
            if mult < 1:
                raise ValueError("multiplicities must be >= 1")
        object.__setattr__(self, "counts", tuple(sorted(self.counts)))

    @classmethod
    def from_dict(cls, n: int, counts: dict[int, int]) -> "CharacterMultiset":
        return cls(n, tuple((a, c) for a, c in counts.items() if c))

    def degree(self) -> int:
        return sum(c for _, c in self.counts)

    def dim_vector(self) -> DimVector:
        total = self.degree()
        pairs = []
        for i in range(self.n):
            minus = sum(c for a, c in self.counts if a >> i & 1)
            pairs.append((total - minus, minus))
        return DimVector(tuple(pairs))

    def is_chain(self) -> bool:
        masks = [a for a, _ in self.counts]
        return all(
            (a & b) == a or (a & b) == b for a, b in itertools.combinations(masks, 2)
        )

    def canonical(self) -> "CharacterMultiset":
        """Chain normal form: replace any incomparable pair {A, B} by
        {A u B, A n B} until the support is totally ordered by inclusion.
        The result does not depend on the rewrite order."""
        counts = dict(self.counts)
        while True:
            masks = sorted(counts)
            hit = None
            for a, b in itertools.combinations(masks, 2):
                meet = a & b
                if meet != a and meet != b:
                    hit = (a, b)
                    break
            if hit is None:
                break
            a, b = hit
            for x in (a, b):
                counts[x] -= 1
                if not counts[x]:
                    del counts[x]
            for x in (a | b, a & b):
                counts[x] = counts.get(x, 0) + 1
        return CharacterMultiset.from_dict(self.n, counts)

    def __str__(self) -> str:
        terms = []
        for mask, mult in sorted(self.counts, key=lambda mc: (mc[0].bit_count(), mc[0])):
            terms.append(subset_str(mask) + (f"^{mult}" if mult > 1 else ""))
        return "+".join(terms)


def parse_characters(text: str, n: int | None = None) -> CharacterMultiset:
    """Parse '{1}+{2}' or '{}^2+{1,2,3}'; n defaults to the largest element."""
    counts: dict[int, int] = {}
    top = 0
    for term in text.split("+"):
        term = term.strip()
        mult = 1
        if "^" in term:
            term, _, tail = term.partition("^")
            if not tail.strip().isdigit():
                raise ValueError(f"bad multiplicity in {text!r}")
            mult = int(tail)
        mask = parse_subset(term, n)
        top = max(top, mask.bit_length())
        counts[mask] = counts.get(mask, 0) + mult
    if n is None:
        if top == 0:
            raise ValueError("cannot infer the ground-set size; pass n explicitly")
        n = top
    return CharacterMultiset.from_dict(n, counts)


def canonicalize_characters(c: CharacterMultiset) -> CharacterMultiset:
    return c.canonical()


def dimvector_of_characters(c: CharacterMultiset) -> DimVector:
    return c.dim_vector()


def build_M_alpha(alpha: DimVector) -> CharacterMultiset:
    """The canonical semisimple point of a component: with alpha sorted so
    that a_1+ >= ... >= a_n+ >= a_n- >= ... >= a_1-, the sum of the empty
    character a_n+ times, the tail sets {i+1..n} with multiplicity
    a_i+ - a_{i+1}+, and the full set a_1- times."""
    if alpha.m < 1:
        raise ValueError("level must be >= 1")
    if not alpha.is_canonical():
        raise ValueError("alpha must be in canonical order; call canonical() first")
    n = alpha.n
    plus = [p for p, _ in alpha.pairs]
    counts: dict[int, int] = {}
    if plus[-1]:
        counts[0] = plus[-1]
    for i in range(1, n):  # subset {i+1..n} <-> bits i..n-1
        mult = plus[i - 1] - plus[i]
        if mult:
            counts[full_mask(n) ^ full_mask(i)] = mult
    if alpha.pairs[0][1]:
        counts[full_mask(n)] = alpha.pairs[0][1]
    return CharacterMultiset.from_dict(n, counts)


def is_simple_alpha(alpha: DimVector) -> bool:
    """Closed-form simplicity test for a component's dimension vector."""
    verdict, _ = simple_alpha_report(alpha)
    return verdict


def simple_alpha_report(alpha: DimVector) -> tuple[bool, list[str]]:
    """Simplicity verdict plus human-readable reasoning lines."""
    m, n = alpha.m, alpha.n
    if m < 1:
        raise ValueError("the zero dimension vector has no representations")
    lines = [f"alpha = {alpha}  (n={n}, m={m})"]
    if m == 1:
        lines.append("m = 1: alpha is a one-dimensional character")
        return True, lines
    if n <= 2:
        verdict = is_simple_alpha_oracle(alpha)
        lines.append(f"n = {n} <= 2: decided directly on the character quiver")
        return verdict, lines
    smax = sum(max(p) for p in alpha.pairs)
    bound = m * (n - 1)
    if smax > bound:
        lines.append(f"sum_i max(a_i+, a_i-) = {smax} > {bound} = m*(n-1)")
        return False, lines
    lines.append(f"sum_i max(a_i+, a_i-) = {smax} <= {bound} = m*(n-1)")
    if m % 2 == 0:
        k = m // 2
        exception = ((2 * k, 0),) * (n - 2) + ((k, k), (k, k))
        if k != 1 and alpha.canonical().pairs == exception:
            lines.append(f"exception orbit (2k,0)*{n - 2};(k,k);(k,k) with k={k}")
            return False, lines
    return True, lines


def is_simple_alpha_oracle(alpha: DimVector) -> bool:
    """Independent route: test the multiplicity vector of the canonical
    semisimple point on the character quiver."""
    if alpha.m < 1:
        raise ValueError("the zero dimension vector has no representations")
    chars = build_M_alpha(alpha.canonical())
    beta = [0] * (1 << alpha.n)
    for mask, mult in chars.counts:
        beta[mask] = mult
    return is_simple_dimvector(build_one_quiver(alpha.n), beta)


def iss_dim(alpha: DimVector) -> int:
    """Dimension of the moduli of semisimples: 2 * sum a_i+ a_i- - (m^2 - 1).

    Only valid over a simple dimension vector.
    """
    if not is_simple_alpha(alpha):
        raise ValueError(f"{alpha} is not a simple dimension vector")
    m = alpha.m
    return 2 * sum(p * q for p, q in alpha.pairs) - (m * m - 1)


def is_iss_smooth(alpha: DimVector) -> bool:
    """Whether the component's moduli space is smooth: true exactly when at
    most two pairs remain mixed after flipping each pair to (max, min),
    i.e. alpha is a signed permutation of (a,b;c,d;m,0;...;m,0)."""
    mixed = sum(1 for p, q in alpha.pairs if p and q)
    return mixed <= 2


@dataclass(frozen=True)
class Rep2Component:
    """One component of the level-2 representation variety, indexed by the
    subset A of mixed factors and the subset B of minus-one factors."""

    a_mask: int
    b_mask: int
    k: int
    rep_dim: int
    quot_dim: int
    singularities: int
    local_type: str | None


def rep2_census(n: int) -> Iterator[Rep2Component]:
    """All 3**n level-2 components, streamed: A over subsets of {1..n}, B
    over subsets of the complement; 2^{n-k} C(n,k) rows for each k = |A|."""
    if n < 1:
        raise ValueError("need n >= 1")
    for a in range(1 << n):
        k = a.bit_count()
        rep_dim = 2 * k
        quot_dim = 2 * k - 3 if k >= 2 else 0
        sing = 2 ** (k - 1) if k >= 3 else 0
        local = f"1 <={k - 1}=> 1" if k >= 3 else None
        comp = full_mask(n) ^ a
        b = 0
        while True:
            yield Rep2Component(a, b, k, rep_dim, quot_dim, sing, local)
            if b == comp:
                break
            b = (b - comp) & comp


def treelike_census(n: int) -> dict[str, int]:
    """Classify every connected tree-like full subquiver of the character
    quiver, exhaustively over all vertex subsets.

    Types: I a single vertex; II(k) a pair joined by k arrows each way;
    III(k) a 3-chain with multiplicities k and k-1; IV the 4-chain with
    multiplicities 1, 2, 1.  Returns instance counts per type label.
    """
    if not isinstance(n, int) or not 2 <= n <= 4:
        raise UnsupportedInputError(f"exhaustive subset search is only feasible for 2 <= n <= 4, got {n!r}")
    nv = 1 << n
    mult = [[max((i ^ j).bit_count() - 1, 0) for j in range(nv)] for i in range(nv)]
    adj = [sum(1 << j for j in range(nv) if mult[i][j]) for i in range(nv)]

    counts: dict[str, int] = {}
    for smask in range(1, 1 << nv):
        verts = [i for i in range(nv) if smask >> i & 1]
        sz = len(verts)
        edges = []
        ok = True
        for a, b in itertools.combinations(verts, 2):
            if mult[a][b]:
                edges.append((a, b))
                if len(edges) > sz - 1:
                    ok = False
                    break
        if not ok or len(edges) != sz - 1:
            continue
        # connectivity via bitmask flood fill
        reached = 1 << verts[0]
        while True:
            grown = reached
            for i in verts:
                if reached >> i & 1:
                    grown |= adj[i] & smask
            if grown == reached:
                break
            reached = grown
        if reached != smask:
            continue
        label = _classify_treelike(verts, edges, mult)
        counts[label] = counts.get(label, 0) + 1
    return dict(sorted(counts.items(), key=_treelike_sort_key))


def _classify_treelike(verts, edges, mult) -> str:
    if len(verts) == 1:
        return "I"
    if len(verts) == 2:
        return f"II({mult[edges[0][0]][edges[0][1]]})"
    deg = {v: 0 for v in verts}
    for a, b in edges:
        deg[a] += 1
        deg[b] += 1
    if sorted(deg.values()) != [1, 1] + [2] * (len(verts) - 2):
        raise RuntimeError(f"tree-like subquiver on {verts} is not a chain")
    # walk the path from one end and read off the edge multiplicities
    nbr = {v: [] for v in verts}
    for a, b in edges:
        nbr[a].append(b)
        nbr[b].append(a)
    cur = min(v for v in verts if deg[v] == 1)
    prev = None
    mults = []
    while True:
        nxt = [w for w in nbr[cur] if w != prev]
        if not nxt:
            break
        mults.append(mult[cur][nxt[0]])
        prev, cur = cur, nxt[0]
    if len(verts) == 3:
        lo, hi = sorted(mults)
        if hi == lo + 1:
            return f"III({hi})"
    if len(verts) == 4 and mults == [1, 2, 1]:
        return "IV"
    raise RuntimeError(f"unclassifiable tree-like chain {verts} with multiplicities {mults}")


def _treelike_sort_key(item: tuple[str, int]) -> tuple:
    label = item[0]
    order = {"I": 0, "II": 1, "III": 2, "IV": 3}
    kind = label.split("(")[0]
    k = int(label[label.index("(") + 1 : -1]) if "(" in label else 0
    return (order[kind], k)
