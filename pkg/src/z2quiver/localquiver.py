"""Local quiver settings for the components (m-1,1)_{i=1..n} with m <= n.

A setting is a pair (partition of {1..n}, k-tuple) with 1 <= k_i <= |A_i|
and sum k_i <= m; it records the decomposition type of a semisimple point,
one simple summand of dimension k_i supported on the block A_i plus the
trivial character with multiplicity m - sum k_i.  Settings are identified
up to permutations of the ground set by their Young label, which is how
degeneration graphs are drawn.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .combinat import (
    SetPartition,
    YoungLabel,
    enumerate_set_partitions,
    full_mask,
    min_element,
    multiset_coeff,
    partitions_of_int,
    subset_str,
)
from .quiver import Quiver, QuiverSetting, support

MAX_ENUM_GROUND = 9


@dataclass(frozen=True)
class LocalSetting:
    """One local quiver setting (A_1..A_l; k_1..k_l) for the level-m
    component over a ground set of size n.  Blocks are bitmasks; the
    constructor sorts them canonically (size desc, k desc, min element asc)."""

    n: int
    m: int
    blocks: tuple[int, ...]
    k: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.m <= self.n:
            raise ValueError(f"need 1 <= m <= n, got m={self.m}, n={self.n}")
        SetPartition(self.n, self.blocks)  # validates disjoint cover
        if len(self.k) != len(self.blocks):
            raise ValueError("one k value per block is required")
        for b, k in zip(self.blocks, self.k):
            if not 1 <= k <= b.bit_count():
                raise ValueError(f"k={k} out of range [1, {b.bit_count()}] for block {subset_str(b)}")
        if sum(self.k) > self.m:
            raise ValueError(f"sum of k = {sum(self.k)} exceeds the level m = {self.m}")
        order = sorted(
            zip(self.blocks, self.k),
            key=lambda bk: (-bk[0].bit_count(), -bk[1], min_element(bk[0])),
        )
        object.__setattr__(self, "blocks", tuple(b for b, _ in order))
        object.__setattr__(self, "k", tuple(k for _, k in order))

    @property
    def l(self) -> int:
        return len(self.blocks)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(b.bit_count() for b in self.blocks)

    @property
    def k_total(self) -> int:
        return sum(self.k)

    def partition(self) -> SetPartition:
        return SetPartition(self.n, self.blocks)

    def young(self) -> YoungLabel:
        rows: list[tuple[int, int]] = []
        k_rows: list[tuple[int, ...]] = []
        for size, group in itertools.groupby(zip(self.sizes, self.k), key=lambda x: x[0]):
            ks = tuple(k for _, k in group)
            rows.append((size, len(ks)))
            k_rows.append(ks)
        return YoungLabel(tuple(rows), tuple(k_rows))

    def id(self) -> str:
        return self.young().label()

    def __str__(self) -> str:
        blocks = "|".join(subset_str(b) for b in self.blocks)
        return f"({blocks}; k={','.join(str(k) for k in self.k)})"


def _representative_blocks(n: int, sizes: tuple[int, ...]) -> tuple[int, ...]:
    # consecutive runs 1..s1, s1+1..s1+s2, ... give the canonical class rep
    blocks = []
    start = 0
    for s in sizes:
        blocks.append(full_mask(start + s) ^ full_mask(start))
        start += s
    return tuple(blocks)


def enumerate_settings(n: int, m: int) -> list[LocalSetting]:
    """Canonical representatives of all settings up to ground-set
    permutation, sorted with the whole-block, maximal-k node first."""
    if not 1 <= m <= n:
        raise ValueError(
            f"(m-1,1)^n admits no simple representations for m > n; got n={n}, m={m}"
        )
    if n > MAX_ENUM_GROUND:
        raise ValueError(f"setting enumeration is capped at n <= {MAX_ENUM_GROUND}")
    out: list[LocalSetting] = []
    for sizes in partitions_of_int(n):
        blocks = _representative_blocks(n, sizes)
        per_class: list[list[tuple[int, ...]]] = []
        for size, group in itertools.groupby(sizes):
            mu = len(list(group))
            per_class.append(
                [ks for ks in itertools.combinations_with_replacement(range(size, 0, -1), mu)]
            )
        for choice in itertools.product(*per_class):
            ks = tuple(k for ks in choice for k in ks)
            if sum(ks) <= m:
                out.append(LocalSetting(n, m, blocks, ks))
    out.sort(key=lambda s: s.young().sort_key())
    return out


def count_settings_for_young(rows: tuple[tuple[int, int], ...]) -> int:
    """Settings carried by one Young diagram at full level: the product of
    multiset coefficients ((length multichoose multiplicity))."""
    prev = None
    for lam, mu in rows:
        if lam < 1 or mu < 1 or (prev is not None and lam >= prev):
            raise ValueError(f"not a valid Young diagram description: {rows}")
        prev = lam
    return math.prod(multiset_coeff(lam, mu) for lam, mu in rows)


def local_quiver(s: LocalSetting) -> QuiverSetting:
    """The quiver at a semisimple point of type s: one dimension-1 vertex
    per block with (k_i-1)(2|A_i|-k_i-1) loops, |A_i|k_j+|A_j|k_i-k_ik_j
    arrows each way between blocks, plus a trivial-character vertex of
    dimension m - sum(k) joined to block i by |A_i|-k_i arrows each way.
    The extra vertex appears only when it has dimension or arrows; it may
    carry dimension 0, in which case support() removes it."""
    sizes = s.sizes
    l = s.l
    v0 = s.m - s.k_total
    spokes = [sz - k for sz, k in zip(sizes, s.k)]
    with_psi0 = v0 > 0 or any(spokes)
    v = l + 1 if with_psi0 else l
    arrows = np.zeros((v, v), dtype=np.int64)
    for i in range(l):
        arrows[i, i] = (s.k[i] - 1) * (2 * sizes[i] - s.k[i] - 1)
        for j in range(i + 1, l):
            cross = sizes[i] * s.k[j] + sizes[j] * s.k[i] - s.k[i] * s.k[j]
            arrows[i, j] = arrows[j, i] = cross
    if with_psi0:
        for i in range(l):
            arrows[i, l] = arrows[l, i] = spokes[i]
    dims = (1,) * l + ((v0,) if with_psi0 else ())
    return QuiverSetting(Quiver(arrows), dims)


def local_euler_matrix(s: LocalSetting) -> np.ndarray:
    """Euler matrix of the setting: -(k^t v + v^t k + k^t k - 2 diag|A_i|)
    bordered by -v and 1 for the trivial-character vertex, the border
    dropped when v = (|A_i| - k_i) vanishes."""
    kvec = np.array(s.k, dtype=np.int64)
    sizes = np.array(s.sizes, dtype=np.int64)
    vvec = sizes - kvec
    core = -(np.outer(kvec, vvec) + np.outer(vvec, kvec) + np.outer(kvec, kvec)) + 2 * np.diag(sizes)
    if not vvec.any():
        return core
    l = s.l
    out = np.zeros((l + 1, l + 1), dtype=np.int64)
    out[:l, :l] = core
    out[:l, l] = -vvec
    out[l, :l] = -vvec
    out[l, l] = 1
    return out


def degenerates(s: LocalSetting, t: LocalSetting) -> bool:
    """Whether t lies in the closure of the s-stratum: t's partition refines
    s's and each block of s has k at least the sum of the k of its parts.
    Reflexive; compares labelled settings, not permutation classes."""
    if (s.n, s.m) != (t.n, t.m):
        raise ValueError("settings must share the same n and m")
    for tb in t.blocks:
        if not any(tb & sb == tb for sb in s.blocks):
            return False
    for sb, sk in zip(s.blocks, s.k):
        if sk < sum(tk for tb, tk in zip(t.blocks, t.k) if tb & sb == tb):
            return False
    return True


def _class_members(t: LocalSetting) -> Iterator[LocalSetting]:
    """Every labelled setting in the permutation class of t."""
    shape = tuple(sorted(t.sizes, reverse=True))
    by_size: dict[int, list[int]] = {}
    for sz, k in zip(t.sizes, t.k):
        by_size.setdefault(sz, []).append(k)
    for part in enumerate_set_partitions(t.n):
        if part.sizes != shape:
            continue
        class_blocks: dict[int, list[int]] = {}
        for b in part.blocks:
            class_blocks.setdefault(b.bit_count(), []).append(b)
        per_class = []
        for sz in sorted(class_blocks, reverse=True):
            per_class.append(sorted(set(itertools.permutations(by_size[sz]))))
        for assignment in itertools.product(*per_class):
            blocks: list[int] = []
            ks: list[int] = []
            for sz, ktuple in zip(sorted(class_blocks, reverse=True), assignment):
                blocks.extend(class_blocks[sz])
                ks.extend(ktuple)
            yield LocalSetting(t.n, t.m, tuple(blocks), tuple(ks))


def degenerates_class(s: LocalSetting, t: LocalSetting) -> bool:
    """Class-level degeneration: some representative of t's class is a
    degeneration of s (equivalently of any representative of s's class)."""
    if (s.n, s.m) != (t.n, t.m):
        raise ValueError("settings must share the same n and m")
    if s.young() == t.young():
        return True
    return any(degenerates(s, tt) for tt in _class_members(t))


def elementary_moves(s: LocalSetting) -> list[LocalSetting]:
    """One-step degenerations, up to ground-set permutation: lower a single
    k_i >= 2 by one, or split one block into two nonempty parts whose k
    values sum to k_i.  Returns canonical representatives of the distinct
    target classes, sorted."""
    targets: dict[YoungLabel, LocalSetting] = {}

    def add(setting: LocalSetting) -> None:
        targets.setdefault(setting.young(), setting)

    for i in range(s.l):
        if s.k[i] >= 2:
            ks = list(s.k)
            ks[i] -= 1
            add(LocalSetting(s.n, s.m, s.blocks, tuple(ks)))
    for i, block in enumerate(s.blocks):
        size = block.bit_count()
        if size < 2:
            continue
        low = 1 << (min_element(block) - 1)
        elems = [1 << e for e in range(s.n) if block >> e & 1]
        # unordered splits: force the lowest element into the first part
        rest = [e for e in elems if e != low]
        for r in range(len(rest) + 1):
            for extra in itertools.combinations(rest, r):
                part_a = low | sum(extra)
                part_b = block ^ part_a
                if not part_b:
                    continue
                for ka in range(1, s.k[i]):
                    kb = s.k[i] - ka
                    if ka <= part_a.bit_count() and 1 <= kb <= part_b.bit_count():
                        blocks = s.blocks[:i] + (part_a, part_b) + s.blocks[i + 1 :]
                        ks = s.k[:i] + (ka, kb) + s.k[i + 1 :]
                        add(LocalSetting(s.n, s.m, blocks, ks))
    return sorted(targets.values(), key=lambda t: t.young().sort_key())


@dataclass(frozen=True)
class DegenerationGraph:
    """Degeneration order on permutation classes of settings: nodes are
    canonical settings, a directed edge per elementary move (coarser to
    finer).  Acyclic; its reflexive-transitive closure is the full
    degeneration order."""

    n: int
    m: int
    nodes: tuple[LocalSetting, ...]
    edges: tuple[tuple[int, int], ...]

    def node_index(self) -> dict[str, int]:
        return {s.id(): i for i, s in enumerate(self.nodes)}


def degeneration_graph(n: int, m: int) -> DegenerationGraph:
    nodes = enumerate_settings(n, m)
    index = {s.young(): i for i, s in enumerate(nodes)}
    edges = []
    for i, s in enumerate(nodes):
        for t in elementary_moves(s):
            edges.append((i, index[t.young()]))
    return DegenerationGraph(n, m, tuple(nodes), tuple(sorted(set(edges))))


def young_diagram_slice(n: int, m: int, sizes: tuple[int, ...]) -> DegenerationGraph:
    """The induced subgraph on the settings of one Young diagram (all
    in-diagram moves are k-lowerings; splits leave the diagram)."""
    shape = tuple(sorted(sizes, reverse=True))
    if sum(shape) != n or any(x < 1 for x in shape):
        raise ValueError(f"{sizes} is not a diagram of {n}")
    nodes = [s for s in enumerate_settings(n, m) if s.sizes == shape]
    index = {s.young(): i for i, s in enumerate(nodes)}
    edges = []
    for i, s in enumerate(nodes):
        for t in elementary_moves(s):
            j = index.get(t.young())
            if j is not None:
                edges.append((i, j))
    return DegenerationGraph(n, m, tuple(nodes), tuple(sorted(set(edges))))


def smooth_point(s: LocalSetting) -> bool:
    """Whether points of this type are smooth in the moduli space: the
    point lies over a simple (one block, k = m), or n = m with the
    partition a single block, or n = m = 2."""
    if s.l == 1 and (s.k[0] == s.m or s.n == s.m):
        return True
    return s.n == s.m == 2


def setting_json_obj(s: LocalSetting) -> dict:
    """Node object for graph export; the quiver is support-reduced so a
    dimension-0 trivial-character vertex is hidden."""
    qs = local_quiver(s)
    reduced = support(qs.quiver, qs.dims)
    young = s.young()
    return {
        "id": s.id(),
        "young": [[lam, mu] for lam, mu in young.rows],
        "k": [int(k) for k in young.ks()],
        "quiver": reduced.quiver.to_json_obj(),
        "dims": [int(d) for d in reduced.dims],
        "smooth": smooth_point(s),
    }


def graph_json_obj(g: DegenerationGraph) -> dict:
    ids = [s.id() for s in g.nodes]
    return {
        "n": g.n,
        "m": g.m,
        "nodes": [setting_json_obj(s) for s in g.nodes],
        "edges": [[ids[i], ids[j]] for i, j in g.edges],
    }
