"""Quivers as integer arrow-count matrices, Euler forms, and the two
classification tests used everywhere downstream: existence of simple
representations for a dimension vector, and smoothness of a symmetric
quiver setting.

A quiver on v vertices is just a v x v matrix of nonnegative integers,
arrows[i][j] counting arrows i -> j with loops on the diagonal.  All
operations are pure; Quiver instances freeze their matrix.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


class UnsupportedInputError(ValueError):
    """Input is outside the range a classification result covers."""


class Quiver:
    def __init__(self, arrows) -> None:
        a = np.array(arrows, dtype=np.int64)
        if a.size == 0:
            a = a.reshape(0, 0)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError(f"arrow matrix must be square, got shape {a.shape}")
        if a.size and a.min() < 0:
            raise ValueError("arrow counts must be nonnegative")
        a.flags.writeable = False
        self.arrows = a

    @property
    def v(self) -> int:
        return self.arrows.shape[0]

    def symmetric(self) -> bool:
        return bool(np.array_equal(self.arrows, self.arrows.T))

    def has_loops(self) -> bool:
        return self.v > 0 and bool(self.arrows.diagonal().any())

    def arrow_count(self) -> int:
        return int(self.arrows.sum())

    def euler_matrix(self) -> np.ndarray:
        """Matrix of the Euler form: identity minus the arrow matrix."""
        return np.eye(self.v, dtype=np.int64) - self.arrows

    def to_json_obj(self) -> dict:
        return {"v": self.v, "arrows": [[int(x) for x in row] for row in self.arrows]}

    @classmethod
    def from_json_obj(cls, obj: dict) -> "Quiver":
        q = cls(obj["arrows"])
        if q.v != obj.get("v", q.v):
            raise ValueError("vertex count does not match the arrow matrix")
        return q

    def __eq__(self, other) -> bool:
        return isinstance(other, Quiver) and np.array_equal(self.arrows, other.arrows)

    def __hash__(self) -> int:
        return hash((self.v, self.arrows.tobytes()))

    def __repr__(self) -> str:
        return f"Quiver({self.arrows.tolist()})"


@dataclass(frozen=True)
class QuiverSetting:
    """A quiver together with one dimension per vertex."""

    quiver: Quiver
    dims: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.dims) != self.quiver.v:
            raise ValueError("dims length must equal the vertex count")
        if any(not isinstance(d, int) or d < 0 for d in self.dims):
            raise ValueError("dims must be nonnegative integers")


def _check_dims(q: Quiver, dims) -> tuple[int, ...]:
    d = tuple(int(x) for x in dims)
    if len(d) != q.v:
        raise ValueError(f"expected {q.v} vertex dimensions, got {len(d)}")
    if any(x < 0 for x in d):
        raise ValueError("vertex dimensions must be nonnegative")
    return d


def euler_form(q: Quiver, alpha, beta) -> int:
    """Bilinear Euler form alpha^T (I - arrows) beta."""
    a = _check_dims(q, alpha)
    b = _check_dims(q, beta)
    return int(np.asarray(a, dtype=np.int64) @ q.euler_matrix() @ np.asarray(b, dtype=np.int64))


def support(q: Quiver, dims) -> QuiverSetting:
    """Full subquiver on the vertices with nonzero dimension."""
    d = _check_dims(q, dims)
    keep = [i for i, x in enumerate(d) if x]
    sub = q.arrows[np.ix_(keep, keep)]
    return QuiverSetting(Quiver(sub), tuple(d[i] for i in keep))


def is_strongly_connected(q: Quiver) -> bool:
    """Every ordered vertex pair joined by a directed path; one vertex: True."""
    v = q.v
    if v <= 1:
        return True

    def covers(mat: np.ndarray) -> bool:
        seen = {0}
        stack = [0]
        while stack:
            i = stack.pop()
            for j in np.nonzero(mat[i])[0]:
                j = int(j)
                if j not in seen:
                    seen.add(j)
                    stack.append(j)
        return len(seen) == v

    return covers(q.arrows) and covers(q.arrows.T)


def _is_oriented_cycle(q: Quiver) -> bool:
    """One directed cycle through all vertices, every vertex with exactly one
    arrow in and one out (a single loop counts as the one-vertex cycle)."""
    v = q.v
    if v == 0:
        return False
    a = q.arrows
    if not (a.sum(axis=1) == 1).all() or not (a.sum(axis=0) == 1).all():
        return False
    cur, steps = 0, 0
    while True:
        cur = int(a[cur].argmax())
        steps += 1
        if cur == 0:
            break
        if steps > v:
            return False
    return steps == v


def is_simple_dimvector(q: Quiver, dims) -> bool:
    """Whether the dimension vector admits a simple representation.

    After restriction to the support: a loop-free single vertex is simple
    exactly in dimension 1 (the vertex simple; the Euler inequality below
    would wrongly reject it); a single vertex with one loop likewise only
    in dimension 1, being the one-vertex oriented cycle; an oriented cycle
    needs all dimensions 1; otherwise the support must be strongly
    connected with euler_form(dims, e_i) <= 0 and euler_form(e_i, dims) <= 0
    at every support vertex.
    """
    d = _check_dims(q, dims)
    if not any(d):
        raise ValueError("the zero dimension vector is not allowed")
    sub = support(q, d)
    sq, sd = sub.quiver, sub.dims
    if sq.v == 1:
        loops = int(sq.arrows[0, 0])
        if loops >= 2:
            return True
        return sd[0] == 1
    if _is_oriented_cycle(sq):
        return all(x == 1 for x in sd)
    if not is_strongly_connected(sq):
        return False
    M = sq.euler_matrix()
    b = np.asarray(sd, dtype=np.int64)
    return bool((b @ M <= 0).all() and (M @ b <= 0).all())


def is_smooth_setting(q: Quiver, dims) -> bool:
    """Whether the moduli of semisimples of a symmetric setting is smooth.

    Restricts to the support and checks each connected component against
    the local building-block rules: the component must be tree-like, every
    branching vertex (degree >= 3) has dimension 1, an edge of multiplicity
    k >= 2 needs one endpoint of dimension 1 and the other of dimension
    >= k, a degree-2 vertex of dimension 2 needs both incident edges
    simple, and a degree-2 vertex of dimension >= 3 additionally needs a
    dimension-1 neighbour on some side.  Loops are outside the scope of
    the underlying classification and are rejected.
    """
    d = _check_dims(q, dims)
    if not q.symmetric():
        raise ValueError("smoothness test needs a symmetric quiver")
    sub = support(q, d)
    sq, sd = sub.quiver, sub.dims
    if sq.has_loops():
        raise UnsupportedInputError("smoothness classification does not cover loops")

    v = sq.v
    a = sq.arrows
    neighbours = [sorted(int(j) for j in np.nonzero(a[i])[0]) for i in range(v)]

    seen: set[int] = set()
    for start in range(v):
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        while stack:
            i = stack.pop()
            for j in neighbours[i]:
                if j not in comp:
                    comp.add(j)
                    stack.append(j)
        seen |= comp
        edges = [(i, j) for i in comp for j in neighbours[i] if i < j]
        if len(edges) != len(comp) - 1:
            return False  # connected with an extra edge: a cycle
        for i in comp:
            deg = len(neighbours[i])
            if deg >= 3 and sd[i] != 1:
                return False
            if deg == 2 and sd[i] >= 2:
                if any(a[i, j] != 1 for j in neighbours[i]):
                    return False
                if sd[i] >= 3 and all(sd[j] != 1 for j in neighbours[i]):
                    return False
        for i, j in edges:
            k = int(a[i, j])
            if k >= 2:
                lo, hi = sorted((sd[i], sd[j]))
                if lo != 1 or hi < k:
                    return False
    return True
