"""Triangulations of a convex polygon and plain (uncoloured) flips.

Vertices are labelled ``0 .. n-1`` counterclockwise.  A diagonal is a pair
``(a, b)`` with ``a < b`` whose endpoints are not neighbours on the boundary.
A :class:`Triangulation` is stored canonically as its sorted diagonal tuple;
faces are always derived from the diagonals.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import combinations
from math import comb
from typing import Dict, Iterator, List, Sequence, Tuple

Diagonal = Tuple[int, int]
Face = Tuple[int, int, int]


class TriangulationError(ValueError):
    """Raised for malformed triangulations or invalid diagonal arguments."""


def catalan(k: int) -> int:
    """Return the ``k``-th Catalan number, exactly."""
    if k < 0:
        raise ValueError("catalan() needs k >= 0")
    return comb(2 * k, k) // (k + 1)


def is_diagonal(n: int, d: Sequence[int]) -> bool:
    a, b = d
    return 0 <= a < b <= n - 1 and b - a >= 2 and not (a == 0 and b == n - 1)


def crosses(d: Diagonal, e: Diagonal) -> bool:
    """True when two diagonals of a convex polygon cross in the interior.

    Exactly one endpoint of ``e`` must lie strictly between the endpoints of ``d``.
    """
    a, b = d
    c, e2 = e
    return (a < c < b) != (a < e2 < b) and c not in (a, b) and e2 not in (a, b)


@dataclass(frozen=True)
class Triangulation:
    """A triangulation of the convex ``n``-gon given by its diagonals."""

    n: int
    diagonals: Tuple[Diagonal, ...]
    _checked: bool = field(default=True, repr=False, compare=False)

    def __post_init__(self) -> None:
        diags = tuple(sorted(tuple(sorted(map(int, d))) for d in self.diagonals))
        object.__setattr__(self, "diagonals", diags)
        if not self._checked:
            return
        n = self.n
        if n < 3:
            raise TriangulationError(f"polygon needs at least 3 vertices, got {n}")
        if len(diags) != n - 3:
            raise TriangulationError(
                f"a triangulation of a {n}-gon has {n - 3} diagonals, got {len(diags)}")
        if len(set(diags)) != len(diags):
            raise TriangulationError("repeated diagonal")
        for d in diags:
            if not is_diagonal(n, d):
                raise TriangulationError(f"{d} is not a diagonal of the {n}-gon")
        for d, e in combinations(diags, 2):
            if crosses(d, e):
                raise TriangulationError(f"diagonals {d} and {e} cross")

    @cached_property
    def adjacency(self) -> Tuple[frozenset, ...]:
        n = self.n
        nbrs = [{(v - 1) % n, (v + 1) % n} for v in range(n)]
        for a, b in self.diagonals:
            nbrs[a].add(b)
            nbrs[b].add(a)
        return tuple(frozenset(s) for s in nbrs)

    @cached_property
    def faces(self) -> Tuple[Face, ...]:
        # Every 3-clique of a maximal outerplanar graph bounds a face.
        adj = self.adjacency
        out = []
        for a in range(self.n):
            for b in adj[a]:
                if b <= a:
                    continue
                for c in adj[a] & adj[b]:
                    if c > b:
                        out.append((a, b, c))
        out.sort()
        return tuple(out)

    @cached_property
    def face_index(self) -> Dict[Face, int]:
        return {f: i for i, f in enumerate(self.faces)}

    @cached_property
    def incident_faces(self) -> Dict[Diagonal, Tuple[int, int]]:
        """Map each diagonal to the indices of its two incident faces."""
        inc: Dict[Diagonal, List[int]] = {d: [] for d in self.diagonals}
        for i, (a, b, c) in enumerate(self.faces):
            for e in ((a, b), (a, c), (b, c)):
                if e in inc:
                    inc[e].append(i)
        return {d: (v[0], v[1]) for d, v in inc.items()}

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def to_json(self) -> dict:
        return {"n": self.n, "diagonals": [list(d) for d in self.diagonals]}

    @classmethod
    def from_json(cls, data: dict) -> "Triangulation":
        return cls(int(data["n"]), tuple(tuple(d) for d in data["diagonals"]))


@dataclass(frozen=True)
class DualTree:
    """Faces as nodes, joined when they share a diagonal."""

    nodes: Tuple[int, ...]
    edges: Tuple[Tuple[int, int], ...]

    def degrees(self) -> List[int]:
        deg = [0] * len(self.nodes)
        for i, j in self.edges:
            deg[i] += 1
            deg[j] += 1
        return deg

    @property
    def leaves(self) -> List[int]:
        return [v for v, k in enumerate(self.degrees()) if k == 1]


def dual_tree(t: Triangulation) -> DualTree:
    edges = sorted(tuple(sorted(p)) for p in t.incident_faces.values())
    return DualTree(tuple(range(len(t.faces))), tuple(edges))


def _check_member(t: Triangulation, d: Sequence[int]) -> Diagonal:
    d = tuple(sorted(d))
    if d not in t.incident_faces:
        raise TriangulationError(f"unknown diagonal {d}")
    return d


def quadrilateral_of(t: Triangulation, d: Sequence[int]) -> Tuple[int, int, int, int]:
    """Vertices of the quadrilateral around ``d`` in cyclic order.

    ``d`` joins positions 0 and 2 of the returned tuple.
    """
    a, b = _check_member(t, d)
    f1, f2 = t.incident_faces[(a, b)]
    (x,) = set(t.faces[f1]) - {a, b}
    (y,) = set(t.faces[f2]) - {a, b}
    if not a < x < b:
        x, y = y, x
    return (a, x, b, y)


def flip(t: Triangulation, d: Sequence[int]) -> Tuple[Triangulation, Diagonal]:
    """Replace ``d`` by the other diagonal of its quadrilateral."""
    a, x, b, y = quadrilateral_of(t, d)
    new = (min(x, y), max(x, y))
    diags = tuple(e for e in t.diagonals if e != (a, b)) + (new,)
    return Triangulation(t.n, diags, _checked=False), new


def fan(n: int, apex: int = 0) -> Triangulation:
    """All diagonals incident to ``apex``."""
    if n < 3:
        raise TriangulationError(f"polygon needs at least 3 vertices, got {n}")
    if not 0 <= apex < n:
        raise TriangulationError(f"apex {apex} out of range for the {n}-gon")
    diags = []
    for v in range(n):
        if v != apex and (v - apex) % n not in (1, n - 1):
            diags.append((min(apex, v), max(apex, v)))
    return Triangulation(n, tuple(diags))


def _sub_triangulations(verts: Tuple[int, ...]) -> Iterator[Tuple[Diagonal, ...]]:
    # Triangle on the edge (verts[0], verts[-1]), apex ascending; left part
    # varies slowest.
    if len(verts) < 3:
        yield ()
        return
    first, last = verts[0], verts[-1]
    for i in range(1, len(verts) - 1):
        apex = verts[i]
        own = []
        if i > 1:
            own.append((first, apex))
        if i < len(verts) - 2:
            own.append((apex, last))
        for left in _sub_triangulations(verts[: i + 1]):
            for right in _sub_triangulations(verts[i:]):
                yield tuple(own) + left + right


def iter_triangulations(n: int) -> Iterator[Triangulation]:
    if n < 3:
        raise TriangulationError(f"polygon needs at least 3 vertices, got {n}")
    for diags in _sub_triangulations(tuple(range(n))):
        yield Triangulation(n, diags, _checked=False)


def enumerate_triangulations(n: int) -> List[Triangulation]:
    """All ``catalan(n - 2)`` triangulations of the ``n``-gon.

    The order follows the recursion on the triangle standing on edge
    ``(0, n-1)``, apex ascending.
    """
    return list(iter_triangulations(n))


@lru_cache(maxsize=None)
def triangulation_table(n: int) -> "TriangulationTable":
    return TriangulationTable(n)


class TriangulationTable:
    """Sorted triangulations of the ``n``-gon with precomputed flip data.

    ``flips[i]`` lists, for every diagonal ``k`` of triangulation ``i``, a tuple
    ``(f1, f2, j, src)``: the incident faces of the diagonal, the index of the
    flipped triangulation and, per face of the target, the source face index in
    ``i`` (``-1`` for the two freshly created faces).
    """

    def __init__(self, n: int):
        self.n = n
        self.triangulations: List[Triangulation] = sorted(
            iter_triangulations(n), key=lambda t: t.diagonals)
        self.index: Dict[Tuple[Diagonal, ...], int] = {
            t.diagonals: i for i, t in enumerate(self.triangulations)}
        self.flips: List[List[Tuple[int, int, int, Tuple[int, ...]]]] = []
        for t in self.triangulations:
            row = []
            for d in t.diagonals:
                f1, f2 = t.incident_faces[d]
                t2, _ = flip(t, d)
                j = self.index[t2.diagonals]
                t2 = self.triangulations[j]
                src = tuple(t.face_index.get(f, -1) for f in t2.faces)
                row.append((f1, f2, j, src))
            self.flips.append(row)

    def __len__(self) -> int:
        return len(self.triangulations)
