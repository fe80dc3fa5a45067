"""Signed (two-coloured) triangulations: weightings, valuations and vertex colourings.

A face of colour 0 has sign ``+1`` and a face of colour 1 has sign ``-1``.

* weighting: per vertex, the sum of incident face signs mod 3, as -1/0/+1;
* valuation: per diagonal, 0 when both incident faces have the same sign;
* colouring: a proper vertex colouring with letters ``a..d`` propagated
  across quadrilaterals from the valuation, kept up to renaming of colours.

Two signed triangulations that are not identical are flip-equivalent (up to a
global sign swap) exactly when their colourings agree and use four colours.
"""

from __future__ import annotations

from collections import deque
from typing import Dict, List, Optional, Sequence, Tuple

from .colouring import ColouredTriangulation
from .polygon import Diagonal, Triangulation

Weighting = Tuple[int, ...]
Valuation = Tuple[int, ...]
VertexColouring = Tuple[str, ...]

LETTERS = "abcd"


class SignError(ValueError):
    pass


def _require_two(ct: ColouredTriangulation) -> None:
    if any(c not in (0, 1) for c in ct.colours):
        raise SignError("signed triangulations use colours 0 and 1 only")


def sign(colour: int) -> int:
    return 1 if colour == 0 else -1


def colour_of_sign(s: int) -> int:
    return 0 if s > 0 else 1


def _residue(total: int) -> int:
    r = total % 3
    return -1 if r == 2 else r


def weighting(ct: ColouredTriangulation) -> Weighting:
    _require_two(ct)
    totals = [0] * ct.n
    for face, c in zip(ct.faces, ct.colours):
        for v in face:
            totals[v] += sign(c)
    return tuple(_residue(t) for t in totals)


def valuation(ct: ColouredTriangulation) -> Valuation:
    """One bit per diagonal, in sorted diagonal order."""
    _require_two(ct)
    inc = ct.triangulation.incident_faces
    return tuple(0 if ct.colours[inc[d][0]] == ct.colours[inc[d][1]] else 1
                 for d in ct.diagonals)


def signs_from_valuation(t: Triangulation, v: Sequence[int]) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """The two colour words realising ``v``; face 0 is ``+`` in the first one."""
    if len(v) != len(t.diagonals):
        raise SignError(f"valuation has {len(v)} entries, expected {len(t.diagonals)}")
    across: Dict[int, List[Tuple[int, int]]] = {i: [] for i in range(len(t.faces))}
    for d, bit in zip(t.diagonals, v):
        f1, f2 = t.incident_faces[d]
        across[f1].append((f2, bit))
        across[f2].append((f1, bit))
    colours = [-1] * len(t.faces)
    colours[0] = 0
    queue = deque([0])
    while queue:
        f = queue.popleft()
        for g, bit in across[f]:
            if colours[g] < 0:
                colours[g] = colours[f] ^ bit
                queue.append(g)
    s = tuple(colours)
    return s, tuple(1 - c for c in s)


def canonical_colouring(col: Sequence[str]) -> VertexColouring:
    """Rename colours in order of first appearance along vertices ``0, 1, ...``."""
    rename: Dict[str, str] = {}
    for c in col:
        if c not in rename:
            rename[c] = LETTERS[len(rename)]
    return tuple(rename[c] for c in col)


def ear_vertices(t: Triangulation) -> List[int]:
    return [x for x in range(t.n) if t.degree(x) == 2]


def colouring_from_valuation(t: Triangulation, v: Sequence[int],
                             seed: Optional[int] = None) -> VertexColouring:
    """Propagate a vertex colouring from an ear across the dual tree.

    Across a diagonal ``yt`` separating apexes ``x`` and ``z``, ``z`` copies
    the colour of ``x`` when the diagonal is valued 1 and takes the remaining
    fourth colour when it is valued 0.  ``seed`` picks the starting ear vertex
    (default: the lowest-index vertex of degree 2).
    """
    if len(v) != len(t.diagonals):
        raise SignError(f"valuation has {len(v)} entries, expected {len(t.diagonals)}")
    n = t.n
    x = seed if seed is not None else ear_vertices(t)[0]
    if t.degree(x) != 2:
        raise SignError(f"vertex {x} is not an ear tip")
    ear = tuple(sorted((x, (x - 1) % n, (x + 1) % n)))
    col: List[Optional[int]] = [None] * n
    for k, u in enumerate(ear):
        col[u] = k
    value = dict(zip(t.diagonals, v))
    start = t.face_index[ear]
    done = {start}
    queue = deque([start])
    while queue:
        f = queue.popleft()
        face = t.faces[f]
        for a, b in ((face[0], face[1]), (face[0], face[2]), (face[1], face[2])):
            d = (a, b)
            if d not in value:
                continue
            f1, f2 = t.incident_faces[d]
            g = f2 if f1 == f else f1
            if g in done:
                continue
            (apex,) = set(face) - {a, b}
            (z,) = set(t.faces[g]) - {a, b}
            if value[d] == 1:
                new = col[apex]
            else:
                (new,) = {0, 1, 2, 3} - {col[apex], col[a], col[b]}
            assert col[z] is None or col[z] == new, "propagation conflict"
            col[z] = new
            done.add(g)
            queue.append(g)
    return canonical_colouring([LETTERS[c] for c in col])


def quadrilateral_vertices(t: Triangulation, d: Diagonal) -> Tuple[int, ...]:
    f1, f2 = t.incident_faces[d]
    return tuple(sorted(set(t.faces[f1]) | set(t.faces[f2])))


def valuation_from_colouring(t: Triangulation, col: Sequence[str]) -> Valuation:
    """A diagonal is valued 0 iff its quadrilateral shows four distinct colours."""
    out = []
    for d in t.diagonals:
        quad = quadrilateral_vertices(t, d)
        out.append(0 if len({col[u] for u in quad}) == 4 else 1)
    return tuple(out)


def colouring(ct: ColouredTriangulation) -> VertexColouring:
    return colouring_from_valuation(ct.triangulation, valuation(ct))


def is_proper(t: Triangulation, col: Sequence[str]) -> bool:
    return all(col[u] != col[w] for u in range(t.n) for w in t.adjacency[u])


def signs_from_weighting(t: Triangulation, p: Sequence[int]) -> Optional[Tuple[int, ...]]:
    """Recover the unique colour word with weighting ``p``, or ``None``.

    Repeatedly take an ear: its tip lies on one face only, so a nonzero weight
    there fixes that face's sign; a zero weight means no colouring exists.
    The ear's sign is then subtracted from its other two vertices.
    """
    if len(p) != t.n:
        raise SignError(f"weighting has {len(p)} entries, expected {t.n}")
    residue = {x: int(p[x]) % 3 for x in range(t.n)}
    faces_at: Dict[int, set] = {x: set() for x in range(t.n)}
    for i, face in enumerate(t.faces):
        for x in face:
            faces_at[x].add(i)
    remaining = set(range(len(t.faces)))
    colours = [-1] * len(t.faces)
    alive = set(range(t.n))
    while remaining:
        if len(remaining) == 1:
            (f,) = remaining
            vals = {residue[x] for x in t.faces[f]}
            if len(vals) != 1 or 0 in vals:
                return None
            colours[f] = colour_of_sign(1 if vals.pop() == 1 else -1)
            break
        tip = min(x for x in alive if len(faces_at[x]) == 1)
        (f,) = faces_at[tip]
        r = residue[tip]
        if r == 0:
            return None
        s = 1 if r == 1 else -1
        colours[f] = colour_of_sign(s)
        for x in t.faces[f]:
            residue[x] = (residue[x] - s) % 3
            faces_at[x].discard(f)
        remaining.discard(f)
        alive.discard(tip)
    return tuple(colours)


def uses_four_colours(col: Sequence[str]) -> bool:
    return len(set(col)) == 4


def is_alternating(ct: ColouredTriangulation) -> bool:
    return all(bit == 1 for bit in valuation(ct))


def signed_class(ct: ColouredTriangulation) -> ColouredTriangulation:
    """Representative of ``{ct, sign-swapped ct}`` with the smaller colour word."""
    _require_two(ct)
    other = ct.swapped()
    return ct if ct.colours <= other.colours else other


def decide_equivalence(ct1: ColouredTriangulation, ct2: ColouredTriangulation) -> bool:
    """Whether ``ct1`` and ``ct2`` are linked by 2-coloured flips, up to a global sign swap."""
    if ct1.n != ct2.n:
        raise SignError(f"polygons differ: {ct1.n} vs {ct2.n} vertices")
    if signed_class(ct1) == signed_class(ct2):
        return True
    c1, c2 = colouring(ct1), colouring(ct2)
    return c1 == c2 and uses_four_colours(c1)


def boundary_neighbours_agree(col: Sequence[str], x: int) -> bool:
    n = len(col)
    return col[(x - 1) % n] == col[(x + 1) % n]


def same_coloured_neighbour_pairs(t: Triangulation, col: Sequence[str], x: int) -> List[Tuple[int, int]]:
    nb = sorted(t.adjacency[x])
    return [(u, w) for i, u in enumerate(nb) for w in nb[i + 1:] if col[u] == col[w]]
