"""Coloured triangulations and sigma-flips.

Colours are ``0 .. m-1`` and a :class:`ColourScheme` carries the permutation
``sigma`` applied to the two faces of a flipped quadrilateral.  The default
scheme is the single cycle ``i -> i + 1 mod m``.  For two colours, colour 0
stands for the sign ``+1`` and colour 1 for ``-1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Dict, Iterator, List, Sequence, Tuple

from .polygon import (
    Diagonal,
    Face,
    Triangulation,
    TriangulationError,
    catalan,
    flip,
    iter_triangulations,
    quadrilateral_of,
)


class FlipError(ValueError):
    """A coloured flip was requested at an unknown or unflippable diagonal."""


class SequenceError(FlipError):
    """A step of a flip sequence is invalid; ``index`` is its 0-based position."""

    def __init__(self, index: int, reason: str):
        super().__init__(f"step {index}: {reason}")
        self.index = index
        self.reason = reason


@dataclass(frozen=True)
class ColourScheme:
    m: int
    sigma: Tuple[int, ...]

    def __post_init__(self) -> None:
        sigma = tuple(int(s) for s in self.sigma)
        object.__setattr__(self, "sigma", sigma)
        if self.m < 1:
            raise ValueError("need at least one colour")
        if sorted(sigma) != list(range(self.m)):
            raise ValueError(f"sigma {sigma} is not a permutation of 0..{self.m - 1}")

    @classmethod
    def cyclic(cls, m: int) -> "ColourScheme":
        return cls(m, tuple((i + 1) % m for i in range(m)))

    @classmethod
    def parse(cls, spec: str, m: int) -> "ColourScheme":
        """Build a scheme from ``"cyclic"`` or a comma-separated image array."""
        spec = spec.strip()
        if spec == "cyclic":
            return cls.cyclic(m)
        image = tuple(int(tok) for tok in spec.split(","))
        if len(image) != m:
            raise ValueError(f"sigma has {len(image)} entries, expected {m}")
        return cls(m, image)

    def cycles(self) -> List[Tuple[int, ...]]:
        seen = set()
        out = []
        for start in range(self.m):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            j = self.sigma[start]
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = self.sigma[j]
            out.append(tuple(cyc))
        return out

    def is_single_cycle(self) -> bool:
        return is_single_cycle(self.sigma)

    def is_default(self) -> bool:
        return self == ColourScheme.cyclic(self.m)


def is_single_cycle(sigma: Sequence[int]) -> bool:
    if not sigma:
        return False
    j, steps = sigma[0], 1
    while j != 0:
        j = sigma[j]
        steps += 1
    return steps == len(sigma)


@dataclass(frozen=True)
class ColouredTriangulation:
    """A triangulation with one colour per face, aligned with ``triangulation.faces``."""

    triangulation: Triangulation
    colours: Tuple[int, ...]

    def __post_init__(self) -> None:
        colours = tuple(int(c) for c in self.colours)
        object.__setattr__(self, "colours", colours)
        if len(colours) != self.n - 2:
            raise TriangulationError(
                f"expected {self.n - 2} face colours, got {len(colours)}")
        if any(c < 0 for c in colours):
            raise TriangulationError("colours must be non-negative")

    @property
    def n(self) -> int:
        return self.triangulation.n

    @property
    def diagonals(self) -> Tuple[Diagonal, ...]:
        return self.triangulation.diagonals

    @property
    def faces(self) -> Tuple[Face, ...]:
        return self.triangulation.faces

    def colour_of(self, face: Face) -> int:
        return self.colours[self.triangulation.face_index[tuple(sorted(face))]]

    @property
    def key(self) -> str:
        """Canonical string ``"N;a-b,...;colour-word"``."""
        diags = ",".join(f"{a}-{b}" for a, b in self.diagonals)
        return f"{self.n};{diags};{''.join(map(str, self.colours))}"

    def sort_key(self) -> tuple:
        return (self.diagonals, self.colours)

    def swapped(self) -> "ColouredTriangulation":
        """Exchange colours 0 and 1 (two-colour sign reversal)."""
        return ColouredTriangulation(self.triangulation, tuple(1 - c for c in self.colours))

    def to_json(self, m: int = 2) -> dict:
        return {
            "n": self.n,
            "m": m,
            "diagonals": [list(d) for d in self.diagonals],
            "colours": list(self.colours),
        }

    @classmethod
    def from_json(cls, data: dict) -> "ColouredTriangulation":
        t = Triangulation(int(data["n"]), tuple(tuple(d) for d in data["diagonals"]))
        ct = cls(t, tuple(data["colours"]))
        m = int(data.get("m", 2))
        if any(c >= m for c in ct.colours):
            raise TriangulationError(f"colour out of range for m={m}")
        return ct

    @classmethod
    def from_key(cls, key: str) -> "ColouredTriangulation":
        n, diags, word = key.split(";")
        pairs = tuple(tuple(int(x) for x in d.split("-")) for d in diags.split(",") if d)
        return cls(Triangulation(int(n), pairs), tuple(int(ch) for ch in word))


def coloured(t: Triangulation, colours: Sequence[int]) -> ColouredTriangulation:
    return ColouredTriangulation(t, tuple(colours))


def is_flippable(ct: ColouredTriangulation, d: Sequence[int]) -> bool:
    f1, f2 = ct.triangulation.incident_faces[tuple(sorted(d))]
    return ct.colours[f1] == ct.colours[f2]


def flippable_diagonals(ct: ColouredTriangulation) -> List[Diagonal]:
    inc = ct.triangulation.incident_faces
    c = ct.colours
    return [d for d in ct.diagonals if c[inc[d][0]] == c[inc[d][1]]]


def coloured_flip_with_map(
    ct: ColouredTriangulation, d: Sequence[int], scheme: ColourScheme
) -> Tuple[ColouredTriangulation, Diagonal, Tuple[int, ...]]:
    """Coloured flip that also reports face identity.

    Returns the new state, the new diagonal and, for each face of the new
    triangulation, the index of the face it continues in ``ct``.  The two
    created faces map to the two removed ones.
    """
    t = ct.triangulation
    d = tuple(sorted(d))
    if d not in t.incident_faces:
        raise FlipError(f"unknown diagonal {d}")
    f1, f2 = t.incident_faces[d]
    i = ct.colours[f1]
    if ct.colours[f2] != i:
        raise FlipError(f"diagonal {d} is not flippable: incident colours differ")
    t2, new = flip(t, d)
    a, x, b, y = quadrilateral_of(t, d)
    # (a, x, y) continues the old face on x's side, (x, b, y) the one on y's side.
    side_x = f1 if x in t.faces[f1] else f2
    side_y = f2 if side_x == f1 else f1
    src = []
    colours = []
    for f in t2.faces:
        j = t.face_index.get(f)
        if j is None:
            j = side_x if a in f else side_y
            colours.append(scheme.sigma[i])
        else:
            colours.append(ct.colours[j])
        src.append(j)
    return ColouredTriangulation(t2, tuple(colours)), new, tuple(src)


def coloured_flip(
    ct: ColouredTriangulation, d: Sequence[int], scheme: ColourScheme
) -> ColouredTriangulation:
    """Flip ``d`` when its two faces share colour ``i``; both new faces get ``sigma(i)``."""
    return coloured_flip_with_map(ct, d, scheme)[0]


def is_frozen(ct: ColouredTriangulation) -> bool:
    return not flippable_diagonals(ct)


def count_frozen(n: int, m: int) -> int:
    k = n - 2
    return catalan(k) * m * (m - 1) ** (k - 1)


def count_coloured(n: int, m: int) -> int:
    return catalan(n - 2) * m ** (n - 2)


def enumerate_coloured(n: int, m: int) -> Iterator[ColouredTriangulation]:
    """Every coloured triangulation once; colour words lexicographic per triangulation."""
    for t in iter_triangulations(n):
        for word in product(range(m), repeat=n - 2):
            yield ColouredTriangulation(t, word)


@dataclass(frozen=True)
class FlipSequence:
    steps: Tuple[Diagonal, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "steps", tuple(tuple(sorted(d)) for d in self.steps))

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)


def apply_sequence(
    ct: ColouredTriangulation, seq: Sequence[Diagonal] | FlipSequence, scheme: ColourScheme
) -> ColouredTriangulation:
    state = ct
    for k, d in enumerate(seq):
        try:
            state = coloured_flip(state, d, scheme)
        except FlipError as exc:
            raise SequenceError(k, str(exc)) from None
    return state


def trace_sequence(
    ct: ColouredTriangulation, seq: Sequence[Diagonal] | FlipSequence, scheme: ColourScheme
) -> List[ColouredTriangulation]:
    """All intermediate states, starting with ``ct``."""
    states = [ct]
    for k, d in enumerate(seq):
        try:
            states.append(coloured_flip(states[-1], d, scheme))
        except FlipError as exc:
            raise SequenceError(k, str(exc)) from None
    return states


def greedy_sequence(ct: ColouredTriangulation, scheme: ColourScheme,
                    limit: int = 10_000) -> FlipSequence:
    """Flip the first flippable diagonal that leads to an unseen state, until stuck."""
    seen = {ct}
    state = ct
    steps = []
    while len(steps) < limit:
        for d in flippable_diagonals(state):
            nxt = coloured_flip(state, d, scheme)
            if nxt not in seen:
                break
        else:
            break
        steps.append(d)
        seen.add(nxt)
        state = nxt
    return FlipSequence(tuple(steps))


def translate_sequence(
    ct: ColouredTriangulation, seq2: Sequence[Diagonal] | FlipSequence, m_even: int
) -> FlipSequence:
    """Rewrite a 2-coloured flip sequence for the cyclic ``m_even``-colour scheme.

    A flip out of colour 0 stays a single flip; a flip out of colour 1 becomes
    ``m_even - 1`` flips of the same quadrilateral, taking colour ``1`` round
    through ``2 .. m_even - 1`` back to ``0``.
    """
    if m_even < 2 or m_even % 2:
        raise ValueError(f"m must be even and >= 2, got {m_even}")
    two = ColourScheme.cyclic(2)
    state = ct
    out: List[Diagonal] = []
    for k, d in enumerate(seq2):
        d = tuple(sorted(d))
        try:
            nxt, new, _ = coloured_flip_with_map(state, d, two)
        except FlipError as exc:
            raise SequenceError(k, str(exc)) from None
        f1, _ = state.triangulation.incident_faces[d]
        if state.colours[f1] == 0:
            out.append(d)
        else:
            for r in range(m_even - 1):
                out.append(d if r % 2 == 0 else new)
        state = nxt
    return FlipSequence(tuple(out))


def cycle_regions(ct: ColouredTriangulation, scheme: ColourScheme) -> Dict[int, List[Face]]:
    """Group faces by the sigma-cycle containing their colour.

    Keys are the smallest colour of each cycle.
    """
    cycle_id = {}
    for cyc in scheme.cycles():
        for c in cyc:
            cycle_id[c] = min(cyc)
    regions: Dict[int, List[Face]] = {}
    for f, c in zip(ct.faces, ct.colours):
        regions.setdefault(cycle_id[c], []).append(f)
    return regions


def face_cycle_labels(ct: ColouredTriangulation, scheme: ColourScheme) -> Tuple[int, ...]:
    cycle_id = {c: min(cyc) for cyc in scheme.cycles() for c in cyc}
    return tuple(cycle_id[c] for c in ct.colours)
