"""Invariant suite run by ``colourflip verify`` and reused by the tests.

Each check returns a :class:`Check` with printable expected/actual values.
Checks flagged ``advisory`` are reported but never fail a run.
"""

from __future__ import annotations

import random
from collections import defaultdict
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .colouring import (
    ColourScheme,
    ColouredTriangulation,
    count_coloured,
    count_frozen,
    flippable_diagonals,
)
from .flipgraph import (
    Component,
    build_flip_graph,
    check_conjecture,
    component_of,
    fan_hypercube_dims,
    graph_components,
    is_bipartite,
)
from .polygon import fan
from .signed import colouring, uses_four_colours, weighting

# Two-colour census (component size -> number of components) for 4..9 vertices.
REFERENCE_CENSUS: Dict[int, Dict[int, int]] = {
    4: {1: 4, 2: 2},
    5: {1: 10, 3: 10},
    6: {1: 28, 4: 16, 5: 12, 6: 12},
    7: {1: 84, 5: 14, 6: 28, 9: 42, 10: 14, 12: 42},
    8: {1: 264, 6: 16, 7: 16, 8: 16, 10: 16, 12: 64, 13: 8, 14: 8, 15: 16, 16: 32,
        18: 32, 19: 64, 20: 40, 21: 16, 22: 32, 23: 32, 26: 16, 28: 8, 29: 16,
        32: 2, 34: 8, 36: 4},
    9: {1: 858, 7: 18, 9: 36, 13: 36, 15: 54, 17: 36, 18: 36, 21: 18, 23: 72,
        27: 126, 28: 72, 29: 6, 31: 54, 32: 36, 33: 18, 34: 72, 35: 18, 36: 108,
        37: 36, 38: 72, 41: 36, 42: 36, 44: 36, 45: 108, 46: 36, 53: 54, 55: 36,
        57: 18, 59: 54, 61: 36, 66: 36, 70: 36, 71: 18, 79: 6},
}


@dataclass
class Check:
    name: str
    expected: str
    actual: str
    ok: bool
    advisory: bool = False

    def line(self) -> str:
        status = "PASS" if self.ok else ("REPORT" if self.advisory else "FAIL")
        return f"{self.name} expected {self.expected} actual {self.actual} {status}"


def fan_path_start(n: int) -> ColouredTriangulation:
    """Fan at vertex 0 coloured ``0, 0, 1, 0, 1, ...`` along its faces."""
    k = n - 2
    colours = [0, 0] + [(j + 1) % 2 for j in range(k - 2)]
    return ColouredTriangulation(fan(n, 0), tuple(colours[:k]))


def class_components(components: Sequence[Component]) -> List[frozenset]:
    """Merge each component with its sign-swapped image."""
    where = {}
    for i, comp in enumerate(components):
        for ct in comp.members:
            where[ct] = i
    merged = []
    done = set()
    for i, comp in enumerate(components):
        if i in done:
            continue
        j = where[comp.members[0].swapped()]
        done.update((i, j))
        merged.append(frozenset(comp.members) | frozenset(components[j].members))
    return merged


def equivalence_oracle(components: Sequence[Component]) -> Tuple[bool, str]:
    """Compare class-level components with fibres of the colouring map.

    Only non-frozen nodes take part.  Returns ``(agrees, summary)``.
    """
    live = [c for c in components if c.size > 1]
    classes = class_components(live)
    fibres: Dict[tuple, set] = defaultdict(set)
    for comp in live:
        for ct in comp.members:
            col = colouring(ct)
            fibres[col].add(ct)
    if not all(uses_four_colours(c) for c in fibres):
        return False, "a non-frozen node has fewer than 4 colours"
    class_sets = {frozenset(c) for c in classes}
    fibre_sets = {frozenset(s) for s in fibres.values()}
    ok = class_sets == fibre_sets
    return ok, f"{len(class_sets)} classes / {len(fibre_sets)} fibres"


def run_checks(n: int, budget: Optional[int] = None, workers: int = 1,
               weighting_sample: Optional[int] = None, seed: int = 0) -> List[Check]:
    """Run the invariant suite for the two-colour flip graph of the ``n``-gon."""
    scheme = ColourScheme.cyclic(2)
    graph = build_flip_graph(n, scheme, budget, workers)
    comps = graph_components(graph)
    hist: Dict[int, int] = defaultdict(int)
    for c in comps:
        hist[c.size] += 1
    hist = dict(sorted(hist.items()))
    out: List[Check] = []

    total = count_coloured(n, 2)
    out.append(Check("node_count", str(total), str(len(graph)), len(graph) == total))
    frozen = count_frozen(n, 2)
    out.append(Check("isolated_count", str(frozen), str(hist.get(1, 0)),
                     hist.get(1, 0) == frozen))
    covered = sum(s * c for s, c in hist.items())
    out.append(Check("census_covers_nodes", str(total), str(covered), covered == total))
    if n in REFERENCE_CENSUS:
        ref = REFERENCE_CENSUS[n]
        out.append(Check("census_matches_reference", f"{len(ref)} rows",
                         f"{len(hist)} rows", hist == ref))

    deg0 = all((len(graph.adjacency[i]) == 0) == (not flippable_diagonals(graph.node(i)))
               for i in range(len(graph)))
    out.append(Check("frozen_iff_degree_zero", "True", str(deg0), deg0))

    nontrivial = [s for s in hist if s > 1]
    if nontrivial:
        low = min(nontrivial)
        out.append(Check("min_nontrivial_size", f"≥{n - 2}", str(low), low >= n - 2))

    bip = all(is_bipartite(c)[0] for c in comps)
    out.append(Check("bipartite_parity_witness", "True", str(bip), bip))

    sample = comps
    if weighting_sample is not None and weighting_sample < len(comps):
        sample = random.Random(seed).sample(comps, weighting_sample)
    same = all(len({weighting(ct) for ct in c.members}) == 1 for c in sample)
    out.append(Check("weighting_constant_on_components", "True", str(same), same))

    if n <= 8:
        ok, summary = equivalence_oracle(comps)
        out.append(Check("colouring_fibres_equal_classes", "equal", summary, ok))

    if n >= 5:
        start = fan_path_start(n)
        comp = component_of(start, scheme, budget)
        is_path = comp.size == n - 2 and comp.shape_class == "path"
        out.append(Check("fan_path_component", f"path of {n - 2}",
                         f"{comp.shape_class} of {comp.size}", is_path))
        cubes = fan_hypercube_dims(n)
        dims = sorted((w.dimension for w in cubes), reverse=True)
        k = n - 2
        want = [k // 2, k // 2 - 1] if k % 2 == 0 else [(k - 1) // 2] * 2
        distinct = cubes[0].keys() != cubes[1].keys()
        out.append(Check("fan_hypercube_dims", str(want), str(dims), dims == want and distinct))

    if n <= 6:
        shapes = sorted({c.shape_class for c in comps})
        ok = set(shapes) <= {"isolated", "path", "tree", "four_cycle_with_leaves"}
        out.append(Check("small_components_tree_or_four_cycle", "no 'other'",
                         ",".join(shapes), ok))
    if n == 9:
        found = [c for c in comps if c.size > 1 and c.leaf_count == 0 and c.girth == 20]
        out.append(Check("girth20_leafless_component_exists", ">=1", str(len(found)),
                         bool(found)))

    violations = sum(len(check_conjecture(c)) for c in comps)
    out.append(Check("same_face_same_colour_conjecture", "0", str(violations),
                     violations == 0, advisory=True))
    return out
