"""Coloured flip graphs, their components and structural statistics.

Nodes of a :class:`FlipGraph` are ids into the sorted list of coloured
triangulations of the ``n``-gon (sorted by diagonals, then colour word), so an
id is ``tri_rank * m**(n-2) + colour_word_in_base_m``.
"""

from __future__ import annotations

import math
import os
from collections import Counter, deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

from .colouring import (
    ColourScheme,
    ColouredTriangulation,
    coloured_flip,
    count_coloured,
    flippable_diagonals,
)
from .polygon import Diagonal, Face, fan, triangulation_table

DEFAULT_BUDGET = 10_000_000


class BudgetExceeded(RuntimeError):
    """The requested graph has more nodes than the configured budget allows."""


def default_budget() -> int:
    env = os.environ.get("FLIPGRAPH_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


def _check_budget(size: int, budget: Optional[int]) -> None:
    budget = default_budget() if budget is None else budget
    if size > budget:
        raise BudgetExceeded(f"{size} nodes exceed the node budget of {budget}")


# --------------------------------------------------------------------------
# graph construction
# --------------------------------------------------------------------------

def _neighbours_chunk(args) -> List[Tuple[int, ...]]:
    n, scheme, lo, hi = args
    table = triangulation_table(n)
    m = scheme.m
    k = n - 2
    width = m ** k
    sigma = scheme.sigma
    weights = [m ** (k - 1 - j) for j in range(k)]
    out = []
    for node in range(lo, hi):
        tri, word = divmod(node, width)
        colours = []
        w = word
        for j in range(k):
            colours.append(w // weights[j])
            w %= weights[j]
        nbrs = []
        for f1, f2, target, src in table.flips[tri]:
            c = colours[f1]
            if colours[f2] != c:
                continue
            new_c = sigma[c]
            code = 0
            for j, s in enumerate(src):
                code += (new_c if s < 0 else colours[s]) * weights[j]
            nbrs.append(target * width + code)
        nbrs.sort()
        out.append(tuple(nbrs))
    return out


@dataclass
class FlipGraph:
    """The sigma-flip graph of the ``n``-gon."""

    n: int
    scheme: ColourScheme
    adjacency: List[Tuple[int, ...]]

    def __len__(self) -> int:
        return len(self.adjacency)

    @property
    def width(self) -> int:
        return self.scheme.m ** (self.n - 2)

    def node(self, i: int) -> ColouredTriangulation:
        table = triangulation_table(self.n)
        tri, word = divmod(i, self.width)
        m, k = self.scheme.m, self.n - 2
        colours = []
        for j in range(k):
            colours.append(word // m ** (k - 1 - j) % m)
        return ColouredTriangulation(table.triangulations[tri], tuple(colours))

    def id_of(self, ct: ColouredTriangulation) -> int:
        table = triangulation_table(self.n)
        code = 0
        for c in ct.colours:
            code = code * self.scheme.m + c
        return table.index[ct.diagonals] * self.width + code

    def edge_count(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def components(self) -> List[List[int]]:
        """Node-id lists per component, each sorted, ordered by smallest id."""
        seen = bytearray(len(self.adjacency))
        comps = []
        for start in range(len(self.adjacency)):
            if seen[start]:
                continue
            seen[start] = 1
            members = [start]
            queue = deque([start])
            while queue:
                u = queue.popleft()
                for v in self.adjacency[u]:
                    if not seen[v]:
                        seen[v] = 1
                        members.append(v)
                        queue.append(v)
            members.sort()
            comps.append(members)
        return comps


def build_flip_graph(n: int, scheme: ColourScheme, budget: Optional[int] = None,
                     workers: int = 1) -> FlipGraph:
    """Build the full sigma-flip graph.

    With ``workers > 1`` the node range is split into contiguous shards and
    recombined in order, so the result does not depend on the worker count.
    """
    total = count_coloured(n, scheme.m)
    _check_budget(total, budget)
    triangulation_table(n)
    if workers <= 1 or total < 2048:
        adjacency = _neighbours_chunk((n, scheme, 0, total))
    else:
        step = math.ceil(total / (workers * 4))
        shards = [(n, scheme, lo, min(lo + step, total)) for lo in range(0, total, step)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            adjacency = [row for part in pool.map(_neighbours_chunk, shards) for row in part]
    return FlipGraph(n, scheme, adjacency)


# --------------------------------------------------------------------------
# components and statistics
# --------------------------------------------------------------------------

INF = math.inf


@dataclass
class Component:
    """A connected component given by its members and their induced adjacency."""

    members: List[ColouredTriangulation]
    adjacency: List[Tuple[int, ...]]
    scheme: ColourScheme
    ids: Optional[List[int]] = None
    _stats: Optional[dict] = field(default=None, repr=False)

    @property
    def size(self) -> int:
        return len(self.members)

    @property
    def n(self) -> int:
        return self.members[0].n

    def edge_list(self) -> List[Tuple[int, int]]:
        return [(u, v) for u, nb in enumerate(self.adjacency) for v in nb if u < v]

    def degrees(self) -> List[int]:
        return [len(nb) for nb in self.adjacency]

    @property
    def leaf_count(self) -> int:
        return sum(1 for d in self.degrees() if d == 1)

    @property
    def girth(self) -> float:
        return girth(self.adjacency)

    @property
    def shape_class(self) -> str:
        return self.stats()["shape_class"]

    def stats(self) -> dict:
        if self._stats is None:
            self._stats = component_stats(self)
        return self._stats

    def keys(self) -> List[str]:
        return [ct.key for ct in self.members]


def _induced(graph: FlipGraph, ids: Sequence[int]) -> Component:
    local = {g: i for i, g in enumerate(ids)}
    adj = [tuple(local[v] for v in graph.adjacency[g]) for g in ids]
    return Component([graph.node(g) for g in ids], adj, graph.scheme, list(ids))


def graph_components(graph: FlipGraph) -> List[Component]:
    return [_induced(graph, ids) for ids in graph.components()]


def neighbours(ct: ColouredTriangulation, scheme: ColourScheme) -> List[ColouredTriangulation]:
    return [coloured_flip(ct, d, scheme) for d in flippable_diagonals(ct)]


def component_of(ct: ColouredTriangulation, scheme: ColourScheme,
                 budget: Optional[int] = None) -> Component:
    """Breadth-first search from ``ct`` without building the whole graph."""
    budget = default_budget() if budget is None else budget
    seen = {ct}
    queue = deque([ct])
    edges = {}
    while queue:
        u = queue.popleft()
        nb = neighbours(u, scheme)
        edges[u] = nb
        for v in nb:
            if v not in seen:
                seen.add(v)
                if len(seen) > budget:
                    raise BudgetExceeded(f"component exceeds the node budget of {budget}")
                queue.append(v)
    members = sorted(seen, key=ColouredTriangulation.sort_key)
    local = {ct: i for i, ct in enumerate(members)}
    adj = [tuple(sorted(local[v] for v in edges[u])) for u in members]
    return Component(members, adj, scheme)


def girth(adjacency: Sequence[Sequence[int]]) -> float:
    """Length of a shortest cycle, ``inf`` for a forest."""
    best = INF
    n = len(adjacency)
    for root in range(n):
        dist = [-1] * n
        parent = [-1] * n
        dist[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            if 2 * dist[u] + 1 >= best:
                break
            for v in adjacency[u]:
                if dist[v] < 0:
                    dist[v] = dist[u] + 1
                    parent[v] = u
                    queue.append(v)
                elif v != parent[u]:
                    best = min(best, dist[u] + dist[v] + 1)
    return best


def is_bipartite_graph(adjacency: Sequence[Sequence[int]]) -> bool:
    side = [-1] * len(adjacency)
    for s in range(len(adjacency)):
        if side[s] >= 0:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in adjacency[u]:
                if side[v] < 0:
                    side[v] = 1 - side[u]
                    queue.append(v)
                elif side[v] == side[u]:
                    return False
    return True


def parity_witness(ct: ColouredTriangulation) -> int:
    """Side of ``ct`` in the 2-colouring of its component.

    Every 2-coloured flip turns two colour-0 faces into two colour-1 faces or
    back, so the colour-0 count moves by exactly 2 and half of it alternates
    in parity along every edge.
    """
    return (ct.colours.count(0) // 2) % 2


def is_bipartite(comp: Component) -> Tuple[bool, List[int]]:
    """Check the parity witness on every edge; returns ``(ok, witness)``."""
    if comp.scheme.m != 2:
        raise NotImplementedError("the parity witness is defined for two colours only")
    witness = [parity_witness(ct) for ct in comp.members]
    ok = all(witness[u] != witness[v] for u, v in comp.edge_list())
    return ok, witness


SHAPES = ("isolated", "path", "tree", "four_cycle_with_leaves", "other")


def component_stats(comp: Component) -> dict:
    size = comp.size
    edges = sum(comp.degrees()) // 2
    g = comp.girth
    cyclomatic = edges - size + 1
    if size == 1:
        shape = "isolated"
    elif cyclomatic == 0:
        shape = "path" if max(comp.degrees()) <= 2 else "tree"
    elif cyclomatic == 1 and g == 4:
        shape = "four_cycle_with_leaves"
    else:
        shape = "other"
    return {
        "size": size,
        "edges": edges,
        "leaf_count": comp.leaf_count,
        "girth": g,
        "cyclomatic_number": cyclomatic,
        "shape_class": shape,
    }


def census(n: int, scheme: ColourScheme, budget: Optional[int] = None,
           workers: int = 1, graph: Optional[FlipGraph] = None) -> Dict[int, int]:
    """Histogram ``size -> number of components`` (sorted by size)."""
    graph = graph or build_flip_graph(n, scheme, budget, workers)
    hist = Counter(len(c) for c in graph.components())
    return dict(sorted(hist.items()))


def min_nontrivial_size(n: int, scheme: ColourScheme, budget: Optional[int] = None,
                        hist: Optional[Dict[int, int]] = None) -> int:
    hist = hist if hist is not None else census(n, scheme, budget)
    sizes = [s for s in hist if s > 1]
    if not sizes:
        raise ValueError(f"no non-isolated component for n={n}")
    smallest = min(sizes)
    assert smallest >= n - 2, f"component of size {smallest} < {n - 2}"
    return smallest


def eventually_flippable(ct: ColouredTriangulation, scheme: ColourScheme,
                         budget: Optional[int] = None) -> Set[Diagonal]:
    """Diagonals of ``ct`` that are flippable in some state of its component."""
    own = set(ct.diagonals)
    found: Set[Diagonal] = set()
    for state in component_of(ct, scheme, budget).members:
        found.update(d for d in flippable_diagonals(state) if d in own)
    return found


# --------------------------------------------------------------------------
# independent flips and hypercubes
# --------------------------------------------------------------------------

def _quad_faces(ct: ColouredTriangulation, d: Diagonal) -> FrozenSet[Face]:
    f1, f2 = ct.triangulation.incident_faces[d]
    return frozenset((ct.faces[f1], ct.faces[f2]))


def are_independent(ct: ColouredTriangulation, d: Diagonal, e: Diagonal) -> bool:
    """Quadrilaterals of ``d`` and ``e`` share no face."""
    return not (_quad_faces(ct, d) & _quad_faces(ct, e))


def independent_flippable_sets(ct: ColouredTriangulation) -> List[Diagonal]:
    """A maximum set of flippable diagonals with pairwise face-disjoint quadrilaterals.

    Subsets are tried largest first in lexicographic order, so ties go to the
    lexicographically smallest set.  There are at most ``n - 3`` candidates.
    """
    cands = flippable_diagonals(ct)
    quads = {d: _quad_faces(ct, d) for d in cands}
    for r in range(len(cands), 0, -1):
        for subset in combinations(cands, r):
            if all(not (quads[d] & quads[e]) for d, e in combinations(subset, 2)):
                return list(subset)
    return []


class CommutationError(AssertionError):
    """Two supposedly independent flips did not commute."""


@dataclass
class HypercubeWitness:
    base: ColouredTriangulation
    diagonals: Tuple[Diagonal, ...]
    nodes: Dict[FrozenSet[int], ColouredTriangulation]
    edges: List[Tuple[str, str]]

    @property
    def dimension(self) -> int:
        return len(self.diagonals)

    def keys(self) -> Set[str]:
        return {ct.key for ct in self.nodes.values()}


def _flip_subset(ct, diags, order, scheme):
    state = ct
    for i in order:
        state = coloured_flip(state, diags[i], scheme)
    return state


def verify_hypercube(ct: ColouredTriangulation, indep_set: Sequence[Diagonal],
                     scheme: ColourScheme) -> HypercubeWitness:
    """Flip every subset of ``indep_set`` and check the result is a ``k``-cube."""
    diags = tuple(tuple(sorted(d)) for d in indep_set)
    for d in diags:
        if d not in flippable_diagonals(ct):
            raise ValueError(f"{d} is not flippable")
    for d, e in combinations(diags, 2):
        if not are_independent(ct, d, e):
            raise ValueError(f"{d} and {e} are not independent")
    k = len(diags)
    nodes: Dict[FrozenSet[int], ColouredTriangulation] = {}
    for r in range(k + 1):
        for subset in combinations(range(k), r):
            orders = list(permutations(subset)) if r <= 4 else [subset, subset[::-1]]
            results = {_flip_subset(ct, diags, o, scheme) for o in orders}
            if len(results) != 1:
                raise CommutationError(f"flips {[diags[i] for i in subset]} do not commute")
            nodes[frozenset(subset)] = results.pop()
    if len(set(nodes.values())) != 2 ** k:
        raise CommutationError("hypercube states are not distinct")
    edges = []
    for subset, state in nodes.items():
        nbrs = set(neighbours(state, scheme))
        for i in range(k):
            if i in subset:
                continue
            other = nodes[subset | {i}]
            if other not in nbrs:
                raise CommutationError(f"{state.key} and {other.key} are not adjacent")
            edges.append((state.key, other.key))
    edges.sort()
    return HypercubeWitness(ct, diags, nodes, edges)


def monochromatic_fan(n: int, colour: int = 0) -> ColouredTriangulation:
    return ColouredTriangulation(fan(n, 0), (colour,) * (n - 2))


def fan_hypercube_dims(n: int) -> List[HypercubeWitness]:
    """Hypercubes at the monochromatic fan of the ``n``-gon.

    The fan's faces form a path; the diagonal ``(0, i + 1)`` joins faces
    ``i - 1`` and ``i``.  Pairing faces from either end gives two independent
    sets: for an even face count of sizes ``k/2`` and ``k/2 - 1``, for an odd
    count two different sets of size ``(k - 1)/2``.
    """
    if n < 5:
        raise ValueError("need at least 5 vertices")
    ct = monochromatic_fan(n)
    scheme = ColourScheme.cyclic(2)
    diags = list(ct.diagonals)
    from_start = diags[0::2]
    from_second = diags[1::2]
    return [verify_hypercube(ct, from_start, scheme),
            verify_hypercube(ct, from_second, scheme)]


# --------------------------------------------------------------------------
# conjecture check
# --------------------------------------------------------------------------

def check_conjecture(comp: Component) -> List[Tuple[Face, Tuple[int, ...]]]:
    """Vertex triples that occur as faces with more than one colour in ``comp``."""
    seen: Dict[Face, Set[int]] = {}
    for ct in comp.members:
        for f, c in zip(ct.faces, ct.colours):
            seen.setdefault(f, set()).add(c)
    return sorted((f, tuple(sorted(cs))) for f, cs in seen.items() if len(cs) > 1)
