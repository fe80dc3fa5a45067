"""Brute-force references that avoid the library's enumeration and flip tables."""

from itertools import combinations, product


def all_diagonals(n):
    return [(a, b) for a, b in combinations(range(n), 2)
            if b - a >= 2 and not (a == 0 and b == n - 1)]


def _cross(d, e):
    (a, b), (c, f) = d, e
    if len({a, b, c, f}) < 4:
        return False
    return (a < c < b) != (a < f < b)


def brute_triangulations(n):
    """All (n-3)-subsets of pairwise non-crossing diagonals."""
    out = []
    for subset in combinations(all_diagonals(n), n - 3):
        if all(not _cross(d, e) for d, e in combinations(subset, 2)):
            out.append(tuple(sorted(subset)))
    return out


def catalan_dp(k):
    c = [1]
    for i in range(1, k + 1):
        c.append(sum(c[j] * c[i - 1 - j] for j in range(i)))
    return c[k]


def brute_faces(n, diags):
    """Triples whose three sides are all edges or diagonals and which no diagonal cuts."""
    edges = {(i, i + 1) for i in range(n - 1)} | {(0, n - 1)} | set(diags)
    faces = []
    for a, b, c in combinations(range(n), 3):
        if {(a, b), (b, c), (a, c)} <= edges:
            faces.append((a, b, c))
    return sorted(faces)


def brute_coloured_flip(n, diags, colours, d, sigma):
    """Flip from scratch on (diagonal set, {face: colour})."""
    faces = brute_faces(n, diags)
    col = dict(zip(faces, colours))
    inc = [f for f in faces if d[0] in f and d[1] in f]
    assert len(inc) == 2
    f1, f2 = inc
    if col[f1] != col[f2]:
        return None
    (x,) = set(f1) - set(d)
    (y,) = set(f2) - set(d)
    new = (min(x, y), max(x, y))
    diags2 = tuple(sorted([e for e in diags if e != d] + [new]))
    faces2 = brute_faces(n, diags2)
    c = sigma[col[f1]]
    colours2 = tuple(col[f] if f in col else c for f in faces2)
    return diags2, colours2


def brute_census(n, m, sigma):
    """Component sizes via union-find over a from-scratch flip graph."""
    nodes = [(t, w) for t in brute_triangulations(n) for w in product(range(m), repeat=n - 2)]
    parent = {v: v for v in nodes}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for t, w in nodes:
        for d in t:
            res = brute_coloured_flip(n, t, w, d, sigma)
            if res is not None:
                a, b = find((t, w)), find(res)
                if a != b:
                    parent[a] = b
    sizes = {}
    for v in nodes:
        r = find(v)
        sizes[r] = sizes.get(r, 0) + 1
    hist = {}
    for s in sizes.values():
        hist[s] = hist.get(s, 0) + 1
    return dict(sorted(hist.items()))
