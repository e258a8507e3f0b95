"""
Brute-force map counts by gluing polygons.

A map with ``n`` rooted, labelled boundary faces and some unmarked faces is
the same thing as a pairing of the sides of polygons (one per face) into
edges.  Enumerating all pairings, keeping the connected ones of the right
genus, and dividing out the labellings and rootings of the unmarked faces
gives the counts independently of any spectral curve.

Darts are polygon sides oriented along the boundary; ``phi`` is "next side
of the same polygon" and ``alpha`` the pairing.  Vertices are the cycles of
``phi o alpha``.  For bipartite counts the root side of every marked face
must leave a white vertex.
"""
from __future__ import annotations

from math import factorial
from typing import Dict, List, Sequence


def _polygons(perimeters: Sequence[int]):
    phi, start, owner = [], [], []
    for idx, p in enumerate(perimeters):
        base = len(phi)
        start.append(base)
        for i in range(p):
            phi.append(base + (i + 1) % p)
            owner.append(idx)
    return phi, start, owner


def _matchings(n: int):
    alpha = [-1] * n

    def rec():
        try:
            i = alpha.index(-1)
        except ValueError:
            yield alpha
            return
        for j in range(i + 1, n):
            if alpha[j] == -1:
                alpha[i], alpha[j] = j, i
                yield from rec()
                alpha[i] = alpha[j] = -1

    yield from rec()


def _vertex_labels(phi, alpha):
    n = len(phi)
    label = [-1] * n
    nv = 0
    for d in range(n):
        if label[d] < 0:
            e = d
            while label[e] < 0:
                label[e] = nv
                e = phi[alpha[e]]
            nv += 1
    return label, nv


def _connected(alpha, owner, npoly):
    parent = list(range(npoly))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    comps = npoly
    for d, e in enumerate(alpha):
        a, b = find(owner[d]), find(owner[e])
        if a != b:
            parent[a] = b
            comps -= 1
    return comps == 1


def _two_colouring(alpha, label, nv):
    adj: List[List[int]] = [[] for _ in range(nv)]
    for d, e in enumerate(alpha):
        if d < e:
            adj[label[d]].append(label[e])
            adj[label[e]].append(label[d])
    colour = [-1] * nv
    for s in range(nv):
        if colour[s] >= 0:
            continue
        colour[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            for u in adj[v]:
                if colour[u] < 0:
                    colour[u] = 1 - colour[v]
                    stack.append(u)
                elif colour[u] == colour[v]:
                    return None
    return colour


def count_maps(boundaries: Sequence[int], genus: int, unmarked: Dict[int, int] | None = None,
               bipartite: bool = False) -> int:
    """
    Number of connected genus-``genus`` maps with rooted labelled boundary
    faces of the given (even) degrees and ``unmarked[deg]`` unlabelled
    unrooted faces of each degree.
    """
    unmarked = {k: v for k, v in (unmarked or {}).items() if v}
    perimeters = list(boundaries) + [deg for deg, m in sorted(unmarked.items()) for _ in range(m)]
    total = sum(perimeters)
    if total % 2 or not boundaries:
        return 0
    phi, start, owner = _polygons(perimeters)
    npoly = len(perimeters)
    edges = total // 2
    roots = start[: len(boundaries)]
    found = 0
    for alpha in _matchings(total):
        label, nv = _vertex_labels(phi, alpha)
        if 2 - 2 * genus != nv - edges + npoly:
            continue
        if not _connected(alpha, owner, npoly):
            continue
        if bipartite:
            colour = _two_colouring(alpha, label, nv)
            if colour is None:
                continue
            if len({colour[label[r]] for r in roots}) != 1:
                continue
        found += 1
    sym = 1
    for deg, m in unmarked.items():
        sym *= factorial(m) * deg ** m
    if found % sym:
        raise ArithmeticError("gluing count %d not divisible by symmetry factor %d" % (found, sym))
    return found // sym


def harer_zagier(genus: int, half_perimeter: int) -> int:
    """Gluings of a 2n-gon into a genus-g surface (one-face rooted maps)."""
    return count_maps([2 * half_perimeter], genus)


def count_series(boundaries: Sequence[int], genus: int, weight: int, order: int,
                 bipartite: bool = False) -> List[int]:
    """Coefficients ``[t^0, ..., t^order]`` for a single face weight ``t_weight``."""
    return [count_maps(boundaries, genus, {weight: m}, bipartite) for m in range(order + 1)]


def catalan(n: int) -> int:
    return factorial(2 * n) // (factorial(n) * factorial(n + 1))

