"""Chain groups of a decorated graph, cycle bases and meridian homology.

Conventions.  Edges carry the canonical orientation low index to high
index, so the boundary of edge (v, w) with v < w is w - v.  A cycle
basis is built from a BFS spanning tree; each non-tree edge e defines
the unique cycle that crosses e in its canonical direction and returns
through the tree.  Chains are row vectors indexed by the graph's edge
list, so the matrix of the cycle decomposition map has one row per
cycle and one column per edge.

The meridian homology group is the quotient of the free module on the
vertices by one relation per vertex: the vertex scaled by its Euler
number plus the sum of its neighbours.  For full graphs, which carry no
Euler numbers, the group is presented instead by eliminating each point
against the sum of its lines and killing the total sum of lines; both
presentations give a free group of rank one less than the line count.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .combinatorics import DecoratedGraph, GraphKind
from .exactalg import AbelianGroup, IntMatrix, quotient_group

__all__ = [
    "CycleBasis",
    "MeridianHomology",
    "boundary_matrix",
    "cycle_basis",
    "meridian_homology",
    "verify_h1e",
]


@dataclass(frozen=True)
class CycleBasis:
    """A spanning tree and the cycle decomposition map it induces.

    zeta has one row per non-tree edge (in edge-list order) and one
    column per edge; row i expands the cycle of non_tree_edges[i].
    """

    graph: DecoratedGraph
    root: int
    tree_edges: tuple[tuple[int, int], ...]
    non_tree_edges: tuple[tuple[int, int], ...]
    zeta: IntMatrix

    @property
    def rank(self) -> int:
        return len(self.non_tree_edges)


def cycle_basis(g: DecoratedGraph, root: int = 0) -> CycleBasis:
    """BFS spanning tree from the root, neighbours in index order."""
    parent: list[int | None] = [None] * g.vertex_count
    seen = [False] * g.vertex_count
    seen[root] = True
    queue = deque([root])
    tree = set()
    while queue:
        v = queue.popleft()
        for w in g.neighbours[v]:
            if not seen[w]:
                seen[w] = True
                parent[w] = v
                tree.add((min(v, w), max(v, w)))
                queue.append(w)

    def path_from_root(x: int) -> list[int]:
        path = [x]
        while parent[path[-1]] is not None:
            path.append(parent[path[-1]])
        path.reverse()
        return path

    non_tree = tuple(e for e in g.edges if e not in tree)
    rows = []
    for v, w in non_tree:
        row = [0] * g.edge_count
        row[g.edge_position(v, w)] = 1
        pv, pw = path_from_root(v), path_from_root(w)
        lca = 0
        while lca + 1 < min(len(pv), len(pw)) and pv[lca + 1] == pw[lca + 1]:
            lca += 1
        walk = pw[lca:][::-1] + pv[lca + 1:]  # w down to lca, then up to v
        for a, b in zip(walk, walk[1:]):
            row[g.edge_position(a, b)] += 1 if a < b else -1
        rows.append(tuple(row))
    zeta = IntMatrix(tuple(rows), cols=g.edge_count)
    return CycleBasis(g, root, tuple(sorted(tree)), non_tree, zeta)


def boundary_matrix(g: DecoratedGraph) -> IntMatrix:
    """Edge boundaries as rows: -1 at the low vertex, +1 at the high one."""
    rows = []
    for v, w in g.edges:
        row = [0] * g.vertex_count
        row[v], row[w] = -1, 1
        rows.append(tuple(row))
    return IntMatrix(tuple(rows), cols=g.vertex_count)


@dataclass(frozen=True)
class MeridianHomology:
    graph: DecoratedGraph
    group: AbelianGroup

    def eta(self, chain: tuple[int, ...]) -> tuple[int, ...]:
        """Class of a vertex chain in canonical coordinates."""
        return self.group.reduce(chain)


def meridian_homology(g: DecoratedGraph) -> MeridianHomology:
    n = g.vertex_count
    rows = []
    if g.kind is GraphKind.REDUCED:
        for v in range(n):
            row = [0] * n
            row[v] = g.euler[v]
            for w in g.neighbours[v]:
                row[w] += 1
            rows.append(tuple(row))
    else:
        comb = g.combinatorics
        for v in range(comb.n_lines, n):
            row = [0] * n
            row[v] = 1
            for line in comb.points[g.point_ids[v - comb.n_lines]]:
                row[line] -= 1
            rows.append(tuple(row))
        rows.append(tuple(1 if v < comb.n_lines else 0 for v in range(n)))
    group = quotient_group(n, IntMatrix(tuple(rows), cols=n))
    return MeridianHomology(g, group)


def verify_h1e(m: MeridianHomology, n_lines: int) -> bool:
    """Check the group is free of rank n_lines - 1 and each point class
    is the sum of the classes of its lines."""
    if m.group.torsion or m.group.free_rank != n_lines - 1:
        return False
    g = m.graph
    for v in range(g.n_lines, g.vertex_count):
        point = [0] * g.vertex_count
        point[v] = 1
        lines = [0] * g.vertex_count
        for line in g.combinatorics.points[g.point_ids[v - g.n_lines]]:
            lines[line] += 1
        if m.eta(tuple(point)) != m.eta(tuple(lines)):
            return False
    return True
