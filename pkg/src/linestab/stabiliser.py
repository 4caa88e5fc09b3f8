"""The graph stabiliser and the ordering-transition correction.

The stabiliser of a decorated graph is the quotient of hom(H1, MH) by
the images of a finite set of relation generators.  Generators live in
hom(C1, C0), written edge by vertex and flattened edge-major; pushing a
generator into hom(H1, MH) expands each cycle in edges and projects each
vertex chain to meridian-homology coordinates.  Classes in the quotient
are what the comparison workflow trades in.

Transitions between orderings are accumulated per vertex by walking the
adjacent-transposition word of the position permutation.  Each swap is
evaluated against the linearisation reached so far: with x and y the
neighbours at the swapped positions, the step contributes the image of
the dual of edge (v, y) tensored with x, signed by the edge's canonical
orientation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .combinatorics import DecoratedGraph, ValidationError
from .exactalg import AbelianGroup, IntMatrix, quotient_group
from .graphhomology import CycleBasis, MeridianHomology, cycle_basis, meridian_homology
from .orderings import GraphOrdering, decompose_adjacent, ordering_difference

__all__ = [
    "StabiliserClass",
    "StabiliserGroup",
    "gs_generators",
    "lift_to_chains",
    "reduce_to_class",
    "stabiliser",
    "transition",
]


@dataclass(frozen=True)
class StabiliserClass:
    """An element of a stabiliser group in canonical coordinates."""

    group: AbelianGroup = field(repr=False)
    coords: tuple[int, ...] = ()

    @property
    def is_zero(self) -> bool:
        return not any(self.coords)

    def __add__(self, other: "StabiliserClass") -> "StabiliserClass":
        self._check(other)
        return StabiliserClass(self.group, self.group.add_coords(self.coords, other.coords))

    def __sub__(self, other: "StabiliserClass") -> "StabiliserClass":
        self._check(other)
        return StabiliserClass(self.group, self.group.sub_coords(self.coords, other.coords))

    def __neg__(self) -> "StabiliserClass":
        return StabiliserClass(self.group, self.group.neg_coords(self.coords))

    def _check(self, other: "StabiliserClass") -> None:
        if self.group is not other.group:
            raise ValidationError("classes live in different stabiliser groups")


@dataclass(frozen=True)
class StabiliserGroup:
    graph: DecoratedGraph
    basis: CycleBasis
    mh: MeridianHomology
    relations: IntMatrix
    group: AbelianGroup

    @property
    def ambient_rank(self) -> int:
        return self.basis.rank * self.mh.group.coord_count

    def zero(self) -> StabiliserClass:
        return StabiliserClass(self.group, self.group.zero_coords())


def gs_generators(g: DecoratedGraph) -> IntMatrix:
    """Relation generators in edge x vertex coordinates, one per row.

    Rows are flattened edge-major (position = edge * vertex_count +
    vertex).  Every edge contributes the two rows picking out its own
    endpoints.  Every vertex contributes one row per unordered pair of
    distinct incident edges: the first edge's dual tensored with the
    second edge's far endpoint, plus the mirrored term signed by both
    canonical orientations.
    """
    nv = g.vertex_count
    width = g.edge_count * nv
    rows = []
    for e, (v, w) in enumerate(g.edges):
        for u in (v, w):
            row = [0] * width
            row[e * nv + u] = 1
            rows.append(row)
    for v in range(nv):
        ns = g.neighbours[v]
        for i in range(len(ns)):
            for j in range(i + 1, len(ns)):
                y, z = ns[i], ns[j]
                row = [0] * width
                row[g.edge_position(v, y) * nv + z] += 1
                row[g.edge_position(v, z) * nv + y] += g.delta(v, y) * g.delta(v, z)
                rows.append(row)
    return IntMatrix(rows, cols=width)


def _push_to_hom(basis: CycleBasis, mh: MeridianHomology, gens: IntMatrix) -> IntMatrix:
    """Push edge x vertex rows into flattened hom(H1, MH) coordinates."""
    g = basis.graph
    nv = g.vertex_count
    t = mh.group.coord_count
    k = basis.rank
    zeta_cols = [basis.zeta.column(e) for e in range(g.edge_count)]
    proj = mh.group.to_smith.data
    out = []
    for row in gens.data:
        img = [0] * (k * t)
        for pos, c in enumerate(row):
            if not c:
                continue
            e, u = divmod(pos, nv)
            pu = proj[u]
            for i, zi in enumerate(zeta_cols[e]):
                if zi:
                    cz = c * zi
                    base = i * t
                    for sidx, ps in enumerate(pu):
                        if ps:
                            img[base + sidx] += cz * ps
        out.append(img)
    # Torsion in MH forces d * unit in every cycle slot of the hom module.
    for sidx, d in enumerate(mh.group.torsion):
        for i in range(k):
            row = [0] * (k * t)
            row[i * t + sidx] = d
            out.append(row)
    return IntMatrix(out, cols=k * t)


def stabiliser(g: DecoratedGraph, root: int = 0) -> StabiliserGroup:
    """Quotient of hom(H1, MH) by the images of the relation generators."""
    basis = cycle_basis(g, root)
    mh = meridian_homology(g)
    relations = _push_to_hom(basis, mh, gs_generators(g))
    group = quotient_group(basis.rank * mh.group.coord_count, relations)
    return StabiliserGroup(g, basis, mh, relations, group)


def reduce_to_class(s: StabiliserGroup, m: IntMatrix) -> StabiliserClass:
    """Class of a cycle-by-vertex matrix: project each row to meridian
    coordinates, flatten, reduce in the quotient."""
    if m.shape != (s.basis.rank, s.graph.vertex_count):
        raise ValidationError(
            "expected a %d x %d matrix, got %d x %d"
            % (s.basis.rank, s.graph.vertex_count, m.rows, m.cols)
        )
    flat: list[int] = []
    for row in m.data:
        flat.extend(s.mh.group.project(row))
    return StabiliserClass(s.group, s.group.reduce(flat))


def lift_to_chains(s: StabiliserGroup, flat: Sequence[int]) -> IntMatrix:
    """A cycle-by-vertex matrix projecting back onto the given flattened
    hom coordinates.  Useful for realising ambient vectors as synthetic
    inclusion data."""
    t = s.mh.group.coord_count
    if len(flat) != s.basis.rank * t:
        raise ValidationError(
            "expected %d flattened coordinates, got %d"
            % (s.basis.rank * t, len(flat))
        )
    rows = [s.mh.group.lift(flat[i * t:(i + 1) * t]) for i in range(s.basis.rank)]
    return IntMatrix(rows, cols=s.graph.vertex_count)


def transition(s: StabiliserGroup, a: GraphOrdering, b: GraphOrdering) -> StabiliserClass:
    """Correction class comparing invariants computed in orderings a and b.

    Word-independence holds in the quotient, so the bubble-sort word from
    the stored linearisations pins the representative deterministically.
    """
    if a.graph != s.graph or b.graph != s.graph:
        raise ValidationError("orderings belong to a different graph")
    g = s.graph
    t = s.mh.group.coord_count
    proj = s.mh.group.to_smith.data
    total = [0] * (s.basis.rank * t)
    diff = ordering_difference(a, b)
    for v in range(g.vertex_count):
        word = decompose_adjacent(diff.perms[v])
        if not word:
            continue
        current = list(a.order[v])
        for kpos in word:
            x, y = current[kpos - 1], current[kpos]
            sign = g.delta(v, y)
            px = proj[x]
            zcol = s.basis.zeta.column(g.edge_position(v, y))
            for i, zi in enumerate(zcol):
                if zi:
                    cz = sign * zi
                    base = i * t
                    for sidx, ps in enumerate(px):
                        if ps:
                            total[base + sidx] += cz * ps
            current[kpos - 1], current[kpos] = y, x
    return StabiliserClass(s.group, s.group.reduce(total))
