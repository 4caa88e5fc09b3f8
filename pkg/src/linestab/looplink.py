"""The tensor linking group of the full graph and loop-linking values.

An element of the tensor linking group is a homomorphism from meridian
homology to the cycle space of the full graph, flattened row-major
(meridian coordinate major, cycle minor).  Each group generator, a dual
vertex tensored with an edge, imposes one integer linear form on those
coordinates: expand the homomorphism back to a vertex-by-edge matrix and
read off the generator's entry.  The group itself is the kernel lattice
of all the forms.

Loop-linking values pair a kernel basis row against inclusion data: the
inclusion matrix is projected to meridian coordinates, composed with the
basis row, and the trace of the resulting endomorphism is the value.
"""

from __future__ import annotations

from dataclasses import dataclass

from .combinatorics import DecoratedGraph, GraphKind, ValidationError
from .exactalg import IntMatrix, lattice_kernel, lattice_members
from .graphhomology import CycleBasis, MeridianHomology, cycle_basis, meridian_homology
from .inclusion import InclusionMatrix
from .stabiliser import gs_generators

__all__ = [
    "LoopLinkingNumber",
    "TensorLinkingGroup",
    "lln",
    "tlg",
    "tlg_generator_positions",
    "verify_lemma_gs_tlg",
]


@dataclass(frozen=True)
class TensorLinkingGroup:
    graph: DecoratedGraph
    basis: CycleBasis
    mh: MeridianHomology
    generators: tuple[tuple[int, int], ...]
    lattice: IntMatrix

    @property
    def ambient_rank(self) -> int:
        return self.mh.group.coord_count * self.basis.rank

    @property
    def rank(self) -> int:
        return self.lattice.rows


@dataclass(frozen=True)
class LoopLinkingNumber:
    """One integer per kernel basis row, in lattice row order."""

    values: tuple[int, ...]

    @property
    def is_zero(self) -> bool:
        return not any(self.values)


def tlg_generator_positions(g: DecoratedGraph) -> list[tuple[int, int]]:
    """(vertex, edge) pairs generating the constraint module.

    Per edge between a point and a line: one generator for every line
    through the point, then one for every point on the line.
    """
    _require_full(g)
    comb = g.combinatorics
    out = []
    for e, (v, w) in enumerate(g.edges):
        line, point = (v, w) if g.is_line(v) else (w, v)
        pid = g.point_ids[point - comb.n_lines]
        for other_line in comb.points[pid]:
            out.append((other_line, e))
        for other_point in comb.points_of_line(line):
            out.append((g.vertex_by_label("P%d" % other_point), e))
    return out


def tlg(g: DecoratedGraph) -> TensorLinkingGroup:
    """Kernel lattice of the generator forms on hom(MH, H1)."""
    _require_full(g)
    basis = cycle_basis(g)
    mh = meridian_homology(g)
    tdim = mh.group.coord_count
    k = basis.rank
    proj = mh.group.to_smith.data
    gens = tlg_generator_positions(g)
    forms = []
    for u, e in gens:
        pu = proj[u]
        col = basis.zeta.column(e)
        form = [0] * (tdim * k)
        for i in range(tdim):
            if pu[i]:
                base = i * k
                for j in range(k):
                    if col[j]:
                        form[base + j] = pu[i] * col[j]
        forms.append(form)
    lattice = lattice_kernel(IntMatrix(forms, cols=tdim * k))
    return TensorLinkingGroup(g, basis, mh, tuple(gens), lattice)


def lln(t: TensorLinkingGroup, m: InclusionMatrix) -> LoopLinkingNumber:
    """Trace pairing of every lattice basis row with the inclusion data."""
    if m.ordering.graph != t.graph:
        raise ValidationError("inclusion data belongs to a different graph")
    tdim = t.mh.group.coord_count
    k = t.basis.rank
    to_mh = m.matrix @ t.mh.group.to_smith  # cycle coords -> meridian coords
    values = []
    for row in t.lattice.data:
        trace = 0
        for i in range(tdim):
            base = i * k
            for j in range(k):
                c = row[base + j]
                if c:
                    trace += c * to_mh.data[j][i]
        values.append(trace)
    return LoopLinkingNumber(tuple(values))


def verify_lemma_gs_tlg(g: DecoratedGraph) -> bool:
    """Whether every stabiliser generator, read as a vertex-by-edge
    matrix, lies in the lattice spanned by the constraint generators."""
    _require_full(g)
    ne, nv = g.edge_count, g.vertex_count
    width = nv * ne
    unit_rows = []
    for u, e in tlg_generator_positions(g):
        row = [0] * width
        row[u * ne + e] = 1
        unit_rows.append(row)
    lattice = IntMatrix(unit_rows, cols=width)
    duals = []
    for gs_row in gs_generators(g).data:
        dual = [0] * width
        for pos, c in enumerate(gs_row):
            if c:
                e, u = divmod(pos, nv)
                dual[u * ne + e] = c
        duals.append(dual)
    return all(lattice_members(lattice, duals))


def _require_full(g: DecoratedGraph) -> None:
    if g.kind is not GraphKind.FULL:
        raise ValidationError("the tensor linking group lives on the full graph")
