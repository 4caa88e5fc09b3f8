"""Exact integer linear algebra for the arrangement pipeline.

Smith and Hermite normal forms, integer lattice membership and kernels, and
finitely generated abelian groups presented as quotients of Z^n.  Everything
runs over plain Python ints, so there is no overflow and no floating point
anywhere.

Conventions, used package-wide:

* Row vectors.  A matrix M with a rows and b columns represents the
  homomorphism Z^a -> Z^b sending x to x*M, and a lattice is the span of a
  matrix's rows.
* Determinism.  Eliminations pick the nonzero entry of least absolute value
  as pivot, breaking ties by lowest row index, then lowest column index.
  Identical inputs give bit-identical outputs on every platform.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


class IntMatrix:
    """Immutable integer matrix stored as a tuple of row tuples."""

    __slots__ = ("data", "rows", "cols")

    def __init__(self, rows_data: Iterable[Sequence[int]], cols: int | None = None):
        data = tuple(tuple(int(x) for x in row) for row in rows_data)
        if data:
            width = len(data[0])
            if any(len(row) != width for row in data):
                raise ValueError("rows have unequal lengths")
            if cols is not None and cols != width:
                raise ValueError(f"declared {cols} columns, rows have {width}")
            cols = width
        elif cols is None:
            raise ValueError("a matrix with no rows needs an explicit column count")
        self.data = data
        self.rows = len(data)
        self.cols = cols

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)], cols=n)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls([[0] * cols for _ in range(rows)], cols=cols)

    def row(self, i: int) -> tuple[int, ...]:
        return self.data[i]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.data)

    def transpose(self) -> "IntMatrix":
        return IntMatrix(
            [[self.data[i][j] for i in range(self.rows)] for j in range(self.cols)],
            cols=self.rows,
        )

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        out = []
        for row in self.data:
            acc = [0] * other.cols
            for k, x in enumerate(row):
                if x:
                    other_row = other.data[k]
                    for j, y in enumerate(other_row):
                        if y:
                            acc[j] += x * y
            out.append(acc)
        return IntMatrix(out, cols=other.cols)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    def to_lists(self) -> list[list[int]]:
        return [list(row) for row in self.data]

    def is_zero(self) -> bool:
        return all(not any(row) for row in self.data)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, IntMatrix)
            and self.cols == other.cols
            and self.data == other.data
        )

    def __hash__(self) -> int:
        return hash((self.cols, self.data))

    def __repr__(self) -> str:
        return f"IntMatrix({self.rows}x{self.cols})"


def vec_mat(x: Sequence[int], m: IntMatrix) -> list[int]:
    """Row vector times matrix, as plain lists of ints."""
    if len(x) != m.rows:
        raise ValueError(f"vector of length {len(x)} against {m.shape} matrix")
    acc = [0] * m.cols
    for i, xi in enumerate(x):
        if xi:
            row = m.data[i]
            for j, y in enumerate(row):
                if y:
                    acc[j] += xi * y
    return acc


# ----------------------------------------------------------------------------
# Smith normal form
# ----------------------------------------------------------------------------


@dataclass(frozen=True)
class SmithDecomposition:
    """Unimodular u, v and diagonal d with u @ a @ v == d.

    The diagonal of d is nonnegative and each entry divides the next.
    """

    u: IntMatrix
    d: IntMatrix
    v: IntMatrix


def _least_abs_pivot(a: list[list[int]], t: int, rows: int, cols: int):
    """Position of the least-|value| nonzero entry of a[t:, t:], or None.

    Ties break to the lowest row, then the lowest column, which the scan
    order provides for free.
    """
    best = None
    best_abs = 0
    for i in range(t, rows):
        row = a[i]
        for j in range(t, cols):
            v = row[j]
            if v:
                if v < 0:
                    v = -v
                if best is None or v < best_abs:
                    if v == 1:
                        return i, j
                    best = (i, j)
                    best_abs = v
    return best


def _smith_engine(mat: IntMatrix, want_u: bool, want_v: bool, want_vinv: bool):
    """Shared elimination core.

    Returns (diag_rows, u, vt, vinv) where diag_rows is the diagonalised
    matrix as lists, u collects the row operations, vt holds the columns of
    the column transform v as rows, and vinv is v's inverse.  Any transform
    not requested is None.
    """
    rows, cols = mat.rows, mat.cols
    a = [list(r) for r in mat.data]
    u = [[int(i == j) for j in range(rows)] for i in range(rows)] if want_u else None
    vt = [[int(i == j) for j in range(cols)] for i in range(cols)] if want_v else None
    vinv = [[int(i == j) for j in range(cols)] for i in range(cols)] if want_vinv else None

    t = 0
    limit = min(rows, cols)
    while t < limit:
        pos = _least_abs_pivot(a, t, rows, cols)
        if pos is None:
            break
        i, j = pos
        if i != t:
            a[t], a[i] = a[i], a[t]
            if u is not None:
                u[t], u[i] = u[i], u[t]
        if j != t:
            for r in a:
                r[t], r[j] = r[j], r[t]
            if vt is not None:
                vt[t], vt[j] = vt[j], vt[t]
            if vinv is not None:
                vinv[t], vinv[j] = vinv[j], vinv[t]
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            if u is not None:
                u[t] = [-x for x in u[t]]
        p = a[t][t]
        pivot_row = a[t]

        # Clear column t below the pivot with row operations.
        dirty = False
        for i in range(t + 1, rows):
            x = a[i][t]
            if not x:
                continue
            q = x // p
            if q:
                a[i] = [y - q * z for y, z in zip(a[i], pivot_row)]
                if u is not None:
                    u[i] = [y - q * z for y, z in zip(u[i], u[t])]
            if a[i][t]:
                dirty = True
        if dirty:
            continue  # remainders smaller than the pivot exist; re-pick

        # Column t is clear except for the pivot, so a column operation only
        # changes row t.
        for j in range(t + 1, cols):
            x = pivot_row[j]
            if not x:
                continue
            q = x // p
            if q:
                pivot_row[j] = x - q * p
                if vt is not None:
                    vt[j] = [y - q * z for y, z in zip(vt[j], vt[t])]
                if vinv is not None:
                    vinv[t] = [y + q * z for y, z in zip(vinv[t], vinv[j])]
            if pivot_row[j]:
                dirty = True
        if dirty:
            continue

        # The pivot must divide everything that remains; if not, fold the
        # offending row in and keep reducing.
        if p != 1:
            bad = None
            for i in range(t + 1, rows):
                row = a[i]
                for j in range(t + 1, cols):
                    if row[j] % p:
                        bad = i
                        break
                if bad is not None:
                    break
            if bad is not None:
                a[t] = [y + z for y, z in zip(a[t], a[bad])]
                if u is not None:
                    u[t] = [y + z for y, z in zip(u[t], u[bad])]
                continue
        t += 1

    return a, u, vt, vinv


def smith(mat: IntMatrix) -> SmithDecomposition:
    """Smith normal form with both transforms.

    Returns SmithDecomposition(u, d, v) with u @ mat @ v == d, u and v
    unimodular, the diagonal of d nonnegative and each diagonal entry
    dividing the next.
    """
    diag, u, vt, _ = _smith_engine(mat, want_u=True, want_v=True, want_vinv=False)
    d = IntMatrix(diag, cols=mat.cols)
    return SmithDecomposition(
        u=IntMatrix(u, cols=mat.rows),
        d=d,
        v=IntMatrix(vt, cols=mat.cols).transpose(),
    )


# ----------------------------------------------------------------------------
# Hermite normal form and lattices
# ----------------------------------------------------------------------------


def hermite(mat: IntMatrix) -> IntMatrix:
    """Row-style Hermite normal form with zero rows dropped.

    Pivots are positive, sit on strictly increasing columns, and every entry
    above a pivot is reduced into [0, pivot).  The row span is unchanged, so
    this is the canonical basis of the lattice spanned by mat's rows.
    """
    rows, cols = mat.rows, mat.cols
    a = [list(r) for r in mat.data]
    pr = 0  # next pivot row
    for j in range(cols):
        while True:
            best = None
            best_abs = 0
            for i in range(pr, rows):
                x = a[i][j]
                if x:
                    if x < 0:
                        x = -x
                    if best is None or x < best_abs:
                        best = i
                        best_abs = x
                        if x == 1:
                            break
            if best is None:
                break
            if best != pr:
                a[pr], a[best] = a[best], a[pr]
            if a[pr][j] < 0:
                a[pr] = [-x for x in a[pr]]
            p = a[pr][j]
            done = True
            for i in range(pr + 1, rows):
                x = a[i][j]
                if x:
                    q = x // p
                    a[i] = [y - q * z for y, z in zip(a[i], a[pr])]
                    if a[i][j]:
                        done = False
            if done:
                break
        if pr < rows and a[pr][j]:
            p = a[pr][j]
            for i in range(pr):
                q = a[i][j] // p
                if q:
                    a[i] = [y - q * z for y, z in zip(a[i], a[pr])]
            pr += 1
            if pr == rows:
                break
    return IntMatrix([row for row in a[:pr]], cols=cols)


def lattice_member(basis: IntMatrix, x: Sequence[int]) -> bool:
    """Whether x lies in the lattice spanned by the rows of basis."""
    return lattice_members(basis, [x])[0]


def lattice_members(basis: IntMatrix, vectors: Iterable[Sequence[int]]) -> list[bool]:
    """Membership of many vectors in one lattice.

    The Hermite form of the basis is computed once, so prefer this over
    looping lattice_member when testing a batch.
    """
    h = hermite(basis)
    pivots = [
        (next(k for k, v in enumerate(row) if v), row) for row in h.data
    ]
    out = []
    for x in vectors:
        if len(x) != basis.cols:
            raise ValueError(f"vector of length {len(x)} against {basis.shape} basis")
        r = [int(v) for v in x]
        member = True
        for j, row in pivots:
            if r[j]:
                q, rem = divmod(r[j], row[j])
                if rem:
                    member = False
                    break
                r = [y - q * z for y, z in zip(r, row)]
        out.append(member and not any(r))
    return out


def lattice_kernel(forms: IntMatrix) -> IntMatrix:
    """Canonical basis of {x in Z^n : f(x) = 0 for every row f of forms}.

    Rows of the result are a Hermite-canonical basis of the kernel lattice;
    its rank is n minus the rank of forms.
    """
    n = forms.cols
    if forms.rows == 0:
        return IntMatrix.identity(n)
    m = forms.transpose()  # n x k; we want row vectors x with x @ m == 0
    diag, u, _, _ = _smith_engine(m, want_u=True, want_v=False, want_vinv=False)
    rank = 0
    for i in range(min(n, m.cols)):
        if diag[i][i]:
            rank += 1
    if rank == n:
        return IntMatrix([], cols=n)
    return hermite(IntMatrix(u[rank:], cols=n))


# ----------------------------------------------------------------------------
# Finitely generated abelian groups
# ----------------------------------------------------------------------------


class AbelianGroup:
    """Z^n modulo the row span of a relation matrix.

    Instances come from quotient_group().  The group is recorded both by its
    invariants (torsion orders, free rank) and by an explicit pair of
    coordinate maps:

    * to_smith, n x t: ambient row vector -> Smith coordinates,
    * from_smith, t x n: Smith coordinates -> an ambient representative,

    where t = len(torsion) + free_rank.  Torsion coordinates come first, in
    ascending order of their annihilators, then the free coordinates.
    reduce() composes to_smith with canonical residues, so two ambient
    vectors reduce equally iff their difference lies in the relation lattice.
    """

    def __init__(
        self,
        ambient_rank: int,
        presentation: IntMatrix,
        torsion: tuple[int, ...],
        free_rank: int,
        to_smith: IntMatrix,
        from_smith: IntMatrix,
    ):
        self.ambient_rank = ambient_rank
        self.presentation = presentation
        self.torsion = torsion
        self.free_rank = free_rank
        self.to_smith = to_smith
        self.from_smith = from_smith

    @property
    def coord_count(self) -> int:
        return len(self.torsion) + self.free_rank

    @property
    def is_trivial(self) -> bool:
        return not self.torsion and self.free_rank == 0

    def reduce(self, x: Sequence[int]) -> tuple[int, ...]:
        """Canonical coordinates of the class of x.

        Torsion coordinates are residues in [0, d); free coordinates are
        exact integers.
        """
        y = vec_mat(list(x), self.to_smith)
        for k, d in enumerate(self.torsion):
            y[k] %= d
        return tuple(y)

    def project(self, x: Sequence[int]) -> list[int]:
        """x in Smith coordinates without canonicalisation (stays linear)."""
        return vec_mat(list(x), self.to_smith)

    def lift(self, coords: Sequence[int]) -> list[int]:
        """An ambient representative of the class with these coordinates."""
        return vec_mat(list(coords), self.from_smith)

    def canonical_coords(self, coords: Sequence[int]) -> tuple[int, ...]:
        if len(coords) != self.coord_count:
            raise ValueError(f"expected {self.coord_count} coordinates")
        out = list(int(c) for c in coords)
        for k, d in enumerate(self.torsion):
            out[k] %= d
        return tuple(out)

    def add_coords(self, a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
        return self.canonical_coords([x + y for x, y in zip(a, b)])

    def sub_coords(self, a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
        return self.canonical_coords([x - y for x, y in zip(a, b)])

    def neg_coords(self, a: Sequence[int]) -> tuple[int, ...]:
        return self.canonical_coords([-x for x in a])

    def zero_coords(self) -> tuple[int, ...]:
        return (0,) * self.coord_count

    def __str__(self) -> str:
        parts = [f"Z/{d}" for d in self.torsion]
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append(f"Z^{self.free_rank}")
        return " ⊕ ".join(parts) if parts else "0"

    def __repr__(self) -> str:
        return f"AbelianGroup({self})"


def quotient_group(ambient_rank: int, relations: IntMatrix) -> AbelianGroup:
    """The abelian group Z^ambient_rank / rowspan(relations)."""
    if relations.cols != ambient_rank:
        raise ValueError(
            f"relations have {relations.cols} columns, ambient rank is {ambient_rank}"
        )
    n = ambient_rank
    if relations.rows == 0:
        ident = IntMatrix.identity(n)
        return AbelianGroup(n, relations, (), n, ident, ident)
    diag, _, vt, vinv = _smith_engine(
        relations, want_u=False, want_v=True, want_vinv=True
    )
    diagonal = [diag[i][i] if i < relations.rows else 0 for i in range(n)]
    retained = [i for i in range(n) if diagonal[i] != 1]
    torsion = tuple(diagonal[i] for i in retained if diagonal[i] > 1)
    free_rank = len(retained) - len(torsion)
    # vt rows are the columns of the column transform v.
    to_smith = IntMatrix(
        [[vt[j][i] for j in retained] for i in range(n)], cols=len(retained)
    )
    from_smith = IntMatrix([vinv[j] for j in retained], cols=n)
    return AbelianGroup(n, relations, torsion, free_rank, to_smith, from_smith)
