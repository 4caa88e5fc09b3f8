"""Tests for the exact integer linear algebra core."""

import itertools
import random

import pytest
import sympy
from sympy.matrices.normalforms import hermite_normal_form, smith_normal_form

from linestab.exactalg import (
    IntMatrix,
    hermite,
    lattice_kernel,
    lattice_member,
    lattice_members,
    quotient_group,
    smith,
    vec_mat,
)


def diag_of(m):
    return [m.data[i][i] for i in range(min(m.rows, m.cols))]


def check_decomposition(a):
    """All SmithDecomposition invariants, with sympy as the diagonal oracle."""
    dec = smith(a)
    assert (dec.u @ a @ dec.v) == dec.d
    # off-diagonal zero, diagonal nonnegative, divisibility chain
    for i, row in enumerate(dec.d.data):
        for j, x in enumerate(row):
            if i != j:
                assert x == 0
    d = diag_of(dec.d)
    assert all(x >= 0 for x in d)
    for x, y in zip(d, d[1:]):
        assert (x == 0 and y == 0) or (x != 0 and y % x == 0)
    if a.rows and a.cols:
        assert abs(sympy.Matrix(dec.u.to_lists()).det()) == 1
        assert abs(sympy.Matrix(dec.v.to_lists()).det()) == 1
        oracle = smith_normal_form(sympy.Matrix(a.to_lists()))
        oracle_diag = [abs(int(oracle[i, i])) for i in range(min(a.rows, a.cols))]
        assert d == oracle_diag
    return dec


def test_smith_two_by_two_golden():
    """gcd 2, product of invariant factors |det| = 8, so diag(2, 4)."""
    dec = check_decomposition(IntMatrix([[2, 4], [6, 8]]))
    assert diag_of(dec.d) == [2, 4]


def test_smith_identity():
    dec = smith(IntMatrix.identity(3))
    assert dec.d == IntMatrix.identity(3)


def test_smith_zero():
    dec = smith(IntMatrix.zeros(2, 3))
    assert dec.d == IntMatrix.zeros(2, 3)
    assert dec.u == IntMatrix.identity(2)
    assert dec.v == IntMatrix.identity(3)


def test_smith_empty_shapes():
    dec = smith(IntMatrix([], cols=4))
    assert dec.d.shape == (0, 4)
    assert dec.v == IntMatrix.identity(4)


def test_smith_random_suite():
    """500 random matrices, dims <= 6, entries in [-9, 9]."""
    rng = random.Random(20260814)
    for _ in range(500):
        rows = rng.randint(1, 6)
        cols = rng.randint(1, 6)
        a = IntMatrix(
            [[rng.randint(-9, 9) for _ in range(cols)] for _ in range(rows)]
        )
        check_decomposition(a)


def test_smith_deterministic():
    a = IntMatrix([[6, 4, 2], [8, 0, -10], [3, 3, 3]])
    first = smith(a)
    second = smith(a)
    assert first.u == second.u and first.d == second.d and first.v == second.v


# ----------------------------------------------------------------------------
# quotient groups
# ----------------------------------------------------------------------------


def test_quotient_primitive_row():
    g = quotient_group(4, IntMatrix([[1, 1, 1, 1]]))
    assert g.torsion == () and g.free_rank == 3


def test_quotient_no_relations():
    g = quotient_group(5, IntMatrix([], cols=5))
    assert g.torsion == () and g.free_rank == 5
    assert g.reduce([1, 2, 3, 4, 5]) == (1, 2, 3, 4, 5)


def test_quotient_single_torsion():
    g = quotient_group(1, IntMatrix([[3]]))
    assert g.torsion == (3,) and g.free_rank == 0
    assert str(g) == "Z/3"
    assert g.reduce([5]) == (2,)


def test_quotient_mixed():
    g = quotient_group(3, IntMatrix([[2, 0, 0]]))
    assert g.torsion == (2,) and g.free_rank == 2
    assert str(g) == "Z/2 ⊕ Z^2"


def test_group_str_rendering():
    assert str(quotient_group(2, IntMatrix.identity(2))) == "0"
    assert str(quotient_group(1, IntMatrix([], cols=1))) == "Z"
    g = quotient_group(3, IntMatrix([[2, 0, 0], [0, 6, 0]]))
    assert str(g) == "Z/2 ⊕ Z/6 ⊕ Z"


def test_quotient_row_shuffle_invariance():
    rng = random.Random(7)
    for _ in range(50):
        rows = rng.randint(1, 5)
        cols = rng.randint(1, 5)
        rel = [[rng.randint(-6, 6) for _ in range(cols)] for _ in range(rows)]
        g = quotient_group(cols, IntMatrix(rel))
        shuffled = rel[:]
        rng.shuffle(shuffled)
        h = quotient_group(cols, IntMatrix(shuffled))
        assert (g.torsion, g.free_rank) == (h.torsion, h.free_rank)
        # adding one relation row to another does not change the group
        if rows >= 2:
            folded = [row[:] for row in rel]
            folded[0] = [x + y for x, y in zip(folded[0], folded[1])]
            f = quotient_group(cols, IntMatrix(folded))
            assert (g.torsion, g.free_rank) == (f.torsion, f.free_rank)


def test_reduce_separates_non_relations():
    g = quotient_group(4, IntMatrix([[1, 1, 1, 1]]))
    x = [1, 0, 0, 0]
    y = [0, 0, 0, 1]
    # x - y = (1,0,0,-1) is not a multiple of (1,1,1,1)
    assert g.reduce(x) != g.reduce(y)
    z = [x_i - s for x_i, s in zip(x, [1, 1, 1, 1])]
    assert g.reduce(x) == g.reduce(z)


def test_reduce_zero_vector():
    g = quotient_group(3, IntMatrix([[2, 4, 4], [0, 6, 12]]))
    assert g.reduce([0, 0, 0]) == (0,) * g.coord_count


def test_reduce_is_homomorphism():
    rng = random.Random(99)
    g = quotient_group(4, IntMatrix([[2, 0, 4, 2], [0, 3, 3, 0]]))
    for _ in range(100):
        x = [rng.randint(-20, 20) for _ in range(4)]
        y = [rng.randint(-20, 20) for _ in range(4)]
        both = g.reduce([a + b for a, b in zip(x, y)])
        assert both == g.add_coords(g.reduce(x), g.reduce(y))


def test_reduce_matches_lattice_membership():
    """reduce(x) == reduce(y) iff x - y lies in the relation lattice."""
    rng = random.Random(4242)
    for _ in range(40):
        cols = rng.randint(2, 4)
        rel = IntMatrix(
            [[rng.randint(-4, 4) for _ in range(cols)] for _ in range(rng.randint(1, 3))]
        )
        g = quotient_group(cols, rel)
        x = [rng.randint(-8, 8) for _ in range(cols)]
        y = [rng.randint(-8, 8) for _ in range(cols)]
        diff = [a - b for a, b in zip(x, y)]
        assert (g.reduce(x) == g.reduce(y)) == lattice_member(rel, diff)


def test_to_smith_from_smith_round_trip():
    g = quotient_group(4, IntMatrix([[2, 0, 4, 2], [0, 3, 3, 0]]))
    rng = random.Random(31)
    for _ in range(50):
        coords = [rng.randint(-9, 9) for _ in range(g.coord_count)]
        back = g.reduce(g.lift(coords))
        assert back == g.canonical_coords(coords)


# ----------------------------------------------------------------------------
# Hermite form and lattices
# ----------------------------------------------------------------------------


def test_hermite_golden():
    h = hermite(IntMatrix([[2, 4], [6, 8]]))
    # sympy's HNF is column-style; transpose around it for the row-style oracle
    oracle = hermite_normal_form(sympy.Matrix([[2, 4], [6, 8]]).T).T
    assert sympy.Matrix(h.to_lists()) == oracle
    assert h.to_lists() == [[2, 0], [0, 4]]


def test_hermite_random_against_sympy():
    """Row span agrees with sympy (sympy right-justifies pivots, so compare
    both matrices through sympy's canonical form), and our own shape contract
    holds: pivots positive on strictly increasing columns, entries above each
    pivot reduced into [0, pivot)."""
    rng = random.Random(1212)
    for _ in range(60):
        rows = rng.randint(1, 5)
        cols = rng.randint(1, 5)
        a = IntMatrix([[rng.randint(-7, 7) for _ in range(cols)] for _ in range(rows)])
        h = hermite(a)
        if a.is_zero():
            assert h.rows == 0
            continue
        canonical_in = hermite_normal_form(sympy.Matrix(a.to_lists()).T).T
        canonical_out = hermite_normal_form(sympy.Matrix(h.to_lists()).T).T
        assert canonical_in == canonical_out
        last_pivot = -1
        for row in h.data:
            j = next(k for k, v in enumerate(row) if v)
            assert j > last_pivot
            assert row[j] > 0
            for above in h.data[: h.data.index(row)]:
                assert 0 <= above[j] < row[j]
            last_pivot = j


def test_hermite_drops_zero_rows():
    h = hermite(IntMatrix([[1, 1], [2, 2], [0, 0]]))
    assert h.to_lists() == [[1, 1]]


def test_lattice_member_goldens():
    basis = IntMatrix([[2, 0], [0, 2]])
    assert lattice_member(basis, [2, 2])
    assert not lattice_member(basis, [1, 0])
    assert lattice_member(IntMatrix([[1, 1]]), [3, 3])
    assert not lattice_member(IntMatrix([[1, 1]]), [3, 2])


def brute_force_member(rows, x, bound=12):
    """Small-coefficient enumeration oracle for lattice membership."""
    for coeffs in itertools.product(range(-bound, bound + 1), repeat=len(rows)):
        probe = [0] * len(x)
        for c, row in zip(coeffs, rows):
            for i, v in enumerate(row):
                probe[i] += c * v
        if probe == list(x):
            return True
    return False


def test_lattice_member_brute_force_2x2():
    # Cramer plus Hadamard bound the solution coefficients by 36 for entries
    # in [-3,3] and targets in [-6,6], so bound=36 makes the oracle exact.
    rng = random.Random(555)
    for _ in range(30):
        rows = [[rng.randint(-3, 3) for _ in range(2)] for _ in range(2)]
        x = [rng.randint(-6, 6) for _ in range(2)]
        assert lattice_member(IntMatrix(rows), x) == brute_force_member(rows, x, bound=36)


def test_lattice_member_rational_solve_3x3():
    """Independent oracle: unique rational solution, then integrality check."""
    rng = random.Random(556)
    seen = 0
    while seen < 15:
        rows = [[rng.randint(-2, 2) for _ in range(3)] for _ in range(3)]
        b = sympy.Matrix(rows)
        if b.det() == 0:
            continue
        seen += 1
        x = [rng.randint(-4, 4) for _ in range(3)]
        coeffs = b.T.solve(sympy.Matrix(x))
        expected = all(c == int(c) for c in coeffs)
        assert lattice_member(IntMatrix(rows), x) == expected


def test_lattice_member_constructed_members():
    """Anything built as an integer combination of the rows is a member."""
    rng = random.Random(557)
    for _ in range(25):
        n = rng.randint(2, 4)
        rows = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(rng.randint(1, 3))]
        x = [0] * n
        for row in rows:
            c = rng.randint(-9, 9)
            x = [a + c * v for a, v in zip(x, row)]
        assert lattice_member(IntMatrix(rows), x)


def test_lattice_members_batch_matches_single():
    rng = random.Random(558)
    basis = IntMatrix([[2, 0, 1], [0, 3, 1]])
    vectors = [[rng.randint(-6, 6) for _ in range(3)] for _ in range(40)]
    vectors += [[2, 3, 2], [4, -3, 1], [0, 0, 0]]  # combinations of the rows
    batch = lattice_members(basis, vectors)
    assert batch == [lattice_member(basis, v) for v in vectors]
    assert any(batch) and not all(batch)


def test_lattice_kernel_goldens():
    assert lattice_kernel(IntMatrix([[1, 1]])).to_lists() == [[1, -1]]
    assert lattice_kernel(IntMatrix([[2, 4]])).to_lists() == [[2, -1]]
    assert lattice_kernel(IntMatrix([], cols=3)) == IntMatrix.identity(3)


def test_lattice_kernel_rank_and_soundness():
    rng = random.Random(808)
    for _ in range(40):
        n = rng.randint(2, 5)
        k = rng.randint(1, 4)
        forms = IntMatrix([[rng.randint(-5, 5) for _ in range(n)] for _ in range(k)])
        ker = lattice_kernel(forms)
        rank = sympy.Matrix(forms.to_lists()).rank()
        assert ker.rows == n - rank
        for row in ker.data:
            for form in forms.data:
                assert sum(a * b for a, b in zip(row, form)) == 0


def test_lattice_kernel_is_saturated():
    """Any integer solution of the forms must lie in the returned lattice."""
    rng = random.Random(809)
    for _ in range(20):
        n = rng.randint(2, 4)
        forms = IntMatrix([[rng.randint(-4, 4) for _ in range(n)]])
        ker = lattice_kernel(forms)
        for _ in range(20):
            x = [rng.randint(-6, 6) for _ in range(n)]
            if sum(a * b for a, b in zip(x, forms.data[0])) == 0:
                assert lattice_member(ker, x)


def test_vec_mat_shape_check():
    with pytest.raises(ValueError):
        vec_mat([1, 2, 3], IntMatrix.identity(2))


def test_matmul_shape_check():
    with pytest.raises(ValueError):
        IntMatrix.identity(2) @ IntMatrix.identity(3)


def test_reduce_dimension_mismatch():
    g = quotient_group(2, IntMatrix([[2, 0]]))
    with pytest.raises(ValueError):
        g.reduce([1, 2, 3])
