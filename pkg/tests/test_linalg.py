from fractions import Fraction

from kmbryl.linalg import nullspace, rank, signature, solve

F = Fraction


def test_rank_and_nullspace():
    m = [[F(1), F(2)], [F(2), F(4)]]
    assert rank(m) == 1
    ker = nullspace(m)
    assert len(ker) == 1
    v = ker[0]
    assert v[0] + 2 * v[1] == 0


def test_solve_consistent_and_inconsistent():
    m = [[F(1), F(1)], [F(1), F(-1)]]
    sol = solve(m, [F(3), F(1)])
    assert sol == (F(2), F(1))
    m2 = [[F(1), F(1)], [F(2), F(2)]]
    assert solve(m2, [F(1), F(3)]) is None


def test_solve_overdetermined():
    m = [[F(1), F(0)], [F(0), F(1)], [F(1), F(1)]]
    assert solve(m, [F(2), F(5), F(7)]) == (F(2), F(5))
    assert solve(m, [F(2), F(5), F(8)]) is None


def test_signature_definite():
    assert signature([[F(2), F(0)], [F(0), F(3)]]) == (2, 0, 0)
    assert signature([[F(-1)]]) == (0, 1, 0)


def test_signature_affine_gram():
    # D A for the rank-2 affine matrix: one positive, one zero
    g = [[F(2), F(-2)], [F(-2), F(2)]]
    assert signature(g) == (1, 0, 1)


def test_signature_hyperbolic_pivot():
    # zero diagonal forces the off-diagonal (hyperbolic) elimination step
    g = [[F(0), F(1)], [F(1), F(0)]]
    assert signature(g) == (1, 1, 0)


def test_inputs_not_mutated():
    m = [[F(1), F(2)], [F(3), F(4)]]
    snapshot = [row[:] for row in m]
    rank(m)
    nullspace(m)
    solve(m, [F(1), F(1)])
    signature([[F(1), F(0)], [F(0), F(1)]])
    assert m == snapshot
