from fractions import Fraction as F

from hypothesis import given, strategies as st

from orthology_lab.linalg import rank, rref, solve

small = st.fractions(min_value=-9, max_value=9, max_denominator=5)


def test_unique_solution():
    sol = solve([[1, 1], [1, -1]], [3, 1])
    assert sol.unique
    assert sol.point() == (2, 1)


def test_inconsistent_system():
    assert solve([[1, 1], [2, 2]], [1, 3]) is None


def test_free_variables():
    sol = solve([[1, 2, 3]], [6])
    assert sol.rank == 1 and sol.free == (1, 2)
    x = sol.point([F(1), F(1)])
    assert x == (1, 1, 1)


def test_rank_examples():
    assert rank([[1, 2], [2, 4]]) == 1
    assert rank([[0, 0], [0, 0]]) == 0
    assert rank([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == 3


def test_rref_pivots():
    m, pivots = rref([[0, 2, 4], [1, 1, 1]])
    assert pivots == (0, 1)
    assert m[0] == [1, 0, -1] and m[1] == [0, 1, 2]


@given(st.lists(st.lists(small, min_size=4, max_size=4), min_size=1, max_size=4), st.data())
def test_solutions_satisfy_system(A, data):
    x_true = data.draw(st.lists(small, min_size=4, max_size=4))
    b = [sum(a * x for a, x in zip(row, x_true)) for row in A]
    sol = solve(A, b)
    assert sol is not None
    free = data.draw(st.lists(small, min_size=len(sol.free), max_size=len(sol.free)))
    x = sol.point(free)
    for row, rhs in zip(A, b):
        assert sum(a * v for a, v in zip(row, x)) == rhs
