import pytest

from lrnsolve.model import EquationInstance, SearchBounds, Solution, SolutionSet, verify


def test_solution_refuses_non_solutions():
    Solution(7, 11, 1169, 9, 0, 7)
    with pytest.raises(ValueError):
        Solution(7, 11, 1169, 9, 0, 8)


def test_solution_equality_ignores_provenance():
    a = Solution(3, 7, 9, 5, 0, 3, "oracle")
    b = Solution(3, 7, 9, 5, 0, 3, "p3-unit-flipped", {"u": 1})
    assert a == b and hash(a) == hash(b)


def test_solution_set_sorted_and_deduplicated():
    sols = [Solution(1, 73, 485, 7, 0, 6), Solution(1, 73, 485, 49, 0, 3), Solution(1, 73, 485, 49, 0, 3)]
    s = SolutionSet.of(sols)
    assert [x.n for x in s] == [3, 6]
    assert s.tuples() == {(485, 49, 0, 3), (485, 7, 0, 6)}


def test_bounds_validation_and_restriction():
    with pytest.raises(ValueError):
        SearchBounds(n_max=2)
    with pytest.raises(ValueError):
        SearchBounds(y_max=0)
    with pytest.raises(ValueError):
        SearchBounds(x_max=0)
    b = SearchBounds(y_max=20)
    s = SolutionSet.of([Solution(1, 73, 485, 49, 0, 3), Solution(1, 73, 485, 7, 0, 6)])
    assert s.restricted(b).tuples() == {(485, 7, 0, 6)}
    assert b.with_(y_max=100).admits(Solution(1, 73, 485, 49, 0, 3))


def test_instance_and_verify_domain():
    with pytest.raises(ValueError):
        EquationInstance(0, 1, 3)
    with pytest.raises(ValueError):
        EquationInstance(1, 1, 2)
    assert not verify(1, 1, 0, 1, 0, 3)
    assert verify(1, 1, 1, 1, 5, 17)
