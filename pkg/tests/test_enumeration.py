"""Solution enumeration, Jacobsthal counts, cyclic classes, and sweeps."""

import itertools

import pytest

from quiddity import (
    CapExceeded,
    cyclic_classes,
    entries_one_check,
    is_gamma2_solution,
    jacobsthal_count,
    solution_report,
    solutions_gamma2,
    solutions_pm_identity,
    theorem_sweep,
)


def _mul2(x, y):
    return (
        (x[0] * y[0] + x[1] * y[2]) & 1,
        (x[0] * y[1] + x[1] * y[3]) & 1,
        (x[2] * y[0] + x[3] * y[2]) & 1,
        (x[2] * y[1] + x[3] * y[3]) & 1,
    )


def _naive_solutions(n):
    out = []
    for bits in itertools.product((0, 1), repeat=n):
        m = (1, 0, 0, 1)
        for c in bits:
            m = _mul2(m, (c, 1, 1, 0))
        if m == (1, 0, 0, 1):
            out.append(bits)
    return out


def test_solutions_examples():
    assert solutions_gamma2(2) == [(0, 0)]
    assert solutions_gamma2(3) == [(1, 1, 1)]
    assert solutions_gamma2(4) == [(0, 0, 0, 0), (0, 1, 0, 1), (1, 0, 1, 0)]
    assert solutions_gamma2(1) == []


def test_solutions_match_naive_filter():
    for n in range(1, 11):
        assert solutions_gamma2(n) == _naive_solutions(n)


def test_solutions_are_sorted_and_valid():
    for n in (5, 8, 11):
        sols = solutions_gamma2(n)
        assert sols == sorted(sols)
        for s in sols:
            assert is_gamma2_solution(s)


def test_rotations_of_solutions_are_solutions():
    for n in range(2, 11):
        for s in solutions_gamma2(n):
            for k in range(n):
                assert is_gamma2_solution(s[k:] + s[:k])


def test_jacobsthal_closed_form():
    # re-derive the closed form from the brute-force counts before trusting it
    for n in range(1, 11):
        assert jacobsthal_count(n) == len(_naive_solutions(n))
    assert [jacobsthal_count(n) for n in (2, 3, 4, 5)] == [1, 1, 3, 5]
    assert jacobsthal_count(10) == 171
    with pytest.raises(ValueError):
        jacobsthal_count(0)


def test_counts_match_closed_form():
    for n in range(2, 16):
        assert len(solutions_gamma2(n)) == jacobsthal_count(n)


def test_cyclic_classes():
    assert cyclic_classes(solutions_gamma2(4)) == [(0, 0, 0, 0), (0, 1, 0, 1)]
    assert cyclic_classes(solutions_gamma2(5)) == [(0, 0, 1, 1, 1)]
    assert cyclic_classes([]) == []
    assert cyclic_classes([(1, 0), (0, 1)]) == [(0, 1)]


def test_solutions_pm_identity_examples():
    assert solutions_pm_identity(3) == [((1, 1, 1), -1)]
    four = solutions_pm_identity(4)
    assert ((1, 2, 1, 2), -1) in four
    assert ((2, 1, 2, 1), -1) in four
    seven = dict(solutions_pm_identity(7))
    assert seven[(2, 1, 2, 1, 1, 1, 1)] == 1


def test_solutions_pm_identity_entry_cap():
    assert solutions_pm_identity(4, entry_cap=1) == []
    wide = solutions_pm_identity(4, entry_cap=3)
    assert ((1, 2, 1, 2), -1) in wide
    assert all(all(1 <= e <= 3 for e in s) for s, _ in wide)


def test_solutions_pm_identity_signs_verified():
    from quiddity import MAT_IDENTITY, MAT_MINUS_IDENTITY, m_product

    for n in range(2, 7):
        for s, sign in solutions_pm_identity(n):
            expected = MAT_IDENTITY if sign == 1 else MAT_MINUS_IDENTITY
            assert m_product(s) == expected


def test_entries_one_check():
    assert entries_one_check([(1, 1, 1)])
    assert entries_one_check([(1, 3, 1, 2, 2)])
    assert not entries_one_check([(2, 2)])
    for n in range(3, 7):
        assert entries_one_check([s for s, _ in solutions_pm_identity(n)])


def test_solution_report():
    report = solution_report(4)
    assert report.tuple_count == 3
    assert report.class_count == 2
    assert report.expected_count == 3
    assert report.match
    assert report.tuples == ((0, 0, 0, 0), (0, 1, 0, 1), (1, 0, 1, 0))
    assert report.class_reps == ((0, 0, 0, 0), (0, 1, 0, 1))


def test_caps():
    with pytest.raises(CapExceeded):
        solutions_gamma2(21)
    with pytest.raises(CapExceeded):
        solutions_pm_identity(9)
    with pytest.raises(ValueError):
        solutions_gamma2(0)


def test_theorem_sweeps_find_no_counterexamples():
    assert theorem_sweep("thm1i", 3, 6).ok
    assert theorem_sweep("thm1ii", 3, 8).ok
    assert theorem_sweep("thm2", 3, 6).ok
    assert theorem_sweep("thm3", 3, 6).ok
    assert theorem_sweep("remark", 3, 7).ok
    with pytest.raises(ValueError):
        theorem_sweep("thm4")


def test_sweep_reports_checked_counts():
    report = theorem_sweep("thm1i", 3, 4)
    # 1 triangle dissection, 3 quadrilateral dissections
    assert report.checked == 4
    assert report.counterexamples == ()
