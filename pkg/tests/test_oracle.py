import pytest

from ffroots import oracle
from ffroots.ecroot import Curve
from ffroots.polyring import Poly


def test_examples():
    assert oracle.all_rth_roots(13, 2, 4) == {2, 11}
    assert oracle.all_rth_roots(19, 3, 8) == {2, 3, 14}
    assert oracle.all_rth_roots(13, 2, 5) == set()
    assert oracle.all_nonresidues(13, 2) == {2, 5, 6, 7, 8, 11}
    assert oracle.trial_division(55) == 5
    assert oracle.trial_division(97) == 97
    assert oracle.element_orders(13)[2] == 12
    assert oracle.poly_roots_bruteforce(Poly([-4, 0, 1], 13)) == {2, 11}
    assert len(oracle.curve_points(Curve(13, 1, 0))) == 19


def test_size_guards():
    with pytest.raises(ValueError):
        oracle.all_rth_roots(7919, 2, 3)
    with pytest.raises(ValueError):
        oracle.all_rth_roots(15, 2, 4)
    assert oracle.all_rth_roots(7919, 2, 4, bound=10**4) == {2, 7917}


def test_root_counts_are_zero_or_r():
    for q in (13, 19, 31, 37, 43):
        for r in (2, 3, 5, 7):
            if (q - 1) % r:
                continue
            for b in range(1, q):
                assert len(oracle.all_rth_roots(q, r, b)) in (0, r)


def test_nonresidues_complement_residues():
    q, r = 31, 3
    res = {pow(x, r, q) for x in range(1, q)}
    assert oracle.all_nonresidues(q, r) | res == set(range(1, q))
    assert len(res) == (q - 1) // r
