import pytest
from hypothesis import given, strategies as st

from ffroots.errors import OrderAnomaly, ZeroDivisorWitness
from ffroots.modring import (
    FactoredInteger,
    Modulus,
    RingElement,
    inverse,
    inverse_mod,
    order,
    parse_natural,
)

M13 = Modulus(13)


def test_basic_arithmetic():
    assert M13(5) * M13(8) == 1
    x = M13(7)
    assert x + 0 == x
    assert x - x == 0
    assert M13(2) ** 12 == 1
    assert M13(2) ** 6 == 12
    assert x**0 == 1


def test_values_are_canonical():
    assert M13(-1).value == 12
    assert RingElement(27, 13).value == 1
    assert 3 - M13(5) == M13(11)


def test_inverse_examples():
    assert inverse(RingElement(3, 10)) == 7
    assert inverse(RingElement(1, 10**30 + 7)) == 1
    with pytest.raises(ZeroDivisorWitness) as exc:
        inverse(RingElement(2, 10))
    assert exc.value.g == 2 and exc.value.verify()
    with pytest.raises(ZeroDivisionError):
        inverse(RingElement(0, 13))


def test_division_and_negative_powers():
    assert M13(1) / M13(5) == 8
    assert M13(5) ** -1 == 8


def test_modulus_mismatch_rejected():
    with pytest.raises(ValueError):
        M13(1) + RingElement(1, 17)


def test_modulus_must_be_at_least_two():
    with pytest.raises(ValueError):
        Modulus(1)


def test_immutable():
    x = M13(3)
    with pytest.raises(AttributeError):
        x.value = 4


def test_order_examples():
    g = FactoredInteger(((2, 2), (3, 1)))
    assert g.value == 12
    assert order(M13(12), g) == 2
    assert order(M13(2), g) == 12
    assert order(M13(1), g) == 1


def test_order_anomaly_on_composite():
    # 2^14 != 1 mod 15, so 14 is not a multiple of the order
    with pytest.raises(OrderAnomaly) as exc:
        order(RingElement(2, 15), FactoredInteger(((2, 1), (7, 1))))
    assert exc.value.verify()


def test_parse_natural():
    assert parse_natural("0x1F") == 31
    assert parse_natural("1_000") == 1000
    with pytest.raises(ValueError):
        parse_natural("-3")


@given(st.integers(2, 2**80), st.integers(0, 2**64), st.integers(0, 2**64), st.integers(0, 2**80))
def test_power_is_additive(n, a, b, x):
    v = RingElement(x, n)
    assert v ** (a + b) == v**a * v**b


@given(st.integers(2, 2**80), st.integers(1, 2**80))
def test_inverse_or_witness(n, x):
    try:
        y = inverse_mod(x, n)
    except ZeroDivisorWitness as w:
        assert w.verify()
    except ZeroDivisionError:
        assert x % n == 0
    else:
        assert x * y % n == 1


@given(st.sampled_from([13, 97, 193, 7681, 65537]), st.integers(1, 10**6))
def test_order_divides_group_order(p, x):
    from ffroots.rthroot import factor_group_order

    prof = factor_group_order(p)
    v = RingElement(x % (p - 1) + 1, p)
    o = order(v, prof.group_order())
    assert (p - 1) % o == 0 and v**o == 1
