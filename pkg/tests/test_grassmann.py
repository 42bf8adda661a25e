from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from superforms.errors import DimensionMismatchError, NotInvertibleError, ParameterError
from superforms.grassmann import (
    DEFAULT_Q,
    GrassmannElement,
    gr_conj,
    gr_inv,
    gr_mul,
    gr_parity_body,
)
from superforms.scalars import GaussScalar


def coeffs():
    return st.builds(
        GaussScalar,
        st.fractions(min_value=-4, max_value=4, max_denominator=4),
        st.fractions(min_value=-4, max_value=4, max_denominator=4),
    )


def elements(q=4, parity=None):
    def build(pairs):
        sel = {}
        for mask, c in pairs:
            if parity is not None and mask.bit_count() % 2 != parity:
                continue
            sel[mask] = c
        return GrassmannElement(q, sel)

    return st.builds(
        build,
        st.lists(st.tuples(st.integers(0, (1 << q) - 1), coeffs()), max_size=4),
    )


def xi(q, j):
    return GrassmannElement.generator(q, j)


class TestMultiplication:
    def test_one_inversion_sign(self):
        q = 4
        assert xi(q, 1).mul(xi(q, 2)) == GrassmannElement.monomial(q, [1, 2])
        assert xi(q, 2).mul(xi(q, 1)) == -GrassmannElement.monomial(q, [1, 2])

    def test_exterior_square(self):
        assert xi(4, 1).mul(xi(4, 1)).is_zero()

    def test_top_unit_pair(self):
        q = 4
        one = GrassmannElement.one(q)
        a = one + GrassmannElement.monomial(q, [1, 2])
        b = one - GrassmannElement.monomial(q, [1, 2])
        assert a.mul(b) == one

    def test_q_mismatch(self):
        with pytest.raises(DimensionMismatchError):
            gr_mul(xi(3, 1), xi(4, 1))

    @settings(max_examples=60)
    @given(elements(parity=0), elements(parity=1))
    def test_supercommutativity_even_odd(self, a, b):
        assert a.mul(b) == b.mul(a)

    @settings(max_examples=60)
    @given(elements(parity=1), elements(parity=1))
    def test_supercommutativity_odd_odd(self, a, b):
        assert a.mul(b) == -b.mul(a)

    @settings(max_examples=40)
    @given(elements(q=DEFAULT_Q), elements(q=DEFAULT_Q), elements(q=DEFAULT_Q))
    def test_associativity_q6(self, a, b, c):
        assert a.mul(b).mul(c) == a.mul(b.mul(c))

    @settings(max_examples=40)
    @given(elements(), elements(), elements())
    def test_distributivity(self, a, b, c):
        assert a.mul(b + c) == a.mul(b) + a.mul(c)


class TestConjugation:
    def test_theta_bar_splits_real_imag(self):
        # theta = theta0 + i theta1 with real odd parts conjugates to
        # theta0 - i theta1
        q = 4
        theta = xi(q, 1) + xi(q, 2) * GaussScalar(0, 1)
        assert gr_conj(theta) == xi(q, 1) - xi(q, 2) * GaussScalar(0, 1)

    def test_real_fixed(self):
        q = 4
        a = GrassmannElement.one(q) + GrassmannElement.monomial(q, [1, 3], Fraction(2, 3))
        assert gr_conj(a) == a

    def test_top_imag(self):
        q = 4
        a = GrassmannElement.monomial(q, [1, 2], GaussScalar(0, 1))
        assert gr_conj(a) == -a

    @settings(max_examples=50)
    @given(elements(), elements())
    def test_ring_automorphism(self, a, b):
        assert gr_conj(a.mul(b)) == gr_conj(a).mul(gr_conj(b))
        assert gr_conj(gr_conj(a)) == a


class TestInverse:
    def test_simple(self):
        q = 4
        one = GrassmannElement.one(q)
        a = one + GrassmannElement.monomial(q, [1, 2])
        assert gr_inv(a) == one - GrassmannElement.monomial(q, [1, 2])
        assert gr_inv(GrassmannElement.scalar(q, 2)) == GrassmannElement.scalar(q, Fraction(1, 2))

    def test_zero_body_raises(self):
        with pytest.raises(NotInvertibleError):
            gr_inv(xi(4, 1))

    @settings(max_examples=50)
    @given(elements())
    def test_two_sided(self, a):
        if not a.body():
            return
        inv = gr_inv(a)
        assert a.mul(inv) == GrassmannElement.one(a.q)
        assert inv.mul(a) == GrassmannElement.one(a.q)

    @settings(max_examples=50)
    @given(elements())
    def test_soul_nilpotency(self, a):
        s = a.soul()
        acc = GrassmannElement.one(a.q)
        for _ in range(a.q + 1):
            acc = acc.mul(s)
        assert acc.is_zero()


class TestStructure:
    def test_parity_body_odd(self):
        flag, body, soul = gr_parity_body(GrassmannElement.monomial(4, [1, 2, 3]))
        assert flag == 1 and not body and not soul.is_zero()

    def test_parity_body_even(self):
        a = GrassmannElement.scalar(4, 3) + GrassmannElement.monomial(4, [1, 2])
        flag, body, soul = gr_parity_body(a)
        assert flag == 0 and body == GaussScalar(3)
        assert soul + GrassmannElement.scalar(4, body) == a

    def test_nonhomogeneous(self):
        a = GrassmannElement.one(4) + xi(4, 1)
        assert a.parity() is None

    def test_q_bound(self):
        with pytest.raises(ParameterError):
            GrassmannElement.zero(17)


class TestSerialization:
    @settings(max_examples=50)
    @given(elements())
    def test_roundtrip(self, a):
        assert GrassmannElement.from_json(a.to_json(), a.q) == a

    def test_format(self):
        a = GrassmannElement(4, {0b11: GaussScalar(Fraction(1, 2), Fraction(3, 4))})
        assert a.to_json() == {"[1,2]": "1/2+3/4*i"}
