"""Exact arithmetic in the finite Grassmann algebra on q anticommuting
generators, with Gaussian-rational coefficients.

Conventions
-----------
Generators are xi_1 < xi_2 < ... < xi_q.  A monomial is stored as a bitmask
over {1..q} (bit j-1 set means xi_j present) and always read in increasing
index order.  The sign of a product is the parity of the merge-inversion
count of the two index sets; repeated indices kill the term.  Coefficient
conjugation fixes every generator and conjugates the Gaussian-rational
coefficients, so it is an involutive automorphism of the ring that restricts
to the identity on the real-coefficient subring.

Elements with real coefficients model a real superalgebra A; the full ring
models its complexification.  The body is the coefficient of the empty
monomial; the soul (everything else) is nilpotent of index at most q+1.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import (
    DimensionMismatchError,
    MalformedInputError,
    NotInvertibleError,
    ParameterError,
)
from .scalars import GaussScalar

MAX_GENERATORS = 16
DEFAULT_Q = 6

_ZERO = GaussScalar(0)


def _merge_sign(a: int, b: int) -> int:
    """Parity (0/1) of the number of transpositions needed to merge the
    sorted index sets a and b into one sorted sequence."""
    sign = 0
    t = b
    while t:
        low = t & -t
        j = low.bit_length() - 1
        sign ^= (a >> (j + 1)).bit_count() & 1
        t ^= low
    return sign


class GrassmannElement:
    """Element of the Grassmann algebra over Q(i); immutable by convention.

    coeffs maps bitmask -> GaussScalar and never stores zero coefficients.
    """

    __slots__ = ("q", "coeffs")

    def __init__(self, q: int, coeffs=None):
        if q < 0 or q > MAX_GENERATORS:
            raise ParameterError(f"generator count q={q} outside 0..{MAX_GENERATORS}")
        self.q = q
        clean = {}
        if coeffs:
            for mask, c in coeffs.items():
                if not isinstance(c, GaussScalar):
                    c = GaussScalar(c)
                if c:
                    if mask >> q:
                        raise ParameterError(f"monomial {mask:b} uses generators beyond q={q}")
                    clean[mask] = c
        self.coeffs = clean

    # -- constructors -----------------------------------------------------

    @staticmethod
    def zero(q: int) -> "GrassmannElement":
        return GrassmannElement(q)

    @staticmethod
    def one(q: int) -> "GrassmannElement":
        return GrassmannElement(q, {0: GaussScalar(1)})

    @staticmethod
    def scalar(q: int, value) -> "GrassmannElement":
        return GrassmannElement(q, {0: value if isinstance(value, GaussScalar) else GaussScalar(value)})

    @staticmethod
    def generator(q: int, j: int) -> "GrassmannElement":
        """xi_j, 1-based."""
        if not 1 <= j <= q:
            raise ParameterError(f"generator index {j} outside 1..{q}")
        return GrassmannElement(q, {1 << (j - 1): GaussScalar(1)})

    @staticmethod
    def monomial(q: int, indices, coeff=1) -> "GrassmannElement":
        mask = 0
        for j in indices:
            bit = 1 << (j - 1)
            if mask & bit:
                return GrassmannElement(q)
            mask |= bit
        return GrassmannElement(q, {mask: GaussScalar(coeff) if not isinstance(coeff, GaussScalar) else coeff})

    # -- ring operations ----------------------------------------------------

    def _check_q(self, other: "GrassmannElement"):
        if self.q != other.q:
            raise DimensionMismatchError(
                f"mixed generator counts: {self.q} vs {other.q}"
            )

    def __add__(self, other):
        if isinstance(other, (int, Fraction, GaussScalar)):
            other = GrassmannElement.scalar(self.q, other)
        if not isinstance(other, GrassmannElement):
            return NotImplemented
        self._check_q(other)
        out = dict(self.coeffs)
        for mask, c in other.coeffs.items():
            s = out.get(mask, _ZERO) + c
            if s:
                out[mask] = s
            else:
                out.pop(mask, None)
        return GrassmannElement(self.q, out)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction, GaussScalar)):
            other = GrassmannElement.scalar(self.q, other)
        if not isinstance(other, GrassmannElement):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return GrassmannElement(self.q, {m: -c for m, c in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussScalar)):
            c = other if isinstance(other, GaussScalar) else GaussScalar(other)
            return GrassmannElement(self.q, {m: v * c for m, v in self.coeffs.items()})
        if not isinstance(other, GrassmannElement):
            return NotImplemented
        return self.mul(other)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction, GaussScalar)):
            return self * other
        return NotImplemented

    def mul(self, other: "GrassmannElement", max_degree: int | None = None) -> "GrassmannElement":
        """Product in the Grassmann algebra; optionally truncated to
        monomials of degree <= max_degree."""
        self._check_q(other)
        out: dict[int, GaussScalar] = {}
        for ma, ca in self.coeffs.items():
            for mb, cb in other.coeffs.items():
                if ma & mb:
                    continue
                mask = ma | mb
                if max_degree is not None and mask.bit_count() > max_degree:
                    continue
                c = ca * cb
                if _merge_sign(ma, mb):
                    c = -c
                s = out.get(mask, _ZERO) + c
                if s:
                    out[mask] = s
                else:
                    out.pop(mask, None)
        return GrassmannElement(self.q, out)

    def conjugate(self) -> "GrassmannElement":
        """Conjugate every coefficient; generators are fixed."""
        return GrassmannElement(self.q, {m: c.conjugate() for m, c in self.coeffs.items()})

    def inverse(self, max_degree: int | None = None) -> "GrassmannElement":
        """Exact inverse via the finite geometric series in the soul."""
        b = self.body()
        if not b:
            raise NotInvertibleError("zero body", witness=self.to_json())
        binv = GaussScalar(1) / b
        # x = 1 - a/b has zero body; inverse of a is (1/b) * sum x^k
        x = GrassmannElement.one(self.q) - self * binv
        acc = GrassmannElement.one(self.q)
        term = GrassmannElement.one(self.q)
        for _ in range(self.q):
            term = term.mul(x, max_degree)
            if not term.coeffs:
                break
            acc = acc + term
        return acc * binv

    # -- structure ----------------------------------------------------------

    def body(self) -> GaussScalar:
        return self.coeffs.get(0, _ZERO)

    def soul(self) -> "GrassmannElement":
        return GrassmannElement(self.q, {m: c for m, c in self.coeffs.items() if m})

    def parity(self) -> int | None:
        """0 for even, 1 for odd, None for nonhomogeneous or zero-ambiguous.

        The zero element counts as even (and odd); we report 0."""
        if not self.coeffs:
            return 0
        parities = {m.bit_count() & 1 for m in self.coeffs}
        if len(parities) == 1:
            return parities.pop()
        return None

    def is_even(self) -> bool:
        return self.parity() == 0

    def is_odd(self) -> bool:
        return self.parity() == 1 or not self.coeffs

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_real(self) -> bool:
        return all(c.is_real() for c in self.coeffs.values())

    def degree(self) -> int:
        """Largest monomial degree present; 0 for the zero element."""
        return max((m.bit_count() for m in self.coeffs), default=0)

    def min_soul_degree(self) -> int:
        """Smallest nonzero-monomial degree present; q+1 if soul-free."""
        return min((m.bit_count() for m in self.coeffs if m), default=self.q + 1)

    def graded_part(self, degree: int) -> "GrassmannElement":
        return GrassmannElement(
            self.q, {m: c for m, c in self.coeffs.items() if m.bit_count() == degree}
        )

    def truncated(self, max_degree: int) -> "GrassmannElement":
        return GrassmannElement(
            self.q, {m: c for m, c in self.coeffs.items() if m.bit_count() <= max_degree}
        )

    # -- comparisons ----------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, GaussScalar)):
            other = GrassmannElement.scalar(self.q, other)
        if not isinstance(other, GrassmannElement):
            return NotImplemented
        return self.q == other.q and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.q, frozenset(self.coeffs.items())))

    def __bool__(self):
        return bool(self.coeffs)

    # -- text / wire form ------------------------------------------------------

    @staticmethod
    def _mask_to_indices(mask: int):
        out = []
        j = 1
        while mask:
            if mask & 1:
                out.append(j)
            mask >>= 1
            j += 1
        return out

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for mask in sorted(self.coeffs, key=lambda m: (m.bit_count(), m)):
            c = self.coeffs[mask]
            mono = "".join(f"x{j}" for j in self._mask_to_indices(mask)) or "1"
            terms.append(f"({c})*{mono}" if mask else f"({c})")
        return " + ".join(terms)

    def __repr__(self):
        return f"GrassmannElement(q={self.q}, {self})"

    def to_json(self) -> dict:
        """Map from index-list strings like "[1,2]" to scalar strings."""
        out = {}
        for mask in sorted(self.coeffs, key=lambda m: (m.bit_count(), m)):
            key = "[" + ",".join(str(j) for j in self._mask_to_indices(mask)) + "]"
            out[key] = str(self.coeffs[mask])
        return out

    @staticmethod
    def from_json(obj: dict, q: int) -> "GrassmannElement":
        coeffs = {}
        for key, val in obj.items():
            key = key.strip()
            if not (key.startswith("[") and key.endswith("]")):
                raise MalformedInputError(f"bad monomial key {key!r}")
            inner = key[1:-1].strip()
            mask = 0
            if inner:
                for tok in inner.split(","):
                    j = int(tok)
                    if not 1 <= j <= q:
                        raise MalformedInputError(f"index {j} outside 1..{q} in {key!r}")
                    bit = 1 << (j - 1)
                    if mask & bit:
                        raise MalformedInputError(f"repeated index in {key!r}")
                    mask |= bit
            coeffs[mask] = GaussScalar.parse(val)
        return GrassmannElement(q, coeffs)


# -- operation-style wrappers --------------------------------------------------


def gr_mul(a: GrassmannElement, b: GrassmannElement) -> GrassmannElement:
    return a.mul(b)


def gr_conj(a: GrassmannElement) -> GrassmannElement:
    return a.conjugate()


def gr_inv(a: GrassmannElement) -> GrassmannElement:
    return a.inverse()


def gr_parity_body(a: GrassmannElement):
    """Returns (parity flag, body, soul); parity is 0, 1 or None."""
    return a.parity(), a.body(), a.soul()
