"""Gaussian rationals: exact complex scalars a + b*i with Fraction parts.

All higher layers (Grassmann algebra, supermatrices, structure constants)
are built over this field, so every identity in the library is checked by
exact equality, never by tolerance.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import MalformedInputError, NotInvertibleError


class GaussScalar:
    """An element of Q(i). Immutable by convention; hashable."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    # -- arithmetic -------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, GaussScalar):
            return other
        if isinstance(other, (int, Fraction)):
            return GaussScalar(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussScalar(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussScalar(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussScalar(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = o.re * o.re + o.im * o.im
        if n == 0:
            raise NotInvertibleError("division by zero scalar")
        return GaussScalar(
            (self.re * o.re + self.im * o.im) / n,
            (self.im * o.re - self.re * o.im) / n,
        )

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __neg__(self):
        return GaussScalar(-self.re, -self.im)

    def __pow__(self, k: int):
        if k < 0:
            return GaussScalar(1) / self ** (-k)
        out = GaussScalar(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conjugate(self) -> "GaussScalar":
        return GaussScalar(self.re, -self.im)

    # -- predicates -------------------------------------------------------

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def is_real(self) -> bool:
        return self.im == 0

    def is_integer(self) -> bool:
        return self.im == 0 and self.re.denominator == 1

    # -- text form ----------------------------------------------------------
    # Canonical strings: "0", "3/4", "-2", "1*i", "-1/2*i", "3+1/2*i",
    # "3-1/2*i".  parse() is the exact inverse of str().

    def __str__(self):
        if not self:
            return "0"
        parts = []
        if self.re:
            parts.append(str(self.re))
        if self.im:
            sign = "-" if self.im < 0 else ("+" if parts else "")
            parts.append(f"{sign}{abs(self.im)}*i")
        return "".join(parts)

    def __repr__(self):
        return f"GaussScalar('{self}')"

    @staticmethod
    def parse(text: str) -> "GaussScalar":
        s = text.strip().replace(" ", "")
        if not s:
            raise MalformedInputError("empty scalar string")
        try:
            if s in ("i", "+i"):
                return GaussScalar(0, 1)
            if s == "-i":
                return GaussScalar(0, -1)
            if s.endswith("*i"):
                body = s[:-2]
                for k in range(len(body) - 1, 0, -1):
                    if body[k] in "+-" and body[k - 1].isdigit():
                        return GaussScalar(Fraction(body[:k]), Fraction(body[k:]))
                return GaussScalar(0, Fraction(body))
            return GaussScalar(Fraction(s), 0)
        except (ValueError, ZeroDivisionError) as exc:
            raise MalformedInputError(f"cannot parse scalar {text!r}") from exc


ZERO = GaussScalar(0)
ONE = GaussScalar(1)
I = GaussScalar(0, 1)


def scalar(re=0, im=0) -> GaussScalar:
    return GaussScalar(re, im)
