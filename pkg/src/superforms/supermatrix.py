"""Block (m|n) x (m|n) matrices over the Grassmann algebra.

Supplies the group arithmetic used by the supergroup layer: products,
exact inverses (body inverse plus a finite Neumann series in the
nilpotent soul), supertrace, Berezinian, supertranspose, and exact
exponentials of nilpotent arguments.

Supertranspose convention: for blocks (a, b; c, d),

    st(X) = (a^t, c^t; -b^t, d^t)

which is the unique blockwise-transpose sign convention making st an
antiautomorphism on even supermatrices.  Sources differ on the odd
convention; applying st to an odd matrix here uses the same formula, so
st^2 is parity conjugation and st^4 the identity.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

from . import linalg
from .errors import (
    DimensionMismatchError,
    MalformedInputError,
    NonNilpotentError,
    NotInvertibleError,
    ParityError,
)
from .grassmann import GrassmannElement
from .scalars import GaussScalar


class SuperMatrix:
    """Immutable-by-convention square block matrix over GrassmannElement."""

    __slots__ = ("m", "n", "q", "rows")

    def __init__(self, m: int, n: int, q: int, rows):
        self.m = m
        self.n = n
        self.q = q
        size = m + n
        rows = tuple(tuple(r) for r in rows)
        if len(rows) != size or any(len(r) != size for r in rows):
            raise DimensionMismatchError(f"expected {size}x{size} entries")
        for r in rows:
            for e in r:
                if e.q != q:
                    raise DimensionMismatchError("entry generator count differs from matrix q")
        self.rows = rows

    # -- constructors -----------------------------------------------------

    @staticmethod
    def identity(m: int, n: int, q: int) -> "SuperMatrix":
        size = m + n
        z = GrassmannElement.zero(q)
        o = GrassmannElement.one(q)
        return SuperMatrix(m, n, q, [[o if i == j else z for j in range(size)] for i in range(size)])

    @staticmethod
    def zeros(m: int, n: int, q: int) -> "SuperMatrix":
        z = GrassmannElement.zero(q)
        size = m + n
        return SuperMatrix(m, n, q, [[z] * size for _ in range(size)])

    @staticmethod
    def from_scalars(m: int, n: int, q: int, scalar_rows) -> "SuperMatrix":
        """Embed a matrix of GaussScalars as body-only Grassmann entries."""
        rows = [
            [GrassmannElement.scalar(q, e) for e in r]
            for r in scalar_rows
        ]
        return SuperMatrix(m, n, q, rows)

    # -- basic algebra ------------------------------------------------------

    def _check_shape(self, other: "SuperMatrix"):
        if (self.m, self.n, self.q) != (other.m, other.n, other.q):
            raise DimensionMismatchError(
                f"shape mismatch: ({self.m}|{self.n}, q={self.q}) vs ({other.m}|{other.n}, q={other.q})"
            )

    def __add__(self, other):
        self._check_shape(other)
        return SuperMatrix(
            self.m, self.n, self.q,
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)],
        )

    def __sub__(self, other):
        self._check_shape(other)
        return SuperMatrix(
            self.m, self.n, self.q,
            [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.rows, other.rows)],
        )

    def __neg__(self):
        return SuperMatrix(self.m, self.n, self.q, [[-a for a in r] for r in self.rows])

    def scale(self, c) -> "SuperMatrix":
        """Left multiplication by a ring element or scalar."""
        if isinstance(c, (int, Fraction, GaussScalar)):
            return SuperMatrix(self.m, self.n, self.q, [[e * c for e in r] for r in self.rows])
        return SuperMatrix(self.m, self.n, self.q, [[c.mul(e) for e in r] for r in self.rows])

    def mul(self, other: "SuperMatrix", max_degree: int | None = None) -> "SuperMatrix":
        """Matrix product; entry order is preserved left to right."""
        self._check_shape(other)
        size = self.m + self.n
        bt = [[other.rows[k][j] for k in range(size)] for j in range(size)]
        out = []
        for i in range(size):
            row = []
            arow = self.rows[i]
            for j in range(size):
                col = bt[j]
                acc = GrassmannElement.zero(self.q)
                for k in range(size):
                    a = arow[k]
                    b = col[k]
                    if a.coeffs and b.coeffs:
                        acc = acc + a.mul(b, max_degree)
                row.append(acc)
            out.append(row)
        return SuperMatrix(self.m, self.n, self.q, out)

    def __mul__(self, other):
        if isinstance(other, SuperMatrix):
            return self.mul(other)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, SuperMatrix):
            return NotImplemented
        return (self.m, self.n, self.q) == (other.m, other.n, other.q) and self.rows == other.rows

    def __hash__(self):
        return hash((self.m, self.n, self.q, self.rows))

    def is_zero(self) -> bool:
        return all(not e for r in self.rows for e in r)

    def conjugate(self) -> "SuperMatrix":
        return SuperMatrix(self.m, self.n, self.q, [[e.conjugate() for e in r] for r in self.rows])

    def transpose_plain(self) -> "SuperMatrix":
        size = self.m + self.n
        return SuperMatrix(self.m, self.n, self.q, [[self.rows[j][i] for j in range(size)] for i in range(size)])

    # -- grading ------------------------------------------------------------

    def position_parity(self, i: int, j: int) -> int:
        return (1 if i >= self.m else 0) ^ (1 if j >= self.m else 0)

    def parity_layout(self) -> int | None:
        """0 if even (diag blocks even, off-diag odd), 1 if odd, None if mixed."""
        verdict = None
        for i, row in enumerate(self.rows):
            for j, e in enumerate(row):
                if e.is_zero():
                    continue
                p = e.parity()
                if p is None:
                    return None
                local = p ^ self.position_parity(i, j)
                if verdict is None:
                    verdict = local
                elif verdict != local:
                    return None
        return 0 if verdict is None else verdict

    # -- body / inverse -------------------------------------------------------

    def body(self):
        return [[e.body() for e in r] for r in self.rows]

    def soul(self) -> "SuperMatrix":
        return SuperMatrix(self.m, self.n, self.q, [[e.soul() for e in r] for r in self.rows])

    def inv(self) -> "SuperMatrix":
        """Exact two-sided inverse; requires the body to be invertible."""
        binv = linalg.inverse(self.body())
        if binv is None:
            raise NotInvertibleError("body matrix is singular")
        binv_m = SuperMatrix.from_scalars(self.m, self.n, self.q, binv)
        nil = binv_m.mul(self.soul())
        acc = SuperMatrix.identity(self.m, self.n, self.q)
        term = SuperMatrix.identity(self.m, self.n, self.q)
        for _ in range(self.q):
            term = term.mul(nil).scale(GaussScalar(-1))
            if term.is_zero():
                break
            acc = acc + term
        return acc.mul(binv_m)

    # -- super operations -----------------------------------------------------

    def blocks(self):
        m, n = self.m, self.n
        a = [r[:m] for r in self.rows[:m]]
        b = [r[m:] for r in self.rows[:m]]
        c = [r[:m] for r in self.rows[m:]]
        d = [r[m:] for r in self.rows[m:]]
        return a, b, c, d

    @staticmethod
    def from_blocks(m, n, q, a, b, c, d) -> "SuperMatrix":
        rows = [list(a[i]) + list(b[i]) for i in range(m)]
        rows += [list(c[i]) + list(d[i]) for i in range(n)]
        return SuperMatrix(m, n, q, rows)

    def supertrace(self) -> GrassmannElement:
        acc = GrassmannElement.zero(self.q)
        for i in range(self.m):
            acc = acc + self.rows[i][i]
        for i in range(self.m, self.m + self.n):
            acc = acc - self.rows[i][i]
        return acc

    def supertranspose(self) -> "SuperMatrix":
        a, b, c, d = self.blocks()
        at = [[a[j][i] for j in range(self.m)] for i in range(self.m)]
        bt = [[b[j][i] for j in range(self.m)] for i in range(self.n)]
        ct = [[c[j][i] for j in range(self.n)] for i in range(self.m)]
        dt = [[d[j][i] for j in range(self.n)] for i in range(self.n)]
        nb = [[-e for e in row] for row in bt]
        return SuperMatrix.from_blocks(self.m, self.n, self.q, at, ct, nb, dt)

    def berezinian(self) -> GrassmannElement:
        """det(a - b d^{-1} c) * det(d)^{-1} for an even matrix."""
        if self.parity_layout() != 0:
            raise ParityError("Berezinian requires an even supermatrix")
        a, b, c, d = self.blocks()
        if self.n == 0:
            return _grass_det(a, self.q)
        d_inv = _grass_matrix_inv(d, self.q)
        if d_inv is None:
            raise NotInvertibleError("lower-right block has singular body")
        if self.m == 0:
            dd = _grass_det(d, self.q)
            return dd.inverse()
        bdc = _grass_matmul(_grass_matmul(b, d_inv, self.q), c, self.q)
        schur = [[a[i][j] - bdc[i][j] for j in range(self.m)] for i in range(self.m)]
        det_s = _grass_det(schur, self.q)
        det_d = _grass_det(d, self.q)
        return det_s.mul(det_d.inverse())

    def exp_nilpotent(self) -> "SuperMatrix":
        """Exact exponential; raises unless the matrix is nilpotent."""
        size = self.m + self.n
        bound = size * (self.q + 1)
        term = SuperMatrix.identity(self.m, self.n, self.q)
        acc = SuperMatrix.identity(self.m, self.n, self.q)
        k = 0
        while True:
            k += 1
            term = term.mul(self)
            if term.is_zero():
                break
            if k > bound:
                raise NonNilpotentError(
                    f"matrix is not nilpotent (no vanishing power up to {bound})"
                )
            acc = acc + term.scale(GaussScalar(Fraction(1, factorial(k))))
        return acc

    # -- wire form ---------------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "q": self.q,
            "entries": [[e.to_json() for e in r] for r in self.rows],
        }

    @staticmethod
    def from_json(obj: dict) -> "SuperMatrix":
        try:
            m, n, q = int(obj["m"]), int(obj["n"]), int(obj["q"])
            entries = obj["entries"]
        except (KeyError, TypeError, ValueError) as exc:
            raise MalformedInputError(f"bad supermatrix object: {exc}") from exc
        rows = [[GrassmannElement.from_json(e, q) for e in r] for r in entries]
        return SuperMatrix(m, n, q, rows)

    def __repr__(self):
        body = "; ".join(", ".join(str(e) for e in r) for r in self.rows)
        return f"SuperMatrix({self.m}|{self.n}, q={self.q}: [{body}])"


# -- helpers over the commutative even subring -----------------------------------


def _grass_matmul(a, b, q):
    out = []
    for i in range(len(a)):
        row = []
        for j in range(len(b[0])):
            acc = GrassmannElement.zero(q)
            for k in range(len(b)):
                acc = acc + a[i][k].mul(b[k][j])
            row.append(acc)
        out.append(row)
    return out


def _grass_det(rows, q) -> GrassmannElement:
    """Cofactor-expansion determinant; valid when the entries commute
    (even Grassmann elements)."""
    n = len(rows)
    if n == 0:
        return GrassmannElement.one(q)
    if n == 1:
        return rows[0][0]
    acc = GrassmannElement.zero(q)
    for i in range(n):
        if not rows[i][0]:
            continue
        minor = [r[1:] for k, r in enumerate(rows) if k != i]
        term = rows[i][0].mul(_grass_det(minor, q))
        acc = acc + term if i % 2 == 0 else acc - term
    return acc


def _grass_matrix_inv(rows, q):
    """Inverse of a square matrix of Grassmann entries with invertible body."""
    n = len(rows)
    body = [[e.body() for e in r] for r in rows]
    binv = linalg.inverse(body)
    if binv is None:
        return None
    binv_g = [[GrassmannElement.scalar(q, e) for e in r] for r in binv]
    soul = [[e.soul() for e in r] for r in rows]
    nil = _grass_matmul(binv_g, soul, q)
    ident = [[GrassmannElement.one(q) if i == j else GrassmannElement.zero(q) for j in range(n)] for i in range(n)]
    acc = [row[:] for row in ident]
    term = [row[:] for row in ident]
    for _ in range(q):
        term = _grass_matmul(term, nil, q)
        term = [[-e for e in r] for r in term]
        if all(not e for r in term for e in r):
            break
        acc = [[acc[i][j] + term[i][j] for j in range(n)] for i in range(n)]
    return _grass_matmul(acc, binv_g, q)


# -- operation-style wrappers ------------------------------------------------------


def sm_mul(a: SuperMatrix, b: SuperMatrix) -> SuperMatrix:
    return a.mul(b)


def sm_inv(a: SuperMatrix) -> SuperMatrix:
    return a.inv()


def sm_berezinian(a: SuperMatrix) -> GrassmannElement:
    return a.berezinian()


def sm_exp_nilpotent(a: SuperMatrix) -> SuperMatrix:
    return a.exp_nilpotent()


def sm_supertrace_supertranspose(a: SuperMatrix):
    return a.supertrace(), a.supertranspose()
