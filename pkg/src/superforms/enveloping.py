"""Degree-truncated universal enveloping algebra with a super-PBW basis.

Monomials are exponent vectors over an ordered basis of the algebra: even
generators take arbitrary exponents, odd generators exponents in {0,1}.
Products are straightened with the graded commutation rule

    x_j x_i = (-1)^{p_i p_j} x_i x_j + [x_j, x_i],      j > i,
    x_i x_i = (1/2) [x_i, x_i],                         i odd,

and monomials above the degree cap are dropped (the filtration quotient).

The conjugate-linear involution of the realform module extends to the
truncation multiplicatively; its fixed subspace is compared, over the
rationals, with the span of the PBW monomials in the compact-form basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .errors import ParameterError
from .realform import RealFormBasis, SemilinearMap, compact_context, involution_s, compact_form_basis
from .scalars import GaussScalar
from .superalgebra import LieSuperalgebra

_ZERO = GaussScalar(0)
_ONE = GaussScalar(1)

MAX_DEGREE = 4


@dataclass(frozen=True)
class PbwMonomial:
    exponents: tuple

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    def word(self):
        out = []
        for i, e in enumerate(self.exponents):
            out.extend([i] * e)
        return tuple(out)


class TruncatedUEA:
    """Exact multiplication table of the degree-truncated enveloping algebra."""

    def __init__(self, algebra: LieSuperalgebra, degree: int):
        if degree > MAX_DEGREE:
            raise ParameterError(f"degree cap {degree} exceeds the desk-scale bound {MAX_DEGREE}")
        if degree < 0:
            raise ParameterError("degree cap must be non-negative")
        self.algebra = algebra
        self.degree = degree
        self.basis = self._enumerate_basis()
        self.index = {m: k for k, m in enumerate(self.basis)}
        self._straighten_cache = {(): {(): _ONE}}

    def _enumerate_basis(self):
        n = self.algebra.dim
        pars = self.algebra.parities
        out = []

        def rec(pos, left, acc):
            if pos == n:
                out.append(tuple(acc))
                return
            top = 1 if pars[pos] else left
            for e in range(0, top + 1):
                if e <= left:
                    rec(pos + 1, left - e, acc + [e])

        rec(0, self.degree, [])
        out.sort(key=lambda m: (sum(m), m))
        return out

    @property
    def dim(self) -> int:
        return len(self.basis)

    # -- straightening -----------------------------------------------------

    def straighten(self, word):
        """Rewrite a generator word into the PBW basis; returns a dict
        mapping exponent tuples (degree <= cap) to coefficients."""
        word = tuple(word)
        cached = self._straighten_cache.get(word)
        if cached is not None:
            return cached
        pars = self.algebra.parities
        n = self.algebra.dim
        # find first violation
        viol = None
        for i in range(len(word) - 1):
            a, b = word[i], word[i + 1]
            if a > b or (a == b and pars[a]):
                viol = i
                break
        if viol is None:
            exps = [0] * n
            for g in word:
                exps[g] += 1
            result = {tuple(exps): _ONE} if sum(exps) <= self.degree else {}
            self._straighten_cache[word] = result
            return result
        i = viol
        a, b = word[i], word[i + 1]
        result: dict = {}
        if a == b:  # odd square: x x = (1/2)[x, x]
            entry = self.algebra.structure.get((a, a), {})
            for k, c in entry.items():
                sub = self.straighten(word[:i] + (k,) + word[i + 2 :])
                half = c * Fraction(1, 2)
                for mono, cc in sub.items():
                    val = result.get(mono, _ZERO) + half * cc
                    if val:
                        result[mono] = val
                    else:
                        result.pop(mono, None)
        else:
            sign = -_ONE if (pars[a] and pars[b]) else _ONE
            swapped = self.straighten(word[:i] + (b, a) + word[i + 2 :])
            for mono, cc in swapped.items():
                val = result.get(mono, _ZERO) + sign * cc
                if val:
                    result[mono] = val
                else:
                    result.pop(mono, None)
            entry = self.algebra.structure.get((a, b), {})
            for k, c in entry.items():
                sub = self.straighten(word[:i] + (k,) + word[i + 2 :])
                for mono, cc in sub.items():
                    val = result.get(mono, _ZERO) + c * cc
                    if val:
                        result[mono] = val
                    else:
                        result.pop(mono, None)
        self._straighten_cache[word] = result
        return result

    # -- arithmetic on elements (dicts monomial -> coefficient) -------------

    def multiply(self, x: dict, y: dict) -> dict:
        out: dict = {}
        for ma, ca in x.items():
            wa = PbwMonomial(ma).word()
            for mb, cb in y.items():
                word = wa + PbwMonomial(mb).word()
                f = ca * cb
                for mono, cc in self.straighten(word).items():
                    val = out.get(mono, _ZERO) + f * cc
                    if val:
                        out[mono] = val
                    else:
                        out.pop(mono, None)
        return out

    def generator_element(self, i: int) -> dict:
        exps = [0] * self.algebra.dim
        exps[i] = 1
        return {tuple(exps): _ONE}

    def vector_element(self, coeffs) -> dict:
        out = {}
        for i, c in enumerate(coeffs):
            if c:
                exps = [0] * self.algebra.dim
                exps[i] = 1
                out[tuple(exps)] = c
        return out

    def to_coordinates(self, elem: dict):
        vec = [_ZERO] * self.dim
        for mono, c in elem.items():
            vec[self.index[mono]] = c
        return vec


def pbw_basis(g: LieSuperalgebra, degree: int) -> TruncatedUEA:
    return TruncatedUEA(g, degree)


# -- involution on the truncation ---------------------------------------------------


class UEAInvolution:
    """Multiplicative semilinear extension of a degree-1 semilinear map."""

    def __init__(self, s: SemilinearMap, uea: TruncatedUEA):
        if s.context.algebra is not uea.algebra:
            raise ParameterError("involution and truncation live over different bases")
        self.uea = uea
        self.s = s
        self._images = {}
        n = uea.algebra.dim
        gen_images = []
        for j in range(n):
            vec = [s.matrix[i][j] for i in range(n)]
            gen_images.append(uea.vector_element(vec))
        one = {tuple([0] * n): _ONE}
        for mono in uea.basis:
            acc = one
            for g_idx in PbwMonomial(mono).word():
                acc = uea.multiply(acc, gen_images[g_idx])
            self._images[mono] = acc

    def apply(self, elem: dict) -> dict:
        out: dict = {}
        for mono, c in elem.items():
            cc = c.conjugate()
            for m2, c2 in self._images[mono].items():
                val = out.get(m2, _ZERO) + cc * c2
                if val:
                    out[m2] = val
                else:
                    out.pop(m2, None)
        return out

    def is_involution(self) -> bool:
        for mono in self.uea.basis:
            unit = {mono: _ONE}
            if self.apply(self.apply(unit)) != unit:
                return False
        return True

    def realified_matrix(self):
        """The 2N x 2N rational matrix of the semilinear map on the
        realified truncation."""
        N = self.uea.dim
        M = [[Fraction(0)] * (2 * N) for _ in range(2 * N)]
        for j, mono in enumerate(self.uea.basis):
            img = self._images[mono]
            for m2, c in img.items():
                i = self.uea.index[m2]
                # image of the real basis vector mono
                M[2 * i][2 * j] += c.re
                M[2 * i + 1][2 * j] += c.im
                # image of i*mono: conj gives -i, image = -i * c
                M[2 * i][2 * j + 1] += c.im
                M[2 * i + 1][2 * j + 1] += -c.re
        return M


def extend_involution(s: SemilinearMap, uea: TruncatedUEA) -> UEAInvolution:
    return UEAInvolution(s, uea)


# -- the truncated invariants comparison ---------------------------------------------


def _realify(vec):
    out = []
    for c in vec:
        out.append(c.re)
        out.append(c.im)
    return out


def invariants_dim_compare(g: LieSuperalgebra, degree: int, k: RealFormBasis | None = None) -> dict:
    """Compare the fixed space of the extended involution with the span of
    the PBW monomials in the compact-form generators, over the rationals,
    on the degree-truncated enveloping algebra."""
    s = involution_s(g)
    if k is None:
        k = compact_form_basis(g)
    uea = pbw_basis(s.context.algebra, degree)
    ext = extend_involution(s, uea)
    N = uea.dim
    S = ext.realified_matrix()
    M = [row[:] for row in S]
    for i in range(2 * N):
        M[i][i] -= Fraction(1)
    fixed = linalg.nullspace(M, 2 * N, one=Fraction(1))
    dim_fixed = len(fixed)

    # span of ordered monomials in the k-generators
    pars = []
    for vec in k.vectors:
        par = 0
        for i, c in enumerate(vec):
            if c:
                par = uea.algebra.parities[i]
                break
        pars.append(par)
    gens = [uea.vector_element(vec) for vec in k.vectors]
    words = [[]]
    rows = []
    one = {tuple([0] * uea.algebra.dim): _ONE}
    rows.append(_realify(uea.to_coordinates(one)))

    def emit(word):
        acc = one
        for idx in word:
            acc = uea.multiply(acc, gens[idx])
        rows.append(_realify(uea.to_coordinates(acc)))

    def rec(start, depth, word):
        if depth == 0:
            return
        for idx in range(start, len(gens)):
            w2 = word + [idx]
            if pars[idx] and word and word[-1] == idx:
                continue
            emit(w2)
            rec(idx, depth - 1, w2)

    rec(0, degree, [])
    dim_uk = linalg.rank(rows)
    spans_equal = dim_fixed == dim_uk and linalg.column_span_equal(fixed, rows)

    # averaging projector P(u) = (u + s(u))/2
    P = [
        [
            (S[i][j] + (Fraction(1) if i == j else Fraction(0))) / 2
            for j in range(2 * N)
        ]
        for i in range(2 * N)
    ]
    P2 = linalg.matmul(P, P)
    idempotent = P2 == P
    image_rows = [[P[i][j] for i in range(2 * N)] for j in range(2 * N)]
    proj_image_matches = linalg.column_span_equal(image_rows, fixed)

    return {
        "algebra": g.name,
        "degree": degree,
        "dim_truncation": N,
        "dim_fixed": dim_fixed,
        "dim_uk": dim_uk,
        "equal": bool(spans_equal),
        "projector_idempotent": bool(idempotent),
        "projector_image_is_fixed_space": bool(proj_image_matches),
        "involution_ok": ext.is_involution(),
    }
