"""Grassmann-valued points of the matrix supergroups as generator words.

Words are sequences of letters

    x_even(alpha, t)   = exp(t X_alpha),        t even,
    x_odd(beta, theta) = 1 + theta X_beta,      theta odd, [X_beta,X_beta]=0,
    x_mixed(gamma,t,h) = (1 + h X_gamma) exp(t X_gamma^2),
    torus(e, t)        = diag(t^{e_u}),         t even invertible,

evaluated in the defining representation over a finite Grassmann algebra.

The involution comes in two odd-parameter conventions, selected by the
``normalization`` argument:

* ``"standard"``: the classical letterwise recipe
  x_odd(beta, theta) -> x_odd(-beta, -conj(theta)),
  x_even(alpha, t)   -> x_even(-alpha, -conj(t)),
  torus(e, t)        -> torus(e, conj(t)^{-1}).
  This reproduces the displayed big-cell images of the unitary-group
  examples letter for letter.  It is NOT a group homomorphism: the
  odd-odd commutator relation is not preserved, its fixed set is not
  closed under products, and the recipe is not involutive as a map on
  matrices away from single big-cell words (worked counterexamples live
  in the test suite).

* ``"unitary"``: odd parameters absorb a factor of i,
  x_odd(beta, theta) -> x_odd(-beta, -i*conj(theta)).
  This is the unique adjustment making the recipe a well-defined group
  involution; its fixed subgroup is closed under products and inverses
  and its tangent space is the compact form produced by the realform
  module (which carries the matching normalization on the Lie side).

``sigma_matrix`` extends either recipe to any invertible even supermatrix
through the unique super big-cell factorization g = L(theta) T U(eta)
with theta = c a^{-1}, eta = a^{-1} b, T = (a, d - c a^{-1} b); both
factorizations exist automatically because the body of an invertible even
supermatrix is block diagonal.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    DomainError,
    MalformedInputError,
    NotInvertibleError,
    ParityError,
)
from .grassmann import GrassmannElement
from .scalars import GaussScalar
from .superalgebra import (
    LieSuperalgebra,
    Root,
    build_algebra,
    chevalley_basis,
)
from .supermatrix import SuperMatrix, _grass_matmul, _grass_matrix_inv

_ZERO = GaussScalar(0)
_ONE = GaussScalar(1)
_I = GaussScalar(0, 1)

STANDARD = "standard"
UNITARY = "unitary"
_NORMALIZATIONS = (STANDARD, UNITARY)


def _odd_conj_factor(normalization: str) -> GaussScalar:
    if normalization == STANDARD:
        return -_ONE
    if normalization == UNITARY:
        return -_I
    raise DomainError(f"unknown normalization {normalization!r}")


# -- context and letters ---------------------------------------------------------


@dataclass
class APointsContext:
    algebra: LieSuperalgebra
    q: int

    def __post_init__(self):
        self.chev = chevalley_basis(self.algebra)
        self._roots_by_coords = {}
        for r in self.chev.roots:
            self._roots_by_coords.setdefault(r.coords, []).append(r)

    def find_root(self, coords, parity=None) -> Root:
        key = tuple(Fraction(c) for c in coords)
        pool = self._roots_by_coords.get(key, [])
        cands = [r for r in pool if parity is None or r.parity == parity]
        if not cands:
            raise DomainError(f"no root with coordinates {key} (parity {parity})")
        return cands[0]

    def negative_root(self, root: Root) -> Root:
        return self.chev.negative(root)

    def root_matrix(self, root: Root) -> SuperMatrix:
        return self.algebra.rep_matrix(root.vector_index, self.q)

    def cocharacter_of_h(self, index: int):
        if index < 0 or index >= len(self.algebra.cartan):
            raise DomainError(f"no Cartan element with index {index}")
        h = self.algebra.basis[self.algebra.cartan[index]]
        out = []
        for u in range(self.algebra.size):
            c = h[u][u]
            if not c.is_integer():
                raise DomainError("torus letter needs an integral cocharacter")
            out.append(int(c.re))
        return tuple(out)

    def square_is_zero(self, root: Root) -> bool:
        return not self.algebra.structure.get((root.vector_index, root.vector_index), {})


@dataclass
class Letter:
    kind: str
    root: Root | None = None
    cocharacter: tuple | None = None
    t: GrassmannElement | None = None
    theta: GrassmannElement | None = None


@dataclass
class GeneratorWord:
    context: APointsContext
    letters: tuple

    def __add__(self, other: "GeneratorWord") -> "GeneratorWord":
        if other.context is not self.context:
            raise DomainError("cannot concatenate words over different contexts")
        return GeneratorWord(self.context, self.letters + other.letters)


def make_letter(ctx: APointsContext, kind: str, *, root=None, index=None,
                cocharacter=None, t=None, theta=None) -> Letter:
    """Validated letter construction; raises on parity or invertibility
    violations and on square-zero/mixed-root mismatches."""
    if kind == "torus":
        if t is None:
            raise MalformedInputError("torus letter needs parameter t")
        if t.parity() not in (0,):
            raise ParityError("torus parameter must be even")
        if not t.body():
            raise NotInvertibleError("torus parameter has zero body")
        if cocharacter is None:
            if index is None:
                raise MalformedInputError("torus letter needs index or cocharacter")
            cocharacter = ctx.cocharacter_of_h(index)
        else:
            cocharacter = tuple(int(e) for e in cocharacter)
            if len(cocharacter) != ctx.algebra.size:
                raise MalformedInputError("cocharacter length mismatch")
        return Letter(kind="torus", cocharacter=cocharacter, t=t)

    if root is None:
        raise MalformedInputError(f"{kind} letter needs a root")
    if kind == "x_even":
        r = ctx.find_root(root, parity=0)
        if t is None or t.parity() != 0:
            raise ParityError("even parameter expected")
        return Letter(kind="x_even", root=r, t=t)
    if kind == "x_odd":
        r = ctx.find_root(root, parity=1)
        if theta is None or not theta.is_odd():
            raise ParityError("odd parameter expected")
        if not ctx.square_is_zero(r):
            raise DomainError(
                f"root {r.coords_str()} has [X,X] != 0; use an x_mixed letter"
            )
        return Letter(kind="x_odd", root=r, theta=theta)
    if kind == "x_mixed":
        r = ctx.find_root(root, parity=1)
        if ctx.square_is_zero(r):
            raise DomainError(
                f"root {r.coords_str()} has [X,X] = 0; use an x_odd letter"
            )
        if theta is None or not theta.is_odd():
            raise ParityError("odd parameter expected")
        if t is None or t.parity() != 0:
            raise ParityError("even parameter expected")
        return Letter(kind="x_mixed", root=r, t=t, theta=theta)
    raise MalformedInputError(f"unknown letter kind {kind!r}")


# -- evaluation -------------------------------------------------------------------


def _evaluate_letter(ctx: APointsContext, letter: Letter) -> SuperMatrix:
    q = ctx.q
    if letter.kind == "torus":
        size = ctx.algebra.size
        t = letter.t
        powers = {0: GrassmannElement.one(q), 1: t}
        t_inv = None
        rows = [[GrassmannElement.zero(q) for _ in range(size)] for _ in range(size)]
        for u, e in enumerate(letter.cocharacter):
            if e >= 0:
                while e not in powers:
                    k = max(p for p in powers if p <= e)
                    powers[k + 1] = powers[k].mul(t)
                rows[u][u] = powers[e]
            else:
                if t_inv is None:
                    t_inv = t.inverse()
                acc = GrassmannElement.one(q)
                for _ in range(-e):
                    acc = acc.mul(t_inv)
                rows[u][u] = acc
        return SuperMatrix(ctx.algebra.m, ctx.algebra.n, q, rows)
    X = ctx.root_matrix(letter.root)
    if letter.kind == "x_even":
        return X.scale(letter.t).exp_nilpotent()
    if letter.kind == "x_odd":
        return SuperMatrix.identity(ctx.algebra.m, ctx.algebra.n, q) + X.scale(letter.theta)
    if letter.kind == "x_mixed":
        first = SuperMatrix.identity(ctx.algebra.m, ctx.algebra.n, q) + X.scale(letter.theta)
        second = X.mul(X).scale(letter.t).exp_nilpotent()
        return first.mul(second)
    raise MalformedInputError(f"unknown letter kind {letter.kind!r}")


def evaluate(word: GeneratorWord) -> SuperMatrix:
    ctx = word.context
    out = SuperMatrix.identity(ctx.algebra.m, ctx.algebra.n, ctx.q)
    for letter in word.letters:
        out = out.mul(_evaluate_letter(ctx, letter))
    return out


def letter_inverse(letter: Letter) -> Letter:
    if letter.kind == "torus":
        return Letter(kind="torus", cocharacter=letter.cocharacter, t=letter.t.inverse())
    if letter.kind == "x_even":
        return Letter(kind="x_even", root=letter.root, t=-letter.t)
    if letter.kind == "x_odd":
        return Letter(kind="x_odd", root=letter.root, theta=-letter.theta)
    raise DomainError("no letter inverse for x_mixed")


# -- the involution on words -------------------------------------------------------


def sigma_letter(ctx: APointsContext, letter: Letter, normalization: str = STANDARD) -> Letter:
    if letter.kind == "torus":
        return Letter(
            kind="torus",
            cocharacter=letter.cocharacter,
            t=letter.t.conjugate().inverse(),
        )
    if letter.kind == "x_even":
        neg = ctx.negative_root(letter.root)
        return Letter(kind="x_even", root=neg, t=-letter.t.conjugate())
    if letter.kind == "x_odd":
        neg = ctx.negative_root(letter.root)
        fac = _odd_conj_factor(normalization)
        return Letter(kind="x_odd", root=neg, theta=letter.theta.conjugate() * fac)
    raise DomainError(
        "x_mixed letters occur only when the square-zero hypothesis fails; "
        "the involution is undefined there"
    )


def sigma_word(word: GeneratorWord, normalization: str = STANDARD) -> GeneratorWord:
    ctx = word.context
    return GeneratorWord(
        ctx, tuple(sigma_letter(ctx, l, normalization) for l in word.letters)
    )


# -- the involution on matrices -----------------------------------------------------


def _conj_transpose_block(block):
    if not block or not block[0]:
        return [[] for _ in range(len(block[0]) if block else 0)]
    rows = len(block)
    cols = len(block[0])
    return [[block[j][i].conjugate() for j in range(rows)] for i in range(cols)]


def sigma_matrix(M: SuperMatrix, normalization: str = STANDARD) -> SuperMatrix:
    """The involution on an invertible even supermatrix, through the super
    big-cell factorization; agrees with sigma_word on every letter."""
    q = M.q
    m, n = M.m, M.n
    fac = _odd_conj_factor(normalization)
    a, b, c, d = M.blocks()
    a_inv = _grass_matrix_inv(a, q) if m else []
    if m and a_inv is None:
        raise NotInvertibleError("upper-left block has singular body")
    # t-image: (conj(a)^t)^{-1}
    at = _conj_transpose_block(a)
    t_img = _grass_matrix_inv(at, q) if m else []
    if m and t_img is None:
        raise NotInvertibleError("upper-left block has singular body")
    if n:
        ca = _grass_matmul(c, a_inv, q) if m else c
        ab = _grass_matmul(a_inv, b, q) if m else b
        cab = _grass_matmul(ca, b, q) if m else [[GrassmannElement.zero(q)] * n for _ in range(n)]
        s = [[d[i][j] - cab[i][j] for j in range(n)] for i in range(n)]
        st = _conj_transpose_block(s)
        s_img = _grass_matrix_inv(st, q)
        if s_img is None:
            raise NotInvertibleError("Schur complement has singular body")
        theta_ct = _conj_transpose_block(ca)  # m x n
        eta_ct = _conj_transpose_block(ab)  # n x m
        upper = [[e * fac for e in row] for row in theta_ct]
        lower = [[e * fac for e in row] for row in eta_ct]
        # assemble U(upper) * blockdiag(t_img, s_img) * L(lower)
        b_img = _grass_matmul(upper, s_img, q)
        c_img = _grass_matmul(s_img, lower, q)
        if m:
            corr = _grass_matmul(b_img, lower, q)
            a_img = [[t_img[i][j] + corr[i][j] for j in range(m)] for i in range(m)]
        else:
            a_img = []
        return SuperMatrix.from_blocks(m, n, q, a_img, b_img, c_img, s_img)
    return SuperMatrix.from_blocks(m, n, q, t_img, [[] for _ in range(m)], [], [])


def k_membership(M: SuperMatrix, normalization: str = STANDARD) -> bool:
    """True iff sigma_matrix(M) = M exactly; M must be an invertible even
    group element."""
    if M.parity_layout() != 0:
        raise DomainError("not an even group element")
    try:
        img = sigma_matrix(M, normalization)
    except NotInvertibleError as exc:
        raise DomainError(f"not invertible: {exc.message}") from exc
    return img == M


# -- tangent vectors of the fixed subgroup -------------------------------------------


def tangent_compact_basis(ctx: APointsContext, normalization: str = STANDARD):
    """Scalar matrices i H_j, i(X_a + X_{-a}), X_a - X_{-a} in the defining
    representation.  Under the unitary normalization the positive odd root
    vectors carry the factor i, matching the realform module."""
    alg = ctx.algebra
    chev = ctx.chev
    out = []

    def scaled_matrix(root):
        mat = alg.matrix(root.vector_index)
        if normalization == UNITARY and root.parity == 1 and root.positive:
            mat = [[_I * e for e in row] for row in mat]
        return mat

    for j_pos, j in enumerate(chev.h_indices):
        h = alg.matrix(j)
        out.append((f"i*H{j_pos+1}", [[_I * e for e in row] for row in h], 0))
    for r in chev.roots:
        if not r.positive:
            continue
        neg = chev.negative(r)
        xp = scaled_matrix(r)
        xm = scaled_matrix(neg)
        size = alg.size
        plus = [[_I * (xp[u][v] + xm[u][v]) for v in range(size)] for u in range(size)]
        minus = [[xp[u][v] - xm[u][v] for v in range(size)] for u in range(size)]
        out.append((f"i*(X{r.coords_str()}+X-)", plus, r.parity))
        out.append((f"X{r.coords_str()}-X-", minus, r.parity))
    return out


# -- random generation ----------------------------------------------------------------

_UNIT_POOL = [
    GaussScalar(1),
    GaussScalar(-1),
    GaussScalar(0, 1),
    GaussScalar(0, -1),
    GaussScalar(Fraction(3, 5), Fraction(4, 5)),
    GaussScalar(Fraction(3, 5), Fraction(-4, 5)),
    GaussScalar(Fraction(5, 13), Fraction(12, 13)),
    GaussScalar(Fraction(8, 17), Fraction(-15, 17)),
]

_BODY_POOL = [
    GaussScalar(1),
    GaussScalar(2),
    GaussScalar(-1),
    GaussScalar(Fraction(1, 2)),
    GaussScalar(3),
    GaussScalar(1, 1),
    GaussScalar(2, -1),
    GaussScalar(-1, 2),
]


def random_unit_scalar(rng: random.Random) -> GaussScalar:
    u = rng.choice(_UNIT_POOL)
    if rng.random() < 0.5:
        u = u * rng.choice(_UNIT_POOL)
    return u


def _random_coeff(rng: random.Random) -> GaussScalar:
    return GaussScalar(
        Fraction(rng.randint(-2, 2), rng.choice([1, 2])),
        Fraction(rng.randint(-2, 2), rng.choice([1, 2])),
    )


def _random_masks(rng, q, parity, count):
    masks = [m for m in range(1, 1 << q) if m.bit_count() % 2 == parity and m.bit_count() > 0]
    rng.shuffle(masks)
    return masks[:count]


def random_odd_element(rng: random.Random, q: int, rank_one: bool = False) -> GrassmannElement:
    """Random odd soul; with rank_one the element is a complex multiple of a
    single real odd monomial."""
    if rank_one:
        mask = rng.choice(_random_masks(rng, q, 1, 4) or [1])
        c = _random_coeff(rng)
        if not c:
            c = _ONE
        return GrassmannElement(q, {mask: c})
    coeffs = {}
    for mask in _random_masks(rng, q, 1, rng.randint(1, 2)):
        c = _random_coeff(rng)
        if c:
            coeffs[mask] = c
    if not coeffs:
        coeffs = {1: _ONE}
    return GrassmannElement(q, coeffs)


def random_even_soul(rng: random.Random, q: int, real: bool = False) -> GrassmannElement:
    coeffs = {}
    for mask in _random_masks(rng, q, 0, rng.randint(1, 2)):
        c = _random_coeff(rng)
        if real:
            c = GaussScalar(c.re)
        if c:
            coeffs[mask] = c
    return GrassmannElement(q, coeffs)


def random_even_invertible(rng: random.Random, q: int) -> GrassmannElement:
    body = rng.choice(_BODY_POOL)
    return GrassmannElement.scalar(q, body) + random_even_soul(rng, q)


def random_real_even_soul(rng: random.Random, q: int) -> GrassmannElement:
    """Pure-soul even element fixed by conjugation."""
    out = random_even_soul(rng, q, real=True)
    if not out.coeffs:
        out = GrassmannElement(q, {0b11: _ONE})
    return out


# -- the soul-degree fixed-point oracle -------------------------------------------------


def _random_graded(rng, q, degree, parity_needed, rank_one):
    masks = [m for m in range(1, 1 << q) if m.bit_count() == degree]
    if not masks or degree % 2 != parity_needed % 2:
        return GrassmannElement.zero(q)
    if rank_one:
        return GrassmannElement(q, {rng.choice(masks): _random_coeff(rng) or _ONE})
    coeffs = {}
    for mask in masks:
        if rng.random() < 0.4:
            c = _random_coeff(rng)
            if c:
                coeffs[mask] = c
    return GrassmannElement(q, coeffs)


def sigma_fixed_sample(
    ctx: APointsContext,
    rng: random.Random,
    normalization: str = STANDARD,
    ensure_ber_one: bool = False,
    attempts: int = 60,
) -> SuperMatrix:
    """Construct an exactly sigma-fixed group element by solving g = sigma(g)
    degree by degree in the soul grading over a rational unitary body.

    At a diagonal unitary body the linearization of sigma is
    delta -> -fac * g0 conj(delta)^t g0, so each soul degree reduces to
    independent 2x2 position-pair solves plus free kernel directions; a
    degree is solvable iff the residual satisfies the induced reality
    condition, which can fail for the standard normalization (its recipe
    is not involutive), hence the retry loop with restricted draws.
    """
    alg = ctx.algebra
    m, n, q = alg.m, alg.n, ctx.q
    size = m + n
    fac = _odd_conj_factor(normalization)
    rank_one = normalization == STANDARD
    for _attempt in range(attempts):
        units = [random_unit_scalar(rng) for _ in range(size)]
        if ensure_ber_one:
            if n:
                num = _ONE
                for u in units[:m]:
                    num = num * u
                den = _ONE
                for u in units[m : size - 1]:
                    den = den * u
                units[size - 1] = num / den
            else:
                partial = _ONE
                for u in units[: m - 1]:
                    partial = partial * u
                units[m - 1] = _ONE / partial
        entries = [
            [
                GrassmannElement.scalar(q, units[u]) if u == v else GrassmannElement.zero(q)
                for v in range(size)
            ]
            for u in range(size)
        ]
        g = SuperMatrix(m, n, q, entries)
        failed = False
        for ell in range(1, q + 1):
            img = sigma_matrix(g, normalization)
            resid = {
                (u, v): (img.rows[u][v] - g.rows[u][v]).graded_part(ell)
                for u in range(size)
                for v in range(size)
            }
            delta = [[GrassmannElement.zero(q) for _ in range(size)] for _ in range(size)]
            pos_par = ell % 2
            ok = True
            for u in range(size):
                for v in range(u, size):
                    if g.position_parity(u, v) != pos_par:
                        if resid[(u, v)] or (u != v and resid[(v, u)]):
                            ok = False
                            break
                        continue
                    kappa = fac if g.position_parity(u, v) else -_ONE
                    # solvability of delta - L0(delta) = R, with
                    # L0(delta)_{uv} = kappa * u_u conj(delta_{vu}) u_v,
                    # requires R_uv = -kappa * u_u conj(R_vu) u_v
                    lhs = resid[(u, v)]
                    rhs = resid[(v, u)].conjugate() * (-kappa * units[u] * units[v])
                    if lhs != rhs:
                        ok = False
                        break
                    if u == v:
                        part = resid[(u, u)] * GaussScalar(Fraction(1, 2))
                        free = _random_graded(rng, q, ell, pos_par, rank_one)
                        real_free = GrassmannElement(
                            q, {mk: GaussScalar(c.re) for mk, c in free.coeffs.items()}
                        )
                        delta[u][u] = part + real_free * (_I * units[u])
                    else:
                        free = _random_graded(rng, q, ell, pos_par, rank_one)
                        delta[u][v] = free
                        delta[v][u] = (
                            resid[(v, u)]
                            + free.conjugate() * (kappa * units[v] * units[u])
                        )
                if not ok:
                    break
            if not ok:
                failed = True
                break
            g = SuperMatrix(
                m, n, q,
                [[g.rows[u][v] + delta[u][v] for v in range(size)] for u in range(size)],
            )
            if ensure_ber_one and pos_par == 0:
                ber_err = (g.berezinian() - GrassmannElement.one(q)).graded_part(ell)
                if ber_err:
                    # adjust along the kernel direction i*u_0*r at (0,0):
                    # it changes Ber at degree ell by i*r (supertrace sign +1),
                    # so r = -ber_err/i = i*ber_err, real since ber conj-odd
                    r = ber_err * _I
                    if not all(c.is_real() for c in r.coeffs.values()):
                        failed = True
                        break
                    corr = r * (_I * units[0])
                    rows = [list(row) for row in g.rows]
                    rows[0][0] = rows[0][0] + corr
                    g = SuperMatrix(m, n, q, rows)
        if failed:
            continue
        if sigma_matrix(g, normalization) != g:
            continue
        if ensure_ber_one and g.berezinian() != GrassmannElement.one(q):
            continue
        return g
    raise DomainError(
        f"could not construct a sigma-fixed sample ({normalization}) in {attempts} attempts"
    )


# -- serialization -----------------------------------------------------------------------


def letter_to_json(letter: Letter) -> dict:
    out = {"kind": letter.kind}
    if letter.root is not None:
        out["root"] = [str(c) for c in letter.root.coords]
    if letter.cocharacter is not None:
        out["cocharacter"] = list(letter.cocharacter)
    if letter.t is not None:
        out["t"] = letter.t.to_json()
    if letter.theta is not None:
        out["theta"] = letter.theta.to_json()
    return out


def word_to_json(word: GeneratorWord) -> dict:
    return {
        "algebra": word.context.algebra.name.split("#")[0],
        "q": word.context.q,
        "letters": [letter_to_json(l) for l in word.letters],
    }


def word_from_json(obj: dict, ctx: APointsContext | None = None) -> GeneratorWord:
    try:
        name = obj["algebra"]
        q = int(obj["q"])
        letters_json = obj["letters"]
    except (KeyError, TypeError, ValueError) as exc:
        raise MalformedInputError(f"bad word object: {exc}") from exc
    if ctx is None:
        ctx = APointsContext(build_algebra(name), q)
    letters = []
    for lj in letters_json:
        kind = lj.get("kind")
        kwargs = {}
        if "root" in lj:
            kwargs["root"] = [Fraction(x) for x in lj["root"]]
        if "cocharacter" in lj:
            kwargs["cocharacter"] = lj["cocharacter"]
        if "index" in lj:
            kwargs["index"] = int(lj["index"])
        if "t" in lj:
            kwargs["t"] = GrassmannElement.from_json(lj["t"], q)
        if "theta" in lj:
            kwargs["theta"] = GrassmannElement.from_json(lj["theta"], q)
        letters.append(make_letter(ctx, kind, **kwargs))
    return GeneratorWord(ctx, tuple(letters))


def random_word(ctx: APointsContext, rng: random.Random, length=None) -> GeneratorWord:
    """Random word mixing all letter kinds available in the algebra."""
    length = length if length is not None else rng.randint(1, 4)
    letters = []
    odd_roots = [r for r in ctx.chev.roots if r.parity == 1 and ctx.square_is_zero(r)]
    even_roots = [r for r in ctx.chev.roots if r.parity == 0]
    for _ in range(length):
        kinds = ["torus"]
        if odd_roots:
            kinds += ["x_odd", "x_odd"]
        if even_roots:
            kinds += ["x_even"]
        kind = rng.choice(kinds)
        if kind == "torus":
            idx = rng.randrange(len(ctx.algebra.cartan))
            letters.append(
                make_letter(ctx, "torus", index=idx, t=random_even_invertible(rng, ctx.q))
            )
        elif kind == "x_even":
            r = rng.choice(even_roots)
            t = random_even_soul(rng, ctx.q) + GrassmannElement.scalar(ctx.q, _random_coeff(rng))
            letters.append(make_letter(ctx, "x_even", root=r.coords, t=t))
        else:
            r = rng.choice(odd_roots)
            letters.append(
                make_letter(ctx, "x_odd", root=r.coords, theta=random_odd_element(rng, ctx.q))
            )
    return GeneratorWord(ctx, tuple(letters))
