import random
from fractions import Fraction

import pytest

from superforms.errors import DomainError, NotInvertibleError, ParityError
from superforms.grassmann import GrassmannElement
from superforms.scalars import GaussScalar
from superforms.superalgebra import build_algebra
from superforms.supermatrix import SuperMatrix
from superforms.supergroup import (
    APointsContext,
    GeneratorWord,
    STANDARD,
    UNITARY,
    evaluate,
    k_membership,
    letter_inverse,
    make_letter,
    random_even_invertible,
    random_odd_element,
    random_real_even_soul,
    random_word,
    sigma_fixed_sample,
    sigma_matrix,
    sigma_word,
    tangent_compact_basis,
    word_from_json,
    word_to_json,
)

Q = 4


def gl11_ctx():
    return APointsContext(build_algebra("gl(1|1)"), Q)


def sl21_ctx():
    return APointsContext(build_algebra("sl(2|1)"), Q)


def xi(j):
    return GrassmannElement.generator(Q, j)


BETA = (Fraction(1), Fraction(-1))
NBETA = (Fraction(-1), Fraction(1))


class TestLetters:
    def test_odd_accepts_odd(self):
        ctx = gl11_ctx()
        theta = xi(1) + xi(2) * GaussScalar(0, 1)
        letter = make_letter(ctx, "x_odd", root=BETA, theta=theta)
        assert letter.kind == "x_odd"

    def test_odd_rejects_even(self):
        ctx = gl11_ctx()
        bad = GrassmannElement.one(Q) + GrassmannElement.monomial(Q, [1, 2])
        with pytest.raises(ParityError):
            make_letter(ctx, "x_odd", root=BETA, theta=bad)

    def test_torus_rejects_zero_body(self):
        ctx = gl11_ctx()
        with pytest.raises(NotInvertibleError):
            make_letter(ctx, "torus", index=0, t=GrassmannElement.monomial(Q, [1, 2]))

    def test_mixed_requires_nonzero_square(self):
        ctx = gl11_ctx()
        with pytest.raises(DomainError):
            make_letter(ctx, "x_mixed", root=BETA, theta=xi(1), t=GrassmannElement.one(Q))
        osp = APointsContext(build_algebra("osp(1|2)"), Q)
        delta = (Fraction(1),)
        letter = make_letter(osp, "x_mixed", root=delta, theta=xi(1), t=GrassmannElement.monomial(Q, [2, 3]))
        assert letter.kind == "x_mixed"
        with pytest.raises(DomainError):
            make_letter(osp, "x_odd", root=delta, theta=xi(1))


class TestEvaluate:
    def test_empty_word(self):
        ctx = gl11_ctx()
        assert evaluate(GeneratorWord(ctx, ())) == SuperMatrix.identity(1, 1, Q)

    def test_gl11_big_cell(self):
        ctx = gl11_ctx()
        theta, eta = xi(1), xi(3)
        t = GrassmannElement.scalar(Q, 2) + GrassmannElement.monomial(Q, [1, 2])
        s = GrassmannElement.scalar(Q, GaussScalar(0, 1))
        w = GeneratorWord(ctx, (
            make_letter(ctx, "x_odd", root=NBETA, theta=theta),
            make_letter(ctx, "torus", cocharacter=(1, 0), t=t),
            make_letter(ctx, "torus", cocharacter=(0, 1), t=s),
            make_letter(ctx, "x_odd", root=BETA, theta=eta),
        ))
        g = evaluate(w)
        assert g.rows[0][0] == t
        assert g.rows[0][1] == t.mul(eta)
        assert g.rows[1][0] == theta.mul(t)
        assert g.rows[1][1] == theta.mul(t).mul(eta) + s

    def test_odd_additivity(self):
        ctx = gl11_ctx()
        th1, th2 = xi(1), xi(2) + xi(3)
        w1 = GeneratorWord(ctx, (
            make_letter(ctx, "x_odd", root=BETA, theta=th1),
            make_letter(ctx, "x_odd", root=BETA, theta=th2),
        ))
        w2 = GeneratorWord(ctx, (make_letter(ctx, "x_odd", root=BETA, theta=th1 + th2),))
        assert evaluate(w1) == evaluate(w2)

    def test_monoid_morphism(self):
        ctx = sl21_ctx()
        rng = random.Random(3)
        for _ in range(10):
            w1 = random_word(ctx, rng)
            w2 = random_word(ctx, rng)
            assert evaluate(w1 + w2) == evaluate(w1).mul(evaluate(w2))

    def test_mixed_letter_matches_exp(self):
        # exp(theta X + t X^2) = (1 + theta X) exp(t X^2) on the nonzero
        # square root of osp(1|2)
        ctx = APointsContext(build_algebra("osp(1|2)"), Q)
        root = ctx.find_root((Fraction(1),), parity=1)
        X = ctx.root_matrix(root)
        theta = xi(1) + xi(2) * GaussScalar(0, 1)
        t = GrassmannElement.monomial(Q, [3, 4], Fraction(1, 2))
        combined = X.scale(theta) + X.mul(X).scale(t)
        letter = make_letter(ctx, "x_mixed", root=(Fraction(1),), theta=theta, t=t)
        w = GeneratorWord(ctx, (letter,))
        assert combined.exp_nilpotent() == evaluate(w)


class TestSigmaWord:
    def test_paper_parameter_rule(self):
        ctx = gl11_ctx()
        theta = xi(1) + xi(2) * GaussScalar(0, 1)
        w = GeneratorWord(ctx, (make_letter(ctx, "x_odd", root=BETA, theta=theta),))
        img = sigma_word(w, STANDARD)
        letter = img.letters[0]
        assert letter.root.coords == NBETA
        assert letter.theta == -xi(1) + xi(2) * GaussScalar(0, 1)

    def test_sigma_empty(self):
        ctx = gl11_ctx()
        assert sigma_word(GeneratorWord(ctx, ()), STANDARD).letters == ()

    def test_involutivity_1000_words(self):
        ctx = sl21_ctx()
        rng = random.Random(0)
        for _ in range(1000):
            w = random_word(ctx, rng, length=rng.randint(1, 3))
            m = evaluate(w)
            assert evaluate(sigma_word(sigma_word(w, STANDARD), STANDARD)) == m

    def test_involutivity_unitary(self):
        ctx = sl21_ctx()
        rng = random.Random(1)
        for _ in range(100):
            w = random_word(ctx, rng)
            assert evaluate(sigma_word(sigma_word(w, UNITARY), UNITARY)) == evaluate(w)

    def test_mixed_letter_rejected(self):
        osp = APointsContext(build_algebra("osp(1|2)"), Q)
        letter = make_letter(
            osp, "x_mixed", root=(Fraction(1),), theta=xi(1), t=GrassmannElement.monomial(Q, [2, 3])
        )
        with pytest.raises(DomainError):
            sigma_word(GeneratorWord(osp, (letter,)), STANDARD)


def relation_pairs(ctx, rng):
    """Word identities evaluate(w1) == evaluate(w2): one-parameter
    additivity, torus conjugation, and commutator identities."""
    q = ctx.q
    pairs = []
    odd_roots = [r for r in ctx.chev.roots if r.parity == 1 and ctx.square_is_zero(r)]
    even_roots = [r for r in ctx.chev.roots if r.parity == 0]

    # additivity (odd and even)
    r = rng.choice(odd_roots)
    th1, th2 = random_odd_element(rng, q), random_odd_element(rng, q)
    pairs.append((
        "odd-additivity",
        GeneratorWord(ctx, (
            make_letter(ctx, "x_odd", root=r.coords, theta=th1),
            make_letter(ctx, "x_odd", root=r.coords, theta=th2),
        )),
        GeneratorWord(ctx, (make_letter(ctx, "x_odd", root=r.coords, theta=th1 + th2),)),
    ))
    re_ = rng.choice(even_roots)
    t1 = random_even_invertible(rng, q)
    t2 = random_even_invertible(rng, q)
    pairs.append((
        "even-additivity",
        GeneratorWord(ctx, (
            make_letter(ctx, "x_even", root=re_.coords, t=t1),
            make_letter(ctx, "x_even", root=re_.coords, t=t2),
        )),
        GeneratorWord(ctx, (make_letter(ctx, "x_even", root=re_.coords, t=t1 + t2),)),
    ))

    # torus conjugation of an odd root subgroup
    r = rng.choice(odd_roots)
    h_idx = rng.randrange(len(ctx.algebra.cartan))
    coch = ctx.cocharacter_of_h(h_idx)
    theta = random_odd_element(rng, q)
    c = random_even_invertible(rng, q)
    # weight of the root on the cocharacter, from the vector's position
    mat = ctx.algebra.basis[r.vector_index]
    u, v = next(
        (u, v)
        for u in range(ctx.algebra.size)
        for v in range(ctx.algebra.size)
        if mat[u][v]
    )
    wexp = coch[u] - coch[v]
    scaled = theta
    cc = c if wexp >= 0 else c.inverse()
    for _ in range(abs(wexp)):
        scaled = scaled.mul(cc)
    h = make_letter(ctx, "torus", cocharacter=coch, t=c)
    pairs.append((
        "torus-conjugation",
        GeneratorWord(ctx, (
            h,
            make_letter(ctx, "x_odd", root=r.coords, theta=theta),
            letter_inverse(h),
        )),
        GeneratorWord(ctx, (make_letter(ctx, "x_odd", root=r.coords, theta=scaled),)),
    ))

    # even-odd group commutator: [x_a(t), x_b(th)] = x_{a+b}(N t th)
    for ra in even_roots:
        for rb in odd_roots:
            coords_sum = tuple(a + b for a, b in zip(ra.coords, rb.coords))
            target = [x for x in odd_roots if x.coords == coords_sum]
            if not target:
                continue
            entry = ctx.algebra.structure.get((ra.vector_index, rb.vector_index), {})
            if set(entry) != {target[0].vector_index}:
                continue
            N = entry[target[0].vector_index]
            t = random_even_invertible(rng, q)
            th = random_odd_element(rng, q)
            A = make_letter(ctx, "x_even", root=ra.coords, t=t)
            B = make_letter(ctx, "x_odd", root=rb.coords, theta=th)
            pairs.append((
                "even-odd-commutator",
                GeneratorWord(ctx, (A, B, letter_inverse(A), letter_inverse(B))),
                GeneratorWord(ctx, (
                    make_letter(ctx, "x_odd", root=coords_sum, theta=t.mul(th) * N),
                )),
            ))
            break
        else:
            continue
        break
    return pairs


def odd_odd_commutator_pair(ctx, rng):
    q = ctx.q
    odd_roots = [r for r in ctx.chev.roots if r.parity == 1 and ctx.square_is_zero(r)]
    for ra in odd_roots:
        for rb in odd_roots:
            coords_sum = tuple(a + b for a, b in zip(ra.coords, rb.coords))
            if not any(coords_sum):
                continue
            target = [r for r in ctx.chev.roots if r.coords == coords_sum and r.parity == 0]
            if not target:
                continue
            entry = ctx.algebra.structure.get((ra.vector_index, rb.vector_index), {})
            if set(entry) != {target[0].vector_index}:
                continue
            N = entry[target[0].vector_index]
            th = random_odd_element(rng, q)
            et = random_odd_element(rng, q)
            A = make_letter(ctx, "x_odd", root=ra.coords, theta=th)
            B = make_letter(ctx, "x_odd", root=rb.coords, theta=et)
            w1 = GeneratorWord(ctx, (A, B, letter_inverse(A), letter_inverse(B)))
            w2 = GeneratorWord(ctx, (
                make_letter(ctx, "x_even", root=coords_sum, t=th.mul(et) * N),
            ))
            return w1, w2
    raise AssertionError("no odd-odd commutator pair found")


class TestRelations:
    def test_identities_hold(self):
        ctx = sl21_ctx()
        rng = random.Random(5)
        for _ in range(20):
            for name, w1, w2 in relation_pairs(ctx, rng):
                assert evaluate(w1) == evaluate(w2), name

    def test_sigma_preserves_relations_standard(self):
        ctx = sl21_ctx()
        rng = random.Random(6)
        for _ in range(20):
            for name, w1, w2 in relation_pairs(ctx, rng):
                assert evaluate(sigma_word(w1, STANDARD)) == evaluate(sigma_word(w2, STANDARD)), name

    def test_sigma_preserves_relations_unitary(self):
        ctx = sl21_ctx()
        rng = random.Random(7)
        for _ in range(20):
            for name, w1, w2 in relation_pairs(ctx, rng):
                assert evaluate(sigma_word(w1, UNITARY)) == evaluate(sigma_word(w2, UNITARY)), name

    def test_odd_odd_commutator_distinguishes_normalizations(self):
        # the odd-odd Chevalley commutator is a word identity; the
        # letterwise standard recipe does NOT preserve it, the unitary
        # normalization does -- this is the well-definedness gap
        ctx = sl21_ctx()
        rng = random.Random(8)
        w1, w2 = odd_odd_commutator_pair(ctx, rng)
        assert evaluate(w1) == evaluate(w2)
        assert evaluate(sigma_word(w1, UNITARY)) == evaluate(sigma_word(w2, UNITARY))
        assert evaluate(sigma_word(w1, STANDARD)) != evaluate(sigma_word(w2, STANDARD))


class TestSigmaMatrix:
    def test_sl2_images_on_generators(self):
        ctx = APointsContext(build_algebra("sl(2|0)"), Q)
        v = GrassmannElement.scalar(Q, GaussScalar(2, 1)) + GrassmannElement.monomial(Q, [1, 2])
        lower = make_letter(ctx, "x_even", root=(Fraction(-1), Fraction(1)), t=v)
        M = evaluate(GeneratorWord(ctx, (lower,)))
        img = sigma_matrix(M, STANDARD)
        vb = v.conjugate()
        assert img.rows[0][1] == -vb and img.rows[1][0].is_zero()
        t = GrassmannElement.scalar(Q, GaussScalar(Fraction(3, 5), Fraction(4, 5)))
        h = make_letter(ctx, "torus", cocharacter=(1, -1), t=t)
        Mh = evaluate(GeneratorWord(ctx, (h,)))
        imgh = sigma_matrix(Mh, STANDARD)
        assert imgh.rows[0][0] == t.conjugate().inverse()
        assert imgh.rows[1][1] == t.conjugate()

    def test_identity_fixed(self):
        E = SuperMatrix.identity(2, 1, Q)
        assert sigma_matrix(E, STANDARD) == E
        assert sigma_matrix(E, UNITARY) == E

    def test_matrix_word_agreement_500_draws(self):
        ctx = sl21_ctx()
        rng = random.Random(9)
        kinds = []
        odd_roots = [r for r in ctx.chev.roots if r.parity == 1]
        even_roots = [r for r in ctx.chev.roots if r.parity == 0]
        for _ in range(500):
            choice = rng.random()
            if choice < 0.4:
                r = rng.choice(odd_roots)
                letter = make_letter(ctx, "x_odd", root=r.coords, theta=random_odd_element(rng, Q))
            elif choice < 0.7:
                r = rng.choice(even_roots)
                letter = make_letter(ctx, "x_even", root=r.coords, t=random_even_invertible(rng, Q))
            else:
                letter = make_letter(
                    ctx, "torus", index=rng.randrange(2), t=random_even_invertible(rng, Q)
                )
            M = evaluate(GeneratorWord(ctx, (letter,)))
            for norm in (STANDARD, UNITARY):
                img_w = evaluate(GeneratorWord(ctx, (sigma_word(GeneratorWord(ctx, (letter,)), norm).letters[0],)))
                assert sigma_matrix(M, norm) == img_w, (letter.kind, norm)

    def test_membership_su2_point(self):
        a = GaussScalar(Fraction(3, 5), Fraction(4, 5))
        rows = [
            [GrassmannElement.scalar(Q, a), GrassmannElement.zero(Q)],
            [GrassmannElement.zero(Q), GrassmannElement.scalar(Q, a.conjugate())],
        ]
        M = SuperMatrix(2, 0, Q, rows)
        assert k_membership(M, STANDARD)

    def test_membership_generic_false(self):
        ctx = gl11_ctx()
        t = GrassmannElement.scalar(Q, 2)
        w = GeneratorWord(ctx, (make_letter(ctx, "torus", index=0, t=t),))
        assert not k_membership(evaluate(w), STANDARD)

    def test_membership_domain_error(self):
        M = SuperMatrix(1, 1, Q, [[xi(1), GrassmannElement.zero(Q)], [GrassmannElement.zero(Q), GrassmannElement.one(Q)]])
        with pytest.raises(DomainError):
            k_membership(M, STANDARD)


class TestFixedOracle:
    def test_gl11_both_normalizations(self):
        ctx = gl11_ctx()
        rng = random.Random(10)
        for norm in (STANDARD, UNITARY):
            g = sigma_fixed_sample(ctx, rng, norm)
            assert sigma_matrix(g, norm) == g
            assert any(e.soul() for r in g.rows for e in r)

    def test_sl21_with_berezinian(self):
        ctx = sl21_ctx()
        rng = random.Random(11)
        for norm in (STANDARD, UNITARY):
            g = sigma_fixed_sample(ctx, rng, norm, ensure_ber_one=True)
            assert sigma_matrix(g, norm) == g
            assert g.berezinian() == GrassmannElement.one(Q)

    def test_unitary_fixed_set_is_subgroup(self):
        ctx = gl11_ctx()
        rng = random.Random(12)
        samples = [sigma_fixed_sample(ctx, rng, UNITARY) for _ in range(5)]
        for a in samples:
            assert k_membership(a.inv(), UNITARY)
            for b in samples:
                assert k_membership(a.mul(b), UNITARY)

    def test_standard_fixed_set_not_product_closed(self):
        # pinned counterexample: g = (1, -psi; psi, 1), h = (1, -phi; phi, 1)
        # are both fixed under the standard recipe, their product is not
        one = GrassmannElement.one(Q)
        psi, phi = xi(1), xi(2)
        g = SuperMatrix(1, 1, Q, [[one, -psi], [psi, one]])
        h = SuperMatrix(1, 1, Q, [[one, -phi], [phi, one]])
        assert k_membership(g, STANDARD) and k_membership(h, STANDARD)
        assert not k_membership(g.mul(h), STANDARD)


class TestTangent:
    def test_tangent_exponentials_fixed_standard(self):
        # sigma(exp(tau X)) = exp(tau X) for every tangent basis vector X
        # and real even pure-soul tau; exact even when tau^2 != 0
        ctx = sl21_ctx()
        rng = random.Random(13)
        tau2 = GrassmannElement.monomial(Q, [1, 2]) + GrassmannElement.monomial(Q, [3, 4])
        assert not tau2.mul(tau2).is_zero()
        for label, mat, parity in tangent_compact_basis(ctx, STANDARD):
            for tau in (random_real_even_soul(rng, Q), tau2):
                X = SuperMatrix.from_scalars(2, 1, Q, mat).scale(tau)
                E = X.exp_nilpotent()
                assert sigma_matrix(E, STANDARD) == E, label

    def test_tangent_flows_fixed_unitary(self):
        # under the unitary normalization, even directions flow with real
        # even soul parameters and odd directions with real odd parameters
        # (the honest super flows); both stay fixed
        ctx = sl21_ctx()
        rng = random.Random(14)
        for label, mat, parity in tangent_compact_basis(ctx, UNITARY):
            for _ in range(2):
                if parity == 0:
                    par = random_real_even_soul(rng, Q)
                else:
                    par = GrassmannElement.monomial(Q, [rng.randint(1, Q)], rng.choice([1, 2]))
                X = SuperMatrix.from_scalars(2, 1, Q, mat).scale(par)
                E = X.exp_nilpotent()
                assert sigma_matrix(E, UNITARY) == E, (label, parity)

    def test_tangent_count(self):
        ctx = sl21_ctx()
        tb = tangent_compact_basis(ctx, STANDARD)
        assert len(tb) == 8  # dim_C sl(2|1)


class TestWordJson:
    def test_roundtrip(self):
        ctx = sl21_ctx()
        rng = random.Random(14)
        w = random_word(ctx, rng, length=3)
        obj = word_to_json(w)
        w2 = word_from_json(obj)
        assert evaluate(w) == evaluate(w2)
