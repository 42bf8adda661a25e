"""Compact real forms via the conjugate-linear involution

    s(X_alpha) = -X_{-alpha},   s(H_j) = -H_j,

with fixed-point span  k = span_R { i H_j, i(X_alpha + X_{-alpha}),
X_alpha - X_{-alpha} }.

Normalization.  Over the integral Chevalley basis the rule above cannot be
a bracket semiautomorphism on any algebra with odd roots: for an odd root
the self-bracket is symmetric, forcing s([X,X']) = -conj(c) H while
[sX, sX'] = +c H, so the Cartan coefficient c of [X_alpha, X_{-alpha}]
must be purely imaginary.  This module therefore works in the unitary
normalization X_alpha -> i * X_alpha for positive odd roots, the unique
rescaling (up to real factors) that makes s a semiautomorphism and the
span k bracket-closed.  The integral basis is untouched; the rescaling is
recorded on the context and in every report.

Real spans are implemented as Q-spans inside Q(i)-coefficient vectors;
every check is an exact linear-algebra statement.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg
from .errors import ObstructionError
from .scalars import GaussScalar
from .superalgebra import (
    ChevalleyData,
    LieSuperalgebra,
    check_assumption,
    chevalley_basis,
)

_ZERO = GaussScalar(0)
_ONE = GaussScalar(1)
_I = GaussScalar(0, 1)


@dataclass
class CompactContext:
    """Chevalley data rebased to the unitary normalization."""

    source: LieSuperalgebra
    algebra: LieSuperalgebra  # basis: H_j then root vectors, odd positive scaled by i
    h_indices: tuple
    roots: tuple
    negative_index: dict  # basis index of X_alpha -> basis index of X_{-alpha}
    twisted_indices: tuple


@dataclass
class SemilinearMap:
    """Conjugate-linear map v -> S * conj(v) on the compact-basis algebra."""

    context: CompactContext
    matrix: list
    semilinear: bool
    is_involution: bool
    is_semiautomorphism: bool
    warnings: list = field(default_factory=list)

    def apply(self, vec):
        n = len(vec)
        out = [_ZERO] * n
        for j, c in enumerate(vec):
            if not c:
                continue
            cc = c.conjugate()
            col = self.matrix
            for i in range(n):
                if col[i][j]:
                    out[i] = out[i] + col[i][j] * cc
        return out


@dataclass
class RealFormBasis:
    context: CompactContext
    vectors: list  # list of coefficient vectors over context.algebra
    labels: list
    normalization: str

    @property
    def dim(self) -> int:
        return len(self.vectors)


def compact_context(g: LieSuperalgebra) -> CompactContext:
    if g._compact is not None:
        return g._compact
    chev = chevalley_basis(g)
    src = chev.algebra
    basis = [src.matrix(i) for i in range(src.dim)]
    twisted = []
    for r in chev.roots:
        if r.parity == 1 and r.positive:
            i = r.vector_index
            basis[i] = [[_I * e for e in row] for row in basis[i]]
            twisted.append(i)
    labels = list(src.labels)
    for i in twisted:
        labels[i] = "i*" + labels[i]
    alg = LieSuperalgebra(
        name=src.name + "#compact",
        family=src.family,
        m=src.m,
        n=src.n,
        basis=basis,
        parities=src.parities,
        labels=labels,
        cartan_count=len(src.cartan),
        notes=dict(src.notes),
    )
    alg.structure  # closure sanity
    neg = {}
    for r in alg.roots:
        m = [x for x in alg.roots if x.coords == tuple(-c for c in r.coords) and x.parity == r.parity]
        neg[r.vector_index] = m[0].vector_index
    ctx = CompactContext(
        source=g,
        algebra=alg,
        h_indices=tuple(alg.cartan),
        roots=alg.roots,
        negative_index=neg,
        twisted_indices=tuple(twisted),
    )
    g._compact = ctx
    return ctx


def involution_s(g: LieSuperalgebra) -> SemilinearMap:
    """The conjugate-linear extension of X_alpha -> -X_{-alpha},
    H_j -> -H_j on the compact-normalized basis, with verification."""
    ctx = compact_context(g)
    alg = ctx.algebra
    n = alg.dim
    S = [[_ZERO] * n for _ in range(n)]
    for j in ctx.h_indices:
        S[j][j] = -_ONE
    for i, ineg in ctx.negative_index.items():
        S[ineg][i] = -_ONE
    warnings = []
    report = check_assumption(g)
    if not report.holds:
        warnings.append(
            "square-zero hypothesis fails; the fixed-point span cannot close "
            f"(witnesses: {[w['root'] for w in report.witnesses]})"
        )
    # involution: S * conj(S) = identity; S is real so S^2 = id suffices
    sq = linalg.matmul(S, S)
    is_inv = all(
        sq[i][j] == (_ONE if i == j else _ZERO) for i in range(n) for j in range(n)
    )
    # bracket semiautomorphism on all basis pairs
    is_semi = True
    table = alg.structure
    for u in range(n):
        su = [S[i][u] for i in range(n)]
        for v in range(n):
            sv = [S[i][v] for i in range(n)]
            # s(sum c_k e_k) = sum conj(c_k) * S e_k
            img = [_ZERO] * n
            for k, c in table.get((u, v), {}).items():
                cc = c.conjugate()
                for i in range(n):
                    if S[i][k]:
                        img[i] = img[i] + S[i][k] * cc
            rhs = alg.bracket(su, sv)
            if img != rhs:
                is_semi = False
                warnings.append(
                    f"s fails the bracket rule on ({alg.labels[u]}, {alg.labels[v]})"
                )
                break
        if not is_semi:
            break
    return SemilinearMap(
        context=ctx,
        matrix=S,
        semilinear=True,
        is_involution=is_inv,
        is_semiautomorphism=is_semi,
        warnings=warnings,
    )


def compact_form_basis(g: LieSuperalgebra, force: bool = False) -> RealFormBasis:
    """The labeled spanning set of the compact form; errors (with witnesses)
    when the square-zero hypothesis fails, unless force=True."""
    report = check_assumption(g)
    if not report.holds and not force:
        raise ObstructionError(
            f"{g.name}: odd roots with nonzero self-bracket obstruct the compact form",
            witness=report.witnesses,
        )
    ctx = compact_context(g)
    alg = ctx.algebra
    n = alg.dim
    vectors = []
    labels = []
    for j in ctx.h_indices:
        vec = [_ZERO] * n
        vec[j] = _I
        vectors.append(vec)
        labels.append(f"i*{alg.labels[j]}")
    for r in ctx.roots:
        if not r.positive:
            continue
        ia = r.vector_index
        ib = ctx.negative_index[ia]
        v1 = [_ZERO] * n
        v1[ia] = _I
        v1[ib] = _I
        v2 = [_ZERO] * n
        v2[ia] = _ONE
        v2[ib] = -_ONE
        vectors.append(v1)
        labels.append(f"i*({alg.labels[ia]}+{alg.labels[ib]})")
        vectors.append(v2)
        labels.append(f"{alg.labels[ia]}-{alg.labels[ib]}")
    return RealFormBasis(
        context=ctx,
        vectors=vectors,
        labels=labels,
        normalization="positive odd root vectors carry a factor of i",
    )


def _realify_vector(vec):
    out = []
    for c in vec:
        out.append(c.re)
        out.append(c.im)
    return out


def closure_check(g: LieSuperalgebra, k: RealFormBasis):
    """Brackets of k-basis pairs must re-expand with rational coefficients.

    Returns (ok, witness); the witness names the offending pair and the
    imaginary components of the exact complex expansion."""
    alg = k.context.algebra
    n = alg.dim
    cols = k.vectors
    rows_real = [[Fraction(0)] * len(cols) for _ in range(2 * n)]
    for j, vec in enumerate(cols):
        rv = _realify_vector(vec)
        for i in range(2 * n):
            rows_real[i][j] = rv[i]
    for a in range(len(cols)):
        for b in range(a, len(cols)):
            br = alg.bracket(cols[a], cols[b])
            rhs = _realify_vector(br)
            sol = linalg.solve(rows_real, rhs)
            if sol is None:
                # complex expansion for the witness
                comp_rows = [[cols[j][i] for j in range(len(cols))] for i in range(n)]
                csol = linalg.solve(comp_rows, br)
                imag = None
                if csol is not None:
                    imag = {
                        k.labels[j]: str(GaussScalar(0, c.im))
                        for j, c in enumerate(csol)
                        if c.im
                    }
                return False, {
                    "pair": [k.labels[a], k.labels[b]],
                    "imaginary_components": imag,
                }
    return True, None


def fixed_points_equal_k(g: LieSuperalgebra, s: SemilinearMap, k: RealFormBasis):
    """The rational solution space of s(x) = x on the realified algebra must
    equal the rational span of k; also checks dim_R k = dim_C g."""
    alg = s.context.algebra
    n = alg.dim
    # realified matrix of v -> S conj(v): with v = x + i y (x,y rational
    # vectors), conj(v) = x - i y, S real, so output = Sx - i Sy... S may be
    # complex in general; build the 2n x 2n rational matrix explicitly.
    M = [[Fraction(0)] * (2 * n) for _ in range(2 * n)]
    for j in range(n):
        # action on e_j (real part basis vector)
        for i in range(n):
            c = s.matrix[i][j]
            if c:
                M[2 * i][2 * j] += c.re
                M[2 * i + 1][2 * j] += c.im
        # action on i*e_j: conj gives -i e_j -> -i S e_j
        for i in range(n):
            c = s.matrix[i][j]
            if c:
                # -i * c = (c.im, -c.re)
                M[2 * i][2 * j + 1] += c.im
                M[2 * i + 1][2 * j + 1] += -c.re
    for i in range(2 * n):
        M[i][i] -= Fraction(1)
    fixed = linalg.nullspace(M, 2 * n, one=Fraction(1))
    k_rows = [_realify_vector(v) for v in k.vectors]
    dim_fixed = len(fixed)
    dim_k = linalg.rank(k_rows)
    equal = dim_fixed == dim_k == len(k.vectors) and linalg.column_span_equal(
        fixed, k_rows
    )
    return {
        "dim_fixed": dim_fixed,
        "dim_k": dim_k,
        "dim_complex": n,
        "match": bool(equal),
        "complexification_ok": dim_k == n,
    }


def _supertrace_product(alg, A, B):
    n = alg.dim
    tr = _ZERO
    for i in range(n):
        acc = _ZERO
        for j in range(n):
            if A[i][j] and B[j][i]:
                acc = acc + A[i][j] * B[j][i]
        if alg.parities[i]:
            tr = tr - acc
        else:
            tr = tr + acc
    return tr


def killing_gram(g: LieSuperalgebra, vectors):
    """Gram matrix of the Killing form str(ad x ad y) on coefficient
    vectors over the compact-normalized basis."""
    ctx = compact_context(g)
    alg = ctx.algebra
    ads = []
    for vec in vectors:
        m = [[_ZERO] * alg.dim for _ in range(alg.dim)]
        for i, c in enumerate(vec):
            if c:
                ad_i = alg.ad_matrix(i)
                for r in range(alg.dim):
                    for s_ in range(alg.dim):
                        if ad_i[r][s_]:
                            m[r][s_] = m[r][s_] + c * ad_i[r][s_]
        ads.append(m)
    gram = []
    for a in range(len(vectors)):
        row = []
        for b in range(len(vectors)):
            row.append(_supertrace_product(alg, ads[a], ads[b]))
        gram.append(row)
    return gram


def even_root_compact_part(g: LieSuperalgebra, k: RealFormBasis):
    """Sub-span of k generated by the even roots: the coroots i*H_alpha and
    the even-root combinations; the semisimple compact core."""
    ctx = k.context
    alg = ctx.algebra
    n = alg.dim
    chev = chevalley_basis(g)
    vectors = []
    labels = []
    # independent even coroots
    coroot_rows = []
    for r in ctx.roots:
        if r.parity:
            continue
        coeffs = chev.coroot_map.get(r.coords)
        if coeffs is None:
            continue
        coroot_rows.append([c for c in coeffs])
    red, piv = linalg.rref(coroot_rows) if coroot_rows else ([], [])
    for row in red[: len(piv)]:
        vec = [_ZERO] * n
        for t, h_idx in enumerate(ctx.h_indices):
            if row[t]:
                vec[h_idx] = _I * row[t]
        vectors.append(vec)
        labels.append("i*coroot")
    for r in ctx.roots:
        if r.parity or not r.positive:
            continue
        ia = r.vector_index
        ib = ctx.negative_index[ia]
        v1 = [_ZERO] * n
        v1[ia] = _I
        v1[ib] = _I
        v2 = [_ZERO] * n
        v2[ia] = _ONE
        v2[ib] = -_ONE
        vectors.append(v1)
        labels.append(f"i*({alg.labels[ia]}+{alg.labels[ib]})")
        vectors.append(v2)
        labels.append(f"{alg.labels[ia]}-{alg.labels[ib]}")
    return vectors, labels


def intrinsic_killing_gram(g: LieSuperalgebra, vectors):
    """Killing form of the subalgebra spanned by `vectors`, computed from
    its own adjoint action (plain trace; the span must be even and closed).

    This is the degenerate-proof compactness certificate: the ambient
    Killing form of sl(n|n) vanishes identically, but a real Lie algebra is
    of compact type iff its own Killing form is negative definite."""
    ctx = compact_context(g)
    alg = ctx.algebra
    n = alg.dim
    cols_real = [[Fraction(0)] * len(vectors) for _ in range(2 * n)]
    for j, vec in enumerate(vectors):
        rv = _realify_vector(vec)
        for i in range(2 * n):
            cols_real[i][j] = rv[i]
    ads = []
    for va in vectors:
        col_list = []
        for vb in vectors:
            br = alg.bracket(va, vb)
            sol = linalg.solve(cols_real, _realify_vector(br))
            if sol is None:
                raise ObstructionError("even-root span is not bracket-closed")
            col_list.append(sol)
        ads.append([[col_list[b][a] for b in range(len(vectors))] for a in range(len(vectors))])
    gram = []
    for a in range(len(vectors)):
        row = []
        for b in range(len(vectors)):
            prod = linalg.matmul(ads[a], ads[b])
            row.append(GaussScalar(sum(prod[i][i] for i in range(len(vectors)))))
        gram.append(row)
    return gram


def is_negative_definite(gram) -> bool:
    """Exact test via leading principal minors: (-1)^k det_k > 0."""
    n = len(gram)
    for k in range(1, n + 1):
        sub = [[gram[i][j].re for j in range(k)] for i in range(k)]
        d = linalg.det(sub)
        if ((-1) ** k) * d <= 0:
            return False
    return True


def symmetric_signature(gram):
    """(n_pos, n_zero, n_neg) of a rational symmetric matrix, via the exact
    characteristic polynomial and Descartes' rule (valid: all roots real)."""
    n = len(gram)
    rows = [[gram[i][j].re if isinstance(gram[i][j], GaussScalar) else Fraction(gram[i][j]) for j in range(n)] for i in range(n)]
    # Faddeev-LeVerrier char poly of det(lambda I - A)
    Id = [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]
    A = rows
    acc = []
    Mk = Id
    for k in range(1, n + 1):
        AM = linalg.matmul(A, Mk)
        ck = -sum(AM[i][i] for i in range(n)) / k
        acc.append(ck)
        Mk = [
            [AM[i][j] + (ck if i == j else Fraction(0)) for j in range(n)]
            for i in range(n)
        ]
    poly = [Fraction(1)] + acc  # lambda^n + c1 lambda^{n-1} + ... + cn
    nz = list(poly)
    zero_mult = 0
    while nz and nz[-1] == 0:
        nz.pop()
        zero_mult += 1

    def variations(seq):
        signs = [1 if c > 0 else -1 for c in seq if c != 0]
        return sum(1 for a, b in zip(signs, signs[1:]) if a != b)

    pos = variations(nz)
    neg_seq = [c if (len(nz) - 1 - i) % 2 == 0 else -c for i, c in enumerate(nz)]
    neg = variations(neg_seq)
    return pos, zero_mult, neg


def realform_report(g: LieSuperalgebra, force: bool = False) -> dict:
    """Full compact-form report for one algebra."""
    adm = check_assumption(g)
    out = {
        "family": g.name,
        "admissible": adm.holds,
        "obstruction_witnesses": adm.witnesses,
        "k_dim": None,
        "closure": None,
        "fixed_point_match": None,
        "notes": adm.notes,
    }
    if not adm.holds and not force:
        return out
    try:
        k = compact_form_basis(g, force=True)
    except Exception as exc:  # chevalley-unsupported families
        out["error"] = str(exc)
        return out
    s = involution_s(g)
    ok_closure, witness = closure_check(g, k)
    fp = fixed_points_equal_k(g, s, k)
    out.update(
        {
            "k_dim": k.dim,
            "closure": ok_closure,
            "fixed_point_match": fp["match"],
            "normalization": k.normalization,
            "s_involution": s.is_involution,
            "s_semiautomorphism": s.is_semiautomorphism,
            "fixed_space": fp,
        }
    )
    if witness:
        out["closure_witness"] = witness
    if s.warnings:
        out["warnings"] = s.warnings
    if adm.holds:
        even_vecs, _lab = even_root_compact_part(g, k)
        gram = killing_gram(g, even_vecs)
        if all(c.is_real() for row in gram for c in row):
            degenerate = all(not c for row in gram for c in row)
            out["even_root_killing_negative_definite"] = (
                None if degenerate else is_negative_definite(gram)
            )
            if degenerate:
                out["even_root_killing_note"] = (
                    "the ambient Killing form vanishes identically (m = n); "
                    "see the intrinsic certificate"
                )
            intr = intrinsic_killing_gram(g, even_vecs)
            out["even_root_intrinsic_killing_negative_definite"] = is_negative_definite(intr)
            full_even = [v for v, p in zip(k.vectors, _k_parities(k)) if p == 0]
            gram_full = killing_gram(g, full_even)
            if all(c.is_real() for row in gram_full for c in row):
                out["even_part_killing_signature"] = symmetric_signature(gram_full)
    return out


def _k_parities(k: RealFormBasis):
    alg = k.context.algebra
    out = []
    for vec in k.vectors:
        par = 0
        for i, c in enumerate(vec):
            if c:
                par = alg.parities[i]
                break
        out.append(par)
    return out
