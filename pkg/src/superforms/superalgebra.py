"""Classical matrix Lie superalgebras with exact structure constants.

Families: gl(m|n), sl(m|n), osp(p|2n), the queer algebra q(n) given as
{(A,B;B,A)}, and the periplectic algebra p(n) = {(A,B;C,-A^t): tr A = 0,
B symmetric, C antisymmetric}.  Capital labels follow the classification
list and map onto these models: A(m,n) -> sl(m+1|n+1), B(m,n) ->
osp(2m+1|2n), C(n) -> osp(2|2n-2), D(m,n) -> osp(2m|2n), P(n) -> p(n),
Q(n) -> q(n).  The exceptional families F(4), G(3), D(2,1;a) are rejected.

The Cartan subalgebra is always the even diagonal part of the model, so
the root decomposition is exact linear algebra: the weight of a matrix
position (u,v) under diag(d) is d_u - d_v, and the canonical basis stores
one homogeneous weight vector per basis slot.  Root vectors are scaled so
their first nonzero entry is +1, then cleared to a primitive integer
matrix.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

from . import linalg
from .errors import (
    ChevalleyUnsupportedError,
    ModelError,
    ParameterError,
    UnsupportedFamilyError,
)
from .scalars import GaussScalar
from .supermatrix import SuperMatrix
from .grassmann import GrassmannElement

_ZERO = GaussScalar(0)
_ONE = GaussScalar(1)


@dataclass(frozen=True)
class Root:
    coords: tuple  # tuple of Fraction, values on the Cartan basis
    parity: int
    vector_index: int

    @property
    def positive(self) -> bool:
        for c in self.coords:
            if c:
                return c > 0
        return False

    def coords_str(self) -> str:
        return "(" + ",".join(str(c) for c in self.coords) + ")"


@dataclass
class AdmissibilityReport:
    family: str
    holds: bool
    witnesses: list
    roots_paired: bool
    notes: dict = field(default_factory=dict)

    def to_json(self):
        return {
            "family": self.family,
            "holds": self.holds,
            "witnesses": self.witnesses,
            "roots_paired": self.roots_paired,
            "notes": self.notes,
        }


class LieSuperalgebra:
    """Finite-dimensional matrix Lie superalgebra with exact structure
    constants c[i][j] -> {k: coeff} for the bracket of basis elements."""

    def __init__(self, name, family, m, n, basis, parities, labels, cartan_count, notes=None):
        self.name = name
        self.family = family
        self.m = m
        self.n = n
        self.basis = tuple(tuple(tuple(e for e in row) for row in mat) for mat in basis)
        self.parities = tuple(parities)
        self.labels = tuple(labels)
        self.cartan = tuple(range(cartan_count))
        self.notes = dict(notes or {})
        self._structure = None
        self._roots = None
        self._chevalley = None
        self._compact = None

    # -- shape -------------------------------------------------------------

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def dim_even(self) -> int:
        return sum(1 for p in self.parities if p == 0)

    @property
    def dim_odd(self) -> int:
        return sum(1 for p in self.parities if p == 1)

    @property
    def size(self) -> int:
        return self.m + self.n

    def matrix(self, idx: int):
        return [list(row) for row in self.basis[idx]]

    def rep_matrix(self, idx: int, q: int) -> SuperMatrix:
        return SuperMatrix.from_scalars(self.m, self.n, q, self.basis[idx])

    def combo_matrix(self, coeffs, q: int = 0) -> SuperMatrix:
        """SuperMatrix for a coefficient vector over the basis; coefficients
        may be scalars or Grassmann elements (sharing q)."""
        size = self.size
        rows = [[GrassmannElement.zero(q) for _ in range(size)] for _ in range(size)]
        for i, c in enumerate(coeffs):
            if isinstance(c, GrassmannElement):
                if not c.coeffs:
                    continue
                for u in range(size):
                    for v in range(size):
                        e = self.basis[i][u][v]
                        if e:
                            rows[u][v] = rows[u][v] + c * e
            else:
                if not c:
                    continue
                for u in range(size):
                    for v in range(size):
                        e = self.basis[i][u][v]
                        if e:
                            rows[u][v] = rows[u][v] + GrassmannElement.scalar(q, c * e)
        return SuperMatrix(self.m, self.n, q, rows)

    # -- structure constants -------------------------------------------------

    def _flat_columns(self):
        size = self.size
        cols = []
        for mat in self.basis:
            cols.append([mat[u][v] for u in range(size) for v in range(size)])
        # rows = positions, columns = basis index
        return [[cols[k][r] for k in range(self.dim)] for r in range(size * size)]

    def expand_matrix(self, mat):
        """Coefficients of a scalar matrix in the basis, or None."""
        size = self.size
        rhs = [mat[u][v] for u in range(size) for v in range(size)]
        if not hasattr(self, "_expand_rows"):
            self._expand_rows = self._flat_columns()
        sol = linalg.solve(self._expand_rows, rhs)
        if sol is None:
            return None
        # verify (solve returns a particular solution of a possibly
        # underdetermined system; bases here are independent, but check)
        recon = [_ZERO] * (size * size)
        for k, c in enumerate(sol):
            if c:
                col = self.basis[k]
                for u in range(size):
                    for v in range(size):
                        if col[u][v]:
                            recon[u * size + v] = recon[u * size + v] + c * col[u][v]
        if recon != rhs:
            return None
        return sol

    def _matrix_bracket(self, i: int, j: int):
        size = self.size
        a, b = self.basis[i], self.basis[j]
        sign = -_ONE if (self.parities[i] and self.parities[j]) else _ONE
        out = [[_ZERO] * size for _ in range(size)]
        for u in range(size):
            for k in range(size):
                if a[u][k]:
                    for v in range(size):
                        if b[k][v]:
                            out[u][v] = out[u][v] + a[u][k] * b[k][v]
        for u in range(size):
            for k in range(size):
                if b[u][k]:
                    for v in range(size):
                        if a[k][v]:
                            out[u][v] = out[u][v] - sign * b[u][k] * a[k][v]
        return out

    @property
    def structure(self):
        if self._structure is None:
            table = {}
            for i in range(self.dim):
                for j in range(self.dim):
                    mat = self._matrix_bracket(i, j)
                    coeffs = self.expand_matrix(mat)
                    if coeffs is None:
                        raise ModelError(
                            f"bracket [{self.labels[i]},{self.labels[j]}] leaves the span of {self.name}"
                        )
                    entry = {k: c for k, c in enumerate(coeffs) if c}
                    if entry:
                        table[(i, j)] = entry
            self._structure = table
        return self._structure

    def bracket(self, x, y):
        """Super commutator of coefficient vectors, expanded in the basis."""
        table = self.structure
        out = [_ZERO] * self.dim
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if not yj:
                    continue
                entry = table.get((i, j))
                if entry:
                    f = xi * yj
                    for k, c in entry.items():
                        out[k] = out[k] + f * c
        return out

    def ad_matrix(self, i: int):
        """Matrix of ad(basis[i]) in the basis (columns indexed by j)."""
        table = self.structure
        mat = [[_ZERO] * self.dim for _ in range(self.dim)]
        for j in range(self.dim):
            entry = table.get((i, j))
            if entry:
                for k, c in entry.items():
                    mat[k][j] = c
        return mat

    def structure_is_integral(self) -> bool:
        return all(
            c.is_integer() for entry in self.structure.values() for c in entry.values()
        )

    # -- roots ---------------------------------------------------------------

    def cartan_diagonals(self):
        out = []
        size = self.size
        for t in self.cartan:
            out.append([self.basis[t][u][u] for u in range(size)])
        return out

    def weight_diagonals(self):
        """Diagonal functionals used for root coordinates.  gl/sl use the
        ambient epsilon/delta coordinates (one per diagonal position), which
        stay faithful when the model Cartan is small (sl(1|1), sl(n|n));
        other families use their own Cartan basis."""
        size = self.size
        if self.family in ("gl", "sl"):
            return [
                [(_ONE if u == t else _ZERO) for u in range(size)]
                for t in range(size)
            ]
        return self.cartan_diagonals()

    @property
    def roots(self):
        if self._roots is None:
            diags = self.weight_diagonals()
            size = self.size
            roots = []
            for idx in range(self.dim):
                if idx in self.cartan:
                    continue
                mat = self.basis[idx]
                weight = None
                for u in range(size):
                    for v in range(size):
                        if mat[u][v]:
                            w = tuple((d[u] - d[v]).re for d in diags)
                            if weight is None:
                                weight = w
                            elif weight != w:
                                raise ModelError(
                                    f"basis element {self.labels[idx]} mixes weights"
                                )
                if weight is None or not any(weight):
                    continue
                roots.append(Root(coords=weight, parity=self.parities[idx], vector_index=idx))
            roots.sort(key=lambda r: (r.coords, r.parity, r.vector_index))
            self._roots = tuple(roots)
        return self._roots

    def roots_paired(self) -> bool:
        seen = {}
        for r in self.roots:
            seen.setdefault(r.coords, set()).add(r.parity)
        for coords, pars in seen.items():
            neg = tuple(-c for c in coords)
            if neg not in seen or seen[neg] != pars:
                return False
        return True


# -- model builders ------------------------------------------------------------


def _zero_mat(size):
    return [[_ZERO] * size for _ in range(size)]


def _unit(size, i, j):
    mat = _zero_mat(size)
    mat[i][j] = _ONE
    return mat


def _build_gl(m, n):
    size = m + n
    cartan = [(_unit(size, t, t), 0, f"E{t+1},{t+1}") for t in range(size)]
    rest = []
    for i in range(size):
        for j in range(size):
            if i == j:
                continue
            parity = (1 if i >= m else 0) ^ (1 if j >= m else 0)
            rest.append((_unit(size, i, j), parity, f"E{i+1},{j+1}"))
    return cartan, rest, {}


def _build_sl(m, n):
    size = m + n
    if size < 2:
        raise ParameterError("sl(m|n) needs m+n >= 2")
    cartan = []
    for i in range(m - 1):
        mat = _zero_mat(size)
        mat[i][i] = _ONE
        mat[i + 1][i + 1] = -_ONE
        cartan.append((mat, 0, f"H{i+1}"))
    if n >= 1:
        mat = _zero_mat(size)
        mat[m - 1][m - 1] = _ONE
        mat[m][m] = _ONE
        cartan.append((mat, 0, f"H{m}"))
        for j in range(n - 1):
            mat = _zero_mat(size)
            mat[m + j][m + j] = _ONE
            mat[m + j + 1][m + j + 1] = -_ONE
            cartan.append((mat, 0, f"H{m+1+j}"))
    rest = []
    for i in range(size):
        for j in range(size):
            if i == j:
                continue
            parity = (1 if i >= m else 0) ^ (1 if j >= m else 0)
            rest.append((_unit(size, i, j), parity, f"E{i+1},{j+1}"))
    notes = {}
    if m == n:
        notes["center"] = "sl(n|n) contains the center spanned by the identity; not quotiented"
    return cartan, rest, notes


def _osp_form(p, two_n):
    n = two_n // 2
    size = p + two_n
    g = [[Fraction(0)] * size for _ in range(size)]
    for i in range(p):
        g[i][p - 1 - i] = Fraction(1)
    for i in range(n):
        g[p + i][p + n + i] = Fraction(1)
        g[p + n + i][p + i] = Fraction(-1)
    return g


def _build_osp(p, two_n):
    if two_n % 2:
        raise ParameterError("osp(p|q) needs even odd-dimension q")
    if p < 0 or two_n < 0 or p + two_n == 0:
        raise ParameterError("osp needs p + q > 0")
    n = two_n // 2
    size = p + two_n
    g = _osp_form(p, two_n)
    pos_parity = [0] * p + [1] * two_n

    def solve_sector(par):
        # unknown entries: all (u,v) with position parity == par
        positions = [
            (u, v)
            for u in range(size)
            for v in range(size)
            if (pos_parity[u] ^ pos_parity[v]) == par
        ]
        index = {pos: k for k, pos in enumerate(positions)}
        rows = []
        for a in range(size):
            for b in range(size):
                row = [Fraction(0)] * len(positions)
                touched = False
                # (X^T G)[a][b] = sum_c X[c][a] G[c][b]
                for c in range(size):
                    if g[c][b] and (c, a) in index:
                        row[index[(c, a)]] += g[c][b]
                        touched = True
                # sign * (G X)[a][b] = sign * sum_c G[a][c] X[c][b]
                sgn = Fraction(-1) if (par and pos_parity[a]) else Fraction(1)
                for c in range(size):
                    if g[a][c] and (c, b) in index:
                        row[index[(c, b)]] += sgn * g[a][c]
                        touched = True
                if touched:
                    rows.append(row)
        basis_vecs = linalg.nullspace(rows, len(positions), one=Fraction(1))
        mats = []
        for vec in basis_vecs:
            mat = _zero_mat(size)
            for pos, k in index.items():
                if vec[k]:
                    mat[pos[0]][pos[1]] = GaussScalar(vec[k])
            mats.append((mat, par))
        return mats

    even = solve_sector(0)
    odd = solve_sector(1)

    cartan = []
    for i in range(p // 2):
        mat = _zero_mat(size)
        mat[i][i] = _ONE
        mat[p - 1 - i][p - 1 - i] = -_ONE
        cartan.append((mat, 0, f"H{len(cartan)+1}"))
    for i in range(n):
        mat = _zero_mat(size)
        mat[p + i][p + i] = _ONE
        mat[p + n + i][p + n + i] = -_ONE
        cartan.append((mat, 0, f"H{len(cartan)+1}"))
    rest = [(mat, par, None) for mat, par in even + odd]
    return cartan, rest, {}


def _build_q(n):
    if n < 1:
        raise ParameterError("q(n) needs n >= 1")
    size = 2 * n
    cartan = []
    for i in range(n):
        mat = _zero_mat(size)
        mat[i][i] = _ONE
        mat[n + i][n + i] = _ONE
        cartan.append((mat, 0, f"H{i+1}"))
    rest = []
    for i in range(n):
        for j in range(n):
            if i != j:
                mat = _zero_mat(size)
                mat[i][j] = _ONE
                mat[n + i][n + j] = _ONE
                rest.append((mat, 0, None))
    for i in range(n):
        for j in range(n):
            mat = _zero_mat(size)
            mat[i][n + j] = _ONE
            mat[n + i][j] = _ONE
            rest.append((mat, 1, None))
    notes = {
        "zero_weight_odd": "the odd part contains diagonal (zero-weight) vectors outside the Cartan subalgebra"
    }
    return cartan, rest, notes


def _build_p(n):
    if n < 1:
        raise ParameterError("p(n) needs n >= 1")
    size = 2 * n
    cartan = []
    for i in range(n - 1):
        mat = _zero_mat(size)
        mat[i][i] = _ONE
        mat[i + 1][i + 1] = -_ONE
        mat[n + i][n + i] = -_ONE
        mat[n + i + 1][n + i + 1] = _ONE
        cartan.append((mat, 0, f"H{i+1}"))
    rest = []
    for i in range(n):
        for j in range(n):
            if i != j:
                mat = _zero_mat(size)
                mat[i][j] = _ONE
                mat[n + j][n + i] = -_ONE
                rest.append((mat, 0, None))
    for i in range(n):
        for j in range(i, n):
            mat = _zero_mat(size)
            mat[i][n + j] = _ONE
            mat[j][n + i] = _ONE  # same entry when i == j
            if i == j:
                mat[i][n + i] = _ONE
            rest.append((mat, 1, None))
    for i in range(n):
        for j in range(i + 1, n):
            mat = _zero_mat(size)
            mat[i][n + j] = _ONE
            mat[j][n + i] = -_ONE
            rest.append((mat, 1, None))
    notes = {
        "roots_unpaired": "the periplectic root system is not symmetric under negation"
    }
    return cartan, rest, notes


def _canonicalize(cartan, rest, m, n):
    """Split non-Cartan elements into weight-and-parity-homogeneous vectors,
    normalize, and sort.  Returns (basis, parities, labels)."""
    size = m + n
    diags = [[mat[u][u] for u in range(size)] for mat, _, _ in cartan]

    def position_weight(u, v):
        return tuple((d[u] - d[v]).re for d in diags)

    cart_flat = [[mat[u][v] for u in range(size) for v in range(size)] for mat, _, _ in cartan]
    cart_red, cart_piv = linalg.rref(cart_flat) if cart_flat else ([], [])

    def reduce_mod_cartan(vec):
        v = list(vec)
        for row, pc in zip(cart_red, cart_piv):
            if v[pc]:
                f = v[pc]
                v = [a - f * b for a, b in zip(v, row)]
        return v

    groups = {}
    for mat, parity, _label in rest:
        parts = {}
        for u in range(size):
            for v in range(size):
                if mat[u][v]:
                    w = position_weight(u, v)
                    parts.setdefault(w, _zero_mat(size))[u][v] = mat[u][v]
        for w, part in parts.items():
            vec = [part[u][v] for u in range(size) for v in range(size)]
            if parity == 0 and not any(w):
                vec = reduce_mod_cartan(vec)
                if not any(vec):
                    continue
            groups.setdefault((w, parity), []).append(vec)

    basis = [mat for mat, _, _ in cartan]
    parities = [p for _, p, _ in cartan]
    labels = [lab for _, _, lab in cartan]

    for (w, parity) in sorted(groups, key=lambda kp: (kp[0], kp[1])):
        red, pivots = linalg.rref(groups[(w, parity)])
        vec_count = 0
        for row in red[: len(pivots)]:
            # integral rescale: clear denominators, make primitive
            dens = [c.re.denominator for c in row if c] + [1]
            mult = lcm(*dens) if len(dens) > 1 else 1
            scaled = [c * mult for c in row]
            nums = [abs(c.re.numerator) for c in scaled if c] or [1]
            g = 0
            for x in nums:
                g = gcd(g, x)
            if g > 1:
                scaled = [c / g for c in scaled]
            mat = [[scaled[u * size + v] for v in range(size)] for u in range(size)]
            wtxt = ",".join(str(c) for c in w)
            suffix = f".{vec_count}" if len(red) > 1 and len(pivots) > 1 else ""
            ptag = "o" if parity else "e"
            labels.append(f"X({wtxt}){ptag}{suffix}" if any(w) else f"Z({wtxt}){ptag}{suffix}")
            basis.append(mat)
            parities.append(parity)
            vec_count += 1
    # elementary-matrix labels where applicable
    for k in range(len(cartan), len(basis)):
        mat = basis[k]
        nz = [(u, v) for u in range(size) for v in range(size) if mat[u][v]]
        if len(nz) == 1 and mat[nz[0][0]][nz[0][1]] == 1:
            labels[k] = f"E{nz[0][0]+1},{nz[0][1]+1}"
    return basis, parities, labels


_FAMILY_RE = re.compile(
    r"^(?P<fam>gl|sl|osp|q|p|A|B|C|D|P|Q|F|G)\s*\((?P<args>[^)]*)\)$"
)


def parse_family(spec: str):
    """Returns (family, (params...)) in terms of the direct model families."""
    s = spec.strip()
    m = _FAMILY_RE.match(s)
    if not m:
        raise UnsupportedFamilyError(f"cannot parse algebra spec {spec!r}")
    fam = m.group("fam")
    args = m.group("args").replace(" ", "")
    if fam in ("gl", "sl"):
        mm = re.match(r"^(\d+)(?:\|(\d+))?$", args)
        if not mm:
            raise ParameterError(f"bad parameters in {spec!r}")
        a = int(mm.group(1))
        b = int(mm.group(2)) if mm.group(2) is not None else 0
        return fam, (a, b)
    if fam == "osp":
        mm = re.match(r"^(\d+)\|(\d+)$", args)
        if not mm:
            raise ParameterError(f"bad parameters in {spec!r}")
        return "osp", (int(mm.group(1)), int(mm.group(2)))
    if fam in ("q", "p"):
        mm = re.match(r"^(\d+)$", args)
        if not mm:
            raise ParameterError(f"bad parameters in {spec!r}")
        return fam, (int(mm.group(1)),)
    if fam == "A":
        mm = re.match(r"^(\d+),(\d+)$", args)
        if not mm:
            raise ParameterError(f"bad parameters in {spec!r}")
        a, b = int(mm.group(1)), int(mm.group(2))
        if not (a >= b >= 0 and a + b > 0):
            raise ParameterError(f"A(m,n) needs m >= n >= 0 and m+n > 0; got {spec!r}")
        return "sl", (a + 1, b + 1)
    if fam == "B":
        mm = re.match(r"^(\d+),(\d+)$", args)
        if not mm:
            raise ParameterError(f"bad parameters in {spec!r}")
        a, b = int(mm.group(1)), int(mm.group(2))
        if not (a >= 0 and b >= 1):
            raise ParameterError(f"B(m,n) needs m >= 0, n >= 1; got {spec!r}")
        return "osp", (2 * a + 1, 2 * b)
    if fam == "C":
        mm = re.match(r"^(\d+)$", args)
        if not mm:
            raise ParameterError(f"bad parameters in {spec!r}")
        a = int(mm.group(1))
        if a < 3:
            raise ParameterError(f"C(n) needs n >= 3; got {spec!r}")
        return "osp", (2, 2 * a - 2)
    if fam == "D":
        if ";" in args:
            raise UnsupportedFamilyError("the exceptional family D(2,1;a) is not supported")
        mm = re.match(r"^(\d+),(\d+)$", args)
        if not mm:
            raise ParameterError(f"bad parameters in {spec!r}")
        a, b = int(mm.group(1)), int(mm.group(2))
        if not (a >= 2 and b >= 1):
            raise ParameterError(f"D(m,n) needs m >= 2, n >= 1; got {spec!r}")
        return "osp", (2 * a, 2 * b)
    if fam in ("P", "Q"):
        mm = re.match(r"^(\d+)$", args)
        if not mm:
            raise ParameterError(f"bad parameters in {spec!r}")
        a = int(mm.group(1))
        if a < 2:
            raise ParameterError(f"{fam}(n) needs n >= 2; got {spec!r}")
        return fam.lower(), (a,)
    if fam in ("F", "G"):
        raise UnsupportedFamilyError(f"the exceptional family {spec!r} is not supported")
    raise UnsupportedFamilyError(f"unknown family {spec!r}")


@lru_cache(maxsize=None)
def build_algebra(spec: str) -> LieSuperalgebra:
    fam, params = parse_family(spec)
    if fam == "gl":
        m, n = params
        if m + n == 0:
            raise ParameterError("gl(0|0) is empty")
        cartan, rest, notes = _build_gl(m, n)
    elif fam == "sl":
        m, n = params
        cartan, rest, notes = _build_sl(m, n)
    elif fam == "osp":
        p, two_n = params
        cartan, rest, notes = _build_osp(p, two_n)
        m, n = p, two_n
    elif fam == "q":
        (k,) = params
        cartan, rest, notes = _build_q(k)
        m = n = k
    elif fam == "p":
        (k,) = params
        cartan, rest, notes = _build_p(k)
        m = n = k
    else:  # pragma: no cover
        raise UnsupportedFamilyError(spec)
    if fam in ("gl", "sl"):
        m, n = params
    if fam in ("gl", "sl") and (m, n) in ((1, 1),):
        notes = dict(notes)
        notes["example_only"] = (
            f"{fam}(1|1) is not of classical type (it is solvable or has a center); "
            "supported for the worked examples"
        )
    basis, parities, labels = _canonicalize(cartan, rest, m, n)
    alg = LieSuperalgebra(
        name=spec.strip(),
        family=fam,
        m=m,
        n=n,
        basis=basis,
        parities=parities,
        labels=labels,
        cartan_count=len(cartan),
        notes=notes,
    )
    alg.structure  # force closure validation
    return alg


# -- validation ----------------------------------------------------------------


def validate_structure_tensor(parities, structure, dim):
    """Graded antisymmetry and the graded Jacobi identity, straight from a
    structure-constant tensor.  Returns (ok, counterexample_or_None)."""

    def entry(i, j):
        return structure.get((i, j), {})

    for i in range(dim):
        for j in range(dim):
            sign = -1 if (parities[i] and parities[j]) else 1
            left = entry(i, j)
            right = entry(j, i)
            keys = set(left) | set(right)
            for k in keys:
                a = left.get(k, _ZERO)
                b = right.get(k, _ZERO)
                if a != -(GaussScalar(sign) * b):
                    return False, {
                        "kind": "antisymmetry",
                        "pair": (i, j),
                        "component": k,
                    }
    for i in range(dim):
        pi = parities[i]
        for j in range(dim):
            pj = parities[j]
            for k in range(dim):
                pk = parities[k]
                acc = {}

                def add_term(sign_par, a, b, c):
                    # sign_par * [a, [b, c]]
                    inner = entry(b, c)
                    for mkey, mc in inner.items():
                        outer = entry(a, mkey)
                        for tkey, tc in outer.items():
                            val = mc * tc
                            if sign_par:
                                val = -val
                            acc[tkey] = acc.get(tkey, _ZERO) + val

                add_term(pi * pk, i, j, k)
                add_term(pj * pi, j, k, i)
                add_term(pk * pj, k, i, j)
                for tkey, val in acc.items():
                    if val:
                        return False, {
                            "kind": "jacobi",
                            "triple": (i, j, k),
                            "component": tkey,
                        }
    return True, None


def super_jacobi_check(g: LieSuperalgebra):
    """Exhaustive graded antisymmetry + Jacobi over all basis triples."""
    return validate_structure_tensor(g.parities, g.structure, g.dim)


def check_assumption(g: LieSuperalgebra) -> AdmissibilityReport:
    """Evaluate the square-zero condition [X, X] = 0 on every odd root
    vector; collects all violations as witnesses."""
    witnesses = []
    for root in g.roots:
        if root.parity != 1:
            continue
        i = root.vector_index
        entry = g.structure.get((i, i), {})
        if entry:
            witnesses.append(
                {
                    "root": root.coords_str(),
                    "vector": g.labels[i],
                    "bracket": {g.labels[k]: str(c) for k, c in sorted(entry.items())},
                }
            )
    notes = {}
    if "example_only" in g.notes:
        notes["example_only"] = g.notes["example_only"]
    if g.family == "q":
        notes["classification"] = (
            "q(2) is excluded from the classification by a representation-theoretic "
            "argument; the square-zero check here is independent of that exclusion"
        )
    if g.family == "p":
        notes["no_external_claim"] = (
            "the square-zero status of the periplectic family is computed here "
            "without any external assertion either way"
        )
    paired = g.roots_paired()
    if not paired:
        notes["roots_unpaired"] = "roots do not come in (alpha, -alpha) pairs"
    return AdmissibilityReport(
        family=g.name,
        holds=not witnesses,
        witnesses=witnesses,
        roots_paired=paired,
        notes=notes,
    )


# -- Chevalley-style data --------------------------------------------------------


@dataclass
class ChevalleyData:
    algebra: LieSuperalgebra
    h_indices: tuple
    roots: tuple
    integral: bool
    coroot_map: dict  # root coords -> tuple of coefficients over h_indices
    coroot_integral: bool

    def root_by_coords(self, coords):
        for r in self.roots:
            if r.coords == tuple(coords):
                return r
        return None

    def negative(self, root: Root) -> Root:
        neg = tuple(-c for c in root.coords)
        out = [r for r in self.roots if r.coords == neg and r.parity == root.parity]
        if not out:
            raise ChevalleyUnsupportedError(f"root {root.coords_str()} has no negative partner")
        return out[0]

    def positive_roots(self):
        return tuple(r for r in self.roots if r.positive)


def chevalley_basis(g: LieSuperalgebra) -> ChevalleyData:
    """Cartan basis plus one normalized vector per root.

    For gl/sl the result is the elementary-matrix basis with all-integer
    structure constants.  For osp the same data is returned best-effort
    with the integrality flags computed, not asserted.  q(n) (odd diagonal
    outside the span) and p(n) (unpaired roots) are unsupported.
    """
    if g._chevalley is not None:
        return g._chevalley
    if g.family == "q":
        raise ChevalleyUnsupportedError(
            "q(n) has zero-weight odd vectors outside the Cartan-plus-roots span"
        )
    if g.family == "p":
        raise ChevalleyUnsupportedError(
            "p(n) roots are not closed under negation; no Chevalley-style pairing"
        )
    roots = g.roots
    # every basis slot must be Cartan or a root vector
    covered = set(g.cartan) | {r.vector_index for r in roots}
    if covered != set(range(g.dim)):
        raise ChevalleyUnsupportedError(
            f"{g.name}: basis contains zero-weight non-Cartan vectors"
        )
    if not g.roots_paired():
        raise ChevalleyUnsupportedError(f"{g.name}: root system is not symmetric")
    coroot_map = {}
    coroot_integral = True
    data = ChevalleyData(
        algebra=g,
        h_indices=g.cartan,
        roots=roots,
        integral=g.structure_is_integral(),
        coroot_map=coroot_map,
        coroot_integral=True,
    )
    for r in roots:
        neg = data.negative(r)
        entry = g.structure.get((r.vector_index, neg.vector_index), {})
        coeffs = []
        ok = True
        for k in range(g.dim):
            c = entry.get(k, _ZERO)
            if c and k not in g.cartan:
                ok = False
            if k in g.cartan:
                coeffs.append(c)
        if not ok:
            raise ChevalleyUnsupportedError(
                f"[X, X'] for the pair ({r.coords_str()}, -) does not land in the Cartan subalgebra"
            )
        coroot_map[r.coords] = tuple(coeffs)
        if not all(c.is_integer() for c in coeffs):
            coroot_integral = False
    data.coroot_integral = coroot_integral
    g._chevalley = data
    return data
