"""Exact dense/sparse linear algebra over Q(i).

Everything here is pure and exact: reduced row-echelon forms are the
unique canonical representatives of their row spaces, so downstream
subspace equality is plain syntactic equality.  Big sparse systems
(cochain differentials, closed-form extension solves) go through
SparseRowReducer; small dense matrices use QiMatrix directly.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .scalars import GaussianRational, ONE, ZERO, _coerce

Vector = tuple[GaussianRational, ...]


def as_scalar(x) -> GaussianRational:
    return _coerce(x)


def vector(entries: Iterable) -> Vector:
    return tuple(_coerce(e) for e in entries)


def zero_vector(n: int) -> Vector:
    return (ZERO,) * n


def vadd(a: Vector, b: Vector) -> Vector:
    return tuple(x + y for x, y in zip(a, b, strict=True))

def vsub(a: Vector, b: Vector) -> Vector:
    return tuple(x - y for x, y in zip(a, b, strict=True))

def vscale(c, a: Vector) -> Vector:
    c = _coerce(c)
    return tuple(c * x for x in a)

def vis_zero(a: Vector) -> bool:
    return not any(a)


class QiMatrix:
    """Immutable dense matrix over Q(i)."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Sequence[Sequence]):
        rows = tuple(tuple(_coerce(e) for e in row) for row in entries)
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged matrix")
        object.__setattr__(self, "rows", len(rows))
        object.__setattr__(self, "cols", ncols)
        object.__setattr__(self, "entries", rows)

    def __setattr__(self, name, value):
        raise AttributeError("QiMatrix is immutable")

    @classmethod
    def identity(cls, n: int) -> "QiMatrix":
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "QiMatrix":
        return cls([[ZERO] * cols for _ in range(rows)])

    @classmethod
    def from_dict(cls, rows: int, cols: int, data: dict) -> "QiMatrix":
        m = [[ZERO] * cols for _ in range(rows)]
        for (i, j), v in data.items():
            m[i][j] = _coerce(v)
        return cls(m)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def row(self, i: int) -> Vector:
        return self.entries[i]

    def __eq__(self, other):
        return isinstance(other, QiMatrix) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __add__(self, other: "QiMatrix") -> "QiMatrix":
        self._same_shape(other)
        return QiMatrix([[a + b for a, b in zip(r1, r2)]
                         for r1, r2 in zip(self.entries, other.entries)])

    def __sub__(self, other: "QiMatrix") -> "QiMatrix":
        self._same_shape(other)
        return QiMatrix([[a - b for a, b in zip(r1, r2)]
                         for r1, r2 in zip(self.entries, other.entries)])

    def __neg__(self) -> "QiMatrix":
        return QiMatrix([[-a for a in r] for r in self.entries])

    def scale(self, c) -> "QiMatrix":
        c = _coerce(c)
        return QiMatrix([[c * a for a in r] for r in self.entries])

    def __mul__(self, other: "QiMatrix") -> "QiMatrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} * "
                             f"{other.rows}x{other.cols}")
        out = [[ZERO] * other.cols for _ in range(self.rows)]
        for i, arow in enumerate(self.entries):
            orow = out[i]
            for k, a in enumerate(arow):
                if not a:
                    continue
                brow = other.entries[k]
                for j, b in enumerate(brow):
                    if b:
                        orow[j] = orow[j] + a * b
        return QiMatrix(out)

    def matvec(self, v: Sequence) -> Vector:
        if self.cols != len(v):
            raise ValueError("shape mismatch in matvec")
        v = vector(v)
        out = []
        for arow in self.entries:
            acc = ZERO
            for a, x in zip(arow, v):
                if a and x:
                    acc = acc + a * x
            out.append(acc)
        return tuple(out)

    def transpose(self) -> "QiMatrix":
        return QiMatrix(list(zip(*self.entries))) if self.rows else QiMatrix([])

    def conjugate(self) -> "QiMatrix":
        return QiMatrix([[a.conjugate() for a in r] for r in self.entries])

    def trace(self) -> GaussianRational:
        if self.rows != self.cols:
            raise ValueError("trace of non-square matrix")
        t = ZERO
        for i in range(self.rows):
            t = t + self.entries[i][i]
        return t

    def is_zero(self) -> bool:
        return all(not a for r in self.entries for a in r)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def _same_shape(self, other: "QiMatrix"):
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError("shape mismatch")

    def __repr__(self):
        body = "; ".join(" ".join(str(a) for a in r) for r in self.entries)
        return f"QiMatrix[{self.rows}x{self.cols}: {body}]"


def _rref_rows(rows: list[list[GaussianRational]], ncols: int):
    """In-place reduced row echelon form; returns pivot column list."""
    pivots: list[int] = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        src = None
        for i in range(r, nrows):
            if rows[i][c]:
                src = i
                break
        if src is None:
            continue
        rows[r], rows[src] = rows[src], rows[r]
        inv = ONE / rows[r][c]
        if inv != ONE:
            rows[r] = [inv * a for a in rows[r]]
        prow = rows[r]
        for i in range(nrows):
            if i == r:
                continue
            f = rows[i][c]
            if f:
                ri = rows[i]
                for j in range(c, ncols):
                    if prow[j]:
                        ri[j] = ri[j] - f * prow[j]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots


def rref(m: QiMatrix) -> tuple[QiMatrix, tuple[int, ...]]:
    """Unique reduced row-echelon form and its pivot columns."""
    rows = [list(r) for r in m.entries]
    pivots = _rref_rows(rows, m.cols)
    return QiMatrix(rows), tuple(pivots)


def rank(m: QiMatrix) -> int:
    return len(rref(m)[1])


def nullspace(m: QiMatrix) -> tuple[Vector, ...]:
    """Canonical (row-reduced) basis of the right kernel of m."""
    red, pivots = rref(m)
    pivot_set = set(pivots)
    free = [c for c in range(m.cols) if c not in pivot_set]
    basis = []
    for f in free:
        v = [ZERO] * m.cols
        v[f] = ONE
        for r, p in enumerate(pivots):
            if red.entries[r][f]:
                v[p] = -red.entries[r][f]
        basis.append(v)
    if not basis:
        return ()
    _rref_rows(basis, m.cols)
    return tuple(tuple(v) for v in basis)


class LinearSolution:
    """Particular solution plus canonical kernel basis of a*x = b."""

    __slots__ = ("particular", "kernel")

    def __init__(self, particular, kernel):
        object.__setattr__(self, "particular", particular)
        object.__setattr__(self, "kernel", kernel)

    def __setattr__(self, name, value):
        raise AttributeError("LinearSolution is immutable")


def solve(a: QiMatrix, b) -> Optional[LinearSolution]:
    """Solve a*x = b exactly; None when the system is inconsistent.

    b may be a vector (length a.rows) or a QiMatrix with a.rows rows; the
    particular solution mirrors that shape.  Free variables are set to 0.
    """
    vec_mode = not isinstance(b, QiMatrix)
    bm = QiMatrix([[x] for x in b]) if vec_mode else b
    if bm.rows != a.rows:
        raise ValueError("dimension mismatch between a and b")
    rows = [list(ra) + list(rb) for ra, rb in zip(a.entries, bm.entries)]
    if not rows:
        rows = []
    aug = QiMatrix(rows) if rows else QiMatrix.zeros(0, a.cols + bm.cols)
    red, pivots = rref(aug)
    if any(p >= a.cols for p in pivots):
        return None
    part = [[ZERO] * bm.cols for _ in range(a.cols)]
    for r, p in enumerate(pivots):
        for j in range(bm.cols):
            part[p][j] = red.entries[r][a.cols + j]
    kernel = nullspace(a)
    if vec_mode:
        return LinearSolution(tuple(row[0] for row in part), kernel)
    return LinearSolution(QiMatrix(part), kernel)


def det(m: QiMatrix) -> GaussianRational:
    """Exact determinant by fraction-full Gaussian elimination."""
    if not m.is_square():
        raise ValueError("determinant of non-square matrix")
    n = m.rows
    rows = [list(r) for r in m.entries]
    d = ONE
    for c in range(n):
        src = None
        for i in range(c, n):
            if rows[i][c]:
                src = i
                break
        if src is None:
            return ZERO
        if src != c:
            rows[c], rows[src] = rows[src], rows[c]
            d = -d
        piv = rows[c][c]
        d = d * piv
        inv = ONE / piv
        for i in range(c + 1, n):
            f = rows[i][c]
            if f:
                f = f * inv
                ri = rows[i]
                prow = rows[c]
                for j in range(c, n):
                    if prow[j]:
                        ri[j] = ri[j] - f * prow[j]
    return d


# ---------------------------------------------------------------------------
# sparse incremental elimination
# ---------------------------------------------------------------------------

SparseRow = dict[int, GaussianRational]


class SparseRowReducer:
    """Incremental exact row reduction with rows held as {col: value} dicts.

    Rows are fed one at a time; each is fully reduced against the pivots
    collected so far.  finish() back-substitutes to the unique RREF of the
    accumulated row space (pivot choice en route does not affect it).
    """

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.pivot_rows: dict[int, SparseRow] = {}

    @property
    def rank(self) -> int:
        return len(self.pivot_rows)

    def reduce(self, row: SparseRow) -> SparseRow:
        """Return row minus its projection onto the current row space."""
        row = {c: v for c, v in row.items() if v}
        while True:
            hit = None
            for c in sorted(row):
                if c in self.pivot_rows:
                    hit = c
                    break
            if hit is None:
                return row
            f = row.pop(hit)
            for c, v in self.pivot_rows[hit].items():
                if c == hit:
                    continue
                nv = row.get(c, ZERO) - f * v
                if nv:
                    row[c] = nv
                elif c in row:
                    del row[c]

    def add(self, row: SparseRow) -> Optional[int]:
        """Absorb a row; returns its new pivot column, or None if dependent."""
        row = self.reduce(row)
        if not row:
            return None
        lead = min(row)
        inv = ONE / row[lead]
        self.pivot_rows[lead] = {c: inv * v for c, v in row.items()}
        return lead

    def contains(self, row: SparseRow) -> bool:
        return not self.reduce(row)

    def finish(self) -> tuple[list[SparseRow], list[int]]:
        """Back-substitute and return (rows, pivot columns), pivot-sorted."""
        pivots = sorted(self.pivot_rows)
        for p in reversed(pivots):
            prow = self.pivot_rows[p]
            for q in pivots:
                if q >= p:
                    break
                qrow = self.pivot_rows[q]
                f = qrow.get(p)
                if f:
                    for c, v in prow.items():
                        nv = qrow.get(c, ZERO) - f * v
                        if nv:
                            qrow[c] = nv
                        elif c in qrow:
                            del qrow[c]
        return [self.pivot_rows[p] for p in pivots], pivots


def sparse_nullspace(rows: Iterable[SparseRow], ncols: int) -> list[SparseRow]:
    """Canonical kernel basis of the linear system given by sparse rows."""
    red = SparseRowReducer(ncols)
    for row in rows:
        red.add(row)
    rref_rows, pivots = red.finish()
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    canon = SparseRowReducer(ncols)
    for f in free:
        v: SparseRow = {f: ONE}
        for prow, p in zip(rref_rows, pivots):
            coeff = prow.get(f)
            if coeff:
                v[p] = -coeff
        canon.add(v)
    return canon.finish()[0]


def solve_sparse_affine(rows: Iterable[SparseRow], ncols: int) -> Optional[SparseRow]:
    """First solution (free variables = 0) of an affine sparse system.

    Each row maps unknown columns 0..ncols-1 to coefficients and may carry
    the right-hand side under key ncols.  Returns None when inconsistent.
    """
    red = SparseRowReducer(ncols + 1)
    for row in rows:
        red.add(row)
    rref_rows, pivots = red.finish()
    sol: SparseRow = {}
    for prow, p in zip(rref_rows, pivots):
        if p == ncols:
            return None
        rhs = prow.get(ncols)
        if rhs:
            sol[p] = rhs
    return sol


# ---------------------------------------------------------------------------
# univariate polynomials over Q(i)
# ---------------------------------------------------------------------------

class Polynomial:
    """Dense univariate polynomial over Q(i), coefficients ascending."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence):
        cs = [_coerce(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial at -1."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading(self) -> GaussianRational:
        if not self.coeffs:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __eq__(self, other):
        return isinstance(other, Polynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = out[i] + c
        return Polynomial(out)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __neg__(self) -> "Polynomial":
        return Polynomial([-c for c in self.coeffs])

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if self.is_zero() or other.is_zero():
            return Polynomial([])
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    out[i + j] = out[i + j] + a * b
        return Polynomial(out)

    def scale(self, c) -> "Polynomial":
        c = _coerce(c)
        return Polynomial([c * a for a in self.coeffs])

    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        return self.scale(ONE / self.leading())

    def __divmod__(self, other: "Polynomial"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        q = [ZERO] * max(0, self.degree - other.degree + 1)
        rem = list(self.coeffs)
        dlead = other.leading()
        dd = other.degree
        while len(rem) - 1 >= dd and any(rem):
            while rem and not rem[-1]:
                rem.pop()
            if len(rem) - 1 < dd:
                break
            f = rem[-1] / dlead
            k = len(rem) - 1 - dd
            q[k] = f
            for i, c in enumerate(other.coeffs):
                rem[k + i] = rem[k + i] - f * c
        return Polynomial(q), Polynomial(rem)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def derivative(self) -> "Polynomial":
        return Polynomial([i * c for i, c in enumerate(self.coeffs)][1:])

    def __call__(self, x):
        if isinstance(x, QiMatrix):
            return self.eval_matrix(x)
        x = _coerce(x)
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def eval_matrix(self, m: QiMatrix) -> QiMatrix:
        if not m.is_square():
            raise ValueError("polynomial evaluation needs a square matrix")
        acc = QiMatrix.zeros(m.rows, m.rows)
        eye = QiMatrix.identity(m.rows)
        for c in reversed(self.coeffs):
            acc = acc * m + eye.scale(c)
        return acc

    def __repr__(self):
        if self.is_zero():
            return "Polynomial(0)"
        terms = [f"({c})*t^{i}" for i, c in enumerate(self.coeffs) if c]
        return "Polynomial(" + " + ".join(terms) + ")"


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic greatest common divisor."""
    while not b.is_zero():
        a, b = b, a % b
    return a.monic() if not a.is_zero() else a


def poly_extended_gcd(a: Polynomial, b: Polynomial):
    """(g, u, v) with u*a + v*b = g, g monic."""
    r0, r1 = a, b
    s0, s1 = Polynomial([ONE]), Polynomial([])
    t0, t1 = Polynomial([]), Polynomial([ONE])
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if r0.is_zero():
        return r0, s0, t0
    lead = r0.leading()
    inv = ONE / lead
    return r0.monic(), s0.scale(inv), t0.scale(inv)


def char_poly(m: QiMatrix) -> Polynomial:
    """Monic characteristic polynomial via the Faddeev-LeVerrier recurrence."""
    if not m.is_square():
        raise ValueError("characteristic polynomial needs a square matrix")
    n = m.rows
    coeffs = [ZERO] * (n + 1)
    coeffs[n] = ONE
    mk = QiMatrix.zeros(n, n)
    eye = QiMatrix.identity(n)
    c = ONE
    for k in range(1, n + 1):
        mk = m * (mk + eye.scale(c))
        c = -(mk.trace() / k)
        coeffs[n - k] = c
    return Polynomial(coeffs)


def squarefree_part(p: Polynomial) -> Polynomial:
    """p / gcd(p, p'), monic: same roots as p, all simple."""
    g = poly_gcd(p, p.derivative())
    if g.degree <= 0:
        return p.monic()
    return (p // g).monic()


def _is_nilpotent(m: QiMatrix) -> bool:
    n = m.rows
    power = m
    k = 1
    while k < n:
        if power.is_zero():
            return True
        power = power * power
        k *= 2
    return power.is_zero()


def jordan_chevalley(m: QiMatrix) -> tuple[QiMatrix, QiMatrix]:
    """Split m = s + n with s semisimple, n nilpotent, [s, n] = 0.

    Factorization-free: Newton iteration against the squarefree part g of
    the characteristic polynomial, using the Bezout inverse of g' modulo g.
    Both parts are polynomials in m.  All defining identities are asserted.
    """
    if not m.is_square():
        raise ValueError("Jordan-Chevalley needs a square matrix")
    dim = m.rows
    if dim == 0:
        return m, m
    p = char_poly(m)
    g = squarefree_part(p)
    s = m
    gs = g.eval_matrix(s)
    if not gs.is_zero():
        d, u, v = poly_extended_gcd(g, g.derivative())
        if d.degree != 0:
            raise ArithmeticError("squarefree part shares a root with its derivative")
        steps = 0
        max_steps = dim.bit_length() + 2
        while not gs.is_zero():
            if steps >= max_steps:
                raise ArithmeticError("Newton iteration failed to converge")
            s = s - gs * v.eval_matrix(s)
            gs = g.eval_matrix(s)
            steps += 1
    npart = m - s
    if not (s * npart == npart * s):
        raise ArithmeticError("Jordan-Chevalley parts do not commute")
    if not _is_nilpotent(npart):
        raise ArithmeticError("Jordan-Chevalley nilpotent part is not nilpotent")
    return s, npart
