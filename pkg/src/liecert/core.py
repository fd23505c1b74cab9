"""Lie algebras over Q(i) as structure-constant tensors, plus the subspace
calculus and decision procedures built on them.

Subspaces are always held in reduced row-echelon form, so two subspaces are
equal exactly when their stored bases coincide; every certificate produced
here is therefore reproducible bit for bit.  Real subspaces (fixed points of
an antiinvolution) live in doubled coordinates [Re | Im] over Q.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .scalars import GaussianRational, I, ONE, ZERO, _coerce, format_value
from .linalg import (
    QiMatrix,
    SparseRow,
    SparseRowReducer,
    Vector,
    jordan_chevalley,
    rref,
    solve_sparse_affine,
    vector,
    zero_vector,
)

VERIFIED = "verified"
REFUTED = "refuted"
INFEASIBLE = "infeasible"


@dataclass(frozen=True)
class Certificate:
    """Machine-checkable verdict: a claim, its status and a witness payload."""

    claim: str
    status: str
    witness: dict = field(default_factory=dict)
    details: str = ""

    @property
    def verified(self) -> bool:
        return self.status == VERIFIED


def fmt_vector(v: Sequence[GaussianRational]) -> list[str]:
    return [format_value(_coerce(x)) for x in v]


class LieAlgebra:
    """Finite-dimensional complex Lie algebra with a labeled ordered basis.

    The bracket is stored sparsely: table[i][j] for i < j maps basis index k
    to the coefficient of e_k in [e_i, e_j]; antisymmetry fills in the rest.
    An optional faithful matrix representation backs Jordan decompositions.
    """

    def __init__(self, labels: Sequence[str], table: dict, matrix_rep=None):
        self.labels = tuple(labels)
        self.dim = len(self.labels)
        self._table: dict[int, dict[int, SparseRow]] = {}
        for (i, j), row in table.items():
            if not (0 <= i < j < self.dim):
                raise ValueError(f"bad bracket table key ({i}, {j})")
            clean = {k: _coerce(v) for k, v in row.items() if _coerce(v)}
            if clean:
                self._table.setdefault(i, {})[j] = clean
        self.matrix_rep = tuple(matrix_rep) if matrix_rep is not None else None
        if self.matrix_rep is not None and len(self.matrix_rep) != self.dim:
            raise ValueError("matrix_rep length does not match dimension")
        self._index = {lab: i for i, lab in enumerate(self.labels)}
        self._rep_solver = None

    def label_index(self, label: str) -> int:
        return self._index[label]

    def basis_vector(self, i: int) -> Vector:
        v = [ZERO] * self.dim
        v[i] = ONE
        return tuple(v)

    def structure(self, i: int, j: int) -> SparseRow:
        """Sparse coordinates of [e_i, e_j]."""
        if i == j:
            return {}
        if i < j:
            return self._table.get(i, {}).get(j, {})
        row = self._table.get(j, {}).get(i, {})
        return {k: -v for k, v in row.items()}

    def structure_triples(self):
        """Deterministic iterator of (i, j, k, value) with i < j."""
        for i in sorted(self._table):
            for j in sorted(self._table[i]):
                row = self._table[i][j]
                for k in sorted(row):
                    yield i, j, k, row[k]

    def bracket_sparse(self, x: Sequence, y: Sequence) -> SparseRow:
        pair_coeff: dict[tuple[int, int], GaussianRational] = {}
        xs = [(i, v) for i, v in enumerate(x) if v]
        ys = [(j, v) for j, v in enumerate(y) if v]
        for i, xv in xs:
            for j, yv in ys:
                if i == j:
                    continue
                key = (i, j) if i < j else (j, i)
                c = xv * yv if i < j else -(xv * yv)
                prev = pair_coeff.get(key)
                pair_coeff[key] = c if prev is None else prev + c
        acc: SparseRow = {}
        for (i, j), c in pair_coeff.items():
            if not c:
                continue
            row = self._table.get(i, {}).get(j)
            if not row:
                continue
            for k, v in row.items():
                nv = acc.get(k, ZERO) + c * v
                if nv:
                    acc[k] = nv
                elif k in acc:
                    del acc[k]
        return acc

    def bracket(self, x: Sequence, y: Sequence) -> Vector:
        """Bilinear extension of the structure tensor to coordinate vectors."""
        if len(x) != self.dim or len(y) != self.dim:
            raise ValueError("bracket arguments must have length dim")
        acc = self.bracket_sparse(x, y)
        out = [ZERO] * self.dim
        for k, v in acc.items():
            out[k] = v
        return tuple(out)

    def ad_columns(self, x: Sequence) -> list[SparseRow]:
        """Column k holds the coordinates of [x, e_k]."""
        cols = []
        ek = [ZERO] * self.dim
        for k in range(self.dim):
            ek[k] = ONE
            cols.append(self.bracket_sparse(x, ek))
            ek[k] = ZERO
        return cols

    def rep_matrix(self, x: Sequence) -> QiMatrix:
        if self.matrix_rep is None:
            raise ValueError("Lie algebra carries no matrix representation")
        n = self.matrix_rep[0].rows
        acc = [[ZERO] * n for _ in range(n)]
        for coeff, mat in zip(x, self.matrix_rep):
            if not coeff:
                continue
            for r, row in enumerate(mat.entries):
                accr = acc[r]
                for c, v in enumerate(row):
                    if v:
                        accr[c] = accr[c] + coeff * v
        return QiMatrix(acc)

    def rep_coordinates(self, m: QiMatrix) -> Vector:
        """Coordinates of a represented matrix; errors if m is outside."""
        if self.matrix_rep is None:
            raise ValueError("Lie algebra carries no matrix representation")
        if self._rep_solver is None:
            n = self.matrix_rep[0].rows
            rows = []
            for idx, mat in enumerate(self.matrix_rep):
                flat = [mat.entries[r][c] for r in range(n) for c in range(n)]
                aug = [ZERO] * self.dim
                aug[idx] = ONE
                rows.append(flat + aug)
            red, pivots = rref(QiMatrix(rows))
            if len(pivots) != self.dim or any(p >= n * n for p in pivots):
                raise ValueError("matrix representation is not faithful")
            self._rep_solver = (red, pivots, n)
        red, pivots, n = self._rep_solver
        flat = [m.entries[r][c] for r in range(n) for c in range(n)]
        coeffs = [flat[p] for p in pivots]
        # validate: the combination of RREF rows must reproduce m exactly
        recon = [ZERO] * (n * n)
        coords = [ZERO] * self.dim
        for c, row in zip(coeffs, red.entries):
            if not c:
                continue
            for pos in range(n * n):
                if row[pos]:
                    recon[pos] = recon[pos] + c * row[pos]
            for pos in range(self.dim):
                if row[n * n + pos]:
                    coords[pos] = coords[pos] + c * row[n * n + pos]
        if recon != flat:
            raise ValueError("matrix does not lie in the represented algebra")
        return tuple(coords)

    def check_antisymmetry_and_rep(self):
        """Structure-tensor sanity: [x,x]=0 by storage; rep consistency."""
        if self.matrix_rep is None:
            return
        for i in range(self.dim):
            for j in range(i + 1, self.dim):
                lhs = (self.matrix_rep[i] * self.matrix_rep[j]
                       - self.matrix_rep[j] * self.matrix_rep[i])
                rhs = [[ZERO] * lhs.cols for _ in range(lhs.rows)]
                for k, v in self.structure(i, j).items():
                    for r, row in enumerate(self.matrix_rep[k].entries):
                        for c, w in enumerate(row):
                            if w:
                                rhs[r][c] = rhs[r][c] + v * w
                if lhs != QiMatrix(rhs):
                    raise ArithmeticError(
                        f"matrix rep disagrees with structure tensor at "
                        f"({self.labels[i]}, {self.labels[j]})")

    def check_jacobi(self):
        """Exhaustive Jacobi identity over all basis triples."""
        for i in range(self.dim):
            ei = self.basis_vector(i)
            for j in range(i + 1, self.dim):
                ej = self.basis_vector(j)
                bij = self.structure(i, j)
                for k in range(j + 1, self.dim):
                    ek = self.basis_vector(k)
                    acc: SparseRow = {}
                    for row_sp, e3 in (
                        (bij, ek),
                        (self.structure(j, k), ei),
                        (self.structure(k, i), ej),
                    ):
                        dense = [ZERO] * self.dim
                        for idx, v in row_sp.items():
                            dense[idx] = v
                        for idx, v in self.bracket_sparse(dense, e3).items():
                            nv = acc.get(idx, ZERO) + v
                            if nv:
                                acc[idx] = nv
                            elif idx in acc:
                                del acc[idx]
                    if acc:
                        raise ArithmeticError(
                            f"Jacobi identity fails on basis triple "
                            f"({self.labels[i]}, {self.labels[j]}, {self.labels[k]})")


# ---------------------------------------------------------------------------
# subspaces
# ---------------------------------------------------------------------------

COMPLEX = "complex"
REAL = "real-rational"


class Subspace:
    """Canonical (RREF) subspace of an algebra's coordinate space.

    field=COMPLEX: rows live in C^dim.  field=REAL: rows live in the doubled
    rational space Q^(2 dim), coordinates ordered [Re | Im].
    """

    def __init__(self, algebra: LieAlgebra, basis: QiMatrix, pivots, fieldtag: str):
        self.algebra = algebra
        self.basis = basis
        self.pivots = tuple(pivots)
        self.field = fieldtag
        expected = algebra.dim if fieldtag == COMPLEX else 2 * algebra.dim
        if basis.rows and basis.cols != expected:
            raise ValueError("subspace rows have the wrong ambient width")
        self.ambient_cols = expected

    @property
    def dim(self) -> int:
        return self.basis.rows

    def rows(self):
        return self.basis.entries

    def __eq__(self, other):
        return (isinstance(other, Subspace)
                and self.algebra is other.algebra
                and self.field == other.field
                and self.basis == other.basis)

    def __hash__(self):
        return hash((id(self.algebra), self.field, self.basis))

    def contains(self, v: Sequence) -> bool:
        return self.coords(v) is not None

    def coords(self, v: Sequence) -> Optional[Vector]:
        """Coefficients over the stored RREF basis, or None if outside."""
        v = vector(v)
        if len(v) != self.ambient_cols:
            raise ValueError("vector has the wrong ambient width")
        coeffs = [v[p] for p in self.pivots]
        residual = list(v)
        for c, row in zip(coeffs, self.basis.entries):
            if not c:
                continue
            for idx, w in enumerate(row):
                if w:
                    residual[idx] = residual[idx] - c * w
        if any(residual):
            return None
        return tuple(coeffs)

    def __repr__(self):
        return f"Subspace(dim={self.dim}, field={self.field})"


def span(algebra: LieAlgebra, vectors_in, fieldtag: str = COMPLEX) -> Subspace:
    """Canonical subspace spanned by the given coordinate vectors."""
    width = algebra.dim if fieldtag == COMPLEX else 2 * algebra.dim
    rows = []
    for v in vectors_in:
        v = vector(v)
        if len(v) != width:
            raise ValueError("spanning vector has the wrong ambient width")
        if fieldtag == REAL and any(not x.is_rational() for x in v):
            raise ValueError("real-rational subspace rows must be rational")
        rows.append(v)
    if not rows:
        return Subspace(algebra, QiMatrix.zeros(0, width), (), fieldtag)
    red, pivots = rref(QiMatrix(rows))
    kept = red.entries[: len(pivots)]
    return Subspace(algebra, QiMatrix(kept) if kept else QiMatrix.zeros(0, width),
                    pivots, fieldtag)


def full_subspace(algebra: LieAlgebra) -> Subspace:
    return span(algebra, [algebra.basis_vector(i) for i in range(algebra.dim)])


def sum_subspaces(a: Subspace, b: Subspace) -> Subspace:
    _same_ambient(a, b)
    out = span(a.algebra, list(a.rows()) + list(b.rows()), a.field)
    inter_dim = a.dim + b.dim - out.dim
    if inter_dim < 0:
        raise ArithmeticError("dimension formula violated in sum")
    return out

def intersect_subspaces(a: Subspace, b: Subspace) -> Subspace:
    _same_ambient(a, b)
    if a.dim == 0 or b.dim == 0:
        return span(a.algebra, [], a.field)
    stacked = QiMatrix(list(a.rows()) + list(b.rows()))
    from .linalg import nullspace as _nullspace
    kernel = _nullspace(stacked.transpose())
    vectors_out = []
    for kv in kernel:
        u = kv[: a.dim]
        acc = [ZERO] * a.ambient_cols
        for c, row in zip(u, a.rows()):
            if not c:
                continue
            for idx, w in enumerate(row):
                if w:
                    acc[idx] = acc[idx] + c * w
        vectors_out.append(acc)
    out = span(a.algebra, vectors_out, a.field)
    total = sum_subspaces(a, b)
    if a.dim + b.dim != total.dim + out.dim:
        raise ArithmeticError("dimension formula violated in intersect")
    return out


def _same_ambient(a: Subspace, b: Subspace):
    if a.algebra is not b.algebra or a.field != b.field:
        raise ValueError("subspaces live in different ambient spaces")


def _membership_reducer(s: Subspace) -> SparseRowReducer:
    red = SparseRowReducer(s.ambient_cols)
    for row in s.rows():
        red.add({i: v for i, v in enumerate(row) if v})
    return red


def double(v: Sequence) -> Vector:
    """Complex vector -> doubled rational coordinates [Re | Im]."""
    v = vector(v)
    res = [GaussianRational(x.re) for x in v] + [GaussianRational(x.im) for x in v]
    return tuple(res)


def undouble(w: Sequence) -> Vector:
    """Doubled rational coordinates -> complex vector."""
    w = vector(w)
    if len(w) % 2:
        raise ValueError("doubled vector must have even length")
    n = len(w) // 2
    return tuple(GaussianRational(w[k].re, w[n + k].re) for k in range(n))


def real_doubling(s: Subspace) -> Subspace:
    """The underlying real span of a complex subspace, in doubled coordinates."""
    if s.field != COMPLEX:
        raise ValueError("real_doubling expects a complex subspace")
    rows = []
    for v in s.rows():
        rows.append(double(v))
        rows.append(double(vector(I * x for x in v)))
    return span(s.algebra, rows, REAL)


# ---------------------------------------------------------------------------
# antiinvolutions
# ---------------------------------------------------------------------------

class Antiinvolution:
    """Conjugate-linear involutive automorphism tau(v) = M . conj(v)."""

    def __init__(self, algebra: LieAlgebra, matrix: QiMatrix):
        if matrix.rows != algebra.dim or matrix.cols != algebra.dim:
            raise ValueError("antiinvolution matrix has the wrong size")
        self.algebra = algebra
        self.matrix = matrix

    def apply(self, v: Sequence) -> Vector:
        v = vector(v)
        return self.matrix.matvec([x.conjugate() for x in v])

    def validate(self):
        """tau^2 = Id and tau[x, y] = [tau x, tau y] on all basis pairs."""
        if self.matrix * self.matrix.conjugate() != QiMatrix.identity(self.algebra.dim):
            raise ArithmeticError("tau is not involutive")
        g = self.algebra
        images = [self.apply(g.basis_vector(i)) for i in range(g.dim)]
        for i in range(g.dim):
            for j in range(i + 1, g.dim):
                lhs_sparse = g.structure(i, j)
                lhs = [ZERO] * g.dim
                for k, v in lhs_sparse.items():
                    lhs[k] = v
                if self.apply(lhs) != g.bracket(images[i], images[j]):
                    raise ArithmeticError(
                        f"tau is not an automorphism at pair "
                        f"({g.labels[i]}, {g.labels[j]})")


def apply_tau(tau: Antiinvolution, s: Subspace) -> Subspace:
    """Image subspace tau(S); conjugate-linear images stay complex subspaces."""
    if s.field != COMPLEX:
        raise ValueError("apply_tau expects a complex subspace")
    return span(s.algebra, [tau.apply(v) for v in s.rows()])


def real_points(tau: Antiinvolution, s: Subspace) -> Subspace:
    """Fixed points of tau inside S, as a real-rational subspace."""
    if s.field != COMPLEX:
        raise ValueError("real_points expects a complex subspace")
    doubled = real_doubling(s)
    u_rows = list(doubled.rows())
    if not u_rows:
        return doubled
    cols = []
    for u in u_rows:
        v = undouble(u)
        tv = tau.apply(v)
        diff = double(tv)
        cols.append(tuple(a - b for a, b in zip(diff, u)))
    from .linalg import nullspace as _nullspace
    kernel = _nullspace(QiMatrix(cols).transpose())
    fixed = []
    for kv in kernel:
        acc = [ZERO] * doubled.ambient_cols
        for c, u in zip(kv, u_rows):
            if not c:
                continue
            for idx, w in enumerate(u):
                if w:
                    acc[idx] = acc[idx] + c * w
        fixed.append(acc)
    out = span(s.algebra, fixed, REAL)
    if out.dim > 2 * s.dim:
        raise ArithmeticError("real point count exceeds doubled dimension")
    return out


# ---------------------------------------------------------------------------
# subalgebra tests, normalizers, radicals
# ---------------------------------------------------------------------------

def is_subalgebra(algebra: LieAlgebra, s: Subspace) -> Certificate:
    """Verified iff [b_i, b_j] stays in S for every basis pair of S."""
    claim = f"bracket closure of a {s.dim}-dimensional subspace"
    red = _membership_reducer(s)
    rows = list(s.rows())
    for a in range(len(rows)):
        for b in range(a + 1, len(rows)):
            br = s.algebra.bracket_sparse(rows[a], rows[b])
            if not red.contains(dict(br)):
                dense = [ZERO] * s.ambient_cols
                for k, v in br.items():
                    dense[k] = v
                return Certificate(
                    claim, REFUTED,
                    witness={"pair": [a, b], "bracket": fmt_vector(dense)},
                    details=f"[b_{a}, b_{b}] leaves the subspace",
                )
    return Certificate(claim, VERIFIED,
                       witness={"dimension": s.dim},
                       details="all pairwise brackets stay inside")


def subalgebra_table(s: Subspace) -> dict[tuple[int, int], Vector]:
    """Brackets of S's basis rows expressed in S coordinates (i < j)."""
    rows = list(s.rows())
    table = {}
    for a in range(len(rows)):
        for b in range(a + 1, len(rows)):
            br = s.algebra.bracket(rows[a], rows[b])
            coords = s.coords(br)
            if coords is None:
                raise ValueError("subspace is not closed under the bracket")
            table[(a, b)] = coords
    return table


def normalizer_in(algebra: LieAlgebra, w: Subspace, s: Subspace) -> Subspace:
    """{x in W : [x, S] subset of S}."""
    _same_ambient(w, s)
    if w.field != COMPLEX:
        raise ValueError("normalizer_in expects complex subspaces")
    red = _membership_reducer(s)
    wrows = list(w.rows())
    srows = list(s.rows())
    if not wrows:
        return w
    # residuals r[a][i] = [w_a, s_i] reduced mod S; constraints sum_a l_a r = 0
    system: list[SparseRow] = []
    residuals = []
    for a, wa in enumerate(wrows):
        per = []
        for si in srows:
            per.append(red.reduce(dict(algebra.bracket_sparse(wa, si))))
        residuals.append(per)
    for i in range(len(srows)):
        coords_seen = sorted({c for a in range(len(wrows)) for c in residuals[a][i]})
        for c in coords_seen:
            row = {}
            for a in range(len(wrows)):
                v = residuals[a][i].get(c)
                if v:
                    row[a] = v
            if row:
                system.append(row)
    from .linalg import sparse_nullspace
    kernel = sparse_nullspace(system, len(wrows))
    out_vectors = []
    for kv in kernel:
        acc = [ZERO] * w.ambient_cols
        for a, c in kv.items():
            for idx, val in enumerate(wrows[a]):
                if val:
                    acc[idx] = acc[idx] + c * val
        out_vectors.append(acc)
    return span(algebra, out_vectors, COMPLEX)


def subregular_codim(algebra: LieAlgebra, cartan: Subspace, s: Subspace) -> int:
    """Codimension inside the given Cartan of its subalgebra normalizing S."""
    return cartan.dim - normalizer_in(algebra, cartan, s).dim


def killing_form(algebra: LieAlgebra, x: Sequence, y: Sequence) -> GaussianRational:
    """kappa(x, y) = Trace(ad x . ad y) in the full algebra."""
    adx = algebra.ad_columns(x)
    ady = algebra.ad_columns(y)
    acc = ZERO
    for j in range(algebra.dim):
        col = ady[j]
        for k, v in col.items():
            w = adx[k].get(j)
            if w:
                acc = acc + w * v
    return acc


def _ad_in_subalgebra(s: Subspace, table) -> list[list[SparseRow]]:
    """ad matrices of S's basis acting on S, as sparse columns."""
    m = s.dim
    ads = [[{} for _ in range(m)] for _ in range(m)]
    for (a, b), coords in table.items():
        col_ab = {k: v for k, v in enumerate(coords) if v}
        ads[a][b] = col_ab
        ads[b][a] = {k: -v for k, v in col_ab.items()}
    return ads


def killing_gram_of_subalgebra(s: Subspace):
    """Gram matrix of the Killing form of S itself (ad taken inside S)."""
    table = subalgebra_table(s)
    ads = _ad_in_subalgebra(s, table)
    m = s.dim
    gram = [[ZERO] * m for _ in range(m)]
    for a in range(m):
        for b in range(a, m):
            acc = ZERO
            for j in range(m):
                col = ads[b][j]
                for k, v in col.items():
                    w = ads[a][k].get(j)
                    if w:
                        acc = acc + w * v
            gram[a][b] = acc
            gram[b][a] = acc
    return QiMatrix(gram), table


def radical(algebra: LieAlgebra, s: Subspace) -> Subspace:
    """Radical of the subalgebra S via Cartan's criterion.

    rad(S) = { x in S : kappa_S(x, [S, S]) = 0 }, with kappa_S the Killing
    form of S itself.  The result is checked to be a solvable ideal of S.
    """
    cert = is_subalgebra(algebra, s)
    if not cert.verified:
        raise ValueError("radical requires a subalgebra")
    gram, table = killing_gram_of_subalgebra(s)
    m = s.dim
    derived_rows = [list(coords) for coords in table.values()]
    if derived_rows:
        derived_red, dpiv = rref(QiMatrix(derived_rows))
        derived = derived_red.entries[: len(dpiv)]
    else:
        derived = []
    system = []
    for d in derived:
        row: SparseRow = {}
        for a in range(m):
            acc = ZERO
            for b in range(m):
                if d[b] and gram.entries[a][b]:
                    acc = acc + gram.entries[a][b] * d[b]
            if acc:
                row[a] = acc
        system.append(row)
    from .linalg import sparse_nullspace
    kernel = sparse_nullspace(system, m)
    srows = list(s.rows())
    vectors_out = []
    for kv in kernel:
        acc = [ZERO] * s.ambient_cols
        for a, c in kv.items():
            for idx, val in enumerate(srows[a]):
                if val:
                    acc[idx] = acc[idx] + c * val
        vectors_out.append(acc)
    rad = span(algebra, vectors_out, COMPLEX)
    _check_ideal_and_solvable(algebra, s, rad)
    return rad


def _check_ideal_and_solvable(algebra: LieAlgebra, s: Subspace, rad: Subspace):
    red = _membership_reducer(rad)
    for sv in s.rows():
        for rv in rad.rows():
            if not red.contains(dict(algebra.bracket_sparse(sv, rv))):
                raise ArithmeticError("radical is not an ideal of the subalgebra")
    current = rad
    for _ in range(rad.dim + 1):
        if current.dim == 0:
            return
        rows = list(current.rows())
        brackets = []
        for a in range(len(rows)):
            for b in range(a + 1, len(rows)):
                brackets.append(algebra.bracket(rows[a], rows[b]))
        nxt = span(algebra, brackets, COMPLEX)
        if nxt.dim >= current.dim and current.dim > 0:
            raise ArithmeticError("radical derived series does not terminate")
        current = nxt
    raise ArithmeticError("radical derived series does not terminate")


def nonregularity_certificate(algebra: LieAlgebra, s: Subspace) -> Certificate:
    """Look for a radical element whose nilpotent Jordan part leaves S.

    Such a witness certifies that S is not normalized by any Cartan
    subalgebra: a regular subalgebra is spanned by toral elements and root
    vectors, so the Jordan parts of its radical elements stay inside it.
    Candidates are the radical basis vectors and their pairwise sums; a miss
    is reported as refuted ("no witness found"), never as a regularity proof.
    """
    claim = "subalgebra is not normalized by any Cartan subalgebra"
    if algebra.matrix_rep is None:
        raise ValueError("nonregularity certificate needs a matrix representation")
    rad = radical(algebra, s)
    rows = list(rad.rows())
    candidates = [(f"radical basis vector {a}", rows[a]) for a in range(len(rows))]
    for a in range(len(rows)):
        for b in range(a + 1, len(rows)):
            candidates.append(
                (f"sum of radical basis vectors {a}+{b}",
                 tuple(x + y for x, y in zip(rows[a], rows[b]))))
    for name, x in candidates:
        mat = algebra.rep_matrix(x)
        _, npart = jordan_chevalley(mat)
        ncoords = algebra.rep_coordinates(npart)
        if not s.contains(ncoords):
            return Certificate(
                claim, VERIFIED,
                witness={
                    "element": fmt_vector(x),
                    "element_origin": name,
                    "nilpotent_part": fmt_vector(ncoords),
                },
                details="nilpotent Jordan component of a radical element "
                        "falls outside the subalgebra",
            )
    return Certificate(
        claim, REFUTED,
        witness={"candidates_scanned": len(candidates)},
        details="no witness found among radical basis vectors and pairwise sums",
    )


# ---------------------------------------------------------------------------
# two-forms
# ---------------------------------------------------------------------------

class TwoForm:
    """Antisymmetric bilinear form on a subalgebra, in its stored basis."""

    def __init__(self, domain: Subspace, matrix: QiMatrix):
        if matrix.rows != domain.dim or matrix.cols != domain.dim:
            raise ValueError("two-form matrix size does not match the domain")
        if matrix != -matrix.transpose():
            raise ValueError("two-form matrix must be antisymmetric")
        self.domain = domain
        self.matrix = matrix

    def value_on_coords(self, xc: Sequence, yc: Sequence) -> GaussianRational:
        acc = ZERO
        for p, xv in enumerate(xc):
            if not xv:
                continue
            row = self.matrix.entries[p]
            for q, yv in enumerate(yc):
                if yv and row[q]:
                    acc = acc + xv * (row[q] * yv)
        return acc

    def value(self, x: Sequence, y: Sequence) -> GaussianRational:
        xc = self.domain.coords(x)
        yc = self.domain.coords(y)
        if xc is None or yc is None:
            raise ValueError("two-form evaluated outside its domain")
        return self.value_on_coords(xc, yc)


def coboundary(s: Subspace, xi: Sequence) -> TwoForm:
    """d(xi) for a linear functional xi given by its values on S's basis."""
    xi = vector(xi)
    if len(xi) != s.dim:
        raise ValueError("functional must have one value per basis vector")
    table = subalgebra_table(s)
    m = s.dim
    w = [[ZERO] * m for _ in range(m)]
    for (a, b), coords in table.items():
        acc = ZERO
        for k, v in enumerate(coords):
            if v and xi[k]:
                acc = acc + v * xi[k]
        w[a][b] = -acc
        w[b][a] = acc
    return TwoForm(s, QiMatrix(w))


def two_form_d(w: TwoForm) -> dict[tuple[int, int, int], GaussianRational]:
    """Nonzero values of d(omega) on basis triples of the domain."""
    s = w.domain
    table = subalgebra_table(s)
    m = s.dim
    out = {}
    for a in range(m):
        for b in range(a + 1, m):
            for c in range(b + 1, m):
                val = (- _pair_eval(w, table[(a, b)], c)
                       + _pair_eval(w, table[(a, c)], b)
                       - _pair_eval(w, table[(b, c)], a))
                if val:
                    out[(a, b, c)] = val
    return out


def _pair_eval(w: TwoForm, coords: Vector, k: int) -> GaussianRational:
    acc = ZERO
    for l, v in enumerate(coords):
        if v and w.matrix.entries[l][k]:
            acc = acc + v * w.matrix.entries[l][k]
    return acc


def is_closed(w: TwoForm) -> Certificate:
    claim = f"closedness of a 2-form on a {w.domain.dim}-dimensional subalgebra"
    table = two_form_d(w)
    if not table:
        return Certificate(claim, VERIFIED, witness={},
                           details="d(omega) vanishes on all basis triples")
    triple, val = next(iter(sorted(table.items())))
    return Certificate(claim, REFUTED,
                       witness={"triple": list(triple), "value": format_value(val)},
                       details="d(omega) is nonzero on a basis triple")


def restrict_im(w: TwoForm, v: Subspace) -> QiMatrix:
    """Entrywise imaginary part of omega on the real subspace V."""
    if v.field != REAL:
        raise ValueError("restrict_im expects a real-rational subspace")
    lifts = []
    for row in v.rows():
        lift = undouble(row)
        if not w.domain.contains(lift):
            raise ValueError("real subspace is not contained in the form's domain")
        lifts.append(lift)
    n = len(lifts)
    out = [[ZERO] * n for _ in range(n)]
    for a in range(n):
        for b in range(a + 1, n):
            val = w.value(lifts[a], lifts[b])
            out[a][b] = GaussianRational(val.im)
            out[b][a] = GaussianRational(-val.im)
    return QiMatrix(out)


def is_nondegenerate(m: QiMatrix) -> Certificate:
    from .linalg import det as _det
    claim = f"non-degeneracy of a {m.rows}x{m.rows} antisymmetric form"
    d = _det(m) if m.rows else ONE
    if d:
        return Certificate(claim, VERIFIED,
                           witness={"det": format_value(d)},
                           details="determinant is nonzero")
    detail = ("odd dimension forces degeneracy" if m.rows % 2
              else "determinant vanishes")
    return Certificate(claim, REFUTED, witness={"det": format_value(d)},
                       details=detail)


def _pair_index(m: int):
    idx = {}
    pairs = []
    for p in range(m):
        for q in range(p + 1, m):
            idx[(p, q)] = len(pairs)
            pairs.append((p, q))
    return idx, pairs


def closedness_rows(s: Subspace, table=None):
    """Sparse linear conditions on the entries w(p,q), p<q, cutting out
    the closed 2-forms of S.  Column order is lexicographic in (p, q)."""
    if table is None:
        table = subalgebra_table(s)
    m = s.dim
    idx, _ = _pair_index(m)

    def add_term(row, coords, fixed, sign):
        for l, v in enumerate(coords):
            if not v or l == fixed:
                continue
            if l < fixed:
                key, coeff = idx[(l, fixed)], sign * v
            else:
                key, coeff = idx[(fixed, l)], -(sign * v)
            nv = row.get(key, ZERO) + coeff
            if nv:
                row[key] = nv
            elif key in row:
                del row[key]

    rows = []
    for a in range(m):
        for b in range(a + 1, m):
            tab_ab = table[(a, b)]
            for c in range(b + 1, m):
                row: SparseRow = {}
                add_term(row, tab_ab, c, -ONE)
                add_term(row, table[(a, c)], b, ONE)
                add_term(row, table[(b, c)], a, -ONE)
                if row:
                    rows.append(row)
    return rows


def solve_closed_extension(s: Subspace, v: Subspace,
                           target: QiMatrix) -> Optional[TwoForm]:
    """First closed 2-form on S restricting to `target` on the real space V.

    Unknowns are the matrix entries w(p,q) for p<q in lexicographic order;
    the solution returned sets every free unknown to zero.  None when the
    combined linear system is inconsistent.
    """
    if v.field != REAL:
        raise ValueError("restriction subspace must be real-rational")
    if target.rows != v.dim or target.cols != v.dim:
        raise ValueError("target matrix size does not match V")
    if target != -target.transpose():
        raise ValueError("target matrix must be antisymmetric")
    m = s.dim
    idx, pairs = _pair_index(m)
    nvars = len(pairs)
    table = subalgebra_table(s)
    rows = closedness_rows(s, table)
    lifts = []
    for row in v.rows():
        lift = undouble(row)
        coords = s.coords(lift)
        if coords is None:
            raise ValueError("V is not contained in S")
        lifts.append(coords)
    for a in range(len(lifts)):
        xc = lifts[a]
        for b in range(a + 1, len(lifts)):
            yc = lifts[b]
            row: SparseRow = {}
            for p in range(m):
                for q in range(p + 1, m):
                    coeff = xc[p] * yc[q] - xc[q] * yc[p]
                    if coeff:
                        row[idx[(p, q)]] = coeff
            rhs = target.entries[a][b]
            if rhs:
                row[nvars] = rhs
            if row:
                rows.append(row)
    sol = solve_sparse_affine(rows, nvars)
    if sol is None:
        return None
    w = [[ZERO] * m for _ in range(m)]
    for k, val in sol.items():
        p, q = pairs[k]
        w[p][q] = val
        w[q][p] = -val
    form = TwoForm(s, QiMatrix(w))
    if not is_closed(form).verified:
        raise ArithmeticError("solver returned a non-closed form")
    return form


# ---------------------------------------------------------------------------
# admissible pairs
# ---------------------------------------------------------------------------

def check_admissible_pair(algebra: LieAlgebra, tau: Antiinvolution,
                          s: Subspace, w: TwoForm) -> Certificate:
    """Decide the two admissibility conditions for (S, omega) against tau.

    Verified iff S is a subalgebra, omega is closed, S + tau(S) equals the
    whole algebra, and Im(omega) is non-degenerate on the tau-fixed points
    of S.  The witness records each condition; a refutation names the first
    failing one.
    """
    claim = "(s, omega) is an admissible pair for the real form fixed by tau"
    conditions: list[tuple[str, Certificate | None, dict]] = []

    sub = is_subalgebra(algebra, s)
    conditions.append(("s is a subalgebra", sub, {}))
    closed = is_closed(w) if sub.verified else None
    if closed is not None:
        conditions.append(("omega is closed", closed, {}))
    total = None
    if sub.verified:
        total = sum_subspaces(s, apply_tau(tau, s))
        ok = total.dim == algebra.dim
        conditions.append((
            "s + tau(s) spans the algebra",
            Certificate("s + tau(s) = g", VERIFIED if ok else REFUTED,
                        witness={"sum_dim": total.dim, "needed": algebra.dim}),
            {},
        ))
    nondeg = None
    if sub.verified:
        v = real_points(tau, s)
        try:
            imat = restrict_im(w, v)
            nondeg = is_nondegenerate(imat)
        except ValueError:
            nondeg = Certificate("Im(omega) non-degenerate on real points",
                                 REFUTED, witness={},
                                 details="omega is not defined on the real points")
        conditions.append((
            f"Im(omega) non-degenerate on the {v.dim}-dim real points", nondeg, {}))

    witness = {
        "conditions": [
            {"name": name, "status": cert.status, "witness": cert.witness}
            for name, cert, _ in conditions if cert is not None
        ]
    }
    for name, cert, _ in conditions:
        if cert is not None and not cert.verified:
            return Certificate(claim, REFUTED, witness=witness,
                               details=f"failed at: {name}")
    return Certificate(claim, VERIFIED, witness=witness,
                       details="all admissibility conditions hold")


def trace_form(c, algebra: LieAlgebra) -> TwoForm:
    """omega_c(x, y) = Trace(M_c . [x, y]) on the full algebra.

    M_c carries c in slot (1,2) and -c in slot (2,1); with a 3x3 skew
    representation this is the classical family of invariant 2-forms on
    complex rotation algebras.  Being the coboundary of a linear functional,
    it is closed automatically.
    """
    if algebra.matrix_rep is None:
        raise ValueError("trace_form needs a matrix representation")
    c = _coerce(c)
    n = algebra.matrix_rep[0].rows
    mc = [[ZERO] * n for _ in range(n)]
    mc[0][1] = c
    mc[1][0] = -c
    mcm = QiMatrix(mc)
    dim = algebra.dim
    w = [[ZERO] * dim for _ in range(dim)]
    for i in range(dim):
        for j in range(i + 1, dim):
            br = algebra.rep_matrix(algebra.bracket(algebra.basis_vector(i),
                                                    algebra.basis_vector(j)))
            val = (mcm * br).trace()
            w[i][j] = val
            w[j][i] = -val
    return TwoForm(full_subspace(algebra), QiMatrix(w))
