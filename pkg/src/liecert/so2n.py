"""Concrete so(2n, C) in a Cartan-adapted skew-matrix basis, its Lorentz and
compact conjugations, the distinguished hyperplane-normalized subalgebra
family s(L, H), and the end-to-end certificates for it.

Basis (all 2n x 2n skew-symmetric):
    H_k     = i(E_{2k-1,2k} - E_{2k,2k-1}),             1 <= k <= n
    X_{jk}  root eps_j - eps_k   (j != k)
    Y_{jk}  root eps_j + eps_k   (j < k)
    Z_{jk}  root -(eps_j + eps_k) (j < k)
realized through the two one-parameter families of skew blocks G+/G-.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Optional, Sequence

from .scalars import GaussianRational, I, ONE, ZERO, _coerce
from .linalg import QiMatrix, Vector, vector, zero_vector
from .core import (
    Antiinvolution,
    Certificate,
    INFEASIBLE,
    LieAlgebra,
    REFUTED,
    Subspace,
    TwoForm,
    VERIFIED,
    check_admissible_pair,
    is_subalgebra,
    nonregularity_certificate,
    real_points,
    solve_closed_extension,
    span,
    subregular_codim,
    undouble,
)

LORENTZ = "lorentz"
COMPACT = "compact"

SparseMat = dict[tuple[int, int], GaussianRational]


def _pair_label(prefix: str, j: int, k: int) -> str:
    if j <= 9 and k <= 9:
        return f"{prefix}{j}{k}"
    return f"{prefix}{j}_{k}"


def _smat_add(dst: SparseMat, src: SparseMat, factor=None):
    for key, v in src.items():
        nv = dst.get(key, ZERO) + (v if factor is None else factor * v)
        if nv:
            dst[key] = nv
        elif key in dst:
            del dst[key]


def _smat_mul(a: SparseMat, b_rows: dict[int, list[tuple[int, GaussianRational]]]) -> SparseMat:
    out: SparseMat = {}
    for (r, c), v in a.items():
        for c2, w in b_rows.get(c, ()):
            key = (r, c2)
            nv = out.get(key, ZERO) + v * w
            if nv:
                out[key] = nv
            elif key in out:
                del out[key]
    return out


def _rows_of(m: SparseMat) -> dict[int, list[tuple[int, GaussianRational]]]:
    rows: dict[int, list[tuple[int, GaussianRational]]] = {}
    for (r, c), v in m.items():
        rows.setdefault(r, []).append((c, v))
    return rows


def _smat_conj(m: SparseMat) -> SparseMat:
    return {k: v.conjugate() for k, v in m.items()}


class So2n:
    """so(2n, C) with its basis bookkeeping and standard subspaces."""

    def __init__(self, n: int):
        if n < 3:
            raise ValueError("rank must be at least 3")
        self.n = n
        labels: list[str] = [f"H{k}" for k in range(1, n + 1)]
        self._x_pairs = [(j, k) for j in range(1, n + 1)
                         for k in range(1, n + 1) if j != k]
        self._yz_pairs = [(j, k) for j in range(1, n + 1)
                          for k in range(j + 1, n + 1)]
        labels += [_pair_label("X", j, k) for j, k in self._x_pairs]
        labels += [_pair_label("Y", j, k) for j, k in self._yz_pairs]
        labels += [_pair_label("Z", j, k) for j, k in self._yz_pairs]
        self.labels = labels
        self.dim = len(labels)
        if self.dim != n * (2 * n - 1):
            raise AssertionError("basis count mismatch")
        self._x_offset = n
        self._y_offset = n + len(self._x_pairs)
        self._z_offset = self._y_offset + len(self._yz_pairs)
        self._x_index = {p: self._x_offset + i for i, p in enumerate(self._x_pairs)}
        self._y_index = {p: self._y_offset + i for i, p in enumerate(self._yz_pairs)}
        self._z_index = {p: self._z_offset + i for i, p in enumerate(self._yz_pairs)}
        self._sparse_basis = self._build_basis_matrices()
        self.algebra = self._build_algebra()

    # -- index helpers (1-based j, k) ---------------------------------------

    def h_index(self, k: int) -> int:
        return k - 1

    def x_index(self, j: int, k: int) -> int:
        return self._x_index[(j, k)]

    def y_index(self, j: int, k: int) -> int:
        return self._y_index[(j, k)]

    def z_index(self, j: int, k: int) -> int:
        return self._z_index[(j, k)]

    def roots(self) -> dict[int, tuple[int, ...]]:
        """Root of each root-vector basis index, as eps-coefficients."""
        out = {}
        for (j, k), idx in self._x_index.items():
            r = [0] * self.n
            r[j - 1], r[k - 1] = 1, -1
            out[idx] = tuple(r)
        for (j, k), idx in self._y_index.items():
            r = [0] * self.n
            r[j - 1] = r[k - 1] = 1
            out[idx] = tuple(r)
        for (j, k), idx in self._z_index.items():
            r = [0] * self.n
            r[j - 1] = r[k - 1] = -1
            out[idx] = tuple(r)
        return out

    # -- construction --------------------------------------------------------

    def _gplus(self, j: int, k: int) -> SparseMat:
        # 0-based row/col indices; formulas are for 1 <= j < k <= n
        a, b, c, d = 2 * j - 2, 2 * j - 1, 2 * k - 2, 2 * k - 1
        m: SparseMat = {}
        for (r, s), v in (((a, c), ONE), ((c, a), -ONE), ((b, d), ONE), ((d, b), -ONE),
                          ((a, d), I), ((b, c), -I), ((d, a), -I), ((c, b), I)):
            m[(r, s)] = v
        return m

    def _gminus(self, j: int, k: int) -> SparseMat:
        a, b, c, d = 2 * j - 2, 2 * j - 1, 2 * k - 2, 2 * k - 1
        m: SparseMat = {}
        for (r, s), v in (((a, c), ONE), ((c, a), -ONE), ((b, d), -ONE), ((d, b), ONE),
                          ((a, d), I), ((b, c), I), ((d, a), -I), ((c, b), -I)):
            m[(r, s)] = v
        return m

    def _build_basis_matrices(self) -> list[SparseMat]:
        n = self.n
        mats: list[SparseMat] = []
        for k in range(1, n + 1):
            a, b = 2 * k - 2, 2 * k - 1
            mats.append({(a, b): I, (b, a): -I})
        for j, k in self._x_pairs:
            if j < k:
                mats.append(self._gplus(j, k))
            else:
                neg_conj = {key: -v.conjugate() for key, v in self._gplus(k, j).items()}
                mats.append(neg_conj)
        for j, k in self._yz_pairs:  # Y_{jk} = G-_{kj} = -conj(G-_{jk})
            mats.append({key: -v.conjugate() for key, v in self._gminus(j, k).items()})
        for j, k in self._yz_pairs:  # Z_{jk} = G-_{jk}
            mats.append(self._gminus(j, k))
        return mats

    def coords_of_sparse(self, m: SparseMat) -> dict[int, GaussianRational]:
        """Exact coordinates of a skew matrix in this basis.

        Reads the H-coefficients off the diagonal 2x2 blocks and solves the
        fixed 4x4 block system for each (j, k) pair; the reconstruction is
        re-checked entry by entry, so a matrix outside the span is rejected.
        """
        n = self.n
        coords: dict[int, GaussianRational] = {}
        half = _coerce(1) / 2
        for k in range(1, n + 1):
            v = m.get((2 * k - 2, 2 * k - 1))
            if v:
                coords[k - 1] = -I * v
        for j in range(1, n + 1):
            for k in range(j + 1, n + 1):
                a, b, c, d = 2 * j - 2, 2 * j - 1, 2 * k - 2, 2 * k - 1
                e11 = m.get((a, c), ZERO)
                e12 = m.get((a, d), ZERO)
                e21 = m.get((b, c), ZERO)
                e22 = m.get((b, d), ZERO)
                if not (e11 or e12 or e21 or e22):
                    continue
                wpx = (-I * e12 + I * e21) * half
                wmx = (e11 + e22) * half
                ypz = (-I * e12 - I * e21) * half
                ymz = (e22 - e11) * half
                w = (wpx + wmx) * half
                x = (wpx - wmx) * half
                y = (ypz + ymz) * half
                z = (ypz - ymz) * half
                if w:
                    coords[self.x_index(j, k)] = w
                if x:
                    coords[self.x_index(k, j)] = x
                if y:
                    coords[self.y_index(j, k)] = y
                if z:
                    coords[self.z_index(j, k)] = z
        recon: SparseMat = {}
        for idx, coeff in coords.items():
            _smat_add(recon, self._sparse_basis[idx], coeff)
        if recon != {k: v for k, v in m.items() if v}:
            raise ValueError("matrix is not in the so(2n) basis span")
        return coords

    def _build_algebra(self) -> LieAlgebra:
        basis_rows = [_rows_of(m) for m in self._sparse_basis]
        table: dict[tuple[int, int], dict[int, GaussianRational]] = {}
        for i in range(self.dim):
            mi = self._sparse_basis[i]
            for j in range(i + 1, self.dim):
                ab = _smat_mul(mi, basis_rows[j])
                ba = _smat_mul(self._sparse_basis[j], basis_rows[i])
                _smat_add(ab, ba, -ONE)
                if ab:
                    table[(i, j)] = self.coords_of_sparse(ab)
        size = 2 * self.n
        rep = [QiMatrix.from_dict(size, size, m) for m in self._sparse_basis]
        return LieAlgebra(self.labels, table, matrix_rep=rep)

    # -- standard subspaces ---------------------------------------------------

    def h_vector(self, coeffs: Sequence) -> Vector:
        """Embed a Cartan coefficient vector (length n) into the algebra."""
        coeffs = vector(coeffs)
        if len(coeffs) != self.n:
            raise ValueError("Cartan coefficient vector must have length n")
        return tuple(coeffs) + zero_vector(self.dim - self.n)

    def cartan(self) -> Subspace:
        return span(self.algebra,
                    [self.algebra.basis_vector(k) for k in range(self.n)])

    def cartan_hyperplane(self) -> Subspace:
        """Kernel of eps_{n-1} - eps_n inside the Cartan."""
        vecs = [self.algebra.basis_vector(k) for k in range(self.n - 2)]
        both = [ZERO] * self.dim
        both[self.n - 2] = ONE
        both[self.n - 1] = ONE
        vecs.append(tuple(both))
        return span(self.algebra, vecs)

    def borel(self) -> Subspace:
        vecs = [self.algebra.basis_vector(k) for k in range(self.n)]
        vecs += [self.algebra.basis_vector(self.x_index(j, k))
                 for j, k in self._yz_pairs]
        vecs += [self.algebra.basis_vector(self.y_index(j, k))
                 for j, k in self._yz_pairs]
        return span(self.algebra, vecs)

    def nilradical_of_borel(self) -> Subspace:
        vecs = [self.algebra.basis_vector(self.x_index(j, k))
                for j, k in self._yz_pairs]
        vecs += [self.algebra.basis_vector(self.y_index(j, k))
                 for j, k in self._yz_pairs]
        return span(self.algebra, vecs)

    def tau(self, form: str) -> Antiinvolution:
        """Conjugation A -> J conj(A) J; J = Id (compact) or diag(1..1,-1)."""
        if form not in (LORENTZ, COMPACT):
            raise ValueError(f"unknown real form {form!r}")
        last = 2 * self.n - 1
        cols = []
        for m in self._sparse_basis:
            img = _smat_conj(m)
            if form == LORENTZ:
                img = {
                    (r, c): (-v if (r == last) != (c == last) else v)
                    for (r, c), v in img.items()
                }
            cols.append(self.coords_of_sparse(img))
        data = {}
        for j, col in enumerate(cols):
            for i, v in col.items():
                data[(i, j)] = v
        return Antiinvolution(self.algebra, QiMatrix.from_dict(self.dim, self.dim, data))


@lru_cache(maxsize=None)
def so2n(n: int) -> So2n:
    return So2n(n)


def build_so2n(n: int) -> LieAlgebra:
    """so(2n, C) as a structure-constant algebra with its matrix realization."""
    return so2n(n).algebra


@lru_cache(maxsize=None)
def build_tau_lorentz(n: int) -> Antiinvolution:
    """Conjugation of so(2n, C) fixing so(2n-1, 1)."""
    return so2n(n).tau(LORENTZ)


@lru_cache(maxsize=None)
def build_tau_compact(n: int) -> Antiinvolution:
    """Conjugation fixing the compact real form so(2n, R)."""
    return so2n(n).tau(COMPACT)


# ---------------------------------------------------------------------------
# the hyperplane-normalized subalgebra family
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SubalgebraPreset:
    """Data (L, H) for the distinguished subalgebra of so(2n, C).

    l_basis spans L in Cartan coordinates; the preset is valid when L
    contains H_{n-1} + H_n, lies inside ker(eps_{n-1} - eps_n), is proper
    there, and H lies in that kernel but outside L.
    """

    n: int
    l_basis: tuple[Vector, ...]
    h: Vector

    def validate(self):
        sc = so2n(self.n)
        g = sc.algebra
        n = self.n
        for row in list(self.l_basis) + [self.h]:
            if len(row) != n:
                raise ValueError("preset vectors must be in Cartan coordinates")
        l_space = span(g, [sc.h_vector(row) for row in self.l_basis])
        h1 = sc.cartan_hyperplane()
        for row in l_space.rows():
            if not h1.contains(row):
                raise ValueError("L is not inside the hyperplane eps_{n-1} = eps_n")
        if not (l_space.dim < h1.dim):
            raise ValueError("L must be a proper subspace of the hyperplane")
        both = [ZERO] * n
        both[n - 2] = ONE
        both[n - 1] = ONE
        if not l_space.contains(sc.h_vector(both)):
            raise ValueError("L must contain H_{n-1} + H_n")
        h_amb = sc.h_vector(self.h)
        if not h1.contains(h_amb):
            raise ValueError("H must lie in the hyperplane eps_{n-1} = eps_n")
        if l_space.contains(h_amb):
            raise ValueError("H must lie outside L")
        return l_space


def default_preset(n: int) -> SubalgebraPreset:
    """H = H_1 and L = span{H_2, ..., H_{n-2}} + C (H_{n-1} + H_n)."""
    rows = []
    for k in range(2, n - 1):
        row = [ZERO] * n
        row[k - 1] = ONE
        rows.append(tuple(row))
    both = [ZERO] * n
    both[n - 2] = ONE
    both[n - 1] = ONE
    rows.append(tuple(both))
    h = [ZERO] * n
    h[0] = ONE
    return SubalgebraPreset(n=n, l_basis=tuple(rows), h=tuple(h))


def build_s(preset: SubalgebraPreset) -> Subspace:
    """The subalgebra L + C(H + X_{n-1,n}) + (X_{jk}) + (Y_{jk}) + C Z_{n-1,n}.

    X runs over j < k with (j, k) != (n-1, n); Y over all j < k.
    """
    l_space = preset.validate()
    sc = so2n(preset.n)
    n = preset.n
    vecs = list(l_space.rows())
    gen = list(sc.h_vector(preset.h))
    gen[sc.x_index(n - 1, n)] = ONE
    vecs.append(tuple(gen))
    for j, k in sc._yz_pairs:
        if (j, k) != (n - 1, n):
            vecs.append(sc.algebra.basis_vector(sc.x_index(j, k)))
    for j, k in sc._yz_pairs:
        vecs.append(sc.algebra.basis_vector(sc.y_index(j, k)))
    vecs.append(sc.algebra.basis_vector(sc.z_index(n - 1, n)))
    s = span(sc.algebra, vecs)
    expected = (l_space.dim + 1 + (n * (n - 1) // 2 - 1) + n * (n - 1) // 2 + 1)
    if s.dim != expected:
        raise AssertionError("subalgebra dimension mismatch")
    return s


def build_omega(preset: SubalgebraPreset) -> TwoFormResult:
    """Closed 2-form whose restriction to the Lorentz real points of s is the
    standard symplectic form i * sum eps_{2j-1} ^ eps_{2j}.

    The eps functionals act through the Cartan component of each vector.
    Requires n even (the real-point space has dimension n - 2).
    """
    n = preset.n
    if n % 2:
        raise ValueError("symplectic restriction needs even rank")
    sc = so2n(n)
    s = build_s(preset)
    tau = build_tau_lorentz(n)
    v = real_points(tau, s)
    if v.dim != n - 2:
        raise AssertionError("unexpected real-point dimension")
    lifts = [undouble(row) for row in v.rows()]
    hparts = [lift[: n] for lift in lifts]
    m = v.dim
    target = [[ZERO] * m for _ in range(m)]
    for a in range(m):
        for b in range(a + 1, m):
            acc = ZERO
            for j in range(1, n // 2):
                p, q = 2 * j - 2, 2 * j - 1
                acc = acc + (hparts[a][p] * hparts[b][q]
                             - hparts[a][q] * hparts[b][p])
            val = I * acc
            target[a][b] = val
            target[b][a] = -val
    form = solve_closed_extension(s, v, QiMatrix(target))
    if form is None:
        raise ArithmeticError("no closed extension of the symplectic target exists")
    return TwoFormResult(form=form, real_points_space=v, target=QiMatrix(target))


@dataclass(frozen=True)
class TwoFormResult:
    form: TwoForm
    real_points_space: Subspace
    target: QiMatrix


# ---------------------------------------------------------------------------
# end-to-end certificates
# ---------------------------------------------------------------------------

def pair_certificates(n: int, form: str = LORENTZ,
                      preset: Optional[SubalgebraPreset] = None) -> list[Certificate]:
    """Certificates for the distinguished pair of so(2n-1,1) / so(2n).

    Lorentz, n even: admissibility of (s, omega), codimension-1 normalizer
    in the standard Cartan, and the non-regularity witness.  Compact form:
    the admissibility test alone (it fails at s + tau(s) = g).  Odd n: the
    symplectic restriction does not exist; an infeasibility certificate
    replaces the admissibility one.
    """
    if preset is None:
        preset = default_preset(n)
    sc = so2n(n)
    g = sc.algebra
    s = build_s(preset)
    certs: list[Certificate] = []

    if form == COMPACT:
        if n % 2 == 0:
            omega = build_omega(preset).form
            cert = check_admissible_pair(g, build_tau_compact(n), s, omega)
        else:
            cert = check_admissible_pair(
                g, build_tau_compact(n), s, _zero_form(s))
        return [cert]

    if form != LORENTZ:
        raise ValueError(f"unknown real form {form!r}")

    tau = build_tau_lorentz(n)
    if n % 2 == 0:
        omega = build_omega(preset).form
        certs.append(check_admissible_pair(g, tau, s, omega))
    else:
        certs.append(Certificate(
            "a closed 2-form with symplectic restriction to the real points",
            INFEASIBLE,
            witness={"real_point_dim": n - 2},
            details="odd rank leaves odd-dimensional real points; "
                    "no symplectic restriction exists",
        ))
        certs.append(is_subalgebra(g, s))

    codim = subregular_codim(g, sc.cartan(), s)
    certs.append(Certificate(
        "s is normalized by a codimension-1 subalgebra of the standard Cartan",
        VERIFIED if codim == 1 else REFUTED,
        witness={"codimension": codim},
        details=f"normalizer of s inside the Cartan has codimension {codim}",
    ))
    certs.append(nonregularity_certificate(g, s))
    return certs


def _zero_form(s: Subspace) -> TwoForm:
    return TwoForm(s, QiMatrix.zeros(s.dim, s.dim))


# ---------------------------------------------------------------------------
# so(3, C): the smallest rotation algebra, used by the trace-form family
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def build_so3() -> LieAlgebra:
    """so(3, C) with its defining 3x3 skew representation.

    Basis A1 = E32 - E23, A2 = E13 - E31, A3 = E21 - E12 with the cyclic
    brackets [A1, A2] = A3, [A2, A3] = A1, [A3, A1] = A2.
    """
    a1 = QiMatrix.from_dict(3, 3, {(2, 1): ONE, (1, 2): -ONE})
    a2 = QiMatrix.from_dict(3, 3, {(0, 2): ONE, (2, 0): -ONE})
    a3 = QiMatrix.from_dict(3, 3, {(1, 0): ONE, (0, 1): -ONE})
    table = {
        (0, 1): {2: ONE},
        (1, 2): {0: ONE},
        (0, 2): {1: -ONE},
    }
    return LieAlgebra(["A1", "A2", "A3"], table, matrix_rep=[a1, a2, a3])
