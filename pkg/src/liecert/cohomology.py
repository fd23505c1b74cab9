"""Chevalley-Eilenberg complex of a complex Lie subalgebra in degrees 0..3.

Cochains are dual wedge monomials over the subalgebra's stored basis,
ordered lexicographically; the differential is

    (d f)(x_0..x_k) = sum_{a<b} (-1)^(a+b) f([x_a, x_b], x_0..^a..^b..x_k)

with trivial coefficients.  Degree is capped at 3, which is all that is
needed for H^2 and for the d.d = 0 consistency checks.
"""

from __future__ import annotations

from itertools import combinations

from .scalars import ONE, ZERO
from .linalg import QiMatrix, SparseRow, SparseRowReducer, sparse_nullspace
from .core import Subspace, TwoForm, subalgebra_table


class CochainSpace:
    """Basis bookkeeping for degree-k cochains on a subalgebra."""

    def __init__(self, subalgebra: Subspace, degree: int):
        if not 0 <= degree <= 3:
            raise ValueError("cochain degree must be between 0 and 3")
        self.subalgebra = subalgebra
        self.degree = degree
        self.monomials = tuple(combinations(range(subalgebra.dim), degree))

    @property
    def dim(self) -> int:
        return len(self.monomials)


def _differential_rows(s: Subspace, k: int, table) -> tuple[list[SparseRow], int, int]:
    """Sparse rows of d_k (rows: degree k+1 monomials, cols: degree k)."""
    dom = CochainSpace(s, k)
    cod = CochainSpace(s, k + 1)
    col_index = {mono: i for i, mono in enumerate(dom.monomials)}
    rows: list[SparseRow] = []
    for target in cod.monomials:
        row: SparseRow = {}
        for a in range(k + 1):
            for b in range(a + 1, k + 1):
                sign_ab = -ONE if (a + b) % 2 else ONE
                coords = table[(target[a], target[b])]
                rest = tuple(t for pos, t in enumerate(target) if pos not in (a, b))
                for l, v in enumerate(coords):
                    if not v or l in rest:
                        continue
                    below = sum(1 for r in rest if r < l)
                    mono = tuple(sorted(rest + (l,)))
                    coeff = sign_ab * v if below % 2 == 0 else -(sign_ab * v)
                    col = col_index[mono]
                    nv = row.get(col, ZERO) + coeff
                    if nv:
                        row[col] = nv
                    elif col in row:
                        del row[col]
        rows.append(row)
    return rows, cod.dim, dom.dim


def ce_differential(s: Subspace, k: int) -> QiMatrix:
    """Exact matrix of d_k in the fixed wedge bases."""
    if k not in (0, 1, 2):
        raise ValueError("differential degree must be 0, 1 or 2")
    table = subalgebra_table(s)
    rows, nrows, ncols = _differential_rows(s, k, table)
    data = {}
    for r, row in enumerate(rows):
        for c, v in row.items():
            data[(r, c)] = v
    return QiMatrix.from_dict(nrows, ncols, data)


def _rank_of_rows(rows: list[SparseRow], ncols: int) -> int:
    red = SparseRowReducer(ncols)
    for row in rows:
        red.add(row)
    return red.rank


def betti(s: Subspace, k: int) -> int:
    """dim H^k(S, C) = dim ker d_k - rank d_{k-1}."""
    if k not in (0, 1, 2):
        raise ValueError("betti degree must be 0, 1 or 2")
    table = subalgebra_table(s)
    rows_k, _, ncols_k = _differential_rows(s, k, table)
    rank_k = _rank_of_rows(rows_k, ncols_k)
    dim_ker = ncols_k - rank_k
    if k == 0:
        return dim_ker
    rows_prev, _, ncols_prev = _differential_rows(s, k - 1, table)
    # rank of d_{k-1} equals the rank of its transpose: reduce column vectors
    cols: dict[int, SparseRow] = {}
    for r, row in enumerate(rows_prev):
        for c, v in row.items():
            cols.setdefault(c, {})[r] = v
    rank_prev = _rank_of_rows(list(cols.values()), len(rows_prev))
    return dim_ker - rank_prev


def closed_two_form_basis(s: Subspace) -> list[SparseRow]:
    """Canonical basis of ker d_2, as sparse rows over pair-index columns."""
    table = subalgebra_table(s)
    rows, _, ncols = _differential_rows(s, 2, table)
    return sparse_nullspace(rows, ncols)


def coboundary_image_basis(s: Subspace) -> list[SparseRow]:
    """Canonical basis of im d_1 inside the degree-2 cochain space."""
    table = subalgebra_table(s)
    rows, _, ncols_1 = _differential_rows(s, 1, table)
    cols: dict[int, SparseRow] = {}
    for r, row in enumerate(rows):
        for c, v in row.items():
            cols.setdefault(c, {})[r] = v
    red = SparseRowReducer(len(rows))
    for c in sorted(cols):
        red.add(cols[c])
    return red.finish()[0]


def pair_monomials(m: int) -> list[tuple[int, int]]:
    return list(combinations(range(m), 2))


def sparse_to_form(s: Subspace, row: SparseRow) -> TwoForm:
    """Degree-2 cochain coordinates -> TwoForm on S."""
    m = s.dim
    pairs = pair_monomials(m)
    w = [[ZERO] * m for _ in range(m)]
    for idx, v in row.items():
        p, q = pairs[idx]
        w[p][q] = v
        w[q][p] = -v
    return TwoForm(s, QiMatrix(w))


def h2_representatives(s: Subspace) -> list[TwoForm]:
    """Canonical basis of a complement of im d_1 inside ker d_2.

    Kernel basis rows are reduced modulo the coboundary image and the
    nonzero residues are re-echelonized, so the output depends only on S.
    """
    kernel = closed_two_form_basis(s)
    image = coboundary_image_basis(s)
    ncols = len(pair_monomials(s.dim))
    img_red = SparseRowReducer(ncols)
    for row in image:
        img_red.add(row)
    residues = SparseRowReducer(ncols)
    for row in kernel:
        residues.add(img_red.reduce(dict(row)))
    reps, _ = residues.finish()
    return [sparse_to_form(s, row) for row in reps]
