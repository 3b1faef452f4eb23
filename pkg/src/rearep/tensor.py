"""Dense exact matrices on tensor-product spaces.

Composite indices are lexicographic with the first tensor factor most
significant, so for ``V x V`` with ``dim V = n`` the pair ``(i1, i2)`` maps to
``i1 * n + i2``. Rows carry lower indices and columns upper ones.
"""
from __future__ import annotations

import itertools
import json
from math import prod
from typing import Iterable, Sequence

from .scalar import ONE, ZERO, LaurentRational, dot, lsum, parse_scalar

__all__ = [
    "QMatrix",
    "kron",
    "embed",
    "embed_at",
    "partial_trace",
    "partial_transpose",
    "permutation",
    "r_chain",
    "rank_exact",
    "rref",
    "solve_linear",
    "nullspace",
    "inverse",
    "column_basis",
    "matrix_power",
]


def _digits(index: int, shape: Sequence[int]) -> list[int]:
    out = []
    for d in reversed(shape):
        index, r = divmod(index, d)
        out.append(r)
    return out[::-1]


def _undigits(digits: Sequence[int], shape: Sequence[int]) -> int:
    index = 0
    for x, d in zip(digits, shape):
        index = index * d + x
    return index


class QMatrix:
    """Matrix over Q(q) with tensor-factor metadata for rows and columns."""

    __slots__ = ("rows", "row_shape", "col_shape")

    def __init__(self, rows: list[list[LaurentRational]], row_shape=None, col_shape=None):
        self.rows = rows
        nr = len(rows)
        nc = len(rows[0]) if rows else 0
        self.row_shape = tuple(row_shape) if row_shape is not None else (nr,)
        self.col_shape = tuple(col_shape) if col_shape is not None else (nc,)
        if prod(self.row_shape) != nr or (nr and prod(self.col_shape) != nc):
            raise ValueError(f"shape {self.row_shape}x{self.col_shape} does not match {nr}x{nc}")

    # -- constructors -----------------------------------------------------
    @classmethod
    def from_rows(cls, rows: Iterable[Iterable], row_shape=None, col_shape=None) -> "QMatrix":
        data = [[LaurentRational.coerce(x) for x in row] for row in rows]
        return cls(data, row_shape, col_shape)

    @classmethod
    def zeros(cls, row_shape, col_shape=None) -> "QMatrix":
        row_shape = _as_shape(row_shape)
        col_shape = row_shape if col_shape is None else _as_shape(col_shape)
        nr, nc = prod(row_shape), prod(col_shape)
        return cls([[ZERO] * nc for _ in range(nr)], row_shape, col_shape)

    @classmethod
    def identity(cls, shape) -> "QMatrix":
        shape = _as_shape(shape)
        m = cls.zeros(shape)
        for i in range(m.nrows):
            m.rows[i][i] = ONE
        return m

    @classmethod
    def diag(cls, values: Sequence) -> "QMatrix":
        m = cls.zeros((len(values),))
        for i, v in enumerate(values):
            m.rows[i][i] = LaurentRational.coerce(v)
        return m

    # -- basic queries ----------------------------------------------------
    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return prod(self.col_shape)

    def __getitem__(self, ij) -> LaurentRational:
        i, j = ij
        return self.rows[i][j]

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def is_zero(self) -> bool:
        return all(x is ZERO for row in self.rows for x in row)

    def first_nonzero(self):
        for i, row in enumerate(self.rows):
            for j, x in enumerate(row):
                if x is not ZERO:
                    return i, j
        return None

    def __eq__(self, other) -> bool:
        if not isinstance(other, QMatrix):
            return NotImplemented
        return (self.nrows, self.ncols) == (other.nrows, other.ncols) and self.rows == other.rows

    __hash__ = None

    def __repr__(self) -> str:
        return f"QMatrix({self.nrows}x{self.ncols}, rows={self.row_shape}, cols={self.col_shape})"

    def pretty(self) -> str:
        return "\n".join("[" + ", ".join(str(x) for x in row) + "]" for row in self.rows)

    def nnz(self) -> int:
        return sum(1 for row in self.rows for x in row if x is not ZERO)

    def trace(self) -> LaurentRational:
        return lsum(self.rows[i][i] for i in range(self.nrows))

    def with_shape(self, row_shape, col_shape=None) -> "QMatrix":
        return QMatrix(self.rows, row_shape, row_shape if col_shape is None else col_shape)

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other: "QMatrix") -> "QMatrix":
        self._check_same(other)
        return QMatrix([[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)],
                       self.row_shape, self.col_shape)

    def __sub__(self, other: "QMatrix") -> "QMatrix":
        self._check_same(other)
        return QMatrix([[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)],
                       self.row_shape, self.col_shape)

    def __neg__(self) -> "QMatrix":
        return QMatrix([[-a for a in row] for row in self.rows], self.row_shape, self.col_shape)

    def scale(self, c) -> "QMatrix":
        c = LaurentRational.coerce(c)
        if c is ZERO:
            return QMatrix.zeros(self.row_shape, self.col_shape)
        if c == ONE:
            return self
        return QMatrix([[a * c if a is not ZERO else ZERO for a in row] for row in self.rows],
                       self.row_shape, self.col_shape)

    def __mul__(self, c) -> "QMatrix":
        if isinstance(c, QMatrix):
            raise TypeError("use @ for matrix products")
        return self.scale(c)

    __rmul__ = __mul__

    def __matmul__(self, other: "QMatrix") -> "QMatrix":
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.nrows}x{self.ncols} by {other.nrows}x{other.ncols}")
        bnz = [[(j, b) for j, b in enumerate(row) if b is not ZERO] for row in other.rows]
        nc = other.ncols
        out = []
        for row in self.rows:
            acc: dict[int, list] = {}
            for k, a in enumerate(row):
                if a is ZERO:
                    continue
                for j, b in bnz[k]:
                    lst = acc.get(j)
                    if lst is None:
                        acc[j] = [(a, b)]
                    else:
                        lst.append((a, b))
            new = [ZERO] * nc
            for j, pairs in acc.items():
                if len(pairs) == 1:
                    a, b = pairs[0]
                    new[j] = a * b
                else:
                    new[j] = dot(pairs)
            out.append(new)
        return QMatrix(out, self.row_shape, other.col_shape)

    def transpose(self) -> "QMatrix":
        return QMatrix([list(col) for col in zip(*self.rows)] if self.rows else [],
                       self.col_shape, self.row_shape)

    @property
    def T(self) -> "QMatrix":
        return self.transpose()

    def column(self, j: int) -> "QMatrix":
        return QMatrix([[row[j]] for row in self.rows])

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "QMatrix":
        return QMatrix([[self.rows[i][j] for j in cols] for i in rows])

    def map(self, f) -> "QMatrix":
        return QMatrix([[f(x) for x in row] for row in self.rows], self.row_shape, self.col_shape)

    def _check_same(self, other: "QMatrix") -> None:
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError(f"size mismatch {self.nrows}x{self.ncols} vs {other.nrows}x{other.ncols}")

    # -- serialization ----------------------------------------------------
    def to_json(self) -> dict:
        return {
            "shape_rows": list(self.row_shape),
            "shape_cols": list(self.col_shape),
            "entries": [str(x) for row in self.rows for x in row],
        }

    @classmethod
    def from_json(cls, obj) -> "QMatrix":
        if isinstance(obj, str):
            obj = json.loads(obj)
        rs, cs = tuple(obj["shape_rows"]), tuple(obj["shape_cols"])
        nr, nc = prod(rs), prod(cs)
        flat = [parse_scalar(s) for s in obj["entries"]]
        if len(flat) != nr * nc:
            raise ValueError("entry count does not match the declared shape")
        return cls([flat[i * nc:(i + 1) * nc] for i in range(nr)], rs, cs)


def _as_shape(shape) -> tuple[int, ...]:
    if isinstance(shape, int):
        return (shape,)
    return tuple(shape)


def kron(a: QMatrix, b: QMatrix) -> QMatrix:
    nc_b = b.ncols
    out = []
    for ra in a.rows:
        for rb in b.rows:
            new = [ZERO] * (len(ra) * nc_b)
            for i, x in enumerate(ra):
                if x is ZERO:
                    continue
                base = i * nc_b
                one = x == ONE
                for j, y in enumerate(rb):
                    if y is not ZERO:
                        new[base + j] = y if one else x * y
            out.append(new)
    return QMatrix(out, a.row_shape + b.row_shape, a.col_shape + b.col_shape)


def embed(m: QMatrix, positions: Sequence[int], k: int, n: int) -> QMatrix:
    """Place an operator on ``len(positions)`` factors into ``V^{(x)k}``.

    ``positions`` are 1-based and need not be adjacent or increasing:
    ``embed(R, (2, 1), 2, n)`` is ``R_21 = P R P``.
    """
    t = len(positions)
    if n ** t != m.nrows or m.nrows != m.ncols:
        raise ValueError("operator size does not match the number of factors")
    if len(set(positions)) != t or min(positions) < 1 or max(positions) > k:
        raise ValueError(f"positions {tuple(positions)} out of range for {k} factors")
    pos = [p - 1 for p in positions]
    local = [[(j, x) for j, x in enumerate(row) if x is not ZERO] for row in m.rows]
    local_digits = [_digits(j, (n,) * t) for j in range(n ** t)]
    total = n ** k
    shape = (n,) * k
    rows = []
    for r in range(total):
        d = _digits(r, shape)
        li = _undigits([d[p] for p in pos], (n,) * t)
        new = [ZERO] * total
        for j, x in local[li]:
            dd = list(d)
            for p, v in zip(pos, local_digits[j]):
                dd[p] = v
            new[_undigits(dd, shape)] = x
        rows.append(new)
    return QMatrix(rows, shape, shape)


def embed_at(m: QMatrix, i: int, k: int, n: int) -> QMatrix:
    """``I^{(x)(i-1)} (x) M (x) I^{...}`` for ``M`` on consecutive factors starting at ``i``."""
    t = 0
    size = m.nrows
    while n ** t < size:
        t += 1
    if n ** t != size:
        raise ValueError("operator dimension is not a power of the factor dimension")
    if i < 1 or i + t - 1 > k:
        raise ValueError(f"position {i} out of range for an operator on {t} factors in {k}")
    left, right = n ** (i - 1), n ** (k - i - t + 1)
    out = m.with_shape((n,) * t)
    if left > 1:
        out = kron(QMatrix.identity((n,) * (i - 1)), out)
    if right > 1:
        out = kron(out, QMatrix.identity((n,) * (k - i - t + 1)))
    return out.with_shape((n,) * k)


def partial_trace(m: QMatrix, s: int) -> QMatrix:
    """Contract the ``s``-th (1-based) row factor against the ``s``-th column factor."""
    rs, cs = m.row_shape, m.col_shape
    if not (1 <= s <= len(rs)) or len(rs) != len(cs) or rs[s - 1] != cs[s - 1]:
        raise ValueError(f"cannot trace factor {s} of shape {rs}x{cs}")
    d = rs[s - 1]
    new_rs = rs[:s - 1] + rs[s:]
    new_cs = cs[:s - 1] + cs[s:]
    inner_r = prod(rs[s:])
    inner_c = prod(cs[s:])
    nr, nc = prod(new_rs), prod(new_cs)
    out = []
    for r in range(nr):
        ro, ri = divmod(r, inner_r)
        new = []
        for c in range(nc):
            co, ci = divmod(c, inner_c)
            vals = [m.rows[(ro * d + a) * inner_r + ri][(co * d + a) * inner_c + ci] for a in range(d)]
            new.append(lsum(vals))
        out.append(new)
    if not new_rs:
        new_rs = new_cs = (1,)
    return QMatrix(out, new_rs, new_cs)


def partial_transpose(m: QMatrix, factors: Iterable[int]) -> QMatrix:
    """Swap row and column digits of the given (1-based) factors."""
    rs, cs = m.row_shape, m.col_shape
    if rs != cs:
        raise ValueError("partial transpose needs equal row and column factors")
    fs = [f - 1 for f in factors]
    n = m.nrows
    out = [[ZERO] * n for _ in range(n)]
    for r, row in enumerate(m.rows):
        dr = _digits(r, rs)
        for c, x in enumerate(row):
            if x is ZERO:
                continue
            dc = _digits(c, cs)
            nr_, nc_ = list(dr), list(dc)
            for f in fs:
                nr_[f], nc_[f] = dc[f], dr[f]
            out[_undigits(nr_, rs)][_undigits(nc_, cs)] = x
    return QMatrix(out, rs, cs)


def permutation(n: int) -> QMatrix:
    """The flip ``P`` on ``V (x) V``."""
    m = QMatrix.zeros((n, n))
    for i, j in itertools.product(range(n), repeat=2):
        m.rows[i * n + j][j * n + i] = ONE
    return m


def matrix_power(m: QMatrix, e: int) -> QMatrix:
    out = QMatrix.identity(m.row_shape)
    for _ in range(e):
        out = out @ m
    return out


def r_chain(r: QMatrix, i: int, j: int, sign: int, k: int, n: int | None = None,
            r_inverse: QMatrix | None = None) -> QMatrix:
    """``R^{+-1}_{(i->j)}`` on ``V^{(x)k}``: ordered product of ``R_i, R_{i+-1}, ..., R_j``."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    if n is None:
        n = r.row_shape[0] if len(r.row_shape) == 2 else int(round(r.nrows ** 0.5))
    if not (1 <= i <= k - 1 and 1 <= j <= k - 1):
        raise ValueError(f"chain indices ({i}, {j}) out of range for {k} factors")
    base = r
    if sign == -1:
        base = r_inverse if r_inverse is not None else inverse(r)
    step = 1 if j >= i else -1
    out = None
    for s in range(i, j + step, step):
        factor = embed_at(base, s, k, n)
        out = factor if out is None else out @ factor
    return out


# -- elimination ----------------------------------------------------------

def _poly_rows(m: QMatrix):
    """Clear denominators row by row: each row becomes a list of ``fmpz_poly``."""
    import flint

    out = []
    for row in m.rows:
        nz = [x for x in row if x is not ZERO]
        if not nz:
            out.append([flint.fmpz_poly([]) for _ in row])
            continue
        low = min(x.shift for x in nz)
        den = flint.fmpz_poly([1])
        for x in nz:
            if not x.den.is_one():
                g = den.gcd(x.den)
                den = den * (x.den // g)
        new = []
        for x in row:
            if x is ZERO:
                new.append(flint.fmpz_poly([]))
            else:
                new.append((x.num * (den // x.den)).left_shift(x.shift - low))
        out.append(new)
    return out


def rank_exact(m: QMatrix) -> int:
    """Rank over Q(q) by fraction-free (Bareiss) elimination over Z[q].

    Pivots are the first nonzero entry in column order.
    """
    import flint

    a = _poly_rows(m)
    nr, nc = m.nrows, m.ncols
    prev = flint.fmpz_poly([1])
    r = 0
    for c in range(nc):
        if r == nr:
            break
        piv = next((i for i in range(r, nr) if not a[i][c].is_zero()), None)
        if piv is None:
            continue
        if piv != r:
            a[r], a[piv] = a[piv], a[r]
        prow = a[r]
        p = prow[c]
        for i in range(r + 1, nr):
            row = a[i]
            f = row[c]
            if f.is_zero():
                if not (p.is_one() and prev.is_one()):
                    for j in range(c + 1, nc):
                        if not row[j].is_zero():
                            row[j] = (p * row[j]) // prev
            else:
                for j in range(c + 1, nc):
                    row[j] = (p * row[j] - f * prow[j]) // prev
            row[c] = flint.fmpz_poly([])
        prev = p
        r += 1
    return r


def _sparse_rows(m: QMatrix) -> list[dict[int, LaurentRational]]:
    return [{j: x for j, x in enumerate(row) if x is not ZERO} for row in m.rows]


def _rref_sparse(rows: list[dict], ncols: int, pivot_limit: int | None = None):
    """In-place reduced row echelon form of sparse rows; returns pivot columns."""
    limit = ncols if pivot_limit is None else pivot_limit
    pivots: list[int] = []
    r = 0
    nr = len(rows)
    for c in range(limit):
        if r == nr:
            break
        piv = next((i for i in range(r, nr) if c in rows[i]), None)
        if piv is None:
            continue
        if piv != r:
            rows[r], rows[piv] = rows[piv], rows[r]
        prow = rows[r]
        inv = prow[c].inverse()
        prow = {j: (x * inv if j != c else ONE) for j, x in prow.items()}
        rows[r] = prow
        items = list(prow.items())
        for i in range(nr):
            if i == r:
                continue
            row = rows[i]
            f = row.get(c)
            if f is None:
                continue
            for j, x in items:
                v = row.get(j, ZERO) - f * x
                if v is ZERO:
                    row.pop(j, None)
                else:
                    row[j] = v
        pivots.append(c)
        r += 1
    return pivots


def rref(m: QMatrix) -> tuple[QMatrix, list[int]]:
    rows = _sparse_rows(m)
    pivots = _rref_sparse(rows, m.ncols)
    nc = m.ncols
    dense = []
    for row in rows:
        new = [ZERO] * nc
        for j, x in row.items():
            new[j] = x
        dense.append(new)
    return QMatrix(dense), pivots


def solve_linear(a: QMatrix, rhs: QMatrix) -> QMatrix | None:
    """Exact solution of ``a @ x == rhs``; free variables are set to zero.

    Returns ``None`` when the system is inconsistent.
    """
    if a.nrows != rhs.nrows:
        raise ValueError("row count mismatch between matrix and right-hand side")
    na, nb = a.ncols, rhs.ncols
    rows = []
    for ra, rb in zip(a.rows, rhs.rows):
        d = {j: x for j, x in enumerate(ra) if x is not ZERO}
        for j, x in enumerate(rb):
            if x is not ZERO:
                d[na + j] = x
        rows.append(d)
    pivots = _rref_sparse(rows, na + nb, pivot_limit=na)
    for row in rows[len(pivots):]:
        if row:
            return None
    x = [[ZERO] * nb for _ in range(na)]
    for row, c in zip(rows, pivots):
        for j, v in row.items():
            if j >= na:
                x[c][j - na] = v
    return QMatrix(x, a.col_shape, rhs.col_shape)


def nullspace(a: QMatrix) -> list[list[LaurentRational]]:
    """Basis of ``{x : a @ x == 0}``, one vector per free column."""
    rows = _sparse_rows(a)
    nc = a.ncols
    pivots = _rref_sparse(rows, nc)
    pivset = set(pivots)
    basis = []
    for free in range(nc):
        if free in pivset:
            continue
        vec = [ZERO] * nc
        vec[free] = ONE
        for row, c in zip(rows, pivots):
            v = row.get(free)
            if v is not None:
                vec[c] = -v
        basis.append(vec)
    return basis


def inverse(m: QMatrix) -> QMatrix:
    if not m.is_square():
        raise ValueError("only square matrices can be inverted")
    x = solve_linear(m, QMatrix.identity(m.nrows))
    if x is None:
        raise ZeroDivisionError("matrix is singular")
    out = x.with_shape(m.col_shape, m.row_shape)
    if rank_exact(m) != m.nrows:
        raise ZeroDivisionError("matrix is singular")
    return out


def column_basis(m: QMatrix) -> tuple[QMatrix, QMatrix]:
    """Factor ``m = U @ W`` with ``U`` the pivot columns of ``m`` and ``W`` full row rank."""
    red, pivots = rref(m)
    u = m.submatrix(range(m.nrows), pivots)
    w = QMatrix([red.rows[i] for i in range(len(pivots))]) if pivots else QMatrix.zeros((0,), (m.ncols,))
    return u, w
