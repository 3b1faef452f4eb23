"""R-matrix catalog, validation pipeline and derived data.

A profile bundles a braided R together with its skew-inverse, the two
trace matrices derived from it and the symmetry rank.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .scalar import ONE, LaurentRational, lam, parse_scalar, q, q_int, qpow
from .tensor import (
    QMatrix,
    embed,
    embed_at,
    inverse,
    partial_trace,
    permutation,
    rank_exact,
    solve_linear,
)

__all__ = [
    "InvalidProfileError",
    "RMatrixProfile",
    "catalog_uq_sl2",
    "catalog_standard_hecke",
    "check_yang_baxter",
    "check_hecke",
    "skew_inverse",
    "symmetry_rank",
    "validate",
    "load_rmatrix",
    "dump_rmatrix",
]

MANDATORY = ("yang_baxter", "hecke", "skew_invertible")


class InvalidProfileError(ValueError):
    """A builder was handed a profile that failed a mandatory check."""


def _factor_dim(r: QMatrix) -> int:
    if len(r.row_shape) == 2 and r.row_shape[0] == r.row_shape[1] and r.row_shape == r.col_shape:
        return r.row_shape[0]
    size = r.nrows
    n = int(round(size ** 0.5))
    if n * n != size or not r.is_square():
        raise ValueError(f"expected an operator on V (x) V, got {r.nrows}x{r.ncols}")
    return n


def _as_pair(r: QMatrix) -> QMatrix:
    n = _factor_dim(r)
    return r.with_shape((n, n))


def catalog_uq_sl2() -> QMatrix:
    return QMatrix.from_rows(
        [[q, 0, 0, 0],
         [0, lam, 1, 0],
         [0, 1, 0, 0],
         [0, 0, 0, q]],
        (2, 2), (2, 2),
    )


def catalog_standard_hecke(n: int) -> QMatrix:
    """Drinfeld-Jimbo R-matrix for sl(n) in the same convention as ``catalog_uq_sl2``."""
    if n < 2:
        raise ValueError("n must be at least 2")
    r = QMatrix.zeros((n, n))
    for i in range(n):
        for j in range(n):
            row = i * n + j
            if i == j:
                r.rows[row][row] = q
            else:
                r.rows[row][j * n + i] = ONE
                if i < j:
                    r.rows[row][row] = lam
    return r


def check_yang_baxter(r: QMatrix) -> bool:
    n = _factor_dim(r)
    r12 = embed_at(r, 1, 3, n)
    r23 = embed_at(r, 2, 3, n)
    return r12 @ r23 @ r12 == r23 @ r12 @ r23


def check_hecke(r: QMatrix) -> bool:
    r = _as_pair(r)
    ident = QMatrix.identity(r.row_shape)
    return ((r - ident.scale(q)) @ (r + ident.scale(q.inverse()))).is_zero()


def skew_inverse(r: QMatrix) -> QMatrix | None:
    """Solve ``sum_{a,b} R_{ia}^{jb} Psi_{bk}^{as} = delta_i^s delta_k^j``.

    The n^4 unknowns split into n^2 independent right-hand sides of one
    n^2 x n^2 system, so a single elimination suffices.
    """
    n = _factor_dim(r)
    n2 = n * n
    a = QMatrix.zeros((n2,), (n2,))
    for i in range(n):
        for j in range(n):
            for b in range(n):
                for aa in range(n):
                    a.rows[i * n + j][b * n + aa] = r.rows[i * n + aa][j * n + b]
    if rank_exact(a) != n2:
        return None
    rhs = QMatrix.zeros((n2,), (n2,))
    for i in range(n):
        for j in range(n):
            rhs.rows[i * n + j][j * n + i] = ONE
    x = solve_linear(a, rhs)
    if x is None:
        return None
    psi = QMatrix.zeros((n, n))
    for b in range(n):
        for aa in range(n):
            for k in range(n):
                for s in range(n):
                    psi.rows[b * n + k][aa * n + s] = x.rows[b * n + aa][k * n + s]
    if not _closed_identities(r.with_shape((n, n)), psi, n):
        return None
    return psi


def _closed_identities(r: QMatrix, psi: QMatrix, n: int) -> bool:
    left = partial_trace(embed_at(r, 1, 3, n) @ embed_at(psi, 2, 3, n), 2)
    right = partial_trace(embed_at(psi, 1, 3, n) @ embed_at(r, 2, 3, n), 2)
    # tracing the middle factor leaves factors (1, 3), where P13 is the flip
    target = permutation(n)
    return left == target and right == target


def _antisymmetrizers(r: QMatrix, n: int, k_max: int):
    """Yield A^(1), A^(2), ... built by the Hecke recurrence."""
    from .hecke import antisymmetrizer_from_r

    prev = None
    for k in range(1, k_max + 1):
        prev = antisymmetrizer_from_r(r, n, k, prev)
        yield k, prev


def symmetry_rank(r: QMatrix, k_max: int = 6) -> int | None:
    """Smallest p with rank A^(p) = 1 and A^(p+1) = 0, or None if not found by ``k_max``."""
    n = _factor_dim(r)
    r = r.with_shape((n, n))
    last_rank = None
    for k, a in _antisymmetrizers(r, n, k_max + 1):
        if a.is_zero():
            return k - 1 if last_rank == 1 else None
        if k > k_max:
            return None
        last_rank = rank_exact(a)
    return None


@dataclass(frozen=True)
class RMatrixProfile:
    n: int
    R: QMatrix
    Psi: QMatrix | None
    B: QMatrix | None
    C: QMatrix | None
    p: int | None
    flags: dict = field(default_factory=dict)
    cache: dict = field(default_factory=dict, compare=False, repr=False)

    @property
    def valid(self) -> bool:
        return all(self.flags.get(name, False) for name in MANDATORY)

    def require(self, need_rank: bool = True) -> "RMatrixProfile":
        if not self.valid:
            failed = [name for name in MANDATORY if not self.flags.get(name, False)]
            raise InvalidProfileError(f"profile failed mandatory checks: {', '.join(failed)}")
        if need_rank and self.p is None:
            raise InvalidProfileError("symmetry rank was not found")
        return self

    @property
    def R_inv(self) -> QMatrix:
        if "R_inv" not in self.cache:
            if self.flags.get("hecke"):
                # (R - q)(R + 1/q) = 0 gives R^-1 = R - lambda
                self.cache["R_inv"] = self.R - QMatrix.identity((self.n, self.n)).scale(lam)
            else:
                self.cache["R_inv"] = inverse(self.R).with_shape((self.n, self.n))
        return self.cache["R_inv"]

    def report(self) -> dict:
        return {
            "n": self.n,
            "valid": self.valid,
            "symmetry_rank": self.p,
            "flags": dict(self.flags),
            "B": self.B.to_json() if self.B is not None else None,
            "C": self.C.to_json() if self.C is not None else None,
        }


def validate(r: QMatrix, k_max: int = 6) -> RMatrixProfile:
    """Run every check on ``r`` and bundle the derived data."""
    n = _factor_dim(r)
    r = r.with_shape((n, n))
    flags: dict[str, bool] = {}
    flags["yang_baxter"] = check_yang_baxter(r)
    flags["hecke"] = check_hecke(r)
    psi = skew_inverse(r)
    flags["skew_invertible"] = psi is not None
    b = c = None
    p = None
    if psi is not None:
        b = partial_trace(psi, 1)
        c = partial_trace(psi, 2)
    if flags["hecke"]:
        p = symmetry_rank(r, k_max)
    flags["symmetry_rank_found"] = p is not None
    profile = RMatrixProfile(n, r, psi, b, c, p, flags)
    if psi is not None and p is not None:
        flags.update(_profile_invariants(profile))
    return profile


def _profile_invariants(pr: RMatrixProfile) -> dict[str, bool]:
    n, p, r, psi, b, c = pr.n, pr.p, pr.R, pr.Psi, pr.B, pr.C
    ident = QMatrix.identity((n,))
    out = {}
    out["b_c_scalar"] = b @ c == ident.scale(qpow(-2 * p))
    norm = q_int(p) * qpow(-p)
    out["trace_norm"] = b.trace() == norm and c.trace() == norm
    out["trace_b_r"] = partial_trace(embed_at(b, 1, 2, n) @ r, 1) == ident
    bb = embed_at(b, 1, 2, n) @ embed_at(b, 2, 2, n)
    out["r_commutes_bb"] = r @ bb == bb @ r
    psi21 = embed(psi, (2, 1), 2, n)
    lhs = (embed_at(c, 1, 2, n) @ psi21 @ embed_at(b, 2, 2, n)).scale(qpow(2 * p))
    out["psi_r"] = lhs == pr.R_inv
    out["basis_change"] = check_basis_change(pr)
    out["b_psi_c"] = check_b_psi_c(pr)
    return out


def check_basis_change(pr: RMatrixProfile) -> bool:
    """``Tr_0 B_0 R_01 R_02^-1 = P_12 B_1`` with the traced space listed first."""
    n = pr.n
    b0 = embed_at(pr.B, 1, 3, n)
    r01 = embed(pr.R, (1, 2), 3, n)
    r02_inv = embed(pr.R_inv, (1, 3), 3, n)
    lhs = partial_trace(b0 @ r01 @ r02_inv, 1)
    rhs = permutation(n) @ embed_at(pr.B, 1, 2, n)
    return lhs == rhs


def check_b_psi_c(pr: RMatrixProfile) -> bool:
    """``B_2 Psi_23 C_3 = C_3 Psi_23 B_2`` on three factors."""
    n = pr.n
    b2, c3 = embed_at(pr.B, 2, 3, n), embed_at(pr.C, 3, 3, n)
    psi23 = embed_at(pr.Psi, 2, 3, n)
    return b2 @ psi23 @ c3 == c3 @ psi23 @ b2


def load_rmatrix(path) -> QMatrix:
    obj = json.loads(Path(path).read_text())
    n = int(obj["n"])
    rows = [[parse_scalar(s) if isinstance(s, str) else LaurentRational.coerce(s) for s in row]
            for row in obj["entries"]]
    if len(rows) != n * n or any(len(row) != n * n for row in rows):
        raise ValueError(f"entries must form a {n * n}x{n * n} array")
    return QMatrix(rows, (n, n), (n, n))


def dump_rmatrix(r: QMatrix, path=None) -> dict:
    n = _factor_dim(r)
    obj = {"n": n, "entries": [[str(x) for x in row] for row in r.rows]}
    if path is not None:
        Path(path).write_text(json.dumps(obj, indent=1))
    return obj
