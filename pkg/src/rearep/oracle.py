"""Brute-force checks used to certify the builders: relation substitution,
central spectra, intertwiners and the trace identities of R-chains.

None of these consult the closed-form character formulas.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field

from .family import RepFamily, scalar_on_projector
from .scalar import ONE, ZERO, LaurentRational, lam
from .tensor import (
    QMatrix,
    column_basis,
    embed,
    embed_at,
    kron,
    nullspace,
    partial_trace,
    permutation,
    r_chain,
    rank_exact,
)

__all__ = [
    "CheckResult",
    "VerificationReport",
    "check_relations",
    "central_spectrum",
    "compress",
    "find_intertwiner",
    "commutant_dimension",
    "check_chain_traces",
    "chain_trace",
    "diagonal_chain_trace",
]


@dataclass
class CheckResult:
    name: str
    tag: str
    passed: bool
    witness: tuple | None = None


@dataclass
class VerificationReport:
    subject: str
    results: list[CheckResult] = field(default_factory=list)

    def add(self, name: str, tag: str, passed: bool, witness=None) -> None:
        if any(r.name == name for r in self.results):
            raise ValueError(f"check {name!r} recorded twice")
        self.results.append(CheckResult(name, tag, passed, witness))

    @property
    def ok(self) -> bool:
        return all(r.passed for r in self.results)

    def lines(self) -> list[str]:
        out = []
        for r in self.results:
            line = f"{'PASS' if r.passed else 'FAIL'}  {r.name} [{r.tag}]"
            if r.witness is not None:
                line += f" at {r.witness}"
            out.append(line)
        return out

    def to_json(self) -> dict:
        return {
            "subject": self.subject,
            "ok": self.ok,
            "checks": [
                {"name": r.name, "tag": r.tag, "passed": r.passed,
                 "witness": list(r.witness) if r.witness else None}
                for r in self.results
            ],
        }


def _relation_sides(rep: RepFamily, profile) -> tuple[QMatrix, QMatrix]:
    """Both sides of the flavor's quadratic relation on module x aux x aux."""
    n = rep.n
    m = rep.algebra_block()
    big = kron(m, QMatrix.identity((n,)))
    r_aux = kron(QMatrix.identity(rep.module_shape), profile.R).with_shape(big.row_shape)
    lhs = r_aux @ big @ r_aux @ big - big @ r_aux @ big @ r_aux
    if rep.flavor == "REA":
        rhs = QMatrix.zeros(big.row_shape)
    else:
        rhs = r_aux @ big - big @ r_aux
    return lhs, rhs


def check_relations(rep: RepFamily, profile) -> VerificationReport:
    report = VerificationReport(f"{rep.meta.get('type', '?')}-type k={rep.k} {rep.flavor}")
    lhs, rhs = _relation_sides(rep, profile)
    diff = lhs - rhs
    witness = diff.first_nonzero()
    tag = "RE" if rep.flavor == "REA" else "mREA"
    report.add("quadratic relation", tag, witness is None, witness)
    if rep.flavor == "SL":
        tr = rep.quantum_trace_power(profile.C, 1)
        report.add("quantum trace vanishes", "sl-red", tr.is_zero(), tr.first_nonzero())
    return report


def central_spectrum(rep: RepFamily, m: int, profile) -> LaurentRational | None:
    """Eigenvalue of ``Tr_q L^m`` on the module, or None when it is not central-scalar."""
    if m < 1:
        raise ValueError("m must be positive")
    z = rep.quantum_trace_power(profile.C, m)
    proj = rep.module_projector()
    if proj.is_zero():
        return None
    zb = kron(z, QMatrix.identity((rep.n,)))
    if zb @ rep.block != rep.block @ zb:
        return None
    return scalar_on_projector(z, proj)


# -- intertwiners -------------------------------------------------------------

def compress(rep: RepFamily) -> list[list[QMatrix]]:
    """Generator matrices restricted to the module, in a column basis of the projector."""
    n = rep.n
    if rep.projector is None:
        return [[rep.generator(i, j) for j in range(n)] for i in range(n)]
    # the module lives in the column space of the projector in algebra orientation
    proj = rep.projector.transpose()
    u, w = column_basis(proj)
    return [[w @ rep.generator(i, j) @ u for j in range(n)] for i in range(n)]


def _intertwiner_space(ga: list[list[QMatrix]], gb: list[list[QMatrix]]):
    """Basis of ``{T : T A_ij = B_ij T}`` with ``T`` of size dim B x dim A."""
    da, db = ga[0][0].nrows, gb[0][0].nrows
    rows = []
    for arow, brow in zip(ga, gb):
        for a, b in zip(arow, brow):
            # (T a)[r, c] - (b T)[r, c] with T flattened as T[r, s] -> r * da + s
            for r in range(db):
                for c in range(da):
                    eq = [ZERO] * (db * da)
                    for s in range(da):
                        x = a.rows[s][c]
                        if x is not ZERO:
                            eq[r * da + s] = eq[r * da + s] + x
                    for s in range(db):
                        x = b.rows[r][s]
                        if x is not ZERO:
                            eq[s * da + c] = eq[s * da + c] - x
                    if any(e is not ZERO for e in eq):
                        rows.append(eq)
    if not rows:
        return [[ONE if i == j else ZERO for j in range(db * da)] for i in range(db * da)], db, da
    return nullspace(QMatrix(rows)), db, da


def _as_matrix(vec, db: int, da: int) -> QMatrix:
    return QMatrix([vec[r * da:(r + 1) * da] for r in range(db)])


def find_intertwiner(rep_a: RepFamily, rep_b: RepFamily, attempts: int = 8,
                     seed: int = 0) -> QMatrix | None:
    """An invertible ``T`` with ``T rho_a(l) = rho_b(l) T`` on the compressed modules."""
    if rep_a.n != rep_b.n:
        raise ValueError("auxiliary dimensions differ")
    ga, gb = compress(rep_a), compress(rep_b)
    if ga[0][0].nrows != gb[0][0].nrows:
        return None
    basis, db, da = _intertwiner_space(ga, gb)
    if not basis:
        return None
    for vec in basis:
        t = _as_matrix(vec, db, da)
        if rank_exact(t) == da:
            return t
    rng = random.Random(seed)
    for _ in range(attempts):
        coeffs = [LaurentRational.coerce(rng.randint(-9, 9)) for _ in basis]
        combo = [ZERO] * (db * da)
        for c, vec in zip(coeffs, basis):
            if c is ZERO:
                continue
            combo = [x + c * y if y is not ZERO else x for x, y in zip(combo, vec)]
        t = _as_matrix(combo, db, da)
        if rank_exact(t) == da:
            return t
    return None


def commutant_dimension(rep: RepFamily) -> int:
    """Dimension of the space of module endomorphisms (1 for an absolutely irreducible module)."""
    g = compress(rep)
    basis, _, _ = _intertwiner_space(g, g)
    return len(basis)


# -- trace identities of R-chains -----------------------------------------------

def _chain(profile, i: int, j: int, total: int) -> QMatrix:
    """``R^{-1}_{(i->j)}``; an empty range (either end below 1) is the identity."""
    n = profile.n
    if i < 1 or j < 1:
        return QMatrix.identity((n,) * total)
    return r_chain(profile.R, i, j, -1, total, n, profile.R_inv)


def _descending(profile, start: int, stop: int, total: int) -> QMatrix:
    """``R^{-1}_start R^{-1}_{start-1} ... R^{-1}_stop``, identity when ``start < stop``."""
    if start < stop:
        return QMatrix.identity((profile.n,) * total)
    return _chain(profile, start, stop, total)


def _ascending(profile, start: int, stop: int, total: int) -> QMatrix:
    if stop < start:
        return QMatrix.identity((profile.n,) * total)
    return _chain(profile, start, stop, total)


def chain_trace(profile, n_len: int, k: int) -> tuple[QMatrix, QMatrix]:
    """Both sides of the trace identity for the open chain of length ``n_len < k - 1``.

    Factors are numbered 1..k+2; the trace runs over factor 1 and the result
    lives on factors 2..k+2.
    """
    nd, total = profile.n, k + 2
    b1 = embed_at(profile.B, 1, total, nd)
    r_1k2 = embed(profile.R, (1, k + 2), total, nd)
    lhs = partial_trace(
        _ascending(profile, 1, n_len, total) @ _descending(profile, k - 1, 1, total) @ b1 @ r_1k2, 1
    )
    small = k + 1  # factors 2..k+2 renumbered as 1..k+1
    seed = embed(permutation(nd), (1, small), small, nd) @ embed_at(profile.B, small, small, nd)
    rhs = _descending(profile, k - 2, 1, small) @ seed @ _ascending(profile, 1, n_len, small)
    return lhs, rhs


def diagonal_chain_trace(profile, k: int) -> tuple[QMatrix, QMatrix]:
    """Both sides of the trace identity for ``n = k - 1``."""
    nd, total = profile.n, k + 2
    b1 = embed_at(profile.B, 1, total, nd)
    r_1k2 = embed(profile.R, (1, k + 2), total, nd)
    lhs = partial_trace(
        _ascending(profile, 1, k - 1, total) @ _descending(profile, k - 1, 1, total) @ b1 @ r_1k2, 1
    )
    small = k + 1
    seed = embed(permutation(nd), (1, small), small, nd) @ embed_at(profile.B, small, small, nd)
    rhs = QMatrix.identity((nd,) * small) - seed.scale(lam)
    for m in range(2, k):
        rhs = rhs - (_descending(profile, m - 1, 1, small) @ seed
                     @ _ascending(profile, 1, m - 1, small)).scale(lam)
    return lhs, rhs


def check_chain_traces(profile, k: int) -> VerificationReport:
    profile.require()
    if not 2 <= k <= 4:
        raise ValueError("k must be between 2 and 4")
    report = VerificationReport(f"chain traces n={profile.n} k={k}")
    for n_len in range(0, k - 1):
        lhs, rhs = chain_trace(profile, n_len, k)
        report.add(f"open chain trace n={n_len}", "T(n,k-1)", lhs == rhs, (lhs - rhs).first_nonzero())
    lhs, rhs = diagonal_chain_trace(profile, k)
    report.add("closed chain trace", "T(k-1,k-1)", lhs == rhs, (lhs - rhs).first_nonzero())
    return report
