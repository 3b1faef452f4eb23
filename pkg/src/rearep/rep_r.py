"""Representations of R type built from Jucys-Murphy operators, their
characters and sl-reduction, the comparison with B-type modules, and a
reducible module without an invariant complement.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .family import RepFamily
from .hecke import (
    Partition,
    StandardTableau,
    jucys_murphy,
    q_antisymmetrizer,
    q_symmetrizer,
    young_projector,
)
from .rep_b import column_module_b, fundamental_b, sl_reduce
from .rmatrix import InvalidProfileError, catalog_uq_sl2, validate
from .scalar import ONE, ZERO, LaurentRational, lam, lsum, q_int, qpow
from .tensor import (
    QMatrix,
    embed,
    embed_at,
    inverse,
    kron,
    partial_trace,
    partial_transpose,
    permutation,
    rank_exact,
    solve_linear,
)

__all__ = [
    "r_type_rep",
    "to_mrea",
    "project_r",
    "sl_reduce_r",
    "char_r",
    "zeta_r_s1",
    "sl_zeta_r",
    "sl_closed_form_r",
    "RankOneFactorization",
    "rank_one_factorization",
    "EquivalenceReport",
    "check_b_r_equivalence",
    "IndecomposableAnalysis",
    "indecomposable_example",
]


def _module_transpose(m: QMatrix, k: int) -> QMatrix:
    return partial_transpose(m, range(1, k + 1))


def r_type_rep(profile, k: int, alpha=ONE) -> RepFamily:
    """``L^_{k+1} -> alpha J_{k+1}`` on ``V^{(x)k}``; needs only the braid relation."""
    alpha = LaurentRational.coerce(alpha)
    if alpha is ZERO:
        raise ValueError("alpha must be nonzero")
    if not profile.flags.get("yang_baxter"):
        raise InvalidProfileError("R does not satisfy the Yang-Baxter equation")
    if k < 1:
        raise ValueError("k must be positive")
    j = jucys_murphy(profile, k + 1, k + 1).scale(alpha)
    return RepFamily(profile.n, _module_transpose(j, k), "REA",
                     meta={"k": k, "type": "R", "alpha": alpha, "_profile": profile})


def to_mrea(rep: RepFamily) -> RepFamily:
    """Shift ``l = l^ + delta / lambda``."""
    if rep.flavor != "REA":
        raise ValueError("expected an REA representation")
    block = rep.block + rep.delta_block().scale(lam.inverse())
    return rep.with_block(block, flavor="mREA")


def project_r(rep: RepFamily, t: StandardTableau, profile=None) -> RepFamily:
    if rep.projector is not None:
        raise ValueError("expected an unprojected representation")
    if t.k != rep.k:
        raise ValueError(f"tableau weight {t.k} does not match k = {rep.k}")
    profile = profile if profile is not None else rep.meta.get("_profile")
    if profile is None:
        raise ValueError("a profile is needed to build the projector")
    profile.require(need_rank=False)
    k, n = rep.k, rep.n
    y = young_projector(profile, t)
    big = kron(y, QMatrix.identity((n,)))
    j_next = jucys_murphy(profile, k + 1, k + 1)
    commutes = big @ j_next == j_next @ big
    yt = y.transpose()
    big_t = kron(yt, QMatrix.identity((n,)))
    block = big_t @ rep.block @ big_t
    return RepFamily(n, block, rep.flavor, projector=yt,
                     meta={**rep.meta, "tableau": t, "shape": t.shape,
                           "projector_commutes_with_jm": commutes})


def sl_reduce_r(rep: RepFamily, profile) -> RepFamily:
    """Shift to mREA form, then reduce with the scalar value of the quantum trace."""
    return sl_reduce(to_mrea(rep) if rep.flavor == "REA" else rep, profile)


# -- closed forms --------------------------------------------------------------

def char_r(k: int, m: int, p: int, shape: str) -> LaurentRational:
    if k < 1 or m < 1:
        raise ValueError("k and m must be positive")
    ratio = q_int(m * (k + 1)) / q_int(k + 1)
    if shape == "row":
        return qpow(-p) * (qpow(-2 * m) * q_int(p) + lam * q_int(p + k) * ratio * qpow(m * (k - 1)))
    if shape == "col":
        if k > p:
            raise ValueError(f"column of height {k} exceeds the symmetry rank {p}")
        return qpow(-p) * (qpow(2 * m) * q_int(p) - lam * q_int(p - k) * ratio * qpow(-m * (k - 1)))
    raise ValueError("shape must be 'row' or 'col'")


def zeta_r_s1(shape: Partition, p: int) -> LaurentRational:
    terms = [qpow(part + 1 - 2 * r) * q_int(part) for r, part in enumerate(shape.parts, start=1)]
    return qpow(-p) * q_int(p) + lam * lsum(terms)


def sl_zeta_r(k: int, m: int, p: int, shape: str) -> LaurentRational:
    if k < 1 or m < 1:
        raise ValueError("k and m must be positive")
    sign = (-1) ** m
    if shape == "row":
        pref = qpow(-p - m * (p - 1)) * q_int(k) * q_int(p - 1) * q_int(p + k) / q_int(k + 1)
        bracket = q_int(p + k) ** (m - 1) + sign * q_int(k) ** (m - 1) * q_int(p - 1) ** (m - 1)
        den = qpow(2 - p) * q_int(p + k) - q_int(k)
    elif shape == "col":
        if k > p:
            raise ValueError(f"column of height {k} exceeds the symmetry rank {p}")
        pref = qpow(-p - m * (p + 1)) * q_int(k) * q_int(p + 1) * q_int(p - k) / q_int(k + 1)
        bracket = sign * q_int(p - k) ** (m - 1) + q_int(k) ** (m - 1) * q_int(p + 1) ** (m - 1)
        den = qpow(-2 - p) * q_int(p - k) + q_int(k)
    else:
        raise ValueError("shape must be 'row' or 'col'")
    return pref * bracket / den ** m


def sl_closed_form_r(profile, k: int, shape: str) -> QMatrix:
    """Closed form of the sl-reduced single-row or single-column R-type block
    on ``V^{(x)(k+1)}``, in algebra orientation."""
    p, n = profile.p, profile.n
    if shape == "row":
        s_k = kron(q_symmetrizer(profile, k), QMatrix.identity((n,)))
        s_next = q_symmetrizer(profile, k + 1)
        coeff = qpow(1 - p) * q_int(p + k) / (qpow(2 - p) * q_int(p + k) - q_int(k))
        return (s_k - s_next.scale(q_int(p) * q_int(k + 1) / q_int(p + k))).scale(coeff)
    if shape == "col":
        if k > p:
            raise ValueError(f"column of height {k} exceeds the symmetry rank {p}")
        a_k = kron(q_antisymmetrizer(profile, k), QMatrix.identity((n,)))
        a_next = q_antisymmetrizer(profile, k + 1)
        den = qpow(-2 - p) * q_int(p - k) + q_int(k)
        # distributed so that k = p, where (p - k)_q = 0, needs no division by zero
        top = qpow(-1 - p) * q_int(p) * q_int(k + 1) / den
        return a_next.scale(top) - a_k.scale(qpow(-1 - p) * q_int(p - k) / den)
    raise ValueError("shape must be 'row' or 'col'")


# -- rank-one factorization of the top antisymmetrizer -------------------------

@dataclass
class RankOneFactorization:
    """``A^(p) = u v`` with ``u`` a column and ``v`` a row over ``V^{(x)p}``."""

    n: int
    p: int
    u: list[LaurentRational]
    v: list[LaurentRational]

    def outer(self) -> QMatrix:
        shape = (self.n,) * self.p
        return QMatrix([[a * b for b in self.v] for a in self.u], shape, shape)

    def pairing(self) -> LaurentRational:
        return lsum(a * b for a, b in zip(self.u, self.v))

    def contracted(self, keep: int) -> QMatrix:
        """``sum_{a} u_{i a} v^{j a}`` over the last ``p - keep`` indices."""
        n = self.n
        rest = n ** (self.p - keep)
        size = n ** keep
        rows = [[lsum(self.u[i * rest + a] * self.v[j * rest + a] for a in range(rest))
                 for j in range(size)] for i in range(size)]
        return QMatrix(rows, (n,) * keep, (n,) * keep)

    def rescaled(self, c) -> "RankOneFactorization":
        c = LaurentRational.coerce(c)
        return RankOneFactorization(self.n, self.p, [a * c for a in self.u],
                                    [b / c for b in self.v])


def rank_one_factorization(profile) -> RankOneFactorization:
    profile.require()
    p, n = profile.p, profile.n
    a = q_antisymmetrizer(profile, p)
    if rank_exact(a) != 1:
        raise ValueError("the top antisymmetrizer is not of rank one")
    i0, j0 = a.first_nonzero()
    pivot = a.rows[i0][j0]
    u = [row[j0] for row in a.rows]
    v = [x / pivot for x in a.rows[i0]]
    fac = RankOneFactorization(n, p, u, v)
    if fac.outer() != a or fac.pairing() != ONE:
        raise ArithmeticError("rank-one factorization failed to reproduce the antisymmetrizer")
    return fac


# -- B / R comparison ----------------------------------------------------------

@dataclass
class EquivalenceReport:
    p: int
    checks: dict[str, bool] = field(default_factory=dict)
    data: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.checks.values())

    def lines(self) -> list[str]:
        return [f"{'PASS' if v else 'FAIL'}  {name}" for name, v in self.checks.items()]


def _restrict_to_basis(rep: RepFamily, basis: QMatrix) -> QMatrix:
    """Algebra-orientation block of ``rep`` on the span of the columns of ``basis``."""
    n = rep.n
    # left inverse of a full-column-rank matrix
    left = solve_linear(basis.transpose() @ basis, basis.transpose())
    dim = basis.ncols
    out = QMatrix.zeros((dim, n))
    for i in range(n):
        for j in range(n):
            small = left @ rep.generator(i, j) @ basis
            for r in range(dim):
                for c in range(dim):
                    out.rows[r * n + i][c * n + j] = small.rows[r][c]
    return out


def _epsilon_basis(profile, fac: RankOneFactorization) -> QMatrix:
    """Columns ``eps^i = sum_a v^{i a} e_a`` in ``V^{(x)(p-1)}``."""
    n, p = profile.n, profile.p
    rest = n ** (p - 1)
    return QMatrix([[fac.v[i * rest + a] for i in range(n)] for a in range(rest)],
                   (n,) * (p - 1), (n,))


def check_b_r_equivalence(profile) -> EquivalenceReport:
    """Compare the B-type module on ``V_[p-1]`` with the R-type fundamental module."""
    profile.require()
    p, n = profile.p, profile.n
    if p < 2:
        raise ValueError("needs symmetry rank at least 2")
    report = EquivalenceReport(p)
    ck = report.checks
    ident = QMatrix.identity((n, n))
    fac = rank_one_factorization(profile)
    b1, b2 = embed_at(profile.B, 1, 2, n), embed_at(profile.B, 2, 2, n)
    c1 = embed_at(profile.C, 1, 2, n)
    psi21 = embed(profile.Psi, (2, 1), 2, n)
    ck["rank one factorization"] = fac.outer() == q_antisymmetrizer(profile, p)
    ck["u v pairing is one"] = fac.pairing() == ONE
    ck["C from u and v"] = fac.contracted(1).scale(q_int(p) * qpow(-p)) == profile.C
    ck["trace of B against top antisymmetrizer"] = partial_trace(
        embed_at(profile.B, 1, p, n) @ q_antisymmetrizer(profile, p), 1
    ) == q_antisymmetrizer(profile, p - 1).scale((qpow(p) * q_int(p)).inverse())

    theta = to_mrea(r_type_rep(profile, 1, -lam.inverse()))
    theta_block = theta.algebra_block()
    ck["R-type fundamental in mREA form is -R"] = theta_block == -profile.R

    eps = _epsilon_basis(profile, fac)
    a_low = q_antisymmetrizer(profile, p - 1)
    ck["eps vectors fixed by the antisymmetrizer"] = eps.transpose() @ a_low == eps.transpose()
    ck["eps vectors independent"] = rank_exact(eps) == n
    ck["antisymmetric subspace has dimension n"] = rank_exact(a_low) == n

    pi_low = column_module_b(profile, p - 1)
    pi_eps = _restrict_to_basis(pi_low, eps)
    omega = fac.contracted(2).scale(q_int(p) * q_int(p - 1))
    ck["Omega from C and Psi"] = omega == (c1 @ embed_at(profile.C, 2, 2, n)
                                           - (c1 @ psi21 @ c1).scale(qpow(1))).scale(qpow(2 * p - 1))
    ck["module in eps basis via Omega"] = pi_eps == (b1 @ omega @ b2).scale(qpow(2 * (p - 1)))
    ck["module in eps basis via Psi"] = pi_eps == (
        ident.scale(qpow(-3)) - (psi21 @ c1 @ b2).scale(qpow(2 * p - 2)))

    pi_bar = sl_reduce(pi_low, profile)
    pi_bar_eps = _restrict_to_basis(pi_bar, eps)
    denom = q_int(p - 1) + qpow(p + 2)
    expected_pi_bar = (ident - (psi21 @ c1 @ b2).scale(qpow(3 * p) * q_int(p))).scale(qpow(1 - p) / denom)
    ck["sl-reduced B module in eps basis"] = pi_bar_eps == expected_pi_bar
    theta_bar = sl_reduce(theta, profile).algebra_block()
    expected_theta_bar = (ident - profile.R.scale(qpow(-p) * q_int(p))).scale(qpow(p + 1) / denom)
    ck["sl-reduced R-type fundamental"] = theta_bar == expected_theta_bar
    ck["C conjugates B-type into R-type"] = c1 @ pi_bar_eps @ inverse(c1) == theta_bar

    if p == 2:
        u = QMatrix([fac.u[i * n:(i + 1) * n] for i in range(n)])
        u1 = embed_at(u, 1, 2, n)
        u1_inv = inverse(u1)
        pi = fundamental_b(profile).algebra_block()
        ck["u conjugates B-type into R-type"] = (u1 @ pi @ u1_inv).scale(qpow(2)) == ident.scale(
            qpow(1)) + theta_block
        pi_bar_fund = sl_reduce(fundamental_b(profile), profile).algebra_block()
        ck["u conjugates the sl-reduced modules"] = u1 @ pi_bar_fund @ u1_inv == theta_bar
    report.data.update(factorization=fac, eps_basis=eps)
    return report


# -- a reducible module without invariant complement ---------------------------

@dataclass
class IndecomposableAnalysis:
    rep: RepFamily
    matrices: dict[str, QMatrix]
    submodule_e1: bool
    complement: list[LaurentRational] | None
    relation_holds: bool

    @property
    def decomposable(self) -> bool:
        return self.complement is not None


def _one_dim_conjugate(x, y, z) -> QMatrix:
    """``R_21 rho(L^_2) R_21^{-1}`` with factor 1 the generator index and factor 2 the module."""
    r = catalog_uq_sl2()
    r21 = embed(r, (2, 1), 2, 2)
    rho = embed_at(QMatrix.from_rows([[0, x], [y, z]]), 2, 2, 2)
    return r21 @ rho @ inverse(r21)


def indecomposable_example(x, y, z) -> IndecomposableAnalysis:
    x, y, z = (LaurentRational.coerce(s) for s in (x, y, z))
    m = _one_dim_conjugate(x, y, z)
    # m[(i, r), (j, c)] = rho2(l_i^j)[r, c]; swap to module-first algebra orientation
    perm = permutation(2)
    algebra = perm @ m @ perm
    block = partial_transpose(algebra, [1])
    rep = RepFamily(2, block, "REA", meta={"k": 1, "type": "coaction", "x": x, "y": y, "z": z})
    names = {"a": (0, 0), "b": (0, 1), "c": (1, 0), "d": (1, 1)}
    mats = {name: rep.generator(i, j) for name, (i, j) in names.items()}
    submodule = all(mat.rows[1][0] is ZERO for mat in mats.values())
    complement = _invariant_complement(list(mats.values())) if submodule else None
    profile = validate(catalog_uq_sl2())
    from .oracle import check_relations

    holds = check_relations(rep, profile).ok
    return IndecomposableAnalysis(rep, mats, submodule, complement, holds)


def _invariant_complement(mats: list[QMatrix]) -> list[LaurentRational] | None:
    """A functional ``phi = (1, t)`` with ``phi M = M[0][0] phi`` for every generator.

    Such a functional is a module projection onto ``span{e_1}``; its kernel
    is an invariant complement. Returns ``phi`` or None.
    """
    rows, rhs = [], []
    for mat in mats:
        m00, m01, m11 = mat.rows[0][0], mat.rows[0][1], mat.rows[1][1]
        # (1, t) M = (m00, m01 + t m11) must equal m00 (1, t)
        rows.append([m11 - m00])
        rhs.append([-m01])
    sol = solve_linear(QMatrix(rows), QMatrix(rhs))
    if sol is None:
        return None
    return [ONE, sol.rows[0][0]]
