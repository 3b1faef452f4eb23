"""Representations of B type: the fundamental module built from the trace
matrix ``B``, its tensor powers, their Young components, sl-reduction and
the closed-form central characters.
"""
from __future__ import annotations

from .family import RepFamily, scalar_on_projector
from .hecke import (
    Partition,
    StandardTableau,
    contents,
    q_antisymmetrizer,
    q_symmetrizer,
    young_projector,
)
from .scalar import ONE, ZERO, LaurentRational, lam, lsum, q_int, qpow
from .tensor import QMatrix, embed, embed_at, inverse, kron, permutation, r_chain, rank_exact

__all__ = [
    "SingularNormalizationError",
    "fundamental_b",
    "tensor_power_b",
    "project_b",
    "row_module_b",
    "column_module_b",
    "sl_reduce",
    "renormalize",
    "char_b_row",
    "char_b_col",
    "char_b_s1",
    "char_b_s1_from_contents",
    "sl_char_b",
    "fundamental_omega",
    "tensor_center_operator",
]


class SingularNormalizationError(ZeroDivisionError):
    """The sl-reduction factor vanishes."""


def _seed_block(profile, k: int) -> QMatrix:
    """``P_{1,k+1} B_{k+1}`` on ``V^{(x)(k+1)}``: the fundamental block placed on factor 1."""
    n = profile.n
    return embed(permutation(n), (1, k + 1), k + 1, n) @ embed_at(profile.B, k + 1, k + 1, n)


def _span_dimension(rep: RepFamily) -> int:
    n = rep.n
    flat = [[x for row in rep.generator(i, j).rows for x in row] for i in range(n) for j in range(n)]
    return rank_exact(QMatrix(flat))


def fundamental_b(profile) -> RepFamily:
    profile.require()
    rep = RepFamily(profile.n, _seed_block(profile, 1), "mREA", meta={"k": 1, "type": "B"})
    rep.meta["generators_span_end"] = _span_dimension(rep) == profile.n ** 2
    return rep


def tensor_power_b(profile, k: int) -> RepFamily:
    """The module ``V^{(x)k}``: the seed block plus its conjugates by inverse R-chains."""
    profile.require()
    if k < 1:
        raise ValueError("k must be positive")
    n = profile.n
    seed = _seed_block(profile, k)
    total = k + 1
    terms = [seed]
    for s in range(1, k):
        left = r_chain(profile.R, s, 1, -1, total, n, profile.R_inv)
        right = r_chain(profile.R, 1, s, -1, total, n, profile.R_inv)
        terms.append(left @ seed @ right)
    block = terms[0]
    for t in terms[1:]:
        block = block + t
    return RepFamily(n, block, "mREA", meta={"k": k, "type": "B", "_profile": profile})


def _conjugate_module(block: QMatrix, proj: QMatrix, n: int) -> QMatrix:
    big = kron(proj, QMatrix.identity((n,)))
    return big @ block @ big


def project_b(rep: RepFamily, t: StandardTableau, profile=None) -> RepFamily:
    """Restrict a tensor power to the component cut out by the tableau ``t``."""
    if rep.projector is not None:
        raise ValueError("expected an unprojected tensor power")
    if t.k != rep.k:
        raise ValueError(f"tableau weight {t.k} does not match k = {rep.k}")
    profile = profile if profile is not None else rep.meta.get("_profile")
    if profile is None:
        raise ValueError("a profile is needed to build the projector")
    y = young_projector(profile, t)
    block = _conjugate_module(rep.block, y, rep.n)
    return RepFamily(rep.n, block, rep.flavor, projector=y,
                     meta={**rep.meta, "tableau": t, "shape": t.shape})


def row_module_b(profile, k: int) -> RepFamily:
    """Symmetric component built directly from ``S^(k)`` and the seed block."""
    s = q_symmetrizer(profile, k)
    block = _conjugate_module(_seed_block(profile, k), s, profile.n).scale(qpow(1 - k) * q_int(k))
    return RepFamily(profile.n, block, "mREA", projector=s,
                     meta={"k": k, "type": "B", "shape": Partition((k,))})


def column_module_b(profile, k: int) -> RepFamily:
    profile.require()
    if k > profile.p:
        raise ValueError(f"the antisymmetrizer of order {k} vanishes for rank {profile.p}")
    a = q_antisymmetrizer(profile, k)
    block = _conjugate_module(_seed_block(profile, k), a, profile.n).scale(qpow(k - 1) * q_int(k))
    return RepFamily(profile.n, block, "mREA", projector=a,
                     meta={"k": k, "type": "B", "shape": Partition((1,) * k)})


def tensor_center_operator(profile, k: int) -> QMatrix:
    """``I + sum_s R^-1_(s->1) R^-1_(1->s)`` on ``V^{(x)k}``."""
    n = profile.n
    out = QMatrix.identity((n,) * k)
    for s in range(1, k):
        out = out + (r_chain(profile.R, s, 1, -1, k, n, profile.R_inv)
                     @ r_chain(profile.R, 1, s, -1, k, n, profile.R_inv))
    return out


def fundamental_omega(p: int) -> LaurentRational:
    return qpow(1 - p) / q_int(p) * (qpow(p - 2) * q_int(p + 1) - ONE)


def sl_reduce(rep: RepFamily, profile) -> RepFamily:
    """Pass to the traceless quotient.

    The quantum trace of ``L`` must act as a scalar on the module; that
    scalar fixes both the shift and the normalization. Unprojected tensor
    powers (``k > 1``) are reducible and use the center operator
    ``I + sum_s R^-1_(s->1) R^-1_(1->s)`` in place of the scalar.
    """
    if rep.flavor != "mREA":
        raise ValueError("sl-reduction expects an mREA representation")
    trace_c = profile.C.trace()
    chi = scalar_on_projector(rep.quantum_trace_power(profile.C, 1), rep.module_projector())
    if chi is not None:
        omega = ONE - lam * chi / trace_c
        if omega is ZERO:
            raise SingularNormalizationError("sl-reduction factor vanishes")
        shift = rep.delta_block().scale(chi / trace_c)
        block = (rep.block - shift).scale(omega.inverse())
        return rep.with_block(block, flavor="SL", meta={"omega": omega, "chi1": chi})
    if rep.projector is not None or rep.meta.get("type") != "B":
        raise ValueError("quantum trace is not scalar on this module")
    # Different components carry different eigenvalues of Tr_q L, so the
    # normalization is the central operator I - lambda * shift, not a scalar.
    p, n = profile.p, rep.n
    center = tensor_center_operator(profile, rep.k).scale((q_int(p) * qpow(p)).inverse())
    omega = QMatrix.identity(center.row_shape) - center.scale(lam)
    try:
        omega_inv = inverse(omega)
    except ZeroDivisionError as exc:
        raise SingularNormalizationError("sl-reduction factor is singular") from exc
    aux = QMatrix.identity((n,))
    block = kron(omega_inv, aux) @ (rep.block - kron(center, aux))
    return rep.with_block(block, flavor="SL", meta={"center_route": True})


def renormalize(rep: RepFamily, z) -> RepFamily:
    """``rho -> z rho + (1 - z)/lambda delta``, the rescaling of the unshifted generators."""
    z = LaurentRational.coerce(z)
    if z is ZERO:
        raise ValueError("z must be nonzero")
    if rep.flavor != "mREA":
        raise ValueError("renormalization acts on mREA representations")
    block = rep.block.scale(z) + rep.delta_block().scale((ONE - z) / lam)
    return rep.with_block(block, meta={"renormalized_by": z})


# -- closed-form characters ------------------------------------------------

def char_b_row(k: int, m: int, p: int) -> LaurentRational:
    if k < 1 or m < 1:
        raise ValueError("k and m must be positive")
    return qpow(-m * (p + k - 1) - p) * q_int(k) * q_int(p + k - 1) ** (m - 1)


def char_b_col(k: int, m: int, p: int) -> LaurentRational:
    if k < 1 or m < 1:
        raise ValueError("k and m must be positive")
    if k > p:
        raise ValueError(f"column of height {k} exceeds the symmetry rank {p}")
    return qpow(-m * (p - k + 1) - p) * q_int(k) * q_int(p - k + 1) ** (m - 1)


def char_b_s1(shape: Partition, p: int) -> LaurentRational:
    """Row-length form of the ``Tr_q L`` eigenvalue."""
    terms = [qpow(2 * r - 1 - part) * q_int(part) for r, part in enumerate(shape.parts, start=1)]
    return qpow(-2 * p) * lsum(terms)


def char_b_s1_from_contents(shape: Partition, p: int) -> LaurentRational:
    """The same eigenvalue as a sum of inverse contents."""
    t = StandardTableau.row_reading(shape)
    return qpow(-2 * p) * lsum(c.inverse() for c in contents(t))


def sl_char_b(k: int, m: int, p: int, shape: str) -> LaurentRational:
    if k < 1 or m < 1:
        raise ValueError("k and m must be positive")
    if shape == "row":
        pref = qpow(-p - m) * q_int(k) * q_int(p - 1) * q_int(p + k) / q_int(p + k - 1)
        bracket = q_int(p - 1) ** (m - 1) * q_int(p + k) ** (m - 1) + (-1) ** m * q_int(k) ** (m - 1)
        den = qpow(p - 2) * q_int(p + k) - q_int(k)
    elif shape == "col":
        if k > p:
            raise ValueError(f"column of height {k} exceeds the symmetry rank {p}")
        pref = qpow(-p + m) * q_int(k) * q_int(p + 1) * q_int(p - k) / q_int(p - k + 1)
        bracket = q_int(p + 1) ** (m - 1) * q_int(p - k) ** (m - 1) + (-1) ** m * q_int(k) ** (m - 1)
        den = qpow(p + 2) * q_int(p - k) + q_int(k)
    else:
        raise ValueError("shape must be 'row' or 'col'")
    return pref * bracket / den ** m
