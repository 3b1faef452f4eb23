import pytest
from hypothesis import given, strategies as st

from rearep.hecke import (
    Partition,
    StandardTableau,
    jucys_murphy,
    partitions_of,
    q_symmetrizer,
    standard_tableaux,
    young_projector,
)
from rearep.oracle import central_spectrum, check_relations
from rearep.rep_r import (
    char_r,
    check_b_r_equivalence,
    indecomposable_example,
    project_r,
    rank_one_factorization,
    r_type_rep,
    sl_closed_form_r,
    sl_reduce_r,
    sl_zeta_r,
    to_mrea,
    zeta_r_s1,
)
from rearep.rmatrix import validate
from rearep.scalar import ONE, ZERO, lam, q, q_int, qpow
from rearep.tensor import QMatrix, embed_at, kron, partial_trace, permutation

P = Partition.parse


def test_fundamental_r_type(profile):
    rep = r_type_rep(profile, 1)
    assert rep.algebra_block() == profile.R @ profile.R
    shifted = to_mrea(r_type_rep(profile, 1, -lam.inverse()))
    assert shifted.algebra_block() == -profile.R
    assert check_relations(shifted, profile).ok


def test_alpha_must_be_nonzero(sl2):
    with pytest.raises(ValueError):
        r_type_rep(sl2, 1, 0)


def test_second_power_relation(sl2):
    assert check_relations(r_type_rep(sl2, 2), sl2).ok
    assert check_relations(r_type_rep(sl2, 2, q * 3), sl2).ok


def test_braid_relation_suffices():
    # the flip solves the braid relation but is not of Hecke type
    flip = validate(permutation(2), 3)
    assert not flip.valid and flip.flags["yang_baxter"]
    assert check_relations(r_type_rep(flip, 2), flip).ok


def test_row_projection_is_symmetrizer_sandwich(sl2):
    rep = project_r(r_type_rep(sl2, 2), StandardTableau.row_reading(P("(2)")))
    big = kron(q_symmetrizer(sl2, 2), QMatrix.identity((2,)))
    assert rep.algebra_block() == big @ jucys_murphy(sl2, 3, 3) @ big


def test_trace_of_symmetric_square(sl2):
    rep = project_r(r_type_rep(sl2, 2), StandardTableau.row_reading(P("(2)")))
    value = qpow(-2) * (qpow(-2) * q_int(2) + lam * q * q_int(4))
    assert rep.quantum_trace_power(sl2.C, 1) == rep.module_projector().scale(value)
    assert value == zeta_r_s1(P("(2)"), 2) == char_r(2, 1, 2, "row")


@pytest.mark.parametrize("k", [1, 2, 3])
def test_projectors_commute_with_next_jucys_murphy(profile, k):
    base = r_type_rep(profile, k)
    for shape in partitions_of(k):
        for t in standard_tableaux(shape):
            if young_projector(profile, t).is_zero():
                continue
            assert project_r(base, t, profile).meta["projector_commutes_with_jm"]


@pytest.mark.parametrize("k", [1, 2])
def test_symmetrizer_absorbs_last_jucys_murphy(profile, k):
    s = q_symmetrizer(profile, k + 1)
    assert s @ jucys_murphy(profile, k + 1, k + 1) == s.scale(qpow(2 * k))


@pytest.mark.parametrize("k", [1, 2])
def test_quantum_trace_of_symmetrizer_over_last_factor(profile, k):
    n, p = profile.n, profile.p
    traced = partial_trace(embed_at(profile.C, k + 1, k + 1, n) @ q_symmetrizer(profile, k + 1), k + 1)
    assert traced == q_symmetrizer(profile, k).scale(qpow(-p) * q_int(p + k) / q_int(k + 1))


def test_zeta_examples(sl2, hecke3):
    assert zeta_r_s1(P("(1)"), 3) == qpow(-3) * q_int(3) + lam
    t21 = standard_tableaux(P("(2,1)"))[1]
    assert central_spectrum(project_r(r_type_rep(sl2, 3), t21), 1, sl2) == zeta_r_s1(P("(2,1)"), 2)
    col = StandardTableau.row_reading(P("(1,1)"))
    assert central_spectrum(project_r(r_type_rep(hecke3, 2), col), 1, hecke3) == zeta_r_s1(P("(1,1)"), 3)


@given(st.integers(1, 5), st.integers(2, 4))
def test_char_r_at_m1_is_zeta(k, p):
    assert char_r(k, 1, p, "row") == zeta_r_s1(Partition((k,)), p)
    if k <= p:
        assert char_r(k, 1, p, "col") == zeta_r_s1(Partition((1,) * k), p)


@given(st.integers(1, 4), st.integers(2, 4))
def test_sl_zeta_vanishes_at_m1(k, p):
    assert sl_zeta_r(k, 1, p, "row") == ZERO
    if k <= p:
        assert sl_zeta_r(k, 1, p, "col") == ZERO


def test_char_r_shape_guard():
    with pytest.raises(ValueError):
        char_r(3, 1, 2, "col")
    with pytest.raises(ValueError):
        char_r(1, 1, 2, "diag")


@pytest.mark.parametrize("k", [1, 2])
def test_sl_reduced_closed_forms(profile, k):
    p = profile.p
    base = r_type_rep(profile, k)
    for shape, tag in ((Partition((k,)), "row"), (Partition((1,) * k), "col")):
        if tag == "col" and k > p:
            continue
        rep = sl_reduce_r(project_r(base, StandardTableau.row_reading(shape), profile), profile)
        assert rep.algebra_block() == sl_closed_form_r(profile, k, tag)
        assert check_relations(rep, profile).ok
        for m in (1, 2, 3):
            assert central_spectrum(rep, m, profile) == sl_zeta_r(k, m, p, tag)


def test_rank_one_factorization(profile):
    fac = rank_one_factorization(profile)
    assert fac.pairing() == ONE
    assert fac.contracted(1).scale(q_int(profile.p) * qpow(-profile.p)) == profile.C
    scaled = fac.rescaled(q + 2)
    assert scaled.u != fac.u
    assert scaled.outer() == fac.outer() and scaled.pairing() == ONE
    assert scaled.contracted(1) == fac.contracted(1)
    assert scaled.contracted(2) == fac.contracted(2)


def test_sl2_factorization_reproduces_c(sl2):
    fac = rank_one_factorization(sl2)
    assert fac.contracted(1).scale(q_int(2) * qpow(-2)) == QMatrix.diag([qpow(-3), qpow(-1)])


def test_equivalence_report(profile):
    report = check_b_r_equivalence(profile)
    assert report.ok, report.lines()
    assert "Omega from C and Psi" in report.checks
    assert report.checks["antisymmetric subspace has dimension n"]
    if profile.p == 2:
        assert report.checks["u conjugates B-type into R-type"]


def test_indecomposable_complement_and_relation():
    an = indecomposable_example(q, 2, 5)
    assert an.relation_holds and an.submodule_e1 and not an.decomposable
    flat = indecomposable_example(0, 2, 5)
    assert flat.decomposable and flat.relation_holds
    # only c has an off-diagonal entry: t (q y - y/q) = lambda z gives t = z / y
    t = flat.complement[1]
    assert flat.complement[0] == ONE and t * 2 == 5
    w = QMatrix([[-t], [ONE]])
    for mat in flat.matrices.values():
        image = mat @ w
        assert image.rows[0][0] * w.rows[1][0] == image.rows[1][0] * w.rows[0][0]


def _eta(block: QMatrix, n: int, w) -> QMatrix:
    """Scale l_0^1 by w and l_1^0 by 1/w."""
    out = QMatrix([row[:] for row in block.rows], block.row_shape, block.col_shape)
    for r, row in enumerate(out.rows):
        for c, x in enumerate(row):
            pair = (r % n, c % n)
            if pair == (0, 1):
                row[c] = x * w
            elif pair == (1, 0):
                row[c] = x / w
    return out


def test_eta_automorphism_preserves_the_relation(sl2):
    rep = indecomposable_example(q, 3, q * q).rep
    twisted = rep.with_block(_eta(rep.block, 2, q + 1))
    assert check_relations(twisted, sl2).ok
    assert twisted.generator(0, 1) == rep.generator(0, 1).scale(q + 1)
