import pytest

from weylpi.errors import ResourceLimit
from weylpi.evaluation import is_weak_identity, substitute_tuple
from weylpi.fields import Field
from weylpi.free_algebra import NCPoly, gamma, generator_at, st3
from weylpi.identities import (
    ConjectureReport,
    degree_multidegrees,
    eval_vector,
    ideal_span_dimension,
    identity_basis,
    space_dimension,
    two_variable_certificate,
    verify_conjecture,
    words_of_multidegree,
)
from weylpi.linalg import row_reduce_sparse
from weylpi.rewriter import normal_form
from weylpi.weyl import WeylElement

QQ = Field.rationals()
F7 = Field.prime(7)


def test_words_and_dimension():
    assert words_of_multidegree((1, 1)) == [(1, 2), (2, 1)]
    assert space_dimension((1, 1, 1)) == 6
    assert space_dimension((2, 1)) == 3
    assert space_dimension((3,)) == 1
    assert space_dimension((1, 1, 1, 1, 1, 1)) == 720


def _word_rows(polys, delta, field):
    words = words_of_multidegree(delta)
    index = {w: i for i, w in enumerate(words)}
    return [{index[w]: c for w, c in f.terms.items()} for f in polys]


def _span_rank(polys, delta, field):
    rank, _ = row_reduce_sparse(_word_rows(polys, delta, field), field)
    return rank


def test_degree_three_multilinear_space():
    delta = (1, 1, 1)
    basis = identity_basis(delta, QQ)
    assert len(basis) == 3
    expected = [
        gamma(3, QQ),
        generator_at(gamma(3, QQ), (1, 3, 2)),
        st3(QQ),
    ]
    # same span: stacking the two families does not raise the rank
    assert _span_rank(expected, delta, QQ) == 3
    assert _span_rank(basis + expected, delta, QQ) == 3


def test_degree_three_other_multidegrees():
    basis21 = identity_basis((2, 1), QQ)
    assert len(basis21) == 1
    spanning = generator_at(gamma(3, QQ), (1, 2, 1))  # [[x1,x2],x1]
    spanning = NCPoly(QQ, 2, spanning.terms)
    assert _span_rank([spanning], (2, 1), QQ) == 1
    assert _span_rank(basis21 + [spanning], (2, 1), QQ) == 1
    assert identity_basis((3,), QQ) == []


def test_identity_basis_members_are_identities():
    for delta in [(1, 1, 1), (2, 1), (1, 1, 1, 1), (2, 2)]:
        for f in identity_basis(delta, QQ):
            assert is_weak_identity(f)
            assert f.mdeg() == delta


def test_identity_basis_rank_nullity():
    for field in (QQ, F7):
        for delta in [(1, 1), (2, 1), (1, 1, 1), (2, 2), (1, 1, 1, 1)]:
            words = words_of_multidegree(delta)
            rows = [
                eval_vector(NCPoly.monomial(w, field, nvars=len(delta)))
                for w in words
            ]
            rank, _ = row_reduce_sparse(rows, field)
            assert len(identity_basis(delta, field)) == len(words) - rank


def test_ideal_span_dimensions_degree_three():
    assert ideal_span_dimension((1, 1, 1), QQ) == 3
    assert ideal_span_dimension((2, 1), QQ) == 1
    assert ideal_span_dimension((1, 1), QQ) == 0
    assert ideal_span_dimension((3,), QQ) == 0


def test_ideal_contained_in_identities():
    for delta in [(1, 1, 1), (2, 1), (1, 1, 1, 1), (2, 2), (2, 1, 1)]:
        assert ideal_span_dimension(delta, QQ) <= len(identity_basis(delta, QQ))


def test_normal_form_kills_identity_basis():
    for delta in [(1, 1, 1), (2, 1), (2, 2), (1, 1, 1, 1)]:
        assert verify_conjecture(delta, QQ).verdict == "Verified"
        for f in identity_basis(delta, QQ):
            assert all(nf.is_zero() for nf in normal_form(f).values())


@pytest.mark.parametrize("field", [QQ, F7])
def test_verify_degree_three(field):
    r = verify_conjecture((1, 1, 1), field)
    assert r.verdict == "Verified"
    assert r.dim_id == r.dim_I == 3
    assert r.n_reduced == r.eval_rank == 2
    r = verify_conjecture((2, 1), field)
    assert r.verdict == "Verified" and r.dim_id == 1
    r = verify_conjecture((3,), field)
    assert r.verdict == "Verified" and r.dim_id == 0 and r.n_reduced == 0


def test_verify_dimensions_match_basis_route():
    for delta in [(1, 1, 1, 1), (2, 2), (2, 1, 1)]:
        r = verify_conjecture(delta, QQ)
        assert r.verdict == "Verified"
        assert r.dim_id == len(identity_basis(delta, QQ))
        assert r.dim_I == ideal_span_dimension(delta, QQ)


def test_verify_respects_degree_cap():
    with pytest.raises(ResourceLimit):
        verify_conjecture((5, 4), QQ, max_degree=8)
    verify_conjecture((2, 1), QQ, max_degree=3)  # at the cap is fine


def test_two_variable_certificate_values():
    for r in range(1, 5):
        for s in range(1, r + 1):
            table = two_variable_certificate(r, s, QQ)
            assert [i for i, _, _ in table] == list(range(1, s + 1))
            for i, mono, value in table:
                sign = QQ.of((-1) ** i)
                assert value == WeylElement.basis(r - i, s - i, QQ).scale(sign)
                assert substitute_tuple(mono, ("x", "y")) == value
    with pytest.raises(ValueError):
        two_variable_certificate(1, 2, QQ)


def test_report_serialization():
    r = verify_conjecture((1, 1, 1), F7)
    d = r.to_dict()
    assert d["mdeg"] == [1, 1, 1]
    assert d["field"] == "fp:7"
    assert d["verdict"] == "Verified"
    assert d["witness"] is None
    assert isinstance(d["elapsed_ms"], float)
    assert verify_conjecture((1, 1), QQ).to_dict()["field"] == "q"


def test_degree_multidegrees_are_partitions():
    assert degree_multidegrees(3) == [(3,), (2, 1), (1, 1, 1)]
    assert degree_multidegrees(4) == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    assert len(degree_multidegrees(6)) == 11
    for delta in degree_multidegrees(6):
        assert sum(delta) == 6
        assert tuple(sorted(delta, reverse=True)) == delta


def test_dim_I_never_exceeds_dim_id():
    for n in (3, 4):
        for delta in degree_multidegrees(n):
            r = verify_conjecture(delta, QQ)
            assert r.dim_I is None or r.dim_I <= r.dim_id
