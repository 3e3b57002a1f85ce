import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sepr.catalog import BASE_MATRICES, non_inheritance_example
from sepr.matrix import all_principal_minors, direct_sum, identity, inverse, negate, ones, rank, zeros, from_rows
from sepr.sequence import (
    SYMBOLS,
    PrSequence,
    SequenceError,
    epr_of,
    format_sequence,
    inverse_sepr_predict,
    neg_sequence,
    negative_sepr,
    parse_epr,
    parse_sequence,
    pr_of,
    sepr_of,
    sequences,
    underlying_epr,
)

from conftest import hermitian_matrices


def S(text):
    return parse_sequence(text)


def seq_of(B):
    return format_sequence(sepr_of(all_principal_minors(B), B.n))


def test_parse_examples():
    assert S("A+NA-") == ("A+", "N", "A-")
    assert S("S*S-N") == ("S*", "S-", "N")
    assert S("A+ N, A−") == ("A+", "N", "A-")
    with pytest.raises(SequenceError) as err:
        S("A%N")
    assert err.value.offset == 1
    for bad in ("", "  ", "B+", "A"):
        with pytest.raises(SequenceError):
            S(bad)


@given(st.lists(st.sampled_from(SYMBOLS), min_size=1, max_size=12))
def test_parse_format_round_trip(symbols):
    assert S(format_sequence(symbols)) == tuple(symbols)


def test_sepr_examples():
    assert seq_of(identity(3)) == "A+A+A+"
    assert seq_of(from_rows([[1, 1], [1, -1]])) == "A*A-"
    assert seq_of(non_inheritance_example()) == "S*S-S*A+A+"
    assert seq_of(zeros(2)) == "NN"


def test_epr_pr_examples():
    t = all_principal_minors(identity(3))
    assert epr_of(t) == tuple("AAA") and str(pr_of(t)) == "0]111"
    t = all_principal_minors(zeros(2))
    assert epr_of(t) == tuple("NN") and str(pr_of(t)) == "1]00"
    assert epr_of(all_principal_minors(direct_sum(ones(1), ones(2)))) == tuple("ASN")
    assert sequences(ones(3) - 2 * identity(3)) == {"pr": "0]101", "epr": "ANA", "sepr": "A-NA+"}
    assert PrSequence(1, (0, 1, 0)).__str__() == "1]010"


def test_incomplete_table():
    t = all_principal_minors(identity(3))
    del t[(1, 3)]
    with pytest.raises(SequenceError):
        sepr_of(t)


def test_underlying_epr():
    assert underlying_epr(S("A*A-")) == tuple("AA")
    assert underlying_epr(S("S*S-S*A+A+")) == tuple("SSSAA")
    assert underlying_epr(S("NN")) == tuple("NN")
    assert parse_epr("A S N") == tuple("ASN")


def test_negation_transforms():
    assert neg_sequence(S("NS-S*A*A+")) == S("NS+S*A*A-")
    assert negative_sepr(S("A+N")) == S("A-N")
    assert negative_sepr(S("A+A+A+")) == S("A-A+A-")
    assert seq_of(negate(ones(2))) == "A-N"


def test_inverse_prediction_examples():
    assert inverse_sepr_predict(S("A+NA-")) == S("NA-A-")
    assert seq_of(inverse(2 * identity(3) - ones(3))) == "NA-A-"
    assert inverse_sepr_predict(S("A+A+A+")) == S("A+A+A+")
    assert inverse_sepr_predict(S("S*S-A+")) == S("S-S*A+")
    with pytest.raises(SequenceError):
        inverse_sepr_predict(S("A+NN"))


@settings(max_examples=80)
@given(hermitian_matrices(max_n=5))
def test_consistency_triangle(B):
    t = all_principal_minors(B)
    sepr, epr, pr = sepr_of(t), epr_of(t), pr_of(t)
    assert underlying_epr(sepr) == epr
    assert all((r == 1) == (e != "N") for r, e in zip(pr.ranks, epr))
    assert pr.r0 == int(any(B[k, k].re.sign() == 0 for k in range(1, B.n + 1)))


@settings(max_examples=80)
@given(hermitian_matrices(max_n=5))
def test_negation_law(B):
    assert sepr_of(all_principal_minors(negate(B))) == negative_sepr(sepr_of(all_principal_minors(B)))


@settings(max_examples=60)
@given(hermitian_matrices(max_n=5))
def test_inverse_law(B):
    seq = sepr_of(all_principal_minors(B))
    if seq[-1] == "N":
        return
    assert sepr_of(all_principal_minors(inverse(B))) == inverse_sepr_predict(seq)


@settings(max_examples=80)
@given(hermitian_matrices(max_n=5))
def test_nn_theorem_and_same_sign_lemma(B):
    seq = sepr_of(all_principal_minors(B))
    for k in range(len(seq) - 1):
        if seq[k] == seq[k + 1] == "N":
            assert set(seq[k:]) == {"N"}
    r = rank(B)
    if r:
        assert seq[r - 1] not in ("A*", "S*")
