from itertools import combinations

import pytest

from sepr.catalog import (
    CATALOG,
    attainable_list,
    export_catalog,
    jk_family,
    jk_minor_closed_form,
    jk_predicted,
    verify_catalog,
    witness,
)
from sepr.exactnum import CQExt
from sepr.matrix import all_principal_minors, from_json, from_rows
from sepr.rules import REAL_SYMMETRIC, check_sequence
from sepr.sequence import format_sequence, parse_sequence, sepr_of

i = CQExt(0, 1)


def test_attainable_counts():
    assert [format_sequence(s) for s in attainable_list(1)] == ["A+", "A-", "N"]
    assert len(attainable_list(2)) == 13
    three = attainable_list(3)
    assert len(three) == 65 and parse_sequence("NA-N") in three
    assert three == sorted(three)
    with pytest.raises(ValueError):
        attainable_list(4)


def test_witness_lookup():
    assert witness("A*A-").matrix == from_rows([[1, 1], [1, -1]])
    assert witness("NA-N").matrix == from_rows([[0, i, 1], [-i, 0, 1], [1, 1, 0]])
    assert witness("A*A+") is None
    assert witness("S+S*A-").expression == "(-M[S*S-A+])^-1"
    assert witness("A-S+N").expression == "-(J1 (+) J2)"
    assert witness("A+NA-").expression == "-(J3-2I3)"


def test_verify_catalog_clean():
    rep = verify_catalog()
    assert rep["ok"] and rep["total"] == 81
    assert rep["counts"] == {"1": 3, "2": 13, "3": 65}


def test_only_nan_needs_complex_entries():
    nonreal = [e.key for e in CATALOG if not e.matrix.is_real()]
    assert nonreal == ["NA-N"]
    for e in CATALOG:
        if e.matrix.is_real():
            assert check_sequence(e.label, None, REAL_SYMMETRIC).violations == ()


def test_export_round_trip():
    doc = export_catalog()
    assert len(doc) == 81
    for item in doc:
        B = from_json(item["matrix"])
        assert format_sequence(sepr_of(all_principal_minors(B))) == item["sequence"]


def test_jk_examples():
    M, pred = jk_family(5, 2, "-")
    assert format_sequence(pred) == "A+NA-A-A-"
    # closed form (-3)^(q-1)(q-3) for q = 1..5 gives -2, 3, 0, -27, 162
    assert format_sequence(jk_predicted(5, 3, "+")) == "A-A+NA-A+"
    M, pred = jk_family(4, 2, "+")
    assert sepr_of(all_principal_minors(M)) == pred
    with pytest.raises(ValueError):
        jk_family(4, 3, "+")
    with pytest.raises(ValueError):
        jk_family(3, 1, "-")
    with pytest.raises(ValueError):
        jk_family(5, 2, "*")


@pytest.mark.parametrize("n", range(4, 8))
def test_jk_closed_forms(n):
    for k in range(2, n - 1):
        for sign in "+-":
            M, pred = jk_family(n, k, sign)
            t = all_principal_minors(M)
            assert sepr_of(t) == pred
            for q in range(1, n + 1):
                assert {t[a] for a in combinations(range(1, n + 1), q)} == {jk_minor_closed_form(k, q, sign)}
            assert check_sequence(pred, n, REAL_SYMMETRIC).violations == ()
