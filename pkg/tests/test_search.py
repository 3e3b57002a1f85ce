import pytest

from sepr.catalog import non_inheritance_example
from sepr.exactnum import CQExt
from sepr.matrix import all_principal_minors, diag, from_rows, identity, ones
from sepr.rules import REAL_SYMMETRIC
from sepr.search import (
    GenSpec,
    check_identities,
    check_inheritance,
    enumerate_candidates,
    identity_suite,
    lattice_size,
    random_hermitian,
    search_witness,
    submatrix_seprs,
)
from sepr.sequence import format_sequence, parse_sequence, sepr_of


def test_domain_membership():
    B = random_hermitian(GenSpec(2, "integer", 1, REAL_SYMMETRIC, seed=7))
    assert B.is_real()
    assert all(z.re.a in (-1, 0, 1) and z.im == 0 for row in B.entries for z in row)
    for t in range(20):
        B = random_hermitian(GenSpec(3, "gaussian", 2, "hermitian", seed=1), t)
        assert all((z.abs2() - 2).sign() <= 0 for row in B.entries for z in row)
        assert all(B[k, k].im == 0 for k in (1, 2, 3))


def test_determinism():
    spec = GenSpec(4, "rational", 3, "hermitian", d=2, seed=99)
    assert [random_hermitian(spec, t) for t in range(5)] == [random_hermitian(spec, t) for t in range(5)]
    assert random_hermitian(spec, 0) != random_hermitian(spec.with_seed(100), 0)


def test_lowrank_is_singular():
    spec = GenSpec(5, "gaussian", 2, "hermitian", structure="lowrank", rank=2, seed=3)
    for t in range(5):
        seq = sepr_of(all_principal_minors(random_hermitian(spec, t)))
        assert seq[2:] == ("N", "N", "N")


def test_bad_spec():
    with pytest.raises(ValueError):
        GenSpec(2, "rational", 0)
    with pytest.raises(ValueError):
        GenSpec(2, "octonion")
    with pytest.raises(ValueError):
        GenSpec(0)


def test_identities_trivial_and_examples():
    assert check_identities(identity(4)).ok
    B = ones(3) - 2 * identity(3)
    rep = check_identities(B)
    assert rep.ok and rep.checked["schur-quotient"] == 3
    assert check_identities(diag(2, -1, 3, 0)).ok


def test_identity_report_catches_a_broken_identity(monkeypatch):
    import sepr.search as s
    real = s.inverse_sepr_predict
    monkeypatch.setattr(s, "inverse_sepr_predict", lambda seq: tuple(reversed(real(seq))))
    rep = check_identities(from_rows([[2, 1, 0], [1, 1, 0], [0, 0, -1]]))
    assert not rep.ok and "inverse-sepr" in rep.failures
    assert rep.to_json()["identities"]["inverse-sepr"]["failed"] == 1


def test_identity_suite_small():
    specs = [GenSpec(n, "gaussian", 2, "hermitian", d=d, seed=4) for n in (2, 3, 4) for d in (0, 2, 3)]
    rep = identity_suite(specs, 30)
    assert rep.ok, rep.to_json()
    assert rep.checked["muir"] > 100


def test_inheritance_examples():
    B = non_inheritance_example()
    rep = check_inheritance(B)
    assert rep["sepr"] == "S*S-S*A+A+" and rep["ok"]
    assert check_inheritance(identity(3))["ok"]
    subs = submatrix_seprs(diag(1, -1, 0), 1)
    assert {s[0] for s in subs.values()} == {"A+", "A-", "N"}
    assert check_inheritance(diag(1, -1, 0))["ok"]


def test_inheritance_detects_planted_violation(monkeypatch):
    import sepr.search as s
    orig = s.submatrix_seprs

    def lying(B, m, minors=None):
        out = orig(B, m, minors)
        return {k: ("A-",) + v[1:] for k, v in out.items()}

    monkeypatch.setattr(s, "submatrix_seprs", lying)
    rep = s.check_inheritance(identity(3))
    assert not rep["ok"] and rep["violations"][0]["statement"] == 2


@pytest.mark.parametrize("n, witnessed, universe", [(1, 3, 3), (2, 13, 21), (3, 65, 147)])
def test_enumeration_counts(n, witnessed, universe):
    rep = enumerate_candidates(n)
    c = rep.counts()
    assert c["attainable-witnessed"] == witnessed and c["universe"] == universe
    assert c["rule-clean-unwitnessed"] == 0
    assert c["attainable-witnessed"] + c["unattainable"] == universe


def test_enumeration_real_mode_and_cap():
    rep = enumerate_candidates(3, REAL_SYMMETRIC)
    assert len(rep.attainable_witnessed) == 64
    assert parse_sequence("NA-N") in rep.unattainable
    with pytest.raises(ValueError):
        enumerate_candidates(7)
    four = enumerate_candidates(4)
    assert four.attainable_witnessed == [] and len(four.rule_clean_unwitnessed) > 0


def test_search_examples():
    spec = GenSpec(2, "integer", 1, REAL_SYMMETRIC, seed=0)
    assert lattice_size(spec) == 27
    B = search_witness("A+N", spec, 27, exhaustive=True)
    assert B is not None and format_sequence(sepr_of(all_principal_minors(B))) == "A+N"
    assert search_witness("A*A+", spec, 27, exhaustive=True) is None
    assert search_witness("A*A+", GenSpec(2, "gaussian", 2, seed=1), 300) is None


def test_search_nan():
    B = search_witness("NA-N", GenSpec(3, "gaussian", 1, "hermitian", seed=2), 20000, exhaustive=True)
    assert B is not None and not B.is_real()
    assert search_witness("NA-N", GenSpec(3, "integer", 1, REAL_SYMMETRIC, seed=2), 729, exhaustive=True) is None


def test_search_length_mismatch():
    with pytest.raises(ValueError):
        search_witness("A+N", GenSpec(3), 10)


def test_non_inheritance_claim_with_sign_flipped_corner():
    """With b11 = +1 instead of -1 the 5x5 example behaves as described.

    The printed matrix has a 4x4 principal submatrix on {1,3,4,5} that keeps
    the S* (see the acceptance suite); flipping b11 is the only single-entry
    change among small Gaussian integers that keeps S*S-S*A+A+ and removes
    every inheriting submatrix.
    """
    rows = [list(r) for r in non_inheritance_example().entries]
    rows[0][0] = CQExt(1)
    B = from_rows(rows)
    assert format_sequence(sepr_of(all_principal_minors(B))) == "S*S-S*A+A+"
    assert all(s[2] != "S*" for s in submatrix_seprs(B, 4).values())
    assert check_inheritance(B)["ok"]
