"""Tests the identity catalog, its verification and the discovery of the
Hankel determinant evaluations.
"""
import pytest
from fractions import Fraction

catalog_ids = ["1.5", "1.6", "1.7", "2.6", "2.7", "2.8", "2.9", "2.10", "2.11",
               "2.12", "2.13", "2.14", "2.15", "2.16", "2.17", "2.18", "2.19",
               "2.20", "2.21", "2.22", "2.23", "2.24"]

def test_catalog():
    """Tests the catalog contents and exact constants.
    """
    from eisdet.identities import catalog, lookup
    records = catalog()
    assert [r.id for r in records] == catalog_ids
    assert lookup("2.6").constant == Fraction(-691, 432000)
    assert lookup("1.6").constant == Fraction(1, 1728)
    assert lookup("1.7").constant == Fraction(-691, 1728**2*250)
    assert lookup("2.19").spec.label == "minor:1,2,3,4/1,2,3,4"
    assert lookup("2.24").weight == 62
    assert lookup("1.5").kind == "formula"
    for record in records[1:]:
        assert record.spec.weight == record.weight
        assert record.to_dict()["spec"] == record.spec.label

def test_unknown():
    """Tests that unknown labels are rejected.
    """
    from eisdet.identities import lookup, verify
    from eisdet.exceptions import UnknownIdentityError
    with pytest.raises(UnknownIdentityError):
        lookup("2.25")
    with pytest.raises(UnknownIdentityError):
        verify("9.9", 20)

def test_minimum_order():
    """Tests the conclusive order and its enforcement.
    """
    from eisdet.identities import lookup, minimum_order, verify
    from eisdet.exceptions import InsufficientOrderError
    assert minimum_order(lookup("1.6")) == 10
    assert minimum_order(lookup("2.24"), 0) == 6
    with pytest.raises(InsufficientOrderError) as info:
        verify("1.6", 5)
    assert info.value.minimum == 10

def test_classical():
    """Tests the eta-product formula and the 2 x 2 and 3 x 3 Hankel
    determinants at order 64 in both modes.
    """
    from eisdet.identities import verify
    for id in ["1.5", "1.6", "1.7"]:
        report = verify(id, 64, "both")
        assert report.passed
        assert [c.mode for c in report.checks] == ["series", "symbolic"]
        assert report.checks[0].order == 64

@pytest.mark.parametrize("id", catalog_ids[3:])
def test_catalog_short(id):
    """Tests every catalog identity in both modes at a short order.
    """
    from eisdet.identities import verify
    report = verify(id, 20, "both")
    assert report.passed
    assert report.to_dict()["passed"]

@pytest.mark.parametrize("id", catalog_ids)
def test_catalog_full(id):
    """Tests every catalog identity in both modes at order 64.
    """
    from eisdet.identities import verify
    report = verify(id, 64, "both")
    assert report.passed
    assert [c.mode for c in report.checks] == ["series", "symbolic"]
    assert report.checks[0].order == 64

def test_wrong_constant():
    """Tests that an altered constant fails in both modes.
    """
    from eisdet.identities import (lookup, IdentityRecord, _series_check,
                                   _symbolic_check)
    record = lookup("2.6")
    altered = IdentityRecord(record.id, record.spec, record.eisenstein,
                             record.delta, record.constant*2)
    check = _series_check(altered, 20)
    assert not check.passed
    assert check.first_discrepancy == 1
    symbolic = _symbolic_check(altered)
    assert not symbolic.passed
    assert "difference" in symbolic.detail

def test_formula_symbolic():
    """Tests that the symbolic check of the eta-product formula works in the
    E4, E6 ring and rejects a scaled constant.
    """
    from fractions import Fraction
    from eisdet.identities import lookup, IdentityRecord, _symbolic_check
    record = lookup("1.5")
    check = _symbolic_check(record)
    assert check.passed
    assert check.weight == 12
    assert "Serre derivative" in check.detail
    assert "is 0;" in check.detail
    altered = IdentityRecord(record.id, None, 0, 1, Fraction(1, 864),
                             kind="formula")
    check = _symbolic_check(altered)
    assert not check.passed
    assert "coefficients 0, 2" in check.detail

def test_schedule():
    """Tests the predicted family, degree and E4 factor.
    """
    from eisdet.identities import degree_schedule
    assert degree_schedule(1) == ("2.35", 0, 0, True)
    assert degree_schedule(2) == ("2.36", 0, 0, False)
    assert degree_schedule(3) == ("2.37", 0, 0, False)
    assert degree_schedule(4) == ("2.35", 1, 0, True)
    assert degree_schedule(5) == ("2.36", 1, 1, False)
    assert degree_schedule(6) == ("2.37", 1, 2, False)
    assert degree_schedule(7) == ("2.35", 2, 3, True)
    assert degree_schedule(10) == ("2.35", 3, 9, True)
    with pytest.raises(ValueError):
        degree_schedule(0)

def test_discover_small():
    """Tests that discovery reproduces the cataloged 2 x 2, 3 x 3 and 4 x 4
    constants.
    """
    from eisdet.identities import discover, lookup
    from eisdet.ring import MFPoly
    expected = {2: "1.6", 3: "1.7", 4: "2.19"}
    for n, id in expected.items():
        result = discover(n)
        assert result.verified
        assert result.poly == MFPoly.constant(1)
        assert result.identity_constant == lookup(id).constant
        assert result.e4_factor == (n == 4)

    assert discover(2).constant == 1728
    assert discover(3).constant == Fraction(-746496000, 691)

def test_discover_orders():
    """Tests the minimum discovery order.
    """
    from eisdet.identities import discover, discovery_order
    from eisdet.exceptions import InsufficientOrderError
    assert discovery_order(5) == 4 + 2 + 8
    with pytest.raises(InsufficientOrderError):
        discover(5, order=5)

@pytest.mark.parametrize("n,order", [(5, 27), (6, 31)])
def test_discover_degrees(n, order):
    """Tests the degree and full support of the discovered polynomials.
    """
    from eisdet.identities import discover, degree_schedule
    result = discover(n, order)
    family, r, degree, e4 = degree_schedule(n)
    assert result.degree == degree
    assert result.e4_factor == e4
    assert result.full_support
    assert result.missing_monomials == []
    data = result.to_dict()
    assert data["schedule"]["family"] == family
    assert data["verified"]

@pytest.mark.slow
def test_discover_seven():
    """Tests the 7 x 7 Hankel determinant.
    """
    from eisdet.identities import discover
    result = discover(7, 35)
    assert result.e4_factor
    assert result.degree == 3
    assert result.full_support

def test_survey():
    """Tests the reduction of small minors with quotient weight <= 14.
    """
    from eisdet.identities import dimension_one_survey, lookup
    from eisdet.hankel import MinorSpec
    entries = dimension_one_survey(2, 6)
    found = {e.spec: e for e in entries}
    assert all(e.quotient_weight <= 14 for e in entries)

    for e in entries:
        if e.spec.n == 1 and e.quotient_weight != 12:
            assert e.kind == "one-dimensional"
            assert e.constant == 1
        if e.quotient_weight == 2:
            assert e.kind == "zero"
        if e.quotient_weight == 12:
            assert e.kind == "two-dimensional"
            assert e.factor is None

    assert found[MinorSpec([1, 2], [1, 2])].constant == 1728
    H = found[MinorSpec([1, 3], [1, 3])]
    assert H.factor == "E4"
    assert H.constant == 1/lookup("2.6").constant
    assert found[MinorSpec([1, 2], [1, 3])].kind == "zero"
    assert H.to_dict()["constant"] == "-432000/691"

def test_survey_full():
    """Tests the survey over every minor with n <= 5 and indices <= 12.
    """
    from eisdet.identities import dimension_one_survey
    entries = dimension_one_survey(5, 12)
    assert len(entries) == 405
    assert max(e.spec.n for e in entries) == 5
    for e in entries:
        assert e.quotient_weight <= 14
        if e.quotient_weight == 2:
            assert e.kind == "zero"
        elif e.quotient_weight == 12:
            assert e.kind != "one-dimensional"
        else:
            assert e.kind in ("zero", "one-dimensional")
        if e.kind == "one-dimensional":
            assert e.constant != 0

def test_small_minors():
    """Tests the enumeration bound of the survey.
    """
    from eisdet.identities import small_minors
    ones = [s for s in small_minors(1, 12) if s.n == 1]
    assert len(ones) == 21

def test_pattern():
    """Tests Hankel determinants with zeroed entries.
    """
    from eisdet.identities import pattern_determinant
    from eisdet.hankel import parse_pattern
    from eisdet.ring import MFPoly
    zero = pattern_determinant(2, parse_pattern("unless:100"))
    assert zero.valuation is None and zero.poly is None

    full = pattern_determinant(3, parse_pattern("whenever:1000"))
    assert full.valuation == 2
    assert full.poly == MFPoly.constant(Fraction(-746496000, 691))

    diagonal = pattern_determinant(2, parse_pattern("whenever:6"))
    assert diagonal.valuation == 0
    assert diagonal.poly == MFPoly.X()**3
    assert diagonal.to_dict()["pattern"] == "whenever:6"

def test_elliptic_ids():
    """Tests the dispatch of the elliptic-function labels.
    """
    from eisdet.identities import verify_any
    for id in ["3.10", "3.11", "3.13", "1.5:k", "3.8:z2m", "3.9:z2m"]:
        reports = verify_any(id, 30, m=3)
        assert len(reports) == 1
        assert reports[0].passed
    assert verify_any("3.10", 30)[0].id == "3.10"
    printed = verify_any("3.8:printed", 30)[0]
    assert printed.informational and not printed.passed

@pytest.mark.slow
def test_verify_all():
    """Tests the full run: every non-informational report passes and the
    order is fixed.
    """
    from eisdet.identities import verify_all
    from eisdet.reports import all_passed
    reports = verify_all(64, "both")
    ids = [r.id for r in reports]
    assert len(reports) == 44
    assert ids.count("3.8:z2m") == 7
    assert [r.params["m"] for r in reports if r.id == "3.9:z2m"] == list(range(2, 9))
    assert ids[:22] == catalog_ids
    assert ids[22:26] == ["3.10", "3.11", "3.13", "1.5:k"]
    assert all_passed(reports)
    assert all(r.informational for r in reports if r.id.endswith("printed"))
    assert not any(r.passed for r in reports if r.id.endswith("printed"))
