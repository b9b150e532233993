import copy
import json

import pytest

from shimura_points.abfield import compositum, decompose, quadratic_field
from shimura_points.fieldspec import parse_field_spec
from shimura_points.obstruction import (
    COUNTEREXAMPLE_LABEL,
    DEGREE_ODD,
    IN_S,
    NOT_IN_CLASS_B,
    PRIME_NOT_UNIQUE,
    RESIDUE_DEGREE_EVEN,
    S_UNDEFINED,
    Certificate,
    HasseReport,
    Inconclusive,
    LocalRegistryEntry,
    Proven,
    ProvenRealPlace,
    UndefinedSBranch,
    emptiness_scan,
    hasse_report,
    local_solvability,
    s_membership,
    theorem_check,
    validate_certificate,
    verdict_from_json,
    verdict_to_json,
)
from shimura_points.quaternion import from_discriminant, in_class_b, splits_over

BIQUAD = "Q(sqrt(2),sqrt(-13))"
BIQUAD_MINUS = "Q(sqrt(-2),sqrt(-13))"
L39 = "comp(cycsub(9;8),Q(sqrt(-39)))"
L15 = "comp(cycsub(9;8),Q(sqrt(-15)))"


def check(d, spec, q):
    return theorem_check(from_discriminant(d), parse_field_spec(spec), q, spec)


def test_s_membership_examples():
    s = s_membership(from_discriminant(39), parse_field_spec(BIQUAD), 2)
    assert s.split_case and s.exponent == 4 and s.Nq == 2
    assert s.p_set == (2, 3, 5, 7, 47)
    assert s.escaping_primes == (13,) and not s.in_S

    s = s_membership(from_discriminant(62), parse_field_spec(L39), 3)
    assert not s.split_case and s.exponent == 12
    assert s.escaping_primes == (31,) and not s.in_S

    s = s_membership(from_discriminant(6), parse_field_spec(BIQUAD), 2)
    assert s.in_S and s.escaping_primes == ()


def test_s_membership_undefined_branch():
    # B = 39 splits over the biquadratic field but 3 is unramified there
    with pytest.raises(UndefinedSBranch):
        s_membership(from_discriminant(39), parse_field_spec(BIQUAD), 3)


def test_s_membership_routes_agree():
    for d in (6, 10, 15, 21, 39, 62, 86, 94):
        for spec in (BIQUAD, L39, L15):
            for q in (2, 3, 5):
                try:
                    full = s_membership(from_discriminant(d), parse_field_spec(spec), q)
                except UndefinedSBranch:
                    continue
                fast = s_membership(from_discriminant(d), parse_field_spec(spec), q, full=False)
                assert fast.escaping_primes == full.escaping_primes
                assert fast.in_S == full.in_S


@pytest.mark.parametrize("d, spec, q, witness, efg", [
    (39, BIQUAD, 2, 13, (4, 1, 1)),
    (39, BIQUAD_MINUS, 2, 13, (4, 1, 1)),
    (62, L39, 3, 31, (6, 1, 1)),
    (86, L15, 3, 43, (6, 1, 1)),
])
def test_theorem_check_proven(d, spec, q, witness, efg):
    v = check(d, spec, q)
    assert isinstance(v, Proven)
    c = v.certificate
    assert (c.e, c.f, c.g) == efg and c.witness_p == witness
    assert c.degree % 2 == 0 and c.e % 2 == 0
    assert validate_certificate(c)


def test_theorem_check_inconclusive_lists_all_failures():
    v = check(39, BIQUAD, 7)
    assert isinstance(v, Inconclusive)
    codes = {r.code for r in v.reasons}
    assert decompose(parse_field_spec(BIQUAD), 7).g == 4
    assert codes == {PRIME_NOT_UNIQUE, NOT_IN_CLASS_B, S_UNDEFINED}


def test_theorem_check_odd_degree():
    v = check(6, "cycsub(9;8)", 3)
    assert isinstance(v, Inconclusive)
    assert DEGREE_ODD in {r.code for r in v.reasons}


def test_negative_control_in_s():
    v = check(6, BIQUAD, 2)
    assert isinstance(v, Inconclusive)
    assert IN_S in {r.code for r in v.reasons}


def _reason_holds(B, k, q, code):
    dec = decompose(k, q)
    if code == DEGREE_ODD:
        return k.degree % 2 == 1
    if code == PRIME_NOT_UNIQUE:
        return dec.g != 1
    if code == RESIDUE_DEGREE_EVEN:
        return dec.f % 2 == 0
    if code == NOT_IN_CLASS_B:
        return not in_class_b(B, q).member
    if code == S_UNDEFINED:
        return splits_over(B, k).splits and dec.e % 2 == 1
    if code == IN_S:
        return s_membership(B, k, q, full=False).in_S
    raise AssertionError(code)


@pytest.mark.parametrize("d, spec", [(6, BIQUAD), (6, "Q(sqrt(-1))"), (39, L15), (10, L39)])
def test_every_reason_reproduces(d, spec):
    B, k = from_discriminant(d), parse_field_spec(spec)
    v = emptiness_scan(B, k, 30)
    if isinstance(v, Inconclusive):
        assert v.reasons
        for r in v.reasons:
            assert _reason_holds(B, k, r.q, r.code), r


def test_emptiness_scan():
    B = from_discriminant(39)
    assert isinstance(emptiness_scan(B, quadratic_field(2)), ProvenRealPlace)
    v = emptiness_scan(from_discriminant(62), parse_field_spec(L39), 10)
    assert isinstance(v, Proven) and v.certificate.q == 3
    v = emptiness_scan(from_discriminant(6), quadratic_field(-1), 50)
    assert isinstance(v, Inconclusive)
    assert {r.q for r in v.reasons} == {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}
    with pytest.raises(ValueError):
        emptiness_scan(B, quadratic_field(-1), 1)


def test_scan_picks_minimal_q_and_witness():
    B, k = from_discriminant(62), parse_field_spec(L39)
    v = emptiness_scan(B, k, 100, L39)
    assert isinstance(theorem_check(B, k, 2), Inconclusive)
    c = v.certificate
    assert c.witness_p == min(s_membership(B, k, c.q).escaping_primes)


def _proven_certificate(d=39, spec=BIQUAD, q=2) -> Certificate:
    v = check(d, spec, q)
    assert isinstance(v, Proven)
    return v.certificate


def test_validate_rejects_edits():
    data = _proven_certificate().to_json()
    bad = copy.deepcopy(data)
    bad["witness_p"] = 3
    assert not validate_certificate(bad)
    bad = copy.deepcopy(data)
    bad["g"] = 2
    assert not validate_certificate(bad)
    bad = copy.deepcopy(data)
    bad["split_over_k"] = 1  # same truth value, different JSON
    assert not validate_certificate(bad)


def test_validate_rejects_garbage():
    assert not validate_certificate({"disc": 39})
    data = _proven_certificate().to_json()
    data["field"]["subgroup"] = [1, 2]
    assert not validate_certificate(data)


def test_certificate_json_round_trip():
    c = _proven_certificate(62, L39, 3)
    text = json.dumps(c.to_json())
    assert Certificate.from_json(json.loads(text)) == c


def test_verdict_json_round_trip():
    for v in (check(39, BIQUAD, 2), check(39, BIQUAD, 7),
              emptiness_scan(from_discriminant(6), quadratic_field(2))):
        assert verdict_from_json(json.loads(json.dumps(verdict_to_json(v)))) == v


def test_local_solvability():
    ls = local_solvability(from_discriminant(39), parse_field_spec(BIQUAD))
    assert ls.status == "SolvableEverywhere" and ls.base_spec == "Q(sqrt(-13))"
    ls = local_solvability(from_discriminant(62), parse_field_spec(L39))
    assert ls.base_spec == "Q(sqrt(-39))" and "Table 1" in ls.citation
    assert local_solvability(from_discriminant(39), parse_field_spec(L15)).status == "Unknown"


def test_local_solvability_lifts_to_overfields():
    B = from_discriminant(39)
    base = quadratic_field(-13)
    for t in (2, -2, 5, -7, 11):
        k = compositum(base, quadratic_field(t))
        assert local_solvability(B, k).status == "SolvableEverywhere"
        assert local_solvability(B, compositum(k, quadratic_field(3))).status == "SolvableEverywhere"


def test_registry_entries_need_citation():
    with pytest.raises(ValueError):
        LocalRegistryEntry(39, quadratic_field(-13), "Q(sqrt(-13))", "")


def test_custom_registry():
    reg = (LocalRegistryEntry(6, quadratic_field(-1), "Q(sqrt(-1))", "test fact"),)
    assert local_solvability(from_discriminant(6), quadratic_field(-1), reg).citation == "test fact"


@pytest.mark.parametrize("d, spec", [(39, BIQUAD), (39, BIQUAD_MINUS), (62, L39), (86, L15)])
def test_hasse_report_counterexamples(d, spec):
    rep = hasse_report(from_discriminant(d), parse_field_spec(spec), spec=spec)
    assert rep.counterexample and rep.label == COUNTEREXAMPLE_LABEL
    assert HasseReport.from_json(json.loads(json.dumps(rep.to_json()))) == rep


def test_hasse_report_not_labeled():
    rep = hasse_report(from_discriminant(39), quadratic_field(2))
    assert isinstance(rep.verdict, ProvenRealPlace)
    assert rep.local.status == "Unknown" and not rep.counterexample
    rep = hasse_report(from_discriminant(6), parse_field_spec(BIQUAD), 50)
    assert isinstance(rep.verdict, Inconclusive) and not rep.counterexample
