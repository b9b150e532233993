"""Exit criteria. Each test records one PASS/FAIL line, printed in the pytest summary."""
import copy
import math
import random
import time

import pytest

from oracles import companion_trace
from shimura_points.abfield import decompose, quadratic_field
from shimura_points.arith import hilbert, is_squarefree, kronecker, relevant_places
from shimura_points.cli import run_table1
from shimura_points.fieldspec import parse_field_spec
from shimura_points.obstruction import (
    IN_S,
    Inconclusive,
    Proven,
    ProvenRealPlace,
    emptiness_scan,
    hasse_report,
    s_membership,
    theorem_check,
    validate_certificate,
)
from shimura_points.quaternion import (
    QuaternionAlgebra,
    from_discriminant,
    from_symbol,
    in_class_b,
    is_indefinite_discriminant,
    splits_over,
)
from shimura_points.table1_data import TABLE1
from shimura_points.tracesets import d_set, power_trace, trace_set

RESULTS: list[str] = []

BIQUAD = "Q(sqrt(2),sqrt(-13))"
BIQUAD_MINUS = "Q(sqrt(-2),sqrt(-13))"
L39 = "comp(cycsub(9;8),Q(sqrt(-39)))"
L15 = "comp(cycsub(9;8),Q(sqrt(-15)))"


@pytest.fixture
def record(request):
    name = request.node.name
    state = {"detail": ""}
    yield state
    failed = request.node.rep_call.failed if hasattr(request.node, "rep_call") else True
    RESULTS.append(f"{'FAIL' if failed else 'PASS'} {name}: {state['detail']}")


def _proven(d, spec, q):
    v = theorem_check(from_discriminant(d), parse_field_spec(spec), q, spec)
    assert isinstance(v, Proven), v
    return v.certificate


def test_criterion_1_table1(record):
    trace_set.cache_clear()
    d_set.cache_clear()
    start = time.perf_counter()
    rep = run_table1()
    elapsed = time.perf_counter() - start
    assert sorted(TABLE1) == [(N, e) for N in (2, 3) for e in range(2, 17, 2)]
    assert rep.ok, rep.result["diffs"]
    assert elapsed < 5.0
    record["detail"] = f"{rep.messages[0]} in {elapsed:.2f}s"


@pytest.mark.parametrize("spec", [BIQUAD, BIQUAD_MINUS])
def test_criterion_2_biquadratic_pair(record, spec):
    B, k = from_discriminant(39), parse_field_spec(spec)
    assert splits_over(B, k).splits
    c = _proven(39, spec, 2)
    assert (c.e, c.f, c.g) == (4, 1, 1)
    assert in_class_b(B, 2).witnesses == ((1, 13), (2, 3))
    assert c.class_b == ((1, 13), (2, 3))
    assert c.p_set == (2, 3, 5, 7, 47)
    assert c.witness_p == 13 and 13 not in c.p_set
    record["detail"] = f"d=39, k={spec}: q=2, (e,f,g)=(4,1,1), witness 13"


@pytest.mark.parametrize("d, spec, symbol, witness", [
    (62, L39, (62, 13), 31),
    (86, L15, (86, 5), 43),
])
def test_criterion_3_sextic_pairs(record, d, spec, symbol, witness):
    alg = from_symbol(*symbol)
    assert isinstance(alg, QuaternionAlgebra) and alg.discriminant == d
    B, k = from_discriminant(d), parse_field_spec(spec)
    dec = decompose(k, 2)
    assert (dec.e, dec.f, dec.g) == (1, 3, 2)
    assert not splits_over(B, k).splits
    c = _proven(d, spec, 3)
    assert (c.e, c.f) == (6, 1)
    assert c.witness_p == witness and witness not in c.p_set
    assert c.p_set == (2, 3, 5, 7, 11, 17, 19, 23, 37, 47, 71, 73, 97, 433, 577,
                       1009, 1151, 2087)
    for dd, ss in ((39, BIQUAD), (39, BIQUAD_MINUS), (62, L39), (86, L15)):
        rep = hasse_report(from_discriminant(dd), parse_field_spec(ss), spec=ss)
        assert rep.counterexample, (dd, ss)
        assert rep.local.citation
    record["detail"] = f"d={d}: symbol ok, (1,3,2) at 2, non-split, q=3, witness {witness}; 4/4 labeled"


def test_criterion_4_hilbert_reciprocity(record):
    rng = random.Random(20261019)
    start = time.perf_counter()
    failures = 0
    for _ in range(1000):
        a = rng.randint(-10**6, 10**6) or 1
        b = rng.randint(-10**6, 10**6) or 1
        prod = 1
        for v in relevant_places(a, b):
            prod *= hilbert(a, b, v)
        failures += prod != 1
    elapsed = time.perf_counter() - start
    assert failures == 0
    assert elapsed < 2.0
    record["detail"] = f"1000 pairs, 0 failures, {elapsed:.2f}s"


def test_criterion_5_trace_recurrence(record):
    mismatches = checked = 0
    for N in range(2, 13):
        bound = math.isqrt(4 * N)
        for e in range(1, 17):
            for s in range(-bound, bound + 1):
                checked += 1
                mismatches += power_trace(s, N, e) != companion_trace(s, N, e)
    assert mismatches == 0
    record["detail"] = f"{checked} (N,e,s) triples, 0 mismatches"


def test_criterion_6_quadratic_decomposition(record):
    rng = random.Random(6)
    pool = [d for d in range(-200, 201) if d not in (0, 1) and is_squarefree(d)]
    primes = [p for p in range(2, 100) if all(p % r for r in range(2, p))]
    mismatches = calls = 0
    for d in rng.sample(pool, 200):
        k = quadratic_field(d)
        disc = d if d % 4 == 1 else 4 * d
        for p in primes:
            if (2 * d) % p == 0:
                continue
            dec = decompose(k, p)
            calls += 1
            assert dec.e * dec.f * dec.g == k.degree
            chi = kronecker(disc, p)
            expected = (1, 1, 2) if chi == 1 else (1, 2, 1)
            mismatches += (dec.e, dec.f, dec.g) != expected
        for p in primes:
            dec = decompose(k, p)
            calls += 1
            assert dec.e * dec.f * dec.g == k.degree
            mismatches += (dec.e == 2) != (disc % p == 0)
    assert mismatches == 0
    record["detail"] = f"200 fields, {calls} decompositions, 0 mismatches"


def _mutations(data):
    """Twenty single-field edits of a certificate."""
    def edit(path, fn):
        out = copy.deepcopy(data)
        node = out
        for key in path[:-1]:
            node = node[key]
        node[path[-1]] = fn(node[path[-1]])
        return out

    return [
        edit(["disc"], lambda x: 6),
        edit(["field", "spec"], lambda x: "Q(sqrt(-13))"),
        edit(["field", "modulus"], lambda x: x * 2),
        edit(["field", "subgroup"], lambda x: x[:-1]),
        edit(["field", "degree"], lambda x: x + 2),
        edit(["q"], lambda x: 5),
        edit(["e"], lambda x: x + 2),
        edit(["f"], lambda x: x + 2),
        edit(["g"], lambda x: 2),
        edit(["Nq"], lambda x: x * x),
        edit(["exponent"], lambda x: x + 2),
        edit(["split_over_k"], lambda x: not x),
        edit(["classB", "q_fields"], lambda x: [{**x[0], "witness_p": 7}] + x[1:]),
        edit(["classB", "q_fields"], lambda x: [{**x[0], "t": 11}] + x[1:]),
        edit(["p_set"], lambda x: x + [101]),
        edit(["p_set"], lambda x: x[1:]),
        edit(["witness_p"], lambda x: 3),
        edit(["verdict"], lambda x: "Inconclusive"),
        edit(["citations"], lambda x: []),
        edit(["version"], lambda x: "9.9.9"),
    ]


def test_criterion_7_certificate_tampering(record):
    certs = [_proven(39, BIQUAD, 2), _proven(39, BIQUAD_MINUS, 2),
             _proven(62, L39, 3), _proven(86, L15, 3)]
    rejected = 0
    for c in certs:
        assert validate_certificate(c)
        data = c.to_json()
        mutants = _mutations(data)
        assert len(mutants) == 20 and all(m != data for m in mutants)
        for m in mutants:
            assert not validate_certificate(m), m
            rejected += 1
    record["detail"] = f"4 certificates valid, {rejected}/80 mutations rejected"


def test_criterion_8_negative_controls(record):
    B, k = from_discriminant(6), parse_field_spec(BIQUAD)
    assert s_membership(B, k, 2).in_S
    v = theorem_check(B, k, 2, BIQUAD)
    assert isinstance(v, Inconclusive)
    assert IN_S in {r.code for r in v.reasons}
    discs = [d for d in range(6, 300) if is_indefinite_discriminant(d)]
    real_fields = ["Q(sqrt(2))", "Q(sqrt(5))", "cycsub(9;8)", "Q(sqrt(3),sqrt(7))"]
    for spec in real_fields:
        k = parse_field_spec(spec)
        for d in discs:
            assert isinstance(emptiness_scan(from_discriminant(d), k), ProvenRealPlace)
    record["detail"] = (f"d=6 in S and Inconclusive(in_S); {len(real_fields)} real fields x "
                        f"{len(discs)} discriminants ProvenRealPlace")
