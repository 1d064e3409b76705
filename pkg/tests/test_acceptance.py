"""Exit criteria.  A one-line PASS/FAIL per criterion is printed in the
terminal summary (see conftest.py)."""

import itertools
import json
import time
from fractions import Fraction

import pytest

from replistream.audit import AXIOM_IDS, CHECK_IDS, HOLDS, VIOLATED, UniverseBound, run_audit
from replistream.cli import main
from replistream.controls import pareto_flip_table, replication_break_table, three_cycle_table
from replistream.domain import DomainSpec, Ordering, Sequence, concat, enumerate_sequences, singleton
from replistream.evaluators import evaluator_by_name
from replistream.lifting import LiftedComparator

CATALOGUE = ["mean", "sum", "min", "leximin", "discounted_mean:1/2"]

U012 = DomainSpec.from_pairs([("u0", 0), ("u1", 1), ("u2", 2)])

# every domain of size <= 3 we sweep; ties and negative utilities included
SWEEP_DOMAINS = [
    DomainSpec.from_pairs([("a", 0)]),
    DomainSpec.from_pairs([("a", 0), ("b", 1)]),
    DomainSpec.from_pairs([("a", 3), ("b", 3)]),
    DomainSpec.from_pairs([("a", 0), ("b", 1), ("c", 2)]),
    DomainSpec.from_pairs([("a", -5), ("b", 0), ("c", 7)]),
    DomainSpec.from_pairs([("a", 1), ("b", 1), ("c", 2)]),
    DomainSpec.from_pairs([("a", 2), ("b", 2), ("c", 2)]),
    DomainSpec.from_pairs([("a", 0), ("b", 10), ("c", 11)]),
]


def sweep_pairs():
    for d in SWEEP_DOMAINS:
        seqs = list(enumerate_sequences(d, 3))
        yield from itertools.product(seqs, repeat=2)


def lifted(name, strategy="lcm"):
    return LiftedComparator(evaluator_by_name(name), strategy)


@pytest.mark.parametrize("strategy", ["lcm", "product"])
def test_criterion_1_replication_matches_two_by_three(strategy, capsys, tmp_path):
    d = DomainSpec.from_pairs([("a", 1), ("b", 2), ("c", 3)])
    cert = lifted("mean", strategy).certificate(Sequence.parse(d, "a,b"), Sequence.parse(d, "a,b,c"))
    data = cert.to_json()
    assert data["lengths"] == [2, 3]
    assert data["factors"] == [3, 2]
    assert data["common_length"] == 6
    assert data["left_replicated"] == "a,b,a,b,a,b"
    assert data["right_replicated"] == "a,b,c,a,b,c"

    domain_file = tmp_path / "d.json"
    domain_file.write_text(json.dumps(d.to_json()))
    assert main(["compare", "--domain", str(domain_file), "--strategy", strategy,
                 "--format", "json", "a,b", "a,b,c"]) == 0
    assert json.loads(capsys.readouterr().out) == data


def test_criterion_2_mean_full_compliance():
    start = time.perf_counter()
    report = run_audit(lifted("mean"), UniverseBound(U012, 3), workers=1)
    elapsed = time.perf_counter() - start
    assert [c.id for c in report.checks] == list(CHECK_IDS)
    bad = [(c.id, c.status) for c in report.checks if c.status != HOLDS]
    assert bad == []
    assert all(c.witness is None and c.tested > 0 for c in report.checks)
    assert elapsed < 10.0, f"audit took {elapsed:.2f}s"


def test_criterion_3_designed_violations_found():
    bound = UniverseBound(U012, 3)

    r = run_audit(lifted("min"), bound, workers=1)
    assert r.check("A2_2").status == VIOLATED
    w = r.check("A2_2").witness
    assert (w["sigma"], w["sigma_prime"], w["sigma_dprime"]) == ("u0", "u1", "u2")

    lc = lifted("discounted_mean:1/2")
    r = run_audit(lc, bound, workers=1)
    w = r.check("A3").witness
    assert r.check("A3").status == VIOLATED
    assert (w["sigma"], w["sigma_prime"], w["observed"]) == ("u0", "u1", ["Less"])
    s, t = Sequence.parse(U012, w["sigma"]), Sequence.parse(U012, w["sigma_prime"])
    left, right = concat(s, t), concat(t, s)
    assert left.utilities == (0, 1) and right.utilities == (1, 0)
    assert lc.certificate(left, right).scores == (Fraction(1, 3), Fraction(2, 3))

    intended = {
        "pareto_flip": (pareto_flip_table, ["A1_1"]),
        "replication_break": (replication_break_table, ["replication_invariance", "F8_consistency"]),
        "three_cycle": (three_cycle_table, ["sanity_strict_order"]),
    }
    for name, (factory, checks) in intended.items():
        r = run_audit(LiftedComparator(factory(U012)), bound, workers=1)
        for check in checks:
            assert r.check(check).status == VIOLATED, (name, check)
    r = run_audit(LiftedComparator(pareto_flip_table(U012)), bound, ["A1_1"], workers=1)
    assert r.check("A1_1").witness == {"x": "u0", "x_prime": "u1", "observed": ["Greater"]}
    r = run_audit(LiftedComparator(replication_break_table(U012)), bound, ["F8_consistency"], workers=1)
    assert r.check("F8_consistency").witness["property"] == "strategy"
    r = run_audit(LiftedComparator(three_cycle_table(U012)), bound, ["sanity_strict_order"], workers=1)
    assert r.check("sanity_strict_order").witness == {
        "property": "transitive", "sequences": ["u0", "u1", "u2"],
        "observed": ["Less", "Less", "Greater"]}


def test_criterion_4_sum_and_mean_lifts_agree():
    mean, total = lifted("mean"), lifted("sum")
    pairs = mismatches = 0
    for s, t in sweep_pairs():
        pairs += 1
        if mean(s, t) is not total(s, t):
            mismatches += 1
    assert pairs >= 7000
    assert mismatches == 0


@pytest.mark.parametrize("name", CATALOGUE)
def test_criterion_5_strategies_agree(name):
    lcm, product = lifted(name, "lcm"), lifted(name, "product")
    mismatches = sum(lcm(s, t) is not product(s, t) for s, t in sweep_pairs())
    assert mismatches == 0


@pytest.mark.parametrize("name", ["mean", "leximin"])
def test_criterion_6_axioms_imply_facts(name):
    for d in SWEEP_DOMAINS:
        r = run_audit(lifted(name), UniverseBound(d, 3 if len(d) <= 2 else 2), workers=1)
        assert all(r.check(a).status == HOLDS for a in AXIOM_IDS)
        assert r.internal_inconsistencies == []
        assert r.implication == "confirmed"
    r = run_audit(lifted(name), UniverseBound(U012, 3), workers=1)
    assert r.internal_inconsistencies == [] and r.implication == "confirmed"


def test_criterion_7_reports_deterministic_across_workers(capsys, tmp_path):
    domain_file = tmp_path / "d.json"
    domain_file.write_text(json.dumps(U012.to_json()))
    outputs = []
    for workers in ("1", "4"):
        out = tmp_path / f"report{workers}.json"
        main(["audit", "--domain", str(domain_file), "--evaluator", "min", "--max-len", "3",
              "--workers", workers, "--format", "json", "--output", str(out)])
        outputs.append(out.read_bytes())
    assert outputs[0] == outputs[1]
    for name in ["mean", "discounted_mean:1/2"]:
        one = run_audit(lifted(name), UniverseBound(U012, 3), workers=1).dumps()
        many = run_audit(lifted(name), UniverseBound(U012, 3), workers=3).dumps()
        assert one.encode() == many.encode()


def test_criterion_8_exact_arithmetic():
    big = 10**15
    d = DomainSpec.from_pairs([("lo", big), ("hi", big + 1)])
    for name in CATALOGUE:
        assert lifted(name)(singleton(d, "lo"), singleton(d, "hi")) is Ordering.LESS

    # floats collapse both sides here; exact scores must not
    huge = 10**17
    d = DomainSpec.from_pairs([("lo", huge), ("hi", huge + 1), ("z", 0)])
    assert float(huge) == float(huge + 1)
    for name in CATALOGUE:
        assert lifted(name)(singleton(d, "lo"), singleton(d, "hi")) is Ordering.LESS
    s, t = Sequence.parse(d, "lo,lo,hi"), Sequence.parse(d, "lo,lo,lo,lo,z")
    # means (3e17+1)/3 vs 4e17/5: exact order is Greater
    assert lifted("mean")(s, t) is Ordering.GREATER
    u, v = Sequence.parse(d, "hi,lo"), Sequence.parse(d, "lo,lo,lo")
    assert (2 * huge + 1) / 2 == float(huge)  # float means would tie
    assert lifted("mean")(u, v) is Ordering.GREATER
