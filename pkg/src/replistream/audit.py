"""Bounded exhaustive audit of a lifted comparator against the axiom system.

Every check enumerates its instances over the universe of all sequences of
length ``1..max_len``; sequences formed along the way (concatenations,
replications) may reach ``closure_len`` positions.  A violated check
carries the canonically first failing instance as a replayable witness.

Canonical instance order: instances whose sequences are pairwise distinct
come first, then degenerate ones (a sequence repeated within the instance);
within each group instances are ordered by the universe indices of their
components, the universe being ordered by length and then lexicographically
by element index.  The order is a property of the instance set alone, so
reports do not depend on how the work was split across workers.
"""

from __future__ import annotations

import json
import logging
import math
import os
import pickle
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

from .domain import (DomainSpec, InputError, Ordering, Sequence, concat, enumerate_sequences,
                     pointwise_leq, pointwise_ll, pointwise_lt, repeat, singleton, transpose)
from .lifting import ComparatorError, LiftedComparator, replication_violation, replication_witness

log = logging.getLogger(__name__)

LESS, EQUIV, GREATER, INCOMP = (Ordering.LESS, Ordering.EQUIVALENT,
                                Ordering.GREATER, Ordering.INCOMPARABLE)

CHECK_IDS = (
    "A1_1", "A1_2", "A2_1", "A2_2", "A2_3", "A3",
    "F4", "F5", "F6", "F7_1", "F7_2", "F7_3", "F8_consistency",
    "sanity_equivalence", "sanity_strict_order", "sanity_congruence_converse",
    "replication_invariance",
)
AXIOM_IDS = CHECK_IDS[:6]
FACT_IDS = ("F4", "F5", "F6", "F7_1", "F7_2", "F7_3")

CLAUSES = {
    "A1_1": "x < x' implies {x} < {x'}",
    "A1_2": "x = x' implies {x} ~ {x'}",
    "A2_1": "s.s ~ s",
    "A2_2": "s' < s'' implies s.s' < s.s''",
    "A2_3": "s' ~ s'' implies s.s' ~ s.s''",
    "A3": "s.s' ~ s'.s",
    "F4": "s ~ s' implies s ~ s.s'",
    "F5": "s < s' implies s < s.s'",
    "F6": "swapping two positions gives an equivalent sequence",
    "F7_1": "pointwise <= implies weakly below",
    "F7_2": "pointwise < (one strict) implies strictly below",
    "F7_3": "pointwise << (all strict) implies strictly below",
    "F8_consistency": "lift agrees with base on equal lengths, strategies agree, totality kept",
    "sanity_equivalence": "plumbing: ~ reflexive, symmetric, transitive",
    "sanity_strict_order": "plumbing: < irreflexive, asymmetric, transitive",
    "sanity_congruence_converse": "plumbing: < and ~ compose to <, converse consistency",
    "replication_invariance": "plumbing: outcome constant under joint replication",
}

# checks that concatenate two universe sequences
_NEEDS_DOUBLE = {"A2_1", "A2_2", "A2_3", "A3", "F4", "F5"}

HOLDS = "holds_on_universe"
VIOLATED = "violated"
SKIPPED = "skipped"


@dataclass(frozen=True)
class UniverseBound:
    domain: DomainSpec
    max_len: int = 3
    closure_len: Optional[int] = None

    def __post_init__(self):
        if isinstance(self.max_len, bool) or not isinstance(self.max_len, int) or self.max_len < 1:
            raise InputError(f"max_len must be a positive integer, got {self.max_len!r}")
        if self.closure_len is None:
            object.__setattr__(self, "closure_len", 4 * self.max_len)
        if not isinstance(self.closure_len, int) or self.closure_len < self.max_len:
            raise InputError(f"closure_len must be an integer >= max_len={self.max_len}, "
                             f"got {self.closure_len!r}")

    def to_json(self) -> dict:
        return {"domain_size": len(self.domain), "max_len": self.max_len,
                "closure_len": self.closure_len}


@dataclass
class CheckResult:
    id: str
    status: str
    tested: int = 0
    skipped: int = 0
    witness: Optional[dict] = None
    reason: Optional[str] = None
    seconds: float = 0.0

    def to_json(self, timing: bool = False) -> dict:
        data = {"id": self.id, "clause": CLAUSES[self.id], "status": self.status,
                "tested": self.tested, "skipped": self.skipped, "witness": self.witness}
        if self.reason is not None:
            data["reason"] = self.reason
        if timing:
            data["seconds"] = round(self.seconds, 6)
        return data


@dataclass
class AuditReport:
    comparator: str
    strategy: str
    bound: UniverseBound
    checks: list[CheckResult] = field(default_factory=list)
    implication: str = "not_applicable"
    internal_inconsistencies: list[dict] = field(default_factory=list)
    timing: bool = False

    @property
    def violated(self) -> bool:
        return any(c.status == VIOLATED for c in self.checks) or bool(self.internal_inconsistencies)

    def check(self, check_id: str) -> CheckResult:
        for c in self.checks:
            if c.id == check_id:
                return c
        raise KeyError(check_id)

    def to_json(self) -> dict:
        return {
            "comparator": self.comparator,
            "strategy": self.strategy,
            "bound": self.bound.to_json(),
            "checks": [c.to_json(self.timing) for c in self.checks],
            "implication": self.implication,
            "internal_inconsistencies": self.internal_inconsistencies,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, ensure_ascii=False) + "\n"

    def render_text(self) -> str:
        b = self.bound
        lines = [f"audit of {self.comparator} (strategy {self.strategy}), domain size "
                 f"{len(b.domain)}, max_len {b.max_len}, closure_len {b.closure_len}", ""]
        width = max([len(c.id) for c in self.checks] + [5])
        header = f"{'check':<{width}}  {'status':<17}  {'tested':>8}  {'skipped':>7}"
        if self.timing:
            header += f"  {'seconds':>8}"
        lines += [header, "-" * len(header)]
        for c in self.checks:
            row = f"{c.id:<{width}}  {c.status:<17}  {c.tested:>8}  {c.skipped:>7}"
            if self.timing:
                row += f"  {c.seconds:>8.3f}"
            lines.append(row)
        for c in self.checks:
            if c.witness is not None:
                lines.append("")
                lines.append(f"{c.id} witness: " + format_witness(c.witness))
            elif c.reason is not None and c.status == SKIPPED:
                lines.append("")
                lines.append(f"{c.id} skipped: {c.reason}")
        lines.append("")
        lines.append(f"implication (axioms hold => facts hold): {self.implication}")
        for entry in self.internal_inconsistencies:
            lines.append(f"  internal inconsistency in {entry['check']}: " + format_witness(entry["witness"]))
        return "\n".join(lines) + "\n"


def format_witness(w: dict) -> str:
    parts = []
    for key, value in w.items():
        if isinstance(value, list):
            value = "[" + ", ".join(str(v) for v in value) + "]"
        parts.append(f"{key}={value}")
    return " ".join(parts)


class _Context:
    """Per-process evaluation state: universe, indices and memoised lifts."""

    def __init__(self, lifted: LiftedComparator, bound: UniverseBound):
        self.lifted = lifted
        self.bound = bound
        self._setup()

    def _setup(self):
        self.universe = list(enumerate_sequences(self.bound.domain, self.bound.max_len))
        self.index = {s.items: i for i, s in enumerate(self.universe)}
        self.by_length: dict[int, list[int]] = {}
        for i, s in enumerate(self.universe):
            self.by_length.setdefault(len(s), []).append(i)
        self._cache: dict = {}
        self._matrix = None
        self.first_error: Optional[str] = None

    def __getstate__(self):
        return {"lifted": self.lifted, "bound": self.bound}

    def __setstate__(self, state):
        self.lifted = state["lifted"]
        self.bound = state["bound"]
        self._setup()

    def lift(self, s: Sequence, t: Sequence, strategy: Optional[str] = None) -> Optional[Ordering]:
        """Lifted comparison, or ``None`` if the comparator refused the pair."""
        key = (s.items, t.items, strategy)
        try:
            return self._cache[key]
        except KeyError:
            pass
        cmp = self.lifted if strategy is None else self.lifted.with_strategy(strategy)
        try:
            result = cmp(s, t)
        except ComparatorError as exc:
            result = None
            if self.first_error is None:
                self.first_error = str(exc)
        self._cache[key] = result
        return result

    def base(self, s: Sequence, t: Sequence) -> Optional[Ordering]:
        try:
            return self.lifted.base.compare_equal(s, t)
        except ComparatorError as exc:
            if self.first_error is None:
                self.first_error = str(exc)
            return None

    @property
    def matrix(self):
        if self._matrix is None:
            U = self.universe
            self._matrix = [[self.lift(s, t) for t in U] for s in U]
        return self._matrix

    def lit(self, i: int) -> str:
        return self.universe[i].literal()


class _Partial:
    """Result of one work item: counts plus the best witness found."""

    __slots__ = ("tested", "skipped", "key", "witness", "error", "seconds")

    def __init__(self):
        self.tested = 0
        self.skipped = 0
        self.key = None
        self.witness = None
        self.error = None
        self.seconds = 0.0

    def offer(self, key, make_witness):
        if self.key is None or key < self.key:
            self.key = key
            self.witness = make_witness()

    def merge(self, other: "_Partial") -> None:
        self.tested += other.tested
        self.skipped += other.skipped
        self.seconds += other.seconds
        if other.key is not None and (self.key is None or other.key < self.key):
            self.key, self.witness = other.key, other.witness
        if self.error is None:
            self.error = other.error


def _degenerate(*parts) -> bool:
    return len(set(parts)) < len(parts)


def _values(*orderings) -> list[str]:
    return [o.value for o in orderings]


# -- individual checks -----------------------------------------------------
# Each takes the context, a range of outer indices and a fresh _Partial.

def _outer_size(ctx: _Context, check_id: str) -> int:
    if check_id in ("A1_1", "A1_2"):
        return len(ctx.bound.domain)
    return len(ctx.universe)


def _singletons(ctx, outer, p, want_less: bool):
    dom = ctx.bound.domain
    for x in outer:
        for y in range(len(dom)):
            p.tested += 1
            rel = dom.compare_elements(x, y)
            if want_less and rel is not LESS:
                continue
            if not want_less and rel is not EQUIV:
                continue
            got = ctx.lift(singleton(dom, x), singleton(dom, y))
            if got is None:
                p.tested -= 1
                p.skipped += 1
                continue
            expected = LESS if want_less else EQUIV
            if got is not expected:
                p.offer((x == y, x, y), lambda: {"x": dom.labels[x], "x_prime": dom.labels[y],
                                                 "observed": _values(got)})


def _check_a1_1(ctx, outer, p):
    _singletons(ctx, outer, p, True)


def _check_a1_2(ctx, outer, p):
    _singletons(ctx, outer, p, False)


def _check_a2_1(ctx, outer, p):
    U = ctx.universe
    for i in outer:
        s = U[i]
        got = ctx.lift(concat(s, s), s)
        if got is None:
            p.skipped += 1
            continue
        p.tested += 1
        if got is not EQUIV:
            p.offer((False, i), lambda: {"sigma": s.literal(), "observed": _values(got)})


def _check_concat(ctx, outer, p, premise_wanted: Ordering):
    U, M = ctx.universe, ctx.matrix
    for i in outer:
        s = U[i]
        for length, idxs in ctx.by_length.items():
            for j in idxs:
                for k in idxs:
                    premise = M[j][k]
                    if premise is None:
                        p.skipped += 1
                        continue
                    if premise is not premise_wanted:
                        p.tested += 1
                        continue
                    got = ctx.lift(concat(s, U[j]), concat(s, U[k]))
                    if got is None:
                        p.skipped += 1
                        continue
                    p.tested += 1
                    if got is not premise_wanted:
                        p.offer((_degenerate(i, j, k), i, j, k),
                                lambda: {"sigma": s.literal(), "sigma_prime": U[j].literal(),
                                         "sigma_dprime": U[k].literal(),
                                         "observed": _values(premise, got)})


def _check_a2_2(ctx, outer, p):
    _check_concat(ctx, outer, p, LESS)


def _check_a2_3(ctx, outer, p):
    _check_concat(ctx, outer, p, EQUIV)


def _check_a3(ctx, outer, p):
    U = ctx.universe
    for i in outer:
        s = U[i]
        for j, t in enumerate(U):
            got = ctx.lift(concat(s, t), concat(t, s))
            if got is None:
                p.skipped += 1
                continue
            p.tested += 1
            if got is not EQUIV:
                p.offer((i == j, i, j), lambda: {"sigma": s.literal(), "sigma_prime": t.literal(),
                                                 "observed": _values(got)})


def _check_extension(ctx, outer, p, premise_wanted: Ordering):
    U, M = ctx.universe, ctx.matrix
    for i in outer:
        s = U[i]
        for j, t in enumerate(U):
            premise = M[i][j]
            if premise is None:
                p.skipped += 1
                continue
            if premise is not premise_wanted:
                p.tested += 1
                continue
            got = ctx.lift(s, concat(s, t))
            if got is None:
                p.skipped += 1
                continue
            p.tested += 1
            if got is not premise_wanted:
                p.offer((i == j, i, j), lambda: {"sigma": s.literal(), "sigma_prime": t.literal(),
                                                 "observed": _values(premise, got)})


def _check_f4(ctx, outer, p):
    _check_extension(ctx, outer, p, EQUIV)


def _check_f5(ctx, outer, p):
    _check_extension(ctx, outer, p, LESS)


def _check_f6(ctx, outer, p):
    U = ctx.universe
    for i in outer:
        s = U[i]
        n = len(s)
        for a in range(1, n + 1):
            for b in range(a + 1, n + 1):
                t = transpose(s, a, b)
                got = ctx.lift(s, t)
                if got is None:
                    p.skipped += 1
                    continue
                p.tested += 1
                if got is not EQUIV:
                    p.offer((s == t, i, a, b),
                            lambda: {"sigma": s.literal(), "i": a, "j": b,
                                     "sigma_prime": t.literal(), "observed": _values(got)})


def _check_pareto(ctx, outer, p, hypothesis, allowed):
    U, M = ctx.universe, ctx.matrix
    for i in outer:
        s = U[i]
        for j in ctx.by_length[len(s)]:
            t = U[j]
            p.tested += 1
            if not hypothesis(s, t):
                continue
            got = M[i][j]
            if got is None:
                p.tested -= 1
                p.skipped += 1
                continue
            if got not in allowed:
                p.offer((i == j, i, j), lambda: {"sigma": s.literal(), "sigma_prime": t.literal(),
                                                 "observed": _values(got)})


def _check_f7_1(ctx, outer, p):
    _check_pareto(ctx, outer, p, pointwise_leq, (LESS, EQUIV))


def _check_f7_2(ctx, outer, p):
    _check_pareto(ctx, outer, p, pointwise_lt, (LESS,))


def _check_f7_3(ctx, outer, p):
    _check_pareto(ctx, outer, p, pointwise_ll, (LESS,))


def _base_total(ctx) -> bool:
    U = ctx.universe
    for idxs in ctx.by_length.values():
        for j in idxs:
            for k in idxs:
                if ctx.base(U[j], U[k]) is INCOMP:
                    return False
    return True


def _check_f8(ctx, outer, p):
    U, M = ctx.universe, ctx.matrix
    total = _base_total(ctx)
    for i in outer:
        s = U[i]
        for j, t in enumerate(U):
            lifted = M[i][j]
            product = ctx.lift(s, t, "product")
            if lifted is None or product is None:
                p.skipped += 1
                continue
            p.tested += 1

            def fail(rank, prop, observed):
                p.offer((i == j, i, j, rank),
                        lambda: {"property": prop, "sigma": s.literal(), "sigma_prime": t.literal(),
                                 "observed": _values(*observed)})

            if len(s) == len(t):
                base = ctx.base(s, t)
                if base is not None and base is not lifted:
                    fail(0, "base", (base, lifted))
            if lifted is not product:
                fail(1, "strategy", (lifted, product))
            if total and lifted is INCOMP:
                fail(2, "totality", (lifted,))


def _sanity(ctx, outer, p, pair_props, triple_props):
    """Run pair and triple properties over the lifted relation matrix.

    ``pair_props``: (name, rank, predicate(a_b, b_a)) returning False on failure.
    ``triple_props``: (name, rank, predicate(a_b, b_c, a_c)).
    """
    U, M = ctx.universe, ctx.matrix
    n = len(U)
    for i in outer:
        row_i = M[i]
        for j in range(n):
            ij, ji = row_i[j], M[j][i]
            if ij is None or ji is None:
                p.skipped += 1
                continue
            for name, rank, pred in pair_props:
                p.tested += 1
                if not pred(i == j, ij, ji):
                    p.offer((i == j, i, j, -1, rank),
                            lambda: {"property": name, "sequences": [U[i].literal(), U[j].literal()],
                                     "observed": _values(ij, ji)})
            if not triple_props:
                continue
            row_j = M[j]
            for k in range(n):
                jk, ik = row_j[k], row_i[k]
                if jk is None or ik is None:
                    p.skipped += 1
                    continue
                for name, rank, pred in triple_props:
                    p.tested += 1
                    if not pred(ij, jk, ik):
                        p.offer((_degenerate(i, j, k), i, j, k, rank),
                                lambda: {"property": name,
                                         "sequences": [U[i].literal(), U[j].literal(), U[k].literal()],
                                         "observed": _values(ij, jk, ik)})


def _implies(premise: bool, conclusion: bool) -> bool:
    return not premise or conclusion


_EQUIVALENCE_PAIRS = (
    ("reflexive", 0, lambda same, ab, ba: not same or ab is EQUIV),
    ("symmetric", 1, lambda same, ab, ba: _implies(ab is EQUIV, ba is EQUIV)),
)
_EQUIVALENCE_TRIPLES = (
    ("transitive", 2, lambda ab, bc, ac: _implies(ab is EQUIV and bc is EQUIV, ac is EQUIV)),
)
_STRICT_PAIRS = (
    ("irreflexive", 0, lambda same, ab, ba: not same or ab is not LESS),
    ("asymmetric", 1, lambda same, ab, ba: _implies(ab is LESS, ba is not LESS)),
)
_STRICT_TRIPLES = (
    ("transitive", 2, lambda ab, bc, ac: _implies(ab is LESS and bc is LESS, ac is LESS)),
)
_CONGRUENCE_PAIRS = (
    ("converse", 0, lambda same, ab, ba: ba is ab.converse()),
)
_CONGRUENCE_TRIPLES = (
    ("strict_then_equivalent", 1, lambda ab, bc, ac: _implies(ab is LESS and bc is EQUIV, ac is LESS)),
    ("equivalent_then_strict", 2, lambda ab, bc, ac: _implies(ab is EQUIV and bc is LESS, ac is LESS)),
)


def _check_sanity_equivalence(ctx, outer, p):
    _sanity(ctx, outer, p, _EQUIVALENCE_PAIRS, _EQUIVALENCE_TRIPLES)


def _check_sanity_strict(ctx, outer, p):
    _sanity(ctx, outer, p, _STRICT_PAIRS, _STRICT_TRIPLES)


def _check_sanity_congruence(ctx, outer, p):
    _sanity(ctx, outer, p, _CONGRUENCE_PAIRS, _CONGRUENCE_TRIPLES)


def _check_replication(ctx, outer, p):
    U = ctx.universe
    base = ctx.lifted.base
    for i in outer:
        s = U[i]
        for j, t in enumerate(U):
            try:
                outcomes, violated = replication_violation(base, s, t, ctx.bound.closure_len)
            except ComparatorError as exc:
                if ctx.first_error is None:
                    ctx.first_error = str(exc)
                p.skipped += 1
                continue
            if len(outcomes) < 2:
                p.skipped += 1
                continue
            p.tested += 1
            if violated:
                p.offer((i == j, i, j), lambda: replication_witness(s, t, outcomes))


_CHECKS = {
    "A1_1": _check_a1_1,
    "A1_2": _check_a1_2,
    "A2_1": _check_a2_1,
    "A2_2": _check_a2_2,
    "A2_3": _check_a2_3,
    "A3": _check_a3,
    "F4": _check_f4,
    "F5": _check_f5,
    "F6": _check_f6,
    "F7_1": _check_f7_1,
    "F7_2": _check_f7_2,
    "F7_3": _check_f7_3,
    "F8_consistency": _check_f8,
    "sanity_equivalence": _check_sanity_equivalence,
    "sanity_strict_order": _check_sanity_strict,
    "sanity_congruence_converse": _check_sanity_congruence,
    "replication_invariance": _check_replication,
}


# -- driver ----------------------------------------------------------------

_WORKER_CTX: Optional[_Context] = None


def _init_worker(ctx: _Context) -> None:
    global _WORKER_CTX
    _WORKER_CTX = ctx


def _run_item(ctx: _Context, item) -> _Partial:
    check_id, start, stop = item
    p = _Partial()
    t0 = time.perf_counter()
    ctx.first_error = None
    _CHECKS[check_id](ctx, range(start, stop), p)
    p.error = ctx.first_error
    p.seconds = time.perf_counter() - t0
    return p


def _run_in_worker(item) -> _Partial:
    return _run_item(_WORKER_CTX, item)


def _skip_reason(check_id: str, bound: UniverseBound) -> Optional[str]:
    if check_id in _NEEDS_DOUBLE and bound.closure_len < 2 * bound.max_len:
        return (f"closure_len {bound.closure_len} is below 2*max_len={2 * bound.max_len} "
                f"needed to concatenate two universe sequences")
    if check_id == "replication_invariance" and bound.closure_len < 2:
        return "closure_len must allow at least one doubling"
    return None


def parse_checks(text: Optional[str]) -> list[str]:
    """Parse a comma-separated list of check ids; ``None`` or ``"all"`` means every check."""
    if text is None or text.strip().lower() == "all":
        return list(CHECK_IDS)
    wanted = [c.strip() for c in text.split(",") if c.strip()]
    unknown = [c for c in wanted if c not in CHECK_IDS]
    if unknown:
        raise InputError(f"unknown check id(s) {', '.join(unknown)}; valid ids: {', '.join(CHECK_IDS)}")
    return wanted


def run_audit(lifted: LiftedComparator, bound: UniverseBound, checks=None,
              workers: int = 1, timing: bool = False) -> AuditReport:
    """Run the requested checks and assemble a report.

    Checks always appear in canonical order, whatever order they were
    requested in.  ``workers > 1`` splits the enumeration across processes;
    the report is identical to a single-process run.
    """
    requested = set(CHECK_IDS if checks is None else checks)
    unknown = requested - set(CHECK_IDS)
    if unknown:
        raise InputError(f"unknown check id(s) {', '.join(sorted(unknown))}; "
                         f"valid ids: {', '.join(CHECK_IDS)}")
    order = [c for c in CHECK_IDS if c in requested]
    report = AuditReport(lifted.name, lifted.strategy, bound, timing=timing)

    ctx = _Context(lifted, bound)
    runnable = [c for c in order if _skip_reason(c, bound) is None]
    chunks = max(1, workers) * 4
    items = []
    for c in runnable:
        size = _outer_size(ctx, c)
        step = max(1, math.ceil(size / chunks))
        items += [(c, lo, min(size, lo + step)) for lo in range(0, size, step)]

    partials = {c: _Partial() for c in runnable}
    results = None
    if workers > 1 and len(items) > 1:
        try:
            pickle.dumps(ctx)
        except Exception as exc:
            log.warning("comparator cannot be shipped to worker processes (%s); running serially", exc)
        else:
            with ProcessPoolExecutor(max_workers=workers, initializer=_init_worker,
                                     initargs=(ctx,)) as pool:
                results = list(pool.map(_run_in_worker, items))
    if results is None:
        results = [_run_item(ctx, item) for item in items]
    for item, part in zip(items, results):
        partials[item[0]].merge(part)

    for c in order:
        reason = _skip_reason(c, bound)
        if reason is not None:
            report.checks.append(CheckResult(c, SKIPPED, reason=reason))
            continue
        p = partials[c]
        if p.witness is not None:
            status = VIOLATED
        elif p.tested == 0:
            status = SKIPPED
            reason = p.error or "no instance could be evaluated within the bound"
        else:
            status = HOLDS
        report.checks.append(CheckResult(c, status, p.tested, p.skipped, p.witness, reason, p.seconds))

    _summarise_implication(report)
    return report


def _summarise_implication(report: AuditReport) -> None:
    by_id = {c.id: c for c in report.checks}
    if not all(a in by_id for a in AXIOM_IDS):
        report.implication = "not_applicable: not every axiom check was requested"
        return
    if any(by_id[a].status != HOLDS for a in AXIOM_IDS):
        report.implication = "not_applicable: axioms do not all hold on the universe"
        return
    for f in FACT_IDS:
        if f in by_id and by_id[f].status == VIOLATED:
            report.internal_inconsistencies.append({"check": f, "witness": by_id[f].witness})
    report.implication = "inconsistent" if report.internal_inconsistencies else "confirmed"


# -- witness replay --------------------------------------------------------

def replay_witness(domain: DomainSpec, lifted: LiftedComparator, check_id: str,
                   witness: dict) -> list[str]:
    """Recompute the ``observed`` orderings of a reported witness."""
    def seq(key):
        return Sequence.parse(domain, witness[key])

    L = lifted
    if check_id in ("A1_1", "A1_2"):
        return _values(L(singleton(domain, witness["x"]), singleton(domain, witness["x_prime"])))
    if check_id == "A2_1":
        s = seq("sigma")
        return _values(L(concat(s, s), s))
    if check_id in ("A2_2", "A2_3"):
        s, a, b = seq("sigma"), seq("sigma_prime"), seq("sigma_dprime")
        return _values(L(a, b), L(concat(s, a), concat(s, b)))
    if check_id == "A3":
        s, t = seq("sigma"), seq("sigma_prime")
        return _values(L(concat(s, t), concat(t, s)))
    if check_id in ("F4", "F5"):
        s, t = seq("sigma"), seq("sigma_prime")
        return _values(L(s, t), L(s, concat(s, t)))
    if check_id == "F6":
        s = seq("sigma")
        t = transpose(s, witness["i"], witness["j"])
        if t != seq("sigma_prime"):
            raise InputError("F6 witness: sigma_prime is not the stated transposition")
        return _values(L(s, t))
    if check_id in ("F7_1", "F7_2", "F7_3"):
        return _values(L(seq("sigma"), seq("sigma_prime")))
    if check_id == "F8_consistency":
        s, t = seq("sigma"), seq("sigma_prime")
        prop = witness["property"]
        if prop == "base":
            return _values(L.base.compare_equal(s, t), L(s, t))
        if prop == "strategy":
            return _values(L.with_strategy("lcm")(s, t), L.with_strategy("product")(s, t))
        return _values(L(s, t))
    if check_id.startswith("sanity_"):
        seqs = [Sequence.parse(domain, x) for x in witness["sequences"]]
        if len(seqs) == 2:
            a, b = seqs
            return _values(L(a, b), L(b, a))
        a, b, c = seqs
        return _values(L(a, b), L(b, c), L(a, c))
    if check_id == "replication_invariance":
        s, t = seq("sigma"), seq("sigma_prime")
        ks, kt = witness["factors"]
        return [L.base.compare_equal(repeat(s, ks * j), repeat(t, kt * j)).value
                for j in range(1, len(witness["observed"]) + 1)]
    raise InputError(f"unknown check id {check_id!r}")


def default_workers() -> int:
    return os.cpu_count() or 1
