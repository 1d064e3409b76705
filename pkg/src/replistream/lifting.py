"""Lifting equal-length comparators to streams of arbitrary length.

Two streams of lengths ``m`` and ``n`` are compared by replicating each to a
common length and handing the replicated pair to the equal-length rule.
The ``product`` strategy uses length ``m*n`` (each side repeated by the
other's length); ``lcm`` uses ``lcm(m, n)``, which gives the same answer
whenever the base rule is invariant under replication and is much cheaper.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from .domain import DomainSpec, InputError, Ordering, Sequence, repeat

STRATEGIES = ("lcm", "product")
DEFAULT_MAX_POSITIONS = 10_000


class ComparatorError(InputError):
    """A comparator refused its inputs (wrong lengths, missing table entry, cap)."""


def common_length(m: int, n: int, strategy: str = "lcm") -> tuple[int, int, int]:
    """Return ``(L, k_s, k_t)`` with ``k_s*m == k_t*n == L``."""
    if strategy == "product":
        return m * n, n, m
    if strategy == "lcm":
        L = math.lcm(m, n)
        return L, L // m, L // n
    raise InputError(f"unknown strategy {strategy!r}; expected one of {', '.join(STRATEGIES)}")


class ScoreRule:
    """Equal-length rule comparing exact scores."""

    def __init__(self, score: Callable[[Sequence], Fraction]):
        self.score = score

    def __call__(self, s: Sequence, t: Sequence) -> Ordering:
        return Ordering.of(self.score(s), self.score(t))


@dataclass(frozen=True)
class EqualLengthComparator:
    """A named comparison rule defined only on pairs of equal length.

    ``score`` is set for score-based rules so that certificates can show
    the exact values that decided the comparison.
    """

    name: str
    rule: Callable[[Sequence, Sequence], Ordering]
    score: Optional[Callable[[Sequence], Fraction]] = None

    @classmethod
    def from_score(cls, name: str, score) -> "EqualLengthComparator":
        return cls(name, ScoreRule(score), score)

    def compare_equal(self, s: Sequence, t: Sequence) -> Ordering:
        if len(s) != len(t):
            raise ComparatorError(f"{self.name}: defined on equal lengths only, got {len(s)} and {len(t)}")
        if s.domain != t.domain:
            raise ComparatorError(f"{self.name}: sequences over different domains")
        return self.rule(s, t)


class TableComparator:
    """Equal-length comparator given by an explicit table of outcomes.

    ``entries`` maps ``(left_items, right_items)`` to an :class:`Ordering`;
    converse entries are filled in on construction and contradictions are
    rejected.  Pairs absent from the table go to ``fallback`` when one is
    given and raise :class:`ComparatorError` otherwise.
    """

    score = None

    def __init__(self, domain: DomainSpec, max_len: int, entries: dict,
                 name: str = "table", fallback: Optional[EqualLengthComparator] = None):
        if isinstance(max_len, bool) or not isinstance(max_len, int) or max_len < 1:
            raise InputError(f"table max_len must be a positive integer, got {max_len!r}")
        self.domain = domain
        self.max_len = max_len
        self.name = name
        self.fallback = fallback
        self.entries: dict[tuple[tuple[int, ...], tuple[int, ...]], Ordering] = {}
        for (left, right), ordering in entries.items():
            left, right = tuple(left), tuple(right)
            Sequence(domain, left), Sequence(domain, right)
            if len(left) != len(right):
                raise InputError(f"table entry {left}/{right} relates unequal lengths")
            if len(left) > max_len:
                raise InputError(f"table entry longer than max_len={max_len}")
            self._put(left, right, ordering)
            self._put(right, left, ordering.converse())

    def _put(self, left, right, ordering: Ordering) -> None:
        old = self.entries.get((left, right))
        if old is not None and old is not ordering:
            s, t = Sequence(self.domain, left), Sequence(self.domain, right)
            raise InputError(f"contradictory table entries for {s.literal()} vs {t.literal()}: "
                             f"{old.value} and {ordering.value}")
        self.entries[(left, right)] = ordering

    def compare_equal(self, s: Sequence, t: Sequence) -> Ordering:
        if len(s) != len(t):
            raise ComparatorError(f"{self.name}: defined on equal lengths only, got {len(s)} and {len(t)}")
        found = self.entries.get((s.items, t.items))
        if found is not None:
            return found
        if self.fallback is not None:
            return self.fallback.compare_equal(s, t)
        raise ComparatorError(f"{self.name}: no entry for {s.literal()} vs {t.literal()}")

    def to_json(self) -> dict:
        rows = []
        seen = set()
        for (left, right), ordering in sorted(self.entries.items(), key=lambda kv: (len(kv[0][0]), kv[0])):
            if (right, left) in seen:
                continue
            seen.add((left, right))
            rows.append({"left": Sequence(self.domain, left).literal(),
                         "right": Sequence(self.domain, right).literal(),
                         "ordering": ordering.value})
        data = {"name": self.name, "domain": self.domain.to_json(),
                "max_len": self.max_len, "entries": rows}
        if self.fallback is not None:
            data["fallback"] = self.fallback.name
        return data

    @classmethod
    def from_json(cls, data, fallback_factory=None) -> "TableComparator":
        """Build a table from its JSON form.

        ``fallback_factory(name, domain)`` resolves the optional ``"fallback"``
        evaluator name.
        """
        if not isinstance(data, dict):
            raise InputError("table JSON must be an object")
        for key in ("domain", "max_len", "entries"):
            if key not in data:
                raise InputError(f'table JSON lacks "{key}"')
        domain = DomainSpec.from_json(data["domain"])
        entries = {}
        for row in data["entries"]:
            try:
                left = Sequence.parse(domain, row["left"])
                right = Sequence.parse(domain, row["right"])
                ordering = Ordering.parse(row["ordering"])
            except (KeyError, TypeError):
                raise InputError(f"bad table entry {row!r}; need left, right, ordering") from None
            key = (left.items, right.items)
            if key in entries and entries[key] is not ordering:
                raise InputError(f"contradictory table entries for {row['left']} vs {row['right']}")
            entries[key] = ordering
        fallback = None
        if data.get("fallback") is not None:
            if fallback_factory is None:
                raise InputError("table names a fallback but no evaluator resolver was given")
            fallback = fallback_factory(data["fallback"], domain)
        return cls(domain, data["max_len"], entries, name=data.get("name", "table"), fallback=fallback)


def load_table(path, fallback_factory=None) -> TableComparator:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read table file {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"table file {path} is not valid JSON: {exc}") from None
    return TableComparator.from_json(data, fallback_factory)


def lift_compare(cmp, s: Sequence, t: Sequence, strategy: str = "lcm",
                 max_positions: int = DEFAULT_MAX_POSITIONS) -> Ordering:
    if s.domain != t.domain:
        raise InputError("sequences are over different domains")
    L, ks, kt = common_length(len(s), len(t), strategy)
    if L > max_positions:
        raise InputError(f"replicated length {L} exceeds the cap of {max_positions} positions")
    return cmp.compare_equal(repeat(s, ks), repeat(t, kt))


@dataclass(frozen=True)
class LiftedComparator:
    """``base`` extended to all pairs of streams by replication."""

    base: object
    strategy: str = "lcm"
    max_positions: int = DEFAULT_MAX_POSITIONS

    def __post_init__(self):
        if self.strategy not in STRATEGIES:
            raise InputError(f"unknown strategy {self.strategy!r}")

    @property
    def name(self) -> str:
        return self.base.name

    def __call__(self, s: Sequence, t: Sequence) -> Ordering:
        return lift_compare(self.base, s, t, self.strategy, self.max_positions)

    def with_strategy(self, strategy: str) -> "LiftedComparator":
        return LiftedComparator(self.base, strategy, self.max_positions)

    def certificate(self, s: Sequence, t: Sequence) -> "Certificate":
        L, ks, kt = common_length(len(s), len(t), self.strategy)
        ordering = self(s, t)
        left, right = repeat(s, ks), repeat(t, kt)
        scores = None
        if self.base.score is not None:
            scores = (self.base.score(left), self.base.score(right))
        return Certificate(self.name, self.strategy, s, t, L, (ks, kt), left, right, scores, ordering)


def format_rational(q: Fraction) -> str:
    """``num/den`` in lowest terms, integers without a denominator."""
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class Certificate:
    comparator: str
    strategy: str
    left: Sequence
    right: Sequence
    common_length: int
    factors: tuple[int, int]
    left_replicated: Sequence
    right_replicated: Sequence
    scores: Optional[tuple[Fraction, Fraction]]
    ordering: Ordering

    def to_json(self) -> dict:
        return {
            "comparator": self.comparator,
            "strategy": self.strategy,
            "left": self.left.literal(),
            "right": self.right.literal(),
            "lengths": [len(self.left), len(self.right)],
            "factors": list(self.factors),
            "common_length": self.common_length,
            "left_replicated": self.left_replicated.literal(),
            "right_replicated": self.right_replicated.literal(),
            "scores": None if self.scores is None else [format_rational(q) for q in self.scores],
            "ordering": self.ordering.value,
        }

    def render_text(self) -> str:
        lines = [
            self.ordering.value,
            f"comparator:   {self.comparator} (strategy {self.strategy})",
            f"left:         {self.left}  length {len(self.left)}  x{self.factors[0]}",
            f"right:        {self.right}  length {len(self.right)}  x{self.factors[1]}",
            f"common length {self.common_length}",
            f"  {self.left_replicated}",
            f"  {self.right_replicated}",
        ]
        if self.scores is not None:
            lines.append(f"scores:       {format_rational(self.scores[0])} vs {format_rational(self.scores[1])}")
        return "\n".join(lines)


def verify_certificate(data: dict, domain: DomainSpec, cmp) -> bool:
    """Re-derive a JSON certificate from its own contents.

    Checks that the replicated sequences really are the stated repetitions
    of the inputs and that re-comparing them (and re-scoring, when scores
    are present) reproduces the printed result.
    """
    left = Sequence.parse(domain, data["left"])
    right = Sequence.parse(domain, data["right"])
    ks, kt = data["factors"]
    lrep = Sequence.parse(domain, data["left_replicated"])
    rrep = Sequence.parse(domain, data["right_replicated"])
    if repeat(left, ks) != lrep or repeat(right, kt) != rrep:
        return False
    if len(lrep) != data["common_length"] or len(rrep) != data["common_length"]:
        return False
    if cmp.compare_equal(lrep, rrep).value != data["ordering"]:
        return False
    if data.get("scores") is not None:
        if cmp.score is None:
            return False
        printed = [Fraction(x) for x in data["scores"]]
        if printed != [cmp.score(lrep), cmp.score(rrep)]:
            return False
        if Ordering.of(printed[0], printed[1]).value != data["ordering"]:
            return False
    return True


def replication_violation(cmp, s: Sequence, t: Sequence, max_positions: int):
    """Outcomes of ``cmp`` on ``(s^(k_s*j), t^(k_t*j))`` for ``j = 1, 2, ...``.

    Replication stops once the common length would exceed ``max_positions``.
    Returns ``(outcomes, violated)``; ``outcomes`` has fewer than two entries
    when nothing can be tested within the bound.
    """
    L, ks, kt = common_length(len(s), len(t), "lcm")
    outcomes = []
    j = 1
    while L * j <= max_positions:
        outcomes.append(cmp.compare_equal(repeat(s, ks * j), repeat(t, kt * j)))
        j += 1
    violated = any(o is not outcomes[0] for o in outcomes)
    return outcomes, violated


@dataclass
class ReplicationReport:
    tested: int = 0
    untestable: int = 0
    witness: Optional[dict] = None

    @property
    def holds(self) -> bool:
        return self.witness is None


def check_replication_invariance(cmp, sequences, max_positions: int) -> ReplicationReport:
    """Check that replicating both sides of every pair never changes the outcome.

    ``sequences`` is iterated in order; the first violating pair becomes the
    witness.
    """
    seqs = list(sequences)
    report = ReplicationReport()
    for s in seqs:
        for t in seqs:
            outcomes, violated = replication_violation(cmp, s, t, max_positions)
            if len(outcomes) < 2:
                report.untestable += 1
                continue
            report.tested += 1
            if violated and report.witness is None:
                report.witness = replication_witness(s, t, outcomes)
    return report


def replication_witness(s: Sequence, t: Sequence, outcomes) -> dict:
    L, ks, kt = common_length(len(s), len(t), "lcm")
    return {"sigma": s.literal(), "sigma_prime": t.literal(),
            "factors": [ks, kt], "common_length": L,
            "observed": [o.value for o in outcomes]}
