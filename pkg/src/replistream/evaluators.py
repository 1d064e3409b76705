"""Concrete equal-length comparators.

All scores are exact :class:`fractions.Fraction` values; no decision in
this module goes through floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .domain import DomainSpec, InputError, Ordering, Sequence
from .lifting import ComparatorError, EqualLengthComparator

KINDS = ("mean", "sum", "min", "leximin", "discounted_mean")

DESCRIPTIONS = {
    "mean": "average utility; satisfies every axiom",
    "sum": "total utility; agrees with mean once lifted to a common length",
    "min": "worst position (maximin); breaks strict monotonicity under a common prefix",
    "leximin": "sorted utilities compared lexicographically from the worst position",
    "discounted_mean": "normalised geometric discounting, e.g. discounted_mean:1/2; breaks anonymity",
}


def _need_equal(s: Sequence, t: Sequence) -> None:
    if len(s) != len(t):
        raise ComparatorError(f"equal lengths required, got {len(s)} and {len(t)}")


def score_mean(s: Sequence) -> Fraction:
    return Fraction(sum(s.utilities), len(s))


def score_sum(s: Sequence) -> Fraction:
    return Fraction(sum(s.utilities))


def score_min(s: Sequence) -> Fraction:
    return Fraction(min(s.utilities))


def _check_delta(delta: Fraction) -> Fraction:
    delta = Fraction(delta)
    if not 0 < delta < 1:
        raise InputError(f"discount factor must lie strictly between 0 and 1, got {delta}")
    return delta


def score_discounted_mean(s: Sequence, delta: Fraction) -> Fraction:
    delta = _check_delta(delta)
    weighted = Fraction(0)
    total = Fraction(0)
    w = Fraction(1)
    for u in s.utilities:
        weighted += w * u
        total += w
        w *= delta
    return weighted / total


class DiscountedMeanScore:
    def __init__(self, delta: Fraction):
        self.delta = _check_delta(delta)

    def __call__(self, s: Sequence) -> Fraction:
        return score_discounted_mean(s, self.delta)


def compare_min(s: Sequence, t: Sequence) -> Ordering:
    _need_equal(s, t)
    return Ordering.of(min(s.utilities), min(t.utilities))


def compare_leximin(s: Sequence, t: Sequence) -> Ordering:
    _need_equal(s, t)
    return Ordering.of(sorted(s.utilities), sorted(t.utilities))


def compare_discounted_mean(s: Sequence, t: Sequence, delta: Fraction) -> Ordering:
    _need_equal(s, t)
    return Ordering.of(score_discounted_mean(s, delta), score_discounted_mean(t, delta))


@dataclass(frozen=True)
class EvaluatorSpec:
    kind: str
    delta: Optional[Fraction] = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise InputError(f"unknown evaluator {self.kind!r}; expected one of {', '.join(KINDS)}")
        if self.kind == "discounted_mean":
            if self.delta is None:
                raise InputError("discounted_mean needs a discount factor, e.g. discounted_mean:1/2")
            object.__setattr__(self, "delta", _check_delta(self.delta))
        elif self.delta is not None:
            raise InputError(f"evaluator {self.kind} takes no parameter")

    @classmethod
    def parse(cls, text: str) -> "EvaluatorSpec":
        kind, sep, param = text.strip().partition(":")
        if not sep:
            return cls(kind)
        try:
            delta = Fraction(param.strip())
        except (ValueError, ZeroDivisionError):
            raise InputError(f"bad discount factor {param!r}; write it as num/den") from None
        return cls(kind, delta)

    @property
    def name(self) -> str:
        if self.kind == "discounted_mean":
            return f"discounted_mean:{self.delta.numerator}/{self.delta.denominator}"
        return self.kind


def make_comparator(spec: EvaluatorSpec | str, domain: Optional[DomainSpec] = None) -> EqualLengthComparator:
    """Build the equal-length comparator described by ``spec``.

    ``domain`` is accepted for symmetry with table loading; evaluators read
    utilities from the sequences themselves.
    """
    if isinstance(spec, str):
        spec = EvaluatorSpec.parse(spec)
    if spec.kind == "mean":
        return EqualLengthComparator.from_score(spec.name, score_mean)
    if spec.kind == "sum":
        return EqualLengthComparator.from_score(spec.name, score_sum)
    if spec.kind == "min":
        return EqualLengthComparator.from_score(spec.name, score_min)
    if spec.kind == "discounted_mean":
        return EqualLengthComparator.from_score(spec.name, DiscountedMeanScore(spec.delta))
    return EqualLengthComparator(spec.name, compare_leximin)


def evaluator_by_name(name: str, domain: Optional[DomainSpec] = None) -> EqualLengthComparator:
    return make_comparator(EvaluatorSpec.parse(name), domain)
