"""Deliberately non-compliant table comparators.

Each table agrees with the mean evaluator except on a handful of entries,
chosen so that one particular axiom or sanity condition breaks.  They are
used to confirm that the audit actually detects what it claims to detect.
"""

from __future__ import annotations

import itertools

from .domain import DomainSpec, InputError, Ordering, Sequence
from .evaluators import make_comparator, score_mean
from .lifting import TableComparator


def _sorted_indices(domain: DomainSpec) -> list[int]:
    return sorted(range(len(domain)), key=lambda i: (domain.utilities[i], i))


def pareto_flip_table(domain: DomainSpec) -> TableComparator:
    """Reverse the singleton comparison of the first strictly ordered pair."""
    for x, y in itertools.product(range(len(domain)), repeat=2):
        if domain.utilities[x] < domain.utilities[y]:
            entries = {((x,), (y,)): Ordering.GREATER}
            return TableComparator(domain, 1, entries, name="pareto_flip",
                                   fallback=make_comparator("mean"))
    raise InputError("pareto_flip needs two elements of different utility")


def replication_break_table(domain: DomainSpec) -> TableComparator:
    """Declare a length-2 pair strictly ordered although its doubling is a tie.

    Prefers a mean-tied pair that is not a mere rearrangement, so that
    anonymity is left intact; falls back to a transposed pair otherwise.
    """
    pairs = [Sequence(domain, items) for items in itertools.product(range(len(domain)), repeat=2)]
    best = None
    for s, t in itertools.product(pairs, repeat=2):
        if s == t or score_mean(s) != score_mean(t):
            continue
        if sorted(s.items) != sorted(t.items):
            best = (s, t)
            break
        if best is None:
            best = (s, t)
    if best is None:
        raise InputError("replication_break needs at least two domain elements")
    s, t = best
    return TableComparator(domain, 2, {(s.items, t.items): Ordering.LESS},
                           name="replication_break", fallback=make_comparator("mean"))


def three_cycle_table(domain: DomainSpec) -> TableComparator:
    """Make the three lowest singletons cyclic: a < b < c < a."""
    if len(domain) < 3:
        raise InputError("three_cycle needs at least three domain elements")
    a, b, c = _sorted_indices(domain)[:3]
    a, b, c = sorted((a, b, c))
    entries = {
        ((a,), (b,)): Ordering.LESS,
        ((b,), (c,)): Ordering.LESS,
        ((c,), (a,)): Ordering.LESS,
    }
    return TableComparator(domain, 1, entries, name="three_cycle",
                           fallback=make_comparator("mean"))


CONTROLS = {
    "pareto_flip": pareto_flip_table,
    "replication_break": replication_break_table,
    "three_cycle": three_cycle_table,
}
