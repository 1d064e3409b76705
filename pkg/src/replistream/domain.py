"""Ordered domains, finite utility streams and pointwise dominance.

A domain is a finite list of labelled elements carrying integer utilities;
the utilities induce a total preorder on the elements.  A :class:`Sequence`
is a non-empty tuple of element indices into one domain.
"""

from __future__ import annotations

import enum
import itertools
import json
from dataclasses import dataclass
from typing import Iterator

INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1


class InputError(ValueError):
    """Malformed user input: unknown labels, bad lengths, bad files."""


class Ordering(enum.Enum):
    LESS = "Less"
    EQUIVALENT = "Equivalent"
    GREATER = "Greater"
    INCOMPARABLE = "Incomparable"

    def converse(self) -> "Ordering":
        if self is Ordering.LESS:
            return Ordering.GREATER
        if self is Ordering.GREATER:
            return Ordering.LESS
        return self

    @classmethod
    def parse(cls, text: str) -> "Ordering":
        for member in cls:
            if member.value.lower() == text.strip().lower():
                return member
        raise InputError(f"unknown ordering {text!r}; expected one of "
                         + ", ".join(m.value for m in cls))

    @classmethod
    def of(cls, a, b) -> "Ordering":
        """Ordering of two totally ordered values (ints, Fractions, tuples)."""
        if a < b:
            return cls.LESS
        if b < a:
            return cls.GREATER
        return cls.EQUIVALENT

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class DomainSpec:
    labels: tuple[str, ...]
    utilities: tuple[int, ...]

    def __post_init__(self):
        if not self.labels:
            raise InputError("domain must contain at least one element")
        if len(self.labels) != len(self.utilities):
            raise InputError("labels and utilities differ in length")
        if len(set(self.labels)) != len(self.labels):
            dup = next(l for l in self.labels if self.labels.count(l) > 1)
            raise InputError(f"duplicate label {dup!r} in domain")
        for label, u in zip(self.labels, self.utilities):
            if not isinstance(label, str) or not label:
                raise InputError(f"label must be a non-empty string, got {label!r}")
            if "," in label:
                raise InputError(f"label {label!r} may not contain a comma")
            if label != label.strip():
                raise InputError(f"label {label!r} has surrounding whitespace")
            if isinstance(u, bool) or not isinstance(u, int):
                raise InputError(f"utility of {label!r} must be an integer, got {u!r}")
            if not INT64_MIN <= u <= INT64_MAX:
                raise InputError(f"utility of {label!r} does not fit in 64 bits")

    @classmethod
    def from_pairs(cls, pairs) -> "DomainSpec":
        pairs = list(pairs)
        return cls(tuple(p[0] for p in pairs), tuple(p[1] for p in pairs))

    @classmethod
    def from_json(cls, data) -> "DomainSpec":
        if not isinstance(data, dict) or not isinstance(data.get("elements"), list):
            raise InputError('domain JSON must be an object with an "elements" list')
        pairs = []
        for entry in data["elements"]:
            if not isinstance(entry, dict) or "label" not in entry or "utility" not in entry:
                raise InputError(f"bad domain element {entry!r}; need label and utility")
            pairs.append((entry["label"], entry["utility"]))
        return cls.from_pairs(pairs)

    def to_json(self) -> dict:
        return {"elements": [{"label": l, "utility": u}
                             for l, u in zip(self.labels, self.utilities)]}

    @classmethod
    def parse_inline(cls, text: str) -> "DomainSpec":
        """Parse ``"a:0,b:1"`` into a domain."""
        pairs = []
        for part in text.split(","):
            label, sep, value = part.strip().partition(":")
            if not sep:
                raise InputError(f"inline element {part!r} is not of the form label:utility")
            try:
                pairs.append((label.strip(), int(value)))
            except ValueError:
                raise InputError(f"utility of {label.strip()!r} is not an integer: {value!r}") from None
        return cls.from_pairs(pairs)

    def __len__(self) -> int:
        return len(self.labels)

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise InputError(f"unknown element label {label!r}") from None

    def utility(self, element: int | str) -> int:
        if isinstance(element, str):
            element = self.index(element)
        return self.utilities[element]

    def compare_elements(self, x: int, y: int) -> Ordering:
        """Base order on the domain: ``<`` by utility, ``≡`` on ties."""
        return Ordering.of(self.utilities[x], self.utilities[y])


def load_domain(path) -> DomainSpec:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read domain file {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"domain file {path} is not valid JSON: {exc}") from None
    return DomainSpec.from_json(data)


@dataclass(frozen=True)
class Sequence:
    """A finite, non-empty utility stream over ``domain``.

    ``items`` holds element indices.  Positions are 1-based in reports and
    in :func:`transpose`, 0-based when indexing ``items`` directly.
    """

    domain: DomainSpec
    items: tuple[int, ...]

    def __post_init__(self):
        if not self.items:
            raise InputError("sequences must be non-empty")
        n = len(self.domain)
        for x in self.items:
            if not isinstance(x, int) or not 0 <= x < n:
                raise InputError(f"element index {x!r} outside the domain")

    @classmethod
    def parse(cls, domain: DomainSpec, literal: str) -> "Sequence":
        """Parse a comma-separated label literal such as ``"a,b,a"``."""
        parts = [p.strip() for p in literal.split(",")]
        if literal.strip() == "" or any(p == "" for p in parts):
            raise InputError(f"empty label in sequence literal {literal!r}")
        return cls(domain, tuple(domain.index(p) for p in parts))

    @classmethod
    def of_labels(cls, domain: DomainSpec, labels) -> "Sequence":
        return cls(domain, tuple(domain.index(l) for l in labels))

    def __len__(self) -> int:
        return len(self.items)

    @property
    def utilities(self) -> tuple[int, ...]:
        u = self.domain.utilities
        return tuple(u[x] for x in self.items)

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(self.domain.labels[x] for x in self.items)

    def literal(self) -> str:
        return ",".join(self.labels)

    def __str__(self) -> str:
        return "(" + self.literal() + ")"


def singleton(domain: DomainSpec, x: int | str) -> Sequence:
    if isinstance(x, str):
        x = domain.index(x)
    return Sequence(domain, (x,))


def _same_domain(s: Sequence, t: Sequence) -> None:
    if s.domain is not t.domain and s.domain != t.domain:
        raise InputError("sequences are over different domains")


def concat(s: Sequence, t: Sequence) -> Sequence:
    _same_domain(s, t)
    return Sequence(s.domain, s.items + t.items)


def repeat(s: Sequence, n: int) -> Sequence:
    if isinstance(n, bool) or not isinstance(n, int) or n < 1:
        raise InputError(f"repetition count must be a positive integer, got {n!r}")
    return Sequence(s.domain, s.items * n)


def _pointwise(s: Sequence, t: Sequence) -> list[Ordering]:
    _same_domain(s, t)
    if len(s) != len(t):
        raise InputError(f"pointwise comparison needs equal lengths, got {len(s)} and {len(t)}")
    cmp = s.domain.compare_elements
    return [cmp(x, y) for x, y in zip(s.items, t.items)]


def pointwise_leq(s: Sequence, t: Sequence) -> bool:
    return all(o is not Ordering.GREATER for o in _pointwise(s, t))


def pointwise_lt(s: Sequence, t: Sequence) -> bool:
    cmps = _pointwise(s, t)
    return all(o is not Ordering.GREATER for o in cmps) and Ordering.LESS in cmps


def pointwise_ll(s: Sequence, t: Sequence) -> bool:
    return all(o is Ordering.LESS for o in _pointwise(s, t))


def transpose(s: Sequence, i: int, j: int) -> Sequence:
    """Swap the elements at 1-based positions ``i`` and ``j``."""
    n = len(s)
    for k in (i, j):
        if isinstance(k, bool) or not isinstance(k, int) or not 1 <= k <= n:
            raise InputError(f"position {k!r} out of range 1..{n}")
    items = list(s.items)
    items[i - 1], items[j - 1] = items[j - 1], items[i - 1]
    return Sequence(s.domain, tuple(items))


def enumerate_sequences(domain: DomainSpec, max_len: int, min_len: int = 1) -> Iterator[Sequence]:
    """All sequences of length ``min_len..max_len``, by length then lexicographically."""
    for n in range(min_len, max_len + 1):
        for items in itertools.product(range(len(domain)), repeat=n):
            yield Sequence(domain, items)
