"""Order finite utility streams by replication and audit comparators against Pareto/anonymity axioms."""

from .audit import CHECK_IDS, AuditReport, UniverseBound, replay_witness, run_audit
from .domain import (DomainSpec, InputError, Ordering, Sequence, concat, enumerate_sequences,
                     load_domain, pointwise_leq, pointwise_ll, pointwise_lt, repeat, singleton,
                     transpose)
from .evaluators import EvaluatorSpec, make_comparator
from .lifting import (ComparatorError, EqualLengthComparator, LiftedComparator, TableComparator,
                      common_length, lift_compare)

__version__ = "0.1.0"
