"""Independent reference computations used to freeze expected values.

These deliberately avoid the package's replication and Fraction paths:
everything is plain integer arithmetic over Python lists.
"""

from replistream.domain import Ordering


def cmp_int(a, b):
    return Ordering.LESS if a < b else Ordering.GREATER if a > b else Ordering.EQUIVALENT


def mean_order(us, vs):
    """Mean comparison by integer cross-multiplication."""
    return cmp_int(sum(us) * len(vs), sum(vs) * len(us))


def brute_common_length(m, n):
    L = max(m, n)
    while L % m or L % n:
        L += 1
    return L


def replicated_sums(us, vs):
    L = brute_common_length(len(us), len(vs))
    left = [us[i % len(us)] for i in range(L)]
    right = [vs[i % len(vs)] for i in range(L)]
    return sum(left), sum(right)


def discounted_order(us, vs, p, q):
    """Compare normalised discounted means with delta = p/q using integers only.

    Scaled by q**(n-1) the weights are p**i * q**(n-1-i); the normaliser is
    common to both sides at equal length, so weighted sums decide.
    """
    assert len(us) == len(vs)
    n = len(us)
    w = [p**i * q**(n - 1 - i) for i in range(n)]
    return cmp_int(sum(a * b for a, b in zip(w, us)), sum(a * b for a, b in zip(w, vs)))


def leximin_order(us, vs):
    a, b = sorted(us), sorted(vs)
    for x, y in zip(a, b):
        if x != y:
            return cmp_int(x, y)
    return Ordering.EQUIVALENT
