"""Symmetrization and the classical normalized symmetric families.

reynolds(f) averages f over all n! permutations of its variables.  The
constructors below are normalized so each evaluates to 1 at the
all-ones point: monomial_symmetric(a) averages the monomial x^a over
its orbit, power_sum(k) is (1/n) * sum x_i^k, and elementary(k) is the
k-th elementary symmetric polynomial divided by C(n, k).

Symmetrization cost grows factorially, so arities above MAX_ARITY are
rejected unless the caller passes allow_large=True.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import comb
from typing import Iterable

from .errors import InputError
from .partitions import as_partition
from .poly import ExpVec, Poly

MAX_ARITY = 8

_ONE = Fraction(1)


def check_arity_guard(n: int, allow_large: bool = False) -> None:
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise InputError(f"arity must be a positive integer, got {n!r}")
    if n > MAX_ARITY and not allow_large:
        raise InputError(
            f"arity {n} exceeds the guard limit {MAX_ARITY}; set allow_large to override"
        )


def distinct_rearrangements(exp: Iterable[int]) -> list[ExpVec]:
    """All distinct coordinate rearrangements of exp, sorted."""
    return sorted(set(itertools.permutations(exp)))


def reynolds(f: Poly, *, allow_large: bool = False) -> Poly:
    """Average f over all permutations of its variables.

    Computed per exponent-orbit with multiplicity counts instead of
    literally summing n! permuted copies; the result is identical.
    """
    check_arity_guard(f.arity, allow_large)
    by_rep: dict[ExpVec, Fraction] = {}
    for e, c in f.terms.items():
        rep = tuple(sorted(e, reverse=True))
        by_rep[rep] = by_rep.get(rep, Fraction(0)) + c
    out: dict[ExpVec, Fraction] = {}
    for rep, c in by_rep.items():
        if not c:
            continue
        orbit = distinct_rearrangements(rep)
        w = c / len(orbit)
        for d in orbit:  # orbits of distinct reps are disjoint
            out[d] = w
    return Poly._raw(f.arity, out)


def monomial_symmetric(alpha: Iterable[int], *, allow_large: bool = False) -> Poly:
    """The normalized monomial symmetric function: reynolds of x^alpha.

    Evaluates to exactly 1 at the all-ones point.
    """
    a = as_partition(alpha)
    n = len(a)
    check_arity_guard(n, allow_large)
    orbit = distinct_rearrangements(a)
    w = Fraction(1, len(orbit))
    return Poly._raw(n, {d: w for d in orbit})


def power_sum(k: int, n: int, *, allow_large: bool = False) -> Poly:
    """The normalized power sum (1/n) * sum_i x_i^k; equals 1 for k = 0."""
    check_arity_guard(n, allow_large)
    if not isinstance(k, int) or isinstance(k, bool) or k < 0:
        raise InputError(f"power sum degree must be a nonnegative integer, got {k!r}")
    if k == 0:
        return Poly.constant(n, 1)
    w = Fraction(1, n)
    terms: dict[ExpVec, Fraction] = {}
    for i in range(n):
        e = [0] * n
        e[i] = k
        terms[tuple(e)] = w
    return Poly._raw(n, terms)


def elementary(k: int, n: int, *, allow_large: bool = False) -> Poly:
    """The k-th elementary symmetric polynomial divided by C(n, k); 1 for k = 0."""
    check_arity_guard(n, allow_large)
    if not isinstance(k, int) or isinstance(k, bool) or not 0 <= k <= n:
        raise InputError(f"elementary index must satisfy 0 <= k <= {n}, got {k!r}")
    if k == 0:
        return Poly.constant(n, 1)
    w = Fraction(1, comb(n, k))
    terms: dict[ExpVec, Fraction] = {}
    for subset in itertools.combinations(range(n), k):
        e = [0] * n
        for i in subset:
            e[i] = 1
        terms[tuple(e)] = w
    return Poly._raw(n, terms)
