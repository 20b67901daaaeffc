"""Shared fixtures and brute-force oracles.

The survey population (every well-formed IP weight vector of dimension 3
with w <= 40, plus 20 pseudo-random dimension-4 vectors with w <= 60) is
built once per session and reused by the slow sweeps.  The count oracles
below recompute lattice data straight from the definition so the library's
reconstruction pipeline is checked against independent code.
"""

import random

import pytest

from stringymirror import ip_property, validate
from stringymirror.errors import NotWellFormed

D3_BUDGET = 40
D4_BUDGET = 60
D4_COUNT = 20
SEED = 20240814


def ascending_tuples(k, budget, start=1):
    """Non-decreasing k-tuples with entries >= start and sum <= budget."""
    if k == 0:
        yield ()
        return
    for v in range(start, budget // k + 1):
        for rest in ascending_tuples(k - 1, budget - v, v):
            yield (v,) + rest


def _ip_members(dim, budget):
    out = []
    for tup in ascending_tuples(dim + 1, budget):
        try:
            wv = validate(tup)
        except NotWellFormed:
            continue
        if ip_property(wv):
            out.append(wv)
    return out


@pytest.fixture(scope="session")
def surface_population():
    """Every well-formed IP weight vector with d = 3 and w <= 40."""
    return _ip_members(3, D3_BUDGET)


@pytest.fixture(scope="session")
def random_threefold_population():
    """20 seeded-random well-formed IP weight vectors with d = 4, w <= 60."""
    rng = random.Random(SEED)
    out, seen = [], set()
    while len(out) < D4_COUNT:
        tup = tuple(sorted(rng.randint(1, 15) for _ in range(5)))
        if sum(tup) > D4_BUDGET or tup in seen:
            continue
        seen.add(tup)
        try:
            wv = validate(tup)
        except NotWellFormed:
            continue
        if ip_property(wv):
            out.append(wv)
    return out


@pytest.fixture(scope="session")
def population(surface_population, random_threefold_population):
    return surface_population + random_threefold_population


def series_counts(weights, comp, kmax):
    """N(k) = #{n in Z_{>0}^comp : sum n_j w_j = k w} for k = 1..kmax.

    Expands prod_{j in comp} (x**w_j + x**(2 w_j) + ...) truncated at degree
    kmax*w and reads the coefficients at multiples of w.  No rational
    reconstruction involved, so this is a fair oracle for bracket().
    """
    w = sum(weights)
    deg = kmax * w
    acc = [0] * (deg + 1)
    acc[0] = 1
    for j in comp:
        m = weights[j]
        nxt = [0] * (deg + 1)
        nxt[m:] = acc[: deg + 1 - m]
        for i in range(m, deg + 1):
            nxt[i] += nxt[i - m]
        acc = nxt
    return [acc[k * w] for k in range(1, kmax + 1)]


def enumerated_counts(weights, comp, kmax):
    """Same numbers by walking every solution of the Diophantine system.

    Exponential; only for small anchor cases.  Ties series_counts (and
    through it the whole reconstruction chain) to literal point counting.
    """
    w = sum(weights)
    coins = [weights[j] for j in comp]
    limit = kmax * w
    counts = [0] * (kmax + 1)

    def walk(i, total):
        if i == len(coins):
            if total and total % w == 0:
                counts[total // w] += 1
            return
        step = coins[i]
        acc = total + step
        while acc <= limit:
            walk(i + 1, acc)
            acc += step

    if coins:
        walk(0, 0)
    return counts[1:]
