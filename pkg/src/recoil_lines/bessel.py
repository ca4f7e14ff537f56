"""Bessel functions of the first kind, integer order.

Miller's backward recurrence, normalised with J0 + 2*sum(J_2k) = 1. For tiny
arguments the power series is used instead since the recurrence start value
underflows there.
"""

from __future__ import annotations

import math

from .errors import DomainError

MAX_ARG = 50.0
MAX_ORDER = 200
SERIES_CUTOFF = 1e-3
_BIG = 1e250


def _check(order: int, x: float) -> None:
    if not math.isfinite(x) or abs(x) > MAX_ARG:
        raise DomainError(f"|x| must be <= {MAX_ARG}, got {x}")
    if abs(order) > MAX_ORDER:
        raise DomainError(f"|order| must be <= {MAX_ORDER}, got {order}")


def _series(n: int, x: float) -> float:
    half = 0.5 * x
    term = 1.0
    for j in range(1, n + 1):
        term *= half / j
    total = term
    q = half * half
    for k in range(1, 30):
        term *= -q / (k * (n + k))
        total += term
        if abs(term) < 1e-17 * abs(total):
            break
    return total


def _start_index(nmax: int, x: float) -> int:
    start = max(nmax, math.ceil(x)) + 20 + math.ceil(10.0 * math.sqrt(x))
    return start + (start % 2)


def bessel_j_sequence(nmax: int, x: float) -> list[float]:
    """[J_0(x), J_1(x), ..., J_nmax(x)] for 0 <= x, from one recurrence pass."""
    if nmax < 0:
        raise DomainError(f"nmax must be >= 0, got {nmax}")
    _check(nmax, x)
    if x < 0:
        vals = bessel_j_sequence(nmax, -x)
        return [v if k % 2 == 0 else -v for k, v in enumerate(vals)]
    if x < SERIES_CUTOFF:
        return [_series(k, x) for k in range(nmax + 1)]

    start = _start_index(nmax, x)
    out = [0.0] * (nmax + 1)
    two_over_x = 2.0 / x
    j_next, j_curr = 0.0, 1e-30
    norm = 0.0
    for k in range(start, 0, -1):
        # j_curr holds the unnormalised J_k; produce J_{k-1}.
        if k <= nmax:
            out[k] = j_curr
        if k % 2 == 0:
            norm += 2.0 * j_curr
        j_prev = k * two_over_x * j_curr - j_next
        j_next, j_curr = j_curr, j_prev
        if abs(j_curr) > _BIG:
            j_curr /= _BIG
            j_next /= _BIG
            norm /= _BIG
            for i in range(k, nmax + 1):
                out[i] /= _BIG
    out[0] = j_curr
    norm += j_curr
    return [v / norm for v in out]


def bessel_j(order: int, x: float) -> float:
    """J_order(x) for |order| <= 200, |x| <= 50; negative orders by reflection."""
    order = int(order)
    _check(order, x)
    n = abs(order)
    if x == 0.0:
        return 1.0 if n == 0 else 0.0
    value = bessel_j_sequence(n, x)[n]
    if order < 0 and n % 2 == 1:
        value = -value
    return value
