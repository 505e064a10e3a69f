"""Averaged expert matrices driven by max-min composition.

The fuzzy variant works on exact fractions in [0, 1]; the neutrosophic one on
NeutroValue entries ordered lexicographically (real part, then I part).
"""

from __future__ import annotations

from fractions import Fraction
from functools import reduce

from .crisp import DOMAIN, RANGE, _matrix
from .dynamics import HiddenPattern, run_until_recurrence
from .neutro import NeutroValue, as_neutro, nv_max, nv_min, parse_rational

MONOPARTITE, BIPARTITE = "monopartite", "bipartite"


def _fraction(x):
    if isinstance(x, NeutroValue):
        if not x.is_real:
            raise ValueError(f"{x} carries an I term; use the neutrosophic engine")
        return x.real
    if isinstance(x, str):
        return parse_rational(x)
    return Fraction(x)


def average_experts(matrices):
    """Entrywise mean of equally weighted expert matrices, kept exact."""
    mats = [_matrix(m) for m in matrices]
    if not mats:
        raise ValueError("need at least one expert matrix")
    rows, cols = len(mats[0]), len(mats[0][0])
    for m in mats:
        if len(m) != rows or any(len(r) != cols for r in m):
            raise ValueError("expert matrices differ in shape")
    n = len(mats)
    neutro = any(not as_neutro(e).is_real for m in mats for r in m for e in r)
    lift = as_neutro if neutro else _fraction
    zero = NeutroValue(0) if neutro else Fraction(0)
    return tuple(
        tuple(sum((lift(c) for c in cells), zero) / n for cells in zip(*rs))
        for rs in zip(*mats)
    )


def _forward(state, m, lo, hi):
    if len(state) != len(m):
        raise ValueError(f"state has {len(state)} cells, matrix has {len(m)} rows")
    return tuple(
        reduce(hi, (lo(b, m[i][k]) for i, b in enumerate(state)))
        for k in range(len(m[0]))
    )


def _backward(m, state, lo, hi):
    if m and len(state) != len(m[0]):
        raise ValueError(f"state has {len(state)} cells, matrix has {len(m[0])} columns")
    return tuple(reduce(hi, (lo(e, a) for e, a in zip(row, state))) for row in m)


def maxmin_forward(state, matrix):
    """Component k is max over rows i of min(state[i], M[i][k])."""
    m = _matrix(matrix)
    return _forward(tuple(state), m, min, max)


def maxmin_backward(matrix, state):
    """Component i is max over columns k of min(M[i][k], state[k])."""
    m = _matrix(matrix)
    return _backward(m, tuple(state), min, max)


def _infer(m, seed, mode, side, lo, hi, max_iterations):
    m = tuple(tuple(r) for r in m)
    if mode is None:
        # square matrices iterate forward only; rectangular ones alternate
        mode = MONOPARTITE if m and len(m) == len(m[0]) else BIPARTITE
    values = {v for row in m for v in row} | set(seed)
    if mode == MONOPARTITE:
        n = len(m)
        if any(len(r) != n for r in m):
            raise ValueError("monopartite runs need a square matrix")
        if len(seed) != n:
            raise ValueError(f"seed has {len(seed)} cells, expected {n}")
        cap = max_iterations if max_iterations is not None else (len(values) + 1) ** n

        def step(s):
            nxt = _forward(s, m, lo, hi)
            return nxt, nxt

        trace, raws, k = run_until_recurrence(step, seed, cap)
        return HiddenPattern(seed, None, trace, raws, k, {"mode": mode})
    if mode != BIPARTITE:
        raise ValueError(f"mode must be {MONOPARTITE!r} or {BIPARTITE!r}")
    n, p = len(m), len(m[0])
    cap = max_iterations if max_iterations is not None else (len(values) + 1) ** (n + p)
    if side == DOMAIN:
        if len(seed) != n:
            raise ValueError(f"seed has {len(seed)} cells, expected {n}")
        start = (seed, _forward(seed, m, lo, hi))

        def step(pair):
            b = _backward(m, pair[1], lo, hi)
            a = _forward(b, m, lo, hi)
            return (b, a), (b, a)
    elif side == RANGE:
        if len(seed) != p:
            raise ValueError(f"seed has {len(seed)} cells, expected {p}")
        start = (_backward(m, seed, lo, hi), seed)

        def step(pair):
            a = _forward(pair[0], m, lo, hi)
            b = _backward(m, a, lo, hi)
            return (b, a), (b, a)
    else:
        raise ValueError(f"side must be {DOMAIN!r} or {RANGE!r}")
    trace, raws, k = run_until_recurrence(step, start, cap)
    return HiddenPattern(seed, side, trace, raws, k, {"mode": mode})


def fuzzy_infer(matrix, seed, mode=None, side=DOMAIN, max_iterations=None) -> HiddenPattern:
    """Iterate max-min composition until an exact earlier state recurs.

    No clamping: seeded nodes are free to relax below 1.  ``mode`` defaults
    to monopartite for square matrices and bipartite otherwise.  Bipartite runs
    alternate M^T-side and M-side images and report (rows, columns) pairs.
    """
    m = tuple(tuple(_fraction(e) for e in r) for r in _matrix(matrix))
    seed = tuple(_fraction(x) for x in seed)
    for v in seed:
        if not 0 <= v <= 1:
            raise ValueError(f"fuzzy seed value {v} outside [0, 1]")
    return _infer(m, seed, mode, side, min, max, max_iterations)


def neutro_fuzzy_infer(matrix, seed, mode=None, side=DOMAIN, max_iterations=None) -> HiddenPattern:
    """As fuzzy_infer, with min and max taken in the lexicographic order on a + bI."""
    m = tuple(tuple(as_neutro(e) for e in r) for r in _matrix(matrix))
    seed = tuple(as_neutro(x) for x in seed)
    for v in seed:
        if not (0 <= v.real <= 1 and 0 <= v.indet <= 1):
            raise ValueError(f"seed value {v} outside the N_I closure")
    return _infer(m, seed, mode, side, nv_min, nv_max, max_iterations)


__all__ = [
    "MONOPARTITE", "BIPARTITE", "average_experts", "maxmin_forward", "maxmin_backward",
    "fuzzy_infer", "neutro_fuzzy_infer",
]
