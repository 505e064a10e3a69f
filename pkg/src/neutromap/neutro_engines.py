"""NCM and NRM inference: {-1, 0, 1, I} matrices driving {0, 1, I} states."""

from __future__ import annotations

from .crisp import DOMAIN, RANGE, _matrix
from .dynamics import HiddenPattern, run_until_recurrence
from .models import transpose
from .neutro import ZERO, NeutroValue, TriState, as_neutro, nv_threshold

ON, OFF, INDET = TriState.ON, TriState.OFF, TriState.INDET


def to_tristate(cells):
    out = []
    for c in cells:
        if isinstance(c, TriState):
            out.append(c)
        elif isinstance(c, NeutroValue):
            out.append(TriState.parse(str(c)))
        else:
            out.append(TriState.parse(c))
    return tuple(out)


def _split(matrix):
    """Matrix as rows of (real, indet) pairs, so propagation avoids building scalars."""
    out = []
    for row in _matrix(matrix):
        pairs = []
        for e in row:
            if type(e) is int:
                pairs.append((e, 0))
                continue
            if e == "I":
                pairs.append((0, 1))
                continue
            v = as_neutro(e)
            # whole numbers stay ints: exact, and far cheaper than Fraction sums
            pairs.append(tuple(int(x) if x.denominator == 1 else x for x in (v.real, v.indet)))
        out.append(tuple(pairs))
    return tuple(out)


def _cell_parts(cell):
    if cell is ON:
        return 1, 0
    if cell is OFF:
        return 0, 0
    if cell is INDET:
        return 0, 1
    v = as_neutro(cell)
    return v.real, v.indet


def _propagate(state, split):
    if len(state) != len(split):
        raise ValueError(f"state has {len(state)} cells, matrix has {len(split)} rows")
    ncols = len(split[0]) if split else 0
    real, indet = [0] * ncols, [0] * ncols
    for cell, row in zip(state, split):
        a, b = _cell_parts(cell)
        if not (a or b):
            continue
        for j, (c, d) in enumerate(row):
            # (a + bI)(c + dI) = ac + (ad + bc + bd)I
            real[j] += a * c
            indet[j] += a * d + b * (c + d)
    return tuple(NeutroValue(r, i) for r, i in zip(real, indet))


def ncm_propagate(state, matrix):
    """Raw vector A.N with INDET cells contributing the scalar I."""
    return _propagate(state, _split(matrix))


def _threshold(raw, clamp):
    out = [nv_threshold(v) for v in raw]
    for k in clamp:
        out[k] = ON
    return tuple(out)


def _crisp_seed(seed, n):
    seed = to_tristate(seed)
    if len(seed) != n:
        raise ValueError(f"seed has {len(seed)} cells, expected {n}")
    if INDET in seed:
        raise ValueError("seeds must be crisp: only 0 and 1 may be sent in")
    if ON not in seed:
        raise ValueError("seed must switch on at least one node")
    return seed


def ncm_step(matrix, state, clamp=()):
    return _step(_split(matrix), state, clamp)


def _step(split, state, clamp=()):
    raw = _propagate(state, split)
    return raw, _threshold(raw, clamp)


def ncm_infer(matrix, seed, max_iterations=None) -> HiddenPattern:
    m = _matrix(matrix)
    n = len(m)
    if any(len(r) != n for r in m):
        raise ValueError("NCM matrix must be square")
    seed = _crisp_seed(seed, n)
    clamp = tuple(i for i, c in enumerate(seed) if c is ON)
    cap = max_iterations if max_iterations is not None else 3 ** n + 1
    split = _split(m)
    trace, raws, k = run_until_recurrence(lambda s: _step(split, s, clamp), seed, cap)
    return HiddenPattern(seed, None, trace, raws, k)


def nrm_infer(matrix, seed, side=DOMAIN, max_iterations=None) -> HiddenPattern:
    """Alternate A.N and B.N^T on (domain, range) pairs, clamping the seeded side."""
    m = _split(matrix)
    mt = transpose(m)
    n, p = len(m), len(mt)
    cap = max_iterations if max_iterations is not None else 3 ** (n + p) + 1
    if side == DOMAIN:
        seed = _crisp_seed(seed, n)
        clamp = tuple(i for i, c in enumerate(seed) if c is ON)
        first_raw, b0 = _step(m, seed)
        start = (seed, b0)

        def step(pair):
            raw_a, a = _step(mt, pair[1], clamp)
            raw_b, b = _step(m, a)
            return (raw_a, raw_b), (a, b)
    elif side == RANGE:
        seed = _crisp_seed(seed, p)
        clamp = tuple(i for i, c in enumerate(seed) if c is ON)
        first_raw, a0 = _step(mt, seed)
        start = (a0, seed)

        def step(pair):
            raw_b, b = _step(m, pair[0], clamp)
            raw_a, a = _step(mt, b)
            return (raw_a, raw_b), (a, b)
    else:
        raise ValueError(f"side must be {DOMAIN!r} or {RANGE!r}")
    trace, raws, k = run_until_recurrence(step, start, cap)
    return HiddenPattern(seed, side, trace, raws, k, {"first_raw": first_raw})


def ncm_combine(matrices):
    """Entrywise neutrosophic sum; entries may leave {-1, 0, 1, I}."""
    mats = [_matrix(m) for m in matrices]
    if not mats:
        raise ValueError("nothing to combine")
    shape = (len(mats[0]), len(mats[0][0]))
    for m in mats:
        if len(m) != shape[0] or any(len(r) != shape[1] for r in m):
            raise ValueError("matrices differ in shape")
    return tuple(
        tuple(sum((as_neutro(c) for c in cells), ZERO) for cells in zip(*rows))
        for rows in zip(*mats)
    )
