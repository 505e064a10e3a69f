"""FCM and FRM hidden-pattern inference over {0, 1} state vectors."""

from __future__ import annotations

from fractions import Fraction

from .dynamics import HiddenPattern, run_until_recurrence
from .models import ConceptSpace, Model, ModelError, transpose

DOMAIN, RANGE = "domain", "range"


def _vecmat(state, matrix):
    if len(state) != len(matrix):
        raise ValueError(f"state has {len(state)} cells, matrix has {len(matrix)} rows")
    ncols = len(matrix[0]) if matrix else 0
    out = [0] * ncols
    for a, row in zip(state, matrix):
        if a:
            for j, e in enumerate(row):
                if e:
                    out[j] += a * e
    return tuple(out)


def threshold_update(raw, clamp=()):
    """Positive entries become 1, everything else 0; clamp indices are forced on."""
    out = [1 if v > 0 else 0 for v in raw]
    for k in clamp:
        if not 0 <= k < len(out):
            raise IndexError(f"clamp index {k} out of range")
        out[k] = 1
    return tuple(out)


def _matrix(E):
    return E.matrix if isinstance(E, Model) else tuple(tuple(r) for r in E)


def _check_seed(seed, n):
    seed = tuple(int(b) for b in seed)
    if len(seed) != n:
        raise ValueError(f"seed has {len(seed)} cells, expected {n}")
    if any(b not in (0, 1) for b in seed):
        raise ValueError("crisp seeds hold only 0 and 1")
    if not any(seed):
        raise ValueError("seed must switch on at least one node")
    return seed


def fcm_step(E, state, clamp=()):
    """One pass: returns ``(raw, next_state)``."""
    raw = _vecmat(state, _matrix(E))
    return raw, threshold_update(raw, clamp)


def fcm_infer(E, seed, max_iterations=None) -> HiddenPattern:
    m = _matrix(E)
    n = len(m)
    if any(len(r) != n for r in m):
        raise ValueError("FCM matrix must be square")
    seed = _check_seed(seed, n)
    clamp = tuple(i for i, b in enumerate(seed) if b)
    cap = max_iterations if max_iterations is not None else 2 ** n + 1
    trace, raws, start = run_until_recurrence(lambda s: fcm_step(m, s, clamp), seed, cap)
    return HiddenPattern(seed, None, trace, raws, start)


def frm_infer(E, seed, side=DOMAIN, max_iterations=None) -> HiddenPattern:
    """Alternate through E and its transpose; states are (domain, range) pairs.

    Only the seeded side is clamped.
    """
    m = _matrix(E)
    mt = transpose(m)
    n, p = len(m), len(mt)
    cap = max_iterations if max_iterations is not None else 2 ** (n + p) + 1
    if side == DOMAIN:
        seed = _check_seed(seed, n)
        clamp = tuple(i for i, b in enumerate(seed) if b)
        first_raw, b0 = fcm_step(m, seed)
        start = (seed, b0)

        def step(pair):
            raw_a, a = fcm_step(mt, pair[1], clamp)
            raw_b, b = fcm_step(m, a)
            return (raw_a, raw_b), (a, b)
    elif side == RANGE:
        seed = _check_seed(seed, p)
        clamp = tuple(i for i, b in enumerate(seed) if b)
        first_raw, a0 = fcm_step(mt, seed)
        start = (a0, seed)

        def step(pair):
            raw_b, b = fcm_step(m, pair[0], clamp)
            raw_a, a = fcm_step(mt, b)
            return (raw_a, raw_b), (a, b)
    else:
        raise ValueError(f"side must be {DOMAIN!r} or {RANGE!r}")
    trace, raws, k = run_until_recurrence(step, start, cap)
    return HiddenPattern(seed, side, trace, raws, k, {"first_raw": first_raw})


def _sum(matrices, square):
    mats = [_matrix(m) for m in matrices]
    if not mats:
        raise ValueError("nothing to combine")
    shape = (len(mats[0]), len(mats[0][0]) if mats[0] else 0)
    for m in mats:
        if (len(m), len(m[0]) if m else 0) != shape or any(len(r) != shape[1] for r in m):
            raise ValueError("matrices differ in shape")
    if square and shape[0] != shape[1]:
        raise ValueError("FCM matrices must be square")
    labels = [m for m in matrices if isinstance(m, Model)]
    if labels and any((x.rows, x.cols) != (labels[0].rows, labels[0].cols) for x in labels):
        raise ValueError("matrices use different concept orders")
    return tuple(tuple(sum(cells) for cells in zip(*rows)) for rows in zip(*mats)), len(mats)


def fcm_combine(matrices):
    """Entrywise integer sum of expert adjacency matrices."""
    return _sum(matrices, square=True)[0]


def frm_combine(matrices):
    return _sum(matrices, square=False)[0]


def fcm_average(matrices):
    """Sum divided by the number of experts, as exact fractions in [0, 1]."""
    total, count = _sum(matrices, square=False)
    out = []
    for i, row in enumerate(total):
        for j, v in enumerate(row):
            if v < 0:
                raise ModelError("aggregate weight is negative; the mean leaves [0, 1]", i, j)
        out.append(tuple(Fraction(v, count) for v in row))
    return tuple(out)


def combine_models(models, mode="sum") -> Model:
    """Sum or average a homogeneous list of models into a new Model."""
    models = list(models)
    if not models:
        raise ModelError("no models to combine")
    first = models[0]
    for m in models[1:]:
        if m.kind != first.kind:
            raise ModelError(f"cannot combine {first.kind} with {m.kind}")
        if (m.rows, m.cols) != (first.rows, first.cols):
            raise ModelError("models use different concept spaces")
    if mode == "sum":
        if first.kind in ("fcm", "frm"):
            matrix = _sum(models, square=False)[0]
        elif first.kind in ("ncm", "nrm"):
            from .neutro_engines import ncm_combine
            matrix = ncm_combine(models)
        else:
            raise ModelError(f"summing {first.kind} models is not defined; use average")
        return Model(first.kind, first.rows, first.cols, matrix, True, {})
    if mode == "average":
        from .multi_expert import average_experts
        if first.kind in ("fcm", "frm"):
            try:
                matrix = fcm_average(models)
            except ValueError as exc:
                raise ModelError(str(exc)) from None
            return Model("fuzzy", first.rows, first.cols, matrix, False, {})
        if first.kind in ("fuzzy", "fuzzy-neutrosophic"):
            return Model(first.kind, first.rows, first.cols, average_experts(models), False, {})
        raise ModelError(f"averaging {first.kind} models is not supported")
    raise ModelError(f"unknown combine mode {mode!r}")


def unit_seeds(space: ConceptSpace):
    n = len(space)
    for i in range(n):
        yield space.labels[i], tuple(1 if j == i else 0 for j in range(n))
