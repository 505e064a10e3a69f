"""Engine dispatch and one-node-ON surveys over a whole model."""

from __future__ import annotations


from .crisp import DOMAIN, RANGE, fcm_infer, frm_infer
from .models import Model, ModelError
from .multi_expert import BIPARTITE, MONOPARTITE, fuzzy_infer, neutro_fuzzy_infer
from .neutro_engines import ncm_infer, nrm_infer

ENGINES = ("fcm", "ncm", "frm", "nrm", "fuzzy", "nfuzzy")

# which model kinds each engine accepts
_ACCEPTS = {
    "fcm": ("fcm",),
    "ncm": ("ncm", "fcm"),
    "frm": ("frm",),
    "nrm": ("nrm", "frm"),
    "fuzzy": ("fuzzy",),
    "nfuzzy": ("fuzzy-neutrosophic", "fuzzy"),
}
BIPARTITE_ENGINES = ("frm", "nrm")


def check_engine(engine: str, model: Model):
    if engine not in ENGINES:
        raise ValueError(f"unknown engine {engine!r}")
    if model.kind not in _ACCEPTS[engine]:
        raise ValueError(f"engine {engine} cannot run a {model.kind} model")


def default_mode(model: Model) -> str:
    return MONOPARTITE if model.rows == model.cols else BIPARTITE


def run(engine, model: Model, seed, side=DOMAIN, mode=None, max_iterations=None):
    """Dispatch one inference run."""
    check_engine(engine, model)
    if engine == "fcm":
        return fcm_infer(model, seed, max_iterations)
    if engine == "ncm":
        return ncm_infer(model, seed, max_iterations)
    if engine == "frm":
        return frm_infer(model, seed, side, max_iterations)
    if engine == "nrm":
        return nrm_infer(model, seed, side, max_iterations)
    mode = mode or default_mode(model)
    if engine == "fuzzy":
        return fuzzy_infer(model, seed, mode, side, max_iterations)
    return neutro_fuzzy_infer(model, seed, mode, side, max_iterations)


def seed_space(engine, model: Model, side=DOMAIN, mode=None):
    if engine in BIPARTITE_ENGINES or (engine in ("fuzzy", "nfuzzy")
                                       and (mode or default_mode(model)) == BIPARTITE):
        return model.rows if side == DOMAIN else model.cols
    return model.rows


def seed_sides(engine, model: Model, mode=None):
    if engine in BIPARTITE_ENGINES:
        return (DOMAIN, RANGE)
    if engine in ("fuzzy", "nfuzzy") and (mode or default_mode(model)) == BIPARTITE:
        return (DOMAIN, RANGE)
    return (None,)


def enumerate_hidden_patterns(model: Model, engine: str, mode=None, max_iterations=None):
    """One row per single-node seed, per side for bipartite runs.

    Rows are ``(side, label, HiddenPattern)`` in concept order, domain first.
    """
    check_engine(engine, model)
    if not model.matrix:
        raise ModelError("model has no concepts")
    rows = []
    for side in seed_sides(engine, model, mode):
        space = seed_space(engine, model, side or DOMAIN, mode)
        for i, label in enumerate(space.labels):
            seed = [0] * len(space)
            seed[i] = 1
            pattern = run(engine, model, seed, side or DOMAIN, mode, max_iterations)
            rows.append((side, label, pattern))
    return rows
