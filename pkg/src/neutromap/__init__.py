"""Fuzzy and neutrosophic cognitive-map inference, plus sutra arithmetic."""

from .crisp import (
    combine_models,
    fcm_average,
    fcm_combine,
    fcm_infer,
    fcm_step,
    frm_combine,
    frm_infer,
    threshold_update,
)
from .dynamics import FIXED_POINT, LIMIT_CYCLE, HiddenPattern, IterationCapExceeded
from .models import (
    ConceptSpace,
    Model,
    ModelError,
    dump_model,
    load_fixture,
    load_model,
    save_model,
    transpose,
    validate_fixture_catalog,
)
from .multi_expert import (
    average_experts,
    fuzzy_infer,
    maxmin_backward,
    maxmin_forward,
    neutro_fuzzy_infer,
)
from .neutro import (
    I,
    NeutroValue,
    TriState,
    format_scalar,
    nv_add,
    nv_compare,
    nv_mul,
    nv_threshold,
    parse_scalar,
)
from .neutro_engines import ncm_combine, ncm_infer, ncm_propagate, nrm_infer
from .survey import enumerate_hidden_patterns

__version__ = "0.1.0"
