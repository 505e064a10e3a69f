"""Concept spaces, model documents and the bundled fixture catalog."""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path

from .neutro import NeutroValue, format_rational, format_scalar, parse_scalar

KINDS = ("fcm", "frm", "ncm", "nrm", "fuzzy", "fuzzy-neutrosophic")
SQUARE_KINDS = ("fcm", "ncm")
NEUTRO_KINDS = ("ncm", "nrm", "fuzzy-neutrosophic")
FIXTURE_ENV = "NEUTROMAP_FIXTURES"


class ModelError(ValueError):
    """A model document failed validation."""

    def __init__(self, message, row=None, col=None):
        self.row, self.col = row, col
        if row is not None:
            where = f"row {row + 1}" + (f", column {col + 1}" if col is not None else "")
            message = f"{where}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class ConceptSpace:
    labels: tuple

    def __post_init__(self):
        labels = tuple(self.labels)
        object.__setattr__(self, "labels", labels)
        if not labels:
            raise ModelError("concept space is empty")
        for lab in labels:
            if not isinstance(lab, str) or not lab:
                raise ModelError(f"concept labels must be non-empty strings, got {lab!r}")
        if len(set(labels)) != len(labels):
            raise ModelError("concept labels are not unique")

    def __len__(self):
        return len(self.labels)

    def index(self, ref) -> int:
        """Resolve a label or a 1-based index (int or digit string) to a 0-based index."""
        if isinstance(ref, str) and ref in self.labels:
            return self.labels.index(ref)
        try:
            k = int(ref)
        except (TypeError, ValueError):
            raise KeyError(f"unknown concept {ref!r}") from None
        if not 1 <= k <= len(self.labels):
            raise KeyError(f"concept index {k} out of range 1..{len(self.labels)}")
        return k - 1


@dataclass(frozen=True)
class Model:
    """A validated map.  ``matrix`` is a tuple of row tuples.

    Entry types follow the kind: ``int`` for fcm/frm, ``Fraction`` for fuzzy,
    ``NeutroValue`` for the neutrosophic kinds.
    """

    kind: str
    rows: ConceptSpace
    cols: ConceptSpace
    matrix: tuple
    combined: bool = False
    meta: dict = field(default_factory=dict, compare=False)

    @property
    def shape(self):
        return len(self.rows), len(self.cols)

    @property
    def square(self) -> bool:
        return self.kind in SQUARE_KINDS

    def transpose(self) -> "Model":
        return Model(self.kind, self.cols, self.rows, transpose(self.matrix),
                     self.combined, dict(self.meta))


def transpose(matrix):
    return tuple(zip(*matrix)) if matrix else ()


def _entry(kind, raw, combined, r, c):
    try:
        value = parse_scalar(raw)
    except (ValueError, TypeError) as exc:
        raise ModelError(f"unreadable entry {raw!r} ({exc})", r, c) from None
    if kind in ("fcm", "frm"):
        if not value.is_real or value.real.denominator != 1:
            raise ModelError(f"entry {raw!r} is not an integer weight", r, c)
        v = int(value.real)
        if not combined and v not in (-1, 0, 1):
            raise ModelError(f"entry {raw!r} outside {{-1, 0, 1}}", r, c)
        return v
    if kind in ("ncm", "nrm"):
        if combined:
            if value.real.denominator != 1 or value.indet.denominator != 1:
                raise ModelError(f"entry {raw!r} needs integer components", r, c)
        elif value not in (NeutroValue(-1), NeutroValue(0), NeutroValue(1), NeutroValue(0, 1)):
            raise ModelError(f"entry {raw!r} outside {{-1, 0, 1, I}}", r, c)
        return value
    if kind == "fuzzy":
        if not value.is_real or not 0 <= value.real <= 1:
            raise ModelError(f"entry {raw!r} outside [0, 1]", r, c)
        return value.real
    # fuzzy-neutrosophic: a + bI with both parts in [0, 1]
    if not (0 <= value.real <= 1 and 0 <= value.indet <= 1):
        raise ModelError(f"entry {raw!r} outside the N_I closure", r, c)
    return value


def load_model(document) -> Model:
    """Validate a model document (dict, JSON text or path) into a Model."""
    if isinstance(document, Path):
        document = document.read_text()
    if isinstance(document, (str, bytes)):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as exc:
            raise ModelError(f"not valid JSON: {exc}") from None
    if not isinstance(document, dict):
        raise ModelError("model document must be a JSON object")

    kind = document.get("kind")
    if kind not in KINDS:
        raise ModelError(f"kind must be one of {', '.join(KINDS)}; got {kind!r}")
    combined = document.get("combined", False)
    if not isinstance(combined, bool):
        raise ModelError("combined must be a boolean")
    meta = document.get("meta", {})
    if not isinstance(meta, dict):
        raise ModelError("meta must be an object")
    unknown = set(document) - {"kind", "row_concepts", "col_concepts", "matrix", "combined", "meta"}
    if unknown:
        raise ModelError(f"unknown fields: {', '.join(sorted(unknown))}")

    row_labels = document.get("row_concepts")
    if not isinstance(row_labels, list):
        raise ModelError("row_concepts must be a list")
    rows = ConceptSpace(row_labels)
    col_labels = document.get("col_concepts")
    if col_labels is None:
        cols = rows
    else:
        if not isinstance(col_labels, list):
            raise ModelError("col_concepts must be a list")
        cols = ConceptSpace(col_labels)
    if kind in SQUARE_KINDS and cols.labels != rows.labels:
        raise ModelError(f"{kind} models are square over one concept space")

    grid = document.get("matrix")
    if not isinstance(grid, list) or len(grid) != len(rows):
        raise ModelError(f"matrix must have {len(rows)} rows")
    matrix = []
    for r, row in enumerate(grid):
        if not isinstance(row, list) or len(row) != len(cols):
            got = len(row) if isinstance(row, list) else "no"
            raise ModelError(f"expected {len(cols)} entries, got {got}", r)
        out = []
        for c, raw in enumerate(row):
            v = _entry(kind, raw, combined, r, c)
            if kind in SQUARE_KINDS and r == c and v != 0:
                raise ModelError("diagonal entry must be zero", r, c)
            out.append(v)
        matrix.append(tuple(out))
    return Model(kind, rows, cols, tuple(matrix), combined, meta)


def format_entry(v):
    """JSON form of an entry: integers stay numbers, everything else a scalar string."""
    if isinstance(v, NeutroValue):
        if v.is_real and v.real.denominator == 1:
            return int(v.real)
        return format_scalar(v)
    if isinstance(v, Fraction) and v.denominator != 1:
        return format_rational(v)
    return int(v)


def model_to_dict(model: Model) -> dict:
    doc = {"kind": model.kind, "row_concepts": list(model.rows.labels)}
    if not model.square:
        doc["col_concepts"] = list(model.cols.labels)
    doc["matrix"] = [[format_entry(v) for v in row] for row in model.matrix]
    if model.combined:
        doc["combined"] = True
    if model.meta:
        doc["meta"] = model.meta
    return doc


def dump_model(model: Model) -> str:
    """Serialize with one matrix row per line, so fixture files stay readable."""
    doc = model_to_dict(model)
    grid = doc.pop("matrix")
    head = json.dumps(doc, indent=2, ensure_ascii=False)
    rows = ",\n".join("    " + json.dumps(row, ensure_ascii=False) for row in grid)
    matrix = '"matrix": [\n' + rows + "\n  ]"
    # splice the matrix in before the closing brace
    return head[:-2] + ",\n  " + matrix + "\n}\n"


def save_model(model: Model, path) -> None:
    Path(path).write_text(dump_model(model), encoding="utf-8")


def fixture_dir() -> Path:
    override = os.environ.get(FIXTURE_ENV)
    if override:
        return Path(override)
    return Path(str(resources.files("neutromap") / "fixtures"))


def fixture_names() -> list:
    return sorted(p.stem for p in fixture_dir().glob("*.json"))


def load_fixture(name: str) -> Model:
    path = fixture_dir() / f"{name}.json"
    if not path.is_file():
        raise FileNotFoundError(f"no fixture named {name!r} in {fixture_dir()}")
    return load_model(path.read_text(encoding="utf-8"))


def resolve_model(ref: str) -> Model:
    """Load a model from a file path, falling back to a fixture name."""
    path = Path(ref)
    if path.is_file():
        return load_model(path.read_text(encoding="utf-8"))
    return load_fixture(ref)


def validate_fixture_catalog() -> list:
    """Load every bundled fixture; returns (name, kind, rows, cols) tuples.

    Any failure propagates as ModelError naming the fixture.
    """
    report = []
    for name in fixture_names():
        try:
            m = load_fixture(name)
        except ModelError as exc:
            raise ModelError(f"fixture {name}: {exc}") from None
        report.append((name, m.kind, *m.shape))
    return report
