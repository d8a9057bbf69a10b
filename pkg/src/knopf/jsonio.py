"""JSON loading and canonical serialization for the command-line front door.

Input formats:
  Hopf algebra: {"field": "Q"|{"Fp": p}, "dim": n, "basis": [...],
                 "unit": [...], "counit": [...],
                 "mult": [[i, j, k, coeff], ...], "comult": [...],
                 "antipode": optional row-major matrix}
  Group scheme: {"coordinate_ring": <hopf object>, "label": optional}
  Comodule:     {"scheme": <inline scheme or file path>, "dim": n,
                 "coaction": [[i, j, [gamma coefficients]], ...]}
  Constant group shorthand: {"constant_group": {"matrices": [...],
                 "field": optional, "var_labels": optional}}

Scalars are integers, or strings like "2/3" for rationals.  Output JSON is
canonical: sorted keys, fixed separators, byte-deterministic.
"""

from __future__ import annotations

import json
import os
from fractions import Fraction

from . import action as act
from .errors import InputError
from .exactalg import FieldSpec
from .gscheme import FiniteGroupScheme
from .hopf import HopfAlgebraData


def parse_field(spec) -> FieldSpec:
    """Accepts "Q", "Fp:<p>", or the JSON form {"Fp": p}."""
    if isinstance(spec, FieldSpec):
        return spec
    if spec == "Q":
        return FieldSpec.rationals()
    if isinstance(spec, str) and spec.startswith("Fp:"):
        try:
            return FieldSpec.prime(int(spec[3:]))
        except ValueError:
            raise InputError(f"bad field spec {spec!r}; use Q or Fp:<prime>")
    if isinstance(spec, dict) and set(spec) == {"Fp"}:
        return FieldSpec.prime(int(spec["Fp"]))
    raise InputError(f"bad field spec {spec!r}; use \"Q\" or {{\"Fp\": p}}")


def field_to_json(field: FieldSpec):
    return "Q" if field.p is None else {"Fp": field.p}


def load_json(path: str):
    try:
        with open(path) as fh:
            return json.load(fh)
    except FileNotFoundError:
        raise InputError(f"no such file: {path}")
    except json.JSONDecodeError as e:
        raise InputError(
            f"malformed JSON in {path} at line {e.lineno}, column {e.colno}: "
            f"{e.msg}"
        )


def _require(obj: dict, key: str, where: str):
    if key not in obj:
        raise InputError(f"{where}: missing required key {key!r}")
    return obj[key]


def _scalar(field: FieldSpec, v):
    if isinstance(v, str):
        try:
            v = Fraction(v)
        except (ValueError, ZeroDivisionError):
            raise InputError(f"bad scalar {v!r}")
    return field.coerce(v)


def _dense3(field: FieldSpec, triples, n: int, what: str):
    out = field.zeros((n, n, n))
    for entry in triples:
        if len(entry) != 4:
            raise InputError(f"{what}: entries must be [i, j, k, coeff]")
        i, j, k, c = entry
        for idx in (i, j, k):
            if not isinstance(idx, int) or not 0 <= idx < n:
                raise InputError(f"{what}: index {idx!r} out of range 0..{n-1}")
        out[i, j, k] = _scalar(field, c)
    return out


def hopf_from_json(obj: dict, field_override: FieldSpec | None = None) -> HopfAlgebraData:
    if not isinstance(obj, dict):
        raise InputError("hopf algebra: expected a JSON object")
    field = field_override or parse_field(_require(obj, "field", "hopf algebra"))
    n = _require(obj, "dim", "hopf algebra")
    basis = _require(obj, "basis", "hopf algebra")
    if not isinstance(n, int) or n < 1 or len(basis) != n:
        raise InputError("hopf algebra: dim must match the basis length")
    unit = [_scalar(field, v) for v in _require(obj, "unit", "hopf algebra")]
    counit = [_scalar(field, v) for v in _require(obj, "counit", "hopf algebra")]
    if len(unit) != n or len(counit) != n:
        raise InputError("hopf algebra: unit/counit length must equal dim")
    mult = _dense3(field, _require(obj, "mult", "hopf algebra"), n, "mult")
    comult = _dense3(field, _require(obj, "comult", "hopf algebra"), n, "comult")
    antipode = None
    if obj.get("antipode") is not None:
        rows = obj["antipode"]
        if len(rows) != n or any(len(r) != n for r in rows):
            raise InputError("antipode must be an n x n matrix")
        antipode = [[_scalar(field, v) for v in row] for row in rows]
    return HopfAlgebraData(field, [str(b) for b in basis], unit, mult,
                           counit=counit, comult=comult, antipode=antipode)


def _fmt_scalar(field: FieldSpec, v):
    return int(v) if field.p is not None else str(v)


def _sparse3(field: FieldSpec, arr):
    n = arr.shape[0]
    out = []
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if arr[i, j, k]:
                    out.append([i, j, k, _fmt_scalar(field, arr[i, j, k])])
    return out


def hopf_to_json(h: HopfAlgebraData) -> dict:
    f = h.field
    out = {
        "field": field_to_json(f),
        "dim": h.dim,
        "basis": list(h.basis),
        "unit": [_fmt_scalar(f, v) for v in h.unit],
        "counit": [_fmt_scalar(f, v) for v in h.counit],
        "mult": _sparse3(f, h.mult),
        "comult": _sparse3(f, h.comult),
    }
    if h.antipode is not None:
        out["antipode"] = [
            [_fmt_scalar(f, v) for v in row] for row in h.antipode
        ]
    return out


def scheme_from_json(obj, field_override: FieldSpec | None = None,
                     base_dir: str = ".") -> FiniteGroupScheme:
    if isinstance(obj, str):
        obj = load_json(os.path.join(base_dir, obj))
    if not isinstance(obj, dict):
        raise InputError("group scheme: expected a JSON object or file path")
    ring = _require(obj, "coordinate_ring", "group scheme")
    gamma = hopf_from_json(ring, field_override)
    return FiniteGroupScheme(gamma, label=obj.get("label"))


def scheme_to_json(scheme: FiniteGroupScheme) -> dict:
    out = {"coordinate_ring": hopf_to_json(scheme.gamma)}
    if scheme.label:
        out["label"] = scheme.label
    return out


def comodule_from_json(obj: dict, scheme: FiniteGroupScheme | None = None,
                       field_override: FieldSpec | None = None,
                       base_dir: str = ".") -> act.Comodule:
    if not isinstance(obj, dict):
        raise InputError("comodule: expected a JSON object")
    if scheme is None:
        if "scheme" not in obj:
            raise InputError(
                "comodule: no scheme given inline and none supplied separately"
            )
        scheme = scheme_from_json(obj["scheme"], field_override, base_dir)
    n = _require(obj, "dim", "comodule")
    f = scheme.field
    coact = f.zeros((n, n, scheme.order))
    for entry in _require(obj, "coaction", "comodule"):
        if len(entry) != 3:
            raise InputError("coaction entries must be [i, j, [coefficients]]")
        i, j, coeffs = entry
        if not (0 <= i < n and 0 <= j < n):
            raise InputError(f"coaction index ({i},{j}) out of range")
        if len(coeffs) != scheme.order:
            raise InputError(
                f"coaction entry ({i},{j}): expected {scheme.order} coefficients"
            )
        for t, c in enumerate(coeffs):
            coact[i, j, t] = _scalar(f, c)
    labels = obj.get("labels")
    return act.Comodule(scheme, coact, labels=labels)


def comodule_to_json(module: act.Comodule, scheme_ref: str | None = None) -> dict:
    """Serialize a comodule; scheme_ref (a file path) replaces the inline scheme."""
    f = module.scheme.field
    coaction = []
    n = module.dim
    for i in range(n):
        for j in range(n):
            col = module.coaction[i, j]
            if not col.any():
                continue
            coaction.append([i, j, [_fmt_scalar(f, v) for v in col]])
    out = {
        "scheme": scheme_ref if scheme_ref else scheme_to_json(module.scheme),
        "dim": n,
        "coaction": coaction,
    }
    if module.labels:
        out["labels"] = list(module.labels)
    return out


def action_from_json(obj: dict, scheme: FiniteGroupScheme | None = None,
                     field_override: FieldSpec | None = None,
                     base_dir: str = ".") -> act.GradedInvariantRing:
    """A graded invariant ring from either comodule JSON or the constant-group
    shorthand {"constant_group": {"matrices": [...]}}."""
    if isinstance(obj, dict) and "constant_group" in obj:
        cg = obj["constant_group"]
        mats = _require(cg, "matrices", "constant_group")
        field = field_override or (
            parse_field(cg["field"]) if "field" in cg else FieldSpec.rationals()
        )
        parsed = [
            [[_scalar(field, v) for v in row] for row in m] for m in mats
        ]
        return act.constant_group_action(
            field, parsed,
            var_labels=cg.get("var_labels"), label=obj.get("label"),
        )
    module = comodule_from_json(obj, scheme, field_override, base_dir)
    return act.GradedInvariantRing(module, label=obj.get("label"),
                                   var_labels=obj.get("var_labels"))


def canonical_json(payload) -> str:
    """Stable serialization: sorted keys, fixed separators, trailing newline."""
    return json.dumps(payload, sort_keys=True, indent=2,
                      separators=(",", ": "), ensure_ascii=True) + "\n"
