"""JSON manifests: a Gram matrix, named classes, hypothesis flags, budget
overrides and construction plans.

Only integers are accepted as numbers.  Syntax errors carry the line
number; schema errors carry a key path such as ``classes.S1[2]``.

Example::

    {
      "gram": [[0, 1], [1, 0]],
      "classes": {"S": [3, 2]},
      "flags": {"sphere_hypotheses": ["e1", "e2"]},
      "budget": {"max_nodes": 100000}
    }
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from decimal import Decimal
from typing import Any, Dict, Mapping, Optional, Tuple

from .constructions import ConstructionPlan
from .errors import LatticeError, ManifestError
from .lattice import ClassVector, Lattice

_TOP_KEYS = {"gram", "classes", "flags", "budget", "plans"}
_FLAG_KEYS = {"h1_zero", "sphere_hypotheses", "rational_surface"}
_BUDGET_KEYS = {"max_nodes", "max_abs_pairing"}


@dataclass(frozen=True)
class Flags:
    h1_zero: bool = False
    sphere_hypotheses: Tuple[str, ...] = ()
    rational_surface: bool = False


@dataclass(frozen=True)
class Manifest:
    lattice: Lattice
    classes: Dict[str, ClassVector] = field(default_factory=dict)
    flags: Flags = Flags()
    budget: Dict[str, int] = field(default_factory=dict)
    plans: Dict[str, ConstructionPlan] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {
            "gram": [list(r) for r in self.lattice.gram],
            "classes": {k: list(v) for k, v in self.classes.items()},
            "flags": {
                "h1_zero": self.flags.h1_zero,
                "sphere_hypotheses": list(self.flags.sphere_hypotheses),
                "rational_surface": self.flags.rational_surface,
            },
            "budget": dict(self.budget),
        }
        if self.plans:
            out["plans"] = {k: p.to_dict() for k, p in self.plans.items()}
        return out

    def dumps(self) -> str:
        return dump_manifest(self)

    def digest(self) -> str:
        return hashlib.sha256(self.dumps().encode()).hexdigest()

    def resolve(self, ref: str) -> ClassVector:
        """A class by name, or a literal such as ``3,2`` or ``[3, 2]``."""
        if ref in self.classes:
            return self.classes[ref]
        text = ref.strip().strip("[]()")
        try:
            vec = tuple(int(t) for t in text.replace(",", " ").split())
        except ValueError:
            raise ManifestError(f"unknown class {ref!r}", path="classes") from None
        if len(vec) != self.lattice.rank:
            raise ManifestError(
                f"class literal {ref!r} has length {len(vec)}, lattice rank is {self.lattice.rank}"
            )
        return vec


def _reject_constant(name):
    raise ManifestError(f"non-finite number {name} is not allowed")


def _no_duplicates(pairs):
    out = {}
    for k, v in pairs:
        if k in out:
            raise ManifestError(f"duplicate key {k!r}")
        out[k] = v
    return out


def _int(value, path) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        kind = "float" if isinstance(value, Decimal) else type(value).__name__
        raise ManifestError(f"expected an integer, got {kind} {value}", path=path)
    return value


def _bool(value, path) -> bool:
    if not isinstance(value, bool):
        raise ManifestError("expected true or false", path=path)
    return value


def _obj(value, path) -> dict:
    if not isinstance(value, dict):
        raise ManifestError("expected an object", path=path)
    return value


def _int_list(value, path) -> Tuple[int, ...]:
    if not isinstance(value, list):
        raise ManifestError("expected a list of integers", path=path)
    return tuple(_int(v, f"{path}[{i}]") for i, v in enumerate(value))


def _unknown(d, allowed, path):
    extra = sorted(set(d) - allowed)
    if extra:
        raise ManifestError(f"unknown key(s) {', '.join(extra)}", path=path or None)


def parse_manifest(text: str) -> Manifest:
    try:
        data = json.loads(
            text,
            parse_float=Decimal,
            parse_constant=_reject_constant,
            object_pairs_hook=_no_duplicates,
        )
    except json.JSONDecodeError as exc:
        raise ManifestError(exc.msg, line=exc.lineno) from None
    return manifest_from_dict(data)


def manifest_from_dict(data: Mapping[str, Any]) -> Manifest:
    data = _obj(data, "<root>")
    _unknown(data, _TOP_KEYS, "")
    if "gram" not in data:
        raise ManifestError("missing required key", path="gram")
    if not isinstance(data["gram"], list):
        raise ManifestError("expected a list of rows", path="gram")
    gram = tuple(_int_list(row, f"gram[{i}]") for i, row in enumerate(data["gram"]))
    try:
        lat = Lattice(gram)
    except LatticeError as exc:
        raise ManifestError(str(exc), path="gram") from None

    classes = {}
    for name, vec in _obj(data.get("classes", {}), "classes").items():
        v = _int_list(vec, f"classes.{name}")
        if len(v) != lat.rank:
            raise ManifestError(f"length {len(v)} does not match rank {lat.rank}", path=f"classes.{name}")
        classes[name] = v

    fd = _obj(data.get("flags", {}), "flags")
    _unknown(fd, _FLAG_KEYS, "flags")
    spheres = fd.get("sphere_hypotheses", [])
    if not isinstance(spheres, list) or not all(isinstance(s, str) for s in spheres):
        raise ManifestError("expected a list of class names", path="flags.sphere_hypotheses")
    for i, s in enumerate(spheres):
        if s not in classes:
            raise ManifestError(f"unknown class {s!r}", path=f"flags.sphere_hypotheses[{i}]")
    flags = Flags(
        _bool(fd.get("h1_zero", False), "flags.h1_zero"),
        tuple(spheres),
        _bool(fd.get("rational_surface", False), "flags.rational_surface"),
    )

    bd = _obj(data.get("budget", {}), "budget")
    _unknown(bd, _BUDGET_KEYS, "budget")
    budget = {}
    for k, v in bd.items():
        v = _int(v, f"budget.{k}")
        if v <= 0:
            raise ManifestError("must be positive", path=f"budget.{k}")
        budget[k] = v

    plans = {}
    for name, pd in _obj(data.get("plans", {}), "plans").items():
        path = f"plans.{name}"
        pd = _obj(pd, path)
        _unknown(pd, {"components", "intersections"}, path)
        comps = pd.get("components")
        inter = pd.get("intersections")
        if not isinstance(comps, list) or not isinstance(inter, list):
            raise ManifestError("needs 'components' and 'intersections' lists", path=path)
        comps = [_int_list(c, f"{path}.components[{i}]") for i, c in enumerate(comps)]
        inter = [_int_list(r, f"{path}.intersections[{i}]") for i, r in enumerate(inter)]
        if any(len(c) != 2 for c in comps):
            raise ManifestError("each component is [genus, copies]", path=f"{path}.components")
        try:
            plans[name] = ConstructionPlan(tuple(comps), tuple(inter))
        except ValueError as exc:
            raise ManifestError(str(exc), path=path) from None

    return Manifest(lat, classes, flags, budget, plans)


def dump_manifest(m: Manifest) -> str:
    """Canonical text: sorted keys, two-space indent, trailing newline."""
    return json.dumps(m.to_dict(), sort_keys=True, indent=2) + "\n"


def load_manifest(path: str, stdin=None) -> Manifest:
    if path == "-":
        import sys

        return parse_manifest((stdin or sys.stdin).read())
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ManifestError(f"cannot read manifest: {exc.strerror}", path=path) from None
    return parse_manifest(text)


def simple_manifest(gram, classes: Optional[Mapping[str, Any]] = None, **flags) -> Manifest:
    """Build a manifest in code, mostly for tests and demos."""
    data: Dict[str, Any] = {"gram": [list(r) for r in gram], "classes": {k: list(v) for k, v in (classes or {}).items()}}
    if flags:
        data["flags"] = {k: (list(v) if isinstance(v, tuple) else v) for k, v in flags.items()}
    return manifest_from_dict(data)
