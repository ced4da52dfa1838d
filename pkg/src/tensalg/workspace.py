"""Label-referencing JSON documents for quantales, modules, frames and
operator modules.

Tables reference element labels rather than indices so files survive
reordering and stay diffable.  Objects are validated as they load; the
first failure aborts the load with the validator's witness.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import (ParseError, SizeLimitExceeded, TensalgError,
                     UnknownReference, ValidationError)
from .frames import VFrame, validate_frame
from .fsemilattice import FSemilattice, validate_fsemilattice
from .lattice import FinLattice, validate_lattice
from .limits import max_carrier
from .quantale import Quantale, validate_quantale
from .vmodule import VModule, validate_module


@dataclass
class Workspace:
    quantales: dict[str, Quantale] = field(default_factory=dict)
    modules: dict[str, VModule] = field(default_factory=dict)
    frames: dict[str, VFrame] = field(default_factory=dict)
    fsemilattices: dict[str, FSemilattice] = field(default_factory=dict)

    def quantale(self, name: str) -> Quantale:
        return _lookup(self.quantales, name, "quantale")

    def module(self, name: str) -> VModule:
        return _lookup(self.modules, name, "module")

    def frame(self, name: str) -> VFrame:
        return _lookup(self.frames, name, "frame")

    def fsemilattice(self, name: str) -> FSemilattice:
        return _lookup(self.fsemilattices, name, "fsemilattice")


def _lookup(table: dict, name: str, kind: str):
    if name not in table:
        raise UnknownReference(f"no {kind} named {name!r}", witness=name)
    return table[name]


def _index_map(labels, context: str) -> dict[str, int]:
    out = {}
    for i, lab in enumerate(labels):
        if lab in out:
            raise ParseError(f"duplicate label {lab!r} in {context}",
                             witness=lab)
        out[lab] = i
    return out


def _element(index: dict[str, int], label, context: str) -> int:
    if label not in index:
        raise UnknownReference(f"{context}: unknown element {label!r}",
                               witness=label)
    return index[label]


def _table(index: dict[str, int], rows, context: str) -> list[list[int]]:
    return [[_element(index, v, context) for v in row] for row in rows]


def _need(entry: dict, key: str, context: str):
    if key not in entry:
        raise ParseError(f"{context} is missing {key!r}", witness=key)
    return entry[key]


def _load_lattice(entry: dict, context: str, cap: int | None) -> FinLattice:
    labels = _need(entry, "elements", context)
    limit = max_carrier(cap)
    if len(labels) > limit:
        raise SizeLimitExceeded(
            f"{context} has {len(labels)} elements, cap is {limit}",
            witness=len(labels))
    return validate_lattice(labels, _need(entry, "leq", context))


def loads(text: str, cap: int | None = None) -> Workspace:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON at line {e.lineno}, column {e.colno}: "
                         f"{e.msg}", witness=(e.lineno, e.colno)) from e
    if not isinstance(doc, dict):
        raise ParseError("top level must be an object", witness=type(doc))
    ws = Workspace()

    for entry in doc.get("quantales", ()):
        name = _need(entry, "name", "quantale")
        context = f"quantale {name!r}"
        if name in ws.quantales:
            raise ParseError(f"duplicate {context}", witness=name)
        lat = _wrap(context, _load_lattice, entry, context, cap)
        index = _index_map(lat.labels, context)
        tensor = _table(index, _need(entry, "tensor", context), context)
        unit = _element(index, _need(entry, "unit", context), context)
        ws.quantales[name] = _wrap(context, validate_quantale,
                                   lat, tensor, unit, name)

    for entry in doc.get("modules", ()):
        name = _need(entry, "name", "module")
        context = f"module {name!r}"
        if name in ws.modules:
            raise ParseError(f"duplicate {context}", witness=name)
        q = ws.quantale(_need(entry, "quantale", context))
        lat = _wrap(context, _load_lattice, entry, context, cap)
        index = _index_map(lat.labels, context)
        action = _table(index, _need(entry, "action", context), context)
        ws.modules[name] = _wrap(context, validate_module,
                                 q, lat, action, name)

    for entry in doc.get("frames", ()):
        name = _need(entry, "name", "frame")
        context = f"frame {name!r}"
        if name in ws.frames:
            raise ParseError(f"duplicate {context}", witness=name)
        q = ws.quantale(_need(entry, "quantale", context))
        vindex = _index_map(q.labels, f"{context} base")
        points = _need(entry, "points", context)
        r = _table(vindex, _need(entry, "r", context), context)
        ws.frames[name] = _wrap(context, validate_frame, q, points, r, name)

    for entry in doc.get("fsemilattices", ()):
        name = _need(entry, "name", "fsemilattice")
        context = f"fsemilattice {name!r}"
        if name in ws.fsemilattices:
            raise ParseError(f"duplicate {context}", witness=name)
        mod = ws.module(_need(entry, "module", context))
        index = _index_map(mod.labels, f"{context} carrier")
        F = [_element(index, v, context)
             for v in _need(entry, "F", context)]
        ws.fsemilattices[name] = _wrap(context, validate_fsemilattice,
                                       mod, F, name)
    return ws


def _wrap(context: str, fn, *args):
    """Turn a validator failure into a load error carrying its witness."""
    try:
        return fn(*args)
    except (ParseError, UnknownReference, SizeLimitExceeded):
        raise
    except TensalgError as e:
        raise ValidationError(f"{context}: {e}", witness=e.witness) from e


def load(path: str, cap: int | None = None) -> Workspace:
    with open(path, "r", encoding="utf-8") as fh:
        return loads(fh.read(), cap=cap)


# serialization ---------------------------------------------------------------

def _leq_rows(lat: FinLattice) -> list[list[int]]:
    return [[1 if lat.leq(a, b) else 0 for b in range(lat.n)]
            for a in range(lat.n)]


def quantale_entry(q: Quantale) -> dict:
    labels = list(q.labels)
    return {
        "name": q.name,
        "elements": labels,
        "leq": _leq_rows(q.lattice),
        "tensor": [[labels[v] for v in row] for row in q.tensor],
        "unit": labels[q.unit],
    }


def module_entry(m: VModule) -> dict:
    labels = list(m.labels)
    return {
        "name": m.name,
        "quantale": m.quantale.name,
        "elements": labels,
        "leq": _leq_rows(m.carrier),
        "action": [[labels[m.act(v, a)] for a in range(m.n)]
                   for v in range(m.quantale.n)],
    }


def frame_entry(f: VFrame) -> dict:
    vlabels = f.quantale.labels
    return {
        "name": f.name,
        "quantale": f.quantale.name,
        "points": list(f.points),
        "r": [[vlabels[v] for v in row] for row in f.r],
    }


def fsemilattice_entry(fsl: FSemilattice) -> dict:
    labels = fsl.module.labels
    return {
        "name": fsl.name,
        "module": fsl.module.name,
        "F": [labels[v] for v in fsl.F],
    }


def document(quantales=(), modules=(), frames=(),
             fsemilattices=()) -> dict:
    doc: dict = {}
    if quantales:
        doc["quantales"] = [quantale_entry(q) for q in quantales]
    if modules:
        doc["modules"] = [module_entry(m) for m in modules]
    if frames:
        doc["frames"] = [frame_entry(f) for f in frames]
    if fsemilattices:
        doc["fsemilattices"] = [fsemilattice_entry(s)
                                for s in fsemilattices]
    return doc


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


def save(path: str, doc: dict):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(doc))
