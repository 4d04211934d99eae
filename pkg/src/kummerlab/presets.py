"""Named surfaces: parameters, field, parameter bindings and symmetry generators."""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from importlib import resources
from math import lcm
from pathlib import Path

from . import tables
from .exactnum import FieldDescriptor
from .kummer import KummerParams, KummerSurface, build_surface, family_nodes, family_tropes
from .polygeom import ProjTransform


class PresetError(ValueError):
    pass


@dataclass
class Preset:
    name: str
    description: str
    desc: FieldDescriptor
    bindings: dict
    params_text: dict
    family: str | None = None
    aut_generators: list = field(default_factory=list)
    node_symmetries: list = field(default_factory=list)
    claims: dict = field(default_factory=dict)

    def params(self) -> KummerParams:
        return KummerParams.parse(self.params_text, self.desc, self.bindings)

    def surface(self) -> KummerSurface:
        return build_surface(self.params())

    def generators(self, names=None) -> dict:
        names = self.aut_generators if names is None else names
        out = {}
        for name in names:
            if name not in tables.MATRICES:
                raise PresetError(f"unknown matrix {name!r}")
            out[name] = ProjTransform.parse(tables.MATRICES[name], self.matrix_field(name))
        order = max(g.desc.n for g in out.values()) if out else self.desc.n
        return {k: _embed(g, self.desc.with_order(order)) for k, g in out.items()}

    def matrix_field(self, name: str) -> FieldDescriptor:
        """Field for parsing a named matrix: entries with i need 4 | n."""
        text = json.dumps(tables.MATRICES[name])
        if "i" in text and self.desc.n % 4:
            return FieldDescriptor(lcm(self.desc.n, 4), self.desc.transcendental)
        return self.desc

    def family_nodes(self):
        if self.family != "48-50":
            return None
        return family_nodes(self.desc, self.bindings)

    def family_tropes(self):
        if self.family != "48-50":
            return None
        return family_tropes(self.desc, self.bindings)


def _embed(g: ProjTransform, desc: FieldDescriptor) -> ProjTransform:
    return g if g.desc == desc else g.embed(desc)


def _raw_presets() -> dict:
    text = resources.files("kummerlab").joinpath("data/presets.json").read_text()
    return json.loads(text)


def _resolve(name: str, raw: dict, depth: int = 0) -> dict:
    if name not in raw:
        raise PresetError(f"unknown preset {name!r}; known: {', '.join(sorted(raw))}")
    entry = dict(raw[name])
    parent = entry.pop("extends", None)
    if parent is None:
        return entry
    if depth > 8:
        raise PresetError("preset inheritance is too deep")
    base = _resolve(parent, raw, depth + 1)
    return {**base, **entry}


def preset_names() -> list[str]:
    return sorted(_raw_presets())


def from_entry(name: str, entry: dict) -> Preset:
    fld = entry.get("field", {})
    desc = FieldDescriptor(int(fld.get("cyclotomic_order", 1)), fld.get("transcendental"))
    bindings = {}
    for sym, text in entry.get("bindings", {}).items():
        bindings[sym] = desc.parse(str(text), bindings)
    if "params" not in entry:
        raise PresetError(f"preset {name!r} has no parameters")
    claims = {k: v for k, v in entry.items() if k.startswith("claimed_")}
    return Preset(
        name=name,
        description=entry.get("description", ""),
        desc=desc,
        bindings=bindings,
        params_text={k: str(v) for k, v in entry["params"].items()},
        family=entry.get("family"),
        aut_generators=list(entry.get("aut_generators", [])),
        node_symmetries=list(entry.get("node_symmetries", [])),
        claims=claims,
    )


def load_preset(name: str, overrides: dict | None = None, desc: FieldDescriptor | None = None) -> Preset:
    """Load a bundled preset; ``overrides`` maps names to entries replacing bundled ones.

    ``desc`` replaces the preset's field, e.g. to work over a larger cyclotomic field.
    """
    raw = _raw_presets()
    if overrides:
        raw = {**raw, **overrides}
    return from_entry(name, _with_field(_resolve(name, raw), desc))


def load_params_file(path: str | Path, desc: FieldDescriptor | None = None) -> Preset:
    """A parameter file has the same keys as a preset entry."""
    try:
        data = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise PresetError(f"{path}: {exc}") from None
    if not isinstance(data, dict):
        raise PresetError(f"{path}: expected a JSON object")
    return from_entry(Path(path).stem, _with_field(data, desc))


def _with_field(entry: dict, desc: FieldDescriptor | None) -> dict:
    if desc is None:
        return entry
    fld = {"cyclotomic_order": desc.n}
    if desc.transcendental:
        fld["transcendental"] = desc.transcendental
    return {**entry, "field": fld}


FIELD_PATTERN = re.compile(r"^Q(?:\((i|zeta_?(\d+))\))?(?:\(([a-z])\))?$")


def parse_field(text: str) -> FieldDescriptor:
    """'Q', 'Q(i)', 'Q(zeta_12)', 'Q(t)', 'Q(zeta_5)(s)' or a bare cyclotomic order."""
    text = text.replace(" ", "")
    if text.isdigit():
        return FieldDescriptor(int(text))
    m = FIELD_PATTERN.match(text)
    if not m:
        raise PresetError(f"unrecognized field {text!r}")
    gen, order, var = m.groups()
    n = 4 if gen == "i" else int(order) if order else 1
    if n < 1:
        raise PresetError(f"unrecognized field {text!r}")
    return FieldDescriptor(n, var)
