from __future__ import annotations

import json

import pytest

from kummerlab.exactnum import FieldDescriptor
from kummerlab.presets import PresetError, load_params_file, load_preset, parse_field, preset_names


@pytest.mark.parametrize("text,n,var", [("Q", 1, None), ("Q(i)", 4, None), ("Q(zeta_12)", 12, None),
                                        ("Q(zeta5)", 5, None), ("Q(t)", 1, "t"), ("Q(zeta_5)(s)", 5, "s"),
                                        ("8", 8, None), (" Q ( i ) ", 4, None)])
def test_parse_field(text, n, var):
    d = parse_field(text)
    assert (d.n, d.transcendental) == (n, var)


@pytest.mark.parametrize("text", ["R", "Q(ii)", "Q(zeta_)", "Q(t)(s)", "Q(zeta_0)", ""])
def test_parse_field_errors(text):
    with pytest.raises(PresetError):
        parse_field(text)


def test_bundled_presets_load():
    for name in preset_names():
        P = load_preset(name)
        assert P.params().values()
        P.generators()


def test_inheritance_and_bindings():
    P = load_preset("example-48-50-t2")
    assert P.family == "48-50" and P.bindings["t"] == P.desc.from_int(2)
    assert len(P.family_nodes()) == 16 and len(P.family_tropes()) == 16
    assert load_preset("fermat-i").family_nodes() is None


def test_overrides_replace_entries():
    P = load_preset("fermat-i", overrides={"fermat-i": {"field": {"cyclotomic_order": 4},
                                                        "params": {"a": "1", "b": "0", "c": "0", "d": "1", "e": "-i"}}})
    assert P.params_text["d"] == "1"
    child = load_preset("example-48-50-t2", overrides={"example-48-50": {
        "family": "48-50", "field": {"cyclotomic_order": 1, "transcendental": "t"},
        "params": {"a": "1", "b": "0", "c": "0", "d": "0", "e": "0"}}})
    assert child.params_text["a"] == "1"


def test_field_replacement():
    P = load_preset("example-48-50-t2", desc=FieldDescriptor(4))
    assert P.desc == FieldDescriptor(4)
    assert P.surface().F.desc == FieldDescriptor(4)


def test_errors(tmp_path):
    with pytest.raises(PresetError):
        load_preset("no-such-preset")
    with pytest.raises(PresetError):
        load_preset("x", overrides={"x": {"field": {}}})
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(PresetError):
        load_params_file(bad)
    bad.write_text("[1, 2]")
    with pytest.raises(PresetError):
        load_params_file(bad)
    loop = {"a": {"extends": "b", "params": {}}, "b": {"extends": "a", "params": {}}}
    with pytest.raises(PresetError):
        load_preset("a", overrides=loop)


def test_params_file(tmp_path):
    f = tmp_path / "mine.json"
    f.write_text(json.dumps({"field": {"cyclotomic_order": 4}, "params": {"a": "1", "b": "0", "c": "0", "d": "0",
                                                                          "e": "-i"}}))
    P = load_params_file(f)
    assert P.name == "mine" and P.desc.n == 4
    assert P.surface().warnings == []
