import json
from importlib import resources

import pytest
from jsonschema import Draft202012Validator
from referencing import Registry, Resource

from gemdual.c2c import is_closed_2cell, separating_features
from gemdual.conditions import conditions_predict_c2c
from gemdual.duality import partial_dual, trace_partial_dual
from gemdual.gem import summary, validate_gem
from gemdual.generators import gen_bowtie, gen_k4, gen_loop_plus_link, gen_theta
from gemdual.io import gem_to_json, summary_to_json, trace_to_json
from gemdual.search import find_c2c_duals

SCHEMA_NAMES = ["gem", "summary", "gem_output", "c2c", "obstructions", "conditions", "trace", "search", "validation"]


def _load(name):
    return json.loads(resources.files("gemdual").joinpath("schemas", f"{name}.json").read_text())


@pytest.fixture(scope="module")
def validators():
    schemas = {n: _load(n) for n in SCHEMA_NAMES}
    registry = Registry().with_resources((s["$id"], Resource.from_contents(s)) for s in schemas.values())
    out = {}
    for n, s in schemas.items():
        Draft202012Validator.check_schema(s)
        out[n] = Draft202012Validator(s, registry=registry)
    return out


def _valid(validators, name, doc):
    errors = sorted(validators[name].iter_errors(doc), key=str)
    assert not errors, errors[0].message


def test_gem_and_summary(validators):
    for g in (gen_theta(3), gen_k4(), partial_dual(gen_k4(), [0])):
        _valid(validators, "gem", gem_to_json(g))
        _valid(validators, "summary", summary_to_json(summary(g)))
        _valid(validators, "gem_output", {"gem": gem_to_json(g), "summary": summary_to_json(summary(g))})


def test_reports(validators):
    k4 = gen_k4()
    for d in (0, 1, 21, 63):
        _valid(validators, "c2c", is_closed_2cell(partial_dual(k4, d)).to_json())
        _valid(validators, "conditions", conditions_predict_c2c(k4, d).to_json())
        _valid(validators, "trace", trace_to_json(trace_partial_dual(k4, d)))
    for g in (k4, gen_bowtie(), gen_loop_plus_link()):
        _valid(validators, "obstructions", separating_features(g).to_json())
        _valid(validators, "search", find_c2c_duals(g).to_json())


def test_validation_report(validators):
    report = validate_gem(gen_theta(3))
    _valid(validators, "validation", {"ok": report.ok, "violations": []})
    _valid(validators, "validation", {"ok": False, "violations": [{"rule": "disconnected", "witness": "0"}]})


def test_schema_rejects_bad_document(validators):
    doc = gem_to_json(gen_theta(3))
    del doc["red"]
    assert list(validators["gem"].iter_errors(doc))
