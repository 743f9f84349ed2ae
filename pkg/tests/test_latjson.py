import json

import pytest

from wdlat import catalog, catalog_names, latjson
from wdlat import wdl as W
from wdlat.errors import FormatError, NotAWdl


def test_round_trip_catalog():
    for name in catalog_names():
        w = catalog(name)
        text = latjson.dumps(w, name=name)
        lf = latjson.loads(text)
        assert lf.name == name
        back = lf.wdl()
        assert back.lattice.up == w.lattice.up
        assert back.delta == w.delta and back.nabla == w.nabla
        assert back.lattice.labels == w.lattice.labels
        # and the serialised form is stable
        assert latjson.dumps(back, name=name) == text


def test_lattice_only_documents():
    w = catalog("P6")
    text = latjson.dumps(w.lattice, name="bare")
    lf = latjson.loads(text)
    assert lf.delta is None and lf.nabla is None
    with pytest.raises(FormatError):
        lf.wdl()


def test_rejects_dangling_cover():
    doc = {"name": "x", "size": 2, "covers": [[0, 2]]}
    with pytest.raises(FormatError):
        latjson.loads(json.dumps(doc))


def test_rejects_cycle():
    doc = {"name": "x", "size": 3, "covers": [[0, 1], [1, 2], [2, 0]]}
    with pytest.raises(FormatError):
        latjson.loads(json.dumps(doc))


def test_rejects_bad_tables_and_labels():
    base = {"name": "x", "size": 2, "covers": [[0, 1]]}
    with pytest.raises(FormatError):
        latjson.loads(json.dumps({**base, "delta": [0, 1, 0]}))
    with pytest.raises(FormatError):
        latjson.loads(json.dumps({**base, "labels": ["just one"]}))
    with pytest.raises(FormatError):
        latjson.loads(json.dumps({**base, "size": 0}))
    with pytest.raises(FormatError):
        latjson.loads("not json at all")
    with pytest.raises(FormatError):
        latjson.loads(json.dumps([1, 2, 3]))


def test_axioms_enforced_on_wdl_view():
    doc = {"name": "x", "size": 2, "covers": [[0, 1]],
           "delta": [0, 0], "nabla": [1, 1]}
    lf = latjson.loads(json.dumps(doc))
    with pytest.raises(NotAWdl):
        lf.wdl()


def test_document_fields():
    w = catalog("M42")
    doc = json.loads(latjson.dumps(w, name="M42"))
    assert doc["size"] == 5
    assert sorted(doc) == ["covers", "delta", "labels", "nabla", "name", "size"]
    assert [tuple(c) for c in doc["covers"]] == [
        (0, 1), (0, 2), (1, 3), (2, 3), (3, 4)]
