import json

import numpy as np
import pytest

import isograph


def test_catalog():
    assert "d4-square" in isograph.catalog_ids()
    e = isograph.catalog_entry("d4-square")
    assert e.graph.edge_count == 24
    assert e.action.group.order == 8
    assert {"R1", "R2", "R3"} <= set(e.rep_names)


def test_isospectral_pair():
    e = isograph.catalog_entry("d4-square")
    q1, q2 = e.quotient("R1"), e.quotient("R2")
    s1 = isograph.eigenvalues(q1.graph, 3.0)
    s2 = isograph.eigenvalues(q2.graph, 3.0)
    assert s1.count() > 5
    assert isograph.compare_spectra(s1, s2)
    parent = isograph.eigenvalues(e.graph, 3.0)
    assert not isograph.compare_spectra(parent, s1)


def test_rep_tools():
    e = isograph.catalog_entry("d4-square")
    r1 = e.rep("R1")
    assert r1.dim == 1
    induced = r1.induce()
    chi = induced.character()
    assert chi["e"] == pytest.approx(2)
    assert chi["s^2"] == pytest.approx(-2)
    assert induced.is_isomorphic(e.rep("R"))
    m = e.rep("R").matrix("s")
    assert isinstance(m, np.ndarray) and m.shape == (2, 2)


def test_json_round_trip(tmp_path):
    e = isograph.catalog_entry("d3-triangle")
    path = tmp_path / "g.json"
    path.write_text(e.graph.to_json())
    g = isograph.load_graph(str(path))
    assert g.edge_ids == e.graph.edge_ids
    assert isograph.graph_dict(g)["edges"][0]["id"] == e.graph.edge_ids[0]


def test_input_errors():
    with pytest.raises(isograph.InputError, match="Kostrykin-Schrader"):
        isograph.Graph.from_json(json.dumps({
            "edges": [{"id": "a", "tail": "o", "head": "p", "length": 1}],
            "vertices": [{"id": "o", "A": [[0]], "B": [[0]]}, {"id": "p"}],
        }))
    with pytest.raises(ValueError):
        isograph.catalog_entry("no-such-graph")


def test_induction_transplant():
    e = isograph.catalog_entry("d4-square")
    sub, ind, t = isograph.induction_pair(e.graph, e.action, e.rep("R1"))
    assert t.direct.shape == (ind.graph.edge_count, sub.graph.edge_count)
    report = isograph.verify_transplant(t, 3)
    assert report.ok and report.checked == 3


def test_selfcheck_quick():
    results = isograph.selfcheck(quick=True)
    assert results and all(r.passed for r in results)
