"""Smoke tests for the python bindings.

Importable either as the installed ``galeforge`` package or as the bare
``_galeforge`` extension on PYTHONPATH (the ctest wiring does the latter).
"""

import json

try:
    import galeforge as gf
except ImportError:
    import _galeforge as gf


def test_counts():
    assert gf.catalan(3) == 5
    assert gf.catalan(5) == 42
    assert [gf.count_t_diagrams(d) for d in range(1, 7)] == [1, 1, 3, 4, 12, 27]
    assert len(gf.enumerate_trees(6)) == 3


def test_build_and_recognizers():
    trees = gf.enumerate_trees(5)
    assert len(trees) == 1
    diagram = gf.build_diagram(trees[0])
    doc = json.loads(diagram)
    assert doc["d"] == 2
    assert len(doc["points"]) == 8
    assert gf.is_t_diagram(diagram)
    assert gf.is_T_diagram(diagram)
    assert gf.is_polytope_diagram(diagram)

    corr = json.loads(gf.build_correspondence(trees[0]))
    assert len(corr) == 8


def test_round_trip():
    for tree in gf.enumerate_trees(6):
        diagram = gf.build_diagram(tree)
        extracted = gf.extract_tree(diagram)
        rebuilt = gf.build_diagram(extracted)
        assert json.loads(rebuilt)["d"] == 3


def test_faces_and_oracle():
    diagram = gf.build_diagram(gf.enumerate_trees(5)[0])
    assert gf.fvector(diagram) == [8, 28, 40, 20]
    nonfaces = gf.minimal_nonfaces(diagram)
    assert len(nonfaces) == 16
    assert all(len(m) == 3 for m in nonfaces)
    edges = gf.remarkable_edges(diagram)
    assert len(edges) == 5

    report = json.loads(gf.verify_oracle(diagram))
    assert report["ok"] is True
    assert report["facet_count"] == 20
    assert report["mismatches"] == []


def test_identify_from_lattice():
    tree = gf.enumerate_trees(5)[0]
    lattice = gf.face_lattice(gf.build_diagram(tree))
    identified = gf.identify_tree(lattice)
    # The identified tree rebuilds to an equivalent diagram.
    assert json.loads(gf.build_diagram(identified))["d"] == 2


def test_cyclic_diagram_and_svg():
    cyc = gf.cyclic_diagram(2)
    assert gf.is_polytope_diagram(cyc)
    assert not gf.is_t_diagram(cyc)
    svg = gf.diagram_svg(cyc)
    assert svg.startswith("<svg")
    assert svg.count("<circle") == 8
