import os
import pathlib

import pytest

import acgraph

DATA = pathlib.Path(os.environ.get("ACGRAPH_DATA", pathlib.Path(__file__).parents[2] / "data"))


def test_z5xz5_has_two_components():
    g = acgraph.catalog_group("Z5xZ5")
    r = acgraph.components(g, 2)
    assert r["component_count"] == 2
    assert r["vertex_count"] == 480
    assert r["component_sizes"] == [240, 240]
    ab = acgraph.abelian_components(g, 2)
    assert ab["component_count"] == 2 and ab["matches_formula"] is True


def test_group_file_matches_catalog():
    g = acgraph.load_group(str(DATA / "groups" / "S3.json"))
    assert g.order == 6
    assert g.hash == acgraph.catalog_group("S3").hash


def test_a5_connected_both_alphabets():
    g = acgraph.catalog_group("A5")
    assert acgraph.components(g, 2)["component_count"] == 1
    assert acgraph.components(g, 2, conjugators="all", threads=2)["component_count"] == 1


def test_structure():
    assert acgraph.structure(acgraph.catalog_group("S3"))["W_order"] == 3
    a5 = acgraph.structure(acgraph.catalog_group("A5"))
    assert a5["W_order"] == 1 and a5["perfect"] and a5["factors"] == [60]
    assert acgraph.structure(acgraph.catalog_group("Z4"))["W"] == [0, 2]


def test_verify_and_ak():
    s3 = acgraph.catalog_group("S3")
    assert acgraph.verify("lifting", s3, k=2)["outcome"] == "pass"
    r = acgraph.verify("ak", s3, n=3)
    assert r["outcome"] == "pass"
    assert r["evidence"]["certificate_length"] <= 64
    assert acgraph.verify("rel-conjecture", acgraph.catalog_group("Z5xZ5"))["outcome"] == "info"


def test_equivalent():
    g = acgraph.catalog_group("Z5xZ5")
    assert acgraph.equivalent(g, [1, 5], [5, 1])["status"] == "equivalent"
    # determinant 2 is not +-1: a different component, which search alone cannot prove
    assert acgraph.equivalent(g, [1, 5], [2, 5])["status"] != "equivalent"
    same = acgraph.equivalent(g, [1, 5], [4, 5])
    assert same["status"] == "equivalent"
    assert len(same["certificate"]) <= 64


def test_sampler_is_reproducible():
    g = acgraph.catalog_group("A5")
    xs, rep = acgraph.sample(g, 3, 6000, seed=11)
    ys, _ = acgraph.sample(g, 3, 6000, seed=11)
    assert xs == ys
    assert rep["degrees_of_freedom"] == 59
    assert sum(rep["counts"]) == 6000
    assert rep["p_value"] > 1e-3


def test_errors():
    with pytest.raises(ValueError):
        acgraph.catalog_group("nope")
    with pytest.raises(acgraph.BudgetExceeded):
        acgraph.catalog_group("A5xA5")
    assert acgraph.catalog_group("A5xA5", max_order=4096).order == 3600
    with pytest.raises(ValueError):
        acgraph.verify("perfect", acgraph.catalog_group("S3"), k=2)
