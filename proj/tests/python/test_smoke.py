"""Smoke tests for the Python bindings: import, a few closed-form values,
and one end-to-end caustic/classification run on a small scene."""

import math
import os

import pytest

brc = pytest.importorskip("brcaustics")


def small_scene(embedding, nu=48, nt=3, mu=2.0):
    import json

    return brc.scene_from_json(
        json.dumps(
            {
                "dim": 3,
                "embedding": embedding,
                "u_domain": [0.0, 2 * math.pi],
                "t_domain": [-1.0, 1.0],
                "grid": [nu, nt],
                "mu_range": [-mu, mu],
                "u_periodic": [True],
            }
        )
    )


def test_minkowski_primitives():
    assert brc.pseudo_dot([1, 0, 0], [1, 0, 0]) == -1.0
    assert brc.causal_character([2, 1, 0]) == "Timelike"
    assert brc.causal_character([1, 1, 0]) == "Lightlike"
    w = brc.wedge([[0, 1, 0], [0, 0, 1]])
    assert w == [-1.0, 0.0, 0.0]
    assert brc.on_lightcone([1, 1, 0], [0, 0, 0])


def test_expression_and_jets():
    assert brc.eval_expression("t + 2*u1^3", ["u1", "t"], [2.0, 1.0]) == 17.0
    d3 = brc.expression_partial("u1^3", ["u1", "t"], [2.0, 0.0], [3, 0])
    assert abs(d3 - 6.0) < 1e-12
    with pytest.raises(ValueError):
        brc.eval_expression("nope(u1)", ["u1", "t"], [0.0, 0.0])


def test_cylinder_geometry():
    ws = brc.WorldSheet(small_scene(["t", "cos(u1)", "sin(u1)"]))
    ok, _table = ws.validate()
    assert ok

    frame = ws.frame_at([0.5], 0.0)
    assert frame.ok
    assert abs(frame.nT[0] - 1.0) < 1e-12
    assert abs(frame.nS[1] - math.cos(0.5)) < 1e-12

    kappas = ws.principal_curvatures([0.5], 0.0, +1)
    assert abs(kappas[0] + 1.0) < 1e-10

    focal = ws.focal_points([0.5], 0.25, +1)
    assert len(focal) == 1
    x0, x1, x2 = focal[0].point
    assert abs(x0 - (0.25 - 1.0)) < 1e-10
    assert abs(x1) < 1e-10 and abs(x2) < 1e-10

    roots = ws.focal_mu_roots([0.5], 0.25, +1)
    assert any(abs(r + 1.0) < 1e-8 for r in roots)

    vertex = ws.conical_vertex(0.0, +1)
    assert vertex is not None
    assert abs(vertex[0] + 1.0) < 1e-9

    assert ws.classify(1.0, 0.0, +1) == "ConicalDegenerate"


def test_ellipse_classification():
    ws = brc.WorldSheet(small_scene(["t", "2*cos(u1)", "sin(u1)"], nu=64, mu=4.5))
    assert ws.classify(math.pi / 4, 0.0, +1) == "CuspidalEdge"
    roots = ws.sigma_roots(0.0, +1)
    assert len(roots) == 4
    for s, tag in roots:
        assert tag == "Swallowtail"
    expected = [0.0, math.pi / 2, math.pi, 3 * math.pi / 2]
    for (s, _tag), want in zip(roots, expected):
        assert abs(s - want) < 1e-6

    caustic = ws.br_caustic()
    assert len(caustic) == 64 * 3 * 2


def test_normal_forms():
    sw = brc.normal_form_surface("sw", 3, 3)
    assert [3.0, 4.0, 0.0] in sw
    caustic = brc.family_caustic(5, 5, 1.0)
    # u = 1, w = 1 corner: (-(15 + 3), -10 - 3, 1)
    assert any(
        abs(p[0] + 18.0) < 1e-12 and abs(p[1] + 13.0) < 1e-12 and abs(p[2] - 1.0) < 1e-12
        for p in caustic
    )
    assert brc.germ_type([0.0, 2.0, 0.0, 0.0, 0.0]) == "A1"
    assert brc.germ_type([0.0, 0.0, 6.0, 0.0, 0.0]) == "A2"


def test_shipped_scene_files():
    scenes = os.environ.get("BRC_SCENES")
    if not scenes:
        pytest.skip("BRC_SCENES not set")
    ws = brc.WorldSheet(brc.load_scene(os.path.join(scenes, "cylinder.json")))
    ok, _ = ws.validate()
    assert ok
