import math

import numpy as np
import pytest

from gptlab.bodies import Polytope
from gptlab.catalog import anu_bit_effects, classical_bit_effects, octagon_anu_effects, pill_arcs
from gptlab.errors import EmptySection
from gptlab.geometry import rvec
from gptlab.render import Plane, cross_section, render_cross_section, to_svg


def signed_area(poly):
    x, y = poly[:, 0], poly[:, 1]
    return 0.5 * float(np.sum(x * np.roll(y, -1) - np.roll(x, -1) * y))


def segment_distance(p, a, b):
    ab = b - a
    t = np.clip((p - a) @ ab / (ab @ ab), 0, 1)
    return float(np.linalg.norm(p - (a + t * ab)))


def boundary_distance(p, poly):
    return min(segment_distance(p, poly[i], poly[(i + 1) % len(poly)]) for i in range(len(poly)))


def test_plane_parsing():
    assert Plane.parse("z=1/2") == Plane(2, 0.5)
    assert Plane.parse(" x = -0.25 ") == Plane(0, -0.25)
    with pytest.raises(ValueError):
        Plane.parse("w=1")
    with pytest.raises(ValueError):
        Plane.parse("z")


def test_bit_effect_square_with_labels():
    labels = {"0": (0, 0), "u": (0, 1), "e+": ("1/2", "1/2"), "e-": ("-1/2", "1/2")}
    sec = cross_section(classical_bit_effects(), labels=labels)
    assert np.allclose(sec.outline, [[-0.5, 0.5], [0, 0], [0.5, 0.5], [0, 1]])
    svg = to_svg(sec)
    for name in labels:
        assert f">{name}</text>" in svg
    assert svg.count("<circle") == 4


def test_outline_order_is_canonical():
    sec = cross_section(pill_arcs(), Plane.parse("z=1"))
    o = sec.outline
    assert tuple(o[0]) == min(map(tuple, o))
    assert signed_area(o) > 0


def test_pill_section_is_a_stadium():
    sec = cross_section(pill_arcs(), Plane.parse("z=1"))
    o = sec.outline
    assert np.allclose(o.min(axis=0), [-2, -1]) and np.allclose(o.max(axis=0), [2, 1])
    for x, y in o:
        if abs(x) <= 1:
            assert abs(abs(y) - 1) < 1e-9
        else:
            assert abs(math.hypot(abs(x) - 1, y) - 1) < 1e-9
    # stadium area is 4 + pi; polygon error stays within tolerance
    assert abs(signed_area(o) - (4 + math.pi)) < 4e-3


def test_lens_outline_error_bound():
    body = anu_bit_effects()
    sec = cross_section(body)
    worst = max(boundary_distance(p[:2], sec.outline) for arc in body.arcs for p in arc.samples(2001))
    assert worst <= 1e-3


def test_octagon_lens_section_has_two_bulges():
    sec = cross_section(octagon_anu_effects(), Plane.parse("z=1/2"))
    radii = np.hypot(sec.outline[:, 0], sec.outline[:, 1])
    assert len(sec.outline) == 8
    assert int(np.sum(np.isclose(radii, 0.25))) == 6
    tips = sec.outline[np.isclose(radii, 1 / math.sqrt(2) - 1 / 2, atol=1e-3)]
    assert len(tips) == 2
    # the tips sit on the diagonal where the dropped corners used to be
    for x, y in tips:
        assert abs(x + y) < 1e-3


def test_section_of_a_flat_body_off_its_plane():
    tri = Polytope([rvec(0, 0, 1), rvec(2, 0, 1), rvec(0, 2, 1)])
    sec = cross_section(tri, Plane.parse("x=1"))
    assert np.allclose(sec.outline, [[0, 1], [1, 1]])
    with pytest.raises(EmptySection):
        cross_section(tri, Plane.parse("z=0"))


def test_plane_rules():
    with pytest.raises(ValueError):
        cross_section(classical_bit_effects(), Plane.parse("x=0"))
    with pytest.raises(ValueError):
        cross_section(pill_arcs())


def test_svg_is_deterministic(tmp_path):
    a, b = tmp_path / "a.svg", tmp_path / "b.svg"
    render_cross_section(octagon_anu_effects(), Plane.parse("z=1/2"), a, title="t")
    render_cross_section(octagon_anu_effects(), Plane.parse("z=1/2"), b, title="t")
    assert a.read_text() == b.read_text()
    assert a.read_text().startswith("<svg")
