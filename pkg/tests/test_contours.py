import numpy as np
import pytest

from noncolliding.contours import (_circle, gauss_legendre, make_contour,
                                   semi_infinite_rule)
from noncolliding.exceptions import ParameterError


def test_circle_four_node_parametrization():
    # periodic trapezoid on z(theta) = e^{i theta}: weights (2 pi i / 4) * node
    z, w = _circle(0.0, 1.0, 4)
    assert np.allclose(z, [1, 1j, -1, -1j], atol=1e-14)
    assert np.allclose(w, 2j * np.pi / 4 * z, atol=1e-14)


def test_closed_contours_weight_sum_vanishes():
    c = make_contour("circle", center=0.3 + 0.2j, radius=2.0, nodes=64)
    assert abs(c.weights.sum()) < 1e-12
    r = make_contour("rectangle", left=-3.0, right=1.0, half_height=0.5, nodes=200)
    assert abs(r.weights.sum()) < 1e-12


def test_residue_on_closed_contours():
    for c in (make_contour("circle", center=0.0, radius=1.0, nodes=64),
              make_contour("rectangle", left=-1.0, right=1.0, half_height=0.6, nodes=240)):
        val = c.integrate(lambda z: 1.0 / (z - 0.2)) / (2j * np.pi)
        assert abs(val - 1.0) < 1e-12


def test_vertical_gaussian_integral():
    # oint e^{z^2/2} dz over Re z = 1 equals i sqrt(2 pi); oracle: the
    # 1-D Gaussian integral of the parametrized path computed directly
    t, wt = gauss_legendre(-10.0, 10.0, 400)
    oracle = 1j * np.sum(wt * np.exp((1.0 + 1j * t) ** 2 / 2.0))
    v = make_contour("vertical", offset=1.0, half_height=10.0, nodes=400)
    got = v.integrate(lambda z: np.exp(z ** 2 / 2.0))
    assert abs(got - oracle) < 1e-12
    assert abs(got - 1j * np.sqrt(2 * np.pi)) < 1e-10
    # doubling the truncation changes nothing
    v2 = v.refined(node_factor=1, truncation_factor=2.0)
    got2 = v2.integrate(lambda z: np.exp(z ** 2 / 2.0))
    assert abs(got2 - got) < 1e-12


def test_vertical_orientation_upward():
    v = make_contour("vertical", offset=0.5, half_height=3.0, nodes=64)
    assert v.nodes[0].imag < 0 < v.nodes[-1].imag
    assert np.all(v.weights.real == 0) and np.all(v.weights.imag > 0)


def test_wedge_matches_airy_value():
    w = make_contour("wedge", apex=0.5, angle=np.pi / 3, length=14.0, nodes=600)
    ai0 = w.integrate(lambda z: np.exp(z ** 3 / 3.0)) / (2j * np.pi)
    assert abs(ai0 - 0.3550280538878172) < 1e-12
    assert abs(ai0.imag) < 1e-14


def test_contour_refinement_and_truncation_recorded():
    w = make_contour("wedge", apex=0.0, angle=5 * np.pi / 6, length=8.0, nodes=200)
    assert w.truncation == 8.0
    w2 = w.refined(2, truncation_factor=1.5)
    assert w2.truncation == 12.0
    assert len(w2.nodes) > len(w.nodes)


def test_parameter_validation():
    with pytest.raises(ParameterError):
        make_contour("circle", center=0.0, radius=-1.0, nodes=64)
    with pytest.raises(ParameterError):
        make_contour("circle", center=0.0, radius=1.0, nodes=4)
    with pytest.raises(ParameterError):
        make_contour("rectangle", left=1.0, right=-1.0, half_height=0.5, nodes=64)
    with pytest.raises(ParameterError):
        make_contour("wedge", apex=0.0, angle=3.5, length=1.0, nodes=64)
    with pytest.raises(ParameterError):
        make_contour("pentagon", nodes=64)


def test_semi_infinite_rule_normalization():
    for scheme in ("legendre", "exponential"):
        r = semi_infinite_rule(2.0, n=64, length=40.0, scheme=scheme)
        assert np.all(r.nodes >= 2.0)
        assert np.all(r.weights > 0)
        val = np.sum(r.weights * np.exp(-(r.nodes - 2.0)))
        assert abs(val - 1.0) < 1e-8
    with pytest.raises(ParameterError):
        semi_infinite_rule(0.0, n=4)
    with pytest.raises(ParameterError):
        semi_infinite_rule(0.0, length=-1.0)
