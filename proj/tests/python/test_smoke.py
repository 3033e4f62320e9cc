import math

import pytest

import deltalim as dl


def test_square_well_resonances():
    hits = dl.find_resonances(dl.Potential.square(), -120.0, -0.1, 3)
    want = [-math.pi**2 * (k + 0.5) ** 2 for k in range(3)]
    assert [h.theta for h in hits] == pytest.approx(want, rel=1e-8)
    assert dl.robin_alpha(dl.Potential.square(), hits[0], 3.0) == pytest.approx(1.5, rel=1e-8)


def test_classification():
    sq = dl.Potential.square()
    assert dl.classify_scaling(sq, -1.0, 2.0) == ("dirichlet", None)
    kind, alpha = dl.classify_scaling(sq, -math.pi**2 / 4, 2.0)
    assert kind == "robin"
    assert alpha == pytest.approx(1.0, rel=1e-8)
    assert dl.classify_scaling(sq, -math.pi**2 / 4, 2.0, remainder=1.5)[0] == "dirichlet"


def test_airy_and_linear_family():
    ai, dai, bi, dbi = dl.airy(2.0)
    assert ai * dbi - dai * bi == pytest.approx(1 / math.pi, abs=1e-14)
    theta = dl.linear_resonances(1.0, -50.0, -0.1, 1)[0]
    assert theta == pytest.approx(-7.83734743894348, abs=1e-10)
    hit = dl.locate_resonance(dl.Potential.linear(1.0), theta)
    assert dl.alpha_linear(1.0, theta) == pytest.approx(
        dl.robin_alpha(dl.Potential.linear(1.0), hit, 1.0), rel=1e-6
    )


def test_kernels():
    z = 1j
    d = dl.kernel_dirichlet(z)
    k = (-z) ** 0.5
    assert d(1.0, 1.0) == pytest.approx((1 - math.e ** (-2 * k)) / (2 * k), abs=1e-14)
    s = dl.kernel_scaled(dl.Potential.zero(), 4.0, 0.3, z)
    assert s(0.2, 0.9) == pytest.approx(d(0.2, 0.9), abs=1e-11)
    r = dl.kernel_robin(1.0, z)
    vals = r.apply_indicator(1.0, 2.0, [0.5, 1.5])
    assert len(vals) == 2 and all(isinstance(v, complex) for v in vals)


def test_errors_and_3d():
    with pytest.raises(dl.DeltalimError):
        dl.locate_resonance(dl.Potential.square(), -1.0)
    with pytest.raises(dl.DeltalimError):
        dl.kernel_dirichlet(2.0 + 0j)
    c = dl.classify_3d(dl.Potential.square(), -math.pi**2 / 4, 1.0)
    assert c["resonant"] and c["alpha"] == pytest.approx(0.5, rel=1e-8)
    assert not dl.classify_3d(dl.Potential.square(), -1.0)["resonant"]


def test_potential_json_roundtrip():
    v = dl.Potential.piecewise([0.0, 0.3, 1.0], [[1.0], [0.0, 2.0]])
    w = dl.Potential.from_json(v.to_json())
    assert w(0.5) == v(0.5) == pytest.approx(1.0)
    assert w.breakpoints == [0.0, 0.3, 1.0]
