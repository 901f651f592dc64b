#
# Copyright (c) 2020 pygkcs developers
# This software is distributed under the terms of the MIT License.
#

import math
import typing
import itertools
import pytest
import mpmath
import numpy
from pygkcs.gk_model import GKParams
from pygkcs.coherent import CSLabel, normalization_closed, overlap, upsilon, cs_wavefunction_closed, measure_density
from tests.specfun._reference import bilinear_sum


@pytest.fixture(autouse=True)
def _precision() -> typing.Iterator[None]:
    with mpmath.workdps(30):
        yield


def _mp_upsilon(theta: float, gamma: float, x: typing.Any) -> typing.Any:
    s = mpmath.sin(theta)
    return (2 * s) ** (gamma - 1) * s / (mpmath.pi * mpmath.gamma(gamma)) \
        * mpmath.exp(-(mpmath.pi - 2 * theta) * x) * abs(mpmath.gamma(gamma / 2 + 1j * x)) ** 2


def _unittest_upsilon_oracle() -> None:
    for theta, gamma in itertools.product((math.pi / 4, math.pi / 2, 2.5), (1.5, 2.5, 4.0)):
        for x in (-6.0, -1.0, 0.0, 0.3, 5.0):
            assert upsilon(theta, gamma, x) == pytest.approx(float(_mp_upsilon(theta, gamma, x)), rel=1e-11)
        mass = mpmath.quad(lambda t: upsilon(theta, gamma, float(t)), [-mpmath.inf, -5, 0, 5, mpmath.inf])
        assert float(mass) == pytest.approx(1.0, abs=1e-9), (theta, gamma)


def _unittest_normalization_oracle() -> None:
    p = GKParams.from_gamma(2.5, 1.0)
    for x, theta in itertools.product((-2.0, 0.0, 0.7, 3.0), (math.pi / 3, math.pi / 2)):
        label = CSLabel(x, theta, 0.1, p)
        reference = math.exp(-2 * 0.1 * p.beta * p.gamma) * float(bilinear_sum(label.mu, p.gamma, x, x, theta, theta))
        assert normalization_closed(label) == pytest.approx(reference, rel=1e-8), (x, theta)


def _unittest_overlap_oracle() -> None:
    p = GKParams.from_gamma(2.5, 1.0)
    a = CSLabel(0.2, math.pi / 2, 0.1, p)
    b = a.with_x(-0.6)
    raw = bilinear_sum(a.mu, p.gamma, a.x, b.x, a.theta, a.theta)
    n_a = bilinear_sum(a.mu, p.gamma, a.x, a.x, a.theta, a.theta)
    n_b = bilinear_sum(a.mu, p.gamma, b.x, b.x, a.theta, a.theta)
    reference = float(raw / mpmath.sqrt(n_a * n_b))
    value = overlap(a, b)
    assert value.real == pytest.approx(reference, rel=1e-8)
    assert value.imag == 0
    assert 0 < value.real < 1


def _unittest_state_norm_oracle() -> None:
    # The closed wavefunction integrates to unit norm; the mass beyond ξ = 10 is negligible.
    label = CSLabel(0.5, 2 * math.pi / 3, 0.3, GKParams.from_gamma(2.5, 1.0))

    def density(t: typing.Any) -> float:
        return abs(cs_wavefunction_closed(label, float(t))) ** 2

    norm = mpmath.quad(density, [0, 1, 3, 6, 10])
    assert float(norm) == pytest.approx(1.0, abs=1e-7)


def _unittest_measure_density_oracle() -> None:
    p = GKParams.from_gamma(2.5, 1.0)
    xs = numpy.linspace(-3.0, 3.0, 7)
    for x in xs:
        label = CSLabel(float(x), 1.2, 0.1, p)
        expected = normalization_closed(label) * upsilon(1.2, 2.5, float(x))
        assert measure_density(label) == pytest.approx(expected, rel=1e-14)
        assert measure_density(label) == pytest.approx(measure_density(label.flipped()), rel=1e-9)


def _unittest_oracles_below_gamma_two() -> None:
    # A weaker barrier and a wider well: gamma < 2 and beta != 1.
    p = GKParams.from_gamma(1.8, 0.5)
    for x, theta in itertools.product((-1.5, 0.0, 2.2), (math.pi / 4, math.pi / 2)):
        label = CSLabel(x, theta, 0.6, p)
        raw = bilinear_sum(label.mu, p.gamma, x, x, theta, theta)
        reference = math.exp(-2 * 0.6 * p.beta * p.gamma) * float(raw)
        assert normalization_closed(label) == pytest.approx(reference, rel=1e-8), (x, theta)
        density = reference * float(_mp_upsilon(theta, p.gamma, x))
        assert measure_density(label) == pytest.approx(density, rel=1e-8), (x, theta)

    a = CSLabel(0.4, math.pi / 2, 0.6, p)
    b = a.with_x(-1.3)
    raw = bilinear_sum(a.mu, p.gamma, a.x, b.x, a.theta, a.theta)
    n_a = bilinear_sum(a.mu, p.gamma, a.x, a.x, a.theta, a.theta)
    n_b = bilinear_sum(a.mu, p.gamma, b.x, b.x, a.theta, a.theta)
    assert overlap(a, b).real == pytest.approx(float(raw / mpmath.sqrt(n_a * n_b)), rel=1e-8)

    def density_of_state(t: typing.Any) -> float:
        return abs(cs_wavefunction_closed(a, float(t))) ** 2

    assert float(mpmath.quad(density_of_state, [0, 1, 3, 6, 10, 14])) == pytest.approx(1.0, abs=1e-7)
