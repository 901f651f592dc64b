#
# Copyright (c) 2020 pygkcs developers
# This software is distributed under the terms of the MIT License.
#

import math
import typing
import pytest
import mpmath
import numpy
import pygkcs
from pygkcs.gk_model import GKParams
from pygkcs.coherent import CSLabel, measure_density, state_coefficients


def _unittest_coherent_resolution_matrix() -> None:
    # ∫ N(x) Υ(x) ⟨ψ_m|x,ε⟩⟨x,ε|ψ_n⟩ dx is the matrix of O_ε in the eigenbasis.
    p = GKParams.from_gamma(2.5, 1.0)
    epsilon, m_max = 0.2, 3
    base = CSLabel(0.0, math.pi / 2, epsilon, p)

    def element(m: int, n: int) -> float:
        def integrand(x: typing.Any) -> float:
            label = base.with_x(float(x))
            c = state_coefficients(label, m_max)
            return measure_density(label) * float(c[m] * c[n])
        return float(mpmath.quad(integrand, [-16, -8, -3, 0, 3, 8, 16]))

    for m in range(m_max + 1):
        expected = math.exp(-2.0 * p.beta * (2 * m + p.gamma) * epsilon)
        assert element(m, m) == pytest.approx(expected, rel=1e-7)
    assert element(0, 1) == pytest.approx(0.0, abs=1e-8)
    assert element(1, 3) == pytest.approx(0.0, abs=1e-8)


def _unittest_operator_routes_agree() -> None:
    p = GKParams.from_gamma(2.5, 1.0)
    u = numpy.linspace(0.3, 3.0, 7)
    phi = pygkcs.resolution.EigenCombination([0.5, -1.0, 0.25], p)
    spectral = pygkcs.resolution.apply_O_epsilon(math.pi / 2, 2.5, 1.0, 0.1, phi, u)
    kernel = pygkcs.resolution.apply_O_epsilon_kernel(math.pi / 2, 2.5, 1.0, 0.1, phi, u)
    assert spectral == pytest.approx(phi.apply_exact(0.1, u), abs=1e-9)
    assert kernel == pytest.approx(spectral, rel=1e-6, abs=1e-9)


def _unittest_slow_verification_suites() -> None:
    reports = pygkcs.verification.run_suites()
    failed = [str(r) for r in reports if not r.passed]
    assert not failed, '\n'.join(failed)
    assert {r.module for r in reports} == set(pygkcs.verification.SUITES)


def _unittest_smooth_and_discontinuous_traces() -> None:
    ladder = [0.1, 0.05, 0.02, 0.01]
    bump = pygkcs.resolution.poisson_limit_experiment(2.5, 1.0, pygkcs.resolution.SmoothBump(1.0, 2.0), ladder)
    assert bump.strictly_decreasing, bump.errors
    assert all(0 < e < 1 for e in bump.errors)
    # The bump is far from the linear regime on this ladder: error / epsilon keeps growing.
    assert not bump.check_linear(0.2)
    assert bump.errors[-1] / ladder[-1] > 2 * bump.errors[0] / ladder[0]

    indicator = pygkcs.resolution.Indicator(1.0, 2.0)
    trace = pygkcs.resolution.poisson_limit_experiment(2.5, 1.0, indicator, ladder)
    assert trace.strictly_decreasing, trace.errors
    assert all(0 < e < 1 for e in trace.errors)
    # The jumps limit the L2 convergence to a fractional order.
    assert all(0 < o < 0.6 for o in trace.orders), trace.orders


def _unittest_jump_values() -> None:
    indicator = pygkcs.resolution.Indicator(1.0, 2.0)
    lo, hi = pygkcs.resolution.jump_values(2.5, 1.0, indicator, 0.01)
    # At the jumps the limit is the midpoint, not the value 1 of the indicator there.
    assert lo == pytest.approx(0.5, abs=0.15)
    assert hi == pytest.approx(0.5, abs=0.15)
    inside, = pygkcs.resolution.apply_O_epsilon(math.pi / 2, 2.5, 1.0, 0.01, indicator, numpy.array([1.5]))
    assert inside == pytest.approx(1.0, abs=0.1)
