#
# Copyright (c) 2020 pygkcs developers
# This software is distributed under the terms of the MIT License.
#

"""
The special functions against mpmath evaluated at 30 significant digits.
"""

import math
import typing
import itertools
import pytest
import mpmath
import pygkcs.specfun
from pygkcs.specfun import MPPolyParams
from ._reference import mp_poly_hypergeometric, bilinear_sum


_DPS = 30


@pytest.fixture(autouse=True)
def _precision() -> typing.Iterator[None]:
    with mpmath.workdps(_DPS):
        yield


def _unittest_gamma_oracle() -> None:
    points = [0.3 + 0.1j, 1.5, 2.5 + 3j, 7 - 2j, 0.75 + 5j, 20 + 10j]
    for z in points:
        reference = complex(mpmath.gamma(z))
        assert pygkcs.specfun.gamma(z) == pytest.approx(reference, rel=1e-12), z

    # The real part of log Γ is branch-independent.
    for z in points:
        reference = float(mpmath.re(mpmath.loggamma(z)))
        assert pygkcs.specfun.log_gamma(z).real == pytest.approx(reference, rel=1e-12, abs=1e-12), z

    with pytest.raises(pygkcs.specfun.DomainError):
        pygkcs.specfun.log_gamma(-2.5 + 0.5j)


def _unittest_abs_gamma_sq_oracle() -> None:
    for nu, x in itertools.product((0.6, 1.25, 2.0, 3.75), (-8.0, -1.0, 0.0, 0.5, 4.0)):
        reference = float(abs(mpmath.gamma(nu + 1j * x)) ** 2)
        assert pygkcs.specfun.abs_gamma_sq(nu, x) == pytest.approx(reference, rel=1e-12)


def _unittest_pochhammer_oracle() -> None:
    for a, m in itertools.product((0.5, 1.25 + 0.7j, 3.0, -2.5), range(0, 12)):
        reference = complex(mpmath.rf(a, m))
        assert pygkcs.specfun.pochhammer(a, m) == pytest.approx(reference, rel=1e-13, abs=1e-300)


def _unittest_laguerre_oracle() -> None:
    for a, u in itertools.product((0.5, 1.5, 3.25), (0.1, 1.0, 4.0, 9.0)):
        scale = 1.0
        for m in range(16):
            reference = float(mpmath.laguerre(m, a, u))
            scale = max(scale, abs(reference))
            assert abs(pygkcs.specfun.laguerre(m, a, u) - reference) <= 1e-12 * scale, (m, a, u)


def _unittest_mp_poly_oracle() -> None:
    for lam, theta, x in itertools.product((0.75, 1.25, 2.0),
                                           (math.pi / 4, math.pi / 2, 2 * math.pi / 3),
                                           (-3.0, 0.0, 0.4, 2.5)):
        p = MPPolyParams(lam, theta)
        scale = 1.0
        for m in range(21):
            reference = mp_poly_hypergeometric(m, lam, theta, x)
            assert abs(reference.imag) <= 1e-15 * max(1.0, abs(reference.real))
            scale = max(scale, abs(reference.real))
            assert abs(pygkcs.specfun.mp_poly(m, p, x) - reference.real) <= 1e-11 * scale, (m, p, x)


def _unittest_hyp1f1_oracle() -> None:
    cases = [
        (0.5, 1.5, 2.0),
        (1.25 + 0.4j, 2.5, -3.0),
        (2.0, 3.5, 1.5 + 4.0j),
        (1.25 + 0.4j, 2.5, 0.5 - 1.0j),
        (-5, 1.5, 2.0),
    ]
    for a, c, z in cases:
        reference = complex(mpmath.hyp1f1(a, c, z))
        result = pygkcs.specfun.hyp1f1(a, c, z)
        assert result.converged
        assert result.value == pytest.approx(reference, rel=1e-10), (a, c, z)


def _unittest_hyp2f1_oracle() -> None:
    cases = [
        (0.5, 1.5, 2.5, 0.5),
        (1.25 + 0.3j, 1.25 - 0.3j, 2.5, -0.8),
        (1.25 + 0.3j, 1.25 + 0.7j, 2.5, -5.0),
        (1.0, 1.5 + 1.0j, 3.0, 0.3 + 0.4j),
        (-4, 1.0 + 1.0j, 2.5, 3.0),
    ]
    for a, b, c, z in cases:
        reference = complex(mpmath.hyp2f1(a, b, c, z))
        result = pygkcs.specfun.hyp2f1(a, b, c, z)
        assert result.converged
        assert result.value == pytest.approx(reference, rel=1e-10), (a, b, c, z)


def _unittest_bilinear_oracle() -> None:
    mu, gamma = math.exp(-0.4), 2.5
    for x, y, theta1, theta2 in [(0.3, -1.1, math.pi / 4, 2 * math.pi / 3),
                                 (0.7, 0.7, math.pi / 3, math.pi / 3),
                                 (-2.0, -1.5, math.pi / 2, math.pi / 2)]:
        reference = complex(bilinear_sum(mu, gamma, x, y, theta1, theta2))
        closed = pygkcs.specfun.mp_bilinear_closed(mu, gamma, x, y, theta1, theta2)
        assert closed == pytest.approx(reference, rel=1e-8), (x, y, theta1, theta2)
