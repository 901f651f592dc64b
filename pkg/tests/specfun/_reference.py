#
# Copyright (c) 2020 pygkcs developers
# This software is distributed under the terms of the MIT License.
#

"""
Extended-precision reference values computed with mpmath at the current working precision.
"""

import typing
import mpmath


def mp_poly_hypergeometric(m: int, lam: float, theta: float, x: float) -> complex:
    """
    The Meixner-Pollaczek polynomial through the terminating Gauss function. Usable for low degrees only.
    """
    z = 1 - mpmath.exp(-2j * mpmath.mpf(theta))
    value = mpmath.rf(2 * lam, m) / mpmath.factorial(m) * mpmath.exp(1j * m * mpmath.mpf(theta)) \
        * mpmath.hyp2f1(-m, lam + 1j * mpmath.mpf(x), 2 * lam, z)
    return complex(value)


def mp_poly_recurrence(count: int, lam: float, theta: float, x: float) -> typing.List[typing.Any]:
    """
    ``P_0 .. P_{count-1}``. The terminating hypergeometric sums cancel catastrophically at high degrees;
    the recurrence does not.
    """
    s, c = mpmath.sin(theta), mpmath.cos(theta)
    out = [mpmath.mpf(1), 2 * (x * s + lam * c)]
    for k in range(1, count - 1):
        out.append((2 * (x * s + (k + lam) * c) * out[k] - (k + 2 * lam - 1) * out[k - 1]) / (k + 1))
    return out[:count]


def bilinear_sum(mu: float,
                 gamma: float,
                 x: float,
                 y: float,
                 theta1: float,
                 theta2: float,
                 count: int = 400) -> typing.Any:
    """
    ``Σ_m m!/(γ)_m μ^m P_m(x; θ₁) P_m(y; θ₂)`` truncated after ``count`` terms.
    """
    px = mp_poly_recurrence(count, gamma / 2, theta1, x)
    py = mp_poly_recurrence(count, gamma / 2, theta2, y)
    out = mpmath.mpf(0)
    for m in range(count):
        out += mpmath.factorial(m) / mpmath.rf(gamma, m) * mpmath.mpf(mu) ** m * px[m] * py[m]
    return out
