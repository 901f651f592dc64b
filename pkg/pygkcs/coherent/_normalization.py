#
# Copyright (c) 2020 pygkcs developers
# This software is distributed under the terms of the MIT License.
#

"""
The normalization function ``N(x) = ⟨x,ε|x,ε⟩`` of the unnormalized coherent state
``Σ_m e^{-β(2m+γ)ε} p̂_m(x) ψ_m``, by its defining series and by the bilinear generating identity.
"""

from __future__ import annotations
import math
import cmath
import logging
from ..specfun import SeriesEval, IdentityViolationError, DEFAULT_COMPOSITE_TOLERANCE, DEFAULT_MAX_TERMS
from ..specfun import mp_bilinear_closed, mp_bilinear_series, hyp2f1
from ._label import CSLabel


IMAGINARY_RESIDUE_TOLERANCE = 1e-9
"""
The imaginary part of a quantity that is real by construction may not exceed this fraction of its magnitude.
"""

_logger = logging.getLogger(__name__)


def normalization_series(label:     CSLabel,
                         tol:       float = DEFAULT_COMPOSITE_TOLERANCE,
                         max_terms: int = DEFAULT_MAX_TERMS) -> SeriesEval:
    """
    ``N = e^{-2εβγ} Σ_m m!/(γ)_m e^{-4εβm} P_m²``. The terms are non-negative, so the partial sums are monotone.

    >>> from ..gk_model import GKParams
    >>> n = normalization_series(CSLabel(0.0, math.pi / 2, 0.25, GKParams.from_gamma(2.0, 1.0)))
    >>> n.converged, abs(n.real - math.atanh(math.exp(-1.0))) < 1e-10
    (True, True)
    """
    raw = mp_bilinear_series(label.mu, label.params.gamma, label.x, label.x, label.theta, label.theta,
                             tol=tol, max_terms=max_terms)
    return raw.scaled(_ground_factor(label))


def normalization_closed(label:   CSLabel,
                         literal: bool = False,
                         tol:     float = DEFAULT_COMPOSITE_TOLERANCE) -> float:
    """
    The closed form ``e^{-2εβγ} · B(e^{-4εβ}; x, x)`` where ``B`` is the bilinear MP identity
    :func:`pygkcs.specfun.mp_bilinear_closed`; algebraically::

        (2 sinh 2εβ)^{-γ} ((1 - μe^{2iθ}) / (1 - μ))^{2ix} ₂F₁(λ+ix, λ+ix; γ; -4μ sin²θ / (1-μ)²)

    With ``literal=True`` the display above is evaluated as it is commonly printed, that is, without the
    ``(1 - μ)^{-2ix}`` factor. That expression is complex unless ``x = 0``,
    which the imaginary-residue check reports as :class:`pygkcs.specfun.IdentityViolationError`.

    >>> from ..gk_model import GKParams
    >>> lab = CSLabel(0.0, math.pi / 2, 0.25, GKParams.from_gamma(2.0, 1.0))
    >>> abs(normalization_closed(lab, tol=1e-14) - normalization_series(lab, tol=1e-14).real) < 1e-12
    True
    >>> abs(normalization_closed(lab) - normalization_series(lab).real) < 1e-9
    True
    >>> normalization_closed(lab.with_x(0.8), literal=True)
    Traceback (most recent call last):
    ...
    pygkcs.specfun._error.IdentityViolationError: ...
    """
    if literal:
        value = _literal_display(label, tol)
    else:
        g = label.params.gamma
        value = _ground_factor(label) * mp_bilinear_closed(label.mu, g, label.x, label.x, label.theta, label.theta,
                                                           tol=tol)
    return require_real(value, 'normalization' + (' (literal display)' if literal else ''))


def require_real(value: complex, what: str, allowance: float = 0.0) -> float:
    """
    Returns the real part, or raises :class:`pygkcs.specfun.IdentityViolationError` if the imaginary residue
    exceeds ``IMAGINARY_RESIDUE_TOLERANCE · |value| + allowance``.
    """
    value = complex(value)
    if abs(value.imag) > IMAGINARY_RESIDUE_TOLERANCE * abs(value) + allowance:
        _logger.warning('%s has the imaginary residue %.3g at the magnitude %.3g', what, value.imag, abs(value))
        raise IdentityViolationError(f'{what} must be real; got {value!r}')
    return value.real


def _literal_display(label: CSLabel, tol: float) -> complex:
    beta, g, th, x = label.params.beta, label.params.gamma, label.theta, label.x
    mu = label.mu
    lam = 0.5 * g
    z = -4.0 * mu * math.sin(th) ** 2 / (1.0 - mu) ** 2
    gauss = hyp2f1(lam + 1j * x, lam + 1j * x, g, z, tol=tol)
    log_prefactor = -g * math.log(2.0 * math.sinh(2.0 * label.epsilon * beta)) \
        + 2j * x * cmath.log(1.0 - mu * cmath.exp(2j * th))
    out = cmath.exp(log_prefactor) * gauss.value
    _logger.debug('Literal normalization display at %r: %r', label, out)
    return out


def _ground_factor(label: CSLabel) -> float:
    return math.exp(-2.0 * label.epsilon * label.params.beta * label.params.gamma)


def _unittest_normalization() -> None:
    from pytest import approx, raises
    from ..gk_model import GKParams

    p = GKParams.from_gamma(2.5, 1.0)
    for x in (-3.0, -0.4, 0.0, 1.3, 4.0):
        for theta in (math.pi / 3, math.pi / 2, 2 * math.pi / 3):
            lab = CSLabel(x, theta, 0.1, p)
            series = normalization_series(lab)
            assert series.converged
            assert normalization_closed(lab) == approx(series.real, rel=1e-8)
            assert normalization_closed(lab.flipped()) == approx(normalization_closed(lab), rel=1e-9)

    # The literal display agrees at the origin only.
    lab = CSLabel(0.0, 1.1, 0.05, p)
    assert normalization_closed(lab, literal=True) == approx(normalization_closed(lab), rel=1e-9)
    with raises(IdentityViolationError):
        normalization_closed(lab.with_x(-1.5), literal=True)

    # Every term of the defining series decreases with ε.
    ladder = [normalization_closed(CSLabel(0.5, math.pi / 2, eps, p)) for eps in (0.4, 0.2, 0.1, 0.05)]
    assert all(a < b for a, b in zip(ladder, ladder[1:]))

    # Both routes tighten together with the tolerance.
    lab = CSLabel(0.0, math.pi / 2, 0.25, GKParams.from_gamma(2.0, 1.0))
    exact = math.atanh(math.exp(-1.0))
    assert normalization_series(lab, tol=1e-14).real == approx(exact, rel=1e-12)
    assert normalization_closed(lab, tol=1e-14) == approx(exact, rel=1e-12)
    assert normalization_closed(lab) == approx(normalization_series(lab).real, rel=1e-9)
