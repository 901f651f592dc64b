#
# Copyright (c) 2020 pygkcs developers
# This software is distributed under the terms of the MIT License.
#

from __future__ import annotations
import math
import typing
import logging
import numpy
from ..specfun import SeriesEval, DEFAULT_COMPOSITE_TOLERANCE, DEFAULT_MAX_TERMS
from ..specfun import mp_bilinear_closed, mp_bilinear_series
from ._label import CSLabel
from ._normalization import normalization_closed, normalization_series, require_real


_logger = logging.getLogger(__name__)


def overlap(label1: CSLabel, label2: CSLabel, tol: float = DEFAULT_COMPOSITE_TOLERANCE) -> complex:
    """
    ``⟨x₁,ε|x₂,ε⟩ = (N₁N₂)^{-1/2} e^{-2εβγ} B(e^{-4εβ}; x₁, x₂)`` where ``B`` is the bilinear MP identity.
    The coefficients of both states are real, so the overlap is real and symmetric;
    it is returned as a complex number for uniformity with the other inner products.

    >>> from ..gk_model import GKParams
    >>> a = CSLabel(0.5, math.pi / 2, 0.1, GKParams.from_gamma(2.5, 1.0))
    >>> overlap(a, a)
    (1+0j)
    >>> 0 < overlap(a, a.with_x(1.0)).real < 1
    True
    >>> overlap(a, CSLabel(0.5, math.pi / 3, 0.1, a.params))
    Traceback (most recent call last):
    ...
    ValueError: ...
    """
    _check_family(label1, label2)
    if label1.x == label2.x:
        return 1 + 0j
    p = label1.params
    raw = mp_bilinear_closed(label1.mu, p.gamma, label1.x, label2.x, label1.theta, label1.theta, tol=tol)
    scale = math.exp(-2.0 * label1.epsilon * p.beta * p.gamma) \
        / math.sqrt(normalization_closed(label1, tol=tol) * normalization_closed(label2, tol=tol))
    value = raw * scale
    # The overlap is bounded by one, which sets the absolute scale of the residue check.
    require_real(value, f'overlap of x={label1.x} and x={label2.x}', allowance=10.0 * tol)
    return complex(value.real, 0.0)


def overlap_series(label1:    CSLabel,
                   label2:    CSLabel,
                   tol:       float = DEFAULT_COMPOSITE_TOLERANCE,
                   max_terms: int = DEFAULT_MAX_TERMS) -> SeriesEval:
    """
    The same inner product summed over the eigenbasis. The scaling factor is at most one.

    >>> from ..gk_model import GKParams
    >>> a = CSLabel(0.5, math.pi / 2, 0.1, GKParams.from_gamma(2.5, 1.0))
    >>> bool(abs(overlap_series(a, a.with_x(-0.5)).value - overlap(a, a.with_x(-0.5))) < 1e-8)
    True
    """
    _check_family(label1, label2)
    p = label1.params
    raw = mp_bilinear_series(label1.mu, p.gamma, label1.x, label2.x, label1.theta, label1.theta,
                             tol=tol, max_terms=max_terms)
    n1 = normalization_series(label1, tol=tol, max_terms=max_terms).real
    n2 = n1 if label1.x == label2.x else normalization_series(label2, tol=tol, max_terms=max_terms).real
    return raw.scaled(math.exp(-2.0 * label1.epsilon * p.beta * p.gamma) / math.sqrt(n1 * n2))


def overlap_matrix(labels: typing.Sequence[CSLabel], tol: float = DEFAULT_COMPOSITE_TOLERANCE) -> numpy.ndarray:
    """
    The Hermitian Gram matrix of the given states. Only the upper triangle is evaluated.

    >>> from ..gk_model import GKParams
    >>> base = CSLabel(0.0, 1.0, 0.2, GKParams.from_gamma(2.5, 1.0))
    >>> g = overlap_matrix([base.with_x(x) for x in (-1.0, 0.0, 1.0)])
    >>> g.shape, bool(numpy.all(numpy.diag(g) == 1))
    ((3, 3), True)
    """
    if not labels:
        raise ValueError('At least one label is required')
    for lab in labels[1:]:
        _check_family(labels[0], lab)
    n = len(labels)
    out = numpy.eye(n, dtype=complex)
    for i in range(n):
        for j in range(i + 1, n):
            out[i, j] = overlap(labels[i], labels[j], tol=tol)
            out[j, i] = out[i, j].conjugate()
    _logger.debug('Overlap matrix of %d states: %r', n, out)
    return out


def _check_family(label1: CSLabel, label2: CSLabel) -> None:
    if not label1.same_family(label2):
        raise ValueError(f'The overlap is only defined for states that differ in x alone; got {label1} and {label2}')


def _unittest_overlap() -> None:
    from pytest import approx, raises
    from ..gk_model import GKParams

    p = GKParams.from_gamma(1.8, 1.0)
    base = CSLabel(0.0, 2 * math.pi / 3, 0.1, p)
    xs = [-3.0, -1.2, -0.4, 0.0, 0.9, 2.5]
    g = overlap_matrix([base.with_x(x) for x in xs])
    assert numpy.allclose(g, g.conj().T)
    assert float(numpy.min(numpy.linalg.eigvalsh(g))) >= -1e-8
    assert numpy.all(numpy.abs(g) <= 1.0 + 1e-9)

    for x1, x2 in ((-1.2, 0.9), (0.0, 2.5)):
        a, b = base.with_x(x1), base.with_x(x2)
        assert overlap(a, b) == approx(overlap(b, a), rel=1e-9)
        assert overlap(a, b) == approx(overlap_series(a, b).value, rel=1e-7, abs=1e-9)
        assert overlap(a.flipped(), b.flipped()) == approx(overlap(a, b), rel=1e-8, abs=1e-10)

    with raises(ValueError):
        overlap(base, CSLabel(0.0, 2 * math.pi / 3, 0.2, p))
    with raises(ValueError):
        overlap_matrix([])
