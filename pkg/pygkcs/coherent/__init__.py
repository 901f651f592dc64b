#
# Copyright (c) 2020 pygkcs developers
# This software is distributed under the terms of the MIT License.
#

"""
Coherent states of the Gol'dman-Krivchenkov model with Meixner-Pollaczek coefficients::

    |x, ε⟩ = N(x)^{-1/2} Σ_m e^{-β(2m+γ)ε} p̂_m(x) |ψ_m⟩

where ``p̂_m`` are the orthonormalized polynomials ``P_m^{(γ/2)}(x; θ)``. The states are labelled by
:class:`CSLabel`. Every closed form here has a series counterpart that shares no code with it beyond
the basic special functions, so the two can be compared.
"""

from ..specfun import IdentityViolationError as IdentityViolationError

from ._label import CSLabel as CSLabel

from ._weights import CSWeights as CSWeights
from ._weights import sigma as sigma

from ._normalization import normalization_series as normalization_series
from ._normalization import normalization_closed as normalization_closed

from ._wavefunction import cs_wavefunction_series as cs_wavefunction_series
from ._wavefunction import cs_wavefunction_closed as cs_wavefunction_closed
from ._wavefunction import state_coefficients as state_coefficients

from ._overlap import overlap as overlap
from ._overlap import overlap_series as overlap_series
from ._overlap import overlap_matrix as overlap_matrix

from ._measure import upsilon as upsilon
from ._measure import measure_density as measure_density
