#
# Copyright (c) 2020 pygkcs developers
# This software is distributed under the terms of the MIT License.
#

"""
The Gol'dman-Krivchenkov model: ``H = -d²/dξ² + β²ξ² + α/ξ²`` on the half-line ``ξ > 0``.

The physical parametrization uses the depth ϱ and the equilibrium position κ₀ of the potential
``ϱ(ξ/κ₀ - κ₀/ξ)²``; the reduced one uses ``(α, β)``; the coherent-state construction is expressed
through ``γ = 1 + ½√(1 + 4α)``. :class:`GKParams` carries all three.
"""

from ._params import GKParams as GKParams

from ._spectrum import eigenvalue as eigenvalue
from ._spectrum import eigenvalue_physical as eigenvalue_physical
from ._spectrum import potential as potential
from ._spectrum import potential_physical as potential_physical

from ._basis import eigenfunction as eigenfunction
from ._basis import eigenfunction_hypergeometric as eigenfunction_hypergeometric
from ._basis import basis_table as basis_table
from ._basis import eigen_residual as eigen_residual
