"""sumas - Sumas de Weyl y sumas de Gauss

Exporta:
- weyl: quantum_dim, psi, hopf_entry, numeradores en el anillo de grupo, normalizar_psi
- gauss: gauss_full, gauss_proj, gauss_center, completion_identity_check, smatrix_identity_check
"""

from .weyl import (
    evaluate_psi,
    hopf_entry,
    hopf_numerator,
    normalizar_psi,
    orden_zeta,
    psi,
    psi_expressions,
    psi_product,
    quantum_dim,
    weyl_exponents,
    weyl_numerator,
)
from .gauss import (
    GaussData,
    Reticulo,
    TipoGauss,
    completion_identity_check,
    gauss_center,
    gauss_full,
    gauss_proj,
    gauss_vanishing_prediction,
    smatrix_identity_check,
)

__all__ = [
    'evaluate_psi',
    'hopf_entry',
    'hopf_numerator',
    'normalizar_psi',
    'orden_zeta',
    'psi',
    'psi_expressions',
    'psi_product',
    'quantum_dim',
    'weyl_exponents',
    'weyl_numerator',
    'GaussData',
    'Reticulo',
    'TipoGauss',
    'completion_identity_check',
    'gauss_center',
    'gauss_full',
    'gauss_proj',
    'gauss_vanishing_prediction',
    'smatrix_identity_check',
]
