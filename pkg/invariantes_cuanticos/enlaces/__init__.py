"""enlaces - Invariantes de enlaces enmarcados con q genérico

Exporta:
- presentaciones: Unknot, Hopf, Trefoil, FigureEight, Braid, linking_matrix
- jones: jones_trefoil, jones_fig8
- trenzas: braid_jones_sl2
- invariante_q: q_value, q_normalize, framing_shift, verificaciones de integralidad y simetría
"""

from .presentaciones import (
    NOMBRES_ESPECIALES,
    Braid,
    FigureEight,
    FramedLink,
    Hopf,
    Quiralidad,
    Trefoil,
    Unknot,
    describir,
    framings,
    hopf_braid,
    linking_matrix,
    number_of_components,
    unlink_braid,
)
from .jones import jones_fig8, jones_trefoil
from .trenzas import braid_jones_sl2, r_matrix
from .invariante_q import (
    dominant_representative,
    equivalent_mod_r,
    framing_shift,
    integrality_check,
    integrality_exponent,
    orientation_check,
    q_normalize,
    q_value,
    symmetry1_check,
    symmetry2_check,
    symmetry2_exponent,
    zeta_exponents,
)

__all__ = [
    'NOMBRES_ESPECIALES',
    'Braid',
    'FigureEight',
    'FramedLink',
    'Hopf',
    'Quiralidad',
    'Trefoil',
    'Unknot',
    'describir',
    'framings',
    'hopf_braid',
    'linking_matrix',
    'number_of_components',
    'unlink_braid',
    'jones_fig8',
    'jones_trefoil',
    'braid_jones_sl2',
    'r_matrix',
    'dominant_representative',
    'equivalent_mod_r',
    'framing_shift',
    'integrality_check',
    'integrality_exponent',
    'orientation_check',
    'q_normalize',
    'q_value',
    'symmetry1_check',
    'symmetry2_check',
    'symmetry2_exponent',
    'zeta_exponents',
]
