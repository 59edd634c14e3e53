"""variedades - Invariantes cuánticos de 3-variedades presentadas por cirugía

Exporta:
- especificacion: ManifoldSpec, load_manifold_spec, signature, homology_order
- sumas_f: Sabor, F_sum, F_center, F_U_closed_form
- tau: InvariantResult, tau, tau_lens_closed_form
- verificaciones: matriz S, separación, movimientos de Kirby, valoraciones y casos triviales
"""

from .schemas import BraidRecord, ComponenteModel, EspecialModel, ManifoldSpecModel
from .especificacion import (
    ManifoldSpec,
    SignatureData,
    homology_order,
    load_manifold_spec,
    signature,
)
from .sumas_f import F_U_closed_form, F_center, F_sum, Sabor, campo_sabor, inverso_compatible, validar_nivel
from .tau import InvariantResult, tau, tau_lens_closed_form
from .verificaciones import (
    F_split_check,
    kirby_equivalence_check,
    divisibility_check,
    projective_valuation_check,
    s_matrix_check,
    splitting_check,
    trivial_cases_check,
)

__all__ = [
    'BraidRecord',
    'ComponenteModel',
    'EspecialModel',
    'ManifoldSpecModel',
    'ManifoldSpec',
    'SignatureData',
    'homology_order',
    'load_manifold_spec',
    'signature',
    'F_U_closed_form',
    'F_center',
    'F_sum',
    'Sabor',
    'campo_sabor',
    'inverso_compatible',
    'validar_nivel',
    'InvariantResult',
    'tau',
    'tau_lens_closed_form',
    'F_split_check',
    'kirby_equivalence_check',
    'divisibility_check',
    'projective_valuation_check',
    's_matrix_check',
    'splitting_check',
    'trivial_cases_check',
]
