"""perturbativo - Series de Ohtsuki y expansión número-teórica

Exporta:
- serie: SerieH (series truncadas en ħ), sustituir_q
- expansiones: ExpansionN, ExpansionBeta, knot_expansion_sl2, unknot_expansion, degree_bound_check
- ohtsuki: OhtsukiSeries, ohtsuki_lens, ohtsuki_knot_sl2, ohtsuki_knot_general, ohtsuki_diag_link,
  compose_series, series_for_spec
- primos: PrimeExpansion, prime_expand, congruence_check, legendre
"""

from ..aritmetica import legendre
from .serie import SerieH, doble_factorial, sustituir_q, uno_menos_exp
from .expansiones import (
    ExpansionBeta,
    ExpansionN,
    con_marco_cero,
    degree_bound_check,
    knot_expansion_sl2,
    unknot_expansion,
)
from .ohtsuki import (
    OhtsukiSeries,
    Procedencia,
    compose_series,
    normalizacion_z,
    ohtsuki_diag_link,
    ohtsuki_knot_general,
    ohtsuki_knot_sl2,
    ohtsuki_lens,
    series_for_spec,
)
from .primos import (
    PrimeExpansion,
    congruence_check,
    congruence_rows,
    fraccion_mod,
    orden_verificable,
    prime_expand,
    representante,
    representative_independence_check,
    residuos_de_representante,
)

__all__ = [
    'legendre',
    'SerieH',
    'doble_factorial',
    'sustituir_q',
    'uno_menos_exp',
    'ExpansionBeta',
    'ExpansionN',
    'con_marco_cero',
    'degree_bound_check',
    'knot_expansion_sl2',
    'unknot_expansion',
    'OhtsukiSeries',
    'Procedencia',
    'compose_series',
    'normalizacion_z',
    'ohtsuki_diag_link',
    'ohtsuki_knot_general',
    'ohtsuki_knot_sl2',
    'ohtsuki_lens',
    'series_for_spec',
    'PrimeExpansion',
    'congruence_check',
    'congruence_rows',
    'fraccion_mod',
    'orden_verificable',
    'prime_expand',
    'representante',
    'representative_independence_check',
    'residuos_de_representante',
]
