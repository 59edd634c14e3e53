"""aritmetica - Aritmética exacta ciclotómica y de Laurent

Exporta:
- ciclotomico: CycField, CycNum, root_power, embed, valuation_at_xi_minus_1, integrality_witness
- anillo_grupo: AnilloGrupo (acumulador Z[Z/m])
- laurent: LaurentHalf, quantum_integer, evaluate
- residuos: legendre
"""

from .ciclotomico import (
    CycField,
    CycNum,
    TipoCampo,
    approximate,
    embed,
    integrality_witness,
    root_power,
    valuation_at_xi_minus_1,
)
from .anillo_grupo import AnilloGrupo
from .laurent import LaurentHalf, evaluate, evaluate_to_group_ring, quantum_integer
from .residuos import legendre, validar_primo_impar

__all__ = [
    'CycField',
    'CycNum',
    'TipoCampo',
    'approximate',
    'embed',
    'integrality_witness',
    'root_power',
    'valuation_at_xi_minus_1',
    'AnilloGrupo',
    'LaurentHalf',
    'evaluate',
    'evaluate_to_group_ring',
    'quantum_integer',
    'legendre',
    'validar_primo_impar',
]
