"""lie - Datos de Lie y dominios fundamentales

Exporta:
- sistema_raices: RootSystem, build_root_system, inner
- dominio: LatticeDomain, Dominio, enumerate_domain, affine_reduce, center_action
"""

from .sistema_raices import RootSystem, Weight, build_root_system, inner, matriz_cartan
from .dominio import (
    Dominio,
    LatticeDomain,
    affine_image,
    affine_reduce,
    center_action,
    center_orbits,
    center_transversal_check,
    enumerate_domain,
    fundamental_domain_partition,
)

__all__ = [
    'RootSystem',
    'Weight',
    'build_root_system',
    'inner',
    'matriz_cartan',
    'Dominio',
    'LatticeDomain',
    'affine_image',
    'affine_reduce',
    'center_action',
    'center_orbits',
    'center_transversal_check',
    'enumerate_domain',
    'fundamental_domain_partition',
]
