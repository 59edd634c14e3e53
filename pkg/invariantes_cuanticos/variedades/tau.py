"""
Invariantes τ^g, τ^{Pg} y τ^G de 3-variedades presentadas por cirugía.

τ_M = F_L / (F_{U₊}^{σ₊} · F_{U₋}^{σ₋}) en el sabor pedido. Si F_{U₊} o F_{U₋} se
anula el invariante vale 0 por convención y el resultado se marca como no definido.
"""

import logging
from dataclasses import dataclass
from math import gcd
from typing import Optional

from ..aritmetica import CycField, CycNum, legendre, validar_primo_impar
from ..enlaces import Unknot
from ..excepciones import EntradaInvalidaError
from ..lie import RootSystem
from .especificacion import ManifoldSpec, SignatureData, homology_order, signature
from .sumas_f import F_sum, Sabor, campo_sabor, validar_nivel

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class InvariantResult:
    flavor: Sabor
    value: CycNum
    field: CycField
    r: int
    zeta_exponent: int
    defined: bool = True
    signature: Optional[SignatureData] = None
    homology_order: Optional[int] = None


def tau(
    spec: ManifoldSpec,
    rs: RootSystem,
    r: int,
    flavor: Sabor = Sabor.FULL,
    a: int = 1,
    max_enumeracion: Optional[int] = None,
) -> InvariantResult:
    flavor = Sabor(flavor)
    if flavor != Sabor.CENTER:
        validar_nivel(rs, r)
    campo = campo_sabor(rs, r, flavor, a)
    matriz = spec.linking_matrix()
    firma = signature(matriz)
    orden_h1 = homology_order(matriz)
    if firma.sigma_zero:
        logger.warning(f" '{spec.name}': la matriz de enlace tiene σ₀={firma.sigma_zero} autovalores nulos")
    exponente = a % campo.m

    f_mas = F_sum(rs, r, Unknot(1), flavor, a)
    f_menos = F_sum(rs, r, Unknot(-1), flavor, a)
    if f_mas.is_zero() or f_menos.is_zero():
        logger.warning(f" F_U± = 0 para {rs.nombre}, r={r}, sabor {flavor.value}: τ = 0 por convención")
        return InvariantResult(flavor, campo.zero(), campo, r, exponente, False, firma, orden_h1)

    numerador = campo.one()
    for link in spec.flatten():
        numerador = numerador * F_sum(rs, r, link, flavor, a, max_enumeracion)
    valor = numerador / (f_mas ** firma.sigma_plus * f_menos ** firma.sigma_minus)
    logger.info(f" τ^{flavor.value} de '{spec.name}' para {rs.nombre}, r={r}, a={a}")
    return InvariantResult(flavor, valor, campo, r, exponente, True, firma, orden_h1)


def tau_lens_closed_form(rs: RootSystem, r: int, b: int, a: int = 1) -> CycNum:
    """
    τ^{Pg} del espacio lente de la cirugía en U_b:

        (|b|/r)^ℓ · ξ^{((sn(b)−b)/2·|ρ|²)~} · Π_{α>0} (1 − ξ^{−(b*ρ|α)}) / (1 − ξ^{−(sn(b)ρ|α)})

    con (x/y)~ = x·y* mod r.
    """
    validar_primo_impar(r)
    if gcd(b, r) != 1:
        raise EntradaInvalidaError(f"Se requiere mcd(b, r) = 1; b={b}, r={r}")
    if gcd(2 * rs.D, r) != 1:
        raise EntradaInvalidaError(f"La reducción módulo r requiere mcd(2D, r) = 1; D={rs.D}, r={r}")
    campo = CycField.xi(r, a)
    signo = 1 if b > 0 else -1
    b_estrella = pow(b, -1, r)
    exponente = (signo - b) * rs.inner_scaled(rs.rho, rs.rho) * pow(2 * rs.D, -1, r)
    valor = campo.zeta_power(exponente) * legendre(abs(b), r) ** rs.rank
    for alpha in rs.positive_roots:
        x = rs.inner_scaled(alpha, rs.rho) // rs.D
        valor = valor * (1 - campo.zeta_power(-b_estrella * x)) / (1 - campo.zeta_power(-signo * x))
    return valor
