"""
Sumas de Gauss sobre los dominios fundamentales y sobre el centro.

Contiene:
- GaussData / TipoGauss: valor exacto y parámetros
- gauss_full: γ^g sobre P_r∩X, en el cuerpo de ζ
- gauss_proj: γ_b^{Pg} sobre ρ+(P_r∩Y), en el cuerpo de ξ
- completion_identity_check: completar el cuadrado (versiones X e Y)
- gauss_center: F^G_{U±} = Σ_{g∈G} ξ^{±r(r−h)(g|g)/2}
- gauss_vanishing_prediction, smatrix_identity_check
"""

import logging
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from math import gcd

import numpy as np

from ..aritmetica import AnilloGrupo, CycField, CycNum
from ..excepciones import EntradaInvalidaError
from ..lie import Dominio, LatticeDomain, RootSystem, Weight, enumerate_domain
from .weyl import hopf_numerator, orden_zeta, weyl_numerator

logger = logging.getLogger(__name__)


class TipoGauss(str, Enum):
    FULL = "gamma_g"
    PROJECTIVE = "gamma_Pg"
    TWISTED = "gamma_b_Pg"
    CENTER = "F_G_U"


class Reticulo(str, Enum):
    X = "X"
    Y = "Y"


@dataclass(frozen=True)
class GaussData:
    kind: TipoGauss
    value: CycNum
    r: int
    b: int = 1


def _exponentes_torsion(rs: RootSystem, puntos) -> np.ndarray:
    """D(|μ|² − |ρ|²) para cada fila, es decir q^{(|μ|²−|ρ|²)/2} = ζ^e."""
    P = np.asarray(puntos, dtype=np.int64)
    cuadrados = np.einsum("ij,jk,ik->i", P, rs.gram_D, P)
    return cuadrados - rs.inner_scaled(rs.rho, rs.rho)


def _emparejamientos(rs: RootSystem, puntos, beta: Weight) -> np.ndarray:
    """D(μ|β) para cada fila."""
    P = np.asarray(puntos, dtype=np.int64)
    return P @ (rs.gram_D @ np.asarray(beta, dtype=np.int64))


@lru_cache(maxsize=256)
def gauss_full(rs: RootSystem, r: int, a: int = 1) -> GaussData:
    """γ^g(ξ, ζ) = Σ_{μ∈P_r∩X} ξ^{(|μ|²−|ρ|²)/2}, con la potencia fraccionaria vía ζ."""
    field = CycField.zeta(rs.D, r, a)
    puntos = enumerate_domain(LatticeDomain(rs, r), Dominio.PR_X)
    suma = AnilloGrupo.desde_exponentes(field.m, _exponentes_torsion(rs, puntos))
    logger.debug(f" γ^g para {rs.nombre}, r={r}: {len(puntos)} términos")
    return GaussData(TipoGauss.FULL, suma.to_cyc(field), r)


@lru_cache(maxsize=256)
def gauss_proj(rs: RootSystem, r: int, b: int = 1, a: int = 1) -> GaussData:
    """γ_b^{Pg}(ξ) = Σ_{μ∈ρ+(P_r∩Y)} ξ^{b(|μ|²−|ρ|²)/2}; los exponentes son enteros."""
    field = CycField.xi(r, a)
    puntos = enumerate_domain(LatticeDomain(rs, r), Dominio.RHO_PR_Y)
    exponentes = b * (_exponentes_torsion(rs, puntos) // (2 * rs.D))
    suma = AnilloGrupo.desde_exponentes(field.m, exponentes)
    tipo = TipoGauss.PROJECTIVE if b == 1 else TipoGauss.TWISTED
    return GaussData(tipo, suma.to_cyc(field), r, b)


def completion_identity_check(
    rs: RootSystem,
    r: int,
    beta: Weight,
    b: int = 1,
    lattice: Reticulo = Reticulo.Y,
    a: int = 1,
) -> bool:
    """
    Completar el cuadrado: Σ ξ^{b(|μ|²−|ρ|²)/2} ξ^{(β|μ)} = γ_b · ξ^{−b*|β|²/2}.

    Versión X: β ∈ X, suma sobre P_r∩X en el cuerpo de ζ, sólo b = 1.
    Versión Y: β ∈ Y, suma sobre ρ+(P_r∩Y) en el cuerpo de ξ, mcd(b, r) = 1.
    """
    lattice = Reticulo(lattice)
    beta = tuple(int(x) for x in beta)
    dom = LatticeDomain(rs, r)
    if lattice == Reticulo.X:
        if b != 1:
            raise EntradaInvalidaError("La versión X de completar el cuadrado sólo admite b = 1")
        field = CycField.zeta(rs.D, r, a)
        puntos = enumerate_domain(dom, Dominio.PR_X)
        exponentes = _exponentes_torsion(rs, puntos) + 2 * _emparejamientos(rs, puntos, beta)
        izquierda = AnilloGrupo.desde_exponentes(field.m, exponentes).to_cyc(field)
        derecha = gauss_full(rs, r, a).value * field.zeta_power(-rs.inner_scaled(beta, beta))
        return izquierda == derecha

    if not rs.in_root_lattice(beta):
        raise EntradaInvalidaError(f"β={beta} no está en el retículo de raíces")
    if gcd(b, r) != 1:
        raise EntradaInvalidaError(f"La identidad requiere mcd(b, r) = 1; b={b}, r={r}")
    field = CycField.xi(r, a)
    b_inv = pow(b, -1, r) if r > 1 else 0
    puntos = enumerate_domain(dom, Dominio.RHO_PR_Y)
    exponentes = (
        b * (_exponentes_torsion(rs, puntos) // (2 * rs.D))
        + _emparejamientos(rs, puntos, beta) // rs.D
    )
    izquierda = AnilloGrupo.desde_exponentes(field.m, exponentes).to_cyc(field)
    mitad_beta = rs.inner_scaled(beta, beta) // (2 * rs.D)
    derecha = gauss_proj(rs, r, b, a).value * field.zeta_power(-b_inv * mitad_beta)
    return izquierda == derecha


@lru_cache(maxsize=256)
def gauss_center(rs: RootSystem, r: int, sign: int = 1, a: int = 1) -> CycNum:
    """
    F^G_{U±} = Σ_{g∈G} ξ^{±r(r−h)(g|g)/2}.

    ξ^{r(r−h)(g|g)/2} = ζ^{r(r−h)·D(g|g)}; no depende del levantamiento de g.
    """
    if sign not in (1, -1):
        raise EntradaInvalidaError(f"El signo debe ser ±1, se recibió {sign}")
    field = CycField.zeta(rs.D, r, a)
    exponentes = [
        sign * r * (r - rs.h) * rs.inner_scaled(g, g) for g in rs.center.representatives
    ]
    return AnilloGrupo.desde_exponentes(field.m, exponentes).to_cyc(field)


def gauss_vanishing_prediction(rs: RootSystem, r: int) -> bool:
    """γ^g se anula exactamente cuando r es impar y g es C_ℓ, o B_ℓ con ℓ par."""
    tipo, rango = rs.type_and_rank
    return r % 2 == 1 and (tipo == "C" or (tipo == "B" and rango % 2 == 0))


def smatrix_identity_check(rs: RootSystem, r: int, lam: Weight, a: int = 1) -> bool:
    """
    Σ_{μ∈P_r∩X} q^{(|μ|²−|ρ|²)/2} J_U(μ) J_H(λ, μ)
        = (−1)^s |W| ψ⁻¹ q^{−(|ρ|²+|λ|²)/2} γ^g J_U(λ)   en q^{1/(2D)} = ζ.

    Ambos lados llevan ψ⁻²; se comparan los numeradores en Q(ζ).
    """
    lam = tuple(int(x) for x in lam)
    field = CycField.zeta(rs.D, r, a)
    m = orden_zeta(rs, r)
    puntos = enumerate_domain(LatticeDomain(rs, r), Dominio.PR_X)
    torsiones = _exponentes_torsion(rs, puntos)
    izquierda = AnilloGrupo(m)
    for mu, e in zip(puntos, torsiones.tolist()):
        izquierda += (weyl_numerator(rs, mu, r) * hopf_numerator(rs, lam, mu, r)).desplazar(e)
    signo = -1 if rs.s % 2 else 1
    desplazamiento = -(rs.inner_scaled(rs.rho, rs.rho) + rs.inner_scaled(lam, lam))
    derecha = (
        gauss_full(rs, r, a).value
        * weyl_numerator(rs, lam, r).desplazar(desplazamiento).to_cyc(field)
        * (signo * rs.weyl_order)
    )
    return izquierda.to_cyc(field) == derecha
