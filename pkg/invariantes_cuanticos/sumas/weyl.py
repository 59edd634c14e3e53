"""
Sumas de Weyl: dimensión cuántica, ψ y entradas del enlace de Hopf.

Contiene:
- quantum_dim, psi, hopf_entry: versiones para q genérico (LaurentHalf)
- psi_expressions: las tres expresiones de ψ (producto, suma de Weyl, forma q^{−|ρ|²}Π)
- weyl_numerator, hopf_numerator: numeradores en el anillo de grupo Z[Z/2Dr]
- normalizar_psi: numerador acumulado · ψ^{−k} evaluado en el cuerpo de ζ o de ξ

Exponentes: q^{x} se escribe q^{e/(2D)} con e = 2D·x; en el anillo de grupo el índice
es el mismo e, pues q^{1/(2D)} ↦ ζ.
"""

import logging
from functools import lru_cache
from typing import Sequence, Tuple

import numpy as np

from ..aritmetica import AnilloGrupo, CycField, CycNum, LaurentHalf, TipoCampo
from ..excepciones import EntradaInvalidaError
from ..lie import RootSystem, Weight

logger = logging.getLogger(__name__)


# ==================== q GENÉRICO ====================

def _producto_binomios(rs: RootSystem, mu: Sequence[int]) -> LaurentHalf:
    """Π_{α>0}(q^{(μ|α)/2} − q^{−(μ|α)/2})."""
    resultado = LaurentHalf.constant(rs.D, 1)
    for alpha in rs.positive_roots:
        e = rs.inner_scaled(mu, alpha)
        if e == 0:
            return LaurentHalf(rs.D)
        resultado = resultado * LaurentHalf(rs.D, {e: 1, -e: -1})
    return resultado


def _suma_weyl(rs: RootSystem, mu: Sequence[int], lam: Sequence[int]) -> LaurentHalf:
    """Σ_w sn(w) q^{(μ|w(λ))}."""
    exponentes = 2 * (rs.weyl_orbit(lam) @ (rs.gram_D @ np.asarray(mu, dtype=np.int64)))
    terminos = {}
    for e, signo in zip(exponentes.tolist(), rs.weyl_signs.tolist()):
        terminos[e] = terminos.get(e, 0) + signo
    return LaurentHalf(rs.D, terminos)


@lru_cache(maxsize=None)
def psi(rs: RootSystem) -> LaurentHalf:
    """ψ = Π_{α>0}(q^{(ρ|α)/2} − q^{−(ρ|α)/2})."""
    return _producto_binomios(rs, rs.rho)


def psi_expressions(rs: RootSystem) -> Tuple[LaurentHalf, LaurentHalf, LaurentHalf]:
    """(producto, suma de Weyl, q^{−|ρ|²}Π(q^{(α|ρ)} − 1)); las tres deben coincidir."""
    producto = psi(rs)
    suma = _suma_weyl(rs, rs.rho, rs.rho)
    forma = LaurentHalf.monomial(rs.D, -2 * rs.inner_scaled(rs.rho, rs.rho))
    for alpha in rs.positive_roots:
        e = 2 * rs.inner_scaled(alpha, rs.rho)
        forma = forma * LaurentHalf(rs.D, {e: 1, 0: -1})
    return producto, suma, forma


@lru_cache(maxsize=4096)
def quantum_dim(rs: RootSystem, mu: Weight, metodo: str = "producto") -> LaurentHalf:
    """
    J_U(μ) = (1/ψ)Π_{α>0}(q^{(μ|α)/2} − q^{−(μ|α)/2}) = (1/ψ)Σ_w sn(w) q^{(μ|w(ρ))}.

    Definida para todo μ ∈ X: se anula en las paredes de C y alterna bajo W.
    """
    mu = tuple(int(x) for x in mu)
    if metodo == "producto":
        numerador = _producto_binomios(rs, mu)
    elif metodo == "weyl":
        numerador = _suma_weyl(rs, mu, rs.rho)
    else:
        raise EntradaInvalidaError(f"Método desconocido para la dimensión cuántica: {metodo}")
    return numerador.exact_div(psi(rs))


@lru_cache(maxsize=4096)
def hopf_entry(rs: RootSystem, mu: Weight, lam: Weight) -> LaurentHalf:
    """J_H(μ, λ) = (1/ψ)Σ_w sn(w) q^{(μ|w(λ))}, con división exacta por ψ."""
    return _suma_weyl(rs, tuple(mu), tuple(lam)).exact_div(psi(rs))


# ==================== RAÍCES DE LA UNIDAD ====================

def orden_zeta(rs: RootSystem, r: int) -> int:
    return 2 * rs.D * r


def weyl_exponents(rs: RootSystem, mu: Sequence[int], lam: Sequence[int]) -> np.ndarray:
    """Exponentes e con q^{(μ|w(λ))} = q^{e/(2D)}, en el orden de rs.weyl."""
    return 2 * (rs.weyl_orbit(lam) @ (rs.gram_D @ np.asarray(mu, dtype=np.int64)))


def weyl_numerator(rs: RootSystem, mu: Sequence[int], r: int) -> AnilloGrupo:
    """Σ_w sn(w) ζ^{2D(μ|w(ρ))} en Z[Z/2Dr]."""
    return hopf_numerator(rs, mu, rs.rho, r)


def hopf_numerator(rs: RootSystem, mu: Sequence[int], lam: Sequence[int], r: int, signo_enlace: int = 1) -> AnilloGrupo:
    """
    Numerador de J_H(μ, λ) en Z[Z/2Dr].

    Con signo_enlace = −1 se usa el enlace espejo: q ↦ q⁻¹, y ψ(q⁻¹) = (−1)^s ψ se
    absorbe en el numerador.
    """
    exponentes = weyl_exponents(rs, mu, lam) * signo_enlace
    pesos = rs.weyl_signs
    if signo_enlace < 0 and rs.s % 2:
        pesos = -pesos
    return AnilloGrupo.desde_exponentes(orden_zeta(rs, r), exponentes, pesos)


def psi_product(rs: RootSystem, field: CycField) -> CycNum:
    """Π_{α>0}(q^{(α|ρ)} − 1) evaluado en el cuerpo (exponentes enteros de q)."""
    paso = 2 * rs.D if field.kind == TipoCampo.ZETA else 1
    acumulado = AnilloGrupo.monomio(field.m, 0)
    for alpha in rs.positive_roots:
        altura = rs.inner_scaled(alpha, rs.rho) // rs.D
        acumulado = acumulado * (AnilloGrupo.monomio(field.m, paso * altura) - AnilloGrupo.monomio(field.m, 0))
    return acumulado.to_cyc(field)


@lru_cache(maxsize=None)
def _psi_product_inverse(rs: RootSystem, field: CycField) -> CycNum:
    valor = psi_product(rs, field)
    if valor.is_zero():
        raise EntradaInvalidaError(
            f"ψ se anula en r={field.r} para {rs.nombre}; se requiere r >= d·h∨ = {rs.d * rs.h_dual}"
        )
    return valor.inverse()


def normalizar_psi(rs: RootSystem, acumulado: AnilloGrupo, k: int, field: CycField) -> CycNum:
    """
    acumulado · ψ^{−k} en el cuerpo pedido, usando ψ^{−1} = q^{|ρ|²}·Π(q^{(α|ρ)} − 1)^{−1}.

    En el cuerpo de ξ el producto acumulado·q^{k|ρ|²} debe tener sólo potencias enteras de q.
    """
    total = acumulado.desplazar(2 * k * rs.inner_scaled(rs.rho, rs.rho))
    if field.kind == TipoCampo.XI:
        total = total.descend(2 * rs.D)
    valor = total.to_cyc(field)
    if k == 0:
        return valor
    return valor * _psi_product_inverse(rs, field) ** k


def evaluate_psi(rs: RootSystem, field: CycField) -> CycNum:
    """ψ en el cuerpo de ζ."""
    if field.kind != TipoCampo.ZETA:
        raise EntradaInvalidaError("ψ tiene potencias fraccionarias de q; se evalúa en el cuerpo de ζ")
    return psi_product(rs, field) * field.zeta_power(-2 * rs.inner_scaled(rs.rho, rs.rho))
