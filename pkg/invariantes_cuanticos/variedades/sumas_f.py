"""
Sumas F sobre dominios fundamentales.

Contiene:
- Sabor: full (g), projective (Pg), center (G)
- F_sum: Σ Q_L sobre interior(C_r)∩X o interior(C_r)∩(ρ+Y)
- F_center: Σ_{g_i∈G} ξ^{r(r−h)Σ l_ij(g_i|g_j)/2}
- F_U_closed_form: las formas cerradas de F_{U₊} (g) y F_{U_b} (Pg)

Los colores del borde de C̄_r dan Q_L = 0 exactamente en la raíz de la unidad, así
que sólo se recorre el interior. Unknot y Hopf se acumulan con numeradores en
Z[Z/2Dr] y un único factor ψ^{−k} al final; el resto evalúa Q_L color a color.
"""

import itertools
import logging
from enum import Enum
from math import gcd
from typing import Optional

import numpy as np
from sympy.ntheory.modular import crt

from ..aritmetica import AnilloGrupo, CycField, CycNum, evaluate_to_group_ring
from ..config import limite_vigente
from ..enlaces import FramedLink, Hopf, Unknot, linking_matrix, number_of_components, q_value
from ..excepciones import EntradaInvalidaError, RecursoExcedidoError
from ..lie import Dominio, LatticeDomain, RootSystem, enumerate_domain
from ..sumas import (
    gauss_full,
    gauss_proj,
    hopf_numerator,
    normalizar_psi,
    orden_zeta,
    psi_product,
    weyl_numerator,
)

logger = logging.getLogger(__name__)


class Sabor(str, Enum):
    FULL = "full"
    PROJECTIVE = "projective"
    CENTER = "center"


def validar_nivel(rs: RootSystem, r: int) -> None:
    """ρ debe estar en el interior de C_r, es decir r ≥ h."""
    if r < rs.h:
        raise EntradaInvalidaError(
            f"Con r={r} < h={rs.h} el interior de C_r no contiene a ρ para {rs.nombre}"
        )
    if r < rs.d * rs.h_dual:
        logger.warning(f" r={r} < d·h∨={rs.d * rs.h_dual} para {rs.nombre}; fuera del rango de la teoría")


def campo_sabor(rs: RootSystem, r: int, flavor: Sabor, a: int = 1) -> CycField:
    if Sabor(flavor) == Sabor.PROJECTIVE:
        return CycField.xi(r, a)
    return CycField.zeta(rs.D, r, a)


def _verificar_coloraciones(total: int, limite: Optional[int]) -> None:
    limite = limite if limite is not None else limite_vigente("max_enumeracion")
    if total > limite:
        raise RecursoExcedidoError(
            f"La suma F recorre {total} coloraciones y supera el límite {limite}",
            {"coloraciones": total, "limite": limite},
        )


# ==================== ACUMULADORES ====================

def _acumular_unknot(rs: RootSystem, r: int, b: int, colores):
    acumulado = AnilloGrupo(orden_zeta(rs, r))
    for mu in colores:
        n = weyl_numerator(rs, mu, r)
        acumulado += (n * n).desplazar(b * rs.twist_exponent(mu))
    return acumulado, 2


def _acumular_hopf(rs: RootSystem, r: int, link: Hopf, colores):
    acumulado = AnilloGrupo(orden_zeta(rs, r))
    numeradores = {mu: weyl_numerator(rs, mu, r) for mu in colores}
    for mu in colores:
        for lam in colores:
            h = hopf_numerator(rs, mu, lam, r, signo_enlace=link.linking)
            giro = link.b1 * rs.twist_exponent(mu) + link.b2 * rs.twist_exponent(lam)
            acumulado += (h * numeradores[mu] * numeradores[lam]).desplazar(giro)
    return acumulado, 3


def _acumular_q(rs: RootSystem, r: int, link: FramedLink, colores, a: int):
    campo = CycField.zeta(rs.D, r, a)
    acumulado = AnilloGrupo(campo.m)
    for coloracion in itertools.product(colores, repeat=number_of_components(link)):
        acumulado += evaluate_to_group_ring(q_value(rs, link, coloracion), campo)
    return acumulado, 0


# ==================== SUMAS F ====================

def F_sum(
    rs: RootSystem,
    r: int,
    link: FramedLink,
    flavor: Sabor = Sabor.FULL,
    a: int = 1,
    max_enumeracion: Optional[int] = None,
) -> CycNum:
    """
    F_L en el cuerpo del sabor: Q(ζ_{2Dr}) para g, Q(ξ_r) para Pg.

    Raises:
        EntradaInvalidaError: r < h, o ψ(ξ) = 0
        RecursoExcedidoError: demasiadas coloraciones
    """
    flavor = Sabor(flavor)
    if flavor == Sabor.CENTER:
        return F_center(rs, r, linking_matrix(link), a, max_enumeracion)
    validar_nivel(rs, r)
    rs.require_weyl()
    campo = campo_sabor(rs, r, flavor, a)
    dominio = Dominio.INTERIOR_X if flavor == Sabor.FULL else Dominio.INTERIOR_RHO_Y
    colores = enumerate_domain(LatticeDomain(rs, r), dominio, max_enumeracion)
    _verificar_coloraciones(len(colores) ** number_of_components(link), max_enumeracion)

    if isinstance(link, Unknot):
        acumulado, k = _acumular_unknot(rs, r, link.b, colores)
    elif isinstance(link, Hopf):
        acumulado, k = _acumular_hopf(rs, r, link, colores)
    else:
        acumulado, k = _acumular_q(rs, r, link, colores, a)
    logger.debug(f" F_{flavor.value} de {link!r} para {rs.nombre}, r={r}: {len(colores)} colores por componente")
    return normalizar_psi(rs, acumulado, k, campo)


def F_center(
    rs: RootSystem,
    r: int,
    matriz,
    a: int = 1,
    max_enumeracion: Optional[int] = None,
) -> CycNum:
    """F^G_L = Σ_{g_i∈G} ζ^{r(r−h)·Σ l_ij D(g_i|g_j)}; no depende de los levantamientos."""
    campo = CycField.zeta(rs.D, r, a)
    l = np.asarray(matriz, dtype=np.int64)
    m = l.shape[0] if l.size else 0
    if m == 0:
        return campo.one()
    reps = rs.center.representatives
    _verificar_coloraciones(len(reps) ** m, max_enumeracion)
    tabla = np.asarray([[rs.inner_scaled(g, h) for h in reps] for g in reps], dtype=np.int64)
    indices = np.asarray(list(itertools.product(range(len(reps)), repeat=m)), dtype=np.int64)
    pares = tabla[indices[:, :, None], indices[:, None, :]]
    exponentes = r * (r - rs.h) * np.einsum("nij,ij->n", pares, l)
    return AnilloGrupo.desde_exponentes(campo.m, exponentes).to_cyc(campo)


# ==================== FORMAS CERRADAS ====================

def _alturas(rs: RootSystem):
    """(α|ρ) para cada raíz positiva (enteros)."""
    return [rs.inner_scaled(alpha, rs.rho) // rs.D for alpha in rs.positive_roots]


def inverso_compatible(rs: RootSystem, r: int, b: int) -> int:
    """b* con b·b* ≡ 1 (mod r) y b* ≡ 1 (mod 2D)."""
    if gcd(b, r) != 1:
        raise EntradaInvalidaError(f"b={b} no es coprimo con r={r}")
    if gcd(r, 2 * rs.D) != 1:
        raise EntradaInvalidaError(f"Se requiere mcd(r, 2D) = 1; r={r}, D={rs.D}")
    valor, _ = crt([r, 2 * rs.D], [pow(b, -1, r), 1])
    return int(valor)


def F_U_closed_form(
    rs: RootSystem,
    r: int,
    flavor: Sabor = Sabor.FULL,
    b: int = 1,
    a: int = 1,
) -> CycNum:
    """
    full: F^g_{U₊} = γ^g / Π_{α>0}(1 − q^{(α|ρ)}).
    projective: F^{Pg}_{U_b} = ξ^{(1−b*)|ρ|²} γ_b J_U(b*ρ) / Π_{α>0}(1 − ξ^{(α|ρ)}).

    Con b* ≡ 1 (mod 2D) todas las potencias de ξ son enteras y
    J_U(b*ρ) = ξ^{−(b*−1)|ρ|²} Π(ξ^{b*(α|ρ)} − 1)/(ξ^{(α|ρ)} − 1).
    """
    flavor = Sabor(flavor)
    validar_nivel(rs, r)
    campo = campo_sabor(rs, r, flavor, a)
    signo = -1 if rs.s % 2 else 1
    if flavor == Sabor.FULL:
        if b != 1:
            raise EntradaInvalidaError("La forma cerrada del sabor completo es la de U₊ (b = 1)")
        return gauss_full(rs, r, a).value / (psi_product(rs, campo) * signo)
    if flavor != Sabor.PROJECTIVE:
        raise EntradaInvalidaError(f"Sin forma cerrada para el sabor {flavor.value}")

    b_estrella = inverso_compatible(rs, r, b)
    rho2 = rs.inner_scaled(rs.rho, rs.rho)
    numerador = AnilloGrupo.monomio(campo.m, 2 * (1 - b_estrella) * rho2 // rs.D)
    for x in _alturas(rs):
        numerador = numerador * (AnilloGrupo.monomio(campo.m, b_estrella * x) - AnilloGrupo.monomio(campo.m, 0))
    psi_xi = psi_product(rs, campo)
    return gauss_proj(rs, r, b, a).value * numerador.to_cyc(campo) / (psi_xi * psi_xi * signo)
