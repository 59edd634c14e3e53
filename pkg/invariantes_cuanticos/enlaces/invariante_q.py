"""
Invariante Q_L = J_L · Π J_U(μ_j) y los principios de simetría.

Contiene:
- q_value: Q_L para cualquier presentación soportada
- q_normalize, framing_shift
- integrality_exponent / integrality_check: q^{−p/2}Q_L ∈ Z[q^{±1}]
- orientation_check
- symmetry1_check (W_r) y symmetry2_check (centro)
- equivalent_mod_r: la relación ≐(r) evaluando en ζ^a
"""

import logging
import random
from fractions import Fraction
from math import gcd
from typing import List, Optional, Sequence

from ..aritmetica import CycField, LaurentHalf, evaluate
from ..config import obtener_configuracion
from ..excepciones import EntradaInvalidaError
from ..lie import (
    Dominio,
    LatticeDomain,
    RootSystem,
    Weight,
    affine_image,
    center_action,
    enumerate_domain,
)
from ..sumas import hopf_entry, quantum_dim
from .jones import jones_fig8, jones_trefoil
from .presentaciones import (
    Braid,
    FigureEight,
    FramedLink,
    Hopf,
    Trefoil,
    Unknot,
    framings,
    linking_matrix,
    number_of_components,
)
from .trenzas import braid_jones_sl2

logger = logging.getLogger(__name__)


# ==================== COLORES ====================

def dominant_representative(rs: RootSystem, mu: Sequence[int]) -> Optional[Weight]:
    """El punto de la W-órbita de μ en C̄, o None si μ está en una pared de C."""
    mu = tuple(int(x) for x in mu)
    if rs.rank == 1:
        return None if mu[0] == 0 else (abs(mu[0]),)
    orbita = rs.weyl_orbit(mu)
    dominantes = orbita[(orbita >= 0).all(axis=1)]
    rep = tuple(int(x) for x in dominantes[0])
    return None if 0 in rep else rep


def _es_sl2(rs: RootSystem) -> bool:
    return rs.type_and_rank == ("A", 1)


def _requerir_sl2(rs: RootSystem, link: FramedLink) -> None:
    if not _es_sl2(rs):
        raise EntradaInvalidaError(
            f"{type(link).__name__} sólo está disponible para sl₂; se pidió {rs.nombre}"
        )


def _colores(rs: RootSystem, link: FramedLink, colors) -> List[Weight]:
    colores = [tuple(int(x) for x in c) for c in colors]
    if len(colores) != number_of_components(link):
        raise EntradaInvalidaError(
            f"El enlace tiene {number_of_components(link)} componentes y se dieron {len(colores)} colores"
        )
    for c in colores:
        if len(c) != rs.rank:
            raise EntradaInvalidaError(f"El color {c} no tiene rango {rs.rank}")
    return colores


# ==================== Q_L ====================

def framing_shift(rs: RootSystem, value: LaurentHalf, mu: Sequence[int], delta: int) -> LaurentHalf:
    """Multiplica por q^{Δ(|μ|²−|ρ|²)/2}."""
    return value.shift(delta * rs.twist_exponent(mu))


def q_normalize(rs: RootSystem, colors: Sequence[Weight], J_values: LaurentHalf) -> LaurentHalf:
    """
    Q_L = J_L · Π_j J_U(μ_j), con J_L calculado en los representantes dominantes.

    Si algún μ_j está en una pared de C el resultado es 0.
    """
    valor = J_values
    for mu in colors:
        rep = dominant_representative(rs, mu)
        if rep is None:
            return LaurentHalf(rs.D)
        valor = valor * quantum_dim(rs, rep)
    return valor


def _jones_marco_cero(rs: RootSystem, link: FramedLink, dominantes: List[Weight]) -> LaurentHalf:
    if isinstance(link, Unknot):
        return quantum_dim(rs, dominantes[0])
    if isinstance(link, Hopf):
        valor = hopf_entry(rs, dominantes[0], dominantes[1])
        return valor if link.linking > 0 else valor.invert_q()
    _requerir_sl2(rs, link)
    colores_n = [mu[0] for mu in dominantes]
    if isinstance(link, Trefoil):
        return jones_trefoil(colores_n[0], link.chirality)
    if isinstance(link, FigureEight):
        return jones_fig8(colores_n[0])
    if isinstance(link, Braid):
        return braid_jones_sl2(link, colores_n)
    raise EntradaInvalidaError(f"Presentación desconocida: {link!r}")


def q_value(rs: RootSystem, link: FramedLink, colors) -> LaurentHalf:
    """
    Q_L(μ₁, …, μ_m) del enlace enmarcado, extendido por cero en las paredes de C
    y por W-invariancia en cada componente.
    """
    colores = _colores(rs, link, colors)
    dominantes = []
    for mu in colores:
        rep = dominant_representative(rs, mu)
        if rep is None:
            return LaurentHalf(rs.D)
        dominantes.append(rep)
    valor = _jones_marco_cero(rs, link, dominantes)
    for mu, b in zip(dominantes, framings(link)):
        valor = framing_shift(rs, valor, mu, b)
    return q_normalize(rs, dominantes, valor)


# ==================== INTEGRALIDAD Y ORIENTACIÓN ====================

def integrality_exponent(rs: RootSystem, link: FramedLink, colors) -> Fraction:
    """p = Σ l_ij(λ_i|λ_j) + Σ l_ii(2ρ|λ_i) con λ_j = μ_j − ρ (pesos máximos)."""
    colores = _colores(rs, link, colors)
    lam = []
    for mu in colores:
        rep = dominant_representative(rs, mu) or mu
        lam.append(tuple(a - b for a, b in zip(rep, rs.rho)))
    l = linking_matrix(link)
    dos_rho = tuple(2 * x for x in rs.rho)
    p = Fraction(0)
    for i in range(len(lam)):
        p += int(l[i, i]) * rs.inner(dos_rho, lam[i])
        for j in range(len(lam)):
            p += int(l[i, j]) * rs.inner(lam[i], lam[j])
    return p


def integrality_check(rs: RootSystem, link: FramedLink, colors) -> bool:
    """q^{−p/2}·Q_L ∈ Z[q^{±1}]."""
    valor = q_value(rs, link, colors)
    if valor.is_zero():
        return True
    desplazamiento = -integrality_exponent(rs, link, colors) * rs.D
    if desplazamiento.denominator != 1:
        return False
    return valor.shift(int(desplazamiento)).is_in_integer_q_powers()


def orientation_check(rs: RootSystem, link: FramedLink, colors) -> bool:
    """
    Invertir la orientación de una componente y dualizar su color no cambia el invariante.

    Trenzas: la palabra leída al revés. Hopf: una componente invertida cambia el signo del
    enlace. Nudos especiales: color dual.
    """
    colores = _colores(rs, link, colors)
    original = q_value(rs, link, colores)
    if isinstance(link, Braid):
        return q_value(rs, link.reversed(), colores) == original
    if isinstance(link, Hopf):
        invertido = Hopf(link.b1, link.b2, -link.linking)
        duales = [rs.dual_weight(colores[0]), colores[1]]
        return q_value(rs, invertido, duales) == original
    duales = [rs.dual_weight(c) for c in colores]
    return q_value(rs, link, duales) == original


# ==================== ≐(r) ====================

def zeta_exponents(rs: RootSystem, r: int, cantidad: Optional[int] = None) -> List[int]:
    """Los primeros exponentes a coprimos con 2Dr."""
    cantidad = cantidad if cantidad is not None else obtener_configuracion().exponentes_zeta
    m = 2 * rs.D * r
    return [a for a in range(1, m) if gcd(a, m) == 1][:cantidad]


def equivalent_mod_r(rs: RootSystem, r: int, f: LaurentHalf, g: LaurentHalf, exponentes: Sequence[int]) -> bool:
    """
    f ≐(r) g: misma clase de exponentes módulo Z[q^{±1}] y valores iguales en ζ^a.
    """
    dos_d = 2 * rs.D
    if not f.is_zero() and not g.is_zero():
        if {e % dos_d for e in f.terms} != {e % dos_d for e in g.terms}:
            return False
    for a in exponentes:
        field = CycField.zeta(rs.D, r, a)
        if evaluate(f, field) != evaluate(g, field):
            return False
    return True


def symmetry1_check(
    rs: RootSystem,
    r: int,
    link: FramedLink,
    colors,
    muestras: Optional[int] = None,
    semilla: Optional[int] = None,
    longitud: int = 4,
    exponentes: Optional[Sequence[int]] = None,
) -> bool:
    """
    Q_L(w₁(μ₁), …) ≐(r) Q_L(μ₁, …) para imágenes aleatorias bajo W_r, y Q_L ≐(r) 0 cuando
    un color está en el borde de C̄_r.
    """
    config = obtener_configuracion()
    muestras = muestras if muestras is not None else config.muestras_weyl_afin
    rng = random.Random(config.semilla if semilla is None else semilla)
    exponentes = list(exponentes) if exponentes is not None else zeta_exponents(rs, r)
    colores = _colores(rs, link, colors)
    dom = LatticeDomain(rs, r)
    base = q_value(rs, link, colores)

    for _ in range(muestras):
        j = rng.randrange(len(colores))
        nuevos = list(colores)
        nuevos[j] = affine_image(dom, colores[j], rng, longitud)
        if not equivalent_mod_r(rs, r, q_value(rs, link, nuevos), base, exponentes):
            logger.warning(f" Simetría 1 falla para {link!r}: {colores} -> {nuevos}, r={r}")
            return False

    nulo = LaurentHalf(rs.D)
    pared_afin = [
        mu for mu in enumerate_domain(dom, Dominio.ALCOBA_X)
        if dom.alpha0_pairing(mu) == r
    ]
    for j in range(len(colores)):
        for mu in rng.sample(pared_afin, min(2, len(pared_afin))):
            nuevos = list(colores)
            nuevos[j] = mu
            if not equivalent_mod_r(rs, r, q_value(rs, link, nuevos), nulo, exponentes):
                logger.warning(f" Q_L no se anula en la pared afín: {nuevos}, r={r}")
                return False
    return True


def symmetry2_exponent(rs: RootSystem, r: int, link: FramedLink, colors, center_elements) -> int:
    """D·t con t = (r−h)Σ l_ij(g_i|g_j) + 2Σ l_ij(g_i|μ_j − ρ)."""
    l = linking_matrix(link)
    m = len(colors)
    total = 0
    for i in range(m):
        for j in range(m):
            if l[i, j] == 0:
                continue
            diferencia = tuple(a - b for a, b in zip(colors[j], rs.rho))
            total += int(l[i, j]) * (
                (r - rs.h) * rs.inner_scaled(center_elements[i], center_elements[j])
                + 2 * rs.inner_scaled(center_elements[i], diferencia)
            )
    return total


def symmetry2_check(
    rs: RootSystem,
    r: int,
    link: FramedLink,
    colors,
    center_elements: Sequence[Sequence[int]],
    exponentes: Optional[Sequence[int]] = None,
) -> bool:
    """Q_L(g₁(μ₁), …) ≐(r) q^{rt/2}·Q_L(μ₁, …) para μ_j ∈ C̄_r."""
    colores = _colores(rs, link, colors)
    if len(center_elements) != len(colores):
        raise EntradaInvalidaError("Se necesita un elemento del centro por componente")
    dom = LatticeDomain(rs, r)
    for mu in colores:
        if not rs.is_dominant(mu) or dom.alpha0_pairing(mu) > r:
            raise EntradaInvalidaError(f"El color {mu} no está en la alcoba C̄_r con r={r}")
    exponentes = list(exponentes) if exponentes is not None else zeta_exponents(rs, r)
    levantamientos = [rs.center_lift(g) for g in center_elements]
    imagenes = [center_action(dom, g, mu) for g, mu in zip(levantamientos, colores)]
    d_t = symmetry2_exponent(rs, r, link, colores, levantamientos)
    izquierda = q_value(rs, link, imagenes)
    derecha = q_value(rs, link, colores).shift(r * d_t)
    ok = equivalent_mod_r(rs, r, izquierda, derecha, exponentes)
    if not ok:
        logger.warning(f" Simetría 2 falla para {link!r}: colores {colores}, centro {levantamientos}, r={r}")
    return ok
