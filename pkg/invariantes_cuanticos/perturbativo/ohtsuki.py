"""
Series perturbativas t^{Pg}_M(ħ) = Σ c_n ħ^n de esferas de homología racional.

Contiene:
- OhtsukiSeries y su procedencia
- normalizacion_z: z_b = (1/|W|) q^{|ρ|²(sn(b)−b)/2} Π_{α>0}(1 − q^{sn(b)(α|ρ)})
- ohtsuki_lens: forma cerrada para la cirugía en U_b
- ohtsuki_knot_sl2: N^{2j} ↦ (−2/b)^j (2j−1)!! ħ^{−j}, por z_b
- ohtsuki_knot_general / ohtsuki_diag_link: β^{2j} ↦ (2j−1)!! (−|β|²/b)^j ħ^{−j}, por Π z_{b_i}
- compose_series: t_M = t_{M′}·Π t_{M_i}^{−1}
- series_for_spec: elige la regla según la presentación
"""

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from sympy import primefactors

from ..enlaces import Braid, FigureEight, FramedLink, Trefoil, Unknot, framings, number_of_components
from ..excepciones import AritmeticaInexactaError, EntradaInvalidaError
from ..lie import RootSystem, build_root_system
from ..variedades import ManifoldSpec, signature
from .expansiones import ExpansionBeta, knot_expansion_sl2, unknot_expansion
from .serie import SerieH, doble_factorial, uno_menos_exp

logger = logging.getLogger(__name__)


class Procedencia(str, Enum):
    LENS = "lens"
    KNOT_SL2 = "knot_sl2"
    KNOT_GENERAL = "knot_general"
    DIAGONAL_LINK = "diagonal_link"
    QUOTIENT = "quotient"
    CONNECTED_SUM = "connected_sum"


@dataclass(frozen=True)
class OhtsukiSeries:
    coeffs: Tuple[Fraction, ...]
    provenance: Procedencia

    @property
    def orden(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def desde_serie(cls, serie: SerieH, orden: int, provenance: Procedencia) -> "OhtsukiSeries":
        serie = serie.truncar(orden).exigir_serie_de_potencias()
        return cls(tuple(serie.coeficientes()), Procedencia(provenance))

    def a_serie(self) -> SerieH:
        return SerieH.desde_coeficientes(self.coeffs)

    def a_json(self) -> List[str]:
        return [f"{c.numerator}/{c.denominator}" for c in self.coeffs]

    def denominators_check(self, rs: RootSystem, orden_h1: int) -> bool:
        """Los primos de cada denominador de c_n dividen a (2n+2s)!·|H₁|."""
        for n, c in enumerate(self.coeffs):
            for p in primefactors(c.denominator):
                if p > 2 * n + 2 * rs.s and orden_h1 % p:
                    logger.warning(f" c_{n} = {c} tiene el primo {p} en el denominador")
                    return False
        return True


def _signo(b: int) -> int:
    if b == 0:
        raise EntradaInvalidaError("El marco debe ser no nulo en una esfera de homología racional")
    return 1 if b > 0 else -1


def normalizacion_z(rs: RootSystem, b: int, orden: int) -> SerieH:
    """z_b a precisión ħ^orden; tiene valuación s."""
    signo = _signo(b)
    rho2 = rs.norm2(rs.rho)
    z = SerieH.exponencial(rho2 * (signo - b) / 2, orden) * Fraction(1, rs.weyl_order)
    for alpha in rs.positive_roots:
        z = z * uno_menos_exp(signo * rs.inner(alpha, rs.rho), orden)
    return z.truncar(orden)


# ==================== ESPACIOS LENTE ====================

def ohtsuki_lens(rs: RootSystem, b: int, orden: int) -> OhtsukiSeries:
    """q^{(sn(b)−b)|ρ|²/2} Π_{α>0} (1 − q^{−(ρ|α)/b}) / (1 − q^{−sn(b)(ρ|α)}) en q = e^ħ."""
    signo = _signo(b)
    serie = SerieH.exponencial(rs.norm2(rs.rho) * (signo - b) / 2, orden)
    for alpha in rs.positive_roots:
        x = rs.inner(alpha, rs.rho)
        serie = serie * (uno_menos_exp(-x / b, orden + 1) / uno_menos_exp(-signo * x, orden + 1))
    return OhtsukiSeries.desde_serie(serie, orden, Procedencia.LENS)


# ==================== SUSTITUCIONES GAUSSIANAS ====================

def _sustituir_beta(rs: RootSystem, expansion: ExpansionBeta, marcos: Sequence[int], orden: int) -> SerieH:
    """Σ c Π_i (2j_i−1)!! (−|β_i|²/b_i)^{j_i} ħ^{n−Σj_i}, por Π z_{b_i}."""
    m = len(marcos)
    if expansion.componentes != m:
        raise EntradaInvalidaError(f"La expansión tiene {expansion.componentes} componentes y hay {m} marcos")
    if expansion.orden < 2 * orden:
        raise EntradaInvalidaError(f"Se necesita la expansión hasta ħ^{2 * orden}, llega a ħ^{expansion.orden}")
    expansion.validar_grados(rs)
    precision = orden - m * rs.s
    terminos: Dict[int, Fraction] = {}
    for (n, betas), c in expansion.terminos.items():
        if n > 2 * orden or any(j % 2 for _, j in betas):
            continue
        valor = c
        mitad = 0
        for (beta, j), b in zip(betas, marcos):
            k = j // 2
            valor *= doble_factorial(2 * k - 1) * (-rs.norm2(beta) / b) ** k
            mitad += k
        if n - mitad <= precision:
            terminos[n - mitad] = terminos.get(n - mitad, 0) + valor
    suma = SerieH(terminos, precision)
    for b in marcos:
        suma = suma * normalizacion_z(rs, b, orden + m * rs.s)
    return suma


def ohtsuki_knot_sl2(knot: FramedLink, framing: Optional[int] = None, orden: int = 4) -> OhtsukiSeries:
    """
    Cirugía en un nudo con marco ±1 para sl₂: Q_{K⁰}(N) = Σ c_{j,n} N^j ħ^n,
    N^{2j} ↦ (−2/b)^j (2j−1)!! ħ^{−j}, y al final el factor z_b.
    """
    rs = build_root_system("A", 1)
    b = framings(knot)[0] if framing is None else framing
    if b not in (1, -1):
        raise EntradaInvalidaError(f"La regla de sl₂ para nudos requiere marco ±1, se recibió {b}")
    expansion = knot_expansion_sl2(knot, 2 * orden)
    impares = expansion.potencias_impares()
    if impares:
        raise AritmeticaInexactaError(f"Potencias impares de N en la expansión de {knot!r}: {impares}")
    terminos: Dict[int, Fraction] = {}
    for n, fila in enumerate(expansion.coeficientes):
        if expansion.grado(n) > n + 2:
            raise AritmeticaInexactaError(f"Grado {expansion.grado(n)} > n+2 en ħ^{n} para {knot!r}")
        for j, c in enumerate(fila):
            if c and n - j // 2 <= orden - 1:
                k = j // 2
                terminos[n - k] = terminos.get(n - k, 0) + c * doble_factorial(2 * k - 1) * Fraction(-2, b) ** k
    serie = SerieH(terminos, orden - 1) * normalizacion_z(rs, b, orden + 1)
    logger.debug(f" Serie de Ohtsuki de {knot!r} con marco {b} hasta ħ^{orden}")
    return OhtsukiSeries.desde_serie(serie, orden, Procedencia.KNOT_SL2)


def ohtsuki_knot_general(rs: RootSystem, expansion: ExpansionBeta, framing: int, orden: int) -> OhtsukiSeries:
    if framing not in (1, -1):
        raise EntradaInvalidaError(f"La regla para nudos requiere marco ±1, se recibió {framing}")
    serie = _sustituir_beta(rs, expansion, (framing,), orden)
    return OhtsukiSeries.desde_serie(serie, orden, Procedencia.KNOT_GENERAL)


def ohtsuki_diag_link(
    rs: RootSystem,
    expansion: ExpansionBeta,
    marcos: Sequence[int],
    orden: int,
    matriz=None,
) -> OhtsukiSeries:
    """
    Enlace con matriz de enlace diagonal (b₁, …, b_m), b_i ≠ 0.

    Si se pasa la matriz de enlace se comprueba que sea diagonal y que su diagonal sean los marcos.
    """
    marcos = tuple(int(b) for b in marcos)
    for b in marcos:
        _signo(b)
    if matriz is not None:
        l = np.asarray(matriz, dtype=np.int64)
        if np.count_nonzero(l - np.diag(np.diag(l))) or tuple(np.diag(l).tolist()) != marcos:
            raise EntradaInvalidaError(f"La matriz de enlace {l.tolist()} no es diag{marcos}")
    serie = _sustituir_beta(rs, expansion, marcos, orden)
    return OhtsukiSeries.desde_serie(serie, orden, Procedencia.DIAGONAL_LINK)


def compose_series(m_prime: OhtsukiSeries, lens_series: Sequence[OhtsukiSeries]) -> OhtsukiSeries:
    serie = m_prime.a_serie()
    for lente in lens_series:
        if not lente.coeffs or not lente.coeffs[0]:
            raise EntradaInvalidaError("Un factor lente con c₀ = 0 no es invertible")
        serie = serie / lente.a_serie()
    orden = min([m_prime.orden] + [lente.orden for lente in lens_series])
    return OhtsukiSeries.desde_serie(serie, orden, Procedencia.QUOTIENT)


# ==================== DESPACHO DESDE UNA PRESENTACIÓN ====================

def _serie_de_nudo(rs: RootSystem, link: FramedLink, orden: int) -> OhtsukiSeries:
    if rs.type_and_rank != ("A", 1):
        raise EntradaInvalidaError(f"Las series de nudos no triviales sólo están disponibles para sl₂, no {rs.nombre}")
    b = framings(link)[0]
    if b in (1, -1):
        return ohtsuki_knot_sl2(link, b, orden)
    expansion = knot_expansion_sl2(link, 2 * orden).a_beta()
    return ohtsuki_diag_link(rs, expansion, (b,), orden)


def series_for_spec(spec: ManifoldSpec, rs: RootSystem, orden: int) -> OhtsukiSeries:
    """
    S³ y U_b por la forma cerrada de lentes; varios U_b separados como enlace diagonal;
    nudos de sl₂ (trébol, figura ocho, trenzas de una componente) por su regla; las sumas
    conexas multiplican.
    """
    firma = signature(spec.linking_matrix())
    if firma.sigma_zero:
        raise EntradaInvalidaError(f"'{spec.name}' no es una esfera de homología racional (σ₀ = {firma.sigma_zero})")
    enlaces = spec.flatten()
    nudos_triviales = [link for link in enlaces if isinstance(link, Unknot)]
    otros = [link for link in enlaces if not isinstance(link, Unknot)]

    piezas: List[OhtsukiSeries] = []
    if len(nudos_triviales) == 1:
        piezas.append(ohtsuki_lens(rs, nudos_triviales[0].b, orden))
    elif nudos_triviales:
        expansion = unknot_expansion(rs, 2 * orden)
        total = expansion
        for _ in nudos_triviales[1:]:
            total = total.producto(expansion)
        marcos = [link.b for link in nudos_triviales]
        piezas.append(ohtsuki_diag_link(rs, total, marcos, orden, np.diag(marcos)))
    for link in otros:
        if number_of_components(link) != 1 or not isinstance(link, (Trefoil, FigureEight, Braid)):
            raise EntradaInvalidaError(f"Presentación sin regla perturbativa: {link!r}")
        piezas.append(_serie_de_nudo(rs, link, orden))

    if not piezas:
        return ohtsuki_lens(rs, 1, orden)
    if len(piezas) == 1:
        return piezas[0]
    serie = SerieH.constante(1, orden)
    for pieza in piezas:
        serie = serie * pieza.a_serie()
    return OhtsukiSeries.desde_serie(serie, orden, Procedencia.CONNECTED_SUM)
