"""
Expansiones de Q_{L⁰}(μ)|_{q=e^ħ} como polinomios en el color.

Contiene:
- ExpansionN: sl₂, coeficientes c_{j,n} de N^j ħ^n obtenidos por interpolación exacta en N
- ExpansionBeta: base β^j(μ) = (β|μ)^j, una o varias componentes
- knot_expansion_sl2: fórmulas cerradas o motor de trenzas evaluado en N = 1, 2, …
- unknot_expansion: Q_{U⁰}(μ) = J_U(μ)² desarrollado sobre la órbita de Weyl de ρ
- degree_bound_check: grado en N de cada orden y ausencia de potencias impares
"""

import dataclasses
import itertools
import logging
import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Optional, Tuple

import sympy

from ..enlaces import Braid, FigureEight, FramedLink, Hopf, Trefoil, Unknot, number_of_components, q_value
from ..excepciones import AritmeticaInexactaError, EntradaInvalidaError
from ..lie import RootSystem, Weight, build_root_system
from .serie import SerieH, sustituir_q

logger = logging.getLogger(__name__)

# (n, ((β₁, j₁), …, (β_m, j_m)))
ClaveBeta = Tuple[int, Tuple[Tuple[Weight, int], ...]]


@dataclass(frozen=True)
class ExpansionN:
    """coeficientes[n][j] = c_{j,n}, coeficiente de N^j ħ^n."""

    coeficientes: Tuple[Tuple[Fraction, ...], ...]
    puntos: int

    @property
    def orden(self) -> int:
        return len(self.coeficientes) - 1

    def grado(self, n: int) -> int:
        fila = self.coeficientes[n]
        no_nulos = [j for j, c in enumerate(fila) if c]
        return max(no_nulos) if no_nulos else -1

    def potencias_impares(self) -> Dict[int, Tuple[int, ...]]:
        impares = {}
        for n, fila in enumerate(self.coeficientes):
            js = tuple(j for j, c in enumerate(fila) if c and j % 2)
            if js:
                impares[n] = js
        return impares

    def a_beta(self) -> "ExpansionBeta":
        """N^j = (α|μ)^j con μ = Nλ₁ y β = α."""
        alpha = (2,)
        terminos = {}
        for n, fila in enumerate(self.coeficientes):
            for j, c in enumerate(fila):
                if c:
                    terminos[(n, ((alpha, j),))] = c
        return ExpansionBeta(terminos, 1, self.orden)


@dataclass(frozen=True)
class ExpansionBeta:
    terminos: Dict[ClaveBeta, Fraction] = field(hash=False)
    componentes: int
    orden: int

    @classmethod
    def cero(cls, componentes: int, orden: int) -> "ExpansionBeta":
        return cls({}, componentes, orden)

    def producto(self, otra: "ExpansionBeta") -> "ExpansionBeta":
        """Expansión de la unión separada: las variables de cada factor son independientes."""
        orden = min(self.orden, otra.orden)
        terminos: Dict[ClaveBeta, Fraction] = {}
        for (n1, b1), c1 in self.terminos.items():
            for (n2, b2), c2 in otra.terminos.items():
                if n1 + n2 <= orden:
                    clave = (n1 + n2, b1 + b2)
                    terminos[clave] = terminos.get(clave, 0) + c1 * c2
        return ExpansionBeta({k: c for k, c in terminos.items() if c}, self.componentes + otra.componentes, orden)

    def validar_grados(self, rs: RootSystem) -> None:
        """2s ≤ j_i y Σ j_i ≤ n + 2ms: el marco 0 acota el grado de cada orden."""
        m = self.componentes
        for (n, betas), c in self.terminos.items():
            if len(betas) != m:
                raise EntradaInvalidaError(f"Término con {len(betas)} colores en una expansión de {m} componentes")
            js = [j for _, j in betas]
            if min(js) < 2 * rs.s or sum(js) > n + 2 * m * rs.s:
                raise AritmeticaInexactaError(
                    f"Restricción de grado violada en ħ^{n}: j = {js}, s = {rs.s}",
                    {"n": n, "j": js},
                )


# ==================== sl₂: INTERPOLACIÓN EN N ====================

def con_marco_cero(link: FramedLink) -> FramedLink:
    if isinstance(link, (Unknot, Trefoil, FigureEight)):
        return dataclasses.replace(link, b=0)
    if isinstance(link, Hopf):
        return dataclasses.replace(link, b1=0, b2=0)
    return dataclasses.replace(link, framings=tuple(0 for _ in link.framings))


def knot_expansion_sl2(knot: FramedLink, orden: int, puntos: Optional[int] = None) -> ExpansionN:
    """
    Q_{K⁰}(N)|_{q=e^ħ} = Σ c_{j,n} N^j ħ^n hasta ħ^orden.

    Cada orden es un polinomio en N de grado ≤ n+2, así que bastan orden+3 puntos; por
    defecto se usa uno más para que una violación de la cota se vea en el grado.
    """
    if number_of_components(knot) != 1:
        raise EntradaInvalidaError(f"Se esperaba un nudo, se recibió {knot!r}")
    rs = build_root_system("A", 1)
    cero = con_marco_cero(knot)
    puntos = puntos or orden + 4
    valores = [sustituir_q(q_value(rs, cero, [(N,)]), orden) for N in range(1, puntos + 1)]

    simbolo = sympy.Symbol("N")
    coeficientes = []
    for n in range(orden + 1):
        datos = [(N, sympy.Rational(v.coeficiente(n).numerator, v.coeficiente(n).denominator))
                 for N, v in zip(range(1, puntos + 1), valores)]
        poli = sympy.Poly(sympy.interpolate(datos, simbolo), simbolo)
        fila = tuple(Fraction(int(c.p), int(c.q)) for c in reversed(poli.all_coeffs()))
        coeficientes.append(fila)
    logger.debug(f" Expansión en N de {knot!r}: orden {orden}, {puntos} puntos de interpolación")
    return ExpansionN(tuple(coeficientes), puntos)


def degree_bound_check(knot: FramedLink, orden: int = 6) -> bool:
    """El coeficiente de ħ^n tiene grado ≤ 2n + (dim g − ℓ) en N y sólo potencias pares."""
    rs = build_root_system("A", 1)
    expansion = knot_expansion_sl2(knot, orden, puntos=2 * orden + 4)
    impares = expansion.potencias_impares()
    if impares:
        logger.warning(f" Potencias impares de N en {knot!r}: {impares}")
        return False
    for n in range(orden + 1):
        cota = 2 * n + rs.dim_g - rs.rank
        if expansion.grado(n) > cota:
            logger.warning(f" Grado {expansion.grado(n)} > {cota} en ħ^{n} para {knot!r}")
            return False
    return True


# ==================== g GENERAL: EL NUDO TRIVIAL ====================

def _psi_reducido(rs: RootSystem, orden: int) -> SerieH:
    """ħ^{−s}·Π_{α>0}(e^{(α|ρ)ħ/2} − e^{−(α|ρ)ħ/2})."""
    producto = SerieH.constante(1, orden + rs.s)
    for alpha in rs.positive_roots:
        x = rs.inner(alpha, rs.rho)
        producto = producto * (SerieH.exponencial(x / 2, orden + rs.s) - SerieH.exponencial(-x / 2, orden + rs.s))
    return producto.desplazar(-rs.s)


def unknot_expansion(rs: RootSystem, orden: int) -> ExpansionBeta:
    """
    J_U(μ)² = Σ_{w,w'} sn(ww') e^{ħ(wρ+w'ρ|μ)} / ψ(ħ)², desarrollado en β^j(μ).

    Con β = wρ + w'ρ el término β^j aparece en ħ^{j−2s}·(ħ^{2s}/ψ²); para j < 2s la suma
    sobre W × W se anula idénticamente y esos términos se omiten.
    """
    rs.require_weyl()
    s = rs.s
    inversa = (_psi_reducido(rs, orden) ** 2).inversa()
    signos: Counter = Counter()
    orbita = list(zip((tuple(int(x) for x in w) for w in rs.weyl_rho), (int(e) for e in rs.weyl_signs)))
    for (w1, e1), (w2, e2) in itertools.product(orbita, repeat=2):
        signos[tuple(a + b for a, b in zip(w1, w2))] += e1 * e2

    terminos: Dict[ClaveBeta, Fraction] = {}
    for beta, signo in signos.items():
        if not signo:
            continue
        for j in range(2 * s, orden + 2 * s + 1):
            for k in range(orden - (j - 2 * s) + 1):
                c = inversa.coeficiente(k)
                if c:
                    clave = (j - 2 * s + k, ((beta, j),))
                    terminos[clave] = terminos.get(clave, 0) + signo * c / math.factorial(j)
    return ExpansionBeta({k: c for k, c in terminos.items() if c}, 1, orden)
