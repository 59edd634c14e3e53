"""
Expansión número-teórica de τ^{Pg}(ξ) y congruencias con la serie perturbativa.

Un representante f(q) = Σ c_k q^k de τ ∈ Z[ξ] da, con q = e^ħ,
c_{r,n} = Σ_k c_k k^n / n!; para n < r−1 su reducción módulo r no depende del
representante y debe coincidir con (|H₁|/r)^ℓ·c_n.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Dict, List, Sequence, Tuple

from ..aritmetica import CycNum, TipoCampo, integrality_witness, legendre, validar_primo_impar
from ..excepciones import AritmeticaInexactaError, EntradaInvalidaError, InvarianteIndefinidoError
from ..lie import RootSystem
from ..variedades import ManifoldSpec, Sabor, homology_order, signature, tau
from .ohtsuki import OhtsukiSeries

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PrimeExpansion:
    r: int
    coeffs_mod_r: Tuple[int, ...]
    representative_degree: int


def fraccion_mod(c: Fraction, r: int) -> int:
    if c.denominator % r == 0:
        raise AritmeticaInexactaError(f"El denominador de {c} es divisible por r={r}")
    return c.numerator * pow(c.denominator, -1, r) % r


def residuos_de_representante(coeficientes: Sequence[int], r: int, orden: int) -> Tuple[int, ...]:
    """c_{r,n} mod r para n ≤ orden, con f(q) = Σ coeficientes[k] q^k."""
    residuos = []
    for n in range(orden + 1):
        suma = sum(int(c) * pow(k, n, r) for k, c in enumerate(coeficientes) if c) % r
        residuos.append(suma * pow(factorial(n), -1, r) % r)
    return tuple(residuos)


def representante(value: CycNum, r: int) -> List[int]:
    """f(q) con f(ξ) = value, en grados 0..r−1; deshace la elección ξ = x^a."""
    campo = value.field
    if campo.kind != TipoCampo.XI or campo.r != r:
        raise EntradaInvalidaError(f"Se esperaba un elemento de Q(ξ_{r}), se recibió uno de {campo}")
    entero, coeficientes = integrality_witness(campo, value)
    if not entero:
        raise AritmeticaInexactaError("La expansión número-teórica requiere un elemento de Z[ξ]")
    inverso = pow(campo.a, -1, r)
    f = [0] * r
    for k, c in enumerate(coeficientes):
        f[k * inverso % r] += int(c)
    return f


def prime_expand(value: CycNum, r: int, N: int) -> PrimeExpansion:
    validar_primo_impar(r)
    if N >= r - 1:
        raise EntradaInvalidaError(f"Sólo hay residuos bien definidos para n < r−1 = {r - 1}; se pidió N={N}")
    f = representante(value, r)
    grado = max((k for k, c in enumerate(f) if c), default=0)
    return PrimeExpansion(r, residuos_de_representante(f, r, N), grado)


def representative_independence_check(value: CycNum, r: int, N: int, desplazamiento: int = 1) -> bool:
    """f(q) y f(q) + q^t(1 + q + … + q^{r−1}) dan los mismos residuos."""
    base = prime_expand(value, r, N)
    f = representante(value, r) + [0] * desplazamiento
    for k in range(desplazamiento, desplazamiento + r):
        f[k] += 1
    return residuos_de_representante(f, r, N) == base.coeffs_mod_r


# ==================== CONGRUENCIAS ====================

def congruence_rows(
    series: OhtsukiSeries,
    spec: ManifoldSpec,
    rs: RootSystem,
    r: int,
    n_max: int,
    a: int = 1,
) -> List[Dict[str, object]]:
    """Una fila por n ≤ n_max con c_{r,n}, c_n mod r y el signo de Legendre."""
    validar_primo_impar(r)
    matriz = spec.linking_matrix()
    if signature(matriz).sigma_zero:
        raise EntradaInvalidaError(f"'{spec.name}' no es una esfera de homología racional")
    orden_h1 = homology_order(matriz)
    if r <= max(orden_h1, rs.dim_g - rs.rank):
        raise EntradaInvalidaError(
            f"Se requiere r > max(|H₁|, dim g − ℓ) = {max(orden_h1, rs.dim_g - rs.rank)}; r={r}"
        )
    if n_max >= r - 1 or n_max > series.orden:
        raise EntradaInvalidaError(f"n_max={n_max} debe ser < r−1 y ≤ orden de la serie ({series.orden})")
    resultado = tau(spec, rs, r, Sabor.PROJECTIVE, a)
    if not resultado.defined:
        raise InvarianteIndefinidoError(f"τ^Pg de '{spec.name}' no está definido para r={r}")
    expansion = prime_expand(resultado.value, r, n_max)
    signo = legendre(orden_h1, r) ** rs.rank
    filas = []
    for n in range(n_max + 1):
        esperado = signo * fraccion_mod(series.coeffs[n], r) % r
        filas.append({
            "r": r,
            "n": n,
            "c_rn": expansion.coeffs_mod_r[n],
            "c_n": f"{series.coeffs[n].numerator}/{series.coeffs[n].denominator}",
            "legendre": signo,
            "esperado": esperado,
            "ok": expansion.coeffs_mod_r[n] == esperado,
        })
    return filas


def congruence_check(
    series: OhtsukiSeries,
    spec: ManifoldSpec,
    rs: RootSystem,
    r: int,
    n_max: int,
    a: int = 1,
) -> bool:
    filas = congruence_rows(series, spec, rs, r, n_max, a)
    fallidas = [fila["n"] for fila in filas if not fila["ok"]]
    if fallidas:
        logger.warning(f" Congruencia fallida para '{spec.name}', {rs.nombre}, r={r}: n = {fallidas}")
        return False
    logger.info(f" Congruencia c_(r,n) ≡ (|H₁|/r)^ℓ c_n para '{spec.name}', r={r}, n ≤ {n_max}")
    return True


def orden_verificable(rs: RootSystem, r: int, orden: int) -> int:
    """Mayor n ≤ orden con n < r−1−s: hasta ahí la división por Π(1 − ξ^x) conserva la congruencia."""
    return max(min(orden, r - 2 - rs.s), 0)
