"""
Verificaciones de los teoremas sobre invariantes de 3-variedades.

Contiene:
- s_matrix_check: S·S̄ escalar no nulo sobre interior(C_r)∩(ρ+Y)
- splitting_check / F_split_check: τ^g = τ^{Pg}·τ^G y F^g = F^{Pg}·F^G
- kirby_equivalence_check: dos presentaciones de la misma variedad
- projective_valuation_check: valoración (ξ−1)-ádica de F^{Pg}_{U_b}
- divisibility_check: divisibilidad de sumas de polinomios sobre ρ+(P_r∩Y)
- trivial_cases_check: anulación de F^g_{U±} y no anulación de F^{Pg}_{U±}
"""

import itertools
import logging
import random
from math import gcd
from typing import Optional

import numpy as np

from ..aritmetica import CycField, CycNum, embed, validar_primo_impar, valuation_at_xi_minus_1
from ..enlaces import FramedLink, Unknot
from ..excepciones import EntradaInvalidaError
from ..lie import Dominio, LatticeDomain, RootSystem, enumerate_domain
from ..sumas import gauss_vanishing_prediction, hopf_numerator, normalizar_psi
from .especificacion import ManifoldSpec
from .sumas_f import F_sum, Sabor, validar_nivel
from .tau import tau

logger = logging.getLogger(__name__)


def _requerir_coprimo(rs: RootSystem, r: int, n: int, que: str) -> None:
    if gcd(r, n) != 1:
        raise EntradaInvalidaError(f"Se requiere mcd(r, {que}) = 1; r={r}, {que}={n}")


def s_matrix_check(rs: RootSystem, r: int, a: int = 1) -> bool:
    """S_{λμ} = J_H(λ, μ)|_{q=ξ} con λ, μ ∈ interior(C_r)∩(ρ+Y); S·S̄ = c·Id con c ≠ 0."""
    _requerir_coprimo(rs, r, rs.d * rs.det_cartan, "d·det")
    validar_nivel(rs, r)
    campo = CycField.xi(r, a)
    colores = enumerate_domain(LatticeDomain(rs, r), Dominio.INTERIOR_RHO_Y)
    n = len(colores)
    S = np.empty((n, n), dtype=object)
    for i, lam in enumerate(colores):
        for j, mu in enumerate(colores):
            S[i, j] = normalizar_psi(rs, hopf_numerator(rs, lam, mu, r), 1, campo)
    conjugada = np.vectorize(lambda x: x.conj(), otypes=[object])(S)
    producto = S @ conjugada
    escalar = producto[0, 0]
    ok = not escalar.is_zero() and all(
        producto[i, j] == (escalar if i == j else 0) for i in range(n) for j in range(n)
    )
    logger.info(f" Matriz S de {rs.nombre}, r={r}: {n}x{n}, S·S̄ escalar: {ok}")
    return ok


def F_split_check(rs: RootSystem, r: int, link: FramedLink, a: int = 1) -> bool:
    """F^g_L = F^{Pg}_L · F^G_L con F^{Pg} sumergido por ξ = ζ^{2D}."""
    completo = F_sum(rs, r, link, Sabor.FULL, a)
    proyectivo = F_sum(rs, r, link, Sabor.PROJECTIVE, a)
    centro = F_sum(rs, r, link, Sabor.CENTER, a)
    return completo == embed(proyectivo, completo.field) * centro


def splitting_check(spec: ManifoldSpec, rs: RootSystem, r: int, a: int = 1) -> bool:
    """τ^g = τ^{Pg}·τ^G, más la identidad a nivel de F para U± y para cada enlace."""
    _requerir_coprimo(rs, r, rs.det_cartan, "det")
    enlaces = [Unknot(1), Unknot(-1)] + spec.flatten()
    if not all(F_split_check(rs, r, link, a) for link in enlaces):
        logger.warning(f" F^g ≠ F^Pg·F^G para '{spec.name}', {rs.nombre}, r={r}")
        return False
    completo = tau(spec, rs, r, Sabor.FULL, a)
    proyectivo = tau(spec, rs, r, Sabor.PROJECTIVE, a)
    centro = tau(spec, rs, r, Sabor.CENTER, a)
    ok = completo.value == embed(proyectivo.value, completo.field) * centro.value
    logger.info(f" Separación de '{spec.name}' para {rs.nombre}, r={r}: {ok}")
    return ok


def kirby_equivalence_check(
    spec_a: ManifoldSpec,
    spec_b: ManifoldSpec,
    rs: RootSystem,
    r: int,
    flavor: Sabor = Sabor.FULL,
    a: int = 1,
) -> bool:
    primero = tau(spec_a, rs, r, flavor, a)
    segundo = tau(spec_b, rs, r, flavor, a)
    ok = primero.defined == segundo.defined and primero.value == segundo.value
    if not ok:
        logger.warning(f" τ^{Sabor(flavor).value} distingue '{spec_a.name}' de '{spec_b.name}' (r={r})")
    return ok


def projective_valuation_check(rs: RootSystem, r: int, b: int, a: int = 1) -> bool:
    """F^{Pg}_{U_b} ~ (ξ−1)^{(rℓ − dim g)/2} para r primo impar que no divide a d·det ni a b."""
    validar_primo_impar(r)
    _requerir_coprimo(rs, r, rs.d * rs.det_cartan, "d·det")
    if b % r == 0:
        raise EntradaInvalidaError(f"b={b} es divisible por r={r}")
    valor = F_sum(rs, r, Unknot(b), Sabor.PROJECTIVE, a)
    esperada = (r * rs.rank - rs.dim_g) // 2
    obtenida = valuation_at_xi_minus_1(valor.field, valor)
    logger.debug(f" v(F^Pg_U{b}) = {obtenida}, esperada {esperada} ({rs.nombre}, r={r})")
    return obtenida == esperada


def _valor_monomio(rs: RootSystem, coloracion, exponentes) -> int:
    """Π_{j,i} (D(μ_j|ω_i))^{e_ji}: entero en todo X."""
    valor = 1
    for mu, fila in zip(coloracion, exponentes):
        coords = rs.gram_D @ np.asarray(mu, dtype=np.int64)
        for c, e in zip(coords.tolist(), fila):
            valor *= int(c) ** e
    return valor


def divisibility_check(
    rs: RootSystem,
    r: int,
    m: int,
    degree: int,
    rng: Optional[random.Random] = None,
    muestras: int = 3,
    a: int = 1,
) -> bool:
    """
    Para monomios p de grado `degree` en los m colores, x = Σ_{μ_j∈ρ+(P_r∩Y)} p(μ) es
    divisible por (ξ−1)^{ℓm(r−1)/2 − ⌊deg p/2⌋} en Z[ξ].
    """
    validar_primo_impar(r)
    rng = rng or random.Random(0)
    campo = CycField.xi(r, a)
    puntos = enumerate_domain(LatticeDomain(rs, r), Dominio.RHO_PR_Y)
    requerida = rs.rank * m * (r - 1) // 2 - degree // 2
    for _ in range(muestras):
        exponentes = np.zeros(m * rs.rank, dtype=np.int64)
        for _ in range(degree):
            exponentes[rng.randrange(m * rs.rank)] += 1
        exponentes = exponentes.reshape(m, rs.rank).tolist()
        x = sum(
            _valor_monomio(rs, coloracion, exponentes)
            for coloracion in itertools.product(puntos, repeat=m)
        )
        if x == 0 or requerida <= 0:
            continue
        if valuation_at_xi_minus_1(campo, CycNum.from_int(campo, x)) < requerida:
            logger.warning(f" Σp = {x} no es divisible por (ξ−1)^{requerida}; exponentes {exponentes}")
            return False
    return True


def trivial_cases_check(rs: RootSystem, r: int, a: int = 1) -> bool:
    """
    F^g_{U±} = 0 exactamente en los casos previstos (r impar y C_ℓ o B_ℓ con ℓ par), y
    F^{Pg}_{U±} ≠ 0 cuando mcd(r, det) = 1.
    """
    prevista = gauss_vanishing_prediction(rs, r)
    for b in (1, -1):
        if F_sum(rs, r, Unknot(b), Sabor.FULL, a).is_zero() != prevista:
            logger.warning(f" F^g_U({b}) para {rs.nombre}, r={r} contradice la predicción {prevista}")
            return False
        if gcd(r, rs.det_cartan) == 1 and F_sum(rs, r, Unknot(b), Sabor.PROJECTIVE, a).is_zero():
            logger.warning(f" F^Pg_U({b}) = 0 para {rs.nombre}, r={r} con mcd(r, det) = 1")
            return False
    return True
