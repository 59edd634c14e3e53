"""
Evaluador de clausuras de trenzas para sl₂ con módulos coloreados V_N.

Base e_j (0 ≤ j < N) con H e_j = (N−1−2j) e_j, F e_j = [j+1] e_{j+1},
E e_j = [N−j] e_{j−1}. Con v = q^{1/2}:

    R = v^{H⊗H/2} · Σ_n v^{n(n−1)/2} (v − v⁻¹)^n / [n]! · E^n ⊗ F^n,   Ř = P∘R

σ_i actúa por Ř en las posiciones (i, i+1) y σ_i⁻¹ por Ř⁻¹. La clausura es la traza con
K = v^H en cada hebra; el marco 0 se obtiene multiplicando por θ_N^{−writhe} en cada
componente, θ_N = q^{(N²−1)/4}. Los exponentes van en unidades de q^{1/4}.
"""

import itertools
import logging
from functools import lru_cache
from typing import Dict, Optional, Sequence, Tuple

from ..aritmetica import LaurentHalf
from ..config import limite_vigente
from ..excepciones import EntradaInvalidaError, RecursoExcedidoError
from .presentaciones import Braid

logger = logging.getLogger(__name__)

D_SL2 = 2

Base = Tuple[int, int]
Matriz = Dict[Base, Dict[Base, LaurentHalf]]


def _v(x: int) -> LaurentHalf:
    """v^x = q^{x/2}."""
    return LaurentHalf.monomial(D_SL2, 2 * x)


def _llave(x: int) -> LaurentHalf:
    """v^x − v^{−x}."""
    return LaurentHalf(D_SL2, {2 * x: 1, -2 * x: -1})


@lru_cache(maxsize=None)
def _binomial_cuantico(a: int, n: int) -> LaurentHalf:
    """[a choose n] con [k] = (v^k − v^{−k})/(v − v⁻¹)."""
    numerador = LaurentHalf.constant(D_SL2, 1)
    denominador = LaurentHalf.constant(D_SL2, 1)
    for i in range(1, n + 1):
        numerador = numerador * _llave(a - n + i)
        denominador = denominador * _llave(i)
    return numerador.exact_div(denominador)


def _fase(N1: int, N2: int, j: int, k: int) -> LaurentHalf:
    """v^{H⊗H/2} sobre e_j ⊗ e_k, es decir q^{(N1−1−2j)(N2−1−2k)/4}."""
    return LaurentHalf.monomial(D_SL2, (N1 - 1 - 2 * j) * (N2 - 1 - 2 * k))


@lru_cache(maxsize=None)
def _theta(N1: int, N2: int) -> Matriz:
    """Θ = Σ_n v^{n(n−1)/2}(v − v⁻¹)^n/[n]! E^n ⊗ F^n sobre V_{N1} ⊗ V_{N2}."""
    matriz: Matriz = {}
    for j in range(N1):
        for k in range(N2):
            columna = {}
            for n in range(0, min(j, N2 - 1 - k) + 1):
                coef = _v(n * (n - 1) // 2) * _binomial_cuantico(N1 - 1 - j + n, n)
                for i in range(1, n + 1):
                    coef = coef * _llave(k + i)
                columna[(j - n, k + n)] = coef
            matriz[(j, k)] = columna
    return matriz


def _componer(a: Matriz, b: Matriz) -> Matriz:
    """a∘b."""
    resultado: Matriz = {}
    for origen, columna in b.items():
        acumulado: Dict[Base, LaurentHalf] = {}
        for intermedio, c in columna.items():
            for destino, d in a[intermedio].items():
                acumulado[destino] = acumulado.get(destino, LaurentHalf(D_SL2)) + c * d
        resultado[origen] = {k: v for k, v in acumulado.items() if not v.is_zero()}
    return resultado


@lru_cache(maxsize=None)
def _theta_inversa(N1: int, N2: int) -> Matriz:
    """Θ = I + X con X nilpotente: Θ⁻¹ = Σ_t (−X)^t."""
    theta = _theta(N1, N2)
    menos_x: Matriz = {
        origen: {destino: -c for destino, c in columna.items() if destino != origen}
        for origen, columna in theta.items()
    }
    identidad: Matriz = {origen: {origen: LaurentHalf.constant(D_SL2, 1)} for origen in theta}
    resultado = {o: dict(c) for o, c in identidad.items()}
    potencia = identidad
    for _ in range(min(N1, N2)):
        potencia = _componer(menos_x, potencia)
        if not any(potencia.values()):
            break
        for origen, columna in potencia.items():
            destino_col = resultado[origen]
            for destino, c in columna.items():
                nuevo = destino_col.get(destino, LaurentHalf(D_SL2)) + c
                if nuevo.is_zero():
                    destino_col.pop(destino, None)
                else:
                    destino_col[destino] = nuevo
    return resultado


@lru_cache(maxsize=None)
def r_matrix(N1: int, N2: int, signo: int) -> Matriz:
    """
    Ř_{N1,N2}: V_{N1}⊗V_{N2} → V_{N2}⊗V_{N1} (signo +1), o
    Ř⁻¹: V_{N1}⊗V_{N2} → V_{N2}⊗V_{N1} (signo −1), con Ř⁻¹ = R_{N2,N1}⁻¹∘P.
    """
    if signo > 0:
        theta = _theta(N1, N2)
        return {
            origen: {(k2, j2): c * _fase(N1, N2, j2, k2) for (j2, k2), c in columna.items()}
            for origen, columna in theta.items()
        }
    # R⁻¹ = Θ⁻¹ v^{−H⊗H/2} sobre V_{N2}⊗V_{N1}
    inversa = _theta_inversa(N2, N1)
    matriz: Matriz = {}
    for (j, k) in itertools.product(range(N1), range(N2)):
        intercambiado = (k, j)
        fase = _fase(N2, N1, k, j) ** -1
        matriz[(j, k)] = {destino: c * fase for destino, c in inversa[intercambiado].items()}
    return matriz


def _colores_por_posicion(trenza: Braid, colores: Sequence[int]):
    """Colores de las hebras en cada nivel de la trenza."""
    hilo = list(range(trenza.strands))
    niveles = []
    for g in trenza.word:
        niveles.append(tuple(colores[trenza.component_map[h]] for h in hilo))
        i = abs(g) - 1
        hilo[i], hilo[i + 1] = hilo[i + 1], hilo[i]
    return niveles


def braid_jones_sl2(
    trenza: Braid,
    colores: Sequence[int],
    max_tensor: Optional[int] = None,
) -> LaurentHalf:
    """
    J_{L⁰}(N₁, …, N_m) de la clausura con marco 0.

    Raises:
        EntradaInvalidaError: número de colores distinto del de componentes o color no positivo
        RecursoExcedidoError: el producto de dimensiones supera el límite configurado
    """
    analisis = trenza.analisis
    colores = tuple(int(c) for c in colores)
    if len(colores) != analisis.componentes:
        raise EntradaInvalidaError(
            f"La trenza tiene {analisis.componentes} componentes y se dieron {len(colores)} colores"
        )
    if any(c < 1 for c in colores):
        raise EntradaInvalidaError(f"Los colores deben ser dimensiones positivas: {colores}")
    dims = [colores[trenza.component_map[p]] for p in range(trenza.strands)]
    tamano = 1
    for d in dims:
        tamano *= d
    limite = max_tensor if max_tensor is not None else limite_vigente("max_tensor_trenza")
    if tamano > limite:
        raise RecursoExcedidoError(
            f"La base tensorial de la trenza tiene {tamano} vectores y supera el límite {limite}",
            {"tamano": tamano, "limite": limite},
        )

    niveles = _colores_por_posicion(trenza, colores)
    matrices = []
    for g, nivel in zip(trenza.word, niveles):
        i = abs(g) - 1
        matrices.append((i, r_matrix(nivel[i], nivel[i + 1], 1 if g > 0 else -1)))

    traza = LaurentHalf(D_SL2)
    for base in itertools.product(*(range(d) for d in dims)):
        vector: Dict[Tuple[int, ...], LaurentHalf] = {base: LaurentHalf.constant(D_SL2, 1)}
        for i, matriz in matrices:
            nuevo: Dict[Tuple[int, ...], LaurentHalf] = {}
            for estado, c in vector.items():
                for (a, b), d in matriz[(estado[i], estado[i + 1])].items():
                    destino = estado[:i] + (a, b) + estado[i + 2:]
                    nuevo[destino] = nuevo.get(destino, LaurentHalf(D_SL2)) + c * d
            vector = {k: v for k, v in nuevo.items() if not v.is_zero()}
            if not vector:
                break
        diagonal = vector.get(base)
        if diagonal is None:
            continue
        peso = sum(N - 1 - 2 * j for N, j in zip(dims, base))
        traza = traza + diagonal.shift(2 * peso)

    # θ_N^{−writhe}: q^{−w(N²−1)/4}
    correccion = sum(-w * (N * N - 1) for w, N in zip(analisis.writhe_propio, colores))
    logger.debug(f" Trenza {trenza.word} con colores {colores}: base de {tamano} vectores")
    return traza.shift(correccion)
