"""
Dominios fundamentales del nivel desplazado r.

Contiene:
- LatticeDomain: (rs, r, k = r − h)
- Dominio: nombres de las enumeraciones soportadas
- enumerate_domain: P_r∩X, P_r∩Y, ρ+(P_r∩Y), C̄_r∩X y los interiores de C_r
- affine_reduce / center_action: acción de W_r = W ⋉ rY y del centro G
- affine_image: imagen aleatoria bajo W_r (verificaciones de simetría)
- fundamental_domain_partition / center_transversal_check: propiedades de los dominios
"""

import itertools
import logging
import random
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from math import gcd
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..config import limite_vigente
from ..excepciones import EntradaInvalidaError, ErrorInvariantes, RecursoExcedidoError
from .sistema_raices import RootSystem, Weight

logger = logging.getLogger(__name__)


class Dominio(str, Enum):
    """Enumeraciones del retículo que usan las sumas F y las sumas de Gauss."""

    PR_X = "P_r∩X"
    PR_Y = "P_r∩Y"
    RHO_PR_Y = "ρ+(P_r∩Y)"
    ALCOBA_X = "C̄_r∩X"
    INTERIOR_X = "interior(C_r)∩X"
    INTERIOR_RHO_Y = "interior(C_r)∩(ρ+Y)"


@dataclass(frozen=True)
class LatticeDomain:
    rs: RootSystem
    r: int

    def __post_init__(self):
        if self.r < 1:
            raise EntradaInvalidaError(f"El nivel desplazado debe ser positivo, se recibió r={self.r}")

    @property
    def k(self) -> int:
        return self.r - self.rs.h

    def alpha0_pairing(self, mu: Sequence[int]) -> int:
        """(μ|α₀), entero para μ ∈ X."""
        return self.rs.inner_scaled(mu, self.rs.alpha0) // self.rs.D


def _verificar_tamano(tamano: int, limite: Optional[int], que: str) -> None:
    limite = limite if limite is not None else limite_vigente("max_enumeracion")
    if tamano > limite:
        raise RecursoExcedidoError(
            f"La enumeración {que} tiene {tamano} puntos y supera el límite {limite}",
            {"tamano": tamano, "limite": limite},
        )


def _paralelepipedo(dom: LatticeDomain, desplazamientos: Sequence[Weight]) -> List[Weight]:
    rs, r = dom.rs, dom.r
    ell = rs.rank
    coeficientes = np.asarray(list(itertools.product(range(r), repeat=ell)), dtype=np.int64)
    base = coeficientes @ rs.cartan.T
    puntos: List[Weight] = []
    for g in desplazamientos:
        trasladados = base + np.asarray(g, dtype=np.int64)
        puntos.extend(map(tuple, trasladados.tolist()))
    return puntos


def _alcoba(dom: LatticeDomain, interior: bool) -> List[Weight]:
    """Pesos dominantes con (μ|α₀) ≤ r (o < r con μ_i > 0 para el interior)."""
    rs, r = dom.rs, dom.r
    pesos = [dom.alpha0_pairing(lam) for lam in np.eye(rs.rank, dtype=np.int64)]
    minimo = 1 if interior else 0
    cota = r - 1 if interior else r
    puntos: List[Weight] = []

    def recorrer(i: int, parcial: List[int], usado: int):
        if i == rs.rank:
            puntos.append(tuple(parcial))
            return
        c = minimo
        while usado + c * pesos[i] + sum(minimo * p for p in pesos[i + 1:]) <= cota:
            recorrer(i + 1, parcial + [c], usado + c * pesos[i])
            c += 1

    recorrer(0, [], 0)
    return puntos


def enumerate_domain(
    dom: LatticeDomain,
    which: Dominio,
    max_enumeracion: Optional[int] = None,
) -> List[Weight]:
    """
    Enumeración exacta y sin repeticiones del dominio pedido.

    P_r es el paralelepípedo semiabierto {Σ c_i α_i : 0 ≤ c_i < r}; sus puntos en X se
    obtienen trasladando P_r∩Y por un levantamiento de cada clase de X/Y.
    """
    which = Dominio(which)
    rs, r = dom.rs, dom.r
    if which in (Dominio.PR_X, Dominio.PR_Y, Dominio.RHO_PR_Y):
        clases = len(rs.center.representatives) if which == Dominio.PR_X else 1
        _verificar_tamano(r ** rs.rank * clases, max_enumeracion, which.value)
        if which == Dominio.PR_Y:
            return _paralelepipedo(dom, [tuple([0] * rs.rank)])
        if which == Dominio.RHO_PR_Y:
            return _paralelepipedo(dom, [rs.rho])
        return _paralelepipedo(dom, rs.center.representatives)

    # la alcoba tiene a lo sumo (r+1)^ℓ puntos
    _verificar_tamano((r + 1) ** rs.rank, max_enumeracion, which.value)
    if which == Dominio.ALCOBA_X:
        return _alcoba(dom, interior=False)
    interiores = _alcoba(dom, interior=True)
    if which == Dominio.INTERIOR_X:
        return interiores
    return [mu for mu in interiores if rs.in_rho_plus_root_lattice(mu)]


def affine_reduce(dom: LatticeDomain, mu: Sequence[int]) -> Tuple[Weight, bool]:
    """
    Representante de la W_r-órbita de μ en C̄_r y si está en el borde.

    Paso a paso: reflexión simple en una pared con μ_i < 0, o reflexión afín
    μ ↦ μ − ((μ|α₀) − r)·α₀ si (μ|α₀) > r.
    """
    rs, r = dom.rs, dom.r
    actual = list(int(x) for x in mu)
    alpha0 = rs.alpha0
    pasos = 0
    limite_pasos = 10_000 + 100 * sum(abs(x) for x in actual) * rs.h
    while True:
        negativos = [i for i, x in enumerate(actual) if x < 0]
        if negativos:
            actual = list(rs.reflect(actual, negativos[0]))
        else:
            exceso = dom.alpha0_pairing(actual) - r
            if exceso <= 0:
                break
            actual = [x - exceso * a for x, a in zip(actual, alpha0)]
        pasos += 1
        if pasos > limite_pasos:
            raise ErrorInvariantes(f"La reducción afín de {tuple(mu)} no terminó")
    rep = tuple(actual)
    borde = any(x == 0 for x in rep) or dom.alpha0_pairing(rep) == r
    return rep, borde


def center_action(dom: LatticeDomain, g: Sequence[int], mu: Sequence[int]) -> Weight:
    """g(μ) = μ + r·g̃ reducido módulo W_r; no depende del levantamiento g̃."""
    trasladado = tuple(int(m) + dom.r * int(x) for m, x in zip(mu, g))
    return affine_reduce(dom, trasladado)[0]


def affine_image(dom: LatticeDomain, mu: Sequence[int], rng: random.Random, longitud: int = 6) -> Weight:
    """
    Imagen de μ por un elemento aleatorio de W_r, como palabra en las reflexiones
    simples, la reflexión afín y las traslaciones por r·α_i.
    """
    rs, r = dom.rs, dom.r
    actual = tuple(int(x) for x in mu)
    for _ in range(longitud):
        eleccion = rng.randrange(2 * rs.rank + 1)
        if eleccion < rs.rank:
            actual = rs.reflect(actual, eleccion)
        elif eleccion < 2 * rs.rank:
            i = eleccion - rs.rank
            signo = rng.choice((-1, 1))
            actual = tuple(x + signo * r * a for x, a in zip(actual, rs.simple_roots[i]))
        else:
            exceso = dom.alpha0_pairing(actual) - r
            actual = tuple(x - exceso * a for x, a in zip(actual, rs.alpha0))
    return actual


def fundamental_domain_partition(dom: LatticeDomain) -> Dict[str, object]:
    """
    Reduce cada punto de P_r∩X y cuenta cuántos caen en cada representante de C̄_r.

    Los puntos interiores deben recibir exactamente |W| preimágenes.
    """
    rs = dom.rs
    conteo: Counter = Counter()
    for mu in enumerate_domain(dom, Dominio.PR_X):
        rep, _ = affine_reduce(dom, mu)
        conteo[rep] += 1
    interiores = enumerate_domain(dom, Dominio.INTERIOR_X)
    fallos = [mu for mu in interiores if conteo.get(mu, 0) != rs.weyl_order]
    fuera = [mu for mu in conteo if mu not in set(enumerate_domain(dom, Dominio.ALCOBA_X))]
    logger.debug(f" Partición de P_r∩X para {rs.nombre}, r={dom.r}: {len(conteo)} representantes")
    return {
        "ok": not fallos and not fuera,
        "representantes": len(conteo),
        "interiores": len(interiores),
        "fallos": fallos,
        "fuera_de_alcoba": fuera,
    }


def center_orbits(dom: LatticeDomain) -> List[Tuple[Weight, ...]]:
    """Órbitas de G sobre C̄_r∩X."""
    rs = dom.rs
    restantes = set(enumerate_domain(dom, Dominio.ALCOBA_X))
    orbitas = []
    for mu in sorted(restantes):
        if mu not in restantes:
            continue
        orbita = {center_action(dom, g, mu) for g in rs.center.representatives}
        restantes -= orbita
        orbitas.append(tuple(sorted(orbita)))
    return orbitas


def center_transversal_check(dom: LatticeDomain) -> Dict[str, object]:
    """
    Con mcd(r, |G|) = 1, G actúa libremente y cada órbita toca ρ+Y exactamente una vez.
    """
    rs = dom.rs
    if gcd(dom.r, rs.det_cartan) != 1:
        raise EntradaInvalidaError(
            f"La transversal requiere mcd(r, |G|) = 1; r={dom.r}, |G|={rs.det_cartan}"
        )
    orbitas = center_orbits(dom)
    libres = all(len(o) == rs.center.order for o in orbitas)
    cortes = [sum(1 for mu in o if rs.in_rho_plus_root_lattice(mu)) for o in orbitas]
    return {
        "ok": libres and all(c == 1 for c in cortes),
        "orbitas": len(orbitas),
        "accion_libre": libres,
        "cortes_rho_Y": cortes,
    }
