"""
Presentaciones de enlaces enmarcados.

Contiene:
- Unknot, Hopf, Trefoil, FigureEight: presentaciones especiales con forma cerrada
- Braid: clausura de una trenza con marcos y mapa de componentes
- linking_matrix, number_of_components
- analizar_trenza: componentes (por la permutación) y cruces por par de componentes
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Tuple, Union

import numpy as np

from ..excepciones import EntradaInvalidaError


class Quiralidad(str, Enum):
    LEFT = "left"
    RIGHT = "right"


@dataclass(frozen=True)
class Unknot:
    b: int


@dataclass(frozen=True)
class Hopf:
    b1: int
    b2: int
    linking: int = 1

    def __post_init__(self):
        if self.linking not in (1, -1):
            raise EntradaInvalidaError(f"El enlace de Hopf tiene número de enlace ±1, se recibió {self.linking}")


@dataclass(frozen=True)
class Trefoil:
    b: int
    chirality: Quiralidad = Quiralidad.RIGHT

    def __post_init__(self):
        object.__setattr__(self, "chirality", Quiralidad(self.chirality))


@dataclass(frozen=True)
class FigureEight:
    b: int


@dataclass(frozen=True)
class Braid:
    """
    Clausura de una trenza de `strands` hebras.

    word: generadores σ_i como ±i (1 ≤ i < strands); framings: marco de cada componente;
    component_map: componente de la hebra que arranca en cada posición.
    """

    strands: int
    word: Tuple[int, ...]
    framings: Tuple[int, ...]
    component_map: Tuple[int, ...]
    _analisis: "AnalisisTrenza" = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "word", tuple(int(x) for x in self.word))
        object.__setattr__(self, "framings", tuple(int(x) for x in self.framings))
        object.__setattr__(self, "component_map", tuple(int(x) for x in self.component_map))
        if self.strands < 1:
            raise EntradaInvalidaError("La trenza necesita al menos una hebra")
        for g in self.word:
            if g == 0 or abs(g) >= self.strands:
                raise EntradaInvalidaError(f"Generador σ_{g} inválido para {self.strands} hebras")
        if len(self.component_map) != self.strands:
            raise EntradaInvalidaError("component_map debe tener una entrada por hebra")
        object.__setattr__(self, "_analisis", analizar_trenza(self))
        if len(self.framings) != self._analisis.componentes:
            raise EntradaInvalidaError(
                f"Se esperaban {self._analisis.componentes} marcos, se recibieron {len(self.framings)}"
            )

    @property
    def analisis(self) -> "AnalisisTrenza":
        return self._analisis

    def reversed(self) -> "Braid":
        """Misma clausura con la orientación invertida: la palabra leída al revés."""
        return Braid(self.strands, tuple(reversed(self.word)), self.framings, self.component_map)


FramedLink = Union[Unknot, Hopf, Trefoil, FigureEight, Braid]

NOMBRES_ESPECIALES = {Unknot: "unknot", Hopf: "hopf", Trefoil: "trefoil", FigureEight: "figure_eight"}


@dataclass(frozen=True)
class AnalisisTrenza:
    componentes: int
    writhe_propio: Tuple[int, ...]
    enlace: Tuple[Tuple[int, ...], ...]


def analizar_trenza(trenza: Braid) -> AnalisisTrenza:
    """
    Sigue las hebras a lo largo de la palabra.

    Verifica que component_map sea constante sobre los ciclos de la permutación y que
    ciclos distintos sean componentes distintas.
    """
    n = trenza.strands
    hilo = list(range(n))
    etiquetas = trenza.component_map
    m = max(etiquetas) + 1 if etiquetas else 0
    if sorted(set(etiquetas)) != list(range(m)):
        raise EntradaInvalidaError(f"component_map debe usar las etiquetas 0..m-1: {etiquetas}")
    writhe = [0] * m
    cruces = np.zeros((m, m), dtype=np.int64)
    for g in trenza.word:
        i = abs(g) - 1
        signo = 1 if g > 0 else -1
        c1, c2 = etiquetas[hilo[i]], etiquetas[hilo[i + 1]]
        if c1 == c2:
            writhe[c1] += signo
        else:
            cruces[c1, c2] += signo
            cruces[c2, c1] += signo
        hilo[i], hilo[i + 1] = hilo[i + 1], hilo[i]

    # al final la hebra que arrancó en hilo[p] está en p y se cierra con la que arranca en p
    siguiente = {hilo[p]: p for p in range(n)}
    vistos = set()
    ciclos: List[List[int]] = []
    for inicio in range(n):
        if inicio in vistos:
            continue
        ciclo, actual = [], inicio
        while actual not in vistos:
            vistos.add(actual)
            ciclo.append(actual)
            actual = siguiente[actual]
        ciclos.append(ciclo)
    etiquetas_ciclo = []
    for ciclo in ciclos:
        propias = {etiquetas[p] for p in ciclo}
        if len(propias) != 1:
            raise EntradaInvalidaError(f"component_map no es constante sobre la componente de hebras {ciclo}")
        etiquetas_ciclo.append(propias.pop())
    if len(set(etiquetas_ciclo)) != len(etiquetas_ciclo) or len(ciclos) != m:
        raise EntradaInvalidaError(
            f"La clausura tiene {len(ciclos)} componentes y component_map declara {m}"
        )
    if np.any(cruces % 2):
        raise EntradaInvalidaError("Número impar de cruces entre dos componentes")
    enlace = tuple(tuple(int(x) // 2 for x in fila) for fila in cruces)
    return AnalisisTrenza(m, tuple(writhe), enlace)


def number_of_components(link: FramedLink) -> int:
    if isinstance(link, Braid):
        return link.analisis.componentes
    if isinstance(link, Hopf):
        return 2
    return 1


def linking_matrix(link: FramedLink) -> np.ndarray:
    """Matriz de enlace; la diagonal son los marcos."""
    if isinstance(link, Braid):
        matriz = np.asarray(link.analisis.enlace, dtype=np.int64).reshape(
            link.analisis.componentes, link.analisis.componentes
        )
        np.fill_diagonal(matriz, link.framings)
        return matriz
    if isinstance(link, Hopf):
        return np.asarray([[link.b1, link.linking], [link.linking, link.b2]], dtype=np.int64)
    return np.asarray([[link.b]], dtype=np.int64)


def framings(link: FramedLink) -> Tuple[int, ...]:
    return tuple(int(x) for x in np.diag(linking_matrix(link)))


def hopf_braid(b1: int = 0, b2: int = 0) -> Braid:
    """σ₁² con dos componentes."""
    return Braid(2, (1, 1), (b1, b2), (0, 1))


def unlink_braid(framings_: Tuple[int, ...]) -> Braid:
    """Trenza trivial: enlace trivial de tantas componentes como hebras."""
    n = len(framings_)
    return Braid(n, (), tuple(framings_), tuple(range(n)))


def describir(link: FramedLink) -> Dict[str, object]:
    """Resumen serializable de la presentación (para registros de resultados)."""
    if isinstance(link, Braid):
        return {
            "braid": {
                "strands": link.strands,
                "word": list(link.word),
                "framings": list(link.framings),
                "component_map": list(link.component_map),
            }
        }
    tipo = NOMBRES_ESPECIALES[type(link)]
    datos = {k: (v.value if isinstance(v, Enum) else v) for k, v in link.__dict__.items()}
    return {"special": {"type": tipo, **datos}}
