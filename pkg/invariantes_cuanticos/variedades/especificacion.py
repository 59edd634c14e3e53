"""
Presentaciones de 3-variedades por cirugía.

Contiene:
- ManifoldSpec: enlaces disjuntos más sumandos conexos
- load_manifold_spec: lectura y validación del JSON
- signature: inercia exacta de la matriz de enlace
- homology_order: |H₁| = |det|
"""

import json
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Sequence, Tuple, Union

import numpy as np
from pydantic import ValidationError
from sympy import Matrix

from ..enlaces import (
    Braid,
    FigureEight,
    FramedLink,
    Hopf,
    Trefoil,
    Unknot,
    describir,
    linking_matrix,
)
from ..excepciones import EntradaInvalidaError
from .schemas import ComponenteModel, ManifoldSpecModel

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ManifoldSpec:
    surgery_components: Tuple[FramedLink, ...] = ()
    connected_sum: Tuple["ManifoldSpec", ...] = ()
    name: str = ""

    def flatten(self) -> List[FramedLink]:
        """Todos los enlaces de la cirugía; una suma conexa es la unión disjunta de las presentaciones."""
        enlaces = list(self.surgery_components)
        for sumando in self.connected_sum:
            enlaces.extend(sumando.flatten())
        return enlaces

    def linking_matrix(self) -> np.ndarray:
        """Matriz de enlace total, diagonal por bloques."""
        bloques = [linking_matrix(link) for link in self.flatten()]
        n = sum(b.shape[0] for b in bloques)
        matriz = np.zeros((n, n), dtype=np.int64)
        inicio = 0
        for b in bloques:
            k = b.shape[0]
            matriz[inicio:inicio + k, inicio:inicio + k] = b
            inicio += k
        return matriz

    def a_json(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "components": [describir(link) for link in self.surgery_components],
            "connected_sum": [s.a_json() for s in self.connected_sum],
        }


@dataclass(frozen=True)
class SignatureData:
    sigma_plus: int
    sigma_minus: int
    sigma_zero: int


# ==================== LECTURA ====================

def componente_desde_modelo(modelo: ComponenteModel) -> FramedLink:
    if modelo.braid is not None:
        t = modelo.braid
        return Braid(t.strands, tuple(t.word), tuple(t.framings), tuple(t.component_map))
    e = modelo.special
    if e.type == "unknot":
        return Unknot(e.b)
    if e.type == "hopf":
        return Hopf(e.b1, e.b2, e.linking)
    if e.type == "trefoil":
        return Trefoil(e.b, e.chirality)
    return FigureEight(e.b)


def spec_desde_modelo(modelo: ManifoldSpecModel) -> ManifoldSpec:
    return ManifoldSpec(
        surgery_components=tuple(componente_desde_modelo(c) for c in modelo.components),
        connected_sum=tuple(spec_desde_modelo(s) for s in modelo.connected_sum),
        name=modelo.name,
    )


def load_manifold_spec(fuente: Union[str, Path, Dict[str, Any]]) -> ManifoldSpec:
    """
    Lee una ManifoldSpec desde un archivo JSON o un diccionario ya decodificado.

    Raises:
        EntradaInvalidaError: archivo inexistente, JSON mal formado o esquema inválido
    """
    if isinstance(fuente, dict):
        datos = fuente
    else:
        ruta = Path(fuente)
        try:
            datos = json.loads(ruta.read_text(encoding="utf-8"))
        except FileNotFoundError:
            raise EntradaInvalidaError(f"No existe el archivo de especificación {ruta}")
        except json.JSONDecodeError as e:
            raise EntradaInvalidaError(f"JSON inválido en {ruta}: {e}")
    try:
        modelo = ManifoldSpecModel.model_validate(datos)
    except ValidationError as e:
        raise EntradaInvalidaError(f"Especificación inválida: {e.errors()[0]['msg']}", {"errores": len(e.errors())})
    spec = spec_desde_modelo(modelo)
    logger.debug(f" Especificación '{spec.name}' con {len(spec.flatten())} enlaces")
    return spec


# ==================== MATRIZ DE ENLACE ====================

def signature(matriz: Union[np.ndarray, Sequence[Sequence[int]]]) -> SignatureData:
    """
    Inercia exacta por diagonalización de congruencia sobre Q.

    Con diagonal nula y un l_ij ≠ 0 se suma la fila y columna j a la i, lo que deja
    2·l_ij en la diagonal.
    """
    A = [[Fraction(int(x)) for x in fila] for fila in np.asarray(matriz, dtype=np.int64).tolist()]
    n = len(A)
    positivos = negativos = 0
    while A:
        k = len(A)
        pivote = next((i for i in range(k) if A[i][i] != 0), None)
        if pivote is None:
            par = next(((i, j) for i in range(k) for j in range(k) if A[i][j] != 0), None)
            if par is None:
                break
            i, j = par
            for c in range(k):
                A[i][c] += A[j][c]
            for f in range(k):
                A[f][i] += A[f][j]
            pivote = i
        p = A[pivote][pivote]
        if p > 0:
            positivos += 1
        else:
            negativos += 1
        resto = [i for i in range(k) if i != pivote]
        A = [[A[f][c] - A[f][pivote] * A[pivote][c] / p for c in resto] for f in resto]
    return SignatureData(positivos, negativos, n - positivos - negativos)


def homology_order(matriz: Union[np.ndarray, Sequence[Sequence[int]]]) -> int:
    """|det| de la matriz de enlace; 0 si H₁ es infinito. La matriz vacía (S³) da 1."""
    arreglo = np.asarray(matriz, dtype=np.int64)
    if arreglo.size == 0:
        return 1
    return abs(int(Matrix(arreglo.tolist()).det()))
