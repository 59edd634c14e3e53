"""
Anillo de grupo Z[Z/m] para acumular sumas de raíces de la unidad.

Una suma Σ c_e ζ^e se guarda como un vector de longitud m (índice e mod m) con enteros
de Python (dtype=object), sin desborde; se reduce una sola vez a Q(ζ_m) con la tabla de
potencias de ciclotomico.py.
"""

from typing import Iterable, Optional

import numpy as np

from ..excepciones import AritmeticaInexactaError
from .ciclotomico import CycField, CycNum


class AnilloGrupo:
    """Elemento de Z[Z/m]; el índice e representa ζ^e."""

    __slots__ = ("m", "coef")

    def __init__(self, m: int, coef: Optional[np.ndarray] = None):
        self.m = m
        if coef is None:
            coef = np.zeros(m, dtype=object)
        self.coef = np.asarray(coef).astype(object)

    @classmethod
    def monomio(cls, m: int, e: int, c: int = 1) -> "AnilloGrupo":
        elemento = cls(m)
        elemento.coef[e % m] = c
        return elemento

    @classmethod
    def desde_exponentes(cls, m: int, exponentes: Iterable[int], pesos: Optional[Iterable[int]] = None) -> "AnilloGrupo":
        """Σ pesos_k·ζ^{exponentes_k} (pesos 1 si se omiten)."""
        e = np.mod(np.asarray(list(exponentes), dtype=np.int64), m)
        if pesos is None:
            # los conteos no superan len(e)
            return cls(m, np.bincount(e, minlength=m))
        elemento = cls(m)
        np.add.at(elemento.coef, e, np.asarray([int(p) for p in pesos], dtype=object))
        return elemento

    def copy(self) -> "AnilloGrupo":
        return AnilloGrupo(self.m, self.coef.copy())

    def is_zero(self) -> bool:
        return not any(self.coef)

    def __add__(self, otro: "AnilloGrupo") -> "AnilloGrupo":
        return AnilloGrupo(self.m, self.coef + otro.coef)

    def __sub__(self, otro: "AnilloGrupo") -> "AnilloGrupo":
        return AnilloGrupo(self.m, self.coef - otro.coef)

    def __neg__(self) -> "AnilloGrupo":
        return AnilloGrupo(self.m, -self.coef)

    def __iadd__(self, otro: "AnilloGrupo") -> "AnilloGrupo":
        self.coef += otro.coef
        return self

    def escalar(self, c: int) -> "AnilloGrupo":
        return AnilloGrupo(self.m, self.coef * c)

    def desplazar(self, e: int) -> "AnilloGrupo":
        """Multiplicar por ζ^e."""
        return AnilloGrupo(self.m, np.roll(self.coef, e % self.m))

    def __mul__(self, otro: "AnilloGrupo") -> "AnilloGrupo":
        # convolución cíclica
        completo = np.convolve(self.coef, otro.coef)
        resultado = completo[: self.m].copy()
        resultado[: len(completo) - self.m] += completo[self.m:]
        return AnilloGrupo(self.m, resultado)

    def galois(self, b: int) -> "AnilloGrupo":
        """ζ ↦ ζ^b."""
        resultado = AnilloGrupo(self.m)
        np.add.at(resultado.coef, (np.arange(self.m) * b) % self.m, self.coef)
        return resultado

    def descend(self, k: int) -> "AnilloGrupo":
        """Z[Z/km] → Z[Z/m] cuando sólo hay exponentes múltiplos de k."""
        if self.m % k:
            raise ValueError(f"{k} no divide a {self.m}")
        indices = np.nonzero(self.coef)[0]
        if np.any(indices % k):
            raise AritmeticaInexactaError(
                f"La suma tiene exponentes de ζ que no son múltiplos de {k}; no desciende al cuerpo de ξ"
            )
        return AnilloGrupo(self.m // k, self.coef[::k].copy())

    def to_cyc(self, field: CycField) -> CycNum:
        """Reduce a Q(ζ_m) con ζ = x^a."""
        if field.m != self.m:
            raise ValueError(f"Orden incompatible: {self.m} y {field.m}")
        vector = np.zeros(self.m, dtype=object)
        vector[:] = 0
        destino = (np.arange(self.m) * field.a) % self.m
        for e in np.nonzero(self.coef)[0]:
            vector[destino[e]] += int(self.coef[e])
        return CycNum.from_exponent_vector(field, vector)
