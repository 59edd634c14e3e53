"""
Series de Laurent truncadas en ħ con coeficientes racionales exactos.

SerieH conoce los coeficientes de ħ^k para k ≤ orden; lo demás es O(ħ^{orden+1}).
Las operaciones propagan la precisión como en cualquier anillo de series truncadas:
un producto por algo de valuación v pierde o gana v órdenes.
"""

import math
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Union

from ..aritmetica import LaurentHalf
from ..excepciones import AritmeticaInexactaError

Numero = Union[int, Fraction]


def doble_factorial(n: int) -> int:
    """n!! con (−1)!! = 1."""
    resultado = 1
    while n > 1:
        resultado *= n
        n -= 2
    return resultado


class SerieH:
    __slots__ = ("terminos", "orden")

    def __init__(self, terminos: Optional[Mapping[int, Numero]] = None, orden: int = 0):
        self.orden = int(orden)
        self.terminos: Dict[int, Fraction] = {
            int(k): Fraction(c) for k, c in (terminos or {}).items() if c and int(k) <= self.orden
        }

    # ==================== CONSTRUCTORES ====================

    @classmethod
    def cero(cls, orden: int) -> "SerieH":
        return cls({}, orden)

    @classmethod
    def constante(cls, c: Numero, orden: int) -> "SerieH":
        return cls({0: c}, orden)

    @classmethod
    def monomio(cls, c: Numero, k: int, orden: int) -> "SerieH":
        return cls({k: c}, orden)

    @classmethod
    def exponencial(cls, c: Numero, orden: int) -> "SerieH":
        """e^{cħ}."""
        c = Fraction(c)
        return cls({k: c ** k / math.factorial(k) for k in range(orden + 1)}, orden)

    @classmethod
    def desde_coeficientes(cls, coeficientes: Sequence[Numero], orden: Optional[int] = None) -> "SerieH":
        orden = len(coeficientes) - 1 if orden is None else orden
        return cls(dict(enumerate(coeficientes)), orden)

    # ==================== CONSULTAS ====================

    def is_zero(self) -> bool:
        return not self.terminos

    def valuacion(self) -> int:
        """Menor exponente con coeficiente conocido no nulo; orden+1 si todo lo conocido es 0."""
        return min(self.terminos) if self.terminos else self.orden + 1

    def coeficiente(self, k: int) -> Fraction:
        if k > self.orden:
            raise AritmeticaInexactaError(f"El coeficiente de ħ^{k} excede la precisión {self.orden}")
        return self.terminos.get(k, Fraction(0))

    def coeficientes(self) -> List[Fraction]:
        """c_0, …, c_orden (exige que no haya potencias negativas)."""
        self.exigir_serie_de_potencias()
        return [self.coeficiente(k) for k in range(self.orden + 1)]

    def exigir_serie_de_potencias(self) -> "SerieH":
        negativos = sorted(k for k in self.terminos if k < 0)
        if negativos:
            raise AritmeticaInexactaError(
                f"Quedan potencias negativas de ħ sin cancelar: {negativos}",
                {"exponentes": negativos},
            )
        return self

    # ==================== ARITMÉTICA ====================

    def _coercer(self, otro) -> "SerieH":
        if isinstance(otro, SerieH):
            return otro
        if isinstance(otro, (int, Fraction)):
            return SerieH.constante(otro, self.orden)
        return NotImplemented

    def __add__(self, otro):
        otro = self._coercer(otro)
        if otro is NotImplemented:
            return otro
        terminos = dict(self.terminos)
        for k, c in otro.terminos.items():
            terminos[k] = terminos.get(k, 0) + c
        return SerieH(terminos, min(self.orden, otro.orden))

    __radd__ = __add__

    def __neg__(self):
        return SerieH({k: -c for k, c in self.terminos.items()}, self.orden)

    def __sub__(self, otro):
        otro = self._coercer(otro)
        if otro is NotImplemented:
            return otro
        return self + (-otro)

    def __rsub__(self, otro):
        return (-self) + otro

    def __mul__(self, otro):
        if isinstance(otro, (int, Fraction)):
            return SerieH({k: c * otro for k, c in self.terminos.items()}, self.orden)
        if not isinstance(otro, SerieH):
            return NotImplemented
        orden = min(self.orden + otro.valuacion(), otro.orden + self.valuacion())
        terminos: Dict[int, Fraction] = {}
        for i, a in self.terminos.items():
            for j, b in otro.terminos.items():
                if i + j <= orden:
                    terminos[i + j] = terminos.get(i + j, 0) + a * b
        return SerieH(terminos, orden)

    __rmul__ = __mul__

    def desplazar(self, k: int) -> "SerieH":
        """Multiplica por ħ^k."""
        return SerieH({e + k: c for e, c in self.terminos.items()}, self.orden + k)

    def truncar(self, orden: int) -> "SerieH":
        if orden > self.orden:
            raise AritmeticaInexactaError(f"No se puede extender la precisión de {self.orden} a {orden}")
        return SerieH(self.terminos, orden)

    def inversa(self) -> "SerieH":
        if self.is_zero():
            raise AritmeticaInexactaError(f"La serie es O(ħ^{self.orden + 1}): no es invertible")
        v = self.valuacion()
        unidad = self.desplazar(-v)
        u0 = unidad.terminos[0]
        precision = unidad.orden
        inversa = [Fraction(1) / u0]
        for k in range(1, precision + 1):
            suma = sum(unidad.terminos.get(i, 0) * inversa[k - i] for i in range(1, k + 1))
            inversa.append(-suma / u0)
        return SerieH(dict(enumerate(inversa)), precision).desplazar(-v)

    def __truediv__(self, otro):
        if isinstance(otro, (int, Fraction)):
            return self * (Fraction(1) / Fraction(otro))
        if not isinstance(otro, SerieH):
            return NotImplemented
        return self * otro.inversa()

    def __pow__(self, n: int):
        if n < 0:
            return self.inversa() ** (-n)
        resultado = SerieH.constante(1, self.orden)
        for _ in range(n):
            resultado = resultado * self
        return resultado

    def __eq__(self, otro):
        if not isinstance(otro, SerieH):
            return NotImplemented
        return self.orden == otro.orden and self.terminos == otro.terminos

    def __hash__(self):
        return hash((self.orden, tuple(sorted(self.terminos.items()))))

    def __repr__(self):
        cuerpo = " + ".join(f"{c}·ħ^{k}" for k, c in sorted(self.terminos.items())) or "0"
        return f"SerieH({cuerpo} + O(ħ^{self.orden + 1}))"


def sustituir_q(poly: LaurentHalf, orden: int) -> SerieH:
    """poly|_{q=e^ħ}: cada q^{e/(2D)} pasa a e^{eħ/(2D)}."""
    coeficientes = [Fraction(0)] * (orden + 1)
    for e, c in poly.items():
        x = Fraction(e, 2 * poly.D)
        potencia = Fraction(1)
        for n in range(orden + 1):
            coeficientes[n] += c * potencia / math.factorial(n)
            potencia *= x
    return SerieH.desde_coeficientes(coeficientes, orden)


def uno_menos_exp(c: Numero, orden: int) -> SerieH:
    """1 − e^{cħ}."""
    return 1 - SerieH.exponencial(c, orden)
