"""
Aritmética exacta en cuerpos ciclotómicos Q(ζ_m) = Q[x]/Φ_m(x).

Contiene:
- CycField: orden m, exponente a (ζ = x^a) y tipo de campo (ζ de orden 2Dr o ξ de orden r)
- CycNum: elemento del cuerpo en la base de potencias 1, x, ..., x^{φ(m)−1}
- field_ops: suma, producto, opuesto, inverso y conjugación (métodos de CycNum)
- root_power, embed, valuation_at_xi_minus_1, integrality_witness, approximate
"""

import logging
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import List, Optional, Sequence, Tuple, Union

import mpmath
import numpy as np
from sympy import Poly, QQ, cyclotomic_poly, invert, symbols

from ..excepciones import AritmeticaInexactaError, EntradaInvalidaError

logger = logging.getLogger(__name__)

_x = symbols("x")

Numero = Union[int, Fraction]


class TipoCampo(str, Enum):
    ZETA = "zeta"   # m = 2Dr, q^{1/2D} ↦ ζ
    XI = "xi"       # m = r, q ↦ ξ


# ==================== TABLAS POR ORDEN ====================

@lru_cache(maxsize=None)
def coeficientes_ciclotomicos(m: int) -> Tuple[int, ...]:
    """Coeficientes de Φ_m de grado 0 a φ(m)."""
    return tuple(int(c) for c in reversed(Poly(cyclotomic_poly(m, _x), _x).all_coeffs()))


@lru_cache(maxsize=None)
def tabla_potencias(m: int) -> np.ndarray:
    """Fila e = coordenadas de x^e mod Φ_m, para 0 ≤ e < m (enteros de Python)."""
    phi = coeficientes_ciclotomicos(m)
    n = len(phi) - 1
    tabla = np.zeros((m, n), dtype=object)
    actual = [0] * n
    actual[0] = 1
    for e in range(m):
        tabla[e, :] = actual
        # multiplicar por x y reducir con Φ_m mónico
        arrastre = actual[-1]
        actual = [0] + actual[:-1]
        if arrastre:
            actual = [c - arrastre * p for c, p in zip(actual, phi[:-1])]
    return tabla


@dataclass(frozen=True)
class CycField:
    """Q(ζ_m) con la raíz primitiva elegida ζ = x^a."""

    m: int
    a: int = 1
    D: int = 1
    kind: TipoCampo = TipoCampo.ZETA

    def __post_init__(self):
        if self.m < 1:
            raise EntradaInvalidaError(f"Orden de raíz de la unidad inválido: {self.m}")
        if gcd(self.a, self.m) != 1:
            raise EntradaInvalidaError(f"El exponente a={self.a} no es coprimo con m={self.m}")
        if self.kind == TipoCampo.ZETA and self.m % (2 * self.D):
            raise EntradaInvalidaError(f"m={self.m} no es múltiplo de 2D={2 * self.D}")

    @classmethod
    def zeta(cls, D: int, r: int, a: int = 1) -> "CycField":
        """Cuerpo de ζ, raíz primitiva de orden 2Dr."""
        return cls(m=2 * D * r, a=a % (2 * D * r), D=D, kind=TipoCampo.ZETA)

    @classmethod
    def xi(cls, r: int, a: int = 1) -> "CycField":
        """Cuerpo de ξ, raíz primitiva de orden r (invariante proyectivo)."""
        return cls(m=r, a=a % r if r > 1 else 0, D=1, kind=TipoCampo.XI)

    @property
    def r(self) -> int:
        return self.m // (2 * self.D) if self.kind == TipoCampo.ZETA else self.m

    @property
    def degree(self) -> int:
        return len(coeficientes_ciclotomicos(self.m)) - 1

    @property
    def phi_m(self) -> Tuple[int, ...]:
        return coeficientes_ciclotomicos(self.m)

    def xi_field(self) -> "CycField":
        """Cuerpo de ξ = ζ^{2D} con el exponente compatible."""
        return CycField.xi(self.r, self.a)

    def zero(self) -> "CycNum":
        return CycNum.from_int(self, 0)

    def one(self) -> "CycNum":
        return CycNum.from_int(self, 1)

    def x_power(self, e: int) -> "CycNum":
        """x^e, con x la raíz abstracta (no ζ)."""
        fila = tabla_potencias(self.m)[e % self.m]
        return CycNum(self, tuple(int(c) for c in fila), 1)

    def zeta_power(self, e: int) -> "CycNum":
        """ζ^e = x^{a·e}."""
        return self.x_power(self.a * e)


class CycNum:
    """Elemento exacto de Q(ζ_m): numeradores enteros sobre un denominador común positivo."""

    __slots__ = ("field", "numer", "den")

    def __init__(self, field: CycField, numer: Sequence[int], den: int = 1):
        if den == 0:
            raise ZeroDivisionError("Denominador nulo")
        numer = [int(c) for c in numer]
        if len(numer) != field.degree:
            raise ValueError(f"Se esperaban {field.degree} coeficientes, se recibieron {len(numer)}")
        if den < 0:
            numer = [-c for c in numer]
            den = -den
        g = den
        for c in numer:
            g = gcd(g, c)
            if g == 1:
                break
        if g > 1:
            numer = [c // g for c in numer]
            den //= g
        self.field = field
        self.numer = tuple(numer)
        self.den = den

    # ==================== CONSTRUCTORES ====================

    @classmethod
    def from_int(cls, field: CycField, n: Numero) -> "CycNum":
        n = Fraction(n)
        numer = [0] * field.degree
        numer[0] = n.numerator
        return cls(field, numer, n.denominator)

    @classmethod
    def from_coeffs(cls, field: CycField, coeffs: Sequence[Numero]) -> "CycNum":
        fracciones = [Fraction(c) for c in coeffs]
        den = 1
        for f in fracciones:
            den = den * f.denominator // gcd(den, f.denominator)
        return cls(field, [f.numerator * (den // f.denominator) for f in fracciones], den)

    @classmethod
    def from_exponent_vector(cls, field: CycField, vector: np.ndarray, den: int = 1) -> "CycNum":
        """Σ_e vector[e]·x^e, con e tomado módulo m."""
        tabla = tabla_potencias(field.m)
        v = np.asarray(vector)
        if len(v) != field.m:
            plegado = np.zeros(field.m, dtype=object)
            for e, c in enumerate(v.tolist()):
                plegado[e % field.m] += int(c)
            v = plegado
        coef = v.astype(object) @ tabla
        return cls(field, [int(c) for c in coef], den)

    # ==================== CONSULTAS ====================

    @property
    def coeffs(self) -> Tuple[Fraction, ...]:
        return tuple(Fraction(c, self.den) for c in self.numer)

    def is_zero(self) -> bool:
        return not any(self.numer)

    def is_integral(self) -> bool:
        return self.den == 1

    def _compatible(self, otro) -> "CycNum":
        if isinstance(otro, CycNum):
            if otro.field != self.field:
                raise ValueError(f"Cuerpos distintos: {self.field} y {otro.field}")
            return otro
        if isinstance(otro, (int, Fraction)):
            return CycNum.from_int(self.field, otro)
        return NotImplemented

    # ==================== OPERACIONES DE CUERPO ====================

    def __add__(self, otro):
        otro = self._compatible(otro)
        if otro is NotImplemented:
            return otro
        den = self.den * otro.den // gcd(self.den, otro.den)
        fa, fb = den // self.den, den // otro.den
        return CycNum(self.field, [a * fa + b * fb for a, b in zip(self.numer, otro.numer)], den)

    __radd__ = __add__

    def __neg__(self):
        return CycNum(self.field, [-c for c in self.numer], self.den)

    def __sub__(self, otro):
        otro = self._compatible(otro)
        if otro is NotImplemented:
            return otro
        return self + (-otro)

    def __rsub__(self, otro):
        return (-self) + otro

    def __mul__(self, otro):
        otro = self._compatible(otro)
        if otro is NotImplemented:
            return otro
        producto = np.zeros(self.field.m, dtype=object)
        producto[:] = 0
        for i, a in enumerate(self.numer):
            if a:
                for j, b in enumerate(otro.numer):
                    if b:
                        producto[(i + j) % self.field.m] += a * b
        return CycNum.from_exponent_vector(self.field, producto, self.den * otro.den)

    __rmul__ = __mul__

    def inverse(self) -> "CycNum":
        if self.is_zero():
            raise ZeroDivisionError("Inverso de cero en el cuerpo ciclotómico")
        phi = Poly(cyclotomic_poly(self.field.m, _x), _x, domain=QQ)
        poli = Poly(list(reversed(self.numer)), _x, domain=QQ)
        inv = invert(poli, phi)
        coef = [QQ.to_sympy(c) for c in reversed(inv.all_coeffs())]
        coef = [Fraction(int(c.p), int(c.q)) for c in coef]
        coef += [Fraction(0)] * (self.field.degree - len(coef))
        return CycNum.from_coeffs(self.field, coef) * self.den

    def __truediv__(self, otro):
        otro = self._compatible(otro)
        if otro is NotImplemented:
            return otro
        return self * otro.inverse()

    def __rtruediv__(self, otro):
        return self.inverse() * otro

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        resultado = self.field.one()
        base = self
        while n:
            if n & 1:
                resultado = resultado * base
            base = base * base
            n >>= 1
        return resultado

    def conj(self) -> "CycNum":
        """Conjugación compleja x ↦ x^{m−1}."""
        vector = np.zeros(self.field.m, dtype=object)
        vector[:] = 0
        for k, c in enumerate(self.numer):
            vector[(-k) % self.field.m] += c
        return CycNum.from_exponent_vector(self.field, vector, self.den)

    def galois(self, b: int) -> "CycNum":
        """Automorfismo x ↦ x^b (b coprimo con m)."""
        if gcd(b, self.field.m) != 1:
            raise EntradaInvalidaError(f"b={b} no es coprimo con m={self.field.m}")
        vector = np.zeros(self.field.m, dtype=object)
        vector[:] = 0
        for k, c in enumerate(self.numer):
            vector[(b * k) % self.field.m] += c
        return CycNum.from_exponent_vector(self.field, vector, self.den)

    def __eq__(self, otro):
        if isinstance(otro, (int, Fraction)):
            otro = CycNum.from_int(self.field, otro)
        if not isinstance(otro, CycNum):
            return NotImplemented
        return self.field == otro.field and self.numer == otro.numer and self.den == otro.den

    def __hash__(self):
        return hash((self.field, self.numer, self.den))

    def __repr__(self):
        terminos = [f"{c}*x^{k}" for k, c in enumerate(self.coeffs) if c]
        return f"CycNum(m={self.field.m}, a={self.field.a}: {' + '.join(terminos) or '0'})"


def root_power(field: CycField, num: int, den: int = 1) -> CycNum:
    """
    ξ^{num/den} materializado como potencia entera de ζ.

    En el cuerpo ζ (m = 2Dr) se usa ξ = ζ^{2D}; en el cuerpo ξ, ξ = ζ.
    """
    if den == 0:
        raise EntradaInvalidaError("Denominador nulo en la potencia de ξ")
    paso = 2 * field.D if field.kind == TipoCampo.ZETA else 1
    total = Fraction(num * paso, den)
    if total.denominator != 1:
        raise EntradaInvalidaError(
            f"ξ^({num}/{den}) no es una potencia entera de ζ en Q(ζ_{field.m})"
        )
    return field.zeta_power(int(total))


def embed(x: CycNum, destino: CycField) -> CycNum:
    """Q(ξ_r) → Q(ζ_{2Dr}) por x_r ↦ x_{2Dr}^{2D}."""
    origen = x.field
    if origen.kind != TipoCampo.XI or destino.kind != TipoCampo.ZETA or destino.r != origen.m:
        raise EntradaInvalidaError(f"No hay inmersión de Q(ξ_{origen.m}) en Q(ζ_{destino.m})")
    if destino.a % origen.m != origen.a % origen.m:
        raise EntradaInvalidaError("Los exponentes de ξ y ζ no son compatibles")
    paso = 2 * destino.D
    vector = np.zeros(destino.m, dtype=object)
    vector[:] = 0
    for k, c in enumerate(x.numer):
        vector[(paso * k) % destino.m] += c
    return CycNum.from_exponent_vector(destino, vector, x.den)


# ==================== VALORACIÓN E INTEGRALIDAD ====================

@lru_cache(maxsize=None)
def _inverso_xi_menos_uno(field: CycField) -> CycNum:
    return (field.zeta_power(1) - 1).inverse()


def integrality_witness(field: CycField, x: CycNum) -> Tuple[bool, Optional[List[int]]]:
    """¿x ∈ Z[ξ]? Devuelve también los coeficientes enteros en la base de potencias."""
    if x.field != field:
        raise ValueError("El elemento no pertenece al cuerpo indicado")
    if x.is_integral():
        return True, list(x.numer)
    return False, None


def valuation_at_xi_minus_1(field: CycField, x: CycNum) -> Union[int, float]:
    """Valoración (ξ−1)-ádica exacta en Z[ξ], con r primo; infinito para 0."""
    if field.kind != TipoCampo.XI:
        raise EntradaInvalidaError("La valoración se calcula en el cuerpo de ξ")
    if not x.is_integral():
        raise AritmeticaInexactaError("La valoración (ξ−1)-ádica requiere un elemento de Z[ξ]")
    if x.is_zero():
        return math.inf
    inverso = _inverso_xi_menos_uno(field)
    valoracion = 0
    actual = x
    while True:
        siguiente = actual * inverso
        if not siguiente.is_integral():
            return valoracion
        actual = siguiente
        valoracion += 1


def approximate(x: CycNum, digitos: int = 12) -> Tuple[str, str]:
    """Aproximación decimal (parte real, parte imaginaria) con x = exp(2πi/m)."""
    with mpmath.workdps(digitos + 10):
        raiz = mpmath.exp(2j * mpmath.pi / x.field.m)
        total = mpmath.mpc(0)
        for k, c in enumerate(x.numer):
            if c:
                total += c * raiz ** k
        total /= x.den
        return (mpmath.nstr(total.real, digitos), mpmath.nstr(total.imag, digitos))
