"""
Polinomios de Laurent en q^{1/(2D)} con coeficientes enteros.

Contiene:
- LaurentHalf: términos {e: c} con e el exponente de q^{1/(2D)}
- quantum_integer: [n] = (q^{n/2} − q^{−n/2})/(q^{1/2} − q^{−1/2})
- evaluate: q^{1/(2D)} ↦ ζ (o q ↦ ξ en el cuerpo proyectivo)
"""

from typing import Dict, Iterable, Mapping, Tuple

from ..excepciones import AritmeticaInexactaError, EntradaInvalidaError
from .anillo_grupo import AnilloGrupo
from .ciclotomico import CycField, CycNum, TipoCampo


class LaurentHalf:
    """Elemento de Z[q^{±1/(2D)}]; no guarda coeficientes nulos."""

    __slots__ = ("D", "terms")

    def __init__(self, D: int, terms: Mapping[int, int] = None):
        self.D = D
        self.terms: Dict[int, int] = {int(e): int(c) for e, c in (terms or {}).items() if c}

    # ==================== CONSTRUCTORES ====================

    @classmethod
    def monomial(cls, D: int, e: int, c: int = 1) -> "LaurentHalf":
        return cls(D, {e: c})

    @classmethod
    def constant(cls, D: int, c: int) -> "LaurentHalf":
        return cls(D, {0: c})

    @classmethod
    def q_power(cls, D: int, num: int, den: int = 1) -> "LaurentHalf":
        """q^{num/den}, que debe ser potencia entera de q^{1/(2D)}."""
        e, resto = divmod(2 * D * num, den)
        if resto:
            raise EntradaInvalidaError(f"q^({num}/{den}) no está en Z[q^(1/{2 * D})]")
        return cls(D, {e: 1})

    # ==================== CONSULTAS ====================

    def is_zero(self) -> bool:
        return not self.terms

    def min_exponent(self) -> int:
        return min(self.terms)

    def max_exponent(self) -> int:
        return max(self.terms)

    def items(self) -> Iterable[Tuple[int, int]]:
        return sorted(self.terms.items())

    def _mismo_D(self, otro: "LaurentHalf") -> None:
        if self.D != otro.D:
            raise EntradaInvalidaError(f"Escalas distintas: D={self.D} y D={otro.D}")

    def _coercer(self, otro) -> "LaurentHalf":
        if isinstance(otro, LaurentHalf):
            self._mismo_D(otro)
            return otro
        if isinstance(otro, int):
            return LaurentHalf.constant(self.D, otro)
        return NotImplemented

    # ==================== ARITMÉTICA ====================

    def __add__(self, otro):
        otro = self._coercer(otro)
        if otro is NotImplemented:
            return otro
        terminos = dict(self.terms)
        for e, c in otro.terms.items():
            terminos[e] = terminos.get(e, 0) + c
        return LaurentHalf(self.D, terminos)

    __radd__ = __add__

    def __neg__(self):
        return LaurentHalf(self.D, {e: -c for e, c in self.terms.items()})

    def __sub__(self, otro):
        otro = self._coercer(otro)
        if otro is NotImplemented:
            return otro
        return self + (-otro)

    def __rsub__(self, otro):
        return (-self) + otro

    def __mul__(self, otro):
        otro = self._coercer(otro)
        if otro is NotImplemented:
            return otro
        terminos: Dict[int, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in otro.terms.items():
                terminos[e1 + e2] = terminos.get(e1 + e2, 0) + c1 * c2
        return LaurentHalf(self.D, terminos)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if len(self.terms) != 1:
                raise AritmeticaInexactaError("Sólo los monomios unitarios son invertibles")
            (e, c), = self.terms.items()
            if abs(c) != 1:
                raise AritmeticaInexactaError("Sólo los monomios unitarios son invertibles")
            return LaurentHalf(self.D, {-e * (-n): c ** (-n)})
        resultado = LaurentHalf.constant(self.D, 1)
        base = self
        while n:
            if n & 1:
                resultado = resultado * base
            base = base * base
            n >>= 1
        return resultado

    def shift(self, e: int) -> "LaurentHalf":
        """Multiplicar por q^{e/(2D)}."""
        return LaurentHalf(self.D, {k + e: c for k, c in self.terms.items()})

    def invert_q(self) -> "LaurentHalf":
        """Sustitución q ↦ q⁻¹."""
        return LaurentHalf(self.D, {-e: c for e, c in self.terms.items()})

    def rescale(self, D: int) -> "LaurentHalf":
        """El mismo elemento escrito en unidades q^{1/(2D′)}, con D | D′ o exponentes compatibles."""
        terminos = {}
        for e, c in self.terms.items():
            nuevo, resto = divmod(e * D, self.D)
            if resto:
                raise EntradaInvalidaError(f"No se puede reescribir con D={D}")
            terminos[nuevo] = c
        return LaurentHalf(D, terminos)

    def exact_div(self, divisor: "LaurentHalf") -> "LaurentHalf":
        """División exacta en el anillo de Laurent; falla si hay resto."""
        self._mismo_D(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("División por el polinomio nulo")
        if self.is_zero():
            return LaurentHalf(self.D)
        e_div = divisor.min_exponent()
        c_div = divisor.terms[e_div]
        span = divisor.max_exponent() - e_div
        resto = dict(self.terms)
        cociente: Dict[int, int] = {}
        tope = self.max_exponent()
        while resto:
            e = min(resto)
            if e + span > tope:
                raise AritmeticaInexactaError("La división de polinomios de Laurent no es exacta")
            c, r = divmod(resto[e], c_div)
            if r:
                raise AritmeticaInexactaError("La división de polinomios de Laurent no es exacta")
            k = e - e_div
            cociente[k] = c
            for ed, cd in divisor.terms.items():
                nuevo = resto.get(k + ed, 0) - c * cd
                if nuevo:
                    resto[k + ed] = nuevo
                else:
                    resto.pop(k + ed, None)
        return LaurentHalf(self.D, cociente)

    def is_in_integer_q_powers(self) -> bool:
        """¿Pertenece a Z[q^{±1}]?"""
        return all(e % (2 * self.D) == 0 for e in self.terms)

    def __eq__(self, otro):
        if isinstance(otro, int):
            otro = LaurentHalf.constant(self.D, otro)
        if not isinstance(otro, LaurentHalf):
            return NotImplemented
        return self.D == otro.D and self.terms == otro.terms

    def __hash__(self):
        return hash((self.D, tuple(sorted(self.terms.items()))))

    def __repr__(self):
        if not self.terms:
            return "0"
        partes = [f"{c}*q^({e}/{2 * self.D})" for e, c in self.items()]
        return " + ".join(partes)


def quantum_integer(n: int, D: int = 1) -> LaurentHalf:
    """[n] = q^{(n−1)/2} + q^{(n−3)/2} + ... + q^{−(n−1)/2}; [−n] = −[n]."""
    signo = 1 if n >= 0 else -1
    n = abs(n)
    terminos = {D * (n - 1 - 2 * k): signo for k in range(n)}
    return LaurentHalf(D, terminos)


def evaluate(poly: LaurentHalf, field: CycField) -> CycNum:
    """
    Evaluación exacta en una raíz de la unidad.

    Cuerpo ζ (m = 2Dr): q^{e/(2D)} ↦ ζ^e. Cuerpo ξ (m = r): q^{e/(2D)} ↦ ξ^{e/(2D)},
    y todos los exponentes deben ser múltiplos de 2D.
    """
    return evaluate_to_group_ring(poly, field).to_cyc(field)


def evaluate_to_group_ring(poly: LaurentHalf, field: CycField) -> AnilloGrupo:
    if field.kind == TipoCampo.ZETA:
        if poly.D != field.D:
            raise EntradaInvalidaError(f"El polinomio usa D={poly.D} y el cuerpo D={field.D}")
        return AnilloGrupo.desde_exponentes(field.m, poly.terms.keys(), poly.terms.values())
    exponentes = []
    for e in poly.terms:
        if e % (2 * poly.D):
            raise AritmeticaInexactaError("Potencia fraccionaria de q evaluada en el cuerpo de ξ")
        exponentes.append(e // (2 * poly.D))
    return AnilloGrupo.desde_exponentes(field.m, exponentes, poly.terms.values())
