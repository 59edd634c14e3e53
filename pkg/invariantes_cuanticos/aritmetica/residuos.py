"""
Residuos cuadráticos módulo un primo impar.
"""

from sympy import isprime

from ..excepciones import EntradaInvalidaError


def validar_primo_impar(r: int) -> None:
    if r < 3 or not isprime(r):
        raise EntradaInvalidaError(f"Se requiere un primo impar, se recibió r={r}")


def legendre(a: int, r: int) -> int:
    """Símbolo de Legendre (a/r) por el criterio de Euler: a^{(r−1)/2} mod r."""
    validar_primo_impar(r)
    residuo = pow(a % r, (r - 1) // 2, r)
    if residuo == 0:
        return 0
    return 1 if residuo == 1 else -1
