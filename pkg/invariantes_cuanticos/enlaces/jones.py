"""
Polinomios de Jones coloreados en forma cerrada (sl₂), con exponentes en unidades de q^{1/4}.
"""

from ..aritmetica import LaurentHalf, quantum_integer
from ..excepciones import EntradaInvalidaError
from .presentaciones import Quiralidad

D_SL2 = 2


def _q(x: int) -> LaurentHalf:
    return LaurentHalf.monomial(D_SL2, 4 * x)


def _uno_menos(x: int) -> LaurentHalf:
    """1 − q^x."""
    return LaurentHalf(D_SL2, {0: 1}) - _q(x)


def _validar_color(N: int) -> None:
    if N < 1:
        raise EntradaInvalidaError(f"El color N debe ser positivo, se recibió {N}")


def jones_trefoil(N: int, chirality: Quiralidad = Quiralidad.RIGHT) -> LaurentHalf:
    """
    Trébol con marco 0: [N] q^{1−N} Σ_n q^{−nN}(1 − q^{1−N})···(1 − q^{n−N}).

    El factor (1 − q^{n−N}) se anula en n = N, así que la suma termina en n = N − 1.
    El trébol izquierdo se obtiene con q ↦ q⁻¹.
    """
    _validar_color(N)
    suma = LaurentHalf(D_SL2)
    producto = LaurentHalf.constant(D_SL2, 1)
    for n in range(N):
        if n > 0:
            producto = producto * _uno_menos(n - N)
        suma = suma + _q(-n * N) * producto
    valor = quantum_integer(N, D_SL2) * _q(1 - N) * suma
    if Quiralidad(chirality) == Quiralidad.LEFT:
        return valor.invert_q()
    return valor


def jones_fig8(N: int) -> LaurentHalf:
    """
    Figura ocho: [N] Σ_n q^{−nN} Π_{k=1..n}(1 − q^{N−k})(1 − q^{N+k}).

    Ambas cadenas de factores llegan al índice n; la suma termina en n = N − 1.
    """
    _validar_color(N)
    suma = LaurentHalf(D_SL2)
    producto = LaurentHalf.constant(D_SL2, 1)
    for n in range(N):
        if n > 0:
            producto = producto * _uno_menos(N - n) * _uno_menos(N + n)
        suma = suma + _q(-n * N) * producto
    return quantum_integer(N, D_SL2) * suma
