"""test_aritmetica.py - Pruebas de cuerpos ciclotómicos, anillo de grupo y polinomios de Laurent"""

import math
import random
from fractions import Fraction

import pytest

from invariantes_cuanticos.aritmetica import (
    AnilloGrupo,
    CycField,
    CycNum,
    LaurentHalf,
    approximate,
    embed,
    evaluate,
    integrality_witness,
    quantum_integer,
    root_power,
    valuation_at_xi_minus_1,
)
from invariantes_cuanticos.excepciones import AritmeticaInexactaError, EntradaInvalidaError


def numero_aleatorio(field, rng, entero=False):
    coef = []
    for _ in range(field.degree):
        if entero:
            coef.append(rng.randint(-4, 4))
        else:
            coef.append(Fraction(rng.randint(-5, 5), rng.randint(1, 4)))
    return CycNum.from_coeffs(field, coef)


def laurent_aleatorio(D, rng):
    return LaurentHalf(D, {rng.randint(-12, 12): rng.randint(-3, 3) for _ in range(5)})


# ==================== CUERPOS ====================

def test_relaciones_basicas():
    campo = CycField(m=5)
    z = campo.zeta_power(1)
    assert z * campo.zeta_power(4) == 1
    assert sum((campo.zeta_power(k) for k in range(5)), campo.zero()) == 0
    uno_menos = 1 - z
    assert uno_menos.inverse() * uno_menos == 1


def test_division_por_cero():
    with pytest.raises(ZeroDivisionError):
        CycField(m=7).zero().inverse()


@pytest.mark.parametrize("m", [5, 8, 12, 20])
def test_axiomas_de_cuerpo(m):
    rng = random.Random(m)
    campo = CycField(m=m, a=1)
    for _ in range(5):
        x, y, z = (numero_aleatorio(campo, rng) for _ in range(3))
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
        assert x + y - y == x
        if not x.is_zero():
            assert x * x.inverse() == 1
            assert (y / x) * x == y


@pytest.mark.parametrize("m", [7, 12])
def test_conjugacion_es_automorfismo_involutivo(m):
    rng = random.Random(100 + m)
    campo = CycField(m=m)
    for _ in range(5):
        x, y = numero_aleatorio(campo, rng), numero_aleatorio(campo, rng)
        assert x.conj().conj() == x
        assert (x * y).conj() == x.conj() * y.conj()
        assert (x + y).conj() == x.conj() + y.conj()
    assert campo.zeta_power(1).conj() == campo.zeta_power(-1)


def test_exponente_no_coprimo():
    with pytest.raises(EntradaInvalidaError):
        CycField(m=10, a=2)


def test_root_power():
    D, r = 2, 5
    campo = CycField.zeta(D, r)
    assert root_power(campo, 1) == campo.zeta_power(2 * D)
    assert root_power(campo, r) == 1
    campo_sl2 = CycField.zeta(1, 7)
    assert root_power(campo_sl2, 1, 2) == campo_sl2.zeta_power(1)
    with pytest.raises(EntradaInvalidaError):
        root_power(campo, 1, 8)


def test_inmersion_es_homomorfismo():
    rng = random.Random(5)
    campo = CycField.zeta(2, 5, a=3)
    campo_xi = campo.xi_field()
    assert embed(campo_xi.zeta_power(1), campo) == campo.zeta_power(4)
    for _ in range(4):
        x, y = numero_aleatorio(campo_xi, rng), numero_aleatorio(campo_xi, rng)
        assert embed(x * y, campo) == embed(x, campo) * embed(y, campo)
        assert embed(x + y, campo) == embed(x, campo) + embed(y, campo)


# ==================== VALORACIÓN ====================

@pytest.mark.parametrize("r", [5, 7, 11])
def test_valoracion_ejemplos(r):
    campo = CycField.xi(r)
    assert valuation_at_xi_minus_1(campo, CycNum.from_int(campo, r)) == r - 1
    for n in (1, 2, r - 1):
        assert valuation_at_xi_minus_1(campo, campo.zeta_power(n) - 1) == 1
    assert valuation_at_xi_minus_1(campo, campo.one()) == 0
    assert valuation_at_xi_minus_1(campo, campo.zero()) == math.inf


def test_valoracion_aditiva():
    rng = random.Random(11)
    campo = CycField.xi(7)
    for _ in range(6):
        x, y = numero_aleatorio(campo, rng, entero=True), numero_aleatorio(campo, rng, entero=True)
        if x.is_zero() or y.is_zero():
            continue
        assert valuation_at_xi_minus_1(campo, x * y) == (
            valuation_at_xi_minus_1(campo, x) + valuation_at_xi_minus_1(campo, y)
        )


def test_valoracion_rechaza_no_enteros():
    campo = CycField.xi(5)
    with pytest.raises(AritmeticaInexactaError):
        valuation_at_xi_minus_1(campo, CycNum.from_int(campo, Fraction(1, 2)))


def test_testigo_de_integralidad():
    campo = CycField.xi(5)
    ok, coef = integrality_witness(campo, campo.zeta_power(2) * 3 - 1)
    assert ok and coef == [-1, 0, 3, 0]
    assert integrality_witness(campo, CycNum.from_int(campo, Fraction(1, 2))) == (False, None)


def test_aproximacion_decimal():
    campo = CycField(m=4)
    re, im = approximate(campo.zeta_power(1), 6)
    assert float(re) == pytest.approx(0.0, abs=1e-9)
    assert float(im) == pytest.approx(1.0)


# ==================== ANILLO DE GRUPO ====================

def test_anillo_de_grupo_coincide_con_el_cuerpo():
    rng = random.Random(2)
    campo = CycField(m=12, a=5)
    for _ in range(4):
        u = AnilloGrupo.desde_exponentes(12, [rng.randrange(12) for _ in range(6)])
        v = AnilloGrupo.desde_exponentes(12, [rng.randrange(12) for _ in range(6)], [rng.randint(-2, 2) for _ in range(6)])
        assert (u * v).to_cyc(campo) == u.to_cyc(campo) * v.to_cyc(campo)
        assert (u + v).to_cyc(campo) == u.to_cyc(campo) + v.to_cyc(campo)


def test_anillo_de_grupo_sin_desborde():
    campo = CycField(m=12, a=1)
    grande = 3 ** 40  # > 2⁶³
    u = AnilloGrupo.desde_exponentes(12, [0, 1, 5], [grande, -grande, 7])
    v = AnilloGrupo.monomio(12, 3, grande) + AnilloGrupo.monomio(12, 11, grande)
    producto = u * v
    assert producto.coef[3] == grande * grande
    assert producto.to_cyc(campo) == u.to_cyc(campo) * v.to_cyc(campo)
    acumulado = AnilloGrupo(12)
    for _ in range(4):
        acumulado += producto
    assert acumulado.to_cyc(campo) == producto.to_cyc(campo) * 4
    assert (producto - producto).is_zero()


def test_descenso_al_cuerpo_de_xi():
    elemento = AnilloGrupo.desde_exponentes(20, [0, 4, 8, 8])
    bajado = elemento.descend(4)
    assert bajado.m == 5 and list(bajado.coef) == [1, 1, 2, 0, 0]
    with pytest.raises(AritmeticaInexactaError):
        AnilloGrupo.desde_exponentes(20, [1]).descend(4)


# ==================== LAURENT ====================

def test_entero_cuantico_y_evaluacion():
    dos = quantum_integer(2, D=2)
    assert dos == LaurentHalf(2, {2: 1, -2: 1})
    campo = CycField.zeta(2, 5)
    assert evaluate(dos, campo) == campo.zeta_power(2) + campo.zeta_power(-2)
    assert evaluate(LaurentHalf.constant(2, 1), campo) == 1
    assert quantum_integer(-3) == -quantum_integer(3)


def test_evaluacion_es_homomorfismo():
    rng = random.Random(9)
    campo = CycField.zeta(3, 4, a=5)
    for _ in range(5):
        p, q = laurent_aleatorio(3, rng), laurent_aleatorio(3, rng)
        assert evaluate(p * q, campo) == evaluate(p, campo) * evaluate(q, campo)
        assert evaluate(p + q, campo) == evaluate(p, campo) + evaluate(q, campo)
        assert evaluate(p.invert_q(), campo) == evaluate(p, campo).conj()


def test_evaluacion_con_D_distinto():
    with pytest.raises(EntradaInvalidaError):
        evaluate(LaurentHalf.constant(2, 1), CycField.zeta(1, 5))


def test_evaluacion_en_cuerpo_de_xi():
    campo = CycField.xi(7, a=3)
    q = LaurentHalf.q_power(2, 1)
    assert evaluate(q, campo) == campo.zeta_power(1)
    with pytest.raises(AritmeticaInexactaError):
        evaluate(LaurentHalf.q_power(2, 1, 2), campo)


def test_division_exacta():
    D = 1
    q = LaurentHalf.q_power(D, 1)
    p = (q - 1) * (q * q + q.shift(-2) + 3)
    assert p.exact_div(q - 1) == q * q + q.shift(-2) + 3
    with pytest.raises(AritmeticaInexactaError):
        (q * q + 1).exact_div(q - 1)


def test_potencias_negativas_de_monomios():
    m = LaurentHalf.monomial(2, 3, -1)
    assert m ** -2 == LaurentHalf.monomial(2, -6, 1)
    with pytest.raises(AritmeticaInexactaError):
        (m + 1) ** -1
