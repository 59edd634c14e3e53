"""test_enlaces.py - Pruebas de presentaciones, polinomios de Jones, trenzas y simetrías"""

import pytest

from invariantes_cuanticos.aritmetica import LaurentHalf, quantum_integer
from invariantes_cuanticos.enlaces import (
    Braid,
    Hopf,
    Quiralidad,
    Trefoil,
    Unknot,
    braid_jones_sl2,
    equivalent_mod_r,
    framing_shift,
    hopf_braid,
    integrality_check,
    integrality_exponent,
    jones_fig8,
    jones_trefoil,
    linking_matrix,
    orientation_check,
    q_normalize,
    q_value,
    symmetry1_check,
    symmetry2_check,
    symmetry2_exponent,
    unlink_braid,
    zeta_exponents,
)
from invariantes_cuanticos.excepciones import EntradaInvalidaError, RecursoExcedidoError
from invariantes_cuanticos.sumas import quantum_dim

TREBOL_TRENZA = (1, 1, 1)
OCHO_TRENZA = (1, -2, 1, -2)


def q(x):
    """q^x en unidades de q^{1/4}."""
    return LaurentHalf.monomial(2, int(4 * x))


# ==================== PRESENTACIONES ====================

def test_matrices_de_enlace():
    assert linking_matrix(Unknot(3)).tolist() == [[3]]
    assert linking_matrix(Hopf(2, 2)).tolist() == [[2, 1], [1, 2]]
    assert linking_matrix(Hopf(0, 1, -1)).tolist() == [[0, -1], [-1, 1]]
    assert linking_matrix(hopf_braid(1, 0)).tolist() == [[1, 1], [1, 0]]
    assert linking_matrix(Braid(2, (-1, -1), (0, 0), (0, 1))).tolist() == [[0, -1], [-1, 0]]
    trebol = Braid(2, TREBOL_TRENZA, (-1,), (0, 0))
    assert trebol.analisis.writhe_propio == (3,)
    assert linking_matrix(trebol).tolist() == [[-1]]


def test_trenzas_invalidas():
    with pytest.raises(EntradaInvalidaError):
        Braid(2, (2,), (0,), (0, 0))
    with pytest.raises(EntradaInvalidaError):
        Braid(2, (1,), (0, 0), (0, 1))  # σ₁ cierra en una sola componente
    with pytest.raises(EntradaInvalidaError):
        Braid(2, (1, 1), (0,), (0, 1))


# ==================== FORMAS CERRADAS ====================

def test_trebol_en_colores_pequenos():
    assert jones_trefoil(1) == 1
    esperado = quantum_integer(2, 2) * q(-1) * (1 + q(-2) * (1 - q(-1)))
    assert jones_trefoil(2) == esperado
    for N in range(1, 7):
        assert jones_trefoil(N, Quiralidad.LEFT) == jones_trefoil(N, Quiralidad.RIGHT).invert_q()
    assert jones_trefoil(2) != jones_trefoil(2).invert_q()


def test_figura_ocho():
    assert jones_fig8(1) == 1
    esperado = quantum_integer(2, 2) * (q(-2) - q(-1) + 1 - q(1) + q(2))
    assert jones_fig8(2) == esperado
    for N in range(1, 9):
        assert jones_fig8(N) == jones_fig8(N).invert_q()


# ==================== TRENZAS ====================

@pytest.mark.parametrize("N", range(2, 9))
def test_trenza_del_trebol(N):
    assert braid_jones_sl2(Braid(2, TREBOL_TRENZA, (0,), (0, 0)), [N]) == jones_trefoil(N, Quiralidad.RIGHT)


def test_trenza_del_trebol_izquierdo():
    trenza = Braid(2, (-1, -1, -1), (0,), (0, 0))
    assert braid_jones_sl2(trenza, [3]) == jones_trefoil(3, Quiralidad.LEFT)


@pytest.mark.parametrize("N", range(2, 9))
def test_trenza_de_la_figura_ocho(N):
    assert braid_jones_sl2(Braid(3, OCHO_TRENZA, (0,), (0, 0, 0)), [N]) == jones_fig8(N)


def test_enlaces_triviales_y_hopf():
    for N, M in [(1, 1), (2, 3), (3, 4)]:
        assert braid_jones_sl2(unlink_braid((0, 0)), [N, M]) == quantum_integer(N, 2) * quantum_integer(M, 2)
        assert braid_jones_sl2(hopf_braid(), [N, M]) == quantum_integer(N * M, 2)


def test_limite_del_tensor():
    with pytest.raises(RecursoExcedidoError):
        braid_jones_sl2(Braid(3, OCHO_TRENZA, (0,), (0, 0, 0)), [10], max_tensor=100)
    with pytest.raises(EntradaInvalidaError):
        braid_jones_sl2(hopf_braid(), [2])


# ==================== Q_L ====================

def test_cambio_de_marco(sl2):
    uno = LaurentHalf.constant(2, 1)
    assert framing_shift(sl2, uno, (2,), 0) == uno
    assert framing_shift(sl2, uno, (2,), 1) == q(0.75)
    doble = framing_shift(sl2, framing_shift(sl2, uno, (3,), 2), (3,), -5)
    assert doble == framing_shift(sl2, uno, (3,), -3)


def test_normalizacion_q(sl3):
    mu = (2, 1)
    assert q_value(sl3, Unknot(0), [mu]) == quantum_dim(sl3, mu) * quantum_dim(sl3, mu)
    assert q_value(sl3, Hopf(0, 0), [(0, 2), (1, 1)]).is_zero()
    assert q_normalize(sl3, [(1, 0)], LaurentHalf.constant(sl3.D, 1)).is_zero()
    for w_mu in sl3.weyl_orbit(mu).tolist():
        assert q_value(sl3, Hopf(1, 0), [w_mu, (1, 2)]) == q_value(sl3, Hopf(1, 0), [mu, (1, 2)])


def test_presentacion_especial_y_trenza_coinciden(sl2):
    for N in range(1, 6):
        especial = q_value(sl2, Trefoil(1, Quiralidad.RIGHT), [(N,)])
        trenza = q_value(sl2, Braid(2, TREBOL_TRENZA, (1,), (0, 0)), [(N,)])
        assert especial == trenza
        assert q_value(sl2, Unknot(-2), [(N,)]) == q_value(sl2, Braid(1, (), (-2,), (0,)), [(N,)])


def test_nudos_especiales_sólo_para_sl2(sl3):
    with pytest.raises(EntradaInvalidaError):
        q_value(sl3, Trefoil(1), [(1, 1)])


def test_integralidad_en_trenzas(sl2):
    casos = [
        (Braid(2, TREBOL_TRENZA, (-1,), (0, 0)), [[N] for N in range(1, 6)]),
        (Braid(3, OCHO_TRENZA, (1,), (0, 0, 0)), [[N] for N in range(1, 5)]),
        (hopf_braid(2, -1), [[N, M] for N in range(1, 4) for M in range(1, 4)]),
    ]
    for trenza, colores in casos:
        for c in colores:
            assert integrality_check(sl2, trenza, [(n,) for n in c])


def test_integralidad_en_enlaces_especiales(sl3):
    colores = [(1, 1), (2, 1), (3, 1), (2, 2)]
    for mu in colores:
        for nu in colores:
            assert integrality_check(sl3, Hopf(1, -2), [mu, nu])
    # colores en ρ+Y: el exponente p es par y Q_L ∈ Z[q^±1]
    mu = (2, 2)
    valor = q_value(sl3, Unknot(1), [mu])
    assert valor.is_in_integer_q_powers()
    assert integrality_exponent(sl3, Unknot(1), [mu]).denominator == 1


def test_independencia_de_la_orientacion(sl2, sl3):
    for N in range(1, 5):
        assert orientation_check(sl2, Braid(2, TREBOL_TRENZA, (0,), (0, 0)), [(N,)])
        assert orientation_check(sl2, Braid(3, OCHO_TRENZA, (0,), (0, 0, 0)), [(N,)])
    assert orientation_check(sl2, hopf_braid(1, 0), [(2,), (3,)])
    assert orientation_check(sl3, Hopf(1, 0), [(2, 1), (1, 3)])


# ==================== SIMETRÍAS ====================

def test_equivalencia_modulo_r(sl2):
    a = zeta_exponents(sl2, 5, 3)
    assert a == [1, 3, 7]
    # [5] se anula en raíces de orden 4·5
    assert equivalent_mod_r(sl2, 5, quantum_integer(5, 2), LaurentHalf(2), a)
    assert not equivalent_mod_r(sl2, 5, quantum_integer(4, 2), LaurentHalf(2), a)


def test_simetria1_hopf_y_trebol(sl2):
    assert symmetry1_check(sl2, 5, Hopf(0, 0), [(2,), (3,)], muestras=8, semilla=1)
    assert symmetry1_check(sl2, 5, Trefoil(-1, Quiralidad.LEFT), [(2,)], muestras=6, semilla=2)


def test_simetria1_casos_explicitos(sl2):
    exponentes = zeta_exponents(sl2, 5)
    # reflexión en la pared r: N ↦ 2r − N
    assert equivalent_mod_r(
        sl2, 5, q_value(sl2, Hopf(1, 0), [(7,), (2,)]), q_value(sl2, Hopf(1, 0), [(3,), (2,)]), exponentes
    )
    # traslación μ ↦ μ + rα
    assert equivalent_mod_r(
        sl2, 5, q_value(sl2, Trefoil(1), [(12,)]), q_value(sl2, Trefoil(1), [(2,)]), exponentes
    )


def test_simetria1_en_sl3(sl3):
    assert symmetry1_check(sl3, 5, Hopf(1, 0), [(1, 1), (2, 1)], muestras=5, semilla=3, longitud=3)


def test_simetria2(sl2, sl3):
    assert symmetry2_check(sl2, 5, Hopf(1, 0), [(2,), (3,)], [(0,), (0,)])
    assert symmetry2_check(sl2, 5, Hopf(1, 0), [(2,), (3,)], [(1,), (0,)])
    assert symmetry2_check(sl2, 5, Hopf(1, 0), [(1,), (4,)], [(1,), (1,)])
    assert symmetry2_check(sl2, 7, Unknot(-1), [(3,)], [(1,)])
    assert symmetry2_check(sl3, 5, Hopf(0, 1), [(1, 1), (2, 1)], [(1, 0), (0, 1)])
    with pytest.raises(EntradaInvalidaError):
        symmetry2_check(sl2, 5, Unknot(1), [(9,)], [(1,)])


def test_exponente_de_simetria2_en_el_reticulo_de_raices(sl3):
    r = 5
    enlace = Hopf(1, 2)
    centro = [(1, 0), (1, 0)]
    colores = [(1, 1), (2, 2)]  # μ − ρ ∈ Y
    l = linking_matrix(enlace)
    cuadratico = sum(
        int(l[i, j]) * sl3.inner_scaled(centro[i], centro[j]) for i in range(2) for j in range(2)
    )
    m = 2 * sl3.D * r
    esperado = r * (r - sl3.h) * cuadratico
    assert (r * symmetry2_exponent(sl3, r, enlace, colores, centro) - esperado) % m == 0
