"""test_lie.py - Pruebas de los datos de Lie y de los dominios fundamentales"""

import random
from fractions import Fraction

import numpy as np
import pytest

from invariantes_cuanticos.excepciones import EntradaInvalidaError, RecursoExcedidoError
from invariantes_cuanticos.lie import (
    Dominio,
    LatticeDomain,
    affine_image,
    affine_reduce,
    build_root_system,
    center_action,
    center_transversal_check,
    enumerate_domain,
    fundamental_domain_partition,
    inner,
)


# (tipo, rango) -> (d, D, |G|, h, h∨, factores invariantes)
TABLA = {
    ("A", 1): (1, 2, 2, 2, 2, (2,)),
    ("A", 2): (1, 3, 3, 3, 3, (3,)),
    ("A", 3): (1, 4, 4, 4, 4, (4,)),
    ("A", 4): (1, 5, 5, 5, 5, (5,)),
    ("B", 2): (2, 1, 2, 4, 3, (2,)),
    ("B", 3): (2, 2, 2, 6, 5, (2,)),
    ("B", 4): (2, 1, 2, 8, 7, (2,)),
    ("C", 3): (2, 1, 2, 6, 4, (2,)),
    ("C", 4): (2, 1, 2, 8, 5, (2,)),
    ("D", 4): (1, 2, 4, 6, 6, (2, 2)),
    ("D", 5): (1, 4, 4, 8, 8, (4,)),
    ("E", 6): (1, 3, 3, 12, 12, (3,)),
    ("F", 4): (2, 1, 1, 12, 9, ()),
    ("G", 2): (3, 1, 1, 6, 4, ()),
}


@pytest.mark.parametrize("tipo_rango", sorted(TABLA))
def test_concordancia_con_tabla(tipo_rango):
    rs = build_root_system(*tipo_rango)
    d, D, orden_g, h, h_dual, factores = TABLA[tipo_rango]
    assert (rs.d, rs.D, rs.det_cartan, rs.h, rs.h_dual) == (d, D, orden_g, h, h_dual)
    assert rs.center.order == orden_g
    assert rs.center.invariant_factors == factores


@pytest.mark.parametrize("tipo_rango,datos", [
    (("E", 7), (1, 2, 2, 18, 18)),
    (("E", 8), (1, 1, 1, 30, 30)),
])
def test_construccion_parcial_de_e7_e8(tipo_rango, datos):
    with pytest.raises(RecursoExcedidoError) as info:
        build_root_system(*tipo_rango)
    assert "|W|" in str(info.value)
    rs = build_root_system(*tipo_rango, allow_partial=True)
    assert (rs.d, rs.D, rs.det_cartan, rs.h, rs.h_dual) == datos
    assert rs.partial
    with pytest.raises(RecursoExcedidoError):
        rs.require_weyl()


def test_sl2_basico():
    rs = build_root_system("A", 1)
    assert (rs.d, rs.D, rs.det_cartan, rs.h, rs.h_dual, rs.weyl_order, rs.s) == (1, 2, 2, 2, 2, 2, 1)
    assert inner(rs, (1,), (1,)) == Fraction(1, 2)
    assert inner(rs, (2,), (2,)) == 2


def test_sl3_raices_positivas_y_rho():
    rs = build_root_system("A", 2)
    assert set(rs.positive_roots) == {(2, -1), (-1, 2), (1, 1)}
    assert rs.rho == (1, 1)
    assert inner(rs, rs.rho, rs.rho) == 2
    assert rs.dim_g == 8


@pytest.mark.parametrize("tipo_rango", [("A", 1), ("A", 3), ("B", 3), ("C", 3), ("D", 4), ("F", 4), ("G", 2)])
def test_invariantes_del_sistema(tipo_rango):
    rs = build_root_system(*tipo_rango)
    ell = rs.rank
    # (λ_i|α_j) = d_i δ_ij y (α_i|α_j) = d_i a_ij
    for i in range(ell):
        lam = tuple(int(i == k) for k in range(ell))
        for j in range(ell):
            assert inner(rs, lam, rs.simple_roots[j]) == (rs.d_list[i] if i == j else 0)
            assert inner(rs, rs.simple_roots[i], rs.simple_roots[j]) == rs.d_list[i] * rs.cartan[i, j]
    # 2ρ = suma de raíces positivas
    assert tuple(np.sum(np.asarray(rs.positive_roots), axis=0)) == tuple(2 * x for x in rs.rho)
    assert inner(rs, rs.rho, rs.alpha0) == rs.h - 1
    assert inner(rs, rs.alpha0, rs.alpha0) == 2
    # la forma en Y es par
    for alpha in rs.positive_roots:
        norma = inner(rs, alpha, alpha)
        assert norma.denominator == 1 and norma.numerator % 2 == 0


@pytest.mark.parametrize("tipo_rango,orden", [(("A", 3), 24), (("B", 3), 48), (("D", 4), 192), (("G", 2), 12)])
def test_grupo_de_weyl(tipo_rango, orden):
    rs = build_root_system(*tipo_rango)
    assert len(rs.weyl) == orden
    assert int(rs.weyl_signs.sum()) == 0
    for w, signo in zip(rs.weyl, rs.weyl_signs):
        assert np.array_equal(w.T @ rs.gram_D @ w, rs.gram_D)
        assert round(np.linalg.det(w)) == signo
    # clausura: productos e inversos vuelven al conjunto
    imagenes = {tuple(x) for x in rs.weyl_rho.tolist()}
    rng = random.Random(7)
    rho = np.asarray(rs.rho)
    for _ in range(30):
        a, b = rng.randrange(orden), rng.randrange(orden)
        assert tuple((rs.weyl[a] @ rs.weyl[b] @ rho).tolist()) in imagenes
        inversa = np.rint(np.linalg.inv(rs.weyl[a])).astype(np.int64)
        assert tuple((inversa @ rho).tolist()) in imagenes


def test_peso_dual():
    rs = build_root_system("A", 2)
    assert rs.dual_weight((1, 0)) == (0, 1)
    rs = build_root_system("B", 2)
    assert rs.dual_weight((1, 0)) == (1, 0)


def test_pertenencia_a_retículos():
    rs = build_root_system("A", 2)
    assert rs.in_root_lattice((2, -1))
    assert not rs.in_root_lattice((1, 0))
    assert rs.in_rho_plus_root_lattice((2, 2))
    assert not rs.in_rho_plus_root_lattice((2, 1))


def test_tipo_invalido():
    with pytest.raises(EntradaInvalidaError):
        build_root_system("D", 3)
    with pytest.raises(EntradaInvalidaError):
        build_root_system("H", 3)
    with pytest.raises(EntradaInvalidaError):
        LatticeDomain(build_root_system("A", 1), 0)


# ==================== DOMINIOS ====================

def test_enumeraciones_sl2():
    dom = LatticeDomain(build_root_system("A", 1), 5)
    assert sorted(enumerate_domain(dom, Dominio.PR_Y)) == [(2 * k,) for k in range(5)]
    assert len(enumerate_domain(dom, Dominio.PR_X)) == 10
    assert sorted(enumerate_domain(dom, Dominio.ALCOBA_X)) == [(c,) for c in range(6)]
    assert sorted(enumerate_domain(dom, Dominio.INTERIOR_X)) == [(c,) for c in range(1, 5)]
    assert sorted(enumerate_domain(dom, Dominio.INTERIOR_RHO_Y)) == [(1,), (3,)]


@pytest.mark.parametrize("tipo_rango,r", [(("A", 2), 4), (("B", 2), 5), (("G", 2), 3), (("A", 3), 3)])
def test_tamanos_de_paralelepipedo(tipo_rango, r):
    rs = build_root_system(*tipo_rango)
    dom = LatticeDomain(rs, r)
    puntos_x = enumerate_domain(dom, Dominio.PR_X)
    assert len(puntos_x) == len(set(puntos_x)) == r ** rs.rank * rs.det_cartan
    puntos_y = enumerate_domain(dom, Dominio.PR_Y)
    assert len(set(puntos_y)) == r ** rs.rank
    assert all(rs.in_root_lattice(mu) for mu in puntos_y)
    assert all(rs.in_rho_plus_root_lattice(mu) for mu in enumerate_domain(dom, Dominio.RHO_PR_Y))


def test_limite_de_enumeracion():
    dom = LatticeDomain(build_root_system("A", 2), 50)
    with pytest.raises(RecursoExcedidoError):
        enumerate_domain(dom, Dominio.PR_X, max_enumeracion=1000)


def test_reduccion_afin_sl2():
    dom = LatticeDomain(build_root_system("A", 1), 5)
    assert affine_reduce(dom, (7,)) == ((3,), False)
    assert affine_reduce(dom, (3,)) == ((3,), False)
    assert affine_reduce(dom, (5,)) == ((5,), True)
    assert affine_reduce(dom, (-3,)) == ((3,), False)
    assert affine_reduce(dom, (10,))[1]


def test_accion_del_centro_sl2():
    dom = LatticeDomain(build_root_system("A", 1), 5)
    assert center_action(dom, (0,), (2,)) == (2,)
    assert center_action(dom, (1,), (1,)) == (4,)
    # independiente del levantamiento
    assert center_action(dom, (3,), (1,)) == (4,)


@pytest.mark.parametrize("tipo_rango", [("A", 1), ("A", 2), ("B", 2), ("G", 2)])
@pytest.mark.parametrize("r", [5, 7])
def test_particion_del_dominio_fundamental(tipo_rango, r):
    dom = LatticeDomain(build_root_system(*tipo_rango), r)
    resultado = fundamental_domain_partition(dom)
    assert resultado["ok"], resultado


@pytest.mark.parametrize("tipo_rango,r", [(("A", 1), 5), (("A", 2), 5), (("A", 2), 7), (("B", 2), 5), (("A", 3), 5)])
def test_accion_libre_y_transversal(tipo_rango, r):
    dom = LatticeDomain(build_root_system(*tipo_rango), r)
    resultado = center_transversal_check(dom)
    assert resultado["ok"], resultado


def test_imagenes_afines_reducen_al_mismo_representante():
    rs = build_root_system("A", 2)
    dom = LatticeDomain(rs, 7)
    rng = random.Random(3)
    for mu in enumerate_domain(dom, Dominio.INTERIOR_X)[:10]:
        for _ in range(5):
            assert affine_reduce(dom, affine_image(dom, mu, rng))[0] == mu
