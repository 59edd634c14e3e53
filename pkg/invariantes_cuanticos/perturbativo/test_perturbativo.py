"""test_perturbativo.py - Pruebas de series en ħ, reglas de sustitución y congruencias primas"""

from fractions import Fraction
from pathlib import Path

import pytest

from invariantes_cuanticos.aritmetica import CycField, CycNum
from invariantes_cuanticos.enlaces import Braid, FigureEight, Hopf, Quiralidad, Trefoil, Unknot
from invariantes_cuanticos.excepciones import AritmeticaInexactaError, EntradaInvalidaError
from invariantes_cuanticos.lie import build_root_system
from invariantes_cuanticos.perturbativo import (
    ExpansionBeta,
    OhtsukiSeries,
    Procedencia,
    SerieH,
    compose_series,
    congruence_check,
    congruence_rows,
    degree_bound_check,
    knot_expansion_sl2,
    legendre,
    ohtsuki_diag_link,
    ohtsuki_knot_general,
    ohtsuki_knot_sl2,
    ohtsuki_lens,
    prime_expand,
    representative_independence_check,
    series_for_spec,
    sustituir_q,
    unknot_expansion,
)
from invariantes_cuanticos.aritmetica import LaurentHalf
from invariantes_cuanticos.variedades import ManifoldSpec, Sabor, load_manifold_spec, tau

EJEMPLOS = Path(__file__).resolve().parent.parent / "ejemplos"


def spec_de(*enlaces, nombre=""):
    return ManifoldSpec(tuple(enlaces), name=nombre)


# ==================== SERIES EN ħ ====================

def test_exponencial_y_producto():
    a = SerieH.exponencial(1, 4)
    b = SerieH.exponencial(-1, 4)
    assert a * b == SerieH.constante(1, 4)
    assert a.coeficientes() == [1, 1, Fraction(1, 2), Fraction(1, 6), Fraction(1, 24)]


def test_inversa_con_valuacion():
    # 1 − e^ħ = −ħ(1 + ħ/2 + …), así que su inversa es −1/ħ + 1/2 + …
    serie = 1 - SerieH.exponencial(1, 5)
    inversa = serie.inversa()
    assert inversa.valuacion() == -1
    assert inversa.orden == 3
    assert inversa.coeficiente(-1) == -1
    assert inversa.coeficiente(0) == Fraction(1, 2)
    assert (serie * inversa).truncar(3) == SerieH.constante(1, 3)


def test_potencias_negativas_y_precision():
    serie = SerieH({-1: 1, 0: 2}, 3)
    with pytest.raises(AritmeticaInexactaError):
        serie.coeficientes()
    with pytest.raises(AritmeticaInexactaError):
        serie.truncar(5)
    with pytest.raises(AritmeticaInexactaError):
        SerieH.cero(3).inversa()


def test_sustituir_q():
    # [2] = q^{1/2} + q^{−1/2} = 2 + ħ²/4 + ...
    serie = sustituir_q(LaurentHalf(2, {2: 1, -2: 1}), 4)
    assert serie.coeficientes() == [2, 0, Fraction(1, 4), 0, Fraction(1, 192)]


# ==================== EXPANSIÓN NÚMERO-TEÓRICA ====================

def test_prime_expand_trivial():
    campo = CycField.xi(7)
    assert prime_expand(campo.one(), 7, 4).coeffs_mod_r == (1, 0, 0, 0, 0)


def test_prime_expand_de_xi():
    campo = CycField.xi(5)
    expansion = prime_expand(campo.zeta_power(1), 5, 3)
    # 1/n! mod 5
    assert expansion.coeffs_mod_r == (1, 1, 3, 1)
    assert expansion.representative_degree == 1
    # otra raíz primitiva: ξ = x²
    otra = CycField.xi(5, 2)
    assert prime_expand(otra.zeta_power(1), 5, 3).coeffs_mod_r == (1, 1, 3, 1)


def test_prime_expand_errores():
    campo = CycField.xi(5)
    with pytest.raises(EntradaInvalidaError):
        prime_expand(campo.one(), 5, 4)
    with pytest.raises(AritmeticaInexactaError):
        prime_expand(CycNum.from_int(campo, Fraction(1, 2)), 5, 2)
    with pytest.raises(EntradaInvalidaError):
        prime_expand(CycField.zeta(2, 5).one(), 5, 2)


@pytest.mark.parametrize("desplazamiento", [0, 1, 3])
def test_independencia_del_representante(sl2, desplazamiento):
    valor = tau(load_manifold_spec(EJEMPLOS / "poincare.json"), sl2, 7, Sabor.PROJECTIVE).value
    assert representative_independence_check(valor, 7, 4, desplazamiento)


def test_residuos_consistentes_entre_exponentes(sl2):
    spec = load_manifold_spec(EJEMPLOS / "lens_b2.json")
    uno = prime_expand(tau(spec, sl2, 7, Sabor.PROJECTIVE, 1).value, 7, 4)
    tres = prime_expand(tau(spec, sl2, 7, Sabor.PROJECTIVE, 3).value, 7, 4)
    assert uno.coeffs_mod_r == tres.coeffs_mod_r


def test_legendre_reexportado():
    assert legendre(1, 5) == 1
    assert legendre(2, 5) == -1
    assert all(legendre(a * a, 11) == 1 for a in range(1, 11))


# ==================== ESPACIOS LENTE ====================

def test_lente_trivial(sl2):
    serie = ohtsuki_lens(sl2, 1, 4)
    assert serie.coeffs == (1, 0, 0, 0, 0)
    assert serie.provenance == Procedencia.LENS
    assert ohtsuki_lens(build_root_system("G", 2), 1, 3).coeffs == (1, 0, 0, 0)


def test_lente_b2_sl2(sl2):
    # e^{−ħ/4}/(1 + e^{−ħ/2}) = 1/(2 cosh(ħ/4))
    serie = ohtsuki_lens(sl2, 2, 4)
    assert serie.coeffs == (Fraction(1, 2), 0, Fraction(-1, 64), 0, Fraction(5, 12288))
    assert serie.a_json()[0] == "1/2"
    assert serie.denominators_check(sl2, 2)


def test_lente_c0_es_inverso_de_b(sl2):
    a2 = build_root_system("A", 2)
    assert ohtsuki_lens(sl2, -3, 2).coeffs[0] == Fraction(1, 3)
    assert ohtsuki_lens(a2, 2, 2).coeffs[0] == Fraction(1, 8)


@pytest.mark.parametrize("r", [7, 11, 13])
def test_congruencia_lente(sl2, r):
    spec = load_manifold_spec(EJEMPLOS / "lens_b2.json")
    assert congruence_check(ohtsuki_lens(sl2, 2, 4), spec, sl2, r, 4)
    tres = spec_de(Unknot(3))
    assert congruence_check(ohtsuki_lens(sl2, 3, 4), tres, sl2, r, 4)


def test_filas_de_congruencia(sl2):
    filas = congruence_rows(ohtsuki_lens(sl2, 2, 4), spec_de(Unknot(2)), sl2, 7, 4)
    assert [fila["c_rn"] for fila in filas[:3]] == [4, 0, 6]
    assert all(fila["ok"] for fila in filas)
    assert filas[0]["legendre"] == 1


def test_congruencia_rango_dos():
    a2 = build_root_system("A", 2)
    assert congruence_check(ohtsuki_lens(a2, 2, 3), spec_de(Unknot(2)), a2, 11, 3)


def test_congruencia_fuera_de_rango(sl2):
    serie = ohtsuki_lens(sl2, 2, 4)
    with pytest.raises(EntradaInvalidaError):
        congruence_check(serie, spec_de(Unknot(2)), sl2, 5, 4)
    with pytest.raises(EntradaInvalidaError):
        congruence_check(ohtsuki_lens(sl2, 7, 2), spec_de(Unknot(7)), sl2, 7, 2)
    with pytest.raises(EntradaInvalidaError):
        congruence_check(serie, spec_de(Unknot(0)), sl2, 7, 2)


# ==================== NUDOS ====================

def test_expansion_del_nudo_trivial():
    expansion = knot_expansion_sl2(Unknot(1), 3)
    assert expansion.coeficientes[0] == (0, 0, 1)
    assert not expansion.potencias_impares()


def test_expansion_por_trenza_y_forma_cerrada():
    trenza = Braid(2, (1, 1, 1), (0,), (0, 0))
    cerrada = knot_expansion_sl2(Trefoil(0), 3)
    por_trenza = knot_expansion_sl2(trenza, 3)
    for n in range(4):
        assert cerrada.coeficientes[n][:n + 3] == por_trenza.coeficientes[n][:n + 3]


@pytest.mark.parametrize("nudo", [Trefoil(0), Trefoil(0, Quiralidad.LEFT), FigureEight(0)])
def test_cota_de_grado(nudo):
    assert degree_bound_check(nudo, 6)


def test_cota_de_grado_por_trenza():
    assert degree_bound_check(Braid(3, (1, -2, 1, -2), (0,), (0, 0, 0)), 2)


@pytest.mark.parametrize("nudo", [Trefoil(-1, Quiralidad.LEFT), Trefoil(-1), Trefoil(1), FigureEight(1)])
def test_c0_de_esferas_de_homologia(nudo):
    serie = ohtsuki_knot_sl2(nudo, orden=3)
    assert serie.coeffs[0] == 1
    assert serie.provenance == Procedencia.KNOT_SL2


def test_marco_invalido_para_la_regla_sl2():
    with pytest.raises(EntradaInvalidaError):
        ohtsuki_knot_sl2(Trefoil(2), orden=2)


@pytest.mark.parametrize("archivo", ["poincare.json", "sigma237.json"])
@pytest.mark.parametrize("r", [7, 11, 13])
def test_congruencia_de_esferas(sl2, archivo, r):
    spec = load_manifold_spec(EJEMPLOS / archivo)
    serie = series_for_spec(spec, sl2, 4)
    assert serie.provenance == Procedencia.KNOT_SL2
    assert congruence_check(serie, spec, sl2, r, 4)


def test_denominadores_de_poincare(sl2):
    serie = series_for_spec(load_manifold_spec(EJEMPLOS / "poincare.json"), sl2, 4)
    assert serie.denominators_check(sl2, 1)


def test_reglas_sl2_y_general_coinciden(sl2):
    nudo = Trefoil(-1, Quiralidad.LEFT)
    especifica = ohtsuki_knot_sl2(nudo, orden=3)
    general = ohtsuki_knot_general(sl2, knot_expansion_sl2(nudo, 6).a_beta(), -1, 3)
    assert especifica.coeffs == general.coeffs
    assert general.provenance == Procedencia.KNOT_GENERAL


def test_oraculo_nulo(sl2):
    serie = ohtsuki_knot_general(sl2, ExpansionBeta.cero(1, 6), 1, 3)
    assert serie.coeffs == (0, 0, 0, 0)


@pytest.mark.parametrize("tipo,rango,b,orden", [("A", 1, 1, 4), ("A", 1, 2, 4), ("A", 1, -3, 3), ("A", 2, 2, 2), ("B", 2, -1, 2)])
def test_nudo_trivial_por_sustitucion_es_la_lente(tipo, rango, b, orden):
    rs = build_root_system(tipo, rango)
    expansion = unknot_expansion(rs, 2 * orden)
    por_sustitucion = ohtsuki_diag_link(rs, expansion, (b,), orden)
    assert por_sustitucion.coeffs == ohtsuki_lens(rs, b, orden).coeffs
    if b in (1, -1):
        assert ohtsuki_knot_general(rs, expansion, b, orden).coeffs == ohtsuki_lens(rs, b, orden).coeffs


def test_restriccion_de_grado(sl2):
    mala = ExpansionBeta({(0, (((2,), 6),)): Fraction(1)}, 1, 4)
    with pytest.raises(AritmeticaInexactaError):
        ohtsuki_knot_general(sl2, mala, 1, 2)
    with pytest.raises(EntradaInvalidaError):
        ohtsuki_knot_general(sl2, unknot_expansion(sl2, 2), 1, 2)


# ==================== ENLACES DIAGONALES Y COMPOSICIÓN ====================

def test_union_separada_de_nudos_triviales(sl2):
    expansion = unknot_expansion(sl2, 6)
    doble = ohtsuki_diag_link(sl2, expansion.producto(expansion), (2, -3), 3, [[2, 0], [0, -3]])
    producto = ohtsuki_lens(sl2, 2, 3).a_serie() * ohtsuki_lens(sl2, -3, 3).a_serie()
    assert list(doble.coeffs) == producto.coeficientes()
    with pytest.raises(EntradaInvalidaError):
        ohtsuki_diag_link(sl2, expansion.producto(expansion), (2, -3), 3, [[2, 1], [1, -3]])


def test_despacho_de_union_separada(sl2):
    spec = spec_de(Unknot(2), Unknot(3))
    serie = series_for_spec(spec, sl2, 3)
    assert serie.provenance == Procedencia.DIAGONAL_LINK
    assert congruence_check(serie, spec, sl2, 7, 3)


def test_trebol_con_marco_dos(sl2):
    spec = spec_de(Trefoil(2))
    serie = series_for_spec(spec, sl2, 3)
    assert serie.provenance == Procedencia.DIAGONAL_LINK
    assert serie.coeffs[0] == Fraction(1, 2)
    assert congruence_check(serie, spec, sl2, 7, 3)


def test_composicion(sl2):
    lente = ohtsuki_lens(sl2, 2, 4)
    assert compose_series(lente, []).coeffs == lente.coeffs
    assert compose_series(lente, [lente]).coeffs == (1, 0, 0, 0, 0)
    suma = series_for_spec(load_manifold_spec(EJEMPLOS / "poincare_lente.json"), sl2, 4)
    assert suma.provenance == Procedencia.CONNECTED_SUM
    poincare = series_for_spec(load_manifold_spec(EJEMPLOS / "poincare.json"), sl2, 4)
    cociente = compose_series(suma, [lente])
    assert cociente.coeffs == poincare.coeffs
    assert cociente.provenance == Procedencia.QUOTIENT
    with pytest.raises(EntradaInvalidaError):
        compose_series(lente, [OhtsukiSeries((Fraction(0), Fraction(1)), Procedencia.LENS)])


def test_congruencia_de_suma_conexa(sl2):
    spec = load_manifold_spec(EJEMPLOS / "poincare_lente.json")
    assert congruence_check(series_for_spec(spec, sl2, 4), spec, sl2, 7, 4)


def test_S3(sl2):
    serie = series_for_spec(ManifoldSpec(name="S3"), sl2, 4)
    assert serie.coeffs == (1, 0, 0, 0, 0)
    assert congruence_check(serie, ManifoldSpec(name="S3"), sl2, 7, 4)


@pytest.mark.parametrize(
    "spec,rs",
    [
        (spec_de(Unknot(0)), ("A", 1)),
        (spec_de(Hopf(2, 2)), ("A", 1)),
        (spec_de(Trefoil(-1)), ("A", 2)),
    ],
)
def test_presentaciones_no_soportadas(spec, rs):
    with pytest.raises(EntradaInvalidaError):
        series_for_spec(spec, build_root_system(*rs), 2)
