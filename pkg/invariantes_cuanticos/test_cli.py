"""test_cli.py - Comandos invariant, verify y series y sus códigos de salida"""

import json

import pytest

from invariantes_cuanticos.cli import construir_parser, main


def leer(ruta):
    return json.loads(ruta.read_text(encoding="utf-8"))


def test_invariant(tmp_path):
    salida = tmp_path / "poincare.json"
    codigo = main(["invariant", "--r", "5", "--spec", "poincare.json", "--flavor", "projective",
                   "--flavor", "full", "--out", str(salida)])
    assert codigo == 0
    registro = leer(salida)
    assert registro["spec_name"] == "poincare"
    assert [v["flavor"] for v in registro["invariants"]] == ["projective", "full"]
    assert registro["invariants"][0]["integral"]


def test_invariant_por_salida_estandar(capsys):
    assert main(["invariant", "--r", "5", "--spec", "s3.json", "--reproducible"]) == 0
    registro = json.loads(capsys.readouterr().out)
    assert registro["command"] == "invariant"
    assert registro["timing"] is None


def test_salida_reproducible(tmp_path):
    rutas = [tmp_path / "a.json", tmp_path / "b.json"]
    for ruta in rutas:
        main(["invariant", "--r", "7", "--spec", "lens_b2.json", "--reproducible", "--out", str(ruta)])
    assert rutas[0].read_bytes() == rutas[1].read_bytes()


def test_invariante_indefinido_sale_con_1(tmp_path):
    salida = tmp_path / "c2.json"
    codigo = main(["invariant", "--algebra", "C2", "--r", "5", "--spec", "lens_b2.json",
                   "--flavor", "full", "--out", str(salida)])
    assert codigo == 1
    registro = leer(salida)
    assert not registro["invariants"][0]["defined"]
    assert registro["error"]["clase"] == "invariante_indefinido"


@pytest.mark.parametrize("argumentos", [
    ["invariant", "--spec", "s3.json"],
    ["invariant", "--r", "5", "--spec", "no_existe.json"],
    ["invariant", "--algebra", "B", "--r", "5", "--spec", "s3.json"],
    ["invariant", "--r", "5", "--zeta-exponent", "0", "--spec", "s3.json"],
    ["series", "--spec", "s3.json", "--primes", "2,7"],
])
def test_entrada_invalida_sale_con_2(tmp_path, argumentos):
    salida = tmp_path / "error.json"
    assert main(argumentos + ["--out", str(salida)]) == 2
    assert leer(salida)["error"]["clase"] == "entrada_invalida"


def test_recurso_excedido_sale_con_3(tmp_path):
    salida = tmp_path / "e8.json"
    assert main(["invariant", "--algebra", "E8", "--r", "31", "--spec", "lens_b2.json", "--out", str(salida)]) == 3
    assert leer(salida)["error"]["clase"] == "recurso"


def test_limites_por_linea_de_comandos(tmp_path):
    salida = tmp_path / "limite.json"
    codigo = main(["invariant", "--r", "5", "--spec", "lens_b2.json", "--limits", "max_enumeracion=1",
                   "--out", str(salida)])
    assert codigo == 3


def test_limite_desconocido():
    with pytest.raises(SystemExit):
        construir_parser().parse_args(["invariant", "--limits", "max_memoria=10"])


def test_verify(tmp_path):
    salida = tmp_path / "splitting.json"
    assert main(["verify", "splitting", "--r", "5", "--out", str(salida)]) == 0
    registro = leer(salida)
    assert registro["suite"] == "splitting"
    assert registro["passed"]


def test_series(tmp_path):
    salida = tmp_path / "serie.json"
    codigo = main(["series", "--spec", "poincare.json", "--order", "4", "--primes", "7,11,13",
                   "--out", str(salida)])
    assert codigo == 0
    registro = leer(salida)
    assert registro["provenance"] == "knot_sl2"
    assert len(registro["series"]) == 5
    assert {fila["r"] for fila in registro["residues"]} == {7, 11, 13}
