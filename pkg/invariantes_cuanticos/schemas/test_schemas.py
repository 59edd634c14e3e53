"""test_schemas.py - Validación de trabajos y serialización exacta de valores"""

from fractions import Fraction

import pytest
from pydantic import ValidationError

from invariantes_cuanticos.aritmetica import CycField, CycNum, approximate
from invariantes_cuanticos.schemas import Comando, CycValue, JobConfig, ResultRecord
from invariantes_cuanticos.variedades import Sabor


def test_algebra_con_y_sin_rango():
    assert JobConfig(algebra="A1").tipo_y_rango == ("A", 1)
    assert JobConfig(algebra="g2").tipo_y_rango == ("G", 2)
    assert JobConfig(algebra="B", rank=3).tipo_y_rango == ("B", 3)


@pytest.mark.parametrize("datos", [
    {"algebra": "B"},
    {"algebra": "A2", "rank": 3},
    {"algebra": "Z1"},
    {"algebra": "A1", "zeta_exponent": 0},
    {"algebra": "A1", "order": -1},
    {"algebra": "A1", "primes": [2, 7]},
    {"algebra": "A1", "flavors": []},
    {"algebra": "A1", "flavors": ["galois"]},
    {"algebra": "A1", "limits": {"max_weyl": 0}},
    {"algebra": "A1", "spec_path": "s3.json", "spec": {"name": "S3"}},
])
def test_trabajos_invalidos(datos):
    with pytest.raises(ValidationError):
        JobConfig(**datos)


def test_valores_por_defecto():
    job = JobConfig()
    assert job.flavors == [Sabor.PROJECTIVE]
    assert job.order == 4
    assert job.limits.max_weyl is None
    assert not job.reproducible


@pytest.mark.parametrize("campo", [CycField.xi(7, 3), CycField.zeta(2, 5, 7)])
def test_valor_exacto_ida_y_vuelta(campo):
    x = CycNum.from_coeffs(campo, [Fraction(k - 1, k + 2) for k in range(campo.degree)])
    valor = CycValue.desde_cyc(x)
    assert valor.a_cyc() == x
    assert CycValue.model_validate_json(valor.model_dump_json()).a_cyc() == x
    assert valor.coeffs[0] == "-1/2"


def test_aproximacion_consistente_con_el_valor_exacto():
    campo = CycField.xi(5)
    x = campo.zeta_power(1) + campo.zeta_power(4)
    # ξ + ξ⁻¹ = 2cos(2π/5) = (√5 − 1)/2
    re, im = approximate(CycValue.desde_cyc(x).a_cyc(), 10)
    assert re.startswith("0.618033988")
    assert abs(float(im)) < 1e-9


def test_registro_minimo():
    registro = ResultRecord(command=Comando.SERIES, job=JobConfig().model_dump(mode="json"))
    datos = registro.model_dump(mode="json")
    assert datos["command"] == "series"
    assert datos["job"]["algebra"] == "A1"
    assert datos["timing"] is None
