"""
Esquemas Pydantic de los trabajos y de sus resultados
Define la entrada del CLI y de la API (JobConfig) y el registro JSON que ambos emiten (ResultRecord)
"""

import re
from enum import Enum
from fractions import Fraction
from typing import Any, Dict, List, Optional, Tuple

from pydantic import BaseModel, Field, field_validator, model_validator

from ..aritmetica import CycField, CycNum, TipoCampo
from ..variedades import Sabor


# ============================================================================
# ENUMS
# ============================================================================

class Comando(str, Enum):
    INVARIANT = "invariant"
    VERIFY = "verify"
    SERIES = "series"


class Suite(str, Enum):
    SYMMETRY1 = "symmetry1"
    SYMMETRY2 = "symmetry2"
    SPLITTING = "splitting"
    INTEGRALITY = "integrality"
    SMATRIX = "smatrix"
    KIRBY = "kirby"
    GAUSS_VANISH = "gauss-vanish"
    CONGRUENCE = "congruence"


# ============================================================================
# CONFIGURACIÓN DEL TRABAJO
# ============================================================================

class LimitesModel(BaseModel):
    """Límites de recursos; los que falten se toman de Configuracion."""
    max_weyl: Optional[int] = Field(None, gt=0, description="Mayor |W| que se materializa")
    max_enumeracion: Optional[int] = Field(None, gt=0, description="Mayor enumeración de coloraciones")
    max_tensor_trenza: Optional[int] = Field(None, gt=0, description="Mayor base tensorial de una trenza")


class JobConfig(BaseModel):
    """
    Un trabajo del CLI o de la API.

    - algebra: "A1", "G2", ... o sólo la letra, con el rango en `rank`
    - spec_path / spec: presentación por cirugía, como archivo o como JSON en línea
    - order: truncación N de las series en ħ
    - primes: primos de la tabla de residuos
    """
    algebra: str = Field("A1", description="Tipo de Lie, con o sin el rango")
    rank: Optional[int] = Field(None, ge=1, description="Rango ℓ si algebra es sólo la letra")
    r: Optional[int] = Field(None, ge=1, description="Nivel desplazado r")
    zeta_exponent: int = Field(1, ge=1, description="Exponente a de la raíz ζ = x^a")
    flavors: List[Sabor] = Field(default_factory=lambda: [Sabor.PROJECTIVE], min_length=1)
    spec_path: Optional[str] = Field(None, description="Archivo JSON de la ManifoldSpec")
    spec: Optional[Dict[str, Any]] = Field(None, description="ManifoldSpec en línea")
    order: int = Field(4, ge=0, description="Truncación N de la serie")
    primes: List[int] = Field(default_factory=list, description="Primos r de la expansión número-teórica")
    limits: LimitesModel = Field(default_factory=LimitesModel)
    digits: Optional[int] = Field(None, gt=0, le=50, description="Dígitos de la aproximación decimal")
    reproducible: bool = Field(False, description="Omitir tiempos y marcas de fecha en el registro")
    out: Optional[str] = Field(None, description="Archivo de salida")

    @field_validator("primes")
    @classmethod
    def primos_positivos(cls, v: List[int]) -> List[int]:
        if any(p < 3 for p in v):
            raise ValueError("Los primos de la tabla de residuos deben ser ≥ 3")
        return v

    @model_validator(mode="after")
    def algebra_reconocible(self):
        match = re.fullmatch(r"\s*([A-Ga-g])\s*(\d*)\s*", self.algebra)
        if not match:
            raise ValueError(f"Álgebra no reconocida: {self.algebra!r}")
        if not match.group(2) and self.rank is None:
            raise ValueError(f"'{self.algebra}' no indica el rango; use --rank")
        if match.group(2) and self.rank is not None and int(match.group(2)) != self.rank:
            raise ValueError(f"Rango contradictorio: {self.algebra} y rank={self.rank}")
        if self.spec_path is not None and self.spec is not None:
            raise ValueError("Indique la especificación por archivo o en línea, no ambas")
        return self

    @property
    def tipo_y_rango(self) -> Tuple[str, int]:
        match = re.fullmatch(r"\s*([A-Ga-g])\s*(\d*)\s*", self.algebra)
        return match.group(1).upper(), int(match.group(2) or self.rank)


# ============================================================================
# VALORES EXACTOS
# ============================================================================

class CycValue(BaseModel):
    """Elemento de Q(ζ_m) sin pérdida: coeficientes racionales en la base 1, x, …, x^{φ(m)−1}."""
    m: int
    a: int
    D: int = 1
    kind: TipoCampo
    coeffs: List[str]

    @classmethod
    def desde_cyc(cls, x: CycNum) -> "CycValue":
        campo = x.field
        return cls(
            m=campo.m,
            a=campo.a,
            D=campo.D,
            kind=campo.kind,
            coeffs=[f"{c.numerator}/{c.denominator}" for c in x.coeffs],
        )

    def a_cyc(self) -> CycNum:
        campo = CycField(m=self.m, a=self.a, D=self.D, kind=self.kind)
        return CycNum.from_coeffs(campo, [Fraction(c) for c in self.coeffs])


class Aproximacion(BaseModel):
    re: str
    im: str


class ValorInvariante(BaseModel):
    """Un sabor de τ calculado para la variedad del trabajo."""
    flavor: Sabor
    defined: bool
    exact: CycValue
    approx: Aproximacion
    integral: bool = Field(..., description="¿El valor está en Z[ξ] (o Z[ζ])?")


class Tiempos(BaseModel):
    started_at: str
    seconds: float


# ============================================================================
# REGISTRO DE RESULTADO
# ============================================================================

class ResultRecord(BaseModel):
    """
    Registro JSON que emite cada comando.

    - invariants: uno por sabor (comando invariant)
    - series / provenance / residues: serie de Ohtsuki y tabla de residuos (comando series)
    - checks / passed: casos de una suite (comando verify) o de la tabla de residuos
    - error: {"clase", "mensaje"} si el trabajo falló
    """
    command: Comando
    job: Dict[str, Any]
    suite: Optional[Suite] = None
    spec_name: Optional[str] = None
    invariants: List[ValorInvariante] = Field(default_factory=list)
    series: Optional[List[str]] = None
    provenance: Optional[str] = None
    residues: List[Dict[str, Any]] = Field(default_factory=list)
    checks: List[Dict[str, Any]] = Field(default_factory=list)
    passed: Optional[bool] = None
    timing: Optional[Tiempos] = None
    error: Optional[Dict[str, Any]] = None
