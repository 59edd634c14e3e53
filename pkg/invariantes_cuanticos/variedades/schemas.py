from typing import List, Literal, Optional

from pydantic import BaseModel, Field, model_validator

from ..enlaces import Quiralidad


class BraidRecord(BaseModel):
    """Registro de texto de una trenza cerrada con marcos."""
    strands: int = Field(..., ge=1, description="Número de hebras")
    word: List[int] = Field(default_factory=list, description="Generadores σ_i como ±i")
    framings: List[int] = Field(..., description="Marco de cada componente de la clausura")
    component_map: List[int] = Field(..., description="Componente de la hebra que arranca en cada posición")


class EspecialModel(BaseModel):
    """
    Presentación especial.

    - unknot, trefoil, figure_eight: usan b
    - hopf: usa b1, b2 y linking (±1)
    """
    type: Literal["unknot", "hopf", "trefoil", "figure_eight"]
    b: Optional[int] = Field(None, description="Marco del nudo")
    b1: Optional[int] = Field(None, description="Marco de la primera componente de Hopf")
    b2: Optional[int] = Field(None, description="Marco de la segunda componente de Hopf")
    linking: int = Field(1, description="Número de enlace del enlace de Hopf")
    chirality: Quiralidad = Field(Quiralidad.RIGHT, description="Quiralidad del trébol")

    @model_validator(mode="after")
    def marcos_presentes(self):
        if self.type == "hopf":
            if self.b1 is None or self.b2 is None:
                raise ValueError("hopf requiere b1 y b2")
            if self.linking not in (1, -1):
                raise ValueError("linking debe ser 1 o -1")
        elif self.b is None:
            raise ValueError(f"{self.type} requiere el marco b")
        return self


class ComponenteModel(BaseModel):
    special: Optional[EspecialModel] = None
    braid: Optional[BraidRecord] = None

    @model_validator(mode="after")
    def exactamente_una(self):
        if (self.special is None) == (self.braid is None):
            raise ValueError("Cada componente es 'special' o 'braid', exactamente una de las dos")
        return self


class ManifoldSpecModel(BaseModel):
    """Archivo JSON de una presentación por cirugía."""
    name: str = Field("", description="Nombre libre")
    components: List[ComponenteModel] = Field(default_factory=list, description="Enlaces disjuntos de la cirugía")
    connected_sum: List["ManifoldSpecModel"] = Field(default_factory=list, description="Sumandos conexos")


ManifoldSpecModel.model_rebuild()
