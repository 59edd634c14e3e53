"""Schemas Pydantic de trabajos y resultados"""

from .schemas import (
    Aproximacion,
    Comando,
    CycValue,
    JobConfig,
    LimitesModel,
    ResultRecord,
    Suite,
    Tiempos,
    ValorInvariante,
)

__all__ = [
    "Aproximacion",
    "Comando",
    "CycValue",
    "JobConfig",
    "LimitesModel",
    "ResultRecord",
    "Suite",
    "Tiempos",
    "ValorInvariante",
]
