"""Servicios que ejecutan los trabajos del CLI y de la API"""

from .invariante_service import InvarianteService
from .serie_service import SerieService
from .verificacion_service import VerificacionService

__all__ = [
    "InvarianteService",
    "SerieService",
    "VerificacionService",
]
