"""
routers/serie_router.py

Endpoint del comando series: serie perturbativa y residuos módulo primos
"""

import logging

from fastapi import APIRouter, HTTPException

from ..excepciones import ErrorInvariantes
from ..schemas import JobConfig, ResultRecord
from ..service import SerieService
from ..service.comun import trabajo_remoto

logger = logging.getLogger(__name__)

router = APIRouter(
    prefix="/api/series",
    tags=["Series"],
)


@router.post("", response_model=ResultRecord, summary="Serie de Ohtsuki de una esfera de homología racional")
def calcular_serie(job: JobConfig):
    """
    Devuelve c₀..c_N como racionales exactos ("p/q") y, para cada primo de `primes`,
    la tabla de residuos c_(r,n) frente a (|H₁|/r)^ℓ c_n.
    """
    try:
        return SerieService.calcular(trabajo_remoto(job))
    except ErrorInvariantes as e:
        raise HTTPException(status_code=e.codigo_http, detail=e.a_registro())
    except Exception as e:
        logger.error(f"Error al calcular la serie: {str(e)}")
        raise HTTPException(status_code=500, detail=str(e))
