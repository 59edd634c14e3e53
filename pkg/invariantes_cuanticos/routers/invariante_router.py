"""
routers/invariante_router.py

Endpoint del comando invariant: τ^g, τ^{Pg} y τ^G de una presentación por cirugía
"""

import logging

from fastapi import APIRouter, HTTPException
from fastapi.responses import JSONResponse

from ..excepciones import ErrorInvariantes, InvarianteIndefinidoError
from ..schemas import JobConfig, ResultRecord
from ..service import InvarianteService
from ..service.comun import trabajo_remoto

logger = logging.getLogger(__name__)

router = APIRouter(
    prefix="/api/invariantes",
    tags=["Invariantes"],
)


@router.post("", response_model=ResultRecord, summary="Calcular τ de una 3-variedad")
def calcular_invariante(job: JobConfig):
    """
    Calcula τ en los sabores pedidos.

    **Campos principales:**
    - `algebra`: "A1", "B2", "G2", ...
    - `r`: nivel desplazado
    - `flavors`: "full", "projective", "center"
    - `spec`: ManifoldSpec en línea, o `spec_path` con el nombre de un ejemplo incluido

    Si algún sabor no está definido se responde 422 con el registro completo.
    """
    try:
        registro = InvarianteService.calcular(trabajo_remoto(job))
    except ErrorInvariantes as e:
        raise HTTPException(status_code=e.codigo_http, detail=e.a_registro())
    except Exception as e:
        logger.error(f"Error al calcular el invariante: {str(e)}")
        raise HTTPException(status_code=500, detail=str(e))
    if registro.error:
        return JSONResponse(status_code=InvarianteIndefinidoError.codigo_http, content=registro.model_dump(mode="json"))
    return registro
