"""
routers/verificacion_router.py

Endpoint del comando verify: suites de verificación sobre su grilla de casos
"""

import logging

from fastapi import APIRouter, HTTPException
from fastapi.responses import JSONResponse

from ..excepciones import ErrorInvariantes, VerificacionFallidaError
from ..schemas import JobConfig, ResultRecord, Suite
from ..service import VerificacionService
from ..service.comun import trabajo_remoto

logger = logging.getLogger(__name__)

router = APIRouter(
    prefix="/api/verificaciones",
    tags=["Verificaciones"],
)


@router.post("/{suite}", response_model=ResultRecord, summary="Ejecutar una suite de verificación")
def ejecutar_suite(suite: Suite, job: JobConfig):
    """
    Ejecuta la suite sobre los niveles del trabajo (o 5 y 7 si no se indica `r`).

    Responde 409 con el registro completo si algún caso falla.
    """
    try:
        registro = VerificacionService.ejecutar(trabajo_remoto(job), suite)
    except ErrorInvariantes as e:
        raise HTTPException(status_code=e.codigo_http, detail=e.a_registro())
    except Exception as e:
        logger.error(f"Error en la suite {suite.value}: {str(e)}")
        raise HTTPException(status_code=500, detail=str(e))
    if not registro.passed:
        return JSONResponse(status_code=VerificacionFallidaError.codigo_http, content=registro.model_dump(mode="json"))
    return registro
