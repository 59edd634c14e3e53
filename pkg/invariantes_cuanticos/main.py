from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware
from .config import obtener_configuracion
from .routers import invariante_router, serie_router, verificacion_router
import logging

# Configurar logging
logging.basicConfig(level=obtener_configuracion().nivel_log)
logger = logging.getLogger(__name__)

app = FastAPI(
    title="API Invariantes Cuánticos",
    description="Invariantes cuánticos exactos de 3-variedades, verificaciones y series de Ohtsuki",
    version="1.0.0"
)

# CORS middleware
app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)

# Incluir routers
app.include_router(invariante_router.router)
app.include_router(verificacion_router.router)
app.include_router(serie_router.router)


@app.get("/api-info")
def read_api_info():
    return {
        "mensaje": "API de invariantes cuánticos funcionando",
        "endpoints": {
            "invariantes": "/api/invariantes",
            "verificaciones": "/api/verificaciones/{suite}",
            "series": "/api/series",
            "documentación": "/docs"
        }
    }

@app.get("/health")
def health_check():
    """Verificar salud general de la API"""
    return {"status": "healthy", "service": "invariantes-cuanticos-api"}
