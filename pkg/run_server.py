"""
Script de inicio para el servidor FastAPI
Ejecuta desde la raíz del proyecto para resolver importaciones correctamente
"""

import sys
from pathlib import Path

# Agregar el directorio raíz al path
root_dir = Path(__file__).parent
sys.path.insert(0, str(root_dir))

import uvicorn

from invariantes_cuanticos.config import obtener_configuracion

if __name__ == "__main__":
    config = obtener_configuracion()
    print(" Iniciando API de invariantes cuánticos")
    print(f" URL: http://localhost:{config.puerto}")
    print(f" Docs: http://localhost:{config.puerto}/docs")
    print("")

    uvicorn.run(
        "invariantes_cuanticos.main:app",
        host=config.host,
        port=config.puerto,
        reload=True,
        reload_dirs=[str(root_dir / "invariantes_cuanticos")],
        log_level=config.nivel_log.lower(),
    )
