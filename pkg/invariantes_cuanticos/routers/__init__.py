"""Routers FastAPI de los tres comandos"""

from . import invariante_router
from . import verificacion_router
from . import serie_router
