"""
Configuración del motor de invariantes (pydantic-settings).

Los valores se leen de variables de entorno con prefijo INVARIANTES_ o de un
archivo .env en el directorio de trabajo.
"""

from contextlib import contextmanager
from contextvars import ContextVar
from functools import lru_cache
from types import MappingProxyType
from typing import Iterator, Mapping

from dotenv import load_dotenv
from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

load_dotenv()


class Configuracion(BaseSettings):
    """Límites de recursos y valores por defecto de los cálculos."""

    model_config = SettingsConfigDict(
        env_prefix="INVARIANTES_",
        env_file=".env",
        extra="ignore",
    )

    # ==================== LÍMITES ====================
    max_weyl: int = Field(1_000_000, gt=0, description="Mayor |W| que se materializa")
    max_enumeracion: int = Field(2_000_000, gt=0, description="Mayor enumeración de retículo o de coloraciones")
    max_tensor_trenza: int = Field(200_000, gt=0, description="Mayor dimensión del producto tensorial en trenzas")

    # ==================== SALIDA ====================
    digitos: int = Field(12, gt=0, le=50, description="Dígitos de la aproximación decimal")
    nivel_log: str = Field("INFO", description="Nivel de logging")

    # ==================== VERIFICACIONES ====================
    exponentes_zeta: int = Field(2, gt=0, description="Cantidad de exponentes a de ζ recorridos por las verificaciones")
    muestras_weyl_afin: int = Field(20, gt=0, description="Imágenes afines muestreadas por caso de simetría")
    semilla: int = Field(20240601, description="Semilla de las verificaciones muestreadas")

    # ==================== SERVIDOR ====================
    host: str = "0.0.0.0"
    puerto: int = 8000


@lru_cache()
def obtener_configuracion() -> Configuracion:
    return Configuracion()


# ==================== LÍMITES POR TRABAJO ====================

LIMITES = ("max_weyl", "max_enumeracion", "max_tensor_trenza")

# Cada hilo o tarea ve sólo los límites de su propio trabajo; la Configuracion no se modifica.
_limites_del_trabajo: ContextVar[Mapping[str, int]] = ContextVar("limites_del_trabajo", default=MappingProxyType({}))


def limite_vigente(nombre: str) -> int:
    """Límite vigente: el del trabajo en curso o, si no lo fija, el configurado."""
    propios = _limites_del_trabajo.get()
    if nombre in propios:
        return propios[nombre]
    return getattr(obtener_configuracion(), nombre)


@contextmanager
def limites_vigentes(cambios: Mapping[str, int]) -> Iterator[None]:
    desconocidos = set(cambios) - set(LIMITES)
    if desconocidos:
        raise ValueError(f"Límites desconocidos: {sorted(desconocidos)}")
    token = _limites_del_trabajo.set(MappingProxyType(dict(cambios)))
    try:
        yield
    finally:
        _limites_del_trabajo.reset(token)
