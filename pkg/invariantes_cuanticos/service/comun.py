"""
Piezas compartidas por los servicios: álgebra y especificación del trabajo,
límites de recursos, errores clasificados y tiempos.
"""

import logging
import time
from contextlib import contextmanager
from datetime import datetime
from pathlib import Path
from typing import Iterator, List, Optional

from ..config import limite_vigente, limites_vigentes, obtener_configuracion
from ..enlaces import Hopf, Unknot
from ..excepciones import EntradaInvalidaError, ErrorInvariantes
from ..lie import RootSystem, build_root_system
from ..schemas import JobConfig, Tiempos
from ..variedades import ManifoldSpec, load_manifold_spec

logger = logging.getLogger(__name__)

EJEMPLOS = Path(__file__).resolve().parent.parent / "ejemplos"


def ruta_de_especificacion(nombre: str, solo_ejemplos: bool = False) -> Path:
    """Un archivo existente o, si no existe, el ejemplo incluido con ese nombre."""
    ruta = Path(nombre)
    if solo_ejemplos:
        if ruta.name != nombre or not (EJEMPLOS / nombre).exists():
            raise EntradaInvalidaError(f"Sólo se aceptan los ejemplos incluidos por nombre, no {nombre!r}")
        return EJEMPLOS / nombre
    if ruta.exists():
        return ruta
    if (EJEMPLOS / ruta.name).exists():
        return EJEMPLOS / ruta.name
    raise EntradaInvalidaError(f"No existe el archivo de especificación {nombre}")


def especificacion_del_trabajo(job: JobConfig, requerida: bool = True) -> Optional[ManifoldSpec]:
    if job.spec is not None:
        return load_manifold_spec(job.spec)
    if job.spec_path is not None:
        return load_manifold_spec(ruta_de_especificacion(job.spec_path))
    if requerida:
        raise EntradaInvalidaError("El trabajo necesita una especificación (--spec)")
    return None


def ejemplo(nombre: str) -> ManifoldSpec:
    return load_manifold_spec(EJEMPLOS / f"{nombre}.json")


def sistema_del_trabajo(job: JobConfig) -> RootSystem:
    tipo, rango = job.tipo_y_rango
    return build_root_system(tipo, rango, max_weyl=limite_vigente("max_weyl"))


def nivel_requerido(job: JobConfig) -> int:
    if job.r is None:
        raise EntradaInvalidaError("El comando necesita el nivel r (--r)")
    return job.r


def niveles(job: JobConfig, por_defecto: List[int]) -> List[int]:
    return [job.r] if job.r is not None else list(por_defecto)


def admite_presentacion(rs: RootSystem, spec: ManifoldSpec) -> bool:
    """Tréboles, figuras ocho y trenzas sólo se evalúan para sl₂."""
    return rs.type_and_rank == ("A", 1) or all(isinstance(link, (Unknot, Hopf)) for link in spec.flatten())


@contextmanager
def limites_del_trabajo(job: JobConfig) -> Iterator[None]:
    """Los límites del trabajo rigen sólo en este contexto; la configuración compartida no cambia."""
    with limites_vigentes(job.limits.model_dump(exclude_none=True)):
        yield


@contextmanager
def errores_clasificados() -> Iterator[None]:
    """ValueError de la capa de dominio llega al usuario como entrada inválida."""
    try:
        yield
    except ErrorInvariantes:
        raise
    except ValueError as e:
        logger.error(f" Entrada rechazada por el dominio: {e}")
        raise EntradaInvalidaError(str(e)) from e


class Cronometro:
    """Tiempo de pared de un trabajo; nada si el registro debe ser reproducible."""

    def __init__(self, reproducible: bool):
        self.reproducible = reproducible
        self.inicio = datetime.now().isoformat(timespec="seconds")
        self.reloj = time.perf_counter()

    def tiempos(self) -> Optional[Tiempos]:
        if self.reproducible:
            return None
        return Tiempos(started_at=self.inicio, seconds=round(time.perf_counter() - self.reloj, 3))


def trabajo_remoto(job: JobConfig) -> JobConfig:
    """
    Por HTTP sólo se leen los ejemplos incluidos, no se escriben archivos y los límites
    del trabajo pueden bajar los del servidor pero nunca subirlos.
    """
    config = obtener_configuracion()
    topes = {
        campo: min(valor, getattr(config, campo))
        for campo, valor in job.limits.model_dump(exclude_none=True).items()
    }
    cambios = {"out": None, "limits": job.limits.model_copy(update=topes)}
    if job.spec_path is not None:
        cambios["spec_path"] = str(ruta_de_especificacion(job.spec_path, solo_ejemplos=True))
    return job.model_copy(update=cambios)
