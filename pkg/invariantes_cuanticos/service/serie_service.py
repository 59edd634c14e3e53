"""
Service Layer para el comando series: c₀..c_N exactos y tabla de residuos por primo
"""

import logging

import pandas as pd

from ..perturbativo import congruence_rows, orden_verificable, series_for_spec
from ..schemas import Comando, JobConfig, ResultRecord
from ..variedades import homology_order
from .comun import (
    Cronometro,
    errores_clasificados,
    especificacion_del_trabajo,
    limites_del_trabajo,
    sistema_del_trabajo,
)

logger = logging.getLogger(__name__)


class SerieService:
    """Servicio del comando series"""

    @staticmethod
    def calcular(job: JobConfig) -> ResultRecord:
        cronometro = Cronometro(job.reproducible)
        with errores_clasificados(), limites_del_trabajo(job):
            rs = sistema_del_trabajo(job)
            spec = especificacion_del_trabajo(job)
            serie = series_for_spec(spec, rs, job.order)
            tablas = [
                pd.DataFrame(congruence_rows(serie, spec, rs, p, orden_verificable(rs, p, job.order), job.zeta_exponent))
                for p in job.primes
            ]
            orden_h1 = homology_order(spec.linking_matrix())

        residuos = pd.concat(tablas, ignore_index=True) if tablas else pd.DataFrame()
        denominadores = serie.denominators_check(rs, orden_h1)
        checks = [{"caso": "denominadores de c_n", "ok": denominadores}]
        if not residuos.empty:
            for r, ok in residuos.groupby("r")["ok"].all().items():
                checks.append({"caso": f"congruencia módulo {r}", "ok": bool(ok)})
        logger.info(f" series '{spec.name}' {rs.nombre}: {serie.provenance.value}, orden {serie.orden}")
        return ResultRecord(
            command=Comando.SERIES,
            job=job.model_dump(mode="json"),
            spec_name=spec.name,
            series=serie.a_json(),
            provenance=serie.provenance.value,
            residues=residuos.to_dict(orient="records"),
            checks=checks,
            passed=all(c["ok"] for c in checks),
            timing=cronometro.tiempos(),
        )
