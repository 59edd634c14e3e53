"""
Service Layer para el comando invariant: τ de una variedad en los sabores pedidos
"""

import logging

from ..aritmetica import approximate, integrality_witness
from ..config import limite_vigente, obtener_configuracion
from ..excepciones import InvarianteIndefinidoError
from ..schemas import Aproximacion, Comando, CycValue, JobConfig, ResultRecord, ValorInvariante
from ..variedades import tau
from .comun import (
    Cronometro,
    errores_clasificados,
    especificacion_del_trabajo,
    limites_del_trabajo,
    nivel_requerido,
    sistema_del_trabajo,
)

logger = logging.getLogger(__name__)


class InvarianteService:
    """Servicio del comando invariant"""

    @staticmethod
    def calcular(job: JobConfig) -> ResultRecord:
        """
        Calcula τ en cada sabor de job.flavors.

        Si algún sabor queda indefinido (F_U± = 0) el registro lleva el valor 0 con
        defined=false y además el error invariante_indefinido.
        """
        cronometro = Cronometro(job.reproducible)
        digitos = job.digits or obtener_configuracion().digitos
        with errores_clasificados(), limites_del_trabajo(job):
            rs = sistema_del_trabajo(job)
            r = nivel_requerido(job)
            spec = especificacion_del_trabajo(job)
            valores = []
            for sabor in job.flavors:
                resultado = tau(spec, rs, r, sabor, job.zeta_exponent, limite_vigente("max_enumeracion"))
                entero, _ = integrality_witness(resultado.field, resultado.value)
                re, im = approximate(resultado.value, digitos)
                valores.append(ValorInvariante(
                    flavor=sabor,
                    defined=resultado.defined,
                    exact=CycValue.desde_cyc(resultado.value),
                    approx=Aproximacion(re=re, im=im),
                    integral=entero,
                ))

        registro = ResultRecord(
            command=Comando.INVARIANT,
            job=job.model_dump(mode="json"),
            spec_name=spec.name,
            invariants=valores,
            timing=cronometro.tiempos(),
        )
        indefinidos = [v.flavor.value for v in valores if not v.defined]
        if indefinidos:
            registro.error = InvarianteIndefinidoError(
                f"τ no está definido para {rs.nombre}, r={r} en los sabores {indefinidos}",
                {"flavors": indefinidos},
            ).a_registro()
        logger.info(f" invariant '{spec.name}' {rs.nombre} r={r}: {len(valores)} sabores")
        return registro
