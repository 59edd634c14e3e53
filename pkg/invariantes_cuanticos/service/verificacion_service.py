"""
Service Layer para el comando verify: cada suite recorre su grilla de casos y
devuelve una tabla (pandas) con el resultado de cada uno.
"""

import itertools
import logging
from typing import Callable, Dict, List

import pandas as pd

from ..aritmetica import integrality_witness
from ..enlaces import (
    FramedLink,
    Hopf,
    Quiralidad,
    Trefoil,
    Unknot,
    number_of_components,
    symmetry1_check,
    symmetry2_check,
    zeta_exponents,
)
from ..lie import Dominio, LatticeDomain, RootSystem, enumerate_domain
from ..perturbativo import congruence_rows, orden_verificable, series_for_spec
from ..schemas import Comando, JobConfig, ResultRecord, Suite
from ..sumas import gauss_full, gauss_vanishing_prediction, smatrix_identity_check
from ..variedades import (
    ManifoldSpec,
    Sabor,
    kirby_equivalence_check,
    s_matrix_check,
    splitting_check,
    tau,
    trivial_cases_check,
)
from .comun import (
    Cronometro,
    admite_presentacion,
    ejemplo,
    errores_clasificados,
    especificacion_del_trabajo,
    limites_del_trabajo,
    niveles,
    sistema_del_trabajo,
)

logger = logging.getLogger(__name__)

NIVELES_POR_DEFECTO = [5, 7]
PRIMOS_POR_DEFECTO = [7, 11, 13]
COLUMNAS = ["caso", "r", "a", "ok", "detalle"]

Fila = Dict[str, object]


def _fila(caso: str, r: int, a: int, ok: bool, detalle: str = "") -> Fila:
    return {"caso": caso, "r": r, "a": a, "ok": bool(ok), "detalle": detalle}


def _es_sl2(rs: RootSystem) -> bool:
    return rs.type_and_rank == ("A", 1)


def _enlaces_coloreados(rs: RootSystem) -> List[FramedLink]:
    enlaces: List[FramedLink] = [Hopf(1, 0), Unknot(-1)]
    if _es_sl2(rs):
        enlaces.append(Trefoil(-1, Quiralidad.LEFT))
    return enlaces


def _colores(rs: RootSystem, r: int, link: FramedLink) -> List[tuple]:
    """Colores en el interior de la alcoba: el primero y el último de la enumeración."""
    interiores = enumerate_domain(LatticeDomain(rs, r), Dominio.INTERIOR_X)
    return [interiores[0], interiores[-1]][:number_of_components(link)]


def _especificaciones(job: JobConfig, rs: RootSystem) -> List[ManifoldSpec]:
    propia = especificacion_del_trabajo(job, requerida=False)
    if propia is not None:
        return [propia]
    nombres = ["s3", "lens_b2", "lens_m3", "hopf22", "poincare", "sigma237", "poincare_lente"]
    return [spec for spec in map(ejemplo, nombres) if admite_presentacion(rs, spec)]


class VerificacionService:
    """Servicio del comando verify"""

    @staticmethod
    def symmetry1(job: JobConfig, rs: RootSystem) -> List[Fila]:
        filas = []
        for r in niveles(job, NIVELES_POR_DEFECTO):
            for link, a in itertools.product(_enlaces_coloreados(rs), zeta_exponents(rs, r)):
                colores = _colores(rs, r, link)
                ok = symmetry1_check(rs, r, link, colores, exponentes=[a])
                filas.append(_fila(f"{link!r} {colores}", r, a, ok))
        return filas

    @staticmethod
    def symmetry2(job: JobConfig, rs: RootSystem) -> List[Fila]:
        filas = []
        for r in niveles(job, NIVELES_POR_DEFECTO):
            for link, a in itertools.product(_enlaces_coloreados(rs), zeta_exponents(rs, r)):
                colores = _colores(rs, r, link)
                for centro in itertools.product(rs.center.representatives, repeat=len(colores)):
                    ok = symmetry2_check(rs, r, link, colores, centro, exponentes=[a])
                    filas.append(_fila(f"{link!r} {colores}", r, a, ok, f"centro={list(centro)}"))
        return filas

    @staticmethod
    def splitting(job: JobConfig, rs: RootSystem) -> List[Fila]:
        filas = []
        especificaciones = _especificaciones(job, rs)
        for r in niveles(job, NIVELES_POR_DEFECTO):
            for a in zeta_exponents(rs, r):
                for spec in especificaciones:
                    filas.append(_fila(spec.name, r, a, splitting_check(spec, rs, r, a)))
        return filas

    @staticmethod
    def integrality(job: JobConfig, rs: RootSystem) -> List[Fila]:
        filas = []
        for r in niveles(job, NIVELES_POR_DEFECTO):
            for spec in _especificaciones(job, rs):
                resultado = tau(spec, rs, r, Sabor.PROJECTIVE, job.zeta_exponent)
                entero, _ = integrality_witness(resultado.field, resultado.value)
                detalle = "" if resultado.defined else "indefinido"
                filas.append(_fila(spec.name, r, job.zeta_exponent, entero, detalle))
        return filas

    @staticmethod
    def smatrix(job: JobConfig, rs: RootSystem) -> List[Fila]:
        filas = []
        a = job.zeta_exponent
        for r in niveles(job, NIVELES_POR_DEFECTO):
            filas.append(_fila("S·S̄ escalar", r, a, s_matrix_check(rs, r, a)))
            filas.append(_fila("identidad de la matriz S en λ=ρ", r, a, smatrix_identity_check(rs, r, rs.rho, a)))
        return filas

    @staticmethod
    def kirby(job: JobConfig, rs: RootSystem) -> List[Fila]:
        pares = [(ejemplo("hopf22"), ejemplo("lens_m3"))]
        if _es_sl2(rs):
            pares.append((ejemplo("trebol_trenza"), ManifoldSpec((Trefoil(1),), name="trébol derecho +1")))
        filas = []
        a = job.zeta_exponent
        for r in niveles(job, NIVELES_POR_DEFECTO):
            for (primera, segunda), sabor in itertools.product(pares, Sabor):
                ok = kirby_equivalence_check(primera, segunda, rs, r, sabor, a)
                filas.append(_fila(f"{primera.name} = {segunda.name}", r, a, ok, sabor.value))
        return filas

    @staticmethod
    def gauss_vanish(job: JobConfig, rs: RootSystem) -> List[Fila]:
        filas = []
        a = job.zeta_exponent
        for r in niveles(job, NIVELES_POR_DEFECTO):
            prevista = gauss_vanishing_prediction(rs, r)
            nula = gauss_full(rs, r, a).value.is_zero()
            filas.append(_fila("γ^g = 0", r, a, nula == prevista, f"prevista={prevista}, calculada={nula}"))
            filas.append(_fila("F_U± triviales", r, a, trivial_cases_check(rs, r, a)))
        return filas

    @staticmethod
    def congruence(job: JobConfig, rs: RootSystem) -> List[Fila]:
        propia = especificacion_del_trabajo(job, requerida=False)
        if propia is not None:
            especificaciones = [propia]
        else:
            especificaciones = [ejemplo("lens_b2"), ManifoldSpec((Unknot(3),), name="L(3,1)")]
            if _es_sl2(rs):
                especificaciones += [ejemplo("poincare"), ejemplo("sigma237")]
        primos = job.primes or [p for p in PRIMOS_POR_DEFECTO if p > rs.dim_g - rs.rank]
        filas = []
        for spec in especificaciones:
            serie = series_for_spec(spec, rs, job.order)
            for p in primos:
                n_max = orden_verificable(rs, p, job.order)
                for fila in congruence_rows(serie, spec, rs, p, n_max, job.zeta_exponent):
                    detalle = f"c_rn={fila['c_rn']}, esperado={fila['esperado']}, c_n={fila['c_n']}"
                    filas.append(_fila(f"{spec.name} n={fila['n']}", p, job.zeta_exponent, fila["ok"], detalle))
        return filas

    @staticmethod
    def ejecutar(job: JobConfig, suite: Suite) -> ResultRecord:
        """Corre la suite y arma el registro; passed es falso si algún caso falla."""
        suites: Dict[Suite, Callable[[JobConfig, RootSystem], List[Fila]]] = {
            Suite.SYMMETRY1: VerificacionService.symmetry1,
            Suite.SYMMETRY2: VerificacionService.symmetry2,
            Suite.SPLITTING: VerificacionService.splitting,
            Suite.INTEGRALITY: VerificacionService.integrality,
            Suite.SMATRIX: VerificacionService.smatrix,
            Suite.KIRBY: VerificacionService.kirby,
            Suite.GAUSS_VANISH: VerificacionService.gauss_vanish,
            Suite.CONGRUENCE: VerificacionService.congruence,
        }
        suite = Suite(suite)
        cronometro = Cronometro(job.reproducible)
        with errores_clasificados(), limites_del_trabajo(job):
            rs = sistema_del_trabajo(job)
            logger.info(f" Suite {suite.value} para {rs.nombre}")
            tabla = pd.DataFrame(suites[suite](job, rs), columns=COLUMNAS)

        aprobados = int(tabla["ok"].sum())
        por_nivel = tabla.groupby("r")["ok"].all().to_dict()
        logger.info(f" Suite {suite.value}: {aprobados}/{len(tabla)} casos; por nivel {por_nivel}")
        return ResultRecord(
            command=Comando.VERIFY,
            job=job.model_dump(mode="json"),
            suite=suite,
            checks=tabla.to_dict(orient="records"),
            passed=bool(len(tabla)) and aprobados == len(tabla),
            timing=cronometro.tiempos(),
        )
