"""
Línea de comandos: invariant, verify y series.

Cada comando emite un ResultRecord en JSON (en --out o por la salida estándar) y
termina con 0 si todo salió bien, 1 si una verificación falló o el invariante no
está definido, 2 con una entrada inválida y 3 si se superó un límite de recursos.
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Dict, List, Optional, Sequence

from pydantic import ValidationError

from .config import obtener_configuracion
from .excepciones import EntradaInvalidaError, ErrorInvariantes, InvarianteIndefinidoError
from .schemas import Comando, JobConfig, ResultRecord, Suite
from .service import InvarianteService, SerieService, VerificacionService
from .variedades import Sabor

logger = logging.getLogger(__name__)

LIMITES = ("max_weyl", "max_enumeracion", "max_tensor_trenza")


def _lista_de_primos(texto: str) -> List[int]:
    try:
        return [int(p) for p in texto.split(",") if p.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"Lista de primos inválida: {texto!r}")


def _limite(texto: str) -> Dict[str, int]:
    clave, _, valor = texto.partition("=")
    clave = clave.strip().replace("-", "_")
    if clave not in LIMITES or not valor:
        raise argparse.ArgumentTypeError(f"Límite inválido {texto!r}; use {', '.join(LIMITES)}=N")
    try:
        return {clave: int(valor)}
    except ValueError:
        raise argparse.ArgumentTypeError(f"El límite {clave} debe ser entero")


def _argumentos_comunes(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--algebra", default="A1", help="Tipo de Lie, p. ej. A1, B2, G2 (o sólo la letra con --rank)")
    parser.add_argument("--rank", type=int, help="Rango ℓ si --algebra es sólo la letra")
    parser.add_argument("--r", type=int, help="Nivel desplazado r")
    parser.add_argument("--zeta-exponent", type=int, default=1, help="Exponente a de ζ = x^a")
    parser.add_argument("--flavor", action="append", choices=[s.value for s in Sabor], help="Sabor de τ (repetible)")
    parser.add_argument("--spec", help="Archivo JSON de la ManifoldSpec o nombre de un ejemplo incluido")
    parser.add_argument("--order", type=int, default=4, help="Truncación N de la serie en ħ")
    parser.add_argument("--primes", type=_lista_de_primos, default=[], help="Primos separados por comas, p. ej. 7,11,13")
    parser.add_argument("--limits", type=_limite, action="append", default=[], help="max_weyl=N, max_enumeracion=N o max_tensor_trenza=N")
    parser.add_argument("--digits", type=int, help="Dígitos de la aproximación decimal")
    parser.add_argument("--reproducible", action="store_true", help="Omitir tiempos para obtener una salida idéntica")
    parser.add_argument("--out", help="Archivo JSON de salida (por defecto, salida estándar)")
    parser.add_argument("--verbose", "-v", action="store_true", help="Logging en nivel DEBUG")


def construir_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="invariantes_cuanticos",
        description="Invariantes cuánticos exactos de 3-variedades",
    )
    comandos = parser.add_subparsers(dest="comando", required=True)

    invariante = comandos.add_parser(Comando.INVARIANT.value, help="τ de una presentación por cirugía")
    _argumentos_comunes(invariante)

    verificacion = comandos.add_parser(Comando.VERIFY.value, help="Ejecutar una suite de verificación")
    verificacion.add_argument("suite", choices=[s.value for s in Suite])
    _argumentos_comunes(verificacion)

    serie = comandos.add_parser(Comando.SERIES.value, help="Serie de Ohtsuki y residuos módulo primos")
    _argumentos_comunes(serie)
    return parser


def trabajo_desde_argumentos(args: argparse.Namespace) -> JobConfig:
    limites: Dict[str, int] = {}
    for limite in args.limits:
        limites.update(limite)
    datos = {
        "algebra": args.algebra,
        "rank": args.rank,
        "r": args.r,
        "zeta_exponent": args.zeta_exponent,
        "spec_path": args.spec,
        "order": args.order,
        "primes": args.primes,
        "limits": limites,
        "digits": args.digits,
        "reproducible": args.reproducible,
        "out": args.out,
    }
    if args.flavor:
        datos["flavors"] = args.flavor
    try:
        return JobConfig.model_validate(datos)
    except ValidationError as e:
        primero = e.errors()[0]
        campo = ".".join(str(x) for x in primero["loc"]) or "trabajo"
        raise EntradaInvalidaError(f"{campo}: {primero['msg']}", {"errores": len(e.errors())})


def ejecutar(comando: Comando, job: JobConfig, suite: Optional[str] = None) -> ResultRecord:
    if comando == Comando.INVARIANT:
        return InvarianteService.calcular(job)
    if comando == Comando.VERIFY:
        return VerificacionService.ejecutar(job, Suite(suite))
    return SerieService.calcular(job)


def codigo_de_salida(registro: ResultRecord) -> int:
    if registro.error:
        return InvarianteIndefinidoError.codigo_salida
    if registro.passed is False:
        return 1
    return 0


def _emitir(contenido: str, destino: Optional[str]) -> None:
    if destino:
        Path(destino).write_text(contenido + "\n", encoding="utf-8")
    else:
        sys.stdout.write(contenido + "\n")


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = construir_parser().parse_args(argv)
    nivel = "DEBUG" if args.verbose else obtener_configuracion().nivel_log
    logging.basicConfig(level=nivel, stream=sys.stderr)

    try:
        job = trabajo_desde_argumentos(args)
        registro = ejecutar(Comando(args.comando), job, getattr(args, "suite", None))
    except ErrorInvariantes as e:
        logger.error(f" {args.comando}: {e.mensaje}")
        _emitir(json.dumps({"error": e.a_registro()}, ensure_ascii=False, indent=2), args.out)
        return e.codigo_salida
    except Exception as e:
        logger.error(f" {args.comando}: error no clasificado: {e}")
        _emitir(json.dumps({"error": ErrorInvariantes(str(e)).a_registro()}, ensure_ascii=False, indent=2), args.out)
        return ErrorInvariantes.codigo_salida

    _emitir(registro.model_dump_json(indent=2), job.out)
    return codigo_de_salida(registro)


if __name__ == "__main__":
    sys.exit(main())
