"""
Errores clasificados del motor de invariantes.

Cada clase lleva:
- clase: identificador estable usado en los registros JSON de error
- codigo_salida: código de salida del CLI (0 ok, 1 verificación, 2 entrada, 3 recurso)
- codigo_http: estado HTTP que devuelven los routers
"""

from typing import Any, Dict, Optional


class ErrorInvariantes(Exception):
    """Base de todos los errores del motor."""

    clase = "error_interno"
    codigo_salida = 1
    codigo_http = 500

    def __init__(self, mensaje: str, detalles: Optional[Dict[str, Any]] = None):
        super().__init__(mensaje)
        self.mensaje = mensaje
        self.detalles = detalles or {}

    def a_registro(self) -> Dict[str, Any]:
        """Registro JSON del error (lo que emite el CLI y la API)."""
        registro = {"clase": self.clase, "mensaje": self.mensaje}
        if self.detalles:
            registro["detalles"] = self.detalles
        return registro


class EntradaInvalidaError(ErrorInvariantes):
    clase = "entrada_invalida"
    codigo_salida = 2
    codigo_http = 400


class RecursoExcedidoError(ErrorInvariantes):
    """Un límite configurado (|W|, enumeración, tensor de trenzas) fue superado."""

    clase = "recurso"
    codigo_salida = 3
    codigo_http = 413


class InvarianteIndefinidoError(ErrorInvariantes):
    clase = "invariante_indefinido"
    codigo_salida = 1
    codigo_http = 422


class VerificacionFallidaError(ErrorInvariantes):
    """Una identidad verificada numéricamente no se cumplió."""

    clase = "verificacion_fallida"
    codigo_salida = 1
    codigo_http = 409


class AritmeticaInexactaError(ErrorInvariantes):
    """División no exacta o entrada no entera donde se exige Z[ξ] o Z[q^±1]."""

    clase = "aritmetica"
    codigo_salida = 1
    codigo_http = 500
