"""
Sistema de raíces de un álgebra de Lie simple.

Contiene:
- matriz_cartan: matriz de Cartan (a_ij) en la numeración de Bourbaki
- RootSystem: raíces, pesos, ρ, grupo de Weyl, forma bilineal, h, h∨, d, D y centro G = X/Y
- build_root_system / inner: operaciones públicas del módulo

Convenciones:
- Los pesos se guardan como tuplas de enteros en la base de pesos fundamentales λ_1..λ_ℓ.
- α_i en esa base es la columna i de la matriz de Cartan.
- (α_i|α_j) = d_i·a_ij, de modo que (α|α) = 2 para toda raíz corta.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial, gcd
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form

from ..config import limite_vigente
from ..excepciones import EntradaInvalidaError, RecursoExcedidoError

logger = logging.getLogger(__name__)

Weight = Tuple[int, ...]

RANGOS_EXCEPCIONALES = {"E": (6, 7, 8), "F": (4,), "G": (2,)}
RANGO_MINIMO = {"A": 1, "B": 2, "C": 2, "D": 4}


def validar_tipo(tipo: str, rango: int) -> Tuple[str, int]:
    tipo = str(tipo).strip().upper()
    try:
        rango = int(rango)
    except (TypeError, ValueError):
        raise EntradaInvalidaError(f"Rango inválido: {rango!r}")
    if tipo in RANGO_MINIMO:
        if rango < RANGO_MINIMO[tipo]:
            raise EntradaInvalidaError(
                f"El tipo {tipo} requiere rango >= {RANGO_MINIMO[tipo]}, se recibió {rango}"
            )
    elif tipo in RANGOS_EXCEPCIONALES:
        if rango not in RANGOS_EXCEPCIONALES[tipo]:
            raise EntradaInvalidaError(f"No existe el álgebra {tipo}{rango}")
    else:
        raise EntradaInvalidaError(f"Tipo de Lie desconocido: {tipo!r}")
    return tipo, rango


def matriz_cartan(tipo: str, rango: int) -> np.ndarray:
    """Matriz de Cartan a_ij = 2(α_i|α_j)/(α_i|α_i)."""
    tipo, rango = validar_tipo(tipo, rango)
    A = 2 * np.eye(rango, dtype=np.int64)
    if rango == 1:
        return A
    cadena = rango if tipo == "A" else rango - 1
    if tipo == "F":
        cadena = rango
    if tipo == "G":
        cadena = 0
    for i in range(cadena - 1):
        A[i, i + 1] = -1
        A[i + 1, i] = -1
    if tipo == "B":
        # última raíz corta
        A[-2, -1] = -1
        A[-1, -2] = -2
    elif tipo == "C":
        # última raíz larga
        A[-2, -1] = -2
        A[-1, -2] = -1
    elif tipo == "D":
        A[-3, -1] = -1
        A[-1, -3] = -1
    elif tipo == "E":
        A[-4, -1] = -1
        A[-1, -4] = -1
    elif tipo == "F":
        A[2, 1] = -2
    elif tipo == "G":
        A[0, 1] = -3
        A[1, 0] = -1
    return A


def orden_weyl_clasico(tipo: str, rango: int) -> int:
    """|W| por la fórmula clásica, usado para rechazar antes de enumerar."""
    if tipo == "A":
        return factorial(rango + 1)
    if tipo in ("B", "C"):
        return 2 ** rango * factorial(rango)
    if tipo == "D":
        return 2 ** (rango - 1) * factorial(rango)
    return {("E", 6): 51840, ("E", 7): 2903040, ("E", 8): 696729600,
            ("F", 4): 1152, ("G", 2): 12}[(tipo, rango)]


def _simetrizadores(A: np.ndarray) -> List[int]:
    """d_i con d_i·a_ij = d_j·a_ji y min d_i = 1."""
    ell = A.shape[0]
    d: List[Optional[Fraction]] = [None] * ell
    d[0] = Fraction(1)
    pendientes = [0]
    while pendientes:
        i = pendientes.pop()
        for j in range(ell):
            if i != j and A[i, j] != 0 and d[j] is None:
                d[j] = d[i] * int(A[i, j]) / int(A[j, i])
                pendientes.append(j)
    minimo = min(d)
    escalados = [x / minimo for x in d]
    return [int(x) for x in escalados]


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


@dataclass(frozen=True)
class CenterGroup:
    """Centro G = X/Y con levantamientos en X y la forma (g|g′) con valores en Q/Z."""

    invariant_factors: Tuple[int, ...]
    representatives: Tuple[Weight, ...]
    order: int


@dataclass(eq=False)
class RootSystem:
    """Datos de Lie de un álgebra simple. Inmutable una vez construido."""

    type_and_rank: Tuple[str, int]
    cartan: np.ndarray
    d_list: Tuple[int, ...]
    d: int
    D: int
    gram: Tuple[Tuple[Fraction, ...], ...]
    simple_roots: Tuple[Weight, ...]
    positive_roots: Tuple[Weight, ...]
    positive_roots_root_coords: Tuple[Tuple[int, ...], ...]
    rho: Weight
    s: int
    dim_g: int
    h: int
    h_dual: int
    alpha0: Weight
    highest_root: Weight
    det_cartan: int
    weyl_order: int
    center: CenterGroup
    # enteros: gram_D = D·gram, adjunta = det·A⁻¹
    gram_D: np.ndarray = field(repr=False)
    adjugate: np.ndarray = field(repr=False)
    # grupo de Weyl extensional; vacío cuando la construcción es parcial
    weyl: np.ndarray = field(repr=False)
    weyl_signs: np.ndarray = field(repr=False)
    weyl_rho: np.ndarray = field(repr=False)
    partial: bool = False

    # ==================== ATRIBUTOS DERIVADOS ====================

    @property
    def rank(self) -> int:
        return self.type_and_rank[1]

    @property
    def nombre(self) -> str:
        return f"{self.type_and_rank[0]}{self.type_and_rank[1]}"

    def require_weyl(self) -> None:
        """Lanza RecursoExcedidoError si el grupo de Weyl no fue materializado."""
        if self.partial:
            raise RecursoExcedidoError(
                f"El grupo de Weyl de {self.nombre} tiene |W| = {self.weyl_order} elementos "
                f"y no fue enumerado; las sumas sobre W no están disponibles",
                {"weyl_order": self.weyl_order},
            )

    # ==================== FORMA BILINEAL ====================

    def inner_scaled(self, mu: Sequence[int], nu: Sequence[int]) -> int:
        """D·(μ|ν), siempre entero."""
        return int(np.asarray(mu, dtype=np.int64) @ self.gram_D @ np.asarray(nu, dtype=np.int64))

    def inner(self, mu: Sequence[int], nu: Sequence[int]) -> Fraction:
        return Fraction(self.inner_scaled(mu, nu), self.D)

    def norm2(self, mu: Sequence[int]) -> Fraction:
        return self.inner(mu, mu)

    def twist_exponent(self, mu: Sequence[int]) -> int:
        """Exponente de q^{(|μ|²−|ρ|²)/2} en unidades de q^{1/(2D)}."""
        return self.inner_scaled(mu, mu) - self.inner_scaled(self.rho, self.rho)

    # ==================== COORDENADAS ====================

    def root_coords(self, mu: Sequence[int]) -> Tuple[Fraction, ...]:
        """Coordenadas c con μ = Σ c_i α_i."""
        numer = self.adjugate @ np.asarray(mu, dtype=np.int64)
        return tuple(Fraction(int(x), self.det_cartan) for x in numer)

    def from_root_coords(self, c: Sequence[int]) -> Weight:
        return tuple(int(x) for x in self.cartan @ np.asarray(c, dtype=np.int64))

    def center_key(self, mu: Sequence[int]) -> Tuple[int, ...]:
        """Clase de μ en X/Y: parte fraccionaria de A⁻¹μ (numeradores módulo det)."""
        numer = self.adjugate @ np.asarray(mu, dtype=np.int64)
        return tuple(int(x) % self.det_cartan for x in numer)

    # ==================== PREDICADOS ====================

    def in_root_lattice(self, mu: Sequence[int]) -> bool:
        return all(x == 0 for x in self.center_key(mu))

    def in_rho_plus_root_lattice(self, mu: Sequence[int]) -> bool:
        return self.in_root_lattice(tuple(m - p for m, p in zip(mu, self.rho)))

    def is_dominant(self, mu: Sequence[int]) -> bool:
        return all(m >= 0 for m in mu)

    def is_positive_root(self, mu: Sequence[int]) -> bool:
        return tuple(mu) in self._positive_set

    # ==================== GRUPO DE WEYL ====================

    def weyl_orbit(self, mu: Sequence[int]) -> np.ndarray:
        """Matriz (|W|, ℓ) con w(μ) para cada w, en el orden de self.weyl."""
        self.require_weyl()
        return self.weyl @ np.asarray(mu, dtype=np.int64)

    def longest_element_index(self) -> int:
        self.require_weyl()
        objetivo = -np.asarray(self.rho, dtype=np.int64)
        indices = np.nonzero((self.weyl_rho == objetivo).all(axis=1))[0]
        return int(indices[0])

    def dual_weight(self, mu: Sequence[int]) -> Weight:
        """μ* = −w₀(μ); en la base fundamental es una permutación de coordenadas."""
        self.require_weyl()
        w0 = self.weyl[self.longest_element_index()]
        return tuple(int(-x) for x in w0 @ np.asarray(mu, dtype=np.int64))

    def reflect(self, mu: Sequence[int], i: int) -> Weight:
        """Reflexión simple s_i(μ) = μ − ⟨μ, α_i^∨⟩ α_i."""
        mu = list(mu)
        coef = mu[i]
        return tuple(m - coef * int(a) for m, a in zip(mu, self.cartan[:, i]))

    # ==================== CENTRO ====================

    def center_form(self, g1: Sequence[int], g2: Sequence[int]) -> Fraction:
        """(g₁|g₂) en Q/Z, representado en [0, 1)."""
        valor = self.inner(g1, g2)
        return valor - (valor.numerator // valor.denominator)

    def center_lift(self, g: Sequence[int]) -> Weight:
        """Representante canónico de la clase de g."""
        return self._center_by_key[self.center_key(g)]

    def __post_init__(self):
        self._positive_set = frozenset(self.positive_roots)
        self._center_by_key: Dict[Tuple[int, ...], Weight] = {
            self.center_key(g): g for g in self.center.representatives
        }


def _raices_positivas(A: np.ndarray) -> List[Tuple[int, ...]]:
    """Crecimiento de órbitas desde las raíces simples, en coordenadas de raíces."""
    ell = A.shape[0]
    simples = [tuple(int(i == j) for j in range(ell)) for i in range(ell)]
    encontradas = set(simples)
    cola = list(simples)
    while cola:
        c = cola.pop()
        beta = A @ np.asarray(c, dtype=np.int64)
        for i in range(ell):
            if c == simples[i]:
                continue
            nueva = list(c)
            nueva[i] -= int(beta[i])
            nueva = tuple(nueva)
            if min(nueva) >= 0 and nueva not in encontradas:
                encontradas.add(nueva)
                cola.append(nueva)
    return sorted(encontradas, key=lambda c: (sum(c), c))


def _enumerar_weyl(A: np.ndarray, rho: np.ndarray) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Clausura BFS de las reflexiones simples; w queda identificado por w(ρ)."""
    ell = A.shape[0]
    identidad = np.eye(ell, dtype=np.int64)
    reflexiones = np.stack([identidad - np.outer(A[:, i], identidad[i]) for i in range(ell)])

    vistos = {tuple(int(x) for x in rho)}
    matrices = [identidad[None, :, :]]
    signos = [np.ones(1, dtype=np.int64)]
    frontera = identidad[None, :, :]
    signo = 1
    while len(frontera):
        signo = -signo
        candidatos = np.matmul(reflexiones[:, None, :, :], frontera[None, :, :, :]).reshape(-1, ell, ell)
        imagenes = candidatos @ rho
        nuevos = []
        for k, img in enumerate(map(tuple, imagenes.tolist())):
            if img not in vistos:
                vistos.add(img)
                nuevos.append(k)
        frontera = candidatos[nuevos]
        if len(frontera):
            matrices.append(frontera)
            signos.append(np.full(len(frontera), signo, dtype=np.int64))
    weyl = np.concatenate(matrices)
    return weyl, np.concatenate(signos), weyl @ rho


def _centro(A: np.ndarray, adjunta: np.ndarray, det: int) -> CenterGroup:
    ell = A.shape[0]
    snf = smith_normal_form(Matrix(A.tolist()), domain=ZZ)
    factores = tuple(sorted(abs(int(snf[i, i])) for i in range(ell) if abs(int(snf[i, i])) != 1))

    def clave(mu):
        return tuple(int(x) % det for x in adjunta @ np.asarray(mu, dtype=np.int64))

    def normalizar(mu):
        # coordenadas de raíces en [0, 1)
        numer = adjunta @ np.asarray(mu, dtype=np.int64)
        pisos = np.asarray([int(x) // det for x in numer], dtype=np.int64)
        return tuple(int(x) for x in np.asarray(mu, dtype=np.int64) - A @ pisos)

    cero = tuple([0] * ell)
    representantes = {clave(cero): cero}
    cola = [cero]
    identidad = np.eye(ell, dtype=np.int64)
    while cola:
        mu = cola.pop(0)
        for i in range(ell):
            nuevo = normalizar(tuple(int(x) for x in np.asarray(mu) + identidad[i]))
            k = clave(nuevo)
            if k not in representantes:
                representantes[k] = nuevo
                cola.append(nuevo)
    reps = tuple(sorted(representantes.values(), key=lambda g: (sum(abs(x) for x in g), g)))
    return CenterGroup(invariant_factors=factores, representatives=reps, order=len(reps))


_cache_sistemas: Dict[Tuple[str, int, int, bool], RootSystem] = {}


def build_root_system(
    tipo: str,
    rango: int,
    max_weyl: Optional[int] = None,
    allow_partial: bool = False,
) -> RootSystem:
    """
    Construye todos los datos de Lie del álgebra (tipo, rango).

    Args:
        tipo: letra A-G
        rango: ℓ
        max_weyl: mayor |W| que se enumera (por defecto Configuracion.max_weyl)
        allow_partial: si |W| supera el límite, construir sin la lista de W en vez de fallar

    Raises:
        EntradaInvalidaError: tipo o rango inválido
        RecursoExcedidoError: |W| mayor que el límite y allow_partial=False
    """
    tipo, rango = validar_tipo(tipo, rango)
    limite = max_weyl if max_weyl is not None else limite_vigente("max_weyl")
    clave = (tipo, rango, limite, allow_partial)
    if clave in _cache_sistemas:
        return _cache_sistemas[clave]

    orden = orden_weyl_clasico(tipo, rango)
    parcial = orden > limite
    if parcial and not allow_partial:
        raise RecursoExcedidoError(
            f"|W| = {orden} para {tipo}{rango} supera el límite configurado {limite}",
            {"weyl_order": orden, "limite": limite},
        )

    A = matriz_cartan(tipo, rango)
    ell = rango
    matriz = Matrix(A.tolist())
    det = int(matriz.det())
    adjunta = np.asarray(matriz.adjugate().tolist(), dtype=np.int64)
    d_list = _simetrizadores(A)

    # gram = diag(d)·A⁻¹ = diag(d)·adj/det
    gram = tuple(
        tuple(Fraction(d_list[i] * int(adjunta[i, j]), det) for j in range(ell)) for i in range(ell)
    )
    D = 1
    for fila in gram:
        for x in fila:
            D = _lcm(D, x.denominator)
    gram_D = np.asarray([[int(x * D) for x in fila] for fila in gram], dtype=np.int64)

    simples = tuple(tuple(int(x) for x in A[:, i]) for i in range(ell))
    coords_pos = _raices_positivas(A)
    positivas = tuple(tuple(int(x) for x in A @ np.asarray(c, dtype=np.int64)) for c in coords_pos)
    rho = tuple([1] * ell)

    def altura_rho(c):
        return sum(ci * di for ci, di in zip(c, d_list))

    def largo2(c):
        return sum(c[i] * c[j] * d_list[i] * int(A[i, j]) for i in range(ell) for j in range(ell))

    cortas = [c for c in coords_pos if largo2(c) == 2]
    c_alpha0 = max(cortas, key=altura_rho)
    c_theta = max(coords_pos, key=altura_rho)
    d = max(d_list)
    h = 1 + altura_rho(c_alpha0)
    maximo = altura_rho(c_theta)
    if maximo % d:
        raise EntradaInvalidaError(f"Datos de Lie inconsistentes para {tipo}{rango}")
    h_dual = 1 + maximo // d

    centro = _centro(A, adjunta, det)

    if parcial:
        weyl = np.zeros((0, ell, ell), dtype=np.int64)
        signos = np.zeros(0, dtype=np.int64)
        weyl_rho = np.zeros((0, ell), dtype=np.int64)
        logger.warning(f" {tipo}{rango}: |W| = {orden} supera {limite}; construcción parcial sin grupo de Weyl")
    else:
        weyl, signos, weyl_rho = _enumerar_weyl(A, np.asarray(rho, dtype=np.int64))
        if len(weyl) != orden:
            raise EntradaInvalidaError(
                f"Enumeración de W para {tipo}{rango} dio {len(weyl)} elementos, se esperaban {orden}"
            )

    rs = RootSystem(
        type_and_rank=(tipo, rango),
        cartan=A,
        d_list=tuple(d_list),
        d=d,
        D=D,
        gram=gram,
        simple_roots=simples,
        positive_roots=positivas,
        positive_roots_root_coords=tuple(coords_pos),
        rho=rho,
        s=len(positivas),
        dim_g=2 * len(positivas) + ell,
        h=h,
        h_dual=h_dual,
        alpha0=tuple(int(x) for x in A @ np.asarray(c_alpha0, dtype=np.int64)),
        highest_root=tuple(int(x) for x in A @ np.asarray(c_theta, dtype=np.int64)),
        det_cartan=det,
        weyl_order=orden,
        center=centro,
        gram_D=gram_D,
        adjugate=adjunta,
        weyl=weyl,
        weyl_signs=signos,
        weyl_rho=weyl_rho,
        partial=parcial,
    )
    logger.info(
        f" Sistema de raíces {tipo}{rango}: s={rs.s}, |W|={orden}, |G|={det}, d={d}, D={D}, h={h}, h∨={h_dual}"
    )
    _cache_sistemas[clave] = rs
    return rs


def inner(rs: RootSystem, mu: Sequence[int], nu: Sequence[int]) -> Fraction:
    """Producto escalar (μ|ν) con denominador que divide a D."""
    return rs.inner(mu, nu)
