import logging
from typing import Iterable, Literal, Optional

import numpy as np
from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    NonNegativeFloat,
    PositiveFloat,
    PositiveInt,
    validate_call,
)

from ..grafo import Graph
from ..utils.errors import IR_ConvergenceError, IR_GraphError
from ..utils.padroes import PADROES


logger = logging.getLogger(__name__)

_COLAPSO = 1e-300


class EigenPair(BaseModel):
    """Autopar principal da matriz de adjacência.

    Attributes
    ----------
    lambda_ : float
        Maior autovalor λ da matriz de adjacência (alias `lambda`).
    u : numpy.ndarray
        Autovetor associado, com norma euclidiana unitária e convenção de
        sinal de Perron-Frobenius (soma não negativa).
    residual : float
        Norma `||A·u - λ·u||`.
    iterations : int
        Número de iterações realizadas.
    converged : bool
        Se o resíduo atingiu a tolerância.

    """

    model_config = ConfigDict(
        arbitrary_types_allowed=True, frozen=True, populate_by_name=True
    )

    lambda_: float = Field(alias="lambda")
    u: np.ndarray
    residual: float
    iterations: int
    converged: bool = True

    def __repr__(self) -> str:
        return (
            f"<ImunizacaoRedes.EigenPair: λ={self.lambda_:.10g}, "
            f"resíduo={self.residual:.2e}, iterações={self.iterations}>"
        )


def _residual(g: Graph, lam: float, u: np.ndarray) -> float:
    return float(np.linalg.norm(g.matrix @ u - lam * u))


@validate_call(config=ConfigDict(arbitrary_types_allowed=True))
def power_iteration(
    g: Graph,
    tol: PositiveFloat = PADROES["tol"],
    max_iter: PositiveInt = PADROES["max_iter"],
    rng_seed: int = PADROES["rng_seed"],
    shift: NonNegativeFloat = PADROES["shift"],
) -> EigenPair:
    """Maior autovalor e autovetor da matriz de adjacência por iteração de potência.

    A iteração é aplicada a `A + shift·I`, a partir do vetor de uns
    normalizado. O deslocamento faz grafos bipartidos (estrelas, caminhos)
    convergirem em vez de oscilarem entre `λ` e `-λ`. O autovalor reportado
    é o quociente de Rayleigh de `A` e o critério de parada é o resíduo
    `||A·u - λ·u|| <= tol`.

    Parameters
    ----------
    g : Graph
        Grafo não vazio.

    tol : float, default=1e-10
        Tolerância do resíduo.

    max_iter : int, default=10000
        Número máximo de iterações.

    rng_seed : int, default=0
        Semente do gerador usado apenas para reiniciar a iteração caso o
        iterado colapse numericamente para zero.

    shift : float, default=1.0
        Deslocamento espectral aplicado durante a iteração.

    Returns
    -------
    EigenPair
        Autopar principal. Em grafos conexos todas as entradas de `u` são
        não negativas.

    Raises
    ------
    IR_GraphError
        Caso o grafo não tenha nós.

    IR_ConvergenceError
        Caso o resíduo não atinja `tol` em `max_iter` iterações. O melhor
        iterado fica no atributo `melhor` do erro.

    Examples
    --------
    Grafo completo com 4 nós.

    >>> g = Graph.from_edges([(a, b) for a in "0123" for b in "0123" if a < b])
    >>> e = power_iteration(g)
    >>> round(e.lambda_, 8), e.u.round(8).tolist()
    (3.0, [0.5, 0.5, 0.5, 0.5])

    """

    n = g.node_count
    if n == 0:
        raise IR_GraphError("Não é possível calcular o autopar de um grafo vazio.")

    A = g.matrix
    x = np.full(n, 1.0 / np.sqrt(n))
    rng: Optional[np.random.Generator] = None
    melhor: Optional[tuple[float, float, np.ndarray, int]] = None

    for it in range(1, max_iter + 1):
        y = A @ x
        lam = float(x @ y)
        residual = float(np.linalg.norm(y - lam * x))
        if melhor is None or residual < melhor[1]:
            melhor = (lam, residual, x, it)
        if residual <= tol:
            break

        z = y + shift * x
        norma = float(np.linalg.norm(z))
        if norma < _COLAPSO:
            if rng is None:
                rng = np.random.default_rng(rng_seed)
            logger.debug("Iterado colapsou na iteração %d; reiniciando", it)
            z = rng.random(n)
            norma = float(np.linalg.norm(z))
        x = z / norma
    else:
        lam, residual, x, it = melhor
        if x.sum() < 0:
            x = -x
        raise IR_ConvergenceError(
            f"A iteração de potência não convergiu em {max_iter} iterações "
            f"(melhor resíduo {residual:.3e} > tol {tol:.1e}).\n"
            "Aumente `max_iter` ou relaxe `tol`.",
            melhor=EigenPair(
                lambda_=lam, u=x, residual=residual, iterations=it, converged=False
            ),
        )

    if x.sum() < 0:
        x = -x
    logger.debug("Iteração de potência: λ=%.12g em %d iterações", lam, it)
    return EigenPair(lambda_=lam, u=x, residual=residual, iterations=it)


def dense_eigenpair(g: Graph) -> EigenPair:
    """Autopar principal pela decomposição densa completa (`numpy.linalg.eigh`).

    Indicado apenas para grafos pequenos; serve de referência para
    `power_iteration`.

    """

    if g.node_count == 0:
        raise IR_GraphError("Não é possível calcular o autopar de um grafo vazio.")
    valores, vetores = np.linalg.eigh(g.matrix.toarray())
    lam = float(valores[-1])
    u = vetores[:, -1]
    if u.sum() < 0:
        u = -u
    return EigenPair(lambda_=lam, u=u, residual=_residual(g, lam, u), iterations=0)


def eigen_drop(
    g: Graph,
    nodes: Iterable[int],
    method: Literal["power", "dense"] = "power",
    base: Optional[EigenPair] = None,
) -> float:
    """Queda do maior autovalor ao remover os nós dados: `λ(G) - λ(G ∖ S)`.

    Parameters
    ----------
    g : Graph
        Grafo completo.

    nodes : iterable of int
        Nós removidos.

    method : {'power', 'dense'}, default='power'
        Método de cálculo dos autovalores.

    base : EigenPair, optional
        Autopar de `g` já calculado, reaproveitado se fornecido.

    Returns
    -------
    float
        Queda do autovalor. Um grafo resultante sem nós tem `λ = 0`.

    """

    calcular = power_iteration if method == "power" else dense_eigenpair
    antes = base.lambda_ if base is not None else calcular(g).lambda_
    restante = g.remove_nodes(nodes)
    depois = calcular(restante).lambda_ if restante.node_count else 0.0
    return antes - depois
