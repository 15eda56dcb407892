import logging
import time
from typing import Iterable, Optional

import numpy as np
from pydantic import ConfigDict, NonNegativeInt, validate_call

from ._resultado import ImmunizationResult, _montar
from ..espectral import EigenPair, power_iteration
from ..grafo import Graph
from ..utils import parse


logger = logging.getLogger(__name__)


def shield_value(g: Graph, e: EigenPair, s: Iterable[int]) -> float:
    """Shield value de um conjunto de nós.

    `Sv(S) = Σ_{i∈S} 2λ·u(i)² - Σ_{i∈S} Σ_{j∈S} A(i,j)·u(i)·u(j)`

    Aproxima a queda do maior autovalor da matriz de adjacência quando os
    nós de `S` são removidos. Os pares `(i, j)` são ordenados, portanto
    cada aresta interna a `S` é contada duas vezes.

    Parameters
    ----------
    g : Graph
        Grafo de interações.

    e : EigenPair
        Autopar principal de `g`.

    s : iterable of int
        Conjunto de nós.

    Returns
    -------
    float
        Shield value. `Sv(∅) = 0`.

    Examples
    --------
    No grafo completo K4 (λ = 3, u(i) = 0.5):

    >>> k4 = Graph.from_edges([("a", "b"), ("a", "c"), ("a", "d"), ("b", "c"), ("b", "d"), ("c", "d")])
    >>> e = power_iteration(k4)
    >>> round(shield_value(k4, e, {0}), 6)
    1.5
    >>> round(shield_value(k4, e, {0, 1}), 6)
    2.5

    """

    nodes = parse.nos(s, g.node_count)
    if nodes.size == 0:
        return 0.0
    u = e.u[nodes]
    interno = g.matrix[nodes][:, nodes]
    return float(2.0 * e.lambda_ * (u @ u) - u @ (interno @ u))


@validate_call(config=ConfigDict(arbitrary_types_allowed=True))
def netshield(
    g: Graph,
    k: NonNegativeInt,
    exclude: Optional[set[int]] = None,
    eigen: Optional[EigenPair] = None,
) -> ImmunizationResult:
    """Seleção gulosa de nós pelo ganho marginal de shield value (NetShield).

    A cada passo entra no conjunto `S` o nó elegível que maximiza
    `2λ·u(i)² - 2·u(i)·Σ_{j∈S} A(i,j)·u(j)`. Empates são resolvidos pelo
    menor índice.

    Parameters
    ----------
    g : Graph
        Grafo de interações.

    k : int
        Orçamento.

    exclude : set of int, optional
        Nós inelegíveis, normalmente as sementes tóxicas.

    eigen : EigenPair, optional
        Autopar principal já calculado. Se None, é calculado com
        `power_iteration` e o tempo entra em `elapsed_seconds`.

    Returns
    -------
    ImmunizationResult
        `min(k, elegíveis)` nós na ordem de seleção; `node_scores` contém os
        ganhos marginais no momento da seleção.

    Raises
    ------
    IR_ConvergenceError
        Caso o cálculo do autopar não convirja.

    """

    inicio = time.perf_counter()
    if g.node_count == 0 or k == 0:
        return _montar(g, "NetShield", k, [], {}, inicio)

    e = eigen if eigen is not None else power_iteration(g)
    u = e.u
    v = 2.0 * e.lambda_ * u * u
    b = np.zeros(g.node_count)
    elegivel = ~parse.mascara(exclude, g.node_count)

    selected: list[int] = []
    scores: dict[int, float] = {}
    for _ in range(k):
        if not elegivel.any():
            break
        ganho = np.where(elegivel, v - 2.0 * b * u, -np.inf)
        i = int(np.argmax(ganho))
        selected.append(i)
        scores[i] = float(ganho[i])
        elegivel[i] = False
        b[g.neighbors(i)] += u[i]

    logger.debug("NetShield k=%d: %s", k, selected)
    return _montar(g, "NetShield", k, selected, scores, inicio)
