import logging
import time
from typing import Optional

import numpy as np
from pydantic import ConfigDict, NonNegativeInt, validate_call

from ._resultado import ImmunizationResult, _montar
from ..grafo import Graph
from ..utils import parse


logger = logging.getLogger(__name__)


@validate_call(config=ConfigDict(arbitrary_types_allowed=True))
def highest_degree(
    g: Graph,
    k: NonNegativeInt,
    exclude: Optional[set[int]] = None,
) -> ImmunizationResult:
    """Seleciona os `k` nós de maior grau (estratégia ingênua de referência).

    Parameters
    ----------
    g : Graph
        Grafo de interações.

    k : int
        Orçamento.

    exclude : set of int, optional
        Nós inelegíveis, normalmente as sementes tóxicas.

    Returns
    -------
    ImmunizationResult
        Os `min(k, elegíveis)` nós de maior grau fora de `exclude`. Empates
        são resolvidos pelo menor índice. `node_scores` contém os graus.

    Examples
    --------
    Caminho 0-1-2-3-4: os nós 1, 2 e 3 empatam com grau 2.

    >>> g = Graph.from_edges([("0", "1"), ("1", "2"), ("2", "3"), ("3", "4")])
    >>> highest_degree(g, k=1).selected
    [1]

    """

    inicio = time.perf_counter()
    graus = g.degrees
    excluidos = parse.mascara(exclude, g.node_count)
    ordem = np.lexsort((np.arange(g.node_count), -graus))
    ordem = ordem[~excluidos[ordem]][:k]
    selected = ordem.tolist()
    logger.debug("HighestDegree k=%d: %s", k, selected)
    return _montar(
        g, "HighestDegree", k, selected, {v: graus[v] for v in selected}, inicio
    )
