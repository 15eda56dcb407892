import logging
from typing import Iterable

import numpy as np
from pydantic import ConfigDict, NonNegativeInt, validate_call

from ._grafo import Graph
from ..utils import parse


logger = logging.getLogger(__name__)


def hop_distances(g: Graph, nodes: Iterable[int], radius: int) -> np.ndarray:
    """Distância em saltos de cada nó até o conjunto `nodes`, limitada a `radius`.

    Nós a mais de `radius` saltos recebem -1.

    """

    dist = np.full(g.node_count, -1, dtype=np.int64)
    fronteira = parse.mascara(nodes, g.node_count)
    dist[fronteira] = 0
    for passo in range(1, radius + 1):
        if not fronteira.any():
            break
        alcance = (g.matrix @ fronteira.astype(np.float64)) > 0
        fronteira = alcance & (dist < 0)
        dist[fronteira] = passo
    return dist


@validate_call(config=ConfigDict(arbitrary_types_allowed=True))
def influence_subgraph(
    g: Graph,
    nodes: set[int],
    radius: NonNegativeInt = 1,
) -> Graph:
    """Subgrafo induzido pelos nós dados e por sua vizinhança.

    Reúne os nós de `nodes` e todos os nós a até `radius` saltos deles e
    devolve o subgrafo induzido. Com `radius=1` o resultado contém os nós
    dados, seus vizinhos diretos e todas as arestas entre eles.

    Parameters
    ----------
    g : Graph
        Grafo completo.

    nodes : set of int
        Índices densos dos nós centrais, por exemplo os 10 nós mais
        influentes escolhidos por um algoritmo de imunização.

    radius : int, default=1
        Número máximo de saltos.

    Returns
    -------
    Graph
        Subgrafo induzido. Os identificadores externos são preservados; os
        índices densos seguem a ordem relativa do grafo original. Um
        conjunto vazio gera um grafo vazio.

    Raises
    ------
    IR_NodeIndexError
        Caso algum nó esteja fora do grafo.

    Examples
    --------
    >>> g = Graph.from_edges([("0", "1"), ("1", "2"), ("2", "3"), ("3", "4")])
    >>> sub = influence_subgraph(g, {2}, radius=1)
    >>> sorted(sub.ids)
    ['1', '2', '3']

    """

    dist = hop_distances(g, nodes, radius)
    sub = g.induced(np.flatnonzero(dist >= 0))
    logger.debug(
        "Subgrafo de influência (raio %d): %d nós, %d arestas",
        radius,
        sub.node_count,
        sub.edge_count,
    )
    return sub
