import logging
import time

from pydantic import ConfigDict, NonNegativeInt, validate_call

from ._dominadores import _dominadores, _mascara_sementes, _vizinhos
from ._resultado import ImmunizationResult, _montar
from ..grafo import Graph, SeedSet
from ..utils import Variante
from ..utils.padroes import PADROES


logger = logging.getLogger(__name__)


@validate_call(config=ConfigDict(arbitrary_types_allowed=True))
def dava(
    g: Graph,
    seeds: SeedSet,
    k: NonNegativeInt,
    variant: Variante = PADROES["variant"],
) -> ImmunizationResult:
    """Imunização contra-ativa pela árvore de dominadores (DAVA).

    O benefício de bloquear um nó é o tamanho de sua subárvore na árvore de
    dominadores enraizada nas sementes: exatamente os nós que deixam de ser
    alcançáveis pelas sementes quando ele é removido.

    Parameters
    ----------
    g : Graph
        Grafo de interações.

    seeds : SeedSet
        Nós tóxicos, nunca selecionados.

    k : int
        Orçamento.

    variant : {'iterative', 'fast'}, default='iterative'
        - 'iterative': repete `k` vezes a construção da árvore, escolhe o nó
          de maior benefício e o remove do grafo de trabalho;
        - 'fast': constrói a árvore uma única vez e escolhe os `k` filhos da
          raiz com maiores subárvores.

    Returns
    -------
    ImmunizationResult
        Nós na ordem de seleção, com os benefícios no momento da escolha em
        `node_scores`. A seleção para antes de `k` quando não resta nenhum
        nó alcançável pelas sementes. Empates são resolvidos pelo menor
        índice.

    Raises
    ------
    IR_ContractError
        Caso o conjunto de sementes seja vazio.

    Examples
    --------
    Arestas s-a, a-c, c-d, s-b com semente `s`: bloquear `a` salva 3 nós.

    >>> g = Graph.from_edges([("s", "a"), ("a", "c"), ("c", "d"), ("s", "b")])
    >>> r = dava(g, SeedSet(members={0}), k=1)
    >>> r.selected_ids, r.node_scores
    (['a'], {1: 3.0})

    """

    inicio = time.perf_counter()
    semente = _mascara_sementes(g, seeds)
    vizinhos = _vizinhos(g)

    selected: list[int] = []
    scores: dict[int, float] = {}

    if variant == "fast":
        arvore = _dominadores(vizinhos, semente)
        tamanho = arvore.subtree_size
        filhos = sorted(arvore.children(arvore.root), key=lambda v: (-tamanho[v], v))
        for v in filhos[:k]:
            selected.append(v)
            scores[v] = tamanho[v]
    else:
        removido = [False] * g.node_count
        for passo in range(k):
            arvore = _dominadores(vizinhos, semente, removido)
            if not arvore.order:
                logger.debug("DAVA: nenhum nó alcançável após %d escolhas", passo)
                break
            tamanho = arvore.subtree_size
            v = min(arvore.order, key=lambda x: (-tamanho[x], x))
            selected.append(v)
            scores[v] = tamanho[v]
            removido[v] = True
            logger.debug("DAVA passo %d: nó %d, benefício %d", passo + 1, v, tamanho[v])

    return _montar(g, "DAVA", k, selected, scores, inicio, variant=variant)
