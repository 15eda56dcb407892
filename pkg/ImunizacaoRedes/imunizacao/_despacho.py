import logging
from typing import Optional

from pydantic import ConfigDict, NonNegativeInt, validate_call

from ._dava import dava
from ._grau import highest_degree
from ._netshield import netshield
from ._resultado import ImmunizationResult
from ..espectral import EigenPair
from ..grafo import Graph, SeedSet, influence_subgraph
from ..utils import Algoritmo, Escopo, Variante
from ..utils.errors import IR_ContractError
from ..utils.padroes import PADROES


logger = logging.getLogger(__name__)


def _selecionar(
    g: Graph,
    algorithm: Algoritmo,
    k: int,
    seeds: Optional[SeedSet],
    variant: Variante,
    eigen: Optional[EigenPair],
) -> ImmunizationResult:
    exclude = set(seeds.members) if seeds is not None else None
    match algorithm:
        case "HighestDegree":
            return highest_degree(g, k, exclude=exclude)
        case "NetShield":
            return netshield(g, k, exclude=exclude, eigen=eigen)
        case "DAVA":
            if seeds is None:
                raise IR_ContractError("O DAVA requer nós semente.")
            return dava(g, seeds, k, variant=variant)


@validate_call(config=ConfigDict(arbitrary_types_allowed=True))
def immunize(
    g: Graph,
    algorithm: Algoritmo,
    k: NonNegativeInt,
    seeds: Optional[SeedSet] = None,
    scope: Escopo = PADROES["scope"],
    radius: NonNegativeInt = PADROES["radius"],
    variant: Variante = PADROES["variant"],
    eigen: Optional[EigenPair] = None,
) -> ImmunizationResult:
    """Executa um dos três algoritmos de imunização.

    Parameters
    ----------
    g : Graph
        Grafo de interações.

    algorithm : {'HighestDegree', 'NetShield', 'DAVA'}
        Estratégia de seleção.

    k : int
        Orçamento.

    seeds : SeedSet, optional
        Nós tóxicos. Obrigatório para o DAVA e para `scope='subgraph'`;
        nos demais algoritmos as sementes ficam inelegíveis.

    scope : {'full', 'subgraph'}, default='full'
        - 'full': seleção sobre o grafo completo;
        - 'subgraph': seleção sobre o subgrafo tóxico, isto é, as sementes e
          todos os nós a até `radius` saltos delas. Os nós escolhidos são
          devolvidos com os índices do grafo completo.

    radius : int, default=1
        Raio do subgrafo tóxico.

    variant : {'iterative', 'fast'}, default='iterative'
        Variante do DAVA.

    eigen : EigenPair, optional
        Autopar do grafo completo para o NetShield (ignorado com
        `scope='subgraph'`).

    Returns
    -------
    ImmunizationResult
        Resultado com índices e identificadores do grafo completo.

    Raises
    ------
    IR_ContractError
        Caso faltem sementes para o DAVA ou para `scope='subgraph'`.

    """

    if scope == "full":
        return _selecionar(g, algorithm, k, seeds, variant, eigen)

    if seeds is None or len(seeds) == 0:
        raise IR_ContractError(
            "O escopo 'subgraph' requer nós semente para construir o subgrafo tóxico."
        )
    seeds.check(g)
    sub = influence_subgraph(g, set(seeds.members), radius)
    sub_seeds = SeedSet(members=frozenset(sub.indices_of(g.ids_of(seeds.indices))))
    logger.info(
        "Subgrafo tóxico: %d de %d nós, %d arestas",
        sub.node_count,
        g.node_count,
        sub.edge_count,
    )

    r = _selecionar(sub, algorithm, k, sub_seeds, variant, None)
    selected = g.indices_of(r.selected_ids)
    return r.model_copy(
        update={
            "selected": selected,
            "node_scores": {
                novo: r.node_scores[antigo] for novo, antigo in zip(selected, r.selected)
            },
            "scope": "subgraph",
        }
    )
