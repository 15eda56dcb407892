import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Iterator, Literal, Optional

import numpy as np
import pandas as pd
from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    NonNegativeInt,
    PositiveInt,
    validate_call,
)

from ..grafo import Graph, SeedSet
from ..utils import Resultado, parse
from ..utils.errors import IR_ContractError
from ..utils.padroes import PADROES


logger = logging.getLogger(__name__)


class CascadeParams(BaseModel):
    """Parâmetros da simulação de Monte Carlo da cascata independente.

    Attributes
    ----------
    p : float, default=0.1
        Probabilidade de ativação de cada aresta, em `[0, 1]`.
    runs : int, default=1000
        Número de rodadas de Monte Carlo.
    master_seed : int, default=0
        Semente principal. A rodada `r` usa o gerador
        `numpy.random.default_rng([master_seed, r])`.
    workers : int, default=1
        Número de threads. O resultado não depende deste valor.

    """

    model_config = ConfigDict(frozen=True)

    p: float = Field(default=PADROES["p"], ge=0.0, le=1.0)
    runs: PositiveInt = PADROES["runs"]
    master_seed: NonNegativeInt = PADROES["master_seed"]
    workers: PositiveInt = PADROES["workers"]


class SpreadOutcome(Resultado):
    """Estatísticas de infecção de uma simulação de Monte Carlo.

    Attributes
    ----------
    runs : int
        Número de rodadas.
    mean_infected : float
        Média de nós infectados por rodada.
    std_infected : float
        Desvio padrão de nós infectados por rodada.
    ci95 : float
        Meia largura do intervalo de 95% de confiança da média.
    per_node_frequency : dict[int, float]
        Fração das rodadas em que cada nó foi infectado (apenas nós
        infectados ao menos uma vez).
    per_run_counts : list of int
        Número de infectados em cada rodada.

    """

    tipo: Literal["propagacao"] = "propagacao"
    runs: PositiveInt
    mean_infected: float
    std_infected: float = 0.0
    ci95: float = 0.0
    per_node_frequency: dict[int, float] = Field(default_factory=dict)
    per_run_counts: list[int] = Field(default_factory=list)

    def __repr__(self) -> str:
        return (
            f"<ImunizacaoRedes.SpreadOutcome: {self.mean_infected:.3f} ± "
            f"{self.ci95:.3f} infectados em {self.runs} rodadas>"
        )

    @property
    def pandas(self) -> pd.DataFrame:
        return pd.DataFrame(
            {
                "no": list(self.per_node_frequency),
                "frequencia": list(self.per_node_frequency.values()),
            }
        )

    def affected(self, min_frequency: float = 0.5) -> list[int]:
        """Nós infectados em pelo menos `min_frequency` das rodadas."""

        return sorted(
            v for v, f in self.per_node_frequency.items() if f >= min_frequency
        )


def _espalhar(
    g: Graph,
    seeds: np.ndarray,
    bloqueado: np.ndarray,
    vivo: Optional[np.ndarray] = None,
) -> np.ndarray:
    """Nós alcançados a partir das sementes pelos arcos vivos, evitando bloqueados."""

    infectado = np.zeros(g.node_count, dtype=bool)
    infectado[seeds] = True
    fronteira = seeds
    indptr, indices = g.indptr, g.indices
    while fronteira.size:
        inicio = indptr[fronteira]
        tamanho = indptr[fronteira + 1] - inicio
        deslocamento = np.cumsum(tamanho) - tamanho
        arcos = np.arange(tamanho.sum()) + np.repeat(inicio - deslocamento, tamanho)
        vizinhos = indices[arcos]
        ok = ~(infectado[vizinhos] | bloqueado[vizinhos])
        if vivo is not None:
            ok &= vivo[arcos]
        fronteira = np.unique(vizinhos[ok])
        infectado[fronteira] = True
    return infectado


def _preparar(
    g: Graph, seeds: SeedSet, blocked: Optional[set[int]]
) -> tuple[np.ndarray, np.ndarray]:
    seeds.check(g)
    bloqueado = parse.mascara(blocked, g.node_count)
    sementes = np.array(seeds.indices, dtype=np.int64)
    conflito = sementes[bloqueado[sementes]]
    if conflito.size:
        raise IR_ContractError(
            f"Sementes não podem ser bloqueadas: {conflito.tolist()}.\n"
            "Remova as sementes do conjunto de nós bloqueados."
        )
    return sementes, bloqueado


def reachability(
    g: Graph,
    seeds: SeedSet,
    blocked: Optional[set[int]] = None,
) -> set[int]:
    """Nós alcançáveis a partir das sementes sem passar por nós bloqueados.

    Equivale à cascata independente com `p = 1`.

    Parameters
    ----------
    g : Graph
        Grafo de interações.

    seeds : SeedSet
        Nós tóxicos.

    blocked : set of int, optional
        Nós removidos antes da propagação.

    Returns
    -------
    set of int
        Nós alcançados, incluindo as sementes.

    Raises
    ------
    IR_ContractError
        Caso alguma semente esteja bloqueada.

    """

    sementes, bloqueado = _preparar(g, seeds, blocked)
    return set(np.flatnonzero(_espalhar(g, sementes, bloqueado)).tolist())


def cascade_runs(
    g: Graph,
    seeds: SeedSet,
    blocked: Optional[set[int]] = None,
    params: CascadeParams = CascadeParams(),
) -> Iterator[np.ndarray]:
    """Percorre as rodadas da cascata, devolvendo a máscara de infectados de cada uma.

    Cada rodada sorteia um número uniforme por arco (na ordem CSR) com o
    gerador `numpy.random.default_rng([master_seed, r])`; o arco está vivo
    se o número for menor que `p`. Os sorteios não dependem de `blocked`,
    portanto duas simulações com os mesmos parâmetros usam os mesmos
    números aleatórios.

    """

    sementes, bloqueado = _preparar(g, seeds, blocked)
    arcos = g.indices.size

    def rodada(r: int) -> np.ndarray:
        rng = np.random.default_rng([params.master_seed, r])
        vivo = rng.random(arcos) < params.p
        return _espalhar(g, sementes, bloqueado, vivo)

    def gerar() -> Iterator[np.ndarray]:
        if params.workers > 1:
            with ThreadPoolExecutor(max_workers=params.workers) as pool:
                yield from pool.map(rodada, range(params.runs))
        else:
            for r in range(params.runs):
                yield rodada(r)

    return gerar()


@validate_call(config=ConfigDict(arbitrary_types_allowed=True))
def simulate_ic(
    g: Graph,
    seeds: SeedSet,
    blocked: Optional[set[int]] = None,
    params: CascadeParams = CascadeParams(),
) -> SpreadOutcome:
    """Simulação de Monte Carlo da cascata independente.

    Em cada rodada os nós bloqueados são removidos e cada nó recém
    infectado tenta uma única vez infectar cada vizinho ainda não infectado,
    com probabilidade `p`.

    Parameters
    ----------
    g : Graph
        Grafo de interações.

    seeds : SeedSet
        Nós tóxicos, infectados em todas as rodadas.

    blocked : set of int, optional
        Nós imunizados: não podem ser infectados nem transmitir.

    params : CascadeParams
        Probabilidade, número de rodadas e semente.

    Returns
    -------
    SpreadOutcome
        Estatísticas das rodadas. O resultado é idêntico para entradas e
        parâmetros idênticos, independentemente de `workers`.

    Raises
    ------
    IR_ContractError
        Caso alguma semente esteja bloqueada.

    Examples
    --------
    Caminho 0-1-2-3-4 com semente 0 e nó 2 bloqueado:

    >>> g = Graph.from_edges([("0", "1"), ("1", "2"), ("2", "3"), ("3", "4")])
    >>> simulate_ic(g, SeedSet(members={0}), {2}, CascadeParams(p=1.0)).mean_infected
    2.0

    """

    frequencia = np.zeros(g.node_count, dtype=np.int64)
    contagens: list[int] = []
    for infectado in cascade_runs(g, seeds, blocked, params):
        frequencia += infectado
        contagens.append(int(infectado.sum()))

    runs = params.runs
    arr = np.asarray(contagens, dtype=np.float64)
    media = float(arr.sum() / runs)
    desvio = float(arr.std())
    logger.debug(
        "Cascata p=%.3f: %.3f infectados em média (%d rodadas)", params.p, media, runs
    )
    return SpreadOutcome(
        runs=runs,
        mean_infected=media,
        std_infected=desvio,
        ci95=1.96 * desvio / np.sqrt(runs),
        per_node_frequency={
            int(v): float(frequencia[v] / runs) for v in np.flatnonzero(frequencia)
        },
        per_run_counts=contagens,
    )
