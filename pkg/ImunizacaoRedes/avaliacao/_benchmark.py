import logging
import statistics
import time
from os import PathLike
from typing import Any, Literal, Optional

import numpy as np
import pandas as pd
from pydantic import BaseModel, ConfigDict, Field, PositiveInt, validate_call

from ..espectral import power_iteration
from ..grafo import Graph, SeedSet
from ..imunizacao import immunize
from ..propagacao import CascadeParams, saved_nodes
from ..utils import Algoritmo, Escopo, Resultado, Variante, parse
from ..utils.errors import IR_InputError
from ..utils.padroes import PADROES


logger = logging.getLogger(__name__)

_COLUNAS_CSV = ["algorithm", "k", "elapsed_seconds", "saved_nodes"]


class BenchRow(BaseModel):
    """Uma célula do benchmark: um algoritmo com um orçamento."""

    model_config = ConfigDict(frozen=True)

    algorithm: Algoritmo
    k: int
    elapsed_seconds: float = Field(default=0.0, ge=0.0)
    saved_nodes: Optional[float] = None
    error: Optional[str] = None


class BenchReport(Resultado):
    """Tempo de execução e nós salvos para cada par (algoritmo, k).

    Attributes
    ----------
    rows : list of BenchRow
        Uma linha por par (algoritmo, k), na ordem dos algoritmos e dos
        orçamentos pedidos.
    graph_meta : dict
        Metadados do grafo (`nodes`, `edges`, `seeds`, `generator`, `seed`) e
        tempos medidos à parte (`load_seconds`, `eigen_seconds`).

    """

    tipo: Literal["bench"] = "bench"
    rows: list[BenchRow] = Field(default_factory=list)
    graph_meta: dict[str, Any] = Field(default_factory=dict)

    @property
    def pandas(self) -> pd.DataFrame:
        return pd.DataFrame(
            [r.model_dump() for r in self.rows],
            columns=_COLUNAS_CSV + ["error"],
        )

    def elapsed(self, algorithm: Algoritmo) -> list[float]:
        return [r.elapsed_seconds for r in self.rows if r.algorithm == algorithm]

    def to_csv(self, path: str | PathLike) -> None:
        """Grava as linhas como CSV com as colunas `algorithm,k,elapsed_seconds,saved_nodes`."""

        self.pandas[_COLUNAS_CSV].to_csv(path, index=False)


@validate_call(config=ConfigDict(arbitrary_types_allowed=True))
def run_benchmark(
    g: Graph,
    seeds: SeedSet,
    algorithms: list[Algoritmo],
    k_list: list[PositiveInt],
    params: CascadeParams = CascadeParams(),
    repetitions: PositiveInt = PADROES["repeticoes"],
    variant: Variante = PADROES["variant"],
    scope: Escopo = PADROES["scope"],
    radius: int = PADROES["radius"],
    evaluate: bool = True,
    graph_meta: Optional[dict[str, Any]] = None,
) -> BenchReport:
    """Mede o tempo de seleção e os nós salvos de cada algoritmo para cada orçamento.

    Cada célula é executada `repetitions` vezes, em sequência, e o tempo
    reportado é a mediana. Apenas a seleção é cronometrada; o cálculo do
    autopar faz parte da seleção do NetShield. A leitura do grafo e um
    cálculo avulso do autopar são reportados em `graph_meta`.

    Parameters
    ----------
    g : Graph
        Grafo de interações.

    seeds : SeedSet
        Nós tóxicos.

    algorithms : list of {'HighestDegree', 'NetShield', 'DAVA'}
        Algoritmos comparados.

    k_list : list of int
        Orçamentos, em ordem estritamente crescente.

    params : CascadeParams
        Parâmetros da cascata usada para contar os nós salvos.

    repetitions : int, default=3
        Repetições de cada célula.

    variant : {'iterative', 'fast'}, default='iterative'
        Variante do DAVA.

    scope : {'full', 'subgraph'}, default='full'
        Grafo em que a seleção é feita.

    radius : int, default=1
        Raio do subgrafo tóxico quando `scope='subgraph'`.

    evaluate : bool, default=True
        Se False, não calcula os nós salvos.

    graph_meta : dict, optional
        Metadados adicionais (gerador, semente, `load_seconds`...).

    Returns
    -------
    BenchReport
        Uma linha por par (algoritmo, k). Falhas de um algoritmo ficam
        registradas na coluna `error` da linha, sem afetar as demais.

    Examples
    --------
    >>> rel = run_benchmark(g, seeds, ["HighestDegree", "NetShield", "DAVA"], [10, 15, 20, 25])
    >>> len(rel.rows)
    12
    >>> rel.to_csv("tabela.csv")

    """

    k_list = parse.k_list(k_list)
    meta: dict[str, Any] = {
        "nodes": g.node_count,
        "edges": g.edge_count,
        "seeds": len(seeds),
    }
    meta.update(graph_meta or {})

    if "NetShield" in algorithms:
        inicio = time.perf_counter()
        try:
            power_iteration(g)
        except ArithmeticError as erro:
            logger.warning("Autopar não convergiu: %s", erro)
        meta["eigen_seconds"] = time.perf_counter() - inicio

    rows: list[BenchRow] = []
    for algorithm in algorithms:
        for k in k_list:
            try:
                tempos = []
                for _ in range(repetitions):
                    r = immunize(
                        g,
                        algorithm,
                        k,
                        seeds=seeds,
                        scope=scope,
                        radius=radius,
                        variant=variant,
                    )
                    tempos.append(r.elapsed_seconds)
                salvos = None
                if evaluate:
                    salvos = saved_nodes(
                        g, seeds, set(r.selected), params, k=k, algorithm=algorithm
                    ).saved
                row = BenchRow(
                    algorithm=algorithm,
                    k=k,
                    elapsed_seconds=statistics.median(tempos),
                    saved_nodes=salvos,
                )
            except Exception as erro:
                logger.warning("Falha em %s com k=%d: %s", algorithm, k, erro)
                row = BenchRow(algorithm=algorithm, k=k, error=str(erro))
            logger.info(
                "%s k=%d: %.4fs, salvos=%s",
                algorithm,
                k,
                row.elapsed_seconds,
                row.saved_nodes,
            )
            rows.append(row)

    return BenchReport(rows=rows, graph_meta=meta)


def linear_fit(report: BenchReport, algorithm: Algoritmo) -> dict[str, float]:
    """Ajuste linear por mínimos quadrados do tempo em função de `k`.

    Returns
    -------
    dict[str, float]
        `slope`, `intercept` e `r2` (coeficiente de determinação).

    Raises
    ------
    IR_InputError
        Caso o algoritmo tenha menos de dois valores distintos de `k` sem erro.

    """

    linhas = [r for r in report.rows if r.algorithm == algorithm and r.error is None]
    x = np.array([r.k for r in linhas], dtype=np.float64)
    y = np.array([r.elapsed_seconds for r in linhas], dtype=np.float64)
    if np.unique(x).size < 2:
        raise IR_InputError(
            f"O ajuste de {algorithm} exige ao menos dois valores de k sem erro; "
            f"encontrados {np.unique(x).size}."
        )
    slope, intercept = np.polyfit(x, y, 1)
    residuo = y - (slope * x + intercept)
    total = float(((y - y.mean()) ** 2).sum())
    r2 = 1.0 - float((residuo**2).sum()) / total if total > 0 else 1.0
    return {"slope": float(slope), "intercept": float(intercept), "r2": r2}
