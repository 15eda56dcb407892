import time
from typing import Literal, Optional

import pandas as pd
from pydantic import Field, NonNegativeFloat, NonNegativeInt, model_validator

from ..grafo import Graph
from ..utils import Algoritmo, Resultado


class ImmunizationResult(Resultado):
    """Nós escolhidos por um algoritmo de imunização com orçamento `k`.

    Attributes
    ----------
    algorithm : {'HighestDegree', 'NetShield', 'DAVA'}
        Algoritmo utilizado.
    k : int
        Orçamento, isto é, o número máximo de nós bloqueados.
    selected : list of int
        Índices densos dos nós escolhidos, na ordem de seleção.
    selected_ids : list of str
        Identificadores externos dos nós escolhidos, na mesma ordem.
    node_scores : dict[int, float]
        Pontuação de cada nó no momento da seleção: grau (HighestDegree),
        ganho marginal de shield value (NetShield) ou benefício na árvore
        de dominadores (DAVA).
    elapsed_seconds : float
        Tempo de parede da seleção.
    variant : {'iterative', 'fast'}, optional
        Variante do DAVA.
    scope : {'full', 'subgraph'}
        Grafo em que a seleção foi feita.

    """

    tipo: Literal["imunizacao"] = "imunizacao"
    algorithm: Algoritmo
    k: NonNegativeInt
    selected: list[int] = Field(default_factory=list)
    selected_ids: list[str] = Field(default_factory=list)
    node_scores: dict[int, float] = Field(default_factory=dict)
    elapsed_seconds: NonNegativeFloat = 0.0
    variant: Optional[Literal["iterative", "fast"]] = None
    scope: Literal["full", "subgraph"] = "full"

    @model_validator(mode="after")
    def _sem_repeticoes(self) -> "ImmunizationResult":
        if len(set(self.selected)) != len(self.selected):
            raise ValueError("A seleção contém nós repetidos.")
        if len(self.selected) > self.k:
            raise ValueError("A seleção excede o orçamento `k`.")
        if self.selected_ids and len(self.selected_ids) != len(self.selected):
            raise ValueError("`selected_ids` e `selected` têm tamanhos diferentes.")
        return self

    def __repr__(self) -> str:
        return (
            f"<ImunizacaoRedes.ImmunizationResult: {self.algorithm} k={self.k} "
            f"{self.selected_ids or self.selected}>"
        )

    @property
    def pandas(self) -> pd.DataFrame:
        return pd.DataFrame(
            {
                "ordem": range(1, len(self.selected) + 1),
                "no": self.selected,
                "id": self.selected_ids or [None] * len(self.selected),
                "score": [self.node_scores.get(v) for v in self.selected],
            }
        )


def _montar(
    g: Graph,
    algorithm: Algoritmo,
    k: int,
    selected: list[int],
    scores: dict[int, float],
    inicio: float,
    **extras,
) -> ImmunizationResult:
    return ImmunizationResult(
        algorithm=algorithm,
        k=k,
        selected=[int(v) for v in selected],
        selected_ids=g.ids_of(selected),
        node_scores={int(v): float(s) for v, s in scores.items()},
        elapsed_seconds=max(time.perf_counter() - inicio, 0.0),
        **extras,
    )
