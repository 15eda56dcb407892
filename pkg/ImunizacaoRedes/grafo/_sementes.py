from typing import Iterable, Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from ._grafo import Graph
from ..utils.errors import IR_NodeIndexError


class SeedSet(BaseModel):
    """Nós tóxicos apontados pelo detector externo de conteúdo nocivo.

    Os nós tóxicos são as sementes da propagação e o ponto de partida do
    algoritmo DAVA.

    Parameters
    ----------
    members : frozenset of int
        Índices densos dos nós tóxicos.

    scores : dict[int, float], optional
        Confiança do detector para cada membro, em `[0, 1]`.

    threshold : float, default=0.0
        Limiar de confiança utilizado na seleção. Todo membro com confiança
        conhecida tem `score >= threshold`.

    Examples
    --------
    >>> s = SeedSet(members={0, 3})
    >>> s.indices
    [0, 3]

    """

    model_config = ConfigDict(frozen=True)

    members: frozenset[int]
    scores: Optional[dict[int, float]] = None
    threshold: float = Field(default=0.0, ge=0.0, le=1.0)

    @model_validator(mode="after")
    def _scores_acima_do_limiar(self) -> "SeedSet":
        if any(v < 0 for v in self.members):
            raise ValueError("Índices de nós não podem ser negativos.")
        if self.scores is not None:
            for v in self.members:
                score = self.scores.get(v)
                if score is None or not 0.0 <= score <= 1.0:
                    raise ValueError(f"Confiança ausente ou fora de [0, 1] para o nó {v}.")
                if score < self.threshold:
                    raise ValueError(
                        f"O nó {v} tem confiança {score} abaixo do limiar {self.threshold}."
                    )
        return self

    @classmethod
    def from_ids(cls, g: Graph, node_ids: Iterable[str]) -> "SeedSet":
        """Conjunto de sementes a partir de identificadores externos."""

        return cls(members=frozenset(g.indices_of(node_ids)))

    @property
    def indices(self) -> list[int]:
        return sorted(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, v: int) -> bool:
        return v in self.members

    def check(self, g: Graph) -> "SeedSet":
        """Verifica se todos os membros pertencem ao grafo `g`.

        Raises
        ------
        IR_NodeIndexError
            Caso algum membro seja maior ou igual a `g.node_count`.

        """

        fora = sorted(v for v in self.members if v >= g.node_count)
        if fora:
            raise IR_NodeIndexError(
                f"Sementes fora do grafo ({g.node_count} nós): {fora}"
            )
        return self
