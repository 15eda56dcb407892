from pathlib import Path
from typing import Optional

from pydantic import (
    BaseModel,
    ConfigDict,
    Field,
    NonNegativeInt,
    PositiveInt,
    field_validator,
    model_validator,
)

from ..utils import Algoritmo, Comando, Escopo, Variante, parse
from ..utils.padroes import PADROES


class RunConfig(BaseModel):
    """Configuração validada de uma execução pela linha de comando.

    Attributes
    ----------
    command : {'immunize', 'simulate', 'evaluate', 'bench', 'subgraph'}
        Comando executado.
    graph_path : pathlib.Path
        Lista de arestas.
    seeds_path : pathlib.Path, optional
        Tabela `id,score` do detector de conteúdo nocivo.
    algorithms : list of {'HighestDegree', 'NetShield', 'DAVA'}
        Algoritmos. Os comandos `immunize`, `evaluate` e `subgraph` usam
        apenas o primeiro.
    k : int, optional
        Orçamento (`immunize`, `evaluate`).
    k_list : list of int
        Orçamentos do `bench`.
    top : int
        Número de nós destacados pelo comando `subgraph`.
    threshold : float
        Limiar de confiança das sementes, em `[0, 1]`.
    p, runs, master_seed, workers
        Parâmetros da cascata independente.
    scope : {'full', 'subgraph'}
        Grafo em que a seleção é feita.
    radius : int
        Raio do subgrafo tóxico e do subgrafo de influência.
    variant : {'iterative', 'fast'}
        Variante do DAVA.
    blocked : list of str
        Identificadores bloqueados no comando `simulate`.
    repetitions : int
        Repetições de cada célula do `bench`.
    output, csv_path, dot_path : pathlib.Path, optional
        Arquivos de saída. Sem `output`, o resultado vai para a saída padrão.
    delimiter : str, optional
        Separador da lista de arestas.
    verbose : int
        Nível de verbosidade do log.

    """

    model_config = ConfigDict(frozen=True)

    command: Comando
    graph_path: Path
    seeds_path: Optional[Path] = None
    algorithms: list[Algoritmo] = Field(default_factory=lambda: ["DAVA"])
    k: Optional[PositiveInt] = None
    k_list: list[PositiveInt] = Field(default_factory=lambda: list(PADROES["k_list"]))
    top: PositiveInt = PADROES["top"]
    threshold: float = Field(default=PADROES["threshold"], ge=0.0, le=1.0)
    p: float = Field(default=PADROES["p"], ge=0.0, le=1.0)
    runs: PositiveInt = PADROES["runs"]
    master_seed: NonNegativeInt = PADROES["master_seed"]
    workers: PositiveInt = PADROES["workers"]
    scope: Escopo = PADROES["scope"]
    radius: NonNegativeInt = PADROES["radius"]
    variant: Variante = PADROES["variant"]
    blocked: list[str] = Field(default_factory=list)
    repetitions: PositiveInt = PADROES["repeticoes"]
    output: Optional[Path] = None
    csv_path: Optional[Path] = None
    dot_path: Optional[Path] = None
    delimiter: Optional[str] = None
    verbose: NonNegativeInt = 0

    @field_validator("algorithms", mode="before")
    @classmethod
    def _algoritmos(cls, valor):
        if isinstance(valor, str):
            valor = valor.split(",")
        return [parse.algoritmo(v) for v in valor]

    @field_validator("k_list", mode="before")
    @classmethod
    def _k_list(cls, valor):
        return parse.k_list(valor)

    @field_validator("graph_path", "seeds_path")
    @classmethod
    def _caminho_nao_vazio(cls, valor: Optional[Path]) -> Optional[Path]:
        if valor is not None and str(valor).strip() in ("", "."):
            raise ValueError("O caminho não pode ser vazio.")
        return valor

    @model_validator(mode="after")
    def _requisitos_do_comando(self) -> "RunConfig":
        if self.command in ("immunize", "evaluate") and self.k is None:
            raise ValueError(f"O comando '{self.command}' requer --k.")
        precisa_sementes = (
            self.command in ("simulate", "evaluate", "bench")
            or (self.command in ("immunize", "subgraph") and self.algorithm == "DAVA")
            or self.scope == "subgraph"
        )
        if precisa_sementes and self.seeds_path is None:
            raise ValueError(f"O comando '{self.command}' requer --seeds.")
        return self

    @property
    def algorithm(self) -> Algoritmo:
        return self.algorithms[0]
