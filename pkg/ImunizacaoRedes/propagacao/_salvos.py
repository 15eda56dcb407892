import logging
from typing import Literal, Optional

from pydantic import ConfigDict, Field, NonNegativeInt, validate_call

from ._cascata import CascadeParams, simulate_ic
from ..grafo import Graph, SeedSet
from ..utils import Resultado


logger = logging.getLogger(__name__)


class SavedReport(Resultado):
    """Nós salvos por um bloqueio: infectados sem bloqueio menos infectados com bloqueio.

    Attributes
    ----------
    baseline_mean : float
        Média de infectados sem nenhum nó bloqueado.
    blocked_mean : float
        Média de infectados com os nós bloqueados.
    saved : float
        `baseline_mean - blocked_mean`.
    k : int
        Orçamento (número de nós bloqueados).
    algorithm : str, optional
        Algoritmo que escolheu os nós bloqueados.
    blocked : list of int
        Nós bloqueados.
    blocked_ids : list of str
        Identificadores externos dos nós bloqueados.
    p : float
        Probabilidade da cascata.
    runs : int
        Rodadas de Monte Carlo em cada lado da comparação.

    """

    tipo: Literal["salvos"] = "salvos"
    baseline_mean: float
    blocked_mean: float
    saved: float
    k: NonNegativeInt
    algorithm: Optional[str] = None
    blocked: list[int] = Field(default_factory=list)
    blocked_ids: list[str] = Field(default_factory=list)
    p: float
    runs: int

    def __repr__(self) -> str:
        return (
            f"<ImunizacaoRedes.SavedReport: {self.algorithm or 'bloqueio'} "
            f"k={self.k} salvou {self.saved:.3f}>"
        )


@validate_call(config=ConfigDict(arbitrary_types_allowed=True))
def saved_nodes(
    g: Graph,
    seeds: SeedSet,
    blocked: Optional[set[int]] = None,
    params: CascadeParams = CascadeParams(),
    k: Optional[NonNegativeInt] = None,
    algorithm: Optional[str] = None,
) -> SavedReport:
    """Número de nós salvos por um conjunto de nós bloqueados.

    Executa `simulate_ic` duas vezes, sem bloqueio e com bloqueio, com os
    mesmos números aleatórios em cada rodada. Assim bloquear nunca aumenta
    o número de infectados de uma rodada e `saved >= 0` vale exatamente.

    Parameters
    ----------
    g : Graph
        Grafo de interações.

    seeds : SeedSet
        Nós tóxicos.

    blocked : set of int, optional
        Nós imunizados.

    params : CascadeParams
        Parâmetros da cascata.

    k : int, optional
        Orçamento informado no relatório. Se None, `len(blocked)`.

    algorithm : str, optional
        Nome do algoritmo informado no relatório.

    Returns
    -------
    SavedReport
        Médias dos dois lados e a diferença entre elas.

    Raises
    ------
    IR_ContractError
        Caso alguma semente esteja bloqueada.

    Examples
    --------
    Estrela com centro `c` e 5 folhas, semente em uma folha, centro bloqueado:

    >>> g = Graph.from_edges([("c", f"f{i}") for i in range(5)])
    >>> seeds = SeedSet(members={g.index_of("f0")})
    >>> saved_nodes(g, seeds, {g.index_of("c")}, CascadeParams(p=1.0)).saved
    5.0

    """

    blocked = set(blocked or ())
    base = simulate_ic(g, seeds, None, params)
    com_bloqueio = simulate_ic(g, seeds, blocked, params)
    ordem = sorted(blocked)
    relatorio = SavedReport(
        baseline_mean=base.mean_infected,
        blocked_mean=com_bloqueio.mean_infected,
        saved=base.mean_infected - com_bloqueio.mean_infected,
        k=len(blocked) if k is None else k,
        algorithm=algorithm,
        blocked=ordem,
        blocked_ids=g.ids_of(ordem),
        p=params.p,
        runs=params.runs,
    )
    logger.info("%r", relatorio)
    return relatorio
