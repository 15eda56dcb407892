"""Módulo de simulação da propagação de conteúdo nocivo.

A propagação segue o modelo de cascata independente: cada nó recém
infectado tem uma única chance de infectar cada vizinho, com probabilidade
`p`. Os nós bloqueados pela imunização são removidos antes da simulação.

Mini-Tutorial
-------------
>>> from ImunizacaoRedes import propagacao
>>> params = propagacao.CascadeParams(p=0.1, runs=1000, master_seed=42)
>>> propagacao.simulate_ic(g, seeds, blocked={3, 8}, params=params)
>>> propagacao.saved_nodes(g, seeds, blocked={3, 8}, params=params).saved

"""

from ._cascata import (
    CascadeParams,
    SpreadOutcome,
    cascade_runs,
    reachability,
    simulate_ic,
)
from ._salvos import SavedReport, saved_nodes
