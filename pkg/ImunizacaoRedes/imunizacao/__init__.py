"""Módulo de imunização de redes com orçamento.

Três estratégias de seleção de `k` nós para bloqueio:

- `highest_degree`: os `k` nós de maior grau (referência ingênua);
- `netshield`: estratégia proativa, gulosa sobre o shield value calculado
  a partir do autopar principal da matriz de adjacência;
- `dava`: estratégia contra-ativa, baseada na árvore de dominadores
  enraizada nas sementes tóxicas.

Mini-Tutorial
-------------
>>> from ImunizacaoRedes import grafo, imunizacao
>>> g = grafo.load_edge_list("interacoes.tsv")
>>> seeds = grafo.SeedSet.from_ids(g, ["u1", "u7"])
>>> r = imunizacao.immunize(g, "DAVA", k=10, seeds=seeds)
>>> r.selected_ids

"""

from ._dava import dava
from ._despacho import immunize
from ._dominadores import DominatorTree, build_dominator_tree
from ._grau import highest_degree
from ._netshield import netshield, shield_value
from ._resultado import ImmunizationResult
