"""Módulo do grafo de interações entre usuários.

Os usuários são os nós e as interações (curtidas, comentários,
compartilhamentos etc.) são as arestas de um grafo não direcionado e simples.

Mini-Tutorial
-------------
1. Importe o módulo `grafo`.
>>> from ImunizacaoRedes import grafo

2. Carregue a lista de arestas.
>>> g = grafo.load_edge_list("interacoes.tsv")

3. Consulte graus e vizinhanças.
>>> grafo.degree(g, g.index_of("usuario_1"))

4. Extraia a vizinhança dos nós de interesse e exporte para o Graphviz.
>>> sub = grafo.influence_subgraph(g, {0, 1, 2}, radius=1)
>>> texto = grafo.export_dot(sub)

"""

from ._dot import export_dot
from ._grafo import Graph, degree, degree_sequence
from ._leitura import load_edge_list, write_edge_list
from ._subgrafo import hop_distances, influence_subgraph
from ._sementes import SeedSet
