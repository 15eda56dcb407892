"""Módulo espectral: autopar principal da matriz de adjacência.

O algoritmo NetShield depende apenas do maior autovalor `λ` e de seu
autovetor `u`, calculados aqui por iteração de potência sobre a matriz
esparsa do grafo.

Mini-Tutorial
-------------
>>> from ImunizacaoRedes import espectral, grafo
>>> g = grafo.load_edge_list("interacoes.tsv")
>>> e = espectral.power_iteration(g, tol=1e-10)
>>> e.lambda_, e.residual

"""

from ._potencia import EigenPair, dense_eigenpair, eigen_drop, power_iteration
