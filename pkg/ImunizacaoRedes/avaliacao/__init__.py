"""Módulo de avaliação: benchmark de tempo e de nós salvos.

Reproduz o formato de uma tabela de tempo de execução por orçamento e de
uma comparação de nós salvos por algoritmo, além de gerar grafos
sintéticos para testes.

Mini-Tutorial
-------------
>>> from ImunizacaoRedes import avaliacao
>>> g = avaliacao.generate_graph("preferential-attachment", n=5000, param=2, seed=1)
>>> rel = avaliacao.run_benchmark(g, seeds, ["HighestDegree", "NetShield", "DAVA"], [10, 15, 20, 25])
>>> rel.get("pandas")
>>> avaliacao.linear_fit(rel, "DAVA")["r2"]

"""

from ._benchmark import BenchReport, BenchRow, linear_fit, run_benchmark
from ._geradores import caterpillar_seeds, generate_graph
