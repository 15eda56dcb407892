"""Linha de comando `imunizar` e leitura/gravação de arquivos.

Comandos
--------
immunize
    Seleciona `k` nós para bloqueio com um dos três algoritmos.
simulate
    Simula a cascata independente a partir das sementes.
evaluate
    Seleciona `k` nós e conta os nós salvos pelo bloqueio.
bench
    Tempo de execução e nós salvos para cada algoritmo e orçamento.
subgraph
    Exporta em DOT o subgrafo de influência dos nós escolhidos.

Mini-Tutorial
-------------
.. code-block:: console

    $ imunizar immunize --graph interacoes.tsv --seeds rotulos.csv --algo dava --k 10
    $ imunizar bench --graph interacoes.tsv --seeds rotulos.csv --k-list 10,15,20,25 --csv tabela.csv
    $ imunizar subgraph --graph interacoes.tsv --seeds rotulos.csv --top 10 --dot vizinhanca.dot

"""

from ._argumentos import parse_command
from ._config import RunConfig
from ._main import main
from ._saida import read_result, write_result
from ._sementes import load_seed_labels
