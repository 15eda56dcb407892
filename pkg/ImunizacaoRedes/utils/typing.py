from typing import Literal, Union

from pandas import DataFrame


Algoritmo = Literal["HighestDegree", "NetShield", "DAVA"]

Comando = Literal["immunize", "simulate", "evaluate", "bench", "subgraph"]

Escopo = Literal["full", "subgraph"]

Formato = Literal["json", "pandas"]

Modelo = Literal["preferential-attachment", "random-uniform", "caterpillar-local-spread"]

Variante = Literal["iterative", "fast"]

Output = Union[DataFrame, dict]
