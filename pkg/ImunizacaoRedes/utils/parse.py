"""Funções para padronização de parâmetros entre os módulos.

Padroniza nomes de algoritmos, listas de orçamentos e conjuntos de nós,
gerando `Exceptions` especiais do módulo `utils.errors`.

"""

from typing import Iterable, Optional

import numpy as np

from . import errors
from .padroes import ALIASES_ALGORITMOS
from .typing import Algoritmo


def algoritmo(nome: str) -> Algoritmo:
    """Converte o nome de um algoritmo em seu nome canônico.
    Suporta abreviaturas, hífens e case sensibility.

    Parameters
    ----------
    nome : str
        Nome ou abreviatura do algoritmo, por exemplo `'dava'`, `'hd'`,
        `'NetShield'` ou `'highest-degree'`.

    Returns
    -------
    {'HighestDegree', 'NetShield', 'DAVA'}
        Nome canônico do algoritmo.

    Raises
    ------
    IR_InputError
        Caso o algoritmo não seja reconhecido.

    """

    chave = str(nome).strip().lower().replace("_", "-")
    try:
        return ALIASES_ALGORITMOS[chave]
    except KeyError:
        raise errors.IR_InputError(
            f"Algoritmo {nome!r} não identificado.\n"
            "Utilize 'highest-degree', 'netshield' ou 'dava'."
        )


def k_list(valor: str | Iterable[int]) -> list[int]:
    """Padroniza uma lista de orçamentos.

    Parameters
    ----------
    valor : str or iterable of int
        Lista de inteiros ou string separada por vírgulas, como `'10,15,20'`.

    Returns
    -------
    list of int
        Orçamentos positivos em ordem estritamente crescente.

    Raises
    ------
    IR_InputError
        Caso a lista seja vazia, contenha valores não positivos ou não seja
        estritamente crescente.

    """

    if isinstance(valor, str):
        try:
            ks = [int(x) for x in valor.split(",") if x.strip()]
        except ValueError:
            raise errors.IR_InputError(
                f"Lista de orçamentos inválida: {valor!r}.\n"
                "Utilize inteiros separados por vírgula, como '10,15,20,25'."
            )
    else:
        ks = [int(x) for x in valor]

    if len(ks) == 0:
        raise errors.IR_InputError("A lista de orçamentos não pode ser vazia.")
    if any(k <= 0 for k in ks):
        raise errors.IR_InputError("Todos os orçamentos devem ser positivos.")
    if any(a >= b for a, b in zip(ks, ks[1:])):
        raise errors.IR_InputError(
            "A lista de orçamentos deve ser estritamente crescente."
        )
    return ks


def nos(nodes: Optional[Iterable[int]], node_count: int) -> np.ndarray:
    """Verifica se os índices de nós pertencem ao grafo.

    Parameters
    ----------
    nodes : iterable of int, optional
        Índices densos dos nós. `None` equivale a um conjunto vazio.
    node_count : int
        Número de nós do grafo.

    Returns
    -------
    numpy.ndarray
        Índices ordenados e sem repetição.

    Raises
    ------
    IR_NodeIndexError
        Caso algum índice esteja fora de `[0, node_count)`.

    """

    if nodes is None:
        return np.empty(0, dtype=np.int64)
    arr = np.unique(np.fromiter((int(v) for v in nodes), dtype=np.int64))
    if arr.size and (arr[0] < 0 or arr[-1] >= node_count):
        fora = [int(v) for v in arr if v < 0 or v >= node_count]
        raise errors.IR_NodeIndexError(
            f"Nós fora do intervalo [0, {node_count}): {fora}"
        )
    return arr


def mascara(nodes: Optional[Iterable[int]], node_count: int) -> np.ndarray:
    """Converte um conjunto de nós em uma máscara booleana de tamanho `node_count`."""

    m = np.zeros(node_count, dtype=bool)
    m[nos(nodes, node_count)] = True
    return m
