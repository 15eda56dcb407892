import logging
from collections import deque
from functools import cached_property
from typing import Optional, Sequence

from ..grafo import Graph, SeedSet
from ..utils.errors import IR_ContractError


logger = logging.getLogger(__name__)


class DominatorTree:
    """Árvore de dominadores a partir de um super nó que reúne as sementes.

    Todas as sementes são fundidas em uma única raiz virtual, de índice
    `node_count`: a raiz herda as arestas de todas as sementes e as arestas
    entre sementes são descartadas. Um nó `w` domina `v` quando todo caminho
    da raiz até `v` passa por `w`.

    Parameters
    ----------
    node_count : int
        Número de nós do grafo.
    order : list of int
        Nós alcançáveis em ordem de busca em largura, começando pela raiz.
    idom : list of int
        Dominador imediato de cada índice (`-1` se não alcançável). A raiz é
        seu próprio dominador.

    Attributes
    ----------
    root : int
        Índice da raiz virtual (`node_count`).
    idom : dict[int, int]
        Dominador imediato de cada nó alcançável, exceto a raiz.
    subtree_size : dict[int, int]
        Número de nós dominados por cada nó, incluindo ele mesmo. Para a
        raiz, é o número de nós alcançáveis a partir dela.
    order : tuple of int
        Ordem de busca em largura a partir da raiz (sem a raiz).

    """

    def __init__(self, node_count: int, order: Sequence[int], idom: Sequence[int]):
        self.root = node_count
        self._idom = list(idom)
        self.order = tuple(order[1:])

        tamanho = [0] * (node_count + 1)
        for v in self.order:
            tamanho[v] = 1
        for v in reversed(self.order):
            pai = self._idom[v]
            if pai != self.root:
                tamanho[pai] += tamanho[v]
        tamanho[self.root] = len(self.order)
        self._tamanho = tamanho

    def __repr__(self) -> str:
        return (
            f"<ImunizacaoRedes.DominatorTree: {len(self.order)} nós alcançáveis, "
            f"{len(self.children(self.root))} filhos da raiz>"
        )

    @cached_property
    def idom(self) -> dict[int, int]:
        return {v: self._idom[v] for v in self.order}

    @cached_property
    def subtree_size(self) -> dict[int, int]:
        tamanhos = {v: self._tamanho[v] for v in self.order}
        tamanhos[self.root] = self._tamanho[self.root]
        return tamanhos

    @cached_property
    def reachable(self) -> frozenset[int]:
        return frozenset(self.order)

    @cached_property
    def _filhos(self) -> dict[int, list[int]]:
        filhos: dict[int, list[int]] = {self.root: []}
        for v in self.order:
            filhos.setdefault(v, [])
            filhos.setdefault(self._idom[v], []).append(v)
        return filhos

    def children(self, v: int) -> list[int]:
        """Nós cujo dominador imediato é `v`, em ordem crescente de índice."""

        return sorted(self._filhos.get(v, []))

    def dominates(self, w: int, v: int) -> bool:
        """Se `w` domina `v` (todo nó domina a si mesmo)."""

        if v not in self.reachable:
            return False
        while v != self.root:
            if v == w:
                return True
            v = self._idom[v]
        return w == self.root


def _intersect(a: int, b: int, idom: list[int], numero: list[int]) -> int:
    while a != b:
        while numero[a] > numero[b]:
            a = idom[a]
        while numero[b] > numero[a]:
            b = idom[b]
    return a


def _dominadores(
    vizinhos: list[list[int]],
    semente: list[bool],
    removido: Optional[list[bool]] = None,
) -> DominatorTree:
    """Dominadores imediatos pelo algoritmo iterativo de interseções.

    Cada aresta não direcionada vale como dois arcos. Os nós são numerados
    pela busca em largura a partir da raiz; o dominador imediato de um nó
    sempre tem número menor que o dele, o que garante o término de
    `_intersect`.

    """

    n = len(vizinhos)
    raiz = n
    bloqueado = list(semente) if removido is None else [
        s or r for s, r in zip(semente, removido)
    ]

    numero = [-1] * (n + 1)
    idom = [-1] * (n + 1)
    numero[raiz] = 0
    idom[raiz] = raiz
    ordem = [raiz]

    primeiros = sorted(
        {w for s in range(n) if semente[s] for w in vizinhos[s] if not bloqueado[w]}
    )
    for w in primeiros:
        numero[w] = len(ordem)
        idom[w] = raiz
        ordem.append(w)

    fila = deque(primeiros)
    while fila:
        v = fila.popleft()
        for w in vizinhos[v]:
            if numero[w] < 0 and not bloqueado[w]:
                numero[w] = len(ordem)
                idom[w] = v
                ordem.append(w)
                fila.append(w)

    # Predecessores no grafo direcionado a partir da raiz.
    predecessores: list[list[int]] = [[] for _ in range(n + 1)]
    for v in ordem[1:]:
        preds = predecessores[v]
        ligado_a_raiz = False
        for w in vizinhos[v]:
            if semente[w]:
                ligado_a_raiz = True
            elif numero[w] >= 0:
                preds.append(w)
        if ligado_a_raiz:
            preds.append(raiz)

    passes = 0
    mudou = True
    while mudou:
        mudou = False
        passes += 1
        for v in ordem[1:]:
            preds = predecessores[v]
            novo = -1
            for p in preds:
                if numero[p] < numero[v] or p == raiz:
                    novo = p
                    break
            for p in preds:
                if p != novo:
                    novo = _intersect(p, novo, idom, numero)
            if idom[v] != novo:
                idom[v] = novo
                mudou = True

    logger.debug(
        "Árvore de dominadores: %d nós alcançáveis, %d passes", len(ordem) - 1, passes
    )
    return DominatorTree(n, ordem, idom)


def _vizinhos(g: Graph) -> list[list[int]]:
    indices = g.indices.tolist()
    indptr = g.indptr.tolist()
    return [indices[indptr[v] : indptr[v + 1]] for v in range(g.node_count)]


def _mascara_sementes(g: Graph, seeds: SeedSet) -> list[bool]:
    if len(seeds) == 0:
        raise IR_ContractError(
            "O DAVA requer nós semente.\n"
            "Informe ao menos um nó tóxico no conjunto de sementes."
        )
    seeds.check(g)
    semente = [False] * g.node_count
    for s in seeds.members:
        semente[s] = True
    return semente


def build_dominator_tree(g: Graph, seeds: SeedSet) -> DominatorTree:
    """Constrói a árvore de dominadores do grafo a partir das sementes.

    Parameters
    ----------
    g : Graph
        Grafo de interações.

    seeds : SeedSet
        Nós tóxicos. Todos são fundidos em uma única raiz virtual.

    Returns
    -------
    DominatorTree
        Dominadores imediatos e tamanhos das subárvores de todos os nós
        alcançáveis a partir da raiz.

    Raises
    ------
    IR_ContractError
        Caso o conjunto de sementes seja vazio.

    Examples
    --------
    Cadeia s-a-b com semente `s`:

    >>> g = Graph.from_edges([("s", "a"), ("a", "b")])
    >>> t = build_dominator_tree(g, SeedSet(members={0}))
    >>> t.idom[1] == t.root, t.idom[2]
    (True, 1)

    """

    semente = _mascara_sementes(g, seeds)
    return _dominadores(_vizinhos(g), semente)
