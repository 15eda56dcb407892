from functools import cached_property
from typing import Iterable, Iterator, Optional

import numpy as np
from scipy import sparse

from ..utils import parse
from ..utils.errors import IR_NodeIndexError, IR_UnknownIdError


class Graph:
    """Grafo não direcionado e simples de usuários (nós) e interações (arestas).

    Os nós recebem índices densos em `[0, node_count)`. A adjacência é
    guardada em formato CSR: os vizinhos do nó `v` são
    `indices[indptr[v]:indptr[v + 1]]`, em ordem estritamente crescente.

    Objetos `Graph` são imutáveis após a construção e podem ser lidos por
    várias threads ao mesmo tempo.

    Parameters
    ----------
    ids : list of str
        Identificador externo de cada nó, na ordem dos índices densos.
    indptr : numpy.ndarray
        Ponteiros de linha CSR, de tamanho `node_count + 1`.
    indices : numpy.ndarray
        Vizinhos concatenados, simétricos, ordenados e sem laços.
    dropped_self_loops : int, default=0
        Quantidade de laços descartados na leitura.
    collapsed_duplicates : int, default=0
        Quantidade de arestas repetidas descartadas na leitura.

    Attributes
    ----------
    node_count : int
        Número de nós.
    edge_count : int
        Número de arestas não direcionadas.
    id_map : dict[str, int]
        Identificador externo -> índice denso.
    ids : tuple of str
        Índice denso -> identificador externo.
    dropped_self_loops : int
        Laços descartados.
    collapsed_duplicates : int
        Arestas repetidas descartadas.

    Properties
    ----------
    matrix : scipy.sparse.csr_matrix
        Matriz de adjacência esparsa (valores 1.0).

    Examples
    --------
    >>> g = Graph.from_edges([("a", "b"), ("b", "c")])
    >>> g.node_count, g.edge_count
    (3, 2)
    >>> degree(g, g.index_of("b"))
    2

    """

    def __init__(
        self,
        ids: list[str],
        indptr: np.ndarray,
        indices: np.ndarray,
        dropped_self_loops: int = 0,
        collapsed_duplicates: int = 0,
    ):
        self.ids = tuple(ids)
        self.id_map = {x: i for i, x in enumerate(self.ids)}
        self.indptr = np.asarray(indptr, dtype=np.int64)
        self.indices = np.asarray(indices, dtype=np.int64)
        self.indptr.setflags(write=False)
        self.indices.setflags(write=False)
        self.node_count = len(self.ids)
        self.edge_count = int(self.indices.size // 2)
        self.dropped_self_loops = dropped_self_loops
        self.collapsed_duplicates = collapsed_duplicates

    def __repr__(self) -> str:
        return (
            f"<ImunizacaoRedes.Graph: {self.node_count} nós, "
            f"{self.edge_count} arestas>"
        )

    def __len__(self) -> int:
        return self.node_count

    def __eq__(self, other: object) -> bool:
        """Igualdade por conjunto de arestas sobre identificadores externos."""

        if not isinstance(other, Graph):
            return NotImplemented
        return set(self.ids) == set(other.ids) and self.edge_set() == other.edge_set()

    @classmethod
    def from_arcs(
        cls,
        ids: list[str],
        src: np.ndarray,
        dst: np.ndarray,
        dropped_self_loops: int = 0,
        collapsed_duplicates: int = 0,
    ) -> "Graph":
        """Constrói o grafo a partir de pares de índices já sem laços.

        Os pares são simetrizados e deduplicados aqui; os contadores apenas
        são repassados.

        """

        n = len(ids)
        src = np.asarray(src, dtype=np.int64)
        dst = np.asarray(dst, dtype=np.int64)
        rows = np.concatenate([src, dst])
        cols = np.concatenate([dst, src])
        if rows.size:
            chaves = np.unique(rows * max(n, 1) + cols)
            rows, cols = np.divmod(chaves, max(n, 1))
        indptr = np.zeros(n + 1, dtype=np.int64)
        np.add.at(indptr, rows + 1, 1)
        np.cumsum(indptr, out=indptr)
        return cls(ids, indptr, cols, dropped_self_loops, collapsed_duplicates)

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[str, str]]) -> "Graph":
        """Constrói um grafo a partir de pares de identificadores externos.

        Os índices seguem a ordem de primeira aparição. Laços e repetições
        são descartados e contados, como em `load_edge_list`.

        """

        ids: dict[str, int] = {}
        vistos: set[tuple[int, int]] = set()
        src, dst = [], []
        lacos = duplicadas = 0
        for a, b in edges:
            i = ids.setdefault(str(a), len(ids))
            j = ids.setdefault(str(b), len(ids))
            if i == j:
                lacos += 1
                continue
            par = (i, j) if i < j else (j, i)
            if par in vistos:
                duplicadas += 1
                continue
            vistos.add(par)
            src.append(par[0])
            dst.append(par[1])
        return cls.from_arcs(list(ids), src, dst, lacos, duplicadas)

    @cached_property
    def matrix(self) -> sparse.csr_matrix:
        data = np.ones(self.indices.size, dtype=np.float64)
        return sparse.csr_matrix(
            (data, self.indices, self.indptr),
            shape=(self.node_count, self.node_count),
        )

    @cached_property
    def degrees(self) -> np.ndarray:
        d = np.diff(self.indptr)
        d.setflags(write=False)
        return d

    def neighbors(self, v: int) -> np.ndarray:
        """Vizinhos do nó `v` em ordem crescente."""

        self._check(v)
        return self.indices[self.indptr[v] : self.indptr[v + 1]]

    def index_of(self, node_id: str) -> int:
        """Índice denso de um identificador externo."""

        try:
            return self.id_map[node_id]
        except KeyError:
            raise IR_UnknownIdError([node_id])

    def indices_of(self, node_ids: Iterable[str]) -> list[int]:
        """Índices densos de vários identificadores externos.

        Raises
        ------
        IR_UnknownIdError
            Listando todos os identificadores desconhecidos de uma só vez.

        """

        node_ids = list(node_ids)
        faltando = [x for x in node_ids if x not in self.id_map]
        if faltando:
            raise IR_UnknownIdError(faltando)
        return [self.id_map[x] for x in node_ids]

    def ids_of(self, nodes: Iterable[int]) -> list[str]:
        return [self.ids[int(v)] for v in nodes]

    def edges(self) -> Iterator[tuple[int, int]]:
        """Percorre cada aresta uma única vez, como `(i, j)` com `i < j`."""

        for i in range(self.node_count):
            for j in self.indices[self.indptr[i] : self.indptr[i + 1]]:
                if i < j:
                    yield i, int(j)

    def edge_set(self) -> set[frozenset[str]]:
        return {frozenset((self.ids[i], self.ids[j])) for i, j in self.edges()}

    def induced(self, nodes: Iterable[int]) -> "Graph":
        """Subgrafo induzido pelos nós dados, preservando a ordem dos índices."""

        manter = parse.nos(nodes, self.node_count)
        novo = np.full(self.node_count, -1, dtype=np.int64)
        novo[manter] = np.arange(manter.size)
        rows = np.repeat(np.arange(self.node_count), self.degrees)
        cols = self.indices
        ok = (novo[rows] >= 0) & (novo[cols] >= 0) & (rows < cols)
        return Graph.from_arcs(
            [self.ids[v] for v in manter], novo[rows[ok]], novo[cols[ok]]
        )

    def remove_nodes(self, nodes: Optional[Iterable[int]]) -> "Graph":
        """Cópia do grafo sem os nós dados (e suas arestas)."""

        retirar = parse.mascara(nodes, self.node_count)
        return self.induced(np.flatnonzero(~retirar))

    def _check(self, v: int) -> None:
        if not 0 <= v < self.node_count:
            raise IR_NodeIndexError(
                f"Nó {v} fora do intervalo [0, {self.node_count})."
            )


def degree(g: Graph, v: int) -> int:
    """Grau de um nó.

    Parameters
    ----------
    g : Graph
        Grafo consultado.
    v : int
        Índice denso do nó.

    Returns
    -------
    int
        Tamanho da lista de adjacência de `v`.

    Raises
    ------
    IR_NodeIndexError
        Caso `v` esteja fora de `[0, node_count)`.

    Examples
    --------
    >>> g = Graph.from_edges([("0", "1"), ("1", "2"), ("2", "3"), ("3", "4")])
    >>> degree(g, 0), degree(g, 2)
    (1, 2)

    """

    g._check(v)
    return int(g.indptr[v + 1] - g.indptr[v])


def degree_sequence(g: Graph) -> np.ndarray:
    """Vetor com o grau de todos os nós."""

    return g.degrees
