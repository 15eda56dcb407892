"""Geradores de grafos sintéticos para testes e benchmarks.

Substituem, em escala de bancada, redes reais de interações que não
acompanham o pacote.

"""

import logging

import numpy as np
from pydantic import validate_call

from ..grafo import Graph, SeedSet
from ..utils import Modelo
from ..utils.errors import IR_InputError


logger = logging.getLogger(__name__)


def _preferencial(n: int, param: float, rng: np.random.Generator) -> Graph:
    if param < 1 or not float(param).is_integer():
        raise IR_InputError(
            f"Parâmetro {param} inválido para 'preferential-attachment'.\n"
            "Informe o número inteiro (>= 1) de arestas por novo nó."
        )
    m = int(param)
    if n < m + 1:
        raise IR_InputError(f"São necessários ao menos {m + 1} nós para m={m}.")

    src: list[int] = []
    dst: list[int] = []
    repetidos: list[int] = []
    for i in range(m + 1):
        for j in range(i + 1, m + 1):
            src.append(i)
            dst.append(j)
            repetidos += [i, j]

    for v in range(m + 1, n):
        alvos: set[int] = set()
        while len(alvos) < m:
            alvos.add(repetidos[int(rng.integers(len(repetidos)))])
        for w in sorted(alvos):
            src.append(w)
            dst.append(v)
            repetidos += [w, v]

    return Graph.from_arcs([str(v) for v in range(n)], src, dst)


def _uniforme(n: int, param: float, rng: np.random.Generator) -> Graph:
    if not 0.0 <= param <= 1.0:
        raise IR_InputError(
            f"Parâmetro {param} inválido para 'random-uniform'.\n"
            "Informe a probabilidade de cada aresta, em [0, 1]."
        )
    src, dst = [], []
    for i in range(n - 1):
        js = i + 1 + np.flatnonzero(rng.random(n - i - 1) < param)
        src.append(np.full(js.size, i))
        dst.append(js)
    if src:
        src, dst = np.concatenate(src), np.concatenate(dst)
    return Graph.from_arcs([str(v) for v in range(n)], src, dst)


def _lagarta(n: int, param: float, rng: np.random.Generator) -> Graph:
    if not 0.0 < param <= 1.0:
        raise IR_InputError(
            f"Parâmetro {param} inválido para 'caterpillar-local-spread'.\n"
            "Informe a densidade do núcleo denso, em (0, 1]."
        )
    hubs = max(1, n // 40)
    nucleo = max(4, n // 4)
    cauda = n - 2 * hubs - nucleo
    if cauda < hubs:
        raise IR_InputError(
            f"n={n} é pequeno demais para 'caterpillar-local-spread'.\n"
            "Utilize ao menos 8 nós."
        )

    ids: list[str] = []
    src: list[int] = []
    dst: list[int] = []

    def novo(nome: str) -> int:
        ids.append(nome)
        return len(ids) - 1

    def ligar(a: int, b: int) -> None:
        src.append(a)
        dst.append(b)

    tamanhos = np.full(hubs, cauda // hubs)
    tamanhos[: cauda % hubs] += 1
    centros = []
    for h in range(hubs):
        semente = novo(f"t{h}")
        centro = novo(f"h{h}")
        ligar(semente, centro)
        centros.append(centro)
        anterior = centro
        for j in range(int(tamanhos[h])):
            no = novo(f"c{h}_{j}")
            ligar(anterior, no)
            if j % 2 == 0:
                anterior = no

    base = len(ids)
    for j in range(nucleo):
        novo(f"n{j}")
    for j in range(nucleo):
        ligar(base + j, base + (j + 1) % nucleo)
        extras = j + 2 + np.flatnonzero(rng.random(max(nucleo - j - 2, 0)) < param)
        for w in extras:
            if not (j == 0 and w == nucleo - 1):
                ligar(base + j, base + int(w))
    ligar(centros[0], base)

    return Graph.from_arcs(ids, src, dst)


_GERADORES = {
    "preferential-attachment": _preferencial,
    "random-uniform": _uniforme,
    "caterpillar-local-spread": _lagarta,
}


@validate_call
def generate_graph(model: Modelo, n: int, param: float, seed: int = 0) -> Graph:
    """Gera um grafo sintético determinístico.

    Parameters
    ----------
    model : {'preferential-attachment', 'random-uniform', 'caterpillar-local-spread'}
        Modelo gerador:
        - 'preferential-attachment': núcleo completo com `param + 1` nós;
          cada novo nó se liga a `param` nós distintos escolhidos com
          probabilidade proporcional ao grau;
        - 'random-uniform': cada par de nós é ligado com probabilidade
          `param`;
        - 'caterpillar-local-spread': sementes tóxicas (`t*`) ligadas a hubs
          (`h*`), cada hub com uma cadeia em forma de lagarta (`c*`), e um
          núcleo denso (`n*`, densidade `param`) ligado apenas ao primeiro
          hub. Use `caterpillar_seeds` para obter as sementes.

    n : int
        Número de nós (>= 2).

    param : float
        Parâmetro do modelo.

    seed : int, default=0
        Semente do gerador aleatório.

    Returns
    -------
    Graph
        Grafo gerado. Nós isolados são mantidos.

    Raises
    ------
    IR_InputError
        Caso `n` ou `param` sejam inválidos para o modelo.

    Examples
    --------
    >>> g = generate_graph("preferential-attachment", n=100, param=2, seed=7)
    >>> g.node_count, g.edge_count
    (100, 197)

    """

    if n < 2:
        raise IR_InputError("O gerador requer ao menos 2 nós.")
    rng = np.random.default_rng(seed)
    g = _GERADORES[model](n, param, rng)
    logger.debug("Grafo %s gerado: %r", model, g)
    return g


def caterpillar_seeds(g: Graph) -> SeedSet:
    """Sementes tóxicas de um grafo 'caterpillar-local-spread' (ids `t*`)."""

    return SeedSet(
        members=frozenset(v for v, x in enumerate(g.ids) if x.startswith("t"))
    )
