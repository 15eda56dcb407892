import numpy as np

from ImunizacaoRedes.grafo import Graph


def grafo_conexo(rng: np.random.Generator, n: int, extras: int) -> Graph:
    """Árvore aleatória com `n` nós mais até `extras` arestas sorteadas."""

    src = [int(rng.integers(v)) for v in range(1, n)]
    dst = list(range(1, n))
    for _ in range(extras):
        a, b = rng.choice(n, size=2, replace=False)
        src.append(int(a))
        dst.append(int(b))
    return Graph.from_arcs([f"v{i}" for i in range(n)], src, dst)


def alcance(g: Graph, origens, removidos=()) -> set[int]:
    """Busca em largura simples, usada como oráculo."""

    removidos = set(removidos)
    vistos = {v for v in origens if v not in removidos}
    pilha = list(vistos)
    while pilha:
        v = pilha.pop()
        for w in g.neighbors(v).tolist():
            if w not in vistos and w not in removidos:
                vistos.add(w)
                pilha.append(w)
    return vistos
