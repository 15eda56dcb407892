from typing import Iterable, Optional

from ._grafo import Graph
from ..utils import parse


_DESTAQUE = 'style=filled, fillcolor="#d62728", fontcolor=white'


def _quote(texto: str) -> str:
    return '"' + texto.replace("\\", "\\\\").replace('"', '\\"') + '"'


def export_dot(
    g: Graph,
    highlights: Optional[Iterable[int]] = None,
    name: Optional[str] = None,
) -> str:
    """Converte o grafo em texto DOT (Graphviz) não direcionado.

    Parameters
    ----------
    g : Graph
        Grafo que será exportado.

    highlights : iterable of int, optional
        Nós que recebem destaque (preenchimento colorido), por exemplo os nós
        selecionados por um algoritmo de imunização.

    name : str, optional
        Nome do grafo no cabeçalho DOT.

    Returns
    -------
    str
        Texto no formato `graph { ... }`. Cada nó é declarado uma vez,
        rotulado pelo identificador externo entre aspas, e cada aresta é
        emitida uma única vez.

    Examples
    --------
    >>> g = Graph.from_edges([("a", "b")])
    >>> print(export_dot(g, highlights={0}))
    graph {
      "a" [style=filled, fillcolor="#d62728", fontcolor=white];
      "b";
      "a" -- "b";
    }

    """

    destaque = parse.mascara(highlights, g.node_count)
    cabecalho = f"graph {_quote(name)} {{" if name else "graph {"
    linhas = [cabecalho]
    for v, node_id in enumerate(g.ids):
        if destaque[v]:
            linhas.append(f"  {_quote(node_id)} [{_DESTAQUE}];")
        else:
            linhas.append(f"  {_quote(node_id)};")
    for i, j in g.edges():
        linhas.append(f"  {_quote(g.ids[i])} -- {_quote(g.ids[j])};")
    linhas.append("}")
    return "\n".join(linhas) + "\n"
