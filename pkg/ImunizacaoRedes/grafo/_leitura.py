import io
import logging
from os import PathLike
from typing import Iterator, Optional, TextIO

from ._grafo import Graph
from ..utils.errors import IR_GraphError, IR_ParseError


logger = logging.getLogger(__name__)


def _decodificar(linhas: Iterator[bytes], encoding: str) -> Iterator[str]:
    for numero, linha in enumerate(linhas, start=1):
        try:
            yield linha.decode(encoding)
        except UnicodeDecodeError as erro:
            raise IR_ParseError(
                f"texto inválido para a codificação {encoding} ({erro.reason})",
                linha=numero,
            )


def _pares(
    linhas: Iterator[str],
    delimiter: Optional[str],
    comment: str,
) -> Iterator[tuple[str, str]]:
    numero = 0
    while True:
        try:
            linha = next(linhas)
        except StopIteration:
            return
        except UnicodeDecodeError as erro:
            raise IR_ParseError(f"texto não está em UTF-8 ({erro.reason})", linha=numero + 1)
        numero += 1
        texto = linha.strip()
        if not texto or (comment and texto.startswith(comment)):
            continue
        tokens = [t.strip() for t in texto.split(delimiter)]
        if delimiter is not None:
            tokens = [t for t in tokens if t]
        if len(tokens) not in (2, 3):
            raise IR_ParseError(
                f"esperados 2 ou 3 campos, encontrados {len(tokens)}: {texto!r}",
                linha=numero,
            )
        yield tokens[0], tokens[1]


def load_edge_list(
    source: str | PathLike | TextIO,
    delimiter: Optional[str] = None,
    comment: str = "#",
    encoding: str = "utf-8",
) -> Graph:
    """Constrói o grafo de interações a partir de uma lista de arestas.

    Cada linha não vazia e não comentada contém dois identificadores de
    usuários e, opcionalmente, um terceiro campo (peso ou tipo da interação)
    que é ignorado. Os índices densos seguem a ordem de primeira aparição.

    Parameters
    ----------
    source : str, path-like or text stream
        Caminho do arquivo ou stream de texto já aberto.

    delimiter : str, optional
        Separador dos campos. Se None, qualquer sequência de espaços em
        branco separa os campos.

    comment : str, default='#'
        Prefixo das linhas de comentário.

    encoding : str, default='utf-8'
        Codificação do arquivo, quando `source` é um caminho.

    Returns
    -------
    Graph
        Grafo não direcionado e simples. Arestas repetidas são colapsadas
        (`collapsed_duplicates`) e laços são descartados
        (`dropped_self_loops`).

    Raises
    ------
    IR_ParseError
        Caso alguma linha não tenha 2 ou 3 campos ou não possa ser decodificada
        com `encoding`. O número da linha fica no atributo `linha`.

    IR_GraphError
        Caso o arquivo não contenha nenhuma aresta nem laço.

    Examples
    --------
    >>> import io
    >>> g = load_edge_list(io.StringIO("a b\\nb c\\n"))
    >>> g.node_count, g.edge_count
    (3, 2)

    """

    if isinstance(source, io.TextIOBase) or hasattr(source, "read"):
        g = Graph.from_edges(_pares(iter(source), delimiter, comment))
    else:
        with open(source, "rb") as file:
            g = Graph.from_edges(_pares(_decodificar(file, encoding), delimiter, comment))

    if g.node_count == 0:
        raise IR_GraphError(
            "empty graph: nenhuma aresta encontrada.\n"
            "Verifique o arquivo e o separador informado."
        )

    logger.info(
        "Grafo carregado: %d nós, %d arestas (%d repetidas, %d laços descartados)",
        g.node_count,
        g.edge_count,
        g.collapsed_duplicates,
        g.dropped_self_loops,
    )
    return g


def write_edge_list(
    g: Graph,
    path: str | PathLike | TextIO,
    delimiter: str = "\t",
) -> None:
    """Grava o grafo como lista de arestas, uma aresta por linha.

    A leitura do arquivo gerado com `load_edge_list` devolve um grafo igual
    (mesmo conjunto de arestas sobre os identificadores externos). Nós
    isolados não têm representação na lista de arestas.

    Parameters
    ----------
    g : Graph
        Grafo que será gravado.

    path : str, path-like or text stream
        Destino.

    delimiter : str, default='\\t'
        Separador dos dois identificadores.

    """

    linhas = (f"{g.ids[i]}{delimiter}{g.ids[j]}\n" for i, j in g.edges())
    if hasattr(path, "write"):
        path.writelines(linhas)
    else:
        with open(path, "w", encoding="utf-8") as file:
            file.writelines(linhas)
