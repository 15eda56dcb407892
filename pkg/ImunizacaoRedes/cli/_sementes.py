import io
import logging
import re
from os import PathLike
from typing import TextIO

import pandas as pd

from ..grafo import Graph, SeedSet
from ..utils.errors import IR_InputError, IR_ParseError


logger = logging.getLogger(__name__)

_COLUNAS = ["id", "score"]


def _texto(source: str | PathLike | TextIO) -> TextIO:
    if hasattr(source, "read"):
        return source
    with open(source, "rb") as file:
        linhas = file.readlines()
    partes = []
    for numero, linha in enumerate(linhas, start=1):
        try:
            partes.append(linha.decode("utf-8"))
        except UnicodeDecodeError as erro:
            raise IR_ParseError(
                f"tabela de sementes não está em UTF-8 ({erro.reason})", linha=numero
            )
    return io.StringIO("".join(partes))


def load_seed_labels(
    source: str | PathLike | TextIO,
    g: Graph,
    threshold: float = 0.5,
) -> SeedSet:
    """Lê a tabela de confiança do detector de conteúdo nocivo e seleciona as sementes.

    A tabela tem cabeçalho `id,score`, uma linha por usuário, com a
    confiança do detector em `[0, 1]`. Os usuários com `score >= threshold`
    tornam-se sementes tóxicas. Se um identificador aparecer mais de uma
    vez, vale a maior confiança.

    Parameters
    ----------
    source : str, path-like or text stream
        Arquivo CSV (UTF-8) ou stream de texto.

    g : Graph
        Grafo ao qual os identificadores pertencem.

    threshold : float, default=0.5
        Limiar de confiança. O limite é inclusivo.

    Returns
    -------
    SeedSet
        Sementes com as respectivas confianças.

    Raises
    ------
    IR_InputError
        Caso `threshold` esteja fora de `[0, 1]`.

    IR_ParseError
        Caso o arquivo não esteja em UTF-8, o cabeçalho seja inválido ou
        alguma confiança não seja um número em `[0, 1]`. O número da linha fica no atributo `linha`.

    IR_UnknownIdError
        Caso algum identificador não exista no grafo. Todos os
        identificadores desconhecidos são listados.

    Examples
    --------
    >>> import io
    >>> from ImunizacaoRedes.grafo import Graph
    >>> g = Graph.from_edges([("u1", "u2"), ("u2", "u3")])
    >>> tabela = io.StringIO("id,score\\nu1,0.9\\nu2,0.3\\n")
    >>> load_seed_labels(tabela, g, threshold=0.5).members
    frozenset({0})

    """

    if not 0.0 <= threshold <= 1.0:
        raise IR_InputError(f"O limiar {threshold} deve estar em [0, 1].")

    try:
        df = pd.read_csv(
            _texto(source),
            dtype=str,
            keep_default_na=False,
            skip_blank_lines=False,
            skipinitialspace=True,
        )
    except pd.errors.ParserError as erro:
        achado = re.search(r"line (\d+)", str(erro))
        raise IR_ParseError(
            f"tabela de sementes mal formada ({erro})",
            linha=int(achado.group(1)) if achado else 0,
        )
    except pd.errors.EmptyDataError:
        raise IR_ParseError("tabela de sementes vazia; esperado cabeçalho 'id,score'", 1)

    if [c.strip().lower() for c in df.columns] != _COLUNAS:
        raise IR_ParseError(
            f"cabeçalho {list(df.columns)} inválido; esperado 'id,score'", linha=1
        )
    df.columns = _COLUNAS
    df["linha"] = df.index + 2
    df = df[(df["id"].str.strip() != "") | (df["score"].str.strip() != "")].copy()

    df["score"] = pd.to_numeric(df["score"].str.strip(), errors="coerce")
    invalido = df["score"].isna() | (df["score"] < 0) | (df["score"] > 1)
    if invalido.any():
        primeira = df[invalido].iloc[0]
        raise IR_ParseError(
            f"confiança inválida para {primeira['id']!r}; esperado número em [0, 1]",
            linha=int(primeira["linha"]),
        )

    df["id"] = df["id"].str.strip()
    df["no"] = g.indices_of(df["id"])
    confianca = df.groupby("no")["score"].max()
    toxicos = confianca[confianca >= threshold]

    seeds = SeedSet(
        members=frozenset(int(v) for v in toxicos.index),
        scores={int(v): float(s) for v, s in toxicos.items()},
        threshold=threshold,
    )
    logger.info(
        "%d de %d usuários rotulados acima do limiar %.2f",
        len(seeds),
        len(confianca),
        threshold,
    )
    return seeds
