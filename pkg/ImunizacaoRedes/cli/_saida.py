import logging
from os import PathLike
from pathlib import Path
from typing import Annotated, Union

from pydantic import Field, TypeAdapter, ValidationError

from ..avaliacao import BenchReport
from ..imunizacao import ImmunizationResult
from ..propagacao import SavedReport, SpreadOutcome
from ..utils.errors import IR_ParseError


logger = logging.getLogger(__name__)

Relatorio = Annotated[
    Union[ImmunizationResult, SavedReport, BenchReport, SpreadOutcome],
    Field(discriminator="tipo"),
]

_LEITOR = TypeAdapter(Relatorio)


def dump_result(result: Relatorio) -> str:
    """Texto JSON do resultado, com a ordem de campos do modelo."""

    return result.model_dump_json(indent=2) + "\n"


def write_result(result: Relatorio, path: str | PathLike) -> None:
    """Grava um resultado como JSON legível.

    O campo `tipo` identifica o modelo (`'imunizacao'`, `'salvos'`,
    `'bench'` ou `'propagacao'`) e os demais campos seguem a ordem de
    declaração do modelo. Execuções com as mesmas entradas geram arquivos
    idênticos, exceto pelos campos de tempo.

    Parameters
    ----------
    result : ImmunizationResult, SavedReport, BenchReport or SpreadOutcome
        Resultado que será gravado.

    path : str or path-like
        Destino.

    Raises
    ------
    OSError
        Caso o destino não possa ser gravado.

    See Also
    --------
    read_result
        Leitura do arquivo gerado.

    Examples
    --------
    >>> write_result(r, "selecao.json")
    >>> read_result("selecao.json") == r
    True

    """

    Path(path).write_text(dump_result(result), encoding="utf-8")
    logger.info("Resultado '%s' gravado em %s", result.tipo, path)


def read_result(path: str | PathLike) -> Relatorio:
    """Lê um resultado gravado por `write_result`.

    Raises
    ------
    IR_ParseError
        Caso o arquivo não siga o esquema de nenhum resultado.

    """

    texto = Path(path).read_text(encoding="utf-8")
    try:
        return _LEITOR.validate_json(texto)
    except ValidationError as erro:
        raise IR_ParseError(f"resultado inválido em {path}: {erro}", linha=1)
