"""Erros específicos dos módulos do ImunizacaoRedes.

"""

from typing import Iterable, Optional


class IR_InputError(ValueError):
    """Erro gerado quando o usuário insere um valor inválido para um argumento."""


class IR_UsageError(ValueError):
    """Erro gerado quando a linha de comando é inválida."""


class IR_GraphError(ValueError):
    """Erro gerado quando o grafo não atende aos requisitos da operação."""


class IR_NodeIndexError(IndexError):
    """Erro gerado quando um índice de nó está fora do intervalo do grafo."""


class IR_ContractError(ValueError):
    """Erro gerado quando uma pré-condição de uma operação é violada."""


class IR_ParseError(ValueError):
    """Erro gerado quando uma linha de um arquivo de entrada está mal formada.

    Parameters
    ----------
    mensagem : str
        Descrição do problema.
    linha : int
        Número da linha (a partir de 1) onde o problema foi encontrado.

    """

    def __init__(self, mensagem: str, linha: int):
        self.linha = linha
        super().__init__(f"Linha {linha}: {mensagem}")


class IR_UnknownIdError(KeyError):
    """Erro gerado quando identificadores externos não existem no grafo.

    Parameters
    ----------
    ids : iterable of str
        Identificadores desconhecidos.

    """

    def __init__(self, ids: Iterable[str]):
        self.ids = sorted(set(ids))
        super().__init__(
            "Identificadores não encontrados no grafo: "
            + ", ".join(repr(i) for i in self.ids)
        )

    def __str__(self) -> str:
        return self.args[0]


class IR_ConvergenceError(ArithmeticError):
    """Erro gerado quando a iteração de potência não converge.

    Parameters
    ----------
    mensagem : str
        Descrição do problema.
    melhor : ImunizacaoRedes.espectral.EigenPair, optional
        Melhor iterado obtido até a interrupção.

    """

    def __init__(self, mensagem: str, melhor: Optional[object] = None):
        self.melhor = melhor
        super().__init__(mensagem)
