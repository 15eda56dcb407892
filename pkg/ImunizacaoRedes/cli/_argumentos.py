import argparse
from typing import Optional, Sequence

from pydantic import ValidationError

from ._config import RunConfig
from ..utils.errors import IR_UsageError
from ..utils.padroes import PADROES


class _Parser(argparse.ArgumentParser):
    """`ArgumentParser` que gera `IR_UsageError` em vez de encerrar o processo."""

    def __init__(self, *args, **kwargs):
        kwargs.setdefault("allow_abbrev", False)
        super().__init__(*args, **kwargs)

    def error(self, message: str):
        raise IR_UsageError(f"{self.prog}: {message}")


def _comuns(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--graph", dest="graph_path", required=True, help="Lista de arestas.")
    sub.add_argument("--seeds", dest="seeds_path", help="Tabela 'id,score' do detector.")
    sub.add_argument("--delimiter", help="Separador da lista de arestas (padrão: espaços).")
    sub.add_argument(
        "--threshold",
        type=float,
        default=PADROES["threshold"],
        help="Limiar de confiança das sementes (padrão: %(default)s).",
    )
    sub.add_argument("--output", "-o", help="Arquivo de resultado (padrão: saída padrão).")
    sub.add_argument(
        "--verbose", "-v", action="count", default=0, help="Aumenta o nível do log."
    )


def _selecao(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--algo", dest="algorithms", default="dava", help="highest-degree, netshield ou dava.")
    sub.add_argument("--scope", choices=["full", "subgraph"], default=PADROES["scope"])
    sub.add_argument("--radius", type=int, default=PADROES["radius"])
    sub.add_argument("--variant", choices=["iterative", "fast"], default=PADROES["variant"])


def _cascata(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--p", type=float, default=PADROES["p"], help="Probabilidade da cascata.")
    sub.add_argument("--runs", type=int, default=PADROES["runs"], help="Rodadas de Monte Carlo.")
    sub.add_argument("--seed", dest="master_seed", type=int, default=PADROES["master_seed"])
    sub.add_argument("--workers", type=int, default=PADROES["workers"])


def _parser() -> _Parser:
    parser = _Parser(
        prog="imunizar",
        description="Imunização de redes sociais contra a propagação de conteúdo nocivo.",
    )
    comandos = parser.add_subparsers(dest="command", parser_class=_Parser)
    comandos.required = True

    sub = comandos.add_parser("immunize", help="Seleciona k nós para bloqueio.")
    _comuns(sub)
    _selecao(sub)
    sub.add_argument("--k", type=int)

    sub = comandos.add_parser("simulate", help="Simula a cascata independente.")
    _comuns(sub)
    _cascata(sub)
    sub.add_argument("--blocked", default="", help="Identificadores bloqueados, separados por vírgula.")

    sub = comandos.add_parser("evaluate", help="Seleciona k nós e conta os nós salvos.")
    _comuns(sub)
    _selecao(sub)
    _cascata(sub)
    sub.add_argument("--k", type=int)

    sub = comandos.add_parser("bench", help="Tempo e nós salvos por algoritmo e orçamento.")
    _comuns(sub)
    _selecao(sub)
    _cascata(sub)
    sub.set_defaults(algorithms="highest-degree,netshield,dava")
    sub.add_argument("--algos", dest="algorithms")
    sub.add_argument("--k-list", dest="k_list", default=",".join(map(str, PADROES["k_list"])))
    sub.add_argument("--repetitions", type=int, default=PADROES["repeticoes"])
    sub.add_argument("--csv", dest="csv_path", help="Tabela CSV do benchmark.")

    sub = comandos.add_parser("subgraph", help="Exporta em DOT a vizinhança dos nós escolhidos.")
    _comuns(sub)
    _selecao(sub)
    sub.add_argument("--top", type=int, default=PADROES["top"])
    sub.add_argument("--dot", dest="dot_path", help="Arquivo DOT (padrão: saída padrão).")

    return parser


def parse_command(argv: Optional[Sequence[str]] = None) -> RunConfig:
    """Interpreta os argumentos da linha de comando.

    Parameters
    ----------
    argv : sequence of str, optional
        Argumentos sem o nome do programa. Se None, usa `sys.argv[1:]`.

    Returns
    -------
    RunConfig
        Configuração validada. Padrões: limiar 0.5, p 0.1, 1000 rodadas,
        escopo 'full'.

    Raises
    ------
    IR_UsageError
        Para opções desconhecidas, caminhos obrigatórios ausentes ou
        orçamentos não positivos.

    Examples
    --------
    >>> cfg = parse_command(
    ...     ["immunize", "--graph", "g.tsv", "--seeds", "s.csv", "--algo", "dava", "--k", "10"]
    ... )
    >>> cfg.algorithm, cfg.k, cfg.threshold
    ('DAVA', 10, 0.5)

    """

    args = vars(_parser().parse_args(argv))
    if isinstance(args.get("blocked"), str):
        args["blocked"] = [x.strip() for x in args["blocked"].split(",") if x.strip()]
    args = {chave: valor for chave, valor in args.items() if valor is not None}
    try:
        return RunConfig(**args)
    except ValidationError as erro:
        detalhes = "; ".join(
            f"{'.'.join(map(str, e['loc'])) or 'config'}: {e['msg']}" for e in erro.errors()
        )
        raise IR_UsageError(f"imunizar {args.get('command')}: {detalhes}")
