import logging
import sys
import time
from typing import Optional, Sequence

from ._argumentos import parse_command
from ._config import RunConfig
from ._saida import dump_result, write_result
from ._sementes import load_seed_labels
from ..avaliacao import run_benchmark
from ..grafo import Graph, export_dot, influence_subgraph, load_edge_list
from ..imunizacao import immunize
from ..propagacao import CascadeParams, saved_nodes, simulate_ic
from ..utils.errors import (
    IR_ContractError,
    IR_ConvergenceError,
    IR_GraphError,
    IR_InputError,
    IR_NodeIndexError,
    IR_ParseError,
    IR_UnknownIdError,
    IR_UsageError,
)


logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USO = 64
EXIT_DADOS = 65
EXIT_INTERNO = 70
EXIT_IO = 74

_CODIGOS: list[tuple[tuple[type[BaseException], ...], int]] = [
    ((IR_UsageError,), EXIT_USO),
    ((IR_ParseError, IR_UnknownIdError, IR_GraphError, IR_InputError), EXIT_DADOS),
    ((IR_ContractError, IR_ConvergenceError, IR_NodeIndexError), EXIT_INTERNO),
    ((OSError,), EXIT_IO),
]


def _configurar_log(verbose: int) -> None:
    nivel = logging.WARNING if verbose == 0 else logging.INFO if verbose == 1 else logging.DEBUG
    logging.basicConfig(
        level=nivel,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )


def _emitir(cfg: RunConfig, result) -> None:
    if cfg.output is None:
        sys.stdout.write(dump_result(result))
    else:
        write_result(result, cfg.output)


def _parametros(cfg: RunConfig) -> CascadeParams:
    return CascadeParams(
        p=cfg.p, runs=cfg.runs, master_seed=cfg.master_seed, workers=cfg.workers
    )


def _selecionar(cfg: RunConfig, g: Graph, seeds, k: int):
    return immunize(
        g,
        cfg.algorithm,
        k,
        seeds=seeds,
        scope=cfg.scope,
        radius=cfg.radius,
        variant=cfg.variant,
    )


def _executar(cfg: RunConfig) -> None:
    inicio = time.perf_counter()
    g = load_edge_list(cfg.graph_path, delimiter=cfg.delimiter)
    load_seconds = time.perf_counter() - inicio
    seeds = None
    if cfg.seeds_path is not None:
        seeds = load_seed_labels(cfg.seeds_path, g, cfg.threshold)

    match cfg.command:
        case "immunize":
            _emitir(cfg, _selecionar(cfg, g, seeds, cfg.k))

        case "simulate":
            blocked = set(g.indices_of(cfg.blocked))
            _emitir(cfg, simulate_ic(g, seeds, blocked, _parametros(cfg)))

        case "evaluate":
            r = _selecionar(cfg, g, seeds, cfg.k)
            relatorio = saved_nodes(
                g,
                seeds,
                set(r.selected),
                _parametros(cfg),
                k=cfg.k,
                algorithm=r.algorithm,
            )
            _emitir(cfg, relatorio)

        case "bench":
            relatorio = run_benchmark(
                g,
                seeds,
                cfg.algorithms,
                cfg.k_list,
                _parametros(cfg),
                repetitions=cfg.repetitions,
                variant=cfg.variant,
                scope=cfg.scope,
                radius=cfg.radius,
                graph_meta={"graph": str(cfg.graph_path), "load_seconds": load_seconds},
            )
            if cfg.csv_path is not None:
                relatorio.to_csv(cfg.csv_path)
            _emitir(cfg, relatorio)

        case "subgraph":
            r = _selecionar(cfg, g, seeds, cfg.top)
            sub = influence_subgraph(g, set(r.selected), cfg.radius)
            texto = export_dot(sub, highlights=sub.indices_of(r.selected_ids))
            if cfg.dot_path is None:
                sys.stdout.write(texto)
            else:
                cfg.dot_path.write_text(texto, encoding="utf-8")
            logger.info(
                "Subgrafo de influência: %d nós, %d arestas",
                sub.node_count,
                sub.edge_count,
            )
            if cfg.output is not None:
                write_result(r, cfg.output)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Ponto de entrada do comando `imunizar`.

    Returns
    -------
    int
        0 em caso de sucesso, 64 para erros de uso, 65 para dados mal
        formados (grafo, sementes ou identificadores desconhecidos), 70 para
        violações de contrato ou falta de convergência e 74 para erros de
        leitura ou gravação de arquivos.

    """

    try:
        cfg = parse_command(argv)
        _configurar_log(cfg.verbose)
        logger.debug("%r", cfg)
        _executar(cfg)
    except Exception as erro:
        for tipos, codigo in _CODIGOS:
            if isinstance(erro, tipos):
                print(f"imunizar: erro: {erro}", file=sys.stderr)
                return codigo
        raise
    return EXIT_OK
