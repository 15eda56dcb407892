import numpy as np
import pytest

from ImunizacaoRedes import espectral, grafo
from ImunizacaoRedes.utils.errors import IR_ConvergenceError, IR_GraphError

from ._aleatorios import grafo_conexo


def _completo(n: int) -> grafo.Graph:
    return grafo.Graph.from_edges(
        [(str(a), str(b)) for a in range(n) for b in range(a + 1, n)]
    )


def test_power_iteration_k4():
    e = espectral.power_iteration(_completo(4))

    assert e.converged
    assert e.lambda_ == pytest.approx(3.0, abs=1e-9)
    assert np.allclose(e.u, 0.5, atol=1e-9)
    assert e.residual <= 1e-10


def test_power_iteration_estrela():
    # Grafo bipartido: sem deslocamento a iteração oscilaria.
    g = grafo.Graph.from_edges([("c", f"f{i}") for i in range(5)])
    e = espectral.power_iteration(g)

    assert e.lambda_ == pytest.approx(np.sqrt(5), rel=1e-9)
    assert (e.u > 0).all()


def test_power_iteration_caminho_p3():
    g = grafo.Graph.from_edges([("a", "b"), ("b", "c")])
    e = espectral.power_iteration(g)

    assert e.lambda_ == pytest.approx(np.sqrt(2), rel=1e-9)
    assert np.allclose(e.u, [0.5, np.sqrt(2) / 2, 0.5], atol=1e-6)


def test_power_iteration_sem_arestas():
    g = grafo.Graph.from_edges([("a", "a")])
    e = espectral.power_iteration(g)

    assert e.lambda_ == 0.0
    assert e.u.tolist() == [1.0]


def test_power_iteration_contra_decomposicao_densa():
    rng = np.random.default_rng(2024)
    for _ in range(50):
        n = int(rng.integers(2, 51))
        g = grafo_conexo(rng, n, extras=n)
        e = espectral.power_iteration(g)
        d = espectral.dense_eigenpair(g)

        assert abs(e.lambda_ - d.lambda_) <= 1e-8 * abs(d.lambda_)
        assert np.allclose(e.u, d.u, atol=1e-6)
        assert (e.u >= -1e-9).all()


def test_power_iteration_aresta_nova_nao_diminui_lambda():
    rng = np.random.default_rng(31)
    for _ in range(50):
        n = int(rng.integers(3, 30))
        g = grafo_conexo(rng, n, extras=int(rng.integers(0, n)))
        ausentes = [(a, b) for a in range(n) for b in range(a + 1, n) if b not in g.neighbors(a)]
        if not ausentes:
            continue
        a, b = ausentes[int(rng.integers(len(ausentes)))]
        arestas = list(g.edges()) + [(a, b)]
        h = grafo.Graph.from_arcs(
            list(g.ids), [i for i, _ in arestas], [j for _, j in arestas]
        )

        antes = espectral.power_iteration(g).lambda_
        depois = espectral.power_iteration(h).lambda_
        assert depois >= antes - 1e-9 * antes


def test_power_iteration_nao_converge():
    g = grafo.Graph.from_edges([("0", "1"), ("1", "2"), ("2", "3"), ("3", "4")])

    with pytest.raises(IR_ConvergenceError) as erro:
        espectral.power_iteration(g, max_iter=1)
    assert erro.value.melhor is not None
    assert not erro.value.melhor.converged


def test_power_iteration_grafo_vazio():
    g = grafo.Graph([], np.zeros(1, dtype=np.int64), np.empty(0, dtype=np.int64))

    with pytest.raises(IR_GraphError):
        espectral.power_iteration(g)


def test_eigen_drop():
    g = _completo(4)

    assert espectral.eigen_drop(g, {0}, method="dense") == pytest.approx(1.0)
    assert espectral.eigen_drop(g, {0, 1, 2, 3}) == pytest.approx(3.0)


def test_eigen_drop_base():
    g = grafo_conexo(np.random.default_rng(8), 20, 15)
    base = espectral.dense_eigenpair(g)

    assert espectral.eigen_drop(g, {0, 1}, base=base) == pytest.approx(
        espectral.eigen_drop(g, {0, 1}, method="dense"), abs=1e-8
    )
