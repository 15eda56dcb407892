import numpy as np
import pytest
from pydantic import ValidationError

from ImunizacaoRedes import grafo, propagacao
from ImunizacaoRedes.utils.errors import IR_ContractError

from ._aleatorios import alcance, grafo_conexo


def _caminho() -> grafo.Graph:
    return grafo.Graph.from_edges([("0", "1"), ("1", "2"), ("2", "3"), ("3", "4")])


def _estrela() -> grafo.Graph:
    return grafo.Graph.from_edges([("c", f"f{i}") for i in range(5)])


def test_simulate_ic_caminho_bloqueado():
    r = propagacao.simulate_ic(
        _caminho(),
        grafo.SeedSet(members={0}),
        {2},
        propagacao.CascadeParams(p=1.0, runs=10),
    )

    assert r.mean_infected == 2.0
    assert r.std_infected == 0.0
    assert r.per_node_frequency == {0: 1.0, 1: 1.0}


def test_simulate_ic_p1_igual_alcance():
    rng = np.random.default_rng(31)
    params = propagacao.CascadeParams(p=1.0, runs=3)
    for _ in range(100):
        n = int(rng.integers(2, 60))
        g = grafo_conexo(rng, n, extras=int(rng.integers(0, n)))
        seeds = grafo.SeedSet(members=frozenset(rng.choice(n, 1).tolist()))
        candidatos = [v for v in range(n) if v not in seeds.members]
        blocked = set(rng.choice(candidatos, size=min(3, len(candidatos)), replace=False).tolist())

        esperado = alcance(g, seeds.members, blocked)
        r = propagacao.simulate_ic(g, seeds, blocked, params)

        assert propagacao.reachability(g, seeds, blocked) == esperado
        assert r.per_run_counts == [len(esperado)] * 3
        assert set(r.per_node_frequency) == esperado


def test_simulate_ic_p0():
    seeds = grafo.SeedSet(members={0, 3})
    r = propagacao.simulate_ic(
        _caminho(), seeds, None, propagacao.CascadeParams(p=0.0, runs=50)
    )

    assert r.mean_infected == 2.0
    assert r.affected() == [0, 3]


def test_simulate_ic_aresta_unica():
    g = grafo.Graph.from_edges([("a", "b")])
    r = propagacao.simulate_ic(
        g,
        grafo.SeedSet(members={0}),
        None,
        propagacao.CascadeParams(p=0.5, runs=10_000, master_seed=1),
    )

    assert r.mean_infected == pytest.approx(1.5, abs=0.05)
    assert r.ci95 < 0.05


def test_simulate_ic_deterministico():
    g = grafo_conexo(np.random.default_rng(4), 80, 120)
    seeds = grafo.SeedSet(members={0, 5})

    a = propagacao.simulate_ic(g, seeds, {7}, propagacao.CascadeParams(p=0.2, runs=200, master_seed=9))
    b = propagacao.simulate_ic(g, seeds, {7}, propagacao.CascadeParams(p=0.2, runs=200, master_seed=9))
    c = propagacao.simulate_ic(
        g, seeds, {7}, propagacao.CascadeParams(p=0.2, runs=200, master_seed=9, workers=4)
    )

    assert a == b
    assert a == c


def test_simulate_ic_semente_bloqueada():
    with pytest.raises(IR_ContractError):
        propagacao.simulate_ic(_caminho(), grafo.SeedSet(members={0}), {0})


def test_cascade_runs_valida_antes_de_iterar():
    with pytest.raises(IR_ContractError):
        propagacao.cascade_runs(_caminho(), grafo.SeedSet(members={1}), {1})


def test_cascade_runs():
    rodadas = list(
        propagacao.cascade_runs(
            _caminho(), grafo.SeedSet(members={0}), None, propagacao.CascadeParams(p=1.0, runs=2)
        )
    )

    assert len(rodadas) == 2
    assert rodadas[0].tolist() == [True] * 5


def test_cascade_params_invalidos():
    with pytest.raises(ValidationError):
        propagacao.CascadeParams(p=1.5)
    with pytest.raises(ValidationError):
        propagacao.CascadeParams(runs=0)


def test_saved_nodes_estrela():
    g = _estrela()
    seeds = grafo.SeedSet(members={g.index_of("f0")})
    r = propagacao.saved_nodes(
        g, seeds, {g.index_of("c")}, propagacao.CascadeParams(p=1.0, runs=5)
    )

    assert r.baseline_mean == 6.0
    assert r.blocked_mean == 1.0
    assert r.saved == 5.0
    assert r.blocked_ids == ["c"]
    assert r.k == 1


def test_saved_nodes_sem_bloqueio():
    r = propagacao.saved_nodes(
        _estrela(), grafo.SeedSet(members={1}), None, propagacao.CascadeParams(runs=20)
    )

    assert r.saved == 0.0
    assert r.k == 0


def test_saved_nodes_nunca_negativo():
    rng = np.random.default_rng(17)
    for _ in range(20):
        g = grafo_conexo(rng, 50, 40)
        seeds = grafo.SeedSet(members={0})
        blocked = set(rng.choice(np.arange(1, 50), 3, replace=False).tolist())
        r = propagacao.saved_nodes(
            g, seeds, blocked, propagacao.CascadeParams(p=0.3, runs=50, master_seed=3)
        )
        assert r.saved >= 0


def test_simulate_ic_frequencias_somam_media():
    rng = np.random.default_rng(23)
    g = grafo_conexo(rng, 60, 60)
    r = propagacao.simulate_ic(
        g, grafo.SeedSet(members={0, 7}), {3}, propagacao.CascadeParams(p=0.2, runs=200)
    )

    assert r.mean_infected == pytest.approx(sum(r.per_node_frequency.values()))


def test_simulate_ic_bloqueio_extra_nao_aumenta_rodadas():
    rng = np.random.default_rng(29)
    params = propagacao.CascadeParams(p=0.4, runs=100, master_seed=11)
    for _ in range(20):
        n = int(rng.integers(5, 50))
        g = grafo_conexo(rng, n, extras=int(rng.integers(0, n)))
        seeds = grafo.SeedSet(members={0})
        blocked = set(rng.choice(np.arange(1, n), 2, replace=False).tolist())
        extra = int(rng.choice([v for v in range(1, n) if v not in blocked]))

        antes = propagacao.simulate_ic(g, seeds, blocked, params).per_run_counts
        depois = propagacao.simulate_ic(g, seeds, blocked | {extra}, params).per_run_counts
        assert all(d <= a for a, d in zip(antes, depois))


def test_spread_outcome_pandas():
    r = propagacao.simulate_ic(
        _caminho(), grafo.SeedSet(members={0}), None, propagacao.CascadeParams(p=1.0, runs=1)
    )
    df = r.get("pandas")

    assert list(df.columns) == ["no", "frequencia"]
    assert len(df) == 5
