from itertools import combinations

import numpy as np
import pytest
from pydantic import ValidationError

from ImunizacaoRedes import espectral, grafo, imunizacao, propagacao
from ImunizacaoRedes.utils.errors import IR_ContractError

from ._aleatorios import alcance, grafo_conexo


def _completo(n: int) -> grafo.Graph:
    return grafo.Graph.from_edges(
        [(str(a), str(b)) for a in range(n) for b in range(a + 1, n)]
    )


def _caminho() -> grafo.Graph:
    return grafo.Graph.from_edges([("0", "1"), ("1", "2"), ("2", "3"), ("3", "4")])


def test_highest_degree():
    g = _caminho()

    assert imunizacao.highest_degree(g, 1).selected == [1]
    assert imunizacao.highest_degree(g, 3).selected == [1, 2, 3]
    assert imunizacao.highest_degree(g, 2, exclude={1}).selected == [2, 3]
    assert imunizacao.highest_degree(g, 10).selected == [1, 2, 3, 0, 4]
    assert imunizacao.highest_degree(g, 0).selected == []


def test_shield_value_k4():
    g = _completo(4)
    e = espectral.power_iteration(g)

    assert imunizacao.shield_value(g, e, {0}) == pytest.approx(1.5, abs=1e-9)
    assert imunizacao.shield_value(g, e, {0, 1}) == pytest.approx(2.5, abs=1e-9)
    assert imunizacao.shield_value(g, e, set()) == 0.0


def test_shield_value_soma_dupla():
    rng = np.random.default_rng(11)
    for _ in range(1000):
        n = int(rng.integers(2, 16))
        g = grafo_conexo(rng, n, extras=int(rng.integers(0, n)))
        e = espectral.dense_eigenpair(g)
        s = rng.choice(n, size=int(rng.integers(1, n + 1)), replace=False).tolist()
        A = g.matrix.toarray()

        direto = sum(2 * e.lambda_ * e.u[i] ** 2 for i in s) - sum(
            A[i, j] * e.u[i] * e.u[j] for i in s for j in s
        )
        assert imunizacao.shield_value(g, e, s) == pytest.approx(direto, rel=1e-12, abs=1e-12)


def test_netshield_k4():
    r = imunizacao.netshield(_completo(4), 2)

    assert r.algorithm == "NetShield"
    assert r.selected == [0, 1]
    assert r.node_scores[0] == pytest.approx(1.5, abs=1e-9)
    assert r.node_scores[1] == pytest.approx(1.0, abs=1e-9)


def test_netshield_exclude():
    r = imunizacao.netshield(_completo(4), 5, exclude={0, 2})

    assert r.selected == [1, 3]


def test_netshield_estrela():
    g = grafo.Graph.from_edges([("c", f"f{i}") for i in range(5)])

    assert imunizacao.netshield(g, 1).selected_ids == ["c"]


def test_netshield_qualidade():
    rng = np.random.default_rng(123)
    bons = 0
    for _ in range(200):
        n = int(rng.integers(4, 13))
        k = int(rng.integers(1, 4))
        # Árvore mais ~n(n-1)/4 arestas: a aproximação espectral do guloso é
        # fraca em grafos quase acíclicos.
        g = grafo_conexo(rng, n, extras=n * (n - 1) // 4)
        base = espectral.dense_eigenpair(g)

        r = imunizacao.netshield(g, k, eigen=base)
        guloso = espectral.eigen_drop(g, r.selected, method="dense", base=base)
        otimo = max(
            espectral.eigen_drop(g, s, method="dense", base=base)
            for s in combinations(range(n), k)
        )
        bons += guloso >= 0.9 * otimo - 1e-12

    assert bons >= 180


def test_dominator_tree_cadeia():
    g = grafo.Graph.from_edges([("s", "a"), ("a", "b")])
    t = imunizacao.build_dominator_tree(g, grafo.SeedSet(members={0}))

    assert t.idom == {1: t.root, 2: 1}
    assert t.subtree_size == {1: 2, 2: 1, t.root: 2}
    assert t.children(t.root) == [1]
    assert t.dominates(1, 2)
    assert not t.dominates(2, 1)


def test_dominator_tree_ciclo():
    # s-a, s-b, a-c, b-c: nenhum nó domina c além da raiz.
    g = grafo.Graph.from_edges([("s", "a"), ("s", "b"), ("a", "c"), ("b", "c")])
    t = imunizacao.build_dominator_tree(g, grafo.SeedSet(members={0}))

    assert t.idom[g.index_of("c")] == t.root
    assert all(t.subtree_size[v] == 1 for v in t.order)


def test_dominator_tree_oraculo_de_remocao():
    rng = np.random.default_rng(7)
    for _ in range(100):
        n = int(rng.integers(3, 61))
        g = grafo_conexo(rng, n, extras=int(rng.integers(0, n)))
        membros = rng.choice(n, size=int(rng.integers(1, max(2, n // 5))), replace=False)
        seeds = grafo.SeedSet(members=frozenset(membros.tolist()))
        t = imunizacao.build_dominator_tree(g, seeds)

        inicio = {w for s in seeds.members for w in g.neighbors(s).tolist()}
        alcancaveis = alcance(g, inicio, seeds.members)
        assert set(t.order) == alcancaveis

        # Dominadores estritos de cada nó pela remoção de cada candidato.
        dominadores = {v: set() for v in alcancaveis}
        for w in alcancaveis:
            sem_w = alcance(g, inicio, set(seeds.members) | {w})
            for v in alcancaveis - sem_w - {w}:
                dominadores[v].add(w)

        for v in alcancaveis:
            esperado = t.root
            for d in dominadores[v]:
                if dominadores[d] | {d} == dominadores[v]:
                    esperado = d
            assert t.idom[v] == esperado
            assert t.subtree_size[v] == 1 + sum(v in dominadores[x] for x in alcancaveis)


def test_dominator_tree_networkx():
    nx = pytest.importorskip("networkx")
    rng = np.random.default_rng(21)
    for _ in range(30):
        n = int(rng.integers(5, 50))
        g = grafo_conexo(rng, n, extras=int(rng.integers(0, n)))
        seeds = grafo.SeedSet(members=frozenset(rng.choice(n, 2, replace=False).tolist()))
        t = imunizacao.build_dominator_tree(g, seeds)

        d = nx.DiGraph()
        d.add_node("raiz")
        for i, j in g.edges():
            if i in seeds or j in seeds:
                livre = j if i in seeds else i
                if livre not in seeds:
                    d.add_edge("raiz", livre)
            else:
                d.add_edge(i, j)
                d.add_edge(j, i)
        idom = nx.immediate_dominators(d, "raiz")

        assert set(t.idom) == set(idom) - {"raiz"}
        for v, w in t.idom.items():
            assert idom[v] == ("raiz" if w == t.root else w)


def test_dava():
    g = grafo.Graph.from_edges([("s", "a"), ("a", "c"), ("c", "d"), ("s", "b")])
    r = imunizacao.dava(g, grafo.SeedSet(members={0}), k=1)

    assert r.selected_ids == ["a"]
    assert r.node_scores == {1: 3.0}
    assert r.variant == "iterative"


def test_dava_para_sem_alcancaveis():
    g = grafo.Graph.from_edges([("s", "a"), ("x", "y")])
    r = imunizacao.dava(g, grafo.SeedSet(members={0}), k=5)

    assert r.selected_ids == ["a"]
    assert r.k == 5


def test_dava_cadeia():
    g = grafo.Graph.from_edges([("s", "a"), ("a", "b"), ("b", "c")])
    r = imunizacao.dava(g, grafo.SeedSet(members={0}), k=1)

    assert r.selected_ids == ["a"]


def test_dava_semente_com_dois_vizinhos():
    # a e b fecham um ciclo s-a-c-d-b-s: nenhum nó domina outro.
    g = grafo.Graph.from_edges([("s", "a"), ("s", "b"), ("a", "c"), ("b", "d"), ("c", "d")])
    r = imunizacao.dava(g, grafo.SeedSet(members={0}), k=5)

    assert sorted(r.selected_ids) == ["a", "b"]
    assert r.k == 5


def test_dava_salvos_crescem_com_k():
    rng = np.random.default_rng(41)
    params = propagacao.CascadeParams(p=1.0, runs=1)
    for _ in range(20):
        n = int(rng.integers(5, 40))
        g = grafo_conexo(rng, n, extras=int(rng.integers(0, n)))
        seeds = grafo.SeedSet(members=frozenset(rng.choice(n, 2, replace=False).tolist()))

        salvos = [
            propagacao.saved_nodes(g, seeds, set(imunizacao.dava(g, seeds, k=k).selected), params).saved
            for k in range(1, 6)
        ]
        assert all(a <= b for a, b in zip(salvos, salvos[1:]))


def test_dava_iterativo_e_rapido():
    # Dois ramos a partir da semente: a-b-c e d-e.
    g = grafo.Graph.from_edges(
        [("s", "a"), ("a", "b"), ("b", "c"), ("s", "d"), ("d", "e")]
    )
    seeds = grafo.SeedSet(members={0})

    iterativo = imunizacao.dava(g, seeds, k=2)
    rapido = imunizacao.dava(g, seeds, k=2, variant="fast")

    assert iterativo.selected_ids == ["a", "d"]
    assert rapido.selected_ids == ["a", "d"]
    assert rapido.node_scores == {1: 3.0, 4: 2.0}


def test_dava_sem_sementes():
    with pytest.raises(IR_ContractError):
        imunizacao.dava(_caminho(), grafo.SeedSet(members=frozenset()), k=1)


def test_dava_nunca_seleciona_sementes():
    rng = np.random.default_rng(99)
    for _ in range(20):
        g = grafo_conexo(rng, 40, 30)
        seeds = grafo.SeedSet(members=frozenset(rng.choice(40, 4, replace=False).tolist()))
        r = imunizacao.dava(g, seeds, k=6)
        assert not set(r.selected) & seeds.members


def test_immunize_escopo_subgrafo():
    g = grafo.Graph.from_edges(
        [("s", "a"), ("a", "b"), ("b", "c"), ("c", "d"), ("d", "e")]
    )
    seeds = grafo.SeedSet(members={0})
    r = imunizacao.immunize(
        g, "HighestDegree", 1, seeds=seeds, scope="subgraph", radius=2
    )

    assert r.scope == "subgraph"
    assert r.selected_ids == ["a"]
    assert r.selected == [g.index_of("a")]


def test_immunize_dava_sem_sementes():
    with pytest.raises(IR_ContractError):
        imunizacao.immunize(_caminho(), "DAVA", 1)


def test_immunization_result():
    r = imunizacao.highest_degree(_caminho(), 2)
    df = r.get("pandas")

    assert list(df.columns) == ["ordem", "no", "id", "score"]
    assert df["id"].tolist() == ["1", "2"]
    assert r.get("json")["algorithm"] == "HighestDegree"

    with pytest.raises(ValidationError):
        imunizacao.ImmunizationResult(algorithm="DAVA", k=2, selected=[1, 1])
    with pytest.raises(ValidationError):
        imunizacao.ImmunizationResult(algorithm="DAVA", k=1, selected=[1, 2])
