"""Valores padrão compartilhados pelos módulos do pacote."""

PADROES = {
    # espectral
    "tol": 1e-10,
    "max_iter": 10_000,
    "shift": 1.0,
    "rng_seed": 0,
    # propagacao
    "p": 0.1,
    "runs": 1_000,
    "master_seed": 0,
    "workers": 1,
    # cli
    "threshold": 0.5,
    "scope": "full",
    "variant": "iterative",
    "radius": 1,
    "top": 10,
    # avaliacao
    "repeticoes": 3,
    "k_list": [10, 15, 20, 25],
}

ALIASES_ALGORITMOS = {
    "highestdegree": "HighestDegree",
    "highest-degree": "HighestDegree",
    "degree": "HighestDegree",
    "hd": "HighestDegree",
    "netshield": "NetShield",
    "ns": "NetShield",
    "dava": "DAVA",
}
