"""Exact rational preimages of the graph Laplacian on growing balls."""

from ._core import (
    Graph,
    GraphlapError,
    certificate,
    coherent_solution,
    prodiscrete_distance,
    run_chain,
    solution_set,
    solve_on_ball,
)

__all__ = [
    "Graph",
    "GraphlapError",
    "certificate",
    "coherent_solution",
    "prodiscrete_distance",
    "run_chain",
    "solution_set",
    "solve_on_ball",
]
