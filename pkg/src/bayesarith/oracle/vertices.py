"""Integral points of small systems and random vertex probing of larger ones.

A 0/1 point of a polytope that lies inside the unit cube is a vertex, so
enumerating every 0/1 assignment of the environment variables and keeping
the feasible lifts lists all integral vertices. Probing only samples.
"""

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

import numpy as np

from bayesarith.core.errors import TooLarge
from bayesarith.core.models import Requirement
from bayesarith.core.system import LpSystem
from bayesarith.oracle.brute_force import CompleteAssignment, lift
from bayesarith.solver.simplex import LpSolver
from bayesarith.solver.sparse import SparseMatrixSystem

logger = logging.getLogger("bayesarith")

DEFAULT_MAX_VARIABLES = 16


def integral_points(
    lp: LpSystem, max_variables: int = DEFAULT_MAX_VARIABLES
) -> list[CompleteAssignment]:
    """Assignments whose deterministic point satisfies ``lp`` exactly.

    Raises:
        TooLarge: the environment has more than ``max_variables`` variables
    """
    count = lp.env.variable_count
    if count > max_variables:
        raise TooLarge("integral point enumeration", count, max_variables)
    found = []
    for bits in product((0, 1), repeat=count):
        assignment = CompleteAssignment(lp.env, bits)
        if lp.is_satisfied(lift(assignment, lp)):
            found.append(assignment)
    logger.debug(f"{lp.env}: {len(found)} integral points of {2**count}")
    return found


@dataclass
class VertexSample:
    """Vertices reached by maximizing random objectives."""

    method: str = "sampling"
    samples: int = 0
    vertices: list[dict[Requirement, Fraction]] = field(default_factory=list)

    @property
    def integral(self) -> list[dict[Requirement, Fraction]]:
        return [
            point
            for point in self.vertices
            if all(v in (0, 1) for req, v in point.items() if req.arity == 1)
        ]


def sample_vertices(lp: LpSystem, samples: int = 32, seed: int = 0) -> VertexSample:
    """Maximize ``samples`` random integer objectives and collect distinct optimal vertices."""
    rng = np.random.default_rng(seed)
    solver = LpSolver(SparseMatrixSystem.from_lp(lp))
    result = VertexSample(samples=samples)
    if not solver.solve_feasibility().is_feasible:
        return result
    seen: set[tuple[Fraction, ...]] = set()
    for _ in range(samples):
        weights = rng.integers(-3, 4, size=lp.n_unknowns)
        objective = {col: int(w) for col, w in enumerate(weights) if w}
        outcome = solver.maximize(objective)
        if outcome.point in seen:
            continue
        seen.add(outcome.point)
        result.vertices.append(lp.point_from_vector(outcome.point))
    logger.info(f"Sampled {samples} objectives on {lp.env}: {len(result.vertices)} vertices")
    return result
