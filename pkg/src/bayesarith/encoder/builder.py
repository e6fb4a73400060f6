"""Assembly of data, structural and universal equations into an LpSystem."""

import logging
from typing import Iterable, Optional, Sequence, Union

from bayesarith.core.errors import ContradictoryData, RangeError
from bayesarith.core.labeling import role_of
from bayesarith.core.models import (
    ConstraintKind,
    Environment,
    LinearConstraint,
    Literal,
    Requirement,
)
from bayesarith.core.system import LpSystem
from bayesarith.encoder.gates import Gate, gate_positives, structural_rows
from bayesarith.encoder.table import UnknownTable
from bayesarith.encoder.universal import universal_equations

logger = logging.getLogger("bayesarith")

# A data item: a literal and the probability (0 or 1) it is fixed to.
DataItem = tuple[Union[Literal, int], int]


def bit_fixings(
    variable_count: int, data: Iterable[DataItem]
) -> list[tuple[int, int]]:
    """Resolve data items into (index, bit) pairs, in first-seen order.

    Raises:
        RangeError: an index outside 1..variable_count or a value not in {0, 1}
        ContradictoryData: one index fixed to both bits
    """
    fixed: dict[int, int] = {}
    for item, value in data:
        literal = item if isinstance(item, Literal) else Literal.from_signed(item)
        if literal.index > variable_count:
            raise RangeError(f"data literal {literal} outside 1..{variable_count}")
        if value not in (0, 1):
            raise RangeError(f"data value must be 0 or 1, got {value}")
        bit = value if literal.positive else 1 - value
        previous = fixed.get(literal.index)
        if previous is None:
            fixed[literal.index] = bit
        elif previous != bit:
            raise ContradictoryData(literal.index)
    return list(fixed.items())


def data_constraints(env: Environment, data: Iterable[DataItem]) -> list[LinearConstraint]:
    """Data equations with zero right-hand side: P(k)=0 for bit 0, P(-k)=0 for bit 1."""
    constraints = []
    for index, bit in bit_fixings(env.variable_count, data):
        literal = -index if bit else index
        constraints.append(
            LinearConstraint(
                ((Requirement((literal,)), 1),),
                0,
                ConstraintKind.DATA,
                f"{role_of(env, index)} = {bit}",
            )
        )
    return constraints


def bits_of(value: int, width: int, name: str) -> list[int]:
    """Little-endian bits of a nonnegative integer that fits in ``width`` bits."""
    if not 0 <= value < 2**width:
        raise RangeError(f"{name}={value} does not fit in {width} bits")
    return [(value >> j) & 1 for j in range(width)]


def positives_of(env: Environment, gates: Sequence[Gate]) -> list[Requirement]:
    """Positive generators: every singleton plus the input tuples of every gate."""
    table = UnknownTable(env.variable_count, (p for g in gates for p in gate_positives(g)))
    return [Requirement(p) for p in table.positives()]


def structural_constraints(env: Environment, gates: Sequence[Gate]) -> list[LinearConstraint]:
    return [
        LinearConstraint.from_raw(terms, rhs, ConstraintKind.STRUCTURAL, str(role_of(env, output)))
        for output, (terms, rhs) in structural_rows(list(gates))
    ]


def assemble(
    env: Environment,
    gates: Sequence[Gate],
    data: Iterable[DataItem] = (),
    extra: Optional[Iterable[LinearConstraint]] = None,
) -> LpSystem:
    """Build the system: data, then structural by output index, then universal."""
    table = UnknownTable(env.variable_count, (p for g in gates for p in gate_positives(g)))
    positives = tuple(Requirement(p) for p in table.positives())
    constraints = data_constraints(env, data)
    constraints.extend(structural_constraints(env, gates))
    constraints.extend(universal_equations(positives))
    if extra:
        constraints.extend(extra)
    system = LpSystem(env, table.requirements(), tuple(constraints), positives)
    logger.debug(f"Built {env}: {system.n_unknowns} unknowns, {system.n_equations} equations")
    return system


def fix_probability(req: Requirement, value, label: str = "") -> LinearConstraint:
    """An extra equation P(req) = value."""
    return LinearConstraint(((req, 1),), value, ConstraintKind.EXTRA, label or f"P{req} = {value}")
