"""Brute-force ground truth: complete assignments and trial division.

Assignments are computed from integer arithmetic on the operands, never from
the gate equations, so they can be used to check the encoders.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import isqrt
from typing import Iterable, Optional

from bayesarith.core.errors import RangeError, TooLarge
from bayesarith.core.labeling import addition_index, factor_index, index_of
from bayesarith.core.models import (
    Environment,
    EnvironmentKind,
    Requirement,
    RoleKind,
    VariableRole,
)
from bayesarith.core.system import LpSystem
from bayesarith.encoder.addition import addition_data
from bayesarith.encoder.builder import DataItem, bit_fixings
from bayesarith.encoder.multiplication import multiplication_data

# Largest operand width the multiplication enumeration accepts (A and B together)
MULTIPLICATION_LIMIT = 16


@dataclass(frozen=True, order=True)
class CompleteAssignment:
    """A bit for every variable of an environment; ``bits[k - 1]`` is X_k."""

    env: Environment
    bits: tuple[int, ...]

    def value(self, k: int) -> int:
        return self.bits[k - 1]

    def role_value(self, role: VariableRole) -> int:
        return self.bits[index_of(self.env, role) - 1]

    def as_mapping(self) -> dict[int, int]:
        return {k: bit for k, bit in enumerate(self.bits, start=1)}

    def matches(self, fixings: Iterable[tuple[int, int]]) -> bool:
        return all(self.bits[k - 1] == bit for k, bit in fixings)


def _bit(value: int, position: int) -> int:
    return (value >> position) & 1


def _carry_into(x: int, y: int, position: int) -> int:
    """Carry arriving at ``position`` when x and y are added."""
    mask = (1 << position) - 1
    return ((x & mask) + (y & mask)) >> position


def addition_assignment(n: int, u: int, v: int) -> CompleteAssignment:
    env = Environment(EnvironmentKind.ADDITION, n)
    bits = [0] * env.variable_count
    total = u + v

    def put(kind: RoleKind, i: int, bit: int) -> None:
        bits[addition_index(VariableRole(kind, i), n) - 1] = bit

    for i in range(n):
        put(RoleKind.U, i, _bit(u, i))
        put(RoleKind.V, i, _bit(v, i))
        put(RoleKind.S, i, _bit(total, i))
    for i in range(1, n + 1):
        put(RoleKind.R, i, _carry_into(u, v, i))
    return CompleteAssignment(env, tuple(bits))


def multiplication_assignment(n: int, m: int, a: int, b: int) -> CompleteAssignment:
    """Operand bits, shifted rows, running sums and carries of A x B."""
    env = Environment(EnvironmentKind.MULTIPLICATION, n, m)
    bits = [0] * env.variable_count

    def put(role: VariableRole, bit: int) -> None:
        bits[factor_index(role, n, m) - 1] = bit

    for i in range(n):
        put(VariableRole(RoleKind.A, i), _bit(a, i))
    for t in range(m):
        put(VariableRole(RoleKind.B, t), _bit(b, t))
    rows = [a * _bit(b, t) << t for t in range(m)]
    for i in range(n):
        put(VariableRole(RoleKind.U, i, 0), _bit(rows[0], i))
    running = rows[0]
    for t in range(1, m):
        for i in range(t, t + n):
            put(VariableRole(RoleKind.U, i, t), _bit(rows[t], i))
        for i in range(t + 1, t + n + 1):
            put(VariableRole(RoleKind.R, i, t), _carry_into(running, rows[t], i))
        running += rows[t]
        for i in range(t, t + n):
            put(VariableRole(RoleKind.S, i, t), _bit(running, i))
    return CompleteAssignment(env, tuple(bits))


def enumerate_addition(
    n: int,
    data: Iterable[DataItem] = (),
    u: Optional[int] = None,
    v: Optional[int] = None,
    s: Optional[int] = None,
    limit: int = 6,
) -> list[CompleteAssignment]:
    """Every (U, V) pair consistent with the data, as complete assignments.

    Raises:
        TooLarge: n exceeds the enumeration limit
    """
    if n > limit:
        raise TooLarge("addition enumeration width", n, limit)
    if n < 1:
        raise RangeError(f"addition width must be >= 1, got {n}")
    items = list(data) + addition_data(n, u=u, v=v, s=s)
    fixings = bit_fixings(4 * n, items)
    found = []
    for uu, vv in product(range(2**n), repeat=2):
        assignment = addition_assignment(n, uu, vv)
        if assignment.matches(fixings):
            found.append(assignment)
    return found


def enumerate_multiplication(
    n: int, m: int, c: Optional[int] = None, limit: int = MULTIPLICATION_LIMIT
) -> list[CompleteAssignment]:
    """Every (A, B) pair, optionally restricted to A x B = c.

    Raises:
        TooLarge: n + m exceeds the enumeration limit
    """
    if n + m > limit:
        raise TooLarge("multiplication enumeration width", n + m, limit)
    fixings = bit_fixings(3 * n * m - n + m, multiplication_data(n, m, c=c))
    found = []
    for a, b in product(range(2**n), range(2**m)):
        if c is not None and a * b != c:
            continue
        assignment = multiplication_assignment(n, m, a, b)
        if assignment.matches(fixings):
            found.append(assignment)
    return found


def lift(assignment: CompleteAssignment, lp: LpSystem) -> dict[Requirement, Fraction]:
    """The deterministic point of an assignment: P(r) = 1 when r holds, else 0."""
    if assignment.env.variable_count < lp.env.variable_count:
        raise RangeError(f"assignment over {assignment.env} does not cover {lp.env}")
    values = assignment.as_mapping()
    return {req: Fraction(req.evaluate(values)) for req in lp.unknowns}


@dataclass(frozen=True)
class TrialDivision:
    value: int
    smallest_factor: Optional[int] = None

    @property
    def is_prime(self) -> bool:
        return self.smallest_factor is None

    def __str__(self) -> str:
        return "Prime" if self.is_prime else f"Composite({self.smallest_factor})"


def trial_division(value: int) -> TrialDivision:
    if value < 2:
        raise RangeError(f"trial division needs C > 1, got {value}")
    for d in range(2, isqrt(value) + 1):
        if value % d == 0:
            return TrialDivision(value, d)
    return TrialDivision(value)
