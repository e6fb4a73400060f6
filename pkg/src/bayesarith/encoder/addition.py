"""LP system of the addition environment S = U + V over n-bit inputs."""

from dataclasses import dataclass
from typing import Iterable, Optional

from bayesarith.core.errors import RangeError
from bayesarith.core.labeling import addition_index
from bayesarith.core.models import (
    Environment,
    EnvironmentKind,
    LinearConstraint,
    Literal,
    Requirement,
    RoleKind,
    VariableRole,
)
from bayesarith.core.system import LpSystem
from bayesarith.encoder.builder import (
    DataItem,
    assemble,
    bits_of,
    positives_of,
    structural_constraints,
)
from bayesarith.encoder.gates import addition_gates


@dataclass(frozen=True)
class AdditionSpec:
    """Width plus data items (literal, fixed probability)."""

    n: int
    data: tuple[DataItem, ...] = ()

    def __post_init__(self) -> None:
        if self.n < 1:
            raise RangeError(f"addition width must be >= 1, got {self.n}")

    @classmethod
    def from_values(
        cls,
        n: int,
        u: Optional[int] = None,
        v: Optional[int] = None,
        s: Optional[int] = None,
    ) -> "AdditionSpec":
        return cls(n, tuple(addition_data(n, u=u, v=v, s=s)))

    @property
    def env(self) -> Environment:
        return Environment(EnvironmentKind.ADDITION, self.n)


def addition_data(
    n: int, u: Optional[int] = None, v: Optional[int] = None, s: Optional[int] = None
) -> list[DataItem]:
    """Data items fixing any of U, V (n bits each) and S (n+1 bits).

    Fixing S and U instead of U and V poses a subtraction.
    """
    data: list[DataItem] = []
    for kind, value, width in ((RoleKind.U, u, n), (RoleKind.V, v, n), (RoleKind.S, s, n + 1)):
        if value is None:
            continue
        for i, bit in enumerate(bits_of(value, width, kind.value)):
            data.append((Literal(addition_index(VariableRole(kind, i), n)), bit))
    return data


def addition_structural(n: int) -> list[LinearConstraint]:
    """The 2n gate equations of an n-bit ripple-carry adder."""
    env = Environment(EnvironmentKind.ADDITION, n)
    return structural_constraints(env, addition_gates(n))


def addition_positive_unknowns(n: int) -> list[Requirement]:
    """The 8n-3 positive generators.

    Singletons, the pair (1;n+1) and one triple with its pairs per full adder.
    """
    env = Environment(EnvironmentKind.ADDITION, n)
    return positives_of(env, addition_gates(n))


def build_addition(
    spec: AdditionSpec, extra: Optional[Iterable[LinearConstraint]] = None
) -> LpSystem:
    """Full addition system: data, structural and universal equations."""
    return assemble(spec.env, addition_gates(spec.n), spec.data, extra)
