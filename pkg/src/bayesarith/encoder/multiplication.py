"""LP systems of shifted addition, multiplication A x B = C and factoring."""

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from bayesarith.core.errors import RangeError
from bayesarith.core.labeling import factor_index, product_index, shifted_index
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
    data_constraints,
    positives_of,
    structural_constraints,
)
from bayesarith.encoder.gates import Gate, product_gates, shifted_gates


def multiplication_gates(n: int, m: int) -> list[Gate]:
    return shifted_gates(n, m) + product_gates(n, m)


@dataclass(frozen=True)
class MultiplicationSpec:
    """Widths of A (n bits) and B (m bits) plus data items."""

    n: int
    m: int
    data: tuple[DataItem, ...] = ()

    def __post_init__(self) -> None:
        if self.n < 2 or self.m < 2:
            raise RangeError(f"multiplication needs n >= 2 and m >= 2, got n={self.n} m={self.m}")

    @classmethod
    def from_values(
        cls,
        n: int,
        m: int,
        a: Optional[int] = None,
        b: Optional[int] = None,
        c: Optional[int] = None,
    ) -> "MultiplicationSpec":
        return cls(n, m, tuple(multiplication_data(n, m, a=a, b=b, c=c)))

    @property
    def env(self) -> Environment:
        return Environment(EnvironmentKind.MULTIPLICATION, self.n, self.m)


@dataclass(frozen=True)
class FactoringSpec:
    """An integer C > 3 sized for factoring: n = c-1, m = floor((c+1)/2)."""

    value: int

    def __post_init__(self) -> None:
        if self.value <= 3:
            raise RangeError(f"factoring needs C > 3, got {self.value}")

    @property
    def c(self) -> int:
        """Bit length of C."""
        return self.value.bit_length()

    @property
    def n(self) -> int:
        return self.c - 1

    @property
    def m(self) -> int:
        return (self.c + 1) // 2

    @property
    def bits(self) -> list[int]:
        """c_j for j in 0..m+n-1, zero-padded above the bit length."""
        return bits_of(self.value, self.m + self.n, "C")

    @property
    def env(self) -> Environment:
        return Environment(EnvironmentKind.MULTIPLICATION, self.n, self.m)

    def data(self) -> list[DataItem]:
        return [
            (Literal(product_index(j, self.n, self.m)), bit) for j, bit in enumerate(self.bits)
        ]

    def multiplication_spec(self) -> MultiplicationSpec:
        return MultiplicationSpec(self.n, self.m, tuple(self.data()))


def multiplication_data(
    n: int, m: int, a: Optional[int] = None, b: Optional[int] = None, c: Optional[int] = None
) -> list[DataItem]:
    """Data items fixing any of A (n bits), B (m bits) and C (m+n bits)."""
    data: list[DataItem] = []
    if a is not None:
        for i, bit in enumerate(bits_of(a, n, "A")):
            data.append((Literal(factor_index(VariableRole(RoleKind.A, i), n, m)), bit))
    if b is not None:
        for t, bit in enumerate(bits_of(b, m, "B")):
            data.append((Literal(factor_index(VariableRole(RoleKind.B, t), n, m)), bit))
    if c is not None:
        for j, bit in enumerate(bits_of(c, m + n, "C")):
            data.append((Literal(product_index(j, n, m)), bit))
    return data


def shifted_data(n: int, m: int, rows: Sequence[int]) -> list[DataItem]:
    """Data items fixing the m shifted rows U_t, each an n-bit value placed at offset t."""
    if len(rows) != m:
        raise RangeError(f"expected {m} rows, got {len(rows)}")
    data: list[DataItem] = []
    for t, row in enumerate(rows):
        for i, bit in enumerate(bits_of(row, n, f"U_{t}")):
            data.append((Literal(shifted_index(VariableRole(RoleKind.U, t + i, t), n, m)), bit))
    return data


def shifted_structural(n: int, m: int) -> list[LinearConstraint]:
    """The 2n(m-1) adder equations of the shifted addition."""
    env = Environment(EnvironmentKind.SHIFTED, n, m)
    return structural_constraints(env, shifted_gates(n, m))


def product_structural(n: int, m: int) -> list[LinearConstraint]:
    """The mn equations P(U_{t,t+i}) = P(A_i;B_t)."""
    env = Environment(EnvironmentKind.MULTIPLICATION, n, m)
    return structural_constraints(env, product_gates(n, m))


def shifted_positive_unknowns(n: int, m: int) -> list[Requirement]:
    """The 7mn-3m-6n positive generators of the shifted addition."""
    env = Environment(EnvironmentKind.SHIFTED, n, m)
    return positives_of(env, shifted_gates(n, m))


def multiplication_positive_unknowns(n: int, m: int) -> list[Requirement]:
    """The 8mn-2m-5n positive generators of the multiplication."""
    env = Environment(EnvironmentKind.MULTIPLICATION, n, m)
    return positives_of(env, multiplication_gates(n, m))


def build_shifted_addition(
    n: int,
    m: int,
    data: Iterable[DataItem] = (),
    extra: Optional[Iterable[LinearConstraint]] = None,
) -> LpSystem:
    """Standalone system adding m shifted n-bit integers."""
    env = Environment(EnvironmentKind.SHIFTED, n, m)
    return assemble(env, shifted_gates(n, m), data, extra)


def build_multiplication(
    spec: MultiplicationSpec, extra: Optional[Iterable[LinearConstraint]] = None
) -> LpSystem:
    return assemble(spec.env, multiplication_gates(spec.n, spec.m), spec.data, extra)


def factoring_data(spec: FactoringSpec) -> list[LinearConstraint]:
    """The m+n equations fixing the product bits to the bits of C."""
    return data_constraints(spec.env, spec.data())


def build_factoring(
    spec: FactoringSpec, extra: Optional[Iterable[LinearConstraint]] = None
) -> LpSystem:
    """Multiplication system with C fixed, A and B free."""
    return build_multiplication(spec.multiplication_spec(), extra)
