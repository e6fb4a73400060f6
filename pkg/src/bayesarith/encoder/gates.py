"""Gate lists of the adder and multiplier circuits and their structural equations.

Equations are produced in raw form, as tuples of (signed literal tuple,
coefficient), so that the streaming writer can emit very large systems
without building Requirement objects. ``LinearConstraint.from_raw`` wraps
them for in-memory systems.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Iterator

from bayesarith.core.labeling import factor_index, shifted_index
from bayesarith.core.models import RawLiterals, RoleKind, VariableRole

RawTerms = tuple[tuple[RawLiterals, int], ...]
RawRow = tuple[RawTerms, int]

# Input patterns (1 = true) for which an adder output is true.
HALF_SUM = ((0, 1), (1, 0))
HALF_CARRY = ((1, 1),)
FULL_SUM = ((0, 0, 1), (0, 1, 0), (1, 0, 0), (1, 1, 1))
FULL_CARRY = ((0, 1, 1), (1, 0, 1), (1, 1, 0), (1, 1, 1))


class GateKind(Enum):
    HALF = "half"
    FULL = "full"
    AND = "and"


@dataclass(frozen=True)
class Gate:
    """One gate: input indices and output indices (sum, carry) or (product,)."""

    kind: GateKind
    inputs: tuple[int, ...]
    outputs: tuple[int, ...]


def signed_pattern(indices: tuple[int, ...], bits: tuple[int, ...]) -> RawLiterals:
    """Literals making each index equal to its bit, in canonical order."""
    literals = [index if bit else -index for index, bit in zip(indices, bits)]
    literals.sort(key=abs)
    return tuple(literals)


def _output_row(output: int, inputs: tuple[int, ...], patterns) -> RawRow:
    terms = [((output,), 1)]
    terms.extend((signed_pattern(inputs, bits), -1) for bits in patterns)
    return tuple(terms), 0


def gate_rows(gate: Gate) -> list[tuple[int, RawRow]]:
    """Structural equations of a gate, each tagged with its output index."""
    if gate.kind is GateKind.AND:
        (product,) = gate.outputs
        return [(product, _output_row(product, gate.inputs, HALF_CARRY))]
    total, carry = gate.outputs
    if gate.kind is GateKind.HALF:
        return [
            (total, _output_row(total, gate.inputs, HALF_SUM)),
            (carry, _output_row(carry, gate.inputs, HALF_CARRY)),
        ]
    return [
        (total, _output_row(total, gate.inputs, FULL_SUM)),
        (carry, _output_row(carry, gate.inputs, FULL_CARRY)),
    ]


def gate_positives(gate: Gate) -> list[RawLiterals]:
    """All-positive multi-literal generators a gate needs."""
    ordered = tuple(sorted(gate.inputs))
    if len(ordered) == 2:
        return [ordered]
    a, b, c = ordered
    return [ordered, (a, b), (a, c), (b, c)]


def addition_gates(n: int) -> list[Gate]:
    """Ripple-carry adder: a half adder at bit 0 then full adders."""
    gates = [Gate(GateKind.HALF, (1, n + 1), (2 * n + 1, 3 * n + 1))]
    for i in range(1, n):
        gates.append(
            Gate(
                GateKind.FULL,
                (i + 1, i + 1 + n, i + 3 * n),
                (i + 2 * n + 1, i + 1 + 3 * n),
            )
        )
    return gates


def shifted_gates(n: int, m: int) -> list[Gate]:
    """Adders accumulating m shifted n-bit rows U_0 .. U_{m-1}."""

    def ix(kind: RoleKind, t: int, i: int) -> int:
        return shifted_index(VariableRole(kind, i, t), n, m)

    U, S, R = RoleKind.U, RoleKind.S, RoleKind.R
    gates: list[Gate] = []
    for t in range(1, m):
        if t == 1:
            gates.append(
                Gate(
                    GateKind.HALF,
                    (ix(U, 0, 1), ix(U, 1, 1)),
                    (ix(S, 1, 1), ix(R, 1, 2)),
                )
            )
            for p in range(2, n):
                gates.append(
                    Gate(
                        GateKind.FULL,
                        (ix(U, 0, p), ix(U, 1, p), ix(R, 1, p)),
                        (ix(S, 1, p), ix(R, 1, p + 1)),
                    )
                )
            gates.append(
                Gate(
                    GateKind.HALF,
                    (ix(U, 1, n), ix(R, 1, n)),
                    (ix(S, 1, n), ix(R, 1, n + 1)),
                )
            )
            continue
        gates.append(
            Gate(
                GateKind.HALF,
                (ix(S, t - 1, t), ix(U, t, t)),
                (ix(S, t, t), ix(R, t, t + 1)),
            )
        )
        for p in range(t + 1, t + n - 1):
            gates.append(
                Gate(
                    GateKind.FULL,
                    (ix(S, t - 1, p), ix(U, t, p), ix(R, t, p)),
                    (ix(S, t, p), ix(R, t, p + 1)),
                )
            )
        top = t + n - 1
        gates.append(
            Gate(
                GateKind.FULL,
                (ix(R, t - 1, top), ix(U, t, top), ix(R, t, top)),
                (ix(S, t, top), ix(R, t, top + 1)),
            )
        )
    return gates


def product_gates(n: int, m: int) -> list[Gate]:
    """AND gates U_{t,t+i} = A_i and B_t."""
    gates = []
    for t in range(m):
        b = factor_index(VariableRole(RoleKind.B, t), n, m)
        for i in range(n):
            a = factor_index(VariableRole(RoleKind.A, i), n, m)
            out = shifted_index(VariableRole(RoleKind.U, t + i, t), n, m)
            gates.append(Gate(GateKind.AND, (a, b), (out,)))
    return gates


def structural_rows(gates: list[Gate]) -> Iterator[tuple[int, RawRow]]:
    """Structural equations of a gate list with their output index, ascending."""
    tagged = [row for gate in gates for row in gate_rows(gate)]
    tagged.sort(key=lambda item: item[0])
    yield from tagged
