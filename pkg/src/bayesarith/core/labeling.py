"""Bijections between circuit bits and variable indices.

Addition of two n-bit numbers uses indices 1..4n:

    U_i -> i+1, V_i -> i+n+1, S_i -> i+2n+1 (i < n), R_i -> i+3n (1 <= i <= n)

The top sum bit S_n is the final carry R_n and shares index 4n.

Shifted addition (the partial-product accumulator of an n-by-m multiplier)
uses indices 1..3nm-2n. U_{0,i} -> i+1; for every step t in 1..m-1 a block
of 3n indices holds U_{t,i}, S_{t,i} (i in t..t+n-1) and R_{t,i}
(i in t+1..t+n):

    U_{t,i} -> n(3t-2)+i-t+1, S_{t,i} -> n(3t-1)+i-t+1, R_{t,i} -> 3nt+i-t

Multiplication appends A_i -> i+3nm-2n+1 and B_t -> t+3nm-n+1. Product
bits C_j are aliases of accumulator bits and have no index of their own.
"""

from bayesarith.core.errors import RangeError
from bayesarith.core.models import Environment, EnvironmentKind, RoleKind, VariableRole


def _check(condition: bool, role: VariableRole, context: str) -> None:
    if not condition:
        raise RangeError(f"{role} is not a bit of {context}")


def addition_index(role: VariableRole, n: int) -> int:
    """Index of an addition bit. S_n and R_n both map to 4n."""
    context = f"{n}-bit addition"
    _check(role.t is None, role, context)
    i = role.i
    if role.kind is RoleKind.U:
        _check(0 <= i < n, role, context)
        return i + 1
    if role.kind is RoleKind.V:
        _check(0 <= i < n, role, context)
        return i + n + 1
    if role.kind is RoleKind.S:
        _check(0 <= i <= n, role, context)
        return 4 * n if i == n else i + 2 * n + 1
    if role.kind is RoleKind.R:
        _check(1 <= i <= n, role, context)
        return i + 3 * n
    raise RangeError(f"{role} is not a bit of {context}")


def role_of_addition_index(k: int, n: int) -> VariableRole:
    """Inverse of addition_index; index 4n reads back as R_n."""
    if not 1 <= k <= 4 * n:
        raise RangeError(f"index {k} outside 1..{4 * n}")
    block, offset = divmod(k - 1, n)
    if block == 0:
        return VariableRole(RoleKind.U, offset)
    if block == 1:
        return VariableRole(RoleKind.V, offset)
    if block == 2:
        return VariableRole(RoleKind.S, offset)
    return VariableRole(RoleKind.R, offset + 1)


def shifted_index(role: VariableRole, n: int, m: int) -> int:
    """Index of an accumulator bit U_{t,i}, S_{t,i} or R_{t,i}."""
    context = f"shifted addition n={n} m={m}"
    t, i = role.t, role.i
    _check(t is not None and 0 <= t <= m - 1, role, context)
    if role.kind is RoleKind.U:
        if t == 0:
            _check(0 <= i <= n - 1, role, context)
            return i + 1
        _check(t <= i <= t + n - 1, role, context)
        return n * (3 * t - 2) + i - t + 1
    _check(t >= 1, role, context)
    if role.kind is RoleKind.S:
        _check(t <= i <= t + n - 1, role, context)
        return n * (3 * t - 1) + i - t + 1
    if role.kind is RoleKind.R:
        _check(t + 1 <= i <= t + n, role, context)
        return 3 * n * t + i - t
    raise RangeError(f"{role} is not a bit of {context}")


def role_of_shifted_index(k: int, n: int, m: int) -> VariableRole:
    """Inverse of shifted_index."""
    total = 3 * n * m - 2 * n
    if not 1 <= k <= total:
        raise RangeError(f"index {k} outside 1..{total}")
    if k <= n:
        return VariableRole(RoleKind.U, k - 1, 0)
    step, offset = divmod(k - n - 1, 3 * n)
    t = step + 1
    if offset < n:
        return VariableRole(RoleKind.U, t + offset, t)
    if offset < 2 * n:
        return VariableRole(RoleKind.S, t + offset - n, t)
    return VariableRole(RoleKind.R, t + 1 + offset - 2 * n, t)


def product_index(j: int, n: int, m: int) -> int:
    """Index of the accumulator bit that carries product bit C_j."""
    if j == 0:
        return 1
    if 1 <= j <= m - 1:
        return 3 * n * j - n + 1
    if m <= j <= m + n - 2:
        return 3 * n * m - 4 * n - m + 2 + j
    if j == m + n - 1:
        return 3 * n * m - 2 * n
    raise RangeError(f"C_{j} is not a product bit for n={n} m={m}")


def factor_index(role: VariableRole, n: int, m: int) -> int:
    """Index of any multiplier bit, including operands and product aliases."""
    if role.kind is RoleKind.A:
        _check(role.t is None and 0 <= role.i <= n - 1, role, f"A of width {n}")
        return role.i + 3 * n * m - 2 * n + 1
    if role.kind is RoleKind.B:
        _check(role.t is None and 0 <= role.i <= m - 1, role, f"B of width {m}")
        return role.i + 3 * n * m - n + 1
    if role.kind is RoleKind.C:
        _check(role.t is None, role, "product bits")
        return product_index(role.i, n, m)
    return shifted_index(role, n, m)


def role_of_multiplication_index(k: int, n: int, m: int) -> VariableRole:
    """Inverse of factor_index on accumulator and operand bits."""
    accumulator = 3 * n * m - 2 * n
    if 1 <= k <= accumulator:
        return role_of_shifted_index(k, n, m)
    if accumulator < k <= accumulator + n:
        return VariableRole(RoleKind.A, k - accumulator - 1)
    if accumulator + n < k <= accumulator + n + m:
        return VariableRole(RoleKind.B, k - accumulator - n - 1)
    raise RangeError(f"index {k} outside 1..{accumulator + n + m}")


def index_of(env: Environment, role: VariableRole) -> int:
    """Variable index of a role in the given environment."""
    if env.kind is EnvironmentKind.ADDITION:
        return addition_index(role, env.n)
    if env.kind is EnvironmentKind.SHIFTED:
        return shifted_index(role, env.n, env.m)
    return factor_index(role, env.n, env.m)


def role_of(env: Environment, k: int) -> VariableRole:
    """Role carried by variable index k in the given environment."""
    if env.kind is EnvironmentKind.ADDITION:
        return role_of_addition_index(k, env.n)
    if env.kind is EnvironmentKind.SHIFTED:
        return role_of_shifted_index(k, env.n, env.m)
    return role_of_multiplication_index(k, env.n, env.m)


def role_table(env: Environment) -> list[tuple[int, VariableRole]]:
    """Every index with its role, ascending."""
    return [(k, role_of(env, k)) for k in range(1, env.variable_count + 1)]
