"""Universal equations: normalization and marginalization of partial probabilities."""

from typing import Iterable, Iterator

from bayesarith.core.errors import PolarityError
from bayesarith.core.models import ConstraintKind, LinearConstraint, RawLiterals, Requirement
from bayesarith.core.requirements import sign_patterns
from bayesarith.encoder.gates import RawRow


def universal_rows(positive: RawLiterals) -> Iterator[RawRow]:
    """Raw universal equations generated by one positive literal tuple.

    A singleton (k) gives P(k) + P(-k) = 1. A pair or triple gives, for every
    variable x in it and every sign pattern s of the others,
    P(s) = P(s, x) + P(s, -x).
    """
    if len(positive) == 1:
        (k,) = positive
        yield (((k,), 1), ((-k,), 1)), 1
        return
    for drop in range(len(positive)):
        x = positive[drop]
        rest = positive[:drop] + positive[drop + 1 :]
        for pattern in sign_patterns(rest):
            with_pos = tuple(sorted(pattern + (x,), key=abs))
            with_neg = tuple(sorted(pattern + (-x,), key=abs))
            yield ((pattern, 1), (with_pos, -1), (with_neg, -1)), 0


def universal_equations(positives: Iterable[Requirement]) -> list[LinearConstraint]:
    """Universal equations for positive requirements, in the order given.

    Raises:
        PolarityError: a generator contains a negated literal
    """
    equations = []
    for positive in positives:
        if not positive.is_positive:
            raise PolarityError(f"universal equations need positive requirements, got {positive}")
        label = f"universal {positive}"
        for terms, rhs in universal_rows(positive.literals):
            equations.append(LinearConstraint.from_raw(terms, rhs, ConstraintKind.UNIVERSAL, label))
    return equations


def universal_count(arity: int) -> int:
    """Number of universal equations one generator of this arity yields."""
    return 1 if arity == 1 else arity * 2 ** (arity - 1)
