"""Arithmetic numbering of the unknowns generated by a set of positive requirements.

Columns are laid out as

    singletons   2(k-1) + s                       (s = 0 for k, 1 for -k)
    pairs        2N + 4 * pair_ordinal + code
    triples      2N + 4 * pairs + 8 * triple_ordinal + code

where ``code`` reads the polarities of the literals as a binary number,
most significant first, with 1 for a negated literal. Ordinals follow the
ascending order of the positive index tuples. The numbering needs only the
positive tuples in memory, which lets very large systems be streamed.
"""

from typing import Iterable, Iterator

from bayesarith.core.models import RawLiterals, Requirement


def _sign_code(literals: RawLiterals) -> int:
    code = 0
    for lit in literals:
        code = (code << 1) | (1 if lit < 0 else 0)
    return code


class UnknownTable:
    """Column numbering over N variables and a closed set of positive generators."""

    def __init__(self, variable_count: int, positives: Iterable[RawLiterals]) -> None:
        self.variable_count = variable_count
        pairs: set[RawLiterals] = set()
        triples: set[RawLiterals] = set()
        for positive in positives:
            if len(positive) == 2:
                pairs.add(positive)
            elif len(positive) == 3:
                triples.add(positive)
                a, b, c = positive
                pairs.update(((a, b), (a, c), (b, c)))
        self._pairs = sorted(pairs)
        self._triples = sorted(triples)
        self._pair_ordinal = {p: i for i, p in enumerate(self._pairs)}
        self._triple_ordinal = {p: i for i, p in enumerate(self._triples)}
        self._pair_base = 2 * variable_count
        self._triple_base = self._pair_base + 4 * len(self._pairs)
        self.size = self._triple_base + 8 * len(self._triples)

    @property
    def positive_count(self) -> int:
        return self.variable_count + len(self._pairs) + len(self._triples)

    def positives(self) -> list[RawLiterals]:
        """Generators ordered singletons, pairs, triples."""
        singles = [(k,) for k in range(1, self.variable_count + 1)]
        return singles + self._pairs + self._triples

    def column(self, literals: RawLiterals) -> int:
        """Column of a canonical literal tuple; KeyError if not in the table."""
        if len(literals) == 1:
            (lit,) = literals
            if not 1 <= abs(lit) <= self.variable_count:
                raise KeyError(literals)
            return 2 * (abs(lit) - 1) + (1 if lit < 0 else 0)
        key = tuple(abs(lit) for lit in literals)
        if len(literals) == 2:
            return self._pair_base + 4 * self._pair_ordinal[key] + _sign_code(literals)
        return self._triple_base + 8 * self._triple_ordinal[key] + _sign_code(literals)

    def literals(self, column: int) -> RawLiterals:
        """Inverse of column."""
        if not 0 <= column < self.size:
            raise KeyError(column)
        if column < self._pair_base:
            k, negated = divmod(column, 2)
            return (-(k + 1),) if negated else (k + 1,)
        if column < self._triple_base:
            ordinal, code = divmod(column - self._pair_base, 4)
            base = self._pairs[ordinal]
        else:
            ordinal, code = divmod(column - self._triple_base, 8)
            base = self._triples[ordinal]
        width = len(base)
        return tuple(
            -index if (code >> (width - 1 - pos)) & 1 else index for pos, index in enumerate(base)
        )

    def __len__(self) -> int:
        return self.size

    def __iter__(self) -> Iterator[RawLiterals]:
        for column in range(self.size):
            yield self.literals(column)

    def requirements(self) -> tuple[Requirement, ...]:
        return tuple(Requirement(lits) for lits in self)
