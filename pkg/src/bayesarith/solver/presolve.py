"""Product-rule presolve.

Fixed singleton probabilities propagate through the multi-literal unknowns
that contain them:

    P(k) = 0  =>  P(k;rest) = 0
    P(k) = 1  =>  P(k;rest) = P(rest)

together with the complement P(-k) = 1 - P(k) and with equations left
holding a single unknown. The second rule aliases unknowns (union-find)
instead of adding equations. Work proceeds from a FIFO queue seeded by the
equations in build order, so traces are reproducible.
"""

import logging
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Optional

from bayesarith.core.errors import ProvedInfeasible
from bayesarith.core.models import LinearConstraint, Number, Requirement
from bayesarith.core.system import LpSystem
from bayesarith.solver.rank import DEFAULT_DENSE_THRESHOLD, rank
from bayesarith.solver.sparse import SparseMatrixSystem

logger = logging.getLogger("bayesarith")


@dataclass
class PresolveTrace:
    """What presolve decided about the unknowns of the original system.

    ``fixed`` holds every unknown whose value is determined.
    ``substitutions`` maps each remaining aliased unknown to the unknown that
    stands for it in the reduced system.
    """

    unknowns: tuple[Requirement, ...] = ()
    fixed: dict[Requirement, Fraction] = field(default_factory=dict)
    substitutions: dict[Requirement, Requirement] = field(default_factory=dict)
    eliminated_constraints: int = 0

    @property
    def is_empty(self) -> bool:
        return not self.fixed and not self.substitutions

    @property
    def fixed_singletons(self) -> int:
        return sum(1 for req in self.fixed if req.arity == 1)

    def expand(self, point: Mapping[Requirement, Number]) -> dict[Requirement, Number]:
        """Full point of the original system from a point of the reduced one."""
        full: dict[Requirement, Number] = {}
        for req in self.unknowns:
            if req in self.fixed:
                full[req] = self.fixed[req]
            else:
                full[req] = point[self.substitutions.get(req, req)]
        return full

    def as_records(self) -> list[dict[str, str]]:
        records = [{"unknown": str(req), "value": str(v)} for req, v in self.fixed.items()]
        records.extend(
            {"unknown": str(req), "alias": str(rep)} for req, rep in self.substitutions.items()
        )
        return records


class _Propagator:
    def __init__(self, lp: LpSystem) -> None:
        self.lp = lp
        self.parent: dict[Requirement, Requirement] = {}
        self.members: dict[Requirement, list[Requirement]] = {}
        self.value: dict[Requirement, Fraction] = {}
        self.queue: deque[Requirement] = deque()
        self.processed: set[Requirement] = set()
        self.containing: dict[int, list[Requirement]] = {}
        for req in lp.unknowns:
            if req.arity > 1:
                for lit in req.literals:
                    self.containing.setdefault(lit, []).append(req)

    def find(self, req: Requirement) -> Requirement:
        root = req
        while root in self.parent:
            root = self.parent[root]
        while req != root:
            following = self.parent[req]
            self.parent[req] = root
            req = following
        return root

    def trace(self) -> PresolveTrace:
        fixed = {}
        substitutions = {}
        for req in self.lp.unknowns:
            rep = self.find(req)
            if rep in self.value:
                fixed[req] = self.value[rep]
            elif rep != req:
                substitutions[req] = rep
        return PresolveTrace(self.lp.unknowns, fixed, substitutions)

    def _fail(self, reason: str, constraint: Optional[LinearConstraint] = None) -> None:
        raise ProvedInfeasible(reason, constraint, self.trace())

    def _class_valued(self, rep: Requirement) -> None:
        for member in self.members.get(rep, [rep]):
            if member.arity == 1 and member not in self.processed:
                self.processed.add(member)
                self.queue.append(member)

    def fix(self, req: Requirement, value: Fraction, source: str) -> None:
        rep = self.find(req)
        existing = self.value.get(rep)
        if existing is not None:
            if existing != value:
                self._fail(f"P{req} forced to both {existing} and {value} ({source})")
            return
        if not 0 <= value <= 1:
            self._fail(f"P{req} forced to {value} ({source})")
        self.value[rep] = value
        logger.debug(f"presolve: P{req} = {value} ({source})")
        self._class_valued(rep)

    def alias(self, req: Requirement, target: Requirement) -> None:
        a, b = self.find(req), self.find(target)
        if a == b:
            return
        va, vb = self.value.get(a), self.value.get(b)
        if va is not None and vb is not None and va != vb:
            self._fail(f"P{req} = P{target} but values {va} and {vb} differ")
        self.parent[a] = b
        merged = self.members.pop(b, [b])
        merged.extend(self.members.pop(a, [a]))
        self.members[b] = merged
        if va is not None and vb is None:
            self.value[b] = va
        self.value.pop(a, None)
        if b in self.value:
            self._class_valued(b)

    def drain(self) -> None:
        while self.queue:
            single = self.queue.popleft()
            value = self.value[self.find(single)]
            (lit,) = single.literals
            complement = Requirement((-lit,))
            if complement in self.lp:
                self.fix(complement, 1 - value, f"complement of P{single}")
            for req in self.containing.get(lit, ()):
                if value == 0:
                    self.fix(req, Fraction(0), f"P{single} = 0")
                elif value == 1:
                    rest = req.without(lit)
                    if rest in self.lp:
                        self.alias(req, rest)

    def reduce(self, constraint: LinearConstraint) -> tuple[dict[Requirement, Fraction], Fraction]:
        terms: dict[Requirement, Fraction] = {}
        rhs = Fraction(constraint.rhs)
        for req, coef in constraint.terms:
            rep = self.find(req)
            value = self.value.get(rep)
            if value is not None:
                rhs -= coef * value
            else:
                terms[rep] = terms.get(rep, Fraction(0)) + coef
        return {req: c for req, c in terms.items() if c != 0}, rhs

    def run(self) -> None:
        active = list(self.lp.constraints)
        changed = True
        while changed:
            changed = False
            self.drain()
            remaining = []
            for constraint in active:
                terms, rhs = self.reduce(constraint)
                if not terms:
                    if rhs != 0:
                        self._fail(f"0 = {rhs} after substitution", constraint)
                    continue
                if len(terms) == 1:
                    ((req, coef),) = terms.items()
                    self.fix(req, rhs / coef, constraint.label or constraint.kind.value)
                    self.drain()
                    changed = True
                    continue
                remaining.append(constraint)
            active = remaining


def replay(lp: LpSystem, trace: PresolveTrace) -> LpSystem:
    """Substitute a trace into a system and drop the equations it settles.

    Raises:
        ProvedInfeasible: a settled equation reads 0 = nonzero
    """
    constraints = []
    for constraint in lp.constraints:
        terms: dict[Requirement, Fraction] = {}
        rhs = Fraction(constraint.rhs)
        for req, coef in constraint.terms:
            if req in trace.fixed:
                rhs -= coef * trace.fixed[req]
            else:
                rep = trace.substitutions.get(req, req)
                terms[rep] = terms.get(rep, Fraction(0)) + coef
        kept = tuple((req, c) for req, c in terms.items() if c != 0)
        if not kept:
            if rhs != 0:
                raise ProvedInfeasible(f"0 = {rhs} after substitution", constraint, trace)
            continue
        constraints.append(LinearConstraint(kept, rhs, constraint.kind, constraint.label))
    unknowns = tuple(
        req for req in lp.unknowns if req not in trace.fixed and req not in trace.substitutions
    )
    kept_unknowns = set(unknowns)
    positives = tuple(p for p in lp.positives if p in kept_unknowns)
    return LpSystem(lp.env, unknowns, tuple(constraints), positives)


def presolve(lp: LpSystem) -> tuple[LpSystem, PresolveTrace]:
    """Propagate the product rule to a fixpoint.

    Returns the reduced system and the trace that maps it back.

    Raises:
        ProvedInfeasible: propagation derived a contradiction or a value outside [0, 1]
    """
    propagator = _Propagator(lp)
    propagator.run()
    trace = propagator.trace()
    reduced = replay(lp, trace)
    trace.eliminated_constraints = lp.n_equations - reduced.n_equations
    logger.info(
        f"Presolve: fixed {len(trace.fixed)} unknowns, aliased {len(trace.substitutions)}, "
        f"{reduced.n_unknowns} unknowns and {reduced.n_equations} equations left"
    )
    return reduced, trace


def effective_rank(
    reduced: LpSystem, trace: PresolveTrace, dense_threshold: int = DEFAULT_DENSE_THRESHOLD
) -> int:
    """Rank of the simplified system counting one unit row per fixed singleton.

    Multi-literal unknowns settled by the product rule are dropped as
    irrelevant rather than counted.
    """
    return rank(SparseMatrixSystem.from_lp(reduced), dense_threshold) + trace.fixed_singletons
