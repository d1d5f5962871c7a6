"""Effective divisors whose associated open book has positive binding.

An effective divisor D = sum(d_i E_i), d_i >= 1, supports a horizontal
open book on the boundary of the plumbing when

    (D + E + K) . E_i + 2 <= 0            for every vertex i,      (a)

where E = sum(E_i) and K is the canonical cycle.  Written in graph data
the left side is (I.d)_i + (I.1)_i + (2g_i - 2 - e_i) + 2.  The binding
vector is n = -I.d; strict positivity n_i >= 1 is enforced as the extra
row condition

    (I.d)_i <= -1                         for every vertex i.      (b)

Both are threshold conditions (I.d)_i <= c_i with c_i independent of d,
and -I is an M-matrix, so the pointwise-minimal solution with d >= 1
exists and is found by the classical monotone iteration for fundamental
cycles: raise d_i by one at the first vertex whose row is violated,
repeat.  No overshoot is possible, which is what makes the result the
pointwise minimum of the whole feasible set.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Sequence

from .canonical import CanonicalCycle, canonical_cycle
from .errors import ConsistencyError, ValidationError
from .graph import PlumbingGraph, validate

_MAX_SEARCH_STEPS = 10_000_000


@dataclass(frozen=True)
class ConditionReport:
    """Outcome of condition (a) with the per-vertex left-hand sides.

    slacks[i] is the value of (D + E + K).E_i + 2; the condition holds
    when every slack is <= 0.
    """
    holds: bool
    slacks: tuple[int, ...]

    def __bool__(self) -> bool:
        return self.holds


class MinimalDivisor(NamedTuple):
    divisor: tuple[int, ...]
    binding: tuple[int, ...]


def _intersection_with(graph: PlumbingGraph, vec: Sequence[int]) -> list[int]:
    """I.vec in plain integer arithmetic."""
    adjacency = graph.adjacency
    return [graph.vertices[i].euler * vec[i] + sum(vec[j] for j in adjacency[i])
            for i in range(graph.m)]


def binding_vector(graph: PlumbingGraph, divisor: Sequence[int]) -> tuple[int, ...]:
    """n = -I.d for an integral divisor d."""
    _check_divisor(graph, divisor)
    return tuple(-x for x in _intersection_with(graph, list(divisor)))


def _check_divisor(graph: PlumbingGraph, divisor: Sequence[int]) -> None:
    if len(divisor) != graph.m:
        raise ValidationError(
            f"divisor has {len(divisor)} entries for a graph with {graph.m} vertices")
    if any(int(d) != d for d in divisor):
        raise ValidationError("divisor entries must be integers")


def openbook_condition(graph: PlumbingGraph,
                       divisor: Sequence[int],
                       cycle: CanonicalCycle | None = None) -> ConditionReport:
    """Evaluate condition (a) for an effective nonzero divisor."""
    validate(graph)
    _check_divisor(graph, divisor)
    if any(d < 0 for d in divisor):
        raise ValidationError("divisor must be effective (no negative entries)")
    if all(d == 0 for d in divisor):
        raise ValidationError("divisor must be nonzero")
    if cycle is None:
        cycle = canonical_cycle(graph)
    d_row = _intersection_with(graph, list(divisor))
    e_row = _intersection_with(graph, [1] * graph.m)
    slacks = tuple(dr + er + rhs + 2
                   for dr, er, rhs in zip(d_row, e_row, cycle.adjunction_rhs))
    return ConditionReport(holds=all(s <= 0 for s in slacks), slacks=slacks)


def minimal_openbook_divisor(graph: PlumbingGraph,
                             cycle: CanonicalCycle | None = None) -> MinimalDivisor:
    """Pointwise-minimal d >= 1 satisfying conditions (a) and (b).

    Monotone iteration from d = (1, ..., 1); ties break to the first
    violated vertex in declaration order.  Feasibility is guaranteed:
    raising d_i strictly lowers row i (e_i < 0 on a negative-definite
    graph) and leaves no row permanently stuck.
    """
    validate(graph)
    if cycle is None:
        cycle = canonical_cycle(graph)
    e_row = _intersection_with(graph, [1] * graph.m)
    thresholds = [min(-(er + rhs + 2), -1)
                  for er, rhs in zip(e_row, cycle.adjunction_rhs)]
    d = [1] * graph.m
    for _ in range(_MAX_SEARCH_STEPS):
        row = _intersection_with(graph, d)
        for i in range(graph.m):
            if row[i] > thresholds[i]:
                d[i] += 1
                break
        else:
            binding = tuple(-x for x in row)
            return MinimalDivisor(divisor=tuple(d), binding=binding)
    raise ConsistencyError("divisor search did not terminate")


def scale_divisor(graph: PlumbingGraph,
                  divisor: Sequence[int],
                  k: int,
                  cycle: CanonicalCycle | None = None) -> tuple[int, ...]:
    """k-fold multiple of a divisor already satisfying condition (a).

    The multiple satisfies the condition again for every positive k; the
    re-check here can only fail on an implementation bug, hence the
    ConsistencyError.
    """
    if k < 1 or int(k) != k:
        raise ValidationError(f"scale factor must be a positive integer, got {k!r}")
    if cycle is None:
        cycle = canonical_cycle(graph)
    before = openbook_condition(graph, divisor, cycle)
    if not before.holds:
        raise ValidationError("divisor does not satisfy the open-book condition")
    scaled = tuple(k * d for d in divisor)
    after = openbook_condition(graph, scaled, cycle)
    if not after.holds:
        raise ConsistencyError(
            f"scaling by {k} broke the open-book condition (slacks {after.slacks})")
    return scaled
