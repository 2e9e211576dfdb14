"""H-classes, maximal subgroups, Clifford parts and the map pi."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from .core import CayleyTable, adjoin_identity, idempotents, monogenic_orbit, set_product


class NotIdempotentError(ValueError):
    pass


class InternalInvariantError(AssertionError):
    """A fact forced by finiteness failed; this indicates a bug, not bad input."""


@dataclass(frozen=True)
class HClassInfo:
    element: int
    h_class: frozenset[int]
    right_principal: frozenset[int]  # aX^1
    left_principal: frozenset[int]  # X^1a


@dataclass(frozen=True)
class GroupView:
    identity: int
    carrier: frozenset[int]
    inverse: Mapping[int, int]


def principal_sets(s: CayleyTable) -> tuple[list[frozenset[int]], list[frozenset[int]]]:
    """Right (aX^1) and left (X^1a) principal ideals of every element, computed in X^1."""
    s1 = adjoin_identity(s)
    everything = s1.carrier
    right = [set_product(s1, (a,), everything) for a in s.elements]
    left = [set_product(s1, everything, (a,)) for a in s.elements]
    return right, left


def h_class(s: CayleyTable, a: int) -> HClassInfo:
    right, left = principal_sets(s)
    members = frozenset(x for x in s.elements if right[x] == right[a] and left[x] == left[a])
    return HClassInfo(element=a, h_class=members, right_principal=right[a], left_principal=left[a])


def h_classes(s: CayleyTable) -> list[frozenset[int]]:
    """The element -> H-class lookup, as a list indexed by element."""
    right, left = principal_sets(s)
    groups: dict[tuple[frozenset[int], frozenset[int]], set[int]] = {}
    for x in s.elements:
        groups.setdefault((right[x], left[x]), set()).add(x)
    frozen = {k: frozenset(v) for k, v in groups.items()}
    return [frozen[(right[x], left[x])] for x in s.elements]


def _require_idempotent(s: CayleyTable, e: int) -> None:
    if s.table[e][e] != e:
        raise NotIdempotentError(f"{e} is not an idempotent ({e}*{e}={s.table[e][e]})")


def maximal_subgroup(s: CayleyTable, e: int, *, classes: list[frozenset[int]] | None = None) -> GroupView:
    _require_idempotent(s, e)
    classes = classes if classes is not None else h_classes(s)
    carrier = classes[e]
    t = s.table
    inverse = {}
    for x in sorted(carrier):
        inv = [y for y in carrier if t[x][y] == e and t[y][x] == e]
        if len(inv) != 1:
            raise InternalInvariantError(f"H_{e} is not a group: {x} has {len(inv)} inverses")
        inverse[x] = inv[0]
    return GroupView(identity=e, carrier=carrier, inverse=inverse)


def clifford_part(s: CayleyTable, *, classes: list[frozenset[int]] | None = None) -> frozenset[int]:
    classes = classes if classes is not None else h_classes(s)
    out: frozenset[int] = frozenset()
    for e in idempotents(s):
        out |= classes[e]
    return out


def root_set(s: CayleyTable, a: Iterable[int]) -> frozenset[int]:
    """All x having some power inside ``a``; powers are exhausted over the orbit."""
    a = frozenset(a)
    return frozenset(x for x in s.elements if not a.isdisjoint(monogenic_orbit(s, x).powers))


def eventually_clifford_part(s: CayleyTable) -> frozenset[int]:
    return root_set(s, clifford_part(s))


def pi_map(s: CayleyTable, x: int, *, classes: list[frozenset[int]] | None = None) -> int:
    """The unique idempotent e such that some power of x lies in H_e."""
    classes = classes if classes is not None else h_classes(s)
    powers = set(monogenic_orbit(s, x).powers)
    hits = [e for e in sorted(idempotents(s)) if not powers.isdisjoint(classes[e])]
    if len(hits) != 1:
        raise InternalInvariantError(f"element {x} has powers in {len(hits)} maximal subgroups: {hits}")
    return hits[0]


def pi_table(s: CayleyTable, *, classes: list[frozenset[int]] | None = None) -> tuple[int, ...]:
    classes = classes if classes is not None else h_classes(s)
    return tuple(pi_map(s, x, classes=classes) for x in s.elements)


def he_over_e(s: CayleyTable, e: int, *, classes: list[frozenset[int]] | None = None) -> frozenset[int]:
    """{x : xe = ex and xe lies in H_e}."""
    _require_idempotent(s, e)
    classes = classes if classes is not None else h_classes(s)
    t = s.table
    he = classes[e]
    out = frozenset(x for x in s.elements if t[x][e] == t[e][x] and t[x][e] in he)
    if any(t[x][y] not in out for x in out for y in out):
        raise InternalInvariantError(f"H_{e}/{e} is not closed under multiplication")
    return out
