"""Lazily computed, cached invariants of one semigroup.

Predicates, structural maps and theorem suites all need the same handful of
derived objects (H-classes, the 2-order, pi, ...). ``Analysis`` computes each
at most once.
"""

from __future__ import annotations

from functools import cached_property

from . import green, order2
from .core import CayleyTable, Orbit, idempotents, monogenic_orbit, set_product, two_sided_ideals


class Analysis:
    def __init__(self, s: CayleyTable):
        self.s = s
        self.n = s.order
        self.t = s.table

    @cached_property
    def E(self) -> frozenset[int]:
        return idempotents(self.s)

    @cached_property
    def E_sorted(self) -> tuple[int, ...]:
        return tuple(sorted(self.E))

    @cached_property
    def h_classes(self) -> list[frozenset[int]]:
        return green.h_classes(self.s)

    @cached_property
    def clifford(self) -> frozenset[int]:
        return green.clifford_part(self.s, classes=self.h_classes)

    @cached_property
    def orbits(self) -> list[Orbit]:
        return [monogenic_orbit(self.s, x) for x in self.s.elements]

    @cached_property
    def roots(self) -> dict[int, frozenset[int]]:
        """Idempotent e -> the root set of H_e."""
        return {
            e: frozenset(x for x in self.s.elements if not self.h_classes[e].isdisjoint(self.orbits[x].powers))
            for e in self.E
        }

    @cached_property
    def eventually_clifford(self) -> frozenset[int]:
        out: frozenset[int] = frozenset()
        for r in self.roots.values():
            out |= r
        return out

    @cached_property
    def pi(self) -> tuple[int, ...]:
        return green.pi_table(self.s, classes=self.h_classes)

    @cached_property
    def he_over_e(self) -> dict[int, frozenset[int]]:
        """Raw H_e/e per idempotent; closure is left for callers to check."""
        t = self.t
        return {
            e: frozenset(x for x in self.s.elements if t[x][e] == t[e][x] and t[x][e] in self.h_classes[e])
            for e in self.E
        }

    @cached_property
    def prime_coideals(self) -> list[frozenset[int]]:
        return order2.prime_coideals(self.s)

    @cached_property
    def two_order(self) -> order2.TwoOrder:
        return order2.two_order_oracle(self.s, coideals_=self.prime_coideals)

    @cached_property
    def up(self) -> list[frozenset[int]]:
        return [self.two_order.up(x) for x in self.s.elements]

    @cached_property
    def down(self) -> list[frozenset[int]]:
        return [self.two_order.down(x) for x in self.s.elements]

    @cached_property
    def bi(self) -> list[frozenset[int]]:
        return [self.two_order.bi(x) for x in self.s.elements]

    @cached_property
    def ideals(self) -> list[frozenset[int]]:
        """X^1 y X^1 per element."""
        return two_sided_ideals(self.s)

    @cached_property
    def inner_ideals(self) -> list[frozenset[int]]:
        """X y X per element (no identity adjoined)."""
        everything = self.s.carrier
        return [set_product(self.s, set_product(self.s, everything, (y,)), everything) for y in self.s.elements]

    @cached_property
    def reflection(self) -> order2.QuotientSemigroup:
        return order2.semilattice_reflection(self.s, order=self.two_order)

    def mul(self, x: int, y: int) -> int:
        return self.t[x][y]

    def leq_E(self, e: int, f: int) -> bool:
        """Natural order on idempotents: e <= f iff ef = e = fe."""
        return self.t[e][f] == e == self.t[f][e]
