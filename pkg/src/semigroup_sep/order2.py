"""The binary quasiorder, its classes, and the semilattice reflection.

``x <~ y`` holds when chi(x) <= chi(y) for every homomorphism chi into the
two-element semilattice {0, 1}. Those homomorphisms are exactly the
characteristic functions of prime coideals, so the relation is computed by
scanning subsets (the oracle) and independently by iterating the up-class
operator on two-sided ideals (the fixpoint).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .core import (
    CayleyTable,
    duo_witness,
    idempotents,
    is_ideal,
    is_semilattice,
    is_subsemigroup,
    monogenic_orbit,
    restrict,
    set_product,
    two_sided_ideals,
    viability_witness,
)
from .green import InternalInvariantError, NotIdempotentError

MAX_SUBSET_SCAN_ORDER = 20
MAX_PARTITION_SCAN_ORDER = 6


class ScanLimitError(ValueError):
    pass


class HypothesisError(ValueError):
    """The semigroup lacks a property an operation requires."""

    def __init__(self, message: str, witness: tuple[int, ...] = ()):
        super().__init__(message)
        self.witness = witness


def _mask_to_set(mask: int, n: int) -> frozenset[int]:
    return frozenset(i for i in range(n) if mask >> i & 1)


def _subsets(n: int) -> Iterator[tuple[int, frozenset[int]]]:
    for mask in range(1 << n):
        yield mask, _mask_to_set(mask, n)


def prime_coideals(s: CayleyTable) -> list[frozenset[int]]:
    """All subsets whose characteristic function is a homomorphism to 2, in bitmask order."""
    n = s.order
    if n > MAX_SUBSET_SCAN_ORDER:
        raise ScanLimitError(f"subset scan limited to order {MAX_SUBSET_SCAN_ORDER}, got {n}")
    t = s.table
    out = []
    for mask in range(1 << n):
        # chi(xy) = chi(x) chi(y)
        if all(
            (mask >> t[x][y] & 1) == (mask >> x & 1) & (mask >> y & 1)
            for x in range(n)
            for y in range(n)
        ):
            out.append(_mask_to_set(mask, n))
    return out


def coideals(s: CayleyTable) -> list[frozenset[int]]:
    """All subsets whose complement is an ideal (primality not required)."""
    n = s.order
    if n > MAX_SUBSET_SCAN_ORDER:
        raise ScanLimitError(f"subset scan limited to order {MAX_SUBSET_SCAN_ORDER}, got {n}")
    carrier = s.carrier
    return [a for _, a in _subsets(n) if is_ideal(s, carrier - a)]


def smallest_coideal(s: CayleyTable, x: int) -> frozenset[int]:
    out = s.carrier
    for c in coideals(s):
        if x in c:
            out &= c
    return out


@dataclass(frozen=True)
class TwoOrder:
    leq: tuple[tuple[bool, ...], ...]
    classes: tuple[frozenset[int], ...]

    @property
    def order(self) -> int:
        return len(self.leq)

    def up(self, x: int) -> frozenset[int]:
        return frozenset(y for y in range(self.order) if self.leq[x][y])

    def down(self, x: int) -> frozenset[int]:
        return frozenset(y for y in range(self.order) if self.leq[y][x])

    def bi(self, x: int) -> frozenset[int]:
        return frozenset(y for y in range(self.order) if self.leq[x][y] and self.leq[y][x])

    def class_index(self, x: int) -> int:
        for i, c in enumerate(self.classes):
            if x in c:
                return i
        raise KeyError(x)

    def to_json(self) -> dict:
        return {
            "leq": [[int(v) for v in row] for row in self.leq],
            "classes": [sorted(c) for c in self.classes],
        }


def _classes_from_leq(leq: Sequence[Sequence[bool]]) -> tuple[frozenset[int], ...]:
    n = len(leq)
    seen: set[int] = set()
    out = []
    for x in range(n):
        if x in seen:
            continue
        cls = frozenset(y for y in range(n) if leq[x][y] and leq[y][x])
        seen |= cls
        out.append(cls)
    return tuple(out)


def two_order_oracle(s: CayleyTable, *, coideals_: list[frozenset[int]] | None = None) -> TwoOrder:
    cs = coideals_ if coideals_ is not None else prime_coideals(s)
    n = s.order
    leq = tuple(
        tuple(all(y in c for c in cs if x in c) for y in range(n))
        for x in range(n)
    )
    return TwoOrder(leq=leq, classes=_classes_from_leq(leq))


@dataclass(frozen=True)
class UpClassTrace:
    base: int
    stages: tuple[frozenset[int], ...]

    @property
    def fixpoint(self) -> frozenset[int]:
        return self.stages[-1]

    def to_json(self) -> dict:
        return {"base": self.base, "stages": [sorted(st) for st in self.stages], "fixpoint": sorted(self.fixpoint)}


def up_class_fixpoint(s: CayleyTable, x: int, *, ideals: list[frozenset[int]] | None = None) -> UpClassTrace:
    """Iterate U -> {y : X^1 y X^1 meets U*U} from {x} until it stabilizes."""
    ideals = ideals if ideals is not None else two_sided_ideals(s)
    stages = [frozenset((x,))]
    for _ in range(s.order):
        square = set_product(s, stages[-1], stages[-1])
        nxt = frozenset(y for y in s.elements if not ideals[y].isdisjoint(square))
        if nxt == stages[-1]:
            break
        stages.append(nxt)
    return UpClassTrace(base=x, stages=tuple(stages))


def two_order_fixpoint(s: CayleyTable) -> TwoOrder:
    ideals = two_sided_ideals(s)
    ups = [up_class_fixpoint(s, x, ideals=ideals).fixpoint for x in s.elements]
    leq = tuple(tuple(y in ups[x] for y in s.elements) for x in s.elements)
    return TwoOrder(leq=leq, classes=_classes_from_leq(leq))


def up_down_biclass(
    s: CayleyTable, x: int, *, order: TwoOrder | None = None
) -> tuple[frozenset[int], frozenset[int], frozenset[int]]:
    order = order if order is not None else two_order_oracle(s)
    sets = (order.up(x), order.down(x), order.bi(x))
    for name, a in zip(("up", "down", "bi"), sets):
        if not is_subsemigroup(s, a):
            raise InternalInvariantError(f"{name}-class of {x} is not a subsemigroup")
    return sets


@dataclass(frozen=True)
class Congruence:
    partition: tuple[frozenset[int], ...]

    @classmethod
    def from_blocks(cls, blocks) -> Congruence:
        """Normalize: blocks ordered by least element."""
        return cls(tuple(sorted((frozenset(b) for b in blocks), key=min)))

    @property
    def class_of(self) -> dict[int, int]:
        return {x: i for i, b in enumerate(self.partition) for x in b}

    def relates(self, x: int, y: int) -> bool:
        c = self.class_of
        return c[x] == c[y]

    def pairs(self) -> frozenset[tuple[int, int]]:
        return frozenset((x, y) for b in self.partition for x in b for y in b)


def is_congruence(s: CayleyTable, cong: Congruence) -> bool:
    c = cong.class_of
    t = s.table
    for block in cong.partition:
        rep = min(block)
        for x in block:
            for a in s.elements:
                if c[t[a][x]] != c[t[a][rep]] or c[t[x][a]] != c[t[rep][a]]:
                    return False
    return True


@dataclass(frozen=True)
class QuotientSemigroup:
    quotient: CayleyTable
    projection: tuple[int, ...]
    congruence: Congruence

    def to_json(self) -> dict:
        return {
            "classes": [sorted(b) for b in self.congruence.partition],
            "projection": list(self.projection),
            "quotient": self.quotient.to_json(),
        }


def quotient(s: CayleyTable, cong: Congruence) -> QuotientSemigroup:
    if not is_congruence(s, cong):
        raise ValueError("partition is not a congruence")
    c = cong.class_of
    reps = [min(b) for b in cong.partition]
    rows = tuple(tuple(c[s.table[a][b]] for b in reps) for a in reps)
    projection = tuple(c[x] for x in s.elements)
    return QuotientSemigroup(CayleyTable(rows), projection, cong)


def updown_congruence(s: CayleyTable, *, order: TwoOrder | None = None) -> Congruence:
    order = order if order is not None else two_order_oracle(s)
    return Congruence.from_blocks(order.classes)


def semilattice_reflection(s: CayleyTable, *, order: TwoOrder | None = None) -> QuotientSemigroup:
    q = quotient(s, updown_congruence(s, order=order))
    if not is_semilattice(q.quotient):
        raise InternalInvariantError("quotient by the 2-class congruence is not a semilattice")
    return q


def is_two_trivial(s: CayleyTable) -> bool:
    by_coideals = set(prime_coideals(s)) == {frozenset(), s.carrier}
    by_reflection = semilattice_reflection(s).quotient.order == 1
    if by_coideals != by_reflection:
        raise InternalInvariantError("2-triviality: coideal count and reflection size disagree")
    return by_coideals


def set_partitions(n: int) -> Iterator[tuple[frozenset[int], ...]]:
    """All partitions of 0..n-1 via restricted growth strings."""
    rgs = [0] * n

    def rec(i: int, top: int) -> Iterator[tuple[frozenset[int], ...]]:
        if i == n:
            blocks: list[set[int]] = [set() for _ in range(top + 1)]
            for x, b in enumerate(rgs):
                blocks[b].add(x)
            yield tuple(frozenset(b) for b in blocks)
            return
        for b in range(top + 2):
            rgs[i] = b
            yield from rec(i + 1, max(top, b))

    if n == 0:
        yield ()
        return
    rgs[0] = 0
    yield from rec(1, 0)


def semilattice_congruences(s: CayleyTable) -> list[Congruence]:
    if s.order > MAX_PARTITION_SCAN_ORDER:
        raise ScanLimitError(f"partition scan limited to order {MAX_PARTITION_SCAN_ORDER}, got {s.order}")
    out = []
    for blocks in set_partitions(s.order):
        cong = Congruence.from_blocks(blocks)
        if is_congruence(s, cong) and is_semilattice(quotient(s, cong).quotient):
            out.append(cong)
    return out


def up_class_duo(s: CayleyTable, a: int) -> frozenset[int]:
    """{x : some power of a lies in XxX}; valid for duo semigroups."""
    w = duo_witness(s)
    if w is not None:
        raise HypothesisError(f"semigroup is not duo: {w[0]}X != X{w[0]}", w)
    everything = s.carrier
    powers = set(monogenic_orbit(s, a).powers)
    return frozenset(
        x for x in s.elements
        if not powers.isdisjoint(set_product(s, set_product(s, everything, (x,)), everything))
    )


def up_class_viable(s: CayleyTable, e: int) -> frozenset[int]:
    """{x : e lies in X^1 x X^1}; valid for viable semigroups and idempotent e."""
    w = viability_witness(s)
    if w is not None:
        raise HypothesisError(f"semigroup is not viable: witness pair {w}", w)
    if s.table[e][e] != e:
        raise NotIdempotentError(f"{e} is not an idempotent")
    ideals = two_sided_ideals(s)
    return frozenset(x for x in s.elements if e in ideals[x])


def induced_two_trivial(s: CayleyTable, sub: frozenset[int]) -> bool:
    """Whether ``sub``, with the induced multiplication, is 2-trivial."""
    t, _ = restrict(s, sub)
    return set(prime_coideals(t)) == {frozenset(), t.carrier}


def separating_coideal(s: CayleyTable, e: int, f: int, coideals_: list[frozenset[int]]) -> frozenset[int] | None:
    for c in coideals_:
        if (e in c) != (f in c):
            return c
    return None


def is_E_separated_by_coideals(s: CayleyTable, coideals_: list[frozenset[int]] | None = None) -> bool:
    """Independent route: every pair of distinct idempotents split by some prime coideal."""
    cs = coideals_ if coideals_ is not None else prime_coideals(s)
    es = sorted(idempotents(s))
    return all(
        separating_coideal(s, e, f, cs) is not None
        for i, e in enumerate(es) for f in es[i + 1:]
    )
