"""Cayley tables of finite semigroups and the basic subset algebra on them.

Elements of an order-n semigroup are the integers 0..n-1 and subsets are
plain ``frozenset`` objects.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import permutations, product
from typing import Iterable, Mapping, Sequence

ElementSet = frozenset

MAX_CANONICAL_ORDER = 7


class TableError(ValueError):
    """Raised when a table source cannot be turned into a semigroup."""


class TableParseError(TableError):
    pass


class AssociativityError(TableError):
    def __init__(self, witness: tuple[int, int, int], message: str):
        super().__init__(message)
        self.witness = witness


def associativity_witness(rows: Sequence[Sequence[int]]) -> tuple[int, int, int] | None:
    """First triple (i, j, k) in lexicographic order with (ij)k != i(jk)."""
    n = len(rows)
    for i, j, k in product(range(n), repeat=3):
        if rows[rows[i][j]][k] != rows[i][rows[j][k]]:
            return (i, j, k)
    return None


@dataclass(frozen=True)
class CayleyTable:
    """A finite semigroup given by its multiplication table.

    ``table[i][j]`` is the product ``i*j``. Construction validates the
    shape, the entry range and associativity, so every instance is a
    genuine semigroup.
    """

    table: tuple[tuple[int, ...], ...]
    order: int = field(init=False)

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(v) for v in row) for row in self.table)
        n = len(rows)
        if n < 1:
            raise TableParseError("a semigroup needs at least one element")
        for i, row in enumerate(rows):
            if len(row) != n:
                raise TableParseError(f"row {i} has {len(row)} entries, expected {n}")
            for j, v in enumerate(row):
                if not 0 <= v < n:
                    raise TableParseError(f"entry ({i},{j}) = {v} is out of range 0..{n - 1}")
        w = associativity_witness(rows)
        if w is not None:
            i, j, k = w
            lhs = rows[rows[i][j]][k]
            rhs = rows[i][rows[j][k]]
            raise AssociativityError(
                w, f"not associative at ({i},{j},{k}): ({i}*{j})*{k}={lhs} but {i}*({j}*{k})={rhs}"
            )
        object.__setattr__(self, "table", rows)
        object.__setattr__(self, "order", n)

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> CayleyTable:
        return cls(tuple(tuple(r) for r in rows))

    @classmethod
    def from_flat(cls, n: int, entries: Sequence[int]) -> CayleyTable:
        if len(entries) != n * n:
            raise TableParseError(f"expected {n * n} entries, got {len(entries)}")
        return cls(tuple(tuple(entries[i * n:(i + 1) * n]) for i in range(n)))

    def __call__(self, x: int, y: int) -> int:
        return self.table[x][y]

    @property
    def elements(self) -> range:
        return range(self.order)

    @property
    def carrier(self) -> frozenset[int]:
        return frozenset(range(self.order))

    def flat(self) -> tuple[int, ...]:
        return tuple(v for row in self.table for v in row)

    def power(self, x: int, k: int) -> int:
        if k < 1:
            raise ValueError("powers start at 1")
        p = x
        for _ in range(k - 1):
            p = self.table[p][x]
        return p

    def to_text(self) -> str:
        lines = [str(self.order)] + [" ".join(map(str, row)) for row in self.table]
        return "\n".join(lines) + "\n"

    def to_json(self) -> dict:
        return {"order": self.order, "table": [list(row) for row in self.table]}

    def to_line(self) -> str:
        return f"{self.order}:" + ",".join(map(str, self.flat()))


# -- parsing -----------------------------------------------------------------

def parse_text(text: str) -> CayleyTable:
    lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
    if not lines:
        raise TableParseError("empty input")
    try:
        n = int(lines[0])
    except ValueError:
        raise TableParseError(f"line 1: expected the order, got {lines[0]!r}") from None
    if n < 1:
        raise TableParseError("a semigroup needs at least one element")
    if len(lines) != n + 1:
        raise TableParseError(f"expected {n} table rows, got {len(lines) - 1}")
    rows = []
    for lineno, ln in enumerate(lines[1:], start=2):
        try:
            rows.append(tuple(int(tok) for tok in ln.split()))
        except ValueError:
            raise TableParseError(f"line {lineno}: non-integer entry in {ln!r}") from None
    return CayleyTable(tuple(rows))


def parse_json(text: str | Mapping) -> CayleyTable:
    try:
        doc = json.loads(text) if isinstance(text, str) else text
    except json.JSONDecodeError as exc:
        raise TableParseError(f"invalid JSON: {exc}") from None
    if not isinstance(doc, Mapping) or "table" not in doc:
        raise TableParseError('JSON table must be an object with a "table" key')
    table = doc["table"]
    if not isinstance(table, list) or not all(isinstance(r, list) for r in table):
        raise TableParseError('"table" must be a list of rows')
    if any(not isinstance(v, int) or isinstance(v, bool) for r in table for v in r):
        raise TableParseError("table entries must be integers")
    if "order" in doc and doc["order"] != len(table):
        raise TableParseError(f'"order" is {doc["order"]} but the table has {len(table)} rows')
    return CayleyTable(tuple(tuple(r) for r in table))


def parse_line(line: str) -> CayleyTable:
    """Parse the one-line corpus format ``n:e00,e01,...``."""
    head, sep, body = line.strip().partition(":")
    if not sep:
        raise TableParseError(f"corpus line lacks ':' separator: {line!r}")
    try:
        n = int(head)
        entries = [int(tok) for tok in body.split(",")] if body else []
    except ValueError:
        raise TableParseError(f"malformed corpus line: {line!r}") from None
    return CayleyTable.from_flat(n, entries)


def load_table(text: str) -> CayleyTable:
    """Parse either the text format or the JSON format, detected by the first character."""
    if text.lstrip().startswith("{"):
        return parse_json(text)
    return parse_text(text)


# -- constructions -------------------------------------------------------------

TWO = CayleyTable(((0, 0), (0, 1)))


def adjoin_identity(s: CayleyTable) -> CayleyTable:
    """Return X^1: a fresh identity with id ``s.order`` is always adjoined."""
    n = s.order
    rows = [row + (i,) for i, row in enumerate(s.table)]
    rows.append(tuple(range(n + 1)))
    return CayleyTable(tuple(rows))


def idempotents(s: CayleyTable) -> frozenset[int]:
    return frozenset(x for x in s.elements if s.table[x][x] == x)


@dataclass(frozen=True)
class Orbit:
    base: int
    index: int
    period: int
    powers: tuple[int, ...]

    @property
    def elements(self) -> frozenset[int]:
        return frozenset(self.powers)

    def power(self, k: int) -> int:
        """x^k for any k >= 1, folded onto the cycle."""
        if k < 1:
            raise ValueError("powers start at 1")
        if k <= len(self.powers):
            return self.powers[k - 1]
        return self.powers[self.index - 1 + (k - self.index) % self.period]

    @property
    def exponent_range(self) -> range:
        """Exponents 1..index+period-1; every power of the base occurs among them."""
        return range(1, self.index + self.period)


def monogenic_orbit(s: CayleyTable, x: int) -> Orbit:
    seen: dict[int, int] = {}
    powers: list[int] = []
    p = x
    k = 1
    while p not in seen:
        seen[p] = k
        powers.append(p)
        p = s.table[p][x]
        k += 1
    index = seen[p]
    return Orbit(base=x, index=index, period=k - index, powers=tuple(powers))


def set_product(s: CayleyTable, a: Iterable[int], b: Iterable[int]) -> frozenset[int]:
    b = tuple(b)
    return frozenset(s.table[x][y] for x in a for y in b)


def is_subsemigroup(s: CayleyTable, a: frozenset[int]) -> bool:
    return all(s.table[x][y] in a for x in a for y in a)


def is_ideal(s: CayleyTable, a: frozenset[int]) -> bool:
    return all(s.table[x][y] in a and s.table[y][x] in a for x in a for y in s.elements)


@dataclass(frozen=True)
class SubsetClassification:
    is_subsemigroup: bool
    is_ideal: bool
    is_prime_ideal: bool
    is_coideal: bool
    is_prime_coideal: bool


def classify_subset(s: CayleyTable, a: Iterable[int]) -> SubsetClassification:
    a = frozenset(a)
    complement = s.carrier - a
    sub = is_subsemigroup(s, a)
    ideal = is_ideal(s, a)
    co_sub = is_subsemigroup(s, complement)
    co_ideal = is_ideal(s, complement)
    return SubsetClassification(
        is_subsemigroup=sub,
        is_ideal=ideal,
        is_prime_ideal=ideal and co_sub,
        is_coideal=co_ideal,
        is_prime_coideal=co_ideal and sub,
    )


def hom_check(s: CayleyTable, t: CayleyTable, f: Mapping[int, int] | Sequence[int]) -> bool:
    st, tt = s.table, t.table
    return all(f[st[x][y]] == tt[f[x]][f[y]] for x in s.elements for y in s.elements)


def characteristic(s: CayleyTable, a: Iterable[int]) -> tuple[int, ...]:
    a = frozenset(a)
    return tuple(int(x in a) for x in s.elements)


def restrict(s: CayleyTable, sub: Iterable[int]) -> tuple[CayleyTable, tuple[int, ...]]:
    """Induced table on a subsemigroup; returns it with the sorted element labels."""
    labels = tuple(sorted(sub))
    index = {x: i for i, x in enumerate(labels)}
    try:
        rows = tuple(tuple(index[s.table[x][y]] for y in labels) for x in labels)
    except KeyError:
        raise ValueError("subset is not closed under multiplication") from None
    return CayleyTable(rows), labels


def relabel(s: CayleyTable, perm: Sequence[int]) -> CayleyTable:
    """Transport the table along ``x -> perm[x]``."""
    n = s.order
    inv = [0] * n
    for x, px in enumerate(perm):
        inv[px] = x
    t = s.table
    return CayleyTable(tuple(
        tuple(perm[t[inv[i]][inv[j]]] for j in range(n)) for i in range(n)
    ))


def _relabeled_flat(t: tuple[tuple[int, ...], ...], perm: Sequence[int], inv: Sequence[int]) -> tuple[int, ...]:
    n = len(t)
    return tuple(perm[t[inv[i]][inv[j]]] for i in range(n) for j in range(n))


def canonical_form(s: CayleyTable) -> CayleyTable:
    """Lexicographically least row-major relabeling over all n! permutations."""
    n = s.order
    if n > MAX_CANONICAL_ORDER:
        raise ValueError(f"canonical_form scans n! relabelings; order {n} exceeds {MAX_CANONICAL_ORDER}")
    best = None
    for perm in permutations(range(n)):
        inv = [0] * n
        for x, px in enumerate(perm):
            inv[px] = x
        cand = _relabeled_flat(s.table, perm, inv)
        if best is None or cand < best:
            best = cand
    return CayleyTable.from_flat(n, best)


def are_isomorphic(s: CayleyTable, t: CayleyTable) -> bool:
    return s.order == t.order and canonical_form(s) == canonical_form(t)


def is_commutative(s: CayleyTable) -> bool:
    t = s.table
    return all(t[x][y] == t[y][x] for x in s.elements for y in s.elements)


def is_semilattice(s: CayleyTable) -> bool:
    return is_commutative(s) and len(idempotents(s)) == s.order


def two_sided_ideals(s: CayleyTable) -> list[frozenset[int]]:
    """X^1 y X^1 for every y."""
    s1 = adjoin_identity(s)
    everything = s1.carrier
    return [
        frozenset(x for x in set_product(s1, set_product(s1, everything, (y,)), everything) if x < s.order)
        for y in s.elements
    ]


def duo_witness(s: CayleyTable) -> tuple[int] | None:
    """An element x with xX != Xx, or None when the semigroup is duo."""
    everything = s.carrier
    for x in s.elements:
        if set_product(s, (x,), everything) != set_product(s, everything, (x,)):
            return (x,)
    return None


def viability_witness(s: CayleyTable) -> tuple[int, int] | None:
    """A pair (x, y) with xy, yx idempotent but xy != yx, or None when viable."""
    t = s.table
    for x, y in product(s.elements, repeat=2):
        xy, yx = t[x][y], t[y][x]
        if t[xy][xy] == xy and t[yx][yx] == yx and xy != yx:
            return (x, y)
    return None
