"""Exhaustive generation of semigroup tables by backtracking.

Cells are filled in row-major order with values in increasing order, so
tables come out in lexicographic order of their flattened form. After each
placement, every associativity triple that just became fully determined is
checked. With ``up_to_iso`` the search also prunes any partial table for
which some relabeling is already lexicographically smaller; the survivors
are exactly the tables equal to their own canonical form.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import permutations, product
from typing import Iterator, Sequence

from .core import CayleyTable

MAX_LABELLED_ORDER = 5
MAX_ISO_ORDER = 6


@dataclass(frozen=True)
class EnumerationConfig:
    order: int
    up_to_iso: bool = False
    prefix_filter: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        limit = MAX_ISO_ORDER if self.up_to_iso else MAX_LABELLED_ORDER
        if not 1 <= self.order <= limit:
            mode = "up to isomorphism" if self.up_to_iso else "labelled"
            raise ValueError(f"{mode} enumeration supports orders 1..{limit}, got {self.order}")
        n = self.order
        if len(self.prefix_filter) > n * n:
            raise ValueError("prefix longer than the table")
        if any(not 0 <= v < n for v in self.prefix_filter):
            raise ValueError("prefix entries out of range")


def _consistent(T: list[int], n: int, where: list[list[int]], i: int, j: int, v: int) -> bool:
    """Check the triples completed by setting T[i][j] = v (already stored in T).

    ``where[u]`` lists the filled cells holding value u.
    """
    # (i j) c = i (j c)
    for c in range(n):
        lhs = T[v * n + c]
        jc = T[j * n + c]
        if lhs < 0 or jc < 0:
            continue
        rhs = T[i * n + jc]
        if rhs >= 0 and lhs != rhs:
            return False
    # (a i) j = a (i j)
    for a in range(n):
        ai = T[a * n + i]
        if ai >= 0:
            lhs = T[ai * n + j]
            rhs = T[a * n + v]
            if lhs >= 0 and rhs >= 0 and lhs != rhs:
                return False
    # (a b) j = a (b j) where ab = i
    for cell in where[i]:
        a, b = divmod(cell, n)
        bj = T[b * n + j]
        if bj >= 0:
            rhs = T[a * n + bj]
            if rhs >= 0 and rhs != v:
                return False
    # (i a) b = i (a b) where ab = j
    for cell in where[j]:
        a, b = divmod(cell, n)
        ia = T[i * n + a]
        if ia >= 0:
            lhs = T[ia * n + b]
            if lhs >= 0 and lhs != v:
                return False
    return True


def _perm_pairs(n: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    out = []
    for perm in permutations(range(n)):
        if perm == tuple(range(n)):
            continue
        inv = [0] * n
        for x, px in enumerate(perm):
            inv[px] = x
        out.append((perm, tuple(inv)))
    return out


def _maybe_minimal(T: list[int], n: int, filled: int, perms) -> bool:
    """False if some relabeling is smaller than every completion of T."""
    for perm, inv in perms:
        for c in range(filled):
            src = T[inv[c // n] * n + inv[c % n]]
            if src < 0:
                break
            w = perm[src]
            if w < T[c]:
                return False
            if w > T[c]:
                break
    return True


def _search(n: int, prefix: Sequence[int], up_to_iso: bool) -> Iterator[tuple[int, ...]]:
    size = n * n
    T = [-1] * size
    where: list[list[int]] = [[] for _ in range(n)]
    perms = _perm_pairs(n) if up_to_iso else None

    def place(k: int, v: int) -> bool:
        T[k] = v
        where[v].append(k)
        i, j = divmod(k, n)
        if not _consistent(T, n, where, i, j, v):
            return False
        return not up_to_iso or _maybe_minimal(T, n, k + 1, perms)

    for k, v in enumerate(prefix):
        if not place(k, v):
            return

    def rec(k: int) -> Iterator[tuple[int, ...]]:
        if k == size:
            yield tuple(T)
            return
        for v in range(n):
            if place(k, v):
                yield from rec(k + 1)
            where[v].pop()
        T[k] = -1

    yield from rec(len(prefix))


def _collect(args: tuple[int, tuple[int, ...], bool]) -> list[tuple[int, ...]]:
    n, prefix, iso = args
    return list(_search(n, prefix, iso))


def _split_prefixes(cfg: EnumerationConfig, depth: int) -> list[tuple[int, ...]]:
    n = cfg.order
    extra = max(0, min(depth, n * n) - len(cfg.prefix_filter))
    return [cfg.prefix_filter + tail for tail in product(range(n), repeat=extra)]


def enumerate_flat(cfg: EnumerationConfig, jobs: int = 1) -> Iterator[tuple[int, ...]]:
    """Flattened tables in lexicographic order. ``jobs > 1`` splits the search by prefix."""
    if jobs <= 1:
        yield from _search(cfg.order, cfg.prefix_filter, cfg.up_to_iso)
        return
    prefixes = _split_prefixes(cfg, 2)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        # map preserves input order, and prefixes are sorted, so output stays lexicographic
        for chunk in pool.map(_collect, [(cfg.order, p, cfg.up_to_iso) for p in prefixes]):
            yield from chunk


def enumerate_tables(cfg: EnumerationConfig, jobs: int = 1) -> Iterator[CayleyTable]:
    for flat in enumerate_flat(cfg, jobs):
        yield CayleyTable.from_flat(cfg.order, flat)


def count_tables(n: int, up_to_iso: bool = False, jobs: int = 1) -> int:
    return sum(1 for _ in enumerate_flat(EnumerationConfig(n, up_to_iso), jobs))


def corpus(max_order: int, up_to_iso: bool = False) -> Iterator[CayleyTable]:
    """All tables of orders 1..max_order, smallest order first."""
    for n in range(1, max_order + 1):
        yield from enumerate_tables(EnumerationConfig(n, up_to_iso))
