"""Retractions onto E(X) and the Clifford part for E-separated E-semigroups."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .analysis import Analysis
from .core import CayleyTable
from .green import InternalInvariantError
from .order2 import HypothesisError
from .predicates import BY_NAME


class PreconditionError(HypothesisError):
    def __init__(self, hypothesis: str, message: str, witness: tuple[int, ...] = ()):
        super().__init__(message, witness)
        self.hypothesis = hypothesis


@dataclass(frozen=True)
class RetractionMap:
    domain: frozenset[int]
    values: Mapping[int, int]
    target: frozenset[int]

    def __call__(self, x: int) -> int:
        return self.values[x]

    def to_json(self) -> dict:
        return {
            "domain": sorted(self.domain),
            "pairs": [[x, self.values[x]] for x in sorted(self.domain)],
            "target": sorted(self.target),
        }


def retraction_failures(s: CayleyTable, r: RetractionMap) -> list[tuple[str, tuple[int, ...]]]:
    """Every way ``r`` fails to be a homomorphic retraction, with witnesses."""
    t = s.table
    out: list[tuple[str, tuple[int, ...]]] = []
    dom = sorted(r.domain)
    for x in dom:
        for y in dom:
            if t[x][y] not in r.domain:
                out.append(("domain not closed", (x, y)))
            elif r.values[t[x][y]] != t[r.values[x]][r.values[y]]:
                out.append(("not a homomorphism", (x, y)))
    for x in dom:
        if r.values[x] not in r.target:
            out.append(("value outside target", (x,)))
    for x in sorted(r.target):
        if x not in r.domain or r.values[x] != x:
            out.append(("target not fixed", (x,)))
    return out


def _as_analysis(s: CayleyTable | Analysis) -> Analysis:
    return s if isinstance(s, Analysis) else Analysis(s)


def _require(a: Analysis, *names: str) -> None:
    for name in names:
        w = BY_NAME[name].witness(a)
        if w is not None:
            hyp = name.removeprefix("is_")
            raise PreconditionError(hyp, f"hypothesis {hyp} fails: {w.role} {w.elements}", w.elements)


def _assert_retraction(s: CayleyTable, r: RetractionMap, label: str) -> None:
    bad = retraction_failures(s, r)
    if bad:
        kind, w = bad[0]
        raise InternalInvariantError(f"{label}: {kind} at {w}")


def updown_E(s: CayleyTable | Analysis) -> frozenset[int]:
    """Union of the 2-classes of all idempotents."""
    a = _as_analysis(s)
    out: frozenset[int] = frozenset()
    for e in a.E:
        out |= a.bi[e]
    return out


def build_pi_updown(a: Analysis) -> RetractionMap:
    """x -> the sole idempotent of its 2-class; checks only well-definedness."""
    domain = updown_E(a)
    values = {}
    for x in sorted(domain):
        es = sorted(a.bi[x] & a.E)
        if len(es) != 1:
            raise PreconditionError(
                "E_separated", f"2-class of {x} contains {len(es)} idempotents {es}", tuple(es)
            )
        values[x] = es[0]
    return RetractionMap(domain, values, a.E)


def build_hbar_updown(a: Analysis, pi: RetractionMap | None = None) -> RetractionMap:
    pi = pi if pi is not None else build_pi_updown(a)
    values = {x: a.t[x][pi(x)] for x in sorted(pi.domain)}
    return RetractionMap(pi.domain, values, a.clifford)


def pi_updown(s: CayleyTable | Analysis) -> RetractionMap:
    a = _as_analysis(s)
    _require(a, "is_E_separated", "is_E_semigroup")
    r = build_pi_updown(a)
    _assert_retraction(a.s, r, "pi on the 2-classes of idempotents")
    return r


def hbar_updown(s: CayleyTable | Analysis) -> RetractionMap:
    a = _as_analysis(s)
    _require(a, "is_E_separated", "is_E_semigroup")
    r = build_hbar_updown(a)
    _assert_retraction(a.s, r, "hbar on the 2-classes of idempotents")
    if any(a.t[x][y] not in a.clifford for x in a.clifford for y in a.clifford):
        raise InternalInvariantError("Clifford part is not a subsemigroup")
    return r


def natural_order_E(s: CayleyTable | Analysis) -> frozenset[tuple[int, int]]:
    """Pairs (e, f) of idempotents with e <= f, i.e. ef = e = fe."""
    a = _as_analysis(s)
    t = a.t
    for e in a.E_sorted:
        for f in a.E_sorted:
            if t[e][f] not in a.E or t[e][f] != t[f][e]:
                raise HypothesisError(f"E(X) is not a semilattice at ({e},{f})", (e, f))
    rel = frozenset((e, f) for e in a.E_sorted for f in a.E_sorted if a.leq_E(e, f))
    if BY_NAME["is_E_separated"].holds(a):
        quasi = frozenset((e, f) for e in a.E_sorted for f in a.E_sorted if f in a.up[e])
        if quasi != rel:
            raise InternalInvariantError("natural order on E(X) differs from the 2-quasiorder")
    return rel


def build_full_retractions(a: Analysis) -> tuple[RetractionMap, RetractionMap]:
    domain = a.s.carrier
    pi = RetractionMap(domain, {x: a.pi[x] for x in a.s.elements}, a.E)
    hbar = RetractionMap(domain, {x: a.t[x][a.pi[x]] for x in a.s.elements}, a.clifford)
    return pi, hbar


def full_retractions(s: CayleyTable | Analysis) -> tuple[RetractionMap, RetractionMap]:
    """pi and hbar on the whole semigroup; requires an E-separated pi-regular E-semigroup."""
    a = _as_analysis(s)
    _require(a, "is_E_separated", "is_pi_regular", "is_E_semigroup")
    pi, hbar = build_full_retractions(a)
    _assert_retraction(a.s, pi, "pi")
    _assert_retraction(a.s, hbar, "hbar")
    for e in a.E_sorted:
        if a.bi[e] != a.roots[e]:
            raise InternalInvariantError(f"2-class of {e} differs from the root set of H_{e}")
        if a.up[e] != frozenset(x for x in a.s.elements if a.leq_E(e, a.pi[x])):
            raise InternalInvariantError(f"up-class of {e} differs from {{x : {e} <= pi(x)}}")
    return pi, hbar
