"""Decidable versions of the semigroup classes, each with a counterexample finder.

Every class is stated as a universally quantified condition. A predicate
scans candidate tuples in lexicographic order and reports the first one that
refutes the condition, so a reported witness can always be replayed through
``refutes`` to confirm it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Iterable

from .analysis import Analysis
from .core import CayleyTable, is_ideal

Candidates = Callable[[Analysis], Iterable[tuple[int, ...]]]
Refuter = Callable[[Analysis, tuple[int, ...]], bool]


@dataclass(frozen=True)
class Witness:
    role: str
    elements: tuple[int, ...]

    def to_json(self) -> dict:
        return {"role": self.role, "elements": list(self.elements)}


@dataclass(frozen=True)
class Predicate:
    name: str
    role: str
    candidates: Candidates
    refutes: Refuter

    def witness(self, a: Analysis) -> Witness | None:
        for w in self.candidates(a):
            if self.refutes(a, w):
                return Witness(self.role, w)
        return None

    def holds(self, a: Analysis) -> bool:
        return self.witness(a) is None


def _elems(k: int) -> Candidates:
    return lambda a: product(a.s.elements, repeat=k)


def _idems(k: int) -> Candidates:
    return lambda a: product(a.E_sorted, repeat=k)


def _idem_then_elems(k: int) -> Candidates:
    return lambda a: ((e, *rest) for e in a.E_sorted for rest in product(a.s.elements, repeat=k))


def _is_idem(a: Analysis, x: int) -> bool:
    return a.t[x][x] == x


def _commute(a: Analysis, x: int, y: int) -> bool:
    return a.t[x][y] == a.t[y][x]


# -- refuters ----------------------------------------------------------------------

def _ref_E_semigroup(a, w):
    e, f = w
    return _is_idem(a, e) and _is_idem(a, f) and not _is_idem(a, a.t[e][f])


def _ref_commutative(a, w):
    return not _commute(a, *w)


def _ref_idempotent_element(a, w):
    return not _is_idem(a, w[0])


def _ref_duo(a, w):
    (x,) = w
    t = a.t
    return {t[x][y] for y in a.s.elements} != {t[y][x] for y in a.s.elements}


def _ref_viable(a, w):
    x, y = w
    xy, yx = a.t[x][y], a.t[y][x]
    return _is_idem(a, xy) and _is_idem(a, yx) and xy != yx


def _ref_E_separated(a, w):
    e, f = w
    return e != f and _is_idem(a, e) and _is_idem(a, f) and f in a.bi[e]


def _ref_E_commutative(a, w):
    e, f = w
    return _is_idem(a, e) and _is_idem(a, f) and not _commute(a, e, f)


def _ref_E_central(a, w):
    e, x = w
    return _is_idem(a, e) and not _commute(a, e, x)


def _ref_E_up_central(a, w):
    e, x = w
    return _is_idem(a, e) and x in a.up[e] and not _commute(a, e, x)


def _ref_E_hypercentral(a, w):
    e, x, y = w
    return _is_idem(a, e) and a.t[x][y] == e and not (_commute(a, x, e) and _commute(a, y, e))


def _ref_E_hypocentral(a, w):
    e, x, y = w
    return _is_idem(a, e) and a.t[x][y] == e and not (_commute(a, x, e) or _commute(a, y, e))


def _ref_E_upcentral(a, w):
    e, f, x = w
    t = a.t
    return (
        _is_idem(a, e) and _is_idem(a, f)
        and t[f][e] == e == t[e][f]
        and x in a.roots[f]
        and not _commute(a, x, e)
    )


def _ref_E_viable(a, w):
    (e,) = w
    return _is_idem(a, e) and not is_ideal(a.s, a.s.carrier - a.he_over_e[e])


def _ref_unipotent(a, w):
    # more than one idempotent; the all-idempotent-free case cannot occur in a finite semigroup
    e, f = w
    return e != f and _is_idem(a, e) and _is_idem(a, f)


def _ref_two_trivial(a, w):
    x, y = w
    return y not in a.bi[x]


def _ref_archimedean(a, w):
    x, y = w
    return a.inner_ideals[y].isdisjoint(a.orbits[x].powers)


def _ref_archimedean_x1(a, w):
    x, y = w
    return a.ideals[y].isdisjoint(a.orbits[x].powers)


def _ref_regular(a, w):
    (x,) = w
    t = a.t
    return not any(t[t[x][y]][x] == x for y in a.s.elements)


def _ref_completely_regular(a, w):
    (x,) = w
    t = a.t
    return not any(t[t[x][y]][x] == x and t[x][y] == t[y][x] for y in a.s.elements)


def _ref_pi_regular(a, w):
    (x,) = w
    t = a.t
    return not any(
        t[t[p][y]][p] == p
        for p in a.orbits[x].powers
        for y in a.s.elements
    )


def _ref_completely_pi_regular(a, w):
    (x,) = w
    t = a.t
    return not any(
        t[t[p][y]][p] == p and t[p][y] == t[y][p]
        for p in a.orbits[x].powers
        for y in a.s.elements
    )


def _ref_clifford(a, w):
    return w[0] not in a.clifford


def _ref_eventually_clifford(a, w):
    return w[0] not in a.eventually_clifford


def _upcentral_candidates(a):
    return ((e, f, x) for e in a.E_sorted for f in a.E_sorted for x in a.s.elements)


def _semilattice_candidates(a):
    yield from ((x,) for x in a.s.elements)
    yield from product(a.s.elements, repeat=2)


def _ref_semilattice(a, w):
    if len(w) == 1:
        return _ref_idempotent_element(a, w)
    return _ref_commutative(a, w)


PREDICATES: tuple[Predicate, ...] = (
    Predicate("is_E_semigroup", "e,f idempotent with ef not idempotent", _idems(2), _ref_E_semigroup),
    Predicate("is_semilattice", "x not idempotent, or x,y not commuting", _semilattice_candidates, _ref_semilattice),
    Predicate("is_commutative", "x,y with xy != yx", _elems(2), _ref_commutative),
    Predicate("is_duo", "x with xX != Xx", _elems(1), _ref_duo),
    Predicate("is_viable", "x,y with xy, yx idempotent and xy != yx", _elems(2), _ref_viable),
    Predicate("is_E_separated", "distinct idempotents e,f in one 2-class", _idems(2), _ref_E_separated),
    Predicate("is_E_commutative", "idempotents e,f with ef != fe", _idems(2), _ref_E_commutative),
    Predicate("is_E_central", "idempotent e, x with ex != xe", _idem_then_elems(1), _ref_E_central),
    Predicate("is_E_up_central", "idempotent e, x in up-class of e with ex != xe", _idem_then_elems(1), _ref_E_up_central),
    Predicate("is_E_hypercentral", "idempotent e = xy with xe != ex or ye != ey", _idem_then_elems(2), _ref_E_hypercentral),
    Predicate("is_E_hypocentral", "idempotent e = xy with xe != ex and ye != ey", _idem_then_elems(2), _ref_E_hypocentral),
    Predicate("is_E_upcentral", "idempotents e <= f, x with a power in H_f, xe != ex", _upcentral_candidates, _ref_E_upcentral),
    Predicate("is_E_viable", "idempotent e whose H_e/e is not a coideal", _idems(1), _ref_E_viable),
    Predicate("is_unipotent", "two distinct idempotents", _idems(2), _ref_unipotent),
    Predicate("is_two_trivial", "x,y separated by a homomorphism to 2", _elems(2), _ref_two_trivial),
    Predicate("is_archimedean", "x,y with no power of x in XyX", _elems(2), _ref_archimedean),
    Predicate("is_regular", "x with no y such that xyx = x", _elems(1), _ref_regular),
    Predicate("is_completely_regular", "x with no commuting y such that xyx = x", _elems(1), _ref_completely_regular),
    Predicate("is_pi_regular", "x with no power p and y such that pyp = p", _elems(1), _ref_pi_regular),
    Predicate("is_completely_pi_regular", "x with no power p and y commuting with p such that pyp = p", _elems(1), _ref_completely_pi_regular),
    Predicate("is_clifford", "x outside the Clifford part", _elems(1), _ref_clifford),
    Predicate("is_eventually_clifford", "x outside the eventually Clifford part", _elems(1), _ref_eventually_clifford),
)

ARCHIMEDEAN_X1 = Predicate(
    "is_archimedean_x1", "x,y with no power of x in X^1yX^1", _elems(2), _ref_archimedean_x1
)

BY_NAME = {p.name: p for p in PREDICATES}
BY_NAME[ARCHIMEDEAN_X1.name] = ARCHIMEDEAN_X1

FLAG_NAMES = tuple(p.name for p in PREDICATES)


@dataclass(frozen=True)
class PropertyReport:
    flags: dict[str, bool]
    witnesses: dict[str, Witness] = field(default_factory=dict)

    def __getattr__(self, name: str) -> bool:
        flags = object.__getattribute__(self, "flags")
        if name in flags:
            return flags[name]
        raise AttributeError(name)

    def to_json(self) -> dict:
        return {
            "flags": {k: self.flags[k] for k in FLAG_NAMES},
            "witnesses": {k: self.witnesses[k].to_json() for k in FLAG_NAMES if k in self.witnesses},
        }


def evaluate_properties(s: CayleyTable | Analysis) -> PropertyReport:
    a = s if isinstance(s, Analysis) else Analysis(s)
    flags: dict[str, bool] = {}
    witnesses: dict[str, Witness] = {}
    for p in PREDICATES:
        w = p.witness(a)
        flags[p.name] = w is None
        if w is not None:
            witnesses[p.name] = w
    return PropertyReport(flags, witnesses)


def replay(name: str, a: Analysis, w: Witness) -> bool:
    """True when the witness still refutes the named property."""
    return BY_NAME[name].refutes(a, w.elements)


def holds(name: str, a: Analysis) -> bool:
    return BY_NAME[name].holds(a)


def center(s: CayleyTable) -> frozenset[int]:
    t = s.table
    return frozenset(z for z in s.elements if all(t[z][x] == t[x][z] for x in s.elements))
