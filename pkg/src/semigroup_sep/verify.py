"""Theorem suites swept over the exhaustively enumerated corpus.

Each suite looks at one semigroup at a time. It decides whether the
semigroup meets the statement's hypotheses, checks every item, and records
violations as ``(item, witness)`` pairs. Biconditionals are split into
directed implications so a violation names the direction that failed.
"""

from __future__ import annotations

import json
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from typing import Callable, Iterable

from . import order2
from .analysis import Analysis
from .core import CayleyTable, is_ideal, is_subsemigroup, parse_line, set_product
from .enumeration import MAX_ISO_ORDER, MAX_LABELLED_ORDER, EnumerationConfig, enumerate_flat
from .predicates import BY_NAME
from .structure import build_full_retractions, build_hbar_updown, build_pi_updown, retraction_failures, updown_E

MAX_REPORTED_VIOLATIONS = 20


class UnknownSuiteError(KeyError):
    pass


def flag(a: Analysis, name: str) -> bool:
    cache = a.__dict__.setdefault("_flags", {})
    if name not in cache:
        cache[name] = BY_NAME[name].holds(a)
    return cache[name]


class Check:
    """Per-semigroup outcome collector."""

    def __init__(self) -> None:
        self.matched = False
        self.violations: list[tuple[str, tuple[int, ...]]] = []
        self.counters: Counter[str] = Counter()

    def expect(self, ok: bool, item: str, witness: Iterable[int] = ()) -> bool:
        if not ok:
            self.violations.append((item, tuple(witness)))
        return ok

    def count(self, key: str, n: int = 1) -> None:
        self.counters[key] += n

    def equivalence(self, values: dict[str, bool]) -> None:
        """Record every failing directed implication p => q among ``values``."""
        for p, vp in values.items():
            for q, vq in values.items():
                if p != q and vp and not vq:
                    self.violations.append((f"{p} => {q}", ()))
        for name, v in values.items():
            self.count(f"{name}:{'yes' if v else 'no'}")


def _subset_witness(a: frozenset[int], b: frozenset[int]) -> tuple[int, ...]:
    return tuple(sorted(a - b)[:1])


def _is_ideal_in(a: Analysis, inner: frozenset[int], outer: frozenset[int]) -> tuple[int, int] | None:
    """A pair (x, y), x in inner, y in outer, with xy or yx outside inner."""
    t = a.t
    for x in sorted(inner):
        if x not in outer:
            return (x, x)
        for y in sorted(outer):
            if t[x][y] not in inner or t[y][x] not in inner:
                return (x, y)
    return None


# -- suites ------------------------------------------------------------------------

def check_quasi2(a: Analysis, c: Check) -> None:
    c.matched = True
    leq = a.two_order.leq
    t = a.t
    els = a.s.elements
    for x, y in product(els, repeat=2):
        c.expect(leq[t[x][y]][t[y][x]] and leq[t[y][x]][t[x][y]], "(2) xy ~ yx", (x, y))
        c.expect(leq[t[x][y]][x] and leq[t[x][y]][y], "(4) xy <~ x and xy <~ y", (x, y))
        if leq[x][y]:
            for z in els:
                c.expect(leq[t[z][x]][t[z][y]] and leq[t[x][z]][t[y][z]], "(1) compatible with translations", (x, y, z))
    for x in els:
        xx = t[x][x]
        c.expect(leq[x][xx] and leq[xx][x], "(3) x ~ x^2", (x,))
        for name, cls in (("up", a.up[x]), ("down", a.down[x]), ("bi", a.bi[x])):
            c.expect(is_subsemigroup(a.s, cls), f"{name}-class is a subsemigroup", (x,))
    cong = order2.updown_congruence(a.s, order=a.two_order)
    if c.expect(order2.is_congruence(a.s, cong), "2-class relation is a congruence"):
        q = order2.quotient(a.s, cong).quotient
        c.expect(len([x for x in q.elements if q.table[x][x] != x]) == 0
                 and all(q.table[x][y] == q.table[y][x] for x in q.elements for y in q.elements),
                 "quotient by 2-classes is a semilattice")
    if a.n <= order2.MAX_PARTITION_SCAN_ORDER:
        congs = order2.semilattice_congruences(a.s)
        ours = cong.pairs()
        meet = frozenset(product(els, repeat=2))
        for rho in congs:
            pairs = rho.pairs()
            c.expect(ours <= pairs, "2-class congruence contained in every semilattice congruence",
                     min(ours - pairs, default=()))
            meet &= pairs
        c.expect(meet == ours, "2-class congruence equals the meet of all semilattice congruences")
        c.count("semilattice_congruences", len(congs))


def check_pi_well_defined(a: Analysis, c: Check) -> None:
    c.matched = True
    classes = a.h_classes
    for x in a.s.elements:
        orb = a.orbits[x]
        top = orb.index + orb.period
        hits = []
        for e in a.E_sorted:
            first = next((k for k in range(1, top + 1) if orb.power(k) in classes[e]), None)
            if first is None:
                continue
            hits.append(e)
            for m in range(first, top + 1):
                if not c.expect(orb.power(m) in classes[e], "powers stay in H_e once they enter", (x, e, m)):
                    break
        c.expect(len(hits) == 1, "pi is total and single-valued", (x, *hits))
    for name in ("is_pi_regular", "is_completely_pi_regular", "is_eventually_clifford"):
        w = BY_NAME[name].witness(a)
        c.expect(w is None, f"finite semigroup satisfies {name}", w.elements if w else ())
    t = a.t
    for e in a.E_sorted:
        h = classes[e]
        for x in sorted(h):
            c.expect(t[e][x] == x == t[x][e], "idempotent is the identity of its H-class", (e, x))
            for y in sorted(h):
                c.expect(t[x][y] in h, "maximal subgroup closed", (e, x, y))
            invs = [y for y in h if t[x][y] == e == t[y][x]]
            if c.expect(len(invs) == 1, "unique inverse in the maximal subgroup", (e, x)):
                y = invs[0]
                c.expect(t[t[x][y]][x] == x and t[t[y][x]][y] == y and t[x][y] == t[y][x],
                         "inverse laws", (x, y))


def check_korin(a: Analysis, c: Check) -> None:
    c.matched = True
    for e in a.E_sorted:
        c.expect(a.roots[e] <= a.bi[e], "root set of H_e inside the 2-class of e",
                 (e, *_subset_witness(a.roots[e], a.bi[e])))


def check_smallest_pi(a: Analysis, c: Check) -> None:
    c.matched = True
    pcs = a.prime_coideals
    for x in a.s.elements:
        up = a.up[x]
        c.expect(up in pcs and x in up, "up-class is a prime coideal containing x", (x,))
        for cset in pcs:
            if x in cset:
                c.expect(up <= cset, "up-class inside every prime coideal containing x",
                         (x, *_subset_witness(up, cset)))
        smallest = order2.smallest_coideal(a.s, x)
        c.count("all_coideal_reading:holds" if smallest == up else "all_coideal_reading:fails")


def check_upclass_fixpoint(a: Analysis, c: Check) -> None:
    c.matched = True
    for x in a.s.elements:
        tr = order2.up_class_fixpoint(a.s, x, ideals=a.ideals)
        c.expect(tr.fixpoint == a.up[x], "fixpoint equals the oracle up-class", (x,))
        c.expect(tr.stages[0] == frozenset((x,)), "stage 0 is {x}", (x,))
        c.expect(all(p < q for p, q in zip(tr.stages, tr.stages[1:])), "stages strictly increase", (x,))
        c.expect(len(tr.stages) <= a.n + 1, "at most n iterations", (x,))


def check_duo_upclass(a: Analysis, c: Check) -> None:
    if not flag(a, "is_duo"):
        return
    c.matched = True
    for x in a.s.elements:
        c.expect(order2.up_class_duo(a.s, x) == a.up[x], "duo description of the up-class", (x,))


def check_pw_upclass(a: Analysis, c: Check) -> None:
    if not flag(a, "is_viable"):
        return
    c.matched = True
    for e in a.E_sorted:
        c.expect(frozenset(x for x in a.s.elements if e in a.ideals[x]) == a.up[e],
                 "up-class of e is {x : e in X^1 x X^1}", (e,))


def check_archimed(a: Analysis, c: Check) -> None:
    if not flag(a, "is_duo"):
        return
    c.matched = True
    tt = flag(a, "is_two_trivial")
    arch = flag(a, "is_archimedean")
    c.equivalence({"2-trivial": tt, "Archimedean": arch})
    if arch != flag(a, "is_archimedean_x1"):
        c.count("x1_variant_diverges")


def check_tamura_2trivial(a: Analysis, c: Check) -> None:
    c.matched = True
    for cls in a.two_order.classes:
        c.expect(order2.induced_two_trivial(a.s, cls), "2-class is 2-trivial as a semigroup", (min(cls),))
    by_count = set(a.prime_coideals) == {frozenset(), a.s.carrier}
    by_reflection = a.reflection.quotient.order == 1
    c.expect(by_count == by_reflection, "2-triviality: coideal count agrees with reflection size")


def _unipotent_two_trivial(a: Analysis) -> bool:
    return len(a.E) == 1 and flag(a, "is_two_trivial")


def check_tamura_max_ideal(a: Analysis, c: Check) -> None:
    if not _unipotent_two_trivial(a):
        return
    c.matched = True
    (e,) = a.E
    w = _is_ideal_in(a, a.h_classes[e], a.s.carrier)
    c.expect(w is None, "H_e is an ideal", w or ())


def check_ezk_central(a: Analysis, c: Check) -> None:
    if not _unipotent_two_trivial(a):
        return
    c.matched = True
    (e,) = a.E
    for x in a.s.elements:
        c.expect(a.t[e][x] == a.t[x][e], "unique idempotent is central", (e, x))


def check_c_ideal_chain(a: Analysis, c: Check) -> None:
    c.matched = True
    for e in a.E_sorted:
        q = a.he_over_e[e]
        c.expect(is_subsemigroup(a.s, q), "H_e/e is a subsemigroup", (e,))
        c.expect(a.roots[e] <= q, "root set of H_e inside H_e/e", (e, *_subset_witness(a.roots[e], q)))
        c.expect(q <= a.up[e], "H_e/e inside the up-class of e", (e, *_subset_witness(q, a.up[e])))


def check_e_viable_iff(a: Analysis, c: Check) -> None:
    c.matched = True
    t = a.t
    for e in a.E_sorted:
        q = a.he_over_e[e]
        viable = is_ideal(a.s, a.s.carrier - q)
        equal = q == a.up[e]
        c.expect(viable == equal, "viable iff H_e/e equals the up-class", (e,))
        c.count("viable_idempotents" if viable else "nonviable_idempotents")
        if viable:
            w = _is_ideal_in(a, a.h_classes[e], a.up[e])
            c.expect(w is None, "H_e is an ideal of the up-class", (e, *(w or ())))
            for x in sorted(a.up[e]):
                c.expect(t[e][x] == t[x][e], "e is central in its up-class", (e, x))


SEPAR_NAMES = {
    "(1) E-separated": "is_E_separated",
    "(2) E-viable": "is_E_viable",
    "(3) E_up-central": "is_E_up_central",
    "(4) E-hypercentral": "is_E_hypercentral",
    "(5) viable": "is_viable",
}


def check_separ_equiv(a: Analysis, c: Check) -> None:
    c.matched = True
    c.equivalence({k: flag(a, v) for k, v in SEPAR_NAMES.items()})
    c.expect(flag(a, "is_E_separated") == order2.is_E_separated_by_coideals(a.s, a.prime_coideals),
             "E-separated via 2-classes agrees with the prime coideal scan")
    central = flag(a, "is_E_central")
    if central:
        c.expect(flag(a, "is_E_commutative"), "E-central => E-commutative")
        c.expect(flag(a, "is_E_up_central"), "E-central => E_up-central")
        c.expect(flag(a, "is_viable"), "E-central => viable")
    if flag(a, "is_E_commutative"):
        c.expect(flag(a, "is_E_semigroup"), "E-commutative => E-semigroup")


def check_separ_implies_6(a: Analysis, c: Check) -> None:
    if not flag(a, "is_E_separated"):
        return
    c.matched = True
    c.expect(flag(a, "is_E_hypocentral"), "(1)-(5) => E-hypocentral")
    c.expect(flag(a, "is_E_upcentral"), "(1)-(5) => E-upcentral")


def check_leftzero_example(a: Analysis, c: Check) -> None:
    t = a.t
    if not all(t[x][y] == x for x in a.s.elements for y in a.s.elements):
        return
    c.matched = True
    c.expect(flag(a, "is_E_hypocentral"), "left-zero semigroup is E-hypocentral")
    c.expect(flag(a, "is_E_upcentral"), "left-zero semigroup is E-upcentral")
    if a.n > 1:
        c.count("nontrivial_left_zero")
        c.expect(not flag(a, "is_E_hypercentral"), "nontrivial left-zero semigroup is not E-hypercentral")
        c.expect(not flag(a, "is_E_separated"), "nontrivial left-zero semigroup is not E-separated")


def check_duo_esep(a: Analysis, c: Check) -> None:
    if not flag(a, "is_duo"):
        return
    c.matched = True
    c.count("commutative_duo" if flag(a, "is_commutative") else "noncommutative_duo")
    c.expect(flag(a, "is_E_semigroup"), "duo => E-semigroup")
    c.expect(flag(a, "is_E_separated"), "duo => E-separated")


def _check_ideal_and_commuting(a: Analysis, c: Check, prefix: str) -> None:
    t = a.t
    for e in a.E_sorted:
        w = _is_ideal_in(a, a.h_classes[e], a.up[e])
        c.expect(w is None, f"{prefix}H_e is an ideal in the up-class of e", (e, *(w or ())))
        for x in sorted(a.up[e]):
            ex, xe = t[e][x], t[x][e]
            c.expect(ex == xe and ex in a.h_classes[e], f"{prefix}ex = xe lies in H_e for x above e", (e, x))


def _check_clifford_closed(a: Analysis, c: Check, item: str) -> None:
    h = a.clifford
    t = a.t
    bad = next(((x, y) for x in sorted(h) for y in sorted(h) if t[x][y] not in h), None)
    c.expect(bad is None, item, bad or ())


def check_esepar_struct(a: Analysis, c: Check) -> None:
    if not flag(a, "is_E_separated"):
        return
    if not flag(a, "is_E_semigroup"):
        # items (2) and (3) are claimed for every E-separated semigroup
        c.count("E_separated_non_E_semigroup")
        _check_ideal_and_commuting(a, c, "[non-E-semigroup] ")
        return
    c.matched = True
    t = a.t
    es = a.E_sorted
    bad = next(((e, f) for e in es for f in es if t[e][f] != t[f][e] or t[e][f] not in a.E), None)
    c.expect(bad is None, "(1) E(X) is a semilattice", bad or ())
    _check_ideal_and_commuting(a, c, "(2,3) ")
    for e, f in product(es, repeat=2):
        c.expect((f in a.up[e]) == a.leq_E(e, f), "(4) 2-quasiorder agrees with the natural order on E(X)", (e, f))
    dom = updown_E(a)
    c.expect(is_subsemigroup(a.s, dom), "union of 2-classes of idempotents is a subsemigroup")
    pi = build_pi_updown(a)
    for kind, w in retraction_failures(a.s, pi):
        c.expect(False, f"(5) pi on 2-classes: {kind}", w)
    hbar = build_hbar_updown(a, pi)
    for kind, w in retraction_failures(a.s, hbar):
        c.expect(False, f"(6) hbar on 2-classes: {kind}", w)
    _check_clifford_closed(a, c, "(7) Clifford part is a subsemigroup")


def check_eup_six(a: Analysis, c: Check) -> None:
    if not (flag(a, "is_E_commutative") and flag(a, "is_E_upcentral")):
        return
    c.matched = True
    t = a.t
    H = a.h_classes
    pi = a.pi
    es = a.E_sorted
    for e, f in product(es, repeat=2):
        ef = t[e][f]
        prod_set = set_product(a.s, H[e], H[f])
        c.expect(prod_set <= H[ef], "(1) H_e H_f inside H_ef", (e, f, *_subset_witness(prod_set, H[ef])))
        if a.leq_E(e, f):
            both = set_product(a.s, a.roots[f], H[e]) | set_product(a.s, H[e], a.roots[f])
            c.expect(both <= H[e], "(2) root(H_f) H_e and H_e root(H_f) inside H_e", (e, f))
        for x in sorted(a.roots[e]):
            for y in sorted(a.roots[f]):
                orb = a.orbits[t[x][y]]
                for p in orb.powers:
                    c.expect(t[p][ef] in H[ef], "(3) (xy)^n ef lies in H_ef", (e, f, x, y))
    for x, y in product(a.s.elements, repeat=2):
        c.expect(a.leq_E(t[pi[x]][pi[y]], pi[t[x][y]]), "(4) pi(x)pi(y) <= pi(xy)", (x, y))
    for e in es:
        for x in a.s.elements:
            xe, ex = t[x][e], t[e][x]
            c.expect(pi[xe] == pi[ex], "(5) pi(xe) = pi(ex)", (e, x))
            c.expect(pi[xe] == t[pi[x]][e], "(6) pi(xe) = pi(x)e", (e, x))


def _three_props(a: Analysis) -> bool:
    return flag(a, "is_E_upcentral") and flag(a, "is_E_hypocentral") and flag(a, "is_E_commutative")


def check_central_equiv(a: Analysis, c: Check) -> None:
    if not (flag(a, "is_E_semigroup") and flag(a, "is_pi_regular")):
        return
    c.matched = True
    c.equivalence({
        "(1) 2-class of e = root set of H_e": all(a.bi[e] == a.roots[e] for e in a.E),
        "(2) E-separated": flag(a, "is_E_separated"),
        "(3) E-upcentral, E-hypocentral, E-commutative": _three_props(a),
    })


def _up_pi(a: Analysis, e: int) -> frozenset[int]:
    return frozenset(x for x in a.s.elements if a.leq_E(e, a.pi[x]))


def check_upclass_pi(a: Analysis, c: Check) -> None:
    if not (flag(a, "is_E_semigroup") and flag(a, "is_pi_regular") and _three_props(a)):
        return
    c.matched = True
    c.expect(flag(a, "is_eventually_clifford"), "eventually Clifford")
    for e in a.E_sorted:
        c.expect(a.up[e] == _up_pi(a, e), "up-class of e is {x : e <= pi(x)}", (e,))


def check_eeclif_struct(a: Analysis, c: Check) -> None:
    if not (flag(a, "is_E_separated") and flag(a, "is_pi_regular") and flag(a, "is_E_semigroup")):
        return
    c.matched = True
    t = a.t
    es = a.E_sorted
    c.expect(flag(a, "is_eventually_clifford"), "(1) eventually Clifford")
    bad = next(((e, f) for e in es for f in es if t[e][f] != t[f][e] or t[e][f] not in a.E), None)
    c.expect(bad is None, "(1) E(X) is a semilattice", bad or ())
    for e in es:
        c.expect(a.bi[e] == a.roots[e], "(2) 2-class of e equals the root set of H_e", (e,))
        c.expect(a.up[e] == _up_pi(a, e), "(2) up-class of e is {x : e <= pi(x)}", (e,))
        w = _is_ideal_in(a, a.h_classes[e], a.up[e])
        c.expect(w is None, "(3) H_e is an ideal in the up-class of e", (e, *(w or ())))
        for x in sorted(a.up[e]):
            c.expect(t[e][x] == t[x][e], "(4) ex = xe for x above e", (e, x))
    pi, hbar = build_full_retractions(a)
    for kind, w in retraction_failures(a.s, pi):
        c.expect(False, f"(5) pi: {kind}", w)
    for kind, w in retraction_failures(a.s, hbar):
        c.expect(False, f"(6) hbar: {kind}", w)
    _check_clifford_closed(a, c, "(7) Clifford part is a subsemigroup")


# -- registry ------------------------------------------------------------------------

def _notes_smallest_pi(counters: Counter) -> list[str]:
    fails = counters.get("all_coideal_reading:fails", 0)
    if fails:
        return [f"minimality among all coideals (not only prime ones) fails for {fails} element(s); "
                "the up-class is the smallest prime coideal containing x"]
    return ["minimality among all coideals also holds on this corpus"]


def _notes_archimed(counters: Counter) -> list[str]:
    n = counters.get("x1_variant_diverges", 0)
    return [f"Archimedean with X^1yX^1 instead of XyX diverges on {n} duo semigroup(s)"]


def _notes_esepar(counters: Counter) -> list[str]:
    n = counters.get("E_separated_non_E_semigroup", 0)
    if n:
        return [f"items (2),(3) also checked on {n} E-separated semigroup(s) that are not E-semigroups"]
    return ["no E-separated semigroup outside the E-semigroups exists in this corpus; "
            "the extension of items (2),(3) is vacuous here"]


def _notes_duo(counters: Counter) -> list[str]:
    n = counters.get("noncommutative_duo", 0)
    if n:
        return [f"{n} non-commutative duo semigroup(s) checked"]
    return ["no non-commutative duo semigroup exists at these orders"]


def _notes_fixpoint(_: Counter) -> list[str]:
    return []


@dataclass(frozen=True)
class Suite:
    id: str
    statement: str
    check: Callable[[Analysis, Check], None]
    sides: tuple[str, ...] = ()
    notes: Callable[[Counter], list[str]] = _notes_fixpoint
    vacuity_reason: str = "no semigroup in the corpus meets the hypotheses"


SUITES: tuple[Suite, ...] = (
    Suite("QUASI2", "basic laws of the binary quasiorder; the 2-class relation is the least semilattice congruence", check_quasi2),
    Suite("PI_WELL_DEFINED", "once a power of x enters H_e it stays; pi is total on finite semigroups", check_pi_well_defined),
    Suite("KORIN", "the root set of H_e lies in the 2-class of e", check_korin),
    Suite("SMALLEST_PI", "the up-class of x is the smallest prime coideal containing x", check_smallest_pi,
          notes=_notes_smallest_pi),
    Suite("UPCLASS_FIXPOINT", "iterating U -> {y : X^1yX^1 meets UU} from {x} reaches the up-class", check_upclass_fixpoint),
    Suite("DUO_UPCLASS", "in a duo semigroup the up-class of a is {x : a^N meets XxX}", check_duo_upclass),
    Suite("PW_UPCLASS", "in a viable semigroup the up-class of an idempotent e is {x : e in X^1xX^1}", check_pw_upclass),
    Suite("ARCHIMED", "a duo semigroup is 2-trivial iff it is Archimedean", check_archimed,
          sides=("2-trivial", "Archimedean"), notes=_notes_archimed),
    Suite("TAMURA_2TRIVIAL", "every 2-class is a 2-trivial semigroup", check_tamura_2trivial),
    Suite("TAMURA_MAX_IDEAL", "in a unipotent 2-trivial semigroup H_e is an ideal", check_tamura_max_ideal),
    Suite("EZK_CENTRAL", "in a unipotent 2-trivial semigroup the idempotent is central", check_ezk_central),
    Suite("C_IDEAL_CHAIN", "root(H_e) inside H_e/e inside the up-class of e", check_c_ideal_chain),
    Suite("E_VIABLE_IFF", "e is viable iff H_e/e equals the up-class of e", check_e_viable_iff),
    Suite("SEPAR_EQUIV", "E-separated, E-viable, E_up-central, E-hypercentral and viable are equivalent",
          check_separ_equiv, sides=tuple(SEPAR_NAMES)),
    Suite("SEPAR_IMPLIES_6", "the equivalent conditions imply E-hypocentral and E-upcentral", check_separ_implies_6),
    Suite("LEFTZERO_EXAMPLE", "left-zero semigroups are E-hypocentral and E-upcentral but not E-hypercentral",
          check_leftzero_example),
    Suite("DUO_ESEP", "every duo semigroup is an E-separated E-semigroup", check_duo_esep, notes=_notes_duo),
    Suite("ESEPAR_STRUCT", "structure of E-separated E-semigroups (seven items)", check_esepar_struct, notes=_notes_esepar),
    Suite("EUP_SIX", "six consequences of E-commutative plus E-upcentral", check_eup_six),
    Suite("CENTRAL_EQUIV", "for pi-regular E-semigroups: 2-classes of idempotents are root sets iff E-separated "
          "iff E-upcentral, E-hypocentral and E-commutative", check_central_equiv,
          sides=("(1) 2-class of e = root set of H_e", "(2) E-separated",
                 "(3) E-upcentral, E-hypocentral, E-commutative")),
    Suite("UPCLASS_PI", "the up-class of e is {x : e <= pi(x)} under the three commutativity properties", check_upclass_pi),
    Suite("EECLIF_STRUCT", "structure of E-separated pi-regular E-semigroups (seven items)", check_eeclif_struct),
)

SUITE_BY_ID = {s.id: s for s in SUITES}


def get_suite(suite_id: str) -> Suite:
    try:
        return SUITE_BY_ID[suite_id]
    except KeyError:
        raise UnknownSuiteError(suite_id) from None


def run_check(suite: Suite, a: Analysis) -> Check:
    c = Check()
    try:
        suite.check(a, c)
    except Exception as exc:  # a crash inside a suite is itself a violation
        c.expect(False, f"internal error: {type(exc).__name__}: {exc}")
    return c


# -- reports -------------------------------------------------------------------------

@dataclass
class Violation:
    table: str
    item: str
    witness: tuple[int, ...]

    def to_json(self) -> dict:
        return {"table": self.table, "item": self.item, "witness": list(self.witness)}


@dataclass
class VerificationReport:
    suite: str
    statement: str
    orders_checked: list[int]
    up_to_iso: bool
    semigroups_checked: int = 0
    hypothesis_matches: int = 0
    violation_count: int = 0
    violations: list[Violation] = field(default_factory=list)
    counters: Counter = field(default_factory=Counter)
    notes: list[str] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def status(self) -> str:
        if self.violation_count:
            return "FAIL"
        if self.hypothesis_matches == 0:
            return "VACUOUS"
        return "PASS"

    @property
    def passed(self) -> bool:
        return self.violation_count == 0

    def to_json(self) -> dict:
        # elapsed is deliberately left out so reports are byte-stable across runs
        return {
            "suite": self.suite,
            "statement": self.statement,
            "status": self.status,
            "orders_checked": self.orders_checked,
            "up_to_iso": self.up_to_iso,
            "semigroups_checked": self.semigroups_checked,
            "hypothesis_matches": self.hypothesis_matches,
            "violation_count": self.violation_count,
            "violations": [v.to_json() for v in self.violations],
            "counters": dict(sorted(self.counters.items())),
            "notes": self.notes,
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=False) + "\n"

    def summary(self) -> str:
        line = (f"{self.suite:<18} {self.status:<8} checked={self.semigroups_checked} "
                f"matches={self.hypothesis_matches} violations={self.violation_count}")
        return line


def _validate_order(max_order: int, up_to_iso: bool) -> None:
    limit = MAX_ISO_ORDER if up_to_iso else MAX_LABELLED_ORDER
    if not 1 <= max_order <= limit:
        raise ValueError(f"max order must be in 1..{limit}, got {max_order}")


def _corpus_lines(max_order: int, up_to_iso: bool) -> list[tuple[int, tuple[int, ...]]]:
    out = []
    for n in range(1, max_order + 1):
        out.extend((n, flat) for flat in enumerate_flat(EnumerationConfig(n, up_to_iso)))
    return out


Partial = dict[str, tuple[int, int, int, list[tuple[str, str, tuple[int, ...]]], Counter]]


def _sweep_chunk(args: tuple[list[tuple[int, tuple[int, ...]]], tuple[str, ...]]) -> Partial:
    tables, suite_ids = args
    suites = [SUITE_BY_ID[s] for s in suite_ids]
    acc: Partial = {s.id: (0, 0, 0, [], Counter()) for s in suites}
    for n, flat in tables:
        s = CayleyTable.from_flat(n, flat)
        a = Analysis(s)
        line = s.to_line()
        for suite in suites:
            c = run_check(suite, a)
            checked, matched, nviol, viols, counters = acc[suite.id]
            if len(viols) < MAX_REPORTED_VIOLATIONS:
                viols.extend((line, item, w) for item, w in c.violations[:MAX_REPORTED_VIOLATIONS - len(viols)])
            counters.update(c.counters)
            acc[suite.id] = (checked + 1, matched + c.matched, nviol + len(c.violations), viols, counters)
    return acc


def _chunks(items: list, k: int) -> list[list]:
    size = max(1, -(-len(items) // k))
    return [items[i:i + size] for i in range(0, len(items), size)]


def run_suites(
    suite_ids: Iterable[str], max_order: int, *, up_to_iso: bool = False, jobs: int = 1
) -> list[VerificationReport]:
    suite_ids = tuple(suite_ids)
    suites = [get_suite(s) for s in suite_ids]
    _validate_order(max_order, up_to_iso)
    start = time.perf_counter()
    tables = _corpus_lines(max_order, up_to_iso)
    if jobs <= 1:
        partials = [_sweep_chunk((tables, suite_ids))]
    else:
        # chunks are contiguous and results come back in submission order
        chunks = _chunks(tables, jobs * 4)
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            partials = list(pool.map(_sweep_chunk, [(ch, suite_ids) for ch in chunks]))
    elapsed = time.perf_counter() - start
    reports = []
    for suite in suites:
        r = VerificationReport(suite.id, suite.statement, list(range(1, max_order + 1)), up_to_iso)
        for part in partials:
            checked, matched, nviol, viols, counters = part[suite.id]
            r.semigroups_checked += checked
            r.hypothesis_matches += matched
            r.violation_count += nviol
            room = MAX_REPORTED_VIOLATIONS - len(r.violations)
            r.violations.extend(Violation(*v) for v in viols[:room])
            r.counters.update(counters)
        r.notes = _coverage_notes(suite, r) + suite.notes(r.counters)
        if r.status == "VACUOUS":
            r.notes.append(f"VACUOUS: {suite.vacuity_reason} (orders 1..{max_order})")
        r.elapsed = elapsed
        reports.append(r)
    return reports


def _coverage_notes(suite: Suite, r: VerificationReport) -> list[str]:
    notes = []
    for side in suite.sides:
        yes, no = r.counters.get(f"{side}:yes", 0), r.counters.get(f"{side}:no", 0)
        if not yes:
            notes.append(f"coverage gap: no semigroup satisfies {side}")
        if not no:
            notes.append(f"coverage gap: no semigroup violates {side}")
    return notes


def run_suite(suite: str, max_order: int, *, up_to_iso: bool = False, jobs: int = 1) -> VerificationReport:
    return run_suites((suite,), max_order, up_to_iso=up_to_iso, jobs=jobs)[0]


def run_all(max_order: int, *, up_to_iso: bool = False, jobs: int = 1) -> list[VerificationReport]:
    return run_suites([s.id for s in SUITES], max_order, up_to_iso=up_to_iso, jobs=jobs)


def exit_status(reports: Iterable[VerificationReport]) -> int:
    reports = list(reports)
    if any(r.status == "FAIL" for r in reports):
        return 1
    if any(r.status == "VACUOUS" for r in reports):
        return 2
    return 0


def replay(suite_id: str, violation: Violation) -> bool:
    """Re-run the suite on the violating table; True if the violation recurs."""
    a = Analysis(parse_line(violation.table))
    c = run_check(get_suite(suite_id), a)
    return (violation.item, tuple(violation.witness)) in c.violations
