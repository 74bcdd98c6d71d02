"""Registry of mechanical theorem checks and the report they produce.

Each check takes a :class:`CheckContext` and returns ``(ok, text)``; ``text``
is a failure witness or, for passing informational checks, a summary.
Checks whose hypotheses do not apply to a poset are reported as SKIP.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable

from .boolean import (
    Complementation,
    check_reflexive_compatible_is_boolean_congruence,
    complements,
    distributive_identity,
    enumerate_boolean_congruences,
    find_complementation,
    is_boolean,
    is_distributive,
    lemma2_kernel_exclusion,
    pixley_T,
    theorem2_checks,
    undefined_join_pairs,
    weak_regularity,
)
from .congruence import (
    ConFamily,
    EquivRelation,
    class_interval_bounds,
    comparable_part,
    congruence_properties,
    determined_by_comparable_pairs,
    enumerate_congruences,
    enumerate_congruences_bruteforce,
    format_relation,
    is_filter,
    is_strong_filter,
    kernel,
    quotient_poset,
)
from .heyting import (
    StarTable,
    all_subsets_with_top,
    check_reflexive_compatible_is_congruence,
    deductive_violation,
    enumerate_star_congruences,
    ideal_term_t2,
    ideal_term_violation,
    is_star_filter,
    lemma3_checks,
    malcev_T,
    star_table,
    strong_filter_congruence,
)
from .poset import (
    ElementSet,
    Poset,
    build_poset,
    compatible,
    interval,
    is_convex,
    is_order_isomorphic,
    lower_cone,
    lower_cone_op,
    max_l_op,
    maximal,
    min_u_op,
    minimal,
    subposet,
    upper_cone,
    upper_cone_op,
)

SUITES = ("poset", "heyting", "boolean")
ORACLE_LIMIT = 8
SUBSET_LIMIT = 12
RANDOM_RELATIONS = 60


class CheckContext:
    """A poset with its derived structures, computed lazily and shared."""

    def __init__(self, poset: Poset, seed: int = 0):
        self.poset = poset
        self.seed = seed

    @cached_property
    def family(self) -> ConFamily:
        return enumerate_congruences(self.poset)

    @cached_property
    def star(self) -> StarTable | None:
        return star_table(self.poset)

    @cached_property
    def boolean(self) -> bool:
        return is_boolean(self.poset)

    @cached_property
    def comp(self) -> Complementation | None:
        return find_complementation(self.poset) if self.boolean else None

    @cached_property
    def star_family(self) -> ConFamily:
        return enumerate_star_congruences(self.poset, self.star, self.family)

    @cached_property
    def boolean_family(self) -> ConFamily:
        return enumerate_boolean_congruences(self.poset, self.comp, self.family)

    @cached_property
    def subsets(self) -> list[int]:
        return list(range(1 << self.poset.n))

    def tup(self, *xs: int) -> str:
        return "(" + ",".join(self.poset.labels[x] for x in xs) + ")"

    def rel(self, theta: EquivRelation) -> str:
        return format_relation(self.poset, theta)


Outcome = tuple[bool, str]


@dataclass(frozen=True)
class Check:
    name: str
    suite: str
    fn: Callable[[CheckContext], Outcome]
    needs: str = ""  # "", "top", "star", "boolean", "small"


@dataclass
class CheckResult:
    name: str
    status: str  # PASS, FAIL or SKIP
    text: str = ""

    def line(self) -> str:
        if not self.text:
            return f"CHECK {self.name} {self.status}"
        label = "witness" if self.status == "FAIL" else "note"
        return f"CHECK {self.name} {self.status} [{label}: {self.text}]"


@dataclass
class CheckReport:
    poset_name: str
    results: list[CheckResult] = field(default_factory=list)

    def count(self, status: str) -> int:
        return sum(r.status == status for r in self.results)

    @property
    def ok(self) -> bool:
        return self.count("FAIL") == 0

    def failures(self) -> list[CheckResult]:
        return [r for r in self.results if r.status == "FAIL"]

    def lines(self) -> list[str]:
        out = [r.line() for r in self.results]
        out.append(
            f"SUMMARY {self.poset_name}: {self.count('PASS')} pass, "
            f"{self.count('FAIL')} fail, {self.count('SKIP')} skipped"
        )
        return out


REGISTRY: list[Check] = []


def check(name: str, suite: str, needs: str = ""):
    def deco(fn: Callable[[CheckContext], Outcome]):
        REGISTRY.append(Check(name, suite, fn, needs))
        return fn

    return deco


def _first(items, fmt) -> Outcome:
    for item in items:
        return False, fmt(item)
    return True, ""


# -- poset suite ------------------------------------------------------------------------


@check("cones.galois_closure", "poset", needs="small")
def _galois(ctx: CheckContext) -> Outcome:
    P = ctx.poset
    for m in ctx.subsets:
        A = ElementSet(m)
        if lower_cone(P, upper_cone(P, lower_cone(P, A))) != lower_cone(P, A):
            return False, f"LUL{P.names(A)}"
        if upper_cone(P, lower_cone(P, upper_cone(P, A))) != upper_cone(P, A):
            return False, f"ULU{P.names(A)}"
    return True, ""


@check("cones.antitone", "poset", needs="small")
def _antitone(ctx: CheckContext) -> Outcome:
    # single-element extensions suffice by transitivity of inclusion
    P = ctx.poset
    for m in ctx.subsets:
        A = ElementSet(m)
        for x in range(P.n):
            B = ElementSet(m | 1 << x)
            if not lower_cone(P, B).issubset(lower_cone(P, A)):
                return False, f"L{P.names(A)} vs L{P.names(B)}"
            if not upper_cone(P, B).issubset(upper_cone(P, A)):
                return False, f"U{P.names(A)} vs U{P.names(B)}"
    return True, ""


@check("cones.extremal_antichains", "poset", needs="small")
def _extremal(ctx: CheckContext) -> Outcome:
    P = ctx.poset
    for m in ctx.subsets:
        A = ElementSet(m)
        for S in (maximal(P, A), minimal(P, A)):
            if not S.issubset(A) or any(P.lt(x, y) for x in S for y in S):
                return False, f"{P.names(A)}"
    return True, ""


@check("poset.hasse_roundtrip", "poset")
def _roundtrip(ctx: CheckContext) -> Outcome:
    P = ctx.poset
    Q = build_poset(P.labels, [(P.labels[i], P.labels[j]) for i, j in P.covers])
    return (Q.leq == P.leq, "" if Q.leq == P.leq else "closure of covers differs")


@check("poset.max_l_compatibility_implies_l", "poset")
def _maxl_implies_l(ctx: CheckContext) -> Outcome:
    P = ctx.poset
    pairs = ((max_l_op(P), lower_cone_op(P), "L"), (min_u_op(P), upper_cone_op(P), "U"))
    candidates = [t.pair_set() for t in ctx.family]
    members = ctx.family.members
    candidates += [
        a.intersection(b).pair_set() for a, b in itertools.combinations(members, 2)
    ]
    for R in candidates:
        for strong, weak, name in pairs:
            if compatible(P, R, strong) and not compatible(P, R, weak):
                return False, f"{name}: {sorted(ctx.tup(*p) for p in R)}"
    return True, ""


@check("congruence.enumeration_oracle", "poset", needs="small8")
def _oracle(ctx: CheckContext) -> Outcome:
    brute = enumerate_congruences_bruteforce(ctx.poset, limit=ORACLE_LIMIT)
    if brute.members == ctx.family.members:
        return True, f"{len(brute)} congruences"
    extra = set(ctx.family.members) ^ set(brute.members)
    return False, ", ".join(sorted(ctx.rel(t) for t in extra))


@check("congruence.th1_i_cone_witnesses", "poset")
def _th1_i(ctx: CheckContext) -> Outcome:
    P = ctx.poset
    for t in ctx.family:
        for a, b in t.pairs():
            cls = t.block(a)
            if not (ElementSet(P.max_l_table[a][b]) & cls and ElementSet(P.min_u_table[a][b]) & cls):
                return False, f"{ctx.rel(t)} {ctx.tup(a, b)}"
    return True, ""


@check("congruence.th1_ii_convex_classes", "poset")
def _th1_ii(ctx: CheckContext) -> Outcome:
    return _first(
        ((t, cl) for t in ctx.family for cl in t.classes if not is_convex(ctx.poset, cl)),
        lambda tc: f"{ctx.rel(tc[0])} class {ctx.poset.names(tc[1])}",
    )


@check("congruence.th1_iii_interval_generation", "poset")
def _th1_iii(ctx: CheckContext) -> Outcome:
    P = ctx.poset
    for t in ctx.family:
        spans = [interval(P, e, f).mask for e, f in t.pairs() if P.le(e, f)]
        for c, d in itertools.product(range(P.n), repeat=2):
            bit = 1 << c | 1 << d
            inside = any(s & bit == bit for s in spans)
            if inside != t.related(c, d):
                return False, f"{ctx.rel(t)} {ctx.tup(c, d)}"
    return True, ""


@check("congruence.th1_iv_comparable_pairs", "poset")
def _th1_iv(ctx: CheckContext) -> Outcome:
    for t, u in itertools.combinations(ctx.family.members, 2):
        if determined_by_comparable_pairs(ctx.poset, t, u):
            return False, f"{ctx.rel(t)} vs {ctx.rel(u)}"
    parts = {comparable_part(ctx.poset, t) for t in ctx.family}
    return len(parts) == len(ctx.family), ""


@check("congruence.prop2_classes_are_intervals", "poset")
def _prop2(ctx: CheckContext) -> Outcome:
    P = ctx.poset
    for t in ctx.family:
        for cl in t.classes:
            lo, hi = class_interval_bounds(P, t, min(cl))
            if interval(P, lo, hi) != cl:
                return False, f"{ctx.rel(t)} class {P.names(cl)}"
    return True, ""


@check("congruence.prop1_bound_monotonicity", "poset")
def _prop1(ctx: CheckContext) -> Outcome:
    P = ctx.poset
    for t in ctx.family:
        bounds = [class_interval_bounds(P, t, min(cl)) for cl in t.classes]
        for (a, b), (c, d) in itertools.product(bounds, repeat=2):
            if P.le(a, c) != P.le(b, d):
                return False, f"{ctx.rel(t)} [{P.labels[a]},{P.labels[b]}] [{P.labels[c]},{P.labels[d]}]"
    return True, ""


@check("congruence.quotient_embedding", "poset")
def _quotient(ctx: CheckContext) -> Outcome:
    P = ctx.poset
    for t in ctx.family:
        try:
            q = quotient_poset(P, t)
        except AssertionError:
            return False, f"{ctx.rel(t)} least/greatest orders differ"
        sub = subposet(P, ElementSet.of(q.least))
        if is_order_isomorphic(q.poset, sub) is None:
            return False, f"{ctx.rel(t)} quotient not isomorphic to least elements"
    return True, f"{len(ctx.family)} quotients"


@check("congruence.lem5_cone_transfer", "poset")
def _lem5(ctx: CheckContext) -> Outcome:
    P = ctx.poset
    for t in ctx.family:
        for a, c in t.pairs():
            cls_c = t.block(c).mask
            for b in range(P.n):
                cls_b = t.block(b).mask
                if cls_b & P.up[c] and not P.max_l_table[a][b] & cls_c:
                    return False, f"(i) {ctx.rel(t)} a,b,c={ctx.tup(a, b, c)}"
                if cls_b & P.down[c] and not P.min_u_table[a][b] & cls_c:
                    return False, f"(ii) {ctx.rel(t)} a,b,c={ctx.tup(a, b, c)}"
    return True, ""


@check("congruence.cor1_kernel_strong_filter", "poset", needs="top")
def _cor1(ctx: CheckContext) -> Outcome:
    P = ctx.poset
    for t in ctx.family:
        F = kernel(P, t).mask
        for a, b in itertools.product(range(P.n), repeat=2):
            if F >> a & 1 and F >> b & 1 and not P.max_l_table[a][b] & F:
                return False, f"(i) {ctx.rel(t)} {ctx.tup(a, b)}"
            if F >> b & 1 and not P.max_l_table[a][b] & t.block(a).mask:
                return False, f"(ii) {ctx.rel(t)} {ctx.tup(a, b)}"
            if F >> a & 1 and not P.min_u_table[a][b] & F:
                return False, f"(iii) {ctx.rel(t)} {ctx.tup(a, b)}"
        if not is_strong_filter(P, F):
            return False, f"(iv) {ctx.rel(t)}"
    return True, ""


# -- heyting suite ----------------------------------------------------------------------


def _star_check(name: str):
    return check(f"heyting.{name}", "heyting", needs="star")


def _lem1(clause: str, holds: Callable[[Poset, tuple, int, int, int], bool], arity: int = 3):
    @_star_check(f"lem1_{clause}")
    def run(ctx: CheckContext) -> Outcome:
        P, s = ctx.poset, ctx.star.star
        for args in itertools.product(range(P.n), repeat=arity):
            if not holds(P, s, *args, *(0,) * (3 - arity)):
                return False, ctx.tup(*args)
        return True, ""

    return run


def _le_set(P: Poset, m: int, y: int) -> bool:
    return m & ~P.down[y] == 0


_lem1("i", lambda P, s, a, b, c: (
    P.le(a, s[b][c]) == _le_set(P, P.down[a] & P.down[b], c)
    and P.le(a, s[b][c]) == P.le(b, s[a][c])
))
_lem1("ii", lambda P, s, a, b, c: s[a][a] == P.top and s[P.top][a] == a, arity=2)
_lem1("iii", lambda P, s, a, b, c: (s[a][b] == P.top) == P.le(a, b), arity=2)
_lem1("iv", lambda P, s, a, b, c: P.le(b, s[a][b]), arity=2)
_lem1("v", lambda P, s, a, b, c: P.le(a, s[s[a][b]][b]), arity=2)
_lem1("vi", lambda P, s, a, b, c: not P.le(a, b) or (
    P.le(s[c][a], s[c][b]) and P.le(s[b][c], s[a][c])
))
_lem1("vii", lambda P, s, a, b, c: s[s[s[a][b]][b]][b] == s[a][b], arity=2)
_lem1("viii", lambda P, s, a, b, c: (
    P.le(s[a][b], s[s[s[a][b]][a]][b]) == P.le(s[s[a][b]][a], s[s[a][b]][b])
), arity=2)
_lem1("ix", lambda P, s, a, b, c: (
    P.le(s[a][b], s[s[s[a][b]][b]][a]) == P.le(s[s[a][b]][b], s[s[a][b]][a])
), arity=2)
_lem1("x", lambda P, s, a, b, c: P.down[a] & P.down[s[a][b]] == P.down[a] & P.down[b], arity=2)


@_star_check("malcev_laws")
def _malcev(ctx: CheckContext) -> Outcome:
    P = ctx.poset
    for a, c in itertools.product(range(P.n), repeat=2):
        if malcev_T(P, ctx.star, a, a, c) != ElementSet(1 << c):
            return False, f"T{ctx.tup(a, a, c)}"
        if malcev_T(P, ctx.star, a, c, c) != ElementSet(1 << a):
            return False, f"T{ctx.tup(a, c, c)}"
    return True, ""


def _reflexive_samples(ctx: CheckContext) -> list[frozenset[tuple[int, int]]]:
    """Reflexive relations worth testing: congruences, their unions and
    intersections, single added pairs, and seeded random relations."""
    P = ctx.poset
    diag = frozenset((x, x) for x in range(P.n))
    out = {diag, diag | {(x, y) for x in range(P.n) for y in range(P.n)}}
    members = [t.pair_set() for t in ctx.family]
    out.update(members)
    for a, b in itertools.combinations(members, 2):
        out.add(a | b)
        out.add(a & b)
    for x, y in itertools.permutations(range(P.n), 2):
        out.add(diag | {(x, y)})
    rng = random.Random(ctx.seed)
    every = [(x, y) for x, y in itertools.permutations(range(P.n), 2)]
    for _ in range(RANDOM_RELATIONS):
        k = rng.randint(1, max(1, len(every) // 3))
        out.add(diag | frozenset(rng.sample(every, min(k, len(every)))))
    return sorted(out, key=lambda r: (len(r), sorted(r)))


@_star_check("th3_reflexive_compatible_is_congruence")
def _th3(ctx: CheckContext) -> Outcome:
    P = ctx.poset
    compatible_count = 0
    for R in _reflexive_samples(ctx):
        v = check_reflexive_compatible_is_congruence(P, ctx.star, R)
        compatible_count += v.compatible
        if not v.holds:
            return False, f"{sorted(ctx.tup(*p) for p in R)}"
    return True, f"{compatible_count} compatible relations, all congruences"


@_star_check("lem3_kernel_links")
def _lem3(ctx: CheckContext) -> Outcome:
    for t in ctx.star_family:
        v = lemma3_checks(ctx.poset, ctx.star, t)
        if not v.ok:
            bad = (v.violations_i or v.violations_ii)[0]
            return False, f"{ctx.rel(t)} {ctx.tup(*bad)}"
    return True, ""


@_star_check("kernels_are_deductive_systems")
def _kernels_deductive(ctx: CheckContext) -> Outcome:
    P = ctx.poset
    for t in ctx.star_family:
        K = kernel(P, t)
        if deductive_violation(P, ctx.star, K) is not None:
            return False, f"{ctx.rel(t)} not deductive"
        if ideal_term_violation(P, ctx.star, K) is not None:
            return False, f"{ctx.rel(t)} not closed under t2"
        if not (is_strong_filter(P, K) and is_star_filter(P, ctx.star, K)):
            return False, f"{ctx.rel(t)} kernel not a strong filter of P"
    return True, ""


@_star_check("ideal_terms")
def _ideal_terms(ctx: CheckContext) -> Outcome:
    P, star = ctx.poset, ctx.star
    top = P.top
    for a in range(P.n):
        if ideal_term_t2(star, a, top, top) != top:
            return False, f"t2{ctx.tup(a, top, top)}"
    closed = 0
    for D in all_subsets_with_top(P):
        if ideal_term_violation(P, star, D) is None:
            closed += 1
            w = deductive_violation(P, star, D)
            if w is not None:
                return False, f"closed but not deductive: {P.names(D)} at {ctx.tup(*w)}"
    return True, f"{closed} closed subsets, all deductive"


@_star_check("deductive_systems_are_filters")
def _deductive_filters(ctx: CheckContext) -> Outcome:
    P = ctx.poset
    count = 0
    for D in all_subsets_with_top(P):
        if deductive_violation(P, ctx.star, D) is None:
            count += 1
            if not (is_filter(P, D) and is_star_filter(P, ctx.star, D)):
                return False, P.names(D)
    return True, f"{count} deductive systems"


@_star_check("theta_f_proposition")
def _theta_f(ctx: CheckContext) -> Outcome:
    P = ctx.poset
    tested = 0
    noncong = []
    for D in all_subsets_with_top(P):
        if not (is_strong_filter(P, D) and is_star_filter(P, ctx.star, D)):
            continue
        tested += 1
        v = strong_filter_congruence(P, ctx.star, D)
        if not v.matches_star_description:
            return False, f"F={P.names(D)} membership differs from a*b,b*a in F"
        if not v.kernel_matches:
            return False, f"F={P.names(D)} kernel differs"
        if not v.star_congruence:
            noncong.append(P.names(D))
    note = f"{tested} strong filters"
    if noncong:
        note += f"; not congruences: {noncong}"
    return True, note


# -- boolean suite -----------------------------------------------------------------------


@check("boolean.distributive_identities_agree", "boolean", needs="small")
def _dist_agree(ctx: CheckContext) -> Outcome:
    vals = [distributive_identity(ctx.poset, k) for k in (1, 2, 3, 4)]
    ok = len(set(vals)) == 1
    return ok, f"distributive={vals[0]}" if ok else f"identities give {vals}"


@check("boolean.complement_uniqueness", "boolean", needs="top")
def _comp_unique(ctx: CheckContext) -> Outcome:
    P = ctx.poset
    if not P.bounded or not is_distributive(P):
        return True, "n/a (not bounded distributive)"
    for x in range(P.n):
        if len(complements(P, x)) > 1:
            return False, f"{P.labels[x]} has complements {P.names(complements(P, x))}"
    return True, ""


@check("boolean.pixley_laws", "boolean", needs="boolean")
def _pixley(ctx: CheckContext) -> Outcome:
    P, comp = ctx.poset, ctx.comp
    for x, y in itertools.product(range(P.n), repeat=2):
        for args, want in (((x, y, y), x), ((x, y, x), x), ((x, x, y), y)):
            if pixley_T(P, comp, *args) != ElementSet(1 << want):
                return False, f"T{ctx.tup(*args)}"
    return True, ""


@check("boolean.th2_kernel_tests", "boolean", needs="boolean")
def _th2(ctx: CheckContext) -> Outcome:
    for t in ctx.boolean_family:
        v = theorem2_checks(ctx.poset, ctx.comp, t)
        for part, bad in (("i", v.violations_i), ("ii", v.violations_ii), ("iii", v.violations_iii)):
            if bad:
                return False, f"({part}) {ctx.rel(t)} {ctx.tup(*bad[0])}"
    return True, ""


@check("boolean.cor2_weak_regularity", "boolean", needs="boolean")
def _cor2(ctx: CheckContext) -> Outcome:
    applied = 0
    for t, u in itertools.combinations_with_replacement(ctx.boolean_family.members, 2):
        verdict = weak_regularity(ctx.poset, ctx.comp, t, u)
        if verdict == "violation":
            return False, f"{ctx.rel(t)} vs {ctx.rel(u)}"
        applied += verdict == "consistent"
    return True, f"{applied} applicable pairs"


@check("boolean.lem2_kernel_exclusion_sound", "boolean", needs="top")
def _lem2(ctx: CheckContext) -> Outcome:
    P = ctx.poset
    comp = ctx.comp
    kernels = {kernel(P, t).mask for t in ctx.family}
    excluded = []
    for a in range(P.n):
        v = lemma2_kernel_exclusion(P, a, comp)
        if v.excluded:
            excluded.append(P.labels[a])
            if P.up[a] in kernels:
                return False, f"[{P.labels[a]},1] is a kernel yet excluded"
    return True, f"excluded: {excluded}"


@check("boolean.th_reflexive_compatible_is_congruence", "boolean", needs="boolean")
def _th_bool_reflexive(ctx: CheckContext) -> Outcome:
    compatible_count = 0
    for R in _reflexive_samples(ctx):
        v = check_reflexive_compatible_is_boolean_congruence(ctx.poset, ctx.comp, R)
        compatible_count += v.compatible
        if not v.holds:
            return False, f"{sorted(ctx.tup(*p) for p in R)}"
    return True, f"{compatible_count} compatible relations, all congruences"


@check("boolean.undefined_joins", "boolean", needs="boolean")
def _undefined(ctx: CheckContext) -> Outcome:
    pairs = undefined_join_pairs(ctx.poset, ctx.comp)
    return True, f"{len(pairs)} pairs: " + " ".join(ctx.tup(*p) for p in pairs)


@check("congruence.properties", "boolean")
def _properties(ctx: CheckContext) -> Outcome:
    rep = congruence_properties(ctx.poset, ctx.family)
    names = ctx.family.names
    parts = []
    if rep.permutable:
        parts.append("permutable")
    else:
        i, j, x, y = rep.permutable_witnesses[0]
        parts.append(f"not permutable {ctx.tup(x, y)} in {names[i]}o{names[j]}")
    if rep.regular:
        parts.append("regular")
    else:
        i, j, cl = rep.regular_witnesses[0]
        parts.append(f"not regular {names[i]},{names[j]} share {{{','.join(ctx.poset.names(cl))}}}")
    if rep.uniform:
        parts.append("uniform")
    else:
        parts.append("not uniform " + ",".join(names[i] for i in rep.uniform_witnesses))
    return True, "; ".join(parts)


# -- runner -----------------------------------------------------------------------------


def _skip_reason(ctx: CheckContext, needs: str) -> str | None:
    P = ctx.poset
    if needs == "top" and P.top is None:
        return "no top element"
    if needs == "star" and (P.top is None or ctx.star is None):
        return "not relatively pseudocomplemented"
    if needs == "boolean" and not ctx.boolean:
        return "not a Boolean poset"
    if needs == "small" and P.n > SUBSET_LIMIT:
        return f"more than {SUBSET_LIMIT} elements"
    if needs == "small8" and P.n > ORACLE_LIMIT:
        return f"more than {ORACLE_LIMIT} elements"
    return None


def checks_for(suite: str = "all") -> list[Check]:
    if suite != "all" and suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    return [c for c in REGISTRY if suite == "all" or c.suite == suite]


def run_checks(P: Poset, suite: str = "all", seed: int = 0) -> CheckReport:
    ctx = CheckContext(P, seed)
    report = CheckReport(P.name or "P")
    for c in checks_for(suite):
        reason = _skip_reason(ctx, c.needs)
        if reason is not None:
            report.results.append(CheckResult(c.name, "SKIP", reason))
            continue
        ok, text = c.fn(ctx)
        report.results.append(CheckResult(c.name, "PASS" if ok else "FAIL", text))
    return report
