"""Relative pseudocomplementation on finite posets and its congruences.

``x * y`` is the greatest ``z`` with ``L(x, z)`` contained in ``L(y)``; a poset
where every pair has one is relatively pseudocomplemented.  Everything here
takes the operation as a precomputed :class:`StarTable`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .congruence import (
    ConFamily,
    CongruenceError,
    EquivRelation,
    enumerate_congruences,
    is_congruence,
    is_filter,
    is_strong_filter,
    kernel,
)
from .poset import (
    ElementSet,
    OpTable,
    Poset,
    SetLike,
    _as_mask,
    compatibility_witness,
    max_l_op,
    min_u_op,
)


@dataclass(frozen=True)
class StarTable:
    poset: Poset
    star: tuple[tuple[int, ...], ...]

    def __call__(self, x: int, y: int) -> int:
        return self.star[x][y]

    def as_op(self) -> OpTable:
        P = self.poset
        return OpTable(
            2, {(i, j): ElementSet(1 << self.star[i][j]) for i in range(P.n) for j in range(P.n)}
        )

    def format(self) -> str:
        """Operation table with the left operand along the rows."""
        P = self.poset
        w = max(len(x) for x in P.labels)
        head = "*".rjust(w) + " | " + " ".join(x.rjust(w) for x in P.labels)
        rows = [head, "-" * len(head)]
        for i in range(P.n):
            cells = " ".join(P.labels[self.star[i][j]].rjust(w) for j in range(P.n))
            rows.append(P.labels[i].rjust(w) + " | " + cells)
        return "\n".join(rows) + "\n"


def rel_pseudocomplement(P: Poset, x: int, y: int) -> int | None:
    """Greatest ``z`` with ``L(x, z)`` below ``y``, if there is a greatest one."""
    cand = 0
    for z in range(P.n):
        if P.down[x] & P.down[z] & ~P.down[y] == 0:
            cand |= 1 << z
    for z in ElementSet(cand):
        if cand & ~P.down[z] == 0:
            return z
    return None


def missing_star_pair(P: Poset) -> tuple[int, int] | None:
    """First pair ``(x, y)`` without a relative pseudocomplement."""
    for x, y in itertools.product(range(P.n), repeat=2):
        if rel_pseudocomplement(P, x, y) is None:
            return x, y
    return None


def star_table(P: Poset) -> StarTable | None:
    rows = []
    for x in range(P.n):
        row = []
        for y in range(P.n):
            z = rel_pseudocomplement(P, x, y)
            if z is None:
                return None
            row.append(z)
        rows.append(tuple(row))
    return StarTable(P, tuple(rows))


# -- congruences ------------------------------------------------------------------


def star_compatible(star: StarTable, theta: EquivRelation) -> bool:
    """``(a, b), (c, d)`` in theta imply ``(a*c, b*d)`` in theta."""
    s = star.star
    for K1 in theta.classes:
        for K2 in theta.classes:
            ids = {theta.class_of[s[a][c]] for a in K1 for c in K2}
            if len(ids) > 1:
                return False
    return True


def is_star_congruence(P: Poset, star: StarTable, theta: EquivRelation) -> bool:
    return is_congruence(P, theta) and star_compatible(star, theta)


def enumerate_star_congruences(
    P: Poset, star: StarTable, family: ConFamily | None = None
) -> ConFamily:
    family = family if family is not None else enumerate_congruences(P)
    return family.filter(lambda t: star_compatible(star, t))


def malcev_T(P: Poset, star: StarTable, x: int, y: int, z: int) -> ElementSet:
    """``Max L((x*y)*z, (z*y)*x)``."""
    s = star.star
    return ElementSet(P.max_l_table[s[s[x][y]][z]][s[s[z][y]][x]])


@dataclass
class ReflexiveVerdict:
    """Outcome of testing "reflexive + compatible implies congruence".

    ``holds`` is False only for a counterexample: a relation compatible
    with every operator that is still not a congruence.
    """

    compatible: bool
    symmetric: bool
    transitive: bool
    congruence: bool
    failed_operator: str | None = None
    trace: list[str] = field(default_factory=list)

    @property
    def holds(self) -> bool:
        return not self.compatible or self.congruence


def _relation_shape(n: int, rel: set[tuple[int, int]]) -> tuple[bool, bool]:
    symmetric = all((y, x) in rel for x, y in rel)
    transitive = all(
        (x, z) in rel for x, y in rel for y2, z in rel if y == y2
    )
    return symmetric, transitive


def check_reflexive_compatible_is_congruence(
    P: Poset, star: StarTable, R
) -> ReflexiveVerdict:
    """For a reflexive relation compatible with Max L, Min U and ``*``,
    confirm it is a congruence, recording the Malcev witnesses
    ``T(a,a,b) x T(a,b,b)`` and ``T(a,b,b) x T(b,b,c)`` used for symmetry
    and transitivity.
    """
    rel = set(R)
    if any((x, x) not in rel for x in range(P.n)):
        raise CongruenceError("relation is not reflexive")
    symmetric, transitive = _relation_shape(P.n, rel)
    for name, op in (("max_l", max_l_op(P)), ("min_u", min_u_op(P)), ("star", star.as_op())):
        if compatibility_witness(P, rel, op) is not None:
            return ReflexiveVerdict(False, symmetric, transitive, False, name)
    trace = []
    for a, b in sorted(rel):
        left, right = malcev_T(P, star, a, a, b), malcev_T(P, star, a, b, b)
        trace.append(
            f"sym ({P.labels[a]},{P.labels[b]}): T(a,a,b)={P.names(left)} T(a,b,b)={P.names(right)}"
        )
    congruence = False
    if symmetric and transitive:
        theta = EquivRelation.from_pairs(P.n, rel)
        congruence = is_star_congruence(P, star, theta)
    return ReflexiveVerdict(True, symmetric, transitive, congruence, None, trace)


# -- deductive systems and ideal terms ------------------------------------------------


def is_deductive_system(P: Poset, star: StarTable, D: SetLike) -> bool:
    return deductive_violation(P, star, D) is None


def deductive_violation(P: Poset, star: StarTable, D: SetLike) -> tuple[int, int] | None:
    """First ``(x, y)`` with ``x`` and ``x*y`` in D but ``y`` outside.

    ``(top, top)`` is reported when the top element itself is missing.
    """
    if P.top is None:
        raise CongruenceError("poset has no top element")
    m = _as_mask(D)
    if not m >> P.top & 1:
        return P.top, P.top
    for x in ElementSet(m):
        for y in range(P.n):
            if m >> star.star[x][y] & 1 and not m >> y & 1:
                return x, y
    return None


def ideal_term_t2(star: StarTable, x: int, y1: int, y2: int) -> int:
    """``(y1 * (y2 * x)) * x``."""
    s = star.star
    return s[s[y1][s[y2][x]]][x]


def ideal_term_violation(P: Poset, star: StarTable, D: SetLike) -> tuple[int, ...] | None:
    """Witness against closure under ``t1 = 1`` and ``t2``, or None."""
    if P.top is None:
        raise CongruenceError("poset has no top element")
    m = _as_mask(D)
    if not m >> P.top & 1:
        return (P.top,)
    members = list(ElementSet(m))
    for x in range(P.n):
        for y1 in members:
            for y2 in members:
                if not m >> ideal_term_t2(star, x, y1, y2) & 1:
                    return x, y1, y2
    return None


def is_closed_under_ideal_terms(P: Poset, star: StarTable, D: SetLike) -> bool:
    return ideal_term_violation(P, star, D) is None


# -- filters and the relation they induce -------------------------------------------


def is_star_filter(P: Poset, star: StarTable, F: SetLike) -> bool:
    """A filter of the poset closed under ``*``."""
    m = _as_mask(F)
    return is_filter(P, m) and all(
        m >> star.star[x][y] & 1 for x in ElementSet(m) for y in ElementSet(m)
    )


def theta_from_subset(P: Poset, A: SetLike) -> frozenset[tuple[int, int]]:
    """Pairs ``(x, y)`` with ``L(x, a, b) = L(y, a, b)`` for some ``a, b`` in A."""
    members = list(ElementSet(_as_mask(A)))
    if not members:
        raise CongruenceError("subset must be nonempty")
    ab = {P.down[a] & P.down[b] for a in members for b in members}
    out = set()
    for x in range(P.n):
        for y in range(P.n):
            if any(P.down[x] & m == P.down[y] & m for m in ab):
                out.add((x, y))
    return frozenset(out)


@dataclass
class ThetaFVerdict:
    relation: frozenset[tuple[int, int]]
    matches_star_description: bool
    equivalence: EquivRelation | None
    star_congruence: bool
    kernel_matches: bool


def strong_filter_congruence(P: Poset, star: StarTable, F: SetLike) -> ThetaFVerdict:
    """Build the relation induced by a strong filter and test its properties.

    Records whether membership agrees with ``a*b, b*a in F``, whether the
    relation is an equivalence whose top class is F, and whether it is a
    congruence compatible with ``*``.  The last can fail: a strong filter
    need not induce a congruence.
    """
    m = _as_mask(F)
    if not is_strong_filter(P, m):
        raise CongruenceError("not a strong filter")
    rel = theta_from_subset(P, m)
    s = star.star
    described = frozenset(
        (a, b) for a in range(P.n) for b in range(P.n) if m >> s[a][b] & 1 and m >> s[b][a] & 1
    )
    try:
        theta = EquivRelation.from_pairs(P.n, rel)
    except CongruenceError:
        theta = None
    return ThetaFVerdict(
        relation=rel,
        matches_star_description=rel == described,
        equivalence=theta,
        star_congruence=theta is not None and is_star_congruence(P, star, theta),
        kernel_matches=theta is not None and kernel(P, theta).mask == m,
    )


@dataclass
class KernelLinkVerdict:
    violations_i: list[tuple[int, int]]
    violations_ii: list[tuple[int, int]]

    @property
    def ok(self) -> bool:
        return not self.violations_i and not self.violations_ii


def lemma3_checks(P: Poset, star: StarTable, theta: EquivRelation) -> KernelLinkVerdict:
    """Relate pairs of a ``*``-compatible equivalence to its top class.

    (i) related ``a, b`` have ``a*b`` and ``b*a`` in the top class;
    (ii) ``a*b, b*a`` in the top class together with
    ``((a*b)*b, (b*a)*a)`` related force ``a, b`` related.
    """
    if not star_compatible(star, theta):
        raise CongruenceError("relation is not compatible with *")
    K = kernel(P, theta)
    s = star.star
    bad_i, bad_ii = [], []
    for a in range(P.n):
        for b in range(P.n):
            in_kernel = s[a][b] in K and s[b][a] in K
            if theta.related(a, b) and not in_kernel:
                bad_i.append((a, b))
            if in_kernel and theta.related(s[s[a][b]][b], s[s[b][a]][a]) and not theta.related(a, b):
                bad_ii.append((a, b))
    return KernelLinkVerdict(bad_i, bad_ii)


def all_subsets_with_top(P: Poset) -> list[ElementSet]:
    """Every subset containing the top element (2**(n-1) of them)."""
    if P.top is None:
        return []
    rest = [i for i in range(P.n) if i != P.top]
    out = []
    for r in range(len(rest) + 1):
        for combo in itertools.combinations(rest, r):
            out.append(ElementSet.of((P.top, *combo)))
    return out

