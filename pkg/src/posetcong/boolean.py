"""Distributive and Boolean posets, complementation, and their congruences."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .congruence import (
    ConFamily,
    CongruenceError,
    EquivRelation,
    enumerate_congruences,
    is_congruence,
    kernel,
)
from .poset import (
    ElementSet,
    OpTable,
    Poset,
    SetLike,
    _as_mask,
    compatibility_witness,
    lower_cone,
    max_l_op,
    maximal,
    min_u_op,
    minimal,
    sup,
    upper_cone,
)


def _L(P: Poset, m: int) -> int:
    return lower_cone(P, ElementSet(m)).mask


def _U(P: Poset, m: int) -> int:
    return upper_cone(P, ElementSet(m)).mask


def _bit(*xs: int) -> int:
    m = 0
    for x in xs:
        m |= 1 << x
    return m


def distributive_violation(P: Poset, which: int = 1) -> tuple[int, int, int] | None:
    """First triple ``(x, y, z)`` breaking the chosen cone identity.

    1. L(U(x,y), z)  = LU(L(x,z), L(y,z))
    2. UL(U(x,y), z) = U(L(x,z), L(y,z))
    3. U(L(x,y), z)  = UL(U(x,z), U(y,z))
    4. LU(L(x,y), z) = L(U(x,z), U(y,z))
    """
    if which not in (1, 2, 3, 4):
        raise ValueError("identity number must be 1..4")
    down, up = P.down, P.up
    for x, y, z in itertools.product(range(P.n), repeat=3):
        if which == 1:
            lhs = _L(P, _U(P, _bit(x, y)) | 1 << z)
            rhs = _L(P, _U(P, (down[x] & down[z]) | (down[y] & down[z])))
        elif which == 2:
            lhs = _U(P, _L(P, _U(P, _bit(x, y)) | 1 << z))
            rhs = _U(P, (down[x] & down[z]) | (down[y] & down[z]))
        elif which == 3:
            lhs = _U(P, _L(P, _bit(x, y)) | 1 << z)
            rhs = _U(P, _L(P, (up[x] & up[z]) | (up[y] & up[z])))
        else:
            lhs = _L(P, _U(P, _L(P, _bit(x, y)) | 1 << z))
            rhs = _L(P, (up[x] & up[z]) | (up[y] & up[z]))
        if lhs != rhs:
            return x, y, z
    return None


def distributive_identity(P: Poset, which: int) -> bool:
    return distributive_violation(P, which) is None


def is_distributive(P: Poset) -> bool:
    return distributive_identity(P, 1)


# -- complementation -------------------------------------------------------------


@dataclass(frozen=True)
class Complementation:
    poset: Poset
    comp: tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.comp[x]

    def as_op(self) -> OpTable:
        return OpTable(1, {(x,): ElementSet(1 << self.comp[x]) for x in range(self.poset.n)})


def complements(P: Poset, x: int) -> ElementSet:
    """All ``y`` with ``U(x, y) = {1}`` and ``L(x, y) = {0}``."""
    if not P.bounded:
        raise CongruenceError("poset is not bounded")
    top, bot = 1 << P.top, 1 << P.bottom
    return ElementSet.of(
        y for y in range(P.n)
        if P.up[x] & P.up[y] == top and P.down[x] & P.down[y] == bot
    )


def find_complementation(P: Poset) -> Complementation | None:
    """A complementation of a bounded poset, or None if some element has none.

    When several complements exist the lowest-indexed one is taken; on a
    distributive poset each element has at most one.
    """
    comps = [complements(P, x) for x in range(P.n)]
    if not all(comps):
        return None
    if any(len(c) > 1 for c in comps) and is_distributive(P):
        raise AssertionError("distributive poset with a non-unique complement")
    return Complementation(P, tuple(min(c) for c in comps))


def is_boolean(P: Poset) -> bool:
    return P.bounded and is_distributive(P) and find_complementation(P) is not None


def comp_compatible(comp: Complementation, theta: EquivRelation) -> bool:
    return all(len({theta.class_of[comp.comp[x]] for x in cl}) == 1 for cl in theta.classes)


def enumerate_boolean_congruences(
    P: Poset, comp: Complementation, family: ConFamily | None = None
) -> ConFamily:
    family = family if family is not None else enumerate_congruences(P)
    return family.filter(lambda t: comp_compatible(comp, t))


def is_boolean_congruence(P: Poset, comp: Complementation, theta: EquivRelation) -> bool:
    return is_congruence(P, theta) and comp_compatible(comp, theta)


def pixley_T(P: Poset, comp: Complementation, x: int, y: int, z: int) -> ElementSet:
    """``Min U(Max L(x,z), Max L(x,y',z'), Max L(x',y',z))``."""
    c = comp.comp
    parts = (
        maximal(P, lower_cone(P, [x, z])),
        maximal(P, lower_cone(P, [x, c[y], c[z]])),
        maximal(P, lower_cone(P, [c[x], c[y], z])),
    )
    return minimal(P, upper_cone(P, parts[0] | parts[1] | parts[2]))


# -- kernels --------------------------------------------------------------------------


@dataclass
class KernelExclusion:
    """Elements ``b`` witnessing that ``[a, 1]`` is not a congruence kernel."""

    criterion_i: list[int]
    criterion_ii: list[int]

    @property
    def excluded(self) -> bool:
        return bool(self.criterion_i or self.criterion_ii)


def lemma2_kernel_exclusion(
    P: Poset, a: int, comp: Complementation | None = None
) -> KernelExclusion:
    """Search both exclusion criteria for the principal filter ``[a, 1]``.

    (i)  some b such that every c in Max L(a, b) has a d in U(c) outside
         [a, 1] with b v d = 1;
    (ii) some b such that every c in Min U(a', b) has a d in U(b) outside
         [a, 1] with c v d = 1 (needs the complementation).
    Joins must exist and equal the top.
    """
    if P.top is None:
        raise CongruenceError("poset has no top element")
    top = P.top
    filt = P.up[a]

    def has_d(pool: int, partner: int) -> bool:
        return any(sup(P, partner, d) == top for d in ElementSet(pool & ~filt))

    wit_i = [
        b for b in range(P.n)
        if all(has_d(P.up[c], b) for c in ElementSet(P.max_l_table[a][b]))
    ]
    wit_ii = []
    if comp is not None:
        ac = comp.comp[a]
        wit_ii = [
            b for b in range(P.n)
            if all(has_d(P.up[b], c) for c in ElementSet(P.min_u_table[ac][b]))
        ]
    return KernelExclusion(wit_i, wit_ii)


def filter_kernel_status(P: Poset, family: ConFamily, F: SetLike) -> list[EquivRelation]:
    """Members of ``family`` whose kernel is exactly F."""
    m = _as_mask(F)
    return [t for t in family if kernel(P, t).mask == m]


@dataclass
class Theorem2Verdict:
    violations_i: list[tuple[int, int]] = field(default_factory=list)
    violations_ii: list[tuple[int, int]] = field(default_factory=list)
    violations_iii: list[tuple[int, int]] = field(default_factory=list)
    checked_iii: int = 0

    @property
    def ok(self) -> bool:
        return not (self.violations_i or self.violations_ii or self.violations_iii)


def _lu(P: Poset, xs: list[int]) -> int:
    return _L(P, _U(P, _bit(*xs)))


def theorem2_checks(P: Poset, comp: Complementation, theta: EquivRelation) -> Theorem2Verdict:
    """Kernel tests for a Boolean congruence.

    (i)   related a, b: Min U(a, b') meets the kernel;
    (ii)  a <= b with LU(a, b') meeting the kernel: a, b related;
    (iii) a <= b with a v b' defined: related iff a v b' in the kernel.
    """
    K = kernel(P, theta).mask
    c = comp.comp
    out = Theorem2Verdict()
    for a, b in itertools.product(range(P.n), repeat=2):
        if theta.related(a, b) and not P.min_u_table[a][c[b]] & K:
            out.violations_i.append((a, b))
        if not P.le(a, b):
            continue
        if _lu(P, [a, c[b]]) & K and not theta.related(a, b):
            out.violations_ii.append((a, b))
        j = sup(P, a, c[b])
        if j is not None:
            out.checked_iii += 1
            if theta.related(a, b) != bool(K >> j & 1):
                out.violations_iii.append((a, b))
    return out


def assumption2_holds(P: Poset, comp: Complementation, theta: EquivRelation) -> bool:
    """LU(x, y') meets the kernel for every related pair x <= y."""
    K = kernel(P, theta).mask
    return all(
        _lu(P, [x, comp.comp[y]]) & K for x, y in theta.pairs() if P.le(x, y)
    )


def weak_regularity(
    P: Poset, comp: Complementation, theta: EquivRelation, phi: EquivRelation
) -> str:
    """``"consistent"``, ``"n/a"`` (premises fail) or ``"violation"``.

    Two congruences satisfying the kernel assumption and sharing a kernel
    must coincide.
    """
    if not (assumption2_holds(P, comp, theta) and assumption2_holds(P, comp, phi)):
        return "n/a"
    if kernel(P, theta) != kernel(P, phi):
        return "n/a"
    return "consistent" if theta == phi else "violation"


def undefined_join_pairs(P: Poset, comp: Complementation) -> list[tuple[int, int]]:
    """Comparable pairs ``x <= y`` for which ``x v y'`` does not exist."""
    return [
        (x, y)
        for x, y in itertools.product(range(P.n), repeat=2)
        if P.le(x, y) and sup(P, x, comp.comp[y]) is None
    ]


@dataclass
class BooleanReflexiveVerdict:
    compatible: bool
    equivalence: bool
    congruence: bool
    failed_operator: str | None = None

    @property
    def holds(self) -> bool:
        return not self.compatible or self.congruence


def check_reflexive_compatible_is_boolean_congruence(
    P: Poset, comp: Complementation, R
) -> BooleanReflexiveVerdict:
    rel = set(R)
    if any((x, x) not in rel for x in range(P.n)):
        raise CongruenceError("relation is not reflexive")
    for name, op in (("max_l", max_l_op(P)), ("min_u", min_u_op(P)), ("comp", comp.as_op())):
        if compatibility_witness(P, rel, op) is not None:
            return BooleanReflexiveVerdict(False, False, False, name)
    try:
        theta = EquivRelation.from_pairs(P.n, rel)
    except CongruenceError:
        return BooleanReflexiveVerdict(True, False, False)
    return BooleanReflexiveVerdict(True, True, is_boolean_congruence(P, comp, theta))
