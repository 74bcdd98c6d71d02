"""Congruences on finite posets.

A congruence is an equivalence relation compatible with the binary operators
Max L and Min U.  On a finite poset every congruence class is an interval,
which is what makes :func:`enumerate_congruences` an exact-cover search over
interval partitions instead of a walk over all set partitions.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .poset import ElementSet, Poset, PosetError, SetLike, _as_mask, lower_cone


class CongruenceError(ValueError):
    pass


class EquivRelation:
    """An equivalence relation on ``range(n)``, stored as a partition.

    Classes are kept in canonical order (by least member index), so two
    relations are equal exactly when their ``class_of`` tuples are equal.
    """

    __slots__ = ("n", "class_of", "classes")

    def __init__(self, class_of: Sequence[int]):
        relabel: dict[int, int] = {}
        canon = []
        for c in class_of:
            if c not in relabel:
                relabel[c] = len(relabel)
            canon.append(relabel[c])
        self.n = len(canon)
        self.class_of = tuple(canon)
        masks = [0] * len(relabel)
        for x, c in enumerate(canon):
            masks[c] |= 1 << x
        self.classes = tuple(ElementSet(m) for m in masks)

    @classmethod
    def from_classes(cls, n: int, classes: Iterable[SetLike]) -> EquivRelation:
        class_of = [-1] * n
        for k, cl in enumerate(classes):
            for x in ElementSet(_as_mask(cl)):
                if x >= n:
                    raise CongruenceError(f"element {x} out of range")
                if class_of[x] != -1:
                    raise CongruenceError(f"element {x} appears in two classes")
                class_of[x] = k
        if -1 in class_of:
            raise CongruenceError("classes do not cover the ground set")
        return cls(class_of)

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> EquivRelation:
        """Read a pair set that must already be an equivalence relation."""
        rel = set(pairs)
        for x in range(n):
            if (x, x) not in rel:
                raise CongruenceError("relation is not reflexive")
        for x, y in rel:
            if (y, x) not in rel:
                raise CongruenceError("relation is not symmetric")
        theta = cls([min(y for y in range(n) if (x, y) in rel) for x in range(n)])
        if set(theta.pairs()) != rel:
            raise CongruenceError("relation is not transitive")
        return theta

    @classmethod
    def delta(cls, n: int) -> EquivRelation:
        return cls(range(n))

    @classmethod
    def nabla(cls, n: int) -> EquivRelation:
        return cls([0] * n)

    def __contains__(self, pair: object) -> bool:
        x, y = pair  # type: ignore[misc]
        return self.class_of[x] == self.class_of[y]

    def related(self, x: int, y: int) -> bool:
        return self.class_of[x] == self.class_of[y]

    def block(self, x: int) -> ElementSet:
        """The class ``[x]`` of this relation."""
        return self.classes[self.class_of[x]]

    def pairs(self) -> Iterator[tuple[int, int]]:
        for cl in self.classes:
            for x in cl:
                for y in cl:
                    yield x, y

    def pair_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.pairs())

    def __len__(self) -> int:
        return sum(len(c) ** 2 for c in self.classes)

    def issubset(self, other: EquivRelation) -> bool:
        return _refines(self, other)

    def intersection(self, other: EquivRelation) -> EquivRelation:
        return EquivRelation(list(zip(self.class_of, other.class_of)))

    def compose(self, other: EquivRelation) -> frozenset[tuple[int, int]]:
        """Relational product: ``(x, y)`` with ``x self z`` and ``z other y``."""
        out = set()
        for x in range(self.n):
            reach = 0
            for z in self.block(x):
                reach |= other.block(z).mask
            out.update((x, y) for y in ElementSet(reach))
        return frozenset(out)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, EquivRelation):
            return NotImplemented
        return self.class_of == other.class_of

    def __hash__(self) -> int:
        return hash(self.class_of)

    def __repr__(self) -> str:
        return f"EquivRelation({[list(c) for c in self.classes]})"


def format_relation(P: Poset, theta: EquivRelation) -> str:
    """Class list such as ``[0,a][b,1]``; non-interval classes use braces.

    Singleton classes are left out; the identity relation is ``delta``.
    """
    parts = []
    for cl in theta.classes:
        if len(cl) == 1:
            continue
        lo = [x for x in cl if P.down[x] & cl.mask == 1 << x]
        hi = [x for x in cl if P.up[x] & cl.mask == 1 << x]
        if len(lo) == 1 and len(hi) == 1 and (P.up[lo[0]] & P.down[hi[0]]) == cl.mask:
            parts.append(f"[{P.labels[lo[0]]},{P.labels[hi[0]]}]")
        else:
            parts.append("{" + ",".join(P.names(cl)) + "}")
    return "".join(parts) or "delta"


def parse_relation(P: Poset, text: str) -> EquivRelation:
    """Inverse of :func:`format_relation`; also accepts ``delta`` and ``nabla``.

    Elements not mentioned form singleton classes.
    """
    text = text.strip()
    if text == "delta":
        return EquivRelation.delta(P.n)
    if text == "nabla":
        return EquivRelation.nabla(P.n)
    classes: list[ElementSet] = []
    pos = 0
    while pos < len(text):
        opener = text[pos]
        closer = {"[": "]", "{": "}"}.get(opener)
        end = text.find(closer, pos) if closer else -1
        if end < 0:
            raise CongruenceError(f"cannot parse class list {text!r}")
        body = [t.strip() for t in text[pos + 1:end].split(",")]
        try:
            if opener == "[":
                if len(body) != 2:
                    raise CongruenceError(f"interval needs two bounds: {text[pos:end + 1]}")
                lo, hi = P.index(body[0]), P.index(body[1])
                cl = ElementSet(P.up[lo] & P.down[hi])
                if not cl:
                    raise CongruenceError(f"empty interval {text[pos:end + 1]}")
            else:
                cl = P.elements(*body)
        except PosetError as exc:
            raise CongruenceError(str(exc)) from None
        classes.append(cl)
        pos = end + 1
    covered = 0
    for cl in classes:
        covered |= cl.mask
    classes += [ElementSet(1 << x) for x in range(P.n) if not covered >> x & 1]
    return EquivRelation.from_classes(P.n, classes)


# -- the congruence property ------------------------------------------------------


def _classwise_compatible(table: Sequence[Sequence[int]], theta: EquivRelation) -> bool:
    """Compatibility of ``theta`` with a binary operator given as mask table."""
    bit = [1 << c for c in theta.class_of]
    n = theta.n
    cmask = [[0] * n for _ in range(n)]
    for i in range(n):
        row = table[i]
        out = cmask[i]
        for j in range(n):
            m = row[j]
            acc = 0
            while m:
                low = m & -m
                acc |= bit[low.bit_length() - 1]
                m ^= low
            if not acc:
                return False
            out[j] = acc
    for K1 in theta.classes:
        for K2 in theta.classes:
            seen = {cmask[a][b] for a in K1 for b in K2}
            if len(seen) > 1:
                for u, v in itertools.combinations(seen, 2):
                    if not u & v:
                        return False
    return True


def is_congruence(P: Poset, theta: EquivRelation) -> bool:
    if theta.n != P.n:
        raise CongruenceError("relation and poset differ in size")
    return _classwise_compatible(P.max_l_table, theta) and _classwise_compatible(
        P.min_u_table, theta
    )


def _interval_partitions(P: Poset) -> Iterator[list[int]]:
    """All partitions of P into nonempty closed intervals, as class masks.

    Elements are visited along a linear extension; the first uncovered one is
    necessarily the least element of its class.
    """
    order = P.linear_extension
    full = P.all.mask
    chosen: list[int] = []

    def search(covered: int) -> Iterator[list[int]]:
        if covered == full:
            yield list(chosen)
            return
        x = next(i for i in order if not covered >> i & 1)
        for c in ElementSet(P.up[x] & ~covered):
            block = P.up[x] & P.down[c]
            if block & covered:
                continue
            chosen.append(block)
            yield from search(covered | block)
            chosen.pop()

    yield from search(0)


def _set_partitions(n: int) -> Iterator[list[int]]:
    """Restricted growth strings of length ``n``."""
    if n == 0:
        yield []
        return
    rgs = [0] * n

    def rec(i: int, top: int) -> Iterator[list[int]]:
        if i == n:
            yield list(rgs)
            return
        for c in range(top + 2):
            rgs[i] = c
            yield from rec(i + 1, max(top, c))

    rgs[0] = 0
    yield from rec(1, 0)


@dataclass
class ConFamily:
    """A set of congruences on one poset, ordered by inclusion.

    Members are sorted by decreasing number of classes and then by their
    canonical form, so the identity relation comes first and the all
    relation last.  Meets and joins are taken inside the family.
    """

    poset: Poset
    members: list[EquivRelation]
    names: list[str] = field(default_factory=list)

    def __post_init__(self) -> None:
        uniq = sorted(set(self.members), key=lambda t: (-len(t.classes), t.class_of))
        self.members = uniq
        if not self.names or len(self.names) != len(uniq):
            self.names = _default_names(self.poset, uniq)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[EquivRelation]:
        return iter(self.members)

    def __contains__(self, theta: object) -> bool:
        return theta in self.members

    def index(self, theta: EquivRelation) -> int:
        return self.members.index(theta)

    @cached_property
    def inclusion(self) -> tuple[tuple[bool, ...], ...]:
        return tuple(
            tuple(_refines(a, b) for b in self.members) for a in self.members
        )

    def as_poset(self) -> Poset:
        return Poset(self.names, self.inclusion, name=f"Con {self.poset.name}".strip())

    def filter(self, pred) -> ConFamily:
        return ConFamily(self.poset, [t for t in self.members if pred(t)])

    def meet(self, i: int, j: int) -> int | None:
        """Index of the greatest member below both, if it exists."""
        lower = [k for k in range(len(self)) if self.inclusion[k][i] and self.inclusion[k][j]]
        best = [k for k in lower if all(self.inclusion[m][k] for m in lower)]
        return best[0] if best else None

    def join(self, i: int, j: int) -> int | None:
        upper = [k for k in range(len(self)) if self.inclusion[i][k] and self.inclusion[j][k]]
        best = [k for k in upper if all(self.inclusion[k][m] for m in upper)]
        return best[0] if best else None

    def is_lattice(self) -> bool:
        r = range(len(self))
        return len(self) > 0 and all(
            self.meet(i, j) is not None and self.join(i, j) is not None for i in r for j in r
        )

    def lines(self) -> list[str]:
        return [f"{nm}: {format_relation(self.poset, t)}" for nm, t in zip(self.names, self.members)]


def _refines(a: EquivRelation, b: EquivRelation) -> bool:
    return all(b.class_of[x] == b.class_of[min(cl)] for cl in a.classes for x in cl)


def _default_names(P: Poset, members: Sequence[EquivRelation]) -> list[str]:
    names = []
    k = 0
    for t in members:
        if len(t.classes) == P.n:
            names.append("delta")
        elif len(t.classes) == 1:
            names.append("nabla")
        else:
            k += 1
            names.append(f"theta{k}")
    return names


def enumerate_congruences(P: Poset) -> ConFamily:
    found = []
    for blocks in _interval_partitions(P):
        theta = EquivRelation.from_classes(P.n, [ElementSet(b) for b in blocks])
        if is_congruence(P, theta):
            found.append(theta)
    return ConFamily(P, found)


BRUTEFORCE_LIMIT = 10


def enumerate_congruences_bruteforce(P: Poset, limit: int = BRUTEFORCE_LIMIT) -> ConFamily:
    """Filter every set partition of P; exponential (Bell numbers)."""
    if P.n > limit:
        raise CongruenceError(f"poset has {P.n} elements, brute force limit is {limit}")
    found = [t for t in map(EquivRelation, _set_partitions(P.n)) if is_congruence(P, t)]
    return ConFamily(P, found)


# -- classes, kernels, quotients ----------------------------------------------------


def _require_congruence(P: Poset, theta: EquivRelation) -> None:
    if not is_congruence(P, theta):
        raise CongruenceError("relation is not a congruence")


def class_interval_bounds(P: Poset, theta: EquivRelation, a: int) -> tuple[int, int]:
    _require_congruence(P, theta)
    cl = theta.block(a).mask
    least = [x for x in ElementSet(cl) if P.up[x] & cl == cl]
    greatest = [x for x in ElementSet(cl) if P.down[x] & cl == cl]
    if len(least) != 1 or len(greatest) != 1:
        raise AssertionError("congruence class without least or greatest element")
    return least[0], greatest[0]


def kernel(P: Poset, theta: EquivRelation) -> ElementSet:
    """The class of the top element."""
    if P.top is None:
        raise CongruenceError("poset has no top element")
    return theta.block(P.top)


@dataclass(frozen=True)
class Quotient:
    poset: Poset
    classes: tuple[ElementSet, ...]
    least: tuple[int, ...]
    greatest: tuple[int, ...]

    def embedding(self) -> dict[int, int]:
        """Map from quotient element to the least element of its class."""
        return dict(enumerate(self.least))


def quotient_poset(P: Poset, theta: EquivRelation) -> Quotient:
    """Classes ordered by their least elements.

    Ordering by greatest elements must give the same relation; a mismatch
    raises ``AssertionError``.
    """
    _require_congruence(P, theta)
    bounds = [class_interval_bounds(P, theta, min(cl)) for cl in theta.classes]
    lo = [b[0] for b in bounds]
    hi = [b[1] for b in bounds]
    k = len(bounds)
    by_least = [[P.le(lo[i], lo[j]) for j in range(k)] for i in range(k)]
    by_greatest = [[P.le(hi[i], hi[j]) for j in range(k)] for i in range(k)]
    if by_least != by_greatest:
        raise AssertionError("least and greatest elements order the classes differently")
    labels = [
        f"[{P.labels[a]}]" if a == b else f"[{P.labels[a]},{P.labels[b]}]" for a, b in bounds
    ]
    return Quotient(Poset(labels, by_least), theta.classes, tuple(lo), tuple(hi))


def comparable_part(P: Poset, theta: EquivRelation) -> frozenset[tuple[int, int]]:
    return frozenset((x, y) for x, y in theta.pairs() if P.le(x, y))


def determined_by_comparable_pairs(P: Poset, theta: EquivRelation, phi: EquivRelation) -> bool:
    return comparable_part(P, theta) == comparable_part(P, phi)


# -- filters --------------------------------------------------------------------------


def is_filter(P: Poset, F: SetLike) -> bool:
    m = _as_mask(F)
    return m != 0 and all(P.up[x] & ~m == 0 for x in ElementSet(m))


def is_strong_filter(P: Poset, F: SetLike) -> bool:
    m = _as_mask(F)
    if not is_filter(P, m):
        return False
    members = list(ElementSet(m))
    return all(lower_cone(P, [x, y]).mask & m for x in members for y in members)


def all_filters(P: Poset) -> list[ElementSet]:
    """Every filter of P, in order of mask value."""
    out = []
    for m in range(1, 1 << P.n):
        if is_filter(P, ElementSet(m)):
            out.append(ElementSet(m))
    return out


# -- permutability, regularity, uniformity ----------------------------------------


@dataclass
class PropertyReport:
    permutable: bool
    permutable_witnesses: list[tuple[int, int, int, int]]
    regular: bool
    regular_witnesses: list[tuple[int, int, ElementSet]]
    uniform: bool
    uniform_witnesses: list[int]


def congruence_properties(P: Poset, family: ConFamily) -> PropertyReport:
    """Check permutability, regularity and uniformity across ``family``.

    Witnesses are indices into ``family.members``:

    * permutable: ``(i, j, x, y)`` with ``(x, y)`` in ``Ti o Tj`` but not in
      ``Tj o Ti``; first such pair in index order, one per ordered ``(i, j)``;
    * regular: ``(i, j, cls)`` for distinct members sharing class ``cls``;
    * uniform: members whose classes differ in size.
    """
    members = family.members
    perm = []
    for i, j in itertools.permutations(range(len(members)), 2):
        diff = members[i].compose(members[j]) - members[j].compose(members[i])
        if diff:
            x, y = min(diff)
            perm.append((i, j, x, y))
    reg = []
    for i, j in itertools.combinations(range(len(members)), 2):
        shared = set(members[i].classes) & set(members[j].classes)
        for cl in sorted(shared):
            reg.append((i, j, cl))
    unif = [i for i, t in enumerate(members) if len({len(c) for c in t.classes}) > 1]
    return PropertyReport(not perm, perm, not reg, reg, not unif, unif)


def con_poset(source: Poset | ConFamily) -> ConFamily:
    """The congruence family of a poset (or a given family) with its inclusion
    order filled in."""
    family = source if isinstance(source, ConFamily) else enumerate_congruences(source)
    family.inclusion  # noqa: B018  populate the cached order
    return family
