"""Finite posets and the cone operators L, U, Max, Min built on them.

Elements are addressed by their position in ``Poset.labels``.  Subsets are
:class:`ElementSet` values backed by an integer bitmask, so cones reduce to
bitwise AND over precomputed down-sets and up-sets.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterable, Iterator, Mapping, Sequence


class PosetError(ValueError):
    """Raised for malformed poset input."""


@dataclass(frozen=True, order=True)
class ElementSet:
    """Subset of a poset's elements; iterates in ascending index order."""

    mask: int = 0

    @classmethod
    def of(cls, indices: Iterable[int]) -> ElementSet:
        m = 0
        for i in indices:
            if i < 0:
                raise PosetError(f"negative element index {i}")
            m |= 1 << i
        return cls(m)

    def __iter__(self) -> Iterator[int]:
        m = self.mask
        while m:
            low = m & -m
            yield low.bit_length() - 1
            m ^= low

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __bool__(self) -> bool:
        return self.mask != 0

    def __contains__(self, i: object) -> bool:
        return isinstance(i, int) and i >= 0 and bool(self.mask >> i & 1)

    def __and__(self, other: ElementSet) -> ElementSet:
        return ElementSet(self.mask & other.mask)

    def __or__(self, other: ElementSet) -> ElementSet:
        return ElementSet(self.mask | other.mask)

    def __sub__(self, other: ElementSet) -> ElementSet:
        return ElementSet(self.mask & ~other.mask)

    def issubset(self, other: ElementSet) -> bool:
        return self.mask & ~other.mask == 0

    def only(self) -> int | None:
        """The unique member of a singleton, else None."""
        if self.mask and self.mask & (self.mask - 1) == 0:
            return self.mask.bit_length() - 1
        return None

    def __repr__(self) -> str:
        return f"ElementSet({list(self)})"


SetLike = ElementSet | Iterable[int]


def _as_mask(A: SetLike | int) -> int:
    # bare ints are raw masks (internal use)
    if isinstance(A, int):
        return A
    if isinstance(A, ElementSet):
        return A.mask
    return ElementSet.of(A).mask


class Poset:
    """A finite nonempty poset given by labels and a full order matrix.

    ``leq[i][j]`` is true iff element ``i`` is below element ``j``.  Instances
    are treated as immutable; derived tables are cached on first use.
    """

    def __init__(self, labels: Sequence[str], leq: Sequence[Sequence[bool]], name: str = ""):
        labels = tuple(str(x) for x in labels)
        n = len(labels)
        if n == 0:
            raise PosetError("poset must be nonempty")
        if any(not x for x in labels):
            raise PosetError("empty label")
        if len(set(labels)) != n:
            dup = next(x for x in labels if labels.count(x) > 1)
            raise PosetError(f"duplicate label {dup!r}")
        if len(leq) != n or any(len(row) != n for row in leq):
            raise PosetError("order matrix must be square and match the labels")
        self.name = name
        self.labels = labels
        self.n = n
        self.leq = tuple(tuple(bool(v) for v in row) for row in leq)
        self._index = {x: i for i, x in enumerate(labels)}
        self.down = tuple(sum(1 << i for i in range(n) if self.leq[i][j]) for j in range(n))
        self.up = tuple(sum(1 << j for j in range(n) if self.leq[i][j]) for i in range(n))
        self._validate()

    def _validate(self) -> None:
        n, leq = self.n, self.leq
        for i in range(n):
            if not leq[i][i]:
                raise PosetError(f"order is not reflexive at {self.labels[i]!r}")
        for i, j in itertools.combinations(range(n), 2):
            if leq[i][j] and leq[j][i]:
                raise PosetError(f"cycle detected: {self.labels[i]!r} and {self.labels[j]!r}")
        for i in range(n):
            for j in self.upset(i):
                if self.up[j] & ~self.up[i]:
                    k = next(iter(ElementSet(self.up[j] & ~self.up[i])))
                    raise PosetError(
                        f"order is not transitive: {self.labels[i]}<={self.labels[j]}"
                        f"<={self.labels[k]}"
                    )

    # -- element access -------------------------------------------------------

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise PosetError(f"unknown label {label!r}") from None

    def elements(self, *labels: str) -> ElementSet:
        return ElementSet.of(self.index(x) for x in labels)

    def names(self, S: SetLike) -> list[str]:
        return [self.labels[i] for i in ElementSet(_as_mask(S))]

    @property
    def all(self) -> ElementSet:
        return ElementSet((1 << self.n) - 1)

    def le(self, i: int, j: int) -> bool:
        return self.leq[i][j]

    def lt(self, i: int, j: int) -> bool:
        return i != j and self.leq[i][j]

    def downset(self, i: int) -> ElementSet:
        return ElementSet(self.down[i])

    def upset(self, i: int) -> ElementSet:
        return ElementSet(self.up[i])

    @cached_property
    def top(self) -> int | None:
        return next((i for i in range(self.n) if self.down[i] == self.all.mask), None)

    @cached_property
    def bottom(self) -> int | None:
        return next((i for i in range(self.n) if self.up[i] == self.all.mask), None)

    @property
    def bounded(self) -> bool:
        return self.top is not None and self.bottom is not None

    @cached_property
    def covers(self) -> tuple[tuple[int, int], ...]:
        """Cover pairs ``(i, j)`` with ``i < j`` and nothing strictly between."""
        out = []
        for i in range(self.n):
            for j in range(self.n):
                if self.lt(i, j):
                    between = self.up[i] & self.down[j] & ~(1 << i | 1 << j)
                    if not between:
                        out.append((i, j))
        return tuple(out)

    @cached_property
    def linear_extension(self) -> tuple[int, ...]:
        """Elements sorted so that every element follows everything below it."""
        return tuple(sorted(range(self.n), key=lambda i: (self.down[i].bit_count(), i)))

    # Max L(x, y) and Min U(x, y) as masks, for all pairs.
    @cached_property
    def max_l_table(self) -> tuple[tuple[int, ...], ...]:
        return tuple(
            tuple(_maximal_mask(self, self.down[i] & self.down[j]) for j in range(self.n))
            for i in range(self.n)
        )

    @cached_property
    def min_u_table(self) -> tuple[tuple[int, ...], ...]:
        return tuple(
            tuple(_minimal_mask(self, self.up[i] & self.up[j]) for j in range(self.n))
            for i in range(self.n)
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poset):
            return NotImplemented
        return self.labels == other.labels and self.leq == other.leq

    def __hash__(self) -> int:
        return hash((self.labels, self.leq))

    def __repr__(self) -> str:
        name = f" {self.name}" if self.name else ""
        return f"<Poset{name} n={self.n}>"


def build_poset(
    labels: Sequence[str],
    relation: Iterable[tuple[str, str]],
    mode: str = "covers",
    name: str = "",
) -> Poset:
    """Build a poset from cover pairs (closed transitively) or a full order.

    In ``"full"`` mode the relation must already be transitive; only
    reflexivity is added.
    """
    if mode not in ("covers", "full"):
        raise PosetError(f"unknown mode {mode!r}")
    labels = [str(x) for x in labels]
    if len(set(labels)) != len(labels):
        dup = next(x for x in labels if labels.count(x) > 1)
        raise PosetError(f"duplicate label {dup!r}")
    index = {x: i for i, x in enumerate(labels)}
    n = len(labels)
    leq = [[i == j for j in range(n)] for i in range(n)]
    for a, b in relation:
        for x in (a, b):
            if x not in index:
                raise PosetError(f"unknown label {x!r}")
        i, j = index[a], index[b]
        if mode == "covers" and i == j:
            raise PosetError(f"cycle detected: {a!r} < {a!r}")
        leq[i][j] = True
    if mode == "covers":
        # Warshall closure
        for k in range(n):
            for i in range(n):
                if leq[i][k]:
                    row_k = leq[k]
                    row_i = leq[i]
                    for j in range(n):
                        if row_k[j]:
                            row_i[j] = True
    return Poset(labels, leq, name=name)


def subposet(P: Poset, S: SetLike, name: str = "") -> Poset:
    """The induced order on the members of ``S``."""
    keep = list(ElementSet(_as_mask(S)))
    return Poset(
        [P.labels[i] for i in keep],
        [[P.leq[i][j] for j in keep] for i in keep],
        name=name,
    )


def dual(P: Poset) -> Poset:
    return Poset(P.labels, [[P.leq[j][i] for j in range(P.n)] for i in range(P.n)], P.name)


# -- cones and extremal elements ------------------------------------------------


def lower_cone(P: Poset, A: SetLike) -> ElementSet:
    """Common lower bounds of ``A``; the empty set has all of P."""
    m = P.all.mask
    for a in ElementSet(_as_mask(A)):
        m &= P.down[a]
    return ElementSet(m)


def upper_cone(P: Poset, A: SetLike) -> ElementSet:
    m = P.all.mask
    for a in ElementSet(_as_mask(A)):
        m &= P.up[a]
    return ElementSet(m)


def _maximal_mask(P: Poset, m: int) -> int:
    out = 0
    for i in ElementSet(m):
        if not (P.up[i] & m) & ~(1 << i):
            out |= 1 << i
    return out


def _minimal_mask(P: Poset, m: int) -> int:
    out = 0
    for i in ElementSet(m):
        if not (P.down[i] & m) & ~(1 << i):
            out |= 1 << i
    return out


def maximal(P: Poset, S: SetLike) -> ElementSet:
    return ElementSet(_maximal_mask(P, _as_mask(S)))


def minimal(P: Poset, S: SetLike) -> ElementSet:
    return ElementSet(_minimal_mask(P, _as_mask(S)))


def max_l(P: Poset, A: SetLike) -> ElementSet:
    return maximal(P, lower_cone(P, A))


def min_u(P: Poset, A: SetLike) -> ElementSet:
    return minimal(P, upper_cone(P, A))


def interval(P: Poset, a: int, b: int) -> ElementSet:
    return ElementSet(P.up[a] & P.down[b])


def is_convex(P: Poset, S: SetLike) -> bool:
    m = _as_mask(S)
    members = list(ElementSet(m))
    for a in members:
        for b in members:
            if P.le(a, b) and (P.up[a] & P.down[b]) & ~m:
                return False
    return True


def sup(P: Poset, a: int, b: int) -> int | None:
    """The join of ``a`` and ``b`` when it exists."""
    return ElementSet(P.min_u_table[a][b]).only()


def inf(P: Poset, a: int, b: int) -> int | None:
    return ElementSet(P.max_l_table[a][b]).only()


# -- isomorphism ----------------------------------------------------------------


def is_order_isomorphic(P1: Poset, P2: Poset) -> dict[int, int] | None:
    """Find an order isomorphism from ``P1`` to ``P2`` by backtracking.

    Candidates are restricted to elements with the same numbers of elements
    below and above.  Returns the index map, or None.
    """
    if P1.n != P2.n:
        return None

    def signature(P: Poset, i: int) -> tuple[int, int]:
        return P.down[i].bit_count(), P.up[i].bit_count()

    sig1 = [signature(P1, i) for i in range(P1.n)]
    sig2 = [signature(P2, i) for i in range(P2.n)]
    if sorted(sig1) != sorted(sig2):
        return None
    order = sorted(range(P1.n), key=lambda i: (sig1.count(sig1[i]), i))
    mapping: dict[int, int] = {}
    used = [False] * P2.n

    def extend(k: int) -> bool:
        if k == len(order):
            return True
        x = order[k]
        for y in range(P2.n):
            if used[y] or sig2[y] != sig1[x]:
                continue
            if all(
                P1.leq[x][u] == P2.leq[y][v] and P1.leq[u][x] == P2.leq[v][y]
                for u, v in mapping.items()
            ):
                mapping[x] = y
                used[y] = True
                if extend(k + 1):
                    return True
                del mapping[x]
                used[y] = False
        return False

    return dict(sorted(mapping.items())) if extend(0) else None


# -- set-valued operators and compatibility -------------------------------------


@dataclass(frozen=True)
class OpTable:
    """An n-ary set-valued operator materialized over all argument tuples."""

    arity: int
    table: Mapping[tuple[int, ...], ElementSet]

    @classmethod
    def materialize(
        cls, P: Poset, fn: Callable[..., ElementSet | int], arity: int
    ) -> OpTable:
        """Tabulate ``fn(*args)``; integer results are read as singletons."""
        if arity < 1:
            raise PosetError("arity must be positive")
        table = {}
        for args in itertools.product(range(P.n), repeat=arity):
            v = fn(*args)
            table[args] = ElementSet(1 << v) if isinstance(v, int) else v
        return cls(arity, table)

    def __call__(self, *args: int) -> ElementSet:
        return self.table[args]


def max_l_op(P: Poset) -> OpTable:
    return OpTable(
        2, {(i, j): ElementSet(P.max_l_table[i][j]) for i in range(P.n) for j in range(P.n)}
    )


def min_u_op(P: Poset) -> OpTable:
    return OpTable(
        2, {(i, j): ElementSet(P.min_u_table[i][j]) for i in range(P.n) for j in range(P.n)}
    )


def lower_cone_op(P: Poset) -> OpTable:
    return OpTable.materialize(P, lambda i, j: lower_cone(P, [i, j]), 2)


def upper_cone_op(P: Poset) -> OpTable:
    return OpTable.materialize(P, lambda i, j: upper_cone(P, [i, j]), 2)


def compatible(P: Poset, R: Iterable[tuple[int, int]], Q: OpTable) -> bool:
    """Whether relation ``R`` is compatible with operator ``Q``.

    For every tuple of related pairs ``(a_k, b_k)`` some ``a`` in
    ``Q(a_1..a_n)`` and ``b`` in ``Q(b_1..b_n)`` must satisfy ``(a, b)`` in R.
    An empty value set leaves no witness, so the check fails there.
    """
    return compatibility_witness(P, R, Q) is None


def compatibility_witness(
    P: Poset, R: Iterable[tuple[int, int]], Q: OpTable
) -> tuple[tuple[int, int], ...] | None:
    """First tuple of related pairs with no related outputs, or None."""
    pairs = sorted(set(R))
    rel = set(pairs)
    for combo in itertools.product(pairs, repeat=Q.arity):
        left = Q.table[tuple(p[0] for p in combo)]
        right = Q.table[tuple(p[1] for p in combo)]
        if not any((a, b) in rel for a in left for b in right):
            return combo
    return None


def hasse_edges(P: Poset) -> list[tuple[str, str]]:
    return [(P.labels[i], P.labels[j]) for i, j in P.covers]
