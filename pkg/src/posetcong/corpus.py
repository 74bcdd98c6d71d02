"""Random posets for property tests and the oracle comparison."""

from __future__ import annotations

import itertools
import random

from .boolean import is_boolean
from .heyting import star_table
from .poset import Poset, build_poset, subposet, sup


def random_poset(n: int, rng: random.Random, p: float = 0.3, name: str = "") -> Poset:
    """Transitive closure of a random DAG, with element indices shuffled.

    Shuffling keeps index order from being a linear extension.
    """
    order = list(range(n))
    rng.shuffle(order)
    labels = [f"x{i}" for i in range(n)]
    covers = [
        (labels[order[i]], labels[order[j]])
        for i, j in itertools.combinations(range(n), 2)
        if rng.random() < p
    ]
    return build_poset(labels, covers, name=name or f"rand{n}")


def random_bounded_poset(n: int, rng: random.Random, p: float = 0.3) -> Poset:
    """A random poset on ``n`` inner elements with a bottom and top added."""
    if n == 0:
        return build_poset(["0", "1"], [("0", "1")], name="rbound0")
    inner = random_poset(n, rng, p)
    labels = ["0", *inner.labels, "1"]
    rel = [("0", x) for x in inner.labels] + [(x, "1") for x in inner.labels]
    rel += [(inner.labels[i], inner.labels[j]) for i, j in inner.covers]
    return build_poset(labels, rel, name=f"rbound{n}")


def boolean_lattice(k: int) -> Poset:
    """Subsets of a k-element set under inclusion; labels are bit strings."""
    n = 1 << k
    labels = [format(m, f"0{k}b") if k else "0" for m in range(n)]
    leq = [[(i & ~j) == 0 for j in range(n)] for i in range(n)]
    return Poset(labels, leq, name=f"2^{k}")


def random_boolean_poset(
    k: int, rng: random.Random, tries: int = 200, non_lattice: bool = False
) -> Poset:
    """Drop a random complement-closed set of inner elements from 2^k.

    Candidates that are not Boolean posets are rejected, and with
    ``non_lattice`` so are lattices. Falls back to the full lattice after
    ``tries`` attempts.
    """
    B = boolean_lattice(k)
    full = (1 << k) - 1
    inner_pairs = sorted({(min(m, full ^ m), max(m, full ^ m)) for m in range(1, full)})
    for _ in range(tries):
        drop = set()
        for lo, hi in inner_pairs:
            if rng.random() < 0.5:
                drop.update((lo, hi))
        keep = [m for m in range(B.n) if m not in drop]
        P = subposet(B, keep, name=f"rbool{k}")
        if is_boolean(P) and not (non_lattice and _is_lattice(P)):
            return P
    return B


def _is_lattice(P: Poset) -> bool:
    return all(sup(P, x, y) is not None for x in range(P.n) for y in range(x + 1, P.n))


def downset_lattice(Q: Poset) -> Poset:
    """The distributive lattice of down-sets of Q (always relatively
    pseudocomplemented)."""
    downs = []
    for m in range(1 << Q.n):
        if all(Q.down[x] & ~m == 0 for x in range(Q.n) if m >> x & 1):
            downs.append(m)
    labels = ["d" + format(m, "x") for m in downs]
    leq = [[(a & ~b) == 0 for b in downs] for a in downs]
    return Poset(labels, leq, name=f"downsets({Q.name})")


def random_heyting_poset(rng: random.Random, n: int = 5) -> Poset:
    """A random bounded relatively pseudocomplemented poset.

    Tries random bounded posets first (non-lattices appear there) and falls
    back to a down-set lattice.
    """
    for _ in range(50):
        P = random_bounded_poset(n, rng, p=rng.choice([0.2, 0.3, 0.5]))
        if star_table(P) is not None:
            return P
    return downset_lattice(random_poset(min(n, 4), rng))
