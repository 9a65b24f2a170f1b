"""Finite groups as dense multiplication tables over element indices.

Conventions used throughout the package:

* the elements of a group of order n are the indices 0..n-1 and the
  identity is pinned at index 0;
* ``product[a, b]`` is the index of a*b and ``inverse[a]`` of a**-1;
* subgroups are sorted index tuples with an integer bitmask fast path;
* permutations are tuples ``p`` with ``p[i]`` the image of ``i``, and
  the product ``p*q`` means "apply p, then q";
* every choice (coset representatives, generator order, search order)
  is deterministic, so repeated runs give identical objects.

Derived data such as element orders, conjugacy classes and the full
subgroup lattice is memoised on the instance that owns it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence, Union

import numpy as np

from .errors import (
    InternalInconsistency,
    NotAGroup,
    NotNormal,
    OrderLimitExceeded,
)

_DTYPE = np.int32

DEFAULT_CLOSURE_CAP = 20000
DEFAULT_ISO_CAP = 64
DEFAULT_LATTICE_CAP = 256


class FiniteGroup:
    """A finite group given by its full multiplication table.

    Instances are immutable after construction.  ``product_info`` is
    filled in by :func:`subdirect.products.direct_product` when the
    group is built as a direct product, so subgroups of the product
    can recover the two factors.
    """

    __slots__ = ("order", "product", "inverse", "identity", "label",
                 "product_info", "_cache")

    def __init__(self, product: np.ndarray, label: str = "G", *,
                 validate: bool = True):
        table = np.ascontiguousarray(np.asarray(product, dtype=_DTYPE))
        if table.ndim != 2 or table.shape[0] != table.shape[1]:
            raise NotAGroup("multiplication table must be square")
        self.order = int(table.shape[0])
        if self.order == 0:
            raise NotAGroup("a group has at least one element")
        table.setflags(write=False)
        self.product = table
        self.identity = 0
        self.label = label
        self.product_info = None
        self._cache: dict = {}
        if validate:
            self.validate()
        self.inverse = _inverse_table(table)

    # -- basic arithmetic -------------------------------------------------

    def mul(self, a: int, b: int) -> int:
        return int(self.product[a, b])

    def inv(self, a: int) -> int:
        return int(self.inverse[a])

    def conj(self, a: int, g: int) -> int:
        """g**-1 * a * g."""
        t = self.product[self.inverse[g], a]
        return int(self.product[t, g])

    def commutator(self, a: int, b: int) -> int:
        """a**-1 * b**-1 * a * b."""
        t = self.product[self.inverse[a], self.inverse[b]]
        t = self.product[t, a]
        return int(self.product[t, b])

    def power(self, a: int, k: int) -> int:
        if k < 0:
            return self.power(self.inv(a), -k)
        r = 0
        for _ in range(k):
            r = int(self.product[r, a])
        return r

    def element_order(self, a: int) -> int:
        return int(self.element_orders()[a])

    def element_orders(self) -> np.ndarray:
        orders = self._cache.get("orders")
        if orders is None:
            n = self.order
            orders = np.zeros(n, dtype=np.int64)
            cur = np.arange(n)
            k = 1
            while (orders == 0).any():
                newly = (cur == 0) & (orders == 0)
                orders[newly] = k
                cur = self.product[cur, np.arange(n)]
                k += 1
            orders.setflags(write=False)
            self._cache["orders"] = orders
        return orders

    def exponent(self) -> int:
        value = self._cache.get("exponent")
        if value is None:
            value = math.lcm(*(int(o) for o in self.element_orders()))
            self._cache["exponent"] = value
        return value

    @property
    def is_abelian(self) -> bool:
        value = self._cache.get("abelian")
        if value is None:
            value = bool((self.product == self.product.T).all())
            self._cache["abelian"] = value
        return value

    def full(self) -> "Subgroup":
        sub = self._cache.get("full")
        if sub is None:
            sub = Subgroup(self, range(self.order), check=False)
            self._cache["full"] = sub
        return sub

    def trivial(self) -> "Subgroup":
        sub = self._cache.get("trivial")
        if sub is None:
            sub = Subgroup(self, (0,), check=False)
            self._cache["trivial"] = sub
        return sub

    # -- validation --------------------------------------------------------

    def validate(self) -> None:
        """Full axiom scan; raises NotAGroup with the failing witness."""
        table = self.product
        n = self.order
        if table.min() < 0 or table.max() >= n:
            bad = np.argwhere((table < 0) | (table >= n))[0]
            raise NotAGroup(f"entry out of range at {tuple(int(x) for x in bad)}")
        want = np.arange(n)
        rows_ok = (np.sort(table, axis=1) == want).all(axis=1)
        if not rows_ok.all():
            raise NotAGroup(f"row {int(np.flatnonzero(~rows_ok)[0])} is not a permutation")
        cols_ok = (np.sort(table, axis=0) == want[:, None]).all(axis=0)
        if not cols_ok.all():
            raise NotAGroup(f"column {int(np.flatnonzero(~cols_ok)[0])} is not a permutation")
        if not (table[0] == want).all() or not (table[:, 0] == want).all():
            raise NotAGroup("identity is not at index 0")
        # associativity, one defining row at a time to bound memory
        for a in range(n):
            left = table[table[a], :]
            right = table[a][table]
            if not (left == right).all():
                b, c = (int(x) for x in np.argwhere(left != right)[0])
                raise NotAGroup(f"associativity fails at triple ({a}, {b}, {c})")

    def __repr__(self) -> str:
        return f"FiniteGroup({self.label!r}, order={self.order})"


def _inverse_table(table: np.ndarray) -> np.ndarray:
    n = table.shape[0]
    inv = np.empty(n, dtype=_DTYPE)
    rows, cols = np.nonzero(table == 0)
    inv[rows] = cols
    inv.setflags(write=False)
    return inv


def from_cayley_table(table: Sequence[Sequence[int]], label: str = "G") -> FiniteGroup:
    """Build a group from a raw table, relabelling the identity to 0.

    The identity is located first; if it sits at some index e != 0 the
    elements e and 0 are swapped before validation.
    """
    arr = np.asarray(table, dtype=_DTYPE)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise NotAGroup("multiplication table must be square")
    n = arr.shape[0]
    want = np.arange(n)
    identity = None
    for e in range(n):
        if (arr[e] == want).all() and (arr[:, e] == want).all():
            identity = e
            break
    if identity is None:
        raise NotAGroup("table has no two-sided identity")
    if identity != 0:
        sigma = np.arange(n)
        sigma[0], sigma[identity] = identity, 0
        relabel = sigma  # involution, so sigma doubles as its inverse
        arr = relabel[arr[np.ix_(sigma, sigma)]]
    return FiniteGroup(arr, label=label, validate=True)


# -- permutation groups ----------------------------------------------------


def perm_product(p: Sequence[int], q: Sequence[int]) -> tuple:
    """Apply p, then q."""
    return tuple(q[p[i]] for i in range(len(p)))


def from_permutation_generators(degree: int, generators: Sequence[Sequence[int]],
                                label: str = "G", *,
                                max_order: int = DEFAULT_CLOSURE_CAP) -> FiniteGroup:
    """Close a generator set under composition, breadth first.

    Elements are indexed in discovery order starting from the identity,
    which therefore gets index 0.
    """
    gens = []
    for g in generators:
        p = tuple(int(x) for x in g)
        if sorted(p) != list(range(degree)):
            raise ValueError(f"not a permutation of 0..{degree - 1}: {p}")
        gens.append(p)
    identity = tuple(range(degree))
    index = {identity: 0}
    elems = [identity]
    frontier = [identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = perm_product(x, g)
                if y not in index:
                    if len(elems) >= max_order:
                        raise OrderLimitExceeded(
                            f"closure exceeds max_order={max_order}")
                    index[y] = len(elems)
                    elems.append(y)
                    nxt.append(y)
        frontier = nxt
    n = len(elems)
    table = np.empty((n, n), dtype=_DTYPE)
    for i, p in enumerate(elems):
        row = [index[perm_product(p, q)] for q in elems]
        table[i] = row
    group = FiniteGroup(table, label=label, validate=False)
    group._cache["permutations"] = tuple(elems)
    return group


# -- subgroups ---------------------------------------------------------------


class Subgroup:
    """A subgroup stored as a sorted element tuple plus a bitmask."""

    __slots__ = ("parent", "elements", "mask", "_cache")

    def __init__(self, parent: FiniteGroup, elements: Iterable[int], *,
                 check: bool = True):
        elems = tuple(sorted({int(x) for x in elements}))
        if not elems or elems[0] < 0 or elems[-1] >= parent.order:
            raise ValueError("subgroup elements out of range or empty")
        if elems[0] != 0:
            raise ValueError("subgroup must contain the identity")
        self.parent = parent
        self.elements = elems
        self.mask = _mask_of(elems)
        self._cache = {}
        if check:
            arr = np.array(elems)
            prods = parent.product[np.ix_(arr, arr)]
            if _mask_of(np.unique(prods)) | self.mask != self.mask:
                raise ValueError("element set is not closed under products")
            if _mask_of(np.unique(parent.inverse[arr])) | self.mask != self.mask:
                raise ValueError("element set is not closed under inverses")

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def is_whole(self) -> bool:
        return self.order == self.parent.order

    def __contains__(self, x: int) -> bool:
        return bool((self.mask >> int(x)) & 1)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Subgroup) and other.parent is self.parent
                and other.mask == self.mask)

    def __hash__(self) -> int:
        return hash((id(self.parent), self.mask))

    def __repr__(self) -> str:
        return f"Subgroup(order={self.order} of {self.parent.label})"

    def is_subset_of(self, other: "Subgroup") -> bool:
        return self.mask | other.mask == other.mask

    def intersection(self, other: "Subgroup") -> "Subgroup":
        if other.parent is not self.parent:
            raise ValueError("subgroups of different parents")
        m = self.mask & other.mask
        return Subgroup(self.parent, _mask_elements(m), check=False)

    def as_group(self) -> tuple[FiniteGroup, "GroupHom"]:
        """Materialise as a standalone group plus the embedding."""
        cached = self._cache.get("as_group")
        if cached is None:
            parent = self.parent
            arr = np.array(self.elements)
            pos = np.full(parent.order, -1, dtype=_DTYPE)
            pos[arr] = np.arange(len(arr))
            table = pos[parent.product[np.ix_(arr, arr)]]
            grp = FiniteGroup(table, label=f"{parent.label}[{self.order}]",
                              validate=False)
            embed = GroupHom(grp, parent, arr, check=False)
            cached = (grp, embed)
            self._cache["as_group"] = cached
        return cached


def _mask_of(elems) -> int:
    m = 0
    for e in elems:
        m |= 1 << int(e)
    return m


def _mask_elements(mask: int) -> tuple:
    out = []
    e = 0
    while mask:
        if mask & 1:
            out.append(e)
        mask >>= 1
        e += 1
    return tuple(out)


def _closure_elements(G: FiniteGroup, seed: Iterable[int]) -> tuple:
    """Smallest product-closed set containing the identity and the seed."""
    elems = np.unique(np.fromiter((int(x) for x in (0, *seed)), dtype=np.int64))
    while True:
        prods = G.product[np.ix_(elems, elems)]
        merged = np.unique(prods)
        if merged.size == elems.size:
            return tuple(int(x) for x in merged)
        elems = merged


def subgroup_generated(G: FiniteGroup, seed: Iterable[int]) -> Subgroup:
    return Subgroup(G, _closure_elements(G, seed), check=False)


def set_product(A: Subgroup, B: Subgroup, *, check: bool = True) -> Subgroup:
    """The product set {a*b}; a subgroup whenever one factor is normal."""
    if A.parent is not B.parent:
        raise ValueError("subgroups of different parents")
    prods = A.parent.product[np.ix_(np.array(A.elements), np.array(B.elements))]
    return Subgroup(A.parent, np.unique(prods), check=check)


def mutual_commutator(X: Subgroup, Y: Subgroup) -> Subgroup:
    """Subgroup generated by all commutators [x, y] with x in X, y in Y."""
    G = X.parent
    if Y.parent is not G:
        raise ValueError("subgroups of different parents")
    xa = np.array(X.elements)
    ya = np.array(Y.elements)
    t = G.product[np.ix_(G.inverse[xa], G.inverse[ya])]
    t = G.product[t, xa[:, None]]
    t = G.product[t, ya[None, :]]
    return subgroup_generated(G, np.unique(t))


def commutator_subgroup(G: FiniteGroup) -> Subgroup:
    sub = G._cache.get("derived")
    if sub is None:
        sub = mutual_commutator(G.full(), G.full())
        G._cache["derived"] = sub
    return sub


def center(G: FiniteGroup) -> Subgroup:
    sub = G._cache.get("center")
    if sub is None:
        central = (G.product == G.product.T).all(axis=1)
        sub = Subgroup(G, np.flatnonzero(central), check=False)
        G._cache["center"] = sub
    return sub


def generating_sequence(G: FiniteGroup) -> tuple:
    """Greedy generators: repeatedly the smallest element not yet generated."""
    gens = G._cache.get("gens")
    if gens is None:
        chosen: list[int] = []
        have = {0}
        while len(have) < G.order:
            x = next(i for i in range(1, G.order) if i not in have)
            chosen.append(x)
            have = set(_closure_elements(G, chosen))
        gens = tuple(chosen)
        G._cache["gens"] = gens
    return gens


def is_normal(N: Subgroup, within: Optional[Subgroup] = None) -> bool:
    """Is N normal in `within` (default: the whole parent group)?"""
    G = N.parent
    if within is None:
        scope = generating_sequence(G)
    else:
        if within.parent is not G or not N.is_subset_of(within):
            raise ValueError("N must sit inside the ambient subgroup")
        scope = within.elements
    arr = np.array(N.elements)
    for g in scope:
        conj = G.product[G.product[G.inverse[g], arr], g]
        if _mask_of(conj) != N.mask:
            return False
    return True


def quotient_group(G: FiniteGroup, N: Subgroup) -> tuple[FiniteGroup, "GroupHom"]:
    """G/N with minimal-index coset representatives; returns the projection."""
    if N.parent is not G:
        raise ValueError("subgroup of a different parent")
    if not is_normal(N):
        raise NotNormal(f"subgroup of order {N.order} is not normal in {G.label}")
    cols = np.array(N.elements)
    rep = G.product[:, cols].min(axis=1)
    reps = np.unique(rep)
    qindex = np.full(G.order, -1, dtype=_DTYPE)
    qindex[reps] = np.arange(len(reps))
    qtable = qindex[rep[G.product[np.ix_(reps, reps)]]]
    Q = FiniteGroup(qtable, label=f"{G.label}/{N.order}", validate=False)
    proj = GroupHom(G, Q, qindex[rep], check=False)
    return Q, proj


def subgroup_quotient(P: Subgroup, K: Subgroup) -> tuple[FiniteGroup, np.ndarray]:
    """P/K for K normal in P, plus the parent-index to coset-index map.

    The returned array has one entry per element of the ambient group,
    -1 outside P.
    """
    if K.parent is not P.parent:
        raise ValueError("subgroups of different parents")
    if not K.is_subset_of(P):
        raise ValueError("kernel must sit inside the projection")
    Pg, embed = P.as_group()
    pos = np.full(P.parent.order, -1, dtype=_DTYPE)
    pos[np.array(P.elements)] = np.arange(P.order)
    K_local = Subgroup(Pg, pos[np.array(K.elements)], check=False)
    Q, proj = quotient_group(Pg, K_local)
    to_q = np.full(P.parent.order, -1, dtype=_DTYPE)
    to_q[np.array(P.elements)] = proj.image
    return Q, to_q


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def prime_factors(n: int) -> tuple:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return tuple(out)


def p_part(n: int, primes: Iterable[int]) -> int:
    """Largest divisor of n whose prime factors all lie in `primes`."""
    if n <= 0:
        raise ValueError("n must be positive")
    r = 1
    for p in sorted(set(primes)):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        while n % p == 0:
            n //= p
            r *= p
    return r


def sylow_subgroup(G: FiniteGroup, p: int) -> Subgroup:
    """First Sylow p-subgroup found by growing along index order."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    target = p_part(G.order, (p,))
    P = G.trivial()
    orders = G.element_orders()
    while P.order < target:
        arr = np.array(P.elements)
        grown = None
        for x in range(G.order):
            if x in P:
                continue
            o = int(orders[x])
            if p_part(o, (p,)) != o:
                continue
            conj = G.product[G.product[G.inverse[x], arr], x]
            if _mask_of(conj) != P.mask:
                continue
            grown = subgroup_generated(G, (*P.elements, x))
            break
        if grown is None:
            raise InternalInconsistency("Sylow growth stalled below the p-part")
        P = grown
    if p_part(P.order, (p,)) != P.order:
        raise InternalInconsistency("Sylow candidate is not a p-group")
    return P


def is_cyclic(obj: Union[FiniteGroup, Subgroup]) -> bool:
    if isinstance(obj, Subgroup):
        orders = obj.parent.element_orders()
        return any(int(orders[e]) == obj.order for e in obj.elements)
    return int(obj.element_orders().max()) == obj.order


# -- abelian invariants ------------------------------------------------------


@dataclass(frozen=True)
class AbelianInvariants:
    """Divisor chain d1 | d2 | ... | dk of a finite abelian group."""

    divisors: tuple

    def __post_init__(self):
        prev = 1
        for d in self.divisors:
            if d < 2 or d % prev:
                raise ValueError(f"not a divisor chain: {self.divisors}")
            prev = d

    @property
    def order(self) -> int:
        return math.prod(self.divisors)

    def describe(self) -> str:
        return " x ".join(f"C{d}" for d in self.divisors) or "1"


def abelian_invariants(G: FiniteGroup) -> AbelianInvariants:
    """Divisor chain of an abelian group by maximal-order extraction."""
    if not G.is_abelian:
        raise ValueError("divisor chain is only defined for abelian groups")
    chain = []
    cur = G
    while cur.order > 1:
        orders = cur.element_orders()
        x = int(np.argmax(orders))
        chain.append(int(orders[x]))
        cyc = subgroup_generated(cur, (x,))
        cur, _ = quotient_group(cur, cyc)
    return AbelianInvariants(tuple(reversed(chain)))


def abelianization(G: FiniteGroup) -> tuple[AbelianInvariants, "GroupHom"]:
    """Invariants of G/G' plus the projection onto that quotient."""
    cached = G._cache.get("abelianization")
    if cached is None:
        Q, proj = quotient_group(G, commutator_subgroup(G))
        cached = (abelian_invariants(Q), proj)
        G._cache["abelianization"] = cached
    return cached


# -- homomorphisms -----------------------------------------------------------


class GroupHom:
    """A homomorphism stored as the full image table."""

    __slots__ = ("domain", "codomain", "image")

    def __init__(self, domain: FiniteGroup, codomain: FiniteGroup,
                 image: np.ndarray, *, check: bool = True):
        arr = np.ascontiguousarray(np.asarray(image, dtype=_DTYPE))
        if arr.shape != (domain.order,):
            raise ValueError("image table has the wrong length")
        self.domain = domain
        self.codomain = codomain
        arr.setflags(write=False)
        self.image = arr
        if check:
            if arr.min() < 0 or arr.max() >= codomain.order:
                raise ValueError("image table out of range")
            if arr[0] != 0:
                raise ValueError("identity must map to identity")
            lhs = arr[domain.product]
            rhs = codomain.product[arr[:, None], arr[None, :]]
            if not (lhs == rhs).all():
                a, b = (int(x) for x in np.argwhere(lhs != rhs)[0])
                raise ValueError(f"not a homomorphism at pair ({a}, {b})")

    def __call__(self, a: int) -> int:
        return int(self.image[a])

    def __eq__(self, other) -> bool:
        return (isinstance(other, GroupHom) and other.domain is self.domain
                and other.codomain is self.codomain
                and bool((other.image == self.image).all()))

    def __hash__(self) -> int:
        return hash((id(self.domain), id(self.codomain), self.image.tobytes()))

    def __repr__(self) -> str:
        return (f"GroupHom({self.domain.label} -> {self.codomain.label}, "
                f"{list(int(x) for x in self.image)})")

    def compose(self, other: "GroupHom") -> "GroupHom":
        """self after other."""
        if other.codomain is not self.domain:
            raise ValueError("composition factors do not line up")
        return GroupHom(other.domain, self.codomain,
                        self.image[other.image], check=False)

    @property
    def is_bijective(self) -> bool:
        return len(np.unique(self.image)) == self.domain.order == self.codomain.order

    @property
    def is_identity(self) -> bool:
        return (self.domain is self.codomain
                and bool((self.image == np.arange(self.domain.order)).all()))

    def inverted(self) -> "GroupHom":
        if not self.is_bijective:
            raise ValueError("only bijections can be inverted")
        inv = np.empty(self.domain.order, dtype=_DTYPE)
        inv[self.image] = np.arange(self.domain.order)
        return GroupHom(self.codomain, self.domain, inv, check=False)

    def kernel(self) -> Subgroup:
        return Subgroup(self.domain, np.flatnonzero(self.image == 0), check=False)

    def image_subgroup(self) -> Subgroup:
        return Subgroup(self.codomain, np.unique(self.image), check=False)

    def map_subgroup(self, sub: Subgroup) -> Subgroup:
        if sub.parent is not self.domain:
            raise ValueError("subgroup of a different parent")
        return Subgroup(self.codomain, np.unique(self.image[np.array(sub.elements)]),
                        check=False)

    def preimage_subgroup(self, sub: Subgroup) -> Subgroup:
        if sub.parent is not self.codomain:
            raise ValueError("subgroup of a different parent")
        hit = np.isin(self.image, np.array(sub.elements))
        return Subgroup(self.domain, np.flatnonzero(hit), check=False)


def identity_hom(G: FiniteGroup) -> GroupHom:
    return GroupHom(G, G, np.arange(G.order), check=False)


# -- conjugacy data ----------------------------------------------------------


def conjugacy_class_sizes(G: FiniteGroup) -> np.ndarray:
    sizes = G._cache.get("class_sizes")
    if sizes is None:
        n = G.order
        sizes = np.zeros(n, dtype=np.int64)
        seen = np.zeros(n, dtype=bool)
        allg = np.arange(n)
        for x in range(n):
            if seen[x]:
                continue
            orbit = np.unique(G.product[G.product[G.inverse, x], allg])
            sizes[orbit] = orbit.size
            seen[orbit] = True
        sizes.setflags(write=False)
        G._cache["class_sizes"] = sizes
    return sizes


def _element_profile(G: FiniteGroup) -> list:
    prof = G._cache.get("profile")
    if prof is None:
        orders = G.element_orders()
        sizes = conjugacy_class_sizes(G)
        prof = [(int(orders[x]), int(sizes[x])) for x in range(G.order)]
        G._cache["profile"] = prof
    return prof


# -- isomorphism search ------------------------------------------------------


def isomorphisms_iter(G1: FiniteGroup, G2: FiniteGroup, *,
                      max_order: int = DEFAULT_ISO_CAP) -> Iterator[GroupHom]:
    """All isomorphisms G1 -> G2 by pruned generator-image backtracking.

    Deterministic: generators are the greedy sequence of G1 and image
    candidates are tried in ascending index order.
    """
    if G1.order != G2.order:
        return
    if sorted(_element_profile(G1)) != sorted(_element_profile(G2)):
        return
    if G1.order > max_order:
        raise OrderLimitExceeded(
            f"isomorphism search above cap {max_order} (order {G1.order})")
    gens = generating_sequence(G1)
    prof1 = _element_profile(G1)
    prof2 = _element_profile(G2)
    n = G1.order
    t1, t2 = G1.product, G2.product

    def propagate(mapping, used, support, new):
        """Extend by products; returns the grown support or None."""
        processed = []
        frontier = list(support) + [new]
        mapping_local = mapping
        while frontier:
            a = frontier.pop(0)
            for b in processed + [a]:
                for x, y in ((a, b), (b, a)):
                    c = int(t1[x, y])
                    img = int(t2[mapping_local[x], mapping_local[y]])
                    if mapping_local[c] == -1:
                        if used[img] != -1:
                            return None
                        mapping_local[c] = img
                        used[img] = c
                        frontier.append(c)
                    elif mapping_local[c] != img:
                        return None
            processed.append(a)
        return processed

    def rec(j, mapping, used, support):
        if j == len(gens):
            hom = GroupHom(G1, G2, mapping, check=False)
            # cheap final guard; propagation already enforced the table
            if len(np.unique(hom.image)) == n:
                yield hom
            return
        g = gens[j]
        for y in range(n):
            if prof2[y] != prof1[g] or used[y] != -1:
                continue
            m2 = mapping.copy()
            u2 = used.copy()
            m2[g] = y
            u2[y] = g
            grown = propagate(m2, u2, support, g)
            if grown is None:
                continue
            yield from rec(j + 1, m2, u2, grown)

    mapping0 = np.full(n, -1, dtype=np.int64)
    used0 = np.full(n, -1, dtype=np.int64)
    mapping0[0] = 0
    used0[0] = 0
    yield from rec(0, mapping0, used0, [0])


def find_isomorphism(G1: FiniteGroup, G2: FiniteGroup, *,
                     max_order: int = DEFAULT_ISO_CAP) -> Optional[GroupHom]:
    return next(isomorphisms_iter(G1, G2, max_order=max_order), None)


def is_isomorphic(G1: FiniteGroup, G2: FiniteGroup, *,
                  max_order: int = DEFAULT_ISO_CAP) -> bool:
    return find_isomorphism(G1, G2, max_order=max_order) is not None


def automorphisms(G: FiniteGroup, *, max_order: int = DEFAULT_ISO_CAP) -> list:
    """All automorphisms, identity first, then discovery order."""
    auts = G._cache.get("automorphisms")
    if auts is None:
        found = list(isomorphisms_iter(G, G, max_order=max_order))
        ident = [a for a in found if a.is_identity]
        if len(ident) != 1:
            raise InternalInconsistency("automorphism scan missed the identity")
        auts = ident + [a for a in found if not a.is_identity]
        G._cache["automorphisms"] = auts
    return auts


# -- subgroup lattice --------------------------------------------------------


def all_subgroups(G: FiniteGroup, *,
                  max_order: int = DEFAULT_LATTICE_CAP) -> list:
    """Every subgroup, by closing joins of cyclic subgroups.

    Kept as the exhaustive cross-check for the targeted constructions;
    capped because the lattice grows quickly.
    """
    subs = G._cache.get("lattice")
    if subs is None:
        if G.order > max_order:
            raise OrderLimitExceeded(
                f"subgroup scan above cap {max_order} (order {G.order})")
        cyclics = {}
        for x in range(G.order):
            sub = subgroup_generated(G, (x,))
            cyclics.setdefault(sub.mask, sub)
        cyclics = [cyclics[m] for m in sorted(cyclics)]
        found = {G.trivial().mask: G.trivial()}
        for c in cyclics:
            found.setdefault(c.mask, c)
        queue = sorted(found.values(), key=lambda s: (s.order, s.elements))
        join_memo: dict = {}
        i = 0
        while i < len(queue):
            current = queue[i]
            i += 1
            for c in cyclics:
                if c.mask | current.mask == current.mask:
                    continue
                key = c.mask | current.mask
                joined = join_memo.get(key)
                if joined is None:
                    joined = subgroup_generated(G, current.elements + c.elements)
                    join_memo[key] = joined
                if joined.mask not in found:
                    found[joined.mask] = joined
                    queue.append(joined)
        subs = sorted(found.values(), key=lambda s: (s.order, s.elements))
        G._cache["lattice"] = subs
    return subs


def normal_subgroups(G: FiniteGroup, *,
                     max_order: int = DEFAULT_LATTICE_CAP) -> list:
    subs = G._cache.get("normals")
    if subs is None:
        subs = [s for s in all_subgroups(G, max_order=max_order) if is_normal(s)]
        G._cache["normals"] = subs
    return subs
