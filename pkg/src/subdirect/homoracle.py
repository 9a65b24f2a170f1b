"""Enumeration of homomorphisms into cyclic groups, and the restriction map.

This is the ground-truth side of the package: extensibility verdicts
from the kernel criterion are cross-checked against literal counting of
homomorphisms.  Coefficients are cyclic C_m written additively; a prime
p is decided with m = p ** v_p(exponent), which carries the same
information as any larger p-power coefficient.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Optional, Union

import numpy as np

from .errors import InternalInconsistency, NotSubdirect, OrderLimitExceeded
from .groups import (
    FiniteGroup,
    Subgroup,
    abelianization,
    generating_sequence,
    p_part,
)
from .products import product_of, projections_kernels

RAW_SEARCH_LIMIT = 1 << 22


@dataclass(frozen=True)
class CyclicCoefficient:
    """The coefficient group C_m, written additively."""

    modulus: int

    def __post_init__(self):
        if self.modulus < 1:
            raise ValueError("modulus must be positive")


class CyclicHom:
    """A homomorphism into C_m stored as a residue per element."""

    __slots__ = ("domain", "modulus", "values")

    def __init__(self, domain: FiniteGroup, modulus: int, values, *,
                 check: bool = True):
        arr = np.ascontiguousarray(np.asarray(values, dtype=np.int64)) % modulus
        if arr.shape != (domain.order,):
            raise ValueError("value table has the wrong length")
        arr.setflags(write=False)
        self.domain = domain
        self.modulus = modulus
        self.values = arr
        if check:
            if arr[0] != 0:
                raise ValueError("identity must map to 0")
            lhs = arr[domain.product]
            rhs = (arr[:, None] + arr[None, :]) % modulus
            if not (lhs == rhs).all():
                a, b = (int(x) for x in np.argwhere(lhs != rhs)[0])
                raise ValueError(f"not a homomorphism at pair ({a}, {b})")

    def key(self) -> tuple:
        return tuple(int(v) for v in self.values)

    @property
    def is_zero(self) -> bool:
        return not self.values.any()

    def __eq__(self, other) -> bool:
        return (isinstance(other, CyclicHom) and other.domain is self.domain
                and other.modulus == self.modulus
                and bool((other.values == self.values).all()))

    def __hash__(self) -> int:
        return hash((id(self.domain), self.modulus, self.values.tobytes()))

    def __repr__(self) -> str:
        return f"CyclicHom({self.domain.label} -> C{self.modulus}, {self.key()})"


def _as_plain_group(K: Union[FiniteGroup, Subgroup]) -> FiniteGroup:
    if isinstance(K, Subgroup):
        return K.as_group()[0]
    return K


def _abelian_value_tables(A: FiniteGroup, m: int) -> list:
    """All hom value tables A -> C_m for abelian A, exact and deterministic.

    Works generator by generator: if g has relative order t over the part
    built so far, its value v must solve t*v = value(g**t) mod m, a linear
    congruence with gcd(t, m) solutions (or none).  Every full table is
    produced exactly once.
    """
    n = A.order
    if m == 1 or n == 1:
        return [np.zeros(n, dtype=np.int64)]
    gens = generating_sequence(A)
    # precompute, per generator, its relative order, closing power and
    # the index arrays for the new coset layers
    schedule = []
    current = np.array([0], dtype=np.int64)
    have = {0}
    for g in gens:
        powers = []
        e = int(g)
        while e not in have:
            powers.append(e)
            e = int(A.product[e, g])
        t0 = len(powers) + 1
        closing = e  # g ** t0, already valued
        layers = []
        for t in range(1, t0):
            layers.append((A.product[current, powers[t - 1]], current.copy(), t))
        schedule.append((t0, closing, layers))
        grown = [current] + [lay[0] for lay in layers]
        current = np.sort(np.concatenate(grown))
        have = set(int(x) for x in current)

    results: list = []

    def rec(j: int, vals: np.ndarray) -> None:
        if j == len(schedule):
            results.append(vals)
            return
        t0, closing, layers = schedule[j]
        target = int(vals[closing])
        d = math.gcd(t0, m)
        if target % d:
            return
        step = m // d
        v0 = (target // d) * pow(t0 // d, -1, step) % step
        for k in range(d):
            v = v0 + k * step
            grown = vals.copy()
            for targets, sources, t in layers:
                grown[targets] = (vals[sources] + t * v) % m
            rec(j + 1, grown)

    start = np.full(n, -1, dtype=np.int64)
    start[0] = 0
    rec(0, start)
    return sorted(results, key=lambda a: tuple(a))


def enumerate_homs(K: Union[FiniteGroup, Subgroup], m: int) -> list:
    """All homomorphisms K -> C_m, sorted by value table.

    Enumerated by factoring through the abelianization, which loses
    nothing because the target is abelian.
    """
    grp = _as_plain_group(K)
    cache_key = ("cyclic_homs", m)
    homs = grp._cache.get(cache_key)
    if homs is None:
        if m == 1:
            homs = [CyclicHom(grp, 1, np.zeros(grp.order, dtype=np.int64),
                              check=False)]
        else:
            _, proj = abelianization(grp)
            tables = _abelian_value_tables(proj.codomain, m)
            homs = [CyclicHom(grp, m, t[proj.image], check=False)
                    for t in tables]
            homs.sort(key=lambda h: h.key())
        grp._cache[cache_key] = homs
    return homs


def hom_count_formula(divisors, m: int) -> int:
    """Expected |Hom| from a divisor chain: product of gcd(d, m)."""
    return math.prod(math.gcd(int(d), m) for d in divisors)


def raw_enumerate_homs(K: Union[FiniteGroup, Subgroup], m: int, *,
                       limit: int = RAW_SEARCH_LIMIT) -> list:
    """All homomorphisms by brute value-table search.

    Exponential in the group order; only usable for small inputs, and
    kept as a second, structure-free route to the same set.
    """
    grp = _as_plain_group(K)
    n = grp.order
    total = m ** (n - 1) if n > 1 else 1
    if total > limit:
        raise OrderLimitExceeded(f"{m}**{n - 1} value tables exceed {limit}")
    out = []
    for tail in itertools.product(range(m), repeat=n - 1):
        vals = np.array((0, *tail), dtype=np.int64)
        if (vals[grp.product] == (vals[:, None] + vals[None, :]) % m).all():
            out.append(CyclicHom(grp, m, vals, check=False))
    return out


# -- restriction to a product subgroup ----------------------------------------


def restriction_map(big: CyclicHom, U: Subgroup) -> CyclicHom:
    """Restrict a hom on the ambient group to U, reindexed to U's group."""
    if big.domain is not U.parent:
        raise ValueError("hom is not defined on the subgroup's parent")
    sub_grp, _ = U.as_group()
    vals = big.values[np.array(U.elements)]
    return CyclicHom(sub_grp, big.modulus, vals, check=False)


def _hom_value_matrix(G: FiniteGroup, m: int) -> np.ndarray:
    homs = enumerate_homs(G, m)
    return np.stack([h.values for h in homs])


def restriction_kernel_image_sizes(U: Subgroup, m: int) -> tuple[int, int]:
    """Kernel and image size of restriction Hom(G x H, C_m) -> Hom(U, C_m).

    Every hom on the product splits as a hom on G plus a hom on H, so the
    domain is walked as all such sums.
    """
    if not _subdirect(U):
        raise NotSubdirect("restriction bookkeeping expects a subdirect U")
    info = product_of(U)
    arr = np.array(U.elements)
    gs, hs = np.divmod(arr, info.right.order)
    vg = _hom_value_matrix(info.left, m)[:, gs]
    vh = _hom_value_matrix(info.right, m)[:, hs]
    stacked = (vg[:, None, :] + vh[None, :, :]) % m
    flat = stacked.reshape(-1, arr.size)
    kernel = int((flat == 0).all(axis=1).sum())
    image = int(np.unique(flat, axis=0).shape[0])
    if kernel * image != flat.shape[0]:
        raise InternalInconsistency("fiber count does not match the coset count")
    return kernel, image


def restriction_fiber_counts(U: Subgroup, m: int) -> tuple:
    """Multiplicity of each distinct restricted hom, sorted ascending.

    All counts equal the kernel size: fibers of a group homomorphism of
    hom-groups are cosets.
    """
    if not _subdirect(U):
        raise NotSubdirect("restriction bookkeeping expects a subdirect U")
    info = product_of(U)
    arr = np.array(U.elements)
    gs, hs = np.divmod(arr, info.right.order)
    vg = _hom_value_matrix(info.left, m)[:, gs]
    vh = _hom_value_matrix(info.right, m)[:, hs]
    stacked = (vg[:, None, :] + vh[None, :, :]) % m
    flat = stacked.reshape(-1, arr.size)
    _, counts = np.unique(flat, axis=0, return_counts=True)
    return tuple(sorted(int(c) for c in counts))


def _subdirect(U: Subgroup) -> bool:
    d = projections_kernels(U)
    return d.p1.is_whole and d.p2.is_whole


def coefficient_modulus(U: Subgroup, p: int) -> int:
    """p ** v_p(exponent of G x H), the coefficient that decides p."""
    info = product_of(U)
    exponent = math.lcm(info.left.exponent(), info.right.exponent())
    return p_part(exponent, (p,))


def oracle_is_extensible_for_modulus(U: Subgroup, m: int) -> bool:
    """Do all homs U -> C_m extend to the ambient product?"""
    if not _subdirect(U):
        raise NotSubdirect("oracle expects a subdirect subgroup")
    if m == 1:
        return True
    _, image = restriction_kernel_image_sizes(U, m)
    return image == len(enumerate_homs(U, m))


def oracle_is_p_extensible(U: Subgroup, p: int) -> bool:
    """Do all homs U -> C_m extend, for the decisive modulus m?

    True exactly when the restriction image is all of Hom(U, C_m).
    """
    return oracle_is_extensible_for_modulus(U, coefficient_modulus(U, p))


def raw_oracle_is_p_extensible(U: Subgroup, p: int, *,
                               limit: int = RAW_SEARCH_LIMIT) -> bool:
    """Same verdict as oracle_is_p_extensible via literal value-table search.

    Every hom list involved is produced by raw_enumerate_homs, so this
    path shares no code with the abelianization-based enumerator.  Only
    feasible for very small groups; the cap is an error, not a cutoff.
    """
    if not _subdirect(U):
        raise NotSubdirect("oracle expects a subdirect subgroup")
    m = coefficient_modulus(U, p)
    if m == 1:
        return True
    info = product_of(U)
    sub_grp, _ = U.as_group()
    target = raw_enumerate_homs(sub_grp, m, limit=limit)
    left = raw_enumerate_homs(info.left, m, limit=limit)
    right = raw_enumerate_homs(info.right, m, limit=limit)
    arr = np.array(U.elements)
    gs, hs = np.divmod(arr, info.right.order)
    restricted = {
        tuple(((hl.values[gs] + hr.values[hs]) % m).tolist())
        for hl in left for hr in right
    }
    return len(restricted) == len(target)


def extend_hom(phi: CyclicHom, U: Subgroup) -> Optional[CyclicHom]:
    """First hom on the ambient product restricting to phi, if any.

    The search order is the sorted hom lists of the two factors, left
    factor outermost, so witnesses are deterministic.
    """
    info = product_of(U)
    sub_grp, _ = U.as_group()
    if phi.domain is not sub_grp:
        raise ValueError("phi must live on the subgroup's materialised group")
    m = phi.modulus
    arr = np.array(U.elements)
    gs, hs = np.divmod(arr, info.right.order)
    homs_left = enumerate_homs(info.left, m)
    homs_right = enumerate_homs(info.right, m)
    for hl in homs_left:
        partial = hl.values[gs]
        for hr in homs_right:
            if (((partial + hr.values[hs]) - phi.values) % m).any():
                continue
            n = info.group.order
            gi, hi = np.divmod(np.arange(n), info.right.order)
            vals = (hl.values[gi] + hr.values[hi]) % m
            return CyclicHom(info.group, m, vals, check=False)
    return None
