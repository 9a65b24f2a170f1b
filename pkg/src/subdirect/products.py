"""Direct products, Goursat data and the composition of product subgroups.

A subgroup U of G x H is stored as a plain :class:`Subgroup` of the
product group; the pair (g, h) lives at index g * |H| + h.  The product
group keeps a back reference to its factors so that projections and
kernels can be recovered from U alone.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .errors import (
    FactorMismatch,
    InvalidQuintuple,
    NotAutomorphism,
    NotNormal,
    OrderLimitExceeded,
)
from .groups import (
    FiniteGroup,
    GroupHom,
    Subgroup,
    all_subgroups,
    automorphisms,
    is_isomorphic,
    isomorphisms_iter,
    normal_subgroups,
    quotient_group,
    subgroup_quotient,
)

DEFAULT_PRODUCT_CAP = 1296


@dataclass(frozen=True)
class ProductGroup:
    """A direct product together with its factor bookkeeping."""

    left: FiniteGroup
    right: FiniteGroup
    group: FiniteGroup

    def encode(self, g: int, h: int) -> int:
        return g * self.right.order + h

    def decode(self, x: int) -> tuple[int, int]:
        return divmod(int(x), self.right.order)

    def pairs(self, elements: Sequence[int]) -> list:
        n = self.right.order
        return [divmod(int(x), n) for x in elements]


_product_cache: dict = {}


def direct_product(G: FiniteGroup, H: FiniteGroup, *,
                   max_order: int = DEFAULT_PRODUCT_CAP) -> ProductGroup:
    """G x H; cached per factor pair so repeated calls share one object."""
    n = G.order * H.order
    if n > max_order:
        raise OrderLimitExceeded(f"product order {n} above cap {max_order}")
    key = (id(G), id(H))
    cached = _product_cache.get(key)
    if cached is not None:
        return cached
    hn = H.order
    gi, hi = np.divmod(np.arange(n), hn)
    left = G.product[gi[:, None], gi[None, :]]
    right = H.product[hi[:, None], hi[None, :]]
    table = left.astype(np.int64) * hn + right
    group = FiniteGroup(table, label=f"{G.label}x{H.label}", validate=False)
    product = ProductGroup(G, H, group)
    group.product_info = product
    _product_cache[key] = product
    return product


def product_of(U: Subgroup) -> ProductGroup:
    info = U.parent.product_info
    if info is None:
        raise ValueError("subgroup does not live in a direct product")
    return info


@dataclass(frozen=True)
class ProjectionData:
    """Projections and kernels of a product subgroup, both sides."""

    p1: Subgroup
    k1: Subgroup
    p2: Subgroup
    k2: Subgroup


def projections_kernels(U: Subgroup) -> ProjectionData:
    data = U._cache.get("projections")
    if data is None:
        info = product_of(U)
        arr = np.array(U.elements)
        gs, hs = np.divmod(arr, info.right.order)
        p1 = Subgroup(info.left, np.unique(gs), check=False)
        p2 = Subgroup(info.right, np.unique(hs), check=False)
        k1 = Subgroup(info.left, gs[hs == 0], check=False)
        k2 = Subgroup(info.right, hs[gs == 0], check=False)
        data = ProjectionData(p1, k1, p2, k2)
        U._cache["projections"] = data
    return data


def is_subdirect(U: Subgroup) -> bool:
    d = projections_kernels(U)
    return d.p1.is_whole and d.p2.is_whole


# -- Goursat data -------------------------------------------------------------


@dataclass(frozen=True)
class GoursatQuintuple:
    """The five-piece description of a product subgroup.

    ``to_q1``/``to_q2`` map factor element indices to coset indices of
    p1/k1 and p2/k2 (-1 outside the projection), and ``phi`` is the
    induced isomorphism between those quotients.
    """

    p1: Subgroup
    k1: Subgroup
    k2: Subgroup
    p2: Subgroup
    q1: FiniteGroup
    q2: FiniteGroup
    to_q1: np.ndarray
    to_q2: np.ndarray
    phi: GroupHom


def goursat_quintuple(U: Subgroup) -> GoursatQuintuple:
    quint = U._cache.get("quintuple")
    if quint is None:
        info = product_of(U)
        d = projections_kernels(U)
        q1, to_q1 = subgroup_quotient(d.p1, d.k1)
        q2, to_q2 = subgroup_quotient(d.p2, d.k2)
        arr = np.array(U.elements)
        gs, hs = np.divmod(arr, info.right.order)
        image = np.full(q1.order, -1, dtype=np.int64)
        image[to_q1[gs]] = to_q2[hs]
        try:
            phi = GroupHom(q1, q2, image, check=True)
        except ValueError as exc:  # pragma: no cover - guarded by group laws
            raise InvalidQuintuple(str(exc)) from exc
        if not phi.is_bijective:
            raise InvalidQuintuple("induced quotient map is not bijective")
        quint = GoursatQuintuple(d.p1, d.k1, d.k2, d.p2, q1, q2,
                                 to_q1, to_q2, phi)
        U._cache["quintuple"] = quint
    return quint


def goursat_quotient(U: Subgroup) -> FiniteGroup:
    """p1(U) / k1(U), the section common to both sides."""
    return goursat_quintuple(U).q1


def make_quintuple(p1: Subgroup, k1: Subgroup, p2: Subgroup, k2: Subgroup,
                   phi_pairs: Sequence[tuple[int, int]]) -> GoursatQuintuple:
    """Build and validate Goursat data from raw subgroups and coset pairs.

    ``phi_pairs`` lists pairs (g, h) of factor elements meaning that the
    coset g*k1 maps to h*k2; every coset of k1 in p1 must be covered.
    """
    if not (k1.is_subset_of(p1) and k2.is_subset_of(p2)):
        raise InvalidQuintuple("kernels must sit inside the projections")
    try:
        q1, to_q1 = subgroup_quotient(p1, k1)
        q2, to_q2 = subgroup_quotient(p2, k2)
    except NotNormal as exc:
        raise InvalidQuintuple(str(exc)) from exc
    if q1.order != q2.order:
        raise InvalidQuintuple("quotients have different orders")
    image = np.full(q1.order, -1, dtype=np.int64)
    for g, h in phi_pairs:
        if not (0 <= g < p1.parent.order and g in p1):
            raise InvalidQuintuple(f"{g} is not in the left projection")
        if not (0 <= h < p2.parent.order and h in p2):
            raise InvalidQuintuple(f"{h} is not in the right projection")
        a, b = int(to_q1[g]), int(to_q2[h])
        if image[a] not in (-1, b):
            raise InvalidQuintuple("coset map is ill defined")
        image[a] = b
    if (image == -1).any():
        raise InvalidQuintuple("coset map does not cover every coset")
    try:
        phi = GroupHom(q1, q2, image, check=True)
    except ValueError as exc:
        raise InvalidQuintuple(str(exc)) from exc
    if not phi.is_bijective:
        raise InvalidQuintuple("coset map is not bijective")
    return GoursatQuintuple(p1, k1, k2, p2, q1, q2, to_q1, to_q2, phi)


def subgroup_from_quintuple(quint: GoursatQuintuple) -> Subgroup:
    """The subgroup {(g, h) : phi(g k1) = h k2} of the factor product."""
    G = quint.p1.parent
    H = quint.p2.parent
    info = direct_product(G, H)
    gs = np.array(quint.p1.elements)
    hs = np.array(quint.p2.elements)
    want = quint.phi.image[quint.to_q1[gs]]
    match = want[:, None] == quint.to_q2[hs][None, :]
    coded = gs[:, None] * H.order + hs[None, :]
    elements = coded[match]
    U = Subgroup(info.group, elements, check=False)
    if U.order != quint.p1.order * quint.k2.order:
        raise InvalidQuintuple("order bookkeeping failed")
    return U


# -- enumeration ---------------------------------------------------------------


def enumerate_subdirect(G: FiniteGroup, H: FiniteGroup, *,
                        max_order: int = DEFAULT_PRODUCT_CAP) -> list:
    """All subgroups of G x H with both projections surjective.

    Walks pairs of normal subgroups with isomorphic quotients and all
    isomorphisms between the quotients; results are sorted by element
    tuple.  Duplicates cannot arise but are filtered anyway.
    """
    if G.order * H.order > max_order:
        raise OrderLimitExceeded(
            f"product order {G.order * H.order} above cap {max_order}")
    info = direct_product(G, H)
    out: dict = {}
    quots_G = [(K, *quotient_group(G, K)) for K in normal_subgroups(G)]
    quots_H = [(L, *quotient_group(H, L)) for L in normal_subgroups(H)]
    for K, QG, projG in quots_G:
        for L, QH, projH in quots_H:
            if G.order * L.order != H.order * K.order:
                continue
            for iso in isomorphisms_iter(QG, QH, max_order=max(QG.order, 1)):
                match = iso.image[projG.image][:, None] == projH.image[None, :]
                elements = np.flatnonzero(match.ravel())
                U = Subgroup(info.group, elements, check=False)
                out.setdefault(U.mask, U)
    return sorted(out.values(), key=lambda s: s.elements)


def subdirect_by_scan(G: FiniteGroup, H: FiniteGroup, *,
                      max_order: int = 144) -> list:
    """Subdirect subgroups by filtering the full lattice of G x H.

    Exhaustive and slow; kept as the independent cross-check for
    :func:`enumerate_subdirect`.
    """
    info = direct_product(G, H)
    subs = all_subgroups(info.group, max_order=max_order)
    return [U for U in subs if is_subdirect(U)]


# -- composition ---------------------------------------------------------------


def star_product(U: Subgroup, V: Subgroup) -> Subgroup:
    """Relation composition of U <= F x G and V <= G x H inside F x H."""
    PU = product_of(U)
    PV = product_of(V)
    if PU.right is not PV.left:
        raise FactorMismatch(
            f"middle factors differ: {PU.right.label} vs {PV.left.label}")
    mid = PU.right.order
    by_mid_left: dict = {}
    for x in U.elements:
        u, a = divmod(x, mid)
        by_mid_left.setdefault(a, []).append(u)
    hn = PV.right.order
    by_mid_right: dict = {}
    for y in V.elements:
        a, w = divmod(y, hn)
        by_mid_right.setdefault(a, []).append(w)
    info = direct_product(PU.left, PV.right)
    elements = set()
    for a, us in by_mid_left.items():
        ws = by_mid_right.get(a)
        if not ws:
            continue
        for u in us:
            base = u * hn
            for w in ws:
                elements.add(base + w)
    return Subgroup(info.group, elements, check=True)


def twisted_diagonal(G: FiniteGroup, phi: GroupHom) -> Subgroup:
    """{(g, phi(g))} inside G x G."""
    if phi.domain is not G or phi.codomain is not G or not phi.is_bijective:
        raise NotAutomorphism("twist must be an automorphism of G")
    info = direct_product(G, G)
    coded = np.arange(G.order, dtype=np.int64) * G.order + phi.image
    return Subgroup(info.group, coded, check=False)


def diagonal(G: FiniteGroup) -> Subgroup:
    from .groups import identity_hom

    return twisted_diagonal(G, identity_hom(G))


def contains_twisted_diagonal(U: Subgroup) -> Optional[GroupHom]:
    """First automorphism phi (identity first) with (g, phi(g)) all in U."""
    info = product_of(U)
    if info.left is not info.right:
        raise ValueError("both factors must be the same group")
    G = info.left
    masks = G._cache.get("diagonal_masks")
    if masks is None:
        masks = []
        for phi in automorphisms(G):
            coded = np.arange(G.order, dtype=np.int64) * G.order + phi.image
            m = 0
            for c in coded:
                m |= 1 << int(c)
            masks.append((phi, m))
        G._cache["diagonal_masks"] = masks
    for phi, m in masks:
        if m | U.mask == U.mask:
            return phi
    return None


# -- sections ------------------------------------------------------------------


def is_section(Q: FiniteGroup, G: FiniteGroup, *,
               max_order: int = 256) -> bool:
    """Is Q isomorphic to a quotient of a subgroup of G?

    Brute force over the subgroup lattice and each subgroup's normal
    subgroups of the right index.
    """
    if Q.order == 1:
        return True
    if G.order % Q.order:
        return False
    for S in all_subgroups(G, max_order=max_order):
        if S.order % Q.order:
            continue
        Sg, _ = S.as_group()
        for N in normal_subgroups(Sg):
            if N.order * Q.order != Sg.order:
                continue
            quot, _ = quotient_group(Sg, N)
            if is_isomorphic(quot, Q, max_order=max(Q.order, 1)):
                return True
    return False


# -- certificates --------------------------------------------------------------


@dataclass(frozen=True)
class SubdirectCertificate:
    """Outcome of checking a product subgroup's projections."""

    subgroup: Subgroup
    is_subdirect: bool
    diagonal_witness: Optional[GroupHom]


def certify(U: Subgroup) -> SubdirectCertificate:
    info = product_of(U)
    witness = None
    if info.left is info.right:
        witness = contains_twisted_diagonal(U)
    return SubdirectCertificate(U, is_subdirect(U), witness)
