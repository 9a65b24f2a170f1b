"""Deciding whether homomorphisms on a subdirect product extend.

For a subdirect U <= G x H and a coefficient group whose n-torsion is
cyclic of order n restricted to a prime set, extension of every hom on
U comes down to a kernel condition: the derived kernel k1([U,U]) must
exhaust G' intersected with k1(U), prime by prime.  The functions here
compute that condition, the cheaper sufficient tests around it, and the
behaviour of all of them under relation composition of subgroups.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .errors import (
    InternalInconsistency,
    NoDiagonal,
    NotNormal,
    NotSubdirect,
    PreconditionFailed,
)
from .groups import (
    AbelianInvariants,
    FiniteGroup,
    Subgroup,
    abelian_invariants,
    center,
    commutator_subgroup,
    is_cyclic,
    is_normal,
    mutual_commutator,
    p_part,
    prime_factors,
    set_product,
    subgroup_quotient,
    sylow_subgroup,
)
from .products import (
    SubdirectCertificate,
    certify,
    contains_twisted_diagonal,
    diagonal,
    goursat_quotient,
    is_subdirect,
    product_of,
    projections_kernels,
    star_product,
)

METHOD_EXACT = "exact-criterion"
METHOD_CYCLIC_SYLOW = "cyclic-sylow"
METHOD_CENTRAL = "central-shortcut"
METHOD_ORACLE = "oracle"


@dataclass(frozen=True)
class KernelCommutatorData:
    """Kernels of U and of [U, U], with the bracketing subgroups.

    The containment chain [k_i(U), p_i(U)] <= k_i([U,U]) <= p_i(U)'
    intersect k_i(U) is verified on construction for both sides.
    """

    derived: Subgroup
    k1: Subgroup
    k1_of_derived: Subgroup
    commutator_k1_p1: Subgroup
    p1_derived_cap_k1: Subgroup
    k2: Subgroup
    k2_of_derived: Subgroup
    commutator_k2_p2: Subgroup
    p2_derived_cap_k2: Subgroup


def kernel_commutator_data(U: Subgroup) -> KernelCommutatorData:
    data = U._cache.get("kernel_commutator")
    if data is None:
        d = projections_kernels(U)
        derived = mutual_commutator(U, U)
        dd = projections_kernels(derived)
        c1 = mutual_commutator(d.k1, d.p1)
        c2 = mutual_commutator(d.k2, d.p2)
        cap1 = mutual_commutator(d.p1, d.p1).intersection(d.k1)
        cap2 = mutual_commutator(d.p2, d.p2).intersection(d.k2)
        if not (c1.is_subset_of(dd.k1) and dd.k1.is_subset_of(cap1)):
            raise InternalInconsistency("kernel chain fails on the left")
        if not (c2.is_subset_of(dd.k2) and dd.k2.is_subset_of(cap2)):
            raise InternalInconsistency("kernel chain fails on the right")
        data = KernelCommutatorData(derived, d.k1, dd.k1, c1, cap1,
                                    d.k2, dd.k2, c2, cap2)
        U._cache["kernel_commutator"] = data
    return data


def _require_subdirect(U: Subgroup) -> None:
    if not is_subdirect(U):
        d = projections_kernels(U)
        raise NotSubdirect(
            f"projections have orders {d.p1.order} and {d.p2.order}")


def is_extensible(U: Subgroup) -> bool:
    """Exact criterion: G' cap k1(U) equals k1([U, U]).

    Both sides of the product are evaluated; by theory they must agree,
    and a disagreement aborts loudly instead of picking one.
    """
    _require_subdirect(U)
    data = kernel_commutator_data(U)
    left = data.k1_of_derived == data.p1_derived_cap_k1
    right = data.k2_of_derived == data.p2_derived_cap_k2
    if left != right:
        raise InternalInconsistency(
            "left and right kernel criteria disagree")
    return left


def is_p_extensible(U: Subgroup, p: int) -> bool:
    """Exact criterion at one prime: equal p-parts of the two kernels."""
    _require_subdirect(U)
    data = kernel_commutator_data(U)
    left = (p_part(data.k1_of_derived.order, (p,))
            == p_part(data.p1_derived_cap_k1.order, (p,)))
    right = (p_part(data.k2_of_derived.order, (p,))
             == p_part(data.p2_derived_cap_k2.order, (p,)))
    if left != right:
        raise InternalInconsistency(
            f"left and right kernel criteria disagree at p={p}")
    return left


def is_pi_extensible(U: Subgroup, primes) -> bool:
    return all(is_p_extensible(U, p) for p in sorted(set(primes)))


# -- obstruction quotient ------------------------------------------------------


@dataclass(frozen=True)
class ObstructionQuotient:
    """(K cap G') / [K, G] for a normal subgroup K of G.

    Trivial p-part here means no hom with kernel data at K can obstruct
    extension at p.
    """

    base: Subgroup
    denominator: Subgroup
    invariants: AbelianInvariants

    @property
    def order(self) -> int:
        return self.base.order // self.denominator.order

    @property
    def is_trivial(self) -> bool:
        return self.order == 1

    def p_part_trivial(self, p: int) -> bool:
        return p_part(self.order, (p,)) == 1


def obstruction_quotient(G: FiniteGroup, K: Subgroup) -> ObstructionQuotient:
    if K.parent is not G:
        raise ValueError("subgroup of a different parent")
    if not is_normal(K):
        raise NotNormal("obstruction quotient needs a normal subgroup")
    base = K.intersection(commutator_subgroup(G))
    den = mutual_commutator(K, G.full())
    if not den.is_subset_of(base):
        raise InternalInconsistency("[K, G] escapes K cap G'")
    quot, _ = subgroup_quotient(base, den)
    if not quot.is_abelian:
        raise InternalInconsistency("obstruction quotient is not abelian")
    return ObstructionQuotient(base, den, abelian_invariants(quot))


# -- sufficient conditions -----------------------------------------------------


def cyclic_sylow_sufficient(U: Subgroup) -> Optional[bool]:
    """True when every Sylow subgroup of the common section is cyclic.

    Returning None means the test is silent, not that extension fails.
    """
    q = goursat_quotient(U)
    for p in prime_factors(q.order):
        if not is_cyclic(sylow_subgroup(q, p)):
            return None
    return True


@dataclass(frozen=True)
class TwistedKernelData:
    """k_i([U,U]) against [k_i(U), G] for diagonal-containing U."""

    k1_of_derived: Subgroup
    commutator_k1_G: Subgroup
    k2_of_derived: Subgroup
    commutator_k2_G: Subgroup
    witness: object


def twisted_kernel_identity(U: Subgroup) -> TwistedKernelData:
    """For U containing a twisted diagonal, k_i([U,U]) = [k_i(U), G].

    The equality is a theorem for such U; failure raises, it is never
    reported as data.
    """
    witness = contains_twisted_diagonal(U)
    if witness is None:
        raise NoDiagonal("subgroup contains no twisted diagonal")
    G = product_of(U).left
    data = kernel_commutator_data(U)
    c1 = mutual_commutator(data.k1, G.full())
    c2 = mutual_commutator(data.k2, G.full())
    if data.k1_of_derived != c1 or data.k2_of_derived != c2:
        raise InternalInconsistency(
            "derived kernel differs from [k_i(U), G] despite a diagonal")
    return TwistedKernelData(data.k1_of_derived, c1, data.k2_of_derived, c2,
                             witness)


def central_inextensibility(U: Subgroup) -> Optional[bool]:
    """False (inextensible) when some central kernel still meets G'.

    Applies to diagonal-containing subgroups of G x G; None when the
    hypotheses do not hold.
    """
    if contains_twisted_diagonal(U) is None:
        raise NoDiagonal("subgroup contains no twisted diagonal")
    G = product_of(U).left
    data = projections_kernels(U)
    Z = center(G)
    Gp = commutator_subgroup(G)
    for k in (data.k1, data.k2):
        if k.is_subset_of(Z) and k.intersection(Gp).order > 1:
            return False
    return None


def _central_failure_primes(U: Subgroup) -> tuple:
    G = product_of(U).left
    data = projections_kernels(U)
    Z = center(G)
    Gp = commutator_subgroup(G)
    primes: set = set()
    for k in (data.k1, data.k2):
        if k.is_subset_of(Z) and k.intersection(Gp).order > 1:
            primes.update(prime_factors(k.intersection(Gp).order))
    return tuple(sorted(primes))


# -- behaviour under composition ----------------------------------------------


def _require_diagonal_pair(U: Subgroup, V: Subgroup) -> FiniteGroup:
    PU = product_of(U)
    PV = product_of(V)
    if PU.left is not PU.right or PV.left is not PV.right \
            or PU.left is not PV.left:
        raise PreconditionFailed("both subgroups must live in the same G x G")
    G = PU.left
    d = diagonal(G)
    if not (d.is_subset_of(U) and d.is_subset_of(V)):
        raise PreconditionFailed("both subgroups must contain the diagonal")
    return G


def star_preservation_condition(U: Subgroup, V: Subgroup, side: int = 1) -> bool:
    """k_i(U*V) cap G' = (k_i(U) cap G') (k_i(V) cap G').

    Defined for extensible U, V containing the untwisted diagonal; the
    condition holds exactly when U*V is extensible again.
    """
    if side not in (1, 2):
        raise ValueError("side must be 1 or 2")
    G = _require_diagonal_pair(U, V)
    if not (is_extensible(U) and is_extensible(V)):
        raise PreconditionFailed("both inputs must be extensible")
    Gp = commutator_subgroup(G)
    W = star_product(U, V)
    dU = projections_kernels(U)
    dV = projections_kernels(V)
    dW = projections_kernels(W)
    kU, kV, kW = ((dU.k1, dV.k1, dW.k1) if side == 1
                  else (dU.k2, dV.k2, dW.k2))
    lhs = kW.intersection(Gp)
    rhs = set_product(kU.intersection(Gp), kV.intersection(Gp), check=True)
    return lhs == rhs


@dataclass(frozen=True)
class StarKernelQuotientOrders:
    """Orders of the two matched kernel sections across a composition.

    For U, V containing the diagonal, k1((U*V)') over k1(U) matches
    k1(V') over k2(U), and symmetrically on the other side; both order
    pairs are checked on construction.
    """

    left_composite: int
    left_inner: int
    right_composite: int
    right_inner: int


def star_kernel_quotient_orders(U: Subgroup, V: Subgroup) -> StarKernelQuotientOrders:
    _require_diagonal_pair(U, V)
    W = star_product(U, V)
    dU = projections_kernels(U)
    dV = projections_kernels(V)
    kcW = kernel_commutator_data(W)
    kcU = kernel_commutator_data(U)
    kcV = kernel_commutator_data(V)
    lhs1 = kcW.k1_of_derived.order // dU.k1.intersection(kcW.k1_of_derived).order
    rhs1 = kcV.k1_of_derived.order // dU.k2.intersection(kcV.k1_of_derived).order
    lhs2 = kcW.k2_of_derived.order // dV.k2.intersection(kcW.k2_of_derived).order
    rhs2 = kcU.k2_of_derived.order // dV.k1.intersection(kcU.k2_of_derived).order
    if lhs1 != rhs1 or lhs2 != rhs2:
        raise InternalInconsistency("composition kernel sections disagree")
    return StarKernelQuotientOrders(lhs1, rhs1, lhs2, rhs2)


# -- reports -------------------------------------------------------------------


@dataclass(frozen=True)
class PrimeVerdict:
    """Extensibility verdict at one prime with the deciding methods.

    The exact criterion is always evaluated; sufficient shortcuts that
    fired are recorded after it.  All listed methods agreed.
    """

    extensible: bool
    methods: tuple
    witnesses: dict = field(compare=False)


@dataclass(frozen=True)
class ExtensibilityReport:
    certificate: SubdirectCertificate
    primes: tuple
    per_prime: dict

    def overall(self) -> bool:
        return all(v.extensible for v in self.per_prime.values())


def build_report(U: Subgroup, primes=None) -> ExtensibilityReport:
    """Per-prime verdicts for a subdirect subgroup.

    Raises NotSubdirect when the projections are not onto; callers that
    want a soft failure should certify first.
    """
    cert = certify(U)
    if not cert.is_subdirect:
        _require_subdirect(U)
    info = product_of(U)
    if primes is None:
        primes = prime_factors(info.group.order)
    primes = tuple(sorted(set(int(p) for p in primes)))
    data = kernel_commutator_data(U)
    obstruction = obstruction_quotient(info.left, data.k1)
    cyclic_ok = cyclic_sylow_sufficient(U)
    central = None
    central_primes: tuple = ()
    if cert.diagonal_witness is not None:
        central = central_inextensibility(U)
        if central is False:
            central_primes = _central_failure_primes(U)
    witnesses_base = {
        "k1_derived_order": data.k1_of_derived.order,
        "derived_cap_k1_order": data.p1_derived_cap_k1.order,
        "commutator_k1_order": data.commutator_k1_p1.order,
        "obstruction_divisors": list(obstruction.invariants.divisors),
    }
    per_prime = {}
    for p in primes:
        exact = is_p_extensible(U, p)
        methods = [METHOD_EXACT]
        if cyclic_ok:
            if not exact:
                raise InternalInconsistency(
                    f"cyclic Sylow shortcut contradicts the criterion at p={p}")
            methods.append(METHOD_CYCLIC_SYLOW)
        if central is False and p in central_primes:
            if exact:
                raise InternalInconsistency(
                    f"central shortcut contradicts the criterion at p={p}")
            methods.append(METHOD_CENTRAL)
        per_prime[p] = PrimeVerdict(exact, tuple(methods), dict(witnesses_base))
    return ExtensibilityReport(cert, primes, per_prime)
