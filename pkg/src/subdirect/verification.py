"""Named runtime checks over a group selection.

Each check sweeps one library invariant over every applicable case built
from the selected groups and reports how many cases it covered.  The
verify command runs all of them and fails on the first false result;
the acceptance tests drive the same scans at fixed selections.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

from .errors import SubdirectError
from .extensibility import (
    build_report,
    central_inextensibility,
    cyclic_sylow_sufficient,
    is_extensible,
    is_p_extensible,
    obstruction_quotient,
    star_kernel_quotient_orders,
    star_preservation_condition,
    twisted_kernel_identity,
)
from .groups import (
    FiniteGroup,
    abelianization,
    commutator_subgroup,
    all_subgroups,
    is_cyclic,
    is_isomorphic,
    mutual_commutator,
    normal_subgroups,
    p_part,
    prime_factors,
    quotient_group,
    set_product,
    subgroup_generated,
    sylow_subgroup,
)
from .homoracle import (
    coefficient_modulus,
    enumerate_homs,
    oracle_is_extensible_for_modulus,
    oracle_is_p_extensible,
    raw_enumerate_homs,
    restriction_fiber_counts,
    restriction_kernel_image_sizes,
)
from .products import (
    contains_twisted_diagonal,
    direct_product,
    enumerate_subdirect,
    goursat_quintuple,
    goursat_quotient,
    is_section,
    projections_kernels,
    star_product,
    subdirect_by_scan,
    subgroup_from_quintuple,
)

MAX_REPORTED_FAILURES = 5


@dataclass
class CheckResult:
    """Outcome of one named invariant sweep."""

    name: str
    passed: bool
    checked: int
    failures: list = field(default_factory=list)

    def line(self) -> str:
        status = "pass" if self.passed else "FAIL"
        text = f"{self.name}: {status} ({self.checked} cases)"
        if self.failures:
            text += "\n  " + "\n  ".join(self.failures[:MAX_REPORTED_FAILURES])
        return text


class CheckContext:
    """Shared scan state: the selection plus cached enumerations."""

    def __init__(self, groups: Iterable[FiniteGroup], *,
                 scan_cap: int = 144, product_cap: int = 1296):
        self.groups = list(groups)
        self.scan_cap = scan_cap
        self.product_cap = product_cap
        self._subdirects: dict = {}

    def pairs(self) -> list:
        return [(G, H) for G in self.groups for H in self.groups
                if G.order * H.order <= self.product_cap]

    def scan_pairs(self) -> list:
        return [(G, H) for G, H in self.pairs()
                if G.order * H.order <= self.scan_cap]

    def squares(self) -> list:
        return [G for G in self.groups
                if G.order * G.order <= self.product_cap]

    def subdirects(self, G: FiniteGroup, H: FiniteGroup) -> list:
        key = (id(G), id(H))
        if key not in self._subdirects:
            self._subdirects[key] = enumerate_subdirect(
                G, H, max_order=self.product_cap)
        return self._subdirects[key]

    def diagonal_subgroups(self, G: FiniteGroup) -> list:
        """All U between some twisted diagonal and G x G, with witnesses."""
        out = []
        for U in self.subdirects(G, G):
            witness = contains_twisted_diagonal(U)
            if witness is not None:
                out.append((U, witness))
        return out

    def plain_diagonal_subgroups(self, G: FiniteGroup) -> list:
        info = direct_product(G, G)
        d_mask = _diagonal_mask(G, info)
        return [U for U in self.subdirects(G, G)
                if d_mask | U.mask == U.mask]

    def composable_triples(self) -> list:
        """(U, V) with U <= F x G, V <= G x H over the selection."""
        out = []
        for F in self.groups:
            for G in self.groups:
                if F.order * G.order > self.product_cap:
                    continue
                for H in self.groups:
                    if G.order * H.order > self.product_cap:
                        continue
                    for U in self.subdirects(F, G):
                        for V in self.subdirects(G, H):
                            out.append((U, V))
        return out


def _diagonal_mask(G: FiniteGroup, info) -> int:
    mask = 0
    for g in range(G.order):
        mask |= 1 << info.encode(g, g)
    return mask


def _run(name: str, cases: Iterable, fail_text: Callable) -> CheckResult:
    """Sweep cases; fail_text maps a case to None (ok) or a message."""
    failures = []
    checked = 0
    for case in cases:
        checked += 1
        msg = fail_text(case)
        if msg is not None:
            failures.append(msg)
    return CheckResult(name, not failures, checked, failures)


# -- core group checks ----------------------------------------------------------


def check_group_axioms(ctx: CheckContext) -> CheckResult:
    def probe(G: FiniteGroup) -> Optional[str]:
        try:
            G.validate()
        except SubdirectError as exc:
            return f"{G.label}: {exc}"
        return None

    cases = list(ctx.groups)
    cases += [direct_product(G, H).group for G, H in ctx.scan_pairs()]
    return _run("group-axioms", cases, probe)


def check_normal_product_commutator(ctx: CheckContext) -> CheckResult:
    """G' = <X', [X,Y], Y'> whenever X, Y are normal with XY = G."""
    def cases():
        for G in ctx.groups:
            Gp = commutator_subgroup(G)
            for X in normal_subgroups(G):
                for Y in normal_subgroups(G):
                    if set_product(X, Y, check=False).order != G.order:
                        continue
                    yield G, Gp, X, Y

    def probe(case) -> Optional[str]:
        G, Gp, X, Y = case
        Xg, _ = X.as_group()
        Yg, _ = Y.as_group()
        seed = set(X.elements[i] for i in commutator_subgroup(Xg).elements)
        seed |= set(Y.elements[i] for i in commutator_subgroup(Yg).elements)
        seed |= set(mutual_commutator(X, Y).elements)
        if subgroup_generated(G, seed) != Gp:
            return f"{G.label}: X order {X.order}, Y order {Y.order}"
        return None

    return _run("normal-product-commutator", cases(), probe)


def check_quotient_commutator(ctx: CheckContext) -> CheckResult:
    """(G/N)' is the image of G' and has order |G'| / |G' cap N|."""
    def cases():
        for G in ctx.groups:
            for N in normal_subgroups(G):
                yield G, N

    def probe(case) -> Optional[str]:
        G, N = case
        Gp = commutator_subgroup(G)
        Q, proj = quotient_group(G, N)
        derived = commutator_subgroup(Q)
        if derived != proj.map_subgroup(Gp):
            return f"{G.label}/N(order {N.order}): wrong derived subgroup"
        want = Gp.order // Gp.intersection(N).order
        if derived.order != want:
            return f"{G.label}/N(order {N.order}): order {derived.order} != {want}"
        return None

    return _run("quotient-commutator", cases(), probe)


def check_abelianization_order(ctx: CheckContext) -> CheckResult:
    def probe(G: FiniteGroup) -> Optional[str]:
        inv, _ = abelianization(G)
        want = G.order // commutator_subgroup(G).order
        if inv.order != want:
            return f"{G.label}: divisor product {inv.order} != {want}"
        return None

    return _run("abelianization-order", ctx.groups, probe)


def check_isomorphism_equivalence(ctx: CheckContext) -> CheckResult:
    groups = ctx.groups
    rel = {}
    for a in groups:
        for b in groups:
            rel[(id(a), id(b))] = is_isomorphic(a, b)

    def cases():
        for a in groups:
            yield ("refl", a, a, a)
        for a in groups:
            for b in groups:
                yield ("sym", a, b, b)
        for a in groups:
            for b in groups:
                for c in groups:
                    yield ("trans", a, b, c)

    def probe(case) -> Optional[str]:
        kind, a, b, c = case
        if kind == "refl" and not rel[(id(a), id(a))]:
            return f"not reflexive at {a.label}"
        if kind == "sym" and rel[(id(a), id(b))] != rel[(id(b), id(a))]:
            return f"not symmetric at {a.label}, {b.label}"
        if kind == "trans" and rel[(id(a), id(b))] and rel[(id(b), id(c))] \
                and not rel[(id(a), id(c))]:
            return f"not transitive at {a.label}, {b.label}, {c.label}"
        return None

    return _run("isomorphism-equivalence", cases(), probe)


# -- product and quintuple checks ------------------------------------------------


def _lattice_cases(ctx: CheckContext):
    for G, H in ctx.scan_pairs():
        info = direct_product(G, H)
        for U in all_subgroups(info.group):
            yield info, U


def check_goursat_roundtrip(ctx: CheckContext) -> CheckResult:
    def probe(case) -> Optional[str]:
        info, U = case
        back = subgroup_from_quintuple(goursat_quintuple(U))
        if back != U:
            return f"{info.group.label}: order {U.order} roundtrip differs"
        return None

    return _run("goursat-roundtrip", _lattice_cases(ctx), probe)


def check_product_order_identity(ctx: CheckContext) -> CheckResult:
    def probe(case) -> Optional[str]:
        info, U = case
        d = projections_kernels(U)
        if U.order != d.p1.order * d.k2.order \
                or U.order != d.p2.order * d.k1.order:
            return f"{info.group.label}: order {U.order} breaks |U|=|p_i||k_j|"
        return None

    return _run("product-order-identity", _lattice_cases(ctx), probe)


def check_commutator_projection(ctx: CheckContext) -> CheckResult:
    """p_i(U') equals (p_i(U))' for every product subgroup."""
    def probe(case) -> Optional[str]:
        info, U = case
        Ug, embed = U.as_group()
        Up = embed.map_subgroup(commutator_subgroup(Ug))
        d = projections_kernels(U)
        dp = projections_kernels(Up)
        p1g, _ = d.p1.as_group()
        p2g, _ = d.p2.as_group()
        want1 = set(d.p1.elements[i]
                    for i in commutator_subgroup(p1g).elements)
        want2 = set(d.p2.elements[i]
                    for i in commutator_subgroup(p2g).elements)
        if set(dp.p1.elements) != want1 or set(dp.p2.elements) != want2:
            return f"{info.group.label}: order {U.order} projection mismatch"
        return None

    return _run("commutator-projection", _lattice_cases(ctx), probe)


def check_kernel_commutator_chain(ctx: CheckContext) -> CheckResult:
    """[k_i(U), p_i(U)] <= k_i(U') <= (p_i(U))' cap k_i(U)."""
    from .extensibility import kernel_commutator_data

    def probe(case) -> Optional[str]:
        info, U = case
        try:
            kernel_commutator_data(U)
        except SubdirectError as exc:
            return f"{info.group.label}: order {U.order}: {exc}"
        return None

    return _run("kernel-commutator-chain", _lattice_cases(ctx), probe)


def check_enumeration_vs_scan(ctx: CheckContext) -> CheckResult:
    def probe(case) -> Optional[str]:
        G, H = case
        fast = {U.elements for U in ctx.subdirects(G, H)}
        slow = {U.elements
                for U in subdirect_by_scan(G, H, max_order=ctx.scan_cap)}
        if fast != slow:
            return (f"{G.label} x {H.label}: enumeration {len(fast)} "
                    f"vs scan {len(slow)}")
        return None

    return _run("enumeration-vs-scan", ctx.scan_pairs(), probe)


def check_star_monotonicity(ctx: CheckContext) -> CheckResult:
    """k1 grows and p1 shrinks across a composition."""
    def probe(case) -> Optional[str]:
        U, V = case
        W = star_product(U, V)
        dU = projections_kernels(U)
        dW = projections_kernels(W)
        if not dU.k1.is_subset_of(dW.k1):
            return "k1(U) not inside k1(U*V)"
        if not dW.p1.is_subset_of(dU.p1):
            return "p1(U*V) not inside p1(U)"
        return None

    cases = list(ctx.composable_triples())
    for G in ctx.squares():
        if G.order * G.order > ctx.scan_cap:
            continue
        info = direct_product(G, G)
        lattice = all_subgroups(info.group)
        cases += [(U, V) for U in lattice for V in lattice]
    return _run("star-monotonicity", cases, probe)


def check_section_relation(ctx: CheckContext) -> CheckResult:
    """q(U*V) is a section of q(U) and of q(V)."""
    def probe(case) -> Optional[str]:
        U, V = case
        qw = goursat_quotient(star_product(U, V))
        if not is_section(qw, goursat_quotient(U)):
            return f"q(U*V) of order {qw.order} not a section of q(U)"
        if not is_section(qw, goursat_quotient(V)):
            return f"q(U*V) of order {qw.order} not a section of q(V)"
        return None

    return _run("section-relation", ctx.composable_triples(), probe)


def check_cyclic_sylow_functoriality(ctx: CheckContext) -> CheckResult:
    """All-cyclic-Sylow sections stay all-cyclic-Sylow under star."""
    def all_cyclic(q: FiniteGroup) -> bool:
        return all(is_cyclic(sylow_subgroup(q, p))
                   for p in prime_factors(q.order))

    def probe(case) -> Optional[str]:
        U, V = case
        if not (all_cyclic(goursat_quotient(U))
                and all_cyclic(goursat_quotient(V))):
            return None
        if not all_cyclic(goursat_quotient(star_product(U, V))):
            return "composite section lost the cyclic Sylow property"
        return None

    return _run("cyclic-sylow-functoriality", ctx.composable_triples(), probe)


def check_twisted_kernel_transport(ctx: CheckContext) -> CheckResult:
    """k2(U) = phi(k1(U)) and the composite kernel product identities."""
    def cases():
        for G in ctx.squares():
            pairs = ctx.diagonal_subgroups(G)
            for U, phi in pairs:
                yield ("single", G, U, phi, None, None)
            for U, phi in pairs:
                for V, psi in pairs:
                    yield ("pair", G, U, phi, V, psi)

    def probe(case) -> Optional[str]:
        kind, G, U, phi, V, psi = case
        dU = projections_kernels(U)
        if kind == "single":
            if phi.map_subgroup(dU.k1) != dU.k2:
                return f"{G.label}: k2 is not the twist image of k1"
            return None
        dV = projections_kernels(V)
        dW = projections_kernels(star_product(U, V))
        want1 = set_product(dU.k1, phi.inverted().map_subgroup(dV.k1),
                            check=False)
        want2 = set_product(dV.k2, psi.map_subgroup(dU.k2), check=False)
        if dW.k1 != want1:
            return f"{G.label}: k1(U*V) != k1(U) phi^-1(k1(V))"
        if dW.k2 != want2:
            return f"{G.label}: k2(U*V) != k2(V) psi(k2(U))"
        return None

    return _run("twisted-kernel-transport", cases(), probe)


# -- extensibility checks --------------------------------------------------------


def _subdirect_cases(ctx: CheckContext):
    for G, H in ctx.pairs():
        for U in ctx.subdirects(G, H):
            yield G, H, U


def check_side_symmetry(ctx: CheckContext) -> CheckResult:
    """is_extensible evaluates both kernel equalities and they agree."""
    def probe(case) -> Optional[str]:
        G, H, U = case
        try:
            is_extensible(U)
        except SubdirectError as exc:
            return f"{G.label} x {H.label}: {exc}"
        return None

    return _run("side-symmetry", _subdirect_cases(ctx), probe)


def check_oracle_agreement(ctx: CheckContext) -> CheckResult:
    def cases():
        for G, H, U in _subdirect_cases(ctx):
            for p in prime_factors(G.order * H.order):
                yield G, H, U, p

    def probe(case) -> Optional[str]:
        G, H, U, p = case
        criterion = is_p_extensible(U, p)
        oracle = oracle_is_p_extensible(U, p)
        if criterion != oracle:
            return (f"{G.label} x {H.label}, |U|={U.order}, p={p}: "
                    f"criterion {criterion} vs oracle {oracle}")
        return None

    return _run("oracle-agreement", cases(), probe)


def check_sufficiency_soundness(ctx: CheckContext) -> CheckResult:
    """Shortcut verdicts never contradict the exact criterion."""
    def probe(case) -> Optional[str]:
        G, H, U = case
        exact = is_extensible(U)
        if cyclic_sylow_sufficient(U) and not exact:
            return f"{G.label} x {H.label}: cyclic-Sylow fired on inextensible U"
        if G is H and contains_twisted_diagonal(U) is not None:
            if central_inextensibility(U) is False and exact:
                return f"{G.label}: central shortcut fired on extensible U"
        return None

    return _run("sufficiency-soundness", _subdirect_cases(ctx), probe)


def check_obstruction_soundness(ctx: CheckContext) -> CheckResult:
    """Trivial p-part of (k1 cap G')/[k1,G] forces p-extensibility."""
    def cases():
        for G, H, U in _subdirect_cases(ctx):
            for p in prime_factors(G.order * H.order):
                yield G, H, U, p

    def probe(case) -> Optional[str]:
        G, H, U, p = case
        k1 = projections_kernels(U).k1
        if not obstruction_quotient(G, k1).p_part_trivial(p):
            return None
        if not is_p_extensible(U, p):
            return (f"{G.label} x {H.label}, p={p}: trivial obstruction "
                    "but inextensible")
        return None

    return _run("obstruction-soundness", cases(), probe)


def check_twisted_kernel_identity(ctx: CheckContext) -> CheckResult:
    """k_i(U') = [k_i(U), G] on every diagonal-containing subgroup."""
    def cases():
        for G in ctx.squares():
            for U, _ in ctx.diagonal_subgroups(G):
                yield G, U

    def probe(case) -> Optional[str]:
        G, U = case
        try:
            twisted_kernel_identity(U)
        except SubdirectError as exc:
            return f"{G.label}: {exc}"
        return None

    return _run("twisted-kernel-identity", cases(), probe)


def check_star_preservation(ctx: CheckContext) -> CheckResult:
    """Kernel condition at i=1,2 holds iff the composite is extensible."""
    def cases():
        for G in ctx.squares():
            subs = [U for U in ctx.plain_diagonal_subgroups(G)
                    if is_extensible(U)]
            for U in subs:
                for V in subs:
                    yield G, U, V

    def probe(case) -> Optional[str]:
        G, U, V = case
        condition = (star_preservation_condition(U, V, side=1)
                     and star_preservation_condition(U, V, side=2))
        actual = is_extensible(star_product(U, V))
        if condition != actual:
            return (f"{G.label}: condition {condition} but composite "
                    f"extensible={actual}")
        return None

    return _run("star-preservation", cases(), probe)


def check_star_kernel_sections(ctx: CheckContext) -> CheckResult:
    """The four composite kernel quotient orders match pairwise."""
    def cases():
        for G in ctx.squares():
            subs = ctx.plain_diagonal_subgroups(G)
            for U in subs:
                for V in subs:
                    yield G, U, V

    def probe(case) -> Optional[str]:
        G, U, V = case
        try:
            star_kernel_quotient_orders(U, V)
        except SubdirectError as exc:
            return f"{G.label}: {exc}"
        return None

    return _run("star-kernel-sections", cases(), probe)


def check_report_methods(ctx: CheckContext) -> CheckResult:
    """Per-prime reports build cleanly and conjoin to the overall verdict."""
    def probe(case) -> Optional[str]:
        G, H, U = case
        try:
            report = build_report(U)
        except SubdirectError as exc:
            return f"{G.label} x {H.label}: {exc}"
        want = all(v.extensible for v in report.per_prime.values())
        if report.overall() != want:
            return f"{G.label} x {H.label}: overall is not the conjunction"
        if report.overall() != is_extensible(U):
            return f"{G.label} x {H.label}: overall differs from is_extensible"
        return None

    return _run("report-methods", _subdirect_cases(ctx), probe)


# -- hom oracle checks -----------------------------------------------------------


def check_hom_count_identity(ctx: CheckContext) -> CheckResult:
    """|Hom(B, C_m)| = pi-part of |B| for abelian B at saturating m."""
    def cases():
        pis = [(2,), (3,), (5,), (2, 3), (2, 5), (3, 5), (2, 3, 5)]
        for G in ctx.groups:
            if not G.is_abelian:
                continue
            for pi in pis:
                yield G, pi

    def probe(case) -> Optional[str]:
        G, pi = case
        m = p_part(G.exponent(), pi)
        count = len(enumerate_homs(G, m))
        if count != p_part(G.order, pi):
            return (f"{G.label}, pi={pi}: {count} homs vs "
                    f"{p_part(G.order, pi)}")
        return None

    return _run("hom-count-identity", cases(), probe)


def check_raw_enumerator_agreement(ctx: CheckContext) -> CheckResult:
    """The value-table search returns exactly the fast enumeration."""
    def cases():
        for G in ctx.groups:
            for m in (1, 2, 3, 4, 6):
                if m ** (G.order - 1) <= 1 << 18:
                    yield G, m

    def probe(case) -> Optional[str]:
        G, m = case
        fast = {h.key() for h in enumerate_homs(G, m)}
        raw = {h.key() for h in raw_enumerate_homs(G, m)}
        if fast != raw:
            return f"{G.label}, m={m}: {len(fast)} fast vs {len(raw)} raw"
        return None

    return _run("raw-enumerator-agreement", cases(), probe)


def check_restriction_kernel(ctx: CheckContext) -> CheckResult:
    """Kernel of the restriction counts homs out of the common section."""
    def cases():
        for G, H, U in _subdirect_cases(ctx):
            m = p_part(direct_product(G, H).group.exponent(),
                       prime_factors(G.order * H.order))
            yield G, H, U, m

    def probe(case) -> Optional[str]:
        G, H, U, m = case
        kernel, _ = restriction_kernel_image_sizes(U, m)
        want = len(enumerate_homs(goursat_quotient(U), m))
        if kernel != want:
            return (f"{G.label} x {H.label}, m={m}: kernel {kernel} "
                    f"vs |Hom(q(U))| {want}")
        return None

    return _run("restriction-kernel", cases(), probe)


def check_fiber_uniformity(ctx: CheckContext) -> CheckResult:
    def probe(case) -> Optional[str]:
        G, H, U = case
        m = p_part(direct_product(G, H).group.exponent(),
                   prime_factors(G.order * H.order))
        counts = restriction_fiber_counts(U, m)
        kernel, _ = restriction_kernel_image_sizes(U, m)
        if set(counts) != {kernel}:
            return f"{G.label} x {H.label}: fibers {set(counts)} != {kernel}"
        return None

    return _run("fiber-uniformity", _subdirect_cases(ctx), probe)


def check_coefficient_stabilization(ctx: CheckContext) -> CheckResult:
    """Verdicts stop changing once m saturates the exponent's p-part."""
    def cases():
        for G, H, U in _subdirect_cases(ctx):
            for p in prime_factors(G.order * H.order):
                yield U, p

    def probe(case) -> Optional[str]:
        U, p = case
        m = coefficient_modulus(U, p)
        a = oracle_is_extensible_for_modulus(U, m)
        b = oracle_is_extensible_for_modulus(U, m * p)
        if a != b:
            return f"verdict changed between m={m} and m={m * p}"
        return None

    return _run("coefficient-stabilization", cases(), probe)


# -- reporting checks ------------------------------------------------------------


def check_record_roundtrip(ctx: CheckContext) -> CheckResult:
    from .records import AnalysisRecord, analyze_subgroup

    def probe(case) -> Optional[str]:
        G, H, U = case
        record = analyze_subgroup(U)
        back = AnalysisRecord.from_dict(json.loads(record.to_json()))
        if back != record:
            return f"{G.label} x {H.label}: reparse differs"
        if record.to_json() != analyze_subgroup(U).to_json():
            return f"{G.label} x {H.label}: serialization not deterministic"
        if record.inconsistent:
            return f"{G.label} x {H.label}: record flagged INCONSISTENT"
        return None

    return _run("record-roundtrip", _subdirect_cases(ctx), probe)


ALL_CHECKS: tuple = (
    check_group_axioms,
    check_normal_product_commutator,
    check_quotient_commutator,
    check_abelianization_order,
    check_isomorphism_equivalence,
    check_goursat_roundtrip,
    check_product_order_identity,
    check_commutator_projection,
    check_kernel_commutator_chain,
    check_enumeration_vs_scan,
    check_star_monotonicity,
    check_section_relation,
    check_cyclic_sylow_functoriality,
    check_twisted_kernel_transport,
    check_side_symmetry,
    check_oracle_agreement,
    check_sufficiency_soundness,
    check_obstruction_soundness,
    check_twisted_kernel_identity,
    check_star_preservation,
    check_star_kernel_sections,
    check_report_methods,
    check_hom_count_identity,
    check_raw_enumerator_agreement,
    check_restriction_kernel,
    check_fiber_uniformity,
    check_coefficient_stabilization,
    check_record_roundtrip,
)


def run_checks(ctx: CheckContext, names: Optional[Iterable[str]] = None) -> list:
    """Run the selected checks (all by default), in declaration order."""
    known = {check.__name__.removeprefix("check_").replace("_", "-"): check
             for check in ALL_CHECKS}
    if names is not None:
        unknown = sorted(set(names) - set(known))
        if unknown:
            raise KeyError(f"unknown checks: {', '.join(unknown)}")
    wanted = None if names is None else set(names)
    results = []
    for name, check in known.items():
        if wanted is not None and name not in wanted:
            continue
        results.append(check(ctx))
    return results
