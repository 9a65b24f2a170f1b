"""Independent brute-force oracles used to cross-check the library.

Everything here is deliberately naive: plain Python sets, no numpy, no
reuse of the package's own closure or enumeration code.  Only feasible
for the very small groups the tests use.
"""

from __future__ import annotations

import itertools


def brute_closure(mul, seed) -> frozenset:
    """Closure of seed (plus identity 0) under the table mul[x][y]."""
    have = {0} | set(seed)
    frontier = list(have)
    while frontier:
        nxt = []
        for a in list(have):
            for b in frontier:
                for c in (mul[a][b], mul[b][a]):
                    if c not in have:
                        have.add(c)
                        nxt.append(c)
        frontier = nxt
    return frozenset(have)


def mul_table(G) -> list:
    return [[int(G.product[a, b]) for b in range(G.order)]
            for a in range(G.order)]


def brute_subgroups(G) -> set:
    """All subgroups as frozensets, by testing every identity subset.

    Exponential; callers keep |G| small.
    """
    mul = mul_table(G)
    n = G.order
    rest = list(range(1, n))
    found = set()
    for r in range(0, n):
        for combo in itertools.combinations(rest, r):
            cand = frozenset((0, *combo))
            if len(cand) > 0 and n % len(cand):
                continue
            closed = all(mul[a][b] in cand for a in cand for b in cand)
            if closed:
                found.add(cand)
    return found


def brute_commutator_subgroup(G) -> frozenset:
    mul = mul_table(G)
    inv = [int(G.inverse[x]) for x in range(G.order)]
    comms = {mul[mul[inv[a]][inv[b]]][mul[a][b]]
             for a in range(G.order) for b in range(G.order)}
    return brute_closure(mul, comms)


def brute_center(G) -> frozenset:
    mul = mul_table(G)
    return frozenset(a for a in range(G.order)
                     if all(mul[a][b] == mul[b][a] for b in range(G.order)))


def brute_homs_to_cyclic(G, m: int) -> set:
    """All additive value tables G -> Z/m, as tuples."""
    n = G.order
    mul = mul_table(G)
    out = set()
    for tail in itertools.product(range(m), repeat=n - 1):
        vals = (0, *tail)
        if all(vals[mul[a][b]] == (vals[a] + vals[b]) % m
               for a in range(n) for b in range(n)):
            out.add(vals)
    return out


def brute_automorphisms(G) -> list:
    """Every relabeling fixing 0 that preserves the table."""
    n = G.order
    mul = mul_table(G)
    out = []
    for perm in itertools.permutations(range(1, n)):
        img = (0, *perm)
        if all(img[mul[a][b]] == mul[img[a]][img[b]]
               for a in range(n) for b in range(n)):
            out.append(img)
    return out


def perm_parity(perm) -> int:
    """0 for even, 1 for odd."""
    seen = [False] * len(perm)
    parity = 0
    for start in range(len(perm)):
        if seen[start]:
            continue
        length = 0
        j = start
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        parity ^= (length - 1) & 1
    return parity


def elements_of(U) -> frozenset:
    return frozenset(U.elements)


def brute_is_subgroup(G, elems) -> bool:
    mul = mul_table(G)
    elems = set(elems)
    return 0 in elems and all(mul[a][b] in elems
                              for a in elems for b in elems)
