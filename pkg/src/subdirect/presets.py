"""Ready-made groups and a registry of small groups for identification.

Element encodings are fixed so that tests and reports are stable:

* cyclic(n): residues, product is addition mod n;
* dihedral(2n): r**i * s**j at index i + n*j, so r = 1 and s = n;
* symmetric(n) / alternating(n): permutation tuples in lexicographic
  order, identity first, product "apply left, then right";
* quaternion8: 1, i, j, k, -1, -i, -j, -k in that order;
* elementary_abelian(p, k): base-p digit vectors, componentwise sum.
"""

from __future__ import annotations

import itertools
import math
from typing import Optional

import numpy as np

from .groups import FiniteGroup, find_isomorphism, perm_product


def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise ValueError("order must be positive")
    idx = np.arange(n)
    table = (idx[:, None] + idx[None, :]) % n
    return FiniteGroup(table, label=f"C{n}", validate=False)


def dihedral(order: int) -> FiniteGroup:
    """Dihedral group of the stated order 2n."""
    if order < 2 or order % 2:
        raise ValueError("dihedral groups here have even order >= 2")
    n = order // 2
    i = np.arange(order) % n
    j = np.arange(order) // n
    sign = np.where(j == 1, -1, 1)
    # (i1, j1) * (i2, j2) = (i1 + (-1)**j1 * i2 mod n, j1 + j2 mod 2)
    ri = (i[:, None] + sign[:, None] * i[None, :]) % n
    rj = (j[:, None] + j[None, :]) % 2
    table = ri + n * rj
    return FiniteGroup(table, label=f"D{order}", validate=False)


def _perm_group(perms: list, label: str) -> FiniteGroup:
    index = {p: k for k, p in enumerate(perms)}
    n = len(perms)
    table = np.empty((n, n), dtype=np.int64)
    for a, p in enumerate(perms):
        table[a] = [index[perm_product(p, q)] for q in perms]
    group = FiniteGroup(table, label=label, validate=False)
    group._cache["permutations"] = tuple(perms)
    return group


def symmetric(n: int) -> FiniteGroup:
    if n < 1 or math.factorial(n) > 5040:
        raise ValueError("supported degrees are 1..7")
    perms = list(itertools.permutations(range(n)))
    return _perm_group(perms, f"S{n}")


def _parity(p: tuple) -> int:
    seen = [False] * len(p)
    parity = 0
    for start in range(len(p)):
        if seen[start]:
            continue
        length = 0
        x = start
        while not seen[x]:
            seen[x] = True
            x = p[x]
            length += 1
        parity ^= (length - 1) & 1
    return parity


def alternating(n: int) -> FiniteGroup:
    if n < 1 or math.factorial(n) > 10080:
        raise ValueError("supported degrees are 1..7")
    perms = [p for p in itertools.permutations(range(n)) if _parity(p) == 0]
    return _perm_group(perms, f"A{n}")


_QUAT_AXIS = {  # (axis1, axis2) -> (sign, axis); 0 is the real unit
    (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
    (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
    (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0),
}


def quaternion8() -> FiniteGroup:
    def mul(a: int, b: int) -> int:
        sa, xa = divmod(a, 4)
        sb, xb = divmod(b, 4)
        sign = (-1) ** (sa + sb)
        if xa == 0:
            s, x = 1, xb
        elif xb == 0:
            s, x = 1, xa
        else:
            s, x = _QUAT_AXIS[(xa, xb)]
        if sign * s < 0:
            return x + 4
        return x

    table = [[mul(a, b) for b in range(8)] for a in range(8)]
    return FiniteGroup(np.array(table), label="Q8", validate=False)


def elementary_abelian(p: int, k: int) -> FiniteGroup:
    from .groups import is_prime

    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if k < 0 or p ** k > 20000:
        raise ValueError("rank out of supported range")
    n = p ** k
    digits = np.empty((n, k), dtype=np.int64)
    idx = np.arange(n)
    for d in range(k):
        digits[:, k - 1 - d] = (idx // p ** d) % p
    weights = p ** np.arange(k - 1, -1, -1) if k else np.empty(0, dtype=np.int64)
    summed = (digits[:, None, :] + digits[None, :, :]) % p
    table = summed @ weights if k else np.zeros((1, 1), dtype=np.int64)
    return FiniteGroup(table.reshape(n, n), label=f"E{p}^{k}", validate=False)


def dicyclic12() -> FiniteGroup:
    """Dicyclic group of order 12: a**6 = 1, b**2 = a**3, b a b**-1 = a**-1."""
    def mul(x: int, y: int) -> int:
        i1, j1 = x % 6, x // 6
        i2, j2 = y % 6, y // 6
        if j1 == 0:
            return (i1 + i2) % 6 + 6 * j2
        if j2 == 0:
            return (i1 - i2) % 6 + 6
        return (i1 - i2 + 3) % 6

    table = [[mul(x, y) for y in range(12)] for x in range(12)]
    return FiniteGroup(np.array(table), label="Dic12", validate=False)


# -- catalog and identification ----------------------------------------------

_CATALOG_BUILDERS = {
    "C2": lambda: cyclic(2),
    "C3": lambda: cyclic(3),
    "C4": lambda: cyclic(4),
    "C2xC2": lambda: elementary_abelian(2, 2),
    "C6": lambda: cyclic(6),
    "S3": lambda: symmetric(3),
    "D8": lambda: dihedral(8),
    "Q8": quaternion8,
}

_catalog_cache: dict = {}


def catalog_group(name: str) -> FiniteGroup:
    """Shared instances of the verification catalog groups."""
    if name not in _CATALOG_BUILDERS:
        raise KeyError(f"unknown catalog group {name!r}")
    if name not in _catalog_cache:
        _catalog_cache[name] = _CATALOG_BUILDERS[name]()
    return _catalog_cache[name]


def catalog_names() -> tuple:
    return tuple(_CATALOG_BUILDERS)


def preset_descriptions() -> tuple:
    """One help line per JSON preset id."""
    return (
        "cyclic              data: {\"n\": order}",
        "dihedral            data: {\"order\": 2n}",
        "symmetric           data: {\"n\": points}, n <= 7",
        "alternating         data: {\"n\": points}, n <= 7",
        "quaternion8         data: {}",
        "elementary_abelian  data: {\"p\": prime, \"k\": rank}",
    )


_REGISTRY_BUILDERS = [
    ("1", lambda: cyclic(1)),
    ("C2", lambda: cyclic(2)),
    ("C3", lambda: cyclic(3)),
    ("C4", lambda: cyclic(4)),
    ("C2xC2", lambda: elementary_abelian(2, 2)),
    ("C5", lambda: cyclic(5)),
    ("C6", lambda: cyclic(6)),
    ("S3", lambda: symmetric(3)),
    ("C7", lambda: cyclic(7)),
    ("C8", lambda: cyclic(8)),
    ("C2xC4", lambda: None),  # built below to avoid an import cycle
    ("C2xC2xC2", lambda: elementary_abelian(2, 3)),
    ("D8", lambda: dihedral(8)),
    ("Q8", quaternion8),
    ("C9", lambda: cyclic(9)),
    ("C3xC3", lambda: elementary_abelian(3, 2)),
    ("C10", lambda: cyclic(10)),
    ("D10", lambda: dihedral(10)),
    ("C11", lambda: cyclic(11)),
    ("C12", lambda: cyclic(12)),
    ("C2xC6", lambda: None),
    ("D12", lambda: dihedral(12)),
    ("A4", lambda: alternating(4)),
    ("Dic12", dicyclic12),
]

_registry_cache: Optional[list] = None


def _small_registry() -> list:
    global _registry_cache
    if _registry_cache is None:
        from .products import direct_product

        built = []
        for name, builder in _REGISTRY_BUILDERS:
            if name == "C2xC4":
                grp = direct_product(cyclic(2), cyclic(4)).group
            elif name == "C2xC6":
                grp = direct_product(cyclic(2), cyclic(6)).group
            else:
                grp = builder()
            built.append((name, grp))
        _registry_cache = built
    return _registry_cache


def identify_small_group(G: FiniteGroup) -> Optional[str]:
    """Name of G up to isomorphism, for orders at most 12."""
    if G.order > 12:
        return None
    for name, rep in _small_registry():
        if rep.order == G.order and find_isomorphism(G, rep) is not None:
            return name
    return None
