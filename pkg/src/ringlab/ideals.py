"""Ideals, multiplicatively closed sets and localization over finite rings.

All set-valued results use element indices and are returned with a
deterministic ordering (ascending index) so reports are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .config import size_limit
from .errors import ConstructionBug, InvalidConstruction, NotProperError, SizeLimitError, TypeMismatch
from .rings import FiniteRing, RingHom, check_hom, idempotent_power


@dataclass(frozen=True)
class Ideal:
    ring: FiniteRing
    members: frozenset
    generators: tuple

    @property
    def sorted_members(self):
        return tuple(sorted(self.members))

    def is_proper(self) -> bool:
        return len(self.members) < self.ring.size

    def is_zero(self) -> bool:
        return self.members == frozenset({0})

    def __contains__(self, x) -> bool:
        return int(x) in self.members

    def label(self) -> str:
        gens = ",".join(self.ring.labels[g] for g in self.generators)
        return f"({gens})" if self.generators else "(0)"


@dataclass(frozen=True)
class MulClosedSet:
    ring: FiniteRing
    members: frozenset
    generators: tuple

    @property
    def sorted_members(self):
        return tuple(sorted(self.members))

    def __contains__(self, x) -> bool:
        return int(x) in self.members

    def label(self) -> str:
        gens = ",".join(self.ring.labels[g] for g in self.generators)
        return f"S<{gens}>"


def _sum_sets(R: FiniteRing, xs, ys) -> frozenset:
    """{x + y : x in xs, y in ys} via the addition table."""
    if len(xs) * len(ys) <= 4096:
        rows = R.add
        return frozenset(int(rows[x, y]) for x in xs for y in ys)
    ax = np.fromiter(xs, dtype=np.intp)
    ay = np.fromiter(ys, dtype=np.intp)
    return frozenset(int(v) for v in np.unique(R.add[np.ix_(ax, ay)]))


def principal_members(R: FiniteRing, g) -> frozenset:
    cache = R._cache.setdefault("principal", {})
    got = cache.get(int(g))
    if got is None:
        got = frozenset(int(v) for v in np.unique(R.mul[:, g]))
        cache[int(g)] = got
    return got


def canonical_generators(R: FiniteRing, members) -> tuple:
    """Greedy minimal-index generating list for an ideal's member set."""
    gens = []
    have = frozenset({0})
    for a in sorted(members):
        if a not in have:
            gens.append(a)
            have = _sum_sets(R, have, principal_members(R, a))
    return tuple(gens)


def ideal_generate(R: FiniteRing, gens) -> Ideal:
    """Smallest ideal containing the generators."""
    gens = tuple(int(g) for g in gens)
    cache = R._cache.setdefault("ideal_by_gens", {})
    got = cache.get(gens)
    if got is not None:
        return got
    for g in gens:
        if not 0 <= g < R.size:
            raise TypeMismatch(f"generator {g} out of range")
    members = frozenset({0})
    for g in sorted(set(gens)):
        if g not in members:
            members = _sum_sets(R, members, principal_members(R, g))
    result = Ideal(R, members, gens)
    cache[gens] = result
    return result


def ideal_from_members(R: FiniteRing, members) -> Ideal:
    members = frozenset(int(x) for x in members)
    return Ideal(R, members, canonical_generators(R, members))


def validate_ideal(A: Ideal) -> None:
    """Closure checks; raises on violation.  Used by tests and constructions."""
    R = A.ring
    if 0 not in A.members:
        raise TypeMismatch("ideal lacks 0")
    for x in A.members:
        for y in A.members:
            if R.a(x, y) not in A.members:
                raise TypeMismatch("ideal not closed under addition")
    for r in R.elements():
        for x in A.members:
            if R.m(r, x) not in A.members:
                raise TypeMismatch("ideal not closed under multiplication")
    if ideal_generate(R, A.generators).members != A.members:
        raise TypeMismatch("ideal members differ from the span of its generators")


def all_ideals(R: FiniteRing):
    """Every ideal exactly once, sorted by (cardinality, member tuple)."""
    cached = R._cache.get("ideals")
    if cached is not None:
        return cached
    if R.size > size_limit():
        raise SizeLimitError("ideal enumeration beyond the size cap")
    seen = {frozenset({0})}
    frontier = [frozenset({0})]
    while frontier:
        base = frontier.pop()
        for a in R.elements():
            if a in base:
                continue
            grown = _sum_sets(R, base, principal_members(R, a))
            if grown not in seen:
                seen.add(grown)
                frontier.append(grown)
    ordered = sorted(seen, key=lambda s: (len(s), tuple(sorted(s))))
    result = tuple(ideal_from_members(R, s) for s in ordered)
    R._cache["ideals"] = result
    return result


def annihilator(R: FiniteRing, T) -> Ideal:
    """{y : yt = 0 for every t in T}; Ann of the empty set is the whole ring."""
    mask = np.ones(R.size, dtype=bool)
    for t in T:
        mask &= R.mul[:, int(t)] == 0
    return ideal_from_members(R, (int(v) for v in np.where(mask)[0]))


def colon(A: Ideal, K) -> Ideal:
    """(A : K) = {w : wK subset of A}."""
    R = A.ring
    ks = np.fromiter((int(k) for k in K), dtype=np.intp)
    in_a = np.zeros(R.size, dtype=bool)
    in_a[list(A.members)] = True
    if len(ks) == 0:
        mask = np.ones(R.size, dtype=bool)
    else:
        mask = in_a[R.mul[:, ks]].all(axis=1)
    return ideal_from_members(R, (int(v) for v in np.where(mask)[0]))


def prime_violation(A: Ideal):
    """Lex-first pair (w, z) with wz in A but neither factor in A, or None."""
    R = A.ring
    if not A.is_proper():
        return None
    in_a = np.zeros(R.size, dtype=bool)
    in_a[list(A.members)] = True
    viol = in_a[R.mul] & ~in_a[:, None] & ~in_a[None, :]
    hits = np.argwhere(viol)
    if len(hits) == 0:
        return None
    w, z = hits[0]
    return int(w), int(z)


def is_prime(A: Ideal) -> bool:
    return A.is_proper() and prime_violation(A) is None


def spec(R: FiniteRing):
    """All prime ideals."""
    cached = R._cache.get("spec")
    if cached is None:
        cached = tuple(A for A in all_ideals(R) if is_prime(A))
        R._cache["spec"] = cached
    return cached


def is_maximal(A: Ideal) -> bool:
    if not A.is_proper():
        return False
    for B in all_ideals(A.ring):
        if B.is_proper() and A.members < B.members:
            return False
    return True


def max_ideals(R: FiniteRing):
    cached = R._cache.get("max_ideals")
    if cached is None:
        cached = tuple(A for A in all_ideals(R) if is_maximal(A))
        R._cache["max_ideals"] = cached
    return cached


def min_primes_over(A: Ideal):
    """Minimal primes containing A."""
    if not A.is_proper():
        raise NotProperError("minimal primes are defined over proper ideals")
    over = [P for P in spec(A.ring) if A.members <= P.members]
    return tuple(P for P in over if not any(Q.members < P.members for Q in over))


def jacobson_radical(R: FiniteRing) -> Ideal:
    members = frozenset(range(R.size))
    for M in max_ideals(R):
        members &= M.members
    return ideal_from_members(R, members)


def mcs_generate(R: FiniteRing, gens) -> MulClosedSet:
    """Multiplicative closure of gens together with 1.  May contain 0."""
    gens = tuple(int(g) for g in gens)
    for g in gens:
        if not 0 <= g < R.size:
            raise TypeMismatch(f"generator {g} out of range")
    members = {R.one, *gens}
    frontier = list(members)
    while frontier:
        x = frontier.pop()
        for y in tuple(members):
            p = R.m(x, y)
            if p not in members:
                members.add(p)
                frontier.append(p)
    return MulClosedSet(R, frozenset(members), gens)


def mcs_from_members(R: FiniteRing, members, generators=None) -> MulClosedSet:
    members = frozenset(int(x) for x in members)
    if R.one not in members:
        raise InvalidConstruction("a multiplicatively closed set must contain 1")
    for x in members:
        for y in members:
            if R.m(x, y) not in members:
                raise InvalidConstruction("set is not multiplicatively closed")
    gens = tuple(generators) if generators is not None else tuple(sorted(members))
    return MulClosedSet(R, members, gens)


def s_units(R: FiniteRing, S: MulClosedSet) -> frozenset:
    """{a : the principal ideal Ra meets S}."""
    if S.ring is not R:
        raise TypeMismatch("m.c.s. belongs to a different ring")
    return frozenset(a for a in R.elements() if principal_members(R, a) & S.members)


# -- localization -----------------------------------------------------------------


@dataclass(frozen=True)
class LocalizationResult:
    localized: FiniteRing
    map: RingHom
    kernel: Ideal
    absorbing_idempotent: int


def localize(R: FiniteRing, S: MulClosedSet) -> LocalizationResult:
    """S^{-1}R realized as the corner ring eR for the absorbing idempotent e.

    e is the eventual idempotent power of the product of all members of S;
    the natural map sends a to ea.  Every image of S must land in the units
    of eR (asserted), and the kernel is {a : ea = 0}.
    """
    if S.ring is not R:
        raise TypeMismatch("m.c.s. belongs to a different ring")
    key = ("localize", S.members)
    cached = R._cache.get(key)
    if cached is not None:
        return cached
    t = R.one
    for s in S.sorted_members:
        t = R.m(t, s)
    e, _ = idempotent_power(R, t)
    carrier = sorted({R.m(e, a) for a in R.elements()})
    pos = {x: i for i, x in enumerate(carrier)}
    k = len(carrier)
    add = np.zeros((k, k), dtype=np.int16)
    mul = np.zeros((k, k), dtype=np.int16)
    for i, x in enumerate(carrier):
        for j, y in enumerate(carrier):
            add[i, j] = pos[R.a(x, y)]
            mul[i, j] = pos[R.m(x, y)]
    gens_text = ",".join(R.labels[g] for g in S.generators)
    base = f"({R.recipe})" if " x " in R.recipe else R.recipe
    labels = tuple(R.labels[x] for x in carrier)
    localized = FiniteRing(add, mul, labels=labels, recipe=f"loc({base}, S<{gens_text}>)")
    image = tuple(pos[R.m(e, a)] for a in R.elements())
    natural = check_hom(RingHom(R, localized, image))
    for s in S.members:
        if image[s] not in localized.units:
            raise ConstructionBug("localization did not invert a member of S")
    kernel = ideal_from_members(R, (a for a in R.elements() if R.m(e, a) == 0))
    result = LocalizationResult(localized, natural, kernel, int(e))
    R._cache[key] = result
    return result


def localize_oracle(R: FiniteRing, S: MulClosedSet) -> FiniteRing:
    """Independent fraction construction: classes of pairs (a, s).

    (a,s) ~ (b,u) iff v(ua - sb) = 0 for some v in S.  Must be isomorphic
    to localize(R, S).localized; exists purely as a cross-check.
    """
    if S.ring is not R:
        raise TypeMismatch("m.c.s. belongs to a different ring")
    if R.size * len(S.members) > size_limit() ** 2:
        raise SizeLimitError("fraction table beyond the size cap")
    dens = sorted(S.members)
    pairs = [(a, s) for a in R.elements() for s in dens]
    index = {p: i for i, p in enumerate(pairs)}
    m = len(pairs)
    av = np.fromiter((p[0] for p in pairs), dtype=np.intp)
    sv = np.fromiter((p[1] for p in pairs), dtype=np.intp)
    neg = np.fromiter(R.neg, dtype=np.intp)
    # diff[i, j] = u_j * a_i - s_i * b_j
    ua = R.mul[av[:, None], sv[None, :]]  # a_i * u_j
    sb = R.mul[sv[:, None], av[None, :]]  # s_i * b_j
    diff = R.add[ua, neg[sb]]
    kill = (R.mul[np.ix_(np.fromiter(dens, dtype=np.intp), np.arange(R.size))] == 0).any(axis=0)
    eq = kill[diff]
    parent = list(range(m))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, j in np.argwhere(eq):
        if i < j:
            ri, rj = find(int(i)), find(int(j))
            if ri != rj:
                parent[max(ri, rj)] = min(ri, rj)
    roots = []
    root_of = {}
    cls = [None] * m
    for i in range(m):
        r = find(i)
        if r not in root_of:
            root_of[r] = len(roots)
            roots.append(r)
        cls[i] = root_of[r]
    k = len(roots)
    add = np.zeros((k, k), dtype=np.int16)
    mul = np.zeros((k, k), dtype=np.int16)
    for i, ri in enumerate(roots):
        a, s = pairs[ri]
        for j, rj in enumerate(roots):
            b, u = pairs[rj]
            num = R.a(R.m(a, u), R.m(b, s))
            den = R.m(s, u)
            add[i, j] = cls[index[(num, den)]]
            mul[i, j] = cls[index[(R.m(a, b), den)]]
    labels = tuple(f"{R.labels[pairs[r][0]]}/{R.labels[pairs[r][1]]}" for r in roots)
    gens_text = ",".join(R.labels[g] for g in S.generators)
    return FiniteRing(add, mul, labels=labels, recipe=f"frac({R.recipe}, S<{gens_text}>)")


def ideal_pushforward(L: LocalizationResult, A: Ideal) -> Ideal:
    """Ideal of the localized ring generated by the image of A."""
    if A.ring is not L.map.domain:
        raise TypeMismatch("ideal belongs to a different ring")
    return ideal_generate(L.localized, tuple(L.map.image[g] for g in A.generators))


# -- ideal arithmetic helpers -------------------------------------------------------


def ideal_sum(A: Ideal, B: Ideal) -> Ideal:
    if A.ring is not B.ring:
        raise TypeMismatch("ideals belong to different rings")
    return ideal_from_members(A.ring, _sum_sets(A.ring, A.members, B.members))


def ideal_product(A: Ideal, B: Ideal) -> Ideal:
    """Ideal generated by pairwise products of generators."""
    if A.ring is not B.ring:
        raise TypeMismatch("ideals belong to different rings")
    R = A.ring
    cache = R._cache.setdefault("ideal_products", {})
    key = (A.members, B.members)
    got = cache.get(key)
    if got is not None:
        return got
    ga = A.generators if A.generators else (0,)
    gb = B.generators if B.generators else (0,)
    mul = R.mul
    result = ideal_generate(R, tuple(sorted({int(mul[x, y]) for x in ga for y in gb})))
    cache[key] = result
    cache[(B.members, A.members)] = result
    return result


def ideal_power(A: Ideal, k: int) -> Ideal:
    R = A.ring
    out = ideal_generate(R, (R.one,))
    for _ in range(k):
        out = ideal_product(out, A)
    return out
