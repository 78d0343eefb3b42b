"""Finite commutative rings with exhaustively validated operation tables.

Elements are the indices 0..N-1; index 0 is always the additive identity.
Every constructor runs the full ring-axiom scan (commutativity and
associativity over all pairs/triples, distributivity, identities, additive
inverses) before returning, so holding a FiniteRing object is evidence that
its tables really describe a commutative ring with identity.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .config import size_limit
from .errors import (
    ConstructionBug,
    InvalidConstruction,
    NotAHomomorphism,
    NotApplicableError,
    SizeLimitError,
    TypeMismatch,
)


class FiniteRing:
    """A finite commutative ring with identity, given by total op tables."""

    __slots__ = (
        "size",
        "add",
        "mul",
        "neg",
        "zero",
        "one",
        "labels",
        "recipe",
        "parts",
        "units",
        "regulars",
        "zero_divisors",
        "_cache",
    )

    def __init__(self, add, mul, labels=None, recipe="?", parts=None):
        add = np.asarray(add, dtype=np.int16)
        mul = np.asarray(mul, dtype=np.int16)
        n = add.shape[0]
        if n < 1:
            raise InvalidConstruction("a ring needs at least one element")
        if n > size_limit():
            raise SizeLimitError(f"{n} elements exceeds the cap {size_limit()}")
        self.size = n
        self.add = add
        self.mul = mul
        self.recipe = recipe
        self.parts = parts
        self.labels = tuple(labels) if labels is not None else tuple(str(i) for i in range(n))
        if len(self.labels) != n:
            raise InvalidConstruction("label count does not match ring size")
        self._validate()
        self.zero = 0
        self.neg = tuple(int(np.where(add[a] == 0)[0][0]) for a in range(n))
        self._partition()
        self._cache = {}
        for t in (self.add, self.mul):
            t.setflags(write=False)

    # -- construction-time checks -------------------------------------------------

    def _validate(self):
        n = self.size
        idx = np.arange(n, dtype=np.int16)
        for name, t in (("add", self.add), ("mul", self.mul)):
            if t.shape != (n, n):
                raise InvalidConstruction(f"{name} table is not {n}x{n}")
            if t.min() < 0 or t.max() >= n:
                raise InvalidConstruction(f"{name} table is not total")
            if not np.array_equal(t, t.T):
                raise InvalidConstruction(f"{name} is not commutative")
            # t[t][a,b,c] == t[t[a,b],c]; t[:, t][a,b,c] == t[a, t[b,c]]
            if not np.array_equal(t[t], t[:, t]):
                raise InvalidConstruction(f"{name} is not associative")
        if not np.array_equal(self.add[0], idx):
            raise InvalidConstruction("element 0 is not the additive identity")
        if not (self.add == 0).any(axis=1).all():
            raise InvalidConstruction("some element has no additive inverse")
        lhs = self.mul[:, self.add]
        rhs = self.add[self.mul[:, :, None], self.mul[:, None, :]]
        if not np.array_equal(lhs, rhs):
            raise InvalidConstruction("multiplication does not distribute over addition")
        ones = np.where((self.mul == idx[None, :]).all(axis=1))[0]
        if len(ones) == 0:
            raise InvalidConstruction("no multiplicative identity")
        self.one = int(ones[0])

    def _partition(self):
        n = self.size
        m = self.mul
        units = np.where((m == self.one).any(axis=1))[0]
        # ya = 0 for some y != 0  <=>  column a of mul[1:] contains 0
        zd_mask = (m[1:, :] == 0).any(axis=0) if n > 1 else np.zeros(1, dtype=bool)
        self.units = frozenset(int(a) for a in units)
        self.zero_divisors = frozenset(int(a) for a in np.where(zd_mask)[0])
        self.regulars = frozenset(range(n)) - self.zero_divisors
        if self.regulars != self.units:
            raise ConstructionBug("regular elements differ from units in a finite ring")

    # -- scalar helpers ------------------------------------------------------------

    def a(self, x, y):
        return int(self.add[x, y])

    def m(self, x, y):
        return int(self.mul[x, y])

    def label(self, x):
        return self.labels[x]

    def elements(self):
        return range(self.size)

    def is_reduced(self) -> bool:
        """No nonzero nilpotents; it suffices to check squares."""
        cached = self._cache.get("reduced")
        if cached is None:
            sq = self.mul[np.arange(self.size), np.arange(self.size)]
            cached = bool((sq[1:] != 0).all()) if self.size > 1 else True
            self._cache["reduced"] = cached
        return cached

    def idempotents(self):
        cached = self._cache.get("idempotents")
        if cached is None:
            ar = np.arange(self.size)
            cached = tuple(int(a) for a in np.where(self.mul[ar, ar] == ar)[0])
            self._cache["idempotents"] = cached
        return cached

    def __repr__(self):
        return f"FiniteRing({self.recipe}, size={self.size})"


def element_partition(R: FiniteRing):
    """(units, regulars, zero divisors); the first two coincide, 0 counts as zd."""
    return R.units, R.regulars, R.zero_divisors


def idempotent_power(R: FiniteRing, t: int):
    """Smallest k >= 1 with t^k idempotent; returns (t^k, k)."""
    p = int(t)
    k = 1
    while R.m(p, p) != p:
        p = R.m(p, t)
        k += 1
        if k > R.size + 1:
            raise ConstructionBug("power sequence failed to reach an idempotent")
    return p, k


# -- constructors -----------------------------------------------------------------


def make_zn(n: int) -> FiniteRing:
    """The ring of integers modulo n."""
    if n < 1:
        raise InvalidConstruction("Z_n needs n >= 1")
    idx = np.arange(n)
    add = np.mod(np.add.outer(idx, idx), n)
    mul = np.mod(np.multiply.outer(idx, idx), n)
    return FiniteRing(add, mul, recipe=f"Z{n}")


def make_product(R1: FiniteRing, R2: FiniteRing) -> FiniteRing:
    """Componentwise ring on pairs; index (i, j) -> i*|R2| + j."""
    n1, n2 = R1.size, R2.size
    if n1 * n2 > size_limit():
        raise SizeLimitError(f"product size {n1 * n2} exceeds the cap")
    a1 = R1.add.astype(np.int32)
    a2 = R2.add.astype(np.int32)
    m1 = R1.mul.astype(np.int32)
    m2 = R2.mul.astype(np.int32)
    add = (a1[:, None, :, None] * n2 + a2[None, :, None, :]).reshape(n1 * n2, n1 * n2)
    mul = (m1[:, None, :, None] * n2 + m2[None, :, None, :]).reshape(n1 * n2, n1 * n2)
    labels = tuple(f"({R1.labels[i]},{R2.labels[j]})" for i in range(n1) for j in range(n2))
    r1 = f"({R1.recipe})" if " x " in R1.recipe else R1.recipe
    return FiniteRing(add, mul, labels=labels, recipe=f"{r1} x {R2.recipe}", parts=(R1, R2))


def _check_ideal_subset(R: FiniteRing, members) -> None:
    mem = frozenset(int(x) for x in members)
    if 0 not in mem:
        raise TypeMismatch("not an ideal: 0 missing")
    for x in mem:
        for y in mem:
            if R.a(x, y) not in mem:
                raise TypeMismatch("not an ideal: not closed under addition")
    for r in R.elements():
        for x in mem:
            if R.m(r, x) not in mem:
                raise TypeMismatch("not an ideal: not closed under ring multiplication")


def make_quotient(R: FiniteRing, ideal):
    """R / I as a coset ring, together with the canonical projection.

    Coset representatives are the minimal member of each coset, so the zero
    coset sits at index 0.  The projection is returned as a verified RingHom
    whose kernel is checked to be exactly the input ideal.
    """
    if ideal.ring is not R:
        raise TypeMismatch("ideal belongs to a different ring")
    _check_ideal_subset(R, ideal.members)
    members = sorted(ideal.members)
    coset_of = [None] * R.size
    reps = []
    for a in R.elements():
        if coset_of[a] is not None:
            continue
        idx = len(reps)
        reps.append(a)
        for i in members:
            coset_of[R.a(a, i)] = idx
    k = len(reps)
    add = np.zeros((k, k), dtype=np.int16)
    mul = np.zeros((k, k), dtype=np.int16)
    for i, a in enumerate(reps):
        for j, b in enumerate(reps):
            add[i, j] = coset_of[R.a(a, b)]
            mul[i, j] = coset_of[R.m(a, b)]
    gens_text = ",".join(R.labels[g] for g in ideal.generators) if ideal.generators else "0"
    labels = tuple(f"{R.labels[r]}+({gens_text})" for r in reps)
    base = f"({R.recipe})" if " x " in R.recipe else R.recipe
    quotient = FiniteRing(add, mul, labels=labels, recipe=f"{base}/({gens_text})")
    proj = check_hom(RingHom(R, quotient, tuple(coset_of)))
    kernel = frozenset(a for a in R.elements() if coset_of[a] == 0)
    if kernel != ideal.members:
        raise ConstructionBug("projection kernel differs from the quotient ideal")
    return quotient, proj


# -- ring homomorphisms -----------------------------------------------------------


@dataclass(frozen=True)
class RingHom:
    domain: FiniteRing
    codomain: FiniteRing
    image: tuple

    def __call__(self, x):
        return self.image[x]


def check_hom(h: RingHom) -> RingHom:
    """Validate the homomorphism laws exhaustively; return h unchanged."""
    if len(h.image) != h.domain.size:
        raise NotAHomomorphism("one", (len(h.image), h.domain.size))
    img = np.asarray(h.image, dtype=np.int32)
    if img.min() < 0 or img.max() >= h.codomain.size:
        raise NotAHomomorphism("one", (int(img.min()), int(img.max())))
    if int(img[h.domain.one]) != h.codomain.one:
        raise NotAHomomorphism("one", (h.domain.one, int(img[h.domain.one])))
    for law, t1, t2 in (("add", h.domain.add, h.codomain.add), ("mul", h.domain.mul, h.codomain.mul)):
        lhs = img[t1]
        rhs = t2[img[:, None], img[None, :]]
        if not np.array_equal(lhs, rhs):
            a, b = np.argwhere(lhs != rhs)[0]
            raise NotAHomomorphism(law, (int(a), int(b)))
    return h


def is_isomorphism(h: RingHom) -> bool:
    if h.domain.size != h.codomain.size:
        return False
    try:
        check_hom(h)
    except NotAHomomorphism:
        return False
    return sorted(h.image) == list(range(h.codomain.size))


def identity_hom(R: FiniteRing) -> RingHom:
    return check_hom(RingHom(R, R, tuple(range(R.size))))


def crt_hom(n: int, a: int, b: int):
    """Z_n -> Z_a x Z_b by reduction; an isomorphism iff n = ab with gcd 1."""
    zn = make_zn(n)
    prod = make_product(make_zn(a), make_zn(b))
    image = tuple((x % a) * b + (x % b) for x in range(n))
    return check_hom(RingHom(zn, prod, image))


def _ann_set(R: FiniteRing, w) -> frozenset:
    col = R.mul[:, w]
    return frozenset(int(y) for y in np.where(col == 0)[0])


def ann_pushforward_check(h: RingHom, w: int) -> bool:
    """Does the image of Ann(w) equal Ann(h(w))?  Requires an isomorphism."""
    if not is_isomorphism(h):
        raise NotApplicableError("annihilator transport needs an isomorphism")
    pushed = frozenset(int(h.image[y]) for y in _ann_set(h.domain, w))
    return pushed == _ann_set(h.codomain, int(h.image[w]))


# -- isomorphism search -----------------------------------------------------------


def _additive_order(R: FiniteRing, a: int) -> int:
    k, cur = 1, a
    while cur != 0:
        cur = R.a(cur, a)
        k += 1
    return k


def element_invariant(R: FiniteRing, a: int):
    """Cheap iso-invariant fingerprint of a single element."""
    col = R.mul[:, a]
    ann = int((col == 0).sum())
    sq = R.m(a, a)
    e, k = idempotent_power(R, a)
    return (
        _additive_order(R, a),
        a in R.units,
        sq == a,
        e == 0,  # nilpotent iff the eventual idempotent is 0
        k,
        ann,
    )


def fingerprint(R: FiniteRing):
    """(size, unit count, idempotent count, characteristic)."""
    return (R.size, len(R.units), len(R.idempotents()), _additive_order(R, R.one))


def find_isomorphism(R1: FiniteRing, R2: FiniteRing):
    """Exhaustive backtracking search for a ring isomorphism R1 -> R2.

    Returns the image tuple or None.  Assignments are propagated through
    both operation tables, so most of the map is forced once a generator
    image is chosen; candidates are pruned by element invariants.
    """
    n = R1.size
    if R2.size != n:
        return None
    inv1 = [element_invariant(R1, a) for a in range(n)]
    inv2 = [element_invariant(R2, a) for a in range(n)]
    if sorted(inv1) != sorted(inv2):
        return None
    cands = {a: [b for b in range(n) if inv2[b] == inv1[a]] for a in range(n)}
    fwd = [None] * n
    rev = [None] * n

    def assign(x, y, trail):
        stack = [(x, y)]
        while stack:
            x, y = stack.pop()
            if fwd[x] is not None:
                if fwd[x] != y:
                    return False
                continue
            if rev[y] is not None or inv1[x] != inv2[y]:
                return False
            fwd[x] = y
            rev[y] = x
            trail.append((x, y))
            for a in range(n):
                fa = fwd[a]
                if fa is None:
                    continue
                stack.append((R1.a(x, a), R2.a(y, fa)))
                stack.append((R1.m(x, a), R2.m(y, fa)))
        return True

    def undo(trail, mark):
        while len(trail) > mark:
            x, y = trail.pop()
            fwd[x] = None
            rev[y] = None

    trail = []
    if not assign(0, 0, trail) or not assign(R1.one, R2.one, trail):
        return None

    def solve():
        x = next((i for i in range(n) if fwd[i] is None), None)
        if x is None:
            return True
        for y in cands[x]:
            if rev[y] is not None:
                continue
            mark = len(trail)
            if assign(x, y, trail) and solve():
                return True
            undo(trail, mark)
        return False

    return tuple(fwd) if solve() else None


def isomorphic(R1: FiniteRing, R2: FiniteRing) -> bool:
    return find_isomorphism(R1, R2) is not None
