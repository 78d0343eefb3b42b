"""Trivial extensions and amalgamations, with the transfer checks they support.

Everything finite is rebuilt as a FiniteRing so the classifiers apply
unchanged.  Amalgamations with an infinite first component are supported
only for the family Z joined to Z_n along an ideal via the canonical
surjection, where the zero-ideal transfer is decidable in closed form and
confirmable on a truncated window.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct
from math import gcd

import numpy as np

from .arith import INT, ArithIdeal, ArithMCS, ArithRing, _factor_candidates, arith_is_S_r_ideal
from .classify import Verdict, is_S_r_ideal
from .config import size_limit
from .errors import (
    InvalidConstruction,
    NotAnIdealError,
    SizeLimitError,
    TypeMismatch,
)
from .ideals import Ideal, MulClosedSet, ideal_from_members, mcs_from_members
from .rings import FiniteRing, RingHom, check_hom, is_isomorphism


# -- finite modules ------------------------------------------------------------------


class FiniteModule:
    """A finite module over a FiniteRing: abelian group plus scalar action."""

    __slots__ = ("ring", "size", "add", "action", "labels", "recipe", "_cache")

    def __init__(self, ring, add, action, labels=None, recipe="?"):
        self.ring = ring
        self.add = np.asarray(add, dtype=np.int16)
        self.action = np.asarray(action, dtype=np.int16)
        self.size = self.add.shape[0]
        self.labels = tuple(labels) if labels is not None else tuple(str(i) for i in range(self.size))
        self.recipe = recipe
        self._cache = {}
        self._validate()

    def _validate(self):
        n = self.size
        idx = np.arange(n, dtype=np.int16)
        t = self.add
        if t.shape != (n, n) or t.min() < 0 or t.max() >= n:
            raise InvalidConstruction("module addition table is not total")
        if not np.array_equal(t, t.T) or not np.array_equal(t[t], t[:, t]):
            raise InvalidConstruction("module addition is not an abelian group")
        if not np.array_equal(t[0], idx) or not (t == 0).any(axis=1).all():
            raise InvalidConstruction("module addition lacks zero or inverses")
        act = self.action
        R = self.ring
        if act.shape != (R.size, n) or act.min() < 0 or act.max() >= n:
            raise InvalidConstruction("scalar action table is not total")
        if not np.array_equal(act[R.one], idx):
            raise InvalidConstruction("1 does not act as identity")
        # (rs)m = r(sm)
        for r in range(R.size):
            for s in range(R.size):
                if not np.array_equal(act[R.mul[r, s]], act[r][act[s]]):
                    raise InvalidConstruction("scalar action is not associative")
        # r(m+n) = rm + rn ; (r+s)m = rm + sm
        if not np.array_equal(act[:, t], t[act[:, :, None], act[:, None, :]]):
            raise InvalidConstruction("action does not distribute over module addition")
        for r in range(R.size):
            for s in range(R.size):
                if not np.array_equal(act[R.add[r, s]], t[act[r], act[s]]):
                    raise InvalidConstruction("action does not distribute over ring addition")

    def m_add(self, x, y):
        return int(self.add[x, y])

    def act(self, r, x):
        return int(self.action[r, x])

    def elements(self):
        return range(self.size)

    def __repr__(self):
        return f"FiniteModule({self.recipe}, size={self.size})"


def make_module_free(R: FiniteRing, k: int) -> FiniteModule:
    """R^k with componentwise addition and scalar action."""
    if k < 0:
        raise InvalidConstruction("rank must be >= 0")
    n = R.size**k
    if n > size_limit():
        raise SizeLimitError("free module beyond the size cap")
    tuples = list(iproduct(range(R.size), repeat=k))
    pos = {t: i for i, t in enumerate(tuples)}
    add = np.zeros((n, n), dtype=np.int16)
    for i, x in enumerate(tuples):
        for j, y in enumerate(tuples):
            add[i, j] = pos[tuple(R.a(a, b) for a, b in zip(x, y))]
    act = np.zeros((R.size, n), dtype=np.int16)
    for r in range(R.size):
        for i, x in enumerate(tuples):
            act[r, i] = pos[tuple(R.m(r, a) for a in x)]
    if k == 1:
        labels = tuple(R.labels[t[0]] for t in tuples)
    else:
        labels = tuple("(" + ",".join(R.labels[a] for a in t) + ")" for t in tuples)
    return FiniteModule(R, add, act, labels=labels, recipe=f"free({k})")


def make_module_quotient(R: FiniteRing, J: Ideal) -> FiniteModule:
    """R/J as a module over R with the induced action."""
    if J.ring is not R:
        raise TypeMismatch("ideal belongs to a different ring")
    members = sorted(J.members)
    coset_of = [None] * R.size
    reps = []
    for a in R.elements():
        if coset_of[a] is not None:
            continue
        idx = len(reps)
        reps.append(a)
        for i in members:
            coset_of[R.a(a, i)] = idx
    n = len(reps)
    add = np.zeros((n, n), dtype=np.int16)
    for i, a in enumerate(reps):
        for j, b in enumerate(reps):
            add[i, j] = coset_of[R.a(a, b)]
    act = np.zeros((R.size, n), dtype=np.int16)
    for r in range(R.size):
        for i, a in enumerate(reps):
            act[r, i] = coset_of[R.m(r, a)]
    gens_text = ",".join(R.labels[g] for g in J.generators) if J.generators else "0"
    labels = tuple(f"{R.labels[a]}+({gens_text})" for a in reps)
    return FiniteModule(R, add, act, labels=labels, recipe=f"quot({gens_text})")


def module_is_torsion_free(M: FiniteModule) -> bool:
    """rm = 0 forces r = 0 or m = 0."""
    for r in range(1, M.ring.size):
        for x in range(1, M.size):
            if M.act(r, x) == 0:
                return False
    return True


def module_ann(M: FiniteModule) -> Ideal:
    """{r : rM = 0}."""
    members = [r for r in M.ring.elements() if all(M.act(r, x) == 0 for x in M.elements())]
    return ideal_from_members(M.ring, members)


def zd_union_inside_module_ann(M: FiniteModule, include_zero: bool = False):
    """Union of Ann(a) over (nonzero) a, compared against Ann(M).

    The literal union over all a includes a = 0, whose annihilator is the
    whole ring; that reading forces M = 0, so the nonzero reading is the
    operative one.  Both are reported.
    """
    R = M.ring
    union = set()
    start = 0 if include_zero else 1
    for a in range(start, R.size):
        union |= {y for y in R.elements() if R.m(y, a) == 0}
    return frozenset(union) <= module_ann(M).members


def submodules(M: FiniteModule):
    """Every submodule, sorted by (cardinality, member tuple)."""
    cached = M._cache.get("submodules")
    if cached is not None:
        return cached

    def orbit_plus(base, x):
        grown = set(base)
        grown |= {M.act(r, x) for r in M.ring.elements()}
        # additive closure
        changed = True
        while changed:
            changed = False
            for a in list(grown):
                for b in list(grown):
                    c = M.m_add(a, b)
                    if c not in grown:
                        grown.add(c)
                        changed = True
        return frozenset(grown)

    seen = {frozenset({0})}
    frontier = [frozenset({0})]
    while frontier:
        base = frontier.pop()
        for x in M.elements():
            if x in base:
                continue
            grown = orbit_plus(base, x)
            if grown not in seen:
                seen.add(grown)
                frontier.append(grown)
    cached = tuple(sorted(seen, key=lambda s: (len(s), tuple(sorted(s)))))
    M._cache["submodules"] = cached
    return cached


# -- trivial extension ----------------------------------------------------------------


@dataclass(frozen=True)
class TrivExtRing:
    base: FiniteRing
    module: FiniteModule
    ring: FiniteRing

    def pair_index(self, r, m) -> int:
        return r * self.module.size + m

    def split_index(self, i):
        return divmod(i, self.module.size)


def make_trivial_extension(R: FiniteRing, M: FiniteModule) -> TrivExtRing:
    """Ring on pairs (r, m) with (w,e)(z,f) = (wz, wf + ze)."""
    if M.ring is not R:
        raise TypeMismatch("module is over a different ring")
    n = R.size * M.size
    if n > size_limit():
        raise SizeLimitError("trivial extension beyond the size cap")
    ms = M.size
    add = np.zeros((n, n), dtype=np.int16)
    mul = np.zeros((n, n), dtype=np.int16)
    for i in range(n):
        r1, m1 = divmod(i, ms)
        for j in range(n):
            r2, m2 = divmod(j, ms)
            add[i, j] = R.a(r1, r2) * ms + M.m_add(m1, m2)
            mul[i, j] = R.m(r1, r2) * ms + M.m_add(M.act(r1, m2), M.act(r2, m1))
    labels = tuple(
        f"({R.labels[i // ms]},{M.labels[i % ms]})" for i in range(n)
    )
    ring = FiniteRing(add, mul, labels=labels, recipe=f"triv({R.recipe}, {M.recipe})")
    ext = TrivExtRing(R, M, ring)
    for m in range(ms):
        i = ext.pair_index(0, m)
        if ring.m(i, i) != 0:
            raise InvalidConstruction("(0, m) failed to square to zero")
    return ext


def triv_ideal(T: TrivExtRing, A: Ideal, N) -> Ideal:
    """A (x) N as an ideal of the extension; requires AM inside N."""
    if A.ring is not T.base:
        raise TypeMismatch("ideal belongs to a different ring")
    N = frozenset(int(x) for x in N)
    M = T.module
    for a in sorted(A.members):
        for m in M.elements():
            if M.act(a, m) not in N:
                raise NotAnIdealError("A*M escapes N", witness=(a, m))
    members = frozenset(T.pair_index(a, x) for a in A.members for x in N)
    return ideal_from_members(T.ring, members)


S_ZERO = "S_ZERO"
S_FULL = "S_FULL"


def lift_mcs_triv(T: TrivExtRing, S: MulClosedSet, mode: str) -> MulClosedSet:
    """Lift S to the extension: pairs (s, 0) or all pairs (s, m)."""
    if S.ring is not T.base:
        raise TypeMismatch("m.c.s. belongs to a different ring")
    if mode == S_ZERO:
        members = {T.pair_index(s, 0) for s in S.members}
    elif mode == S_FULL:
        members = {T.pair_index(s, m) for s in S.members for m in T.module.elements()}
    else:
        raise InvalidConstruction(f"unknown lift mode {mode}")
    return mcs_from_members(T.ring, members, generators=tuple(sorted(members)))


@dataclass(frozen=True)
class TrivEquivalenceReport:
    hypotheses: dict
    pattern: tuple
    verdicts: tuple

    @property
    def hypotheses_met(self) -> bool:
        return (
            self.hypotheses["disjoint"]
            and self.hypotheses["torsion_free"]
            and self.hypotheses["zd_union_in_ann"]
        )

    @property
    def consistent(self) -> bool:
        return len(set(self.pattern)) == 1


def triv_equivalence_check(T: TrivExtRing, A: Ideal, S: MulClosedSet) -> TrivEquivalenceReport:
    """Evaluate the three transfer statements independently.

    1) A is S-r in the base; 2) A (x) M is (S (x) 0)-r; 3) A (x) M is
    (S (x) M)-r.  Under the recorded hypotheses the three verdicts must
    agree; hypothesis failures are reported, never raised.
    """
    hyps = {
        "disjoint": not (S.members & A.members),
        "torsion_free": module_is_torsion_free(T.module),
        "zd_union_in_ann": zd_union_inside_module_ann(T.module),
        "zd_union_in_ann_literal": zd_union_inside_module_ann(T.module, include_zero=True),
    }
    v1 = is_S_r_ideal(A, S)
    big = triv_ideal(T, A, frozenset(T.module.elements()))
    v2 = is_S_r_ideal(big, lift_mcs_triv(T, S, S_ZERO))
    v3 = is_S_r_ideal(big, lift_mcs_triv(T, S, S_FULL))
    return TrivEquivalenceReport(
        hypotheses=hyps,
        pattern=(v1.holds, v2.holds, v3.holds),
        verdicts=(v1, v2, v3),
    )


# -- amalgamation ---------------------------------------------------------------------


@dataclass(frozen=True)
class AmalgRing:
    h1: FiniteRing
    h2: FiniteRing
    f: RingHom
    j: Ideal
    ring: FiniteRing
    carrier: tuple  # pairs (w, y) in index order

    def index_of(self, w, y) -> int:
        return self.ring._cache["amalg_pos"][(w, y)]


def make_amalgamation(H1: FiniteRing, H2: FiniteRing, f: RingHom, J: Ideal, hom_text: str = "hom") -> AmalgRing:
    """Subring {(w, f(w)+j) : w in H1, j in J} of H1 x H2."""
    if f.domain is not H1 or f.codomain is not H2:
        raise TypeMismatch("homomorphism endpoints do not match")
    if J.ring is not H2:
        raise TypeMismatch("ideal must live in the second component")
    check_hom(f)
    n = H1.size * len(J.members)
    if n > size_limit():
        raise SizeLimitError("amalgamation beyond the size cap")
    carrier = sorted({(w, H2.a(f.image[w], j)) for w in H1.elements() for j in sorted(J.members)})
    if len(carrier) != n:
        raise InvalidConstruction("amalgamation carrier size must be |H1| * |J|")
    pos = {p: i for i, p in enumerate(carrier)}
    add = np.zeros((n, n), dtype=np.int16)
    mul = np.zeros((n, n), dtype=np.int16)
    for i, (w1, y1) in enumerate(carrier):
        for j, (w2, y2) in enumerate(carrier):
            add[i, j] = pos[(H1.a(w1, w2), H2.a(y1, y2))]
            mul[i, j] = pos[(H1.m(w1, w2), H2.m(y1, y2))]
    labels = tuple(f"({H1.labels[w]},{H2.labels[y]})" for w, y in carrier)
    gens_text = ",".join(H2.labels[g] for g in J.generators) if J.generators else "0"
    ring = FiniteRing(
        add,
        mul,
        labels=labels,
        recipe=f"amalg({H1.recipe}, {H2.recipe}, {hom_text}, ({gens_text}))",
    )
    ring._cache["amalg_pos"] = pos
    return AmalgRing(H1, H2, f, J, ring, tuple(carrier))


def amalg_ideal(am: AmalgRing, A: Ideal) -> Ideal:
    """A joined along J: {(a, f(a)+j) : a in A, j in J} as an ideal."""
    if A.ring is not am.h1:
        raise TypeMismatch("ideal belongs to a different ring")
    members = {
        am.index_of(a, am.h2.a(am.f.image[a], j)) for a in A.members for j in am.j.members
    }
    return ideal_from_members(am.ring, members)


def amalg_mcs(am: AmalgRing, S: MulClosedSet) -> MulClosedSet:
    if S.ring is not am.h1:
        raise TypeMismatch("m.c.s. belongs to a different ring")
    members = {
        am.index_of(s, am.h2.a(am.f.image[s], j)) for s in S.members for j in am.j.members
    }
    return mcs_from_members(am.ring, members, generators=tuple(sorted(members)))


def is_domain(R: FiniteRing) -> bool:
    """No nonzero zero divisors; the one-element ring does not count."""
    return R.size > 1 and R.zero_divisors == frozenset({0})


FORWARD = "FORWARD"
BACKWARD = "BACKWARD"


@dataclass(frozen=True)
class AmalgTransferReport:
    direction: str
    hypotheses: dict
    base_verdict: Verdict
    ext_verdict: Verdict

    @property
    def hypotheses_met(self) -> bool:
        return all(v for k, v in self.hypotheses.items())

    @property
    def implication_ok(self) -> bool:
        if self.direction == FORWARD:
            return (not self.base_verdict.holds) or self.ext_verdict.holds
        return (not self.ext_verdict.holds) or self.base_verdict.holds


def amalg_transfer_check(am: AmalgRing, A: Ideal, S: MulClosedSet, direction: str) -> AmalgTransferReport:
    """Transfer of the S-r property across the amalgamation, one direction.

    FORWARD (base to extension) needs f surjective, H1 a domain and J inside
    zd(H2); J = 0 counts as satisfying the last condition.  BACKWARD needs f
    to be an isomorphism.
    """
    if direction not in (FORWARD, BACKWARD):
        raise InvalidConstruction(f"unknown direction {direction}")
    surjective = sorted(set(am.f.image)) == list(range(am.h2.size))
    if direction == FORWARD:
        hyps = {
            "epimorphism": surjective,
            "h1_domain": is_domain(am.h1),
            "j_in_zd": am.j.is_zero() or am.j.members <= am.h2.zero_divisors,
        }
    else:
        hyps = {"isomorphism": is_isomorphism(am.f)}
    base = is_S_r_ideal(A, S)
    ext = is_S_r_ideal(amalg_ideal(am, A), amalg_mcs(am, S))
    return AmalgTransferReport(direction, hyps, base, ext)


# -- the Z-amalgamation family ---------------------------------------------------------


@dataclass(frozen=True)
class AmalgOverZ:
    """Z joined to Z_n along J = dZ_n via the canonical surjection.

    Elements are pairs (w, (w + j) mod n) with j a multiple of d.  Only the
    transfer of the zero ideal 0 x J is decided for this family; that is the
    one statement whose hypotheses a finite first component cannot satisfy
    non-degenerately.
    """

    n: int
    d: int

    def __post_init__(self):
        if self.n < 2 or self.n % self.d != 0 or self.d < 2:
            raise InvalidConstruction("need n >= 2 and a divisor d >= 2")

    def j_members(self):
        return tuple(range(0, self.n, self.d))

    def element(self, w, j):
        return (w, (w + j) % self.n)

    def is_regular(self, el) -> bool:
        """(w, y) is regular iff w != 0 and no nonzero member of J kills y."""
        w, y = el
        if w == 0:
            return False
        return all((k * y) % self.n != 0 for k in self.j_members() if k != 0)

    def in_zero_ideal(self, el) -> bool:
        w, y = el
        return w == 0 and y % self.d == 0

    def mul(self, e1, e2):
        return (e1[0] * e2[0], (e1[1] * e2[1]) % self.n)


@dataclass(frozen=True)
class AmalgZReport:
    hypotheses: dict
    base_verdict: Verdict
    ext_holds: bool
    witness: tuple
    window_pairs_checked: int
    window_confirms: bool


def amalgz_zero_transfer_check(az: AmalgOverZ, S_desc, bound: int) -> AmalgZReport:
    """FORWARD transfer for A = (0): decide and window-confirm both sides.

    S_desc is a one-factor m.c.s. descriptor over Z.  The extension side
    0 x J is an (S join J)-r-ideal whenever disjointness holds: a product
    landing in 0 x J with regular first element forces the second element's
    integer coordinate to zero, after which any candidate works.  The window
    oracle re-verifies that reasoning pair by pair.
    """
    zring = ArithRing((INT,))
    S = ArithMCS(zring, (S_desc,))
    zero = ArithIdeal(zring, (0,))
    base = arith_is_S_r_ideal(zero, S)
    hyps = {
        "epimorphism": True,  # canonical surjection Z -> Z_n
        "h1_domain": True,
        "j_in_zd": all(
            k == 0 or gcd(k, az.n) > 1 for k in az.j_members()
        ),
        "disjoint": not S.factor_contains(0, 0),
    }
    s_candidates = _factor_candidates(S, 0, bound)
    s0 = s_candidates[0]
    witness = az.element(s0, 0)
    ext_holds = hyps["disjoint"]
    checked = 0
    confirms = True
    if ext_holds:
        js = az.j_members()
        for w in range(-bound, bound + 1):
            for j1 in js:
                e1 = az.element(w, j1)
                if not az.is_regular(e1):
                    continue
                for z in range(-bound, bound + 1):
                    for j2 in js:
                        e2 = az.element(z, j2)
                        if not az.in_zero_ideal(az.mul(e1, e2)):
                            continue
                        checked += 1
                        if not az.in_zero_ideal(az.mul(witness, e2)):
                            confirms = False
    return AmalgZReport(hyps, base, ext_holds, witness, checked, confirms)
