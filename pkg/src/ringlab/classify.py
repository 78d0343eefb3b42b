"""Ideal and ring predicates decided by exhaustive scan over finite rings.

Every predicate returns a Verdict.  Hypothesis violations (properness,
disjointness, reducedness) yield NotApplicable, never Fails: a theorem is
not contradicted by an input that does not meet its hypotheses.

The S-indexed predicates use the uniform-witness quantifier order: one
single s in S must work for every pair (w, z).  A per-pair variant is
available behind the ``per_pair`` flag for exploratory contrast; it is not
the standard reading and no registry check uses it.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .config import FAC_SUBSET_CAP
from .ideals import Ideal, MulClosedSet, all_ideals, annihilator, ideal_generate, principal_members

HOLDS = "Holds"
FAILS = "Fails"
NOT_APPLICABLE = "NotApplicable"

NOT_PROPER = "NOT_PROPER"
DISJOINTNESS_VIOLATED = "DISJOINTNESS_VIOLATED"
NOT_REDUCED = "NOT_REDUCED"
GENERATOR_GATE = "GENERATOR_GATE"
PER_PAIR_MODE = "PER_PAIR_MODE"


@dataclass(frozen=True)
class Verdict:
    outcome: str
    witness: object = None
    counterexample: tuple = None
    reason: str = None
    last_candidate: object = None

    @property
    def holds(self) -> bool:
        return self.outcome == HOLDS

    @property
    def fails(self) -> bool:
        return self.outcome == FAILS

    @property
    def not_applicable(self) -> bool:
        return self.outcome == NOT_APPLICABLE

    def to_json(self, ring=None) -> dict:
        def lab(x):
            if x is None:
                return None
            if isinstance(x, tuple):
                return [lab(v) for v in x]
            return ring.labels[int(x)] if ring is not None else int(x)

        out = {"outcome": self.outcome}
        out["witness"] = lab(self.witness)
        out["counterexample"] = lab(self.counterexample) if self.counterexample is not None else None
        out["reason"] = self.reason
        return out


def _holds(witness=None):
    return Verdict(HOLDS, witness=witness)


def _fails(counterexample, last_candidate=None):
    return Verdict(FAILS, counterexample=counterexample, last_candidate=last_candidate)


def _na(reason):
    return Verdict(NOT_APPLICABLE, reason=reason)


def _member_mask(R, members):
    mask = np.zeros(R.size, dtype=bool)
    mask[list(members)] = True
    return mask


def _regular_rows(R, mask):
    """rows: regular w ascending; entry [i, z] = (w_i * z in members)."""
    regs = np.fromiter(sorted(R.regulars), dtype=np.intp)
    return regs, mask[R.mul[regs, :]]


# -- r- and pr-ideals ---------------------------------------------------------------


def is_r_ideal(A: Ideal) -> Verdict:
    """wz in A with Ann(w) = 0 forces z in A."""
    if not A.is_proper():
        return _na(NOT_PROPER)
    R = A.ring
    mask = _member_mask(R, A.members)
    regs, prod_in = _regular_rows(R, mask)
    viol = prod_in & ~mask[None, :]
    hits = np.argwhere(viol)
    if len(hits):
        i, z = hits[0]
        return _fails((int(regs[i]), int(z)))
    return _holds()


def _power_reaches(R, A_members, z) -> bool:
    seen = set()
    cur = int(z)
    while cur not in seen:
        if cur in A_members:
            return True
        seen.add(cur)
        cur = R.m(cur, z)
    return False


def is_pr_ideal(A: Ideal) -> Verdict:
    """wz in A with Ann(w) = 0 forces z^n in A for some n."""
    if not A.is_proper():
        return _na(NOT_PROPER)
    R = A.ring
    mask = _member_mask(R, A.members)
    regs, prod_in = _regular_rows(R, mask)
    power_ok = np.fromiter((_power_reaches(R, A.members, z) for z in R.elements()), dtype=bool)
    viol = prod_in & ~power_ok[None, :]
    hits = np.argwhere(viol)
    if len(hits):
        i, z = hits[0]
        return _fails((int(regs[i]), int(z)))
    return _holds()


# -- S-indexed predicates -------------------------------------------------------------


def is_S_r_ideal(
    A: Ideal,
    S: MulClosedSet,
    enforce_proper: bool = True,
    enforce_disjoint: bool = True,
    per_pair: bool = False,
) -> Verdict:
    """Some uniform s in S with: wz in A and Ann(w) = 0 imply sz in A.

    Holds reports the smallest such s.  Fails reports the pair that defeats
    the last candidate examined, with that candidate in ``last_candidate``.
    """
    R = A.ring
    if enforce_proper and not A.is_proper():
        return _na(NOT_PROPER)
    if enforce_disjoint and (S.members & A.members):
        return _na(DISJOINTNESS_VIOLATED)
    mask = _member_mask(R, A.members)
    regs, prod_in = _regular_rows(R, mask)
    cands = S.sorted_members
    if per_pair:
        covered = np.zeros(R.size, dtype=bool)
        for s in cands:
            covered |= mask[R.mul[s, :]]
        viol = prod_in & ~covered[None, :]
        hits = np.argwhere(viol)
        if len(hits):
            i, z = hits[0]
            return _fails((int(regs[i]), int(z)), last_candidate=cands[-1])
        return Verdict(HOLDS, reason=PER_PAIR_MODE)
    last_pair = None
    for s in cands:
        sz_in = mask[R.mul[s, :]]
        viol = prod_in & ~sz_in[None, :]
        hits = np.argwhere(viol)
        if not len(hits):
            return _holds(witness=int(s))
        i, z = hits[0]
        last_pair = (int(regs[i]), int(z))
    return _fails(last_pair, last_candidate=cands[-1])


def is_S_prime(
    A: Ideal,
    S: MulClosedSet,
    enforce_proper: bool = True,
    enforce_disjoint: bool = True,
) -> Verdict:
    """Some uniform s in S with: wz in A implies sw in A or sz in A."""
    R = A.ring
    if enforce_proper and not A.is_proper():
        return _na(NOT_PROPER)
    if enforce_disjoint and (S.members & A.members):
        return _na(DISJOINTNESS_VIOLATED)
    mask = _member_mask(R, A.members)
    prod_in = mask[R.mul]
    cands = S.sorted_members
    last_pair = None
    for s in cands:
        s_in = mask[R.mul[s, :]]
        viol = prod_in & ~s_in[:, None] & ~s_in[None, :]
        hits = np.argwhere(viol)
        if not len(hits):
            return _holds(witness=int(s))
        w, z = hits[0]
        last_pair = (int(w), int(z))
    return _fails(last_pair, last_candidate=cands[-1])


# -- z0-ideals -------------------------------------------------------------------------


def _ann_classes(R):
    """Elements grouped by annihilator set."""
    cached = R._cache.get("ann_classes")
    if cached is None:
        groups = {}
        zero_cols = R.mul == 0
        for a in R.elements():
            key = zero_cols[:, a].tobytes()
            groups.setdefault(key, []).append(a)
        cached = tuple(tuple(g) for g in groups.values())
        R._cache["ann_classes"] = cached
    return cached


def is_z0_ideal(A: Ideal, enforce_reduced: bool = True) -> Verdict:
    """In a reduced ring: w in A and Ann(w) = Ann(z) force z in A."""
    R = A.ring
    if enforce_reduced and not R.is_reduced():
        return _na(NOT_REDUCED)
    for cls in _ann_classes(R):
        inside = [a for a in cls if a in A.members]
        if inside and len(inside) != len(cls):
            w = inside[0]
            z = next(a for a in cls if a not in A.members)
            return _fails((w, z))
    return _holds()


def is_S_z0_ideal(
    A: Ideal,
    S: MulClosedSet,
    enforce_reduced: bool = True,
    enforce_disjoint: bool = True,
) -> Verdict:
    """Uniform s with: w in A and Ann(w) = Ann(z) imply sz in A."""
    R = A.ring
    if enforce_reduced and not R.is_reduced():
        return _na(NOT_REDUCED)
    if enforce_disjoint and (S.members & A.members):
        return _na(DISJOINTNESS_VIOLATED)
    classes = [cls for cls in _ann_classes(R) if any(a in A.members for a in cls)]
    cands = S.sorted_members
    last_pair = None
    for s in cands:
        bad = None
        for cls in classes:
            w = next(a for a in cls if a in A.members)
            z = next((a for a in cls if R.m(s, a) not in A.members), None)
            if z is not None:
                bad = (w, z)
                break
        if bad is None:
            return _holds(witness=int(s))
        last_pair = bad
    return _fails(last_pair, last_candidate=cands[-1])


# -- ring-level predicates ---------------------------------------------------------------


def is_uz_ring(R) -> Verdict:
    """Every element is a unit or a zero divisor."""
    for a in R.elements():
        if a not in R.units and a not in R.zero_divisors:
            return _fails((a,))
    return _holds()


def is_S_uz_ring(R, S: MulClosedSet) -> Verdict:
    """Every element is an S-unit or a zero divisor."""
    for a in R.elements():
        if a in R.zero_divisors:
            continue
        if not (principal_members(R, a) & S.members):
            return _fails((a,))
    return _holds()


def has_property_A(R) -> Verdict:
    """Every (finitely generated) ideal inside zd(R) has nonzero annihilator."""
    for B in all_ideals(R):
        if B.members <= R.zero_divisors and annihilator(R, B.members).is_zero():
            return _fails(B.generators)
    return _holds()


def has_ac(R) -> Verdict:
    """Every ideal's annihilator equals the annihilator of a single element."""
    single = [annihilator(R, (z,)).members for z in R.elements()]
    for A in all_ideals(R):
        target = annihilator(R, A.members).members
        if not any(target == s for s in single):
            return _fails(A.generators)
    return _holds()


def has_fac(R, cap: int = None) -> Verdict:
    """Finite annihilator condition on subsets of size <= cap (default 3).

    For every nonempty T of bounded size some w in T must satisfy
    Ann(T) = Ann(w).  The cap is a documented sweep bound, not part of the
    condition itself.
    """
    cap = FAC_SUBSET_CAP if cap is None else cap
    zero_cols = R.mul == 0
    masks = [zero_cols[:, a] for a in R.elements()]
    for size in range(2, cap + 1):
        for T in combinations(R.elements(), size):
            joint = masks[T[0]].copy()
            for t in T[1:]:
                joint &= masks[t]
            if not any(np.array_equal(joint, masks[t]) for t in T):
                return _fails(tuple(T))
    return _holds()


def s_idempotent_ideal_check(R, S: MulClosedSet, gens) -> Verdict:
    """Ideal spanned by elements with a^2 = sa (s = product of S) must be S-r.

    Generators failing the gate make the check NotApplicable rather than a
    counterexample; a Fails outcome here flags a genuine bug.
    """
    s = R.one
    for x in S.sorted_members:
        s = R.m(s, x)
    gens = tuple(int(g) for g in gens)
    for g in gens:
        if R.m(g, g) != R.m(s, g):
            return _na(GENERATOR_GATE)
    A = ideal_generate(R, gens)
    if S.members & A.members:
        return _na(DISJOINTNESS_VIOLATED)
    return is_S_r_ideal(A, S)
