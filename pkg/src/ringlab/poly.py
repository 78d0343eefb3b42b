"""Bounded-degree polynomial arithmetic over a finite base ring.

Regularity in the full polynomial ring is decided exactly through constant
annihilators (a polynomial is a zero divisor iff a nonzero ring element
kills every coefficient), content ideals support the classical
content-product identity, and the S-r story over the polynomial ring is
decided either through the base-ring gates (finite annihilator condition /
annihilator-of-zero-divisor-ideals) or by a bounded two-sided search.

Polynomial ideal membership is restricted to two decidable shapes: content
ideals (all coefficients in A) and evaluation kernels (f(a) in B).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product as iproduct

import numpy as np

from .classify import Verdict, has_fac, has_property_A, is_S_r_ideal
from .config import DEFAULT_DEGREE, DM_MAX_DEGREE, MAX_DEGREE
from .errors import DegreeLimitError, NotApplicableError, TypeMismatch
from .ideals import (
    Ideal,
    MulClosedSet,
    annihilator,
    ideal_generate,
    ideal_power,
    ideal_product,
)
from .rings import FiniteRing, make_quotient


@dataclass(frozen=True)
class Poly:
    """Coefficients by ascending degree, trailing zeros trimmed; () is 0."""

    base: FiniteRing
    coeffs: tuple

    @staticmethod
    def make(base: FiniteRing, coeffs) -> "Poly":
        cs = [int(c) for c in coeffs]
        for c in cs:
            if not 0 <= c < base.size:
                raise TypeMismatch(f"coefficient {c} out of range")
        while cs and cs[-1] == 0:
            cs.pop()
        return Poly(base, tuple(cs))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1  # -1 for the zero polynomial

    def is_zero(self) -> bool:
        return not self.coeffs

    def text(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            lab = self.base.labels[c]
            if i == 0:
                terms.append(lab)
            else:
                x = "x" if i == 1 else f"x^{i}"
                terms.append(x if c == self.base.one else f"{lab}{x}")
        return "+".join(terms)


def poly_add(f: Poly, g: Poly) -> Poly:
    R = f.base
    n = max(len(f.coeffs), len(g.coeffs))
    out = []
    for i in range(n):
        a = f.coeffs[i] if i < len(f.coeffs) else 0
        b = g.coeffs[i] if i < len(g.coeffs) else 0
        out.append(R.a(a, b))
    return Poly.make(R, out)


def poly_mul(f: Poly, g: Poly) -> Poly:
    R = f.base
    if f.is_zero() or g.is_zero():
        return Poly(R, ())
    deg = f.degree + g.degree
    if deg > MAX_DEGREE:
        raise DegreeLimitError(f"product degree {deg} beyond the cap {MAX_DEGREE}")
    out = [0] * (deg + 1)
    for i, a in enumerate(f.coeffs):
        if a == 0:
            continue
        for j, b in enumerate(g.coeffs):
            out[i + j] = R.a(out[i + j], R.m(a, b))
    return Poly.make(R, out)


def poly_eval(f: Poly, a) -> int:
    R = f.base
    acc = 0
    for c in reversed(f.coeffs):
        acc = R.a(R.m(acc, a), c)
    return int(acc)


def _mul_uncapped(f: Poly, g: Poly) -> Poly:
    # search-internal multiply; the public cap does not apply here
    R = f.base
    if f.is_zero() or g.is_zero():
        return Poly(R, ())
    out = [0] * (f.degree + g.degree + 1)
    for i, a in enumerate(f.coeffs):
        if a == 0:
            continue
        for j, b in enumerate(g.coeffs):
            out[i + j] = R.a(out[i + j], R.m(a, b))
    return Poly.make(R, out)


def constant(base: FiniteRing, c) -> Poly:
    return Poly.make(base, (c,))


def content_set(f: Poly) -> frozenset:
    return frozenset(f.coeffs) if f.coeffs else frozenset({0})


def content_ideal(f: Poly) -> Ideal:
    return ideal_generate(f.base, sorted(content_set(f)))


def mccoy_regular(f: Poly) -> bool:
    """Regular in the full polynomial ring iff Ann(content) = 0.

    A nonzero annihilating polynomial of minimal degree forces a nonzero
    constant annihilator, so the constant test decides regularity at every
    degree, not just up to a bound.
    """
    return annihilator(f.base, content_set(f)).is_zero()


def dedekind_mertens_check(w: Poly, z: Poly) -> bool:
    """c(z)^(m+1) c(w) == c(z)^m c(wz) with m the degree of w."""
    if w.base is not z.base:
        raise TypeMismatch("polynomials over different rings")
    m = max(w.degree, 0)
    cz = content_ideal(z)
    cw = content_ideal(w)
    cwz = content_ideal(poly_mul(w, z))
    zm = ideal_power(cz, m)
    lhs = ideal_product(ideal_product(zm, cz), cw)
    rhs = ideal_product(zm, cwz)
    return lhs.members == rhs.members


def dedekind_mertens_sweep(R: FiniteRing, pairs: int, seed: int, max_degree: int = DM_MAX_DEGREE):
    """Seeded random product-content sweep; returns (checked, first_failure)."""
    rng = random.Random(seed)
    checked = 0
    for _ in range(pairs):
        w = Poly.make(R, [rng.randrange(R.size) for _ in range(max_degree + 1)])
        z = Poly.make(R, [rng.randrange(R.size) for _ in range(max_degree + 1)])
        if not dedekind_mertens_check(w, z):
            return checked, (w, z)
        checked += 1
    return checked, None


# -- polynomial ideal specifications -----------------------------------------------------

CONTENT = "CONTENT"
EVAL_KERNEL = "EVAL_KERNEL"


@dataclass(frozen=True)
class PolyIdealSpec:
    kind: str
    ideal: Ideal  # A for CONTENT, B for EVAL_KERNEL
    point: object = None  # a for EVAL_KERNEL

    @staticmethod
    def content(A: Ideal) -> "PolyIdealSpec":
        return PolyIdealSpec(CONTENT, A)

    @staticmethod
    def eval_kernel(a, B: Ideal) -> "PolyIdealSpec":
        return PolyIdealSpec(EVAL_KERNEL, B, int(a))

    @property
    def base(self) -> FiniteRing:
        return self.ideal.ring

    def contains(self, f: Poly) -> bool:
        if self.kind == CONTENT:
            return content_set(f) <= self.ideal.members
        return poly_eval(f, self.point) in self.ideal.members

    def label(self) -> str:
        if self.kind == CONTENT:
            return f"content{self.ideal.label()}"
        return f"kernel({self.base.labels[self.point]}, {self.ideal.label()})"


# -- verdicts ---------------------------------------------------------------------------

YES_BY_THEOREM = "YES_BY_THEOREM"
NO = "NO"
NO_VIOLATION_UP_TO = "NO_VIOLATION_UP_TO"

GATE_FAC = "fac"
GATE_PROPERTY_A = "property_a"


@dataclass(frozen=True)
class PolyVerdict:
    outcome: str
    gate: str = None
    base_verdict: Verdict = None
    pair: tuple = None  # (w, z) defeating every s
    witness_degree: int = None
    bound: int = None
    discrepancy: bool = False


def _poly_tuples(size: int, max_degree: int):
    """Nonzero coefficient tuples by degree, leading coefficient most significant."""
    for d in range(max_degree + 1):
        if d == 0:
            for c in range(1, size):
                yield (c,)
        else:
            for lead in range(1, size):
                for rest in iproduct(range(size), repeat=d):
                    yield tuple(reversed(rest)) + (lead,)


def _ann_mask_table(R: FiniteRing):
    cached = R._cache.get("ann_masks")
    if cached is None:
        zero = R.mul == 0
        cached = tuple(int(sum(1 << y for y in np.where(zero[:, a])[0])) for a in R.elements())
        R._cache["ann_masks"] = cached
    return cached


def _tuple_regular(R: FiniteRing, coeffs, masks) -> bool:
    acc = (1 << R.size) - 1
    for c in coeffs:
        acc &= masks[c]
        if acc == 1:  # only 0 annihilates
            return True
    return acc == 1


def bounded_S_r_search(spec: PolyIdealSpec, S_const: MulClosedSet, max_degree: int) -> PolyVerdict:
    """Search degree <= max_degree for a pair defeating every constant s.

    A pair (w, z) is a violation when wz lies in the spec, w is regular in
    the full polynomial ring, and sz escapes the spec for every s in S.  The
    enumeration is organized so the verdict equals the plain all-pairs scan:
    for evaluation kernels everything factors through values at the point,
    and for content ideals through coefficient residues modulo A, with
    regularity checked on actual lifts.
    """
    R = spec.base
    if S_const.ring is not R:
        raise TypeMismatch("constant set belongs to a different ring")
    if max_degree > MAX_DEGREE:
        raise DegreeLimitError(f"degree {max_degree} beyond the cap {MAX_DEGREE}")
    masks = _ann_mask_table(R)
    svals = S_const.sorted_members

    if spec.kind == EVAL_KERNEL:
        a, B = spec.point, spec.ideal
        vbad = [v for v in R.elements() if all(R.m(s, v) not in B.members for s in svals)]
        if vbad:
            for coeffs in _poly_tuples(R.size, max_degree):
                if not _tuple_regular(R, coeffs, masks):
                    continue
                w = Poly(R, coeffs)
                u = poly_eval(w, a)
                for v in vbad:
                    if R.m(u, v) in B.members:
                        z = constant(R, v)
                        deg = max(w.degree, z.degree, 0)
                        return PolyVerdict(NO, pair=(w, z), witness_degree=deg, bound=max_degree)
        return PolyVerdict(NO_VIOLATION_UP_TO, bound=max_degree)

    A = spec.ideal
    quotient, proj = _quotient_cached(R, A)
    p = proj.image
    # residue tuples z-bar that escape the spec under every s
    sbar = sorted({int(p[s]) for s in svals})
    qmul = quotient.mul
    for zt in _poly_tuples(quotient.size, max_degree):
        if not all(any(int(qmul[s, c]) != 0 for c in zt) for s in sbar):
            continue
        for wt in _annihilating_vectors(quotient, zt, max_degree + 1):
            found = _regular_lift(R, A, p, wt, masks)
            if found is not None:
                w = Poly.make(R, found)
                z = Poly.make(R, _min_lift(R, p, zt))
                deg = max(w.degree, z.degree, 0)
                return PolyVerdict(NO, pair=(w, z), witness_degree=deg, bound=max_degree)
    return PolyVerdict(NO_VIOLATION_UP_TO, bound=max_degree)


def _quotient_cached(R: FiniteRing, A: Ideal):
    cache = R._cache.setdefault("quotients", {})
    got = cache.get(A.members)
    if got is None:
        got = make_quotient(R, A)
        cache[A.members] = got
    return got


def _all_vectors(Q: FiniteRing, width: int):
    cache = Q._cache.setdefault("coeff_vectors", {})
    got = cache.get(width)
    if got is None:
        got = np.array(list(iproduct(range(Q.size), repeat=width)), dtype=np.intp)
        cache[width] = got
    return got


def _annihilating_vectors(Q: FiniteRing, zt, width: int):
    """Every coefficient vector of fixed width whose product with zt vanishes.

    Trailing zeros are kept: distinct vectors lift to distinct pools of
    polynomials, so padded forms are genuinely different search branches.
    """
    vecs = _all_vectors(Q, width)
    dz = len(zt) - 1
    out = np.zeros((len(vecs), width + dz), dtype=np.intp)
    for j, b in enumerate(zt):
        if b == 0:
            continue
        prod = Q.mul[vecs, b]
        out[:, j : j + width] = Q.add[out[:, j : j + width], prod]
    keep = (out == 0).all(axis=1)
    return [tuple(int(c) for c in v) for v in vecs[keep]]


def _min_lift(R: FiniteRing, p, zt):
    """Index-minimal coefficientwise lift of a residue tuple."""
    lifts = {}
    for a in R.elements():
        lifts.setdefault(int(p[a]), a)
    return [lifts[c] for c in zt]


def _coset_elements(R: FiniteRing, p):
    cosets = {}
    for a in R.elements():
        cosets.setdefault(int(p[a]), []).append(a)
    return cosets


def _regular_lift(R: FiniteRing, A: Ideal, p, wt, masks):
    """Search every coefficientwise lift of w-bar for one regular in R[x]."""
    cosets = _coset_elements(R, p)
    pools = [cosets[c] for c in wt]
    full = (1 << R.size) - 1
    for combo in iproduct(*pools):
        acc = full
        for c in combo:
            acc &= masks[c]
        if acc == 1:
            return combo
    return None


def decide_content_S_r(A: Ideal, S: MulClosedSet, max_degree: int = None) -> PolyVerdict:
    """Is the content ideal A[x] S-r over the polynomial ring?

    Gate order: the finite annihilator condition settles it for any S; the
    zero-divisor-annihilator gate settles it for S inside the regular
    elements; otherwise a bounded search runs at the configured degree.
    A gate verdict of Fails still tries to surface a concrete pair; if the
    bounded search cannot find one the discrepancy is flagged, not hidden.
    """
    R = A.ring
    if S.members & A.members:
        raise NotApplicableError("DISJOINTNESS_VIOLATED")
    D = DEFAULT_DEGREE if max_degree is None else max_degree
    fac = has_fac(R)
    prop_a = has_property_A(R)
    gate = None
    if fac.holds:
        gate = GATE_FAC
    elif prop_a.holds and S.members <= R.regulars:
        gate = GATE_PROPERTY_A
    if gate is None:
        return bounded_S_r_search(PolyIdealSpec.content(A), S, D)
    base = is_S_r_ideal(A, S)
    if base.holds or base.not_applicable:
        return PolyVerdict(YES_BY_THEOREM if base.holds else NO_VIOLATION_UP_TO, gate=gate, base_verdict=base, bound=D)
    search = bounded_S_r_search(PolyIdealSpec.content(A), S, D)
    if search.outcome == NO:
        return PolyVerdict(NO, gate=gate, base_verdict=base, pair=search.pair,
                           witness_degree=search.witness_degree, bound=D)
    return PolyVerdict(NO_VIOLATION_UP_TO, gate=gate, base_verdict=base, bound=D, discrepancy=True)


# -- S-units in the polynomial ring -------------------------------------------------------

S_UNIT_YES = "yes"
S_UNIT_NO_UP_TO = "no_up_to"
S_UNIT_ANALYTIC_NO = "analytic_no"


@dataclass(frozen=True)
class PolySUnitResult:
    kind: str
    witness: Poly = None
    bound: int = None
    obstructions: tuple = ()


def poly_s_unit_check(f: Poly, S_const: MulClosedSet, max_degree: int) -> PolySUnitResult:
    """Does some g of degree <= max_degree make f*g a constant in S?

    With 0 outside S, a zero constant term is an unconditional obstruction
    (the constant term of any product is then 0); roots of f block the same
    way and are reported alongside a bounded-no answer.
    """
    R = f.base
    if S_const.ring is not R:
        raise TypeMismatch("constant set belongs to a different ring")
    zero_in_s = 0 in S_const.members
    if not zero_in_s and not f.is_zero() and f.coeffs[0] == 0:
        return PolySUnitResult(S_UNIT_ANALYTIC_NO)
    if f.is_zero():
        if zero_in_s:
            return PolySUnitResult(S_UNIT_YES, witness=constant(R, 0), bound=max_degree)
        return PolySUnitResult(S_UNIT_ANALYTIC_NO)
    for coeffs in _poly_tuples(R.size, max_degree):
        g = Poly(R, coeffs)
        prod = _mul_uncapped(f, g)
        if prod.degree <= 0 and not prod.is_zero() and prod.coeffs[0] in S_const.members:
            return PolySUnitResult(S_UNIT_YES, witness=g, bound=max_degree)
        if prod.is_zero() and zero_in_s:
            return PolySUnitResult(S_UNIT_YES, witness=g, bound=max_degree)
    obstructions = ()
    if not zero_in_s:
        obstructions = tuple(a for a in R.elements() if poly_eval(f, a) == 0)
    return PolySUnitResult(S_UNIT_NO_UP_TO, bound=max_degree, obstructions=obstructions)
