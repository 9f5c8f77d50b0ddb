"""Centers, centralizers and the transfinite central-series classifier.

Levels of the upper central series are ordinals of the form a*w + b
(w the first limit ordinal).  In rank 2 the classification is exact and
closed-form; in rank 3 the two upper bands are exact while the bottom
band rests on the truncated invariant-layer tower and is reported with
a confidence verdict.
"""

from __future__ import annotations

import enum
import random
from dataclasses import dataclass
from functools import total_ordering

from .autgroup import UniAut, random_aut_rng
from .freealg import NcPoly, abelianize, c_generator
from .invariants import CapViolationError, s_layer_basis, subalgebra_membership
from .verdict import Verdict


@total_ordering
@dataclass(frozen=True)
class OrdinalLevel:
    """The ordinal a*w + b; comparison is lexicographic on (a, b)."""

    omega_coeff: int
    finite_part: int

    def __post_init__(self):
        if self.omega_coeff < 0 or self.finite_part < 0:
            raise ValueError("ordinal parts must be nonnegative")

    @classmethod
    def finite(cls, b):
        return cls(0, b)

    def __lt__(self, other):
        return (self.omega_coeff, self.finite_part) < (other.omega_coeff,
                                                       other.finite_part)

    def is_finite(self):
        return self.omega_coeff == 0

    def __str__(self):
        a, b = self.omega_coeff, self.finite_part
        if a == 0:
            return str(b)
        head = "w" if a == 1 else f"{a}w"
        return f"{head}+{b}" if b else head

    @classmethod
    def parse(cls, text):
        text = text.strip()
        if "w" not in text:
            return cls(0, int(text))
        head, _, tail = text.partition("w")
        a = int(head) if head else 1
        b = int(tail.lstrip("+")) if tail else 0
        return cls(a, b)


class CentralizerClass(enum.Enum):
    WHOLE_GROUP = "whole-group"
    FIRST_ROW = "first-row"
    CONSTANT_PAIRS = "constant-pairs"
    GENERIC = "generic"


def commutes(phi, psi):
    """Brute-force oracle: both composition orders agree."""
    return phi.compose(psi) == psi.compose(phi)


def _require_rank(phi, rank):
    if phi.rank != rank:
        raise ValueError(f"expected rank {rank}, got {phi.rank}")


def u2_center_test(phi):
    """Rank-2 centrality: constant first offset, zero second offset."""
    _require_rank(phi, 2)
    f1, f2 = phi.offsets
    return f2.is_zero() and f1.degree() <= 0


def u2_centralizer_classify(phi):
    """Shape of the rank-2 centralizer of phi.

    Central elements (including the identity) commute with everything.
    A pure first-row element (x + f(y), y) with nonconstant f commutes
    exactly with the first row; a pure translation (x, y + b), b != 0,
    exactly with the constant pairs (x + a, y + c).  The mixed shape has
    no closed form here and is classified generic.
    """
    _require_rank(phi, 2)
    f1, f2 = phi.offsets
    if u2_center_test(phi):
        return CentralizerClass.WHOLE_GROUP
    if f2.is_zero():
        return CentralizerClass.FIRST_ROW
    if f1.is_zero():
        return CentralizerClass.CONSTANT_PAIRS
    return CentralizerClass.GENERIC


def u2_hypercenter_level(phi):
    """Least level of the rank-2 upper central series containing phi.

    Level 0 is the trivial subgroup, level s+1 holds the (x + f(y), y)
    with deg f <= s, and anything moving y appears only at level w+1,
    where the series exhausts the group.
    """
    _require_rank(phi, 2)
    f1, f2 = phi.offsets
    if phi.is_identity():
        return OrdinalLevel(0, 0)
    if f2.is_zero():
        return OrdinalLevel(0, max(int(f1.degree()), 0) + 1)
    return OrdinalLevel(1, 1)


def un_center_test(phi, cfg):
    """Centrality test for rank >= 3.

    Central elements move only x1, by an offset fixed under every
    substitution of the higher variables.  A wrong shape or a sampled
    substitution that moves the offset yields a certain failure with a
    witness; an exact certificate (offset in the span of products of the
    c generators in the last two variables) yields holds; otherwise the
    sampled trials pass only probabilistically.
    """
    n = phi.rank
    if n < 3:
        raise ValueError("rank must be >= 3")
    for i in range(2, n + 1):
        if not phi.offsets[i - 1].is_zero():
            offs = [NcPoly.zero(n)] * n
            offs[0] = NcPoly.variable(i, n)
            return Verdict.fails(UniAut(n, offs))
    f1 = phi.offsets[0]
    if f1.degree() <= 0:
        return Verdict.holds()
    gens = [c_generator(k, n - 1, n, rank=n)
            for k in range(1, max(int(f1.degree()), 2))]
    if subalgebra_membership(f1, gens) is not None:
        return Verdict.holds()
    rng = random.Random(cfg.seed)
    for _ in range(cfg.trials):
        psi = random_aut_rng(rng, n, cfg.subst_degree, cfg.height, first_zero=True)
        if psi.is_identity():
            continue
        if psi.apply(f1) != f1:
            return Verdict.fails(psi)
    return Verdict.probably_holds(cfg.trials)


def u3_hypercenter_level_truncated(phi, cap, cfg, max_level=None):
    """Classify a rank-3 automorphism in the transfinite central series.

    The two upper bands are exact: moving x3 puts the element only at the
    top level 3w+1, and a nonzero x2-offset of degree d lands at
    2w + max(d, 1) (a constant offset cannot sit at a limit level, and
    the finite band above 2w starts at 1).  An element moving only x1 is
    placed at the least finite m with its offset inside the computed
    order-m layer; when no m up to `max_level` certifies membership, the
    smallest band consistent with the abelianized image is reported
    instead, never asserted.
    """
    _require_rank(phi, 3)
    f1, f2, f3 = phi.offsets
    if not f3.is_zero():
        return OrdinalLevel(3, 1), Verdict.holds()
    if not f2.is_zero():
        return OrdinalLevel(2, max(int(f2.degree()), 1)), Verdict.holds()
    if f1.is_zero():
        return OrdinalLevel(0, 0), Verdict.holds()
    deg = int(f1.degree())
    if deg > cap:
        raise CapViolationError(f"degree {deg} exceeds cap {cap}")
    bound = max_level if max_level is not None else cap
    x2_weight = abelianize(f1).degree_in_var(2)
    if x2_weight <= 0:
        for m in range(1, bound + 1):
            layer = s_layer_basis(m, max(deg, 1), cfg)
            if layer.contains(f1):
                if m == 1:
                    gens = [c_generator(k, 2, 3, rank=3)
                            for k in range(1, max(deg, 2))]
                    if f1.degree() <= 0 or subalgebra_membership(f1, gens) is not None:
                        return OrdinalLevel(0, 1), Verdict.holds()
                return OrdinalLevel(0, m), layer.verdict
        return OrdinalLevel(1, 1), Verdict.probably_holds(cfg.trials)
    # an x2-degree-t abelianized image is compatible with the band w+(t+1)
    # and nothing below it
    return OrdinalLevel(1, int(x2_weight) + 1), Verdict.probably_holds(cfg.trials)
