"""The shift-invariant subalgebra of Q<x2, x3> and its layer tower.

Everything here lives in the rank-3 algebra and uses only x2 and x3.
The acting group is the rank-2 family of substitutions
x2 -> x2 + g(x3), x3 -> x3 + h with g a polynomial in x3 and h a scalar.
Layer 1 of the tower is the algebra of fixed elements; layer m+1 holds
the elements whose defect under every such substitution falls into
layer m.

Quantifying over all substitutions is not finitely checkable, so the
computed layers are truncations: they enforce shifts of degree up to
PitConfig.subst_degree and are reported with a probabilistic verdict.
Over Q the substitution family is generated by one-parameter subgroups,
and in characteristic zero a polynomial is fixed by the subgroup for
x2 -> x2 + t*x3^j exactly when the derivation sending x2 to x3^j kills
it (the orbit map is a polynomial exponential of that derivation, and
the linear coefficient must vanish).  The tower is therefore computed
exactly, one bidegree slice at a time, from those derivation kernels:
this is the stabilized form of the sampled-defect kernel, and every
reported basis vector is re-verified against fresh random substitutions
afterwards.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .autgroup import UniAut, VariableLeakError
from .freealg import (
    NcPoly,
    RankMismatchError,
    abelianize,
    c_generator,
    format_poly,
    grlex_key,
    ring_commutator,
)
from .linalg import Echelon, nullspace
from .verdict import Verdict

AMBIENT_RANK = 3


class CapViolationError(ValueError):
    """A degree cap was exceeded or a working cap is too small."""


class NonHomogeneousGeneratorError(ValueError):
    """Subalgebra generators must be homogeneous of degree >= 1."""


@dataclass(frozen=True)
class PitConfig:
    """Knobs for randomized invariance checking.

    working_cap bounds the degrees that intermediate computations may
    visit; it must be at least cap * subst_degree for a degree-cap space
    (substituting x2 -> x2 + g raises degree by up to a factor of
    subst_degree).  None means "as large as needed".
    """

    seed: int = 0
    trials: int = 20
    subst_degree: int = 2
    height: int = 10
    working_cap: int | None = None

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        if self.subst_degree < 1:
            raise ValueError("subst_degree must be >= 1")
        if self.height < 1:
            raise ValueError("height must be >= 1")

    def working_cap_for(self, cap):
        need = cap * self.subst_degree
        if self.working_cap is None:
            return need
        if self.working_cap < need:
            raise CapViolationError(
                f"working cap {self.working_cap} < {cap} * {self.subst_degree}")
        return self.working_cap


def _require_rank3(p, what="polynomial"):
    if p.rank != AMBIENT_RANK:
        raise RankMismatchError(f"{what} must have rank {AMBIENT_RANK}")


def _require_vars(p, allowed, what):
    _require_rank3(p, what)
    for v in range(1, p.rank + 1):
        if v not in allowed and p.degree_in_var(v) > 0:
            raise VariableLeakError(v, f"{what} must not involve x{v}")


def invariance_defect(f, g, h):
    """f(x2 + g(x3), x3 + h) - f(x2, x3); zero iff this shift fixes f."""
    _require_vars(f, (2, 3), "f")
    _require_vars(g, (3,), "g")
    h = Fraction(h)
    images = [
        NcPoly.variable(1, 3),
        NcPoly.variable(2, 3) + g,
        NcPoly.variable(3, 3) + NcPoly.constant(h, 3),
    ]
    return f.substitute(images) - f


def shift_aut(g, h):
    """The substitution above as a rank-3 automorphism fixing x1."""
    return UniAut(3, [NcPoly.zero(3), g, NcPoly.constant(h, 3)])


# -- derivations and the layer tower ------------------------------------------


def _derive(p, images):
    """Derivation sending x_v to images[v] (variables not listed go to 0)."""
    acc = {}
    for word, c in p.terms.items():
        for pos, letter in enumerate(word):
            img = images.get(letter)
            if img is None:
                continue
            head, tail = word[:pos], word[pos + 1:]
            for mw, mc in img.terms.items():
                w = head + mw + tail
                v = acc.get(w, 0) + c * mc
                if v:
                    acc[w] = v
                else:
                    acc.pop(w, None)
    return NcPoly._raw(p.rank, acc)


def _op_images(p, subst_degree):
    """First-order images of p under the acting family's generators.

    Yields (op id, image) for the x3-shift derivation (x3 -> 1) and the
    x2-shift derivations (x2 -> x3^j), 0 <= j <= subst_degree.
    """
    yield 0, _derive(p, {3: NcPoly.one(3)})
    for j in range(subst_degree + 1):
        yield 1 + j, _derive(p, {2: NcPoly._raw(3, {(3,) * j: Fraction(1)})})


@lru_cache(maxsize=None)
def _slice_words(k, l):
    """All words with k letters x2 and l letters x3, lexicographically."""
    words = []
    for positions in itertools.combinations(range(k + l), k):
        w = [3] * (k + l)
        for p in positions:
            w[p] = 2
        words.append(tuple(w))
    words.sort()
    return tuple(words)


def _bidegree(word):
    k = sum(1 for a in word if a == 2)
    return (k, len(word) - k)


_LAYER_CACHE = {}


def _layer_echelons(level, cap, subst_degree):
    """Layer `level` of the tower at degree cap `cap`.

    Returns a map bidegree -> Echelon of that slice's basis vectors.
    Level m at cap D asks its first-order images to reduce to zero
    against level m-1, which is built at cap D + subst_degree - 1 so the
    images are always housed.
    """
    if level == 0:
        return {}
    key = (level, cap, subst_degree)
    cached = _LAYER_CACHE.get(key)
    if cached is not None:
        return cached
    prev = None
    if level > 1:
        prev = _layer_echelons(level - 1, cap + subst_degree - 1, subst_degree)
    result = {}
    for k in range(cap + 1):
        for l in range(cap + 1 - k):
            words = _slice_words(k, l)
            rowmap = {}
            for col, w in enumerate(words):
                mono = NcPoly._raw(3, {w: Fraction(1)})
                for opid, image in _op_images(mono, subst_degree):
                    if image.is_zero():
                        continue
                    residue = image.terms
                    if prev is not None:
                        ech = prev.get(_bidegree(next(iter(image.terms))))
                        if ech is not None:
                            residue = ech.reduce(residue)
                    for rw, rc in residue.items():
                        rowmap.setdefault((opid, rw), {})[col] = rc
            kern = nullspace([rowmap[r] for r in sorted(rowmap)], len(words))
            if not kern:
                continue
            ech = Echelon(key=grlex_key)
            for vec in kern:
                ech.insert({words[c]: val for c, val in vec.items()})
            result[(k, l)] = ech
    _LAYER_CACHE[key] = result
    return result


def _reduce_against_layer(p, layer):
    """Residue of p modulo the layer's span (slice by slice; the layer
    bases are bidegree-homogeneous)."""
    comps = {}
    for w, c in p.terms.items():
        comps.setdefault(_bidegree(w), {})[w] = c
    residue = {}
    for bd, vec in comps.items():
        ech = layer.get(bd)
        residue.update(ech.reduce(vec) if ech is not None else vec)
    return NcPoly._raw(p.rank, residue)


class GradedSubspace:
    """Row-reduced exact basis of a subspace of polynomials of bounded degree."""

    def __init__(self, degree_cap, ambient, basis, verdict):
        self.degree_cap = degree_cap
        self.ambient = ambient
        self.basis = list(basis)
        self.verdict = verdict
        self._ech = None

    def _echelon(self):
        if self._ech is None:
            ech = Echelon(key=grlex_key)
            for b in self.basis:
                ech.insert(b.terms)
            self._ech = ech
        return self._ech

    @property
    def dim(self):
        return len(self.basis)

    def reduce(self, p):
        return NcPoly._raw(p.rank, self._echelon().reduce(p.terms))

    def contains(self, p):
        return not self._echelon().reduce(p.terms)

    def dims_by_degree(self):
        dims = {}
        for b in self.basis:
            d = int(b.degree()) if not b.is_zero() else 0
            dims[d] = dims.get(d, 0) + 1
        return dict(sorted(dims.items()))

    def to_json(self):
        return {
            "degree_cap": self.degree_cap,
            "ambient": self.ambient,
            "verdict": self.verdict.to_json(),
            "basis": [format_poly(b) for b in self.basis],
            "dims_by_degree": {str(d): n for d, n in self.dims_by_degree().items()},
        }


def _sample_shift(rng, cfg):
    """Random (g, h) with deg g <= subst_degree, not both trivial."""
    while True:
        terms = {}
        for j in range(cfg.subst_degree + 1):
            if rng.random() < 0.7:
                c = Fraction(rng.randint(-cfg.height, cfg.height),
                             rng.randint(1, cfg.height))
                if c:
                    terms[(3,) * j] = c
        g = NcPoly._raw(3, terms)
        h = Fraction(rng.randint(-cfg.height, cfg.height),
                     rng.randint(1, cfg.height))
        if terms or h:
            return g, h


def s_layer_basis(m, cap, cfg):
    """Truncated order-m layer inside polynomials of degree <= cap.

    The basis is canonical (reduced echelon form under graded-lex) and
    homogeneous in bidegree.  Every vector is re-verified on cfg.trials
    fresh random substitutions: order-1 vectors must have an exactly zero
    defect, deeper vectors a defect inside the next layer down.  The
    verdict stays probabilistic because only shifts of degree up to
    cfg.subst_degree were enforced.
    """
    if m < 1:
        raise ValueError("layer order must be >= 1")
    if cap < 0:
        raise ValueError("degree cap must be >= 0")
    cfg.working_cap_for(cap)
    layer = _layer_echelons(m, cap, cfg.subst_degree)
    ech = Echelon(key=grlex_key)
    for bd in sorted(layer, key=lambda kl: (kl[0] + kl[1], kl[0])):
        for vec in layer[bd].vectors():
            ech.insert(vec)
    basis = [NcPoly._raw(AMBIENT_RANK, v) for v in ech.vectors()]

    rng = random.Random(cfg.seed * 1_000_003 + m * 10_007 + cap * 101
                        + cfg.subst_degree)
    for _ in range(cfg.trials):
        g, h = _sample_shift(rng, cfg)
        for b in basis:
            defect = invariance_defect(b, g, h)
            if defect.is_zero():
                continue
            if m == 1:
                raise RuntimeError(
                    "an order-1 layer vector has a nonzero defect; this is a bug")
            prev = _layer_echelons(m - 1, int(defect.degree()), cfg.subst_degree)
            if not _reduce_against_layer(defect, prev).is_zero():
                raise RuntimeError(
                    "a layer vector's defect escapes the layer below; this is a bug")

    return GradedSubspace(cap, "Q<x2,x3>", basis, Verdict.probably_holds(cfg.trials))


def is_invariant_pit(f, cfg):
    """Randomized invariance check with an exact fast path.

    Membership in the span of products of the c generators certifies
    invariance (those are fixed by every x2-shift and x3-shift); failing
    that, cfg.trials random substitutions either expose a nonzero defect
    (a certain failure, with the witnessing substitution attached) or
    leave a probabilistic pass.
    """
    _require_vars(f, (2, 3), "f")
    if f.is_constant():
        return Verdict.holds()
    gens = [c_generator(k, 2, 3, rank=3) for k in range(1, max(int(f.degree()), 2))]
    if subalgebra_membership(f, gens) is not None:
        return Verdict.holds()
    rng = random.Random(cfg.seed)
    for _ in range(cfg.trials):
        g, h = _sample_shift(rng, cfg)
        defect = invariance_defect(f, g, h)
        if not defect.is_zero():
            return Verdict.fails(shift_aut(g, h))
    return Verdict.probably_holds(cfg.trials)


# -- subalgebra membership ----------------------------------------------------


def _generator_words(total, degs):
    """Index sequences with degree sum `total`, lexicographically."""
    if total == 0:
        yield ()
        return
    for i, d in enumerate(degs):
        if d <= total:
            for rest in _generator_words(total - d, degs):
                yield (i,) + rest


class SubalgebraExpr:
    """A Q-linear combination of products of the given generators."""

    def __init__(self, terms, gens, rank):
        self.terms = list(terms)   # (coefficient, tuple of generator positions)
        self.gens = list(gens)
        self.rank = rank

    def evaluate(self):
        total = NcPoly.zero(self.rank)
        for coeff, word in self.terms:
            prod = NcPoly.one(self.rank)
            for i in word:
                prod = prod * self.gens[i]
            total = total + prod * coeff
        return total

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for coeff, word in self.terms:
            body = "*".join(f"g{i + 1}" for i in word)
            mag = abs(coeff)
            if not body:
                text = str(mag)
            elif mag == 1:
                text = body
            else:
                text = f"{mag}*{body}"
            if not pieces:
                pieces.append(text if coeff > 0 else f"-{text}")
            else:
                pieces.append(f"+ {text}" if coeff > 0 else f"- {text}")
        return " ".join(pieces)

    def __repr__(self):
        return f"SubalgebraExpr({str(self)!r})"


def subalgebra_membership(f, gens):
    """Exact membership of f in the unital subalgebra generated by `gens`.

    Works one graded component at a time: the candidate products of the
    generators of matching total degree are enumerated by degree, then
    lexicographically on generator indices, and an exact linear solve
    either expresses the component or rules it out.  Returns the found
    expression, or None.
    """
    gens = list(gens)
    for g in gens:
        if g.is_zero() or not g.is_homogeneous() or g.degree() < 1:
            raise NonHomogeneousGeneratorError(
                "generators must be homogeneous of degree >= 1")
        if g.rank != f.rank:
            raise RankMismatchError("generators must share the rank of f")
    degs = [int(g.degree()) for g in gens]
    terms = []
    for d, comp in f.homogeneous_components().items():
        if d == 0:
            terms.append((comp.constant_term(), ()))
            continue
        ech = Echelon(key=grlex_key, track=True)
        for word in _generator_words(d, degs):
            prod = NcPoly.one(f.rank)
            for i in word:
                prod = prod * gens[i]
            ech.insert(prod.terms, word)
        combo = ech.express(comp.terms)
        if combo is None:
            return None
        terms.extend((c, word) for word, c in sorted(combo.items()))
    return SubalgebraExpr(terms, gens, f.rank)


def c_product_span(cap):
    """Products of the c generators of total degree <= cap, unit included."""
    gens = [c_generator(k, 2, 3, rank=3) for k in range(1, cap)]
    degs = [k + 2 for k in range(len(gens))]
    prods = [NcPoly.one(3)]
    for d in range(2, cap + 1):
        for word in _generator_words(d, degs):
            prod = NcPoly.one(3)
            for i in word:
                prod = prod * gens[i]
            prods.append(prod)
    return prods


# -- free-module straightening ------------------------------------------------


@lru_cache(maxsize=None)
def _lyndon_words(maxlen):
    """Lyndon words over the alphabet (2, 3), lengths 1..maxlen, in
    lexicographic order (Duval's generation)."""
    alphabet = (2, 3)
    out = []
    w = [0]
    while w:
        out.append(tuple(alphabet[c] for c in w))
        m = len(w)
        while len(w) < maxlen:
            w.append(w[len(w) - m])
        while w and w[-1] == len(alphabet) - 1:
            w.pop()
        if w:
            w[-1] += 1
    return tuple(sorted(out, key=lambda t: (len(t), t)))


@lru_cache(maxsize=None)
def _standard_bracketing(word):
    """Right-normed bracketing along the standard factorization: the
    splitting point starts the lexicographically smallest proper suffix."""
    if len(word) == 1:
        return NcPoly.variable(word[0], 3)
    split = min(range(1, len(word)), key=lambda i: word[i:])
    return ring_commutator(_standard_bracketing(word[:split]),
                           _standard_bracketing(word[split:]))


@lru_cache(maxsize=None)
def _commutator_algebra_basis(degree):
    """Basis of the degree-`degree` slice of the subalgebra generated by
    all higher commutators of x2 and x3.

    The bracketed words of length >= 2 span the commutator part of the
    free Lie algebra; ordered products of those span the subalgebra they
    generate, one basis monomial per nondecreasing index sequence.
    """
    if degree == 0:
        return (NcPoly.one(3),)
    if degree == 1:
        return ()
    lie = [(_standard_bracketing(w), len(w))
           for w in _lyndon_words(degree) if len(w) >= 2]
    out = []

    def rec(total, start):
        if total == 0:
            yield ()
            return
        for i in range(start, len(lie)):
            if lie[i][1] > total:
                continue
            for rest in rec(total - lie[i][1], i):
                yield (i,) + rest

    for word in rec(degree, 0):
        prod = NcPoly.one(3)
        for i in word:
            prod = prod * lie[i][0]
        out.append(prod)
    return tuple(out)


@lru_cache(maxsize=None)
def _straighten_candidates(degree):
    """All products r * x2^a * x3^b of total degree `degree`, with r a
    commutator-subalgebra basis element; by freeness of the module these
    are a basis of the whole degree slice."""
    x2 = NcPoly.variable(2, 3)
    x3 = NcPoly.variable(3, 3)
    cands = []
    for alpha in range(degree + 1):
        for beta in range(degree - alpha + 1):
            rest = degree - alpha - beta
            for ridx, r in enumerate(_commutator_algebra_basis(rest)):
                cands.append(((alpha, beta, ridx),
                              r * x2 ** alpha * x3 ** beta, r))
    return tuple(cands)


@lru_cache(maxsize=None)
def _straighten_solver(degree):
    ech = Echelon(key=grlex_key, track=True)
    coeffs = {}
    for tag, poly, r in _straighten_candidates(degree):
        if not ech.insert(poly.terms, tag):
            raise RuntimeError(
                "module basis candidates are dependent; this is a bug")
        coeffs[tag] = r
    if ech.dim != 2 ** degree:
        raise RuntimeError("module basis does not span; this is a bug")
    return ech, coeffs


def specht_straighten(f, cap):
    """Write f as sum of r_(a,b) * x2^a * x3^b with commutator-subalgebra
    coefficients r_(a,b) on the left.

    The free-module structure makes the decomposition unique; it is
    found degree by degree through an exact linear solve, and a failed
    solve signals an implementation bug rather than a data error.
    """
    _require_vars(f, (2, 3), "f")
    if f.degree() > cap:
        raise CapViolationError(f"degree {f.degree()} exceeds cap {cap}")
    out = {}
    for d, comp in f.homogeneous_components().items():
        if d == 0:
            out[(0, 0)] = out.get((0, 0), NcPoly.zero(3)) + comp
            continue
        ech, coeffs = _straighten_solver(d)
        combo = ech.express(comp.terms)
        if combo is None:
            raise RuntimeError("free-module decomposition failed; this is a bug")
        for (alpha, beta, ridx), c in combo.items():
            key = (alpha, beta)
            out[key] = out.get(key, NcPoly.zero(3)) + coeffs[(alpha, beta, ridx)] * c
    return {k: v for k, v in out.items() if not v.is_zero()}


def straighten_reconstruct(components):
    """Reassemble sum r_(a,b) * x2^a * x3^b from a straightening map."""
    x2 = NcPoly.variable(2, 3)
    x3 = NcPoly.variable(3, 3)
    total = NcPoly.zero(3)
    for (alpha, beta), r in components.items():
        total = total + r * x2 ** alpha * x3 ** beta
    return total


# -- named identity checks and reports ----------------------------------------


def proposition_identity_check(k, N):
    """[c_k, x3^N] == sum_{p+q=N-1} x3^p c_{k+1} x3^q, exactly."""
    if k < 1 or N < 1:
        raise ValueError("k and N must be >= 1")
    x3 = NcPoly.variable(3, 3)
    ck = c_generator(k, 2, 3, rank=3)
    ck1 = c_generator(k + 1, 2, 3, rank=3)
    lhs = ring_commutator(ck, x3 ** N)
    rhs = NcPoly.zero(3)
    for p in range(N):
        rhs = rhs + x3 ** p * ck1 * x3 ** (N - 1 - p)
    return lhs == rhs


def proposition_noninvariance_probe(k, m, cfg, cap=None):
    """Try to refute membership of [c_k, x2] in the order-m layer.

    Reduction against the computed layer (at a cap exceeding the degree
    of [c_k, x2]) either leaves a nonzero residue, in which case a
    monomial shift x2 -> x2 + x3^n whose defect escapes the layer below
    is attached as the witness, or membership was not refuted at this
    sampling degree.  Refutation is only expected while m stays within
    cfg.subst_degree; a truncated tower cannot see deeper shifts.
    """
    v = ring_commutator(c_generator(k, 2, 3, rank=3), NcPoly.variable(2, 3))
    if cap is None:
        cap = int(v.degree()) + 1
    layer = s_layer_basis(m, cap, cfg)
    if layer.contains(v):
        return Verdict.probably_holds(cfg.trials)
    x3 = NcPoly.variable(3, 3)
    for n in range(max(2, m), max(2, m) + cfg.subst_degree + 2):
        g = x3 ** n
        defect = invariance_defect(v, g, 0)
        if m == 1:
            escaped = not defect.is_zero()
        else:
            prev = _layer_echelons(m - 1, int(defect.degree()), cfg.subst_degree)
            escaped = not _reduce_against_layer(defect, prev).is_zero()
        if escaped:
            return Verdict.fails(shift_aut(g, 0))
    raise RuntimeError("membership refuted but no shift witness found; this is a bug")


@dataclass
class PiDegreeRow:
    degree: int
    computed_dim: int
    expected_dim: int
    match: bool


@dataclass
class PiReport:
    """Comparison of the abelianized layer with its predicted image.

    Under abelianization the order-1 layer collapses to the constants and
    the order-(m+1) layer to the polynomials in x3 of degree <= m; the
    report states, per degree, the computed and predicted dimensions of
    the image, and whether the image matches the predicted span exactly.
    """

    level: int
    degree_cap: int
    rows: list
    subspace_match: bool
    verdict: Verdict

    @property
    def matches(self):
        return self.subspace_match and all(r.match for r in self.rows)

    def to_json(self):
        return {
            "level": self.level,
            "degree_cap": self.degree_cap,
            "dimensions": {
                str(r.degree): {"computed": r.computed_dim,
                                "expected": r.expected_dim, "match": r.match}
                for r in self.rows
            },
            "subspace_match": self.subspace_match,
            "matches": self.matches,
            "verdict": self.verdict.to_json(),
        }


def remark_pi_check(m, cap, cfg):
    """Abelianize the order-m layer and compare with its predicted image."""
    layer = s_layer_basis(m, cap, cfg)
    images = []
    for b in layer.basis:
        img = abelianize(b)
        if not img.is_zero():
            images.append(img)
    comm_key = lambda e: (sum(e), e)
    computed = Echelon(key=comm_key)
    for img in images:
        computed.insert(img.terms)
    expected = Echelon(key=comm_key)
    for d in range(0, min(m - 1, cap) + 1):
        expected.insert({(0, 0, d): Fraction(1)})
    computed_dims = {}
    for pivot in computed.pivots():
        d = sum(pivot)
        computed_dims[d] = computed_dims.get(d, 0) + 1
    rows = []
    for d in range(cap + 1):
        exp = 1 if d <= m - 1 else 0
        got = computed_dims.get(d, 0)
        rows.append(PiDegreeRow(d, got, exp, got == exp))
    inside = all(not expected.reduce(img.terms) for img in images)
    return PiReport(m, cap, rows, inside, layer.verdict)


@dataclass
class H1DegreeRow:
    degree: int
    c_span_dim: int
    layer_dim: int


@dataclass
class H1Report:
    """Dimension comparison: products of the c generators vs the computed
    order-1 layer.  The containment direction is exact; dimension equality
    is evidence only and never asserted."""

    degree_cap: int
    rows: list
    contained: bool
    dims_equal: bool
    verdict: Verdict

    def to_json(self):
        return {
            "degree_cap": self.degree_cap,
            "dimensions": {
                str(r.degree): {"c_span": r.c_span_dim, "layer": r.layer_dim}
                for r in self.rows
            },
            "contained": self.contained,
            "dims_equal": self.dims_equal,
            "verdict": self.verdict.to_json(),
        }


def hypothesis1_report(cap, cfg):
    layer = s_layer_basis(1, cap, cfg)
    prods = c_product_span(cap)
    contained = all(layer.contains(p) for p in prods)
    span = Echelon(key=grlex_key)
    for p in prods:
        span.insert(p.terms)
    span_dims = {}
    for pivot in span.pivots():
        d = len(pivot)
        span_dims[d] = span_dims.get(d, 0) + 1
    layer_dims = layer.dims_by_degree()
    rows = [H1DegreeRow(d, span_dims.get(d, 0), layer_dims.get(d, 0))
            for d in range(cap + 1)]
    dims_equal = all(r.c_span_dim == r.layer_dim for r in rows)
    return H1Report(cap, rows, contained, dims_equal, layer.verdict)
