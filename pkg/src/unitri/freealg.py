"""Exact arithmetic in the free associative algebra Q<x1,...,xn>.

Monomials are words over the variables, stored as tuples of 1-based
indices; the empty word is the unit.  A polynomial keeps a finite map
word -> nonzero Fraction, so equality of canonical forms is plain
equality of the term maps.  The term order used everywhere (formatting,
leading terms, row reduction) is graded lexicographic: shorter words
first, ties broken left to right by variable index.

No float ever enters the arithmetic.  The degree of the zero polynomial
is NEG_INF, a sentinel below every integer, which keeps predicates of
the shape "deg f <= s" uniform.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

NEG_INF = float("-inf")


class RankMismatchError(ValueError):
    """Operands live in free algebras of different rank."""


class ArityMismatchError(ValueError):
    """A substitution got the wrong number of variable images."""


class ParseError(ValueError):
    """Syntax error in the polynomial grammar; carries the text offset."""

    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class RankOverflowError(ParseError):
    """A parsed variable index exceeds the declared rank."""


def grlex_key(word):
    """Sort key realizing the graded-lex term order on words."""
    return (len(word), word)


class NcPoly:
    """Sparse polynomial with noncommuting variables and Fraction coefficients.

    Instances are immutable by convention: no method mutates `terms`, and
    every operation returns a fresh polynomial in canonical form (no zero
    coefficients, all indices within `rank`).
    """

    __slots__ = ("rank", "terms")

    def __init__(self, rank, terms=None):
        if rank < 1:
            raise ValueError(f"rank must be >= 1, got {rank}")
        clean = {}
        for word, coeff in (terms or {}).items():
            word = tuple(word)
            for letter in word:
                if not 1 <= letter <= rank:
                    raise ValueError(f"variable index {letter} outside rank {rank}")
            c = clean.get(word, 0) + Fraction(coeff)
            if c:
                clean[word] = c
            else:
                clean.pop(word, None)
        self.rank = rank
        self.terms = clean

    @classmethod
    def _raw(cls, rank, terms):
        # trusted constructor: terms already canonical (Fraction values, no zeros)
        p = cls.__new__(cls)
        p.rank = rank
        p.terms = terms
        return p

    @classmethod
    def zero(cls, rank):
        return cls._raw(rank, {})

    @classmethod
    def one(cls, rank):
        return cls._raw(rank, {(): Fraction(1)})

    @classmethod
    def constant(cls, value, rank):
        c = Fraction(value)
        return cls._raw(rank, {(): c} if c else {})

    @classmethod
    def variable(cls, index, rank):
        if not 1 <= index <= rank:
            raise ValueError(f"variable index {index} outside rank {rank}")
        return cls._raw(rank, {(index,): Fraction(1)})

    @classmethod
    def monomial(cls, word, coeff, rank):
        return cls(rank, {tuple(word): coeff})

    # -- predicates and degrees -------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return all(not w for w in self.terms)

    def constant_term(self):
        return self.terms.get((), Fraction(0))

    def degree(self):
        """Total degree; NEG_INF for the zero polynomial."""
        if not self.terms:
            return NEG_INF
        return max(len(w) for w in self.terms)

    def degree_in_var(self, index):
        """Largest occurrence count of x_index in any word; NEG_INF for 0."""
        if not self.terms:
            return NEG_INF
        return max(w.count(index) for w in self.terms)

    def is_homogeneous(self):
        return len({len(w) for w in self.terms}) <= 1

    def homogeneous_components(self):
        """Split into total-degree components, as a map degree -> NcPoly."""
        parts = {}
        for w, c in self.terms.items():
            parts.setdefault(len(w), {})[w] = c
        return {d: NcPoly._raw(self.rank, t) for d, t in sorted(parts.items())}

    def leading_word(self):
        if not self.terms:
            return None
        return max(self.terms, key=grlex_key)

    # -- ring operations ---------------------------------------------------

    def _check_rank(self, other):
        if self.rank != other.rank:
            raise RankMismatchError(f"rank {self.rank} vs {other.rank}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = NcPoly.constant(other, self.rank)
        if not isinstance(other, NcPoly):
            return NotImplemented
        self._check_rank(other)
        out = dict(self.terms)
        for w, c in other.terms.items():
            v = out.get(w, 0) + c
            if v:
                out[w] = v
            else:
                out.pop(w, None)
        return NcPoly._raw(self.rank, out)

    __radd__ = __add__

    def __neg__(self):
        return NcPoly._raw(self.rank, {w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = NcPoly.constant(other, self.rank)
        if not isinstance(other, NcPoly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c:
                return NcPoly.zero(self.rank)
            return NcPoly._raw(self.rank, {w: v * c for w, v in self.terms.items()})
        if not isinstance(other, NcPoly):
            return NotImplemented
        self._check_rank(other)
        out = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                w = w1 + w2
                v = out.get(w, 0) + c1 * c2
                if v:
                    out[w] = v
                else:
                    out.pop(w, None)
        return NcPoly._raw(self.rank, out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / Fraction(other))
        return NotImplemented

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponents must be nonnegative integers")
        out = NcPoly.one(self.rank)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if not isinstance(other, NcPoly):
            return NotImplemented
        return self.rank == other.rank and self.terms == other.terms

    def __hash__(self):
        return hash((self.rank, frozenset(self.terms.items())))

    # -- substitution -------------------------------------------------------

    def substitute(self, images):
        """Apply the ring endomorphism x_i -> images[i-1].

        Requires one image per variable of this polynomial; the images fix
        the rank of the result and must all share it.  Words map to the
        ordered product of their letters' images; constants are fixed.
        """
        images = list(images)
        if len(images) != self.rank:
            raise ArityMismatchError(
                f"need {self.rank} images, got {len(images)}")
        ranks = {im.rank for im in images}
        if len(ranks) > 1:
            raise RankMismatchError(f"images carry mixed ranks {sorted(ranks)}")
        rank = images[0].rank if images else self.rank
        cache = {(): NcPoly.one(rank)}

        def image_of(word):
            got = cache.get(word)
            if got is None:
                got = image_of(word[:-1]) * images[word[-1] - 1]
                cache[word] = got
            return got

        acc = {}
        for word, coeff in self.terms.items():
            for w, c in image_of(word).terms.items():
                v = acc.get(w, 0) + coeff * c
                if v:
                    acc[w] = v
                else:
                    acc.pop(w, None)
        return NcPoly._raw(rank, acc)

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"NcPoly({self.rank}, {format_poly(self)!r})"


def ring_commutator(a, b):
    """[a, b] = ab - ba."""
    return a * b - b * a


def c_generator(k, i, j, rank=None):
    """The iterated commutator c_k built from x_i and x_j.

    c_1 = [x_i, x_j] and c_{k+1} = [c_k, x_j]; the result is homogeneous
    of total degree k + 1 and of degree 1 in x_i.
    """
    if i == j:
        raise ValueError("c generators need two distinct variables")
    if k < 1:
        raise ValueError("k must be >= 1")
    rank = rank if rank is not None else max(i, j)
    xi = NcPoly.variable(i, rank)
    xj = NcPoly.variable(j, rank)
    c = ring_commutator(xi, xj)
    for _ in range(k - 1):
        c = ring_commutator(c, xj)
    return c


class CommPoly:
    """Sparse commutative polynomial: exponent vectors -> Fraction.

    The image ring of abelianization; just enough arithmetic to state
    homomorphism properties and compare graded subspaces exactly.
    """

    __slots__ = ("rank", "terms")

    def __init__(self, rank, terms=None):
        if rank < 1:
            raise ValueError(f"rank must be >= 1, got {rank}")
        clean = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(exps)
            if len(exps) != rank or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent vector {exps} for rank {rank}")
            c = clean.get(exps, 0) + Fraction(coeff)
            if c:
                clean[exps] = c
            else:
                clean.pop(exps, None)
        self.rank = rank
        self.terms = clean

    @classmethod
    def _raw(cls, rank, terms):
        p = cls.__new__(cls)
        p.rank = rank
        p.terms = terms
        return p

    @classmethod
    def zero(cls, rank):
        return cls._raw(rank, {})

    def is_zero(self):
        return not self.terms

    def degree(self):
        if not self.terms:
            return NEG_INF
        return max(sum(e) for e in self.terms)

    def degree_in_var(self, index):
        if not self.terms:
            return NEG_INF
        return max(e[index - 1] for e in self.terms)

    def _check_rank(self, other):
        if self.rank != other.rank:
            raise RankMismatchError(f"rank {self.rank} vs {other.rank}")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = CommPoly(self.rank, {(0,) * self.rank: other})
        if not isinstance(other, CommPoly):
            return NotImplemented
        self._check_rank(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return CommPoly._raw(self.rank, out)

    def __neg__(self):
        return CommPoly._raw(self.rank, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            if not c:
                return CommPoly.zero(self.rank)
            return CommPoly._raw(self.rank, {e: v * c for e, v in self.terms.items()})
        if not isinstance(other, CommPoly):
            return NotImplemented
        self._check_rank(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                v = out.get(e, 0) + c1 * c2
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
        return CommPoly._raw(self.rank, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, CommPoly):
            return NotImplemented
        return self.rank == other.rank and self.terms == other.terms

    def __hash__(self):
        return hash((self.rank, frozenset(self.terms.items())))

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for exps in sorted(self.terms, key=lambda e: (sum(e), e)):
            c = self.terms[exps]
            body = "*".join(
                f"x{i + 1}" if e == 1 else f"x{i + 1}^{e}"
                for i, e in enumerate(exps) if e)
            mag = abs(c)
            if not body:
                text = str(mag)
            elif mag == 1:
                text = body
            else:
                text = f"{mag}*{body}"
            if not pieces:
                pieces.append(text if c > 0 else f"-{text}")
            else:
                pieces.append(f"+ {text}" if c > 0 else f"- {text}")
        return " ".join(pieces)

    def __repr__(self):
        return f"CommPoly({self.rank}, {str(self)!r})"


def abelianize(p):
    """Project to the commutative polynomial ring; commutators die here."""
    acc = {}
    for word, coeff in p.terms.items():
        exps = tuple(word.count(i) for i in range(1, p.rank + 1))
        v = acc.get(exps, 0) + coeff
        if v:
            acc[exps] = v
        else:
            acc.pop(exps, None)
    return CommPoly._raw(p.rank, acc)


# -- text format -------------------------------------------------------------
#
# poly   := ['+'|'-'] term (('+'|'-') term)*
# term   := coeff ('*' factor)* | factor ('*' factor)*
# coeff  := uint ['/' uint]
# factor := 'x' uint ['^' uint]
#
# Whitespace is insignificant.  Powers expand into repeated letters, so the
# stored representation stays purely word-based.


def _word_str(word):
    parts = []
    for letter, run in itertools.groupby(word):
        n = len(list(run))
        parts.append(f"x{letter}" if n == 1 else f"x{letter}^{n}")
    return "*".join(parts)


def format_poly(p):
    """Canonical rendering: graded-lex term order, explicit '*'."""
    if not p.terms:
        return "0"
    pieces = []
    for word in sorted(p.terms, key=grlex_key):
        c = p.terms[word]
        mag = abs(c)
        if not word:
            text = str(mag)
        elif mag == 1:
            text = _word_str(word)
        else:
            text = f"{mag}*{_word_str(word)}"
        if not pieces:
            pieces.append(text if c > 0 else f"-{text}")
        else:
            pieces.append(f"+ {text}" if c > 0 else f"- {text}")
    return " ".join(pieces)


class _Parser:
    def __init__(self, text, rank):
        self.text = text
        self.rank = rank
        self.pos = 0

    def error(self, message, pos=None):
        raise ParseError(message, self.pos if pos is None else pos)

    def skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self):
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self):
        ch = self.peek()
        self.pos += 1
        return ch

    def parse_uint(self, what):
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            self.error(f"expected {what}")
        return int(self.text[start:self.pos])

    def parse_coeff(self):
        num = self.parse_uint("an integer")
        if self.peek() == "/":
            self.take()
            start = self.pos
            den = self.parse_uint("a denominator")
            if den == 0:
                self.error("zero denominator", start)
            return Fraction(num, den)
        return Fraction(num)

    def parse_factor(self):
        ch = self.peek()
        start = self.pos
        if ch != "x":
            if ch.isalpha():
                self.error(f"unknown variable {ch!r}")
            self.error("expected a variable")
        self.take()
        index = self.parse_uint("a variable index")
        if index < 1:
            self.error("variable indices start at 1", start)
        if index > self.rank:
            raise RankOverflowError(
                f"variable x{index} exceeds rank {self.rank}", start)
        power = 1
        if self.peek() == "^":
            self.take()
            power = self.parse_uint("an exponent")
        return (index,) * power

    def parse_term(self):
        ch = self.peek()
        if ch.isdigit():
            coeff = self.parse_coeff()
            word = ()
        elif ch == "x" or ch.isalpha():
            coeff = Fraction(1)
            word = self.parse_factor()
        else:
            self.error("expected a coefficient or variable")
        while self.peek() == "*":
            self.take()
            word = word + self.parse_factor()
        return word, coeff

    def parse(self):
        acc = {}
        sign = 1
        ch = self.peek()
        if ch in "+-":
            self.take()
            sign = -1 if ch == "-" else 1
        elif not ch:
            self.error("empty polynomial")
        while True:
            word, coeff = self.parse_term()
            v = acc.get(word, 0) + sign * coeff
            if v:
                acc[word] = v
            else:
                acc.pop(word, None)
            ch = self.peek()
            if not ch:
                break
            if ch not in "+-":
                self.error(f"expected '+' or '-', found {ch!r}")
            self.take()
            sign = -1 if ch == "-" else 1
        return NcPoly._raw(self.rank, acc)


def parse_poly(text, rank):
    """Parse the text grammar above into a canonical polynomial."""
    return _Parser(text, rank).parse()
