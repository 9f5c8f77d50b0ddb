"""Exact sparse linear algebra over Q.

Vectors are dicts mapping hashable term keys to nonzero Fractions.  An
Echelon keeps a reduced row-echelon basis under a caller-supplied term
order; the pivot of a row is its smallest term and carries coefficient 1,
so the stored rows are the unique canonical basis of their span.
"""

from __future__ import annotations

from fractions import Fraction


class Echelon:
    """Incrementally built reduced echelon basis, optionally tracking how
    each stored row combines the originally inserted vectors."""

    def __init__(self, key=None, track=False):
        self.key = key if key is not None else (lambda t: t)
        self.rows = []          # mutually reduced, pivot coefficient 1
        self.combos = [] if track else None
        self._pivot_of = {}     # pivot term -> row index
        self._order = []        # pivot terms sorted by self.key

    def __len__(self):
        return len(self.rows)

    @property
    def dim(self):
        return len(self.rows)

    def pivots(self):
        return list(self._order)

    def _reduce(self, vec):
        r = dict(vec)
        used = {}
        # rows only contain terms >= their pivot, so one ascending pass
        for pivot in self._order:
            c = r.get(pivot)
            if not c:
                continue
            idx = self._pivot_of[pivot]
            for t, v in self.rows[idx].items():
                nv = r.get(t, 0) - c * v
                if nv:
                    r[t] = nv
                else:
                    r.pop(t, None)
            used[idx] = used.get(idx, 0) + c
        return r, used

    def reduce(self, vec):
        """Residue of vec modulo the span; empty dict means membership."""
        return self._reduce(vec)[0]

    def express(self, vec):
        """Combination of the original inserted vectors equal to vec,
        as a map tag -> Fraction, or None if vec is outside the span."""
        if self.combos is None:
            raise ValueError("echelon was built without tracking")
        residue, used = self._reduce(vec)
        if residue:
            return None
        out = {}
        for idx, c in used.items():
            for tag, v in self.combos[idx].items():
                nv = out.get(tag, 0) + c * v
                if nv:
                    out[tag] = nv
                else:
                    out.pop(tag, None)
        return out

    def insert(self, vec, tag=None):
        """Add a vector; returns True when it enlarged the span."""
        residue, used = self._reduce(vec)
        if not residue:
            return False
        pivot = min(residue, key=self.key)
        lead = residue[pivot]
        row = {t: v / lead for t, v in residue.items()}
        if self.combos is not None:
            combo = {tag: Fraction(1)}
            for idx, c in used.items():
                for t, v in self.combos[idx].items():
                    nv = combo.get(t, 0) - c * v
                    if nv:
                        combo[t] = nv
                    else:
                        combo.pop(t, None)
            combo = {t: v / lead for t, v in combo.items()}
        # keep the basis fully reduced
        for i, other in enumerate(self.rows):
            c = other.get(pivot)
            if not c:
                continue
            for t, v in row.items():
                nv = other.get(t, 0) - c * v
                if nv:
                    other[t] = nv
                else:
                    other.pop(t, None)
            if self.combos is not None:
                oc = self.combos[i]
                for t, v in combo.items():
                    nv = oc.get(t, 0) - c * v
                    if nv:
                        oc[t] = nv
                    else:
                        oc.pop(t, None)
        self._pivot_of[pivot] = len(self.rows)
        self.rows.append(row)
        if self.combos is not None:
            self.combos.append(combo)
        lo, hi = 0, len(self._order)
        pk = self.key(pivot)
        while lo < hi:
            mid = (lo + hi) // 2
            if self.key(self._order[mid]) < pk:
                lo = mid + 1
            else:
                hi = mid
        self._order.insert(lo, pivot)
        return True

    def vectors(self):
        """Stored rows in pivot order: the canonical basis of the span."""
        return [dict(self.rows[self._pivot_of[p]]) for p in self._order]


def nullspace(rows, ncols):
    """Kernel of the integer-indexed constraint matrix given by `rows`.

    Each row is a dict column -> Fraction over columns 0..ncols-1.  The
    result is the canonical kernel basis: one vector per free column, a 1
    in that column, pivot columns back-substituted.
    """
    ech = {}  # pivot column -> reduced row
    for row in rows:
        r = dict(row)
        while r:
            p = min(r)
            if p in ech:
                c = r[p]
                for col, v in ech[p].items():
                    nv = r.get(col, 0) - c * v
                    if nv:
                        r[col] = nv
                    else:
                        r.pop(col, None)
            else:
                lead = r[p]
                ech[p] = {col: v / lead for col, v in r.items()}
                break
    # back-substitute to full rref
    for p in sorted(ech, reverse=True):
        row = ech[p]
        for q in sorted(ech):
            if q >= p:
                break
            c = ech[q].get(p)
            if not c:
                continue
            target = ech[q]
            for col, v in row.items():
                nv = target.get(col, 0) - c * v
                if nv:
                    target[col] = nv
                else:
                    target.pop(col, None)
    basis = []
    for col in range(ncols):
        if col in ech:
            continue
        vec = {col: Fraction(1)}
        for p, row in ech.items():
            c = row.get(col)
            if c:
                vec[p] = -c
        basis.append(vec)
    return basis
