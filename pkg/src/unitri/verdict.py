"""Three-valued outcomes for randomized invariance checks.

Randomized checking has one-sided error: a failure always comes with a
concrete witness and is certain, while a pass after n independent trials
is only probable.  "holds" is reserved for outcomes backed by an exact
certificate.
"""

from __future__ import annotations

from dataclasses import dataclass

HOLDS = "holds"
FAILS = "fails"
PROBABLY_HOLDS = "probably_holds"


@dataclass(frozen=True)
class Verdict:
    kind: str
    witness: object = None   # UniAut for FAILS
    trials: int | None = None

    def __post_init__(self):
        if self.kind not in (HOLDS, FAILS, PROBABLY_HOLDS):
            raise ValueError(f"unknown verdict kind {self.kind!r}")
        if self.kind == FAILS and self.witness is None:
            raise ValueError("a failing verdict needs a witness")

    @classmethod
    def holds(cls):
        return cls(HOLDS)

    @classmethod
    def fails(cls, witness):
        return cls(FAILS, witness=witness)

    @classmethod
    def probably_holds(cls, trials):
        return cls(PROBABLY_HOLDS, trials=trials)

    def is_positive(self):
        """True for holds and probably_holds."""
        return self.kind != FAILS

    def to_json(self):
        from .autgroup import aut_to_json
        out = {"kind": self.kind}
        if self.witness is not None:
            out["witness"] = aut_to_json(self.witness)
        if self.trials is not None:
            out["trials"] = self.trials
        return out
