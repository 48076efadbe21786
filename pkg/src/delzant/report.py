"""Structured pass/fail results carrying both sides of each identity."""

from dataclasses import dataclass, field
from fractions import Fraction


def _plain(x):
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    if isinstance(x, (list, tuple)):
        return [_plain(c) for c in x]
    if isinstance(x, dict):
        return {k: _plain(v) for k, v in x.items()}
    return x


@dataclass
class VerificationReport:
    identity: str
    passed: bool
    lhs: object = None
    rhs: tuple = ()
    per_item: list = field(default_factory=list)

    def add_item(self, item_id, ok, detail=None):
        self.per_item.append({"id": item_id, "pass": ok, "detail": detail})
        if not ok:
            self.passed = False

    def to_dict(self):
        return {
            "identity": self.identity,
            "pass": self.passed,
            "lhs": _plain(self.lhs),
            "rhs": _plain(list(self.rhs)),
            "per_item": _plain(self.per_item),
        }

    def __bool__(self):
        return self.passed
