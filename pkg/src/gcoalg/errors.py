"""Exception classes and the verification report shared by all modules."""

from dataclasses import dataclass, field


class ShapeMismatch(ValueError):
    pass


class NoSolution(ValueError):
    """Raised by solve_right when the right-hand side is outside the column space."""


class NotAGroup(ValueError):
    pass


class NotInvertible(ValueError):
    def __init__(self, msg, where=None):
        super().__init__(msg)
        self.where = where


class PreconditionViolated(ValueError):
    pass


class NotGradable(ValueError):
    pass


class SupportViolation(ValueError):
    pass


class InvalidCrossedData(ValueError):
    def __init__(self, msg, report=None):
        super().__init__(msg)
        self.report = report


class NotAMorphism(ValueError):
    def __init__(self, msg, where=None):
        super().__init__(msg)
        self.where = where


class NotCocommutative(ValueError):
    pass


@dataclass
class Report:
    """Outcome of a verification: empty ``failures`` means the property holds.

    Each failure is a plain dict (``check`` names the violated law, the other
    keys locate it), so reports serialize to JSON unchanged.
    """

    name: str
    failures: list = field(default_factory=list)
    info: dict = field(default_factory=dict)
    data: dict = field(default_factory=dict, repr=False)  # python objects, not serialized

    @property
    def ok(self):
        return not self.failures

    def __bool__(self):
        return self.ok

    def fail(self, check, **where):
        self.failures.append({"check": check, **where})

    def extend(self, other, **where):
        for f in other.failures:
            self.failures.append({**f, **where})

    def to_json(self):
        return {"name": self.name, "ok": self.ok, "failures": self.failures, "info": self.info}
