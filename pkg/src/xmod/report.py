from dataclasses import dataclass, field


def _plain(w):
    if isinstance(w, (tuple, list)):
        return tuple(_plain(v) for v in w)
    try:
        return int(w)
    except (TypeError, ValueError):
        return w


@dataclass(frozen=True, order=True)
class Violation:
    tag: str
    witness: tuple = ()
    detail: str = ""

    def __post_init__(self):
        object.__setattr__(self, "witness", _plain(self.witness))


@dataclass
class AxiomReport:
    """Named checks plus every violation found.

    ``checks`` maps a check name to ``"pass"``, ``"fail"`` or ``"skipped"``;
    ``ok`` depends only on the violation list.
    """

    violations: list = field(default_factory=list)
    checks: dict = field(default_factory=dict)

    @property
    def ok(self):
        return not self.violations

    def add(self, tag, witness=(), detail=""):
        self.violations.append(Violation(tag, witness, detail))
        self.checks[tag] = "fail"

    def record(self, name, violations):
        """Register check ``name`` with the (possibly empty) violations it found."""
        violations = list(violations)
        self.violations.extend(violations)
        if violations:
            self.checks[name] = "fail"
        else:
            self.checks.setdefault(name, "pass")
        return not violations

    def skip(self, name, detail=""):
        self.checks[name] = "skipped"

    def merge(self, other):
        self.violations.extend(other.violations)
        for k, v in other.checks.items():
            if v == "fail" or k not in self.checks:
                self.checks[k] = v
        return self

    def by_tag(self, tag):
        return [v for v in self.violations if v.tag == tag]

    def sorted(self):
        return AxiomReport(sorted(self.violations), dict(sorted(self.checks.items())))
