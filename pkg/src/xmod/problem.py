"""JSON problem files and reports.

Problem file (one JSON object)::

    {
      "label": "mod2",
      "groups": {
        "N": {"table": [[0, 1, 2, 3], ...], "identity": 0},
        "G": {"permutations": {"degree": 3, "generators": [[1, 0, 2], [1, 2, 0]]}}
      },
      "source": "N",
      "target": "G",
      "map": [0, 1, 0, 1],
      "action": "trivial" | "conjugation" | [[...], ...],
      "options": {"levels": 3, "max_order": 10080, "format": "text"}
    }

Tables are row-major, ``table[x][y] = xy``. Permutation groups index their
elements in breadth-first closure order (index 0 is the identity). ``map[a]``
is the image of source element ``a``. An explicit action is a list with one
entry per target element ``g``: a permutation ``p`` of the source with
``p[a] = a^g``.
"""

import json
from dataclasses import asdict, dataclass, field

import numpy as np

from xmod.crossed import NormalMap
from xmod.errors import GroupAxiomError, NotABijection, NotNormal, ParseError, XmodError
from xmod.groups import (
    DEFAULT_MAX_ORDER,
    GroupAction,
    Homomorphism,
    group_from_permutations,
    group_from_table,
    trivial_action,
)

SCHEMA = "xmod-report/1"
MAX_WITNESSES = 20


@dataclass
class ProblemSpec:
    label: str
    normal_map: NormalMap
    levels: int = 3
    max_order: int = DEFAULT_MAX_ORDER
    format: str = "text"


def _need(obj, key, path, kind=None):
    if not isinstance(obj, dict) or key not in obj:
        raise ParseError(f"missing field {key!r}", path=path)
    v = obj[key]
    if kind is not None and not isinstance(v, kind):
        raise ParseError(f"field {key!r} has the wrong type", path=f"{path}.{key}")
    return v


def _int_list(v, path):
    if not isinstance(v, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in v):
        raise ParseError("expected a list of integers", path=path)
    return v


def _group(name, spec, max_order):
    path = f"groups.{name}"
    if not isinstance(spec, dict):
        raise ParseError("group must be an object", path=path)
    try:
        if "table" in spec:
            rows = _need(spec, "table", path, list)
            table = [_int_list(r, f"{path}.table[{i}]") for i, r in enumerate(rows)]
            n = len(table)
            if n == 0 or any(len(r) != n for r in table):
                raise ParseError("table must be square and non-empty", path=f"{path}.table")
            if any(not 0 <= x < n for r in table for x in r):
                raise ParseError("table entry out of range", path=f"{path}.table")
            if n > max_order:
                raise ParseError(f"group order {n} exceeds cap {max_order}", path=path)
            identity = spec.get("identity", 0)
            if not isinstance(identity, int) or not 0 <= identity < n:
                raise ParseError("identity out of range", path=f"{path}.identity")
            return group_from_table(table, identity, name)
        if "permutations" in spec:
            p = _need(spec, "permutations", path, dict)
            degree = _need(p, "degree", f"{path}.permutations", int)
            gens = _need(p, "generators", f"{path}.permutations", list)
            gens = [_int_list(g, f"{path}.permutations.generators[{i}]") for i, g in enumerate(gens)]
            return group_from_permutations(degree, gens, max_order, name)
    except GroupAxiomError as exc:
        raise ParseError(f"not a group: {type(exc).__name__} witness {exc.witness}", path=path) from None
    except NotABijection as exc:
        raise ParseError(str(exc), path=path) from None
    except XmodError as exc:
        raise ParseError(str(exc), path=path) from None
    raise ParseError("group needs 'table' or 'permutations'", path=path)


def parse_problem(text, max_order=None):
    """Parse a problem document into a :class:`ProblemSpec`.

    Raises :class:`ParseError` for malformed input and :class:`NotNormal` when
    a conjugation action is requested for a map whose image is not normal.
    """
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, line=exc.lineno, column=exc.colno) from None
    if not isinstance(doc, dict):
        raise ParseError("top level must be an object")
    opts = doc.get("options", {}) or {}
    if not isinstance(opts, dict):
        raise ParseError("options must be an object", path="options")
    cap = max_order or opts.get("max_order", DEFAULT_MAX_ORDER)
    groups_doc = _need(doc, "groups", "", dict)
    groups = {name: _group(name, spec, cap) for name, spec in sorted(groups_doc.items())}
    src = _need(doc, "source", "", str)
    tgt = _need(doc, "target", "", str)
    for key, name in (("source", src), ("target", tgt)):
        if name not in groups:
            raise ParseError(f"unknown group {name!r}", path=key)
    N, G = groups[src], groups[tgt]
    images = _int_list(_need(doc, "map", ""), "map")
    if len(images) != N.order or any(not 0 <= x < G.order for x in images):
        raise ParseError("map must list one target index per source element", path="map")
    n = Homomorphism(N, G, images=images, label="n")
    action = _need(doc, "action", "")
    if action == "trivial":
        ell = trivial_action(G, N)
    elif action == "conjugation":
        ell = _conjugation(N, G, n)
    elif isinstance(action, list):
        if len(action) != G.order:
            raise ParseError("action needs one permutation per target element", path="action")
        cols = []
        for g, perm in enumerate(action):
            perm = _int_list(perm, f"action[{g}]")
            if sorted(perm) != list(range(N.order)):
                raise ParseError("action entry is not a permutation of the source", path=f"action[{g}]")
            cols.append(perm)
        ell = GroupAction(G, N, np.array(cols, dtype=np.int64).T)
    else:
        raise ParseError("action must be 'trivial', 'conjugation' or a list of permutations", path="action")
    levels = opts.get("levels", 3)
    if not isinstance(levels, int) or levels < 1:
        raise ParseError("levels must be a positive integer", path="options.levels")
    fmt = opts.get("format", "text")
    if fmt not in ("text", "json"):
        raise ParseError("format must be 'text' or 'json'", path="options.format")
    label = doc.get("label", "input")
    return ProblemSpec(str(label), NormalMap(N, G, n, ell, str(label)), levels, cap, fmt)


def _conjugation(N, G, n):
    img = n.images
    if np.unique(img).size != N.order:
        raise ParseError("conjugation action needs an injective map", path="action")
    back = np.full(G.order, -1, dtype=np.int64)
    back[img] = np.arange(N.order)
    a = np.repeat(img, G.order)
    g = np.tile(G.elements(), N.order)
    conj = back[G.conj_many(a, g)]
    if np.any(conj < 0):
        k = int(np.nonzero(conj < 0)[0][0])
        raise NotNormal("image of the map is not normal, conjugation is undefined",
                        witness=(k // G.order, int(g[k])))
    return GroupAction(G, N, conj.reshape(N.order, G.order))


# --------------------------------------------------------------------- reports


@dataclass
class CheckResult:
    name: str
    status: str
    violations: int = 0
    witnesses: list = field(default_factory=list)
    details: list = field(default_factory=list)


@dataclass
class Report:
    command: str
    input: str
    ok: bool
    checks: list = field(default_factory=list)
    cardinalities: dict = field(default_factory=dict)
    wall_time_s: float = None
    error: str = None
    schema: str = SCHEMA

    @classmethod
    def from_axiom_report(cls, command, label, rep, **kw):
        checks = []
        for name, status in sorted(rep.checks.items()):
            vs = sorted(v for v in rep.violations if v.tag == name)
            checks.append(CheckResult(
                name, status, len(vs),
                [list(_listify(v.witness)) for v in vs[:MAX_WITNESSES]],
                sorted({v.detail for v in vs if v.detail}),
            ))
        ok = rep.ok and all(c.status != "fail" for c in checks)
        return cls(command, label, ok, checks, **kw)

    def check(self, name):
        for c in self.checks:
            if c.name == name:
                return c
        return None

    def to_dict(self):
        return asdict(self)

    def to_json(self):
        return json.dumps(self.to_dict(), sort_keys=True, indent=2)

    @classmethod
    def from_dict(cls, d):
        d = dict(d)
        d["checks"] = [CheckResult(**c) for c in d.get("checks", [])]
        return cls(**d)

    @classmethod
    def from_json(cls, text):
        return cls.from_dict(json.loads(text))

    def to_text(self):
        lines = [f"{self.command} {self.input}: {'PASS' if self.ok else 'FAIL'}"]
        if self.error:
            lines.append(f"  error: {self.error}")
        for c in self.checks:
            line = f"  [{c.status:7s}] {c.name}"
            if c.violations:
                line += f"  ({c.violations} violations; first witness {c.witnesses[0]})"
            lines.append(line)
            for d in c.details:
                lines.append(f"            {d}")
        for k, v in sorted(self.cardinalities.items()):
            lines.append(f"  |{k}| = {v}")
        if self.wall_time_s is not None:
            lines.append(f"  wall time {self.wall_time_s:.3f}s")
        return "\n".join(lines)


def _listify(w):
    if isinstance(w, (tuple, list)):
        return [_listify(v) for v in w]
    return w


def problem_document(nm, levels=3):
    """Problem-file dict for an in-memory normal map (tables and an explicit action)."""
    return {
        "label": nm.label,
        "groups": {
            "N": {"table": nm.N.table.tolist(), "identity": int(nm.N.identity)},
            "G": {"table": nm.G.table.tolist(), "identity": int(nm.G.identity)},
        },
        "source": "N",
        "target": "G",
        "map": [int(v) for v in nm.n.images],
        "action": nm.ell.table.T.tolist(),
        "options": {"levels": levels},
    }
