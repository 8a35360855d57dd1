"""JSON reading and writing for every object kind.

Each file is a JSON object with a "kind" key and a "field" key ("Q", "F3",
...).  Matrices are {"shape": [rows, cols], "rows": [[...], ...]} and
scalars are integers or strings "a/b" (rationals) or "r mod p".  Any nested
object may instead be a string naming a built-in fixture (see
``fixtures.py``) or a path relative to the containing file.  The format is
described in docs/format.md.
"""

import json
from importlib import resources
from pathlib import Path

from . import fixtures
from .coalgebra import Coalgebra, verify_coalgebra
from .crossed import CocleftData, FactorSet, WeakAction, verify_cocleft_data
from .errors import NotAGroup, NotInvertible, Report, ShapeMismatch
from .group import FiniteGroup, cyclic_group, group_from_table, symmetric_group
from .group_coalgebra import GComodule, GroupCoalgebra, verify_gcomodule, verify_group_coalgebra
from .linalg import Field, Matrix
from .smash import SmashComodule, verify_smash_comodule


class ParseError(ValueError):
    pass


class ValidationError(ValueError):
    def __init__(self, msg, report):
        super().__init__(msg)
        self.report = report


# matrices and scalars

def matrix_to_json(m):
    F = m.field
    return {"shape": [m.rows, m.cols], "rows": [[F.format(x) for x in row] for row in m.tolist()]}


def matrix_from_json(F, obj):
    if not isinstance(obj, dict) or "rows" not in obj:
        raise ParseError(f"expected a matrix object, got {type(obj).__name__}")
    rows = obj["rows"]
    shape = obj.get("shape")
    if shape is None:
        if not rows:
            raise ParseError("an empty matrix needs an explicit shape")
        shape = [len(rows), len(rows[0])]
    r, c = shape
    if len(rows) != r or any(len(row) != c for row in rows):
        raise ParseError(f"matrix rows do not match shape {shape}")
    try:
        return Matrix.from_entries(F, r, c, [F(x) for row in rows for x in row])
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad scalar: {exc}") from None


def _pairs_to_json(d):
    return {f"{a},{b}": matrix_to_json(m) for (a, b), m in sorted(d.items())}


def _pairs_from_json(F, items):
    """{"a,b": matrix} (also accepted: a list of {"pair": [a, b], "matrix": ...})."""
    out = {}
    if isinstance(items, dict):
        for key, m in items.items():
            a, b = (int(x) for x in key.split(","))
            out[a, b] = matrix_from_json(F, m)
        return out
    for item in items:
        a, b = item["pair"]
        out[int(a), int(b)] = matrix_from_json(F, item["matrix"])
    return out


def _flat_or_matrix(F, obj, rows, cols):
    """A matrix object, or a flat column-major list of rows*cols scalars."""
    if isinstance(obj, list):
        if len(obj) != rows * cols:
            raise ParseError(f"expected {rows * cols} entries, got {len(obj)}")
        try:
            vals = [F(x) for x in obj]
        except (TypeError, ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad scalar: {exc}") from None
        return Matrix.from_entries(F, rows, cols, [vals[j * rows + i] for i in range(rows) for j in range(cols)])
    m = matrix_from_json(F, obj)
    if m.shape != (rows, cols):
        raise ParseError(f"matrix has shape {m.shape}, expected {(rows, cols)}")
    return m


def _dims(obj, G):
    dims = obj["dims"]
    if isinstance(dims, dict):
        dims = [dims[str(a)] for a in G]
    dims = [int(d) for d in dims]
    if len(dims) != G.order or any(d < 0 for d in dims):
        raise ParseError(f"bad dims {dims}")
    return dims


# groups

NAMED_GROUPS = {"Z1": lambda: cyclic_group(1), "S3": lambda: symmetric_group(3)}


def group_by_name(name):
    s = str(name).strip().upper()
    if s in NAMED_GROUPS:
        return NAMED_GROUPS[s]()
    if s.startswith("Z") and s[1:].isdigit():
        return cyclic_group(int(s[1:]))
    if s.startswith("S") and s[1:].isdigit():
        return symmetric_group(int(s[1:]))
    raise ParseError(f"unknown group {name!r}")


def group_to_json(g):
    out = {"kind": "group", "order": g.order, "table": [list(r) for r in g.table]}
    if g.names:
        out["names"] = list(g.names)
    return out


def group_from_json(obj):
    if isinstance(obj, str):
        return group_by_name(obj)
    try:
        table = obj["table"]
        if "order" in obj and len(table) != obj["order"]:
            raise ParseError("table size does not match order")
        return group_from_table(table, obj.get("names"))
    except NotAGroup as exc:
        rep = Report("group")
        rep.fail(str(exc))
        raise ValidationError(f"not a group: {exc}", rep) from None
    except (KeyError, TypeError) as exc:
        raise ParseError(f"malformed group: {exc}") from None


# dumping

def dump(obj):
    """JSON-ready dict for any supported object."""
    if isinstance(obj, FiniteGroup):
        return group_to_json(obj)
    if isinstance(obj, Coalgebra):
        out = {"kind": "coalgebra", "field": obj.field.name, "dim": obj.dim,
               "comult": matrix_to_json(obj.comult), "counit": matrix_to_json(obj.counit)}
        if obj.name:
            out["name"] = obj.name
        return out
    if isinstance(obj, GroupCoalgebra):
        out = {"kind": "group_coalgebra", "field": obj.field.name, "group": group_to_json(obj.group),
               "dims": list(obj.dims), "comult": _pairs_to_json(obj.comult),
               "counit": matrix_to_json(obj.counit)}
        if obj.name:
            out["name"] = obj.name
        if obj.meta:
            out["meta"] = obj.meta
        return out
    if isinstance(obj, GComodule):
        return {"kind": "gcomodule", "field": obj.coalgebra.field.name, "coalgebra": dump(obj.coalgebra),
                "dims": list(obj.dims), "coaction": _pairs_to_json(obj.coaction)}
    if isinstance(obj, SmashComodule):
        return {"kind": "smash_comodule", "field": obj.base.field.name, "base": dump(obj.base),
                "dim": obj.dim, "coactions": {str(b): matrix_to_json(obj.coaction[b]) for b in obj.base.group}}
    if isinstance(obj, WeakAction):
        return {"kind": "weak_action", "field": obj.coalgebra.field.name, "coalgebra": dump(obj.coalgebra),
                "group": group_to_json(obj.group), "maps": [matrix_to_json(obj[a]) for a in obj.group]}
    if isinstance(obj, FactorSet):
        return {"kind": "factor_set", "field": obj.coalgebra.field.name, "coalgebra": dump(obj.coalgebra),
                "group": group_to_json(obj.group), "f": _pairs_to_json(obj.f), "g": _pairs_to_json(obj.g)}
    if isinstance(obj, CocleftData):
        c = obj.coalgebra
        return {"kind": "cocleft_data", "field": c.field.name, "group_coalgebra": dump(c),
                "u": [matrix_to_json(obj.u[a]) for a in c.group],
                "v": [matrix_to_json(obj.v[a]) for a in c.group]}
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def functionals_to_json(F, values):
    """A per-element family of functionals (e.g. a morphism to k<G> or a 1-cochain)."""
    return {"kind": "functionals", "field": F.name, "values": [matrix_to_json(values[a]) for a in sorted(values)]}


def dumps(obj):
    return json.dumps(dump(obj), indent=2)


# loading

def _field(obj, default=None):
    spec = obj.get("field", default)
    if spec is None:
        raise ParseError("missing field spec")
    try:
        return Field.parse(spec)
    except (ValueError, KeyError) as exc:
        raise ParseError(f"bad field spec: {exc}") from None


def _check(rep, what):
    if not rep:
        raise ValidationError(f"{what} fails verification: {rep.failures[:3]}", rep)


def _resolve(ref, base, kinds):
    """A nested object: inline dict, fixture name or relative path."""
    if isinstance(ref, dict):
        return ref
    if isinstance(ref, str):
        if ref in fixtures.GROUP_COALGEBRAS and "group_coalgebra" in kinds:
            return ref
        if ref.upper() in fixtures.COALGEBRAS and "coalgebra" in kinds:
            return ref
        path = Path(base or ".") / ref
        if path.exists():
            return read_json(path)
        data = fixture_json(ref)
        if data is not None:
            return data
    raise ParseError(f"cannot resolve reference {ref!r}")


def _named(ref, F):
    if ref in fixtures.GROUP_COALGEBRAS:
        return fixtures.GROUP_COALGEBRAS[ref](F)
    return fixtures.COALGEBRAS[ref.upper()](F)


def from_json(obj, base=None, validate=True, field=None):
    """Build the object described by a parsed JSON value."""
    if isinstance(obj, str):
        F = field or fixtures.F3
        return _named(_resolve(obj, base, ("group_coalgebra", "coalgebra")), F)
    if not isinstance(obj, dict):
        raise ParseError("expected a JSON object")
    kind = obj.get("kind")
    try:
        if kind == "group":
            return group_from_json(obj)
        F = field or _field(obj)
        if kind == "coalgebra":
            dim = int(obj["dim"])
            if dim < 0:
                raise ParseError("negative dimension")
            c = Coalgebra(F, dim, _flat_or_matrix(F, obj["comult"], dim * dim, dim),
                          _flat_or_matrix(F, obj["counit"], 1, dim), name=obj.get("name"))
            if validate:
                _check(verify_coalgebra(c), "coalgebra")
            return c
        if kind == "group_coalgebra":
            G = group_from_json(obj["group"])
            dims = _dims(obj, G)
            c = GroupCoalgebra(F, G, dims, _pairs_from_json(F, obj["comult"]),
                               _flat_or_matrix(F, obj["counit"], 1, dims[G.identity]),
                               name=obj.get("name"), meta=obj.get("meta"))
            if validate:
                _check(verify_group_coalgebra(c), "group coalgebra")
            return c
        if kind == "gcomodule":
            c = _sub(obj, "coalgebra", base, F, validate, ("group_coalgebra",))
            m = GComodule(c, _dims(obj, c.group), _pairs_from_json(F, obj["coaction"]))
            if validate:
                _check(verify_gcomodule(m), "G-comodule")
            return m
        if kind == "smash_comodule":
            c = _sub(obj, "base", base, F, validate, ("group_coalgebra",))
            raw = obj["coactions"]
            if isinstance(raw, dict):
                coaction = {int(b): matrix_from_json(F, x) for b, x in raw.items()}
            else:
                coaction = {b: matrix_from_json(F, x) for b, x in enumerate(raw)}
            m = SmashComodule(c, int(obj["dim"]), coaction)
            if validate:
                _check(verify_smash_comodule(m), "smash comodule")
            return m
        if kind == "weak_action":
            C = _sub(obj, "coalgebra", base, F, validate, ("coalgebra",))
            G = group_from_json(obj["group"])
            lam = WeakAction(C, G, _per_element(F, obj["maps"], G))
            if validate:
                _check(lam.verify(), "weak action")
            return lam
        if kind == "factor_set":
            C = _sub(obj, "coalgebra", base, F, validate, ("coalgebra",))
            G = group_from_json(obj["group"])
            f = _pairs_from_json(F, obj["f"])
            g = _pairs_from_json(F, obj["g"]) if "g" in obj else None
            fs = FactorSet(C, G, f, g)
            if validate:
                _check(fs.verify(), "factor set")
            return fs
        if kind == "cocleft_data":
            c = _sub(obj, "group_coalgebra", base, F, validate, ("group_coalgebra",))
            d = CocleftData(c, _per_element(F, obj["u"], c.group), _per_element(F, obj["v"], c.group))
            if validate:
                _check(verify_cocleft_data(d), "cocleft data")
            return d
        if kind == "functionals":
            return {a: matrix_from_json(F, x) for a, x in enumerate(obj["values"])}
    except (KeyError, TypeError, ShapeMismatch, IndexError, AttributeError) as exc:
        raise ParseError(f"malformed {kind}: {type(exc).__name__}: {exc}") from None
    except NotInvertible as exc:
        rep = Report(kind)
        rep.fail(str(exc), where=list(exc.where) if isinstance(exc.where, tuple) else exc.where)
        raise ValidationError(str(exc), rep) from None
    raise ParseError(f"unknown kind {kind!r}")


def _per_element(F, items, G):
    if len(items) != G.order:
        raise ParseError(f"expected {G.order} entries, got {len(items)}")
    return {a: matrix_from_json(F, x) for a, x in enumerate(items)}


def _sub(obj, key, base, F, validate, kinds):
    ref = _resolve(obj[key], base, kinds)
    if isinstance(ref, str):
        return _named(ref, F)
    sub_field = Field.parse(ref["field"]) if "field" in ref else F
    if sub_field != F:
        raise ParseError(f"field mismatch: {sub_field} inside {F}")
    return from_json(ref, base, validate, F)


def read_json(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON: {exc}") from None


def read_ref(ref):
    """JSON contents of a file path or a shipped fixture name."""
    p = Path(ref)
    if p.exists():
        return read_json(p)
    data = fixture_json(p.name)
    if data is None:
        raise ParseError(f"no such file or fixture: {ref}")
    return data


def fixture_json(name):
    """Parsed contents of a shipped fixture file, or None."""
    fname = name if name.endswith(".json") else name + ".json"
    res = resources.files("gcoalg") / "data" / fname
    if res.is_file():
        return json.loads(res.read_text(encoding="utf-8"))
    return None


def load(path, validate=True):
    """Load and (by default) verify the object in a file or shipped fixture."""
    p = Path(path)
    if p.exists():
        return from_json(read_json(p), p.parent, validate)
    data = fixture_json(p.name)
    if data is None:
        raise ParseError(f"no such file or fixture: {path}")
    return from_json(data, None, validate)


def save(obj, path):
    Path(path).write_text(dumps(obj) + "\n", encoding="utf-8")
