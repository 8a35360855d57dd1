"""Command-line interface: ``gcoalg <command> ...`` prints a JSON report.

Exit codes: 0 the property holds / the construction succeeded, 1 the
property fails (a witness is printed), 2 usage errors, unreadable input or
an inconclusive search.
"""

import argparse
import json
import sys

from . import cohomology as coh
from . import fixtures
from .coalgebra import Coalgebra, verify_coalgebra
from .crossed import (
    CocleftData,
    FactorSet,
    WeakAction,
    build_crossed,
    crossed_from_cocleft,
    is_cocleft,
    normalize_factor_set,
    verify_cocleft_data,
)
from .errors import InvalidCrossedData, NotCocommutative, NotGradable, NotInvertible, SupportViolation
from .group_coalgebra import (
    GComodule,
    GroupCoalgebra,
    dual_graded_algebra,
    is_strong,
    is_strongly_graded,
    strong_all_pairs,
    strong_via_suspensions,
    suspension,
    verify_gcomodule,
    verify_group_coalgebra,
)
from .io import (
    ParseError,
    ValidationError,
    dump,
    from_json,
    functionals_to_json,
    group_by_name,
    group_from_json,
    load,
    matrix_to_json,
    read_json,
    read_ref,
)
from .linalg import Field
from .smash import SmashComodule, build_smash, from_smash_comodule, to_smash_comodule, verify_smash_comodule


class Inconclusive(Exception):
    pass


def _emit(obj):
    print(json.dumps(obj, indent=2))


def _maps(family, order):
    return [matrix_to_json(family[a]) for a in range(order)]


def _load_raw(path):
    """Load without verification so that verify can report the failure itself."""
    return load(path, validate=False)


def _group(spec):
    try:
        return group_by_name(spec)
    except ParseError:
        return group_from_json(read_json(spec))


def _gc(args):
    path = args.input or args.path
    if path is None:
        raise ParseError("no input file given")
    obj = load(path)
    if not isinstance(obj, GroupCoalgebra):
        raise ParseError(f"{path} does not hold a group coalgebra")
    return obj


# commands

def cmd_verify(args):
    obj = _load_raw(args.path)
    if isinstance(obj, Coalgebra):
        rep = verify_coalgebra(obj)
    elif isinstance(obj, GroupCoalgebra):
        rep = verify_group_coalgebra(obj)
    elif isinstance(obj, GComodule):
        rep = verify_gcomodule(obj)
    elif isinstance(obj, SmashComodule):
        rep = verify_smash_comodule(obj)
    elif isinstance(obj, (WeakAction, FactorSet)):
        rep = obj.verify()
    elif isinstance(obj, CocleftData):
        rep = verify_cocleft_data(obj)
    else:
        raise ParseError("nothing to verify in this file")
    _emit(rep.to_json())
    return 0 if rep else 1


def cmd_strong(args):
    c = _gc(args)
    diag = is_strong(c)
    pairs = strong_all_pairs(c)
    susp = strong_via_suspensions(c)
    _emit({
        "strong": diag.strong,
        "witnesses": diag.witnesses,
        "all_pairs": pairs.to_json(),
        "suspensions": susp.to_json(),
        "characterizations_agree": diag.strong == pairs.strong == susp.strong,
    })
    return 0 if diag.strong else 1


def cmd_dual(args):
    c = _gc(args)
    R = dual_graded_algebra(c)
    G = R.group
    _emit({
        "kind": "graded_algebra",
        "field": R.field.name,
        "dims": list(R.dims),
        "mult": {f"{a},{b}": matrix_to_json(R.mult[a, b]) for a in G for b in G},
        "unit": matrix_to_json(R.unit),
        "strongly_graded": is_strongly_graded(R),
        "strong": is_strong(c).strong,
    })
    return 0


def cmd_suspend(args):
    c = _gc(args)
    if not 0 <= args.at < c.group.order:
        raise ParseError(f"no group element {args.at}")
    _emit(dump(suspension(c, args.at)))
    return 0


def cmd_smash(args):
    if args.action == "build":
        _emit(dump(build_smash(_gc(args))))
        return 0
    obj = load(args.input or args.path)
    if args.action == "to":
        if not isinstance(obj, GComodule):
            raise ParseError("smash to expects a G-comodule")
        _emit(dump(to_smash_comodule(obj)))
        return 0
    if not isinstance(obj, SmashComodule):
        raise ParseError("smash from expects a smash comodule")
    try:
        _emit(dump(from_smash_comodule(obj)))
    except (NotGradable, SupportViolation) as exc:
        _emit({"error": type(exc).__name__, "message": str(exc)})
        return 1
    return 0


def _crossed_inputs(args):
    C = load(args.coalgebra)
    lam = load(args.action_file)
    f = load(args.factorset)
    if not isinstance(C, Coalgebra) or not isinstance(lam, WeakAction) or not isinstance(f, FactorSet):
        raise ParseError("expected a coalgebra, a weak action and a factor set")
    if args.group is not None and _group(args.group) != lam.group:
        raise ParseError("the action is indexed by a different group")
    if lam.coalgebra != C or f.coalgebra != C:
        raise ParseError("action and factor set live on a different coalgebra")
    return C, lam, f


def cmd_crossed(args):
    C, lam, f = _crossed_inputs(args)
    try:
        if args.action == "build":
            _emit(dump(build_crossed(C, lam, f, name=args.name)))
            return 0
        n = normalize_factor_set(C, lam, f)
    except InvalidCrossedData as exc:
        _emit({"error": "InvalidCrossedData", "report": exc.report.to_json()})
        return 1
    order = lam.group.order
    _emit({
        "action": dump(n.action),
        "factor_set": dump(n.factor_set),
        "iso": _maps(n.iso, order),
        "inverse": _maps(n.inverse, order),
    })
    return 0


def cmd_cocleft(args):
    c = _gc(args)
    if args.action == "decide":
        res = is_cocleft(c, seed=args.seed)
        out = {"cocleft": res.cocleft, "reason": res.reason, "methods": res.methods}
        if res.witness is not None:
            out["witness"] = dump(res.witness)
        _emit(out)
        return {True: 0, False: 1, None: 2}[res.cocleft]
    if args.data:
        d = load(args.data)
        if not isinstance(d, CocleftData) or d.coalgebra != c:
            raise ParseError("cocleft data for a different group coalgebra")
    else:
        res = is_cocleft(c, seed=args.seed)
        if res.cocleft is not True:
            _emit({"cocleft": res.cocleft, "reason": res.reason})
            return 1 if res.cocleft is False else 2
        d = res.witness
    dec = crossed_from_cocleft(c, d)
    order = c.group.order
    _emit({
        "action": dump(dec.action),
        "factor_set": dump(dec.factor_set),
        "crossed": dump(dec.target),
        "iso": _maps(dec.iso, order),
        "inverse": _maps(dec.inverse, order),
    })
    return 0


def _fixture_coalgebra(name, F):
    key = name.upper()
    if key in fixtures.COALGEBRAS:
        return fixtures.COALGEBRAS[key](F)
    C = load(name)
    if not isinstance(C, Coalgebra):
        raise ParseError(f"{name} is not a coalgebra")
    return C


def cmd_cohomology(args):
    if args.action == "z2-check":
        f = load(args.factorset)
        if not isinstance(f, FactorSet):
            raise ParseError("expected a factor set")
        lam = load(args.action_file) if args.action_file else WeakAction.trivial(f.coalgebra, f.group)
        m = coh.GModuleAlgebra(f.coalgebra, lam)
        act = coh.check_right_g_action(f.coalgebra, lam)
        rep = coh.is_2cocycle(m, f)
        rep.extend(act, part="action")
        _emit(rep.to_json())
        return 0 if rep else 1

    if args.action == "classify":
        F = Field.parse(args.field)
        G = _group(args.group)
        C = _fixture_coalgebra(args.coalgebra, F)
        if args.action_file:
            lam = load(args.action_file)
        else:
            lam = WeakAction.trivial(C, G)
        m = coh.GModuleAlgebra(C, lam)
        if not F.is_prime_field:
            raise Inconclusive("classification enumerates a prime field")
        units = len(coh.invertible_functionals(C))
        if units ** (G.order ** 2) > 10**6:
            raise Inconclusive("2-cochain space too large to enumerate")
        h2 = coh.classify_h2(m)
        h1 = coh.classify_h1(m)
        _emit({
            "field": F.name,
            "group_order": G.order,
            "coalgebra_dim": C.dim,
            "units": units,
            "z2": sum(len(c) for c in h2),
            "b2": len(coh.b2(m)),
            "h2": len(h2),
            "h2_representatives": [
                {f"{a},{b}": matrix_to_json(v) for (a, b), v in sorted(cls[0].items())}
                for cls in h2
            ],
            "z1": sum(len(c) for c in h1),
            "b1": len(coh.b1(m)),
            "h1": len(h1),
        })
        return 0

    # omega
    c = _gc(args)
    members = coh.omega_members(c)
    if args.basepoint:
        u0 = from_json(read_ref(args.basepoint), field=c.field)
    elif members:
        u0 = members[0]
    else:
        _emit({"omega": 0, "smash_type": False})
        return 1
    thetas = [coh.theta_from_morphisms(c, u, u0) for u in members]
    roundtrip = all(coh.morphism_from_theta(c, u0, t) == u for u, t in zip(members, thetas))
    classes = coh.omega_classes(c, seed=args.seed)
    order = c.group.order
    _emit({
        "basepoint": functionals_to_json(c.field, u0),
        "omega": len(members),
        "members": [_maps(u, order) for u in members],
        "thetas": [_maps(t, order) for t in thetas],
        "bijection_roundtrip": roundtrip,
        "classes": None if classes is None else len(classes),
    })
    if classes is None:
        return 2
    return 0


def build_parser():
    p = argparse.ArgumentParser(prog="gcoalg", description="Group coalgebra verification and constructions.")
    sub = p.add_subparsers(dest="command", required=True)

    def with_input(sp):
        sp.add_argument("path", nargs="?", help="input file or fixture name")
        sp.add_argument("--input", help="input file or fixture name")
        return sp

    sp = sub.add_parser("verify", help="check the axioms of any object file")
    sp.add_argument("path")
    sp.set_defaults(func=cmd_verify)

    with_input(sub.add_parser("strong", help="strongness with witnesses")).set_defaults(func=cmd_strong)
    with_input(sub.add_parser("dual", help="dual graded algebra")).set_defaults(func=cmd_dual)
    sp = with_input(sub.add_parser("suspend", help="suspension G-comodule"))
    sp.add_argument("--at", type=int, required=True)
    sp.set_defaults(func=cmd_suspend)

    sp = sub.add_parser("smash", help="smash coproducts and their comodules")
    sp.add_argument("action", choices=["build", "to", "from"])
    with_input(sp).set_defaults(func=cmd_smash)

    sp = sub.add_parser("crossed", help="crossed coproducts")
    sp.add_argument("action", choices=["build", "normalize"])
    sp.add_argument("--coalgebra", required=True)
    sp.add_argument("--action", dest="action_file", required=True)
    sp.add_argument("--factorset", required=True)
    sp.add_argument("--group")
    sp.add_argument("--name")
    sp.set_defaults(func=cmd_crossed)

    sp = sub.add_parser("cocleft", help="cocleftness decisions and crossed decompositions")
    sp.add_argument("action", choices=["decide", "extract"])
    sp.add_argument("path", nargs="?")
    sp.add_argument("--input")
    sp.add_argument("--data", help="cocleft data file (extract)")
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_cocleft)

    sp = sub.add_parser("cohomology", help="cocycles, classification and the Omega bijections")
    sp.add_argument("action", choices=["z2-check", "classify", "omega"])
    sp.add_argument("path", nargs="?")
    sp.add_argument("--input")
    sp.add_argument("--factorset")
    sp.add_argument("--action", dest="action_file")
    sp.add_argument("--field", default="F3")
    sp.add_argument("--group", default="Z2")
    sp.add_argument("--coalgebra", default="K")
    sp.add_argument("--basepoint")
    sp.add_argument("--seed", type=int, default=0)
    sp.set_defaults(func=cmd_cohomology)
    return p


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except ValidationError as exc:
        _emit({"error": "ValidationError", "message": str(exc), "report": exc.report.to_json()})
        return 1
    except Inconclusive as exc:
        _emit({"inconclusive": True, "reason": str(exc)})
        return 2
    except (ParseError, NotCocommutative, NotInvertible, OSError, ValueError) as exc:
        _emit({"error": type(exc).__name__, "message": str(exc)})
        return 2


if __name__ == "__main__":
    sys.exit(main())
