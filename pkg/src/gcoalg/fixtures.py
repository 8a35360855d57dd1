"""Named example objects used by the tests, the CLI and the shipped JSON files."""

from .coalgebra import Coalgebra
from .crossed import FactorSet, WeakAction, build_crossed, build_kG
from .group import cyclic_group, symmetric_group
from .group_coalgebra import GroupCoalgebra, cofree
from .linalg import Field, Matrix
from .smash import build_smash

F3 = Field(3)


def ground(F=F3):
    """k as a one-dimensional coalgebra."""
    return Coalgebra(F, 1, Matrix.identity(F, 1), Matrix.identity(F, 1), name="k")


def grouplike(n, F=F3):
    """n group-like basis vectors g_i with Delta(g_i) = g_i (x) g_i."""
    cols = []
    for i in range(n):
        col = [F.zero] * (n * n)
        col[i * n + i] = F.one
        cols.append(col)
    return Coalgebra(F, n, Matrix.from_columns(F, cols, n * n), Matrix.row(F, [1] * n),
                     name=f"C{n}GL" if n != 1 else "k")


def c2gl(F=F3):
    return grouplike(2, F)


def comatrix(n=2, F=F3):
    """Delta(e_ij) = sum_k e_ik (x) e_kj and eps(e_ij) = delta_ij; basis e_ij -> i*n + j."""
    d = n * n
    cols = []
    for i in range(n):
        for j in range(n):
            col = [F.zero] * (d * d)
            for k in range(n):
                col[(i * n + k) * d + k * n + j] = F.one
            cols.append(col)
    counit = Matrix.row(F, [1 if i == j else 0 for i in range(n) for j in range(n)])
    return Coalgebra(F, d, Matrix.from_columns(F, cols, d * d), counit, name=f"MAT{n}")


def swap_action(C, group):
    """Odd elements of a cyclic group of even order swap g1 and g2."""
    F = C.field
    swap = Matrix.permutation(F, [1, 0])
    return WeakAction(C, group, {a: (swap if a % 2 else C.I) for a in group})


def kg2(F=F3):
    c = build_kG(cyclic_group(2), F)
    c.name = "KG2"
    return c


def ks3(F=F3):
    c = build_kG(symmetric_group(3), F)
    c.name = "KS3"
    return c


def c2gl_z2(F=F3):
    return cofree(c2gl(F), cyclic_group(2), name="C2GL_Z2")


def smash_c2gl_z2(F=F3):
    c = build_smash(c2gl_z2(F))
    c.name = "SMASH_C2GL_Z2"
    return c


def crossed1_data(F=F3):
    C = c2gl(F)
    G = cyclic_group(2)
    return C, swap_action(C, G), FactorSet.trivial(C, G)


def crossed1(F=F3):
    C, lam, f = crossed1_data(F)
    return build_crossed(C, lam, f, name="CROSSED1")


def neg_data(F=F3):
    """k with f[s, s] = -1 and every other value 1, over Z2."""
    C = ground(F)
    G = cyclic_group(2)
    one = C.counit
    f = {(a, b): one for a in G for b in G}
    f[1, 1] = Matrix.row(F, [-1])
    return C, WeakAction.trivial(C, G), FactorSet(C, G, f)


def neg(F=F3):
    C, lam, f = neg_data(F)
    return build_crossed(C, lam, f, name="NEG")


def trunc(F=F3, n=2):
    """C_e = k group-like, every other component zero."""
    G = cyclic_group(n)
    dims = [1] + [0] * (n - 1)
    comult = {}
    for a in G:
        for b in G:
            ab = G.mul(a, b)
            comult[a, b] = (Matrix.identity(F, 1) if a == b == 0
                            else Matrix.zeros(F, dims[a] * dims[b], dims[ab]))
    return GroupCoalgebra(F, G, dims, comult, Matrix.identity(F, 1),
                          name="TRUNC" if n == 2 else f"TRUNC{n}")


GROUP_COALGEBRAS = {
    "KG2": kg2,
    "KS3": ks3,
    "C2GL_Z2": c2gl_z2,
    "SMASH_C2GL_Z2": smash_c2gl_z2,
    "CROSSED1": crossed1,
    "NEG": neg,
    "TRUNC": trunc,
}

COALGEBRAS = {"K": ground, "C2GL": c2gl, "MAT2": lambda F=F3: comatrix(2, F)}

# documented classification over F3: (strong, cocleft, smash type)
CLASSIFICATION = {
    "KG2": (True, True, True),
    "KS3": (True, True, True),
    "C2GL_Z2": (True, True, True),
    "SMASH_C2GL_Z2": (True, True, True),
    "CROSSED1": (True, True, True),
    "NEG": (True, True, False),
    "TRUNC": (False, False, False),
}


def kg2_basepoint(F=F3):
    """The counit morphism u0: KG2 -> k<Z2> (u0[s] = 1 on p_s)."""
    one = Matrix.row(F, [1])
    return {0: one, 1: one}


def shipped_objects(F=F3):
    """Everything written to the data directory, by file stem."""
    C2 = c2gl(F)
    objs = {name: fn(F) for name, fn in GROUP_COALGEBRAS.items()}
    objs.update({name: fn(F) for name, fn in COALGEBRAS.items()})
    objs["SWAP_ACTION"] = swap_action(C2, cyclic_group(2))
    objs["TRIVIAL_FACTOR_SET"] = FactorSet.trivial(C2, cyclic_group(2))
    objs["NEG_FACTOR_SET"] = neg_data(F)[2]
    objs["K_TRIVIAL_ACTION"] = neg_data(F)[1]
    return objs


def export(directory):
    """Write the shipped fixture files into ``directory``."""
    import json
    from pathlib import Path

    from .io import functionals_to_json, save

    d = Path(directory)
    d.mkdir(parents=True, exist_ok=True)
    for name, obj in shipped_objects().items():
        save(obj, d / f"{name}.json")
    (d / "KG2_BASEPOINT.json").write_text(json.dumps(functionals_to_json(F3, kg2_basepoint()), indent=2) + "\n")
