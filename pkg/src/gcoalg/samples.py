"""Seeded random objects for property tests: G-comodules and non-normalized factor sets."""

import random

from .coalgebra import RightComodule
from .crossed import FactorSet, WeakAction, build_kG
from .fixtures import c2gl, ground, swap_action, trunc
from .group import cyclic_group
from .group_coalgebra import GComodule, change_basis, cofree, component_e, direct_sum, functor_G, suspension
from .linalg import Field, Matrix, kron

F5 = Field(5)


def base_coalgebras(F=F5):
    """G-coalgebras the random comodules live over (G = Z2, Z3)."""
    out = {}
    for n in (2, 3):
        G = cyclic_group(n)
        out[f"KG{n}"] = build_kG(G, F)
        out[f"C2GL_Z{n}"] = cofree(c2gl(F), G, name=f"C2GL_Z{n}")
        out[f"TRUNC{n}"] = trunc(F, n)
    return out


def random_invertible(F, n, rng):
    if n == 0:
        return Matrix.zeros(F, 0, 0)
    while True:
        m = Matrix.from_entries(F, n, n, [rng.randrange(F.p) for _ in range(n * n)])
        if m.det():
            return m


def grouplike_columns(C):
    """Indices j of basis vectors b_j that are group-like."""
    out = []
    for j in range(C.dim):
        e = Matrix.unit_column(C.field, C.dim, j)
        if C.comult @ e == kron(e, e) and C.counit @ e == Matrix.identity(C.field, 1):
            out.append(j)
    return out


def grouplike_comodule(C, j):
    """k with coaction 1 -> 1 (x) b_j."""
    return RightComodule(C, 1, Matrix.unit_column(C.field, C.dim, j))


def random_gcomodule(c, rng, max_dim=3):
    """Direct sum of suspensions and G(N) for group-like N, then a random basis change.

    Components have dimension at most max_dim; never empty unless nothing fits.
    """
    G = c.group
    Ce = component_e(c)
    pieces = [suspension(c, s) for s in G]
    for j in grouplike_columns(Ce):
        pieces.append(functor_G(grouplike_comodule(Ce, j), c))
    pieces = [p for p in pieces if max(p.dims) <= max_dim]
    chosen = []
    dims = [0] * G.order
    for _ in range(rng.randint(1, 3)):
        p = rng.choice(pieces)
        if all(dims[a] + p.dims[a] <= max_dim for a in G):
            chosen.append(_plain(p))
            dims = [dims[a] + p.dims[a] for a in G]
    if not chosen:
        chosen = [_plain(min(pieces, key=lambda p: sum(p.dims)))]
    m = direct_sum(*chosen) if len(chosen) > 1 else chosen[0]
    mats = {a: random_invertible(c.field, m.dims[a], rng) for a in G}
    return change_basis(m, mats)


def _plain(m):
    """Drop construction-specific extras (cotensor inclusions)."""
    return GComodule(m.coalgebra, m.dims, m.coaction)


def random_unit(C, rng, invariant_under=None):
    """A random convolution-invertible functional on a group-like coalgebra."""
    F = C.field
    while True:
        f = Matrix.row(F, [rng.randrange(1, F.p) for _ in range(C.dim)])
        if invariant_under is None or f @ invariant_under == f:
            return f


def random_factor_set(rng, F=None, kind=None):
    """f = f0 * delta1(h) with f0 normalized and h[e] != eps, over Z2.

    kind is one of "k", "C2GL", "C2GL_swap".  Returns (C, lam, f).
    """
    from .cohomology import GModuleAlgebra, delta1, times

    F = F or rng.choice([Field(3), F5])
    kind = kind or rng.choice(["k", "C2GL", "C2GL_swap"])
    G = cyclic_group(2)
    if kind == "k":
        C = ground(F)
        lam = WeakAction.trivial(C, G)
    else:
        C = c2gl(F)
        lam = swap_action(C, G) if kind == "C2GL_swap" else WeakAction.trivial(C, G)
    eps = C.counit
    f0 = {(a, b): eps for a in G for b in G}
    f0[1, 1] = random_unit(C, rng, invariant_under=lam[1])
    m = GModuleAlgebra(C, lam)
    while True:
        h = {a: random_unit(C, rng) for a in G}
        if h[0] != eps:
            break
    f = times(m, f0, delta1(m, h))
    return C, lam, FactorSet(C, G, f)


def rng_for(seed):
    return random.Random(seed)

