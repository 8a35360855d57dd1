"""Group coalgebras (G-coalgebras), their comodules and the strongness tests.

A G-coalgebra over a finite group G is a family of components C_a (a in G)
with comultiplications Delta[a, b]: C_{ab} -> C_a (x) C_b and a counit on
C_e.  Everything is stored as matrices; component a has dimension dims[a].
"""

from dataclasses import dataclass, field

from .coalgebra import (
    Coalgebra,
    LeftComodule,
    RightComodule,
    cotensor,
    is_bijective,
    is_injective,
    is_surjective,
)
from .errors import NoSolution, PreconditionViolated, Report, ShapeMismatch
from .linalg import Matrix, kron, linear_constraint_kernel, rank, solve_right, swap_matrix


def _pairs(group):
    return [(a, b) for a in group for b in group]


class GroupCoalgebra:
    __slots__ = ("field", "group", "dims", "comult", "counit", "name", "meta")

    def __init__(self, field, group, dims, comult, counit, name=None, meta=None):
        dims = tuple(dims)
        if len(dims) != group.order:
            raise ShapeMismatch(f"{len(dims)} component dimensions for a group of order {group.order}")
        comult = dict(comult)
        for a, b in _pairs(group):
            if (a, b) not in comult:
                raise ShapeMismatch(f"missing comultiplication ({a}, {b})")
            m = comult[a, b]
            want = (dims[a] * dims[b], dims[group.mul(a, b)])
            if m.shape != want:
                raise ShapeMismatch(f"Delta[{a},{b}] has shape {m.shape}, expected {want}")
            if m.field != field:
                raise ShapeMismatch("structure map over the wrong field")
        if counit.shape != (1, dims[group.identity]):
            raise ShapeMismatch(f"counit has shape {counit.shape}")
        self.field = field
        self.group = group
        self.dims = dims
        self.comult = comult
        self.counit = counit
        self.name = name
        self.meta = dict(meta or {})

    def __repr__(self):
        return f"GroupCoalgebra({self.name or ''} dims={self.dims} over {self.field})"

    def __eq__(self, other):
        return (
            isinstance(other, GroupCoalgebra)
            and self.field == other.field
            and self.group == other.group
            and self.dims == other.dims
            and self.comult == other.comult
            and self.counit == other.counit
        )

    def __hash__(self):
        return hash((self.dims, self.counit))

    @property
    def e(self):
        return self.group.identity

    def D(self, a, b):
        return self.comult[a, b]

    def I(self, a):
        return Matrix.identity(self.field, self.dims[a])

    def right_comodule(self, a):
        """C_a as a right C_e-comodule via Delta[a, e]."""
        return RightComodule(component_e(self), self.dims[a], self.comult[a, self.e])

    def left_comodule(self, a):
        """C_a as a left C_e-comodule via Delta[e, a]."""
        return LeftComodule(component_e(self), self.dims[a], self.comult[self.e, a])


def verify_group_coalgebra(c):
    """Indexed coassociativity for every triple and the counit laws for every element."""
    rep = Report("group coalgebra")
    G = c.group
    e = G.identity
    for a in G:
        for b in G:
            ab = G.mul(a, b)
            for g in G:
                lhs = kron(c.D(a, b), c.I(g)) @ c.D(ab, g)
                rhs = kron(c.I(a), c.D(b, g)) @ c.D(a, G.mul(b, g))
                if lhs != rhs:
                    bad = next(j for j in range(lhs.cols) if lhs.col(j) != rhs.col(j))
                    rep.fail("coassociativity", triple=[a, b, g], basis=bad)
    for a in G:
        Ia = c.I(a)
        if kron(Ia, c.counit) @ c.D(a, e) != Ia:
            rep.fail("right counit", element=a)
        if kron(c.counit, Ia) @ c.D(e, a) != Ia:
            rep.fail("left counit", element=a)
    return rep


def component_e(c):
    e = c.e
    return Coalgebra(c.field, c.dims[e], c.D(e, e), c.counit)


@dataclass
class StrongResult:
    strong: bool
    witnesses: list = field(default_factory=list)

    def __bool__(self):
        return self.strong

    def to_json(self):
        return {"strong": self.strong, "witnesses": self.witnesses}


def is_strong(c):
    """Strong iff every Delta[a, a^-1]: C_e -> C_a (x) C_a^-1 is injective."""
    G = c.group
    de = c.dims[c.e]
    bad = [a for a in G if rank(c.D(a, G.inv(a))) != de]
    return StrongResult(not bad, bad)


def strong_all_pairs(c):
    """The defining check: every Delta[a, b] injective.  Returns the failing pairs."""
    G = c.group
    bad = [(a, b) for a, b in _pairs(G) if not is_injective(c.D(a, b))]
    return StrongResult(not bad, bad)


def strong_via_suspensions(c):
    """Whether every coaction of every suspension is injective; returns failing (s, a, b)."""
    bad = []
    for s in c.group:
        M = suspension(c, s)
        for (a, b), rho in M.coaction.items():
            if not is_injective(rho):
                bad.append((s, a, b))
    return StrongResult(not bad, bad)


def corestriction_iso_check(c):
    """For every (a, b): Delta[a, b] lands in C_a []_{C_e} C_b and is bijective onto it."""
    rep = Report("corestriction")
    G = c.group
    dims = {}
    for a, b in _pairs(G):
        K = cotensor(c.right_comodule(a), c.left_comodule(b))
        dims[f"{a},{b}"] = K.cols
        D = c.D(a, b)
        try:
            X = solve_right(K, D)
        except NoSolution:
            rep.fail("image outside cotensor", pair=[a, b])
            continue
        if not is_bijective(X):
            rep.fail("not bijective onto cotensor", pair=[a, b],
                     cotensor_dim=K.cols, source_dim=D.cols, rank=rank(X))
    rep.info["cotensor_dims"] = dims
    rep.info["agrees_with_is_strong"] = rep.ok == is_strong(c).strong
    return rep


class GComodule:
    """Right G-comodule: components M_a and coactions rho[a, b]: M_{ab} -> M_a (x) C_b."""

    __slots__ = ("coalgebra", "dims", "coaction", "inclusions")

    def __init__(self, coalgebra, dims, coaction, inclusions=None):
        c = coalgebra
        G = c.group
        dims = tuple(dims)
        if len(dims) != G.order:
            raise ShapeMismatch("wrong number of component dimensions")
        coaction = dict(coaction)
        for a, b in _pairs(G):
            if (a, b) not in coaction:
                raise ShapeMismatch(f"missing coaction ({a}, {b})")
            want = (dims[a] * c.dims[b], dims[G.mul(a, b)])
            if coaction[a, b].shape != want:
                raise ShapeMismatch(f"rho[{a},{b}] has shape {coaction[a, b].shape}, expected {want}")
        self.coalgebra = c
        self.dims = dims
        self.coaction = coaction
        self.inclusions = inclusions

    def __repr__(self):
        return f"GComodule(dims={self.dims})"

    def __eq__(self, other):
        return (
            isinstance(other, GComodule)
            and self.dims == other.dims
            and self.coaction == other.coaction
        )

    def __hash__(self):
        return hash(self.dims)

    def I(self, a):
        return Matrix.identity(self.coalgebra.field, self.dims[a])

    def verify(self):
        return verify_gcomodule(self)


def verify_gcomodule(m):
    c = m.coalgebra
    G = c.group
    e = G.identity
    rep = Report("G-comodule")
    for a in G:
        if kron(m.I(a), c.counit) @ m.coaction[a, e] != m.I(a):
            rep.fail("counit", element=a)
    for a in G:
        for b in G:
            ab = G.mul(a, b)
            for g in G:
                lhs = kron(m.coaction[a, b], c.I(g)) @ m.coaction[ab, g]
                rhs = kron(m.I(a), c.D(b, g)) @ m.coaction[a, G.mul(b, g)]
                if lhs != rhs:
                    rep.fail("coassociativity", triple=[a, b, g])
    return rep


def verify_gcomodule_morphism(src, tgt, maps):
    """Colinearity (f_a (x) C_b) rho^M[a,b] = rho^N[a,b] f_{ab} for all a, b."""
    c = src.coalgebra
    G = c.group
    rep = Report("G-comodule morphism")
    for a in G:
        if maps[a].shape != (tgt.dims[a], src.dims[a]):
            raise ShapeMismatch(f"map {a} has shape {maps[a].shape}")
    for a, b in _pairs(G):
        lhs = kron(maps[a], c.I(b)) @ src.coaction[a, b]
        rhs = tgt.coaction[a, b] @ maps[G.mul(a, b)]
        if lhs != rhs:
            rep.fail("colinearity", pair=[a, b])
    return rep


def gcomodule_hom_space(src, tgt):
    """Basis of the G-colinear families src -> tgt (each a tuple indexed by element)."""
    c = src.coalgebra
    G = c.group
    shapes = [(tgt.dims[a], src.dims[a]) for a in G]

    def defect(fs):
        blocks = []
        for a, b in _pairs(G):
            d = kron(fs[a], c.I(b)) @ src.coaction[a, b] - tgt.coaction[a, b] @ fs[G.mul(a, b)]
            blocks.extend(d.entries)
        return Matrix.column(c.field, blocks) if blocks else Matrix.zeros(c.field, 0, 1)

    return linear_constraint_kernel(c.field, shapes, defect)


def suspension(c, s):
    """The s-suspension: M_a = C_{sa}, rho[a, b] = Delta[sa, b]."""
    G = c.group
    dims = [c.dims[G.mul(s, a)] for a in G]
    coaction = {(a, b): c.D(G.mul(s, a), b) for a, b in _pairs(G)}
    return GComodule(c, dims, coaction)


def functor_F(m):
    """M_e as a right C_e-comodule via rho[e, e]."""
    c = m.coalgebra
    e = c.e
    return RightComodule(component_e(c), m.dims[e], m.coaction[e, e])


def functor_G(n, c):
    """G(N)_a = N []_{C_e} C_a, with coactions induced by N [] Delta[a, b].

    The returned comodule carries the cotensor inclusions in ``inclusions``.
    """
    G = c.group
    F = c.field
    Ce = component_e(c)
    if n.coalgebra.dim != Ce.dim or n.coalgebra.field != F:
        raise ShapeMismatch("comodule is not over the degree-e component")
    In = Matrix.identity(F, n.dim)
    K = {a: cotensor(n, LeftComodule(Ce, c.dims[a], c.D(c.e, a))) for a in G}
    coaction = {}
    for a, b in _pairs(G):
        target = kron(In, c.D(a, b)) @ K[G.mul(a, b)]
        coaction[a, b] = solve_right(kron(K[a], c.I(b)), target)
    return GComodule(c, [K[a].cols for a in G], coaction, inclusions=K)


def _unit_components(m):
    """eta_a: M_a -> M_e [] C_a (corestriction of rho[e, a]) together with G(M_e)."""
    c = m.coalgebra
    GN = functor_G(functor_F(m), c)
    eta = {}
    for a in c.group:
        eta[a] = solve_right(GN.inclusions[a], m.coaction[c.e, a])
    return eta, GN


def adjunction_check(m):
    """Unit and counit of the (F, G) adjunction at M, both triangle identities,
    and per-component bijectivity of the unit."""
    c = m.coalgebra
    G = c.group
    F = c.field
    e = G.identity
    rep = Report("adjunction")
    N = functor_F(m)
    try:
        eta, GN = _unit_components(m)
    except NoSolution:
        rep.fail("unit does not corestrict to the cotensor product")
        return rep
    K = GN.inclusions
    In = Matrix.identity(F, N.dim)
    nu = kron(In, c.counit) @ K[e]

    if not verify_gcomodule_morphism(m, GN, eta):
        rep.fail("unit is not G-colinear")
    if nu @ eta[e] != m.I(e):
        rep.fail("triangle (nu_{M_e} . eta_{M,e} = id)")

    # second triangle at N = M_e: (nu_N [] C_a) . eta_{G(N), a} = id
    eta2, GGN = _unit_components(GN)
    for a in G:
        L = GGN.inclusions[a]
        pushed = kron(nu, c.I(a)) @ L
        try:
            nu_a = solve_right(K[a], pushed)
        except NoSolution:
            rep.fail("nu_N [] C_a leaves the cotensor", element=a)
            continue
        if nu_a @ eta2[a] != Matrix.identity(F, GN.dims[a]):
            rep.fail("triangle (nu_N [] C_a . eta_{GN,a} = id)", element=a)

    bij = {a: is_bijective(eta[a]) for a in G}
    rep.info["unit_bijective"] = {str(a): v for a, v in bij.items()}
    rep.info["non_bijective"] = [a for a in G if not bij[a]]
    rep.info["counit_bijective"] = is_bijective(nu)
    return rep


def zero_propagation(m):
    """Over a strong G-coalgebra, one zero component forces all components to vanish."""
    c = m.coalgebra
    if not is_strong(c):
        raise PreconditionViolated("zero propagation needs a strong G-coalgebra")
    rep = Report("zero propagation")
    zeros = [a for a in c.group if m.dims[a] == 0]
    if zeros and len(zeros) != c.group.order:
        rep.fail("library bug: partial zero comodule over a strong G-coalgebra", zero=zeros)
    return rep


class GradedDualAlgebra:
    """R = sum R_a with R_a = (C_{a^-1})*; mult[a, b]: R_a (x) R_b -> R_{ab}."""

    __slots__ = ("field", "group", "dims", "mult", "unit")

    def __init__(self, field, group, dims, mult, unit):
        self.field = field
        self.group = group
        self.dims = tuple(dims)
        self.mult = dict(mult)
        self.unit = unit

    def I(self, a):
        return Matrix.identity(self.field, self.dims[a])

    def verify(self):
        G = self.group
        e = G.identity
        rep = Report("graded algebra")
        for a in G:
            for b in G:
                for g in G:
                    lhs = self.mult[G.mul(a, b), g] @ kron(self.mult[a, b], self.I(g))
                    rhs = self.mult[a, G.mul(b, g)] @ kron(self.I(a), self.mult[b, g])
                    if lhs != rhs:
                        rep.fail("associativity", triple=[a, b, g])
        for a in G:
            if self.mult[e, a] @ kron(self.unit, self.I(a)) != self.I(a):
                rep.fail("left unit", element=a)
            if self.mult[a, e] @ kron(self.I(a), self.unit) != self.I(a):
                rep.fail("right unit", element=a)
        return rep


def dual_graded_algebra(c):
    """(f # g)(x) = f(x_(2, a^-1)) g(x_(1, b^-1)) for f in R_a, g in R_b, x in C_{(ab)^-1}."""
    G = c.group
    F = c.field
    dims = [c.dims[G.inv(a)] for a in G]
    mult = {}
    for a, b in _pairs(G):
        ai, bi = G.inv(a), G.inv(b)
        D = c.D(bi, ai)
        S = swap_matrix(F, c.dims[bi], c.dims[ai])
        mult[a, b] = (S @ D).T
    R = GradedDualAlgebra(F, G, dims, mult, c.counit.T)
    rep = R.verify()
    if not rep:
        raise AssertionError(f"dual graded algebra failed its axioms: {rep.failures}")
    return R


def is_strongly_graded(r):
    G = r.group
    return all(is_surjective(r.mult[a, b]) for a in G for b in G)


def cofree(c, group, name=None):
    """C<G>: every component is C and every Delta[a, b] is Delta_C."""
    comult = {(a, b): c.comult for a, b in _pairs(group)}
    return GroupCoalgebra(c.field, group, [c.dim] * group.order, comult, c.counit,
                          name=name, meta={"construction": "cofree"})


def verify_gcoalgebra_morphism(src, tgt, maps):
    """(phi_a (x) phi_b) Delta[a, b] = Delta'[a, b] phi_{ab} and eps' phi_e = eps."""
    G = src.group
    rep = Report("G-coalgebra morphism")
    for a in G:
        want = (tgt.dims[a], src.dims[a])
        if maps[a].shape != want:
            rep.fail("shape", element=a, shape=list(maps[a].shape))
            return rep
    for a, b in _pairs(G):
        if kron(maps[a], maps[b]) @ src.D(a, b) != tgt.D(a, b) @ maps[G.mul(a, b)]:
            rep.fail("comultiplication", pair=[a, b])
    if tgt.counit @ maps[G.identity] != src.counit:
        rep.fail("counit")
    return rep


def verify_gcoalgebra_iso(src, tgt, maps, inverse_maps=None):
    """Morphism check plus a two-sided inverse (computed if not given)."""
    rep = verify_gcoalgebra_morphism(src, tgt, maps)
    G = src.group
    if not rep:
        return rep
    inv = {}
    for a in G:
        if inverse_maps is not None:
            inv[a] = inverse_maps[a]
        else:
            try:
                inv[a] = maps[a].inverse()
            except (ZeroDivisionError, ShapeMismatch):
                rep.fail("not invertible", element=a)
                return rep
        Is, It = src.I(a), tgt.I(a)
        if inv[a] @ maps[a] != Is or maps[a] @ inv[a] != It:
            rep.fail("inverse is not two-sided", element=a)
    rep.extend(verify_gcoalgebra_morphism(tgt, src, inv), direction="inverse")
    return rep


def transport(c, maps, name=None):
    """The G-coalgebra structure on D making maps: c -> D an isomorphism."""
    G = c.group
    inv = {a: maps[a].inverse() for a in G}
    comult = {(a, b): kron(maps[a], maps[b]) @ c.D(a, b) @ inv[G.mul(a, b)] for a, b in _pairs(G)}
    return GroupCoalgebra(c.field, G, c.dims, comult, c.counit @ inv[G.identity], name=name)


def change_basis(m, mats):
    """The G-comodule isomorphic to m through the invertible maps mats[a]: M_a -> M'_a."""
    c = m.coalgebra
    G = c.group
    inv = {a: mats[a].inverse() for a in G}
    coaction = {(a, b): kron(mats[a], c.I(b)) @ m.coaction[a, b] @ inv[G.mul(a, b)] for a, b in _pairs(G)}
    return GComodule(c, m.dims, coaction)


def direct_sum(*ms):
    c = ms[0].coalgebra
    G = c.group
    F = c.field
    dims = [sum(m.dims[a] for m in ms) for a in G]
    coaction = {}
    for a, b in _pairs(G):
        ab = G.mul(a, b)
        db = c.dims[b]
        rows = dims[a] * db
        out = [[F.zero] * dims[ab] for _ in range(rows)]
        ro, co = 0, 0
        for m in ms:
            rho = m.coaction[a, b]
            for i in range(rho.rows):
                for j in range(rho.cols):
                    out[ro * db + i][co + j] = rho[i, j]
            ro += m.dims[a]
            co += m.dims[ab]
        coaction[a, b] = Matrix.from_rows(F, out, dims[ab])
    return GComodule(c, dims, coaction)


def zero_gcomodule(c):
    G = c.group
    F = c.field
    coaction = {(a, b): Matrix.zeros(F, 0, 0) for a, b in _pairs(G)}
    return GComodule(c, [0] * G.order, coaction)
