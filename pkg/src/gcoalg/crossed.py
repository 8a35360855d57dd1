"""Crossed coproducts C x|_f k<G>, factor sets, and cocleft G-coalgebras.

A crossed coproduct is built from a coalgebra C, a weak action (coalgebra
endomorphisms lam[a]) and a factor set f[a, b] in C*.  Every component is
a copy of C, Delta[a, b](c) = c_(1) (x) lam[a](c_(2)) f[a, b](c_(3)), and
the counit is the convolution inverse g[e, e].

Positive decisions always come with a witness that the verify_* functions
can confirm independently.
"""

from dataclasses import dataclass

from .coalgebra import (
    Coalgebra,
    LeftComodule,
    convolution_inverse,
    convolve,
    left_comodule_hom_space,
)
from .errors import InvalidCrossedData, NotAMorphism, NotInvertible, Report, ShapeMismatch
from .group_coalgebra import (
    GroupCoalgebra,
    component_e,
    is_strong,
    verify_gcoalgebra_iso,
    verify_group_coalgebra,
)
from .linalg import Matrix, NoSolution, kron, solve_right
from .search import EXHAUSTIVE_LIMIT, RETRIES, find_invertible


def build_kG(group, field):
    """k<G>: one-dimensional components p_s with Delta[s, t](p_st) = p_s (x) p_t."""
    one = Matrix.identity(field, 1)
    comult = {(a, b): one for a in group for b in group}
    meta = {"construction": "k<G>", "antipode": [group.inv(s) for s in group]}
    return GroupCoalgebra(field, group, [1] * group.order, comult, one, meta=meta)


class WeakAction:
    """A family lam[a] of coalgebra endomorphisms of C indexed by the group."""

    __slots__ = ("coalgebra", "group", "maps")

    def __init__(self, coalgebra, group, maps):
        self.coalgebra = coalgebra
        self.group = group
        self.maps = {a: maps[a] for a in group}
        for a, m in self.maps.items():
            if m.shape != (coalgebra.dim, coalgebra.dim):
                raise ShapeMismatch(f"lambda[{a}] has shape {m.shape}")

    def __getitem__(self, a):
        return self.maps[a]

    def __eq__(self, other):
        return isinstance(other, WeakAction) and self.maps == other.maps

    def __hash__(self):
        return hash(tuple(self.maps.values()))

    @classmethod
    def trivial(cls, coalgebra, group):
        return cls(coalgebra, group, {a: coalgebra.I for a in group})

    def verify(self):
        rep = Report("weak action")
        for a, m in self.maps.items():
            if not self.coalgebra.is_coalgebra_map(m):
                rep.fail("not a coalgebra map", element=a)
        return rep


class FactorSet:
    """f[a, b] in C* together with their convolution inverses g[a, b].

    If ``g`` is omitted the inverses are computed (NotInvertible otherwise).
    """

    __slots__ = ("coalgebra", "group", "f", "g")

    def __init__(self, coalgebra, group, f, g=None):
        self.coalgebra = coalgebra
        self.group = group
        self.f = {(a, b): f[a, b] for a in group for b in group}
        for key, v in self.f.items():
            if v.shape != (1, coalgebra.dim):
                raise ShapeMismatch(f"f{key} has shape {v.shape}")
        if g is None:
            g = {}
            for key, v in self.f.items():
                try:
                    g[key] = convolution_inverse(coalgebra, v)
                except NotInvertible:
                    raise NotInvertible(f"f{key} is not convolution invertible", where=key) from None
        self.g = {key: g[key] for key in self.f}

    def __getitem__(self, ab):
        return self.f[ab]

    def __eq__(self, other):
        return isinstance(other, FactorSet) and self.f == other.f

    def __hash__(self):
        return hash(tuple(self.f.values()))

    @classmethod
    def trivial(cls, coalgebra, group):
        eps = coalgebra.counit
        return cls(coalgebra, group, {(a, b): eps for a in group for b in group})

    def is_normalized(self):
        G = self.group
        e = G.identity
        eps = self.coalgebra.counit
        return all(self.f[a, e] == eps and self.f[e, a] == eps for a in G)

    def verify(self):
        rep = Report("factor set inverses")
        C = self.coalgebra
        for key, v in self.f.items():
            w = self.g[key]
            if convolve(C, v, w) != C.counit or convolve(C, w, v) != C.counit:
                rep.fail("stored inverse is wrong", pair=list(key))
        return rep


def delta_map(C, lam, f, a, b):
    """delta[a, b](c) = c_(1) (x) lam[a](c_(2)) f[a, b](c_(3)) as a d^2 x d matrix."""
    return kron(C.I, lam[a] @ C.right_hit(f[a, b])) @ C.comult


def validate_crossed_data(C, lam, f):
    """All conditions for C x|_f k<G> to be a G-coalgebra, over all group triples."""
    G = lam.group
    e = G.identity
    rep = Report("crossed data")
    rep.extend(lam.verify())
    rep.extend(f.verify())
    fee, gee = f[e, e], f.g[e, e]
    if lam[e] != C.left_hit(fee) @ C.right_hit(gee):
        rep.fail("lambda_e = f_ee(c1) c2 g_ee(c3)")
    for a in G:
        if f[e, a] != fee:
            rep.fail("CU: f[e,a] = f[e,e]", element=a)
        if f[a, e] != fee @ lam[a]:
            rep.fail("CU: f[a,e] = f[e,e] . lambda_a", element=a)
    for a in G:
        for b in G:
            ab = G.mul(a, b)
            fab = f[a, b]
            lhs = lam[b] @ lam[a] @ C.right_hit(fab)
            rhs = lam[ab] @ C.left_hit(fab)
            if lhs != rhs:
                rep.fail("TC", pair=[a, b])
            for g in G:
                left = kron(f[b, g] @ lam[a], f[a, G.mul(b, g)]) @ C.comult
                right = kron(fab, f[ab, g]) @ C.comult
                if left != right:
                    rep.fail("C", triple=[a, b, g])
    return rep


def build_crossed(C, lam, f, group=None, name=None, check=True):
    G = group or lam.group
    if check:
        rep = validate_crossed_data(C, lam, f)
        if not rep:
            raise InvalidCrossedData(f"invalid crossed data: {rep.failures[:3]}", rep)
    comult = {(a, b): delta_map(C, lam, f, a, b) for a in G for b in G}
    out = GroupCoalgebra(C.field, G, [C.dim] * G.order, comult, f.g[G.identity, G.identity],
                         name=name, meta={"construction": "crossed"})
    if check:
        rep = verify_group_coalgebra(out)
        if not rep:
            raise AssertionError(f"validated crossed data gave a non-G-coalgebra: {rep.failures[:3]}")
    return out


@dataclass
class Normalization:
    action: WeakAction
    factor_set: FactorSet
    iso: dict
    inverse: dict
    source: GroupCoalgebra
    target: GroupCoalgebra


def normalize_factor_set(C, lam, f):
    """Normalized crossed data with an explicit isomorphism of crossed coproducts.

    phi_e(c) = c_(1) g_ee(c_(2)) and phi_a = identity for a != e.
    """
    G = lam.group
    e = G.identity
    rep = validate_crossed_data(C, lam, f)
    if not rep:
        raise InvalidCrossedData("cannot normalize invalid crossed data", rep)
    eps = C.counit
    fee, gee = f[e, e], f.g[e, e]
    lam2 = WeakAction(C, G, {a: (C.I if a == e else lam[a]) for a in G})
    f2 = {}
    for a in G:
        for b in G:
            if a == e or b == e:
                f2[a, b] = eps
            elif G.mul(a, b) == e:
                f2[a, b] = convolve(C, f[a, b], fee)
            else:
                f2[a, b] = f[a, b]
    fs2 = FactorSet(C, G, f2)
    src = build_crossed(C, lam, f, G)
    tgt = build_crossed(C, lam2, fs2, G)
    iso = {a: (C.right_hit(gee) if a == e else C.I) for a in G}
    inv = {a: (C.right_hit(fee) if a == e else C.I) for a in G}
    check = verify_gcoalgebra_iso(src, tgt, iso, inv)
    if not check:
        raise AssertionError(f"normalization isomorphism failed: {check.failures[:3]}")
    return Normalization(lam2, fs2, iso, inv, src, tgt)


def strongness_retraction_check(C, lam, f):
    """(g[a,a^-1] (x) lam[a^-1]) delta[a,a^-1] = id for normalized data; a left inverse of delta."""
    G = lam.group
    rep = Report("delta retraction")
    for a in G:
        ai = G.inv(a)
        left = kron(f.g[a, ai], lam[ai]) @ delta_map(C, lam, f, a, ai)
        if left != C.I:
            rep.fail("retraction", element=a)
    return rep


class CocleftData:
    """u[a] in (C_a)* and v[a] in (C_{a^-1})* for each group element."""

    __slots__ = ("coalgebra", "u", "v")

    def __init__(self, coalgebra, u, v):
        c = coalgebra
        G = c.group
        self.coalgebra = c
        self.u = {a: u[a] for a in G}
        self.v = {a: v[a] for a in G}
        for a in G:
            if self.u[a].shape != (1, c.dims[a]):
                raise ShapeMismatch(f"u[{a}] has shape {self.u[a].shape}")
            if self.v[a].shape != (1, c.dims[G.inv(a)]):
                raise ShapeMismatch(f"v[{a}] has shape {self.v[a].shape}")

    def __eq__(self, other):
        return isinstance(other, CocleftData) and self.u == other.u and self.v == other.v

    def __hash__(self):
        return hash(tuple(self.u.values()))


def verify_cocleft_data(d):
    """u_a(c_(1,a)) v_a(c_(2,a^-1)) = v_a(c_(1,a^-1)) u_a(c_(2,a)) = eps(c) on C_e."""
    c = d.coalgebra
    G = c.group
    rep = Report("cocleft data")
    for a in G:
        ai = G.inv(a)
        if kron(d.u[a], d.v[a]) @ c.D(a, ai) != c.counit:
            rep.fail("u * v = eps", element=a)
        if kron(d.v[a], d.u[a]) @ c.D(ai, a) != c.counit:
            rep.fail("v * u = eps", element=a)
    return rep


def solve_convolution_partner(c, u):
    """Find v making (u, v) cocleft data; NotInvertible(a) if impossible."""
    G = c.group
    v = {}
    for a in G:
        ai = G.inv(a)
        A1 = kron(u[a], c.I(ai)) @ c.D(a, ai)
        A2 = kron(c.I(ai), u[a]) @ c.D(ai, a)
        system = A1.hstack(A2).T
        rhs = c.counit.hstack(c.counit).T
        try:
            v[a] = solve_right(system, rhs).T
        except NoSolution:
            only_left = True
            try:
                solve_right(A1.T, c.counit.T)
            except NoSolution:
                only_left = False
            side = "v * u = eps" if only_left else "u * v = eps"
            raise NotInvertible(f"no convolution partner at {a} ({side} unsatisfiable)", where=a) from None
    d = CocleftData(c, u, v)
    assert verify_cocleft_data(d), "solved partner fails verification"
    return d


@dataclass
class CrossedDecomposition:
    """C-underline isomorphic to C_e x|_f k<G> through iso (inverse given too)."""

    action: WeakAction
    factor_set: FactorSet
    iso: dict
    inverse: dict
    target: GroupCoalgebra
    coalgebra: Coalgebra


def extract_action(c, d):
    """lam_a(x) = u_a(x_(1,a)) x_(2,e) v_a(x_(3,a^-1)) on C_e."""
    G = c.group
    e = G.identity
    lam = {}
    for a in G:
        ai = G.inv(a)
        T = kron(c.D(a, e), c.I(ai)) @ c.D(a, ai)
        lam[a] = kron(kron(d.u[a], c.I(e)), d.v[a]) @ T
    return WeakAction(component_e(c), G, lam)


def extract_factor_set(c, d):
    """f_ab(x) = u_a(x_(1,a)) u_b(x_(2,b)) v_ab(x_(3,(ab)^-1)) on C_e."""
    G = c.group
    f = {}
    for a in G:
        for b in G:
            ab = G.mul(a, b)
            T = kron(c.D(a, b), c.I(G.inv(ab))) @ c.D(ab, G.inv(ab))
            f[a, b] = kron(kron(d.u[a], d.u[b]), d.v[ab]) @ T
    return FactorSet(component_e(c), G, f)


def crossed_from_cocleft(c, d):
    """Crossed-coproduct data of a cocleft G-coalgebra and the isomorphism onto it."""
    rep = verify_cocleft_data(d)
    if not rep:
        raise InvalidCrossedData("cocleft data does not verify", rep)
    G = c.group
    e = G.identity
    Ce = component_e(c)
    lam = extract_action(c, d)
    fs = extract_factor_set(c, d)
    target = build_crossed(Ce, lam, fs, G)
    iso = {a: kron(c.I(e), d.u[a]) @ c.D(e, a) for a in G}
    inv = {a: kron(c.I(a), d.v[a]) @ c.D(a, G.inv(a)) for a in G}
    check = verify_gcoalgebra_iso(c, target, iso, inv)
    if not check:
        raise AssertionError(f"cocleft isomorphism failed: {check.failures[:3]}")
    return CrossedDecomposition(lam, fs, iso, inv, target, Ce)


@dataclass
class CocleftResult:
    cocleft: object  # True, False, or None when inconclusive
    witness: CocleftData = None
    reason: str = ""
    colinear_isos: dict = None
    methods: dict = None

    def __bool__(self):
        return bool(self.cocleft)


def is_cocleft(c, seed=0, exhaustive_limit=EXHAUSTIVE_LIMIT, retries=RETRIES):
    """Decide cocleftness: strong, and every C_a isomorphic to C_e as a left C_e-comodule.

    On success the witness u_a = eps . phi_a, v_a = eps . nabla . (C (x) phi_a^-1) . Delta
    is built from the colinear isomorphisms phi_a and verified.
    """
    G = c.group
    e = G.identity
    st = is_strong(c)
    if not st:
        return CocleftResult(False, reason=f"not strong at {st.witnesses}")
    Ce = component_e(c)
    target = LeftComodule(Ce, Ce.dim, Ce.comult)
    phis, methods = {}, {}
    inconclusive = []
    for a in G:
        if c.dims[a] != Ce.dim:
            return CocleftResult(False, reason=f"dim C_{a} != dim C_e")
        basis = left_comodule_hom_space(c.left_comodule(a), target)
        res = find_invertible(c.field, basis, Ce.dim, seed=seed + a,
                              exhaustive_limit=exhaustive_limit, retries=retries)
        methods[a] = res.method
        if res.found is False:
            return CocleftResult(False, reason=f"C_{a} is not isomorphic to C_e as a left comodule",
                                 methods=methods)
        if res.found is None:
            inconclusive.append(a)
            continue
        phis[a] = res.element
    if inconclusive:
        return CocleftResult(None, reason=f"search inconclusive at {inconclusive}", methods=methods)

    u, v = {}, {}
    for a in G:
        ai = G.inv(a)
        phi = phis[a]
        u[a] = c.counit @ phi
        x = kron(c.I(ai), phi.inverse()) @ c.D(ai, e)
        nabla_x = solve_right(c.D(ai, a), x)
        v[a] = c.counit @ nabla_x
    d = CocleftData(c, u, v)
    rep = verify_cocleft_data(d)
    if not rep:
        raise AssertionError(f"constructed cocleft witness fails: {rep.failures}")
    return CocleftResult(True, d, "witness verified", phis, methods)


def verify_morphism_to_kG(c, u):
    """Whether u is a morphism of G-coalgebras C -> k<G>."""
    G = c.group
    e = G.identity
    rep = Report("morphism to k<G>")
    for a in G:
        for b in G:
            if kron(u[a], u[b]) @ c.D(a, b) != u[G.mul(a, b)]:
                rep.fail("comultiplication", pair=[a, b])
    if u[e] != c.counit:
        rep.fail("counit")
    return rep


def smash_type_check(c, u):
    """If u: C -> k<G> is a G-coalgebra morphism, decompose C as a smash coproduct.

    Raises NotAMorphism with the first failing pair otherwise.
    """
    G = c.group
    rep = verify_morphism_to_kG(c, u)
    if not rep:
        first = rep.failures[0]
        raise NotAMorphism(f"not a G-coalgebra morphism: {first}", where=first.get("pair"))
    d = CocleftData(c, u, {a: u[G.inv(a)] for a in G})
    dec = crossed_from_cocleft(c, d)
    eps = dec.coalgebra.counit
    for key, val in dec.factor_set.f.items():
        if val != eps:
            rep.fail("factor set of a morphism is not trivial", pair=list(key))
    rep.data["decomposition"] = dec
    rep.data["cocleft"] = d
    return rep


def trivial_action_check(c, d):
    """u_a(x_(1,a)) x_(2,e) = x_(1,e) u_a(x_(2,a)) for all a; then the action is trivial."""
    G = c.group
    e = G.identity
    rep = Report("trivial action")
    for a in G:
        lhs = kron(d.u[a], c.I(e)) @ c.D(a, e)
        rhs = kron(c.I(e), d.u[a]) @ c.D(e, a)
        if lhs != rhs:
            rep.fail("u_a(c1) c2 = c1 u_a(c2)", element=a)
    if not rep:
        return rep
    dec = crossed_from_cocleft(c, d)
    Ce = dec.coalgebra
    for a in G:
        if dec.action[a] != Ce.I:
            rep.fail("extracted action is not the identity", element=a)
        phi = dec.iso[a]
        if kron(c.I(e), phi) @ c.D(e, a) != Ce.comult @ phi:
            rep.fail("phi not left colinear", element=a)
        if kron(phi, c.I(e)) @ c.D(a, e) != Ce.comult @ phi:
            rep.fail("phi not right colinear", element=a)
    rep.data["decomposition"] = dec
    return rep
