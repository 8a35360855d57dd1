"""Degree 1 and 2 group cohomology with coefficients in the units of C*.

For a cocommutative right G-module coalgebra C (c . a = lam[a](c)) the dual
C* is a G-module algebra under <a . f, c> = <f, c . a>, i.e. a . f = f lam[a].
Cochains are dicts of 1 x d functionals.

Existence questions ("is there an h", "is there an f") are answered by
exhaustive search over prime fields and are Inconclusive (None) over the
rationals unless a witness is at hand.
"""

from dataclasses import dataclass, field
from itertools import product

from .coalgebra import convolution_inverse, convolve, is_cocommutative, is_convolution_invertible
from .crossed import (
    CocleftData,
    WeakAction,
    build_crossed,
    extract_action,
    normalize_factor_set,
    verify_morphism_to_kG,
    FactorSet,
)
from .errors import NotAMorphism, NotCocommutative, Report
from .group_coalgebra import component_e, verify_gcoalgebra_iso
from .linalg import Matrix, all_vectors, combine, kron, linear_constraint_kernel, swap_matrix
from .search import EXHAUSTIVE_LIMIT, find_invertible


class GModuleAlgebra:
    """C* with the action a . f = f lam[a]; C must be cocommutative."""

    __slots__ = ("coalgebra", "group", "action", "dual_action")

    def __init__(self, coalgebra, action):
        if not is_cocommutative(coalgebra):
            raise NotCocommutative("the coalgebra is not cocommutative")
        self.coalgebra = coalgebra
        self.group = action.group
        self.action = action
        # transposes act on functionals written as columns
        self.dual_action = {a: action[a].T for a in self.group}

    @classmethod
    def trivial(cls, coalgebra, group):
        return cls(coalgebra, WeakAction.trivial(coalgebra, group))

    def act(self, a, f):
        return f @ self.action[a]

    def conv(self, *fs):
        C = self.coalgebra
        out = fs[0]
        for f in fs[1:]:
            out = convolve(C, out, f)
        return out

    def inv(self, f):
        return convolution_inverse(self.coalgebra, f)

    @property
    def eps(self):
        return self.coalgebra.counit


def check_right_g_action(C, lam):
    """lam[e] = id and lam[ab] = lam[b] lam[a], with each lam[a] a coalgebra map."""
    if not is_cocommutative(C):
        raise NotCocommutative("the coalgebra is not cocommutative")
    G = lam.group
    rep = Report("right G-action")
    rep.extend(lam.verify())
    if lam[G.identity] != C.I:
        rep.fail("identity acts nontrivially")
    for a in G:
        for b in G:
            if lam[G.mul(a, b)] != lam[b] @ lam[a]:
                rep.fail("action law", pair=[a, b])
    return rep


def _values(x):
    if isinstance(x, FactorSet):
        return x.f
    if isinstance(x, (OneCochain, TwoCochain)):
        return x.values
    return x


def _hcat(ms):
    out = ms[0]
    for m in ms[1:]:
        out = out.hstack(m)
    return out


class OneCochain:
    """h[a] in G_m(C*), with convolution inverses as certificates."""

    __slots__ = ("values", "inverses")

    def __init__(self, m, values):
        self.values = {a: values[a] for a in m.group}
        self.inverses = {a: m.inv(v) for a, v in self.values.items()}

    def __getitem__(self, a):
        return self.values[a]


class TwoCochain:
    __slots__ = ("values", "inverses")

    def __init__(self, m, values):
        G = m.group
        self.values = {(a, b): values[a, b] for a in G for b in G}
        self.inverses = {k: m.inv(v) for k, v in self.values.items()}

    def __getitem__(self, ab):
        return self.values[ab]


def is_2cocycle(m, f):
    """(a . f[b, g]) * f[a, bg] = f[a, b] * f[ab, g] for every triple."""
    f = _values(f)
    G = m.group
    rep = Report("2-cocycle")
    for a in G:
        for b in G:
            for g in G:
                lhs = m.conv(m.act(a, f[b, g]), f[a, G.mul(b, g)])
                rhs = m.conv(f[a, b], f[G.mul(a, b), g])
                if lhs != rhs:
                    rep.fail("cocycle", triple=[a, b, g])
    return rep


def delta1(m, h):
    """delta1(h)[a, b] = h[a] * h[ab]^-1 * (a . h[b])."""
    h = _values(h)
    G = m.group
    inv = {a: m.inv(h[a]) for a in G}
    return {(a, b): m.conv(h[a], inv[G.mul(a, b)], m.act(a, h[b])) for a in G for b in G}


def times(m, f, f2):
    """Pointwise convolution of two cochains."""
    f, f2 = _values(f), _values(f2)
    return {k: m.conv(f[k], f2[k]) for k in f}


def lemma41_witness(m, f):
    """h[e] = f[e, e] and h[a] = eps otherwise."""
    f = _values(f)
    e = m.group.identity
    return {a: (f[e, e] if a == e else m.eps) for a in m.group}


def invertible_functionals(C):
    """Every convolution-invertible functional on C (prime fields only)."""
    return [v for v in (Matrix.row(C.field, list(x)) for x in all_vectors(C.field, C.dim))
            if is_convolution_invertible(C, v)]


@dataclass
class Decision:
    """answer is True, False, or None (inconclusive); witness confirms a True."""

    answer: object
    witness: object = None
    method: str = ""
    info: dict = field(default_factory=dict)

    def __bool__(self):
        return bool(self.answer)


def is_coboundary_of(m, f, f2, h):
    """Whether f = f2 * delta1(h)."""
    return times(m, f2, delta1(m, h)) == _values(f)


def cohomologous(m, f, f2, hint=None, limit=EXHAUSTIVE_LIMIT):
    """Search for h with f = f2 * delta1(h).

    A verified hint is returned immediately; over F_p the search is exhaustive
    when |G_m(C*)|^|G| <= limit, otherwise (and over Q) the answer is None.
    """
    f, f2 = _values(f), _values(f2)
    G = m.group
    C = m.coalgebra
    if f == f2:
        return Decision(True, {a: m.eps for a in G}, "equal")
    if hint is not None:
        if is_coboundary_of(m, f, f2, hint):
            return Decision(True, dict(_values(hint)), "hint")
    quotient = times(m, f, {k: m.inv(v) for k, v in f2.items()})
    if all(v == m.eps for v in quotient.values()):
        return Decision(True, {a: m.eps for a in G}, "quotient is trivial")
    if not C.field.is_prime_field:
        return Decision(None, method="inconclusive", info={"reason": "exhaustive search needs a prime field"})
    units = invertible_functionals(C)
    size = len(units) ** G.order
    if size > limit:
        return Decision(None, method="inconclusive", info={"reason": "search space too large", "size": size})
    for choice in product(units, repeat=G.order):
        h = dict(zip(G, choice))
        if is_coboundary_of(m, f, f2, h):
            return Decision(True, h, "exhaustive", {"size": size})
    return Decision(False, None, "exhaustive", {"size": size})


def crossed_iso_criterion(m, f, f2, phi):
    """Whether C x|_f k<G> and C x|_f2 k<G> are isomorphic through phi_e = phi.

    Both factor sets are normalized first (with the explicit isomorphisms),
    then h with f * delta1(h) = f2 . phi is searched for and the G-coalgebra
    isomorphism phi_b = phi(c_(1)) h[b](c_(2)) is built and verified.
    """
    C = m.coalgebra
    lam = m.action
    G = m.group
    rep = Report("automorphism")
    if not C.is_coalgebra_map(phi):
        rep.fail("phi is not a coalgebra map")
    try:
        phi.inverse()
    except ZeroDivisionError:
        rep.fail("phi is not invertible")
    if not rep:
        return Decision(False, None, "phi rejected", {"report": rep.to_json()})
    fs1 = f if isinstance(f, FactorSet) else FactorSet(C, G, f)
    fs2 = f2 if isinstance(f2, FactorSet) else FactorSet(C, G, f2)
    n1 = normalize_factor_set(C, lam, fs1)
    n2 = normalize_factor_set(C, lam, fs2)
    g1, g2 = n1.factor_set.f, n2.factor_set.f
    pulled = {k: v @ phi for k, v in g2.items()}
    dec = cohomologous(m, pulled, g1)
    if not dec.answer:
        return Decision(dec.answer, None, dec.method, dec.info)
    h = dec.witness
    core = {b: phi @ C.right_hit(h[b]) for b in G}
    iso = {b: n2.inverse[b] @ core[b] @ n1.iso[b] for b in G}
    src = build_crossed(C, lam, fs1)
    tgt = build_crossed(C, lam, fs2)
    check = verify_gcoalgebra_iso(src, tgt, iso)
    if not check:
        return Decision(None, {"h": h}, "class matches but the isomorphism does not verify",
                        {"report": check.to_json()})
    return Decision(True, {"h": h, "iso": iso}, dec.method)


def is_1cocycle(m, theta):
    """(a . theta[b]) * theta[a] = theta[ab]."""
    theta = _values(theta)
    G = m.group
    rep = Report("1-cocycle")
    for a in G:
        for b in G:
            if m.conv(m.act(a, theta[b]), theta[a]) != theta[G.mul(a, b)]:
                rep.fail("cocycle", pair=[a, b])
    return rep


def is_1coboundary(m, theta, seed=0):
    """Search for invertible f with theta[a] = (a . f) * f^-1, i.e. f (left_hit(theta[a]) - lam[a]) = 0."""
    theta = _values(theta)
    C = m.coalgebra
    G = m.group

    def defect(fs):
        (f,) = fs
        return _hcat([f @ (C.left_hit(theta[a]) - m.action[a]) for a in G])

    basis = [b[0] for b in linear_constraint_kernel(C.field, [(1, C.dim)], defect)]
    return _invertible_functional(C, basis, seed)


def _invertible_functional(C, basis, seed):
    # f is convolution invertible iff left_hit(f) is, and left_hit is linear in f
    res = find_invertible(C.field, [C.left_hit(b) for b in basis], C.dim, seed=seed)
    if res.found is True:
        f = combine(C.field, basis, res.coeffs) if C.dim else C.counit
        return Decision(True, f, res.method)
    return Decision(res.found, None, res.method, res.info)


def _require_omega(c, u, label):
    rep = verify_morphism_to_kG(c, u)
    if not rep:
        first = rep.failures[0]
        raise NotAMorphism(f"{label} is not a G-coalgebra morphism: {first}", where=first.get("pair"))


def module_algebra_of(c, u0):
    """C_e with the action extracted from the morphism u0 (v[a] = u0[a^-1])."""
    G = c.group
    d = CocleftData(c, u0, {a: u0[G.inv(a)] for a in G})
    return GModuleAlgebra(component_e(c), extract_action(c, d))


def theta_from_morphisms(c, u, u0):
    """theta[a](x) = u[a](x_(1,a)) u0[a^-1](x_(2,a^-1)) on C_e."""
    _require_omega(c, u, "u")
    _require_omega(c, u0, "u0")
    if not is_cocommutative(component_e(c)):
        raise NotCocommutative("C_e is not cocommutative")
    G = c.group
    return {a: kron(u[a], u0[G.inv(a)]) @ c.D(a, G.inv(a)) for a in G}


def morphism_from_theta(c, u0, theta):
    """u[a](x) = theta[a](x_(1,e)) u0[a](x_(2,a))."""
    theta = _values(theta)
    return {a: kron(theta[a], u0[a]) @ c.D(c.e, a) for a in c.group}


def omega_equivalence(c, u, u2, seed=0):
    """Find invertible f on C_e with u2[a](x_(1,a)) f(x_(2,e)) = f(x_(1,e)) u[a](x_(2,a)).

    The relation is linear in f; the solution space is then searched for a
    convolution-invertible element.  info["b1"] records the independent
    check that theta(u relative to u2) is a 1-coboundary.
    """
    G = c.group
    e = c.e
    Ce = component_e(c)

    def defect(fs):
        (f,) = fs
        return _hcat([kron(u2[a], f) @ c.D(a, e) - kron(f, u[a]) @ c.D(e, a) for a in G])

    basis = [b[0] for b in linear_constraint_kernel(c.field, [(1, Ce.dim)], defect)]
    dec = _invertible_functional(Ce, basis, seed)
    if dec.answer is True:
        f = dec.witness
        for a in G:
            assert kron(u2[a], f) @ c.D(a, e) == kron(f, u[a]) @ c.D(e, a)
    m = module_algebra_of(c, u2)
    b1 = is_1coboundary(m, theta_from_morphisms(c, u, u2), seed)
    dec.info["b1"] = b1.answer
    dec.info["agrees_with_b1"] = b1.answer == dec.answer
    return dec


def action_independence_check(c, d1, d2):
    """Both cocleavings give the same action, and Delta[a, e] = (C_a (x) lam[a]) tau Delta[e, a]."""
    if not is_cocommutative(component_e(c)):
        raise NotCocommutative("C_e is not cocommutative")
    G = c.group
    e = c.e
    rep = Report("action independence")
    l1 = extract_action(c, d1)
    l2 = extract_action(c, d2)
    for a in G:
        if l1[a] != l2[a]:
            rep.fail("actions differ", element=a)
        tau = swap_matrix(c.field, c.dims[e], c.dims[a])
        if c.D(a, e) != kron(c.I(a), l1[a]) @ tau @ c.D(e, a):
            rep.fail("c(1,a) (x) c(2,e) = c(2,a) (x) c(1,e).a", element=a)
    rep.data["action"] = l1
    return rep


# enumeration over prime fields

def all_1cochains(m):
    units = invertible_functionals(m.coalgebra)
    for choice in product(units, repeat=m.group.order):
        yield dict(zip(m.group, choice))


def all_2cochains(m):
    G = m.group
    keys = [(a, b) for a in G for b in G]
    units = invertible_functionals(m.coalgebra)
    for choice in product(units, repeat=len(keys)):
        yield dict(zip(keys, choice))


def _key(cochain):
    return tuple(cochain[k] for k in sorted(cochain))


def z1(m):
    return [t for t in all_1cochains(m) if is_1cocycle(m, t)]


def b1(m):
    out = {}
    for f in invertible_functionals(m.coalgebra):
        g = m.inv(f)
        theta = {a: m.conv(m.act(a, f), g) for a in m.group}
        out[_key(theta)] = theta
    return list(out.values())


def z2(m):
    return [f for f in all_2cochains(m) if is_2cocycle(m, f)]


def b2(m):
    out = {}
    for h in all_1cochains(m):
        d = delta1(m, h)
        out[_key(d)] = d
    return list(out.values())


def classify_h2(m):
    """Partition Z^2 into classes modulo B^2; returns a list of classes (lists of cocycles)."""
    boundaries = b2(m)
    classes = []
    seen = set()
    for f in z2(m):
        if _key(f) in seen:
            continue
        cls = {}
        for d in boundaries:
            g = times(m, f, d)
            cls[_key(g)] = g
        seen.update(cls)
        classes.append(list(cls.values()))
    return classes


def classify_h1(m):
    """Partition Z^1 into classes modulo B^1 (theta ~ theta * beta)."""
    boundaries = b1(m)
    classes = []
    seen = set()
    for t in z1(m):
        if _key(t) in seen:
            continue
        cls = {}
        for beta in boundaries:
            s = times(m, t, beta)
            cls[_key(s)] = s
        seen.update(cls)
        classes.append(list(cls.values()))
    return classes


def omega_members(c, limit=EXHAUSTIVE_LIMIT):
    """Every G-coalgebra morphism c -> k<G> (prime fields, small spaces)."""
    F = c.field
    G = c.group
    size = F.p ** sum(c.dims)
    if size > limit:
        raise ValueError(f"search space of {size} morphism candidates is too large")
    out = []
    for choice in product(*[list(all_vectors(F, c.dims[a])) for a in G]):
        u = {a: Matrix.from_entries(F, 1, c.dims[a], choice[a]) for a in G}
        if verify_morphism_to_kG(c, u):
            out.append(u)
    return out


def omega_classes(c, seed=0):
    """Partition Omega by omega_equivalence; None if any comparison is inconclusive."""
    members = omega_members(c)
    classes = []
    for u in members:
        for cls in classes:
            dec = omega_equivalence(c, u, cls[0], seed)
            if dec.answer is None:
                return None
            if dec.answer:
                cls.append(u)
                break
        else:
            classes.append([u])
    return classes
