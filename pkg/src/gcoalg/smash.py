"""The smash coproduct C x| kG and comodules over it.

Component a of the smash coproduct is C_a (x) kG with basis index
(i, s) -> i*|G| + s.  Its right comodules are the same thing as right
G-comodules over C; the functors in both directions are implemented here.
"""

from .coalgebra import is_bijective
from .errors import NoSolution, NotGradable, Report, ShapeMismatch, SupportViolation
from .group_coalgebra import (
    GComodule,
    GroupCoalgebra,
    adjunction_check,
    functor_F,
    functor_G,
    is_strong,
    suspension,
    verify_gcomodule,
)
from .linalg import Matrix, image_basis, kron, solve_right


def build_smash(c):
    """Delta[a, b](x |x s) = (x_(1,a) |x b s) (x) (x_(2,b) |x s), eps(x |x s) = eps(x)."""
    G = c.group
    F = c.field
    n = G.order
    dims = [d * n for d in c.dims]
    comult = {}
    for a in G:
        for b in G:
            ab = G.mul(a, b)
            D = c.D(a, b)
            db = c.dims[b]
            out = [[F.zero] * dims[ab] for _ in range(dims[a] * dims[b])]
            for k in range(c.dims[ab]):
                for r in range(D.rows):
                    x = D[r, k]
                    if not x:
                        continue
                    i, j = divmod(r, db)
                    for s in G:
                        row = (i * n + G.mul(b, s)) * dims[b] + j * n + s
                        out[row][k * n + s] = x
            comult[a, b] = Matrix.from_rows(F, out, dims[ab])
    e = G.identity
    counit = Matrix.row(F, [c.counit[0, k] for k in range(c.dims[e]) for _ in range(n)])
    return GroupCoalgebra(F, G, dims, comult, counit,
                          name=f"smash({c.name})" if c.name else None,
                          meta={"construction": "smash"})


class SmashComodule:
    """A right comodule over build_smash(base): one space M with rho[b]: M -> M (x) (C_b x| kG)."""

    __slots__ = ("base", "smash", "dim", "coaction")

    def __init__(self, base, dim, coaction, smash=None):
        self.base = base
        self.smash = smash or build_smash(base)
        self.dim = dim
        self.coaction = dict(coaction)
        for b in base.group:
            want = (dim * self.smash.dims[b], dim)
            if self.coaction[b].shape != want:
                raise ShapeMismatch(f"rho[{b}] has shape {self.coaction[b].shape}, expected {want}")

    def __repr__(self):
        return f"SmashComodule(dim={self.dim})"

    def __eq__(self, other):
        return isinstance(other, SmashComodule) and self.dim == other.dim and self.coaction == other.coaction

    def __hash__(self):
        return hash(self.dim)

    def verify(self):
        return verify_smash_comodule(self)


def verify_smash_comodule(m):
    S = m.smash
    G = S.group
    F = S.field
    e = G.identity
    Im = Matrix.identity(F, m.dim)
    rep = Report("smash comodule")
    if kron(Im, S.counit) @ m.coaction[e] != Im:
        rep.fail("counit")
    for a in G:
        for b in G:
            lhs = kron(Im, S.D(a, b)) @ m.coaction[G.mul(a, b)]
            rhs = kron(m.coaction[a], S.I(b)) @ m.coaction[b]
            if lhs != rhs:
                rep.fail("coassociativity", pair=[a, b])
    return rep


def _offsets(dims):
    out, t = [], 0
    for d in dims:
        out.append(t)
        t += d
    return out, t


def to_smash_comodule(m, smash=None):
    """M = sum M_s and rho[b](x) = x_[0, s b^-1] (x) (x_[1, b] |x s^-1) for x in M_s."""
    c = m.coalgebra
    G = c.group
    F = c.field
    n = G.order
    off, total = _offsets(m.dims)
    coaction = {}
    for b in G:
        db = c.dims[b]
        width = db * n
        out = [[F.zero] * total for _ in range(total * width)]
        for s in G:
            t = G.mul(s, G.inv(b))
            rho = m.coaction[t, b]
            tag = G.inv(s)
            for x in range(m.dims[s]):
                for r in range(rho.rows):
                    v = rho[r, x]
                    if v:
                        y, j = divmod(r, db)
                        out[(off[t] + y) * width + j * n + tag][off[s] + x] = v
        coaction[b] = Matrix.from_rows(F, out, total)
    return SmashComodule(c, total, coaction, smash=smash)


def kG_coaction(m):
    """(M (x) p_e) rho_e: M -> M (x) kG with p_e(x |x s) = eps(x) s^-1."""
    c = m.base
    G = c.group
    F = c.field
    n = G.order
    de = c.dims[G.identity]
    p = [[F.zero] * (de * n) for _ in range(n)]
    for k in range(de):
        for s in G:
            p[G.inv(s)][k * n + s] = c.counit[0, k]
    pe = Matrix.from_rows(F, p, de * n)
    return kron(Matrix.identity(F, m.dim), pe) @ m.coaction[G.identity]


def grade_decomposition(m):
    """Projections onto the homogeneous parts M_s = {x : kappa(x) = x (x) s}."""
    G = m.base.group
    F = m.base.field
    n = G.order
    kappa = kG_coaction(m)
    Im = Matrix.identity(F, m.dim)
    proj = {}
    for s in G:
        sel = kron(Im, Matrix.row(F, [1 if t == s else 0 for t in range(n)]))
        proj[s] = sel @ kappa
    total = Matrix.zeros(F, m.dim, m.dim)
    for s in G:
        total = total + proj[s]
    if total != Im:
        raise NotGradable("grade projections do not sum to the identity")
    for s in G:
        for t in G:
            want = proj[s] if s == t else Matrix.zeros(F, m.dim, m.dim)
            if proj[s] @ proj[t] != want:
                raise NotGradable(f"grade projections {s}, {t} are not orthogonal idempotents")
    return proj


def grade_bases(m):
    """Basis (columns, reduced column-echelon) of each homogeneous part."""
    return {s: image_basis(p) for s, p in grade_decomposition(m).items()}


def from_smash_comodule(m):
    """Recover the G-comodule: M_w from the grading, rho[a, b] from rho_b restricted to M_{ab}."""
    c = m.base
    G = c.group
    F = c.field
    n = G.order
    B = grade_bases(m)
    if sum(b.cols for b in B.values()) != m.dim:
        raise NotGradable("homogeneous parts do not span")
    coaction = {}
    for w in G:
        for b in G:
            a = G.mul(w, G.inv(b))
            db = c.dims[b]
            width = db * n
            img = m.coaction[b] @ B[w]
            keep = G.inv(w)
            sliced = []
            for x in range(m.dim):
                for j in range(db):
                    base = x * width + j * n
                    for t in range(n):
                        if t != keep and any(img[base + t, col] for col in range(img.cols)):
                            raise SupportViolation(
                                f"rho_{b} of a grade-{w} vector has a tag {t} component")
                    sliced.append([img[base + keep, col] for col in range(img.cols)])
            S = Matrix.from_rows(F, sliced, img.cols)
            try:
                coaction[a, b] = solve_right(kron(B[a], c.I(b)), S)
            except NoSolution:
                raise SupportViolation(
                    f"rho_{b} of a grade-{w} vector leaves M_{a} (x) C_{b}") from None
    out = GComodule(c, [B[s].cols for s in G], coaction)
    rep = verify_gcomodule(out)
    if not rep:
        raise SupportViolation(f"recovered G-comodule fails its axioms: {rep.failures}")
    return out


def gprime(c, n, smash=None):
    """G'(N): sum_a N [] C_a with rho_b(sum n_i (x) c_i) = n_i (x) c_i(1, ab^-1) (x) (c_i(2, b) |x a^-1)."""
    G = c.group
    F = c.field
    order = G.order
    GN = functor_G(n, c)
    K = GN.inclusions
    In = Matrix.identity(F, n.dim)
    off, total = _offsets(GN.dims)
    coaction = {}
    for b in G:
        db = c.dims[b]
        width = db * order
        out = [[F.zero] * total for _ in range(total * width)]
        for a in G:
            t = G.mul(a, G.inv(b))
            image = kron(In, c.D(t, b)) @ K[a]
            coords = solve_right(kron(K[t], c.I(b)), image)
            tag = G.inv(a)
            for x in range(coords.cols):
                for r in range(coords.rows):
                    v = coords[r, x]
                    if v:
                        y, j = divmod(r, db)
                        out[(off[t] + y) * width + j * order + tag][off[a] + x] = v
        coaction[b] = Matrix.from_rows(F, out, total)
    return SmashComodule(c, total, coaction, smash=smash)


def fprime(m):
    """F'(M) = {x : rho_e(x) in M (x) (C_e x| e)}, as a right C_e-comodule."""
    return functor_F(from_smash_comodule(m))


def fprime_gprime_check(c, n):
    """Check F'(G'(N)) = N and whether the unit of (F', G') is bijective.

    The unit is tested on G'(N) and on the smash comodules of all suspensions
    of c; it is bijective everywhere iff c is strong.
    """
    rep = Report("F'G' adjunction")
    smash = build_smash(c)
    M = gprime(c, n, smash=smash)
    rep.info["gprime_dim"] = M.dim
    if not verify_smash_comodule(M):
        rep.fail("G'(N) is not a smash comodule")
        return rep
    GN = functor_G(n, c)
    if to_smash_comodule(GN, smash=smash) != M:
        rep.fail("G'(N) disagrees with the smash comodule of G(N)")
    back = fprime(M)
    K = GN.inclusions[c.e]
    nu = kron(Matrix.identity(c.field, n.dim), c.counit) @ K
    iso = is_bijective(nu) and back.dim == n.dim
    if iso and kron(nu, Matrix.identity(c.field, c.dims[c.e])) @ back.coaction != n.coaction @ nu:
        iso = False
    rep.info["counit_iso"] = iso
    if not iso:
        rep.fail("F'(G'(N)) is not isomorphic to N")

    tested = {"G'(N)": from_smash_comodule(M)}
    for s in c.group:
        tested[f"suspension {s}"] = from_smash_comodule(to_smash_comodule(suspension(c, s), smash=smash))
    unit = {}
    for label, gm in tested.items():
        adj = adjunction_check(gm)
        unit[label] = adj.ok and not adj.info.get("non_bijective")
    rep.info["unit_bijective_at"] = unit
    rep.info["unit_bijective"] = all(unit.values())
    rep.info["strong"] = is_strong(c).strong
    rep.info["agrees_with_strong"] = rep.info["unit_bijective"] == rep.info["strong"]
    return rep


def smash_comodule_iso(m):
    """Basis change identifying m with to_smash_comodule(from_smash_comodule(m))."""
    B = grade_bases(m)
    G = m.base.group
    cols = []
    for s in G:
        cols.extend(B[s].column_list(j) for j in range(B[s].cols))
    return Matrix.from_columns(m.base.field, cols, m.dim)


def verify_smash_morphism(src, tgt, f):
    rep = Report("smash comodule morphism")
    for b in src.base.group:
        S = src.smash
        if kron(f, S.I(b)) @ src.coaction[b] != tgt.coaction[b] @ f:
            rep.fail("colinearity", element=b)
    return rep

