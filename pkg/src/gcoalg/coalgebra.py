"""Ordinary coalgebras, their convolution algebras, comodules and cotensor products.

A coalgebra of dimension d stores its comultiplication as a d^2 x d matrix
(column j is Delta(b_j) in tensor coordinates) and its counit as a 1 x d row.
Linear functionals on C are 1 x d rows.
"""

from .errors import NotInvertible, Report, ShapeMismatch
from .linalg import (
    Matrix,
    NoSolution,
    kernel_basis,
    kron,
    linear_constraint_kernel,
    rank,
    solve_right,
    swap_matrix,
)


def _first_bad_column(a, b):
    for j in range(a.cols):
        if a.col(j) != b.col(j):
            return j
    return None


class Coalgebra:
    __slots__ = ("field", "dim", "comult", "counit", "name")

    def __init__(self, field, dim, comult, counit, name=None):
        if comult.shape != (dim * dim, dim):
            raise ShapeMismatch(f"comult has shape {comult.shape}, expected {(dim * dim, dim)}")
        if counit.shape != (1, dim):
            raise ShapeMismatch(f"counit has shape {counit.shape}, expected {(1, dim)}")
        if comult.field != field or counit.field != field:
            raise ShapeMismatch("structure maps over the wrong field")
        self.field = field
        self.dim = dim
        self.comult = comult
        self.counit = counit
        self.name = name

    def __repr__(self):
        return f"Coalgebra({self.name or ''} dim={self.dim} over {self.field})"

    def __eq__(self, other):
        return (
            isinstance(other, Coalgebra)
            and self.field == other.field
            and self.comult == other.comult
            and self.counit == other.counit
        )

    def __hash__(self):
        return hash((self.comult, self.counit))

    @property
    def I(self):
        return Matrix.identity(self.field, self.dim)

    @property
    def epsilon(self):
        return self.counit

    def functional(self, values):
        return Matrix.row(self.field, values)

    def triple_comult(self):
        """Delta^(2) = (Delta (x) C) Delta, a d^3 x d matrix."""
        return kron(self.comult, self.I) @ self.comult

    def right_hit(self, f):
        """The map c -> c_(1) f(c_(2))."""
        return kron(self.I, f) @ self.comult

    def left_hit(self, f):
        """The map c -> f(c_(1)) c_(2)."""
        return kron(f, self.I) @ self.comult

    def as_right_comodule(self):
        return RightComodule(self, self.dim, self.comult)

    def as_left_comodule(self):
        return LeftComodule(self, self.dim, self.comult)

    def is_coalgebra_map(self, lam, target=None):
        """Whether the d x d matrix lam is a coalgebra morphism self -> target."""
        target = target or self
        return (
            target.comult @ lam == kron(lam, lam) @ self.comult
            and target.counit @ lam == self.counit
        )


def verify_coalgebra(c):
    """Check coassociativity and both counit laws, with witness basis indices."""
    rep = Report("coalgebra")
    d = c.dim
    I = c.I
    lhs = kron(c.comult, I) @ c.comult
    rhs = kron(I, c.comult) @ c.comult
    if lhs != rhs:
        rep.fail("coassociativity", basis=_first_bad_column(lhs, rhs))
    right = kron(I, c.counit) @ c.comult
    if right != I:
        rep.fail("right counit", basis=_first_bad_column(right, I))
    left = kron(c.counit, I) @ c.comult
    if left != I:
        rep.fail("left counit", basis=_first_bad_column(left, I))
    rep.info["dim"] = d
    return rep


class Algebra:
    """Finite-dimensional algebra: mult is n x n^2 (column (i,j) = b_i b_j), unit is n x 1."""

    __slots__ = ("field", "dim", "mult", "unit")

    def __init__(self, field, dim, mult, unit):
        if mult.shape != (dim, dim * dim) or unit.shape != (dim, 1):
            raise ShapeMismatch("algebra structure has the wrong shape")
        self.field = field
        self.dim = dim
        self.mult = mult
        self.unit = unit

    def multiply(self, x, y):
        """Product of two column vectors."""
        return self.mult @ kron(x, y)

    def verify(self):
        rep = Report("algebra")
        I = Matrix.identity(self.field, self.dim)
        m = self.mult
        if m @ kron(m, I) != m @ kron(I, m):
            rep.fail("associativity")
        if m @ kron(self.unit, I) != I:
            rep.fail("left unit")
        if m @ kron(I, self.unit) != I:
            rep.fail("right unit")
        return rep

    def structure_constants(self):
        """c[i][j][k]: coefficient of b_k in b_i b_j."""
        n = self.dim
        return [[[self.mult[k, i * n + j] for k in range(n)] for j in range(n)] for i in range(n)]


def dual_algebra(c):
    """The convolution algebra C*: the product of u, v is (u (x) v) Delta."""
    return Algebra(c.field, c.dim, c.comult.T, c.counit.T)


def convolve(c, u, v):
    if u.shape != (1, c.dim) or v.shape != (1, c.dim):
        raise ShapeMismatch("functionals of the wrong length")
    return kron(u, v) @ c.comult


def convolve_all(c, *fs):
    out = c.counit
    for f in fs:
        out = convolve(c, out, f)
    return out


def convolution_inverse(c, u):
    """The two-sided convolution inverse of u, or NotInvertible."""
    # (u * v)(x) = v((u (x) C) Delta x) so u * v = v @ A with A = left_hit(u)
    A = c.left_hit(u)
    try:
        v = solve_right(A.T, c.counit.T).T
    except NoSolution:
        raise NotInvertible("functional has no convolution inverse") from None
    if convolve(c, u, v) != c.counit or convolve(c, v, u) != c.counit:
        raise NotInvertible("functional has only a one-sided convolution inverse")
    return v


def is_convolution_invertible(c, u):
    try:
        convolution_inverse(c, u)
    except NotInvertible:
        return False
    return True


def is_cocommutative(c):
    return swap_matrix(c.field, c.dim, c.dim) @ c.comult == c.comult


class RightComodule:
    """Vector space of dim m with coaction M -> M (x) C, an (m*d) x m matrix."""

    __slots__ = ("coalgebra", "dim", "coaction")

    def __init__(self, coalgebra, dim, coaction):
        if coaction.shape != (dim * coalgebra.dim, dim):
            raise ShapeMismatch(f"coaction has shape {coaction.shape}, expected {(dim * coalgebra.dim, dim)}")
        self.coalgebra = coalgebra
        self.dim = dim
        self.coaction = coaction

    def __repr__(self):
        return f"RightComodule(dim={self.dim})"

    def verify(self):
        C = self.coalgebra
        rep = Report("right comodule")
        Im = Matrix.identity(C.field, self.dim)
        if kron(Im, C.counit) @ self.coaction != Im:
            rep.fail("counit")
        if kron(self.coaction, C.I) @ self.coaction != kron(Im, C.comult) @ self.coaction:
            rep.fail("coassociativity")
        return rep


class LeftComodule:
    """Vector space of dim m with coaction M -> C (x) M, a (d*m) x m matrix."""

    __slots__ = ("coalgebra", "dim", "coaction")

    def __init__(self, coalgebra, dim, coaction):
        if coaction.shape != (coalgebra.dim * dim, dim):
            raise ShapeMismatch(f"coaction has shape {coaction.shape}, expected {(coalgebra.dim * dim, dim)}")
        self.coalgebra = coalgebra
        self.dim = dim
        self.coaction = coaction

    def __repr__(self):
        return f"LeftComodule(dim={self.dim})"

    def verify(self):
        C = self.coalgebra
        rep = Report("left comodule")
        Im = Matrix.identity(C.field, self.dim)
        if kron(C.counit, Im) @ self.coaction != Im:
            rep.fail("counit")
        if kron(C.I, self.coaction) @ self.coaction != kron(C.comult, Im) @ self.coaction:
            rep.fail("coassociativity")
        return rep


def cotensor(n, m):
    """Inclusion matrix of N []_C M inside N (x) M.

    It is the kernel of rho_N (x) M - N (x) lambda_M.
    """
    C = n.coalgebra
    if m.coalgebra.field != C.field or m.coalgebra.dim != C.dim:
        raise ShapeMismatch("cotensor over different coalgebras")
    In = Matrix.identity(C.field, n.dim)
    Im = Matrix.identity(C.field, m.dim)
    eq = kron(n.coaction, Im) - kron(In, m.coaction)
    return kernel_basis(eq)


def comodule_hom_space(m, n):
    """Basis of the right colinear maps M -> N, as n.dim x m.dim matrices."""
    C = m.coalgebra
    I = C.I

    def defect(fs):
        (f,) = fs
        return kron(f, I) @ m.coaction - n.coaction @ f

    return [b[0] for b in linear_constraint_kernel(C.field, [(n.dim, m.dim)], defect)]


def left_comodule_hom_space(m, n):
    """Basis of the left colinear maps M -> N."""
    C = m.coalgebra
    I = C.I

    def defect(fs):
        (f,) = fs
        return kron(I, f) @ m.coaction - n.coaction @ f

    return [b[0] for b in linear_constraint_kernel(C.field, [(n.dim, m.dim)], defect)]


def is_injective(m):
    return rank(m) == m.cols


def is_surjective(m):
    return rank(m) == m.rows


def is_bijective(m):
    return m.rows == m.cols and rank(m) == m.cols
