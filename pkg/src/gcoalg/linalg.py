"""Exact scalar fields and dense matrices.

Two kinds of field are supported: the rationals (elements are
``fractions.Fraction``) and prime fields F_p (elements are ints in
``range(p)``).  Everything is exact.

Maps on tensor products use the ordering (i, j) -> i*dim(W) + j for a basis
vector v_i (x) w_j of V (x) W, which is exactly what :func:`kronecker` does.
A linear map V -> W is stored as a dim(W) x dim(V) matrix acting on columns.
"""

from fractions import Fraction
from itertools import product

from .errors import NoSolution, ShapeMismatch


def _is_prime(p):
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


class Field:
    """The rationals (``Field()``) or the prime field F_p (``Field(p)``)."""

    __slots__ = ("p",)

    def __init__(self, p=None):
        if p is not None:
            p = int(p)
            if not _is_prime(p):
                raise ValueError(f"{p} is not prime")
        object.__setattr__(self, "p", p)

    def __setattr__(self, key, value):
        raise AttributeError("Field is immutable")

    @classmethod
    def parse(cls, spec):
        """Accept "Q", "F5", "GF(5)", 5, or {"kind": "prime", "p": 5}."""
        if isinstance(spec, Field):
            return spec
        if isinstance(spec, int):
            return cls(spec)
        if isinstance(spec, dict):
            if spec.get("kind") in ("rationals", "Q"):
                return cls()
            return cls(spec["p"])
        s = str(spec).strip()
        if s.upper() in ("Q", "QQ", "RATIONALS"):
            return cls()
        for prefix in ("GF(", "F_", "F", "GF"):
            if s.upper().startswith(prefix):
                return cls(int(s[len(prefix):].rstrip(")")))
        raise ValueError(f"unknown field spec {spec!r}")

    @property
    def is_prime_field(self):
        return self.p is not None

    @property
    def name(self):
        return "Q" if self.p is None else f"F{self.p}"

    def __repr__(self):
        return self.name

    def __eq__(self, other):
        return isinstance(other, Field) and other.p == self.p

    def __hash__(self):
        return hash(("Field", self.p))

    @property
    def zero(self):
        return 0 if self.p else Fraction(0)

    @property
    def one(self):
        return 1 if self.p else Fraction(1)

    def __call__(self, x):
        p = self.p
        if isinstance(x, str):
            return self.parse_scalar(x)
        if p is None:
            return Fraction(x)
        if isinstance(x, Fraction):
            if x.denominator % p == 0:
                raise ZeroDivisionError(f"{x} has no image in F{p}")
            return x.numerator * pow(x.denominator, -1, p) % p
        return int(x) % p

    def inv(self, x):
        if not x:
            raise ZeroDivisionError("inverse of zero")
        if self.p is None:
            return 1 / x
        return pow(x, -1, self.p)

    def elements(self):
        if self.p is None:
            raise ValueError("the rationals are infinite")
        return range(self.p)

    def format(self, x):
        if self.p is None:
            x = Fraction(x)
            return f"{x.numerator}/{x.denominator}"
        return f"{x % self.p} mod {self.p}"

    def parse_scalar(self, s):
        s = str(s).strip()
        if " mod " in s:
            r, p = s.split(" mod ")
            if self.p is None or int(p) != self.p:
                raise ValueError(f"scalar {s!r} does not belong to {self.name}")
            return int(r) % self.p
        return self(Fraction(s))


class Matrix:
    """Immutable dense matrix over a :class:`Field`."""

    __slots__ = ("field", "rows", "cols", "_data")

    def __init__(self, field, rows, cols, data):
        self.field = field
        self.rows = rows
        self.cols = cols
        self._data = data  # tuple of row tuples, entries already reduced

    # -- construction --------------------------------------------------

    @classmethod
    def from_rows(cls, field, rows, cols=None):
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        for r in rows:
            if len(r) != cols:
                raise ShapeMismatch("ragged rows")
        data = tuple(tuple(field(x) for x in r) for r in rows)
        return cls(field, len(rows), cols, data)

    @classmethod
    def from_entries(cls, field, rows, cols, entries):
        entries = list(entries)
        if len(entries) != rows * cols:
            raise ShapeMismatch(f"{len(entries)} entries for a {rows}x{cols} matrix")
        return cls.from_rows(field, [entries[i * cols:(i + 1) * cols] for i in range(rows)], cols)

    @classmethod
    def from_columns(cls, field, columns, rows=None):
        columns = [list(c) for c in columns]
        if rows is None:
            rows = len(columns[0]) if columns else 0
        for c in columns:
            if len(c) != rows:
                raise ShapeMismatch("ragged columns")
        return cls.from_rows(field, [[c[i] for c in columns] for i in range(rows)], len(columns))

    @classmethod
    def zeros(cls, field, rows, cols):
        z = field.zero
        return cls(field, rows, cols, tuple((z,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, field, n):
        z, o = field.zero, field.one
        return cls(field, n, n, tuple(tuple(o if i == j else z for j in range(n)) for i in range(n)))

    @classmethod
    def row(cls, field, values):
        return cls.from_rows(field, [list(values)])

    @classmethod
    def column(cls, field, values):
        return cls.from_rows(field, [[v] for v in values], 1)

    @classmethod
    def unit_column(cls, field, n, i):
        return cls.column(field, [1 if j == i else 0 for j in range(n)])

    @classmethod
    def permutation(cls, field, perm):
        """Matrix sending basis vector j to basis vector perm[j]."""
        n = len(perm)
        z, o = field.zero, field.one
        rows = [[z] * n for _ in range(n)]
        for j, i in enumerate(perm):
            rows[i][j] = o
        return cls(field, n, n, tuple(tuple(r) for r in rows))

    # -- access --------------------------------------------------------

    @property
    def shape(self):
        return (self.rows, self.cols)

    @property
    def entries(self):
        return [x for r in self._data for x in r]

    def __getitem__(self, ij):
        i, j = ij
        return self._data[i][j]

    def tolist(self):
        return [list(r) for r in self._data]

    def column_list(self, j):
        return [r[j] for r in self._data]

    def col(self, j):
        return Matrix(self.field, self.rows, 1, tuple((r[j],) for r in self._data))

    def columns(self, idx):
        idx = list(idx)
        return Matrix(self.field, self.rows, len(idx), tuple(tuple(r[j] for j in idx) for r in self._data))

    def row_slice(self, idx):
        idx = list(idx)
        return Matrix(self.field, len(idx), self.cols, tuple(self._data[i] for i in idx))

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in r) for r in self._data)
        return f"Matrix<{self.field}>({self.rows}x{self.cols}: [{body}])"

    def __eq__(self, other):
        return (
            isinstance(other, Matrix)
            and self.field == other.field
            and self.shape == other.shape
            and self._data == other._data
        )

    def __hash__(self):
        return hash((self.field, self.shape, self._data))

    def is_zero(self):
        return not any(x for r in self._data for x in r)

    # -- arithmetic ----------------------------------------------------

    def _check_same(self, other):
        if self.field != other.field:
            raise ShapeMismatch(f"field mismatch {self.field} vs {other.field}")
        if self.shape != other.shape:
            raise ShapeMismatch(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other):
        self._check_same(other)
        F = self.field
        data = tuple(tuple(F(a + b) if F.p else a + b for a, b in zip(r, s)) for r, s in zip(self._data, other._data))
        return Matrix(F, self.rows, self.cols, data)

    def __sub__(self, other):
        self._check_same(other)
        F = self.field
        data = tuple(tuple(F(a - b) if F.p else a - b for a, b in zip(r, s)) for r, s in zip(self._data, other._data))
        return Matrix(F, self.rows, self.cols, data)

    def __neg__(self):
        return self.scale(-1)

    def scale(self, c):
        F = self.field
        c = F(c)
        data = tuple(tuple(F(c * a) if F.p else c * a for a in r) for r in self._data)
        return Matrix(F, self.rows, self.cols, data)

    def __matmul__(self, other):
        if self.field != other.field:
            raise ShapeMismatch(f"field mismatch {self.field} vs {other.field}")
        if self.cols != other.rows:
            raise ShapeMismatch(f"cannot multiply {self.shape} by {other.shape}")
        F = self.field
        p = F.p
        zero = F.zero
        ocols = list(zip(*other._data)) if other.rows else [()] * other.cols
        out = []
        for r in self._data:
            nz = [(k, a) for k, a in enumerate(r) if a]
            row = []
            for c in ocols:
                s = zero
                for k, a in nz:
                    b = c[k]
                    if b:
                        s += a * b
                row.append(s % p if p else s)
            out.append(tuple(row))
        return Matrix(F, self.rows, other.cols, tuple(out))

    @property
    def T(self):
        if self.rows == 0:
            return Matrix(self.field, self.cols, 0, tuple(() for _ in range(self.cols)))
        return Matrix(self.field, self.cols, self.rows, tuple(zip(*self._data)))

    def kron(self, other):
        return kronecker(self, other)

    def hstack(self, other):
        if self.rows != other.rows:
            raise ShapeMismatch("hstack row mismatch")
        return Matrix(self.field, self.rows, self.cols + other.cols,
                      tuple(a + b for a, b in zip(self._data, other._data)))

    def vstack(self, other):
        if self.cols != other.cols:
            raise ShapeMismatch("vstack column mismatch")
        return Matrix(self.field, self.rows + other.rows, self.cols, self._data + other._data)

    def reshape(self, rows, cols):
        """Row-major reshape."""
        return Matrix.from_entries(self.field, rows, cols, self.entries)

    # -- elimination ---------------------------------------------------

    def rank(self):
        return rank(self)

    def kernel(self):
        return kernel_basis(self)

    def image(self):
        return image_basis(self)

    def inverse(self):
        if self.rows != self.cols:
            raise ShapeMismatch("inverse of a non-square matrix")
        try:
            return solve_right(self, Matrix.identity(self.field, self.rows))
        except NoSolution:
            raise ZeroDivisionError("singular matrix") from None

    def det(self):
        if self.rows != self.cols:
            raise ShapeMismatch("det of a non-square matrix")
        F = self.field
        rows = [list(r) for r in self._data]
        n = self.rows
        d = F.one
        for c in range(n):
            piv = next((i for i in range(c, n) if rows[i][c]), None)
            if piv is None:
                return F.zero
            if piv != c:
                rows[c], rows[piv] = rows[piv], rows[c]
                d = -d
            d = F(d * rows[c][c]) if F.p else d * rows[c][c]
            inv = F.inv(rows[c][c])
            for i in range(c + 1, n):
                if rows[i][c]:
                    t = rows[i][c] * inv
                    rows[i] = [_red(F, a - t * b) for a, b in zip(rows[i], rows[c])]
        return F(d) if F.p else d


def _red(F, x):
    return x % F.p if F.p else x


def _rref(field, rows, ncols):
    """Row-reduce a list of row lists in place; return the pivot columns."""
    F = field
    pivots = []
    r = 0
    nrows = len(rows)
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = F.inv(rows[r][c])
        rows[r] = [_red(F, x * inv) for x in rows[r]]
        prow = rows[r]
        for i in range(nrows):
            if i != r and rows[i][c]:
                t = rows[i][c]
                rows[i] = [_red(F, a - t * b) for a, b in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
    return pivots


def rref(m):
    """Reduced row echelon form and the pivot column indices."""
    rows = m.tolist()
    piv = _rref(m.field, rows, m.cols)
    return Matrix(m.field, m.rows, m.cols, tuple(tuple(r) for r in rows)), piv


def rank(m):
    rows = m.tolist()
    return len(_rref(m.field, rows, m.cols))


def _column_echelon(field, columns, n):
    """Basis (as columns) of the span of ``columns``, in reduced column-echelon form."""
    rows = [list(c) for c in columns]
    piv = _rref(field, rows, n)
    return Matrix.from_columns(field, rows[: len(piv)], n) if piv else Matrix.zeros(field, n, 0)


def kernel_basis(m):
    """Columns spanning the null space, in reduced column-echelon form.

    The result has shape cols x (cols - rank).
    """
    F = m.field
    n = m.cols
    rows = m.tolist()
    piv = _rref(F, rows, n)
    pivset = set(piv)
    basis = []
    for j in range(n):
        if j in pivset:
            continue
        v = [F.zero] * n
        v[j] = F.one
        for r, pc in enumerate(piv):
            if rows[r][j]:
                v[pc] = _red(F, -rows[r][j])
        basis.append(v)
    if not basis:
        return Matrix.zeros(F, n, 0)
    return _column_echelon(F, basis, n)


def image_basis(m):
    """Columns spanning the column space, in reduced column-echelon form."""
    return _column_echelon(m.field, [m.column_list(j) for j in range(m.cols)], m.rows)


def kronecker(a, b):
    if a.field != b.field:
        raise ShapeMismatch("field mismatch in kronecker")
    F = a.field
    p = F.p
    data = []
    for ra in a._data:
        for rb in b._data:
            if p:
                data.append(tuple((x * y) % p for x in ra for y in rb))
            else:
                data.append(tuple(x * y for x in ra for y in rb))
    return Matrix(F, a.rows * b.rows, a.cols * b.cols, tuple(data))


def kron(*ms):
    out = ms[0]
    for m in ms[1:]:
        out = kronecker(out, m)
    return out


def solve_right(a, b):
    """Some x with a @ x == b (free variables set to zero); NoSolution otherwise."""
    if a.rows != b.rows:
        raise ShapeMismatch(f"solve_right: {a.shape} vs {b.shape}")
    F = a.field
    aug = [list(ra) + list(rb) for ra, rb in zip(a._data, b._data)]
    piv = _rref(F, aug, a.cols)
    for r in range(len(piv), a.rows):
        if any(aug[r][a.cols:]):
            raise NoSolution("right-hand side is not in the column space")
    x = [[F.zero] * b.cols for _ in range(a.cols)]
    for r, c in enumerate(piv):
        x[c] = aug[r][a.cols:]
    return Matrix(F, a.cols, b.cols, tuple(tuple(r) for r in x))


def in_column_space(a, b):
    try:
        solve_right(a, b)
    except NoSolution:
        return False
    return True


def swap_matrix(field, m, n):
    """The flip V (x) W -> W (x) V for dim V = m, dim W = n."""
    perm = [j * m + i for i in range(m) for j in range(n)]
    return Matrix.permutation(field, perm)


def linear_constraint_kernel(field, shapes, constraint):
    """Basis of the solutions of a homogeneous linear condition on matrix tuples.

    ``shapes`` lists the (rows, cols) of each unknown matrix and
    ``constraint`` maps a tuple of matrices to a Matrix that must vanish; it
    has to be linear.  Returns a list of tuples of matrices.
    """
    offsets = []
    total = 0
    for r, c in shapes:
        offsets.append(total)
        total += r * c

    def unflatten(vec):
        out = []
        for (r, c), off in zip(shapes, offsets):
            out.append(Matrix.from_entries(field, r, c, vec[off:off + r * c]))
        return tuple(out)

    columns = []
    for k in range(total):
        vec = [field.zero] * total
        vec[k] = field.one
        columns.append(constraint(unflatten(vec)).entries)
    if total == 0:
        return []
    nrows = len(columns[0])
    system = Matrix.from_columns(field, columns, nrows)
    ker = kernel_basis(system)
    return [unflatten(ker.column_list(j)) for j in range(ker.cols)]


def combine(field, basis, coeffs):
    """Linear combination sum(c_i * B_i) of equally shaped matrices."""
    out = None
    for c, b in zip(coeffs, basis):
        if not c:
            continue
        term = b.scale(c)
        out = term if out is None else out + term
    if out is None:
        return Matrix.zeros(field, basis[0].rows, basis[0].cols)
    return out


def all_vectors(field, n):
    """Every vector of F_p^n, in lexicographic order."""
    return product(field.elements(), repeat=n)
