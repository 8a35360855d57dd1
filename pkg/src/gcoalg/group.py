"""Finite groups given by multiplication tables.

Elements are the indices 0..order-1.  The identity need not be index 0 for
tables loaded from files; it is located by scanning.
"""

from itertools import permutations

from .errors import NotAGroup


class FiniteGroup:
    __slots__ = ("order", "table", "identity", "inverse", "names")

    def __init__(self, table, identity, inverse, names=None):
        self.order = len(table)
        self.table = tuple(tuple(r) for r in table)
        self.identity = identity
        self.inverse = tuple(inverse)
        self.names = tuple(names) if names else tuple(str(i) for i in range(self.order))

    @property
    def e(self):
        return self.identity

    def mul(self, a, b):
        return self.table[a][b]

    def inv(self, a):
        return self.inverse[a]

    def prod(self, *xs):
        out = self.identity
        for x in xs:
            out = self.table[out][x]
        return out

    def __iter__(self):
        return iter(range(self.order))

    def __len__(self):
        return self.order

    def __eq__(self, other):
        return isinstance(other, FiniteGroup) and self.table == other.table

    def __hash__(self):
        return hash(self.table)

    def __repr__(self):
        return f"FiniteGroup(order={self.order})"

    def is_abelian(self):
        return all(self.table[a][b] == self.table[b][a] for a in self for b in self)

    def to_json(self):
        return {"order": self.order, "table": [list(r) for r in self.table]}


def group_from_table(table, names=None):
    """Validate a multiplication table and locate identity and inverses."""
    table = [list(r) for r in table]
    n = len(table)
    if n == 0:
        raise NotAGroup("empty table")
    for i, r in enumerate(table):
        if len(r) != n:
            raise NotAGroup(f"row {i} has length {len(r)}, expected {n}")
        for x in r:
            if not (isinstance(x, int) and 0 <= x < n):
                raise NotAGroup(f"entry {x!r} in row {i} out of range")

    identity = None
    for e in range(n):
        if all(table[e][a] == a and table[a][e] == a for a in range(n)):
            identity = e
            break
    if identity is None:
        raise NotAGroup("no identity element")

    for a in range(n):
        for b in range(n):
            ab = table[a][b]
            for c in range(n):
                if table[ab][c] != table[a][table[b][c]]:
                    raise NotAGroup(f"not associative at ({a}, {b}, {c})")

    inverse = []
    for a in range(n):
        b = next((b for b in range(n) if table[a][b] == identity and table[b][a] == identity), None)
        if b is None:
            raise NotAGroup(f"element {a} has no inverse")
        inverse.append(b)
    return FiniteGroup(table, identity, inverse, names)


def cyclic_group(n):
    if n < 1:
        raise ValueError("cyclic_group needs n >= 1")
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    return FiniteGroup(table, 0, [(-i) % n for i in range(n)])


def direct_product(g, h):
    """Product group; the pair (i, j) gets index i*order(h) + j."""
    m = h.order
    n = g.order * m
    table = [[0] * n for _ in range(n)]
    for a in range(n):
        for b in range(n):
            table[a][b] = g.mul(a // m, b // m) * m + h.mul(a % m, b % m)
    inverse = [g.inv(a // m) * m + h.inv(a % m) for a in range(n)]
    return FiniteGroup(table, g.identity * m + h.identity, inverse)


def symmetric_group(n):
    """S_n as a table; element i is the i-th permutation in lexicographic order.

    Product is composition (a*b)(x) = a(b(x)).
    """
    perms = list(permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[tuple(a[b[x]] for x in range(n))] for b in perms] for a in perms]
    names = ["".join(str(x) for x in p) for p in perms]
    return group_from_table(table, names)
