"""Deciding whether a linear space of square matrices contains an invertible one.

The space is given by a basis B_1..B_k of n x n matrices, and we look for
coefficients x with det(sum x_i B_i) != 0.  det is a polynomial of degree at
most n in each variable, so:

* over F_p with p^k small we enumerate every point;
* otherwise we sample points (Schwartz-Zippel), and if every sample is
  singular we evaluate on the grid {0..n}^k.  A nonzero polynomial of degree
  <= n in each variable cannot vanish on a grid with n+1 values per axis, so a
  fully singular grid certifies a negative answer.  If the grid is too large
  (or F_p has fewer than n+1 elements) the answer is inconclusive (None).
"""

import random
from dataclasses import dataclass, field
from itertools import product

from .linalg import Matrix, combine

EXHAUSTIVE_LIMIT = 10**6
RETRIES = 20


@dataclass
class SearchResult:
    found: object  # True, False, or None for inconclusive
    coeffs: tuple = None
    element: Matrix = None
    method: str = ""
    info: dict = field(default_factory=dict)


def find_invertible(F, basis, n, seed=0, exhaustive_limit=EXHAUSTIVE_LIMIT, retries=RETRIES):
    """Search span(basis) for an invertible n x n matrix."""
    k = len(basis)
    if n == 0:
        return SearchResult(True, (0,) * k, Matrix.zeros(F, 0, 0), "trivial")
    if k == 0:
        return SearchResult(False, (), None, "empty space")

    def test(coeffs):
        m = combine(F, basis, coeffs)
        return m if m.det() else None

    if F.is_prime_field and F.p ** k <= exhaustive_limit:
        for coeffs in product(range(F.p), repeat=k):
            if not any(coeffs):
                continue
            m = test(coeffs)
            if m is not None:
                return SearchResult(True, coeffs, m, "exhaustive")
        return SearchResult(False, None, None, "exhaustive", {"points": F.p ** k})

    rng = random.Random(seed)
    if F.is_prime_field:
        pool = list(range(F.p))
    else:
        # |S| >= 2n keeps the per-sample failure probability of a nonzero det at most 1/2
        pool = list(range(-max(n, 5), max(n, 5) + 1))
    for _ in range(retries):
        coeffs = tuple(rng.choice(pool) for _ in range(k))
        m = test(coeffs)
        if m is not None:
            return SearchResult(True, coeffs, m, "random sampling")

    if F.is_prime_field and F.p < n + 1:
        return SearchResult(None, None, None, "inconclusive", {"reason": "field too small for grid certificate"})
    if (n + 1) ** k > exhaustive_limit:
        return SearchResult(None, None, None, "inconclusive", {"reason": "grid certificate too large"})
    for coeffs in product(range(n + 1), repeat=k):
        m = test(coeffs)
        if m is not None:
            return SearchResult(True, coeffs, m, "degree-bound grid")
    return SearchResult(False, None, None, "degree-bound grid", {"points": (n + 1) ** k})
