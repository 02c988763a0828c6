"""Cartan matrices of finite type and their root systems.

Everything here is exact integer arithmetic in simple-root coordinates.
The pairing of a root b with a simple root is linear in b, so the Cartan
matrix alone supplies every number the rest of the package needs; no
inner product or Euclidean realization is ever materialized.

All public indices (simple roots, word letters) are 1-based.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import NotCartan, NotFiniteType

# Off-diagonal Cartan numbers of finite type.
_ALLOWED_OFF_DIAGONAL = (0, -1, -2, -3)


@dataclass(frozen=True)
class CartanMatrix:
    """Validated Cartan matrix.

    entries[i][j] is the Cartan number 2(b_i, b_j)/(b_j, b_j) of simple
    roots b_{i+1}, b_{j+1}: row i lists the pairings of root i against
    every coroot.  Rows and columns are stored 0-based, the public API
    is 1-based.  Construct through validate_cartan or
    cartan_matrix_by_name.
    """

    n: int
    entries: tuple[tuple[int, ...], ...]

    def pairing(self, i: int, j: int) -> int:
        """Cartan number of simple roots i and j, 1-based."""
        return self.entries[i - 1][j - 1]

    def as_lists(self) -> list[list[int]]:
        return [list(row) for row in self.entries]

    def submatrix(self, indices) -> "CartanMatrix":
        """Cartan matrix of the sub-root-system on the given 1-based indices."""
        idx = sorted(set(indices))
        for i in idx:
            if not 1 <= i <= self.n:
                raise IndexError(f"simple-root index {i} out of range 1..{self.n}")
        rows = tuple(
            tuple(self.entries[i - 1][j - 1] for j in idx) for i in idx
        )
        return CartanMatrix(len(idx), rows)


@dataclass(frozen=True)
class Root:
    """Root in simple-root coordinates; either all coords >= 0 or all <= 0."""

    coords: tuple[int, ...]

    def __post_init__(self):
        if not self.coords or all(x == 0 for x in self.coords):
            raise ValueError("root must be nonzero")
        if any(x > 0 for x in self.coords) and any(x < 0 for x in self.coords):
            raise ValueError(f"mixed-sign coordinates are not a root: {self.coords}")

    @property
    def is_positive(self) -> bool:
        return any(x > 0 for x in self.coords)

    @property
    def height(self) -> int:
        return sum(self.coords)


def simple_root(i: int, n: int) -> Root:
    """The i-th simple root (1-based) of a rank-n system."""
    if not 1 <= i <= n:
        raise IndexError(f"simple-root index {i} out of range 1..{n}")
    return Root(tuple(1 if j == i - 1 else 0 for j in range(n)))


def validate_cartan(m) -> CartanMatrix:
    """Check a square integer matrix and return it as a CartanMatrix.

    Raises NotCartan if the shape constraints fail (diagonal not 2,
    off-diagonal outside {0,-1,-2,-3}, asymmetric zero pattern) and
    NotFiniteType if the symmetrized matrix is not positive definite,
    in which case root generation would not terminate.
    """
    rows = [list(row) for row in m]
    n = len(rows)
    if n == 0:
        raise NotCartan("empty matrix")
    if any(len(row) != n for row in rows):
        raise NotCartan(f"matrix is not square: {rows}")
    for row in rows:
        for x in row:
            if not isinstance(x, int) or isinstance(x, bool):
                raise NotCartan(f"non-integer entry {x!r}")
    for i in range(n):
        if rows[i][i] != 2:
            raise NotCartan(f"diagonal entry [{i + 1}][{i + 1}] = {rows[i][i]}, expected 2")
        for j in range(n):
            if i == j:
                continue
            if rows[i][j] not in _ALLOWED_OFF_DIAGONAL:
                raise NotCartan(
                    f"off-diagonal entry [{i + 1}][{j + 1}] = {rows[i][j]} outside {{0,-1,-2,-3}}"
                )
            if (rows[i][j] == 0) != (rows[j][i] == 0):
                raise NotCartan(f"asymmetric zero pattern at [{i + 1}][{j + 1}]")
    _check_finite_type(rows)
    return CartanMatrix(n, tuple(tuple(row) for row in rows))


def _check_finite_type(rows):
    """Positive definiteness of the symmetrization, by exact leading minors."""
    n = len(rows)
    # Find d_i > 0 with d_i*rows[i][j] = d_j*rows[j][i]; propagate along the
    # nonzero off-diagonal graph, component by component.
    d = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if i == j or rows[i][j] == 0:
                    continue
                dj = d[i] * Fraction(rows[i][j], rows[j][i])
                if d[j] is None:
                    d[j] = dj
                    stack.append(j)
                elif d[j] != dj:
                    raise NotFiniteType("matrix is not symmetrizable")
    sym = [[d[i] * rows[i][j] for j in range(n)] for i in range(n)]
    for k in range(1, n + 1):
        if _leading_minor(sym, k) <= 0:
            raise NotFiniteType(
                f"symmetrized matrix has non-positive leading {k}x{k} minor"
            )


def _leading_minor(sym, k) -> Fraction:
    """Determinant of the leading k x k block, exact Gaussian elimination."""
    a = [row[:k] for row in sym[:k]]
    det = Fraction(1)
    for col in range(k):
        pivot = next((r for r in range(col, k) if a[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        det *= a[col][col]
        for r in range(col + 1, k):
            f = a[r][col] / a[col][col]
            for c in range(col, k):
                a[r][c] -= f * a[col][c]
    return det


def cartan_pair(b, i: int, c: CartanMatrix) -> int:
    """Pairing of a root b with the i-th simple root (1-based).

    Linear in b: the sum of coords[k] * entries[k][i] over k.
    """
    coords = b.coords if isinstance(b, Root) else tuple(b)
    if not 1 <= i <= c.n:
        raise IndexError(f"simple-root index {i} out of range 1..{c.n}")
    if len(coords) != c.n:
        raise ValueError(f"coordinate vector has length {len(coords)}, expected {c.n}")
    return sum(coords[k] * c.entries[k][i - 1] for k in range(c.n))


def reflect_root(i: int, coords, c: CartanMatrix) -> tuple[int, ...]:
    """Simple reflection s_i acting on root coordinates."""
    p = cartan_pair(coords, i, c)
    out = list(coords)
    out[i - 1] -= p
    return tuple(out)


def positive_roots(c: CartanMatrix) -> list[Root]:
    """All positive roots, as closure of the simple roots under simple
    reflections restricted to positive outcomes.

    Deterministic order: by height, then lexicographically on coordinates.
    Finiteness is guaranteed by the finite-type validation.
    """
    seen = {simple_root(i, c.n).coords for i in range(1, c.n + 1)}
    frontier = list(seen)
    while frontier:
        fresh = []
        for coords in frontier:
            for i in range(1, c.n + 1):
                image = reflect_root(i, coords, c)
                if all(x >= 0 for x in image) and image not in seen:
                    seen.add(image)
                    fresh.append(image)
        frontier = fresh
    return [Root(t) for t in sorted(seen, key=lambda t: (sum(t), t))]


# Built-in Cartan matrices, indexed as in the standard Dynkin diagrams.
# B has the short simple root last, C the long one.  G2 is ordered with
# the long root first: the golden 5x5 word matrices pin that labeling.
_NAME_RE = re.compile(r"^([A-G])(\d+)$")


def _chain(n: int) -> list[list[int]]:
    rows = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i in range(n - 1):
        rows[i][i + 1] = rows[i + 1][i] = -1
    return rows


def _builtin_rows(letter: str, n: int) -> list[list[int]]:
    if letter == "A":
        if n < 1:
            raise NotCartan("type A needs rank >= 1")
        return _chain(n)
    if letter == "B":
        if n < 2:
            raise NotCartan("type B needs rank >= 2")
        rows = _chain(n)
        rows[n - 2][n - 1] = -2
        return rows
    if letter == "C":
        if n < 2:
            raise NotCartan("type C needs rank >= 2")
        rows = _chain(n)
        rows[n - 1][n - 2] = -2
        return rows
    if letter == "D":
        if n < 3:
            raise NotCartan("type D needs rank >= 3")
        rows = _chain(n)
        rows[n - 2][n - 1] = rows[n - 1][n - 2] = 0
        rows[n - 3][n - 1] = rows[n - 1][n - 3] = -1
        return rows
    if letter == "E":
        if n not in (6, 7, 8):
            raise NotCartan("type E exists for ranks 6, 7, 8")
        rows = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
        edges = [(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)]
        edges += [(6, 7)] if n >= 7 else []
        edges += [(7, 8)] if n == 8 else []
        for a, b in edges:
            rows[a - 1][b - 1] = rows[b - 1][a - 1] = -1
        return rows
    if letter == "F":
        if n != 4:
            raise NotCartan("type F exists for rank 4")
        rows = _chain(4)
        rows[1][2] = -2
        rows[2][1] = -1
        return rows
    if letter == "G":
        if n != 2:
            raise NotCartan("type G exists for rank 2")
        return [[2, -3], [-1, 2]]
    raise NotCartan(f"unknown type letter {letter!r}")


def cartan_matrix_by_name(name: str) -> CartanMatrix:
    """Expand a named type like "G2", "A4" or "B3" from the built-in tables."""
    m = _NAME_RE.match(name.strip())
    if not m:
        raise NotCartan(f"cannot parse type name {name!r} (expected e.g. 'A4', 'G2')")
    return validate_cartan(_builtin_rows(m.group(1), int(m.group(2))))
