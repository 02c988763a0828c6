"""Sparse homogeneous integer polynomials and the triangular operator.

The operator T_A attached to a strictly upper-triangular integer matrix
A sends a degree-k homogeneous polynomial in x_1..x_k to an integer.  It
is defined by three elimination laws, applied additively over the
expansion f = sum_r h_r * x_k^r with h_r free of x_k:

  1. a degree-k polynomial not involving x_k evaluates to 0;
  2. for k = 1, x_1 evaluates to 1;
  3. h * x_k^r with r >= 1 reduces to the rank-(k-1) evaluation of
     h * (a_{1,k} x_1 + ... + a_{k-1,k} x_{k-1})^(r-1).

Two independent evaluation routes are provided: the recursion above
(triangular_eval) and a closed-form sum over balanced flow matrices
(triangular_eval_closed).  They must agree exactly; tests fuzz that.

All coefficients are native ints, which are arbitrary precision, so the
exactness contract holds with no overflow concerns.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from .errors import DegreeMismatch, VariableCountMismatch


class HomogPoly:
    """Homogeneous integer polynomial, keyed by exponent vectors.

    Immutable by convention: never mutate .terms after construction.
    Zero coefficients are dropped; every stored exponent vector must sum
    to the declared degree.
    """

    __slots__ = ("k", "degree", "terms")

    def __init__(self, k: int, degree: int, terms: dict):
        if k < 0 or degree < 0:
            raise ValueError("k and degree must be non-negative")
        clean = {}
        for exps, coeff in terms.items():
            if coeff == 0:
                continue
            exps = tuple(exps)
            if len(exps) != k or any(r < 0 for r in exps):
                raise ValueError(f"bad exponent vector {exps} for k={k}")
            if sum(exps) != degree:
                raise DegreeMismatch(
                    f"exponent vector {exps} has degree {sum(exps)}, expected {degree}"
                )
            clean[exps] = coeff
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("HomogPoly is immutable")

    @classmethod
    def monomial(cls, k: int, exponents, coeff: int = 1) -> "HomogPoly":
        exps = tuple(exponents)
        return cls(k, sum(exps), {exps: coeff})

    @classmethod
    def one(cls, k: int) -> "HomogPoly":
        return cls(k, 0, {(0,) * k: 1})

    @classmethod
    def zero(cls, k: int, degree: int) -> "HomogPoly":
        return cls(k, degree, {})

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def items(self):
        return sorted(self.terms.items())

    def coefficient(self, exponents) -> int:
        return self.terms.get(tuple(exponents), 0)

    def as_records(self) -> list[dict]:
        """JSON-friendly form: a list of {exponents, coefficient}."""
        return [
            {"exponents": list(exps), "coefficient": coeff}
            for exps, coeff in self.items()
        ]

    @classmethod
    def from_records(cls, k: int, degree: int, records) -> "HomogPoly":
        return cls(
            k, degree, {tuple(r["exponents"]): r["coefficient"] for r in records}
        )

    def __eq__(self, other):
        return (
            isinstance(other, HomogPoly)
            and self.k == other.k
            and self.degree == other.degree
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.k, self.degree, frozenset(self.terms.items())))

    def __add__(self, other: "HomogPoly") -> "HomogPoly":
        if self.k != other.k:
            raise VariableCountMismatch(f"{self.k} vs {other.k} variables")
        if self.degree != other.degree:
            raise DegreeMismatch(f"degree {self.degree} vs {other.degree}")
        terms = dict(self.terms)
        for exps, coeff in other.terms.items():
            terms[exps] = terms.get(exps, 0) + coeff
        return HomogPoly(self.k, self.degree, terms)

    def __neg__(self):
        return HomogPoly(self.k, self.degree, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return HomogPoly(
                self.k, self.degree, {e: c * other for e, c in self.terms.items()}
            )
        return poly_mul(self, other)

    __rmul__ = __mul__

    def __repr__(self):
        if self.is_zero:
            return "0"
        parts = []
        for exps, coeff in self.items():
            factors = [
                f"x{i + 1}" if r == 1 else f"x{i + 1}^{r}"
                for i, r in enumerate(exps)
                if r
            ]
            body = "*".join(factors) if factors else "1"
            if coeff == 1 and factors:
                parts.append(body)
            elif coeff == -1 and factors:
                parts.append(f"-{body}")
            else:
                parts.append(f"{coeff}*{body}" if factors else str(coeff))
        out = " + ".join(parts)
        return out.replace("+ -", "- ")


def poly_mul(p: HomogPoly, q: HomogPoly) -> HomogPoly:
    """Convolution product; degrees add, variable counts must match."""
    if p.k != q.k:
        raise VariableCountMismatch(f"{p.k} vs {q.k} variables")
    terms: dict = {}
    for e1, c1 in p.terms.items():
        for e2, c2 in q.terms.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            terms[e] = terms.get(e, 0) + c1 * c2
    return HomogPoly(p.k, p.degree + q.degree, terms)


def _matrix_rows(a) -> tuple[tuple[int, ...], ...]:
    """Accept a RelativeCartanMatrix or any square row sequence; validate
    strict upper triangularity."""
    rows = tuple(tuple(r) for r in (a.entries if hasattr(a, "entries") else a))
    k = len(rows)
    for i, row in enumerate(rows):
        if len(row) != k:
            raise ValueError("matrix is not square")
        if any(row[j] != 0 for j in range(i + 1)):
            raise ValueError(f"row {i + 1} is not strictly upper triangular")
    return rows


def triangular_eval(a, p: HomogPoly) -> int:
    """Evaluate the triangular operator of matrix a on p (degree = k).

    One recursion level groups the input by the exponent of the last
    variable, multiplies each group by the appropriate power of the
    elimination form, and recurses once on the combined sum; additivity
    of the operator makes that combination exact.
    """
    rows = _matrix_rows(a)
    if p.k != len(rows):
        raise DegreeMismatch(f"polynomial in {p.k} variables, matrix of size {len(rows)}")
    if p.degree != p.k:
        raise DegreeMismatch(f"degree {p.degree} polynomial, expected degree {p.k}")
    return _eval(rows, p)


def _eval(rows, p: HomogPoly) -> int:
    k = p.k
    if k == 0:
        return p.terms.get((), 0)
    groups: dict[int, dict] = {}
    for exps, coeff in p.terms.items():
        r = exps[-1]
        if r == 0:
            continue  # law 1: no last variable, no contribution
        groups.setdefault(r, {})[exps[:-1]] = coeff
    if not groups:
        return 0
    elim = HomogPoly(
        k - 1,
        1,
        {
            tuple(1 if j == i else 0 for j in range(k - 1)): rows[i][k - 1]
            for i in range(k - 1)
            if rows[i][k - 1]
        },
    )
    combined = HomogPoly.zero(k - 1, k - 1)
    power = HomogPoly.one(k - 1)  # elim^(r-1), built incrementally
    exponent = 0
    for r in sorted(groups):
        while exponent < r - 1:
            power = power * elim
            exponent += 1
        combined = combined + HomogPoly(k - 1, k - r, groups[r]) * power
    sub = tuple(row[: k - 1] for row in rows[: k - 1])
    return _eval(sub, combined)


def vanishing_filter(r) -> bool:
    """True when a proper prefix of the exponent vector oversubscribes
    its variables, which forces the operator to vanish on the monomial."""
    exps = tuple(r)
    total = 0
    for i in range(len(exps) - 1):
        total += exps[i]
        if total > i + 1:
            return True
    return False


@dataclass(frozen=True)
class FlowMatrix:
    """Strictly upper-triangular non-negative matrix balancing an
    exponent vector: column sum i = r_i - 1 + row sum i for every i."""

    k: int
    entries: tuple[tuple[int, ...], ...]

    def column_sum(self, j: int) -> int:
        return sum(self.entries[i][j] for i in range(self.k))

    def row_sum(self, i: int) -> int:
        return sum(self.entries[i])

    def balances(self, r) -> bool:
        exps = tuple(r)
        return all(
            self.column_sum(i) == exps[i] - 1 + self.row_sum(i) for i in range(self.k)
        )


def flow_matrices(r) -> list[FlowMatrix]:
    """All flow matrices balancing r, columns filled left to right and
    entries enumerated lexicographically."""
    exps = tuple(r)
    k = len(exps)
    out: list[FlowMatrix] = []
    cols: list[tuple[int, ...]] = []
    rem: list[int] = []  # unplaced row budget of completed columns

    def fill_column(j, i, col, colsum):
        if i == j:
            budget = colsum - exps[j] + 1
            if budget < 0:
                return
            rem.append(budget)
            cols.append(tuple(col))
            descend(j + 1)
            rem.pop()
            cols.pop()
            return
        for v in range(rem[i] + 1):
            rem[i] -= v
            col.append(v)
            fill_column(j, i + 1, col, colsum + v)
            col.pop()
            rem[i] += v

    def descend(j):
        if j == k:
            if all(x == 0 for x in rem):
                entries = tuple(
                    tuple(cols[b][a] if a < b else 0 for b in range(k))
                    for a in range(k)
                )
                out.append(FlowMatrix(k, entries))
            return
        fill_column(j, 0, [], 0)

    descend(0)
    return out


def triangular_eval_closed(a, r) -> int:
    """Closed-form evaluation on the monomial with exponent vector r:
    sum over balanced flow matrices of the product of column-wise
    multinomials times matrix entries raised to the flow values."""
    rows = _matrix_rows(a)
    exps = tuple(r)
    k = len(rows)
    if len(exps) != k or any(x < 0 for x in exps):
        raise DegreeMismatch(f"exponent vector {exps} does not fit a {k}x{k} matrix")
    if sum(exps) != k:
        raise DegreeMismatch(f"exponent vector {exps} has degree {sum(exps)}, expected {k}")
    total = 0
    for fm in flow_matrices(exps):
        term = 1
        for j in range(k):
            colsum = 0
            denom = 1
            for i in range(j):
                cij = fm.entries[i][j]
                colsum += cij
                denom *= factorial(cij)
                term *= rows[i][j] ** cij
            term = term * factorial(colsum) // denom
        total += term
    return total
