"""Independent verification for the type-A Grassmannian case.

Littlewood-Richardson coefficients are counted directly: fillings of the
skew shape nu/lambda with content mu, rows weakly increasing, columns
strictly increasing, whose reverse reading word is a ballot sequence.
Nothing here touches the subword pipeline; that independence is the
whole point of the module.

The dictionary between coset-minimal elements of the symmetric group
and partitions in a box uses the one-line permutation recovered from
the canonical form, with lambda_j = pi(k+1-j) - (k+1-j).
"""

from __future__ import annotations

from .errors import NotGrassmannianPermutation, SizeMismatch
from .rootsys import CartanMatrix
from .weyl import WeylElement

Partition = tuple[int, ...]


def _as_partition(p) -> Partition:
    part = tuple(int(x) for x in p)
    if any(x <= 0 for x in part):
        raise ValueError(f"partition parts must be positive: {part}")
    if any(part[i] < part[i + 1] for i in range(len(part) - 1)):
        raise ValueError(f"partition must be weakly decreasing: {part}")
    return part


def _contains(outer: Partition, inner: Partition) -> bool:
    if len(inner) > len(outer):
        return False
    return all(inner[i] <= outer[i] for i in range(len(inner)))


def lr_coefficient(lam, mu, nu) -> int:
    """Number of Littlewood-Richardson tableaux of shape nu/lam, content mu.

    Backtracks cell by cell in reverse reading order (rows top to bottom,
    each row right to left) so the ballot condition can be checked as
    each entry is placed.  Requires |nu| = |lam| + |mu|.
    """
    lam, mu, nu = _as_partition(lam), _as_partition(mu), _as_partition(nu)
    if sum(nu) != sum(lam) + sum(mu):
        raise SizeMismatch(f"|nu|={sum(nu)} but |lam|+|mu|={sum(lam) + sum(mu)}")
    if not _contains(nu, lam):
        return 0
    if not mu:
        return 1  # empty content: only the empty filling of the empty shape

    m = len(mu)
    rows = len(nu)
    lam_padded = lam + (0,) * (rows - len(lam))
    # (row, col) cells in reverse reading order.
    cells = [
        (ri, col)
        for ri in range(rows)
        for col in range(nu[ri] - 1, lam_padded[ri] - 1, -1)
    ]
    grid = [[0] * nu[ri] for ri in range(rows)]
    counts = [0] * (m + 1)
    total = 0

    def fill(pos: int):
        nonlocal total
        if pos == len(cells):
            total += 1
            return
        ri, col = cells[pos]
        right = grid[ri][col + 1] if col + 1 < nu[ri] else m
        above = grid[ri - 1][col] if ri > 0 and col >= lam_padded[ri - 1] else 0
        for v in range(above + 1, right + 1):
            if counts[v] >= mu[v - 1]:
                continue
            if v > 1 and counts[v] >= counts[v - 1]:
                continue  # ballot: v may never outnumber v-1 in any prefix
            counts[v] += 1
            grid[ri][col] = v
            fill(pos + 1)
            grid[ri][col] = 0
            counts[v] -= 1

    fill(0)
    return total


def parse_partition(text: str) -> Partition:
    """Parse a bracketed list like "[2,1]"; "[]" is the empty partition."""
    body = text.strip()
    if not (body.startswith("[") and body.endswith("]")):
        raise ValueError(f"cannot parse partition {text!r}")
    body = body[1:-1].strip()
    if not body:
        return ()
    try:
        return _as_partition(int(part) for part in body.split(","))
    except ValueError as exc:
        raise ValueError(f"cannot parse partition {text!r}: {exc}") from None


def format_partition(p) -> str:
    return "[" + ",".join(str(x) for x in p) + "]"


def partitions_in_box(rows: int, cols: int) -> list[Partition]:
    """All partitions fitting in rows x cols, in lexicographic order."""
    out: list[Partition] = []

    def rec(prefix, bound):
        out.append(tuple(prefix))
        if len(prefix) == rows:
            return
        for part in range(1, bound + 1):
            prefix.append(part)
            rec(prefix, part)
            prefix.pop()

    rec([], cols)
    return sorted(set(out))


def _require_standard_a(c: CartanMatrix) -> None:
    n = c.n
    for i in range(n):
        for j in range(n):
            expected = 2 if i == j else (-1 if abs(i - j) == 1 else 0)
            if c.entries[i][j] != expected:
                raise ValueError(
                    "permutation realization needs the built-in type A matrix"
                )


def permutation_of_element(e: WeylElement, c: CartanMatrix) -> tuple[int, ...]:
    """One-line permutation of an element of the rank-(n-1) symmetric group.

    The canonical form is the permuted staircase up to a global shift;
    normalizing the shift and inverting recovers pi with pi(i) < pi(i+1)
    exactly at the ascents of the element.
    """
    _require_standard_a(c)
    n = c.n + 1
    suffix = [0] * n
    for m in range(n - 2, -1, -1):
        suffix[m] = suffix[m + 1] + e.rho_image[m]
    total = sum(suffix)
    base = n * (n - 1) // 2
    shift, residue = divmod(total - base, n)
    if residue != 0:
        raise ValueError(f"canonical form {e.rho_image} is not an orbit point")
    inv = [n - (y - shift) for y in suffix]
    if sorted(inv) != list(range(1, n + 1)):
        raise ValueError(f"canonical form {e.rho_image} is not an orbit point")
    pi = [0] * n
    for pos, val in enumerate(inv):
        pi[val - 1] = pos + 1
    return tuple(pi)


def grassmannian_dictionary(e: WeylElement, k: int, c: CartanMatrix) -> Partition:
    """Partition in the k x (n-k) box matching a coset-minimal element
    whose only allowed descent is k.  Bijective, with |partition| = l(e)."""
    pi = permutation_of_element(e, c)
    n = len(pi)
    if not 1 <= k <= n - 1:
        raise ValueError(f"k={k} out of range 1..{n - 1}")
    bad = [i for i in range(1, n) if pi[i - 1] > pi[i] and i != k]
    if bad:
        raise NotGrassmannianPermutation(
            f"descents at {bad} outside the allowed position {k}"
        )
    lam = tuple(pi[k - j] - (k + 1 - j) for j in range(1, k + 1))
    lam = tuple(x for x in lam if x > 0)
    assert sum(lam) == e.length and (not lam or lam[0] <= n - k)
    return lam
