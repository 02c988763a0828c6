"""Weyl group elements in canonical form.

An element w is stored as the image of the regular weight vector
rho = (1,...,1) (fundamental-weight coordinates) under w, together with
its cached length.  The group acts simply transitively on the orbit of a
regular point, so this image is a complete canonical form.  A simple
reflection acts by s_i(v)_j = v_j - v_i * C_ij, so left multiplication
is a single integer row operation and the sign of coordinate i of
w(rho) tells whether s_i * w is shorter or longer than w.  That one
fact drives everything below: enumeration, length bookkeeping, descent
tests and reduced-word extraction, all float-free.

Convention for words: (i_1,...,i_k) spells the composite map
s_{i_1} . s_{i_2} ... s_{i_k} with the rightmost factor applied first.
Letters are 1-based simple-root indices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import GroupTooLarge
from .rootsys import CartanMatrix, Root, reflect_root

Word = tuple[int, ...]

DEFAULT_MAX_GROUP_ORDER = 10**6


@dataclass(frozen=True)
class WeylElement:
    """Canonical form of a group element: w(rho) plus cached length."""

    rho_image: tuple[int, ...]
    length: int

    def __post_init__(self):
        if any(x == 0 for x in self.rho_image):
            raise ValueError(f"{self.rho_image} is not in the regular orbit")

    @property
    def is_identity(self) -> bool:
        return self.length == 0


@dataclass(frozen=True)
class ParabolicSubset:
    """Set of 1-based simple-root indices whose reflections generate W'."""

    indices: frozenset[int]

    @classmethod
    def of(cls, indices: Iterable[int]) -> "ParabolicSubset":
        return cls(frozenset(int(i) for i in indices))

    def validate(self, c: CartanMatrix) -> None:
        bad = [i for i in self.indices if not 1 <= i <= c.n]
        if bad:
            raise IndexError(f"parabolic indices {bad} out of range 1..{c.n}")


def identity(c: CartanMatrix) -> WeylElement:
    return WeylElement((1,) * c.n, 0)


def apply_simple_reflection(i: int, v, c: CartanMatrix) -> tuple[int, ...]:
    """s_i acting on a weight vector; involutive."""
    if not 1 <= i <= c.n:
        raise IndexError(f"simple-root index {i} out of range 1..{c.n}")
    vi = v[i - 1]
    row = c.entries[i - 1]
    return tuple(v[j] - vi * row[j] for j in range(c.n))


def left_multiply(i: int, e: WeylElement, c: CartanMatrix) -> WeylElement:
    """s_i * e, with exact length bookkeeping (up iff coordinate i > 0)."""
    step = 1 if e.rho_image[i - 1] > 0 else -1
    return WeylElement(apply_simple_reflection(i, e.rho_image, c), e.length + step)


def _check_word(word, c: CartanMatrix) -> Word:
    w = tuple(int(i) for i in word)
    bad = [i for i in w if not 1 <= i <= c.n]
    if bad:
        raise IndexError(f"word letters {bad} out of range 1..{c.n}")
    return w


def element_of_word(word, c: CartanMatrix) -> WeylElement:
    """Evaluate a word (reduced or not) to its canonical element.

    The rightmost letter acts first, so the fold is a sequence of left
    multiplications; the length comes out exact even for non-reduced words.
    """
    e = identity(c)
    for letter in reversed(_check_word(word, c)):
        e = left_multiply(letter, e, c)
    return e


def length(e: WeylElement, c: CartanMatrix) -> int:
    """Recompute l(e) from the canonical form by descent peeling.

    Equals the number of positive roots sent negative by e; the cached
    e.length is the fast path, this is the independent recomputation.
    """
    return len(reduced_word(e, c))


def descents(e: WeylElement) -> list[int]:
    """Left descents: the i with l(s_i * e) < l(e), read off sign-wise."""
    return [i + 1 for i, x in enumerate(e.rho_image) if x < 0]


def reduced_word(e: WeylElement, c: CartanMatrix) -> Word:
    """Deterministic reduced word: peel the smallest descent until identity."""
    letters = []
    cur = e
    while not cur.is_identity:
        ds = descents(cur)
        if not ds:
            raise ValueError(f"{cur.rho_image} is not a valid canonical form")
        i = ds[0]
        letters.append(i)
        cur = left_multiply(i, cur, c)
    return tuple(letters)


def all_reduced_words(e: WeylElement, c: CartanMatrix) -> list[Word]:
    """Every reduced word of e, in lexicographic order."""
    memo: dict[tuple[int, ...], list[Word]] = {}

    def rec(cur: WeylElement) -> list[Word]:
        if cur.is_identity:
            return [()]
        cached = memo.get(cur.rho_image)
        if cached is None:
            cached = [
                (i,) + rest
                for i in descents(cur)
                for rest in rec(left_multiply(i, cur, c))
            ]
            memo[cur.rho_image] = cached
        return cached

    return rec(e)


def inverse(e: WeylElement, c: CartanMatrix) -> WeylElement:
    return element_of_word(tuple(reversed(reduced_word(e, c))), c)


def multiply(a: WeylElement, b: WeylElement, c: CartanMatrix) -> WeylElement:
    """Group product a * b via a's reduced word acting on b."""
    out = b
    for letter in reversed(reduced_word(a, c)):
        out = left_multiply(letter, out, c)
    return out


def root_image(e: WeylElement, root, c: CartanMatrix) -> Root:
    """e acting on a root (simple-root coordinates)."""
    coords = root.coords if isinstance(root, Root) else tuple(root)
    for letter in reversed(reduced_word(e, c)):
        coords = reflect_root(letter, coords, c)
    return Root(coords)


def inversion_count(e: WeylElement, c: CartanMatrix) -> int:
    """Number of positive roots sent negative by e."""
    from .rootsys import positive_roots

    return sum(1 for b in positive_roots(c) if not root_image(e, b, c).is_positive)


def enumerate_group(
    c: CartanMatrix, max_order: int = DEFAULT_MAX_GROUP_ORDER
) -> list[WeylElement]:
    """All elements of W, breadth-first by length.

    Deterministic order: by length, then lexicographically on the
    canonical form.  Raises GroupTooLarge past max_order elements.
    """
    e = identity(c)
    seen = {e.rho_image: e}
    frontier = [e]
    while frontier:
        fresh = []
        for cur in frontier:
            for i in range(1, c.n + 1):
                if cur.rho_image[i - 1] > 0:  # only length-increasing steps
                    nxt = left_multiply(i, cur, c)
                    if nxt.rho_image not in seen:
                        seen[nxt.rho_image] = nxt
                        fresh.append(nxt)
        if len(seen) > max_order:
            raise GroupTooLarge(f"group exceeds max_order={max_order}")
        frontier = fresh
    return sorted(seen.values(), key=lambda w: (w.length, w.rho_image))


def _word_sends_simples_positive(word, indices, c: CartanMatrix) -> bool:
    for i in indices:
        coords = tuple(1 if m == i - 1 else 0 for m in range(c.n))
        for letter in reversed(word):
            coords = reflect_root(letter, coords, c)
        if any(x < 0 for x in coords):
            return False
    return True


def is_minimal_rep(e: WeylElement, p: ParabolicSubset, c: CartanMatrix) -> bool:
    """Shortest-in-coset test: e sends every simple root of the parabolic
    to a positive root."""
    return _word_sends_simples_positive(reduced_word(e, c), p.indices, c)


def minimal_coset_reps(
    c: CartanMatrix, p, max_order: int = DEFAULT_MAX_GROUP_ORDER
) -> list[WeylElement]:
    """Minimal-length representatives of the cosets w W', in enumeration order.

    p is a ParabolicSubset or an iterable of 1-based indices; the empty
    set gives all of W, the full set just the identity.

    The representatives form an ideal in the left weak order (peeling a
    left descent of a minimal element stays minimal: the only way s_i
    could break minimality is w(a_j) = a_i for some parabolic j, which
    would force s_i * w = w * s_j, impossible when one side is shorter
    and the other longer), so they are enumerated directly instead of
    filtering the whole group.
    """
    if not isinstance(p, ParabolicSubset):
        p = ParabolicSubset.of(p)
    p.validate(c)
    if not p.indices:
        return enumerate_group(c, max_order)
    indices = sorted(p.indices)
    e = identity(c)
    kept: dict[tuple[int, ...], WeylElement] = {e.rho_image: e}
    rejected: set[tuple[int, ...]] = set()
    frontier = [(e, ())]
    while frontier:
        fresh = []
        for cur, word in frontier:
            for i in range(1, c.n + 1):
                if cur.rho_image[i - 1] <= 0:
                    continue
                nxt = left_multiply(i, cur, c)
                if nxt.rho_image in kept or nxt.rho_image in rejected:
                    continue
                nxt_word = (i,) + word
                if _word_sends_simples_positive(nxt_word, indices, c):
                    kept[nxt.rho_image] = nxt
                    fresh.append((nxt, nxt_word))
                else:
                    rejected.add(nxt.rho_image)
        if len(kept) > max_order:
            raise GroupTooLarge(f"representative set exceeds max_order={max_order}")
        frontier = fresh
    return sorted(kept.values(), key=lambda w: (w.length, w.rho_image))


def parse_word(text: str) -> Word:
    """Parse a comma-separated word like "2,1,2,1,2"; empty means identity."""
    text = text.strip()
    if not text or text == "e":
        return ()
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise ValueError(f"cannot parse word {text!r}: {exc}") from None


def format_word(word) -> str:
    return ",".join(str(i) for i in word)


def element_to_dict(e: WeylElement, c: CartanMatrix) -> dict:
    """JSON-friendly form: {word, length, rho_image}."""
    return {
        "word": list(reduced_word(e, c)),
        "length": e.length,
        "rho_image": list(e.rho_image),
    }
