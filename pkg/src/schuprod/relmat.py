"""Strictly upper-triangular Cartan matrix attached to a reduced word.

For a reduced word with letters (i_1,...,i_k) the matrix has
entries[a][b] = -C[i_b][i_a] for a < b and zeros elsewhere: the negated
pairing of the later letter's simple root against the earlier letter's
coroot.  That argument order matters in the multiply-laced types: entry
(a, b) is the Euler number of the sphere cycle of position a inside the
2-plane bundle of position b, and the sphere of a root beta pairs a
bundle of root gamma to the coroot pairing of (gamma, beta), not the
other way around.  (The two readings agree up to relabeling in rank 2,
where either one reproduces the worked 5x5 matrices; quotients of rank
3, where the quadric and the projective space must come out different,
pin this one.)  An entry depends only on the pair of letters it sits
over, so repeating letters repeat entry patterns.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import NotReduced
from .rootsys import CartanMatrix
from .weyl import element_of_word


@dataclass(frozen=True)
class RelativeCartanMatrix:
    k: int
    entries: tuple[tuple[int, ...], ...]

    def as_lists(self) -> list[list[int]]:
        return [list(row) for row in self.entries]


def cartan_matrix_of_word(word, c: CartanMatrix) -> RelativeCartanMatrix:
    """Build the word's relative Cartan matrix; the word must be reduced.

    Reducedness is enforced (the downstream evaluation is only meaningful
    for reduced decompositions), by comparing the word length with the
    exact length of the element it spells.
    """
    letters = tuple(word)
    if element_of_word(letters, c).length != len(letters):
        raise NotReduced(f"word {letters} is not reduced")
    k = len(letters)
    rows = tuple(
        tuple(
            -c.pairing(letters[b], letters[a]) if a < b else 0
            for b in range(k)
        )
        for a in range(k)
    )
    return RelativeCartanMatrix(k, rows)
