"""Biwords, classical RSK, and the skyline analogue of RSK.

A biword is a lexicographically ordered sequence of biletters (i, j): the
top letters weakly increase, with ties broken by weakly increasing bottom
letters.  The skyline correspondence inserts the bottom row (right to
left) into one filling while recording the top row in a second one.
"""
from __future__ import annotations

from dataclasses import dataclass

from .fillings import SSAF, empty_ssaf, insert, psi, psi_inverse
from .permutations import orbit_bruhat_leq
from .shapes import decreasing_rearrangement, reverse
from .tableaux import SSYT, _row_insert


@dataclass(frozen=True)
class Biword:
    """Biletters over positive integers, in lexicographic order."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        for i, j in self.pairs:
            if i < 1 or j < 1:
                raise ValueError(f"biletter ({i}, {j}) must be positive")
        if list(self.pairs) != sorted(self.pairs):
            raise ValueError(f"biword not in lexicographic order: {self.pairs}")

    def __len__(self) -> int:
        return len(self.pairs)

    def top(self) -> tuple[int, ...]:
        return tuple(i for i, _ in self.pairs)

    def bottom(self) -> tuple[int, ...]:
        return tuple(j for _, j in self.pairs)


def from_multiset(cells, n: int) -> Biword:
    """Sort a multiset of pairs over [n] x [n] into a biword."""
    pairs = tuple(sorted(tuple(c) for c in cells))
    for i, j in pairs:
        if not (1 <= i <= n and 1 <= j <= n):
            raise ValueError(f"cell ({i}, {j}) outside [1, {n}]^2")
    return Biword(pairs)


def parse_biword(text: str) -> Biword:
    """Parse the two-row text form "i_1 ... i_l / j_1 ... j_l"."""
    top_text, _, bottom_text = text.partition("/")
    if not _:
        raise ValueError("biword text needs a '/' separating the two rows")
    top = [int(t) for t in top_text.split()]
    bottom = [int(t) for t in bottom_text.split()]
    if len(top) != len(bottom):
        raise ValueError("biword rows have different lengths")
    return Biword(tuple(zip(top, bottom)))


def format_biword(w: Biword) -> str:
    return " ".join(map(str, w.top())) + " / " + " ".join(map(str, w.bottom()))


def biword_to_json(w: Biword) -> list[list[int]]:
    return [[i, j] for i, j in w.pairs]


def biword_from_json(data) -> Biword:
    return Biword(tuple((int(i), int(j)) for i, j in data))


def swap_rows(w: Biword) -> Biword:
    """Exchange the two rows and re-sort lexicographically."""
    return Biword(tuple(sorted((j, i) for i, j in w.pairs)))


def rsk(w: Biword, n: int | None = None) -> tuple[SSYT, SSYT]:
    """Row-insert the bottom row, recording the top row cell by cell."""
    if n is None:
        n = max((max(i, j) for i, j in w.pairs), default=0)
    p_rows: list[list[int]] = []
    q_rows: list[list[int]] = []
    for i, j in w.pairs:
        r, c = _row_insert(p_rows, j)
        if r == len(q_rows):
            q_rows.append([])
        assert c == len(q_rows[r])
        q_rows[r].append(i)
    make = lambda rows: SSYT(tuple(tuple(row) for row in rows), n)
    return make(p_rows), make(q_rows)


def inverse_rsk(p: SSYT, q: SSYT) -> Biword:
    """Classical inverse RSK: peel the largest recorder entry, rightmost first."""
    if p.shape != q.shape:
        raise ValueError("tableaux must share a shape")
    p_rows = [list(row) for row in p.rows]
    q_rows = [list(row) for row in q.rows]
    pairs = []
    for _ in range(p.size()):
        best = None  # (row, col, value); equal maxima resolved to the right
        for r, row in enumerate(q_rows):
            if not row:
                continue
            c = len(row) - 1
            if best is None or row[c] > best[2] or (row[c] == best[2] and c > best[1]):
                best = (r, c, row[c])
        r, _, i = best
        q_rows[r].pop()
        x = p_rows[r].pop()
        for lower in range(r - 1, -1, -1):
            row = p_rows[lower]
            pos = max(idx for idx, e in enumerate(row) if e < x)
            row[pos], x = x, row[pos]
        pairs.append((i, x))
    return Biword(tuple(reversed(pairs)))


def _place_in_recording(cols: list[list[int]], letter: int, h: int):
    """Step 3 of the correspondence: top up the leftmost column of height h-1."""
    if h == 1:
        assert not cols[letter - 1], "height-1 placement must start a fresh column"
        cols[letter - 1].append(letter)
        return
    for col in cols:
        if len(col) == h - 1 and col[-1] >= letter:
            col.append(letter)
            return
    raise AssertionError("no admissible column for the recording placement")


def phi_steps(w: Biword, n: int) -> list[tuple[SSAF, SSAF]]:
    """All intermediate (insertion, recording) pairs, one per biletter."""
    for i, j in w.pairs:
        if not (1 <= i <= n and 1 <= j <= n):
            raise ValueError(f"biletter ({i}, {j}) exceeds the alphabet [1, {n}]")
    f = empty_ssaf(n)
    g_cols: list[list[int]] = [[] for _ in range(n)]
    stages = []
    for i, j in reversed(w.pairs):
        f, h, _ = insert(j, f)
        _place_in_recording(g_cols, i, h)
        g = SSAF(tuple(tuple(c) for c in g_cols))
        # the two shapes stay rearrangements of each other at every stage
        assert decreasing_rearrangement(f.shape) == decreasing_rearrangement(g.shape)
        stages.append((f, g))
    return stages


def phi(w: Biword, n: int) -> tuple[SSAF, SSAF]:
    """The skyline analogue of RSK: biword -> (insertion, recording) SSAFs."""
    stages = phi_steps(w, n)
    return stages[-1] if stages else (empty_ssaf(n), empty_ssaf(n))


def phi_inverse(f: SSAF, g: SSAF) -> Biword:
    """Invert the correspondence through the commuting triangle with RSK."""
    if f.n != g.n:
        raise ValueError("basement size mismatch")
    if decreasing_rearrangement(f.shape) != decreasing_rearrangement(g.shape):
        raise ValueError("shapes are not rearrangements of each other")
    return inverse_rsk(psi_inverse(f), psi_inverse(g))


def rsk_commutes_check(w: Biword, n: int) -> bool:
    """Does mapping the RSK pair through psi reproduce the skyline pair?"""
    p, q = rsk(w, n)
    f, g = phi(w, n)
    return psi(p) == f and psi(q) == g


def main_theorem_predicate(w: Biword, n: int) -> tuple[bool, bool]:
    """The two sides of the staircase restriction criterion.

    lhs: every biletter (i, j) satisfies i + j <= n + 1.
    rhs: the recording shape is below the reversed insertion shape in the
    orbit Bruhat order.  The two agree for every lexicographic biword.
    """
    lhs = all(i + j <= n + 1 for i, j in w.pairs)
    f, g = phi(w, n)
    rhs = orbit_bruhat_leq(g.shape, reverse(f.shape))
    return lhs, rhs


def alphabet_support_check(w: Biword, n: int, k: int, m: int) -> bool:
    """Zero-tail conditions when the rows use alphabets [k] and [m]."""
    if any(i > k for i in w.top()) or any(j > m for j in w.bottom()):
        raise ValueError(f"biword rows exceed the alphabets [{k}] and [{m}]")
    f, g = phi(w, n)
    return all(e == 0 for e in g.shape[k:]) and all(e == 0 for e in f.shape[m:])
