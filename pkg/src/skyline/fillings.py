"""Semi-skyline augmented fillings and Mason's insertion.

An SSAF lives over a basement 1..n (row 0); column j holds a stack of
entries whose bottom cell repeats the basement value j, columns weakly
decrease going up, and every triple of cells in the two configurations
below is an inversion triple.  The shape is the vector of column heights.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

from .shapes import Composition, decreasing_rearrangement, num_parts
from .tableaux import SSYT, enumerate_ssyt, key_tableau


@dataclass(frozen=True)
class SSAF:
    """Columns bottom-to-top over the basement 1..n; may be unvalidated."""

    columns: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        for col in self.columns:
            for e in col:
                if not 1 <= e <= self.n:
                    raise ValueError(f"entry {e} outside alphabet [1, {self.n}]")

    @property
    def n(self) -> int:
        return len(self.columns)

    @cached_property
    def shape(self) -> Composition:
        return tuple(len(c) for c in self.columns)

    def size(self) -> int:
        return sum(len(c) for c in self.columns)

    def content(self) -> Composition:
        counts = [0] * self.n
        for col in self.columns:
            for e in col:
                counts[e - 1] += 1
        return tuple(counts)

    def reading_word(self) -> tuple[int, ...]:
        """Non-basement entries, rows top to bottom, left to right."""
        word = []
        for r in range(max(self.shape, default=0), 0, -1):
            word.extend(col[r - 1] for col in self.columns if len(col) >= r)
        return tuple(word)

    def pretty(self) -> str:
        lines = []
        for r in range(max(self.shape, default=0), 0, -1):
            lines.append(
                " ".join(
                    str(col[r - 1]) if len(col) >= r else "." for col in self.columns
                )
            )
        lines.append(" ".join(str(j + 1) for j in range(self.n)))
        return "\n".join(lines)


def empty_ssaf(n: int) -> SSAF:
    return SSAF(((),) * n)


def key_ssaf(gamma) -> SSAF:
    """The unique SSAF with shape and content ``gamma``: all of column j is j."""
    gamma = tuple(gamma)
    return SSAF(tuple((j + 1,) * g for j, g in enumerate(gamma)))


def _basics_ok(filling: SSAF) -> bool:
    for j, col in enumerate(filling.columns):
        if col and col[0] != j + 1:
            return False
        if any(col[r] < col[r + 1] for r in range(len(col) - 1)):
            return False
    return True


def _triples_ok(filling: SSAF) -> bool:
    # Inequality form of the two triple conditions (ties resolved by the
    # reading order, which reduces to plain <= between the raw values).
    cols = filling.columns
    h = filling.shape
    n = filling.n

    def val(r, j):
        return cols[j][r - 1] if r >= 1 else j + 1

    for j1 in range(n):
        for j2 in range(j1 + 1, n):
            if h[j1] >= h[j2]:
                # type 1: a over b in the left column, c at a's row right;
                # inversion unless F(a) <= F(c) <= F(b)
                for i in range(1, h[j2] + 1):
                    a, b, c = val(i, j1), val(i - 1, j1), val(i, j2)
                    if a <= c <= b:
                        return False
            if h[j2] > h[j1]:
                # type 2: a left, b over c in the taller right column;
                # inversion unless F(b) <= F(a) <= F(c)
                for i in range(0, h[j1] + 1):
                    a, b, c = val(i, j1), val(i + 1, j2), val(i, j2)
                    if b <= a <= c:
                        return False
    return True


def validate(filling: SSAF) -> bool:
    """True iff the filling is a genuine SSAF."""
    return _basics_ok(filling) and _triples_ok(filling)


def _standardized(filling: SSAF) -> dict[tuple[int, int], int]:
    """Standardization ranks for all cells, basement included.

    The i-th occurrence of a letter in reading order gets rank i plus the
    total count of smaller letters; basement cells participate as the last
    row.  Equivalent to sorting by (value, reading position).
    """
    cells = []
    pos = 0
    for r in range(max(filling.shape, default=0), -1, -1):
        for j in range(filling.n):
            if r == 0:
                cells.append((j + 1, pos, (r, j + 1)))
                pos += 1
            elif len(filling.columns[j]) >= r:
                cells.append((filling.columns[j][r - 1], pos, (r, j + 1)))
                pos += 1
    ranks = {}
    for rank, (_, _, cell) in enumerate(sorted(cells, key=lambda t: (t[0], t[1]))):
        ranks[cell] = rank
    return ranks


def _orientation(points) -> int:
    """Sign of the turn p1 -> p2 -> p3; positive is counterclockwise."""
    (x1, y1), (x2, y2), (x3, y3) = points
    return (x2 - x1) * (y3 - y1) - (y2 - y1) * (x3 - x1)


def validate_via_orientation(filling: SSAF) -> bool:
    """Triple check straight from the orientation definition.

    Agrees with :func:`validate`; kept as an independent route for tests.
    """
    if not _basics_ok(filling):
        return False
    ranks = _standardized(filling)
    cols = filling.columns
    h = filling.shape
    n = filling.n

    def point(r, j):
        return (j, r)

    for j1 in range(n):
        for j2 in range(j1 + 1, n):
            if h[j1] >= h[j2]:
                for i in range(1, h[j2] + 1):
                    trip = [(i, j1 + 1), (i - 1, j1 + 1), (i, j2 + 1)]
                    ordered = sorted(trip, key=lambda cell: ranks[cell])
                    if _orientation([point(*cell) for cell in ordered]) <= 0:
                        return False
            if h[j2] > h[j1]:
                for i in range(0, h[j1] + 1):
                    trip = [(i, j1 + 1), (i + 1, j2 + 1), (i, j2 + 1)]
                    ordered = sorted(trip, key=lambda cell: ranks[cell])
                    if _orientation([point(*cell) for cell in ordered]) >= 0:
                        return False
    return True


def insert_with_chain(k: int, filling: SSAF):
    """Mason's insertion of the letter k, also reporting the bump chain.

    Scans the cells in reading order, basement included.  A cell admits the
    carried value x when its entry is >= x and the cell above holds
    something smaller (or is empty); bumping swaps and the scan continues,
    while an empty cell above ends the procedure by creating a new cell.

    Returns (new SSAF, terminal height, terminal column, carried values).
    """
    n = filling.n
    if not 1 <= k <= n:
        raise ValueError(f"letter {k} outside alphabet [1, {n}]")
    cols = [list(c) for c in filling.columns]
    order = [
        (r, j)
        for r in range(max(filling.shape, default=0), 0, -1)
        for j in range(n)
        if len(cols[j]) >= r
    ]
    order.extend((0, j) for j in range(n))

    def val(r, j):
        return cols[j][r - 1] if r >= 1 else j + 1

    def above(r, j):
        return cols[j][r] if len(cols[j]) > r else 0

    x = k
    chain = [k]
    for r, j in order:
        if val(r, j) < x or above(r, j) >= x:
            continue
        if len(cols[j]) > r:
            cols[j][r], x = x, cols[j][r]
            chain.append(x)
        else:
            # the terminal column is the rightmost one reaching this height
            assert all(len(cols[j2]) != r + 1 for j2 in range(j + 1, n))
            cols[j].append(x)
            return SSAF(tuple(tuple(c) for c in cols)), r + 1, j + 1, tuple(chain)
    raise AssertionError("insertion scan exhausted; filling was not a valid SSAF")


def insert(k: int, filling: SSAF) -> tuple[SSAF, int, int]:
    """Insert k; returns the new SSAF with the terminal height and column."""
    new, h, col, _ = insert_with_chain(k, filling)
    return new, h, col


def psi(tab: SSYT) -> SSAF:
    """Mason's bijection: insert the column word from right to left."""
    filling = empty_ssaf(tab.n)
    for letter in reversed(tab.column_word()):
        filling, _, _ = insert(letter, filling)
    return filling


def psi_inverse(filling: SSAF) -> SSYT:
    """The unique tableau mapping to ``filling`` under :func:`psi`.

    The shape and content of the preimage are forced (sorted shape, same
    content), so candidates are enumerated under those constraints and each
    is checked by replaying the insertion.
    """
    lam = decreasing_rearrangement(filling.shape)
    lam = lam[: num_parts(lam)]
    for tab in enumerate_ssyt(lam, filling.n, content=filling.content()):
        if psi(tab) == filling:
            return tab
    raise ValueError("filling is not in the image of psi (not a valid SSAF?)")


def right_key(tab: SSYT) -> SSYT:
    """The key tableau with content the shape of the skyline image."""
    return key_tableau(psi(tab).shape)


def enumerate_ssaf(gamma) -> list[SSAF]:
    """All valid SSAFs of shape ``gamma``, in lexicographic column order."""
    gamma = tuple(gamma)
    n = len(gamma)

    def column_options(j: int, height: int):
        if height == 0:
            return [()]
        opts = []

        def grow(prefix):
            if len(prefix) == height:
                opts.append(tuple(prefix))
                return
            for v in range(1, prefix[-1] + 1):
                grow(prefix + [v])

        grow([j + 1])
        return opts

    per_col = [column_options(j, g) for j, g in enumerate(gamma)]
    out = []
    for combo in itertools.product(*per_col):
        cand = SSAF(tuple(combo))
        if validate(cand):
            out.append(cand)
    return out


def ssaf_to_json(filling: SSAF) -> dict:
    return {"n": filling.n, "columns": [list(c) for c in filling.columns]}


def ssaf_from_json(data) -> SSAF:
    filling = SSAF(tuple(tuple(c) for c in data["columns"]))
    if data.get("n") is not None and data["n"] != filling.n:
        raise ValueError("declared basement size does not match columns")
    if not validate(filling):
        raise ValueError("not a valid SSAF")
    return filling
