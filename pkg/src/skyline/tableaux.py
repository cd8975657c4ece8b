"""Semi-standard Young tableaux, key tableaux, and evacuation.

Tableaux are stored row-major, bottom row first (French convention), with
an explicit alphabet bound ``n``.
"""
from __future__ import annotations

from dataclasses import dataclass

from .shapes import Composition, is_partition, num_parts


@dataclass(frozen=True)
class SSYT:
    """A semi-standard Young tableau over the alphabet 1..n.

    Rows weakly increase left to right; columns strictly increase going up.
    """

    rows: tuple[tuple[int, ...], ...]
    n: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("alphabet bound must be non-negative")
        lengths = [len(r) for r in self.rows]
        if any(ln == 0 for ln in lengths) or not is_partition(tuple(lengths)):
            raise ValueError(f"row lengths {lengths} are not a partition shape")
        for r, row in enumerate(self.rows):
            for c, entry in enumerate(row):
                if not 1 <= entry <= self.n:
                    raise ValueError(f"entry {entry} outside alphabet [1, {self.n}]")
                if c > 0 and row[c - 1] > entry:
                    raise ValueError(f"row {r + 1} is not weakly increasing")
                if r > 0 and self.rows[r - 1][c] >= entry:
                    raise ValueError(f"column {c + 1} is not strictly increasing")

    @property
    def shape(self) -> Composition:
        return tuple(len(r) for r in self.rows)

    def size(self) -> int:
        return sum(len(r) for r in self.rows)

    def column_word(self) -> tuple[int, ...]:
        """Entries of each column read top to bottom, columns left to right."""
        width = len(self.rows[0]) if self.rows else 0
        word = []
        for c in range(width):
            word.extend(row[c] for row in reversed(self.rows) if len(row) > c)
        return tuple(word)

    def content(self) -> Composition:
        """Multiplicity vector of the letters 1..n."""
        counts = [0] * self.n
        for row in self.rows:
            for entry in row:
                counts[entry - 1] += 1
        return tuple(counts)

    def max_entry(self) -> int:
        return max((row[-1] for row in self.rows), default=0)

    def pretty(self) -> str:
        if not self.rows:
            return "(empty tableau)"
        return "\n".join(" ".join(map(str, row)) for row in reversed(self.rows))


def column_word(tab: SSYT) -> tuple[int, ...]:
    return tab.column_word()


def content(tab: SSYT) -> Composition:
    return tab.content()


def key_tableau(gamma) -> SSYT:
    """The unique key tableau with content ``gamma`` (shape is its sort).

    Column j holds exactly the letters i with gamma_i >= j.
    """
    gamma = tuple(gamma)
    width = max(gamma, default=0)
    cols = [sorted(i + 1 for i, g in enumerate(gamma) if g >= j + 1) for j in range(width)]
    height = len(cols[0]) if cols else 0
    rows = tuple(
        tuple(col[r] for col in cols if len(col) > r) for r in range(height)
    )
    return SSYT(rows, len(gamma))


def is_key(tab: SSYT) -> bool:
    """True when each column's entry set contains the next column's."""
    width = len(tab.rows[0]) if tab.rows else 0
    cols = [
        {row[c] for row in tab.rows if len(row) > c} for c in range(width)
    ]
    return all(cols[j + 1] <= cols[j] for j in range(width - 1))


def entrywise_leq(tab1: SSYT, tab2: SSYT) -> bool:
    """Cellwise comparison of two equal-shape tableaux."""
    if tab1.shape != tab2.shape:
        raise ValueError(f"shape mismatch: {tab1.shape} vs {tab2.shape}")
    return all(
        a <= b for r1, r2 in zip(tab1.rows, tab2.rows) for a, b in zip(r1, r2)
    )


def _row_insert(rows: list[list[int]], x: int) -> tuple[int, int]:
    """Schensted row insertion into mutable rows; returns the new cell."""
    r = 0
    while True:
        if r == len(rows):
            rows.append([x])
            return r, 0
        row = rows[r]
        # bump the leftmost entry strictly greater than x
        pos = None
        for c, entry in enumerate(row):
            if entry > x:
                pos = c
                break
        if pos is None:
            row.append(x)
            return r, len(row) - 1
        row[pos], x = x, row[pos]
        r += 1


def insert_word(word, n: int) -> SSYT:
    """Insertion tableau of a word under Schensted row insertion."""
    rows: list[list[int]] = []
    for x in word:
        _row_insert(rows, x)
    return SSYT(tuple(tuple(r) for r in rows), n)


def evacuation(tab: SSYT) -> SSYT:
    """Schuetzenberger evacuation: rectify the reversed complement word.

    An involution that preserves the shape and reverses the content; on key
    tableaux it reverses the defining composition.
    """
    n = tab.n
    word = [n + 1 - a for a in reversed(tab.column_word())]
    return insert_word(word, n)


def enumerate_ssyt(lam, n: int, content=None):
    """All SSYT of shape ``lam`` with entries <= n, sorted by column word.

    With ``content`` given, restricts to tableaux of that content.  Each call
    returns a fresh iterator over the same deterministic sequence.
    """
    lam = tuple(lam)
    if not is_partition(lam):
        raise ValueError(f"not a partition: {lam!r}")
    lam = lam[: num_parts(lam)]
    if len(lam) > n:
        raise ValueError(f"shape {lam} has more than n={n} rows")
    found: list[SSYT] = []
    budget = list(content) if content is not None else None
    if budget is not None and (len(budget) != n or sum(budget) != sum(lam)):
        raise ValueError("content does not match alphabet or shape size")

    rows: list[list[int]] = [[] for _ in lam]

    def fill(r: int, c: int):
        if r == len(lam):
            found.append(SSYT(tuple(tuple(row) for row in rows), n))
            return
        if c == lam[r]:
            fill(r + 1, 0)
            return
        lo = 1
        if c > 0:
            lo = max(lo, rows[r][c - 1])
        if r > 0:
            lo = max(lo, rows[r - 1][c] + 1)
        for v in range(lo, n + 1):
            if budget is not None:
                if budget[v - 1] == 0:
                    continue
                budget[v - 1] -= 1
            rows[r].append(v)
            fill(r, c + 1)
            rows[r].pop()
            if budget is not None:
                budget[v - 1] += 1

    fill(0, 0)
    found.sort(key=lambda t: t.column_word())
    return iter(found)


def yamanouchi(lam, n: int) -> SSYT:
    """The key tableau of a partition: row i filled with the letter i."""
    lam = tuple(lam)
    if not is_partition(lam):
        raise ValueError(f"not a partition: {lam!r}")
    lam = lam[: num_parts(lam)]
    if len(lam) > n:
        raise ValueError(f"shape {lam} has more than n={n} rows")
    return SSYT(tuple(tuple([r + 1] * ln) for r, ln in enumerate(lam)), n)


def ssyt_to_json(tab: SSYT) -> dict:
    return {"shape": list(tab.shape), "rows": [list(r) for r in tab.rows], "n": tab.n}


def ssyt_from_json(data, n=None) -> SSYT:
    rows = tuple(tuple(r) for r in data["rows"])
    bound = n if n is not None else data.get("n")
    if bound is None:
        bound = max((e for row in rows for e in row), default=0)
    tab = SSYT(rows, bound)
    if "shape" in data and tuple(data["shape"]) != tab.shape:
        raise ValueError("declared shape does not match rows")
    return tab
