"""Truncated-staircase Cauchy kernel machinery.

The kernel over a truncated staircase expands as a sum of products of
Demazure atoms in x and Demazure characters in y; the character index is
produced from each atom index by a windowed maximum scan, equivalently by
a fixed bubble-sorting word read off the skew part of the shape.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .demazure import atom, key_polynomial
from .permutations import ReducedWord, apply_word
from .polynomials import SparsePoly, pair_product
from .shapes import (
    Composition,
    cells,
    compositions_with_sum,
    reverse,
    truncated_staircase,
)


@dataclass(frozen=True)
class KernelInstance:
    """A truncated staircase with k rows and m columns inside size n."""

    n: int
    m: int
    k: int

    def __post_init__(self):
        truncated_staircase(self.n, self.m, self.k)

    @property
    def shape(self) -> Composition:
        return truncated_staircase(self.n, self.m, self.k)

    @property
    def is_rectangle(self) -> bool:
        return self.n + 1 == self.m + self.k

    @property
    def is_staircase(self) -> bool:
        return self.m == self.k == self.n

    def conjugate(self) -> "KernelInstance":
        return KernelInstance(self.n, self.k, self.m)


def sigma_se_word(n: int, m: int, k: int) -> ReducedWord:
    """Reduced word read off the south-east skew cells, rows top to bottom.

    Defined for k <= m; the factors may be empty.
    """
    inst = KernelInstance(n, m, k)
    if not k <= m:
        raise ValueError(f"south-east word needs k <= m, got k={k}, m={m}")
    word: list[int] = []
    for i in range(1, k - (n - m)):
        word.extend(range(i + n - k - 1, i - 1, -1))
    for i in range(0, n - m + 1):
        word.extend(range(m - 1, k - (n - m) + i - 1, -1))
    return ReducedWord(tuple(word), inst.n)


def sigma_nw_word(n: int, m: int, k: int) -> ReducedWord:
    """North-west word: the south-east word of the conjugate shape."""
    KernelInstance(n, m, k)
    if not m <= k:
        raise ValueError(f"north-west word needs m <= k, got m={m}, k={k}")
    return sigma_se_word(n, k, m)


def alpha_vector(mu, n: int, m: int, k: int) -> Composition:
    """Character index for the atom index ``mu`` (orientation k <= m).

    Scanning i = k down to 1, entry i is the maximum over the last
    min(i, n-m+1) surviving entries of the reversed ``mu``; the rightmost
    occurrence of that maximum is then removed.
    """
    KernelInstance(n, m, k)
    if not k <= m:
        raise ValueError(f"alpha vector needs k <= m, got k={k}, m={m}")
    mu = tuple(mu)
    if len(mu) != k:
        raise ValueError(f"mu must have length k={k}")
    remaining = list(reverse(mu))
    window = n - m + 1
    alpha = [0] * k
    for i in range(k, 0, -1):
        span = min(i, window)
        tail = remaining[-span:]
        best = max(tail)
        pos = len(remaining) - 1 - tail[::-1].index(best)
        alpha[i - 1] = best
        del remaining[pos]
    return tuple(alpha)


def alpha_via_sorting(mu, n: int, m: int, k: int) -> Composition:
    """Bubble-sort the padded reversed ``mu`` along the south-east word.

    Returns the full length-n composition, which the expansion theorem
    asserts to be zeros, then the alpha vector, then zeros.
    """
    word = sigma_se_word(n, m, k).word
    mu = tuple(mu)
    if len(mu) != k:
        raise ValueError(f"mu must have length k={k}")
    start = reverse(mu) + (0,) * (n - k)
    return apply_word(tuple(i for i in word if i < m), start)


@dataclass(frozen=True)
class ExpansionReport:
    """Outcome of one truncated kernel comparison."""

    n: int
    m: int
    k: int
    degree: int
    lhs: SparsePoly = field(repr=False)
    rhs: SparsePoly = field(repr=False)
    equal: bool
    first_diff: tuple | None

    def summary(self) -> str:
        head = f"kernel n={self.n} m={self.m} k={self.k} deg={self.degree}: "
        if self.equal:
            return head + f"equal ({len(self.lhs.terms)} terms)"
        xexp, yexp, lc, rc = self.first_diff
        return head + (
            f"MISMATCH at x^{xexp} y^{yexp}: lhs has {lc}, rhs has {rc}"
        )

    def to_json(self) -> dict:
        out = {
            "n": self.n,
            "m": self.m,
            "k": self.k,
            "degree": self.degree,
            "equal": self.equal,
            "lhs": self.lhs.to_json(),
            "rhs": self.rhs.to_json(),
        }
        if self.first_diff is not None:
            xexp, yexp, lc, rc = self.first_diff
            out["first_diff"] = {
                "x_exp": list(xexp),
                "y_exp": list(yexp),
                "lhs_coeff": lc,
                "rhs_coeff": rc,
            }
        return out


def kernel_lhs(inst: KernelInstance, d: int) -> SparsePoly:
    """Truncated product of the geometric series, one per shape cell.

    Variables: x indexed by rows (k of them), y by columns (m of them).
    """
    if d < 0:
        raise ValueError("degree must be non-negative")
    total = SparsePoly.one(inst.k, inst.m)
    for i, j in sorted(cells(inst.shape)):
        series_terms = {}
        for t in range(d + 1):
            xexp = [0] * inst.k
            yexp = [0] * inst.m
            xexp[i - 1] = t
            yexp[j - 1] = t
            series_terms[(tuple(xexp), tuple(yexp))] = 1
        series = SparsePoly(inst.k, series_terms, inst.m)
        total = (total * series).truncate(d)
    return total


def kernel_rhs(inst: KernelInstance, d: int) -> SparsePoly:
    """Atom-times-character expansion, truncated to total degree d.

    Each term is homogeneous of equal x- and y-degree, so summing over
    atom indices of size at most d is the exact truncation.  The m <= k
    orientation is handled by conjugating the shape and swapping the
    alphabets.
    """
    if d < 0:
        raise ValueError("degree must be non-negative")
    if inst.k > inst.m:
        return kernel_rhs(inst.conjugate(), d).swap_alphabets()
    total = SparsePoly.zero(inst.k, inst.m)
    pad = (0,) * (inst.m - inst.k)
    for size in range(d + 1):
        for mu in compositions_with_sum(size, inst.k):
            alpha = alpha_vector(mu, inst.n, inst.m, inst.k)
            total = total + pair_product(atom(mu), key_polynomial(pad + alpha))
    return total


def verify_expansion(inst: KernelInstance, d: int) -> ExpansionReport:
    """Compare both truncated sides and locate the first mismatch if any."""
    lhs = kernel_lhs(inst, d)
    rhs = kernel_rhs(inst, d)
    equal = lhs == rhs
    first_diff = None
    if not equal:
        diff_keys = set(lhs.terms) ^ set(rhs.terms)
        diff_keys |= {
            key
            for key in set(lhs.terms) & set(rhs.terms)
            if lhs.terms[key] != rhs.terms[key]
        }
        key = min(diff_keys, key=lambda kv: (sum(kv[0]), kv[0], kv[1]))
        first_diff = (
            key[0],
            key[1],
            lhs.terms.get(key, 0),
            rhs.terms.get(key, 0),
        )
    return ExpansionReport(inst.n, inst.m, inst.k, d, lhs, rhs, equal, first_diff)
