"""The full crank of a marked symbol and its counting identities.

The full crank compresses a k-marked symbol's length statistics into one
signed integer whose distribution factors through the ordinary crank table:
count_full_crank(k, m, n) equals a fixed binomial times M(m, n).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, List, Tuple

from .marked import MarkedDysonSymbol, enumerate_marked, statistics
from .partitions import crank_counts, crank_moment, gen_binomial


@dataclass(frozen=True)
class Verdict:
    """Outcome of one identity check: both sides plus a pass flag."""

    identity: str
    k: int
    n: int
    lhs: int
    rhs: int

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs

    def to_json(self) -> str:
        return json.dumps(
            {
                "identity": self.identity,
                "k": self.k,
                "n": self.n,
                "lhs": self.lhs,
                "rhs": self.rhs,
                "pass": self.passed,
            }
        )


def full_crank(eta: MarkedDysonSymbol) -> int:
    """Signed statistic l - s + 2D + k - 1, negated unless the top crank is positive."""
    stats = statistics(eta)
    magnitude = stats.l - stats.s + 2 * stats.D + eta.k - 1
    if stats.cranks[-1] > 0:
        return magnitude
    return -magnitude


@lru_cache(maxsize=None)
def full_crank_table(k: int, n: int) -> Dict[int, int]:
    """Distribution of the full crank over all k-marked symbols of weight n."""
    counts: Dict[int, int] = {}
    for eta in enumerate_marked(k, n):
        value = full_crank(eta)
        counts[value] = counts.get(value, 0) + 1
    return counts


def count_full_crank(k: int, m: int, n: int) -> int:
    """Number of k-marked symbols of weight n with full crank m, by enumeration."""
    if n < 2:
        raise ValueError("n must be at least 2")
    return full_crank_table(k, n).get(m, 0)


def count_full_crank_residue(k: int, i: int, t: int, n: int) -> int:
    """Number of k-marked symbols of weight n with full crank congruent to i mod t."""
    if t < 1 or not 0 <= i < t:
        raise ValueError("need t >= 1 and 0 <= i < t")
    return sum(c for m, c in full_crank_table(k, n).items() if m % t == i)


def theorem43_rhs(k: int, m: int, n: int) -> int:
    """Closed form for the full-crank count: C(m+k-2, 2k-2) * M(m, n)."""
    if k < 1 or n < 2:
        raise ValueError("need k >= 1 and n >= 2")
    return gen_binomial(m + k - 2, 2 * k - 2) * crank_counts(n)[m]


# ---------------------------------------------------------------------------
# Solution-counting coefficients
# ---------------------------------------------------------------------------


def _convolve(a: List[int], b: List[int], order: int) -> List[int]:
    out = [0] * (order + 1)
    for i, x in enumerate(a):
        if x == 0 or i > order:
            continue
        for j, y in enumerate(b):
            if i + j > order:
                break
            out[i + j] += x * y
    return out


def _signed_variable(order: int) -> List[int]:
    # Ways to write v as |m| for one signed integer m: 1 at 0, else 2.
    return [1] + [2] * order


def _positive_variable(order: int) -> List[int]:
    # Ways to write v as m with m >= 1.
    return [0] + [1] * order


def _even_variable(order: int) -> List[int]:
    # Ways to write v as 2t with t >= 0.
    return [1 if v % 2 == 0 else 0 for v in range(order + 1)]


def ck_brute(k: int, j: int) -> int:
    """Count solutions of |m_1|+...+|m_{k+1}| + 2t_1+...+2t_k = j, t_i >= 0.

    Computed by exact integer convolution over the variables, independent
    of any binomial formula.
    """
    if k < 1 or j < 0:
        raise ValueError("need k >= 1 and j >= 0")
    ways = [1] + [0] * j
    for _ in range(k + 1):
        ways = _convolve(ways, _signed_variable(j), j)
    for _ in range(k):
        ways = _convolve(ways, _even_variable(j), j)
    return ways[j]


def ck_closed_form(k: int, j: int) -> int:
    """Closed form C(2k+j, 2k) + C(2k+j-1, 2k) for the same solution count."""
    if k < 1 or j < 0:
        raise ValueError("need k >= 1 and j >= 0")
    return gen_binomial(2 * k + j, 2 * k) + gen_binomial(2 * k + j - 1, 2 * k)


def barck_brute(k: int, m: int) -> int:
    """Count solutions of |m_1|+...+|m_k| + 2t_1+...+2t_{k-1} = m-k+1
    with m_k positive and t_i >= 0, by exact convolution."""
    if k < 1:
        raise ValueError("need k >= 1")
    target = m - k + 1
    if target < 0:
        return 0
    ways = [1] + [0] * target
    for _ in range(k - 1):
        ways = _convolve(ways, _signed_variable(target), target)
    ways = _convolve(ways, _positive_variable(target), target)
    for _ in range(k - 1):
        ways = _convolve(ways, _even_variable(target), target)
    return ways[target]


def barck_closed_form(k: int, m: int) -> int:
    """Closed form C(m+k-2, 2k-2) for the positive-top solution count."""
    if k < 1:
        raise ValueError("need k >= 1")
    if m - k + 1 < 0:
        return 0
    return gen_binomial(m + k - 2, 2 * k - 2)


def series_coefficients(k: int, order: int) -> List[int]:
    """Coefficients of (1+q) / (1-q)^(2k+1) up to the given order.

    Expanded by exact integer polynomial arithmetic: build (1-q)^(2k+1),
    invert the series term by term, then multiply by (1+q).  Independent
    of the binomial closed form.
    """
    if k < 1 or order < 0:
        raise ValueError("need k >= 1 and order >= 0")
    den = [1]
    for _ in range(2 * k + 1):
        den = _convolve(den, [1, -1], order)
    inv = [0] * (order + 1)
    inv[0] = 1
    for idx in range(1, order + 1):
        acc = 0
        for i in range(1, min(idx, len(den) - 1) + 1):
            acc += den[i] * inv[idx - i]
        inv[idx] = -acc  # den[0] == 1
    return _convolve(inv, [1, 1], order)


def verify_theorem31(k: int, n: int) -> Verdict:
    """Compare the (k+1)-marked symbol count with the 2k-th crank moment."""
    if k < 1 or n < 2:
        raise ValueError("need k >= 1 and n >= 2")
    lhs = len(enumerate_marked(k + 1, n))
    rhs = crank_moment(2 * k, n)
    return Verdict(identity="thm3.1", k=k, n=n, lhs=lhs, rhs=rhs)
