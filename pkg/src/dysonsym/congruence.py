"""Crank residue tables, the modular full-crank identity, and a progression scanner.

The scanner is purely empirical: it reports finite-range witnesses for
congruences of the crank residue tables M(i, p^r; .) or of the even crank
moments along arithmetic progressions An + B.  It proves nothing and does
not attempt any subsumption ("non-nested") analysis of the reported pairs.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from .fullcrank import Verdict, count_full_crank_residue, theorem43_rhs
from .partitions import CountTable, crank_counts, crank_moment, gen_binomial

CACHE_ENV_VAR = "DYSONSYM_CACHE_DIR"
CACHE_FILE = "crank_tables.json"


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


# ---------------------------------------------------------------------------
# Crank table cache (in memory, optionally persisted as JSON)
# ---------------------------------------------------------------------------


class CrankTableCache:
    """Crank count tables keyed by n, optionally persisted to a JSON file.

    The cache directory defaults to the DYSONSYM_CACHE_DIR environment
    variable; without it, tables live only in process memory.
    """

    def __init__(self, directory: Optional[str] = None):
        if directory is None:
            directory = os.environ.get(CACHE_ENV_VAR)
        self.directory = directory
        self._tables: Dict[int, CountTable] = {}
        self._loaded = False

    def _path(self) -> Optional[str]:
        if not self.directory:
            return None
        return os.path.join(self.directory, CACHE_FILE)

    def _load(self) -> None:
        if self._loaded:
            return
        self._loaded = True
        path = self._path()
        if not path or not os.path.exists(path):
            return
        with open(path) as handle:
            data = json.load(handle)
        for key, rows in data.get("tables", {}).items():
            n = int(key)
            self._tables[n] = CountTable(n, {int(m): int(c) for m, c in rows})

    def table(self, n: int) -> CountTable:
        self._load()
        if n not in self._tables:
            self._tables[n] = crank_counts(n)
        return self._tables[n]

    def flush(self) -> None:
        """Write all cached tables back to disk, if a directory is set."""
        path = self._path()
        if not path:
            return
        os.makedirs(self.directory, exist_ok=True)
        payload = {
            "tables": {
                str(n): [[m, t.counts[m]] for m in sorted(t.counts)]
                for n, t in sorted(self._tables.items())
            }
        }
        with open(path, "w") as handle:
            json.dump(payload, handle)


_default_cache = CrankTableCache()


def crank_residue_table(t: int, n: int, cache: Optional[CrankTableCache] = None) -> Tuple[int, ...]:
    """Entry i is the number of partitions of n with crank congruent to i mod t."""
    if t < 1:
        raise ValueError("modulus must be positive")
    if n < 2:
        raise ValueError("residue tables require n >= 2")
    table = (cache or _default_cache).table(n)
    out = [0] * t
    for m, c in table.counts.items():
        out[m % t] += c
    return tuple(out)


# ---------------------------------------------------------------------------
# Modular identity between the full-crank residue counts and M(i, p^r; n)
# ---------------------------------------------------------------------------


def _closed_form_residue_count(k: int, i: int, modulus: int, n: int) -> int:
    # Sum of the closed-form full-crank counts over the residue class.
    total = 0
    for m in range(-n, n + 1):
        if m % modulus == i:
            total += theorem43_rhs(k, m, n)
    return total


def modular_identity_cases(
    k: int, p: int, r: int, n: int, method: str = "enumerate"
) -> List[Verdict]:
    """Per-residue checks of NC_k(i, p^r; n) = C(i+k-2, 2k-2) M(i, p^r; n) mod p^r.

    ``method="enumerate"`` counts full cranks by enumerating symbols;
    ``method="closed"`` substitutes the verified closed form, which is the
    only feasible route beyond small n.
    """
    if not is_prime(p) or p < 5:
        raise ValueError("p must be a prime >= 5")
    if r < 1 or n < 2:
        raise ValueError("need r >= 1 and n >= 2")
    if 2 * k > p + 1:
        raise ValueError(f"k={k} violates the bound 2k <= p+1 for p={p}")
    modulus = p**r
    residues = crank_residue_table(modulus, n)
    cases = []
    for i in range(modulus):
        if method == "enumerate":
            lhs = count_full_crank_residue(k, i, modulus, n)
        elif method == "closed":
            lhs = _closed_form_residue_count(k, i, modulus, n)
        else:
            raise ValueError(f"unknown method: {method}")
        rhs = gen_binomial(i + k - 2, 2 * k - 2) * residues[i]
        cases.append(
            Verdict(
                identity=f"mod-identity[p={p},r={r},i={i},{method}]",
                k=k,
                n=n,
                lhs=lhs % modulus,
                rhs=rhs % modulus,
            )
        )
    return cases


def binomial_congruence_holds(k: int, p: int, r: int, i: int, t_range: Sequence[int]) -> bool:
    """Check C(p^r t + i + k - 2, 2k-2) = C(i + k - 2, 2k-2) mod p^r over t_range."""
    modulus = p**r
    expected = gen_binomial(i + k - 2, 2 * k - 2) % modulus
    return all(
        gen_binomial(modulus * t + i + k - 2, 2 * k - 2) % modulus == expected
        for t in t_range
    )


def verify_modular_identity(
    k: int, p: int, r: int, n: int, method: str = "enumerate"
) -> Verdict:
    """Aggregate verdict over all residues, plus the binomial sub-congruence.

    lhs counts the passing residue checks, rhs the total; the binomial
    congruence is checked independently for every shift that can occur at
    weight n and folded into the pass flag (a failure zeroes lhs).
    """
    cases = modular_identity_cases(k, p, r, n, method=method)
    modulus = p**r
    t_bound = n // modulus + 1
    binom_ok = all(
        binomial_congruence_holds(k, p, r, i, range(-t_bound, t_bound + 1))
        for i in range(modulus)
    )
    passed = sum(1 for c in cases if c.passed)
    if not binom_ok:
        passed = 0
    return Verdict(
        identity=f"mod-identity[p={p},r={r},{method}]", k=k, n=n, lhs=passed, rhs=len(cases)
    )


# ---------------------------------------------------------------------------
# Progression scanner
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CongruenceWitness:
    """Finite-range evidence that a statistic vanishes mod p^r along An + B."""

    p: int
    r: int
    A: int
    B: int
    kind: str  # "crank-residue" or "moment"
    k: Optional[int]
    n_max: int
    holds: bool
    points: int

    def to_json(self) -> str:
        return json.dumps(
            {
                "p": self.p,
                "r": self.r,
                "A": self.A,
                "B": self.B,
                "kind": self.kind,
                "k": self.k,
                "n_max": self.n_max,
                "holds": self.holds,
                "points": self.points,
            }
        )


def _scan_cell(
    A: int,
    B: int,
    p: int,
    r: int,
    k: Optional[int],
    n_max: int,
    min_points: int,
    cache: CrankTableCache,
) -> List[CongruenceWitness]:
    modulus = p**r
    values = [n for n in range(B, n_max + 1, A) if n >= 2]
    if len(values) < min_points:
        return []
    residue_ok = True
    moment_ok = k is not None
    for n in values:
        table = crank_residue_table(modulus, n, cache=cache)
        if residue_ok and any(c % modulus != 0 for c in table):
            residue_ok = False
        if moment_ok:
            mu = sum(
                gen_binomial(m + k - 1, 2 * k) * c
                for m, c in cache.table(n).counts.items()
            )
            if mu % modulus != 0:
                moment_ok = False
        if not residue_ok and not moment_ok:
            break
    out = []
    if residue_ok:
        out.append(
            CongruenceWitness(p, r, A, B, "crank-residue", None, n_max, True, len(values))
        )
    if moment_ok:
        out.append(CongruenceWitness(p, r, A, B, "moment", k, n_max, True, len(values)))
    return out


def scan_progressions(
    p: int,
    r: int,
    k: Optional[int] = None,
    a_max: int = 10,
    n_max: int = 79,
    min_points: int = 3,
    cache: Optional[CrankTableCache] = None,
    threads: int = 1,
) -> List[CongruenceWitness]:
    """Search progressions An + B (A <= a_max) for empirical congruences.

    A crank-residue witness requires M(i, p^r; An+B) = 0 mod p^r for every
    residue i at every progression value in [2, n_max]; a moment witness
    (emitted only when k is given) requires mu_{2k}(An+B) = 0 mod p^r over
    the same range.  Only progressions that hold with at least
    ``min_points`` data points are reported.  Deterministic for fixed
    inputs; with ``threads > 1`` the (A, B) cells run on a thread pool but
    the output order is unchanged (tables are precomputed single-writer
    first, so the workers only read the cache).
    """
    if not is_prime(p) or p < 5:
        raise ValueError("p must be a prime >= 5")
    if r < 1:
        raise ValueError("r must be positive")
    cache = cache or _default_cache
    cells = [(A, B) for A in range(1, a_max + 1) for B in range(A)]
    if threads > 1:
        for n in range(2, n_max + 1):
            cache.table(n)
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(
                pool.map(
                    lambda cell: _scan_cell(*cell, p, r, k, n_max, min_points, cache),
                    cells,
                )
            )
    else:
        results = [_scan_cell(A, B, p, r, k, n_max, min_points, cache) for A, B in cells]
    return [w for chunk in results for w in chunk]
