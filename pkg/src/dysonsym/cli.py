"""Command-line front end: tables, enumerations, verifications, scanning.

Exit status: 0 on success, 1 when any verification verdict fails, 2 on
usage errors.  Standard output carries data only; progress and summaries
go to the error stream.
"""

from __future__ import annotations

import argparse
import sys
from itertools import product
from typing import Iterator, List, Optional, Sequence, Tuple

from .congruence import scan_progressions, verify_modular_identity
from .dyson import (
    count_f1,
    dyson_crank,
    enumerate_dyson_symbols,
    to_dyson_symbol,
)
from .fullcrank import (
    Verdict,
    ck_brute,
    ck_closed_form,
    count_full_crank,
    series_coefficients,
    theorem43_rhs,
    verify_theorem31,
)
from .marked import (
    count_fk,
    count_fk_strict,
    count_fk_with_balance,
    crank_vector,
    enumerate_marked,
    is_strict,
    mirror,
    phi,
    phi_inverse,
    theorem21_rhs,
    validate_marked,
    weight,
)
from .partitions import (
    crank,
    crank_counts,
    crank_moment,
    partitions_of,
    rank_counts,
    rank_moment,
)

VERIFY_IDS = (
    "cor2.3",
    "thm2.1",
    "thm2.4",
    "thm2.5",
    "thm2.6",
    "thm3.1",
    "thm4.3",
    "gf-ck",
    "mod-identity",
)


# ---------------------------------------------------------------------------
# Verification drivers (each returns a list of Verdicts)
# ---------------------------------------------------------------------------


def _signed_profiles(k: int, bound: int) -> Iterator[Tuple[int, ...]]:
    # All integer k-tuples with sum of absolute values <= bound.
    if k == 0:
        yield ()
        return
    for m in range(-bound, bound + 1):
        for rest in _signed_profiles(k - 1, bound - abs(m)):
            yield (m,) + rest


def verify_cor23(max_n: int = 30, object_max_n: int = 25) -> List[Verdict]:
    """M(-m, n) = F_1(m; n) for all m, plus crank negation under the encoding."""
    verdicts = []
    for n in range(2, max_n + 1):
        table = crank_counts(n)
        ok = total = 0
        for m in range(-n, n + 1):
            total += 1
            if table[-m] == count_f1(m, n):
                ok += 1
        verdicts.append(Verdict(identity="cor2.3", k=1, n=n, lhs=ok, rhs=total))
    for n in range(1, object_max_n + 1):
        ok = total = 0
        for lam in partitions_of(n):
            total += 1
            if dyson_crank(to_dyson_symbol(lam)) == -crank(lam):
                ok += 1
        verdicts.append(Verdict(identity="cor2.3-object", k=1, n=n, lhs=ok, rhs=total))
    return verdicts


def verify_thm21(
    k: int, max_n: int, profile: Optional[Tuple[int, ...]] = None
) -> List[Verdict]:
    """count_fk equals the shifted one-level sum, for all (or one) profile."""
    verdicts = []
    for n in range(2, max_n + 1):
        if profile is not None:
            candidates: Sequence[Tuple[int, ...]] = [profile]
        else:
            candidates = list(_signed_profiles(k, n - k + 1))
        ok = total = 0
        for m in candidates:
            total += 1
            if count_fk(m, n) == theorem21_rhs(m, n):
                ok += 1
        verdicts.append(Verdict(identity="thm2.1", k=k, n=n, lhs=ok, rhs=total))
    return verdicts


def verify_thm24(max_k: int = 3, max_n: int = 12) -> List[Verdict]:
    """Sign-flip invariance of the fibers, and the mirror round trip."""
    verdicts = []
    for k in range(1, max_k + 1):
        for n in range(2, max_n + 1):
            ok = total = 0
            for m in _signed_profiles(k, n - k + 1):
                count = count_fk(m, n)
                for j in range(k):
                    flipped = m[:j] + (-m[j],) + m[j + 1 :]
                    total += 1
                    if count == count_fk(flipped, n):
                        ok += 1
            for eta in enumerate_marked(k, n):
                cranks = crank_vector(eta)
                for j in range(1, k + 1):
                    if cranks[j - 1] == 0:
                        continue
                    total += 1
                    mu = mirror(eta, j)
                    want = cranks[: j - 1] + (-cranks[j - 1],) + cranks[j:]
                    if (
                        validate_marked(mu)
                        and weight(mu) == n
                        and crank_vector(mu) == want
                        and mirror(mu, j) == eta
                    ):
                        ok += 1
            verdicts.append(Verdict(identity="thm2.4", k=k, n=n, lhs=ok, rhs=total))
    return verdicts


def _nonneg_profiles(k: int, bound: int) -> Iterator[Tuple[int, ...]]:
    if k == 0:
        yield ()
        return
    for m in range(bound + 1):
        for rest in _nonneg_profiles(k - 1, bound - m):
            yield (m,) + rest


def verify_thm25(max_n: int = 12, ks: Sequence[int] = (2, 3)) -> List[Verdict]:
    """Balance-refined counts equal strict counts under m_i -> m_i + 2t_i."""
    verdicts = []
    for k in ks:
        for n in range(2, max_n + 1):
            ok = total = 0
            bound = n - k + 1
            for m in _nonneg_profiles(k, bound):
                for t in _nonneg_profiles(k - 1, (bound - sum(m)) // 2):
                    shifted = tuple(m[i] + 2 * t[i] for i in range(k - 1)) + (m[-1],)
                    total += 1
                    if count_fk_with_balance(m, t, n) == count_fk_strict(shifted, n):
                        ok += 1
            verdicts.append(Verdict(identity="thm2.5", k=k, n=n, lhs=ok, rhs=total))
    return verdicts


def verify_thm26(max_k: int = 3, max_n: int = 12) -> List[Verdict]:
    """Both round trips of the merge/peel bijection."""
    verdicts = []
    for k in range(1, max_k + 1):
        for n in range(2, max_n + 1):
            ok = total = 0
            for eta in enumerate_marked(k, n):
                cranks = crank_vector(eta)
                if not is_strict(eta) or any(c < 0 for c in cranks):
                    continue
                total += 1
                merged = phi(eta)
                if (
                    merged.weight() == n
                    and dyson_crank(merged) == sum(cranks) + k - 1
                    and phi_inverse(merged, cranks) == eta
                ):
                    ok += 1
            for sym in enumerate_dyson_symbols(n):
                c = dyson_crank(sym)
                if c < k - 1:
                    continue
                for m in _nonneg_profiles(k, c - k + 1):
                    if sum(m) != c - k + 1:
                        continue
                    total += 1
                    eta = phi_inverse(sym, m)
                    if crank_vector(eta) == m and phi(eta) == sym:
                        ok += 1
            verdicts.append(Verdict(identity="thm2.6", k=k, n=n, lhs=ok, rhs=total))
    return verdicts


def verify_thm31(k: int, max_n: int, n: Optional[int] = None) -> List[Verdict]:
    if n is not None:
        return [verify_theorem31(k, n)]
    return [verify_theorem31(k, m) for m in range(2, max_n + 1)]


def verify_thm43(max_k: int = 3, max_n: int = 14) -> List[Verdict]:
    verdicts = []
    for k in range(1, max_k + 1):
        for n in range(2, max_n + 1):
            ok = total = 0
            for m in range(-n, n + 1):
                total += 1
                if count_full_crank(k, m, n) == theorem43_rhs(k, m, n):
                    ok += 1
            verdicts.append(Verdict(identity="thm4.3", k=k, n=n, lhs=ok, rhs=total))
    return verdicts


def verify_gfck(max_k: int = 4, max_j: int = 25) -> List[Verdict]:
    """Series coefficients vs closed form vs brute-force solution counts."""
    verdicts = []
    for k in range(1, max_k + 1):
        coeffs = series_coefficients(k, max_j)
        ok = sum(
            1
            for j in range(max_j + 1)
            if coeffs[j] == ck_closed_form(k, j) == ck_brute(k, j)
        )
        verdicts.append(Verdict(identity="gf-ck", k=k, n=max_j, lhs=ok, rhs=max_j + 1))
    return verdicts


MOD_IDENTITY_TRIPLES = ((2, 5, 1), (3, 5, 1), (2, 7, 1))


def verify_mod_identity_suite(
    triples: Sequence[Tuple[int, int, int]] = MOD_IDENTITY_TRIPLES,
    enum_max_n: int = 14,
    closed_max_n: int = 40,
) -> List[Verdict]:
    verdicts = []
    for k, p, r in triples:
        for n in range(2, enum_max_n + 1):
            verdicts.append(verify_modular_identity(k, p, r, n, method="enumerate"))
        for n in range(2, closed_max_n + 1):
            verdicts.append(verify_modular_identity(k, p, r, n, method="closed"))
    return verdicts


def verify_dispatch(identifier: str, args: argparse.Namespace) -> List[Verdict]:
    """Run one named verification suite within the requested bounds."""
    max_n = args.max_n
    if identifier == "cor2.3":
        return verify_cor23(max_n or 30, min(max_n or 25, 25))
    if identifier == "thm2.1":
        profile = tuple(args.m) if args.m else None
        if args.k:
            return verify_thm21(args.k, max_n or (14 if args.k == 2 else 12), profile)
        return verify_thm21(2, max_n or 14, profile) + verify_thm21(
            3, max_n or 12, profile
        )
    if identifier == "thm2.4":
        return verify_thm24(args.k or 3, max_n or 12)
    if identifier == "thm2.5":
        return verify_thm25(max_n or 12, (args.k,) if args.k else (2, 3))
    if identifier == "thm2.6":
        return verify_thm26(args.k or 3, max_n or 12)
    if identifier == "thm3.1":
        if args.k:
            return verify_thm31(args.k, max_n or (14 if args.k == 1 else 10), args.n)
        return verify_thm31(1, max_n or 14, args.n) + verify_thm31(
            2, max_n or 10, args.n
        )
    if identifier == "thm4.3":
        return verify_thm43(args.k or 3, max_n or 14)
    if identifier == "gf-ck":
        return verify_gfck(args.k or 4, max_n or 25)
    if identifier == "mod-identity":
        triples = MOD_IDENTITY_TRIPLES
        if args.p:
            triples = ((args.k or 2, args.p, args.r or 1),)
        return verify_mod_identity_suite(triples, min(max_n or 14, 14), max_n or 40)
    raise KeyError(identifier)


# ---------------------------------------------------------------------------
# Output helpers
# ---------------------------------------------------------------------------


def _emit_verdicts(verdicts: List[Verdict], fmt: str) -> None:
    if fmt == "json":
        for v in verdicts:
            print(v.to_json())
    elif fmt == "csv":
        print("identity,k,n,lhs,rhs,pass")
        for v in verdicts:
            print(f"{v.identity},{v.k},{v.n},{v.lhs},{v.rhs},{v.passed}")
    else:
        for v in verdicts:
            flag = "pass" if v.passed else "FAIL"
            print(f"{v.identity}  k={v.k} n={v.n}  lhs={v.lhs} rhs={v.rhs}  {flag}")
    passed = sum(1 for v in verdicts if v.passed)
    print(f"{passed}/{len(verdicts)} checks passed", file=sys.stderr)


def _emit_table(table, fmt: str) -> None:
    if fmt == "json":
        print(table.to_json())
    elif fmt == "csv":
        print(table.to_csv(), end="")
    else:
        for m in table.support():
            print(f"{m}\t{table[m]}")


# ---------------------------------------------------------------------------
# Argument parsing and dispatch
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dysonsym",
        description="Dyson symbols, crank statistics, and partition congruences. "
        "The DYSONSYM_CACHE_DIR environment variable selects a directory for "
        "the persistent crank-table cache used by scanning.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--format", choices=("json", "csv", "text"), default="text")

    p = sub.add_parser("partitions", help="list the partitions of n")
    p.add_argument("--n", type=int, required=True)
    common(p)

    for verb in ("crank-table", "rank-table"):
        p = sub.add_parser(verb, help=f"the {verb.split('-')[0]} count table at n")
        p.add_argument("--n", type=int, required=True)
        common(p)

    p = sub.add_parser("moments", help="symmetrized crank and rank moments")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    common(p)

    p = sub.add_parser("dyson", help="enumerate the Dyson symbols of n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument(
        "--oracle", action="store_true", help="use the structural search instead of the bijection"
    )
    common(p)

    p = sub.add_parser("enumerate-marked", help="enumerate the k-marked symbols of n")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    common(p)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("identifier", choices=VERIFY_IDS + ("all",))
    p.add_argument("--k", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--max-n", type=int, dest="max_n")
    p.add_argument("--m", type=int, action="append", help="crank profile entry (repeatable)")
    p.add_argument("--t", type=int, action="append", help="balance profile entry (repeatable)")
    p.add_argument("--p", type=int)
    p.add_argument("--r", type=int)
    common(p)

    p = sub.add_parser("scan", help="scan progressions An+B for congruence witnesses")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--k", type=int)
    p.add_argument("--max-a", type=int, dest="max_a", default=10)
    p.add_argument("--max-n", type=int, dest="max_n", default=79)
    p.add_argument("--threads", type=int, default=1)
    common(p)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    fmt = args.format

    if args.verb == "partitions":
        parts = list(partitions_of(args.n))
        if fmt == "json":
            import json as _json

            print(_json.dumps([list(p) for p in parts]))
        elif fmt == "csv":
            print("partition")
            for p in parts:
                print(" ".join(map(str, p)))
        else:
            for p in parts:
                print(" ".join(map(str, p)) if p else "(empty)")
        print(f"{len(parts)} partitions of {args.n}", file=sys.stderr)
        return 0

    if args.verb == "crank-table":
        _emit_table(crank_counts(args.n), fmt)
        return 0

    if args.verb == "rank-table":
        _emit_table(rank_counts(args.n), fmt)
        return 0

    if args.verb == "moments":
        mu, eta = crank_moment(args.k, args.n), rank_moment(args.k, args.n)
        if fmt == "json":
            import json as _json

            print(_json.dumps({"k": args.k, "n": args.n, "mu": mu, "eta": eta}))
        elif fmt == "csv":
            print("k,n,mu,eta")
            print(f"{args.k},{args.n},{mu},{eta}")
        else:
            print(f"mu_{args.k}({args.n}) = {mu}")
            print(f"eta_{args.k}({args.n}) = {eta}")
        return 0

    if args.verb == "dyson":
        method = "structural" if args.oracle else "bijection"
        syms = enumerate_dyson_symbols(args.n, method=method)
        if fmt == "json":
            for s in syms:
                print(s.to_json())
        elif fmt == "csv":
            print("alpha,beta,crank")
            for s in syms:
                print(
                    f"{' '.join(map(str, s.alpha))},{' '.join(map(str, s.beta))},{s.crank()}"
                )
        else:
            for s in syms:
                print(f"alpha={s.alpha} beta={s.beta} crank={s.crank()}")
        print(f"{len(syms)} Dyson symbols of {args.n}", file=sys.stderr)
        return 0

    if args.verb == "enumerate-marked":
        syms = enumerate_marked(args.k, args.n)
        if fmt == "json":
            for s in syms:
                print(s.to_json())
        elif fmt == "csv":
            print("levels,markers,cranks")
            for s in syms:
                levels = ";".join(f"{a}|{b}" for a, b in s.vectors)
                print(f"{levels},{' '.join(map(str, s.markers))},{crank_vector(s)}")
        else:
            for s in syms:
                print(f"levels={s.vectors} markers={s.markers} cranks={crank_vector(s)}")
        print(f"{len(syms)} {args.k}-marked symbols of {args.n}", file=sys.stderr)
        return 0

    if args.verb == "verify":
        ids = VERIFY_IDS if args.identifier == "all" else (args.identifier,)
        verdicts: List[Verdict] = []
        for ident in ids:
            print(f"verifying {ident} ...", file=sys.stderr)
            verdicts.extend(verify_dispatch(ident, args))
        _emit_verdicts(verdicts, fmt)
        return 0 if all(v.passed for v in verdicts) else 1

    if args.verb == "scan":
        witnesses = scan_progressions(
            args.p,
            args.r,
            k=args.k,
            a_max=args.max_a,
            n_max=args.max_n,
            threads=args.threads,
        )
        if fmt == "csv":
            print("p,r,A,B,kind,k,n_max,holds,points")
            for w in witnesses:
                print(
                    f"{w.p},{w.r},{w.A},{w.B},{w.kind},"
                    f"{'' if w.k is None else w.k},{w.n_max},{w.holds},{w.points}"
                )
        elif fmt == "text":
            for w in witnesses:
                print(
                    f"{w.kind} p={w.p} r={w.r} A={w.A} B={w.B} "
                    f"k={w.k} points={w.points}"
                )
        else:
            for w in witnesses:
                print(w.to_json())
        print(f"{len(witnesses)} witnesses", file=sys.stderr)
        return 0

    parser.error(f"unknown verb: {args.verb}")
    return 2


if __name__ == "__main__":
    sys.exit(main())
