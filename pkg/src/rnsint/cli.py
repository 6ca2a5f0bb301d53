"""Command-line front end.

Exit codes: 0 on success, 1 for usage or parse errors, 2 for domain errors
(non-coprime moduli, values out of range).
"""

from __future__ import annotations

import argparse
import json
import random
import statistics
import sys
import time

from .bignum import ONE, NatBig, big_add, big_from_decimal, big_mul
from .modulus import NotCoprimeError, default_modulus_set, parse_moduli
from .reconstruct import approx_float, crt_table, decode, decode_signed, render_table
from .residue import (
    ModulusMismatchError,
    RangeExceededError,
    add,
    encode,
    encode_big,
    mul,
    mul_scalar,
    parse_text,
    to_text,
)

MAX_TABLE_CELLS = 10_000


class UsageError(Exception):
    pass


class DomainError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _render_value(u, mode: str) -> str:
    if mode == "residues":
        return to_text(u)
    if mode == "signed":
        return str(decode_signed(u))
    if mode == "float":
        return f"{approx_float(u):.14e}"
    return str(decode(u))


def _modset(args, required=True):
    if args.moduli is None:
        return default_modulus_set() if required else None
    try:
        return parse_moduli(args.moduli)
    except NotCoprimeError as exc:
        raise DomainError(str(exc)) from None
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _output_mode(args) -> str:
    if getattr(args, "residues", False):
        return "residues"
    if args.float:
        return "float"
    if args.signed:
        return "signed"
    return "decimal"


def cmd_factorial(args, warn) -> dict:
    modset = _modset(args)
    n = args.n
    if n < 0:
        raise UsageError("n must be nonnegative")
    u = encode(1, modset)
    exact = ONE
    for k in range(2, n + 1):
        u = mul_scalar(u, k)
        exact = big_mul(exact, NatBig.from_int(k))
    if exact >= modset.product:
        warn(f"{n}! >= M = {modset.product}; result is {n}! mod M")
    mode = _output_mode(args)
    rendered = _render_value(u, mode)
    return {"text": rendered, "outputs": {"value": rendered, "mode": mode}}


def recurrence_terms(n_max: int, modset):
    """Run a(n+1) = a(n)^2 + (n+3)*n*a(n), a(0) = 1 in residue arithmetic.

    Returns the residue terms a(0)..a(n_max).  Each term is cross-checked
    against a NatBig recomputation; the first term >= M raises
    RangeExceededError carrying its index.
    """
    a = encode(1, modset)
    exact = ONE
    terms = [a]
    for n in range(n_max):
        a = add(mul(a, a), mul_scalar(a, (n + 3) * n))
        exact = big_add(big_mul(exact, exact), big_mul(NatBig.from_int((n + 3) * n), exact))
        if exact >= modset.product:
            err = RangeExceededError(
                f"a_{n + 1} exceeds M = {modset.product}; use a larger modulus set"
            )
            err.index = n + 1
            raise err
        terms.append(a)
    return terms


def cmd_recurrence(args, warn) -> dict:
    if args.n_max < 1:
        raise UsageError("n_max must be >= 1")
    modset = _modset(args)
    try:
        terms = recurrence_terms(args.n_max, modset)
    except RangeExceededError as exc:
        raise DomainError(str(exc)) from None
    mode = _output_mode(args)
    values = [_render_value(t, mode) for t in terms]
    lines = [f"a_{n} = {v}" for n, v in enumerate(values)]
    return {"text": "\n".join(lines), "outputs": {"terms": values, "mode": mode}}


def cmd_encode(args, warn) -> dict:
    modset = _modset(args)
    try:
        value = big_from_decimal(args.value)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    if value >= modset.product:
        warn(f"{args.value} >= M = {modset.product}; residues alias modulo M")
    u = encode_big(value, modset)
    text = to_text(u)
    return {"text": text, "outputs": {"residues": list(u.residues), "text": text}}


def cmd_decode(args, warn) -> dict:
    modset = _modset(args, required=False)
    try:
        u = parse_text(args.text, modset)
    except ModulusMismatchError as exc:
        raise UsageError(str(exc)) from None
    except NotCoprimeError as exc:
        raise DomainError(str(exc)) from None
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    mode = _output_mode(args)
    rendered = _render_value(u, mode)
    return {"text": rendered, "outputs": {"value": rendered, "mode": mode}}


def cmd_crt_table(args, warn) -> dict:
    m1, m2 = args.m1, args.m2
    if m1 < 1 or m2 < 1:
        raise UsageError("moduli must be positive")
    if m1 * m2 > MAX_TABLE_CELLS:
        raise UsageError(f"{m1}x{m2} table exceeds {MAX_TABLE_CELLS} cells")
    try:
        table = crt_table(m1, m2)
    except NotCoprimeError as exc:
        cycle = m1 // exc.g
        raise DomainError(
            f"{m1} and {m2} are not coprime (gcd {exc.g}): stepping by {m2} around "
            f"a circle of {m1} returns to 0 after {cycle} steps, without ever "
            f"visiting the other {m1 - cycle} classes"
        ) from None
    return {
        "text": render_table(table),
        "outputs": {
            "rows": [list(r) for r in table.cells],
            "column_labels": table.column_labels(),
            "row_labels": table.row_labels(),
        },
    }


def _median_time(fn, trials: int) -> float:
    samples = []
    for _ in range(trials):
        t0 = time.perf_counter()
        fn()
        samples.append(time.perf_counter() - t0)
    return statistics.median(samples)


def bench(digit_sizes, trials: int, modset, seed: int = 0) -> list[dict]:
    """Median wall time of one multiply per operand size.

    Operands are random naturals with the given number of decimal digits;
    the residue side reduces them into the modulus set, so its cost depends
    only on the number of moduli.
    """
    rng = random.Random(seed)
    rows = []
    for digits in digit_sizes:
        lo = 10 ** (digits - 1) if digits > 1 else 0
        x = rng.randrange(lo, 10**digits)
        y = rng.randrange(lo, 10**digits)
        bx, by = NatBig.from_int(x), NatBig.from_int(y)
        rx, ry = encode(x, modset), encode(y, modset)
        rows.append(
            {
                "digits": digits,
                "limbs": len(bx.limbs),
                "components": len(modset.moduli),
                "rns_mul_s": _median_time(lambda: mul(rx, ry), trials),
                "schoolbook_mul_s": _median_time(lambda: big_mul(bx, by), trials),
                "aliased": NatBig.from_int(x * y) >= modset.product,
            }
        )
    return rows


def cmd_bench(args, warn) -> dict:
    modset = _modset(args)
    try:
        sizes = [int(s) for s in args.digits.split(",")]
    except ValueError:
        raise UsageError(f"malformed --digits: {args.digits!r}") from None
    if any(s < 1 for s in sizes) or args.trials < 1:
        raise UsageError("digit sizes and trials must be positive")
    rows = bench(sizes, args.trials, modset)
    lines = [f"{'digits':>6} {'limbs':>5} {'R':>3} {'rns_mul':>12} {'schoolbook_mul':>15}"]
    for r in rows:
        note = "  (product aliased mod M)" if r["aliased"] else ""
        lines.append(
            f"{r['digits']:>6} {r['limbs']:>5} {r['components']:>3} "
            f"{r['rns_mul_s'] * 1e6:>10.2f}us {r['schoolbook_mul_s'] * 1e6:>13.2f}us{note}"
        )
    return {"text": "\n".join(lines), "outputs": {"results": rows}}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--moduli", help="comma-separated moduli, e.g. 13,11,9,7")
    common.add_argument("--json", action="store_true", help="emit JSON")
    modes = argparse.ArgumentParser(add_help=False)
    group = modes.add_mutually_exclusive_group()
    group.add_argument("--signed", action="store_true", help="symmetric-range decode")
    group.add_argument("--float", action="store_true", help="floating-point decode")
    group.add_argument("--residues", action="store_true", help="print residues")

    parser = _Parser(prog="rnsint", description="Residue number system arithmetic")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("factorial", parents=[common, modes], help="n! in residue form")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_factorial)

    p = sub.add_parser(
        "recurrence", parents=[common, modes], help="a(n+1) = a(n)^2 + (n+3) n a(n)"
    )
    p.add_argument("n_max", type=int)
    p.set_defaults(func=cmd_recurrence)

    p = sub.add_parser("encode", parents=[common], help="decimal to residues")
    p.add_argument("value")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", parents=[common, modes], help="residues to decimal")
    p.add_argument("text", help="'(u1,...,uR) mod (m1,...,mR)'")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("crt-table", parents=[common], help="residue table for two moduli")
    p.add_argument("m1", type=int)
    p.add_argument("m2", type=int)
    p.set_defaults(func=cmd_crt_table)

    p = sub.add_parser("bench", parents=[common], help="RNS vs schoolbook multiply")
    p.add_argument("--digits", default="8,16,32", help="comma-separated operand sizes")
    p.add_argument("--trials", type=int, default=200)
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    warnings = []

    def warn(msg):
        warnings.append(msg)
        print(f"warning: {msg}", file=sys.stderr)

    try:
        result = args.func(args, warn)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    if args.json:
        inputs = {
            k: v for k, v in vars(args).items() if k not in ("func", "json", "command")
        }
        payload = {"command": args.command, "inputs": inputs, "outputs": result["outputs"]}
        if warnings:
            payload["warnings"] = warnings
        print(json.dumps(payload))
    else:
        print(result["text"])
    return 0


if __name__ == "__main__":
    sys.exit(main())
