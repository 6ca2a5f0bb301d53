"""Getting integers back out of residue vectors.

Reconstruction goes through mixed-radix digits v1..vR, which satisfy

    u = v1 + v2*m1 + v3*m1*m2 + ... + vR*m1*...*m(R-1)

and are found by repeatedly subtracting off a digit and multiplying by the
reciprocal of the corresponding modulus.  Only the final evaluation needs
multiprecision arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .bignum import NatBig, big_add, big_cmp, big_divmod_small, big_mul, big_sub
from .modulus import ModulusSet, NotCoprimeError, extended_gcd
from .residue import ResidueInt


@dataclass(frozen=True)
class MixedRadixDigits:
    modset: ModulusSet
    digits: tuple[int, ...]


def to_mixed_radix(u: ResidueInt) -> MixedRadixDigits:
    modset = u.modset
    moduli = modset.moduli
    v = list(u.residues)
    for j in range(len(moduli) - 1):
        for k in range(j + 1, len(moduli)):
            mk = moduli[k]
            # normalize the difference into [0, mk) before scaling so every
            # intermediate stays nonnegative and below 2^32
            diff = v[k] - v[j] % mk
            if diff < 0:
                diff += mk
            v[k] = diff * modset.reciprocals[(j, k)] % mk
    return MixedRadixDigits(modset, tuple(v))


def from_mixed_radix(d: MixedRadixDigits) -> NatBig:
    """Evaluate the mixed-radix expansion exactly, Horner style."""
    moduli = d.modset.moduli
    acc = NatBig.from_int(d.digits[-1])
    for j in range(len(moduli) - 2, -1, -1):
        acc = big_add(big_mul(acc, NatBig.from_int(moduli[j])), NatBig.from_int(d.digits[j]))
    return acc


def decode(u: ResidueInt) -> NatBig:
    """The unique value in [0, M) with residues u."""
    return from_mixed_radix(to_mixed_radix(u))


@dataclass(frozen=True)
class SignedBig:
    """Sign and magnitude; zero is never negative."""

    negative: bool
    magnitude: NatBig

    def __int__(self):
        n = self.magnitude.to_int()
        return -n if self.negative else n

    def __str__(self):
        s = str(self.magnitude)
        return "-" + s if self.negative else s


def decode_signed(u: ResidueInt) -> SignedBig:
    """Interpret u in the symmetric range [ceil(-M/2), floor((M-1)/2)]."""
    value = decode(u)
    M = u.modset.product
    half, _ = big_divmod_small(big_sub(M, NatBig.from_int(1)), 2)
    if big_cmp(value, half) <= 0:
        return SignedBig(False, value)
    return SignedBig(True, big_sub(M, value))


def approx_float(u: ResidueInt) -> float:
    """Floating-point magnitude of decode(u), without any bignum work."""
    moduli = u.modset.moduli
    digits = to_mixed_radix(u).digits
    acc = float(digits[-1])
    for j in range(len(moduli) - 2, -1, -1):
        acc = acc * moduli[j] + digits[j]
    return acc


NOTE_NAMES = ("C", "C♯", "D", "D♯", "E", "F", "F♯", "G", "G♯", "A", "A♯", "B")
INTERVAL_NAMES = (
    "tonic",
    "minor 2nd",
    "major 2nd",
    "minor 3rd",
    "major 3rd",
    "4th",
    "minor 5th",
    "5th",
    "minor 6th",
    "major 6th",
    "minor 7th",
    "major 7th",
)


@dataclass(frozen=True)
class CrtTable:
    """m2 rows by m1 columns; ``cells[u % m2][u % m1] == u``."""

    m1: int
    m2: int
    cells: tuple[tuple[int, ...], ...]

    def __getitem__(self, idx):
        row, col = idx
        return self.cells[row][col]

    def column_labels(self) -> list[str] | None:
        return list(NOTE_NAMES) if self.m1 == 12 else None

    def row_labels(self) -> list[str] | None:
        if self.m1 == 12 and self.m2 <= len(INTERVAL_NAMES):
            return list(INTERVAL_NAMES[: self.m2])
        return None


def crt_table(m1: int, m2: int) -> CrtTable:
    """Lay out Z_(m1*m2) as a torus: walk diagonally from the top-left corner,
    wrapping at both edges."""
    if m1 < 1 or m2 < 1:
        raise ValueError("moduli must be positive")
    g = extended_gcd(m1, m2)[0]
    if g != 1:
        raise NotCoprimeError(0, 1, m1, m2, g)
    grid = [[None] * m1 for _ in range(m2)]
    row = col = 0
    for u in range(m1 * m2):
        grid[row][col] = u
        row = (row + 1) % m2
        col = (col + 1) % m1
    return CrtTable(m1, m2, tuple(tuple(r) for r in grid))


def render_table(table: CrtTable) -> str:
    cols = table.column_labels()
    rows = table.row_labels()
    width = max(len(str(table.m1 * table.m2 - 1)), 3)
    lead = max((len(r) for r in rows), default=0) if rows else 0
    lines = []
    pad = " " * (lead + 1 if rows else 0)
    if cols:
        lines.append(pad + "    " + " ".join(c.rjust(width) for c in cols))
    lines.append(pad + "    " + " ".join(str(c).rjust(width) for c in range(table.m1)))
    for r, cells in enumerate(table.cells):
        prefix = rows[r].ljust(lead) + " " if rows else ""
        lines.append(
            prefix + str(r).rjust(3) + " " + " ".join(str(x).rjust(width) for x in cells)
        )
    return "\n".join(lines)

