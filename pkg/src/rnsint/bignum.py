"""Schoolbook multiprecision naturals on 16-bit limbs.

This is deliberately the slow, carry-propagating representation: it serves as
the correctness oracle for residue arithmetic, carries reconstruction output,
and is the baseline in benchmarks.  Multiplication is O(N^2) on purpose.
"""

from __future__ import annotations

from dataclasses import dataclass

LIMB_BITS = 16
LIMB_BASE = 1 << LIMB_BITS
LIMB_MASK = LIMB_BASE - 1

# Largest power of ten below 2^16, used as the radix for decimal conversion.
_DEC_CHUNK = 10_000
_DEC_CHUNK_DIGITS = 4


class BigUnderflowError(ArithmeticError):
    """Raised when an unsigned subtraction would go negative."""


@dataclass(frozen=True)
class NatBig:
    """Unsigned integer as little-endian 16-bit limbs.

    Zero is the empty tuple; otherwise the most significant limb is nonzero.
    """

    limbs: tuple[int, ...] = ()

    def __post_init__(self):
        for limb in self.limbs:
            if not 0 <= limb < LIMB_BASE:
                raise ValueError(f"limb {limb} outside [0, 2^16)")
        if self.limbs and self.limbs[-1] == 0:
            raise ValueError("non-canonical limbs: trailing zero limb")

    @classmethod
    def from_limbs(cls, limbs) -> NatBig:
        """Build from a possibly non-canonical limb sequence."""
        return cls(_normalize(list(limbs)))

    @classmethod
    def from_int(cls, n: int) -> NatBig:
        if n < 0:
            raise ValueError("NatBig holds nonnegative values only")
        limbs = []
        while n:
            limbs.append(n & LIMB_MASK)
            n >>= LIMB_BITS
        return cls(tuple(limbs))

    def to_int(self) -> int:
        n = 0
        for limb in reversed(self.limbs):
            n = (n << LIMB_BITS) | limb
        return n

    def is_zero(self) -> bool:
        return not self.limbs

    def __str__(self):
        return big_to_decimal(self)

    def __repr__(self):
        return f"NatBig({big_to_decimal(self)})"

    def __add__(self, other):
        if isinstance(other, int):
            other = NatBig.from_int(other)
        if not isinstance(other, NatBig):
            return NotImplemented
        return big_add(self, other)

    def __sub__(self, other):
        if isinstance(other, int):
            other = NatBig.from_int(other)
        if not isinstance(other, NatBig):
            return NotImplemented
        return big_sub(self, other)

    def __mul__(self, other):
        if isinstance(other, int):
            other = NatBig.from_int(other)
        if not isinstance(other, NatBig):
            return NotImplemented
        return big_mul(self, other)

    def __lt__(self, other):
        return big_cmp(self, other) < 0

    def __le__(self, other):
        return big_cmp(self, other) <= 0

    def __gt__(self, other):
        return big_cmp(self, other) > 0

    def __ge__(self, other):
        return big_cmp(self, other) >= 0


ZERO = NatBig()
ONE = NatBig((1,))


def _normalize(limbs: list[int]) -> tuple[int, ...]:
    while limbs and limbs[-1] == 0:
        limbs.pop()
    return tuple(limbs)


def big_cmp(a: NatBig, b: NatBig) -> int:
    """Return -1, 0 or 1 as a is less than, equal to or greater than b."""
    if len(a.limbs) != len(b.limbs):
        return -1 if len(a.limbs) < len(b.limbs) else 1
    for x, y in zip(reversed(a.limbs), reversed(b.limbs)):
        if x != y:
            return -1 if x < y else 1
    return 0


def big_add(a: NatBig, b: NatBig) -> NatBig:
    if len(a.limbs) < len(b.limbs):
        a, b = b, a
    out = []
    carry = 0
    for i, x in enumerate(a.limbs):
        s = x + carry
        if i < len(b.limbs):
            s += b.limbs[i]
        out.append(s & LIMB_MASK)
        carry = s >> LIMB_BITS
    if carry:
        out.append(carry)
    return NatBig(tuple(out))


def big_sub(a: NatBig, b: NatBig) -> NatBig:
    """Return a - b; raises BigUnderflowError if b > a."""
    if len(b.limbs) > len(a.limbs):
        raise BigUnderflowError(f"{a} - {b} is negative")
    out = []
    borrow = 0
    for i, x in enumerate(a.limbs):
        d = x - borrow
        if i < len(b.limbs):
            d -= b.limbs[i]
        if d < 0:
            d += LIMB_BASE
            borrow = 1
        else:
            borrow = 0
        out.append(d)
    if borrow:
        raise BigUnderflowError(f"{a} - {b} is negative")
    return NatBig(_normalize(out))


def big_mul(a: NatBig, b: NatBig) -> NatBig:
    """Schoolbook product.

    Each 16x16 partial product fits in 32 bits and is split into a low limb
    and a high part, the high part pushed into the next column.  Column
    accumulators are swept for carries once at the end.
    """
    if a.is_zero() or b.is_zero():
        return ZERO
    cols = [0] * (len(a.limbs) + len(b.limbs) + 1)
    for i, x in enumerate(a.limbs):
        if x == 0:
            continue
        for j, y in enumerate(b.limbs):
            p = x * y
            cols[i + j] += p & LIMB_MASK
            cols[i + j + 1] += p >> LIMB_BITS
    carry = 0
    for k in range(len(cols)):
        s = cols[k] + carry
        cols[k] = s & LIMB_MASK
        carry = s >> LIMB_BITS
    return NatBig(_normalize(cols))


def _mul_small_add(a: NatBig, k: int, c: int) -> NatBig:
    # a*k + c for 0 <= k, c < 2^16
    out = []
    carry = c
    for x in a.limbs:
        s = x * k + carry
        out.append(s & LIMB_MASK)
        carry = s >> LIMB_BITS
    while carry:
        out.append(carry & LIMB_MASK)
        carry >>= LIMB_BITS
    return NatBig(_normalize(out))


def big_divmod_small(a: NatBig, d: int) -> tuple[NatBig, int]:
    """Divide by a single-limb divisor, returning (quotient, remainder)."""
    if d == 0:
        raise ZeroDivisionError("division by zero")
    if not 1 <= d < LIMB_BASE:
        raise ValueError(f"divisor {d} outside [1, 2^16)")
    q = [0] * len(a.limbs)
    r = 0
    for i in range(len(a.limbs) - 1, -1, -1):
        cur = (r << LIMB_BITS) | a.limbs[i]
        q[i], r = divmod(cur, d)
    return NatBig(_normalize(q)), r


def big_mod_small(a: NatBig, m: int) -> int:
    return big_divmod_small(a, m)[1]


def big_to_decimal(a: NatBig) -> str:
    if a.is_zero():
        return "0"
    chunks = []
    while not a.is_zero():
        a, r = big_divmod_small(a, _DEC_CHUNK)
        chunks.append(r)
    head = str(chunks[-1])
    tail = "".join(f"{c:0{_DEC_CHUNK_DIGITS}d}" for c in reversed(chunks[:-1]))
    return head + tail


def big_from_decimal(s: str) -> NatBig:
    """Parse a canonical decimal string (ASCII digits, no sign, no leading zeros)."""
    if not s or not all("0" <= ch <= "9" for ch in s):
        raise ValueError(f"malformed decimal string: {s!r}")
    if len(s) > 1 and s[0] == "0":
        raise ValueError(f"leading zeros in decimal string: {s!r}")
    out = ZERO
    for ch in s:
        out = _mul_small_add(out, 10, ord(ch) - 48)
    return out
