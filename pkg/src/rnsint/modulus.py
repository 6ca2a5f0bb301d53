"""Modulus sets, the extended Euclidean algorithm and modular reciprocals."""

from __future__ import annotations

from dataclasses import dataclass, field

from .bignum import ONE, NatBig, big_mul

MODULUS_LIMIT = 1 << 16

DEFAULT_MODULI = (65449, 65479, 65497, 65519, 65521)


class NotInvertibleError(ValueError):
    pass


class NotCoprimeError(ValueError):
    """Two moduli in a set share a factor.  Indices are 0-based positions."""

    def __init__(self, j: int, k: int, mj: int, mk: int, g: int):
        self.j, self.k, self.g = j, k, g
        super().__init__(
            f"moduli[{j}]={mj} and moduli[{k}]={mk} are not coprime (gcd {g})"
        )


def extended_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with g = gcd(a, b) and a*x + b*y = g.

    Iterative.  For inputs below 2^16 the coefficients are bounded by
    max(a, b) in magnitude, so they would fit a signed 64-bit word.
    """
    if a < 0 or b < 0:
        raise ValueError("extended_gcd expects nonnegative inputs")
    if a == 0 and b == 0:
        raise ValueError("gcd(0, 0) is undefined")
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    return old_r, old_x, old_y


def mod_inverse(a: int, m: int) -> int:
    """Reciprocal of a modulo m in [0, m).  Negative a is reduced first."""
    if m < 2:
        raise ValueError(f"modulus must be >= 2, got {m}")
    a %= m
    if a == 0:
        raise NotInvertibleError(f"0 has no reciprocal modulo {m}")
    g, x, _ = extended_gcd(a, m)
    if g != 1:
        raise NotInvertibleError(f"{a} is not invertible modulo {m} (gcd {g})")
    return x % m


@dataclass(frozen=True)
class ModulusSet:
    """An ordered, validated list of pairwise-coprime moduli.

    Use new_modulus_set() rather than the constructor; equality and hashing
    are by the modulus list alone.  ``reciprocals[(j, k)]`` for j < k
    (0-based) is the inverse of moduli[j] modulo moduli[k].
    """

    moduli: tuple[int, ...]
    product: NatBig = field(compare=False)
    reciprocals: dict = field(compare=False, repr=False)

    @property
    def size(self) -> int:
        return len(self.moduli)

    def __len__(self):
        return len(self.moduli)

    def __iter__(self):
        return iter(self.moduli)

    def __hash__(self):
        return hash(self.moduli)

    def reciprocal(self, j: int, k: int) -> int:
        return self.reciprocals[(j, k)]

    def text(self) -> str:
        return "(" + ",".join(str(m) for m in self.moduli) + ")"


def new_modulus_set(moduli) -> ModulusSet:
    moduli = tuple(int(m) for m in moduli)
    if not moduli:
        raise ValueError("modulus set must be nonempty")
    for i, m in enumerate(moduli):
        if not 2 <= m < MODULUS_LIMIT:
            raise ValueError(f"moduli[{i}]={m} outside [2, 2^16)")
    reciprocals = {}
    for j, mj in enumerate(moduli):
        for k in range(j + 1, len(moduli)):
            mk = moduli[k]
            g, x, _ = extended_gcd(mj, mk)
            if g != 1:
                raise NotCoprimeError(j, k, mj, mk, g)
            reciprocals[(j, k)] = x % mk
    product = ONE
    for m in moduli:
        product = big_mul(product, NatBig.from_int(m))
    return ModulusSet(moduli, product, reciprocals)


def default_modulus_set() -> ModulusSet:
    """The five largest primes below 2^16; M is about 1.2e24."""
    return new_modulus_set(DEFAULT_MODULI)


def parse_moduli(text: str) -> ModulusSet:
    """Parse a comma-separated list such as ``13,11,9,7``."""
    parts = [p.strip() for p in text.split(",")]
    try:
        values = [int(p) for p in parts]
    except ValueError:
        raise ValueError(f"malformed modulus list: {text!r}") from None
    return new_modulus_set(values)
