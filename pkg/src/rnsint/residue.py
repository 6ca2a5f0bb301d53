"""Carry-free integers held as residue vectors over a ModulusSet.

Values live in [0, M).  Anything larger aliases silently modulo M, the same
way a machine register rolls over; callers pick M large enough.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .bignum import NatBig, big_mod_small
from .modulus import ModulusSet, new_modulus_set


class ModulusMismatchError(ValueError):
    pass


class RangeExceededError(OverflowError):
    pass


@dataclass(frozen=True, eq=False)
class ResidueInt:
    modset: ModulusSet
    residues: tuple[int, ...]

    def __post_init__(self):
        if len(self.residues) != len(self.modset.moduli):
            raise ValueError(
                f"expected {len(self.modset.moduli)} residues, got {len(self.residues)}"
            )
        for j, (u, m) in enumerate(zip(self.residues, self.modset.moduli)):
            if not 0 <= u < m:
                raise ValueError(f"residue {u} at position {j} outside [0, {m})")

    def __add__(self, other):
        if isinstance(other, int):
            return add_scalar(self, other)
        if isinstance(other, ResidueInt):
            return add(self, other)
        return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            return sub(self, encode(other, self.modset))
        if isinstance(other, ResidueInt):
            return sub(self, other)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, int):
            return mul_scalar(self, other)
        if isinstance(other, ResidueInt):
            return mul(self, other)
        return NotImplemented

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, ResidueInt):
            return NotImplemented
        return eq(self, other)

    def __hash__(self):
        return hash((self.modset.moduli, self.residues))

    def __str__(self):
        return to_text(self)


def _check_same(a: ResidueInt, b: ResidueInt) -> None:
    if a.modset.moduli != b.modset.moduli:
        raise ModulusMismatchError(
            f"modulus sets differ: {a.modset.text()} vs {b.modset.text()}"
        )


def encode(n: int, modset: ModulusSet, strict: bool = False) -> ResidueInt:
    """Residues of a nonnegative integer.

    With ``strict`` an input >= M raises RangeExceededError instead of
    aliasing.
    """
    if n < 0:
        raise ValueError("encode expects a nonnegative integer")
    if strict and NatBig.from_int(n) >= modset.product:
        raise RangeExceededError(f"{n} >= M = {modset.product}")
    return ResidueInt(modset, tuple(n % m for m in modset.moduli))


def encode_big(n: NatBig, modset: ModulusSet) -> ResidueInt:
    """Residues of a NatBig, reduced limb-wise (no native bignums involved)."""
    return ResidueInt(modset, tuple(big_mod_small(n, m) for m in modset.moduli))


def from_residues(residues, modset: ModulusSet) -> ResidueInt:
    return ResidueInt(modset, tuple(int(u) for u in residues))


def add(a: ResidueInt, b: ResidueInt) -> ResidueInt:
    _check_same(a, b)
    return ResidueInt(
        a.modset,
        tuple((u + v) % m for u, v, m in zip(a.residues, b.residues, a.modset.moduli)),
    )


def sub(a: ResidueInt, b: ResidueInt) -> ResidueInt:
    _check_same(a, b)
    return ResidueInt(
        a.modset,
        tuple((u - v) % m for u, v, m in zip(a.residues, b.residues, a.modset.moduli)),
    )


def mul(a: ResidueInt, b: ResidueInt) -> ResidueInt:
    # residues < 2^16, so each product fits in 32 bits
    _check_same(a, b)
    return ResidueInt(
        a.modset,
        tuple((u * v) % m for u, v, m in zip(a.residues, b.residues, a.modset.moduli)),
    )


def add_scalar(a: ResidueInt, k: int) -> ResidueInt:
    if k < 0:
        raise ValueError("scalar must be nonnegative")
    return ResidueInt(
        a.modset, tuple((u + k % m) % m for u, m in zip(a.residues, a.modset.moduli))
    )


def mul_scalar(a: ResidueInt, k: int) -> ResidueInt:
    if k < 0:
        raise ValueError("scalar must be nonnegative")
    return ResidueInt(
        a.modset, tuple((u * (k % m)) % m for u, m in zip(a.residues, a.modset.moduli))
    )


def eq(a: ResidueInt, b: ResidueInt) -> bool:
    _check_same(a, b)
    return a.residues == b.residues


def to_text(a: ResidueInt) -> str:
    """Canonical form ``(u1,...,uR) mod (m1,...,mR)``."""
    return "(" + ",".join(map(str, a.residues)) + ") mod " + a.modset.text()


_TEXT_RE = re.compile(r"^\(\s*([0-9,\s]+?)\s*\)\s*mod\s*\(\s*([0-9,\s]+?)\s*\)$")


def parse_text(text: str, modset: ModulusSet | None = None) -> ResidueInt:
    """Inverse of to_text.

    If ``modset`` is given, the moduli in the text must match it exactly.
    """
    match = _TEXT_RE.match(text.strip())
    if not match:
        raise ValueError(f"malformed residue text: {text!r}")
    try:
        residues = [int(x) for x in match.group(1).split(",")]
        moduli = [int(x) for x in match.group(2).split(",")]
    except ValueError:
        raise ValueError(f"malformed residue text: {text!r}") from None
    if modset is None:
        modset = new_modulus_set(moduli)
    elif tuple(moduli) != modset.moduli:
        raise ModulusMismatchError(
            f"text uses moduli ({','.join(map(str, moduli))}), expected {modset.text()}"
        )
    return from_residues(residues, modset)
