"""Residue number system integers with a schoolbook bignum oracle."""

from .bignum import (
    BigUnderflowError,
    NatBig,
    big_add,
    big_divmod_small,
    big_from_decimal,
    big_mod_small,
    big_mul,
    big_sub,
    big_to_decimal,
)
from .modulus import (
    DEFAULT_MODULI,
    ModulusSet,
    NotCoprimeError,
    NotInvertibleError,
    default_modulus_set,
    extended_gcd,
    mod_inverse,
    new_modulus_set,
    parse_moduli,
)
from .reconstruct import (
    CrtTable,
    MixedRadixDigits,
    SignedBig,
    approx_float,
    crt_table,
    decode,
    decode_signed,
    from_mixed_radix,
    to_mixed_radix,
)
from .residue import (
    ModulusMismatchError,
    RangeExceededError,
    ResidueInt,
    add,
    add_scalar,
    encode,
    encode_big,
    eq,
    from_residues,
    mul,
    mul_scalar,
    parse_text,
    sub,
    to_text,
)

__version__ = "0.1.0"
