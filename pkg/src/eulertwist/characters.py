"""Dirichlet characters of odd modulus with exact root-of-unity values.

A character mod d is stored as a table of exponents: residue a maps either
to None (the value 0, exactly when gcd(a, d) > 1) or to k meaning
zeta_M^k, where M is the character's value order.  Tables are canonicalized
so M is the exact order of the character's image; the principal character
therefore always reports order 1.
"""
from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass
from fractions import Fraction

from .cyclotomic import CyclotomicNumber, cyclotomic_field
from .errors import InvalidCharacter, NotSquarefree
from .ntheory import euler_phi, factorize, is_squarefree, jacobi_symbol, primitive_root


@dataclass(frozen=True)
class DirichletCharacter:
    modulus: int
    value_order: int
    exponents: tuple  # length-modulus tuple of int exponents or None

    def exponent(self, m: int):
        return self.exponents[m % self.modulus]

    def value(self, m: int) -> CyclotomicNumber:
        """chi(m) as an exact element of Q(zeta_M); zero for non-units."""
        field = cyclotomic_field(self.value_order)
        e = self.exponent(m)
        if e is None:
            return field.zero
        return field.zeta_power(e)

    def rational_value(self, m: int) -> Fraction:
        """chi(m) in {0, 1, -1}; only for characters of value order <= 2."""
        if self.value_order > 2:
            raise ValueError("character is not rational-valued")
        e = self.exponent(m)
        if e is None:
            return Fraction(0)
        return Fraction(-1) ** e

    @property
    def is_rational_valued(self) -> bool:
        return self.value_order <= 2

    @property
    def is_principal(self) -> bool:
        return self.value_order == 1

    def conjugate(self) -> "DirichletCharacter":
        exps = tuple(
            None if e is None else (-e) % self.value_order for e in self.exponents
        )
        return DirichletCharacter(self.modulus, self.value_order, exps)

    def __mul__(self, other: "DirichletCharacter") -> "DirichletCharacter":
        if self.modulus != other.modulus:
            raise ValueError("character product needs equal moduli")
        m = math.lcm(self.value_order, other.value_order)
        exps = []
        for ea, eb in zip(self.exponents, other.exponents):
            if ea is None or eb is None:
                exps.append(None)
            else:
                exps.append((ea * (m // self.value_order) + eb * (m // other.value_order)) % m)
        order, canon = _canonical_exponents(m, tuple(exps))
        return DirichletCharacter(self.modulus, order, canon)

    def to_json(self) -> dict:
        return {
            "modulus": self.modulus,
            "order": self.value_order,
            "values": {str(a): e for a, e in enumerate(self.exponents)},
        }

    def __repr__(self) -> str:
        return f"DirichletCharacter(mod {self.modulus}, order {self.value_order})"


def _canonical_exponents(order: int, exps: tuple) -> tuple[int, tuple]:
    g = order
    for e in exps:
        if e is not None:
            g = math.gcd(g, e)
    if g == 0:
        g = 1
    return order // g, tuple(None if e is None else e // g for e in exps)


def _unit_group_exponent(d: int) -> int:
    lam = 1
    for p, e in factorize(d).items():
        lam = math.lcm(lam, (p - 1) * p ** (e - 1))
    return lam


def character_from_table(modulus: int, order: int, table) -> DirichletCharacter:
    """Validate a full value table and build the character.

    `table` maps every residue 0..modulus-1 to an exponent of zeta_order or
    to None for the value 0.  All character axioms are checked, including
    complete multiplicativity over every residue pair.
    """
    if modulus < 1 or modulus % 2 == 0:
        raise InvalidCharacter(f"modulus must be odd and positive, got {modulus}")
    if order < 1:
        raise InvalidCharacter(f"value order must be positive, got {order}")
    if set(table) != set(range(modulus)):
        raise InvalidCharacter("table must cover exactly the residues 0..d-1")
    exps = []
    for a in range(modulus):
        e = table[a]
        if math.gcd(a, modulus) > 1:
            if e is not None:
                raise InvalidCharacter(f"residue {a} shares a factor with {modulus}, value must be 0")
            exps.append(None)
        else:
            if e is None:
                raise InvalidCharacter(f"residue {a} is a unit, value must be nonzero")
            if not 0 <= e < order:
                raise InvalidCharacter(f"exponent {e} at residue {a} outside 0..{order - 1}")
            exps.append(e)
    one = 1 % modulus
    if exps[one] != 0:
        raise InvalidCharacter("value at 1 must be exactly 1")
    lam = _unit_group_exponent(modulus)
    for a in range(modulus):
        e = exps[a]
        if e is not None and e != 0 and lam % (order // math.gcd(order, e)) != 0:
            raise InvalidCharacter(f"value order at residue {a} does not divide the unit-group exponent")
    for a in range(modulus):
        for b in range(modulus):
            ea, eb = exps[a], exps[b]
            got = exps[(a * b) % modulus]
            want = None if (ea is None or eb is None) else (ea + eb) % order
            if got != want:
                raise InvalidCharacter(
                    f"multiplicativity fails at ({a}, {b})", pair=(a, b)
                )
    final_order, canon = _canonical_exponents(order, tuple(exps))
    return DirichletCharacter(modulus, final_order, canon)


def principal_character(modulus: int) -> DirichletCharacter:
    if modulus < 1 or modulus % 2 == 0:
        raise ValueError("modulus must be odd and positive")
    exps = tuple(0 if math.gcd(a, modulus) == 1 else None for a in range(modulus))
    return DirichletCharacter(modulus, 1, exps)


def quadratic_character(modulus: int) -> DirichletCharacter:
    """The Jacobi-symbol character a -> (a|d); needs odd squarefree d >= 3."""
    if modulus < 3 or modulus % 2 == 0:
        raise ValueError("quadratic character needs odd modulus >= 3")
    if not is_squarefree(modulus):
        raise NotSquarefree(f"{modulus} is not squarefree")
    exps = []
    for a in range(modulus):
        s = jacobi_symbol(a, modulus)
        exps.append(None if s == 0 else (0 if s == 1 else 1))
    return DirichletCharacter(modulus, 2, tuple(exps))


def enumerate_characters(modulus: int) -> list[DirichletCharacter]:
    """All phi(d) characters mod d, ordered lexicographically by the exponent
    tuple of their values on fixed generators of the prime-power factors."""
    if modulus < 1 or modulus % 2 == 0:
        raise ValueError("modulus must be odd and positive")
    if modulus > 10**4:
        raise ValueError("enumeration supported for moduli up to 10^4")
    if modulus == 1:
        return [DirichletCharacter(1, 1, (0,))]
    factors = sorted((p**e, euler_phi(p**e)) for p, e in factorize(modulus).items())
    logs = []
    for pk, nk in factors:
        g = primitive_root(pk)
        table = {}
        r = 1
        for idx in range(nk):
            table[r] = idx
            r = (r * g) % pk
        logs.append(table)
    group_exponent = math.lcm(*(nk for _, nk in factors))
    out = []
    for ks in itertools.product(*(range(nk) for _, nk in factors)):
        exps = []
        for a in range(modulus):
            if math.gcd(a, modulus) > 1:
                exps.append(None)
                continue
            e = 0
            for (pk, nk), table, k in zip(factors, logs, ks):
                e += k * (group_exponent // nk) * table[a % pk]
            exps.append(e % group_exponent)
        order, canon = _canonical_exponents(group_exponent, tuple(exps))
        out.append(DirichletCharacter(modulus, order, canon))
    return out


def character_from_json(doc: dict) -> DirichletCharacter:
    modulus = int(doc["modulus"])
    order = int(doc["order"])
    raw = doc["values"]
    table = {int(a): (None if e is None else int(e)) for a, e in raw.items()}
    return character_from_table(modulus, order, table)


def load_character_file(path: str) -> DirichletCharacter:
    with open(path, "r", encoding="utf-8") as fh:
        return character_from_json(json.load(fh))
