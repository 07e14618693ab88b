"""Twisted Eulerian polynomial values over cyclotomic fields.

Everything here evaluates the family A_n attached to a character chi mod d,
a root-of-unity twist, and a rational q: once as Taylor coefficients of its
generating function (the canonical definition, kernel exponent d-l+1), once
through the regrouped alternating series in closed form.  The two paths are
algebraically independent and must agree exactly; the links back to the
integral world hold up to the constant factor q^2, which is computed, never
assumed.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .characters import DirichletCharacter
from .cyclotomic import (
    CyclotomicField,
    CyclotomicNumber,
    cyclotomic_field,
    galois_conjugate,
    lift_to_field,
)
from .errors import InternalInconsistency, ResidualUndefined, SingularFunctionalEquation
from .eulerian import periodic_power_sum
from .fermionic import EqualityReport, IntegralSpec, char_twist_integral, poly_twist_integral
from .rationals import q_bracket_neg
from .series import TruncatedSeries, exp_linear, nth_taylor_coefficient

PATH_GENERATING_FUNCTION = "generating_function"
PATH_SERIES_CLOSED_FORM = "series_closed_form"


@dataclass(frozen=True)
class TwistedConfig:
    """One parameter point: character, twist zeta of odd order, rational q,
    all realized inside the ambient field Q(zeta_lcm(order, value order))."""

    char: DirichletCharacter
    zeta_order: int
    zeta_exponent: int
    q: Fraction
    field: CyclotomicField
    zeta: CyclotomicNumber
    char_values: tuple  # chi(a) lifted to the ambient field, indexed by residue

    @staticmethod
    def build(
        char: DirichletCharacter, zeta_order: int, zeta_exponent: int, q
    ) -> "TwistedConfig":
        q = Fraction(q)
        if q == 0 or q == -1:
            raise ValueError("q must avoid 0 and -1")
        if zeta_order < 1 or zeta_order % 2 == 0:
            raise ValueError("twist order must be odd and positive")
        ambient = math.lcm(zeta_order, char.value_order)
        field = cyclotomic_field(ambient)
        zeta = field.zeta_power((zeta_exponent % zeta_order) * (ambient // zeta_order))
        values = tuple(
            lift_to_field(char.value(a), field) for a in range(char.modulus)
        )
        cfg = TwistedConfig(
            char=char, zeta_order=zeta_order, zeta_exponent=zeta_exponent % zeta_order,
            q=q, field=field, zeta=zeta, char_values=values,
        )
        if (cfg.zeta_pow(char.modulus) + field.from_rational(q**char.modulus)).is_zero():
            raise SingularFunctionalEquation("twist^d + q^d vanishes")
        return cfg

    def zeta_pow(self, m: int) -> CyclotomicNumber:
        base = (self.zeta_exponent % self.zeta_order) * (self.field.order // self.zeta_order)
        return self.field.zeta_power(base * (m % self.zeta_order))

    def char_value(self, m: int) -> CyclotomicNumber:
        return self.char_values[m % self.char.modulus]

    def conjugate(self) -> "TwistedConfig":
        return TwistedConfig.build(
            self.char.conjugate(),
            self.zeta_order,
            (-self.zeta_exponent) % self.zeta_order,
            self.q,
        )

    def describe(self) -> str:
        return (
            f"d={self.char.modulus} chi_order={self.char.value_order} "
            f"zeta={self.zeta_order}^{self.zeta_exponent} q={self.q}"
        )


@dataclass(frozen=True)
class TwistedValue:
    n: int
    value: CyclotomicNumber
    paths: dict

    def __post_init__(self):
        vals = list(self.paths.values())
        if any(v != vals[0] for v in vals[1:]):
            raise InternalInconsistency(f"evaluation paths disagree at n={self.n}: {self.paths}")


def twisted_gf(cfg: TwistedConfig, order: int) -> TruncatedSeries:
    """The generating function expanded to the requested order over the
    ambient field: (1+q) * sum_{l<d} (-1)^l q^(d-l+1) zeta^l chi(l)
    exp(-l(1+q)t) divided by (zeta^d exp(-d(1+q)t) + q^d)."""
    if order < 1:
        raise ValueError("series order must be >= 1")
    q, d, field = cfg.q, cfg.char.modulus, cfg.field
    denom_const = cfg.zeta_pow(d) + field.from_rational(q**d)
    if denom_const.is_zero():
        raise SingularFunctionalEquation("twist^d + q^d vanishes")
    numerator = TruncatedSeries.constant(field.zero, order)
    for l in range(d):
        chi_l = cfg.char_value(l)
        if chi_l.is_zero():
            continue
        scalar = ((-1) ** l * q ** (d - l + 1)) * (chi_l * cfg.zeta_pow(l))
        numerator = numerator + exp_linear(-l * (1 + q), order).scale(scalar)
    denominator = exp_linear(-d * (1 + q), order).scale(cfg.zeta_pow(d)) + TruncatedSeries.constant(
        field.from_rational(q**d), order
    )
    return numerator.scale(field.from_rational(1 + q)) * denominator.inverse()


def alternating_char_sum(cfg: TwistedConfig, n: int) -> CyclotomicNumber:
    """Closed form of sum_{m>=1} (-1)^m zeta^m chi(m) m^n (1/q)^m, exact.

    The coefficient is periodic with period lcm(2, d, twist order), so the
    sum regroups into the rational power-sum closed forms."""
    period = math.lcm(2, cfg.char.modulus, cfg.zeta_order)
    cycle = []
    for m in range(1, period + 1):
        sign = -1 if m % 2 else 1
        cycle.append(sign * (cfg.char_value(m) * cfg.zeta_pow(m)))
    return periodic_power_sum(cycle, n, 1 / cfg.q)


def twisted_series_value(cfg: TwistedConfig, n: int) -> CyclotomicNumber:
    """A_n through the alternating series: (-1)^n q (1+q)^(n+1) times the
    closed-form sum, plus the index-0 summand q(1+q) chi(0), which survives
    only at n = 0 (and is nonzero only for modulus 1)."""
    q = cfg.q
    total = ((-1) ** n * q * (1 + q) ** (n + 1)) * alternating_char_sum(cfg, n)
    if n == 0:
        total = total + (q * (1 + q)) * cfg.char_value(0)
    return total


def twisted_values(cfg: TwistedConfig, n_max: int) -> list[TwistedValue]:
    """A_0 .. A_{n_max} with every available evaluation path recorded; the
    series path exists whenever q != 1 (1/q must avoid roots of unity)."""
    gf = twisted_gf(cfg, n_max + 1)
    out = []
    for n in range(n_max + 1):
        paths = {PATH_GENERATING_FUNCTION: nth_taylor_coefficient(gf, n)}
        if cfg.q != 1:
            paths[PATH_SERIES_CLOSED_FORM] = twisted_series_value(cfg, n)
        out.append(TwistedValue(n=n, value=paths[PATH_GENERATING_FUNCTION], paths=paths))
    return out


def twisted_value(cfg: TwistedConfig, n: int) -> TwistedValue:
    return twisted_values(cfg, n)[n]


def twisted_euler(n: int, zeta_eff, shift):
    """The twisted Euler polynomial value E_n(shift) for twist zeta_eff:
    the alternating integral moment at measure parameter 1."""
    return poly_twist_integral(IntegralSpec(n=n, shift=shift, twist=zeta_eff, ratio=Fraction(1)))


@dataclass(frozen=True)
class EulerGfReport:
    folded: TruncatedSeries
    direct: TruncatedSeries
    series_equal: bool
    moments_equal: bool

    @property
    def passed(self) -> bool:
        return self.series_equal and self.moments_equal


def euler_gf_consistency(d_fold: int, zeta_eff, order: int) -> EulerGfReport:
    """Telescoping of the d-fold twisted Euler generating function
    2 sum_{l<d} (-1)^l zeta^l e^(lt) / (zeta^d e^(dt) + 1) down to
    2/(zeta e^t + 1), plus agreement of its Taylor coefficients with the
    integral moments."""
    if d_fold < 1 or d_fold % 2 == 0:
        raise ValueError("the fold count must be odd")
    one = zeta_eff**0
    numerator = TruncatedSeries.constant(one * 0, order)
    for l in range(d_fold):
        scalar = zeta_eff**l if l % 2 == 0 else -(zeta_eff**l)
        numerator = numerator + exp_linear(Fraction(l), order).scale(scalar)
    folded_denom = exp_linear(Fraction(d_fold), order).scale(zeta_eff**d_fold) + TruncatedSeries.constant(one, order)
    folded = numerator.scale(2 * one) * folded_denom.inverse()
    direct_denom = exp_linear(Fraction(1), order).scale(zeta_eff) + TruncatedSeries.constant(one, order)
    direct = TruncatedSeries.constant(2 * one, order) * direct_denom.inverse()
    moments_equal = all(
        nth_taylor_coefficient(direct, n) == twisted_euler(n, zeta_eff, 0)
        for n in range(order)
    )
    return EulerGfReport(
        folded=folded, direct=direct,
        series_equal=folded == direct, moments_equal=moments_equal,
    )


def witt_residual(cfg: TwistedConfig, n: int) -> CyclotomicNumber:
    """Ratio of A_n to (-1)^n (1+q)^n I(zeta^x chi(x) x^n): the constant q^2,
    the gap between the d-l+1 kernel and the iterated d-1-l kernel."""
    integral = char_twist_integral(n, cfg.char, cfg.zeta, cfg.q)
    denom = ((-1) ** n * (1 + cfg.q) ** n) * integral
    if denom == 0:
        raise ResidualUndefined(f"integral moment vanishes at n={n}")
    return twisted_value(cfg, n).value * denom ** (-1)


def multiplication_residual(cfg: TwistedConfig, n: int) -> CyclotomicNumber:
    """Ratio of (-1)^n A_n/(1+q)^n to the residue-class decomposition
    d^n/[d]_alt * sum_a (-1)^a chi(a) zeta^a q^-a I((a/d + x)^n zeta^(dx));
    again the constant q^2, through an independent route."""
    q, d = cfg.q, cfg.char.modulus
    acc = None
    zeta_d = cfg.zeta_pow(d)
    for a in range(d):
        chi_a = cfg.char_value(a)
        if chi_a.is_zero():
            continue
        inner = poly_twist_integral(
            IntegralSpec(n=n, shift=Fraction(a, d), twist=zeta_d, ratio=q**-d)
        )
        term = ((-1) ** a * q**-a) * (chi_a * cfg.zeta_pow(a)) * inner
        acc = term if acc is None else acc + term
    if acc is None or acc.is_zero():
        raise ResidualUndefined(f"decomposition sum vanishes at n={n}")
    rhs = Fraction(d**n) / q_bracket_neg(d, 1 / q) * acc
    lhs = ((-1) ** n * (1 + q) ** -n) * twisted_value(cfg, n).value
    return lhs * rhs ** (-1)


def euler_reduction_check(
    char: DirichletCharacter, zeta_order: int, zeta_exponent: int, n: int
) -> EqualityReport:
    """At q = 1 the multiplication identity is exact: A_n at -1 must equal
    (-2d)^n sum_a (-1)^a chi(a) zeta^a E_n(a/d) with twist zeta^d."""
    cfg = TwistedConfig.build(char, zeta_order, zeta_exponent, Fraction(1))
    d = char.modulus
    lhs = twisted_value(cfg, n).value
    zeta_d = cfg.zeta_pow(d)
    acc = None
    for a in range(d):
        chi_a = cfg.char_value(a)
        if chi_a.is_zero():
            continue
        euler_val = twisted_euler(n, zeta_d, Fraction(a, d))
        term = ((-1) ** a) * (chi_a * cfg.zeta_pow(a)) * euler_val
        acc = term if acc is None else acc + term
    if acc is None:
        acc = cfg.field.zero
    rhs = Fraction(-2 * d) ** n * acc
    return EqualityReport(lhs, rhs)


def conjugated_value(cfg: TwistedConfig, n: int) -> CyclotomicNumber:
    """Image of A_n under the automorphism zeta_L -> zeta_L^(-1); equals the
    value computed from the conjugated character and twist."""
    value = twisted_value(cfg, n).value
    return galois_conjugate(value, cfg.field.order - 1) if cfg.field.order > 1 else value
