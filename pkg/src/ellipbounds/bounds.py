"""Closed-form bound families for E(r) with their sharp constants, plus a
best-enclosure combiner.

Five families are implemented:

* ``vuorinen``  lower bound (pi/2) ((1 + r'^(3/2)) / 2)^(2/3)
* ``barnard``   upper bound (pi/2) ((1 + r'^2) / 2)^(1/2)
* ``alzer-qiu`` upper bound (pi/4) (sqrt(1 - a r^2) + sqrt(1 - b r^2))
* ``thm11``     two-square-root family, parameter q in (0, 1/2]
* ``thm12``     blended contraharmonic/arithmetic family, parameters
  t in [1/2, 1] and p in [1/2, 2]; ``cor31-lower``/``cor31-upper`` are its
  fixed-constant instances (t, p) = (lambda*, 2) and (mu*, 1/2)

A parametric family is a valid lower or upper bound only on one side of its
sharp constant; ``BoundSpec.side`` classifies with the non-strict
comparisons under which the constants are sharp.

Sharp constants (30-digit reference values, from scripts/print_sharp_constants.py):

=============  ==================================  ================================
name           closed form                         value
=============  ==================================  ================================
BETA_STAR      1/2 - 2 sqrt(2 (pi^2 - 8)) / pi^2   0.108149767335905848073816460112
ALPHA_STAR     1/2 - sqrt(2)/4                     0.146446609406726237799577818948
ALZER_ALPHA    1/2 - sqrt(2)/4                     0.146446609406726237799577818948
ALZER_BETA     1/2 + sqrt(2)/4                     0.853553390593273762200422181052
LAMBDA_STAR    1/2 + sqrt(2)/8                     0.676776695296636881100211090526
MU_STAR        1/2 + sqrt((4/pi)^2 - 1)/2          0.894061841046999989493157818631
=============  ==================================  ================================
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .core import HALF_PI, MeanPair, Modulus, as_modulus
from .errors import ConfigurationError, DomainError, InvalidBoundError

__all__ = [
    "BETA_STAR",
    "ALPHA_STAR",
    "ALZER_ALPHA",
    "ALZER_BETA",
    "LAMBDA_STAR",
    "MU_STAR",
    "SharpConstants",
    "SHARP",
    "Side",
    "Family",
    "BoundSpec",
    "Enclosure",
    "thm12_lower_threshold",
    "thm12_upper_threshold",
    "vuorinen_lower",
    "barnard_upper",
    "alzer_qiu_upper",
    "thm11_bound",
    "thm12_bound",
    "corollary31",
    "q_mean",
    "best_enclosure",
    "default_candidates",
    "parse_bound_spec",
]

_PI = math.pi

BETA_STAR = 0.5 - 2.0 * math.sqrt(2.0 * (_PI * _PI - 8.0)) / (_PI * _PI)
ALPHA_STAR = 0.5 - math.sqrt(2.0) / 4.0
ALZER_ALPHA = 0.5 - math.sqrt(2.0) / 4.0
ALZER_BETA = 0.5 + math.sqrt(2.0) / 4.0
LAMBDA_STAR = 0.5 + math.sqrt(2.0) / 8.0
MU_STAR = 0.5 + math.sqrt((4.0 / _PI) ** 2 - 1.0) / 2.0


@dataclass(frozen=True)
class SharpConstants:
    """The named sharp constants, bundled for introspection."""

    beta_star: float = BETA_STAR
    alpha_star: float = ALPHA_STAR
    lambda_star: float = LAMBDA_STAR
    mu_star: float = MU_STAR
    alzer_alpha: float = ALZER_ALPHA
    alzer_beta: float = ALZER_BETA


SHARP = SharpConstants()

_SYMBOLIC = {
    "beta_star": BETA_STAR,
    "alpha_star": ALPHA_STAR,
    "lambda_star": LAMBDA_STAR,
    "mu_star": MU_STAR,
}


def thm12_lower_threshold(p: float) -> float:
    """Largest t for which the t-parametrised family is a lower bound."""
    return 0.5 + math.sqrt(1.0 / (4.0 * p)) / 2.0


def thm12_upper_threshold(p: float) -> float:
    """Smallest t for which the t-parametrised family is an upper bound."""
    return 0.5 + math.sqrt((4.0 / _PI) ** (1.0 / p) - 1.0) / 2.0


def _open_modulus(m: Modulus | float) -> Modulus:
    m = as_modulus(m)
    if not (0.0 < m.r < 1.0):
        raise DomainError(
            f"bound functions are defined on the open interval (0, 1), got r={m.r!r}; "
            "use the analytic limit values at the endpoints"
        )
    return m


def vuorinen_lower(m: Modulus | float) -> float:
    """Lower bound (pi/2) ((1 + r'^(3/2)) / 2)^(2/3); tends to 2^(-5/3) pi
    as r -> 1."""
    m = _open_modulus(m)
    return HALF_PI * ((1.0 + m.r_comp**1.5) / 2.0) ** (2.0 / 3.0)


def barnard_upper(m: Modulus | float) -> float:
    """Upper bound (pi/2) ((1 + r'^2) / 2)^(1/2)."""
    m = _open_modulus(m)
    rc2 = m.r_comp * m.r_comp
    return HALF_PI * math.sqrt((1.0 + rc2) / 2.0)


def alzer_qiu_upper(m: Modulus | float) -> float:
    """Upper bound (pi/4) (sqrt(1 - a r^2) + sqrt(1 - b r^2)) with
    a = 1/2 - sqrt(2)/4 and b = 1/2 + sqrt(2)/4."""
    m = _open_modulus(m)
    r2 = m.r * m.r
    return _PI / 4.0 * (math.sqrt(1.0 - ALZER_ALPHA * r2) + math.sqrt(1.0 - ALZER_BETA * r2))


def thm11_bound(m: Modulus | float, q: float) -> float:
    """The two-square-root family
    (pi/4) (sqrt(q + (1-q) r'^2) + sqrt((1-q) + q r'^2)) for q in (0, 1/2].

    Lower bound of E iff q <= BETA_STAR, upper bound iff q >= ALPHA_STAR.
    """
    m = _open_modulus(m)
    q = float(q)
    if not (0.0 < q <= 0.5):
        raise DomainError(f"q must lie in (0, 1/2], got {q!r}")
    rc2 = m.r_comp * m.r_comp
    return _PI / 4.0 * (math.sqrt(q + (1.0 - q) * rc2) + math.sqrt((1.0 - q) + q * rc2))


def thm12_bound(m: Modulus | float, t: float, p: float) -> float:
    """The blended-mean family
    2^(p-2) pi (1 + r')^(1-2p) ([t + (1-t) r']^2 + [(1-t) + t r']^2)^p
    for t in [1/2, 1], p in [1/2, 2].

    Lower bound of E iff t <= thm12_lower_threshold(p), upper bound iff
    t >= thm12_upper_threshold(p).
    """
    m = _open_modulus(m)
    t, p = float(t), float(p)
    if not (0.5 <= t <= 1.0):
        raise DomainError(f"t must lie in [1/2, 1], got {t!r}")
    if not (0.5 <= p <= 2.0):
        raise DomainError(f"p must lie in [1/2, 2], got {p!r}")
    rc = m.r_comp
    x = t + (1.0 - t) * rc
    y = (1.0 - t) + t * rc
    return 2.0 ** (p - 2.0) * _PI * (1.0 + rc) ** (1.0 - 2.0 * p) * (x * x + y * y) ** p


class Side(Enum):
    LOWER = "lower"
    UPPER = "upper"
    INVALID = "invalid"


class Family(Enum):
    VUORINEN = "vuorinen"
    BARNARD = "barnard"
    ALZER_QIU = "alzer-qiu"
    THM11 = "thm11"
    THM12 = "thm12"
    COR31_LOWER = "cor31-lower"
    COR31_UPPER = "cor31-upper"


_FIXED_SIDES = {
    Family.VUORINEN: Side.LOWER,
    Family.BARNARD: Side.UPPER,
    Family.ALZER_QIU: Side.UPPER,
    Family.COR31_LOWER: Side.LOWER,
    Family.COR31_UPPER: Side.UPPER,
}


@dataclass(frozen=True)
class BoundSpec:
    """One bound family plus its parameters.

    ``side`` classifies against the sharp constants with the non-strict
    inequalities under which they are stated; parameters strictly between
    the two thresholds give Side.INVALID.
    """

    family: Family
    q: float | None = None
    t: float | None = None
    p: float | None = None

    def __post_init__(self) -> None:
        if self.family is Family.THM11:
            if self.q is None:
                raise ConfigurationError("thm11 needs parameter q")
            if not (0.0 < self.q <= 0.5):
                raise DomainError(f"thm11 q must lie in (0, 1/2], got {self.q!r}")
        elif self.family is Family.THM12:
            if self.t is None or self.p is None:
                raise ConfigurationError("thm12 needs parameters t and p")
            if not (0.5 <= self.t <= 1.0):
                raise DomainError(f"thm12 t must lie in [1/2, 1], got {self.t!r}")
            if not (0.5 <= self.p <= 2.0):
                raise DomainError(f"thm12 p must lie in [1/2, 2], got {self.p!r}")
        elif self.q is not None or self.t is not None or self.p is not None:
            raise ConfigurationError(f"{self.family.value} takes no parameters")

    @property
    def side(self) -> Side:
        if self.family in _FIXED_SIDES:
            return _FIXED_SIDES[self.family]
        if self.family is Family.THM11:
            if self.q <= BETA_STAR:
                return Side.LOWER
            if self.q >= ALPHA_STAR:
                return Side.UPPER
            return Side.INVALID
        if self.q is not None:
            raise ConfigurationError(f"unclassifiable spec {self!r}")
        if self.t <= thm12_lower_threshold(self.p):
            return Side.LOWER
        if self.t >= thm12_upper_threshold(self.p):
            return Side.UPPER
        return Side.INVALID

    @property
    def label(self) -> str:
        if self.family is Family.THM11:
            return f"thm11:q={self.q:.17g}"
        if self.family is Family.THM12:
            return f"thm12:t={self.t:.17g},p={self.p:.17g}"
        return self.family.value

    def evaluate(self, m: Modulus | float) -> float:
        m = _open_modulus(m)
        fam = self.family
        if fam is Family.VUORINEN:
            return vuorinen_lower(m)
        if fam is Family.BARNARD:
            return barnard_upper(m)
        if fam is Family.ALZER_QIU:
            return alzer_qiu_upper(m)
        if fam is Family.THM11:
            return thm11_bound(m, self.q)
        if fam is Family.THM12:
            return thm12_bound(m, self.t, self.p)
        if fam is Family.COR31_LOWER:
            return thm12_bound(m, LAMBDA_STAR, 2.0)
        return thm12_bound(m, MU_STAR, 0.5)


@dataclass(frozen=True)
class Enclosure:
    """A certified interval lo <= E(r) <= hi with the specs that produced
    each endpoint.  In exact arithmetic lo <= hi whenever the sources are
    valid bounds; in floats the two can cross at ulp level where both sides
    collapse onto E (r near 0)."""

    lo: float
    hi: float
    lo_source: BoundSpec
    hi_source: BoundSpec

    @property
    def width(self) -> float:
        return self.hi - self.lo


def corollary31(m: Modulus | float) -> Enclosure:
    """The fixed-constant enclosure: lower bound at (t, p) = (lambda*, 2),
    upper bound at (mu*, 1/2)."""
    m = _open_modulus(m)
    lo_spec = BoundSpec(Family.COR31_LOWER)
    hi_spec = BoundSpec(Family.COR31_UPPER)
    return Enclosure(
        lo=lo_spec.evaluate(m),
        hi=hi_spec.evaluate(m),
        lo_source=lo_spec,
        hi_source=hi_spec,
    )


def q_mean(a: float, b: float, t: float, p: float) -> float:
    """The mean C^p(t a + (1-t) b, t b + (1-t) a) * A^(1-p)(a, b), with
    A the arithmetic and C the contraharmonic mean.

    Symmetric, homogeneous of degree one, equal to A at t = 1/2, and
    strictly increasing in t on [1/2, 1] for a != b.
    """
    pair = MeanPair(a, b)
    t, p = float(t), float(p)
    if not (0.5 <= t <= 1.0):
        raise DomainError(f"t must lie in [1/2, 1], got {t!r}")
    if not (0.5 <= p <= 2.0):
        raise DomainError(f"p must lie in [1/2, 2], got {p!r}")
    x = t * pair.a + (1.0 - t) * pair.b
    y = t * pair.b + (1.0 - t) * pair.a
    arith = 0.5 * (pair.a + pair.b)
    contra = (x * x + y * y) / (x + y)
    return contra**p * arith ** (1.0 - p)


def default_candidates() -> list[BoundSpec]:
    """Every family at its sharp constants: the three classical bounds,
    thm11 at both thresholds, thm12 at both thresholds for p in
    {1/2, 1, 2}, and the two fixed-constant instances."""
    specs = [
        BoundSpec(Family.VUORINEN),
        BoundSpec(Family.BARNARD),
        BoundSpec(Family.ALZER_QIU),
        BoundSpec(Family.THM11, q=BETA_STAR),
        BoundSpec(Family.THM11, q=ALPHA_STAR),
    ]
    for p in (0.5, 1.0, 2.0):
        specs.append(BoundSpec(Family.THM12, t=thm12_lower_threshold(p), p=p))
        specs.append(BoundSpec(Family.THM12, t=thm12_upper_threshold(p), p=p))
    specs.append(BoundSpec(Family.COR31_LOWER))
    specs.append(BoundSpec(Family.COR31_UPPER))
    return specs


def best_enclosure(m: Modulus | float, candidates: list[BoundSpec]) -> Enclosure:
    """Tightest enclosure over the candidate specs: max of the lower bounds,
    min of the upper bounds, with the winning spec recorded per side."""
    m = _open_modulus(m)
    if not candidates:
        raise ConfigurationError("no candidate bounds given")
    lowers: list[tuple[float, BoundSpec]] = []
    uppers: list[tuple[float, BoundSpec]] = []
    for spec in candidates:
        side = spec.side
        if side is Side.INVALID:
            raise InvalidBoundError(
                f"{spec.label} lies on neither valid side of its sharp constants: "
                + _sharpness_hint(spec)
            )
        value = spec.evaluate(m)
        (lowers if side is Side.LOWER else uppers).append((value, spec))
    if not lowers:
        raise ConfigurationError("candidate list has no lower bound")
    if not uppers:
        raise ConfigurationError("candidate list has no upper bound")
    lo, lo_spec = max(lowers, key=lambda pair: pair[0])
    hi, hi_spec = min(uppers, key=lambda pair: pair[0])
    return Enclosure(lo=lo, hi=hi, lo_source=lo_spec, hi_source=hi_spec)


def _sharpness_hint(spec: BoundSpec) -> str:
    if spec.family is Family.THM11:
        return (
            f"q={spec.q:.17g} is inside the gap (beta_star={BETA_STAR:.17g}, "
            f"alpha_star={ALPHA_STAR:.17g}); q <= beta_star gives a lower bound, "
            "q >= alpha_star an upper bound"
        )
    return (
        f"t={spec.t:.17g} is inside the gap ({thm12_lower_threshold(spec.p):.17g}, "
        f"{thm12_upper_threshold(spec.p):.17g}) for p={spec.p:.17g}"
    )


def _parse_params(text: str, where: str) -> dict[str, float]:
    params: dict[str, float] = {}
    for item in text.split(","):
        if "=" not in item:
            raise ConfigurationError(f"bad parameter {item!r} in {where!r}; expected name=value")
        key, _, raw = item.partition("=")
        key = key.strip()
        raw = raw.strip()
        if raw in _SYMBOLIC:
            params[key] = _SYMBOLIC[raw]
        else:
            try:
                params[key] = float(raw)
            except ValueError:
                raise ConfigurationError(f"bad value {raw!r} for {key!r} in {where!r}") from None
    return params


def parse_bound_spec(text: str) -> BoundSpec:
    """Parse the family mini-grammar ``name[:param=value[,param=value]]``.

    Recognised names: vuorinen, barnard, alzer-qiu, thm11, thm11-lower,
    thm11-upper, thm12, thm12-lower, thm12-upper, cor31-lower, cor31-upper.
    Values may be numeric or one of the symbolic constants beta_star,
    alpha_star, lambda_star, mu_star.  The -lower/-upper aliases default the
    missing parameter to the matching sharp constant and reject parameters
    that classify on the other side.
    """
    name, _, rest = text.strip().partition(":")
    name = name.strip().lower()
    params = _parse_params(rest, text) if rest else {}

    def reject_extra(allowed: set[str]) -> None:
        extra = set(params) - allowed
        if extra:
            raise ConfigurationError(f"unknown parameter(s) {sorted(extra)} for {name!r}")

    if name in ("vuorinen", "barnard", "alzer-qiu", "cor31-lower", "cor31-upper"):
        reject_extra(set())
        return BoundSpec(Family(name))
    if name in ("thm11", "thm11-lower", "thm11-upper"):
        reject_extra({"q"})
        if name == "thm11":
            if "q" not in params:
                raise ConfigurationError("thm11 needs q, e.g. thm11:q=0.1")
            return BoundSpec(Family.THM11, q=params["q"])
        want = Side.LOWER if name.endswith("lower") else Side.UPPER
        q = params.get("q", BETA_STAR if want is Side.LOWER else ALPHA_STAR)
        spec = BoundSpec(Family.THM11, q=q)
        if spec.side is not want:
            raise InvalidBoundError(
                f"{text!r}: q={q:.17g} does not give a {want.value} bound; " + _sharpness_hint(spec)
            )
        return spec
    if name in ("thm12", "thm12-lower", "thm12-upper"):
        reject_extra({"t", "p"})
        if "p" not in params:
            raise ConfigurationError(f"{name} needs p in [1/2, 2]")
        p = params["p"]
        if name == "thm12":
            if "t" not in params:
                raise ConfigurationError("thm12 needs t, e.g. thm12:t=0.85,p=2")
            return BoundSpec(Family.THM12, t=params["t"], p=p)
        want = Side.LOWER if name.endswith("lower") else Side.UPPER
        default_t = thm12_lower_threshold(p) if want is Side.LOWER else thm12_upper_threshold(p)
        t = params.get("t", default_t)
        spec = BoundSpec(Family.THM12, t=t, p=p)
        if spec.side is not want:
            raise InvalidBoundError(
                f"{text!r}: t={t:.17g} does not give a {want.value} bound; " + _sharpness_hint(spec)
            )
        return spec
    raise ConfigurationError(f"unknown bound family {name!r}")
