"""Published asymptotic forms of the edge densities and gap distribution.

These are the limiting expressions quoted for the soft-edge observables; they
are kept separate from the exact engine so simulated or exact curves can be
compared against them as overlays.  The exponential forms without a known
prefactor are returned with unit amplitude.
"""

from __future__ import annotations

import math

__all__ = [
    "A4_GAP",
    "GAP_TAIL_AMPLITUDE",
    "GLAISHER",
    "ZETA_PRIME_MINUS_ONE",
    "UnsupportedAsymptote",
    "asymptote",
    "KINDS",
]

#: Glaisher-Kinkelin constant; ties the zeta derivative at -1 to a closed form
#: through zeta'(-1) = 1/12 - ln(GLAISHER).
GLAISHER = 1.2824271291006226369

ZETA_PRIME_MINUS_ONE = 1.0 / 12.0 - math.log(GLAISHER)

#: Prefactor of the full beta = 2 gap right tail: 2^{-91/48} e^{zeta'(-1)} / sqrt(pi).
GAP_TAIL_AMPLITUDE = 2.0 ** (-91.0 / 48.0) * math.exp(ZETA_PRIME_MINUS_ONE) / math.sqrt(math.pi)

#: Published quartic coefficient of the small-gap expansion at beta = 2.  Note
#: the exact integral engine (scaling.p_typ_exact) yields -0.19679, exactly
#: half this value, and Monte Carlo sides with the engine; see the README.
A4_GAP = -0.393575


class UnsupportedAsymptote(ValueError):
    """No published formula exists for this (kind, beta) combination."""


KINDS = (
    "edge-density-left",
    "edge-density-right",
    "dos-small",
    "dos-large",
    "gap-small",
    "gap-large-leading",
    "gap-large-full",
)


def asymptote(kind: str, beta: float, argument: float) -> float:
    """Evaluate one published asymptotic expression.

    kind:
      edge-density-left   sqrt(-x)/pi as x -> -inf (any beta)
      edge-density-right  exp(-(2 beta/3) x^{3/2}), unit amplitude
      dos-small           amplitude * r^beta; the amplitude is only known for
                          beta = 2 (1/2), other beta raise UnsupportedAsymptote
      dos-large           sqrt(r)/pi (any beta)
      gap-small           beta = 2 two-term form r^2/2 + A4_GAP r^4
      gap-large-leading   exp(-(2 beta/3) r^{3/2}), unit amplitude
      gap-large-full      beta = 2 only: the full tail
                          A exp(-(4/3) r^{3/2} + (8/3) sqrt(2) r^{3/4})
                            * r^{-21/32} (1 - (1405 sqrt(2)/1536) r^{-3/4})
    """
    x = float(argument)
    if kind == "edge-density-left":
        if x > 0:
            raise ValueError("left-tail form needs x <= 0")
        return math.sqrt(-x) / math.pi
    if kind == "edge-density-right":
        return math.exp(-(2.0 * beta / 3.0) * x**1.5)
    if kind == "dos-small":
        if beta != 2:
            raise UnsupportedAsymptote(
                "only the exponent beta of the small-r DOS onset is predicted "
                "for beta != 2; the amplitude has a closed value only at beta = 2")
        return 0.5 * x * x
    if kind == "dos-large":
        return math.sqrt(x) / math.pi
    if kind == "gap-small":
        if beta != 2:
            raise UnsupportedAsymptote(
                "only the exponent beta of the small-gap onset is predicted "
                "for beta != 2")
        return 0.5 * x * x + A4_GAP * x**4
    if kind == "gap-large-leading":
        return math.exp(-(2.0 * beta / 3.0) * x**1.5)
    if kind == "gap-large-full":
        if beta != 2:
            raise UnsupportedAsymptote("the full gap tail is known for beta = 2 only")
        return (GAP_TAIL_AMPLITUDE
                * math.exp(-(4.0 / 3.0) * x**1.5 + (8.0 / 3.0) * math.sqrt(2.0) * x**0.75)
                * x ** (-21.0 / 32.0)
                * (1.0 - (1405.0 * math.sqrt(2.0) / 1536.0) * x ** (-0.75)))
    raise ValueError(f"unknown asymptote kind {kind!r}; valid kinds: {KINDS}")
