"""Discriminant-style equisingularity test and its Whitney cross-check.

For a family of space curves the test has two parts.  First, project the
surface by a pair of generic linear forms and ask whether the critical
locus of the projection (off the singular axis) is empty near the base
point; with symbolic coefficients standing for a generic projection this
reduces to checking that the Jacobian determinant is, up to its power of
t, a unit at the origin.  Second, ask that the fiber multiplicity be
constant through the base point.  Both parts are decided exactly, so the
combined verdict is always Verified or Refuted.

For these surface germs the combined test is equivalent to Whitney
regularity of the pair (smooth part, axis); :func:`equivalence_crosscheck`
runs both and reports whether the verdicts agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import INFINITY, Poly, Scalar, fresh_symbols, t_order
from .family import Parametrization
from .limits import Verdict, WhitneyJoint, whitney_check

__all__ = [
    "DegenerateSurfaceError",
    "PolarResult",
    "ZariskiResult",
    "CrosscheckResult",
    "polar_is_empty",
    "zariski_check",
    "equivalence_crosscheck",
]


class DegenerateSurfaceError(ValueError):
    """The parametrization is nowhere immersive, so no tangent data exists."""


@dataclass(frozen=True)
class PolarResult:
    """Critical locus of a generic plane projection, near the base point.

    ``vanishing_order`` is the power of t dividing the projected Jacobian;
    ``unit_at_origin`` is the cofactor's value at the base point, a nonzero
    expression in the projection coefficients exactly when the critical
    locus stays inside the axis.
    """

    empty: bool
    vanishing_order: int
    unit_at_origin: str
    cofactor_note: str

    def to_json(self) -> dict:
        return {
            "empty": self.empty,
            "vanishing_order": self.vanishing_order,
            "unit_at_origin": self.unit_at_origin,
            "note": self.cofactor_note,
        }


@dataclass(frozen=True)
class ZariskiResult:
    verdict: Verdict
    polar: PolarResult
    equimultiple: bool
    multiplicity_special: int
    multiplicity_generic: int
    basepoint: str

    def to_json(self) -> dict:
        return {
            "verdict": str(self.verdict),
            "basepoint": self.basepoint,
            "polar": self.polar.to_json(),
            "equimultiple": self.equimultiple,
            "multiplicity_special": self.multiplicity_special,
            "multiplicity_generic": self.multiplicity_generic,
        }


@dataclass(frozen=True)
class CrosscheckResult:
    """Side-by-side verdicts of the two tests.

    ``agree`` is None when the arc sweep came back Inconclusive, so there
    is nothing to compare against the always-decisive projection test.
    """

    whitney: WhitneyJoint
    zariski: ZariskiResult
    agree: bool | None

    def to_json(self) -> dict:
        return {
            "whitney": self.whitney.to_json(),
            "zariski": self.zariski.to_json(),
            "agree": self.agree,
        }


def _recenter(family: Parametrization, basepoint):
    from .limits import _prepare

    return _prepare(family, basepoint)


def polar_is_empty(family: Parametrization, basepoint=0) -> PolarResult:
    """Decide whether the generic-projection critical locus avoids a
    punctured neighborhood of the base point.

    The Jacobian of the two projected coordinates with respect to (a, t)
    expands over the 2x2 minors of the parametrization with generic
    cofactors, so it vanishes identically only for nowhere-immersive input,
    which is rejected.
    """
    fam, _, _ = _recenter(family, basepoint)
    n = fam.dim
    l_coeffs = fresh_symbols(n)
    m_coeffs = fresh_symbols(n)
    l_proj = Poly.zero(fam.entries[0].vars)
    m_proj = Poly.zero(fam.entries[0].vars)
    for c1, c2, entry in zip(l_coeffs, m_coeffs, fam.entries):
        l_proj = l_proj + entry * c1
        m_proj = m_proj + entry * c2
    jac = l_proj.diff("a") * m_proj.diff("t") - m_proj.diff("a") * l_proj.diff("t")
    if jac.is_zero():
        raise DegenerateSurfaceError(
            "projected Jacobian vanishes identically: the family is "
            "nowhere immersive")
    k = t_order(jac)
    assert k != INFINITY
    unit = jac.coeff_of("t", int(k)).constant_value()
    empty = not unit.is_zero()
    note = ("critical locus confined to the axis"
            if empty else
            "cofactor vanishes at the base point, so the critical locus "
            "meets every neighborhood off the axis")
    return PolarResult(
        empty=empty,
        vanishing_order=int(k),
        unit_at_origin=str(unit),
        cofactor_note=note,
    )


def zariski_check(family: Parametrization, basepoint=0) -> ZariskiResult:
    """Equisingularity via generic projection: empty critical locus off the
    axis plus constant fiber multiplicity.  Always decisive."""
    fam, _, label = _recenter(family, basepoint)
    polar = polar_is_empty(fam)
    equal, special, generic = fam.is_equimultiple()
    verdict = Verdict.VERIFIED if (polar.empty and equal) else Verdict.REFUTED
    return ZariskiResult(
        verdict=verdict,
        polar=polar,
        equimultiple=equal,
        multiplicity_special=special,
        multiplicity_generic=generic,
        basepoint=label,
    )


def equivalence_crosscheck(family: Parametrization, basepoint=0,
                           max_depth: int = 4) -> CrosscheckResult:
    """Run the arc sweep and the projection test on the same input."""
    wh = whitney_check(family, basepoint, max_depth)
    za = zariski_check(family, basepoint)
    if wh.verdict is Verdict.INCONCLUSIVE:
        agree = None
    else:
        agree = wh.verdict is za.verdict
    return CrosscheckResult(whitney=wh, zariski=za, agree=agree)
