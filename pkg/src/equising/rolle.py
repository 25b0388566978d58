"""Critical-point separation certificates for polynomial maps on a fiber.

Given a scalar polynomial map restricted to one fiber curve, the composed
univariate polynomial p(t) either has at most one distinct root or its
derivative must vanish somewhere off the root set: p' has degree d - 1,
and roots of p can absorb at most d - n of them (a root of multiplicity k
is a root of p' of multiplicity exactly k - 1), so n >= 2 distinct roots
force a critical point that is not a root.  The certificate carries the
exact cofactor of the derivative whose roots are those free critical
points, plus one numerically verified representative.

All symbolic work is exact over the rationals; floating point enters only
when confirming the approximate witness point.  Two checks run there: the
derivative residual must stay below DERIV_TOL relative to the derivative's
coefficient magnitude at the point, and the point must keep a distance of
more than VALUE_TOL (relative to its own magnitude) from the numerically
recovered roots of the exact squarefree part, which are the zero fiber.
Measuring separation as a distance in the parameter line rather than as a
value of p keeps the check meaningful for maps with multiple roots, whose
critical values can be tiny against the coefficient bulk.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Sequence

import numpy

from .algebra import Poly, Scalar, parse_poly
from .family import Parametrization

__all__ = [
    "ConstantMapError",
    "RolleCertificate",
    "rolle_witness",
    "rolle_for_map",
    "rolle_for_curve",
    "hurwitz_count",
    "load_curve",
]

DERIV_TOL = 1e-8
VALUE_TOL = 1e-4


class ConstantMapError(ValueError):
    """The composed map has no nonconstant part to certify."""


# -- dense univariate arithmetic over Fraction, index = degree --------------

def _trim(c: list[Fraction]) -> list[Fraction]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _deg(c: Sequence[Fraction]) -> int:
    return len(c) - 1


def _deriv(c: Sequence[Fraction]) -> list[Fraction]:
    return _trim([c[i] * i for i in range(1, len(c))])


def _divmod(a: Sequence[Fraction], b: Sequence[Fraction]):
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    db, lead = _deg(b), b[-1]
    while r and _deg(r) >= db:
        k = _deg(r) - db
        f = r[-1] / lead
        q[k] = f
        for i in range(len(b)):
            r[i + k] -= f * b[i]
        _trim(r)
    return _trim(q), r


def _gcd(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _divmod(a, b)[1]
    if a:
        lead = a[-1]
        a = [x / lead for x in a]
    return a


def _eval_complex(c: Sequence[Fraction], z: complex) -> complex:
    out = 0j
    for coeff in reversed(c):
        out = out * z + float(coeff)
    return out


def _residual_scale(c: Sequence[Fraction], z: complex) -> float:
    """Coefficient-size bound used to make the derivative residual relative."""
    radius = max(1.0, abs(z))
    return sum(abs(float(x)) for x in c) * radius ** _deg(c)


def _render(c: Sequence[Fraction]) -> str:
    terms = {(i,): Scalar.from_fraction(x) for i, x in enumerate(c) if x}
    return Poly(("t",), terms).grammar_str() if terms else "0"


@dataclass(frozen=True)
class RolleCertificate:
    """Exact root-count bookkeeping plus one checked critical point.

    ``witness_needed`` is the comparison derivative_degree > shared_degree,
    which is equivalent to distinct_roots >= 2.  When no witness is needed
    the approximate fields stay None.  ``separation_ok`` confirms the
    approximate point numerically: derivative residual below DERIV_TOL
    (relative to coefficient size) and ``fiber_distance``, the distance to
    the nearest zero of the map, above VALUE_TOL relative to the point's
    magnitude.
    """

    map_poly: str
    degree: int
    distinct_roots: int
    derivative_degree: int
    shared_degree: int
    witness_poly: str
    witness_degree: int
    witness_needed: bool
    approx_critical_point: complex | None = None
    derivative_residual: float | None = None
    value_at_point: float | None = None
    fiber_distance: float | None = None
    separation_ok: bool | None = None

    def to_json(self) -> dict:
        out = {
            "map_poly": self.map_poly,
            "degree": self.degree,
            "distinct_roots": self.distinct_roots,
            "derivative_degree": self.derivative_degree,
            "shared_degree": self.shared_degree,
            "hurwitz_count": list(hurwitz_count(self)),
            "witness_poly": self.witness_poly,
            "witness_degree": self.witness_degree,
            "witness_needed": self.witness_needed,
        }
        if self.approx_critical_point is not None:
            z = self.approx_critical_point
            out["approx_critical_point"] = {"re": z.real, "im": z.imag}
            out["derivative_residual"] = self.derivative_residual
            out["value_at_point"] = self.value_at_point
            out["fiber_distance"] = self.fiber_distance
            out["separation_ok"] = self.separation_ok
        return out


def hurwitz_count(cert: RolleCertificate) -> tuple[int, int]:
    """Both sides of the degree count that forces a free critical point.

    The derivative of a degree d map has degree d - 1, while the roots of
    the map itself can only account for degree d - n of it (multiplicity
    m costs m - 1).  Returns that pair; the strict inequality lhs > rhs
    holds exactly when the map has at least two distinct roots, which is
    when a witness critical point must exist.
    """
    return cert.derivative_degree, cert.shared_degree


def rolle_witness(coeffs: Sequence[Fraction | int]) -> RolleCertificate:
    """Certificate for one univariate polynomial, coefficients by degree."""
    p = _trim([Fraction(c) for c in coeffs])
    if _deg(p) < 1:
        raise ConstantMapError(
            "the composed map is constant; there are no roots to separate")
    d = _deg(p)
    dp = _deriv(p)
    shared = _gcd(p, dp)
    n_distinct = d - _deg(shared)
    witness, rem = _divmod(dp, shared)
    assert not rem, "derivative must be divisible by gcd(p, p')"
    base = dict(
        map_poly=_render(p),
        degree=d,
        distinct_roots=n_distinct,
        derivative_degree=d - 1,
        shared_degree=_deg(shared),
        witness_poly=_render(witness),
        witness_degree=_deg(witness),
        witness_needed=n_distinct >= 2,
    )
    if n_distinct < 2:
        return RolleCertificate(**base)

    squarefree, sq_rem = _divmod(p, shared)
    assert not sq_rem, "gcd(p, p') must divide p"
    fiber = numpy.roots([float(c) for c in reversed(squarefree)])
    roots = numpy.roots([float(c) for c in reversed(witness)])
    best = None
    for r in sorted(roots, key=lambda z: abs(_eval_complex(dp, complex(z)))):
        z = complex(r)
        res_d = abs(_eval_complex(dp, z))
        val_p = abs(_eval_complex(p, z))
        dist = min(abs(z - complex(w)) for w in fiber)
        ok = (res_d < DERIV_TOL * _residual_scale(dp, z)
              and dist > VALUE_TOL * max(1.0, abs(z)))
        if best is None or ok:
            best = (z, res_d, val_p, dist, ok)
        if ok:
            break
    z, res_d, val_p, dist, ok = best
    return RolleCertificate(
        **base,
        approx_critical_point=z,
        derivative_residual=res_d,
        value_at_point=val_p,
        fiber_distance=dist,
        separation_ok=ok,
    )


def _rational_coeff_list(p: Poly) -> list[Fraction]:
    out = [Fraction(0)] * (p.max_deg("t") + 1)
    for (e,), c in p.terms.items():
        if not c.is_rational():
            raise ValueError(
                "witness extraction needs rational coefficients; evaluate "
                "the parameter at a rational value first")
        out[e] = c.as_fraction()
    return out


def rolle_for_map(family: Parametrization, rho: Poly,
                  at: Fraction | int = 0) -> RolleCertificate:
    """Certificate for an ambient polynomial map restricted to one fiber.

    ``rho`` must be a polynomial in the family's ambient coordinates; it is
    pulled back through the fiber at parameter value ``at``.
    """
    if rho.vars != family.ambient:
        raise ValueError(
            f"map must use the ambient coordinates {family.ambient}")
    composed = rho.compose(family.fiber(at))
    return rolle_witness(_rational_coeff_list(composed))


def rolle_for_curve(entries: Sequence[Poly],
                    functional: Sequence[Fraction | int]) -> RolleCertificate:
    """Certificate for a rational linear functional composed with a curve.

    ``entries`` are the coordinate polynomials of a parameter-free curve
    in t; ``functional`` pairs one rational coefficient with each of them.
    """
    if len(functional) != len(entries):
        raise ValueError(
            f"functional needs {len(entries)} coefficients, "
            f"got {len(functional)}")
    total: list[Fraction] = []
    for c, entry in zip(functional, entries):
        f = Fraction(c)
        if not f:
            continue
        dense = _rational_coeff_list(entry)
        if len(dense) > len(total):
            total.extend([Fraction(0)] * (len(dense) - len(total)))
        for i, x in enumerate(dense):
            total[i] += f * x
    return rolle_witness(total)


def load_curve(path) -> tuple[str, list[Poly]]:
    """Read a parameter-free curve file: an object with an ``entries`` list
    of polynomial expressions in t, and an optional ``name``."""
    raw = json.loads(Path(path).read_text())
    if not isinstance(raw, dict) or "entries" not in raw:
        raise ValueError(f"{path}: expected an object with an 'entries' list")
    entries = raw["entries"]
    if not isinstance(entries, list) or not entries or \
            not all(isinstance(e, str) for e in entries):
        raise ValueError(f"{path}: 'entries' must be a nonempty list of "
                         "expression strings")
    polys = [parse_poly(e, ("t",)) for e in entries]
    name = raw.get("name") or Path(path).stem
    return name, polys
