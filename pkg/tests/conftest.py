"""Shared helpers: fuzzed families and the numerical arc-limit oracle.

The oracle takes the road not taken by the library: instead of symbolic
leading terms it evaluates the raw entry polynomials at exact rational
points marching down a test arc, normalizes the resulting direction, and
compares against the symbolic limit.  Agreement of the two independent
routes is asserted within a float tolerance.
"""

from __future__ import annotations

import random
from fractions import Fraction
from pathlib import Path

from equising import (
    Arc,
    FamilyValidationError,
    Parametrization,
    Poly,
    family_from_strings,
)
from equising.limits import arc_leading_vector

CORPUS = Path(__file__).resolve().parent.parent / "corpus"


def corpus_path(name: str) -> Path:
    return CORPUS / name


def random_monomial_family(rng: random.Random, max_extra: int = 4,
                           max_exp: int = 8) -> Parametrization:
    """A validated family with monomial entries a**i * t**j."""
    while True:
        count = rng.randint(2, max_extra)
        entries = ["a"]
        for _ in range(count):
            i = rng.randint(0, max_exp)
            j = rng.randint(1, max_exp)
            head = "t" if j == 1 else f"t^{j}"
            if i == 1:
                head = "a*" + head
            elif i > 1:
                head = f"a^{i}*" + head
            entries.append(head)
        try:
            return family_from_strings(entries)
        except FamilyValidationError:
            continue


def _lcm(a: int, b: int) -> int:
    from math import gcd
    return a * b // gcd(a, b)


def arc_point(arc: Arc, s: Fraction,
              c_value: Fraction = Fraction(1)) -> tuple[Fraction, Fraction]:
    """Exact coordinates (a, t) of the arc at curve parameter s.

    Symbolic arc coefficients are pinned to ``c_value``; the exponent
    denominators are cleared the same way the symbolic substitution does,
    so s plays the role of the cleared parameter.
    """
    segs = arc.segments()
    q = 1
    for e, _ in segs:
        q = _lcm(q, e.denominator)
    t_val = s ** q
    a_val = arc.a0.as_fraction()
    for e, c in segs:
        cv = c_value if c is None else c.as_fraction()
        a_val += cv * s ** int(e * q)
    return a_val, t_val


def leading_direction(polys, arc: Arc,
                      c_value: Fraction = Fraction(1)) -> list[Fraction] | None:
    """Symbolic dominant direction along the arc, with coefficients pinned."""
    led = arc_leading_vector(polys, arc)
    if led is None:
        return None
    _, vec = led
    out = []
    for x in vec:
        for name in sorted(x.symbols()):
            x = x.subs(name, c_value)
        out.append(x.as_fraction())
    return out


def numeric_direction(polys, arc: Arc, s: Fraction,
                      c_value: Fraction = Fraction(1)) -> list[Fraction]:
    a_val, t_val = arc_point(arc, s, c_value)
    return [p.eval_scalar([a_val, t_val]).as_fraction() for p in polys]


def direction_deviation(polys, arc: Arc,
                        s: Fraction = Fraction(1, 10 ** 8),
                        c_value: Fraction = Fraction(1)) -> float:
    """Max componentwise gap between the two normalized directions."""
    sym = leading_direction(polys, arc, c_value)
    assert sym is not None, "vacuous arc has no direction to compare"
    pivot = max(range(len(sym)), key=lambda k: abs(sym[k]))
    assert sym[pivot] != 0
    num = numeric_direction(polys, arc, s, c_value)
    assert num[pivot] != 0, "numeric evaluation lost the dominant component"
    sym_n = [v / sym[pivot] for v in sym]
    num_n = [v / num[pivot] for v in num]
    return max(abs(float(x - y)) for x, y in zip(sym_n, num_n))


def regime_arcs(result) -> list[Arc]:
    """Rebuild the swept top-level arcs from a check result's records."""
    arcs = []
    for reg in result.regimes:
        if reg.theta == "inf":
            arcs.append(Arc(None))
        else:
            arcs.append(Arc(Fraction(reg.theta)))
    return arcs


def exponent_pairs(family: Parametrization) -> set[tuple[int, int]]:
    """The (a, t) exponent of each monomial entry, for permutation- and
    scalar-independent comparison of kept coordinate sets."""
    out = set()
    for e in family.entries:
        assert e.is_monomial(), f"non-monomial entry {e}"
        out.add(e.support()[0])
    return out


# -- independent dense Fraction-coefficient univariate helpers ----------------
# (test-side reimplementations so certificate claims are checked against
# arithmetic the library does not share)

def poly_from_roots(roots_with_mult) -> list[Fraction]:
    coeffs = [Fraction(1)]
    for root, mult in roots_with_mult:
        for _ in range(mult):
            coeffs = [Fraction(0)] + coeffs
            for k in range(len(coeffs) - 1):
                coeffs[k] -= root * coeffs[k + 1]
    return coeffs


def derive_coeffs(coeffs):
    return [coeffs[i] * i for i in range(1, len(coeffs))]


def divmod_coeffs(a, b):
    r = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 1)
    while r and len(r) >= len(b):
        k = len(r) - len(b)
        f = r[-1] / b[-1]
        q[k] = f
        for i in range(len(b)):
            r[i + k] -= f * b[i]
        while r and r[-1] == 0:
            r.pop()
    return q, r


def gcd_coeffs(a, b):
    a, b = list(a), list(b)
    while b:
        a, b = b, divmod_coeffs(a, b)[1]
    return [x / a[-1] for x in a] if a else a


def univariate_coeffs(text: str) -> list[Fraction]:
    """Dense coefficient list of an expression in t, index = degree."""
    from equising import parse_poly

    p = parse_poly(text, ("t",))
    out = [Fraction(0)] * (p.max_deg("t") + 1)
    for (e,), c in p.terms.items():
        out[e] = c.as_fraction()
    return out


def run_random_rolle_suite(rng: random.Random, count: int,
                           deriv_tol: float, value_tol: float) -> None:
    """Certificates for random maps vanishing at the basepoint with at
    least two distinct roots: exact count and gcd checks, then numerical
    confirmation at the given tolerances."""
    from equising import rolle_witness

    pool = sorted({Fraction(k, d) for k in range(-6, 7) for d in (1, 2, 3)
                   if k != 0})
    for _ in range(count):
        n_distinct = rng.randint(2, 4)
        roots = [Fraction(0)] + rng.sample(pool, n_distinct - 1)
        mults = [rng.randint(1, 3) for _ in roots]
        coeffs = poly_from_roots(list(zip(roots, mults)))
        degree = sum(mults)
        cert = rolle_witness(coeffs)

        assert cert.degree == degree
        assert cert.distinct_roots == n_distinct
        assert cert.derivative_degree == degree - 1
        assert cert.shared_degree == degree - n_distinct
        assert cert.witness_degree == n_distinct - 1
        assert cert.witness_needed

        # exact: witness nonconstant, divides the derivative, coprime to p
        witness = univariate_coeffs(cert.witness_poly)
        assert len(witness) - 1 >= 1
        _, rem = divmod_coeffs(derive_coeffs(coeffs), witness)
        assert not rem
        assert len(gcd_coeffs(coeffs, witness)) == 1

        assert cert.separation_ok, (roots, mults)
        z = cert.approx_critical_point
        dscale = sum(abs(float(c)) for c in derive_coeffs(coeffs)) \
            * max(1.0, abs(z)) ** (degree - 1)
        assert cert.derivative_residual < deriv_tol * dscale
        assert cert.fiber_distance > value_tol * max(1.0, abs(z))
