"""Whitney regularity along the singular axis, decided by exact arc sweeps.

The singular locus of the image surface is the parameter axis.  Whitney
condition (a) at a point of the axis asks that every limit of tangent
planes at nearby smooth surface points contain the axis direction;
condition (b) asks that the limit planes also contain the limit of secant
lines from the axis point to the approaching smooth points.  Checking (b)
with secants taken from the retraction of each point onto the axis, plus
condition (a), is equivalent to the classical pair condition; both parts
are exposed separately and combined by :func:`whitney_check`.

Strategy.  Every way of approaching the base point inside the surface is
captured, after curve selection, by arcs

    a = a0 + c * t**theta + (higher order),    t -> 0

with rational theta > 0, together with the vertical arc a == a0.  For a
fixed exponent the leading behavior of every relevant polynomial is a
single coefficient vector depending polynomially on c, so each exponent
regime reduces to exact linear algebra over the coefficient field.  Only
finitely many exponents (where two support monomials trade dominance) can
change the outcome; between them one midpoint test covers the whole open
sector, irrational exponents included.  When every leading coefficient
cancels at special values of c the test is rerun along refined arcs rooted
at those values, to a configurable depth.

Verdicts are exact: Verified and Refuted are proofs, and anything the
sweep cannot settle inside the rational/symbolic coefficient field is
reported Inconclusive with the obstruction spelled out.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Iterable, Sequence

from .algebra import (
    AT,
    INFINITY,
    Arc,
    Poly,
    Scalar,
    fresh_symbol,
    substitute_arc,
    wedge3,
)
from .family import Parametrization

__all__ = [
    "Verdict",
    "ArcWitness",
    "RegimeRecord",
    "WhitneyResult",
    "WhitneyJoint",
    "secant_vector",
    "critical_exponents",
    "arc_leading_vector",
    "whitney_a_check",
    "whitney_b_check",
    "whitney_check",
]


class Verdict(str, Enum):
    VERIFIED = "Verified"
    REFUTED = "Refuted"
    INCONCLUSIVE = "Inconclusive"

    def __str__(self):
        return self.value


_RANK = {Verdict.VERIFIED: 0, Verdict.INCONCLUSIVE: 1, Verdict.REFUTED: 2}


def _merge(v1: Verdict, v2: Verdict) -> Verdict:
    return v1 if _RANK[v1] >= _RANK[v2] else v2


@dataclass(frozen=True)
class ArcWitness:
    """A concrete arc along which a containment fails.

    ``coefficient`` is the chosen value of the free arc coefficient, or
    None when every small integer landed on a degeneracy and the failure
    holds for generic values instead.
    """

    arc: Arc
    description: str
    wedge_index: tuple[int, int, int] | None
    value: str
    coefficient: str


@dataclass(frozen=True)
class RegimeRecord:
    """One exponent regime of a sweep, for reporting."""

    theta: str          # absolute exponent of t, "p/q" or "inf"
    kind: str           # "sector" | "critical" | "vertical"
    status: str         # "contained" | "violated" | "vacuous" | "degenerate" | "unresolved" | "trivial"
    note: str = ""
    refinements: tuple["RegimeRecord", ...] = ()

    def to_json(self) -> dict:
        out = {
            "theta": self.theta,
            "kind": self.kind,
            "status": self.status,
        }
        if self.note:
            out["note"] = self.note
        if self.refinements:
            out["refinements"] = [r.to_json() for r in self.refinements]
        return out


@dataclass(frozen=True)
class WhitneyResult:
    """Outcome of one regularity condition at one base point."""

    verdict: Verdict
    condition: str      # "a" | "b"
    basepoint: str
    witness: ArcWitness | None
    regimes: tuple[RegimeRecord, ...]
    reasons: tuple[str, ...]

    def to_json(self) -> dict:
        out = {
            "verdict": str(self.verdict),
            "condition": self.condition,
            "basepoint": self.basepoint,
            "regimes": [r.to_json() for r in self.regimes],
        }
        if self.witness is not None:
            out["witness"] = _witness_json(self.witness)
        if self.reasons:
            out["reasons"] = list(self.reasons)
        return out


@dataclass(frozen=True)
class WhitneyJoint:
    """Conditions (a) and (b) together; Refuted dominates Inconclusive."""

    verdict: Verdict
    part_a: WhitneyResult
    part_b: WhitneyResult
    witness: ArcWitness | None

    def to_json(self) -> dict:
        out = {
            "verdict": str(self.verdict),
            "condition_a": self.part_a.to_json(),
            "condition_b": self.part_b.to_json(),
        }
        if self.witness is not None:
            out["witness"] = _witness_json(self.witness)
        return out


def _witness_json(w: ArcWitness) -> dict:
    segs = [
        {"theta": str(th), "c": c}
        for th, c in _witness_segments(w.arc)
    ]
    return {
        "arc": w.description,
        "a0": str(w.arc.a0),
        "segments": segs,
        "wedge_index": list(w.wedge_index) if w.wedge_index else None,
        "value": w.value,
        "coefficient": w.coefficient,
    }


def _witness_segments(arc: Arc) -> list[tuple[Fraction, str]]:
    out = []
    for th, c in arc.segments():
        out.append((th, "generic" if c is None else str(c)))
    return out


# ---------------------------------------------------------------------------
# building blocks
# ---------------------------------------------------------------------------


def secant_vector(family: Parametrization) -> list[Poly]:
    """Direction from the axis retraction of a point to the point itself.

    The retraction sends (a, f2, ..., fN) to (a, 0, ..., 0), so the secant
    is the entry vector with the parameter coordinate zeroed out.
    """
    zero = Poly.zero(AT)
    return [zero] + list(family.entries[1:])


def critical_exponents(polys: Iterable[Poly]) -> set[Fraction]:
    """Exponents where two support monomials of the pooled system can trade
    dominance along arcs a = c*t**theta.

    A superset of the true breakpoints is harmless: extra cut points only
    split sectors whose leading structure does not actually change.
    """
    points: set[tuple[int, int]] = set()
    for p in polys:
        points.update((e[0], e[1]) for e in p.terms)
    crits: set[Fraction] = set()
    for (i1, j1) in points:
        for (i2, j2) in points:
            if i1 > i2:
                th = Fraction(j2 - j1, i1 - i2)
                if th > 0:
                    crits.add(th)
    return crits


def arc_leading_vector(
    polys: Sequence[Poly], arc: Arc
) -> tuple[float, list[Scalar]] | None:
    """Order and coefficient vector of the dominant term along an arc.

    Entries are polynomials in (a, t); the result is None when every entry
    vanishes identically along the arc.
    """
    subs = [substitute_arc(p, arc) for p in polys]
    return _leading(subs)


def _leading(subs: Sequence[Poly]) -> tuple[float, list[Scalar]] | None:
    nu = min((p.min_deg("s") for p in subs), default=INFINITY)
    if nu == INFINITY:
        return None
    k = int(nu)
    return nu, [p.coeff_of("s", k).constant_value() for p in subs]


# ---------------------------------------------------------------------------
# univariate polynomials in the free arc coefficient
# ---------------------------------------------------------------------------
#
# Represented as degree-indexed lists of Scalars.  Only gcds and exact root
# isolation are needed; everything stays in the coefficient field.


def _c_trim(p: list[Scalar]) -> list[Scalar]:
    while p and p[-1].is_zero():
        p.pop()
    return p


def _c_mod(f: list[Scalar], g: list[Scalar]) -> list[Scalar]:
    f = list(f)
    dg = len(g) - 1
    lead = g[-1]
    while len(f) - 1 >= dg and f:
        df = len(f) - 1
        q = f[-1] / lead
        for i in range(dg + 1):
            f[df - dg + i] = f[df - dg + i] - q * g[i]
        _c_trim(f)
        if not f:
            break
    return f


def _c_gcd(f: list[Scalar], g: list[Scalar]) -> list[Scalar]:
    f, g = _c_trim(list(f)), _c_trim(list(g))
    while g:
        f, g = g, _c_mod(f, g)
    if f:
        lead = f[-1]
        f = [c / lead for c in f]
    return f


def _c_gcd_many(ps: Iterable[list[Scalar]]) -> list[Scalar]:
    acc: list[Scalar] = []
    for p in ps:
        acc = _c_gcd(acc, p) if acc else _c_trim(list(p))
        if len(acc) == 1:
            break
    return acc


def _render_cpoly(p: Sequence[Scalar], cname: str) -> str:
    parts = []
    for k in range(len(p) - 1, -1, -1):
        c = p[k]
        if c.is_zero():
            continue
        if k == 0:
            parts.append(f"({c})")
        elif k == 1:
            parts.append(f"({c})*{cname}")
        else:
            parts.append(f"({c})*{cname}^{k}")
    return " + ".join(parts) if parts else "0"


def _rational_roots(coeffs: list[Fraction]) -> list[Fraction]:
    """All rational roots (with multiplicity collapsed) of a polynomial
    with rational coefficients and nonzero constant term."""
    lcm = 1
    for c in coeffs:
        lcm = lcm * c.denominator // _gcd_int(lcm, c.denominator)
    ints = [int(c * lcm) for c in coeffs]
    a0, an = abs(ints[0]), abs(ints[-1])
    roots = []
    for p in _divisors(a0):
        for q in _divisors(an):
            for cand in (Fraction(p, q), Fraction(-p, q)):
                if cand in roots:
                    continue
                if _eval_int_poly(ints, cand) == 0:
                    roots.append(cand)
    return roots


def _gcd_int(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _divisors(n: int) -> list[int]:
    out = []
    d = 1
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            if d != n // d:
                out.append(n // d)
        d += 1
    return sorted(out)


def _eval_int_poly(ints: list[int], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(ints):
        acc = acc * x + c
    return acc


def _deflate(coeffs: list[Fraction], r: Fraction) -> list[Fraction]:
    """Divide by (x - r); assumes r is a root."""
    out = [Fraction(0)] * (len(coeffs) - 1)
    acc = Fraction(0)
    for k in range(len(coeffs) - 1, 0, -1):
        acc = coeffs[k] + acc * r if k == len(coeffs) - 1 else coeffs[k] + acc * r
        out[k - 1] = acc
    return out


def _extract_roots(p: list[Scalar], cname: str) -> tuple[list[Scalar], str | None]:
    """Nonzero roots of a coefficient polynomial, exactly.

    Returns (roots, unresolved) where unresolved renders a nonconstant
    factor whose roots cannot be expressed in the coefficient field.  The
    root at zero is dropped: a vanishing leading coefficient just means the
    arc belongs to a lower exponent regime.
    """
    p = _c_trim(list(p))
    k = 0
    while k < len(p) and p[k].is_zero():
        k += 1
    p = p[k:]
    if len(p) <= 1:
        return [], None
    if len(p) == 2:
        return [-p[0] / p[1]], None
    if all(c.is_rational() for c in p):
        fr = [c.as_fraction() for c in p]
        roots: list[Fraction] = []
        for r in _rational_roots(fr):
            while len(fr) > 1 and _eval_int_poly([int(x * _den_lcm(fr)) for x in fr], r) == 0:
                fr = _deflate(fr, r)
                if r not in roots:
                    roots.append(r)
        scalars = [Scalar.from_fraction(r) for r in roots]
        if len(fr) > 1:
            left = [Scalar.from_fraction(x) for x in fr]
            return scalars, _render_cpoly(left, cname)
        return scalars, None
    return [], _render_cpoly(p, cname)


def _den_lcm(fr: list[Fraction]) -> int:
    lcm = 1
    for c in fr:
        lcm = lcm * c.denominator // _gcd_int(lcm, c.denominator)
    return lcm


# ---------------------------------------------------------------------------
# the sweep
# ---------------------------------------------------------------------------

_WITNESS_TRIALS = (
    Fraction(1), Fraction(2), Fraction(3),
    Fraction(-1), Fraction(-2), Fraction(5),
)


def _fmt_theta(th: Fraction | None) -> str:
    return "inf" if th is None else str(th)


@dataclass
class _SweepState:
    verdict: Verdict = Verdict.VERIFIED
    witness: ArcWitness | None = None
    reasons: list[str] = field(default_factory=list)

    def refute(self, witness: ArcWitness | None):
        self.verdict = _merge(self.verdict, Verdict.REFUTED)
        if self.witness is None and witness is not None:
            self.witness = witness

    def inconclusive(self, reason: str):
        self.verdict = _merge(self.verdict, Verdict.INCONCLUSIVE)
        self.reasons.append(reason)

    def absorb(self, other: "_SweepState"):
        if other.verdict is Verdict.REFUTED:
            self.refute(other.witness)
        elif other.verdict is Verdict.INCONCLUSIVE:
            self.verdict = _merge(self.verdict, Verdict.INCONCLUSIVE)
        self.reasons.extend(other.reasons)


def _regime_plan(
    crits: Sequence[Fraction], w_min: Fraction
) -> list[tuple[Fraction | None, str]]:
    plan: list[tuple[Fraction | None, str]] = []
    if crits:
        first = crits[0] / 2 if w_min == 0 else (w_min + crits[0]) / 2
        plan.append((first, "sector"))
        for i, th in enumerate(crits):
            plan.append((th, "critical"))
            if i + 1 < len(crits):
                plan.append(((th + crits[i + 1]) / 2, "sector"))
            else:
                plan.append((th + 1, "sector"))
    else:
        plan.append((Fraction(1) if w_min == 0 else w_min + 1, "sector"))
    plan.append((None, "vertical"))
    return plan


def _arc_description(
    prefix: Sequence[tuple[Fraction, Scalar]],
    final: tuple[Fraction, Scalar | None] | None,
    a0_label: str,
) -> str:
    parts = [a0_label] if a0_label != "0" else []
    for th, c in prefix:
        parts.append(f"({c})*t^({th})")
    if final is not None:
        th, c = final
        cs = "c" if c is None else f"({c})"
        parts.append(f"{cs}*t^({th})")
    return "a = " + (" + ".join(parts) if parts else "0")


def _build_arc(
    prefix: Sequence[tuple[Fraction, Scalar]],
    final: tuple[Fraction, Scalar | None] | None,
    a0: Scalar,
) -> Arc:
    segs: list[tuple[Fraction, Scalar | None]] = list(prefix)
    if final is not None:
        segs.append(final)
    if not segs:
        return Arc(theta=None, a0=a0)
    node: Arc | None = None
    prev_abs = [th for th, _ in segs]
    for idx in range(len(segs) - 1, -1, -1):
        th_abs, c = segs[idx]
        rel = th_abs - (prev_abs[idx - 1] if idx > 0 else 0)
        node = Arc(theta=rel, c=c, a0=a0 if idx == 0 else Scalar.from_fraction(0),
                   refinement=node)
    assert node is not None
    return node


def _sweep(
    vec: list[Poly],
    omega: dict[tuple[int, int], Poly],
    dim: int,
    mode: str,
    w_min: Fraction,
    depth_left: int,
    t_scale: int,
    prefix: list[tuple[Fraction, Scalar]],
    a0: Scalar,
    a0_label: str,
) -> tuple[_SweepState, list[RegimeRecord]]:
    state = _SweepState()
    records: list[RegimeRecord] = []
    keys = sorted(omega)
    crits = sorted(th for th in critical_exponents(vec + [omega[k] for k in keys])
                   if th > w_min)
    cname = f"c{len(prefix) + 1}"
    csym = Scalar.symbol(cname)

    for th, kind in _regime_plan(crits, w_min):
        th_abs = None if th is None else th / t_scale
        arc = Arc(theta=th, c=csym) if th is not None else Arc(theta=None)
        sub_vec = [substitute_arc(v, arc) for v in vec]
        if all(p.is_zero() for p in sub_vec):
            records.append(RegimeRecord(
                theta=_fmt_theta(th_abs), kind=kind, status="vacuous",
                note="the arc stays inside the singular axis"))
            continue
        sub_om = {ij: substitute_arc(omega[ij], arc) for ij in keys}
        led_om = _leading([sub_om[ij] for ij in keys])
        if led_om is None:
            records.append(RegimeRecord(
                theta=_fmt_theta(th_abs), kind=kind, status="degenerate",
                note="every tangent minor vanishes along the arc"))
            state.inconclusive(
                f"no tangent planes along the arc family at exponent {_fmt_theta(th_abs)}")
            continue
        _, om_lead_list = led_om
        om_lead = dict(zip(keys, om_lead_list))

        if mode == "b":
            led_vec = _leading(sub_vec)
            assert led_vec is not None
            _, test_vec = led_vec
        else:
            test_vec = [Scalar.from_fraction(1)] + [Scalar.from_fraction(0)] * (dim - 1)

        coords = wedge3(test_vec, om_lead, dim)
        nonzero = {ijk: v for ijk, v in coords.items() if not v.is_zero()}

        if nonzero:
            ijk = min(nonzero)
            val = nonzero[ijk]
            if th is None:
                final = None
                coeff_label = "exact"
                value_str = str(val)
            else:
                c_pick = _pick_witness(val, test_vec if mode == "b" else None,
                                       om_lead_list, cname)
                final = (th_abs, c_pick)
                coeff_label = "generic" if c_pick is None else str(c_pick)
                value_str = str(val if c_pick is None else val.subs(cname, c_pick))
            witness = ArcWitness(
                arc=_build_arc(prefix, final, a0),
                description=_arc_description(prefix, final, a0_label),
                wedge_index=ijk,
                value=value_str,
                coefficient=coeff_label,
            )
            records.append(RegimeRecord(
                theta=_fmt_theta(th_abs), kind=kind, status="violated",
                note=f"limit direction leaves the tangent-plane limit "
                     f"(wedge coordinate {ijk})"))
            state.refute(witness)
            continue

        note = ""
        status = "contained"
        refinements: list[RegimeRecord] = []
        if th is not None:
            gcds: list[list[Scalar]] = []
            if mode == "b":
                gcds.append(_c_gcd_many(
                    [c.coeffs_in(cname) for c in test_vec if not c.is_zero()]))
            gcds.append(_c_gcd_many(
                [c.coeffs_in(cname) for c in om_lead_list if not c.is_zero()]))
            roots: list[Scalar] = []
            for g in gcds:
                got, unresolved = _extract_roots(g, cname)
                for r in got:
                    if not any(r == r2 for r2 in roots):
                        roots.append(r)
                if unresolved is not None:
                    status = "unresolved"
                    state.inconclusive(
                        f"cancellation locus at exponent {_fmt_theta(th_abs)} has "
                        f"roots outside the coefficient field: {unresolved}")
            for c0 in roots:
                if depth_left == 0:
                    status = "unresolved"
                    state.inconclusive(
                        f"refinement depth exhausted at exponent {_fmt_theta(th_abs)}, "
                        f"coefficient {c0}")
                    continue
                p, q = th.numerator, th.denominator
                a_new = Poly.monomial(AT, (0, p), c0) + Poly.var(AT, "a")
                t_new = Poly.monomial(AT, (0, q))
                vec2 = [v.compose([a_new, t_new]) for v in vec]
                om2 = {ij: omega[ij].compose([a_new, t_new]) for ij in keys}
                sub_state, sub_records = _sweep(
                    vec2, om2, dim, mode,
                    w_min=Fraction(p), depth_left=depth_left - 1,
                    t_scale=t_scale * q,
                    prefix=prefix + [(th_abs, c0)],
                    a0=a0, a0_label=a0_label,
                )
                state.absorb(sub_state)
                refinements.extend(sub_records)
            if roots and status == "contained":
                note = f"leading terms cancel at {len(roots)} special coefficient value(s); refined"
        records.append(RegimeRecord(
            theta=_fmt_theta(th_abs), kind=kind, status=status, note=note,
            refinements=tuple(refinements)))
    return state, records


def _pick_witness(
    val: Scalar,
    test_vec: list[Scalar] | None,
    om_lead: list[Scalar],
    cname: str,
) -> Scalar | None:
    for q in _WITNESS_TRIALS:
        if val.subs(cname, q).is_zero():
            continue
        if test_vec is not None and all(
                c.subs(cname, q).is_zero() for c in test_vec if not c.is_zero()):
            continue
        if all(c.subs(cname, q).is_zero() for c in om_lead if not c.is_zero()):
            continue
        return Scalar.from_fraction(q)
    return None


# ---------------------------------------------------------------------------
# public checks
# ---------------------------------------------------------------------------


def _prepare(family: Parametrization, basepoint):
    if basepoint == "generic":
        a0 = fresh_symbol()
        label = f"generic ({a0})"
    elif isinstance(basepoint, Scalar):
        a0 = basepoint
        label = str(a0)
    else:
        a0 = Scalar.from_fraction(Fraction(basepoint))
        label = str(Fraction(basepoint))
    if not a0.is_zero():
        family = family.recenter(a0)
    return family, a0, label


def _run_condition(family: Parametrization, basepoint, mode: str,
                   max_depth: int) -> WhitneyResult:
    fam, a0, label = _prepare(family, basepoint)
    dim = fam.dim
    if dim < 3:
        rec = RegimeRecord(
            theta="all", kind="sector", status="trivial",
            note="ambient dimension below 3: every line lies in every plane")
        return WhitneyResult(Verdict.VERIFIED, mode, label, None, (rec,), ())
    vec = secant_vector(fam)
    omega = fam.plucker_minors()
    state, records = _sweep(
        vec, omega, dim, mode,
        w_min=Fraction(0), depth_left=max_depth, t_scale=1,
        prefix=[], a0=a0, a0_label=label,
    )
    return WhitneyResult(
        verdict=state.verdict,
        condition=mode,
        basepoint=label,
        witness=state.witness,
        regimes=tuple(records),
        reasons=tuple(state.reasons),
    )


def whitney_a_check(family: Parametrization, basepoint=0,
                    max_depth: int = 4) -> WhitneyResult:
    """Condition (a): tangent-plane limits contain the axis direction."""
    return _run_condition(family, basepoint, "a", max_depth)


def whitney_b_check(family: Parametrization, basepoint=0,
                    max_depth: int = 4) -> WhitneyResult:
    """Condition (b), retraction form: the limit of secants from the axis
    retraction lies in the tangent-plane limit."""
    return _run_condition(family, basepoint, "b", max_depth)


def whitney_check(family: Parametrization, basepoint=0,
                  max_depth: int = 4) -> WhitneyJoint:
    """Conditions (a) and (b) together.

    The retraction form of (b) combined with (a) is equivalent to the
    classical secant condition for pairs (smooth part, axis), so the joint
    verdict is the conjunction.
    """
    part_a = whitney_a_check(family, basepoint, max_depth)
    part_b = whitney_b_check(family, basepoint, max_depth)
    if Verdict.REFUTED in (part_a.verdict, part_b.verdict):
        verdict = Verdict.REFUTED
    elif Verdict.INCONCLUSIVE in (part_a.verdict, part_b.verdict):
        verdict = Verdict.INCONCLUSIVE
    else:
        verdict = Verdict.VERIFIED
    witness = part_b.witness or part_a.witness
    return WhitneyJoint(verdict, part_a, part_b, witness)
