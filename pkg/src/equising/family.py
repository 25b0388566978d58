"""One-parameter families of parametrized space curves.

A family is a polynomial map (a, t) -> (a, f2(a, t), ..., fN(a, t)) whose
image is a surface containing the line {t = 0} as its singular locus.  The
first coordinate is the family parameter itself, so slicing at a = a0 yields
a parametrized curve through the origin of the fiber, and every entry past
the first vanishes identically on the parameter axis.

The checkers in the sibling modules consume this container: they need
fibers, the Jacobian, its 2x2 minors, and fiber multiplicities.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from .algebra import (
    AT,
    INFINITY,
    Poly,
    Scalar,
    fresh_symbol,
    parse_poly,
    t_order,
)

__all__ = [
    "Parametrization",
    "FamilyValidationError",
    "ParameterEntryError",
    "AxisVanishingError",
    "DegenerateFiberError",
    "EquationCheck",
    "family_from_strings",
    "load_family",
    "load_equations",
    "verify_implicit_equations",
]


class FamilyValidationError(ValueError):
    """The input does not describe a valid curve family."""


class ParameterEntryError(FamilyValidationError):
    """First entry must be the family parameter itself."""


class AxisVanishingError(FamilyValidationError):
    """Entries past the first must vanish identically at t = 0."""


class DegenerateFiberError(FamilyValidationError):
    """A fiber that must be a curve is a single point."""


def _default_ambient(n: int) -> tuple[str, ...]:
    if n <= 4:
        return ("x", "y", "z", "w")[:n]
    return tuple(f"x{i}" for i in range(1, n + 1))


@dataclass(frozen=True)
class Parametrization:
    """Validated family (a, f2, ..., fN) with named ambient coordinates.

    ``entries`` are polynomials over ('a', 't'); ``ambient`` names the
    target coordinates (used only when relating the family to implicit
    equations and in reports).
    """

    entries: tuple[Poly, ...]
    ambient: tuple[str, ...] = ()
    name: str = ""

    def __post_init__(self):
        if len(self.entries) < 2:
            raise FamilyValidationError("need at least two coordinates")
        ambient = self.ambient or _default_ambient(len(self.entries))
        if len(ambient) != len(self.entries):
            raise FamilyValidationError(
                f"{len(self.entries)} entries but {len(ambient)} ambient names"
            )
        if len(set(ambient)) != len(ambient):
            raise FamilyValidationError("ambient names must be distinct")
        object.__setattr__(self, "ambient", tuple(ambient))
        object.__setattr__(self, "entries", tuple(self.entries))
        for e in self.entries:
            if e.vars != AT:
                raise FamilyValidationError("entries must be polynomials in (a, t)")
        if self.entries[0] != Poly.var(AT, "a"):
            raise ParameterEntryError("first entry must be exactly the parameter a")
        for name, e in zip(ambient[1:], self.entries[1:]):
            if not e.coeff_of("t", 0).is_zero():
                raise AxisVanishingError(
                    f"entry {name} does not vanish on the axis t = 0"
                )
        if all(e.compose([Poly.const(("t",), 0), Poly.var(("t",), "t")]).is_zero()
               for e in self.entries[1:]):
            raise DegenerateFiberError("the fiber at a = 0 is a point, not a curve")

    @property
    def dim(self) -> int:
        return len(self.entries)

    def fiber(self, a_value: Scalar | Fraction | int) -> list[Poly]:
        """All N entries specialized at one parameter value, univariate in t."""
        a_const = Poly.const(("t",), a_value)
        t_var = Poly.var(("t",), "t")
        return [e.compose([a_const, t_var]) for e in self.entries]

    def recenter(self, a_value: Scalar | Fraction | int) -> "Parametrization":
        """Translate the parameter so the fiber of interest sits at a = 0."""
        shifted = Poly.var(AT, "a") + Poly.const(AT, a_value)
        t_var = Poly.var(AT, "t")
        new = [self.entries[0]] + [e.compose([shifted, t_var]) for e in self.entries[1:]]
        return Parametrization(tuple(new), self.ambient, self.name)

    def jacobian(self) -> list[tuple[Poly, Poly]]:
        """Rows (d/da, d/dt) of each entry."""
        return [(e.diff("a"), e.diff("t")) for e in self.entries]

    def plucker_minors(self) -> dict[tuple[int, int], Poly]:
        """2x2 Jacobian minors p[i, j] (1-based, i < j), the tangent-plane
        Pluecker coordinates of the parametrized surface."""
        rows = self.jacobian()
        out: dict[tuple[int, int], Poly] = {}
        n = len(rows)
        for i in range(n):
            for j in range(i + 1, n):
                out[(i + 1, j + 1)] = rows[i][0] * rows[j][1] - rows[j][0] * rows[i][1]
        return out

    def multiplicity(self, a_value: Scalar | Fraction | int = 0) -> int:
        """Multiplicity of the fiber curve at a parameter value.

        Computed as the minimal t-order over the non-parameter entries of
        the fiber.  This equals the local multiplicity of the image curve
        when the parametrization of the fiber is generically one to one,
        which is assumed throughout and not verified.
        """
        orders = [t_order(f) for f in self.fiber(a_value)[1:]]
        k = min(orders)
        if k == INFINITY:
            raise DegenerateFiberError(f"fiber at a = {a_value} is a point")
        return int(k)

    def generic_multiplicity(self) -> int:
        """Multiplicity of the fiber at a transcendental parameter value."""
        return self.multiplicity(fresh_symbol())

    def is_equimultiple(self) -> tuple[bool, int, int]:
        """Compare the multiplicity at a = 0 with the generic one."""
        special = self.multiplicity(0)
        generic = self.generic_multiplicity()
        return special == generic, special, generic

    def entry_strings(self) -> list[str]:
        return [e.grammar_str() for e in self.entries]

    def __str__(self):
        inner = ", ".join(self.entry_strings())
        return f"({inner})"


def family_from_strings(
    entries: Sequence[str],
    ambient: Sequence[str] = (),
    name: str = "",
) -> Parametrization:
    return Parametrization(
        tuple(parse_poly(s, AT) for s in entries),
        tuple(ambient),
        name,
    )


def load_family(path: str | Path) -> Parametrization:
    """Read a family from a JSON file.

    Expected shape::

        {"name": "...", "entries": ["a", "t^3", ...], "ambient": ["x", ...]}

    ``ambient`` is optional.  Entry strings follow the expression grammar
    over the variables a and t.
    """
    path = Path(path)
    data = json.loads(path.read_text())
    if not isinstance(data, dict) or "entries" not in data:
        raise FamilyValidationError(f"{path.name}: expected an object with 'entries'")
    entries = data["entries"]
    if not isinstance(entries, list) or not all(isinstance(s, str) for s in entries):
        raise FamilyValidationError(f"{path.name}: 'entries' must be a list of strings")
    return family_from_strings(
        entries,
        data.get("ambient", ()),
        data.get("name", path.stem),
    )


@dataclass(frozen=True)
class EquationCheck:
    """Outcome of substituting the family into one implicit equation."""

    source: str
    holds: bool
    residual: str


def load_equations(path: str | Path, family: Parametrization) -> list[Poly]:
    """Read implicit equations (polynomials in the ambient coordinates)."""
    path = Path(path)
    data = json.loads(path.read_text())
    if not isinstance(data, dict) or "equations" not in data:
        raise FamilyValidationError(f"{path.name}: expected an object with 'equations'")
    variables = tuple(data.get("vars", family.ambient))
    if set(variables) - set(family.ambient):
        extra = sorted(set(variables) - set(family.ambient))
        raise FamilyValidationError(
            f"{path.name}: unknown ambient variables {extra}"
        )
    return [parse_poly(s, variables) for s in data["equations"]]


def verify_implicit_equations(
    family: Parametrization, equations: Sequence[Poly]
) -> list[EquationCheck]:
    """Substitute the parametrization into each equation.

    An equation passes when the pullback is the zero polynomial in (a, t),
    that is, when the equation vanishes on the whole image surface.
    """
    by_name = dict(zip(family.ambient, family.entries))
    out = []
    for eq in equations:
        values = [by_name[v] for v in eq.vars]
        pulled = eq.compose(values)
        out.append(
            EquationCheck(
                source=eq.grammar_str(),
                holds=pulled.is_zero(),
                residual="0" if pulled.is_zero() else str(pulled),
            )
        )
    return out
