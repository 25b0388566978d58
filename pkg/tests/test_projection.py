"""Characteristic exponents under generic projection; strong comparison."""

from fractions import Fraction

import pytest

from equising import (
    DegenerateFiberError,
    Poly,
    Verdict,
    blowup_singular_locus,
    char_exponents,
    char_exponents_at,
    fresh_symbol,
    load_family,
    nash_modification,
    parse_poly,
    strong_equisingularity_check,
)
from conftest import corpus_path

T = ("t",)


def P(text):
    return parse_poly(text, T)


class TestPlanePairs:
    def test_two_characteristic_exponents(self):
        seq = char_exponents(P("t^4"), P("t^6 + t^7"))
        assert (seq.beta0, seq.betas) == (4, (6, 7))
        assert seq.final_gcd == 1 and seq.confirmed

    def test_smooth_branch(self):
        seq = char_exponents(P("t"), P("t^5"))
        assert (seq.beta0, seq.betas) == (1, ())
        assert seq.confirmed

    def test_vanishing_second_coordinate(self):
        seq = char_exponents(P("t^4"), Poly.zero(T))
        assert (seq.beta0, seq.betas, seq.final_gcd) == (4, (), 4)
        assert seq.confirmed

    def test_common_lattice_is_certified(self):
        seq = char_exponents(P("t^2"), P("t^4"))
        assert (seq.beta0, seq.betas, seq.final_gcd) == (2, (), 2)
        assert seq.confirmed

    def test_inputs_swap_to_lower_order(self):
        assert char_exponents(P("t^3"), P("t^2")).beta0 == 2

    def test_unit_coefficients_do_not_matter(self):
        a = char_exponents(P("2*t^4"), P("3*t^6 - t^7"))
        b = char_exponents(P("t^4"), P("t^6 + 5*t^7"))
        assert (a.beta0, a.betas) == (b.beta0, b.betas)

    def test_point_input_rejected(self):
        with pytest.raises(DegenerateFiberError):
            char_exponents(Poly.zero(T), Poly.zero(T))
        with pytest.raises(ValueError):
            char_exponents(P("1 + t"), P("t^2"))


class TestFiberSequences:
    def test_generic_versus_origin(self):
        fam = load_family(corpus_path("family-467.json"))
        generic = char_exponents_at(fam, fresh_symbol())
        origin = char_exponents_at(fam, 0)
        assert (generic.beta0, generic.betas) == (4, (6, 7))
        assert (origin.beta0, origin.betas) == (4, (7,))
        assert generic.confirmed and origin.confirmed

    def test_truncation_certificate_on_corpus(self):
        for name in ("family-345.json", "family-467.json",
                     "family-589.json", "tangent-arc.json"):
            fam = load_family(corpus_path(name))
            seq = char_exponents_at(fam, 0)
            assert seq.confirmed, name
            assert seq.final_gcd >= 1

    def test_display(self):
        fam = load_family(corpus_path("family-589.json"))
        assert char_exponents_at(fam, 0).display() == "(5; 8)"


class TestStrongCheck:
    def test_refuted_by_exponent_drop(self):
        fam = load_family(corpus_path("family-467.json"))
        res = strong_equisingularity_check(fam)
        assert res.verdict is Verdict.REFUTED
        assert res.mismatch == ("generic", "a = 0")
        bydict = dict(res.sequences)
        assert bydict["generic"].key() == (4, (6, 7))
        assert bydict["a = 0"].key() == (4, (7,))

    def test_verified_family(self):
        fam = load_family(corpus_path("family-589.json"))
        res = strong_equisingularity_check(fam)
        assert res.verdict is Verdict.VERIFIED
        assert all(seq.key() == (5, (8,)) for _, seq in res.sequences)

    def test_extra_special_values(self):
        fam = load_family(corpus_path("family-589.json"))
        res = strong_equisingularity_check(
            fam, special_a=(Fraction(1, 2), Fraction(-2)))
        assert res.verdict is Verdict.VERIFIED
        assert len(res.sequences) == 4

    def test_modifications_can_lose_strength(self):
        fam = load_family(corpus_path("family-589.json"))
        for mod in (blowup_singular_locus(fam), nash_modification(fam)):
            res = strong_equisingularity_check(mod.family)
            assert res.verdict is Verdict.REFUTED
            bydict = dict(res.sequences)
            assert bydict["generic"].key() == (3, (4,))
            assert bydict["a = 0"].key() == (3, (5,))

    def test_multiplicity_jump_refutes_outright(self):
        fam = load_family(corpus_path("family-352.json"))
        res = strong_equisingularity_check(fam)
        assert res.verdict is Verdict.REFUTED
        bydict = dict(res.sequences)
        assert bydict["generic"].beta0 == 2
        assert bydict["a = 0"].beta0 == 3
