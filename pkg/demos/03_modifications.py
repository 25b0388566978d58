"""
Rechecking regularity upstairs
==============================

Blowing up the singular axis, or lifting to the Nash modification,
produces a new parametrized family.  Regularity is not inherited in
either direction, so the interesting move is to run the same checkers
on the modified family and compare.

The first family below is the cautionary one: perfectly regular
downstairs, refuted upstairs under both modifications.  The second
stays regular through both.
"""

from pathlib import Path

from equising import (
    blowup_singular_locus,
    check_factorization,
    load_family,
    nash_modification,
    whitney_check,
)

corpus = Path(__file__).resolve().parent.parent / "corpus"


def tour(name):
    fam = load_family(corpus / f"{name}.json")
    print("family:", ", ".join(fam.entry_strings()))
    print("  downstairs:", whitney_check(fam).verdict.value)

    for build in (blowup_singular_locus, nash_modification):
        res = build(fam)
        print(f"  {res.kind}: chart", ", ".join(res.total.entry_strings()),
              "with exceptional locus", res.divisor)
        for d in res.pruned.dropped:
            print(f"    dropped {d.entry}: {d.certificate or d.kind}")
        kept = res.family
        fact = check_factorization(fam, kept)
        print("    factors through it:", fact.status,
              "" if not fact.certificates else f"({'; '.join(fact.certificates)})")
        print("    upstairs:", whitney_check(kept).verdict.value)


tour("family-467")
print()
tour("family-589")
