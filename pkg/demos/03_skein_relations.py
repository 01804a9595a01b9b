# Annihilating relations and the skein sums they induce.
#
# When a crossing operator satisfies sum(k_i R^i) = 0, the associated
# invariant obeys sum(k_i alpha^i T(L_i)) = 0 over links that differ only
# by the power of one crossing.  The registry stores the relation for each
# catalog matrix; this script verifies a few and evaluates their skein sums
# on crossing-inserted braids.

from ybtrace import (
    ANNIHILATING_RELATIONS,
    SkeinFamily,
    check_skein_family,
    get_table1_eyb,
    parse_braid,
    verify_annihilating,
)

print("matrix relations:")
for name in sorted(ANNIHILATING_RELATIONS):
    spec = ANNIHILATING_RELATIONS[name]
    ctx = spec.context()
    ok = bool(verify_annihilating(spec.matrix(ctx), spec.coeffs(ctx)))
    terms = " + ".join(f"({c})*R^{p}" for p, c in spec.coefficients)
    print(f"  {name:15s} {terms} = 0   verified: {ok}")

# the three-term relation of R2.1 drives the familiar crossing-switch rule
op = get_table1_eyb("R2.1", 1)
relation = ANNIHILATING_RELATIONS["R2.1"]
base = parse_braid("1 1")
family = SkeinFamily(
    base, 1, tuple((p, op.ctx.parse(c)) for p, c in relation.coefficients)
)
print("\nfamily members around the closure of '1 1' (crossing powers 1, 0, -1):")
for power, _ in family.terms:
    print(f"  power {power:+d}: word '{family.member(power)}'")
verdict = check_skein_family(op, family)
print("weighted sum over the family vanishes:", bool(verdict))
