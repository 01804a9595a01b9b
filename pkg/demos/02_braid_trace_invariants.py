# From an enhanced operator to polynomial link invariants.
#
# An enhanced operator (R, mu, alpha, beta) turns the braid-group
# representation built from R into a link invariant
#     T(L) = alpha^(-writhe) beta^(-n) Tr(rep(word) mu^(x n)).
# The R2.1 operator with mu = diag(sqrt(pq), 1/sqrt(pq)) produces the Jones
# polynomial in the combined variable t = pq.

from ybtrace import (
    NAMED_LINKS,
    compute_ts,
    get_named_braid,
    get_table1_eyb,
    parse_braid,
    unknot_value,
    verify_eyb,
)
from ybtrace.ring import ScalarContext, format_scalar, substitute

op = get_table1_eyb("R2.1", 1)
print("operator verifies the enhancement conditions:", bool(verify_eyb(op)))
print("one-strand closure value:", format_scalar(unknot_value(op)))

# collapse p q into the single variable t = pq for display
target = ScalarContext(("t", "q"))
collapse = {"p": target.parse("t*q^-1")}

print("\nnormalized values over the named closures:")
for name in NAMED_LINKS:
    link = get_named_braid(name)
    result = compute_ts(op, link.braid, normalized=True)
    value = substitute(result.value, collapse, target)
    print(f"  {name:7s} ({link.components} component"
          f"{'s' if link.components > 1 else ''}):  {format_scalar(value)}")

# any braid word works, not just the registry ones
granny = parse_braid("1 1 1 2 2 2")
value = substitute(compute_ts(op, granny, normalized=True).value, collapse, target)
print("\ncomposite closure of '1 1 1 2 2 2':", format_scalar(value))
