# Dressing a solution into a higher dimension.
#
# A diagonal dressing keeps a base solution on an index subset J and fills
# every other input pair with a weighted swap.  Compatible weights yield a
# new solution; extending the weight matrix trivially (zero padding) changes
# no invariant, while padding with beta under the matching diagonal
# condition can genuinely enrich them.

from ybtrace import compute_ts, get_named_braid, verify_eyb
from ybtrace.dressing import (
    DiagonalDressingSpec,
    dress_diagonal,
    dressed_eyb,
    preset_dressings,
    preset_names,
)
from ybtrace.ring import ScalarContext, format_scalar, substitute
from ybtrace.tensor import matrix_substitute
from ybtrace.catalog import get_rmatrix
from ybtrace.eyb import get_table1_entry

print("preset dressings:", ", ".join(preset_names()))

# trivial extension: same invariants as the base operator
ctx = ScalarContext(("p", "q"), (("sqrt_pq", "p*q"),))
base_matrix = matrix_substitute(get_rmatrix("R2.1").matrix, {}, ctx)
base_op = get_table1_entry("R2.1", 1).build(ctx=ctx)
spec = DiagonalDressingSpec(ctx, 3, (1, 3), {(2, 2): "q"})
dressed = dress_diagonal(base_matrix, spec)
trivial = dressed_eyb(base_op, dressed, spec, mode="trivial")
print("\ntrivially extended operator verifies:", bool(verify_eyb(trivial)))
for name in ("3_1", "2^2_1"):
    braid = get_named_braid(name).braid
    a = compute_ts(trivial, braid).value
    b = compute_ts(base_op, braid).value
    print(f"  {name}: dressed equals base invariant: {a == b}")

# the nontrivial three-dimensional preset enriches the link values
preset = preset_dressings("d3_R21")
target = ScalarContext(("t", "q", "s", "b", "y"))
collapse = {"p": target.parse("t*q^-1"), "a": target.parse("s*b^-1*y^-1")}
print("\nnontrivial preset d3_R21 (weights enter links through s = aby):")
for name in ("3_1", "2^2_1", "4^2_1"):
    braid = get_named_braid(name).braid
    value = compute_ts(preset.eyb, braid).value
    print(f"  {name:6s} raw: {format_scalar(substitute(value, collapse, target))}")

# the four-dimensional preset collapses knots but still separates links
preset4 = preset_dressings("d4_R22")
t4 = ScalarContext(("t", "q", "a", "b", "y", "c", "d", "g", "s", "w"))
collapse4 = {"p": t4.parse("t*q^-1"), "h": t4.parse("s*g^-1")}
print("\nnontrivial preset d4_R22 (normalized, s = hg):")
for name in ("3_1", "5_2", "2^2_1", "4^2_1", "5^2_1"):
    braid = get_named_braid(name).braid
    value = compute_ts(preset4.eyb, braid, normalized=True).value
    print(f"  {name:6s} {format_scalar(substitute(value, collapse4, t4))}")
