# The regularized one-variable invariant.
#
# Three catalog operators carry the crossing-switch rule of the Alexander
# polynomial, yet their fully closed traces vanish on every link.  Closing
# all strands but one with weighted traces regularizes this: the partially
# closed operator is a multiple of the identity, and the multiple is the
# Alexander invariant normalized to 1 on the unknot, with
#     nabla(L+) - nabla(L-) = (t - 1/t) nabla(L0).

from ybtrace import BraidWord, alexander_nabla, get_named_braid, parse_braid
from ybtrace.ring import ScalarContext, format_scalar

print("values on the named knots and links:")
for name in ("0_1", "3_1", "4_1", "5_1", "5_2", "2^2_1", "4^2_1"):
    braid = get_named_braid(name).braid
    print(f"  {name:7s} {format_scalar(alexander_nabla(braid))}")

# the crossing-switch rule, checked on the trefoil
ctx = ScalarContext(("t",))
z = ctx.parse("t - t^-1")
base = parse_braid("1 1 1")
plus = BraidWord(2, base.letters + (1,))
minus = BraidWord(2, base.letters + (-1,))
lhs = alexander_nabla(plus) - alexander_nabla(minus)
rhs = z * alexander_nabla(base)
print("\ncrossing-switch rule on the trefoil family:", lhs == rhs)

# split closures vanish
print("split two-component closure:", format_scalar(alexander_nabla(BraidWord(2))))
