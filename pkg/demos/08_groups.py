# Groups generated by P(p) and the signed triangular matrix L(p) over F_p.
from pascalmod import GF, closure, generator_order_2x2, pascal_symmetric, triangular
from pascalmod.pascal import L_GENERATOR, P_GENERATOR

for p in (5, 7, 11, 13, 29):
    G = closure([pascal_symmetric(p, GF(p)), triangular("L", p, GF(p))])
    quotients = [generator_order_2x2(p, [P_GENERATOR, L_GENERATOR], m) for m in ("scalars", "sign", "none")]
    print(p, G.order, quotients)
# the n x n order matches the 2x2 generators modulo all scalars, not modulo -I alone
