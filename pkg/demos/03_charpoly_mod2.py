# Over F_2 the characteristic polynomial only has the factors t+1 and t^2+t+1.
from pascalmod import GF, charpoly, chi_mod2, factorize, gamma, pascal_symmetric

for n in (5, 11, 21, 22, 32):
    chi = charpoly(pascal_symmetric(n, GF(2)))
    rep = factorize(chi)
    g = gamma(n)
    print(n, (rep.mult_t_plus_1, rep.mult_t2_t_1), (g.gamma, g.gamma2), chi == chi_mod2(n))

print([gamma(n).gamma for n in range(1, 33)])
