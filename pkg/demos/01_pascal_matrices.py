# Symmetric Pascal matrices and their reductions mod small primes.
from pascalmod import GF, det_exact, pascal_reduced, pascal_symmetric, triangular, matrix_power, identity

P = pascal_symmetric(6)          # entries C(i+j, i)
print(P.tolist())
T = triangular("T", 6)           # lower triangular, entries C(i, j)
print(T @ T.T == P)              # P = T T^t
print(det_exact(P))              # always 1

# reductions: {0,1} mod 2, {-1,0,1} mod 3
print(pascal_reduced(8, 2).tolist())
print(pascal_reduced(9, 3).tolist())

# at a prime power size the reduction has order 3
P9 = pascal_symmetric(9, GF(3))
print(matrix_power(P9, 3) == identity(9, GF(3)))
