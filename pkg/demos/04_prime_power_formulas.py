# Closed forms near prime power sizes q = p^l.
from pascalmod import GF, charpoly, chi_q_formula, chi_qmk_formula, pascal_symmetric

for q, p in ((8, 2), (9, 3), (25, 5), (49, 7)):
    print(q, chi_q_formula(q, p) == charpoly(pascal_symmetric(q, GF(p))))

q, p = 27, 3
ok = all(chi_qmk_formula(q, k, p) == charpoly(pascal_symmetric(q - k, GF(p))) for k in range(q // 2 + 1))
print("sizes 27-k, k <= 13:", ok)
print(chi_qmk_formula(27, 4, 3))
