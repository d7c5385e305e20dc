# Conjectural recursion for chi_n mod 3, and the 2-power order of its roots.
from pascalmod import GF, charpoly, chi_mod3_conjectural, pascal_symmetric, roots_have_two_power_order

bad = [n for n in range(1, 122) if chi_mod3_conjectural(n) != charpoly(pascal_symmetric(n, GF(3)))]
print("mismatches up to 121:", bad)
print(all(roots_have_two_power_order(charpoly(pascal_symmetric(n, GF(3)))) for n in range(1, 60)))
