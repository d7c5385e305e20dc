# The cofactor c_k of chi_{q+k} mod p looks independent of p; recover it over Z by CRT.
from pascalmod import check_ck_mod2, check_ck_mod3, default_prime_powers, extract_ck

for k in range(6):
    res = extract_ck(k)
    print(k, res.stable, res.ck)

print(default_prime_powers(5)[:6])      # (p, l) pairs used for k = 5
print(check_ck_mod3(4).verdict, check_ck_mod2(4).verdict)
