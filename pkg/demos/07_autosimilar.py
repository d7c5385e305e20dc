# Matrices defined digit by digit from a small seed.
from pascalmod import AutosimilarSpec, det_by_digits, det_exact, diagonal_factors, materialize

spec = AutosimilarSpec.from_entries(3, [1, 1, 1, 1, -1, 0, 1, 0, 0])   # C(i+j,i) mod 3
print(diagonal_factors(spec))                                            # (1, -2, -1/2)
for n in (5, 10, 26, 50):
    print(n, det_exact(materialize(spec, n)), det_by_digits(spec, n))

odd = AutosimilarSpec.from_entries(2, ["1", "2", "1/3", "1"])
print(odd.nondegenerate, det_by_digits(odd, 6), det_exact(materialize(odd, 6)))
