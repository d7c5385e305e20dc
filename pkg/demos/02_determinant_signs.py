# det of the {0,1} matrix is +-1 and follows the Thue-Morse sequence.
from pascalmod import det_exact, leading_principal_minors, pascal_reduced, thue_morse

signs = []
s = 1
for n in range(1, 33):
    s *= -1 if thue_morse(n - 1) else 1
    signs.append(s)

dets = [det_exact(pascal_reduced(n, 2)) for n in range(1, 33)]
print(dets)
print(dets == signs)

# one elimination pass gives every leading minor at once
minors = leading_principal_minors(pascal_reduced(256, 2))
print(set(minors))
