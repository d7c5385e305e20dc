"""End-to-end acceptance criteria.

Every comparison is exact.  Each test prints one ``criterion N: PASS|FAIL``
line (collected again in the terminal summary) and then asserts.
"""

import time
from fractions import Fraction


from acceptance_log import RESULTS
from pascalmod import (
    GF,
    applicable_variants,
    charpoly,
    charpoly_berkowitz,
    charpoly_hessenberg,
    check_ck_mod3,
    check_final_conjecture,
    check_selfdual_code,
    check_shifted_conjecture,
    chi_mod2,
    chi_mod3_conjectural,
    chi_q_formula,
    chi_qmk_formula,
    closure,
    det_by_digits,
    det_exact,
    diagonal_factors,
    dihedral6_check,
    extract_ck,
    gamma,
    gamma_alt,
    identity,
    inverse,
    is_palindromic,
    leading_principal_minors,
    materialize,
    matrix_power,
    pascal_mod2_spec,
    pascal_mod3_spec,
    pascal_reduced,
    pascal_symmetric,
    primes_up_to,
    thue_morse,
    trace_check,
    triangular,
)
from pascalmod.checks import mod3_digit_determinant, prime_powers_up_to
from test_spectra import GAMMA2_TABLE, GAMMA_TABLE, PRINTED_CK


def record(number, failures, detail=""):
    ok = not failures
    line = f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {detail}"
    if failures:
        line += f"  first failures: {failures[:5]}"
    print(line)
    RESULTS.append(line)
    assert ok, line


def test_criterion_01_thue_morse_determinant():
    start = time.time()
    failures = []
    sign, expected = 1, {}
    for n in range(1, 513):
        sign *= -1 if thue_morse(n - 1) else 1
        expected[n] = sign
    # every det P̄(n)_2 is the n-th leading principal minor of P̄(512)_2
    minors = leading_principal_minors(pascal_reduced(512, 2))
    failures += [n for n in range(1, 513) if minors[n - 1] != expected[n]]
    for n in list(range(1, 65)) + list(range(96, 513, 32)):
        if det_exact(pascal_reduced(n, 2)) != expected[n]:
            failures.append(("direct", n))
    record(1, failures, f"n <= 512, {time.time() - start:.1f}s")


def test_criterion_02_prime_power_sizes():
    start = time.time()
    failures = []
    for q, p in [(2, 2), (4, 2), (8, 2), (16, 2), (32, 2), (3, 3), (9, 3), (27, 3),
                 (5, 5), (25, 5), (7, 7), (49, 7), (11, 11), (13, 13)]:
        dom = GF(p)
        P = pascal_symmetric(q, dom)
        if matrix_power(P, 3) != identity(q, dom):
            failures.append(("cube", q))
        if charpoly(P) != chi_q_formula(q, p):
            failures.append(("charpoly", q))
    record(2, failures, f"14 prime powers, {time.time() - start:.1f}s")


def test_criterion_03_below_prime_powers():
    start = time.time()
    failures = []
    count = 0
    for q in prime_powers_up_to(64, [2, 3, 5, 7]):
        p = next(x for x in (2, 3, 5, 7) if q % x == 0)
        for k in range(q // 2 + 1):
            count += 1
            if chi_qmk_formula(q, k, p) != charpoly(pascal_symmetric(q - k, GF(p))):
                failures.append((q, k))
    record(3, failures, f"{count} instances, {time.time() - start:.1f}s")


def test_criterion_04_mod2_charpoly_and_table():
    start = time.time()
    failures = [n for n in range(1, 257) if chi_mod2(n) != charpoly(pascal_symmetric(n, GF(2)))]
    for n in range(1, 33):
        g = gamma(n)
        if (g.gamma, g.gamma2) != (GAMMA_TABLE[n - 1], GAMMA2_TABLE[n - 1]):
            failures.append(("table", n))
    if (gamma(11).gamma, gamma(22).gamma2, gamma(32).gamma) != (11, 11, 10):
        failures.append("examples")
    record(4, failures, f"n <= 256 and 64 table entries, {time.time() - start:.1f}s")


def test_criterion_05_gamma_identities():
    start = time.time()
    failures = []
    counts = {}
    for n in range(1, 2**14 + 1):
        g = gamma(n).gamma
        for v in applicable_variants(n):
            counts[v] = counts.get(v, 0) + 1
            if gamma_alt(n, v) != g:
                failures.append((n, v))
    record(5, failures, f"n <= 2^14, checks per variant {counts}, {time.time() - start:.1f}s")


def test_criterion_06_universal_cofactors():
    start = time.time()
    failures = []
    for k in range(6):
        res = extract_ck(k)
        expected = PRINTED_CK[k]
        if not res.stable:
            failures.append(("unstable", k))
        # the elided middles are fixed by palindromy, so the printed data determine c_k
        if res.ck != expected or not is_palindromic(res.ck):
            failures.append(("coefficients", k))
    record(6, failures, f"k <= 5, {time.time() - start:.1f}s")


def test_criterion_07_mod3_evidence():
    start = time.time()
    failures = [("ck", k) for k in range(9) if not check_ck_mod3(k).passed]
    failures += [n for n in range(1, 244) if chi_mod3_conjectural(n) != charpoly(pascal_symmetric(n, GF(3)))]
    record(7, failures, f"k <= 8 and n <= 243, {time.time() - start:.1f}s")


def test_criterion_08_final_conjecture_and_remarks():
    start = time.time()
    failures = []
    qs = [q for q in prime_powers_up_to(64) if q % 3 == 2]
    assert qs == [2, 5, 8, 11, 17, 23, 29, 32, 41, 47, 53, 59]
    for q in qs:
        for check in (check_final_conjecture, check_selfdual_code, check_shifted_conjecture):
            r = check(q)
            if r.verdict == "not-applicable" and check is check_selfdual_code and q % 2 == 0:
                continue
            if not r.passed:
                failures.append((check.__name__, q, r.verdict))
    record(8, failures, f"q in {qs}, {time.time() - start:.1f}s")


def test_criterion_09_autosimilar():
    start = time.time()
    failures = []
    if diagonal_factors(pascal_mod2_spec()) != (1, -1):
        failures.append("D mod 2")
    if diagonal_factors(pascal_mod3_spec()) != (1, -2, Fraction(-1, 2)):
        failures.append("D mod 3")
    for name, spec in (("mod2", pascal_mod2_spec()), ("mod3", pascal_mod3_spec())):
        minors = leading_principal_minors(materialize(spec, 243))
        failures += [(name, n) for n in range(1, 244) if minors[n - 1] != det_by_digits(spec, n)]
        for n in list(range(1, 28)) + [81, 128, 200, 243]:
            if det_exact(materialize(spec, n)) != det_by_digits(spec, n):
                failures.append((name, "direct", n))
    failures += [("mod3-det", n) for n in range(1, 121)
                 if det_exact(pascal_reduced(n, 3)) != mod3_digit_determinant(n)]
    for n in range(1, 129):
        if not {int(x) for x in inverse(pascal_reduced(n, 2)).a.ravel()} <= {-1, 0, 1}:
            failures.append(("inverse", n))
    record(9, failures, f"{time.time() - start:.1f}s")


def test_criterion_10_groups():
    start = time.time()
    failures = []
    orders = {}
    for p, expected in ((5, 24), (7, 42), (29, 120)):
        dom = GF(p)
        G = closure([pascal_symmetric(p, dom), triangular("L", p, dom)])
        orders[p] = G.order
        if G.truncated or G.order != expected:
            failures.append(("order", p, G.order, expected))
    for q, p in ((2, 2), (4, 2), (8, 2), (3, 3), (9, 3), (5, 5), (7, 7)):
        if not dihedral6_check(q, p).passed:
            failures.append(("dihedral", q))
    failures += [("trace", p) for p in primes_up_to(31) if p > 2 and not trace_check(p).passed]
    record(10, failures, f"closure orders {orders}, {time.time() - start:.1f}s")


def test_criterion_11_integer_structure():
    start = time.time()
    failures = []
    for n in range(1, 41):
        chi = charpoly_berkowitz(pascal_symmetric(n))
        if chi.coeffs != tuple((-1) ** n * c for c in reversed(chi.coeffs)):
            failures.append(("reciprocal", n))
    failures += [("odd", n) for n in range(1, 38, 2) if charpoly_berkowitz(pascal_symmetric(n))(1) != 0]
    for n in range(65):
        T = triangular("T", n)
        if T @ T.T != pascal_symmetric(n):
            failures.append(("TTt", n))
    for p in (2, 3, 5, 7):
        for n in range(1, 25):
            P = pascal_symmetric(n, GF(p))
            if charpoly_berkowitz(P) != charpoly_hessenberg(P):
                failures.append(("berkowitz", n, p))
    record(11, failures, f"{time.time() - start:.1f}s")
