"""Verification harness: one function per theorem or conjecture instance.

Each ``check_*`` returns a :class:`CheckReport` (or a list of them).  The
``TARGETS`` table maps verification target names to task builders used by
the command line; a task is a picklable ``(function, args)`` pair so that
instances can be spread over worker processes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from .autosimilar import det_by_digits, diagonal_factors, materialize, pascal_mod2_spec, pascal_mod3_spec
from .domains import GF
from .errors import ConjectureViolation, ParameterError
from .exactmat import charpoly, det_exact, identity, inverse, leading_principal_minors, matrix_power
from .groups import dihedral6_check, exceptional_order_check, trace_check
from .numtheory import digits, prime_power_base, primes_up_to, thue_morse
from .pascal import pascal_reduced, pascal_symmetric
from .polyring import Poly, roots_have_two_power_order
from .reports import FAIL, NOT_APPLICABLE, CheckReport, verdict
from .spectra import (
    applicable_variants,
    check_ck_mod2,
    check_ck_mod3,
    check_final_conjecture,
    check_selfdual_code,
    check_shifted_conjecture,
    chi_mod2,
    chi_mod3_conjectural,
    chi_q_formula,
    chi_qmk_formula,
    extract_ck,
    gamma,
    gamma_alt,
)


def _poly_mismatch(got: Poly, expected: Poly) -> dict:
    return {"charpoly": got.to_json(), "expected": expected.to_json()}


def thue_morse_sign_product(n: int) -> int:
    return -1 if sum(thue_morse(k) for k in range(n)) % 2 else 1


def mod3_digit_determinant(n: int):
    """(-2)^(a-b), a and b counting the digits 1 and 2 of all integers below n in base 3."""
    from fractions import Fraction

    a = b = 0
    for i in range(n):
        ds = digits(i, 3)
        a += ds.count(1)
        b += ds.count(2)
    return Fraction(-2) ** (a - b)


# -- theorem-backed checks -------------------------------------------------


def check_thm1(n: int) -> CheckReport:
    """det of the {0,1} reduction of P(n), via Bareiss, against the Thue-Morse sign product."""
    d = det_exact(pascal_reduced(n, 2))
    expected = thue_morse_sign_product(n)
    return CheckReport("thm1", {"n": n}, verdict(d == expected),
                       None if d == expected else {"det": str(d), "expected": expected})


def check_thm1_sweep(max_n: int) -> List[CheckReport]:
    """Every n <= max_n in one pass: det of the {0,1} reduction of P(n) is the
    n-th leading principal minor of the reduction of P(max_n)."""
    if max_n < 1:
        return []
    minors = leading_principal_minors(pascal_reduced(max_n, 2))
    out = []
    sign = 1
    for n in range(1, max_n + 1):
        sign *= -1 if thue_morse(n - 1) else 1
        d = minors[n - 1] if n - 1 < len(minors) else None
        if d is None:
            d = det_exact(pascal_reduced(n, 2))
        ok = d == sign
        out.append(CheckReport("thm1", {"n": n}, verdict(ok), None if ok else {"det": str(d), "expected": sign}))
    return out


def check_prop2(q: int) -> CheckReport:
    p, l = prime_power_base(q)
    dom = GF(p)
    P = pascal_symmetric(q, dom)
    order3 = matrix_power(P, 3) == identity(q, dom)
    got = charpoly(P)
    expected = chi_q_formula(q, p)
    ok = order3 and got == expected
    witness = None
    if not ok:
        witness = {"order3": order3, **_poly_mismatch(got, expected)}
    return CheckReport("prop2", {"q": q, "p": p}, verdict(ok), witness)


def check_thm3(q: int, k: int) -> CheckReport:
    p, _ = prime_power_base(q)
    got = charpoly(pascal_symmetric(q - k, GF(p)))
    expected = chi_qmk_formula(q, k, p)
    ok = got == expected
    return CheckReport("thm3", {"q": q, "p": p, "k": k}, verdict(ok), None if ok else _poly_mismatch(got, expected))


def check_thm4(n: int) -> CheckReport:
    got = charpoly(pascal_symmetric(n, GF(2)))
    expected = chi_mod2(n)
    g = gamma(n)
    ok = got == expected
    return CheckReport("thm4", {"n": n, "gamma": g.gamma, "gamma2": g.gamma2}, verdict(ok),
                       None if ok else _poly_mismatch(got, expected))


def check_thm5(n: int) -> CheckReport:
    target = gamma(n).gamma
    values = {v: gamma_alt(n, v) for v in applicable_variants(n)}
    bad = {v: x for v, x in values.items() if x != target}
    return CheckReport("thm5", {"n": n, "variants": sorted(values)}, verdict(not bad),
                       {"gamma": target, "mismatches": bad} if bad else None)


def check_det_by_digits(which: str, n: int) -> CheckReport:
    spec = pascal_mod2_spec() if which == "mod2" else pascal_mod3_spec()
    direct = det_exact(materialize(spec, n))
    formula = det_by_digits(spec, n)
    ok = direct == formula
    return CheckReport("det-by-digits", {"seed": which, "n": n}, verdict(ok),
                       None if ok else {"det": str(direct), "formula": str(formula)})


def check_det_by_digits_sweep(which: str, max_n: int) -> List[CheckReport]:
    """All n <= max_n from the leading principal minors of M(max_n)."""
    if max_n < 1:
        return []
    spec = pascal_mod2_spec() if which == "mod2" else pascal_mod3_spec()
    minors = leading_principal_minors(materialize(spec, max_n))
    out = []
    for n in range(1, max_n + 1):
        direct = minors[n - 1] if n - 1 < len(minors) else det_exact(materialize(spec, n))
        formula = det_by_digits(spec, n)
        ok = direct == formula
        out.append(CheckReport("det-by-digits", {"seed": which, "n": n}, verdict(ok),
                               None if ok else {"det": str(direct), "formula": str(formula)}))
    return out


def check_ldu_seeds() -> List[CheckReport]:
    from fractions import Fraction

    out = []
    for name, spec, expected in (
        ("mod2", pascal_mod2_spec(), (1, -1)),
        ("mod3", pascal_mod3_spec(), (1, -2, Fraction(-1, 2))),
    ):
        d = diagonal_factors(spec)
        ok = tuple(d) == tuple(Fraction(x) for x in expected)
        out.append(CheckReport("ldu-seed", {"seed": name, "D": [str(x) for x in d]}, verdict(ok),
                               None if ok else {"expected": [str(x) for x in expected]}))
    return out


def check_mod3_det(n: int) -> CheckReport:
    d = det_exact(pascal_reduced(n, 3))
    expected = mod3_digit_determinant(n)
    ok = d == expected
    return CheckReport("mod3-det", {"n": n}, verdict(ok), None if ok else {"det": str(d), "expected": str(expected)})


def check_inverse_mod2(n: int) -> CheckReport:
    inv = inverse(pascal_reduced(n, 2))
    vals = {int(x) for x in inv.a.ravel()}
    ok = vals <= {-1, 0, 1}
    return CheckReport("inverse-mod2", {"n": n}, verdict(ok), None if ok else {"values": sorted(vals)})


# -- conjecture-backed checks ----------------------------------------------


def check_conj6(k: int, prime_powers: Optional[Sequence[Tuple[int, int]]] = None) -> CheckReport:
    try:
        res = extract_ck(k, prime_powers)
    except ConjectureViolation as exc:
        return CheckReport("conj6", {"k": k}, FAIL, exc.witness, kind="conjecture")
    ck = res.ck
    params = {"k": k, "stable": res.stable}
    if not res.stable:
        return CheckReport("conj6", params, NOT_APPLICABLE, {"ck": ck.to_json(), "reason": "add primes"},
                           kind="conjecture")
    ok = ck.is_monic() and ck.degree == 4 * k
    return CheckReport("conj6", params, verdict(ok), {"ck": ck.to_json()}, kind="conjecture")


def check_conj7_recursion(n: int) -> CheckReport:
    got = charpoly(pascal_symmetric(n, GF(3)))
    try:
        expected = chi_mod3_conjectural(n)
    except ConjectureViolation as exc:
        return CheckReport("conj7-recursion", {"n": n}, FAIL, exc.witness, kind="conjecture")
    ok = got == expected
    return CheckReport("conj7-recursion", {"n": n}, verdict(ok), None if ok else _poly_mismatch(got, expected),
                       kind="conjecture")


def check_roots_two_power(n: int) -> CheckReport:
    chi = charpoly(pascal_symmetric(n, GF(3)))
    ok = roots_have_two_power_order(chi)
    return CheckReport("roots-two-power", {"n": n}, verdict(ok), None if ok else {"charpoly": chi.to_json()},
                       kind="conjecture")


# -- targets -----------------------------------------------------------------


@dataclass
class Bounds:
    max_n: Optional[int] = None
    max_q: Optional[int] = None
    max_k: Optional[int] = None
    primes: Optional[List[int]] = None


Task = Tuple[Callable, tuple]


def prime_powers_up_to(limit: int, primes: Optional[Sequence[int]] = None) -> List[int]:
    out = []
    for q in range(2, limit + 1):
        try:
            p, _ = prime_power_base(q)
        except ParameterError:
            continue
        if primes is None or p in primes:
            out.append(q)
    return out


def _thm1(b: Bounds) -> List[Task]:
    return [(check_thm1_sweep, (b.max_n if b.max_n is not None else 512,))]


PROP2_DEFAULT = (2, 4, 8, 16, 32, 3, 9, 27, 5, 25, 7, 49, 11, 13)


def _prop2(b: Bounds) -> List[Task]:
    if b.max_q is None and b.primes is None:
        qs = PROP2_DEFAULT
    else:
        qs = prime_powers_up_to(b.max_q or 64, b.primes)
    return [(check_prop2, (q,)) for q in qs]


def _thm3(b: Bounds) -> List[Task]:
    primes = b.primes or [2, 3, 5, 7]
    qs = prime_powers_up_to(b.max_q or 64, primes)
    return [(check_thm3, (q, k)) for q in qs for k in range(q // 2 + 1)]


def _thm4(b: Bounds) -> List[Task]:
    return [(check_thm4, (n,)) for n in range(1, (b.max_n if b.max_n is not None else 256) + 1)]


def _thm5(b: Bounds) -> List[Task]:
    return [(check_thm5, (n,)) for n in range(1, (b.max_n if b.max_n is not None else 1 << 14) + 1)]


def _conj6(b: Bounds) -> List[Task]:
    max_k = b.max_k if b.max_k is not None else 5
    tasks = []
    for k in range(max_k + 1):
        if b.primes:
            pairs = []
            for p in b.primes:
                l = 1
                while p ** l < 2 * k:
                    l += 1
                pairs.append((p, l))
            tasks.append((check_conj6, (k, pairs)))
        else:
            tasks.append((check_conj6, (k,)))
    return tasks


def _conj7(b: Bounds) -> List[Task]:
    max_n = b.max_n if b.max_n is not None else 243
    max_k = b.max_k if b.max_k is not None else 8
    tasks: List[Task] = [(check_ck_mod3, (k,)) for k in range(max_k + 1)]
    tasks += [(check_ck_mod2, (k,)) for k in range(max_k + 1)]
    tasks += [(check_conj7_recursion, (n,)) for n in range(1, max_n + 1)]
    tasks += [(check_roots_two_power, (n,)) for n in range(1, max_n + 1)]
    return tasks


def _q_2mod3(b: Bounds) -> List[int]:
    # for these targets --primes lists the prime powers q themselves
    if b.primes:
        return list(b.primes)
    return [q for q in prime_powers_up_to(b.max_q or 64) if q % 3 == 2]


def _conj8(b: Bounds) -> List[Task]:
    return [(check_final_conjecture, (q,)) for q in _q_2mod3(b)]


def _selfdual(b: Bounds) -> List[Task]:
    return [(check_selfdual_code, (q,)) for q in _q_2mod3(b)]


def _shifted(b: Bounds) -> List[Task]:
    return [(check_shifted_conjecture, (q,)) for q in _q_2mod3(b)]


def _autosimilar(b: Bounds) -> List[Task]:
    max_n = b.max_n if b.max_n is not None else 243
    tasks: List[Task] = [(check_ldu_seeds, ())]
    tasks += [(check_det_by_digits_sweep, (w, max_n)) for w in ("mod2", "mod3")]
    tasks += [(check_inverse_mod2, (n,)) for n in range(1, min(max_n, 128) + 1)]
    return tasks


def _mod3det(b: Bounds) -> List[Task]:
    return [(check_mod3_det, (n,)) for n in range(1, (b.max_n if b.max_n is not None else 120) + 1)]


def _groups(b: Bounds) -> List[Task]:
    primes = b.primes or [5, 7, 29, 11]
    tasks: List[Task] = [(exceptional_order_check, (p,)) for p in primes]
    tasks += [(dihedral6_check, (q, prime_power_base(q)[0])) for q in (2, 4, 8, 3, 9, 5, 7)]
    tasks += [(trace_check, (p,)) for p in primes_up_to(b.max_q or 31) if p > 2]
    return tasks


TARGETS: Dict[str, Callable[[Bounds], List[Task]]] = {
    "thm1": _thm1,
    "prop2": _prop2,
    "thm3": _thm3,
    "thm4": _thm4,
    "thm5": _thm5,
    "conj6": _conj6,
    "conj7": _conj7,
    "conj8": _conj8,
    "remark-selfdual": _selfdual,
    "remark-shifted": _shifted,
    "autosimilar-ldu": _autosimilar,
    "mod3-det": _mod3det,
    "groups": _groups,
}


def tasks_for(target: str, bounds: Bounds) -> List[Task]:
    if target == "all":
        return [t for name in TARGETS for t in TARGETS[name](bounds)]
    return TARGETS[target](bounds)


def run_task(task: Task) -> List[CheckReport]:
    fn, args = task
    out = fn(*args)
    return out if isinstance(out, list) else [out]
