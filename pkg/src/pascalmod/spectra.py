"""Characteristic polynomials of symmetric Pascal matrices modulo primes.

Every characteristic polynomial here is the monic ``det(tI - M)``.  Where a
closed form is stated with ``det(tI + P(k))`` it is computed as the
characteristic polynomial of ``-P(k)``.

Closed forms that follow from proven identities (``chi_mod2``,
``chi_q_formula``, ``chi_qmk_formula``) are exact statements and their
checks live in :mod:`pascalmod.checks`.  The ``check_*`` functions below
concern conjectural statements: a failing instance yields a report with
verdict ``"fail"``, never an exception.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import List, NamedTuple, Optional, Sequence, Tuple

from .domains import GF
from .errors import ConjectureViolation, ParameterError
from .exactmat import charpoly, identity, matrix_power, rank
from .numtheory import block_count, epsilon, prime_power_base, prime_power_exponent, primes_up_to
from .pascal import pascal_symmetric, shifted_pascal
from .polyring import Poly, crt_lift, extract_multiplicity, is_palindromic
from .reports import FAIL, NOT_APPLICABLE, CheckReport, verdict

__all__ = [
    "GammaPair",
    "FactorizationReport",
    "CkExtraction",
    "gamma",
    "gamma_at_level",
    "gamma_alt",
    "applicable_variants",
    "chi_mod2",
    "chi_q_formula",
    "chi_qmk_formula",
    "chi_mod3_conjectural",
    "factorize",
    "det_tI_plus_P",
    "default_prime_powers",
    "ck_residue",
    "extract_ck",
    "check_ck_mod3",
    "check_ck_mod2",
    "check_final_conjecture",
    "check_selfdual_code",
    "check_shifted_conjecture",
]


@dataclass(frozen=True)
class GammaPair:
    gamma: int
    gamma2: int


@dataclass(frozen=True)
class FactorizationReport:
    """Multiplicities of t-1, t+1 and t^2+t+1 in a polynomial over F_p.

    Over F_2 the factors t-1 and t+1 coincide and are reported as t+1; over
    F_3, t^2+t+1 = (t-1)^2 and is reported through t-1.
    """

    mult_t_minus_1: int
    mult_t_plus_1: int
    mult_t2_t_1: int
    cofactor: Poly

    def recombine(self) -> Poly:
        dom = self.cofactor.domain
        t = Poly.t(dom)
        return (
            (t - 1) ** self.mult_t_minus_1
            * (t + 1) ** self.mult_t_plus_1
            * (t * t + t + 1) ** self.mult_t2_t_1
            * self.cofactor
        )


def factorize(f: Poly) -> FactorizationReport:
    dom = f.domain
    p = dom.p
    t = Poly.t(dom)
    m3 = 0
    if p != 3:
        m3, f = extract_multiplicity(f, t * t + t + 1)
    m_plus, f = extract_multiplicity(f, t + 1)
    m_minus = 0
    if p != 2:
        m_minus, f = extract_multiplicity(f, t - 1)
    return FactorizationReport(m_minus, m_plus, m3, f)


# -- gamma ----------------------------------------------------------------


def _level_constant(l: int) -> int:
    return ((1 << l) + 2 * (-1) ** l) // 3


def gamma_at_level(n: int, l: int) -> int:
    """Evaluate the defining recursion with ``n = 2**l - k``, ``0 <= k <= 2**(l-1)``.

    Uses :func:`gamma` for the inner value.
    """
    k = (1 << l) - n
    if k < 0 or 2 * k > (1 << l):
        raise ParameterError(f"{n} is not 2^{l} - k with 0 <= k <= 2^{l - 1}")
    return _level_constant(l) - k + 2 * _gamma(k)


@lru_cache(maxsize=None)
def _gamma(n: int) -> int:
    if n == 0:
        return 0
    l = (n - 1).bit_length()  # 2^(l-1) < n <= 2^l, so k < n
    k = (1 << l) - n
    return _level_constant(l) - k + 2 * _gamma(k)


def gamma(n: int) -> GammaPair:
    """Multiplicities of (t+1) and (t^2+t+1) in det(tI - P(n)) over F_2."""
    if n < 0:
        raise ParameterError("gamma needs n >= 0")
    g = _gamma(n)
    g2, odd = divmod(n - g, 2)
    if odd or g2 < 0:
        raise ArithmeticError(f"gamma({n}) = {g} gives a non-integral gamma2")
    return GammaPair(g, g2)


@lru_cache(maxsize=None)
def _gamma_iv(n: int) -> int:
    # the parity recursion alone, independent of the defining one
    if n == 0:
        return 0
    m, odd = divmod(n, 2)
    base = m - _gamma_iv(m)
    if odd:
        base += ((1 << (1 + 2 * block_count(m))) + 1) // 3
    return base


def _variant_params(n: int, variant: str):
    """Decomposition of n for the given variant, or None when out of range."""
    if variant == "i":
        if n < 1:
            return None
        l = n.bit_length() - 1
        k = n - (1 << l)
        return (l, k) if 2 * k <= (1 << l) else None
    if variant == "ii":
        if n < 1:
            return None
        l = n.bit_length()  # 2^(l-1) <= n < 2^l
        k = (1 << l) - n
        return (l, k) if 4 * k >= (1 << l) and 2 * k <= (1 << l) else None
    if variant == "iii":
        if n < 2:
            return None
        l = (n - 1).bit_length() - 1  # 2^l < n <= 2^(l+1)
        return (l, n - (1 << l))
    if variant in ("iv", "iv-even"):
        if variant == "iv-even" and n % 2:
            return None
        return (n // 2,)
    if variant == "iv-odd":
        return (n // 2,) if n % 2 else None
    if variant == "iv-odd-minus":
        return ((n + 1) // 2,) if n % 2 else None
    raise ParameterError(f"unknown gamma variant {variant!r}")


VARIANTS = ("i", "ii", "iii", "iv", "iv-even", "iv-odd", "iv-odd-minus")


def applicable_variants(n: int) -> List[str]:
    return [v for v in VARIANTS if _variant_params(n, v) is not None]


def gamma_alt(n: int, variant: str) -> int:
    """gamma(n) through one of the alternative identities.

    ``"i"``: gamma(2^l + k) = c_l - k + 4 gamma(k), 0 <= k <= 2^(l-1), where
    c_l = (2^l + 2(-1)^l)/3.
    ``"ii"``: gamma(2^l - k) = gamma(k) + 2 gamma(2^(l-1) - k), 2^(l-2) <= k <= 2^(l-1).
    ``"iii"``: gamma(2^l + k) = 1 + gamma(2^l + k - 1) + 2 gamma(2^l - k) - 2 gamma(2^l + 1 - k),
    1 <= k <= 2^l.
    ``"iv-even"``: gamma(2m) = m - gamma(m).
    ``"iv-odd"``: gamma(2m+1) = m - gamma(m) + (2^(1 + 2 b(m)) + 1)/3.
    ``"iv-odd-minus"``: gamma(2m-1) = m - gamma(m) + (4^b(2m-1) - 1)/3.
    ``"iv"``: the parity rules alone used as a complete recursive definition.

    Right-hand sides other than ``"iv"`` use :func:`gamma`.
    """
    params = _variant_params(n, variant)
    if params is None:
        raise ParameterError(f"n={n} is outside the range of variant {variant!r}")
    g = _gamma
    if variant == "i":
        l, k = params
        return _level_constant(l) - k + 4 * g(k)
    if variant == "ii":
        l, k = params
        return g(k) + 2 * g((1 << (l - 1)) - k)
    if variant == "iii":
        l, k = params
        q = 1 << l
        return 1 + g(q + k - 1) + 2 * g(q - k) - 2 * g(q + 1 - k)
    if variant == "iv":
        return _gamma_iv(n)
    (m,) = params
    if variant == "iv-even":
        return m - g(m)
    if variant == "iv-odd":
        return m - g(m) + ((1 << (1 + 2 * block_count(m))) + 1) // 3
    # iv-odd-minus: n = 2m - 1
    return m - g(m) + (4 ** block_count(2 * m - 1) - 1) // 3


# -- closed forms ---------------------------------------------------------


def chi_mod2(n: int) -> Poly:
    """(t+1)^gamma(n) (t^2+t+1)^gamma2(n) over F_2."""
    gp = gamma(n)
    dom = GF(2)
    t = Poly.t(dom)
    return (t + 1) ** gp.gamma * (t * t + t + 1) ** gp.gamma2


def _prime_power_check(q: int, p: int) -> int:
    try:
        l = prime_power_exponent(q, p)
    except ParameterError:
        raise ParameterError(f"{q} is not a power of {p}") from None
    if l < 1:
        raise ParameterError(f"{q} is not a positive power of {p}")
    return l


def _exponents(q: int, k: int) -> Tuple[int, int]:
    e = epsilon(q)
    return (q - e) // 3 - k, (q + 2 * e) // 3 - k


def _times_factor_powers(f: Poly, e_quad: int, e_lin: int, exact: bool = True) -> Poly:
    """f * (t^2+t+1)^e_quad * (t-1)^e_lin, with negative exponents as exact division."""
    t = Poly.t(f.domain)
    num, den = f, Poly.one(f.domain)
    for g, e in ((t * t + t + 1, e_quad), (t - 1, e_lin)):
        if e >= 0:
            num = num * g ** e
        else:
            den = den * g ** (-e)
    q, r = divmod(num, den)
    if exact and not r.is_zero():
        raise ArithmeticError("closed form is not a polynomial")
    return q


def chi_q_formula(q: int, p: int) -> Poly:
    """(t^2+t+1)^((q-eps)/3) (t-1)^((q+2 eps)/3) over F_p for q = p^l."""
    _prime_power_check(q, p)
    e1, e2 = _exponents(q, 0)
    return _times_factor_powers(Poly.one(GF(p)), e1, e2)


def det_tI_plus_P(k: int, p: int) -> Poly:
    """det(tI + P(k)) over F_p."""
    return charpoly(-pascal_symmetric(k, GF(p)))


def chi_qmk_formula(q: int, k: int, p: int) -> Poly:
    """Closed form of det(tI - P(q-k)) over F_p, q = p^l, 0 <= k <= q/2.

    (t^2+t+1)^((q-eps)/3 - k) (t-1)^((q+2 eps)/3 - k) det(t^2 I + P(k)).
    For k close to q/2 an exponent may be negative; the product is then
    still a polynomial and is obtained by exact division.
    """
    _prime_power_check(q, p)
    if k < 0 or 2 * k > q:
        raise ParameterError(f"need 0 <= k <= q/2, got k={k}, q={q}")
    e1, e2 = _exponents(q, k)
    return _times_factor_powers(det_tI_plus_P(k, p).substitute_power(2), e1, e2)


def _mod3_decompose(n: int) -> Tuple[int, int, int]:
    """(l, k, sign) with n = 3^l + sign*k, 0 <= k < 3^l/2; unique for n >= 1."""
    l = 0
    while (3 ** (l + 1) - 1) // 2 < n:
        l += 1
    q = 3 ** l
    return (l, q - n, -1) if n <= q else (l, n - q, 1)


@lru_cache(maxsize=None)
def _chi_mod3_conj(n: int) -> Poly:
    dom = GF(3)
    t = Poly.t(dom)
    if n == 0:
        return Poly.one(dom)
    l, k, sign = _mod3_decompose(n)
    # det(tI + P(k)) = (-1)^k chi_k(-t), with chi_k from the same recursion
    inner = _chi_mod3_conj(k).negate_variable()
    if k % 2:
        inner = -inner
    e = 3 ** l - 3 * k
    if sign < 0:
        f = inner.substitute_power(2)
    else:
        f = (t + 1) ** (3 * k) * inner
    if e >= 0:
        return f * (t - 1) ** e
    q, r = divmod(f, (t - 1) ** (-e))
    if not r.is_zero():
        raise ConjectureViolation(
            f"conjectural mod-3 recursion is not polynomial at n={n}", {"n": n}
        )
    return q


def chi_mod3_conjectural(n: int) -> Poly:
    """Conjectural det(tI - P(n)) over F_3 from the recursion on n = 3^l +- k.

    n = 3^l - k: (t-1)^(3^l - 3k) det(t^2 I + P(k));
    n = 3^l + k: (t-1)^(3^l - 3k) (t+1)^(3k) det(tI + P(k)); 0 <= k < 3^l/2.
    """
    if n < 0:
        raise ParameterError("n must be >= 0")
    return _chi_mod3_conj(n)


# -- c_k extraction --------------------------------------------------------


class CkExtraction(NamedTuple):
    ck: Poly
    stable: bool


def default_prime_powers(k: int, max_prime: int = 61, max_size: int = 200) -> List[Tuple[int, int]]:
    """For each prime p <= max_prime the smallest l >= 1 with p^l >= 2k.

    Pairs whose matrix size p^l + k would exceed ``max_size`` are skipped.
    """
    out = []
    for p in primes_up_to(max_prime):
        l = 1
        while p ** l < 2 * k:
            l += 1
        if p ** l + k <= max_size:
            out.append((p, l))
    return out


def ck_residue(k: int, p: int, l: int) -> Poly:
    """c_k mod p obtained from det(tI - P(p^l + k)) by removing the known factors."""
    q = p ** l
    if 2 * k > q:
        raise ParameterError(f"need k <= q/2 (k={k}, q={q})")
    chi = charpoly(pascal_symmetric(q + k, GF(p)))
    e1, e2 = _exponents(q, k)
    try:
        return _times_factor_powers(chi, -e1, -e2)
    except ArithmeticError:
        raise ConjectureViolation(
            f"det(tI - P({q + k})) mod {p} lacks the predicted factors",
            {"p": p, "l": l, "k": k, "chi": chi.to_json()},
        ) from None


def extract_ck(k: int, prime_powers: Optional[Sequence[Tuple[int, int]]] = None) -> CkExtraction:
    """Recover the integer polynomial c_k by CRT from its residues modulo several primes.

    ``stable`` is true when dropping the last prime leaves the lift unchanged.
    A stable lift that is not monic of degree 4k and palindromic raises
    :class:`ConjectureViolation`.
    """
    if k < 0:
        raise ParameterError("k must be >= 0")
    if prime_powers is None:
        prime_powers = default_prime_powers(k)
    if len({p for p, _ in prime_powers}) != len(prime_powers):
        raise ParameterError("prime powers must have pairwise distinct primes")
    residues = [(ck_residue(k, p, l), p) for p, l in prime_powers]
    lift = crt_lift(residues, 4 * k)
    stable = len(residues) > 1 and crt_lift(residues[:-1], 4 * k) == lift
    if stable and not (lift.is_monic() and is_palindromic(lift, 1)):
        raise ConjectureViolation(
            f"stable lift of c_{k} is not monic palindromic", {"k": k, "ck": lift.to_json()}
        )
    return CkExtraction(lift, stable)


def _ck_or_report(name: str, k: int, ck: Optional[Poly]):
    if ck is not None:
        return ck, None
    try:
        res = extract_ck(k)
    except ConjectureViolation as exc:
        return None, CheckReport(name, {"k": k}, FAIL, exc.witness, kind="conjecture")
    if not res.stable:
        return None, CheckReport(name, {"k": k, "reason": "unstable lift"}, NOT_APPLICABLE, kind="conjecture")
    return res.ck, None


def check_ck_mod3(k: int, ck: Optional[Poly] = None) -> CheckReport:
    """c_k = (t+1)^(3k) det(tI + P(k)) mod 3."""
    ck, early = _ck_or_report("ck-mod3", k, ck)
    if early:
        return early
    dom = GF(3)
    expected = (Poly.t(dom) + 1) ** (3 * k) * det_tI_plus_P(k, 3)
    got = ck.reduce(3)
    ok = got == expected
    witness = None if ok else {"ck_mod3": got.to_json(), "expected": expected.to_json()}
    return CheckReport("ck-mod3", {"k": k}, verdict(ok), witness, kind="conjecture")


def check_ck_mod2(k: int, ck: Optional[Poly] = None) -> CheckReport:
    """c_k = det(tI + P(k))^4 mod 2."""
    ck, early = _ck_or_report("ck-mod2", k, ck)
    if early:
        return early
    expected = det_tI_plus_P(k, 2) ** 4
    got = ck.reduce(2)
    ok = got == expected
    witness = None if ok else {"ck_mod2": got.to_json(), "expected": expected.to_json()}
    return CheckReport("ck-mod2", {"k": k}, verdict(ok), witness, kind="conjecture")


# -- conjectures at q = 2 mod 3 ------------------------------------------


def _q_2mod3(name: str, q: int):
    try:
        p, l = prime_power_base(q)
    except ParameterError:
        return None, CheckReport(name, {"q": q, "reason": "not a prime power"}, NOT_APPLICABLE, kind="conjecture")
    if q % 3 != 2:
        return None, CheckReport(name, {"q": q, "reason": "q != 2 mod 3"}, NOT_APPLICABLE, kind="conjecture")
    return p, None


def check_final_conjecture(q: int) -> CheckReport:
    """det(tI - P((q+1)/3)) = (t+1)^((q+1)/3) and
    det(tI - P((2q-1)/3)) = (t+1)^((q+1)/3) (t-1)^((q-2)/3) modulo p."""
    p, early = _q_2mod3("final-conjecture", q)
    if early:
        return early
    dom = GF(p)
    t = Poly.t(dom)
    n1, n2 = (q + 1) // 3, (2 * q - 1) // 3
    got1 = charpoly(pascal_symmetric(n1, dom))
    got2 = charpoly(pascal_symmetric(n2, dom))
    exp1 = (t + 1) ** n1
    exp2 = (t + 1) ** n1 * (t - 1) ** ((q - 2) // 3)
    ok = got1 == exp1 and got2 == exp2
    witness = None
    if not ok:
        witness = {
            "n": n1 if got1 != exp1 else n2,
            "charpoly": (got1 if got1 != exp1 else got2).to_json(),
            "expected": (exp1 if got1 != exp1 else exp2).to_json(),
        }
    return CheckReport("final-conjecture", {"q": q, "p": p}, verdict(ok), witness, kind="conjecture")


def check_selfdual_code(q: int) -> CheckReport:
    """C = P(n) + I, n = (q+1)/3, has one nilpotent Jordan block and C^(n/2) spans a self-dual code."""
    p, early = _q_2mod3("selfdual-code", q)
    if early:
        return early
    if q % 2 == 0:
        return CheckReport("selfdual-code", {"q": q, "reason": "q even"}, NOT_APPLICABLE, kind="conjecture")
    dom = GF(p)
    n = (q + 1) // 3
    params = {"q": q, "p": p, "n": n}
    C = pascal_symmetric(n, dom) + identity(n, dom)
    power = identity(n, dom)
    for j in range(n + 1):
        r = rank(power)
        if r != n - j:
            return CheckReport(
                "selfdual-code", params, FAIL, {"j": j, "rank": r, "expected": n - j}, kind="conjecture"
            )
        power = power @ C
    G = matrix_power(C, (q + 1) // 6)
    gram_zero = (G @ G.T).is_zero()
    rg = rank(G)
    ok = gram_zero and 2 * rg == n
    witness = None if ok else {"generator": G.to_json(), "rank": rg, "gram_zero": gram_zero}
    return CheckReport("selfdual-code", params, verdict(ok), witness, kind="conjecture")


def check_shifted_conjecture(q: int) -> CheckReport:
    """det(tI - P~_k(n)) = (1+t)^n mod p with n = (2q+2)/3, k = (2q-1)/3."""
    p, early = _q_2mod3("shifted-conjecture", q)
    if early:
        return early
    dom = GF(p)
    n, k = (2 * q + 2) // 3, (2 * q - 1) // 3
    got = charpoly(shifted_pascal(n, k, dom))
    expected = (Poly.t(dom) + 1) ** n
    ok = got == expected
    witness = None if ok else {"charpoly": got.to_json(), "expected": expected.to_json()}
    return CheckReport(
        "shifted-conjecture", {"q": q, "p": p, "n": n, "k": k}, verdict(ok), witness, kind="conjecture"
    )
