"""Shared oracles for the test suite.

Each oracle recomputes a quantity through a route independent of the
implementation under test: Bernoulli numbers through the defining
convolution recurrence instead of the triangular one, subgroups by brute
enumeration, obstruction values by the closed formula instead of the
composed maps.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, gcd

from spherestruct import (
    NormalClassDiff,
    bernoulli,
    in_subgroup,
    quotient_order,
    s3s4_diffeomorphic,
    subgroup_generated,
    t,
    theta_diff,
    theta_top,
    forgetful_f,
)
from spherestruct.classify import S3S4Invariant
from spherestruct.ltheory import LClass

_CLASSICAL: list[Fraction] = [Fraction(1)]


def classical_bernoulli(n: int) -> Fraction:
    """B_n in the convention B_1 = -1/2, from sum C(m+1, j) B_j = 0."""
    while len(_CLASSICAL) <= n:
        m = len(_CLASSICAL)
        total = sum(comb(m + 1, j) * _CLASSICAL[j] for j in range(m))
        _CLASSICAL.append(-total / (m + 1))
    return _CLASSICAL[n]


def bernoulli_oracle(k: int) -> Fraction:
    return abs(classical_bernoulli(2 * k))


def t_oracle(i: int) -> int:
    """t_i assembled from scratch on top of the oracle Bernoulli numbers."""
    if i % 4 != 0:
        return 0
    k = i // 4
    if k == 1:
        return 2
    a_k = 2 if k % 2 == 1 else 1
    numerator = (bernoulli_oracle(k) / (4 * k)).numerator
    return a_k * 2 ** (2 * k - 2) * (2 ** (2 * k - 1) - 1) * numerator


def primes_upto(n: int) -> list[int]:
    sieve = bytearray([1]) * (n + 1)
    sieve[:2] = b"\x00\x00"
    for p in range(2, int(n**0.5) + 1):
        if sieve[p]:
            sieve[p * p :: p] = b"\x00" * len(sieve[p * p :: p])
    return [p for p in range(2, n + 1) if sieve[p]]


def von_staudt_clausen_denominator(k: int) -> int:
    """Denominator of B_{2k}: the product of primes p with (p-1) | 2k."""
    n = 2 * k
    result = 1
    for p in primes_upto(n + 1):
        if n % (p - 1) == 0:
            result *= p
    return result


def brute_subgroup(n: int, g: int) -> set[int]:
    """All elements of <g> in Z_n by walking the orbit of 0."""
    step = g % n
    seen = {0}
    x = step
    while x != 0:
        seen.add(x)
        x = (x + step) % n
    return seen


def check_cyclic_against_bruteforce(n: int, g: int, exhaustive_membership: bool) -> None:
    elements = brute_subgroup(n, g)
    sub = subgroup_generated(n, g)
    assert sub.order == len(elements), (n, g)
    expected_generator = min(elements - {0}) if len(elements) > 1 else n
    assert sub.generator_value == expected_generator, (n, g)
    assert quotient_order(n, g) == n // len(elements), (n, g)
    if exhaustive_membership:
        candidates = range(n)
    else:
        candidates = {0, 1, g % n, (3 * g) % n, n - 1, n // 2}
    for x in candidates:
        assert in_subgroup(sub.ambient.element(x), sub) == (x in elements), (n, g, x)


def theta_diff_closed_formula(p: int, q: int, pu: int, pv: int, pw: int) -> LClass:
    """8 t_p t_q phi_u phi_v + t_{p+q} phi_w with off-degree coordinates
    zeroed, packaged in L_{p+q}."""
    a = pu if p % 4 == 0 else 0
    b = pv if q % 4 == 0 else 0
    c = pw if (p + q) % 4 == 0 else 0
    return LClass(p + q, 8 * t(p) * t(q) * a * b + t(p + q) * c)


def check_theta_diff_box(pairs, span: int) -> None:
    values = range(-span, span + 1)
    for p, q in pairs:
        for pu in values:
            for pv in values:
                for pw in values:
                    u = NormalClassDiff(p, pu)
                    v = NormalClassDiff(q, pv)
                    w = NormalClassDiff(p + q, pw)
                    got = theta_diff(p, q, u, v, w)
                    assert got == theta_diff_closed_formula(p, q, pu, pv, pw), (
                        p, q, pu, pv, pw,
                    )
                    composed = theta_top(
                        p, q, forgetful_f(u), forgetful_f(v), forgetful_f(w)
                    )
                    assert got == composed, (p, q, pu, pv, pw)


def s3s4_canonical_key(sigma: int, v: int) -> tuple[int, int]:
    """Invariant deciding the diffeomorphism relation: |v| together with
    sigma modulo gcd(28, 2|v|)."""
    modulus = gcd(28, 2 * abs(v))  # 28 when v = 0
    return abs(v), sigma % modulus


def check_s3s4_equivalence_laws(v_span: int) -> None:
    grid = [
        S3S4Invariant(sigma, v)
        for v in range(-v_span, v_span + 1)
        for sigma in range(28)
    ]
    keys = [s3s4_canonical_key(m.sigma.value, m.v) for m in grid]
    for i, a in enumerate(grid):
        for j, b in enumerate(grid):
            assert s3s4_diffeomorphic(a, b) == (keys[i] == keys[j]), (
                a.sigma.value, a.v, b.sigma.value, b.v,
            )
