"""Rule-based membership exclusions for primitive groups at any degree.

Enumeration handles the cataloged degrees exactly; everywhere else these
predicates decide what a cycle type can and cannot lie in.  The positive
lists (``jones_families``, ``mueller_families``) enumerate the classified
cases of primitive groups containing a cycle with k fixed points, resp. an
element with exactly two cycles; the ``*_excludes`` predicates certify
non-membership from fixed-point counts of powers.  A negative answer from an
exclusion predicate never asserts membership.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from invgraph.arith import divisors, is_prime, lcm_of, prime_power
from invgraph.partitions import (
    Partition,
    is_partial_sum,
    partial_sum_mask,
    power_type,
)


@dataclass(frozen=True)
class FamilyTag:
    """One classified case, e.g. J-2a with its arithmetic parameters."""

    case_id: str
    parameters: tuple[tuple[str, int], ...] = field(default_factory=tuple)

    def param(self, key: str) -> int:
        return dict(self.parameters)[key]

    def __str__(self) -> str:
        inner = ",".join(f"{k}={v}" for k, v in self.parameters)
        return f"{self.case_id}({inner})" if inner else self.case_id


def _tag(case_id: str, **params: int) -> FamilyTag:
    return FamilyTag(case_id, tuple(sorted(params.items())))


def _fixed_count_of_power(t: Partition, k: int) -> int:
    """Fixed points of t^k: parts l with l | k contribute l each."""
    return sum(l for l in t.parts if k % l == 0)


def _power_exponents(t: Partition) -> list[int]:
    """Exponents k that realize every distinct power type: divisors of lcm."""
    return list(divisors(lcm_of(t.parts)))


def jordan_excludes(t: Partition) -> bool:
    """True when some power of t is one nontrivial cycle with >= 3 fixed points.

    Such an element lies in no primitive group other than the alternating and
    symmetric groups, so t is excluded from every nontrivial primitive group.
    """
    for k in _power_exponents(t):
        pt = power_type(t, k)
        big = [p for p in pt.parts if p > 1]
        if len(big) == 1 and pt.multiplicity(1) >= 3:
            return True
    return False


def jones_families(n: int, k: int) -> list[FamilyTag]:
    """Classified primitive groups (not containing A_n) with an n-k cycle.

    Complete for 0 <= k <= n-2; empty for k >= 3.
    """
    if not 0 <= k <= n - 2:
        raise ValueError(f"need 0 <= k <= n-2, got k={k} at n={n}")
    tags: list[FamilyTag] = []
    if k == 0:
        if is_prime(n):
            tags.append(_tag("J-1a", p=n))
        for q, d in projective_cardinality_solutions(n):
            tags.append(_tag("J-1b", q=q, d=d))
        if n in (11, 23):
            tags.append(_tag("J-1c", n=n))
    elif k == 1:
        pp = prime_power(n)
        if pp is not None:
            gamma, m = pp
            tags.append(_tag("J-2a", p=gamma, m=m))
        if is_prime(n - 1) and n - 1 >= 5:
            tags.append(_tag("J-2b", p=n - 1))
        if n in (12, 24):
            tags.append(_tag("J-2c", n=n))
    elif k == 2:
        pp = prime_power(n - 1)
        if pp is not None:
            tags.append(_tag("J-3", q=n - 1))
    return tags


def mueller_families(n: int, k: int) -> list[FamilyTag]:
    """Classified primitive groups with an element of exactly two cycles (k, n-k).

    Complete for 1 <= k <= n/2; the natural alternating/symmetric case is
    omitted (it is never "nontrivial" here).
    """
    if not 1 <= k <= n - k:
        raise ValueError(f"need 1 <= k <= n-k, got k={k} at n={n}")
    tags: list[FamilyTag] = []
    pp = prime_power(n)
    if pp is not None:
        p, m = pp
        if k == 1:
            for t in divisors(m):
                tags.append(_tag("M-1a", p=p, m=m, t=t))
        if k == p:
            tags.append(_tag("M-1b", p=p, m=m))
        if m == 2 and k == p and p > 2:
            tags.append(_tag("M-1c", p=p))
        if p == 2 and k == 4:
            tags.append(_tag("M-1d", m=m))
    if (n, k) == (4, 2):
        tags.append(_tag("M-1e-i"))
    if (n, k) == (8, 2):
        tags.append(_tag("M-1e-ii"))
    if (n, k) == (9, 3):
        tags.append(_tag("M-1e-iii"))
    if (n, k) == (16, 8):
        tags.append(_tag("M-1e-iv"))
    if n == 16 and k in (4, 8):
        tags.append(_tag("M-1e-v"))
    if n == 16 and k in (2, 8):
        tags.append(_tag("M-1e-vi"))
    if (n, k) == (25, 5):
        tags.append(_tag("M-1e-vii"))
    r = _exact_sqrt(n)
    if r is not None and r > 1:
        if k % r == 0:
            a = k // r
            from math import gcd

            if a >= 1 and gcd(r, a) == 1:
                tags.append(_tag("M-2a", r=r, a=a))
        if is_prime(r - 1) and r - 1 >= 5 and k == r:
            tags.append(_tag("M-2b", p=r - 1))
    if (n, k) == (10, 5):
        tags.append(_tag("M-3b"))
    if k == 1 and is_prime(n - 1):
        tags.append(_tag("M-3c", p=n - 1))
    if n % 2 == 0 and k == n // 2:
        for q, m in projective_cardinality_solutions(n):
            if q % 2 == 1 and m % 2 == 0:
                tags.append(_tag("M-3d", q=q, m=m))
    if (n, k) == (10, 2):
        tags.append(_tag("M-3e"))
    if (n, k) == (21, 7):
        tags.append(_tag("M-3f"))
    if n == 12 and k in (1, 4):
        tags.append(_tag("M-3g"))
    if n == 12 and k in (1, 2, 4, 6):
        tags.append(_tag("M-3h"))
    if (n, k) == (22, 11):
        tags.append(_tag("M-3i"))
    if n == 24 and k in (1, 3, 12):
        tags.append(_tag("M-3j"))
    return tags


def _exact_sqrt(n: int) -> int | None:
    from math import isqrt

    r = isqrt(n)
    return r if r * r == n else None


def affine_excludes(t: Partition, p: int, m: int) -> bool:
    """Certify t lies in no affine group on p^m points.

    Fixed-point sets of affine maps are empty or affine subspaces, so every
    power of a member fixes 0 or p^s points; any other count excludes t.
    """
    if t.n != p**m:
        raise ValueError(f"degree {t.n} != {p}^{m}")
    allowed = {0} | {p**s for s in range(m + 1)}
    return any(_fixed_count_of_power(t, k) not in allowed for k in _power_exponents(t))


def projective_line_excludes(t: Partition, q: int, semilinear: bool) -> bool:
    """Certify t lies in no subgroup of the projective semilinear group on q+1 points.

    With semilinear=False the target is the projective linear group only,
    where no nonidentity element fixes 3 points.  In the semilinear group an
    element fixing f >= 3 points fixes gamma^l + 1 of them (l | r, q =
    gamma^r); and a member with an even number of fixed points has an even
    number of i-cycles for every odd i, which yields the two parity tests
    used when q+1 is even.
    """
    pp = prime_power(q)
    if pp is None:
        raise ValueError(f"{q} is not a prime power")
    gamma, r = pp
    n = q + 1
    if t.n != n:
        raise ValueError(f"degree {t.n} != q+1 = {n}")
    order = lcm_of(t.parts)
    allowed_fixed = {gamma**l + 1 for l in divisors(r)}
    for k in _power_exponents(t):
        if k % order == 0:
            continue  # the identity power
        f = _fixed_count_of_power(t, k)
        if f >= 3:
            if not semilinear:
                return True
            if f not in allowed_fixed:
                return True
    if n % 2 == 0:
        odd_mult_odd_cycles = any(
            i % 2 == 1 and t.multiplicity(i) % 2 == 1 for i in set(t.parts) if i >= 3
        )
        ones = t.multiplicity(1)
        if ones % 2 == 0 and odd_mult_odd_cycles:
            return True
        mask = partial_sum_mask(t)
        if all(mask >> i & 1 for i in (1, 3, 5)):
            if ones % 2 == 1 or odd_mult_odd_cycles:
                return True
    return False


def product_action_excludes(t: Partition) -> bool:
    """Certify t is not in the product-action wreath group on r^2 = n points.

    An odd part of length >= r+1 forces the top factor to be trivial; a
    trivial top factor whose type realizes every partial sum below r also
    realizes every partial sum below 2r.  Violating that closes the case.
    """
    r = _exact_sqrt(t.n)
    if r is None:
        raise ValueError(f"{t.n} is not a square")
    if not any(p % 2 == 1 and p >= r + 1 for p in t.parts):
        return False
    if not all(is_partial_sum(t, i) for i in range(1, r)):
        return False
    return any(not is_partial_sum(t, i) for i in range(r, 2 * r))


def projective_cardinality_solutions(n: int) -> list[tuple[int, int]]:
    """All (q, d), d >= 2, q a prime power, with n = (q^d - 1)/(q - 1)."""
    if n < 3:
        return []
    out = []
    for q in range(2, n):
        if prime_power(q) is None:
            continue
        total, power = 1, 1
        d = 1
        while total < n:
            power *= q
            total += power
            d += 1
            if total == n and d >= 2:
                out.append((q, d))
                break
    return sorted(out)
