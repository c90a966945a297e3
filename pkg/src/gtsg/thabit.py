"""Closed forms for the semigroups generated by (2^k+1)*2^(n+i) - (2^k-1).

For parameters n >= 0, k >= 1 the family GT(n, k) has generators
s_i = (2^k+1)*2^(n+i) - (2^k-1).  This module provides the minimal
generating set, embedding dimension, the coefficient-set description of the
Apery set of s_0, the maximal Apery element, the Frobenius number and the
genus, all without enumerating semigroup elements.

Coefficient sequences (t_1, ..., t_m) over {0,1,2} encode the element
Q = t_1*s_1 + ... + t_m*s_m and the scalar P = sum t_i*(2^i - 1).  A
sequence is "valid" when t_m <= 1 and a 2 at position j forces zeros at all
positions before j; at most one 2 can occur.
"""

from __future__ import annotations

from enum import Enum
from itertools import product
from typing import Iterator

from .oracle import Semigroup, make_semigroup


class Case(Enum):
    """Which closed-form branch applies to (n, k)."""

    N0 = "n0"                  # n = 0
    K1 = "k1"                  # n >= 1, k = 1
    KLT_N = "k<n"              # 2 <= k < n
    KEQ_N = "k=n"              # k = n >= 2
    KGT_N = "k>n"              # n >= 1, k > n, k != 2
    EXCEPTION_1_2 = "(1,2)"    # the single exceptional pair


def _check_params(n: int, k: int) -> None:
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")


def generator_at(n: int, k: int, i: int) -> int:
    """s_i = (2^k + 1) * 2^(n+i) - (2^k - 1)."""
    _check_params(n, k)
    return (2**k + 1) * 2 ** (n + i) - (2**k - 1)


def delta(n: int, k: int) -> int:
    """Offset so that s_0 .. s_(n+delta) is the minimal generating set."""
    _check_params(n, k)
    if n == 0:
        return 1
    return k if k <= n else k - 1


def embedding_dimension(n: int, k: int) -> int:
    return n + delta(n, k) + 1


def minimal_generating_set(n: int, k: int) -> Semigroup:
    """The minimal system of generators {s_0, ..., s_(n+delta)}."""
    top = n + delta(n, k)
    return make_semigroup(generator_at(n, k, i) for i in range(top + 1))


def case_of(n: int, k: int) -> Case:
    _check_params(n, k)
    if n == 0:
        return Case.N0
    if k == 1:
        return Case.K1
    if (n, k) == (1, 2):
        return Case.EXCEPTION_1_2
    if k < n:
        return Case.KLT_N
    if k == n:
        return Case.KEQ_N
    return Case.KGT_N


def coeff_value(n: int, k: int, t) -> int:
    """Q = t_1*s_1 + ... + t_m*s_m for a full-length coefficient sequence."""
    t = tuple(t)
    m = n + delta(n, k)
    if len(t) != m:
        raise ValueError(f"expected {m} coefficients, got {len(t)}")
    return sum(ti * generator_at(n, k, i) for i, ti in enumerate(t, start=1))


def _scalar(prefix) -> int:
    """P = sum t_i * (2^i - 1) over a coefficient prefix."""
    return sum(ti * (2**i - 1) for i, ti in enumerate(prefix, start=1))


def _max_scalar(length: int) -> int:
    # largest P of a valid sequence: a single 2 at the top position
    return 2 * (2**length - 1)


def coeff_solve(target: int, length: int) -> tuple[int, ...] | None:
    """The unique valid prefix (t_1..t_length) with P = target.

    Returns None when target lies outside [0, 2*(2^length - 1)].  Within
    that range the solution exists and is unique (checked exhaustively for
    lengths 1..12 in the test suite); a 2 is allowed at any position here
    because prefixes are completed by later coefficients.
    """
    if target < 0:
        return None
    return _solve(target, length)


def _solve(x: int, length: int) -> tuple[int, ...] | None:
    if x > _max_scalar(length):
        return None
    if length == 0:
        return () if x == 0 else None
    w = 2**length - 1
    if x == 2 * w:
        # a 2 at the top forces zeros below
        return (0,) * (length - 1) + (2,)
    for t in (1, 0):
        if x - t * w >= 0:
            sub = _solve(x - t * w, length - 1)
            if sub is not None:
                return sub + (t,)
    return None


def iter_valid_sequences(length: int, last_two_ok: bool = False) -> Iterator[tuple[int, ...]]:
    """All sequences over {0,1,2} obeying the 2-forces-earlier-zeros rule.

    With last_two_ok=False the final coefficient is restricted to {0,1},
    matching full-length Apery coefficient sequences; prefixes used in
    scalar equations allow a trailing 2.
    """
    if length == 0:
        yield ()
        return
    for bits in product((0, 1), repeat=length):
        yield bits
    top = length if last_two_ok else length - 1
    for j in range(1, top + 1):
        for tail in product((0, 1), repeat=length - j):
            yield (0,) * (j - 1) + (2,) + tail


def _keep_k1(t: tuple[int, ...], n: int) -> bool:
    # length n+1; extra rules on the top two coefficients
    if t[n - 1] == 2 and t[n] == 1:
        return False
    if t[n - 1] == 1 and t[n] == 1 and any(t[: n - 1]):
        return False
    return True


def _keep_klt(t: tuple[int, ...], n: int, k: int) -> bool:
    # length n+k; constraints fire only when the top coefficient is 1
    if t[-1] != 1:
        return True
    if any(t[n - 1 : n + k - 1]):
        return False
    if t[n - 2] == 2:
        return False
    if t[n - 2] == 1 and _scalar(t[: n - 2]) > 2 ** (n - 1) - 2**k + 2:
        return False
    return True


def _keep_keq(t: tuple[int, ...], n: int) -> bool:
    # length 2n; top coefficient 1 pins everything except t_1 in {0,1}
    if t[-1] != 1:
        return True
    return t[0] != 2 and not any(t[1 : 2 * n - 1])


def _keep_kgt(t: tuple[int, ...], n: int, k: int) -> bool:
    # length n+k-1; the top n positions are t_k..t_(n+k-1)
    top = t[k - 1 :]
    if all(v == 1 for v in top):
        return _scalar(t[: k - 1]) <= 2**n + n
    for i, v in enumerate(top):
        if v == 2:
            # a 2 inside the top block must not be followed by all ones
            return not all(x == 1 for x in top[i + 1 :])
    return True


def iter_apery_coeffs(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """Coefficient sequences whose Q-values enumerate Ap(GT(n,k), s_0)."""
    case = case_of(n, k)
    if case is Case.N0:
        yield (0,)
        yield (1,)
        return
    if case is Case.EXCEPTION_1_2:
        # 74 = 2*s_2 breaks the t_m <= 1 rule; the set is literal here
        yield from ((0, 0), (1, 0), (2, 0), (0, 1), (1, 1), (2, 1), (0, 2))
        return
    m = n + delta(n, k)
    if case is Case.K1:
        keep = lambda t: _keep_k1(t, n)
    elif case is Case.KLT_N:
        keep = lambda t: _keep_klt(t, n, k)
    elif case is Case.KEQ_N:
        keep = lambda t: _keep_keq(t, n)
    else:
        keep = lambda t: _keep_kgt(t, n, k)
    for t in iter_valid_sequences(m):
        if keep(t):
            yield t


def apery_coeffs(n: int, k: int) -> list[tuple[int, ...]]:
    return list(iter_apery_coeffs(n, k))


def max_apery(n: int, k: int) -> int:
    """max(Ap(GT(n,k), s_0)) by the per-case closed form."""
    case = case_of(n, k)
    s = lambda i: generator_at(n, k, i)
    if case is Case.N0:
        return s(1)
    if case is Case.K1:
        return s(n) + s(n + 1)
    if case is Case.EXCEPTION_1_2:
        return 74
    if case is Case.KLT_N:
        t = coeff_solve(2 ** (n - 1) - 2**k + 2, n - 2)
        assert t is not None
        return _q_of(n, k, t) + s(n - 1) + s(n + k)
    if case is Case.KEQ_N:
        return s(1) + s(2 * n)
    # KGT_N
    t = coeff_solve(2**n + n, k - 1)
    assert t is not None
    return _q_of(n, k, t) + sum(s(i) for i in range(k, n + k))


def _q_of(n: int, k: int, prefix) -> int:
    return sum(ti * generator_at(n, k, i) for i, ti in enumerate(prefix, start=1))


def frobenius_closed(n: int, k: int) -> int:
    """F(GT(n,k)) = max(Ap(GT(n,k), s_0)) - s_0."""
    return max_apery(n, k) - generator_at(n, k, 0)


def frobenius_k2_closed(n: int) -> int:
    """F(GT(n,2)) = 25*2^(2n) - 5*2^n - 9, valid for n >= 3.

    Derived from the k < n branch with k = 2, where the scalar equation
    P_(n-2) = 2^(n-1) - 2 has the unique solution t_(n-2) = 2, so
    F = 2*s_(n-2) + s_(n-1) + s_(n+2) - s_0.  The formula is sometimes
    quoted with leading constant 85*2^(2n-2) instead of 100*2^(2n-2);
    expanding the generator sum shows 100 is correct, and the oracle sweep
    confirms it.  n = 2 is excluded because GT(2,2) falls in the k = n
    branch (F = s_1 + s_4 - s_0 = 337, matching neither constant).
    """
    if n < 3:
        raise ValueError(f"closed k=2 formula needs n >= 3, got {n}")
    return 25 * 2 ** (2 * n) - 5 * 2**n - 9


def max_apery_fast_kltn(n: int, k: int) -> int:
    """Shortcut for max(Ap) when 2 <= k < n <= 2^k + k - 3.

    Uses the forced block t_k = ... = t_(n-1) = 1 and the smaller scalar
    equation P_(k-1) = n + 1 - k.
    """
    if not (2 <= k < n):
        raise ValueError(f"requires 2 <= k < n, got ({n}, {k})")
    if n > 2**k + k - 3:
        raise ValueError(f"requires n <= 2^k + k - 3, got n={n}, k={k}")
    t = coeff_solve(n + 1 - k, k - 1)
    assert t is not None
    s = lambda i: generator_at(n, k, i)
    return _q_of(n, k, t) + sum(s(i) for i in range(k, n)) + s(n + k)


def _subset_sums(vals: list[int]) -> list[int]:
    """sums[mask] = sum of vals[i] over the set bits of mask."""
    sums = [0]
    for v in vals:
        sums += [s + v for s in sums]
    return sums


def _apery_values(n: int, k: int) -> list[int]:
    """Unsorted Q-values of the Apery coefficient set, enumerated fast.

    Mirrors :func:`iter_apery_coeffs` but walks bitmasks instead of tuples:
    a sequence is (mask of the 1-coefficients, optional position of the
    single 2) and its value is read off precomputed subset-sum tables.
    The tuple and mask paths are cross-checked against each other in the
    test suite.
    """
    case = case_of(n, k)
    if case is Case.N0:
        return [0, generator_at(n, k, 1)]
    if case is Case.EXCEPTION_1_2:
        return [0, 17, 34, 37, 54, 71, 74]

    m = n + delta(n, k)
    svals = [generator_at(n, k, i) for i in range(1, m + 1)]
    S = _subset_sums(svals)
    top_bit = 1 << (m - 1)
    values = []
    out = values.append

    if case is Case.K1:
        pair = (1 << (n - 1)) | (1 << n)       # bits of t_n and t_(n+1)
        low = (1 << (n - 1)) - 1
        for mask in range(1 << m):
            if mask & pair == pair and mask & low:
                continue                        # t_n = t_(n+1) = 1 pins the rest
            out(S[mask])
        for j in range(1, m):                   # the single 2 sits at position j
            base = 2 * svals[j - 1]
            for tail in range(1 << (m - j)):
                mask = tail << j
                if j == n and mask & top_bit:
                    continue                    # t_n = 2 forces t_(n+1) = 0
                if j < n and mask & pair == pair:
                    continue                    # the 2 is a nonzero earlier entry
                out(base + S[mask])
        return values

    weights = [2**i - 1 for i in range(1, m + 1)]
    W = _subset_sums(weights)

    if case is Case.KLT_N:
        zero_block = ((1 << k) - 1) << (n - 1)  # bits of t_n .. t_(n+k-1)
        flag_bit = 1 << (n - 2)                 # bit of t_(n-1)
        pref = (1 << (n - 2)) - 1               # bits of t_1 .. t_(n-2)
        bound = 2 ** (n - 1) - 2**k + 2
        for mask in range(1 << m):
            if mask & top_bit:
                if mask & zero_block:
                    continue
                if mask & flag_bit and W[mask & pref] > bound:
                    continue
            out(S[mask])
        for j in range(1, m):
            base = 2 * svals[j - 1]
            extra = 2 * weights[j - 1]
            for tail in range(1 << (m - j)):
                mask = tail << j
                if mask & top_bit:
                    if j >= n - 1 or mask & zero_block:
                        continue                # t_(n-1) = 2 or forced zeros hit
                    if mask & flag_bit and extra + W[mask & pref] > bound:
                        continue
                out(base + S[mask])
        return values

    if case is Case.KEQ_N:
        for mask in range(1 << m):
            if mask & top_bit and mask not in (top_bit, top_bit | 1):
                continue                        # t_(2n) = 1 leaves only t_1 free
            out(S[mask])
        for j in range(1, m):
            base = 2 * svals[j - 1]
            for tail in range(1 << (m - j)):
                mask = tail << j
                if mask & top_bit:
                    continue
                out(base + S[mask])
        return values

    # KGT_N: the top n positions are t_k .. t_(n+k-1)
    top_block = ((1 << n) - 1) << (k - 1)
    pref = (1 << (k - 1)) - 1
    bound = 2**n + n
    for mask in range(1 << m):
        if mask & top_block == top_block and W[mask & pref] > bound:
            continue
        out(S[mask])
    for j in range(1, m):
        base = 2 * svals[j - 1]
        extra = 2 * weights[j - 1]
        if j >= k:
            # reject a 2 inside the top block followed by all ones
            above = (((1 << n) - 1) << (k - 1)) & ~((1 << j) - 1)
            for tail in range(1 << (m - j)):
                mask = tail << j
                if mask & above == above:
                    continue
                out(base + S[mask])
        else:
            for tail in range(1 << (m - j)):
                mask = tail << j
                if mask & top_block == top_block and extra + W[mask & pref] > bound:
                    continue
                out(base + S[mask])
    return values


def apery_set_closed(n: int, k: int) -> list[int]:
    """Ap(GT(n,k), s_0) as a sorted list; its size must equal s_0."""
    values = sorted(_apery_values(n, k))
    s0 = generator_at(n, k, 0)
    if len(values) != s0 or len(set(values)) != s0:
        raise AssertionError(
            f"closed Apery set for ({n},{k}) has {len(values)} values, expected {s0}"
        )
    return values


def genus_from_apery(s0: int, values) -> int:
    """g = (sum of Apery values)/s0 - (s0-1)/2, checked to divide exactly."""
    num = 2 * sum(values) - s0 * (s0 - 1)
    q, r = divmod(num, 2 * s0)
    if r != 0:
        raise AssertionError("genus division inexact")
    return q


def genus_closed(n: int, k: int) -> int:
    """g(GT(n,k)) from the closed Apery set; the division must be exact."""
    return genus_from_apery(generator_at(n, k, 0), apery_set_closed(n, k))
