"""Sums of binomial coefficients: representation search and solution counting.

Three families of questions about the equation
    lambda_1 * C(x_1, d) + ... + lambda_s * C(x_s, d) = m:

* represent: find distinct positive x_1 < ... < x_r below a bound with all
  lambda = 1 and variable length r (complete backtracking search, so a miss
  is a proof of non-existence within the bound);
* count_representations: exact N(m) / N*(m), the number of ordered tuples
  (distinct-coordinate for N*) with 1 <= x_i <= B;
* count_local: exact M_m(p^k), the number of residue tuples modulo p^(k+t)
  solving the congruence modulo p^k, where t = v_p(d!).  C(x, d) taken at
  integer representatives is well defined there because x mod p^(k+t)
  determines C(x, d) mod p^k.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from math import comb, factorial
from typing import Callable, Iterable, Sequence

import numpy as np

from .errors import InfeasibleWidthError, NotPrimeError, TooLargeModulusError

# ---------------------------------------------------------------------------
# representation search
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Representation:
    """Witness that sum of C(x, d) over terms equals target."""

    d: int
    terms: tuple[int, ...]
    target: int

    def __post_init__(self) -> None:
        if self.d < 1:
            raise ValueError(f"need d >= 1, got {self.d}")
        if any(x < 1 for x in self.terms):
            raise ValueError(f"terms must be positive, got {self.terms}")
        if any(a >= b for a, b in zip(self.terms, self.terms[1:])):
            raise ValueError(f"terms {self.terms} not strictly increasing")
        total = sum(comb(x, self.d) for x in self.terms)
        if total != self.target:
            raise ValueError(f"terms sum to {total}, not {self.target}")


def represent(m: int, d: int, max_x: int) -> Representation | None:
    """Find distinct x_1 < ... < x_r < max_x with sum C(x_i, d) = m.

    Greedy largest-term-first with full backtracking: deterministic, and
    complete (None is returned only when no representation exists).  Terms
    below d would contribute 0 and are never used.
    """
    if m < 0:
        raise ValueError(f"target must be >= 0, got {m}")
    if d < 1:
        raise ValueError(f"need d >= 1, got {d}")
    if max_x < 2:
        raise ValueError(f"need max_x >= 2, got {max_x}")
    if m == 0:
        return Representation(d, (), 0)
    vals = [comb(x, d) for x in range(d, max_x)]
    prefix = []
    run = 0
    for v in vals:
        run += v
        prefix.append(run)

    def search(remaining: int, hi: int) -> list[int] | None:
        if remaining == 0:
            return []
        idx = bisect_right(vals, remaining, 0, hi) - 1
        while idx >= 0:
            if prefix[idx] < remaining:
                return None  # all of vals[0..idx] together still fall short
            tail = search(remaining - vals[idx], idx)
            if tail is not None:
                tail.append(idx)
                return tail
            idx -= 1
        return None

    picked = search(m, len(vals))
    if picked is None:
        return None
    return Representation(d, tuple(d + i for i in picked), m)


# ---------------------------------------------------------------------------
# global counting: N(m) and N*(m)
# ---------------------------------------------------------------------------


def default_upper_bound(m: int, d: int) -> int:
    """Smallest B >= 1 with (100 B)^d >= m, i.e. ceil(m^(1/d) / 100)."""
    if m < 0:
        raise ValueError(f"target must be >= 0, got {m}")
    b = 1
    if m > 0:
        r = int(round(m ** (1.0 / d)))
        while r**d > m:
            r -= 1
        while (r + 1) ** d <= m:
            r += 1
        b = max(1, r // 100 - 1)
        while (100 * b) ** d < m:
            b += 1
    return b


@dataclass(frozen=True)
class CountSpec:
    """Parameters of the counting problem sum lambda_i C(x_i, d) = m.

    Variables range over 1..B (0..B with include_zero); distinct selects
    N*(m), requiring pairwise-distinct coordinates.  B defaults to
    ceil(m^(1/d) / 100).
    """

    d: int
    s: int
    lambdas: tuple[int, ...]
    m: int
    B: int | None = None
    distinct: bool = False
    include_zero: bool = False

    def __post_init__(self) -> None:
        if self.d < 1 or self.s < 1 or self.m < 0:
            raise ValueError("need d >= 1, s >= 1, m >= 0")
        object.__setattr__(self, "lambdas", tuple(self.lambdas))
        if len(self.lambdas) != self.s:
            raise ValueError(f"expected {self.s} lambdas, got {len(self.lambdas)}")
        if any(lam < 1 for lam in self.lambdas):
            raise ValueError("lambdas must be positive")
        if self.B is not None and self.B < 1:
            raise ValueError(f"need B >= 1, got {self.B}")

    @property
    def effective_B(self) -> int:
        return self.B if self.B is not None else default_upper_bound(self.m, self.d)

    @property
    def x_range(self) -> range:
        lo = 0 if self.include_zero else 1
        return range(lo, self.effective_B + 1)


_MAX_TABLE_CELLS = 300_000_000


def _check_table(spec: CountSpec) -> None:
    rows = spec.s + 1 if spec.distinct else 2
    if (spec.m + 1) * rows > _MAX_TABLE_CELLS:
        raise InfeasibleWidthError(
            f"counting table of {(spec.m + 1) * rows} cells is not supported"
        )


def _count_plain(d: int, lambdas: Sequence[int], m: int, xs: range) -> int:
    """Ordered-tuple count by DP over partial sums, no distinctness."""
    base_vals = [comb(x, d) for x in xs]
    if max(len(xs), 1) ** len(lambdas) < 2**62:
        dp = np.zeros(m + 1, dtype=np.int64)
        dp[0] = 1
        for lam in lambdas:
            new = np.zeros(m + 1, dtype=np.int64)
            for v in base_vals:
                lv = lam * v
                if lv <= m:
                    new[lv:] += dp[: m + 1 - lv]
            dp = new
        return int(dp[m])
    # unbounded fallback: exact Python ints
    table: dict[int, int] = {0: 1}
    for lam in lambdas:
        new: dict[int, int] = {}
        for t, c in table.items():
            for v in base_vals:
                tv = t + lam * v
                if tv <= m:
                    new[tv] = new.get(tv, 0) + c
        table = new
    return table.get(m, 0)


def _count_distinct_uniform(d: int, lam: int, s: int, m: int, xs: range) -> int:
    """N*(m) with all lambdas equal: subset-count DP times s! orderings."""
    vals = [lam * comb(x, d) for x in xs]
    if max(len(xs), 1) ** s < 2**62:
        dp = np.zeros((s + 1, m + 1), dtype=np.int64)
        dp[0, 0] = 1
        for v in vals:
            if v > m:
                continue
            for j in range(s, 0, -1):
                dp[j, v:] += dp[j - 1, : m + 1 - v]
        return int(dp[s, m]) * factorial(s)
    table: list[dict[int, int]] = [{0: 1}] + [{} for _ in range(s)]
    for v in vals:
        for j in range(s, 0, -1):
            for t, c in table[j - 1].items():
                if t + v <= m:
                    table[j][t + v] = table[j].get(t + v, 0) + c
    return table[s].get(m, 0) * factorial(s)


def _set_partitions(items: tuple[int, ...]):
    """All set partitions, each a tuple of blocks."""
    if not items:
        yield ()
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        yield ((first,),) + part
        for i, block in enumerate(part):
            yield part[:i] + ((first,) + block,) + part[i + 1 :]


_MAX_PARTITION_S = 7


def _count_distinct_general(spec: CountSpec) -> int:
    """N*(m) for mixed lambdas via Moebius inversion over coincidence
    patterns: merge each block's lambdas and alternate-sum the merged
    plain counts."""
    if spec.s > _MAX_PARTITION_S:
        raise ValueError(
            f"distinct counting with mixed lambdas supported for s <= {_MAX_PARTITION_S}"
        )
    total = 0
    for part in _set_partitions(tuple(range(spec.s))):
        merged = tuple(sum(spec.lambdas[i] for i in block) for block in part)
        mu = 1
        for block in part:
            b = len(block)
            mu *= (-1) ** (b - 1) * factorial(b - 1)
        total += mu * _count_plain(spec.d, merged, spec.m, spec.x_range)
    return total


def count_representations(spec: CountSpec) -> int:
    """Exact N(m), or N*(m) when spec.distinct is set."""
    _check_table(spec)
    if not spec.distinct:
        return _count_plain(spec.d, spec.lambdas, spec.m, spec.x_range)
    if len(set(spec.lambdas)) == 1:
        return _count_distinct_uniform(
            spec.d, spec.lambdas[0], spec.s, spec.m, spec.x_range
        )
    return _count_distinct_general(spec)


@dataclass(frozen=True)
class ProbeRow:
    m: int
    B: int
    N: int
    Nstar: int
    scaled: float  # N(m) * m^(1 - s/d)


def asymptotic_probe(
    d: int,
    s: int,
    m_values: Iterable[int],
    B: int | Callable[[int], int] | None = None,
    lambdas: Sequence[int] | None = None,
) -> list[ProbeRow]:
    """Tabulate exact N(m), N*(m) and the rescaled count for inspection.

    B may be a fixed bound, a rule m -> B, or None for the default
    ceil(m^(1/d) / 100).  No asymptotic judgment is made here; callers
    interpret the table.
    """
    lams = tuple(lambdas) if lambdas is not None else (1,) * s
    rows = []
    for m in m_values:
        b = B(m) if callable(B) else B
        plain = CountSpec(d=d, s=s, lambdas=lams, m=m, B=b)
        star = CountSpec(d=d, s=s, lambdas=lams, m=m, B=b, distinct=True)
        n_all = count_representations(plain)
        n_star = count_representations(star)
        rows.append(
            ProbeRow(
                m=m,
                B=plain.effective_B,
                N=n_all,
                Nstar=n_star,
                scaled=n_all * float(m) ** (1.0 - s / d),
            )
        )
    return rows


# ---------------------------------------------------------------------------
# local counting: M_m(p^k)
# ---------------------------------------------------------------------------

_MAX_RESIDUES = 10_000


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    f = 2
    while f * f <= p:
        if p % f == 0:
            return False
        f += 1
    return True


def p_adic_valuation_factorial(p: int, d: int) -> int:
    """v_p(d!) by Legendre's formula."""
    t = 0
    q = p
    while q <= d:
        t += d // q
        q *= p
    return t


@dataclass(frozen=True)
class LocalCountSpec:
    """Congruence sum lambda_i C(x_i, d) = m mod p^k_exp, variables running
    over residues modulo p^(k_exp + t) with t = v_p(d!)."""

    p: int
    k_exp: int
    d: int
    s: int
    lambdas: tuple[int, ...]
    m: int

    def __post_init__(self) -> None:
        if not _is_prime(self.p):
            raise NotPrimeError(f"{self.p} is not prime")
        if self.k_exp < 1 or self.d < 1 or self.s < 1:
            raise ValueError("need k_exp >= 1, d >= 1, s >= 1")
        object.__setattr__(self, "lambdas", tuple(self.lambdas))
        if len(self.lambdas) != self.s:
            raise ValueError(f"expected {self.s} lambdas, got {len(self.lambdas)}")
        if self.variable_modulus > _MAX_RESIDUES:
            raise TooLargeModulusError(
                f"p^(k+t) = {self.variable_modulus} exceeds {_MAX_RESIDUES}"
            )

    @property
    def t(self) -> int:
        return p_adic_valuation_factorial(self.p, self.d)

    @property
    def variable_modulus(self) -> int:
        return self.p ** (self.k_exp + self.t)

    @property
    def congruence_modulus(self) -> int:
        return self.p**self.k_exp


def count_local(spec: LocalCountSpec) -> int:
    """Exact M_m(p^k): residue tuples mod p^(k+t) solving the congruence."""
    mc = spec.congruence_modulus
    mv = spec.variable_modulus
    residue_of = [comb(x, spec.d) % mc for x in range(mv)]
    dist = [0] * mc
    dist[0] = 1  # empty-sum distribution
    vec_cache: dict[int, list[int]] = {}
    for lam in spec.lambdas:
        vec = vec_cache.get(lam % mc)
        if vec is None:
            vec = [0] * mc
            for r in residue_of:
                vec[lam * r % mc] += 1
            vec_cache[lam % mc] = vec
        new = [0] * mc
        for a, ca in enumerate(dist):
            if ca:
                for b, cb in enumerate(vec):
                    if cb:
                        new[(a + b) % mc] += ca * cb
        dist = new
    return dist[spec.m % mc]
