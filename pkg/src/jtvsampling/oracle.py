"""Brute-force ground truth at tiny scale.

Everything here deliberately avoids the production row-selection code: rank is
computed by plain Gaussian elimination so the oracle and the fast path cannot
share a bug.
"""

from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .bandlimit import SpectralSupport

MAX_JOINT_VERTICES = 20


def elimination_rank(mat: np.ndarray, tol: float = 1e-10) -> int:
    """Matrix rank by row echelon reduction with partial pivoting."""
    a = np.array(mat, dtype=float)
    if a.size == 0:
        return 0
    scale = np.max(np.abs(a))
    if scale == 0.0:
        return 0
    rows, cols = a.shape
    rank = 0
    for col in range(cols):
        if rank >= rows:
            break
        piv = rank + int(np.argmax(np.abs(a[rank:, col])))
        if abs(a[piv, col]) <= tol * scale:
            continue
        if piv != rank:
            a[[rank, piv]] = a[[piv, rank]]
        factors = a[rank + 1:, col] / a[rank, col]
        a[rank + 1:] -= np.outer(factors, a[rank])
        rank += 1
    return rank


@dataclass(frozen=True)
class ExhaustiveReport:
    """Outcome of enumerating all small sampling sets against a support."""

    min_qualified_size: int
    count_qualified_at_k: int
    violations: tuple = field(default_factory=tuple)
    exists_critical_set: bool = False

    @property
    def clean(self):
        return not self.violations


def _subset_stats(subset, g_dim):
    times = {i // g_dim for i in subset}
    verts = {i % g_dim for i in subset}
    return len(times), len(verts)


def exhaustive_check(uj: np.ndarray, support: SpectralSupport,
                     max_size: int = None) -> ExhaustiveReport:
    """Enumerate every sample subset up to ``max_size`` and audit the bounds.

    Records the minimum subset size reaching full rank, counts qualified
    subsets of size K, collects any qualified subset that undercuts the
    |S| >= K, |S_T| >= K_T or |S_G| >= K_G bounds (expected none), and whether
    a size-K qualified subset is critical.
    """
    uj = np.asarray(uj, dtype=float)
    nt = support.t_dim * support.g_dim
    k = support.k
    if max_size is None:
        max_size = k
    if nt > MAX_JOINT_VERTICES:
        raise ValueError(
            f"enumeration limited to {MAX_JOINT_VERTICES} joint vertices, got {nt}"
        )
    if max_size > k + 1:
        raise ValueError(
            f"enumeration limited to subsets of size {k + 1}, requested {max_size}"
        )
    if uj.shape != (nt, k):
        raise ValueError(f"joint basis shape {uj.shape} does not match support")

    min_qualified = None
    count_at_k = 0
    violations = []
    exists_critical = False
    for size in range(1, max_size + 1):
        for subset in combinations(range(nt), size):
            rank = elimination_rank(uj[list(subset)])
            if rank != k:
                continue
            n_t, n_g = _subset_stats(subset, support.g_dim)
            if min_qualified is None:
                min_qualified = size
            if size < k or n_t < support.k_t or n_g < support.k_g:
                violations.append(subset)
            if size == k:
                count_at_k += 1
                if n_t == support.k_t and n_g == support.k_g:
                    exists_critical = True
    return ExhaustiveReport(
        min_qualified_size=min_qualified,
        count_qualified_at_k=count_at_k,
        violations=tuple(violations),
        exists_critical_set=exists_critical,
    )


def subset_rank(uj: np.ndarray, subset) -> int:
    """Rank of the joint basis restricted to the given linear indices."""
    subset = sorted(subset)
    if not subset:
        return 0
    return elimination_rank(np.asarray(uj, dtype=float)[subset])


def check_monotonicity(uj: np.ndarray, trials: int, rng=None) -> bool:
    """Rank never drops when a sample set grows: random nested pairs S1 in S2."""
    uj = np.asarray(uj, dtype=float)
    nt = uj.shape[0]
    if nt > MAX_JOINT_VERTICES:
        raise ValueError(
            f"enumeration limited to {MAX_JOINT_VERTICES} joint vertices, got {nt}"
        )
    if rng is None:
        rng = np.random.default_rng(0)
    for _ in range(trials):
        big_size = int(rng.integers(0, nt + 1))
        big = rng.choice(nt, size=big_size, replace=False) if big_size else np.array([], dtype=int)
        small_size = int(rng.integers(0, big_size + 1))
        small = rng.choice(big, size=small_size, replace=False) if small_size else np.array([], dtype=int)
        if subset_rank(uj, small) > subset_rank(uj, big):
            return False
    return True
