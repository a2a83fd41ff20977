"""Timing comparison: factored sampling-set construction vs a naive search
over all N*T rows of the joint basis."""

import math
import time
from dataclasses import dataclass

import numpy as np

from .bandlimit import SpectralSupport, restrict_bases
from .generate import random_connected_graph, random_support
from .graphs import cycle_graph, laplacian
from .sampling import critical_sampling_set, max_lin_indep_rows
from .spectral import eig_sym, joint_basis_columns


@dataclass(frozen=True)
class BenchRow:
    t_dim: int
    g_dim: int
    k_t: int
    k_g: int
    k: int
    samples_critical: int
    samples_separate: int
    time_factored: float
    time_naive: float

    @property
    def ratio(self):
        return self.time_factored / self.time_naive


def _best_of(fn, repeats):
    best = math.inf
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def benchmark_case(ut_r: np.ndarray, ug_r: np.ndarray, uj: np.ndarray,
                   support: SpectralSupport, repeats: int = 3) -> BenchRow:
    """Time the factored construction against a full-row naive selection on
    one prepared instance. Basis construction is not timed."""

    def factored():
        critical_sampling_set(ut_r, ug_r, uj, support)

    def naive():
        max_lin_indep_rows(uj)

    t_fac = _best_of(factored, repeats)
    t_naive = _best_of(naive, repeats)
    plan, _ = critical_sampling_set(ut_r, ug_r, uj, support)
    return BenchRow(
        t_dim=support.t_dim,
        g_dim=support.g_dim,
        k_t=support.k_t,
        k_g=support.k_g,
        k=support.k,
        samples_critical=plan.size,
        samples_separate=support.k_t * support.k_g,
        time_factored=t_fac,
        time_naive=t_naive,
    )


def prepare_case(n: int, seed: int = 0, k_t: int = None, k_g: int = None):
    """Cycle time graph and random connected vertex graph of size n with a
    random support; bandwidths default to ceil(n / 4)."""
    rng = np.random.default_rng(seed)
    if k_t is None:
        k_t = max(1, math.ceil(n / 4))
    if k_g is None:
        k_g = max(1, math.ceil(n / 4))
    basis_t = eig_sym(laplacian(cycle_graph(n)))
    basis_g = eig_sym(laplacian(random_connected_graph(n, rng)))
    k = (max(k_t, k_g) + k_t * k_g + 1) // 2
    support = random_support(n, n, rng, k_t=k_t, k_g=k_g, k=k)
    ut_r, ug_r = restrict_bases(basis_t, basis_g, support)
    uj = joint_basis_columns(basis_t, basis_g, support)
    return ut_r, ug_r, uj, support


def benchmark(sizes, seed: int = 0, repeats: int = 3):
    """One :class:`BenchRow` per size n, with T = N = n."""
    rows = []
    for n in sizes:
        ut_r, ug_r, uj, support = prepare_case(n, seed=seed)
        rows.append(benchmark_case(ut_r, ug_r, uj, support, repeats=repeats))
    return rows


def write_bench_csv(rows, path):
    with open(path, "w") as fh:
        fh.write(
            "T,N,K_T,K_G,K,samples_critical,samples_separate,"
            "time_factored,time_naive,ratio\n"
        )
        for r in rows:
            fh.write(
                f"{r.t_dim},{r.g_dim},{r.k_t},{r.k_g},{r.k},"
                f"{r.samples_critical},{r.samples_separate},"
                f"{r.time_factored:.6e},{r.time_naive:.6e},{r.ratio:.6e}\n"
            )
