"""Critical sampling set construction, qualification checks, and reconstruction.

The core routine factors the row search: independent rows of the small time and
graph bases first, then one pass over the K_T*K_G candidate product rows of the
joint basis, instead of eliminating over all N*T rows.
"""

from dataclasses import dataclass

import numpy as np

from .bandlimit import SpectralSupport
from .spectral import unvec

ROW_SELECT_EPS = 1e-9
COND_LIMIT = 1e12


class RankDeficiencyError(RuntimeError):
    """Raised when a basis matrix has fewer independent rows than expected."""


class UnqualifiedPlanError(RuntimeError):
    """Raised when a sampling plan cannot support perfect reconstruction."""


class IllConditionedError(RuntimeError):
    """Raised when the sampled system is too ill-conditioned to solve."""


@dataclass(frozen=True)
class SamplingPlan:
    """Set of (time, vertex) sample points on a T x N product graph."""

    t_dim: int
    g_dim: int
    samples: frozenset

    def __post_init__(self):
        samples = frozenset((int(t), int(v)) for t, v in self.samples)
        if not samples:
            raise ValueError("sampling plan must contain at least one sample")
        for t, v in samples:
            if not (0 <= t < self.t_dim and 0 <= v < self.g_dim):
                raise ValueError(
                    f"sample ({t}, {v}) out of range for dims "
                    f"({self.t_dim}, {self.g_dim})"
                )
        object.__setattr__(self, "samples", samples)

    @property
    def sorted_samples(self):
        return tuple(sorted(self.samples))

    @property
    def proj_t(self):
        """Time slots touched by at least one sample."""
        return tuple(sorted({t for t, _ in self.samples}))

    @property
    def proj_g(self):
        """Vertices touched by at least one sample."""
        return tuple(sorted({v for _, v in self.samples}))

    @property
    def size(self):
        return len(self.samples)

    def linear_indices(self):
        """Row indices into the joint basis, in canonical sample order."""
        return [t * self.g_dim + v for t, v in self.sorted_samples]

    def schedule(self):
        """Per-vertex view: vertex -> sorted tuple of sampled time slots."""
        sched = {}
        for t, v in sorted(self.samples, key=lambda s: (s[1], s[0])):
            sched.setdefault(v, []).append(t)
        return {v: tuple(ts) for v, ts in sched.items()}


@dataclass(frozen=True)
class QualificationReport:
    """Rank certificate of a plan against a spectral support."""

    rank: int
    n_samples: int
    n_proj_t: int
    n_proj_g: int
    k: int
    k_t: int
    k_g: int

    @property
    def qualified(self):
        return self.rank == self.k

    @property
    def critical(self):
        return (
            self.qualified
            and self.n_samples == self.k
            and self.n_proj_t == self.k_t
            and self.n_proj_g == self.k_g
        )


def _greedy_scan(mat: np.ndarray, order, eps: float) -> list:
    """Greedy independent-row pick scanning rows in the given order."""
    n_rows, n_cols = mat.shape
    norms = np.linalg.norm(mat, axis=1)
    scale = float(np.max(norms)) if n_rows else 0.0
    basis = np.empty((n_cols, n_cols))
    count = 0
    selected = []
    for i in order:
        row = mat[i]
        norm = norms[i]
        # rows negligible at matrix scale count as zero rows
        if norm <= eps * scale:
            continue
        resid = row
        if count:
            q = basis[:count]
            resid = resid - q.T @ (q @ resid)
            resid = resid - q.T @ (q @ resid)  # reorthogonalize for stability
        rnorm = np.linalg.norm(resid)
        if rnorm > eps * norm:
            basis[count] = resid / rnorm
            count += 1
            selected.append(i)
    return selected


def max_lin_indep_rows(mat: np.ndarray, eps: float = ROW_SELECT_EPS) -> list:
    """Indices of a maximal linearly independent row set, greedy lowest-first.

    A row is accepted iff its residual after projection onto the span of the
    rows already accepted exceeds ``eps`` times its own norm; zero rows are
    always rejected. The scan covers every row, so the result is maximal and
    deterministic.
    """
    mat = np.asarray(mat, dtype=float)
    if mat.ndim != 2 or mat.shape[1] < 1:
        raise ValueError(f"expected a matrix with at least one column, got {mat.shape}")
    if eps <= 0:
        raise ValueError(f"tolerance must be positive, got {eps}")
    return _greedy_scan(mat, range(mat.shape[0]), eps)


def _spread_orders(product, sel_t, sel_g, n_shuffles=200, seed=0):
    """Scan orders whose leading rows touch every chosen time slot and vertex.

    Yields deterministic cyclic-transversal fronts (one per offset), then
    seeded shuffles as a last resort.
    """
    n = len(product)
    idx = {p: i for i, p in enumerate(product)}
    span = max(len(sel_t), len(sel_g))
    for off in range(span):
        front = [
            idx[(sel_t[(i + off) % len(sel_t)], sel_g[i % len(sel_g)])]
            for i in range(span)
        ]
        yield front + [i for i in range(n) if i not in set(front)]
    rng = np.random.default_rng(seed)
    for _ in range(n_shuffles):
        yield rng.permutation(n).tolist()


def critical_sampling_set(ut_r: np.ndarray, ug_r: np.ndarray, uj: np.ndarray,
                          support: SpectralSupport):
    """Construct a critical sampling plan from the restricted bases.

    Step 1 picks independent time slots and vertices from the small factors,
    step 2 restricts the joint basis to their product (lexicographic (t, v)
    order), step 3 picks independent rows there and maps them back to sample
    tuples. Returns the plan with its qualification report.

    The step-3 scan starts in lexicographic order. When the support does not
    fill its bounding rectangle, the lowest-index pick can reach full rank
    while touching fewer than K_T time slots or K_G vertices; in that case the
    scan is retried with deterministic orders that spread the leading rows
    across the whole grid, and the first full-rank spread selection wins. If
    no scan order covers the grid, the lexicographic plan is returned (still
    qualified and of minimal size K, but not critical).
    """
    ut_r = np.asarray(ut_r, dtype=float)
    ug_r = np.asarray(ug_r, dtype=float)
    uj = np.asarray(uj, dtype=float)
    t_dim, g_dim = support.t_dim, support.g_dim
    if ut_r.shape != (t_dim, support.k_t):
        raise ValueError(f"time basis shape {ut_r.shape} does not match support")
    if ug_r.shape != (g_dim, support.k_g):
        raise ValueError(f"graph basis shape {ug_r.shape} does not match support")
    if uj.shape != (t_dim * g_dim, support.k):
        raise ValueError(f"joint basis shape {uj.shape} does not match support")

    sel_t = max_lin_indep_rows(ut_r)
    if len(sel_t) != support.k_t:
        raise RankDeficiencyError(
            f"step 1: time basis has rank {len(sel_t)} < {support.k_t}"
        )
    sel_g = max_lin_indep_rows(ug_r)
    if len(sel_g) != support.k_g:
        raise RankDeficiencyError(
            f"step 1: graph basis has rank {len(sel_g)} < {support.k_g}"
        )

    product = [(t, v) for t in sel_t for v in sel_g]
    rows = uj[[t * g_dim + v for t, v in product]]
    picked = max_lin_indep_rows(rows)
    if len(picked) != support.k:
        raise RankDeficiencyError(
            f"step 3: product rows have rank {len(picked)} < {support.k}"
        )

    samples = frozenset(product[i] for i in picked)
    plan = SamplingPlan(t_dim=t_dim, g_dim=g_dim, samples=samples)
    report = qualify(plan, uj, support)
    if report.critical:
        return plan, report

    for order in _spread_orders(product, sel_t, sel_g):
        alt = _greedy_scan(rows, order, ROW_SELECT_EPS)
        if len(alt) != support.k:
            continue
        points = [product[i] for i in alt]
        if (len({t for t, _ in points}) == support.k_t
                and len({v for _, v in points}) == support.k_g):
            alt_plan = SamplingPlan(t_dim=t_dim, g_dim=g_dim, samples=frozenset(points))
            return alt_plan, qualify(alt_plan, uj, support)
    return plan, report


def qualify(plan: SamplingPlan, uj: np.ndarray, support: SpectralSupport) -> QualificationReport:
    """Rank of the joint basis restricted to the plan's samples, with the
    qualified / critical verdicts."""
    uj = np.asarray(uj, dtype=float)
    if plan.t_dim != support.t_dim or plan.g_dim != support.g_dim:
        raise ValueError("plan and support dimensions disagree")
    sub = uj[plan.linear_indices()]
    rank = int(np.linalg.matrix_rank(sub))
    return QualificationReport(
        rank=rank,
        n_samples=plan.size,
        n_proj_t=len(plan.proj_t),
        n_proj_g=len(plan.proj_g),
        k=support.k,
        k_t=support.k_t,
        k_g=support.k_g,
    )


def separate_sampling(ut_r: np.ndarray, ug_r: np.ndarray) -> SamplingPlan:
    """Baseline plan: independent time slots times independent vertices.

    Always uses K_T * K_G samples, which is minimal only when the support fills
    its bounding rectangle.
    """
    ut_r = np.asarray(ut_r, dtype=float)
    ug_r = np.asarray(ug_r, dtype=float)
    sel_t = max_lin_indep_rows(ut_r)
    if len(sel_t) != ut_r.shape[1]:
        raise RankDeficiencyError(
            f"time basis has rank {len(sel_t)} < {ut_r.shape[1]}"
        )
    sel_g = max_lin_indep_rows(ug_r)
    if len(sel_g) != ug_r.shape[1]:
        raise RankDeficiencyError(
            f"graph basis has rank {len(sel_g)} < {ug_r.shape[1]}"
        )
    samples = frozenset((t, v) for t in sel_t for v in sel_g)
    return SamplingPlan(t_dim=ut_r.shape[0], g_dim=ug_r.shape[0], samples=samples)


def sample(x_mat: np.ndarray, plan: SamplingPlan) -> np.ndarray:
    """Signal values at the plan's samples, canonical (t, v) order."""
    x_mat = np.asarray(x_mat, dtype=float)
    if x_mat.shape != (plan.g_dim, plan.t_dim):
        raise ValueError(
            f"signal shape {x_mat.shape} does not match plan dims "
            f"({plan.g_dim}, {plan.t_dim})"
        )
    return np.array([x_mat[v, t] for t, v in plan.sorted_samples])


def reconstruct_coefficients(values: np.ndarray, plan: SamplingPlan,
                             uj: np.ndarray, support: SpectralSupport) -> np.ndarray:
    """Spectral coefficients recovered from sampled values.

    Square solve when the plan is critical-sized, least squares via normal
    equations otherwise. Refuses unqualified plans and near-singular systems.
    """
    values = np.asarray(values, dtype=float)
    uj = np.asarray(uj, dtype=float)
    if values.shape != (plan.size,):
        raise ValueError(
            f"got {values.shape[0] if values.ndim == 1 else values.shape} sample "
            f"values for a plan of size {plan.size}"
        )
    sub = uj[plan.linear_indices()]
    rank = int(np.linalg.matrix_rank(sub))
    if rank < support.k:
        raise UnqualifiedPlanError(
            f"plan is not qualified: rank {rank} < bandwidth {support.k}"
        )
    cond = np.linalg.cond(sub)
    if not np.isfinite(cond) or cond > COND_LIMIT:
        raise IllConditionedError(
            f"sampled system condition estimate {cond:.3e} exceeds {COND_LIMIT:.0e}"
        )
    if plan.size == support.k:
        return np.linalg.solve(sub, values)
    return np.linalg.solve(sub.T @ sub, sub.T @ values)


def reconstruct(values: np.ndarray, plan: SamplingPlan, uj: np.ndarray,
                support: SpectralSupport) -> np.ndarray:
    """Full N x T signal recovered from sampled values."""
    coeffs = reconstruct_coefficients(values, plan, uj, support)
    x = np.asarray(uj, dtype=float) @ coeffs
    return unvec(x, support.g_dim, support.t_dim)
