"""Spectral supports, bandwidth bookkeeping, and bandlimited signal synthesis."""

from dataclasses import dataclass, field

import numpy as np

from .spectral import EigenBasis


@dataclass(frozen=True)
class SpectralSupport:
    """Set of occupied joint frequency pairs (j_t, j_g) on a T x N product graph.

    ``k`` counts occupied pairs, ``k_t`` occupied time frequencies and ``k_g``
    occupied graph frequencies.
    """

    t_dim: int
    g_dim: int
    pairs: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.t_dim < 1 or self.g_dim < 1:
            raise ValueError("support dimensions must be positive")
        pairs = frozenset((int(jt), int(jg)) for jt, jg in self.pairs)
        if not pairs:
            raise ValueError("support must contain at least one frequency pair")
        for jt, jg in pairs:
            if not (0 <= jt < self.t_dim and 0 <= jg < self.g_dim):
                raise ValueError(
                    f"pair ({jt}, {jg}) out of range for dims "
                    f"({self.t_dim}, {self.g_dim})"
                )
        object.__setattr__(self, "pairs", pairs)

    @property
    def sorted_pairs(self):
        return tuple(sorted(self.pairs))

    @property
    def time_freqs(self):
        return tuple(sorted({jt for jt, _ in self.pairs}))

    @property
    def graph_freqs(self):
        return tuple(sorted({jg for _, jg in self.pairs}))

    @property
    def k(self):
        return len(self.pairs)

    @property
    def k_t(self):
        return len(self.time_freqs)

    @property
    def k_g(self):
        return len(self.graph_freqs)

    def is_sbl(self):
        """True when the support fits strictly inside both frequency axes."""
        return self.k_t < self.t_dim and self.k_g < self.g_dim

    def is_rectangle(self):
        return self.k == self.k_t * self.k_g


def detect_support(xf_mat: np.ndarray, eps: float = 1e-8) -> SpectralSupport:
    """Occupied pairs of a joint spectrum, thresholded relative to its peak.

    ``xf_mat`` rows index graph frequencies and columns time frequencies.
    """
    if eps <= 0:
        raise ValueError(f"threshold must be positive, got {eps}")
    xf_mat = np.asarray(xf_mat, dtype=float)
    peak = np.max(np.abs(xf_mat)) if xf_mat.size else 0.0
    if peak == 0.0:
        raise ValueError("zero signal has no bandwidth")
    n, t = xf_mat.shape
    rows, cols = np.nonzero(np.abs(xf_mat) > eps * peak)
    pairs = frozenset((int(jt), int(jg)) for jg, jt in zip(rows, cols))
    return SpectralSupport(t_dim=t, g_dim=n, pairs=pairs)


def restrict_bases(basis_t: EigenBasis, basis_g: EigenBasis, support: SpectralSupport):
    """Columns of the two bases at the occupied frequencies, ascending order."""
    if basis_t.dim != support.t_dim or basis_g.dim != support.g_dim:
        raise ValueError("bases do not match the support's dimensions")
    ut_r = basis_t.vectors[:, support.time_freqs]
    ug_r = basis_g.vectors[:, support.graph_freqs]
    return ut_r, ug_r


def coeffs_to_matrix(support: SpectralSupport, coeffs: dict) -> np.ndarray:
    """Dense K_G x K_T coefficient block from a pair -> value mapping."""
    if set(coeffs) != support.pairs:
        raise ValueError("coefficients must be keyed exactly by the support pairs")
    tpos = {f: i for i, f in enumerate(support.time_freqs)}
    gpos = {f: i for i, f in enumerate(support.graph_freqs)}
    block = np.zeros((support.k_g, support.k_t))
    for (jt, jg), val in coeffs.items():
        val = float(val)
        if val == 0.0:
            raise ValueError(
                f"zero coefficient at pair ({jt}, {jg}) would silently shrink "
                "the bandwidth"
            )
        block[gpos[jg], tpos[jt]] = val
    return block


def synth_from_restricted(ut_r: np.ndarray, ug_r: np.ndarray,
                          support: SpectralSupport, coeffs: dict) -> np.ndarray:
    """N x T signal with the given spectrum, built from restricted bases."""
    block = coeffs_to_matrix(support, coeffs)
    return np.asarray(ug_r) @ block @ np.asarray(ut_r).T


def synth_signal(basis_t: EigenBasis, basis_g: EigenBasis,
                 support: SpectralSupport, coeffs: dict) -> np.ndarray:
    """N x T signal whose joint spectrum is exactly the given coefficients."""
    ut_r, ug_r = restrict_bases(basis_t, basis_g, support)
    return synth_from_restricted(ut_r, ug_r, support, coeffs)


def full_spectrum(support: SpectralSupport, coeffs: dict) -> np.ndarray:
    """Dense N x T joint spectrum matrix with the coefficients in place."""
    if set(coeffs) != support.pairs:
        raise ValueError("coefficients must be keyed exactly by the support pairs")
    xf = np.zeros((support.g_dim, support.t_dim))
    for (jt, jg), val in coeffs.items():
        xf[jg, jt] = float(val)
    return xf
