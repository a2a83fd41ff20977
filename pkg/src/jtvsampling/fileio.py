"""Flat-file formats: graph / support / plan JSON, signal and sample CSV.

All indices are 0-based. JSON is written with sorted keys and fixed layout so
identical inputs produce byte-identical files.
"""

import json

import numpy as np

from .bandlimit import SpectralSupport
from .graphs import Graph
from .sampling import QualificationReport, SamplingPlan


def _dump_json(obj, path):
    with open(path, "w") as fh:
        json.dump(obj, fh, sort_keys=True, indent=2)
        fh.write("\n")


def _load_json(path):
    with open(path) as fh:
        return json.load(fh)


def save_graph(g: Graph, path):
    _dump_json({"n": g.n, "edges": [[i, j, w] for i, j, w in g.edges]}, path)


def load_graph(path) -> Graph:
    data = _load_json(path)
    try:
        return Graph(int(data["n"]), tuple(tuple(e) for e in data["edges"]))
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed graph file {path}: {exc}") from exc


def save_support(s: SpectralSupport, path):
    _dump_json(
        {"T": s.t_dim, "N": s.g_dim, "pairs": [list(p) for p in s.sorted_pairs]},
        path,
    )


def load_support(path) -> SpectralSupport:
    data = _load_json(path)
    try:
        return SpectralSupport(
            t_dim=int(data["T"]),
            g_dim=int(data["N"]),
            pairs=frozenset(tuple(p) for p in data["pairs"]),
        )
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed support file {path}: {exc}") from exc


def save_signal(x_mat: np.ndarray, path):
    """N x T signal as CSV, row v = vertex v across time."""
    np.savetxt(path, np.asarray(x_mat, dtype=float), delimiter=",", fmt="%.17g")


def load_signal(path) -> np.ndarray:
    x = np.loadtxt(path, delimiter=",", ndmin=2)
    if not np.all(np.isfinite(x)):
        raise ValueError(f"signal file {path} contains non-finite values")
    return x


def save_plan(plan: SamplingPlan, report: QualificationReport, path):
    _dump_json(
        {
            "T": plan.t_dim,
            "N": plan.g_dim,
            "samples": [list(s) for s in plan.sorted_samples],
            "s_t": list(plan.proj_t),
            "s_g": list(plan.proj_g),
            "K": report.k,
            "K_T": report.k_t,
            "K_G": report.k_g,
            "rank": report.rank,
            "qualified": report.qualified,
            "critical": report.critical,
        },
        path,
    )


def load_plan(path) -> SamplingPlan:
    data = _load_json(path)
    try:
        return SamplingPlan(
            t_dim=int(data["T"]),
            g_dim=int(data["N"]),
            samples=frozenset(tuple(s) for s in data["samples"]),
        )
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed plan file {path}: {exc}") from exc


def save_samples(plan: SamplingPlan, values: np.ndarray, path):
    """Sampled values as CSV rows (t, v, value) in plan order."""
    values = np.asarray(values, dtype=float)
    if values.shape != (plan.size,):
        raise ValueError("value count does not match plan size")
    with open(path, "w") as fh:
        for (t, v), val in zip(plan.sorted_samples, values):
            fh.write(f"{t},{v},{val:.17g}\n")


def load_samples(path):
    """Returns (list of (t, v), value array) in file order."""
    points, values = [], []
    with open(path) as fh:
        for line_no, line in enumerate(fh, 1):
            line = line.strip()
            if not line:
                continue
            parts = line.split(",")
            if len(parts) != 3:
                raise ValueError(f"malformed samples file {path}, line {line_no}")
            points.append((int(parts[0]), int(parts[1])))
            values.append(float(parts[2]))
    if not points:
        raise ValueError(f"samples file {path} is empty")
    return points, np.array(values)


def save_basis_pair(ut_r: np.ndarray, ug_r: np.ndarray, path):
    """Restricted time / graph basis matrices as JSON."""
    _dump_json(
        {
            "U_T": np.asarray(ut_r, dtype=float).tolist(),
            "U_G": np.asarray(ug_r, dtype=float).tolist(),
        },
        path,
    )


def load_basis_pair(path):
    data = _load_json(path)
    try:
        ut_r = np.array(data["U_T"], dtype=float)
        ug_r = np.array(data["U_G"], dtype=float)
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed basis file {path}: {exc}") from exc
    if ut_r.ndim != 2 or ug_r.ndim != 2:
        raise ValueError(f"basis file {path} must hold two matrices")
    return ut_r, ug_r
