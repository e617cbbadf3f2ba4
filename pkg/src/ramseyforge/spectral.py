"""Dense symmetric spectra and spectral certificates.

The eigensolver is written here (Householder tridiagonalization, then
implicit-shift QL on the tridiagonal form) rather than delegated, with
numpy supplying only array storage and BLAS-level primitives.  On top of
it: the (n,d,lambda) report, the even-walk eigenvalue inequality, the
expander mixing lemma, the ratio bound on independent sets, and the
triangle trace bound.
"""

from __future__ import annotations

import math
import sys
from dataclasses import dataclass
from typing import Iterable, NamedTuple

import numpy as np

from .graphcore import Graph, triangle_count

MAX_SPECTRUM_N = 3000
_MAX_QL_SWEEPS = 64


# -- eigensolver ------------------------------------------------------------


def adjacency_matrix(G: Graph) -> np.ndarray:
    """Dense float adjacency matrix of G."""
    n = G.n
    if n == 0:
        return np.zeros((0, 0))
    nbytes = (n + 7) // 8
    buf = b"".join(row.to_bytes(nbytes, "little") for row in G.rows)
    bits = np.unpackbits(np.frombuffer(buf, dtype=np.uint8), bitorder="little")
    return bits.reshape(n, 8 * nbytes)[:, :n].astype(float)


def _tridiagonalize(M: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Householder reduction of a symmetric matrix to tridiagonal form.
    Returns (diagonal, subdiagonal)."""
    A = np.array(M, dtype=float, copy=True)
    n = A.shape[0]
    for k in range(n - 2):
        x = A[k + 1 :, k]
        norm_x = math.sqrt(float(x @ x))
        if norm_x == 0.0:
            continue
        alpha = -math.copysign(norm_x, float(x[0]))
        v = x.copy()
        v[0] -= alpha
        vnorm = math.sqrt(float(v @ v))
        if vnorm == 0.0:
            continue
        u = v / vnorm
        B = A[k + 1 :, k + 1 :]
        p = B @ u
        q = p - float(u @ p) * u
        B -= 2.0 * np.outer(u, q) + 2.0 * np.outer(q, u)
        A[k + 1, k] = A[k, k + 1] = alpha
        A[k + 2 :, k] = 0.0
        A[k, k + 2 :] = 0.0
    return np.diag(A).copy(), np.diag(A, 1).copy()


def _ql_eigenvalues(diag, off) -> list[float]:
    """Implicit-shift QL iteration on a symmetric tridiagonal matrix."""
    d = [float(x) for x in diag]
    e = [float(x) for x in off] + [0.0]
    n = len(d)
    eps = sys.float_info.epsilon
    for l in range(n):
        for _sweep in range(_MAX_QL_SWEEPS):
            m = l
            while m < n - 1 and abs(e[m]) > eps * (abs(d[m]) + abs(d[m + 1])):
                m += 1
            if m == l:
                break
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = math.hypot(g, 1.0)
            g = d[m] - d[l] + e[l] / (g + math.copysign(r, g))
            s = c = 1.0
            p = 0.0
            for i in range(m - 1, l - 1, -1):
                f = s * e[i]
                b = c * e[i]
                r = math.hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    # rotation underflow: drop the shift and retry
                    d[i + 1] -= p
                    e[m] = 0.0
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
            else:
                d[l] -= p
                e[l] = g
                e[m] = 0.0
        else:
            raise ArithmeticError("eigenvalue iteration failed to converge")
    return d


def symmetric_eigenvalues(matrix) -> np.ndarray:
    """All eigenvalues of a symmetric matrix, descending."""
    M = np.asarray(matrix, dtype=float)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ValueError("square matrix required")
    n = M.shape[0]
    if n > MAX_SPECTRUM_N:
        raise ValueError(f"matrix order {n} exceeds the cap {MAX_SPECTRUM_N}")
    if n and not np.allclose(M, M.T, rtol=1e-12, atol=1e-12):
        raise ValueError("matrix is not symmetric")
    if n == 0:
        return np.zeros(0)
    if n == 1:
        return np.array([float(M[0, 0])])
    M = (M + M.T) / 2.0
    d, e = _tridiagonalize(M)
    vals = _ql_eigenvalues(d, e)
    return np.array(sorted(vals, reverse=True))


# -- spectral report ----------------------------------------------------------


@dataclass(frozen=True)
class SpectralReport:
    """Spectrum of a graph in (n, d, lambda) terms.

    eigenvalues are descending; d is the common degree when regular, the
    average degree otherwise; lam = max{|lambda_i| : i >= 2}; lam_min is the
    least eigenvalue.
    """

    eigenvalues: tuple[float, ...]
    n: int
    is_regular: bool
    d: float
    lam: float
    lam_min: float

    @property
    def lambda1(self) -> float:
        return self.eigenvalues[0]


def spectrum(G: Graph) -> SpectralReport:
    """Full adjacency spectrum with residual spot-checks and the trace
    invariants enforced."""
    if G.n > MAX_SPECTRUM_N:
        raise ValueError(f"graph order {G.n} exceeds the cap {MAX_SPECTRUM_N}")
    if G.n == 0:
        raise ValueError("empty graph")
    A = adjacency_matrix(G)
    vals = symmetric_eigenvalues(A)
    _residual_spot_check(A, vals)

    n = G.n
    degs = G.degrees
    regular = len(set(degs)) == 1
    d = float(degs[0]) if regular else 2.0 * G.edge_count / n
    lam = max(abs(v) for v in vals[1:]) if n > 1 else 0.0
    report = SpectralReport(
        eigenvalues=tuple(float(v) for v in vals),
        n=n,
        is_regular=regular,
        d=d,
        lam=float(lam),
        lam_min=float(vals[-1]),
    )
    if abs(sum(report.eigenvalues)) > 1e-6 * n:
        raise ArithmeticError("eigenvalue sum deviates from the zero trace")
    e2 = sum(v * v for v in report.eigenvalues)
    if abs(e2 - 2.0 * G.edge_count) > 1e-6 * max(1, G.edge_count):
        raise ArithmeticError("eigenvalue squares deviate from 2|E|")
    if regular and abs(report.lambda1 - d) >= 1e-8:
        raise ArithmeticError("leading eigenvalue of a regular graph is off d")
    return report


def _residual_spot_check(A: np.ndarray, vals: np.ndarray) -> None:
    """Recompute eigenvectors by inverse iteration at a few indices and
    require ||Av - lambda v|| <= 1e-7 n."""
    n = A.shape[0]
    b = np.cos(np.arange(n) + 0.5)
    for i in sorted({0, n // 2, n - 1}):
        lam = float(vals[i])
        delta = 1e-8 * (1.0 + abs(lam))
        for _attempt in range(3):
            try:
                shifted = A - (lam + delta) * np.eye(n)
                x = np.linalg.solve(shifted, b)
                x /= math.sqrt(float(x @ x))
                x = np.linalg.solve(shifted, x)
                x /= math.sqrt(float(x @ x))
                break
            except np.linalg.LinAlgError:
                delta *= 1000.0
        else:
            raise ArithmeticError("inverse iteration could not factor the shift")
        resid = A @ x - lam * x
        if math.sqrt(float(resid @ resid)) > 1e-7 * max(1, n):
            raise ArithmeticError(f"eigenpair residual too large at index {i}")


def trace_checks(G: Graph, report: SpectralReport) -> dict:
    """Power-sum identities against exact edge and triangle counts."""
    vals = np.array(report.eigenvalues)
    t1 = float(vals.sum())
    t2 = float((vals**2).sum())
    t3 = float((vals**3).sum())
    edges = G.edge_count
    triangles = triangle_count(G)
    sum_ok = abs(t1) <= 1e-6 * max(1, G.n)
    sq_ok = abs(t2 - 2.0 * edges) <= 1e-6 * max(1, edges)
    cube_ok = abs(t3 - 6.0 * triangles) <= 1e-5 * max(1, G.n)
    return {
        "sum": t1,
        "sumSquares": t2,
        "sumCubes": t3,
        "edgeCount": edges,
        "triangleCount": triangles,
        "sumOk": sum_ok,
        "sumSquaresOk": sq_ok,
        "sumCubesOk": cube_ok,
        "ok": sum_ok and sq_ok and cube_ok,
    }


# -- spectral certificates ----------------------------------------------------


def tree_walk_lower_bound(d: int, k: int) -> int:
    """Closed walks of length 2k from a vertex of the infinite d-regular
    tree: (1/k) C(2k-2, k-1) d (d-1)^(k-1), an exact integer."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if d < 0:
        raise ValueError("degree must be >= 0")
    catalan = math.comb(2 * k - 2, k - 1) // k
    return catalan * d * (d - 1) ** (k - 1) if d >= 1 else 0


def alon_boppana_check(report: SpectralReport, k: int) -> bool:
    """Even-walk lower bound on lambda for d-regular graphs:
    d^(2k) + (n-1) lambda^(2k) >= n * treewalks(d, k), within 1e-9 relative
    slack for the float lambda."""
    if not report.is_regular:
        raise ValueError("the walk bound needs a regular graph")
    if k < 1:
        raise ValueError("k must be >= 1")
    n = report.n
    d = int(report.d)
    lhs = d ** (2 * k) + (n - 1) * report.lam ** (2 * k)
    rhs = n * tree_walk_lower_bound(d, k)
    return lhs >= rhs - 1e-9 * max(1.0, float(rhs))


class MixingResult(NamedTuple):
    deviation: float
    bound: tuple[float, float]
    ok: bool


def mixing_check(G: Graph, X: Iterable[int], report: SpectralReport | None = None) -> MixingResult:
    """Two-sided expander mixing inequality on a vertex subset:
    lambda_min |X| <= 2 e(X) - (d/n)|X|^2 <= lambda |X|."""
    if report is None:
        report = spectrum(G)
    if not report.is_regular:
        raise ValueError("the mixing bound needs a regular graph")
    mask = 0
    for v in X:
        if not 0 <= v < G.n:
            raise ValueError(f"vertex {v} out of range")
        mask |= 1 << v
    size = mask.bit_count()
    deviation = 2.0 * G.subgraph_edge_count(mask) - report.d / G.n * size * size
    lo = report.lam_min * size
    hi = report.lam * size
    tol = 1e-9 * G.n * max(1.0, report.d)
    return MixingResult(deviation, (lo, hi), lo - tol <= deviation <= hi + tol)


def hoffman_bound(report: SpectralReport) -> float:
    """Ratio bound on the independence number of a regular graph:
    alpha(G) <= -n lambda_min / (d - lambda_min)."""
    if not report.is_regular:
        raise ValueError("the ratio bound needs a regular graph")
    gap = report.d - report.lam_min
    if gap <= 1e-12:
        raise ValueError("degenerate: least eigenvalue equals the degree")
    return -report.n * report.lam_min / gap


def triangle_trace_check(report: SpectralReport, triangle_free: bool) -> bool:
    """For a triangle-free regular graph, tr(A^3) vanishes and therefore
    d <= lambda (n-1)^(1/3).  Vacuously true when triangles are present."""
    if not triangle_free:
        return True
    cubes = sum(v**3 for v in report.eigenvalues)
    if abs(cubes) > 1e-5 * max(1, report.n):
        return False
    limit = report.lam * (report.n - 1) ** (1.0 / 3.0) * (1.0 + 1e-9)
    return report.d <= limit
