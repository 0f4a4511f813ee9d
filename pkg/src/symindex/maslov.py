"""Maslov-type indices of Lagrangian paths through crossing forms.

A path of Lagrangians l(t) is held as a raw frame function; at a
crossing time t0 with a fixed reference Lagrangian L the crossing form
is the derivative quadratic form on l(t0) & L,

    Gamma(v) = d/dt omega(v, w(t, v)) |_{t=t0},

computed in the graph chart over l(t0).  The index over [a, b] is

    index = 1/2 sign Gamma(a) + sum over interior crossings of
            sign Gamma(t) + 1/2 sign Gamma(b),

an exact half integer.  Paths whose intersection with the reference has
a constant positive dimension are handled separately: the constant part
must carry an identically vanishing form (otherwise the path is
rejected as non-regular) and only the transient excess contributes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional, Tuple

import numpy as np
import scipy.linalg

from .errors import (
    DimensionMismatch,
    GridTooCoarse,
    InputError,
    NonRegularCrossing,
    NotLagrangian,
)
from .halfint import ZERO, HalfInt
from .numerics import (
    DEFAULT_TOL,
    Inertia,
    Tolerances,
    as_matrix,
    as_square,
    orthonormal_columns,
    singular_values,
    spectral_norm,
    sym_signature,
)
from .symplectic import (
    LagrangianFrame,
    SymplecticSpace,
    diagonal_lagrangian,
    subspace_intersection,
    vertical_lagrangian,
)

#: smallest admissible number of grid cells for crossing detection
MIN_GRID = 64
#: refined crossing times closer than this are treated as one crossing
MERGE_TOL = 1e-9
#: sampled-signal gate below which a local minimum is refined
SIGNAL_GATE = 0.25
#: absolute width to which a bracketed crossing time is narrowed
REFINE_XTOL = 1e-12
#: relative floor below which a nonzero form eigenvalue is ambiguous
GRAY_FACTOR = 1e-6


@dataclass(frozen=True, eq=False)
class LagrangianPath:
    """A path of Lagrangian subspaces given by a raw frame function.

    ``frame_fn(t)`` returns a 2n x n frame (orthonormality is not
    required; columns must stay independent).  ``dframe_fn`` is the
    entrywise time derivative; when absent a central finite difference
    is used, so ``frame_fn`` should be smooth slightly beyond the
    interval ends.
    """

    space: SymplecticSpace
    frame_fn: Callable[[float], np.ndarray]
    dframe_fn: Optional[Callable[[float], np.ndarray]]
    interval: Tuple[float, float]

    def __post_init__(self):
        a, b = self.interval
        if not (np.isfinite(a) and np.isfinite(b) and a < b):
            raise InputError("interval must be finite with a < b")

    def frame(self, t: float):
        f = as_matrix(self.frame_fn(t), "path frame")
        if f.shape != (self.space.dim, self.space.half_dim):
            raise DimensionMismatch("path frame has shape %s" % (f.shape,))
        return f

    def dframe(self, t: float, step: float = 1e-6):
        if self.dframe_fn is not None:
            d = as_matrix(self.dframe_fn(t), "path frame derivative")
            if d.shape != (self.space.dim, self.space.half_dim):
                raise DimensionMismatch("derivative has shape %s" % (d.shape,))
            return d
        return (self.frame(t + step) - self.frame(t - step)) / (2.0 * step)


def path_from_frames(space: SymplecticSpace, frame_fn, interval=(0.0, 1.0),
                     dframe_fn=None) -> LagrangianPath:
    return LagrangianPath(space, frame_fn, dframe_fn, tuple(map(float, interval)))


def _flow(m, real_output: bool = True):
    """Callable t -> exp(t m).

    Crossing scans evaluate the flow hundreds of times, so when the
    eigenvector basis is well conditioned the exponential is taken by
    diagonalization; otherwise every call falls back to expm.
    """
    m = np.asarray(m)
    d = m.shape[0]
    phi = None
    try:
        vals, vecs = np.linalg.eig(m)
        if np.linalg.cond(vecs) < 1e7:
            vinv = np.linalg.inv(vecs)

            def phi(t):
                out = (vecs * np.exp(t * vals)) @ vinv
                return out.real if real_output else out

            if np.linalg.norm(phi(0.0) - np.eye(d)) > 1e-10:
                phi = None
    except np.linalg.LinAlgError:
        phi = None
    if phi is not None:
        return phi

    def phi_expm(t):
        out = scipy.linalg.expm(t * m)
        if real_output and np.iscomplexobj(out):
            out = out.real
        return out

    return phi_expm


def orbit_path(h, start: Optional[LagrangianFrame] = None,
               interval=(0.0, 1.0)) -> LagrangianPath:
    """t -> exp(t h) . start, a Lagrangian path when h is Hamiltonian.

    ``start`` defaults to the vertical of the standard space."""
    h = as_square(h, "generator")
    if start is None:
        if h.shape[0] % 2 != 0:
            raise DimensionMismatch("generator must have even size")
        start = vertical_lagrangian(h.shape[0] // 2)
    if h.shape[0] != start.space.dim:
        raise DimensionMismatch("generator does not match the frame")
    f0 = start.frame
    phi = _flow(h)

    def fr(t):
        return phi(t) @ f0

    def dfr(t):
        return h @ phi(t) @ f0

    return LagrangianPath(start.space, fr, dfr, tuple(map(float, interval)))


def graph_path(h, interval=(0.0, 1.0)) -> LagrangianPath:
    """t -> graph of exp(t h) in the product space carrying (-w) x w."""
    h = as_square(h, "generator")
    d = h.shape[0]
    if d % 2 != 0:
        raise InputError("generator must have even size")
    space = SymplecticSpace.graph_product(d // 2)
    eye = np.eye(d)
    zero = np.zeros((d, d))
    phi = _flow(h)

    def fr(t):
        return np.vstack([eye, phi(t)])

    def dfr(t):
        return np.vstack([zero, h @ phi(t)])

    return LagrangianPath(space, fr, dfr, tuple(map(float, interval)))


def unitary_geodesic(start: LagrangianFrame, end: LagrangianFrame,
                     k: int = 0) -> LagrangianPath:
    """Path from start to end through the unitary parametrization.

    A Lagrangian frame [X; Y] of the standard space corresponds to the
    unitary U = X + iY; the path follows U0 exp(t(A + i pi k)) with
    A = log(U0* U1).  Different integers k give mutually non-homotopic
    paths with the same endpoints.
    """
    if not start.space.is_standard():
        raise InputError("unitary parametrization needs the standard space")
    if start.space.dim != end.space.dim:
        raise DimensionMismatch("endpoint frames live in different spaces")
    n = start.space.half_dim
    u0 = start.frame[:n] + 1j * start.frame[n:]
    u1 = end.frame[:n] + 1j * end.frame[n:]
    a = scipy.linalg.logm(u0.conj().T @ u1)
    a = 0.5 * (a - a.conj().T)
    gen = a + 1j * np.pi * int(k) * np.eye(n)
    phi = _flow(gen, real_output=False)

    def fr(t):
        u = u0 @ phi(t)
        return np.vstack([u.real, u.imag])

    def dfr(t):
        u = u0 @ gen @ phi(t)
        return np.vstack([u.real, u.imag])

    return LagrangianPath(start.space, fr, dfr, (0.0, 1.0))


# -- crossing detection -------------------------------------------------------

@dataclass(frozen=True)
class Crossing:
    """One crossing with the reference Lagrangian."""

    time: float
    dim: int
    inertia: Inertia
    at_endpoint: bool

    @property
    def contribution(self) -> HalfInt:
        s = self.inertia.signature
        return HalfInt(s) if self.at_endpoint else HalfInt(2 * s)


@dataclass(frozen=True)
class CrossingScan:
    """Full record of a crossing computation."""

    crossings: Tuple[Crossing, ...]
    index: HalfInt
    interval_mode: bool
    baseline_dim: int


def _orth_path_frame(path: LagrangianPath, t: float, tol: Tolerances):
    q = orthonormal_columns(path.frame(t), tol)
    if q.shape[1] != path.space.half_dim:
        raise NotLagrangian("path frame lost rank at t=%g" % t)
    return q


def _stack_data(path, ref_q, t, tol):
    """(intersection dim, singular values) of the stacked frames at t.

    The spectrum of [Q(t) | Q_ref] encodes the principal angles; the
    k smallest singular values vanish exactly when the intersection has
    dimension k.
    """
    q = _orth_path_frame(path, t, tol)
    s = singular_values(np.hstack([q, ref_q]))
    dim = int(np.sum(s <= tol.eps_rank * s[0]))
    return dim, s


def _golden_min(f, lo, hi, xtol=REFINE_XTOL, max_iter=200):
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    a, b = lo, hi
    c = b - invphi * (b - a)
    d = a + invphi * (b - a)
    fc, fd = f(c), f(d)
    for _ in range(max_iter):
        if b - a <= xtol:
            break
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - invphi * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + invphi * (b - a)
            fd = f(d)
    return 0.5 * (a + b)


def crossing_form(path: LagrangianPath, ref: LagrangianFrame, t0: float,
                  tol: Tolerances = DEFAULT_TOL):
    """Intersection basis and crossing form matrix at time t0.

    Returns (V, gamma): V holds orthonormal ambient coordinates of
    l(t0) & ref, gamma is the symmetric form matrix in those columns.
    The chart construction needs the form matrix to be orthogonal with
    square -1, which holds for the standard and the graph-product
    spaces.
    """
    omega = path.space.form
    d = path.space.dim
    if not (np.allclose(omega.T @ omega, np.eye(d), atol=1e-12)
            and np.allclose(omega @ omega, -np.eye(d), atol=1e-12)):
        raise InputError("crossing forms need an orthogonal complex-structure form")
    if ref.space.dim != d:
        raise DimensionMismatch("reference frame does not match the path")
    f0 = _orth_path_frame(path, t0, tol)
    v = subspace_intersection(f0, ref.frame, tol)
    if v.shape[1] == 0:
        return v, np.zeros((0, 0))
    w0 = omega @ f0
    p_raw = path.frame(t0)
    dp = path.dframe(t0)
    x0 = f0.T @ p_raw
    dy = w0.T @ dp
    m = np.linalg.solve(x0.T, dy.T).T  # dy @ inv(x0)
    xi = f0.T @ v
    gamma = xi.T @ m @ xi
    return v, 0.5 * (gamma + gamma.T)


def _crossing_inertia(path, ref, t0, tol) -> Tuple[int, Inertia]:
    v, gamma = crossing_form(path, ref, t0, tol)
    if v.shape[1] == 0:
        return 0, Inertia(0, 0, 0)
    scale = 1.0 + spectral_norm(gamma)
    # A tangential crossing localizes only to ~sqrt(machine eps), so the
    # form evaluated at the refined time picks up an eigenvalue of that
    # size.  Anything between the zero band and a clear-signal floor
    # cannot be classified either way.
    w = np.abs(np.linalg.eigvalsh(0.5 * (gamma + gamma.T)))
    band = tol.eps_sign * scale
    if np.any((w > band) & (w < GRAY_FACTOR * scale)):
        raise NonRegularCrossing(
            "crossing form at t=%g has an eigenvalue too small to classify"
            % t0)
    return v.shape[1], sym_signature(gamma, tol, scale=scale)


def find_crossings(path: LagrangianPath, ref: LagrangianFrame, grid: int = 256,
                   tol: Tolerances = DEFAULT_TOL) -> CrossingScan:
    """Locate all crossings of the path with ``ref`` and evaluate forms.

    The interval is sampled at ``grid``+1 points; sampled local minima
    of the detection signal are narrowed by golden section and accepted
    when the rank test confirms an intersection.  Crossings closer than
    one grid cell cannot be separated: when two accepted times land in
    the same cell GridTooCoarse is raised, and pairs closer than one
    cell may go undetected, so ``grid`` should oversample the expected
    crossing spacing.
    """
    if grid < MIN_GRID:
        raise InputError("grid must be at least %d" % MIN_GRID)
    if ref.space.dim != path.space.dim:
        raise DimensionMismatch("reference frame does not match the path")
    a, b = path.interval
    ts = np.linspace(a, b, grid + 1)
    ref_q = ref.frame

    dims = np.empty(grid + 1, dtype=int)
    spectra = []
    for i, t in enumerate(ts):
        dims[i], s = _stack_data(path, ref_q, t, tol)
        spectra.append(s)

    interval_mode = bool(np.mean(dims > 0) > 0.25)
    baseline = int(dims.min()) if interval_mode else 0
    if interval_mode and baseline == 0:
        raise GridTooCoarse("widespread degeneracy without a constant core; "
                            "increase grid or reparametrize")

    signal = np.array([s[-(baseline + 1)] for s in spectra])

    def sig_at(t):
        _, s = _stack_data(path, ref_q, t, tol)
        return float(s[-(baseline + 1)])

    # candidate minima of the sampled signal; the first and last cell
    # are bracketed from the boundary so near-endpoint crossings are
    # not skipped
    times = [float(a), float(b)]
    for i in range(1, grid):
        if signal[i] <= SIGNAL_GATE and signal[i] <= signal[i - 1] and signal[i] <= signal[i + 1]:
            times.append(_golden_min(sig_at, ts[i - 1], ts[i + 1]))
    if signal[0] <= SIGNAL_GATE and signal[0] <= signal[1]:
        times.append(_golden_min(sig_at, ts[0], ts[1]))
    if signal[grid] <= SIGNAL_GATE and signal[grid] <= signal[grid - 1]:
        times.append(_golden_min(sig_at, ts[grid - 1], ts[grid]))

    times.sort()
    merged = []
    for t in times:
        if merged and abs(t - merged[-1][-1]) <= max(MERGE_TOL, REFINE_XTOL * 10):
            merged[-1].append(t)
        else:
            merged.append([t])
    candidates = []
    for group in merged:
        if abs(group[0] - a) <= MERGE_TOL:
            candidates.append(float(a))
        elif abs(group[-1] - b) <= MERGE_TOL:
            candidates.append(float(b))
        else:
            candidates.append(float(np.mean(group)))

    crossings = []
    cell = (b - a) / grid
    for t in candidates:
        at_end = t == a or t == b
        dim, _ = _stack_data(path, ref_q, t, tol)
        if dim <= baseline and not (interval_mode and at_end):
            continue  # spurious minimum or plain baseline interior point
        k, inertia = _crossing_inertia(path, ref, t, tol)
        if k != dim:
            raise NonRegularCrossing("intersection dimension unstable at t=%g" % t)
        if inertia.n_zero != baseline:
            raise NonRegularCrossing(
                "crossing form at t=%g has %d null directions, expected %d"
                % (t, inertia.n_zero, baseline))
        crossings.append(Crossing(t, dim, inertia, at_end))

    interior = [c.time for c in crossings if not c.at_endpoint]
    for t1, t2 in zip(interior, interior[1:]):
        if t2 - t1 < cell:
            raise GridTooCoarse("crossings at t=%g and t=%g share a grid cell" % (t1, t2))

    if interval_mode:
        # the constant core must carry no form anywhere, else the index
        # formula does not apply; spot-check all plain baseline samples
        for i, t in enumerate(ts):
            if dims[i] == baseline and baseline > 0:
                k, inertia = _crossing_inertia(path, ref, t, tol)
                if inertia.n_pos or inertia.n_neg:
                    raise NonRegularCrossing(
                        "constant-dimensional intersection carries a "
                        "nonvanishing form at t=%g" % t)

    total = ZERO
    for c in crossings:
        total = total + c.contribution
    return CrossingScan(tuple(crossings), total, interval_mode, baseline)


def maslov_index(path: LagrangianPath, ref: LagrangianFrame, grid: int = 256,
                 tol: Tolerances = DEFAULT_TOL) -> HalfInt:
    """Index of the path relative to ``ref`` by the half-sum rule."""
    return find_crossings(path, ref, grid, tol).index


def maslov_index_symplectic(h, start: Optional[LagrangianFrame] = None,
                            ref: Optional[LagrangianFrame] = None,
                            interval=(0.0, 1.0), grid: int = 256,
                            tol: Tolerances = DEFAULT_TOL) -> HalfInt:
    """Index of t -> exp(t h) . start against ref (both default vertical)."""
    h = as_square(h, "generator")
    n = h.shape[0] // 2
    if start is None:
        start = vertical_lagrangian(n, tol)
    if ref is None:
        ref = vertical_lagrangian(n, tol)
    return maslov_index(orbit_path(h, start, interval), ref, grid, tol)


def conley_zehnder(h, interval=(0.0, 1.0), grid: int = 256,
                   tol: Tolerances = DEFAULT_TOL) -> HalfInt:
    """Index of the graph path of exp(t h) against the diagonal."""
    h = as_square(h, "generator")
    if h.shape[0] % 2 != 0:
        raise InputError("generator must have even size")
    ref = diagonal_lagrangian(h.shape[0] // 2, tol)
    return maslov_index(graph_path(h, interval), ref, grid, tol)


# -- closed forms for rotation blocks and spectral routes ---------------------

#: absolute distance below which a float is snapped onto the lattice
SNAP_TOL = 1e-9


def snap_half_integer(x: float, snap: float = SNAP_TOL) -> HalfInt:
    """Nearest half integer if within ``snap``, else floor(x) + 1/2.

    This is the function whose values at alpha/pi give the index of the
    rotation orbit path with angular velocity alpha.
    """
    twice = round(2.0 * x)
    if abs(x - 0.5 * twice) <= snap:
        return HalfInt(int(twice))
    return HalfInt(2 * math.floor(x) + 1)


def snap_odd_integer(x: float, snap: float = SNAP_TOL) -> HalfInt:
    """Nearest integer if within ``snap``, else the odd member of
    {floor(x), floor(x)+1}.

    Values at alpha/pi give the graph-path index of the rotation with
    angular velocity alpha.
    """
    nearest = round(x)
    if abs(x - nearest) <= snap:
        return HalfInt(2 * int(nearest))
    m = math.floor(x)
    odd = m if m % 2 != 0 else m + 1
    return HalfInt(2 * odd)


def rotation_orbit_index(alpha: float) -> HalfInt:
    """Closed form for the vertical-route index of one rotation plane."""
    return snap_half_integer(alpha / math.pi)


def rotation_graph_index(alpha: float) -> HalfInt:
    """Closed form for the graph-route index of one rotation plane."""
    return snap_odd_integer(alpha / math.pi)


def spectral_maslov(h, tol: Tolerances = DEFAULT_TOL) -> HalfInt:
    """Vertical-route index from the signed rotation angles alone.

    Valid for semisimple generators whose plane decomposition is
    aligned with the standard coordinate splitting (block generators);
    hyperbolic and loxodromic planes contribute nothing.
    """
    from .krein import krein_positive_angles

    total = ZERO
    for alpha in krein_positive_angles(h, tol):
        total = total + rotation_orbit_index(alpha)
    return total


def spectral_conley_zehnder(h, tol: Tolerances = DEFAULT_TOL) -> HalfInt:
    """Graph-route index from the signed rotation angles alone.

    Valid for any semisimple generator: the graph route is invariant
    under symplectic conjugation, so only the normal form matters.
    """
    from .krein import krein_positive_angles

    total = ZERO
    for alpha in krein_positive_angles(h, tol):
        total = total + rotation_graph_index(alpha)
    return total
