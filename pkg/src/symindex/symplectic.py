"""Symplectic vector spaces, Lagrangian frames and symplectic reduction.

Conventions, fixed once for the whole package:

* the standard form on R^(2n) is omega(u, v) = <J u, v> with
  J = [[0, -I], [I, 0]], coordinates split as (x, y);
* a product space used for graphs of symplectic maps carries the form
  (-omega) x omega, i.e. the block matrix diag(-J, J);
* a Lagrangian subspace is held as a 2n x n matrix with orthonormal
  columns, orthonormalized on construction.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionMismatch,
    InputError,
    NotIsotropic,
    NotLagrangian,
    OddDimension,
)
from .numerics import (
    DEFAULT_TOL,
    Tolerances,
    as_matrix,
    as_square,
    kernel_basis,
    numerical_rank,
    orthonormal_columns,
    singular_values,
    spectral_norm,
)


def standard_J(n: int):
    """The matrix [[0, -I_n], [I_n, 0]]."""
    if n < 1:
        raise InputError("n must be positive")
    eye = np.eye(n)
    zero = np.zeros((n, n))
    return np.block([[zero, -eye], [eye, zero]])


@dataclass(frozen=True, eq=False)
class SymplecticSpace:
    """A real symplectic vector space with form omega(u, v) = <form @ u, v>."""

    form: np.ndarray

    def __post_init__(self):
        form = as_square(self.form, "symplectic form")
        if form.shape[0] % 2 != 0:
            raise OddDimension("symplectic form must have even size")
        if np.linalg.norm(form + form.T) > 1e-10 * (1.0 + np.linalg.norm(form)):
            raise InputError("symplectic form must be antisymmetric")
        s = singular_values(form)
        if s.size == 0 or s[-1] <= 1e-12 * s[0]:
            raise InputError("symplectic form must be invertible")
        object.__setattr__(self, "form", form)

    @classmethod
    def standard(cls, n: int) -> "SymplecticSpace":
        return cls(standard_J(n))

    @classmethod
    def graph_product(cls, n: int) -> "SymplecticSpace":
        """R^(4n) with the form (-omega) x omega; graphs of symplectic
        maps of R^(2n) are Lagrangian here."""
        J = standard_J(n)
        zero = np.zeros((2 * n, 2 * n))
        return cls(np.block([[-J, zero], [zero, J]]))

    @property
    def dim(self) -> int:
        return self.form.shape[0]

    @property
    def half_dim(self) -> int:
        return self.dim // 2

    def omega(self, u, v) -> float:
        return float((self.form @ np.asarray(u, dtype=float)) @ np.asarray(v, dtype=float))

    def pairing(self, fa, fb):
        """Matrix [omega(a_i, b_j)] for two column-frames."""
        return (self.form @ np.asarray(fa, dtype=float)).T @ np.asarray(fb, dtype=float)

    def direct_sum(self, other: "SymplecticSpace") -> "SymplecticSpace":
        za = np.zeros((self.dim, other.dim))
        return SymplecticSpace(np.block([[self.form, za], [za.T, other.form]]))

    def is_standard(self) -> bool:
        return bool(np.allclose(self.form, standard_J(self.half_dim), atol=1e-12))


@dataclass(frozen=True, eq=False)
class LagrangianFrame:
    """A Lagrangian subspace given by an orthonormal 2n x n frame."""

    space: SymplecticSpace
    frame: np.ndarray

    @property
    def n(self) -> int:
        return self.frame.shape[1]


def lagrangian_frame(space: SymplecticSpace, frame, tol: Tolerances = DEFAULT_TOL) -> LagrangianFrame:
    """Validate and orthonormalize a Lagrangian frame."""
    f = as_matrix(frame, "lagrangian frame")
    if f.shape != (space.dim, space.half_dim):
        raise NotLagrangian(
            "frame must be %d x %d, got %s" % (space.dim, space.half_dim, f.shape)
        )
    q = orthonormal_columns(f, tol)
    if q.shape[1] != space.half_dim:
        raise NotLagrangian("frame is rank deficient")
    defect = np.linalg.norm(space.pairing(q, q))
    if defect > tol.eps_sym * (1.0 + spectral_norm(space.form)):
        raise NotLagrangian("isotropy defect %.3e too large" % defect)
    return LagrangianFrame(space, q)


def vertical_lagrangian(n: int, tol: Tolerances = DEFAULT_TOL) -> LagrangianFrame:
    """The subspace {0} x R^n of the standard space."""
    space = SymplecticSpace.standard(n)
    f = np.vstack([np.zeros((n, n)), np.eye(n)])
    return lagrangian_frame(space, f, tol)

def horizontal_lagrangian(n: int, tol: Tolerances = DEFAULT_TOL) -> LagrangianFrame:
    """The subspace R^n x {0} of the standard space."""
    space = SymplecticSpace.standard(n)
    f = np.vstack([np.eye(n), np.zeros((n, n))])
    return lagrangian_frame(space, f, tol)


def is_symplectic(m, tol: Tolerances = DEFAULT_TOL, space: SymplecticSpace = None) -> bool:
    """Whether m^T Omega m = Omega within tolerance."""
    m = as_square(m, "matrix")
    if m.shape[0] % 2 != 0:
        raise OddDimension("symplectic matrices have even size")
    omega = space.form if space is not None else standard_J(m.shape[0] // 2)
    if omega.shape != m.shape:
        raise DimensionMismatch("matrix does not match the space")
    defect = np.linalg.norm(m.T @ omega @ m - omega)
    return bool(defect <= tol.eps_sym * (1.0 + spectral_norm(m)) ** 2)


def is_hamiltonian(h, tol: Tolerances = DEFAULT_TOL) -> bool:
    """Whether h^T J + J h = 0 within tolerance (standard space)."""
    h = as_square(h, "matrix")
    if h.shape[0] % 2 != 0:
        raise OddDimension("hamiltonian matrices have even size")
    J = standard_J(h.shape[0] // 2)
    defect = np.linalg.norm(h.T @ J + J @ h)
    return bool(defect <= tol.eps_sym * (1.0 + spectral_norm(h)))


def apply_symplectic(m, L: LagrangianFrame, tol: Tolerances = DEFAULT_TOL) -> LagrangianFrame:
    """Image of a Lagrangian under a symplectic matrix."""
    m = as_square(m, "matrix")
    if m.shape[0] != L.space.dim:
        raise DimensionMismatch("matrix does not match the frame")
    return lagrangian_frame(L.space, m @ L.frame, tol)


def graph_lagrangian(m, tol: Tolerances = DEFAULT_TOL) -> LagrangianFrame:
    """Graph {(v, m v)} as a Lagrangian of the product space."""
    m = as_square(m, "matrix")
    d = m.shape[0]
    if d % 2 != 0:
        raise OddDimension("graph construction needs an even-size matrix")
    space = SymplecticSpace.graph_product(d // 2)
    return lagrangian_frame(space, np.vstack([np.eye(d), m]), tol)


def diagonal_lagrangian(n: int, tol: Tolerances = DEFAULT_TOL) -> LagrangianFrame:
    """The diagonal {(v, v)} in the product space over R^(2n)."""
    space = SymplecticSpace.graph_product(n)
    eye = np.eye(2 * n)
    return lagrangian_frame(space, np.vstack([eye, eye]) / np.sqrt(2.0), tol)


def product_lagrangian(la: LagrangianFrame, lb: LagrangianFrame,
                       tol: Tolerances = DEFAULT_TOL) -> LagrangianFrame:
    """L_a x L_b inside the product space."""
    na, nb = la.space.half_dim, lb.space.half_dim
    if na != nb:
        raise DimensionMismatch("factors must have equal dimension")
    space = SymplecticSpace.graph_product(na)
    f = np.block([
        [la.frame, np.zeros((2 * na, nb))],
        [np.zeros((2 * nb, na)), lb.frame],
    ])
    return lagrangian_frame(space, f, tol)


def subspace_intersection(fa, fb, tol: Tolerances = DEFAULT_TOL):
    """Orthonormal basis of span(fa) & span(fb); frames need orthonormal columns."""
    fa = np.asarray(fa, dtype=float)
    fb = np.asarray(fb, dtype=float)
    if fa.shape[0] != fb.shape[0]:
        raise DimensionMismatch("frames live in different ambient spaces")
    if fa.shape[1] == 0 or fb.shape[1] == 0:
        return np.zeros((fa.shape[0], 0))
    kern = kernel_basis(np.hstack([fa, -fb]), tol)
    if kern.shape[1] == 0:
        return np.zeros((fa.shape[0], 0))
    v = fa @ kern[: fa.shape[1], :]
    return orthonormal_columns(v, tol)


def intersection_dim(la: LagrangianFrame, lb: LagrangianFrame,
                     tol: Tolerances = DEFAULT_TOL) -> int:
    """dim(L_a & L_b) = 2n - rank [F_a | F_b]."""
    if la.space.dim != lb.space.dim:
        raise DimensionMismatch("frames live in different spaces")
    stacked = np.hstack([la.frame, lb.frame])
    return la.space.dim - numerical_rank(stacked, tol)


def max_principal_angle(fa, fb) -> float:
    """Largest principal angle between two equal-dimension spans."""
    fa = np.asarray(fa, dtype=float)
    fb = np.asarray(fb, dtype=float)
    if fa.shape != fb.shape:
        raise DimensionMismatch("spans must have equal dimensions")
    if fa.shape[1] == 0:
        return 0.0
    qa = orthonormal_columns(fa, DEFAULT_TOL)
    qb = orthonormal_columns(fb, DEFAULT_TOL)
    if qa.shape[1] != qb.shape[1]:
        return 0.5 * np.pi
    # the arccos of the cosine alone loses half the digits near zero, so
    # the sine is computed from the projection residual as well
    cos = float(np.clip(singular_values(qa.T @ qb)[-1], 0.0, 1.0))
    sin = float(np.clip(np.linalg.norm(qb - qa @ (qa.T @ qb), 2), 0.0, 1.0))
    return float(np.arctan2(sin, cos))


def same_span(fa, fb, angle_tol: float = 1e-8) -> bool:
    return max_principal_angle(fa, fb) < angle_tol


def symplectic_orthogonal(space: SymplecticSpace, w, tol: Tolerances = DEFAULT_TOL):
    """Frame of W-perp with respect to omega: all v with omega(W, v) = 0."""
    w = np.asarray(w, dtype=float)
    if w.ndim != 2 or w.shape[0] != space.dim:
        raise DimensionMismatch("frame does not match the space")
    return kernel_basis((space.form @ w).T, tol)


class SymplecticReduction:
    """Reduction of (V, omega) by an isotropic subspace K.

    The quotient K-perp / K is realized concretely as the Euclidean
    orthogonal complement S of K inside K-perp(omega); the reduced form
    is the restriction of omega to S expressed in the orthonormal basis
    held in ``basis``.  Lagrangians of V containing-or-compatible with
    K project to Lagrangians of the reduced space.
    """

    def __init__(self, space: SymplecticSpace, k_frame, tol: Tolerances = DEFAULT_TOL):
        self.ambient = space
        self.tol = tol
        k = np.asarray(k_frame, dtype=float)
        if k.ndim != 2 or k.shape[0] != space.dim:
            raise DimensionMismatch("K frame does not match the space")
        k = orthonormal_columns(k, tol)
        if k.shape[1] > 0:
            defect = np.linalg.norm(space.pairing(k, k))
            if defect > tol.eps_sym * (1.0 + spectral_norm(space.form)):
                raise NotIsotropic("K is not isotropic, defect %.3e" % defect)
        self.k = k
        sharp = symplectic_orthogonal(space, k, tol) if k.shape[1] else np.eye(space.dim)
        self.k_sharp = sharp
        # orthocomplement of K inside K-sharp
        if k.shape[1]:
            proj = sharp - k @ (k.T @ sharp)
            self.basis = orthonormal_columns(proj, tol)
        else:
            self.basis = sharp
        expected = space.dim - 2 * k.shape[1]
        if self.basis.shape[1] != expected:
            raise NotIsotropic("reduction produced dimension %d, expected %d"
                               % (self.basis.shape[1], expected))
        if expected > 0:
            red_form = self.basis.T @ space.form @ self.basis
            self.space = SymplecticSpace(red_form)
        else:
            self.space = None

    def project(self, L: LagrangianFrame) -> LagrangianFrame:
        """Image of L & K-sharp in the reduced space."""
        if L.space.dim != self.ambient.dim:
            raise DimensionMismatch("frame does not match the reduction")
        meet = subspace_intersection(L.frame, self.k_sharp, self.tol)
        coords = self.basis.T @ meet
        reduced = orthonormal_columns(coords, self.tol)
        want = self.space.half_dim
        if reduced.shape[1] != want:
            raise NotLagrangian("projection has rank %d, expected %d"
                                % (reduced.shape[1], want))
        return lagrangian_frame(self.space, reduced, self.tol)

    def lift(self, l_red: LagrangianFrame) -> LagrangianFrame:
        """The Lagrangian of the ambient space containing K that
        projects onto ``l_red``."""
        if self.space is None or l_red.space.dim != self.space.dim:
            raise DimensionMismatch("frame does not match the reduced space")
        f = np.hstack([self.k, self.basis @ l_red.frame])
        return lagrangian_frame(self.ambient, f, self.tol)


def symplectic_reduction(space: SymplecticSpace, k_frame, L: LagrangianFrame,
                         tol: Tolerances = DEFAULT_TOL):
    """One-shot reduction: returns (reduced space, reduced Lagrangian)."""
    red = SymplecticReduction(space, k_frame, tol)
    return red.space, red.project(L)


# -- normal-form generators and random ensembles -----------------------------

def plane_block_generator(kinds):
    """Hamiltonian matrix acting plane-by-plane on (x_j, y_j).

    ``kinds`` is a sequence of ("elliptic", alpha) or ("hyperbolic", beta)
    entries, one per plane.  An elliptic plane rotates with angular
    velocity alpha, a hyperbolic plane stretches with rate beta.
    """
    n = len(kinds)
    h = np.zeros((2 * n, 2 * n))
    for j, (kind, p) in enumerate(kinds):
        if kind == "elliptic":
            h[j, n + j] = -p
            h[n + j, j] = p
        elif kind == "hyperbolic":
            h[j, j] = p
            h[n + j, n + j] = -p
        else:
            raise InputError("unknown plane kind %r" % kind)
    return h


def loxodromic_generator(rho: float, alpha: float):
    """4x4 Hamiltonian generator whose time-one map has the spiral
    eigenvalue quadruple {rho' e^(+-i alpha), ...} with rho' = e^rho."""
    k = np.array([[0.0, -alpha], [alpha, 0.0]])
    r = rho * np.eye(2)
    zero = np.zeros((2, 2))
    return np.block([[r + k, zero], [zero, -r + k]])


def _as_rng(seed):
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(seed)


def random_hamiltonian(n: int, seed=0, spectrum_profile: str = "generic"):
    """Random Hamiltonian matrix with a controlled spectral type.

    Profiles: "generic" (J times random symmetric), "semisimple-elliptic",
    "hyperbolic", and "mixed" (conjugated plane-block generators).
    """
    rng = _as_rng(seed)
    if spectrum_profile == "generic":
        s = rng.standard_normal((2 * n, 2 * n))
        s = 0.5 * (s + s.T)
        s *= 1.2 / max(spectral_norm(s), 1e-12)
        return standard_J(n) @ s
    if spectrum_profile == "semisimple-elliptic":
        kinds = [("elliptic", _safe_angle(rng)) for _ in range(n)]
    elif spectrum_profile == "hyperbolic":
        kinds = [("hyperbolic", rng.uniform(0.3, 1.5) * rng.choice([-1.0, 1.0]))
                 for _ in range(n)]
    elif spectrum_profile == "mixed":
        kinds = []
        for _ in range(n):
            if rng.uniform() < 0.5:
                kinds.append(("elliptic", _safe_angle(rng)))
            else:
                kinds.append(("hyperbolic", rng.uniform(0.3, 1.5) * rng.choice([-1.0, 1.0])))
    else:
        raise InputError("unknown spectrum profile %r" % spectrum_profile)
    h0 = plane_block_generator(kinds)
    s = random_symplectic(n, rng, scale=0.6)
    return s @ h0 @ np.linalg.inv(s)


def _safe_angle(rng, max_tries=200):
    """Angle bounded away from multiples of pi (keeps crossings regular)."""
    for _ in range(max_tries):
        a = rng.uniform(0.35, 5.9) * rng.choice([-1.0, 1.0])
        if abs(a - np.pi * np.round(a / np.pi)) > 0.2:
            return float(a)
    raise RuntimeError("could not sample a safe angle")


def random_symplectic(n: int, seed=0, scale: float = 1.0):
    """exp of a random Hamiltonian; always exactly in the group up to rounding."""
    import scipy.linalg

    rng = _as_rng(seed)
    h = random_hamiltonian(n, rng, "generic")
    return scipy.linalg.expm(scale * h)


def random_lagrangian(n: int, seed=0, tol: Tolerances = DEFAULT_TOL) -> LagrangianFrame:
    """Image of the vertical under a random symplectic matrix."""
    m = random_symplectic(n, seed)
    return apply_symplectic(m, vertical_lagrangian(n, tol), tol)


def darboux_frame(space: SymplecticSpace, tol: Tolerances = DEFAULT_TOL):
    """Matrix T with T^T Omega T equal to the standard form.

    Built by symplectic Gram-Schmidt; maps standard-space Lagrangians
    to Lagrangians of ``space``.
    """
    omega = space.form
    m = space.half_dim

    def w(u, v):
        return float(u @ omega.T @ v)

    es, fs = [], []
    pool = np.eye(space.dim)
    for _ in range(m):
        u = None
        for cand in pool.T:
            r = cand.copy()
            for e, f in zip(es, fs):
                r = r - w(r, f) * e + w(r, e) * f
            if np.linalg.norm(r) > 1e-8:
                u = r / np.linalg.norm(r)
                break
        if u is None:
            raise InputError("symplectic Gram-Schmidt ran out of directions")
        v = omega @ u
        for e, f in zip(es, fs):
            v = v - w(v, f) * e + w(v, e) * f
        c = w(u, v)
        if abs(c) < 1e-12:
            raise InputError("form degenerated during Gram-Schmidt")
        es.append(u)
        fs.append(v / c)
    t = np.column_stack(es + fs)
    defect = np.linalg.norm(t.T @ omega @ t - standard_J(m))
    if defect > tol.eps_sym * (1.0 + spectral_norm(omega)) * space.dim:
        raise InputError("Darboux frame defect %.3e" % defect)
    return t


def random_lagrangian_of(space: SymplecticSpace, seed=0,
                         tol: Tolerances = DEFAULT_TOL) -> LagrangianFrame:
    """Random Lagrangian of an arbitrary symplectic space."""
    t = darboux_frame(space, tol)
    l_std = random_lagrangian(space.half_dim, seed, tol)
    return lagrangian_frame(space, t @ l_std.frame, tol)
