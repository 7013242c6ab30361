"""Floating-point checks of the analytic ingredients behind the stem tables.

The checks cover:

- the fiberwise rotation ``F(theta)`` that carries the ambient frame of R^3
  to (tangent, normal) frames along the unit circle, and its C2-equivariance
  under ``diag(-1, -1, 1)``;
- the SO(4) identity showing that ``diag(R, R)`` is the square of a loop;
- degrees of sampled loops in SO(2), and their parity after stabilizing to
  SO(3), detected by lifting to unit quaternions;
- the equivariant Hopf map ``(z0, z1) -> (2 z0 conj(z1), |z0|^2 - |z1|^2)``.

Loops are given as sampled rotation matrices rather than closed-form
functions so that externally generated frames can be fed in.
"""

from __future__ import annotations

import io
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, TextIO

import numpy as np

from .errors import LiftAmbiguous, StepTooLarge, SymmetryViolated

DEFAULT_SAMPLES = 1024
DEFAULT_TOL = 1e-9
DEFAULT_HOPF_SAMPLES = 10_000
# Minimum gap <q, p> - <-q, p> (in absolute value) between the two candidate lifts.
LIFT_SEPARATION = 0.1
MAX_STEP = math.pi / 2

# C2 action on R^{1+2 sigma} = (x, y, z) with x, y in the sign representation.
ANTIPODAL_ACTION = np.diag([-1.0, -1.0, 1.0])


@dataclass(frozen=True)
class CheckReport:
    name: str
    max_error: float
    samples_used: int
    passed: bool
    details: str = ""

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "passed": self.passed,
            "max_error": float(self.max_error),
            "samples_used": int(self.samples_used),
            "details": self.details,
        }

    def __str__(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name}: max_error={self.max_error:.3e} samples={self.samples_used} {self.details}".rstrip()


@dataclass(frozen=True)
class LoopSamples:
    """Cyclic sequence of rotation matrices sampled along a loop.

    Sample ``k`` and sample ``(k + 1) % N`` are adjacent.  The constructor
    checks shape, orthogonality and determinant; closeness of adjacent
    samples is checked by the operations that need it, which raise
    :class:`StepTooLarge`.
    """

    matrices: np.ndarray
    tol: float = field(default=DEFAULT_TOL, compare=False)

    def __post_init__(self):
        mats = np.array(self.matrices, dtype=float)
        if mats.ndim != 3 or mats.shape[1] != mats.shape[2]:
            raise ValueError(f"expected an (N, k, k) array, got shape {mats.shape}")
        n, k, _ = mats.shape
        if k not in (2, 3, 4):
            raise ValueError(f"matrix size must be 2, 3 or 4, got {k}")
        if n < 8:
            raise ValueError(f"need at least 8 samples, got {n}")
        gram = np.einsum("nji,njk->nik", mats, mats)
        ortho_err = np.abs(gram - np.eye(k)).max()
        if ortho_err > self.tol:
            raise ValueError(f"samples are not orthogonal (error {ortho_err:.3e} > {self.tol:.1e})")
        det_err = np.abs(np.linalg.det(mats) - 1.0).max()
        if det_err > self.tol:
            raise ValueError(f"samples do not all have determinant +1 (error {det_err:.3e})")
        mats.setflags(write=False)
        object.__setattr__(self, "matrices", mats)

    @property
    def size(self) -> int:
        return self.matrices.shape[1]

    def __len__(self) -> int:
        return self.matrices.shape[0]

    def relative_steps(self) -> np.ndarray:
        """``M_k^T M_{k+1}`` for every cyclically adjacent pair."""
        m = self.matrices
        return np.einsum("nji,njk->nik", m, np.roll(m, -1, axis=0))

    def step_angles(self) -> np.ndarray:
        """Largest rotation angle of each relative step."""
        rel = self.relative_steps()
        if self.size == 2:
            return np.abs(np.arctan2(rel[:, 1, 0], rel[:, 0, 0]))
        if self.size == 3:
            c = (np.trace(rel, axis1=1, axis2=2) - 1.0) / 2.0
            return np.arccos(np.clip(c, -1.0, 1.0))
        return np.abs(np.angle(np.linalg.eigvals(rel))).max(axis=1)

    def compose(self, other: LoopSamples) -> LoopSamples:
        """Pointwise product of two loops sampled on the same grid."""
        if len(self) != len(other) or self.size != other.size:
            raise ValueError("loops must share sample count and matrix size")
        return LoopSamples(self.matrices @ other.matrices, tol=max(self.tol, other.tol))

    def embed(self, size: int) -> LoopSamples:
        """Stabilize into SO(size) as the upper-left block."""
        if size < self.size:
            raise ValueError("cannot embed into a smaller rotation group")
        out = np.broadcast_to(np.eye(size), (len(self), size, size)).copy()
        out[:, : self.size, : self.size] = self.matrices
        return LoopSamples(out, tol=self.tol)

    def rotated(self, shift: int) -> LoopSamples:
        """Same loop, starting from a different sample."""
        return LoopSamples(np.roll(self.matrices, -shift, axis=0), tol=self.tol)


def _check_steps(loop: LoopSamples) -> None:
    angles = loop.step_angles()
    worst = int(np.argmax(angles))
    if angles[worst] >= MAX_STEP:
        raise StepTooLarge(
            f"samples {worst} and {(worst + 1) % len(loop)} differ by {angles[worst]:.3f} rad; "
            "resample the loop more densely"
        )


# -- loop construction ------------------------------------------------------


def rotation2(theta):
    """2x2 rotation by ``theta``; accepts scalars or arrays (batched on the first axis)."""
    c, s = np.cos(theta), np.sin(theta)
    return np.stack([np.stack([c, -s], axis=-1), np.stack([s, c], axis=-1)], axis=-2)


def sample_angles(num_samples: int) -> np.ndarray:
    return 2.0 * np.pi * np.arange(num_samples) / num_samples


def rotation_loop(degree: int, num_samples: int = DEFAULT_SAMPLES, size: int = 2) -> LoopSamples:
    """Samples of ``theta -> R(degree * theta)`` embedded in SO(size)."""
    loop = LoopSamples(rotation2(degree * sample_angles(num_samples)))
    return loop if size == 2 else loop.embed(size)


def load_loop_text(source: str | os.PathLike | TextIO, tol: float = DEFAULT_TOL) -> LoopSamples:
    """Read one matrix per line, row-major, whitespace-separated.

    Blank lines and lines starting with ``#`` are ignored.
    """
    if isinstance(source, (str, os.PathLike)):
        with open(source, encoding="utf-8") as fh:
            return load_loop_text(fh, tol)
    rows = []
    for lineno, line in enumerate(source, 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        values = [float(v) for v in line.split()]
        k = math.isqrt(len(values))
        if k * k != len(values):
            raise ValueError(f"line {lineno}: {len(values)} entries is not a square matrix")
        if rows and len(values) != len(rows[0]):
            raise ValueError(f"line {lineno}: matrix size changes mid-file")
        rows.append(values)
    if not rows:
        raise ValueError("no samples found")
    k = math.isqrt(len(rows[0]))
    return LoopSamples(np.array(rows).reshape(len(rows), k, k), tol=tol)


def dump_loop_text(loop: LoopSamples) -> str:
    buf = io.StringIO()
    for m in loop.matrices:
        buf.write(" ".join(repr(float(v)) for v in m.ravel()))
        buf.write("\n")
    return buf.getvalue()


# -- degree and parity ------------------------------------------------------


def winding_number(loop: LoopSamples) -> int:
    """Degree of a sampled loop in SO(2)."""
    if loop.size != 2:
        raise ValueError(f"winding_number needs 2x2 samples, got {loop.size}x{loop.size}")
    _check_steps(loop)
    rel = loop.relative_steps()
    total = np.arctan2(rel[:, 1, 0], rel[:, 0, 0]).sum()
    return int(round(total / (2.0 * np.pi)))


def matrix_to_quaternion(r) -> np.ndarray:
    """Unit quaternion ``(w, x, y, z)`` for each 3x3 rotation.

    Uses the largest-diagonal branch selection, so rotations by angles near
    pi (trace near -1) are handled without cancellation.  The sign of the
    result is arbitrary.
    """
    r = np.asarray(r, dtype=float)
    single = r.ndim == 2
    if single:
        r = r[None]
    diag = np.stack(
        [np.trace(r, axis1=1, axis2=2), r[:, 0, 0], r[:, 1, 1], r[:, 2, 2]], axis=1
    )
    branch = np.argmax(diag, axis=1)
    q = np.empty((r.shape[0], 4))

    m = r[branch == 0]
    w = 0.5 * np.sqrt(np.maximum(1.0 + m[:, 0, 0] + m[:, 1, 1] + m[:, 2, 2], 0.0))
    q[branch == 0] = np.stack(
        [w, (m[:, 2, 1] - m[:, 1, 2]) / (4 * w), (m[:, 0, 2] - m[:, 2, 0]) / (4 * w), (m[:, 1, 0] - m[:, 0, 1]) / (4 * w)],
        axis=1,
    )
    m = r[branch == 1]
    x = 0.5 * np.sqrt(np.maximum(1.0 + m[:, 0, 0] - m[:, 1, 1] - m[:, 2, 2], 0.0))
    q[branch == 1] = np.stack(
        [(m[:, 2, 1] - m[:, 1, 2]) / (4 * x), x, (m[:, 0, 1] + m[:, 1, 0]) / (4 * x), (m[:, 0, 2] + m[:, 2, 0]) / (4 * x)],
        axis=1,
    )
    m = r[branch == 2]
    y = 0.5 * np.sqrt(np.maximum(1.0 - m[:, 0, 0] + m[:, 1, 1] - m[:, 2, 2], 0.0))
    q[branch == 2] = np.stack(
        [(m[:, 0, 2] - m[:, 2, 0]) / (4 * y), (m[:, 0, 1] + m[:, 1, 0]) / (4 * y), y, (m[:, 1, 2] + m[:, 2, 1]) / (4 * y)],
        axis=1,
    )
    m = r[branch == 3]
    z = 0.5 * np.sqrt(np.maximum(1.0 - m[:, 0, 0] - m[:, 1, 1] + m[:, 2, 2], 0.0))
    q[branch == 3] = np.stack(
        [(m[:, 1, 0] - m[:, 0, 1]) / (4 * z), (m[:, 0, 2] + m[:, 2, 0]) / (4 * z), (m[:, 1, 2] + m[:, 2, 1]) / (4 * z), z],
        axis=1,
    )
    q /= np.linalg.norm(q, axis=1, keepdims=True)
    return q[0] if single else q


def quaternion_to_matrix(q) -> np.ndarray:
    q = np.asarray(q, dtype=float)
    w, x, y, z = np.moveaxis(q, -1, 0)
    return np.stack(
        [
            np.stack([1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y)], axis=-1),
            np.stack([2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x)], axis=-1),
            np.stack([2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y)], axis=-1),
        ],
        axis=-2,
    )


def lift_to_spin(loop: LoopSamples) -> np.ndarray:
    """Continuous lift of a sampled SO(3) loop to unit quaternions.

    Returns ``N + 1`` quaternions: the lifts of samples ``0 .. N-1`` followed
    by the lift of sample 0 reached after going once around.  Each lift is
    the candidate ``+q`` or ``-q`` with the larger inner product against the
    previous lift.
    """
    if loop.size != 3:
        raise ValueError(f"lift_to_spin needs 3x3 samples, got {loop.size}x{loop.size}")
    _check_steps(loop)
    q = matrix_to_quaternion(loop.matrices)
    q = np.concatenate([q, q[:1]], axis=0)
    dots = np.einsum("ni,ni->n", q[:-1], q[1:])
    # candidates +q and -q score dot and -dot against the previous lift
    separation = 2.0 * np.abs(dots)
    worst = int(np.argmin(separation))
    if separation[worst] < LIFT_SEPARATION:
        raise LiftAmbiguous(f"step {worst}: lift candidates separated by only {separation[worst]:.3e}")
    signs = np.concatenate([[1.0], np.cumprod(np.sign(dots))])
    return q * signs[:, None]


def so3_loop_class(loop: LoopSamples) -> int:
    """Class of a sampled loop in pi_1(SO(3)) = Z/2: 0 if its spin lift closes up, 1 otherwise."""
    lifted = lift_to_spin(loop)
    return 0 if float(lifted[-1] @ lifted[0]) > 0 else 1


def check_equivariant_degree_even(loop: LoopSamples, tol: float = DEFAULT_TOL) -> CheckReport:
    """Degree parity of a loop in SO(2) that is invariant under theta -> theta + pi.

    Raises :class:`SymmetryViolated` if sample ``k`` and sample ``k + N/2``
    differ by more than ``tol``.
    """
    if loop.size != 2:
        raise ValueError("check_equivariant_degree_even needs 2x2 samples")
    n = len(loop)
    if n % 2:
        raise SymmetryViolated(f"half-period symmetry needs an even sample count, got {n}")
    m = loop.matrices
    violation = float(np.abs(m[: n // 2] - m[n // 2 :]).max())
    if violation > tol:
        raise SymmetryViolated(f"f(theta + pi) differs from f(theta) by {violation:.3e}")
    degree = winding_number(loop)
    return CheckReport(
        name="equivariant_degree_even",
        max_error=violation,
        samples_used=n,
        passed=degree % 2 == 0,
        details=f"degree={degree}",
    )


# -- the frame rotation F ---------------------------------------------------


def frame_matrix_f(theta):
    """The fiberwise rotation F(theta); accepts a scalar or an array of angles."""
    c, s = np.cos(theta), np.sin(theta)
    zero = np.zeros_like(c)
    return np.stack(
        [
            np.stack([c * c, s * c, -s], axis=-1),
            np.stack([s * c, s * s, c], axis=-1),
            np.stack([s, -c, zero], axis=-1),
        ],
        axis=-2,
    )


def _require_samples(num_samples: int, minimum: int) -> None:
    if num_samples < minimum:
        raise ValueError(f"need at least {minimum} samples, got {num_samples}")


def check_f_equivariance(
    num_samples: int = DEFAULT_SAMPLES, tol: float = DEFAULT_TOL, action: np.ndarray | None = None
) -> CheckReport:
    """Check ``A F(theta) A = F(theta + pi)`` on an even grid."""
    _require_samples(num_samples, 8)
    a = ANTIPODAL_ACTION if action is None else np.asarray(action, dtype=float)
    theta = sample_angles(num_samples)
    lhs = a @ frame_matrix_f(theta) @ a
    rhs = frame_matrix_f(theta + np.pi)
    err = float(np.abs(lhs - rhs).max())
    return CheckReport("f_equivariance", err, num_samples, err <= tol, f"tol={tol:g}")


def check_f_in_so3(num_samples: int = DEFAULT_SAMPLES, tol: float = DEFAULT_TOL) -> CheckReport:
    """F(theta) is a rotation taking e3 to the unit tangent of the circle."""
    _require_samples(num_samples, 8)
    theta = sample_angles(num_samples)
    f = frame_matrix_f(theta)
    ortho = np.abs(np.einsum("nji,njk->nik", f, f) - np.eye(3)).max()
    det = np.abs(np.linalg.det(f) - 1.0).max()
    tangent = np.stack([-np.sin(theta), np.cos(theta), np.zeros_like(theta)], axis=1)
    tan_err = np.abs(f[:, :, 2] - tangent).max()
    err = float(max(ortho, det, tan_err))
    details = f"orthogonality={ortho:.1e} det={det:.1e} tangent={tan_err:.1e} tol={tol:g}"
    return CheckReport("f_in_so3", err, num_samples, err <= tol, details)


def check_so4_identity(num_samples: int = DEFAULT_SAMPLES, tol: float = 1e-12) -> CheckReport:
    """``diag(R, R) = [[R,0],[0,I]] P [[R,0],[0,I]] P = [[0,R],[I,0]]^2`` with P the block swap."""
    _require_samples(num_samples, 8)
    theta = sample_angles(num_samples)
    r = rotation2(theta)
    n = num_samples
    eye = np.broadcast_to(np.eye(2), (n, 2, 2))
    zero = np.zeros((n, 2, 2))

    def block(a, b, c, d):
        return np.concatenate([np.concatenate([a, b], axis=2), np.concatenate([c, d], axis=2)], axis=1)

    diag_rr = block(r, zero, zero, r)
    diag_ri = block(r, zero, zero, eye)
    swap = block(zero, eye, eye, zero)
    gen = block(zero, r, eye, zero)
    factored = diag_ri @ swap @ diag_ri @ swap
    squared = gen @ gen
    err = float(max(np.abs(diag_rr - squared).max(), np.abs(diag_rr - factored).max()))
    return CheckReport("so4_identity", err, num_samples, err <= tol, f"tol={tol:g}")


# -- Hopf map ---------------------------------------------------------------


def hopf_map(z0, z1):
    """``(z0, z1) -> (2 z0 conj(z1), |z0|^2 - |z1|^2)``; works elementwise on arrays."""
    w = 2 * z0 * np.conj(z1)
    t = np.abs(z0) ** 2 - np.abs(z1) ** 2
    if np.ndim(w) == 0:
        return complex(w), float(t)
    return w, t


def random_s3(num_samples: int, rng: np.random.Generator) -> tuple[np.ndarray, np.ndarray]:
    v = rng.standard_normal((num_samples, 4))
    v /= np.linalg.norm(v, axis=1, keepdims=True)
    return v[:, 0] + 1j * v[:, 1], v[:, 2] + 1j * v[:, 3]


def check_hopf_properties(
    num_samples: int = DEFAULT_HOPF_SAMPLES, tol: float = DEFAULT_TOL, seed: int = 0
) -> CheckReport:
    """On random points of S^3: image on S^2, conjugation-equivariance, U(1)-fiber invariance."""
    _require_samples(num_samples, 100)
    rng = np.random.default_rng(seed)
    z0, z1 = random_s3(num_samples, rng)
    w, t = hopf_map(z0, z1)

    sphere = np.abs(np.abs(w) ** 2 + t**2 - 1.0).max()
    wc, tc = hopf_map(np.conj(z0), np.conj(z1))
    equiv = max(np.abs(wc - np.conj(w)).max(), np.abs(tc - t).max())
    lam = np.exp(1j * rng.uniform(0.0, 2.0 * np.pi, num_samples))
    wl, tl = hopf_map(lam * z0, lam * z1)
    fiber = max(np.abs(wl - w).max(), np.abs(tl - t).max())

    err = float(max(sphere, equiv, fiber))
    details = f"sphere={sphere:.1e} equivariance={equiv:.1e} fiber={fiber:.1e} tol={tol:g}"
    return CheckReport("hopf_properties", err, num_samples, err <= tol, details)


# -- integer-valued suite checks --------------------------------------------


def check_stabilization_parity(num_samples: int = DEFAULT_SAMPLES, max_degree: int = 8) -> CheckReport:
    """Degree-n loops in SO(2) have degree n, and class n mod 2 once embedded in SO(3)."""
    _require_samples(num_samples, 8)
    mismatches = []
    for n in range(-max_degree, max_degree + 1):
        loop = rotation_loop(n, num_samples)
        deg = winding_number(loop)
        cls = so3_loop_class(loop.embed(3))
        if deg != n or cls != n % 2:
            mismatches.append(f"n={n}: degree={deg} class={cls}")
    details = "; ".join(mismatches) or f"|n| <= {max_degree}"
    return CheckReport("stabilization_parity", float(len(mismatches)), num_samples, not mismatches, details)


def check_equivariant_degrees(num_samples: int = DEFAULT_SAMPLES, tol: float = DEFAULT_TOL, max_n: int = 4) -> CheckReport:
    """R(2n theta) passes the even-degree check; R((2n+1) theta) is rejected as asymmetric."""
    _require_samples(num_samples, 8)
    if num_samples % 2:
        num_samples += 1
    failures = []
    worst = 0.0
    for n in range(max_n + 1):
        try:
            report = check_equivariant_degree_even(rotation_loop(2 * n, num_samples), tol)
        except SymmetryViolated as exc:
            failures.append(f"R({2 * n}theta) rejected: {exc}")
            continue
        worst = max(worst, report.max_error)
        if not report.passed:
            failures.append(f"R({2 * n}theta) {report.details}")
        try:
            check_equivariant_degree_even(rotation_loop(2 * n + 1, num_samples), tol)
        except SymmetryViolated:
            pass
        else:
            failures.append(f"R({2 * n + 1}theta) accepted")
    details = "; ".join(failures) or f"0 <= n <= {max_n}"
    return CheckReport("equivariant_degree_parity", worst, num_samples, not failures, details)


def run_suite(
    num_samples: int = DEFAULT_SAMPLES,
    tol: float = DEFAULT_TOL,
    hopf_samples: int = DEFAULT_HOPF_SAMPLES,
    parallel: bool = True,
) -> list[CheckReport]:
    """Run every check; reports come back sorted by name."""
    jobs: list[Callable[[], CheckReport]] = [
        lambda: check_f_equivariance(num_samples, tol),
        lambda: check_f_in_so3(num_samples, tol),
        lambda: check_so4_identity(num_samples, tol),
        lambda: check_hopf_properties(hopf_samples, tol),
        lambda: check_stabilization_parity(num_samples),
        lambda: check_equivariant_degrees(num_samples, tol),
    ]
    if parallel:
        with ThreadPoolExecutor() as pool:
            reports = list(pool.map(lambda job: job(), jobs))
    else:
        reports = [job() for job in jobs]
    return sorted(reports, key=lambda r: r.name)
