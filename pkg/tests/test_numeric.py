import io
import math

import numpy as np
import pytest
from hypothesis import given, settings
import hypothesis.strategies as st
from scipy.spatial.transform import Rotation

from c2framed import numeric
from c2framed.errors import LiftAmbiguous, StepTooLarge, SymmetryViolated
from c2framed.numeric import (
    LoopSamples,
    check_equivariant_degree_even,
    check_f_equivariance,
    check_f_in_so3,
    check_hopf_properties,
    check_so4_identity,
    dump_loop_text,
    frame_matrix_f,
    hopf_map,
    lift_to_spin,
    load_loop_text,
    matrix_to_quaternion,
    quaternion_to_matrix,
    rotation2,
    rotation_loop,
    run_suite,
    so3_loop_class,
    winding_number,
)

DEGREES = range(-8, 9)


# -- F ------------------------------------------------------------------------


def test_f_at_zero():
    np.testing.assert_array_equal(frame_matrix_f(0.0), [[1, 0, 0], [0, 0, 1], [0, -1, 0]])


@pytest.mark.parametrize("theta", [0.0, 0.37, 1.0, np.pi / 2, 2.5, 4.0])
def test_f_takes_e3_to_tangent(theta):
    tangent = np.array([-math.sin(theta), math.cos(theta), 0.0])
    np.testing.assert_allclose(frame_matrix_f(theta) @ [0, 0, 1], tangent, atol=1e-15)


def test_f_is_rotation_at_037():
    f = frame_matrix_f(0.37)
    assert abs(np.linalg.det(f) - 1) < 1e-12
    assert np.abs(f.T @ f - np.eye(3)).max() < 1e-12


def test_f_equivariance_passes():
    report = check_f_equivariance(1024, 1e-9)
    assert report.passed and report.max_error < 1e-9 and report.samples_used == 1024


def test_f_equivariance_spot_check_zero():
    a = np.diag([-1.0, -1.0, 1.0])
    expected = [[1, 0, 0], [0, 0, -1], [0, 1, 0]]
    np.testing.assert_allclose(a @ frame_matrix_f(0.0) @ a, expected, atol=1e-15)
    np.testing.assert_allclose(frame_matrix_f(np.pi), expected, atol=1e-15)


def test_f_equivariance_negative_control():
    # With A = I the identity would need F(0.5) = F(0.5 + pi), which fails.
    assert np.abs(frame_matrix_f(0.5) - frame_matrix_f(0.5 + np.pi)).max() > 0.5
    assert not check_f_equivariance(64, 1e-9, action=np.eye(3)).passed


def test_f_in_so3_grid():
    assert check_f_in_so3(1024, 1e-9).passed


# -- SO(4) identity -----------------------------------------------------------


def _matmul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(4)) for j in range(4)] for i in range(4)]


def test_so4_at_quarter_turn_by_hand():
    c, s = math.cos(math.pi / 2), math.sin(math.pi / 2)
    gen = [[0, 0, c, -s], [0, 0, s, c], [1, 0, 0, 0], [0, 1, 0, 0]]
    diag = [[c, -s, 0, 0], [s, c, 0, 0], [0, 0, c, -s], [0, 0, s, c]]
    assert np.abs(np.array(_matmul(gen, gen)) - np.array(diag)).max() < 1e-12
    report = check_so4_identity(8, 1e-12)  # grid includes pi/2
    assert report.passed


def test_so4_at_zero_is_identity():
    gen = np.block([[np.zeros((2, 2)), rotation2(0.0)], [np.eye(2), np.zeros((2, 2))]])
    np.testing.assert_array_equal(gen @ gen, np.eye(4))


def test_so4_identity_grid():
    report = check_so4_identity(1024, 1e-12)
    assert report.passed and report.max_error < 1e-12


# -- winding numbers ----------------------------------------------------------


def test_winding_three():
    assert winding_number(rotation_loop(3, 256)) == 3


def test_winding_constant():
    assert winding_number(LoopSamples(np.broadcast_to(rotation2(0.7), (16, 2, 2)))) == 0


def test_winding_negative():
    assert winding_number(rotation_loop(-2, 256)) == -2


@pytest.mark.parametrize("n", DEGREES)
def test_winding_recovers_degree(n):
    assert winding_number(rotation_loop(n, 1024)) == n


def test_winding_undersampled():
    with pytest.raises(StepTooLarge):
        winding_number(rotation_loop(100, 256))


@given(st.integers(-8, 8), st.integers(-8, 8))
@settings(max_examples=50)
def test_winding_additive_under_composition(a, b):
    loop = rotation_loop(a, 512).compose(rotation_loop(b, 512))
    assert winding_number(loop) == a + b


def test_winding_nonuniform_sampling():
    # Irregular but dense parametrization of a degree -5 loop.
    t = np.sort(np.random.default_rng(3).uniform(0, 2 * np.pi, 400))
    t = t + 0.2 * np.sin(t)
    assert winding_number(LoopSamples(rotation2(-5 * t))) == -5


def test_winding_rejects_3x3():
    with pytest.raises(ValueError):
        winding_number(rotation_loop(1, 64, size=3))


# -- quaternions and SO(3) parity ---------------------------------------------


def test_quaternion_matches_scipy():
    rng = np.random.default_rng(11)
    mats = Rotation.random(500, random_state=12).as_matrix()
    # include rotations by angles at and near pi, where the trace branch degenerates
    axes = rng.standard_normal((50, 3))
    axes /= np.linalg.norm(axes, axis=1, keepdims=True)
    near_pi = Rotation.from_rotvec(axes * (np.pi - rng.uniform(0, 1e-6, (50, 1)))).as_matrix()
    mats = np.concatenate([mats, near_pi, np.eye(3)[None], np.diag([1.0, -1.0, -1.0])[None]])
    ours = matrix_to_quaternion(mats)
    xyzw = Rotation.from_matrix(mats).as_quat()
    theirs = np.concatenate([xyzw[:, 3:], xyzw[:, :3]], axis=1)
    agree = np.minimum(np.abs(ours - theirs).max(axis=1), np.abs(ours + theirs).max(axis=1))
    assert agree.max() < 1e-9
    np.testing.assert_allclose(quaternion_to_matrix(ours), mats, atol=1e-12)


def test_quaternion_single_matrix():
    q = matrix_to_quaternion(np.eye(3))
    assert q.shape == (4,)
    assert abs(abs(q[0]) - 1) < 1e-15


def test_so3_degree_two_is_trivial():
    assert so3_loop_class(rotation_loop(2, 1024, size=3)) == 0


def test_so3_degree_one_is_generator():
    assert so3_loop_class(rotation_loop(1, 1024, size=3)) == 1


def test_so3_constant():
    assert so3_loop_class(LoopSamples(np.broadcast_to(np.eye(3), (8, 3, 3)))) == 0


@pytest.mark.parametrize("n", DEGREES)
def test_so3_parity(n):
    assert so3_loop_class(rotation_loop(n, 1024).embed(3)) == n % 2


@pytest.mark.parametrize("n", [1, 2, 3, 6])
def test_so3_invariant_under_rotation_and_density(n):
    base = so3_loop_class(rotation_loop(n, 512, size=3))
    for shift in (1, 17, 255):
        assert so3_loop_class(rotation_loop(n, 512, size=3).rotated(shift)) == base
    assert so3_loop_class(rotation_loop(n, 1024, size=3)) == base


@pytest.mark.parametrize("n", [1, 2, 5])
def test_so3_invariant_under_conjugation(n):
    g = Rotation.random(random_state=n).as_matrix()
    loop = rotation_loop(n, 1024, size=3)
    conj = LoopSamples(g @ loop.matrices @ g.T)
    assert so3_loop_class(conj) == n % 2


def test_lift_is_continuous():
    lifted = lift_to_spin(rotation_loop(3, 256, size=3))
    assert lifted.shape == (257, 4)
    assert (np.einsum("ni,ni->n", lifted[:-1], lifted[1:]) > 0).all()


def test_lift_ambiguous(monkeypatch):
    monkeypatch.setattr(numeric, "LIFT_SEPARATION", 2.5)
    with pytest.raises(LiftAmbiguous):
        so3_loop_class(rotation_loop(1, 64, size=3))


def test_so3_undersampled():
    with pytest.raises(StepTooLarge):
        so3_loop_class(rotation_loop(40, 64, size=3))


# -- equivariant degree parity ------------------------------------------------


def test_equivariant_degree_four():
    report = check_equivariant_degree_even(rotation_loop(4, 1024))
    assert report.passed and report.details == "degree=4"


def test_equivariant_degree_two():
    assert check_equivariant_degree_even(rotation_loop(2, 1024)).passed


def test_equivariant_rejects_odd_degree():
    with pytest.raises(SymmetryViolated):
        check_equivariant_degree_even(rotation_loop(3, 1024))


def test_equivariant_rejects_odd_sample_count():
    with pytest.raises(SymmetryViolated):
        check_equivariant_degree_even(rotation_loop(2, 1023))


@pytest.mark.parametrize("n", range(5))
def test_equivariant_degree_family(n):
    assert check_equivariant_degree_even(rotation_loop(2 * n, 1024)).passed
    with pytest.raises(SymmetryViolated):
        check_equivariant_degree_even(rotation_loop(2 * n + 1, 1024))


# -- Hopf map -----------------------------------------------------------------


def test_hopf_poles():
    assert hopf_map(1, 0) == (0j, 1.0)
    assert hopf_map(0, 1) == (0j, -1.0)


def test_hopf_equator():
    r = 1 / math.sqrt(2)
    w, t = hopf_map(r, r)
    assert abs(w - 1) < 1e-15 and abs(t) < 1e-15


def test_hopf_fiber_minus_one():
    r = 1 / math.sqrt(2)
    assert np.allclose(hopf_map(-r, -r), hopf_map(r, r), atol=1e-15)


def test_hopf_on_sphere_at_pole():
    w, t = hopf_map(1, 0)
    assert abs(w) ** 2 + t**2 == 1


def test_hopf_properties_pass():
    report = check_hopf_properties(10_000, 1e-9)
    assert report.passed and report.max_error < 1e-9


def test_hopf_needs_samples():
    with pytest.raises(ValueError):
        check_hopf_properties(50)


# -- loop samples I/O and validation ------------------------------------------


def test_loop_text_round_trip(tmp_path):
    loop = rotation_loop(3, 64, size=3)
    path = tmp_path / "loop.txt"
    path.write_text("# degree 3 loop\n\n" + dump_loop_text(loop))
    loaded = load_loop_text(path)
    np.testing.assert_array_equal(loaded.matrices, loop.matrices)
    assert so3_loop_class(loaded) == 1


def test_loop_text_from_stream():
    text = dump_loop_text(rotation_loop(-1, 32))
    assert winding_number(load_loop_text(io.StringIO(text))) == -1


@pytest.mark.parametrize(
    "text",
    ["1 0 0\n" * 8, "1 0 0 1\n" * 7 + "1 0 0 0 1 0 0 0 1\n", ""],
)
def test_loop_text_bad(text):
    with pytest.raises(ValueError):
        load_loop_text(io.StringIO(text))


def test_loop_validation():
    with pytest.raises(ValueError):
        LoopSamples(np.broadcast_to(np.eye(2), (4, 2, 2)))  # too few
    with pytest.raises(ValueError):
        LoopSamples(np.broadcast_to(np.eye(5), (8, 5, 5)))  # bad size
    with pytest.raises(ValueError):
        LoopSamples(np.broadcast_to(np.diag([1.0, -1.0]), (8, 2, 2)))  # det -1
    with pytest.raises(ValueError):
        LoopSamples(np.broadcast_to(2 * np.eye(2), (8, 2, 2)))  # not orthogonal


def test_so4_loop_steps():
    loop = rotation_loop(1, 64, size=4)
    assert loop.step_angles().max() == pytest.approx(2 * np.pi / 64)


# -- suite --------------------------------------------------------------------


def test_suite_sorted_and_passing():
    reports = run_suite()
    names = [r.name for r in reports]
    assert names == sorted(names)
    assert len(names) == len(set(names)) == 6
    assert all(r.passed for r in reports)


def test_suite_parallel_matches_serial():
    assert run_suite(256, parallel=True) == run_suite(256, parallel=False)


def test_report_json():
    report = check_so4_identity(8)
    data = report.to_json()
    assert set(data) == {"name", "passed", "max_error", "samples_used", "details"}
    assert isinstance(data["max_error"], float) and data["passed"] is True
