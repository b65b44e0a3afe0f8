import numpy as np
import pytest
from pydantic import ValidationError

from surgery.config import Config
from surgery.errors import (
    BadAxisSet,
    DimensionMismatch,
    EmptyLevelSet,
    InvalidGrid,
    InvalidRadius,
    NotOnSphere,
    OutsideDisc,
    PointAtPole,
)
from surgery.morse import (
    DSU,
    MorseForm,
    PointCloud,
    clouds_to_csv,
    core_view,
    count_components,
    evaluate,
    evaluate_many,
    export_csv,
    export_json,
    export_obj,
    gradient,
    gradient_check,
    hessian_index,
    load_csv,
    load_json_sample,
    nearest_neighbor_spacing,
    revolve,
    sample_level_set,
    stereographic_inverse,
    stereographic_project,
    surgery_sequence,
    t_range,
)

ALL_FORMS = [(dim, index) for dim in range(1, 7) for index in range(dim + 1)]


def _random_interior(rng, count, dim, radius=0.9):
    directions = rng.standard_normal((count, dim))
    directions /= np.linalg.norm(directions, axis=1)[:, None]
    return directions * (radius * rng.random(count) ** (1.0 / dim))[:, None]


def test_form_values_and_gradient():
    form = MorseForm(ambient_dim=2, index=1)
    assert evaluate(form, [0.3, 0.4]) == pytest.approx(0.07)
    assert evaluate(form.reversed(), [0.3, 0.4]) == pytest.approx(-0.07)
    assert np.allclose(gradient(form, [0.3, 0.4]), [-0.6, 0.8])
    assert evaluate(form, [0.0, 0.0]) == 0.0


def test_form_validation():
    with pytest.raises(ValidationError):
        MorseForm(ambient_dim=2, index=3)
    with pytest.raises(ValidationError):
        MorseForm(ambient_dim=0, index=0)


def test_point_checks():
    form = MorseForm(ambient_dim=3, index=1)
    with pytest.raises(OutsideDisc):
        evaluate(form, [1.0, 1.0, 0.0])
    with pytest.raises(DimensionMismatch):
        gradient(form, [0.1, 0.2])


@pytest.mark.parametrize("dim, index", ALL_FORMS)
def test_hessian_index(dim, index):
    form = MorseForm(ambient_dim=dim, index=index)
    assert hessian_index(form) == index
    assert hessian_index(form.reversed()) == dim - index


@pytest.mark.parametrize("dim, index", ALL_FORMS)
def test_gradient_check(dim, index):
    form = MorseForm(ambient_dim=dim, index=index)
    rng = np.random.default_rng(dim * 10 + index)
    errors = [gradient_check(form, x) for x in _random_interior(rng, 100, dim)]
    assert max(errors) <= 1e-6


def test_gradient_check_step_bounds():
    form = MorseForm(ambient_dim=2, index=1)
    with pytest.raises(ValueError):
        gradient_check(form, [0.1, 0.1], h=0.1)


@pytest.mark.parametrize("dim, index, t", [
    (2, 1, -0.5), (2, 1, 0.0), (2, 1, 0.5),
    (3, 1, -0.5), (3, 1, 0.0), (3, 1, 0.5),
    (3, 2, 0.3), (4, 1, -0.2), (4, 2, 0.0), (5, 3, 0.4), (2, 0, 0.5), (1, 0, 0.25),
])
def test_level_set_residuals(dim, index, t):
    form = MorseForm(ambient_dim=dim, index=index)
    sample = sample_level_set(form, t, resolution=16)
    assert len(sample.points) > 0
    assert np.max(np.abs(evaluate_many(form, sample.points) - t)) <= 1e-9
    assert np.all(np.linalg.norm(sample.points, axis=1) <= 1.0)


def test_reversed_form_samples():
    form = MorseForm(ambient_dim=3, index=1, time_reversed=True)
    sample = sample_level_set(form, 0.4, resolution=16)
    assert np.max(np.abs(evaluate_many(form, sample.points) - 0.4)) <= 1e-9


@pytest.mark.parametrize("dim, index", [(2, 1), (3, 1), (4, 2)])
def test_reversed_form_is_plain_form_at_negated_level(dim, index):
    plain = MorseForm(ambient_dim=dim, index=index)
    reversed_sample = sample_level_set(plain.reversed(), 0.3, resolution=16, seed=4)
    plain_sample = sample_level_set(plain, -0.3, resolution=16, seed=4)
    assert np.array_equal(reversed_sample.points, plain_sample.points)


def test_empty_level_set():
    with pytest.raises(EmptyLevelSet):
        sample_level_set(MorseForm(ambient_dim=2, index=0), -0.5, resolution=8)


@pytest.mark.parametrize("t, resolution", [(1.0, 16), (-1.0, 16), (0.2, 4)])
def test_bad_sampling_grid(t, resolution):
    with pytest.raises(InvalidGrid):
        sample_level_set(MorseForm(ambient_dim=2, index=1), t, resolution=resolution)


def test_sampling_is_seeded():
    form = MorseForm(ambient_dim=4, index=2)
    first = sample_level_set(form, 0.1, resolution=8, seed=5)
    second = sample_level_set(form, 0.1, resolution=8, seed=5)
    assert np.array_equal(first.points, second.points)


@pytest.mark.parametrize("dim, expected", [(2, [2, 1, 2]), (3, [2, 1, 1]), (4, [2, 1, 1])])
def test_topology_change_across_critical_level(dim, expected):
    form = MorseForm(ambient_dim=dim, index=1)
    samples = surgery_sequence(form, [-0.5, 0.0, 0.5], resolution=64)
    assert [count_components(s.cloud) for s in samples] == expected


def test_index_two_in_dimension_four_stays_connected():
    samples = surgery_sequence(MorseForm(ambient_dim=4, index=2), [-0.5, 0.5], resolution=64)
    assert [count_components(s.cloud) for s in samples] == [1, 1]


def test_sequence_grid_checks():
    form = MorseForm(ambient_dim=2, index=1)
    with pytest.raises(InvalidGrid):
        surgery_sequence(form, [0.1, 0.0])
    assert t_range(-0.5, 0.5, 3) == [-0.5, 0.0, 0.5]
    assert t_range(0.2, 0.9, 1) == [0.2]


def test_sequence_threads_preserve_order():
    form = MorseForm(ambient_dim=3, index=2)
    serial = surgery_sequence(form, [-0.3, 0.1, 0.4], resolution=8)
    Config.SAMPLE_WORKERS = 3
    threaded = surgery_sequence(form, [-0.3, 0.1, 0.4], resolution=8)
    assert [s.t for s in threaded] == [-0.3, 0.1, 0.4]
    assert all(np.array_equal(a.points, b.points) for a, b in zip(serial, threaded))


def test_core_view_spheres():
    form = MorseForm(ambient_dim=3, index=1)
    collapsing = core_view(form, -0.25, resolution=12)
    assert sorted(collapsing.points[:, 0].tolist()) == [-0.5, 0.5]
    emerging = core_view(form, 0.25, resolution=12)
    assert len(emerging.points) == 12
    assert np.allclose(np.linalg.norm(emerging.points[:, 1:], axis=1), 0.5)
    assert np.allclose(emerging.points[:, 0], 0.0)
    assert core_view(form, 0.0).points.tolist() == [[0.0, 0.0, 0.0]]
    with pytest.raises(EmptyLevelSet):
        core_view(MorseForm(ambient_dim=2, index=0), -0.1)


def test_components_of_separated_clusters():
    points = np.vstack([np.linspace([0, 0], [1, 0], 20), np.linspace([0, 5], [1, 5], 20)])
    cloud = PointCloud(dim=2, points=points)
    assert count_components(cloud) == 2
    assert count_components(cloud, link_radius=10.0) == 1
    assert nearest_neighbor_spacing(cloud) == pytest.approx(1 / 19)


def test_component_edge_cases():
    assert count_components(PointCloud(dim=3, points=np.zeros((0, 3)))) == 0
    assert count_components(PointCloud(dim=2, points=[[0.5, 0.5]])) == 1
    with pytest.raises(InvalidRadius):
        count_components(PointCloud(dim=1, points=[[0.0], [1.0]]), link_radius=0.0)


def test_dsu_union_pairs():
    dsu = DSU(6)
    dsu.union_pairs(np.array([[0, 1], [2, 3], [1, 3]]))
    assert dsu.count() == 3
    assert dsu.find(np.array([0, 1, 2, 3])).tolist() == [0, 0, 0, 0]


def test_point_cloud_shape_checks():
    with pytest.raises(ValidationError):
        PointCloud(dim=2, points=[[0.0, 1.0, 2.0]])
    with pytest.raises(ValidationError):
        PointCloud(dim=1, points=[[np.nan]])


def _sphere_points(count, dim, seed=3):
    rng = np.random.default_rng(seed)
    points = rng.standard_normal((count, dim))
    return PointCloud(dim=dim, points=points / np.linalg.norm(points, axis=1)[:, None])


@pytest.mark.parametrize("pole", [[0.0, 0.0, 1.0], [0.0, -1.0, 0.0], list(np.ones(3) / np.sqrt(3))])
def test_stereographic_round_trip(pole):
    cloud = _sphere_points(1000, 3)
    flat = stereographic_project(cloud, pole)
    assert flat.dim == 2
    back = stereographic_inverse(flat, pole)
    assert np.max(np.abs(back.points - cloud.points)) <= 1e-9


def test_stereographic_known_values():
    cloud = PointCloud(dim=3, points=[[0.0, 0.0, -1.0], [1.0, 0.0, 0.0], [0.0, 0.8, 0.6]])
    flat = stereographic_project(cloud, [0.0, 0.0, 1.0])
    assert np.allclose(flat.points, [[0.0, 0.0], [1.0, 0.0], [0.0, 2.0]])
    back = stereographic_inverse(PointCloud(dim=2, points=[[0.0, 2.0]]), [0.0, 0.0, 1.0])
    assert np.allclose(back.points, [[0.0, 0.8, 0.6]])


def test_stereographic_errors():
    with pytest.raises(PointAtPole):
        stereographic_project(PointCloud(dim=2, points=[[0.0, 1.0]]), [0.0, 1.0])
    with pytest.raises(NotOnSphere):
        stereographic_project(PointCloud(dim=2, points=[[0.5, 0.5]]), [0.0, 1.0])
    with pytest.raises(NotOnSphere):
        stereographic_project(PointCloud(dim=2, points=[[1.0, 0.0]]), [0.0, 2.0])
    with pytest.raises(DimensionMismatch):
        stereographic_inverse(PointCloud(dim=2, points=[[0.1, 0.2]]), [0.0, 1.0])


@pytest.mark.parametrize("t", [-0.5, 0.3])
def test_revolving_hyperbola_gives_hyperboloid(t):
    sample = sample_level_set(MorseForm(ambient_dim=2, index=1), t, resolution=32)
    solid = revolve(sample.cloud, [0], steps=12)
    assert solid.dim == 3
    assert len(solid) == 12 * len(sample.cloud)
    hyperboloid = MorseForm(ambient_dim=3, index=1)
    assert np.max(np.abs(evaluate_many(hyperboloid, solid.points) - t)) <= 1e-9


def test_revolving_twice_reaches_dimension_four():
    t = 0.2
    sample = sample_level_set(MorseForm(ambient_dim=2, index=1), t, resolution=16)
    solid = revolve(sample.cloud, [0], steps=8)
    # the second turn spins the negative coordinate, so w joins x with a minus sign
    four = revolve(solid, [1, 2], steps=8)
    assert four.dim == 4
    assert len(four) == 64 * len(sample.cloud)
    x, y, z, w = four.points.T
    assert np.max(np.abs(-x * x + y * y + z * z - w * w - t)) <= 1e-9
    index_two = MorseForm(ambient_dim=4, index=2)
    assert np.max(np.abs(evaluate_many(index_two, four.points[:, [0, 3, 1, 2]]) - t)) <= 1e-9


def test_revolve_twist_stays_on_quadric():
    sample = sample_level_set(MorseForm(ambient_dim=2, index=1), 0.3, resolution=16)
    twisted = revolve(sample.cloud, [0], steps=8, twist=np.pi / 2, full_turn=True)
    assert np.max(np.abs(evaluate_many(MorseForm(ambient_dim=3, index=1), twisted.points) - 0.3)) <= 1e-9
    assert not np.array_equal(twisted.points, revolve(sample.cloud, [0], steps=8, full_turn=True).points)


def test_revolve_checks():
    cloud = PointCloud(dim=2, points=[[0.1, 0.2]])
    with pytest.raises(BadAxisSet):
        revolve(cloud, [0, 1], steps=8)
    with pytest.raises(BadAxisSet):
        revolve(cloud, [2], steps=8)
    with pytest.raises(InvalidGrid):
        revolve(cloud, [0], steps=2)


def test_csv_export_and_reload():
    form = MorseForm(ambient_dim=2, index=1)
    samples = surgery_sequence(form, [-0.5, 0.5], resolution=8)
    text = export_csv(samples)
    assert text.splitlines()[0] == "t,x0,x1"
    assert len(text.splitlines()) == 1 + sum(len(s.points) for s in samples)

    groups = load_csv(text)
    assert [t for t, _ in groups] == [-0.5, 0.5]
    for (_, cloud), sample in zip(groups, samples):
        assert np.array_equal(cloud.points, sample.points)


def test_clouds_csv_without_levels():
    cloud = PointCloud(dim=3, points=[[0.0, 0.6, 0.8]])
    text = clouds_to_csv([(None, cloud)])
    assert text == "x0,x1,x2\n0.0,0.6,0.8\n"
    [(t, back)] = load_csv(text)
    assert t is None
    assert np.array_equal(back.points, cloud.points)


def test_obj_export_faces_are_one_based():
    sample = sample_level_set(MorseForm(ambient_dim=3, index=1), 0.5, resolution=8)
    lines = export_obj([sample]).splitlines()
    vertices = [line for line in lines if line.startswith("v ")]
    faces = [line for line in lines if line.startswith("f ")]
    assert lines[0] == "o level_0.5"
    assert len(vertices) == len(sample.points)
    indices = [int(i) for line in faces for i in line.split()[1:]]
    assert min(indices) == 1
    assert max(indices) == len(vertices)


def test_obj_pads_planar_points():
    sample = sample_level_set(MorseForm(ambient_dim=2, index=1), 0.5, resolution=8)
    vertex = next(line for line in export_obj([sample]).splitlines() if line.startswith("v "))
    assert vertex.split()[-1] == "0.0"
    assert len(vertex.split()) == 4


def test_obj_rejects_high_dimensions():
    sample = sample_level_set(MorseForm(ambient_dim=5, index=2), 0.1, resolution=8)
    with pytest.raises(DimensionMismatch):
        export_obj([sample])


def test_json_sample_round_trip():
    samples = [
        sample_level_set(MorseForm(ambient_dim=3, index=1), 0.2, resolution=8),
        sample_level_set(MorseForm(ambient_dim=4, index=1, time_reversed=True), -0.1, resolution=8),
    ]
    loaded = load_json_sample(export_json(samples))
    assert [s.form for s in loaded] == [s.form for s in samples]
    assert [s.t for s in loaded] == [0.2, -0.1]
    assert np.array_equal(loaded[0].points, samples[0].points)
    assert np.array_equal(loaded[0].faces, samples[0].faces)
    assert loaded[1].faces is None
    assert export_json(loaded) == export_json(samples)
