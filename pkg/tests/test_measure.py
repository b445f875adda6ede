import json

import numpy as np
import pytest

from DiskRep.errors import DomainError
from FockPlane.plane_measure import PlaneMeasure
from MeasureModel.density_factory import DensityFactory
from MeasureModel.measure import Measure

DISK_FAMILIES = ['bloch_log', 'constant', 'log_weight', 'monomial_power', 'phase_power', 'power']


def test_all_density_families_discovered():
    available = DensityFactory.get_available_types()
    for family in DISK_FAMILIES + ['fock_reproducing', 'gaussian']:
        assert family in available
    assert available == sorted(available)


def test_create_power_density():
    density = DensityFactory.create('power', a=2, c=3)
    np.testing.assert_allclose(density(0.5), 3 * 0.75 ** 2)
    assert density.angular_order == 0


def test_coefficient_pairs():
    density = DensityFactory.from_dict({'family': 'power', 'params': {'a': 2, 'c': [1, 1]}})
    assert density.coefficient == 1 + 1j


def test_unknown_family():
    with pytest.raises(ValueError, match='Unsupported density type'):
        DensityFactory.create('nope')


def test_unknown_parameter():
    with pytest.raises(ValueError):
        DensityFactory.from_dict({'family': 'power', 'params': {'exponent': 2}})


def test_family_key_round_trip():
    density = DensityFactory.create('monomial_power', m=2, N=1, c=0.5)
    data = DensityFactory.to_dict(density)
    assert data['family'] == 'monomial_power'
    assert data['params']['m'] == 2
    assert DensityFactory.from_dict(data).coefficient == 0.5


def test_scaled_keeps_family():
    density = DensityFactory.create('log_weight', a=1.0, b=0.5).scaled(2j)
    assert density.coefficient == 2j
    assert density.params() == {'a': 1.0, 'b': 0.5}


def test_monomial_power_separates():
    density = DensityFactory.create('monomial_power', m=3, N=2)
    w = 0.6 * np.exp(0.7j)
    expected = np.exp(3 * 0.7j) * density.profile(np.asarray(0.36))
    np.testing.assert_allclose(density(w), expected, rtol=1e-14)


def test_phase_power_vanishes_at_origin():
    density = DensityFactory.create('phase_power', N=1)
    assert density(np.asarray([0.0]))[0] == 0
    np.testing.assert_allclose(density(np.asarray([0.5j])), [-1j * 0.75])
    assert density.angular_order == -1


def test_bloch_log_angular_mean_is_one():
    density = DensityFactory.create('bloch_log', c=-2.0)
    theta = 2 * np.pi * np.arange(4096) / 4096
    numeric = np.mean(np.abs(density(np.sqrt(0.5) * np.exp(1j * theta))))
    np.testing.assert_allclose(numeric, density.abs_angular_mean(np.asarray([0.5])), rtol=1e-10)
    assert density.singular_directions() == (0.0,)
    assert density.angular_order is None


@pytest.mark.parametrize('family', ['gaussian', 'fock_reproducing'])
def test_plane_densities_reject_bad_alpha(family):
    with pytest.raises(ValueError):
        DensityFactory.create(family, alpha=0.0)


def test_readme_measure_schema():
    mu = Measure.from_dict({
        'space': 'disk',
        'atoms': [{'z': [0.5, 0.0], 'w': 1.0}],
        'density': {'family': 'power', 'params': {'a': 2.0, 'c': 1.0}},
    })
    assert mu.atom_count == 1
    assert mu.locations[0] == 0.5
    assert len(mu.densities) == 1


def test_json_export_reloads(tmp_path):
    mu = Measure.atomic([0.1, 0.2j], [1.0, -0.5j]) + Measure.area().scale(2.0)
    path = tmp_path / 'mu.json'
    path.write_text(mu.to_json())
    loaded = Measure.load(str(path))
    np.testing.assert_array_equal(loaded.locations, mu.locations)
    np.testing.assert_array_equal(loaded.weights, mu.weights)
    assert loaded.densities[0].coefficient == 2.0
    assert json.loads(mu.to_json()) == json.loads(loaded.to_json())


def test_plane_space_builds_plane_measure():
    mu = Measure.from_dict({'space': 'plane', 'atoms': [{'z': [3.0, 4.0], 'w': 1.0}]})
    assert isinstance(mu, PlaneMeasure)
    assert mu.locations[0] == 3 + 4j


def test_unknown_space():
    with pytest.raises(ValueError):
        Measure.from_dict({'space': 'torus'})


def test_atom_outside_disk_rejected():
    with pytest.raises(DomainError):
        Measure.atom(1.5)


def test_mismatched_atoms():
    with pytest.raises(ValueError):
        Measure(locations=np.asarray([0.1, 0.2]), weights=np.asarray([1.0]))


def test_plane_density_on_disk_rejected():
    with pytest.raises(ValueError):
        Measure.from_density(DensityFactory.create('gaussian'))


def test_measure_algebra():
    mu = Measure.atom(0.5, 2.0)
    nu = Measure.atom(-0.5j, 1.0) + Measure.area()
    total = mu + nu
    assert total.atom_count == 2
    assert len(total.densities) == 1
    diff = total - nu
    np.testing.assert_allclose(diff.weights, [2.0, 1.0, -1.0])
    assert len(diff.densities) == 2
    assert (3 * mu).weights[0] == 6.0
    assert (-mu).weights[0] == -2.0


def test_zero_measure():
    assert Measure.zero().is_zero
    assert not Measure.area().is_zero
    assert Measure.zero().describe() == 'zero measure'


def test_rotation_invariance():
    assert Measure.area().rotation_invariant
    assert Measure.atom(0.0).rotation_invariant
    assert not Measure.atom(0.5).rotation_invariant
    assert not Measure.from_density(DensityFactory.create('bloch_log')).rotation_invariant


def test_atom_tree_only_for_long_lists():
    assert Measure.atom(0.5).atom_tree is None
    z = 0.9 * np.exp(2j * np.pi * np.arange(100) / 100)
    assert Measure.atomic(z, np.ones(100)).atom_tree is not None


def test_finite_mass():
    assert Measure.area().has_finite_mass
    assert Measure.from_density(DensityFactory.create('power', a=-0.5)).has_finite_mass
    assert not Measure.from_density(DensityFactory.create('power', a=-1.5)).has_finite_mass
