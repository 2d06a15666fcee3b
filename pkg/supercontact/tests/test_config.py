import dataclasses
from types import MappingProxyType

import pytest
from ruamel.yaml import YAML

from supercontact.config import InvalidConfigError, configure, get_config


DEFAULT_CONFIG_VALUES = MappingProxyType(
    {
        'debug': False,
        'log_path': None,
        'matrix_samples': 200,
        'max_l': 6,
        'max_n': 8,
        'random_cases': 100,
        'seed': 0,
        'silent': False,
    }
)


def _write_config(config_path, raw_data: str = None, **kwargs):
    with open(config_path, 'w') as stream:
        if raw_data:
            stream.write(raw_data)
        else:
            YAML().dump(kwargs, stream)


@pytest.fixture
def default_config_path(monkeypatch, tmp_path):
    config_path = tmp_path / 'config.yml'
    monkeypatch.setattr('supercontact.config.DEFAULT_CONFIG_PATH', config_path)
    return config_path


def test_defaults(default_config_path):
    config = configure()
    assert dataclasses.asdict(config) == DEFAULT_CONFIG_VALUES
    assert get_config() is config


def test_from_default_config_file(default_config_path):
    _write_config(default_config_path, seed=42, max_l=3)
    config = configure()
    assert dataclasses.asdict(config) == {
        **DEFAULT_CONFIG_VALUES,
        'seed': 42,
        'max_l': 3,
    }


def test_from_custom_config_file(default_config_path, tmp_path):
    _write_config(default_config_path, seed=1)
    custom_config_path = tmp_path / 'custom-config.yml'
    _write_config(custom_config_path, seed=2)

    config = configure(config_path=custom_config_path)
    assert dataclasses.asdict(config) == {**DEFAULT_CONFIG_VALUES, 'seed': 2}


def test_args_override_config_file(default_config_path):
    _write_config(default_config_path, seed=1, silent=True)
    config = configure(seed=5)
    assert dataclasses.asdict(config) == {
        **DEFAULT_CONFIG_VALUES,
        'seed': 5,
        'silent': True,
    }


def test_unknown_keys_are_ignored(default_config_path):
    _write_config(default_config_path, web_server_port=1)
    assert dataclasses.asdict(configure()) == DEFAULT_CONFIG_VALUES


@pytest.mark.parametrize('raw_data', ['{invalid', '- 1\n- 2\n'])
def test_invalid_config_syntax(default_config_path, raw_data):
    _write_config(default_config_path, raw_data=raw_data)
    with pytest.raises(InvalidConfigError):
        configure()


def test_invalid_config_data(default_config_path):
    _write_config(default_config_path, max_n='invalid')
    with pytest.raises(InvalidConfigError):
        configure()


def test_invalid_config_args(default_config_path):
    with pytest.raises(InvalidConfigError):
        configure(random_cases='invalid')


@pytest.mark.parametrize(
    'params',
    [{'max_l': -1}, {'max_n': 0}, {'random_cases': 0}, {'matrix_samples': -5}],
)
def test_out_of_range_values(default_config_path, params):
    with pytest.raises(InvalidConfigError):
        configure(**params)


def test_empty_config_file(default_config_path):
    _write_config(default_config_path, raw_data='# nothing here\n')
    assert dataclasses.asdict(configure()) == DEFAULT_CONFIG_VALUES


@pytest.mark.parametrize(
    'l,n,allowed', [(0, 1, True), (6, 8, True), (7, 1, False), (1, 9, False)]
)
def test_resource_cap(default_config_path, l, n, allowed):  # noqa: E741
    assert configure().allows(l, n) is allowed
