import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

import marshmallow_dataclass
from marshmallow import EXCLUDE, validate
from ruamel.yaml import YAML
from ruamel.yaml.error import YAMLError


SUPERCONTACT_DIR = Path(os.getenv('SUPERCONTACT_DIR', Path.home() / '.supercontact'))
DEFAULT_CONFIG_PATH = SUPERCONTACT_DIR / 'config.yml'


def _at_least(default: int, minimum: int = 1):
    return field(default=default, metadata={'validate': validate.Range(min=minimum)})


@dataclass(frozen=True)
class SupercontactConfig:
    debug: bool = False
    log_path: Optional[str] = None
    # Random matrices drawn by the omega-agreement check.
    matrix_samples: int = _at_least(200)
    # Resource cap on the superspace dimensions; --force bypasses it.
    max_l: int = _at_least(6, minimum=0)
    max_n: int = _at_least(8)
    # Random superfunctions or fields per property check.
    random_cases: int = _at_least(100)
    seed: int = 0
    silent: bool = False

    def allows(self, l: int, n: int) -> bool:  # noqa: E741
        return l <= self.max_l and n <= self.max_n


SupercontactConfigSchema = marshmallow_dataclass.class_schema(SupercontactConfig)


class InvalidConfigError(Exception):
    pass


def configure(config_path: str = None, **kwargs) -> SupercontactConfig:
    """Build the active config from the YAML file and explicit overrides.

    ``kwargs`` win over the file; keys the config does not know are dropped.
    """
    params = {**_load_config_file(config_path), **kwargs}

    schema = SupercontactConfigSchema(unknown=EXCLUDE)
    errors = schema.validate(params)
    if errors:
        raise InvalidConfigError(errors)

    global __config
    __config = schema.load(params)
    return __config


def get_config() -> Optional[SupercontactConfig]:
    return __config


def _load_config_file(config_path: str = None) -> dict:
    path = Path(config_path or DEFAULT_CONFIG_PATH).expanduser()
    if not path.exists():
        return {}

    try:
        with open(path) as stream:
            data = YAML().load(stream)
    except (OSError, YAMLError) as exc:
        raise InvalidConfigError(f'Cannot read {path}: {exc}') from exc

    if data is None:
        return {}
    if not isinstance(data, dict):
        raise InvalidConfigError(
            f'{path}: expecting a mapping, got {type(data).__name__}.'
        )
    return data


__config: SupercontactConfig = None
