import logging
import os
import re
from string import Template
from typing import Type, TypeVar

import fsspec
import pydantic_yaml
from pydantic import BaseModel, ConfigDict, ValidationError
from ruamel.yaml import YAMLError

from rlvopt.errors import ConfigError

M = TypeVar("M", bound=BaseModel)


class ConfigBase(BaseModel):
    model_config = ConfigDict(extra="forbid")


def _substitute_env_vars(content: str) -> str:
    """Replace ${VAR} or $VAR in string with environment variable values."""
    env_vars = os.environ.copy()

    # Handle ${VAR} style
    pattern = re.compile(r"\${([^}^{]+)}")
    content = pattern.sub(lambda m: env_vars.get(m.group(1), ""), content)

    # Handle $VAR style
    return Template(content).safe_substitute(env_vars)


def format_validation_error(err: ValidationError) -> str:
    lines = []
    for item in err.errors():
        key = ".".join(str(part) for part in item["loc"]) or "<root>"
        lines.append(f"{key}: {item['msg']}")
    return "; ".join(lines)


def parse_config(content: str, model: Type[M], source: str = "<string>") -> M:
    try:
        return pydantic_yaml.parse_yaml_raw_as(model, content)
    except ValidationError as e:
        raise ConfigError(f"{source}: {format_validation_error(e)}") from e
    except YAMLError as e:
        mark = getattr(e, "problem_mark", None)
        where = f" line {mark.line + 1}, column {mark.column + 1}" if mark else ""
        problem = getattr(e, "problem", None) or str(e)
        raise ConfigError(f"{source}:{where}: {problem}") from e


def load_config(path: str | None, model: Type[M]) -> M:
    """Load a config from a yaml file and return a pydantic model."""
    if path is None:
        content = None
    else:
        try:
            with fsspec.open(path, "r") as f:
                content = f.read().strip()
        except FileNotFoundError as e:
            raise ConfigError(f"config file not found: {path}") from e

    if content:
        content = _substitute_env_vars(content)

    # An empty document means all defaults.
    if not content:
        m = model()
    else:
        m = parse_config(content, model, source=str(path))
    logging.info(f"Loaded config from {path}: {m}")
    return m


def dump_config(config: BaseModel) -> str:
    return pydantic_yaml.to_yaml_str(config)
