"""Config"""
import logging

import yaml
from exceptions import ConfigException

_MISSING = object()


class Config:
    """
    Run configuration

    Values come from a flat YAML mapping (optionally with nested sections such as
    `limits` or `minimizer`) and can be overridden by command line flags.
    """

    def __init__(self, filename=None, config=None):
        self._filename = filename

        if self._filename:
            with open(self._filename, "r", encoding="utf-8") as config_file:
                try:
                    self._config = yaml.safe_load(config_file) or {}
                except yaml.YAMLError as exp:
                    raise ConfigException(f"Invalid YAML in {self._filename}: {exp}") from exp

        elif config is not None:
            self._config = config

        else:
            raise ConfigException(f"Invalid config initialization: {config}")

        if not isinstance(self._config, dict):
            raise ConfigException(f"Config root must be a mapping, got {type(self._config).__name__}")

    def _lookup(self, path):
        """
        Walk a dotted path such as "limits.max_ideals" through nested sections
        """
        node = self._config
        for key in path.split("."):
            if not isinstance(node, dict) or key not in node:
                return _MISSING
            node = node[key]
        return node

    def require(self, path):
        value = self._lookup(path)
        if value is _MISSING:
            raise ConfigException(f"{path} missing in config")
        return value

    def optional(self, path, fallback=None):
        value = self._lookup(path)
        return fallback if value is _MISSING else value

    def override(self, values):
        """
        Apply command line values on top of the file configuration

        Keys with value None were not given on the command line and keep the file value.
        """
        for key, value in values.items():
            if value is None:
                continue
            if key in self._config and self._config[key] != value:
                logging.debug(f"Flag overrides config {key}: {self._config[key]} -> {value}")
            self._config[key] = value
        return self
