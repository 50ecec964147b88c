import argparse
from pathlib import Path
from typing import Optional

import inject

from sl3cycles.enums import Command

DEFAULT_I_MAX = 21
DEFAULT_N_MAX = 8
DEFAULT_SEED = 0
DEFAULT_SAMPLES = 200


class ConfigurationError(Exception):
    pass


def require_capacity(i_max: int, n_max: int):
    """The whole star of every z_n and y_n with n <= n_max has to fit into the window."""
    if 2 * n_max + 2 > i_max:
        raise ConfigurationError(
            f"window i <= {i_max} is too small for n <= {n_max}; need i_max >= {2 * n_max + 2}"
        )


class ApplicationSettings:
    _arguments: argparse.Namespace = inject.attr(argparse.Namespace)

    def __init__(self):
        self._validate()

    def _validate(self):
        if self.i_max < 0:
            raise ConfigurationError(f"--imax must not be negative, got {self.i_max}")
        if self.n_max < 0:
            raise ConfigurationError(f"--nmax must not be negative, got {self.n_max}")
        if self.samples < 1:
            raise ConfigurationError(f"--samples must be positive, got {self.samples}")
        if self.cycle_index is not None and self.cycle_index < 0:
            raise ConfigurationError(f"--n must not be negative, got {self.cycle_index}")
        if self.command in (Command.STAB, Command.LINK) and self.vertex is None:
            raise ConfigurationError(f"{self.command.value} needs --vertex I J")
        if self.command in (Command.VERIFY, Command.PAIRING):
            require_capacity(self.i_max, self.n_max)

    def _get(self, name: str, default=None):
        return getattr(self._arguments, name, default)

    @property
    def command(self) -> Command:
        return Command(self._get("command", Command.VERIFY.value))

    @property
    def debug(self) -> bool:
        return bool(self._get("debug", False))

    @property
    def json_output(self) -> bool:
        return bool(self._get("json", False))

    @property
    def i_max(self) -> int:
        return self._get("imax", DEFAULT_I_MAX)

    @property
    def n_max(self) -> int:
        return self._get("nmax", DEFAULT_N_MAX)

    @property
    def seed(self) -> int:
        return self._get("seed", DEFAULT_SEED)

    @property
    def samples(self) -> int:
        return self._get("samples", DEFAULT_SAMPLES)

    @property
    def vertex(self) -> Optional[tuple[int, int]]:
        vertex = self._get("vertex")
        return tuple(vertex) if vertex is not None else None

    @property
    def cycle_index(self) -> Optional[int]:
        return self._get("n")

    @property
    def output(self) -> Optional[Path]:
        output = self._get("out")
        return Path(output) if output is not None else None
