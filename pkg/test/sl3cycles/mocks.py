import argparse

from sl3cycles.settings import DEFAULT_I_MAX, DEFAULT_N_MAX, DEFAULT_SAMPLES, DEFAULT_SEED


def arguments(command: str = "verify", **overrides) -> argparse.Namespace:
    values = {
        "command": command,
        "debug": False,
        "json": False,
        "imax": DEFAULT_I_MAX,
        "nmax": DEFAULT_N_MAX,
        "seed": DEFAULT_SEED,
        "samples": DEFAULT_SAMPLES,
    }
    values.update(overrides)
    return argparse.Namespace(**values)


class ApplicationSettingsMock:
    def __init__(self, **overrides):
        self.i_max = overrides.get("i_max", 9)
        self.n_max = overrides.get("n_max", 3)
        self.seed = overrides.get("seed", 0)
        self.samples = overrides.get("samples", 4)
