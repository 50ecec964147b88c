import functools
import logging
import time

log = logging.getLogger("timing")


def timing(f):
    @functools.wraps(f)
    def wrap(*args, **kwargs):
        time1 = time.perf_counter()
        ret = f(*args, **kwargs)
        time2 = time.perf_counter()
        log.debug("%s function took %.3f ms", f.__name__, (time2 - time1) * 1000.0)

        return ret

    return wrap


class Stopwatch:
    """Context manager measuring whole milliseconds."""

    def __init__(self):
        self.elapsed_ms = 0
        self._start = 0

    def __enter__(self):
        self._start = time.perf_counter_ns()
        return self

    def __exit__(self, *exc_info):
        self.elapsed_ms = (time.perf_counter_ns() - self._start) // 1_000_000
        return False
