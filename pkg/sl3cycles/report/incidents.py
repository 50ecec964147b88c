import datetime
import platform
import threading
from dataclasses import dataclass
from typing import Optional

import distro
import pytz
import sympy

from sl3cycles import __version__ as Sl3CyclesVersion
from sl3cycles.report.status import LogLevel

LOG_LEVEL_MAP = {
    LogLevel.DEBUG: "DEBUG",
    LogLevel.INFO: "INFO",
    LogLevel.WARNING: "WARN",
    LogLevel.ERROR: "ERROR",
}


@dataclass(frozen=True)
class Incident:
    component: str
    level: LogLevel
    message: str
    exception_type: Optional[str]
    timestamp: str

    def __str__(self) -> str:
        exception = f" ({self.exception_type})" if self.exception_type else ""
        return f"[{LOG_LEVEL_MAP[self.level]}] {self.component}: {self.message}{exception}"


_lock = threading.Lock()
_incidents: list[Incident] = []


def now() -> str:
    return datetime.datetime.now(pytz.utc).isoformat("T")


def record(component: str, kind: LogLevel, message: str, exception: Optional[Exception]):
    if not component or not kind or not message:
        raise ValueError("component, kind and message are mandatory")

    exception_type = exception.__class__.__name__ if exception else None
    incident = Incident(component, kind, message, exception_type, now())
    with _lock:
        _incidents.append(incident)


def drain() -> list[Incident]:
    with _lock:
        drained = list(_incidents)
        _incidents.clear()
    return drained


def environment() -> dict[str, str]:
    return {
        "version": Sl3CyclesVersion,
        "python_version": platform.python_version(),
        "sympy_version": sympy.__version__,
        "distro": distro.name(),
        "distro_version": distro.version(),
        "timestamp": now(),
    }
