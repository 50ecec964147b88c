import traceback

from sl3cycles.report.incidents import record
from sl3cycles.report.status import LogLevel


def info(component: str, message: str):
    record(component, LogLevel.INFO, message, None)


def warning(component: str, message: str):
    record(component, LogLevel.WARNING, message, None)


def error(component: str, message: str):
    record(component, LogLevel.ERROR, message, None)


def exception(component: str, exception: Exception, message=None):
    if not message:
        message = traceback.format_exc()

    record(component, LogLevel.ERROR, message, exception)
