from enum import Enum


class LogLevel(Enum):
    DEBUG = 1
    INFO = 2
    WARNING = 3
    ERROR = 4


class CheckStatus(Enum):
    PASS = "pass"
    FAIL = "fail"
    FLAGGED = "flagged"
