"""Error types raised across hooklab"""


class HooklabError(Exception):
    def __init__(self, message, data=None):
        super().__init__(message)
        self.data = data or {}


class ShapeError(HooklabError):
    pass


class TableauError(HooklabError):
    pass


class PoleError(HooklabError, ZeroDivisionError):
    """A denominator vanished at the evaluation point; callers resample."""


class ResampleExhausted(HooklabError):
    pass


class PathError(HooklabError):
    pass


class PermutationError(HooklabError):
    pass


class UnsupportedMode(HooklabError):
    pass


class ConfigError(HooklabError):
    pass
