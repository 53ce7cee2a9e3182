import os
import sys


def debug_enabled() -> bool:
    return os.getenv("HOOKLAB_DEBUG", "").lower() in ("1", "true", "yes", "on")


def warn(*args):
    """Print warning to stderr"""
    print(*args, file=sys.stderr)


def debug(*args):
    if debug_enabled():
        print(*args, file=sys.stderr)
