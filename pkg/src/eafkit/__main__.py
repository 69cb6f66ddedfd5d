"""Allow ``python -m eafkit`` as an alias for the console script."""

from .cli import run

if __name__ == "__main__":
    raise SystemExit(run())
