"""Allow running the CLI as ``python -m ngcost``."""

from .cli import entry

entry()
