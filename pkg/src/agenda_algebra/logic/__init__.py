"""Two-sorted term logic, frames, conditions, and correspondence checks."""

from . import conditions, correspondence, fixtures, frames, terms  # noqa: F401
