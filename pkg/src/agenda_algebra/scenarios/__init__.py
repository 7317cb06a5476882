"""Bundled scenario documents for the two worked case studies."""

from importlib import resources

BUNDLED = (
    "hiring_s1",
    "hiring_s2",
    "hiring_betty_variant",
    "car",
)


def scenario_text(name):
    """Raw JSON text of a bundled scenario."""
    return (
        resources.files(__package__).joinpath(f"{name}.json").read_text()
    )
