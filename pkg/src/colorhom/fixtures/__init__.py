"""Small problem files shipped with the package."""

from __future__ import annotations

from importlib import resources

from colorhom.spec_io import ProblemSpec, parse_spec

NAMES = ("abelian_odd_1", "abelian_odd_2", "heis3", "glcolor", "heis_z3")


def fixture_text(name: str) -> str:
    if name not in NAMES:
        raise KeyError(f"unknown fixture {name!r}; available: {', '.join(NAMES)}")
    return resources.files(__name__).joinpath(f"{name}.json").read_text(encoding="utf-8")


def fixture_path(name: str):
    fixture_text(name)
    return resources.files(__name__).joinpath(f"{name}.json")


def load_fixture(name: str) -> ProblemSpec:
    return parse_spec(fixture_text(name))
