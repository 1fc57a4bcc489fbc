"""Embedded golden fixtures (no network, no external databases)."""
from importlib import resources

from .racktable import RackTable, parse_rack_file

SMALLQUANDLE_12_4 = "smallquandle-12-4.perm"


def fixture_text(name: str = SMALLQUANDLE_12_4) -> str:
    return (resources.files("quandlekit") / "data" / name).read_text()


def smallquandle_12_4() -> RackTable:
    """The 12-element connected quandle SmallQuandle(12,4) from Rig."""
    return parse_rack_file(fixture_text())
