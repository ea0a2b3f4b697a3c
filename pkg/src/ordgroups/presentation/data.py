"""Presentations shipped with the package, loadable by name or file name."""
from __future__ import annotations

from importlib import resources
from pathlib import Path

from ..errors import MalformedPresentation
from .words import Presentation

_PACKAGE = "ordgroups.data"


def bundled_names() -> list:
    return sorted(p.name for p in resources.files(_PACKAGE).iterdir() if p.name.endswith(".pres"))


def bundled(name: str) -> Presentation:
    """Load a bundled presentation; ``name`` may omit the ``.pres`` suffix."""
    fname = name if name.endswith(".pres") else name + ".pres"
    ref = resources.files(_PACKAGE).joinpath(fname)
    if not ref.is_file():
        raise MalformedPresentation(f"no bundled presentation {name!r}; available: {bundled_names()}")
    return Presentation.parse(ref.read_text())


def load_presentation(path_or_name) -> Presentation:
    """Read a .pres file, falling back to the bundled copy of the same name."""
    path = Path(path_or_name)
    if path.is_file():
        return Presentation.load(path)
    return bundled(path.name)
