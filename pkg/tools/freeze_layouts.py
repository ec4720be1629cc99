"""Regenerate the frozen small-layout tables shipped in emptyply/data."""
from pathlib import Path

from emptyply.constructions import SMALL_LAYOUTS, lattice_layout, write_table
from emptyply.plycore import is_empty_ply

DATA = Path(__file__).resolve().parents[1] / "src" / "emptyply" / "data"

for name in SMALL_LAYOUTS:
    assert is_empty_ply(lattice_layout(name)), name
    write_table(name, DATA / f"{name}.json")
    print("wrote", DATA / f"{name}.json")
