"""Build every bundled empty-ply drawing, verify it and write SVG pictures.

Usage: python demos/constructions_tour.py [output-dir]
"""
import sys
from pathlib import Path

from emptyply.constructions import bundled_empty_ply, nested_triangles, orthogonal_tree
from emptyply.plycore import count_crossings, is_empty_ply, lemma_report, ply, quarter_shped
from emptyply.svg import render

out = Path(sys.argv[1] if len(sys.argv) > 1 else "demo_svg")
out.mkdir(exist_ok=True)

for name, d in bundled_empty_ply().items():
    root = 0 if d.graph.is_tree() else None
    rep = lemma_report(d, tree_root=root)
    stubs = quarter_shped(d)[1]
    print(f"{name:28s} n={d.n:5d} ply={ply(d)[0]} empty={bool(is_empty_ply(d))} "
          f"checks={'all pass' if rep.all_ok else 'FAIL'} stub_crossings={stubs}")
    (out / f"{name}.svg").write_text(render(d, title=name))

# the three nested-triangle layouts side by side in numbers
for variant in ("natural", "planar_ply4", "nonplanar_ply5"):
    d = nested_triangles(8, variant)
    print(f"nested_triangles(8, {variant}): ply={ply(d)[0]} crossings={count_crossings(d)}")
    (out / f"nested_{variant}.svg").write_text(render(d, title=variant))

# ternary orthogonal trees break down for every shrink factor
for q in (0.3, 0.5, 0.7, 0.9):
    res = is_empty_ply(orthogonal_tree(3, q, 40))
    print(f"ternary tree q={q}: empty={res.empty} witness={res.witness}")
print("pictures in", out)
