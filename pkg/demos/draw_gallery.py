"""Write SVG drawings of a few torus knot petal diagrams.

    python demos/draw_gallery.py [output_dir]
"""

import sys
from pathlib import Path

from petalknot.constructions import theorem1_petal_permutation, surgery_plus_petal_permutation
from petalknot.render import RenderSpec, render_svg

GALLERY = {
    "trefoil": lambda: theorem1_petal_permutation(2, 3),
    "T3_4": lambda: theorem1_petal_permutation(3, 4),
    "T3_5": lambda: theorem1_petal_permutation(3, 5),
    "T3_7": lambda: surgery_plus_petal_permutation(3, 2),
}


def main(out_dir="gallery"):
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    for name, build in GALLERY.items():
        p = build()
        for style in ("petal-star", "grid"):
            path = out / f"{name}-{style}.svg"
            path.write_text(render_svg(RenderSpec(p, style, title=f"{name} {p}")), encoding="utf-8")
            print(f"{path}  ({len(p)} petals)")


if __name__ == "__main__":
    main(*sys.argv[1:])
