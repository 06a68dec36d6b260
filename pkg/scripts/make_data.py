#!/usr/bin/env python3
"""Regenerate the shipped data directory from the corpus builders.

Facts packs under data/facts are hand-authored (they carry citations) and
are left untouched.  Everything else - triangulations, ring files, branching
diagrams, and the engineered non-resolvable measure path - is rewritten so
that files and in-memory fixtures cannot drift apart.
"""

from pathlib import Path

from intertwine import corpus
from intertwine.exact import rational
from intertwine.fields import RATIONALS
from intertwine.rings import save_ring
from intertwine.simplicial import save_complex
from intertwine.spaces import LINE
from intertwine.strands import save_diagram, save_measure_path


def main() -> None:
    root = Path(__file__).resolve().parent.parent / "data"
    (root / "complexes").mkdir(parents=True, exist_ok=True)
    (root / "rings").mkdir(parents=True, exist_ok=True)
    (root / "diagrams").mkdir(parents=True, exist_ok=True)

    for K in corpus.all_complexes():
        save_complex(K, root / "complexes" / f"{K.name.lower()}.cx")
        print("complex", K.name)

    rings = [
        corpus.product_of_spheres_ring("S2xS2", 2, 2, RATIONALS),
        corpus.product_of_spheres_ring("S3xS3", 3, 3, RATIONALS),
        corpus.cp2_ring(RATIONALS),
    ]
    for A in rings:
        save_ring(A, root / "rings" / f"{A.name.lower()}.ring")
        print("ring", A.name)

    for d in corpus.all_diagrams():
        save_diagram(d, root / "diagrams" / f"{d.name}.bd")
        print("diagram", d.name)

    samples = corpus.non_resolvable_sample_path(rational(1, 100))
    save_measure_path(
        "nonresolvable", LINE, samples, root / "diagrams" / "nonresolvable.mp"
    )
    print("measure path nonresolvable")


if __name__ == "__main__":
    main()
