"""Stable stems ``π^s(0..10)`` with named generators, and the maps ``x ↦ x∘η``.

Images the tables leave open (the action of η on stem 8, and on ν³ and ηε
in stem 9) are stored as unknowns in a :class:`PartialHom`; anything
computed from them downstream is reported as indeterminate.
"""

from __future__ import annotations

from functools import lru_cache

from .abelian import FinAbGroup, GroupHom, PartialHom
from .errors import OutOfTableError

MAX_STEM = 10

# π^s(10) ≅ Z_6 has no single named generator here: η∘μ only has order 2.
_GROUPS: tuple[FinAbGroup, ...] = (
    FinAbGroup((0,), ("ι",)),
    FinAbGroup((2,), ("η",)),
    FinAbGroup((2,), ("η²",)),
    FinAbGroup((24,), ("ν",)),
    FinAbGroup(),
    FinAbGroup(),
    FinAbGroup((2,), ("ν²",)),
    FinAbGroup((240,), ("σ",)),
    FinAbGroup((2, 2), ("ν̄", "ε")),
    FinAbGroup((2, 2, 2), ("ν³", "μ", "ηε")),
    FinAbGroup((6,)),
)

# images of the domain generators under x ↦ x∘η; None marks an unknown image
_ETA_IMAGES: dict[int, list[list[int] | None]] = {
    0: [[1]],
    1: [[1]],
    2: [[12]],
    3: [[]],
    4: [],
    5: [],
    6: [[0]],
    7: [[1, 1]],
    8: [None, None],
    9: [None, [3], None],
}

ETA_LABELS = {
    0: "η", 1: "≅", 2: "⟨ (injective)", 3: "0", 4: "0", 5: "0",
    6: "0", 7: "ν̄ + ε", 8: "?", 9: "η∘μ",
}


def stem_group(m: int) -> FinAbGroup:
    """``π^s(m)`` for ``0 <= m <= 10``; negative stems are trivial."""
    if m < 0:
        return FinAbGroup()
    if m > MAX_STEM:
        raise OutOfTableError(f"π^s({m}) is beyond the table (m <= {MAX_STEM})")
    return _GROUPS[m]


@lru_cache(maxsize=None)
def eta_compose(m: int) -> GroupHom | PartialHom:
    """The homomorphism ``π^s(m) → π^s(m+1)``, ``x ↦ x∘η``."""
    if m < 0:
        return GroupHom.zero(FinAbGroup(), stem_group(m + 1))
    if m > MAX_STEM - 1:
        raise OutOfTableError(f"η-action on π^s({m}) lands beyond the table")
    dom, cod = stem_group(m), stem_group(m + 1)
    images = _ETA_IMAGES[m]
    if any(img is None for img in images):
        return PartialHom(dom, cod, tuple(None if i is None else tuple(i) for i in images),
                          note=f"η-action on π^s({m}) only partly known")
    return GroupHom.from_images(dom, cod, images)


def stem_table() -> dict:
    """JSON-ready dump of the groups and η-maps."""
    return {
        "groups": {str(m): stem_group(m).to_json() for m in range(MAX_STEM + 1)},
        "eta_maps": {str(m): {**eta_compose(m).to_json(), "label": ETA_LABELS[m]}
                     for m in range(MAX_STEM)},
    }
