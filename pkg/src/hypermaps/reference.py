"""Published counts of rooted hypermaps for r = 1..7 and r = 13.

Rows are ``(v, e, f, count)`` with ``v <= e <= f``, listed in the order of
the printed tables (by faces, then edges, then vertices).
"""
from __future__ import annotations

from typing import Dict, Tuple

from hypermaps.interpolate import CoeffTable

__all__ = ["APPENDIX_TABLES", "REFERENCE_DARTS", "reference_table"]

APPENDIX_TABLES: Dict[int, Tuple[Tuple[int, int, int, int], ...]] = {
    1: (
        (1, 1, 1, 1),
    ),
    2: (
        (1, 1, 2, 1),
    ),
    3: (
        (1, 1, 1, 1),
        (1, 2, 2, 3),
        (1, 1, 3, 1),
    ),
    4: (
        (1, 1, 2, 5),
        (2, 2, 2, 17),
        (1, 2, 3, 6),
        (1, 1, 4, 1),
    ),
    5: (
        (1, 1, 1, 8),
        (1, 2, 2, 40),
        (1, 1, 3, 15),
        (2, 2, 3, 55),
        (1, 3, 3, 20),
        (1, 2, 4, 10),
        (1, 1, 5, 1),
    ),
    6: (
        (1, 1, 2, 84),
        (2, 2, 2, 456),
        (1, 2, 3, 175),
        (2, 3, 3, 262),
        (1, 1, 4, 35),
        (2, 2, 4, 135),
        (1, 3, 4, 50),
        (1, 2, 5, 15),
        (1, 1, 6, 1),
    ),
    7: (
        (1, 1, 1, 180),
        (1, 2, 2, 1183),
        (1, 1, 3, 469),
        (2, 2, 3, 2695),
        (1, 3, 3, 1050),
        (3, 3, 3, 1694),
        (1, 2, 4, 560),
        (2, 3, 4, 889),
        (1, 4, 4, 175),
        (1, 1, 5, 70),
        (2, 2, 5, 280),
        (1, 3, 5, 105),
        (1, 2, 6, 21),
        (1, 1, 7, 1),
    ),
    13: (
        (1, 1, 1, 68428800),
        (1, 2, 2, 686597184),
        (1, 1, 3, 292271616),
        (2, 2, 3, 2820651496),
        (1, 3, 3, 1194737544),
        (3, 3, 3, 4623070842),
        (1, 2, 4, 687238552),
        (2, 3, 4, 2646424729),
        (1, 4, 4, 636184120),
        (3, 4, 4, 2239280420),
        (1, 1, 5, 109425316),
        (2, 2, 5, 988043771),
        (1, 3, 5, 414918075),
        (3, 3, 5, 1453414846),
        (2, 4, 5, 824962502),
        (4, 4, 5, 582408775),
        (1, 5, 5, 125855730),
        (3, 5, 5, 374805834),
        (5, 5, 5, 64013222),
        (1, 2, 6, 108452916),
        (2, 3, 6, 374127663),
        (1, 4, 6, 87933846),
        (3, 4, 6, 260619268),
        (2, 5, 6, 93880696),
        (4, 5, 6, 44136820),
        (1, 6, 6, 9513504),
        (3, 6, 6, 19315114),
        (1, 1, 7, 8691683),
        (2, 2, 7, 70367479),
        (1, 3, 7, 29135106),
        (3, 3, 7, 85050784),
        (2, 4, 7, 47604648),
        (4, 4, 7, 22089600),
        (1, 5, 7, 6936930),
        (3, 5, 7, 14019928),
        (2, 6, 7, 3356522),
        (1, 7, 7, 226512),
        (1, 2, 8, 4114110),
        (2, 3, 8, 11674663),
        (1, 4, 8, 2642640),
        (3, 4, 8, 5264545),
        (2, 5, 8, 1827683),
        (1, 6, 8, 169884),
        (1, 1, 9, 183183),
        (2, 2, 9, 1225653),
        (1, 3, 9, 495495),
        (3, 3, 9, 960960),
        (2, 4, 9, 525525),
        (1, 5, 9, 70785),
        (1, 2, 10, 40040),
        (2, 3, 10, 74217),
        (1, 4, 10, 15730),
        (1, 1, 11, 1001),
        (2, 2, 11, 4433),
        (1, 3, 11, 1716),
        (1, 2, 12, 78),
        (1, 1, 13, 1),
    ),
}

REFERENCE_DARTS = tuple(sorted(APPENDIX_TABLES))


def reference_table(r: int) -> CoeffTable:
    """Reference table for `r`; raises ``KeyError`` when none is embedded."""
    rows = APPENDIX_TABLES[r]
    return CoeffTable(r, {(v, e, f): n for v, e, f, n in rows})
