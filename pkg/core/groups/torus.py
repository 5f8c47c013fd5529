"""Recognise the torus-knot relator x^p y^-q among simplified presentations."""

from typing import NamedTuple, Optional

from core.groups.presentation import Presentation
from core.groups.words import syllables
from core.utils.log import get_logger

logger = get_logger("TORUS")


class TorusMatch(NamedTuple):
    p: int
    q: int
    x: str
    y: str


def match_torus_relator(presentation: Presentation) -> Optional[TorusMatch]:
    """
    (p, q) with p < q when the presentation is <x, y | w> and w is cyclically
    x^a y^b with {|a|, |b|} = {p, q}, 2 <= p < q. Coprimality is not checked;
    the caller decides whether a non-coprime pair still matters.
    """
    if len(presentation.generators) != 2 or len(presentation.relators) != 1:
        return None
    runs = syllables(presentation.relators[0], cyclic=True)
    if len(runs) != 2 or runs[0][0] == runs[1][0]:
        return None
    (g1, e1), (g2, e2) = runs
    if abs(e1) == abs(e2):
        return None
    if abs(e1) > abs(e2):
        (g1, e1), (g2, e2) = (g2, e2), (g1, e1)
    p, q = abs(e1), abs(e2)
    if p < 2:
        return None
    names = presentation.generators
    logger.debug("matched torus relator with (p, q) = (%d, %d)", p, q)
    return TorusMatch(p, q, names[g1], names[g2])
