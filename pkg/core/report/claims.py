"""
Claim chain: every step of the argument that Sub_3(S^1) is the 3-sphere and
that the subspace Sub_1(S^1) inside it is the trefoil, checked against the
built spaces.

Each claim is a function returning (passed, evidence). Claims run in order
and independently, so a broken builder fails the claims that depend on it
and leaves the rest alone.
"""

import random
from dataclasses import dataclass, field
from enum import Enum
from itertools import permutations
from typing import Any, Callable, Dict, List, Mapping, Optional, Tuple

from core.complex.delta_complex import (
    DeltaComplex,
    boundary_subcomplex,
    closure_subcomplex,
    connected_components,
    euler_characteristic,
    find_cell,
)
from core.config import settings
from core.errors import TopologyError
from core.fundamental.fundamental_group import presentation
from core.groups.presentation import Presentation, abelianization
from core.groups.tietze import Verdict, is_trivial_certified, simplify
from core.groups.torus import match_torus_relator
from core.groups.trefoil import equal_in_trefoil_group, trefoil_normal_form
from core.groups.words import Word, cyclic_key, word_from_string
from core.homology.homology import homology, homology_signature
from core.knots.geometry import KnotCurveConfig, KnotVariant, knot_report
from core.spaces.builders import BUILDERS, SpaceName, Space
from core.utils.log import get_logger

logger = get_logger("REPORT")

Evidence = Dict[str, Any]
CheckResult = Tuple[bool, Evidence]


class ClaimStatus(str, Enum):
    PASS = "PASS"
    FAIL = "FAIL"


@dataclass
class Claim:
    name: str
    claim: str
    status: ClaimStatus
    evidence: Evidence = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status is ClaimStatus.PASS

    def to_json(self) -> Dict[str, Any]:
        return {"name": self.name, "claim": self.claim, "status": self.status.value, "evidence": self.evidence}

    def line(self) -> str:
        return f"{self.status.value}  {self.name}: {self.claim}"


class _Spaces:
    """Builds each space at most once per report."""

    def __init__(self, builders: Mapping[SpaceName, Callable[[], Space]]):
        self.builders = builders
        self.cache: Dict[SpaceName, Space] = {}

    def __getitem__(self, name: SpaceName) -> Space:
        if name not in self.cache:
            self.cache[name] = self.builders[name]()
        return self.cache[name]

    def complexes(self) -> Dict[SpaceName, DeltaComplex]:
        return {name: self[name] for name in self.builders if isinstance(self[name], DeltaComplex)}


def _relators_match(found: Presentation, names: Tuple[str, ...], expected: List[str]) -> bool:
    """Same relators up to generator renaming, relator order, cyclic permutation and inversion."""
    if len(found.generators) != len(names):
        return False
    target = sorted(cyclic_key(r) for r in found.relators)
    for order in permutations(found.generators):
        candidate = Presentation.from_strings(found.generators, [_rename(e, names, order) for e in expected])
        if sorted(cyclic_key(r) for r in candidate.relators) == target:
            return True
    return False


def _rename(text: str, old: Tuple[str, ...], new: Tuple[str, ...]) -> str:
    mapping = dict(zip(old, new))
    out = []
    for token in text.split():
        name, sep, power = token.partition("^")
        out.append(mapping[name] + sep + power)
    return " ".join(out)


def _mobius_homology(spaces: _Spaces) -> CheckResult:
    signature = homology_signature(homology(spaces[SpaceName.SUB2_CIRCLE]))
    return signature == ["Z", "Z", "0"], {"homology": signature}


def _mobius_boundary(spaces: _Spaces) -> CheckResult:
    mobius = spaces[SpaceName.SUB2_CIRCLE]
    boundary = boundary_subcomplex(mobius)
    signature = homology_signature(homology(boundary))
    edges = [boundary.name(e) for e in boundary.cells(1)]
    ok = list(boundary.cells_per_dim) == [1, 1] and signature == ["Z", "Z"]
    return ok, {"cells": list(boundary.cells_per_dim), "edges": edges, "homology": signature}


def _mobius_degree_two(spaces: _Spaces) -> CheckResult:
    mobius = spaces[SpaceName.SUB2_CIRCLE]
    boundary = boundary_subcomplex(mobius)
    trace = simplify(presentation(mobius))
    edge = boundary.name(boundary.cells(1)[0]) if boundary.cells_per_dim[1:] == (1,) else None
    image = trace.substitutions.get(edge) if edge else None
    ok = (
        image is not None
        and len(trace.presentation.generators) == 1
        and not trace.presentation.relators
        and abs(image.exponent_sum(0)) == 2
        and len(image) == 2
    )
    return ok, {"boundary_edge": edge, "substitutions": trace.substitution_strings(),
                "simplified": str(trace.presentation)}


def _ball(spaces: _Spaces) -> CheckResult:
    ball = spaces[SpaceName.SUB3_INTERVAL]
    signature = homology_signature(homology(ball))
    euler = euler_characteristic(ball)
    return signature == ["Z", "0", "0", "0"] and euler == 1, {
        "cells": list(ball.cells_per_dim), "homology": signature, "euler": euler}


def _sub3_circle_pi1(spaces: _Spaces) -> CheckResult:
    sphere = spaces[SpaceName.SUB3_CIRCLE]
    found = presentation(sphere)
    certificate = is_trivial_certified(found)
    ok = (_relators_match(found, ("α", "β"), ["α", "α^2 β^-1"])
          and certificate.verdict is Verdict.TRIVIAL_WITH_TRACE)
    return ok, {"presentation": str(found), "verdict": certificate.verdict.value,
                "steps": certificate.trace.steps}


def _s3_homology(spaces: _Spaces) -> CheckResult:
    sphere = spaces[SpaceName.SUB3_CIRCLE]
    signature = homology_signature(homology(sphere))
    euler = euler_characteristic(sphere)
    return signature == ["Z", "0", "0", "Z"] and euler == 0, {
        "cells": list(sphere.cells_per_dim), "homology": signature, "euler": euler}


def _s2_x_s1_rejected(spaces: _Spaces) -> CheckResult:
    sphere = spaces[SpaceName.SUB3_CIRCLE]
    invariants = abelianization(presentation(sphere))
    signature = homology_signature(homology(sphere))
    ok = invariants.rank == 0 and signature != ["Z", "Z", "Z", "Z"]
    return ok, {"abelian_rank": invariants.rank, "required_for_s2_x_s1": 1, "homology": signature}


def _mobius_inside_sphere(spaces: _Spaces) -> CheckResult:
    """The face class ABD = ACD spans a Moebius band whose boundary is the edge AD."""
    sphere = spaces[SpaceName.SUB3_CIRCLE]
    face = find_cell(sphere, "ABD")
    knot_edge = sphere.face(face, 1)  # AD, opposite B
    band = closure_subcomplex(sphere, [face])
    boundary = boundary_subcomplex(band)
    signature = homology_signature(homology(band))
    boundary_edges = [boundary.name(e) for e in boundary.cells(1)]
    ok = (signature == ["Z", "Z", "0"]
          and list(boundary.cells_per_dim) == [1, 1]
          and boundary_edges == [sphere.name(knot_edge)])
    return ok, {"band_cells": list(band.cells_per_dim), "homology": signature,
                "boundary_edges": boundary_edges, "knot_edge": sphere.name(knot_edge)}


def _knot_group(spaces: _Spaces) -> CheckResult:
    trace = simplify(spaces[SpaceName.TREFOIL_COMPLEMENT])
    match = match_torus_relator(trace.presentation)
    ok = match is not None and (match.p, match.q) == (2, 3)
    return ok, {"simplified": str(trace.presentation),
                "torus": [match.p, match.q] if match else None,
                "substitutions": trace.substitution_strings()}


def _braid_relation(spaces: _Spaces, conjugates: int = 100, seed: int = 2) -> CheckResult:
    names = ("x", "y")
    s = word_from_string("y^-1 x", names)
    t = word_from_string("x^-1 y^2", names)
    relator = word_from_string("x^2 y^-3", names)
    braid = equal_in_trefoil_group(s * t * s, t * s * t)

    rng = random.Random(seed)
    trivial = trefoil_normal_form(relator).is_identity()
    for _ in range(conjugates):
        w = Word.of(*[(rng.randrange(2), rng.choice((1, -1))) for _ in range(rng.randrange(1, 9))])
        trivial = trivial and trefoil_normal_form(w * relator * w.inverse()).is_identity()
    return braid and trivial, {"sts_equals_tst": braid, "relator_conjugates_trivial": trivial,
                               "conjugates": conjugates}


def _knot_geometry(spaces: _Spaces) -> CheckResult:
    reports = {v.value: knot_report(KnotCurveConfig(v, settings.report_knot_samples)) for v in KnotVariant}
    return all(r["ok"] for r in reports.values()), reports


def _h1_equals_abelianized_pi1(spaces: _Spaces) -> CheckResult:
    rows = {}
    ok = True
    for name, complex_ in spaces.complexes().items():
        if connected_components(complex_) != 1:
            continue
        h1 = homology(complex_)[1] if complex_.dimension >= 1 else None
        invariants = abelianization(presentation(complex_))
        same = h1 is not None and (h1.betti, h1.torsion) == (invariants.rank, invariants.torsion)
        rows[name.value] = {"H1": str(h1), "abelian_rank": invariants.rank,
                            "abelian_torsion": list(invariants.torsion), "equal": same}
        ok = ok and same
    return ok, rows


CLAIMS: List[Tuple[str, str, Callable[[_Spaces], CheckResult]]] = [
    ("mobius-homology", "Sub_2(S^1) has the homology of the Moebius band", _mobius_homology),
    ("mobius-boundary", "the boundary of Sub_2(S^1) is a single circle", _mobius_boundary),
    ("mobius-degree-two", "the boundary circle wraps twice around the core", _mobius_degree_two),
    ("sub3-interval-ball", "Sub_3(I) is a ball: homology of a point and Euler characteristic 1", _ball),
    ("sub3-circle-pi1", "pi_1(Sub_3(S^1)) = <alpha, beta | alpha, alpha^2 beta^-1> is trivial", _sub3_circle_pi1),
    ("sub3-circle-homology", "Sub_3(S^1) has the homology of S^3", _s3_homology),
    ("s2-x-s1-rejected", "Sub_3(S^1) is not S^2 x S^1: its abelianized pi_1 has rank 0", _s2_x_s1_rejected),
    ("sub2-inside-sub3", "Sub_2(S^1) sits in Sub_3(S^1) as a Moebius band bounded by Sub_1(S^1)",
     _mobius_inside_sphere),
    ("knot-group", "the complement of Sub_1(S^1) has group <b, d | b^2 = d^3>", _knot_group),
    ("braid-relation", "<x, y | x^2 = y^3> satisfies the braid relation sts = tst", _braid_relation),
    ("knot-geometry", "t -> (e^{4 pi i t}, e^{6 pi i t}) is an embedded (2,3) curve on S^3", _knot_geometry),
    ("h1-abelianized-pi1", "H_1 equals the abelianized pi_1 for every built complex", _h1_equals_abelianized_pi1),
]


def run_claims(builders: Optional[Mapping[SpaceName, Callable[[], Space]]] = None) -> List[Claim]:
    """
    Evaluate every claim.

    Args:
        builders: Replacement builders by space name, merged over the
            registry; tests pass a mis-glued Sub_3(S^1) here.

    Returns:
        One Claim per entry of CLAIMS, in order.
    """
    merged = dict(BUILDERS)
    merged.update(builders or {})
    spaces = _Spaces(merged)

    results = []
    for name, text, check in CLAIMS:
        try:
            ok, evidence = check(spaces)
        except (TopologyError, KeyError, IndexError) as e:
            ok, evidence = False, {"error": f"{type(e).__name__}: {e}"}
        status = ClaimStatus.PASS if ok else ClaimStatus.FAIL
        logger.info("%s %s", status.value, name)
        results.append(Claim(name, text, status, evidence))
    return results
