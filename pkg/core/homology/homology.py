"""
Integer simplicial homology of Delta-complexes.

H_n = ker(d_n) / im(d_{n+1}); the free rank comes from rank-nullity on the
boundary matrices and the torsion from the Smith diagonal of d_{n+1}.
"""

from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from core.algebra.smith import IntegerMatrix, smith_normal_form
from core.complex.delta_complex import DeltaComplex, require_valid
from core.errors import PreconditionError


@dataclass(frozen=True)
class HomologyGroup:
    betti: int
    torsion: Tuple[int, ...] = field(default_factory=tuple)

    def __str__(self) -> str:
        parts = []
        if self.betti == 1:
            parts.append("Z")
        elif self.betti > 1:
            parts.append(f"Z^{self.betti}")
        parts.extend(f"Z/{t}" for t in self.torsion)
        return " + ".join(parts) if parts else "0"

    def to_json(self) -> Dict[str, object]:
        return {"betti": self.betti, "torsion": list(self.torsion)}


def boundary_matrix(complex_: DeltaComplex, n: int) -> IntegerMatrix:
    """
    Rows are (n-1)-cells, columns n-cells; entry (tau, sigma) sums (-1)^i over
    the slots i with face_i(sigma) = tau.
    """
    if not 1 <= n <= complex_.dimension:
        raise PreconditionError(f"boundary_matrix needs 1 <= n <= {complex_.dimension}, got {n}")
    rows, cols = complex_.cells_per_dim[n - 1], complex_.cells_per_dim[n]
    entries = [[0] * cols for _ in range(rows)]
    for sigma in complex_.cells(n):
        for slot, tau in enumerate(complex_.faces_of(sigma)):
            entries[tau.index][sigma.index] += (-1) ** slot
    return IntegerMatrix.from_rows(entries, cols=cols)


def _boundary_or_zero(complex_: DeltaComplex, n: int) -> IntegerMatrix:
    """d_n, with the zero maps at both ends of the chain complex."""
    if 1 <= n <= complex_.dimension:
        return boundary_matrix(complex_, n)
    rows = complex_.cells_per_dim[n - 1] if 0 <= n - 1 <= complex_.dimension else 0
    cols = complex_.cells_per_dim[n] if 0 <= n <= complex_.dimension else 0
    return IntegerMatrix.zeros(rows, cols)


def homology(complex_: DeltaComplex) -> List[HomologyGroup]:
    """H_0 .. H_top as (betti, torsion) pairs."""
    require_valid(complex_, "homology")
    top = complex_.dimension
    snf = [smith_normal_form(_boundary_or_zero(complex_, n)) for n in range(top + 2)]
    groups = []
    for n in range(top + 1):
        kernel = complex_.cells_per_dim[n] - snf[n].rank
        incoming = snf[n + 1]
        torsion = tuple(d for d in incoming.diagonal if d > 1)
        groups.append(HomologyGroup(betti=kernel - incoming.rank, torsion=torsion))
    return groups


def boundary_squared_is_zero(complex_: DeltaComplex) -> bool:
    for n in range(2, complex_.dimension + 1):
        if not (boundary_matrix(complex_, n - 1) @ boundary_matrix(complex_, n)).is_zero():
            return False
    return True


def euler_from_betti(groups: List[HomologyGroup]) -> int:
    return sum((-1) ** n * group.betti for n, group in enumerate(groups))


def homology_to_json(groups: List[HomologyGroup]) -> Dict[str, Dict[str, object]]:
    return {str(n): group.to_json() for n, group in enumerate(groups)}


def homology_signature(groups: List[HomologyGroup]) -> List[str]:
    """["Z", "0", "0", "Z"] style summary used in reports and tests."""
    return [str(group) for group in groups]
