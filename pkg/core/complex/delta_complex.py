"""
Delta-complexes: simplices with ordered vertices whose faces may be identified.

A complex stores, for every n-cell with n >= 1, the ordered tuple of its n+1
faces; slot i is the face opposite vertex i. Complexes are immutable and every
operation here is a pure function.
"""

from dataclasses import dataclass, field
from itertools import combinations
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Set, Tuple, Union

from core.errors import (
    ComplexConstructionError,
    InvalidComplexError,
    NonOrderPreservingGluingError,
    PreconditionError,
    QuotientInconsistencyError,
)
from core.utils.log import get_logger

logger = get_logger("QUOTIENT")

MAX_DIM = 3


@dataclass(frozen=True, order=True)
class CellId:
    dim: int
    index: int

    def __repr__(self) -> str:
        return f"CellId({self.dim},{self.index})"


FaceRef = Union[CellId, Tuple[int, int], int]


@dataclass(frozen=True)
class DeltaComplex:
    """
    cells_per_dim[n] is the number of n-cells.
    faces[n][k] is the face tuple of cell (n, k); faces[0] is empty per vertex.
    labels[n][k] is an optional human-readable name.
    """
    cells_per_dim: Tuple[int, ...]
    faces: Tuple[Tuple[Tuple[CellId, ...], ...], ...]
    labels: Tuple[Tuple[Optional[str], ...], ...]

    @property
    def dimension(self) -> int:
        """Top dimension; -1 for the empty complex."""
        return len(self.cells_per_dim) - 1

    def cells(self, dim: int) -> List[CellId]:
        if dim < 0 or dim > self.dimension:
            return []
        return [CellId(dim, k) for k in range(self.cells_per_dim[dim])]

    def all_cells(self) -> List[CellId]:
        return [cell for n in range(self.dimension + 1) for cell in self.cells(n)]

    def face(self, cell: CellId, slot: int) -> CellId:
        return self.faces[cell.dim][cell.index][slot]

    def faces_of(self, cell: CellId) -> Tuple[CellId, ...]:
        if cell.dim == 0:
            return ()
        return self.faces[cell.dim][cell.index]

    def label(self, cell: CellId) -> Optional[str]:
        return self.labels[cell.dim][cell.index]

    def name(self, cell: CellId) -> str:
        """Label if present, otherwise a positional name such as e3 or f0."""
        label = self.label(cell)
        if label:
            return label
        prefix = "vefT"[cell.dim] if cell.dim <= MAX_DIM else f"c{cell.dim}_"
        return f"{prefix}{cell.index}"

    def endpoints(self, edge: CellId) -> Tuple[CellId, CellId]:
        """(tail, head) = (face_1, face_0) of a 1-cell."""
        return self.face(edge, 1), self.face(edge, 0)


@dataclass
class IdentificationSpec:
    """Pairs of same-dimensional cells glued by the order-preserving vertex map."""
    pairs: List[Tuple[CellId, CellId]] = field(default_factory=list)

    def glue(self, source: CellId, target: CellId,
             vertex_map: Optional[Sequence[int]] = None) -> "IdentificationSpec":
        """
        Append a gluing. vertex_map[i] is the vertex of target that vertex i of
        source is sent to; only the identity correspondence is accepted.
        """
        if source.dim != target.dim:
            raise QuotientInconsistencyError(
                f"cannot glue {source} to {target}: dimensions differ")
        if vertex_map is not None:
            if list(vertex_map) != list(range(source.dim + 1)):
                raise NonOrderPreservingGluingError(
                    f"gluing {source} -> {target} with vertex map {list(vertex_map)} "
                    "does not preserve vertex order")
        self.pairs.append((source, target))
        return self


def _as_cell(ref: FaceRef, expected_dim: int) -> CellId:
    if isinstance(ref, CellId):
        return ref
    if isinstance(ref, int):
        return CellId(expected_dim, ref)
    dim, index = ref
    return CellId(int(dim), int(index))


def new_complex(
    cells_per_dim: Sequence[int],
    faces: Mapping[int, Sequence[Sequence[FaceRef]]],
    labels: Optional[Mapping[int, Sequence[Optional[str]]]] = None,
) -> DeltaComplex:
    """
    Build a complex from cell counts and face arrays.

    Face entries may be CellIds, (dim, index) pairs or bare indices into the
    dimension below. Shapes and face dimensions are checked here; the
    simplicial identities are left to validate().
    """
    counts = tuple(int(c) for c in cells_per_dim)
    if len(counts) - 1 > MAX_DIM:
        raise ComplexConstructionError(f"top dimension {len(counts) - 1} exceeds {MAX_DIM}")
    if any(c < 0 for c in counts):
        raise ComplexConstructionError(f"negative cell count in {list(counts)}")

    face_table: List[Tuple[Tuple[CellId, ...], ...]] = [tuple(() for _ in range(counts[0]))] if counts else []
    for n in range(1, len(counts)):
        rows = faces.get(n, faces.get(str(n), []))
        if len(rows) != counts[n]:
            raise ComplexConstructionError(
                f"dimension {n}: {counts[n]} cells declared but {len(rows)} face arrays given", dim=n)
        dim_rows = []
        for k, row in enumerate(rows):
            if len(row) != n + 1:
                raise ComplexConstructionError(
                    f"cell ({n},{k}) has {len(row)} face slots, expected {n + 1}", dim=n, index=k)
            cells = []
            for slot, ref in enumerate(row):
                cell = _as_cell(ref, n - 1)
                if cell.dim != n - 1:
                    raise ComplexConstructionError(
                        f"cell ({n},{k}) slot {slot} references a {cell.dim}-cell, expected dimension {n - 1}",
                        dim=n, index=k, slot=slot)
                if not 0 <= cell.index < counts[n - 1]:
                    raise ComplexConstructionError(
                        f"cell ({n},{k}) slot {slot} references missing cell {cell}",
                        dim=n, index=k, slot=slot)
                cells.append(cell)
            dim_rows.append(tuple(cells))
        face_table.append(tuple(dim_rows))

    label_table = []
    for n, count in enumerate(counts):
        given = list((labels or {}).get(n, (labels or {}).get(str(n), [])) or [])
        if len(given) > count:
            raise ComplexConstructionError(f"dimension {n}: {len(given)} labels for {count} cells", dim=n)
        label_table.append(tuple(given + [None] * (count - len(given))))

    return DeltaComplex(counts, tuple(face_table), tuple(label_table))


def validate(complex_: DeltaComplex) -> List[str]:
    """List every invariant violation; an empty list means the complex is valid."""
    violations: List[str] = []
    counts = complex_.cells_per_dim
    if complex_.dimension > MAX_DIM:
        violations.append(f"top dimension {complex_.dimension} exceeds {MAX_DIM}")
    if len(complex_.faces) != len(counts) or len(complex_.labels) != len(counts):
        violations.append("face or label table does not cover every dimension")
        return violations

    for n in range(1, len(counts)):
        if len(complex_.faces[n]) != counts[n]:
            violations.append(f"dimension {n}: {len(complex_.faces[n])} face arrays for {counts[n]} cells")
            continue
        for k, row in enumerate(complex_.faces[n]):
            if len(row) != n + 1:
                violations.append(f"cell ({n},{k}) has {len(row)} face slots, expected {n + 1}")
                continue
            for slot, face in enumerate(row):
                if face.dim != n - 1:
                    violations.append(
                        f"cell ({n},{k}) slot {slot} points to a {face.dim}-cell, expected dimension {n - 1}")
                elif not 0 <= face.index < counts[n - 1]:
                    violations.append(f"cell ({n},{k}) slot {slot} points to missing cell {face}")
    if violations:
        return violations

    # d_i d_j = d_{j-1} d_i for i < j
    for n in range(2, len(counts)):
        for k, row in enumerate(complex_.faces[n]):
            for i, j in combinations(range(n + 1), 2):
                left = complex_.face(row[i], j - 1)
                right = complex_.face(row[j], i)
                if left != right:
                    violations.append(
                        f"cell ({n},{k}): face_{j - 1}(face_{i}) = {left} but face_{i}(face_{j}) = {right}")
    return violations


def require_valid(complex_: DeltaComplex, operation: str) -> None:
    diagnostics = validate(complex_)
    if diagnostics:
        raise InvalidComplexError(f"{operation} needs a valid complex", diagnostics)


class _CellUnionFind:
    """Union-find over cells; the class root is always the smallest member."""

    def __init__(self, cells: Iterable[CellId]):
        self.parent: Dict[CellId, CellId] = {cell: cell for cell in cells}

    def find(self, cell: CellId) -> CellId:
        root = cell
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[cell] != root:
            self.parent[cell], cell = root, self.parent[cell]
        return root

    def union(self, a: CellId, b: CellId) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        low, high = (ra, rb) if ra < rb else (rb, ra)
        self.parent[high] = low
        return True


def quotient(complex_: DeltaComplex, spec: IdentificationSpec) -> DeltaComplex:
    """
    Glue the paired cells and close the identification under faces: gluing
    two n-cells glues their i-th faces for every slot i. Each class is
    represented by its lowest-index member; labels of a class are joined with "=".
    """
    require_valid(complex_, "quotient")
    uf = _CellUnionFind(complex_.all_cells())
    pending = list(spec.pairs)
    while pending:
        a, b = pending.pop()
        if a.dim != b.dim:
            raise QuotientInconsistencyError(f"propagation would identify {a} with {b} of another dimension")
        for cell in (a, b):
            if cell.dim > complex_.dimension or not 0 <= cell.index < complex_.cells_per_dim[cell.dim]:
                raise QuotientInconsistencyError(f"gluing references missing cell {cell}")
        if not uf.union(a, b):
            continue
        for fa, fb in zip(complex_.faces_of(a), complex_.faces_of(b)):
            pending.append((fa, fb))

    new_index: Dict[CellId, CellId] = {}
    members: List[List[List[CellId]]] = []
    for n in range(complex_.dimension + 1):
        classes: Dict[CellId, List[CellId]] = {}
        for cell in complex_.cells(n):
            classes.setdefault(uf.find(cell), []).append(cell)
        ordered = sorted(classes)
        for k, root in enumerate(ordered):
            new_index[root] = CellId(n, k)
        members.append([classes[root] for root in ordered])

    counts = [len(m) for m in members]
    faces: Dict[int, List[List[CellId]]] = {}
    labels: Dict[int, List[Optional[str]]] = {}
    for n, classes in enumerate(members):
        labels[n] = [_join_labels(complex_, cls) for cls in classes]
        if n == 0:
            continue
        faces[n] = [[new_index[uf.find(face)] for face in complex_.faces_of(cls[0])] for cls in classes]

    result = new_complex(counts, faces, labels)
    diagnostics = validate(result)
    if diagnostics:
        raise QuotientInconsistencyError("quotient is not a Delta-complex: " + "; ".join(diagnostics))
    logger.debug("glued %d pairs: cell counts %s -> %s",
                 len(spec.pairs), list(complex_.cells_per_dim), counts)
    return result


def _join_labels(complex_: DeltaComplex, cells: Sequence[CellId]) -> Optional[str]:
    names = [complex_.label(cell) for cell in cells if complex_.label(cell)]
    return "=".join(names) if names else None


def euler_characteristic(complex_: DeltaComplex) -> int:
    return sum((-1) ** n * count for n, count in enumerate(complex_.cells_per_dim))


def closure_subcomplex(complex_: DeltaComplex, cells: Iterable[CellId]) -> DeltaComplex:
    """Smallest subcomplex containing the given cells, re-indexed in original order."""
    keep: Set[CellId] = set()
    stack = list(cells)
    while stack:
        cell = stack.pop()
        if cell in keep:
            continue
        keep.add(cell)
        stack.extend(complex_.faces_of(cell))

    top = max((cell.dim for cell in keep), default=-1)
    kept_by_dim = [sorted(cell for cell in keep if cell.dim == n) for n in range(top + 1)]
    reindex = {cell: CellId(n, k) for n, cells_n in enumerate(kept_by_dim) for k, cell in enumerate(cells_n)}
    faces = {n: [[reindex[f] for f in complex_.faces_of(cell)] for cell in kept_by_dim[n]]
             for n in range(1, top + 1)}
    labels = {n: [complex_.label(cell) for cell in kept_by_dim[n]] for n in range(top + 1)}
    return new_complex([len(c) for c in kept_by_dim], faces, labels)


def boundary_subcomplex(complex_: DeltaComplex) -> DeltaComplex:
    """
    Edges occupying exactly one face slot over all 2-cells, with their vertices.
    Slots are counted with multiplicity, so an edge used twice by one triangle
    is interior.
    """
    if complex_.dimension != 2:
        raise PreconditionError(f"boundary_subcomplex needs top dimension 2, got {complex_.dimension}")
    uses: Dict[CellId, int] = {edge: 0 for edge in complex_.cells(1)}
    for triangle in complex_.cells(2):
        for edge in complex_.faces_of(triangle):
            uses[edge] += 1
    boundary_edges = [edge for edge in complex_.cells(1) if uses[edge] == 1]
    return closure_subcomplex(complex_, boundary_edges)


def connected_components(complex_: DeltaComplex) -> int:
    """Components of the vertex/edge graph."""
    # local import keeps networkx out of the import path of the serializer
    from core.fundamental.skeleton import skeleton_graph
    import networkx as nx

    graph = skeleton_graph(complex_).to_networkx()
    return nx.number_connected_components(graph) if graph.number_of_nodes() else 0


def relabel(complex_: DeltaComplex, labels: Mapping[int, Sequence[Optional[str]]]) -> DeltaComplex:
    """Replace labels for the given dimensions; other dimensions keep theirs."""
    table = list(complex_.labels)
    for n, names in labels.items():
        names = list(names)
        if len(names) != complex_.cells_per_dim[n]:
            raise ComplexConstructionError(
                f"dimension {n}: {len(names)} labels for {complex_.cells_per_dim[n]} cells", dim=n)
        table[n] = tuple(names)
    return DeltaComplex(complex_.cells_per_dim, complex_.faces, tuple(table))


def standard_simplex(n: int, vertex_labels: Optional[Sequence[str]] = None) -> DeltaComplex:
    """
    The full n-simplex with all of its faces. Cells of each dimension are
    ordered lexicographically by vertex tuple, so for n = 3 the edges are
    AB, AC, AD, BC, BD, CD and the triangles ABC, ABD, ACD, BCD.
    """
    if not 0 <= n <= MAX_DIM:
        raise PreconditionError(f"standard_simplex needs 0 <= n <= {MAX_DIM}, got {n}")
    names = list(vertex_labels) if vertex_labels else [str(v) for v in range(n + 1)]
    if len(names) != n + 1:
        raise PreconditionError(f"{n}-simplex needs {n + 1} vertex labels, got {len(names)}")

    simplices = [list(combinations(range(n + 1), d + 1)) for d in range(n + 1)]
    position = [{s: k for k, s in enumerate(level)} for level in simplices]
    faces = {
        d: [[position[d - 1][s[:i] + s[i + 1:]] for i in range(d + 1)] for s in simplices[d]]
        for d in range(1, n + 1)
    }
    labels = {d: ["".join(names[v] for v in s) for s in simplices[d]] for d in range(n + 1)}
    return new_complex([len(level) for level in simplices], faces, labels)


def find_cell(complex_: DeltaComplex, label: str) -> CellId:
    """Cell whose label equals label, or whose "="-joined label contains it."""
    for cell in complex_.all_cells():
        text = complex_.label(cell) or ""
        if text == label or label in text.split("="):
            return cell
    raise KeyError(label)
