"""Surface-code lattices on a rectangular qubit grid.

Data qubits sit on the vertices of a width x height grid.  Checkerboard cells
between them carry the stabilizers: light cells are Z plaquettes, dark cells
are X plaquettes, boundary cells are weight-2 truncations.  A dislocation is a
row of slanted cells whose stabilizers mix X on one side with Z on the other;
each end of the line is closed by a five-body twist stabilizer containing
exactly one Y.
"""

from __future__ import annotations

import enum
import itertools
import json
from dataclasses import dataclass, field

from .pauli import PauliOperator, commutes, from_letters


class LatticeError(ValueError):
    """Invalid geometry or a construction that fails its own checks."""


class SchemaError(ValueError):
    """Malformed code-description file."""


class GeneratorKind(enum.Enum):
    Z_PLAQUETTE = "Z_PLAQUETTE"
    X_PLAQUETTE = "X_PLAQUETTE"
    DISLOCATION = "DISLOCATION"
    TWIST = "TWIST"
    BOUNDARY = "BOUNDARY"


class Boundary(enum.Enum):
    UNIFORM = "UNIFORM"
    MIXED = "MIXED"


@dataclass(frozen=True)
class DislocationSpec:
    """Horizontal defect line: `length` slanted cells starting at
    cell (row, col_start); length equals the twist separation L."""

    row: int
    col_start: int
    length: int


@dataclass(frozen=True)
class LatticeSpec:
    width: int
    height: int
    dislocations: tuple[DislocationSpec, ...] = ()
    boundary: Boundary = Boundary.UNIFORM
    padding: int = 2
    boundary_assisted: bool = False


@dataclass(frozen=True)
class StabilizerCode:
    """Immutable stabilizer code with optional grid geometry."""

    n: int
    generators: tuple[tuple[PauliOperator, GeneratorKind], ...]
    coords: tuple[tuple[int, int], ...] | None = None
    spec: LatticeSpec | None = None

    def kind_count(self, kind: GeneratorKind) -> int:
        return sum(1 for _, k in self.generators if k is kind)


def _letter_of_cell(r: int, c: int) -> str:
    """Checkerboard letter of the cell whose top-left qubit is (r, c)."""
    return "X" if (r + c) % 2 else "Z"


def _other(letter: str) -> str:
    return "Z" if letter == "X" else "X"


_SIDE_TYPES = {
    Boundary.UNIFORM: {"top": "X", "bottom": "X", "left": "X", "right": "X"},
    Boundary.MIXED: {"top": "X", "bottom": "X", "left": "Z", "right": "Z"},
}


def _corner_trims(spec: LatticeSpec) -> set[tuple[int, int]]:
    """Corner qubits removed so a UNIFORM boundary closes with k = 0.

    A corner whose outside cell carries the boundary type would be touched by
    a single stabilizer and leak a weight-1 logical; cutting it turns the
    adjacent bulk plaquette into a weight-3 truncation instead.
    """
    if spec.boundary is not Boundary.UNIFORM:
        return set()
    w, h = spec.width, spec.height
    t = _SIDE_TYPES[Boundary.UNIFORM]["top"]
    trims = set()
    for cell, qubit in [
        ((-1, -1), (0, 0)),
        ((-1, w - 1), (0, w - 1)),
        ((h - 1, -1), (h - 1, 0)),
        ((h - 1, w - 1), (h - 1, w - 1)),
    ]:
        if _letter_of_cell(*cell) == t:
            trims.add(qubit)
    return trims


def _line_cells(d: DislocationSpec) -> set[tuple[int, int]]:
    """Normal cell positions replaced by one dislocation line."""
    return {(d.row, c) for c in range(d.col_start - 1, d.col_start + d.length + 2)}


def _line_box(d: DislocationSpec) -> tuple[int, int, int, int]:
    """Cell rectangle (r0, r1, c0, c1) a line owns plus its contact ring."""
    return (d.row - 1, d.row + 1, d.col_start - 2, d.col_start + d.length + 3)


def _check_spec(spec: LatticeSpec) -> None:
    if spec.width < 2 or spec.height < 2:
        raise LatticeError("width and height must be at least 2")
    if spec.padding < 1:
        raise LatticeError("padding must be at least 1")
    if spec.boundary not in Boundary:
        raise LatticeError(f"unknown boundary {spec.boundary!r}")
    p = spec.padding
    for d in spec.dislocations:
        if d.length < 1:
            raise LatticeError("dislocation length must be at least 1")
        c1 = d.col_start + d.length - 1
        if d.row - p < 0 or d.row + p > spec.height - 2:
            raise LatticeError(f"dislocation {d} too close to top/bottom boundary")
        if d.col_start - 1 < p or (spec.width - 2) - (c1 + 2) < p:
            raise LatticeError(f"dislocation {d} too close to left/right boundary")
    boxes = [_line_box(d) for d in spec.dislocations]
    for (i, a), (j, b) in itertools.combinations(enumerate(boxes), 2):
        if a[0] <= b[1] and b[0] <= a[1] and a[2] <= b[3] and b[2] <= a[3]:
            raise LatticeError(f"dislocations {i} and {j} overlap or touch")
    if len(spec.dislocations) == 1 and not spec.boundary_assisted:
        raise LatticeError(
            "a single dislocation gives only two twists; use two or more lines "
            "or set boundary_assisted=True"
        )


def _twist_assignment(
    support: list[tuple[int, int]],
    naive: list[str],
    others: list[PauliOperator],
    index: dict[tuple[int, int], int],
    n: int,
) -> tuple[PauliOperator, bool]:
    """Letters for a twist cell: the constructive assignment, or an exhaustive
    search over the merged cell when that fails against a neighbor.

    Returns (operator, searched).  Valid assignments carry exactly one Y, at
    least one X and one Z, act on all five qubits, and commute with every
    other generator.
    """

    def build(letters: list[str]) -> PauliOperator:
        return from_letters(n, {index[q]: l for q, l in zip(support, letters)})

    def valid(op: PauliOperator) -> bool:
        return all(commutes(op, g) for g in others)

    op = build(naive)
    if valid(op):
        return op, False
    hits = []
    for letters in itertools.product("XYZ", repeat=len(support)):
        if letters.count("Y") != 1 or "X" not in letters or "Z" not in letters:
            continue
        cand = build(list(letters))
        if valid(cand):
            hits.append(cand)
    if not hits:
        raise LatticeError("no commuting twist assignment exists on the merged cell")
    return hits[0], True


def build_code(spec: LatticeSpec) -> StabilizerCode:
    """Construct the stabilizer code for a lattice description.

    The returned generator list is ordered: bulk plaquettes row-major, then
    boundary truncations (top, bottom, left, right), then per dislocation its
    slanted cells left to right followed by the two twists.
    """
    _check_spec(spec)
    w, h = spec.width, spec.height
    trims = _corner_trims(spec)
    coords = [(r, c) for r in range(h) for c in range(w) if (r, c) not in trims]
    index = {q: i for i, q in enumerate(coords)}
    n = len(coords)

    occupied: set[tuple[int, int]] = set()
    for d in spec.dislocations:
        occupied |= _line_cells(d)

    gens: list[tuple[PauliOperator, GeneratorKind]] = []

    def add_cell(qubits: list[tuple[int, int]], letters: list[str], kind: GeneratorKind) -> None:
        present = {index[q]: l for q, l in zip(qubits, letters) if q in index}
        if len(present) < 2:
            raise LatticeError(f"degenerate cell on qubits {qubits}")
        gens.append((from_letters(n, present), kind))

    for r in range(h - 1):
        for c in range(w - 1):
            if (r, c) in occupied:
                continue
            letter = _letter_of_cell(r, c)
            kind = GeneratorKind.X_PLAQUETTE if letter == "X" else GeneratorKind.Z_PLAQUETTE
            qubits = [(r, c), (r, c + 1), (r + 1, c), (r + 1, c + 1)]
            add_cell(qubits, [letter] * 4, kind)

    side_type = _SIDE_TYPES[spec.boundary]
    for c in range(w - 1):  # top, then bottom
        if _letter_of_cell(-1, c) == side_type["top"]:
            add_cell([(0, c), (0, c + 1)], [side_type["top"]] * 2, GeneratorKind.BOUNDARY)
    for c in range(w - 1):
        if _letter_of_cell(h - 1, c) == side_type["bottom"]:
            add_cell([(h - 1, c), (h - 1, c + 1)], [side_type["bottom"]] * 2, GeneratorKind.BOUNDARY)
    for r in range(h - 1):  # left, then right
        if _letter_of_cell(r, -1) == side_type["left"]:
            add_cell([(r, 0), (r + 1, 0)], [side_type["left"]] * 2, GeneratorKind.BOUNDARY)
    for r in range(h - 1):
        if _letter_of_cell(r, w - 1) == side_type["right"]:
            add_cell([(r, w - 1), (r + 1, w - 1)], [side_type["right"]] * 2, GeneratorKind.BOUNDARY)

    searched_any = False
    for d in spec.dislocations:
        R, c0, L = d.row, d.col_start, d.length
        c1 = c0 + L - 1
        for a in range(c0, c1 + 1):
            top = _letter_of_cell(R, a)
            bot = _other(top)
            add_cell(
                [(R, a), (R, a + 1), (R + 1, a + 1), (R + 1, a + 2)],
                [top, top, bot, bot],
                GeneratorKind.DISLOCATION,
            )
        others = [g for g, _ in gens]
        # Left twist: the square left of the line merged with the triangular
        # transition cell; the shared lower qubit carries the Y.
        a_l = _letter_of_cell(R, c0)
        b_l = _other(a_l)
        left_support = [(R, c0 - 1), (R, c0), (R + 1, c0 - 1), (R + 1, c0), (R + 1, c0 + 1)]
        left_naive = [b_l, b_l, b_l, "Y", a_l]
        op, searched = _twist_assignment(left_support, left_naive, others, index, n)
        gens.append((op, GeneratorKind.TWIST))
        searched_any |= searched
        others.append(op)
        # Right twist: mirror transition; the shared upper qubit carries the Y.
        a_r = _letter_of_cell(R, c1)
        b_r = _other(a_r)
        right_support = [(R, c1 + 1), (R, c1 + 2), (R + 1, c1 + 2), (R, c1 + 3), (R + 1, c1 + 3)]
        right_naive = [b_r, "Y", a_r, a_r, a_r]
        op, searched = _twist_assignment(right_support, right_naive, others, index, n)
        gens.append((op, GeneratorKind.TWIST))
        searched_any |= searched

    code = StabilizerCode(n=n, generators=tuple(gens), coords=tuple(coords), spec=spec)

    ops = [g for g, _ in code.generators]
    for i in range(len(ops)):
        for j in range(i + 1, len(ops)):
            if not commutes(ops[i], ops[j]):
                raise LatticeError(
                    f"construction bug: generators {i} and {j} anticommute"
                )
    covered = 0
    for g in ops:
        covered |= g.xpart | g.zpart
    if covered != (1 << n) - 1:
        raise LatticeError("construction bug: some qubit is in no generator")
    if spec.dislocations:
        from . import codecheck  # local import avoids a module cycle

        if codecheck.logical_count(code) < 1:
            raise LatticeError("defect configuration encodes no logical qubit")
    return code


def build_plain_patch(width: int, height: int, boundary: Boundary) -> StabilizerCode:
    """Defect-free checkerboard patch (UNIFORM: k = 0, MIXED: k = 1)."""
    return build_code(LatticeSpec(width=width, height=height, boundary=boundary))


def build_dislocation_code(spec: LatticeSpec) -> StabilizerCode:
    """Lattice containing at least one dislocation line."""
    if not spec.dislocations:
        raise LatticeError("spec contains no dislocations")
    return build_code(spec)


def default_dislocation_spec(length: int) -> LatticeSpec:
    """Default defect-qubit configuration: two stacked parallel dislocations
    of the given length inside a UNIFORM patch.

    The patch side and the line separation grow with the length so that every
    competing error route (boundary-to-boundary strings, inter-line strings,
    enclosing loops) costs at least as much as the along-line routes.
    """
    if length < 1:
        raise LatticeError("length must be at least 1")
    side = max(length + 6, 2 * length + 4)
    c0 = (side - length - 4) // 2 + 1
    r1 = (side - 1 - (length + 5)) // 2 + 1
    r2 = r1 + length + 2
    return LatticeSpec(
        width=side,
        height=side,
        dislocations=(
            DislocationSpec(row=r1, col_start=c0, length=length),
            DislocationSpec(row=r2, col_start=c0, length=length),
        ),
        boundary=Boundary.UNIFORM,
        padding=1,
    )


def qubit_on_dislocation(code: StabilizerCode, d: int) -> tuple[int, ...]:
    """Qubits along dislocation d's upper edge, ordered twist to twist.

    This is the lane the Y highway rides: the top corner shared by each pair
    of consecutive slanted cells, length + 1 qubits in total.
    """
    if code.spec is None or code.coords is None:
        raise LatticeError("code was not built from a lattice spec")
    if not 0 <= d < len(code.spec.dislocations):
        raise LatticeError(f"no dislocation with index {d}")
    line = code.spec.dislocations[d]
    index = {q: i for i, q in enumerate(code.coords)}
    cols = range(line.col_start, line.col_start + line.length + 1)
    return tuple(index[(line.row, c)] for c in cols)


# ---------------------------------------------------------------------------
# Code-description files


def spec_to_dict(spec: LatticeSpec) -> dict:
    return {
        "width": spec.width,
        "height": spec.height,
        "boundary": spec.boundary.value,
        "padding": spec.padding,
        "boundary_assisted": spec.boundary_assisted,
        "dislocations": [
            {"row": d.row, "col_start": d.col_start, "length": d.length}
            for d in spec.dislocations
        ],
    }


def spec_from_dict(data: dict) -> LatticeSpec:
    try:
        return LatticeSpec(
            width=int(data["width"]),
            height=int(data["height"]),
            boundary=Boundary(data.get("boundary", "UNIFORM")),
            padding=int(data.get("padding", 2)),
            boundary_assisted=bool(data.get("boundary_assisted", False)),
            dislocations=tuple(
                DislocationSpec(int(d["row"]), int(d["col_start"]), int(d["length"]))
                for d in data.get("dislocations", [])
            ),
        )
    except (KeyError, ValueError, TypeError) as exc:
        raise SchemaError(f"bad lattice spec: {exc}") from exc


def code_to_dict(code: StabilizerCode) -> dict:
    out: dict = {
        "n": code.n,
        "generators": [
            {"pauli": str(g), "kind": kind.value} for g, kind in code.generators
        ],
    }
    out["coords"] = (
        {str(i): list(q) for i, q in enumerate(code.coords)} if code.coords else None
    )
    out["spec"] = spec_to_dict(code.spec) if code.spec else None
    return out


def code_from_dict(data: dict) -> StabilizerCode:
    from .pauli import parse_pauli

    try:
        n = int(data["n"])
        gens = []
        for item in data["generators"]:
            op = parse_pauli(item["pauli"])
            if op.n != n:
                raise SchemaError(f"generator length {op.n} != n = {n}")
            gens.append((op, GeneratorKind(item["kind"])))
    except SchemaError:
        raise
    except (KeyError, ValueError, TypeError) as exc:
        raise SchemaError(f"bad code description: {exc}") from exc
    coords = None
    if data.get("coords"):
        try:
            pairs = sorted(((int(i), tuple(q)) for i, q in data["coords"].items()))
        except (ValueError, TypeError, AttributeError) as exc:
            raise SchemaError(f"bad coords: {exc}") from exc
        if [i for i, _ in pairs] != list(range(n)):
            raise SchemaError("coords must map every qubit index exactly once")
        coords = tuple(q for _, q in pairs)
    spec = spec_from_dict(data["spec"]) if data.get("spec") else None
    code = StabilizerCode(n=n, generators=tuple(gens), coords=coords, spec=spec)
    if spec is not None:
        rebuilt = build_code(spec)
        if rebuilt != code:
            raise SchemaError("listed generators do not match the embedded spec")
    return code


def save_code(code: StabilizerCode, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(code_to_dict(code), fh, indent=1)
        fh.write("\n")


def load_code(path: str) -> StabilizerCode:
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise SchemaError("top-level JSON value must be an object")
    return code_from_dict(data)
