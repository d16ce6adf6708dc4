"""Finite carriers, hyperoperation tables and the operations on them.

Cell sets are plain ints used as bit vectors over the carrier {0..order-1}:
bit i set means element i is a member.  The empty set is 0.  All tables are
immutable after construction and every function here is pure, so values can
be shared freely between workers.
"""

from dataclasses import dataclass
from itertools import permutations

MAX_ORDER = 12

KIND_HYPER = "hyper"
KIND_COMPOSITION = "composition"
KINDS = (KIND_HYPER, KIND_COMPOSITION)


def full_mask(order: int) -> int:
    return (1 << order) - 1


def mask_of(members) -> int:
    m = 0
    for i in members:
        m |= 1 << i
    return m


def members_of(mask: int) -> tuple[int, ...]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def singleton_value(mask: int) -> int:
    """The sole member of a singleton mask."""
    if mask.bit_count() != 1:
        raise ValueError(f"not a singleton cell: {mask:#b}")
    return mask.bit_length() - 1


def mask_image(mask: int, perm) -> int:
    """Elementwise image of a cell set under a permutation."""
    out = 0
    i = 0
    while mask:
        if mask & 1:
            out |= 1 << perm[i]
        mask >>= 1
        i += 1
    return out


def cell_key(mask: int) -> tuple[int, ...]:
    """Comparison key for one cell: ascending member indices.

    Tuple comparison gives shorter-prefix-first, so {} < {0} < {0,1} < {1}.
    This order, not the numeric mask order, is the one all golden files,
    canonical forms and emission streams use.
    """
    return members_of(mask)


@dataclass(frozen=True, slots=True)
class HyperTable:
    """Square table of cell sets housing one law of synthesis."""

    order: int
    cells: tuple[int, ...]  # row-major, length order**2
    kind: str = KIND_HYPER

    def __post_init__(self):
        if not 1 <= self.order <= MAX_ORDER:
            raise ValueError(f"order must be in 1..{MAX_ORDER}, got {self.order}")
        if len(self.cells) != self.order * self.order:
            raise ValueError(
                f"expected {self.order * self.order} cells, got {len(self.cells)}"
            )
        if self.kind not in KINDS:
            raise ValueError(f"unknown table kind: {self.kind!r}")
        full = full_mask(self.order)
        for c in self.cells:
            if c & ~full:
                raise ValueError("cell contains an index outside the carrier")
            if self.kind == KIND_COMPOSITION and c.bit_count() != 1:
                raise ValueError("composition tables require singleton cells")

    def cell(self, x: int, y: int) -> int:
        return self.cells[x * self.order + y]

    @property
    def full(self) -> int:
        return full_mask(self.order)

    def rows(self) -> list[tuple[int, ...]]:
        n = self.order
        return [self.cells[i * n : (i + 1) * n] for i in range(n)]


def table_from_rows(rows, kind: str = KIND_HYPER) -> HyperTable:
    """Build a table from rows of member collections, e.g. [[{0},{1}],[{1},{0}]].

    A bare int entry is taken as a ready-made bit mask.
    """
    order = len(rows)
    cells = []
    for row in rows:
        if len(row) != order:
            raise ValueError("table rows must be square")
        for members in row:
            cells.append(mask_of(members) if not isinstance(members, int) else members)
    return HyperTable(order, tuple(cells), kind)


def composition_from_rows(rows) -> HyperTable:
    """Build a composition table from rows of element indices."""
    order = len(rows)
    cells = []
    for row in rows:
        if len(row) != order:
            raise ValueError("table rows must be square")
        cells.extend(1 << v for v in row)
    return HyperTable(order, tuple(cells), KIND_COMPOSITION)


def table_key(table: HyperTable):
    """Row-major tuple of cell keys; the canonical comparison order for tables."""
    return tuple(cell_key(c) for c in table.cells)


@dataclass(frozen=True, slots=True)
class TwoOpModel:
    """Carrier with additive and multiplicative tables and distinguished zero."""

    order: int
    add: HyperTable
    mul: HyperTable
    zero: int
    one: int | None = None

    def __post_init__(self):
        if self.add.order != self.order or self.mul.order != self.order:
            raise ValueError("component tables must share the model order")
        if not 0 <= self.zero < self.order:
            raise ValueError("zero out of range")
        if self.one is not None:
            if not 0 <= self.one < self.order:
                raise ValueError("one out of range")
            if self.order > 1 and self.one == self.zero:
                raise ValueError("one must differ from zero")


@dataclass(frozen=True, slots=True)
class HypermoduleModel:
    """Scalar hyperring acting on an additive structure by a single-valued map."""

    scalars: TwoOpModel  # must carry `one`
    madd: HyperTable
    zero_m: int
    action: tuple[tuple[int, ...], ...]  # scalars.order rows of madd.order indices

    def __post_init__(self):
        if len(self.action) != self.scalars.order:
            raise ValueError("action must have one row per scalar")
        for row in self.action:
            if len(row) != self.madd.order:
                raise ValueError("action rows must have one entry per module element")
            for v in row:
                if not 0 <= v < self.madd.order:
                    raise ValueError("action value out of range")
        if not 0 <= self.zero_m < self.madd.order:
            raise ValueError("module zero out of range")

    def act(self, a: int, m: int) -> int:
        return self.action[a][m]


def complex_product(table: HyperTable, a_set: int, b_set: int) -> int:
    """Union of table cells over all pairs drawn from the two cell sets.

    An empty factor yields the empty set.
    """
    if not a_set or not b_set:
        return 0
    n = table.order
    cells = table.cells
    out = 0
    a = a_set
    ia = 0
    while a:
        if a & 1:
            base = ia * n
            b = b_set
            ib = 0
            while b:
                if b & 1:
                    out |= cells[base + ib]
                b >>= 1
                ib += 1
        a >>= 1
        ia += 1
    return out


def right_division(table: HyperTable, x: int, y: int) -> int:
    """{z : x in z*y}."""
    n = table.order
    cells = table.cells
    bit = 1 << x
    out = 0
    for z in range(n):
        if cells[z * n + y] & bit:
            out |= 1 << z
    return out


def left_division(table: HyperTable, y: int, x: int) -> int:
    """{z : x in y*z}."""
    n = table.order
    base = y * n
    cells = table.cells
    bit = 1 << x
    out = 0
    for z in range(n):
        if cells[base + z] & bit:
            out |= 1 << z
    return out


def apply_permutation(table: HyperTable, perm) -> HyperTable:
    """Relabel the table: result[p(a)][p(b)] = p(table[a][b]); kind preserved."""
    n = table.order
    if sorted(perm) != list(range(n)):
        raise ValueError("not a permutation of the carrier")
    cells = [0] * (n * n)
    for a in range(n):
        pa = perm[a] * n
        for b in range(n):
            cells[pa + perm[b]] = mask_image(table.cell(a, b), perm)
    return HyperTable(n, tuple(cells), table.kind)


def _permutations_fixing(order: int, fixed) -> list[tuple[int, ...]]:
    fixed = set(fixed or ())
    free = [i for i in range(order) if i not in fixed]
    perms = []
    for images in permutations(free):
        p = list(range(order))
        for src, dst in zip(free, images):
            p[src] = dst
        perms.append(tuple(p))
    return perms


def canonical_form(table: HyperTable, fixed=()) -> HyperTable:
    """Least relabeling of the table over all permutations fixing the pins.

    Tables are compared row-major with cells as ascending index tuples, so
    the result is a deterministic orbit representative: constant on
    permutation orbits and idempotent.
    """
    best = table
    best_key = table_key(table)
    for perm in _permutations_fixing(table.order, fixed):
        cand = apply_permutation(table, perm)
        k = table_key(cand)
        if k < best_key:
            best, best_key = cand, k
    return best


def two_op_key(model: TwoOpModel):
    return (
        table_key(model.add),
        table_key(model.mul),
        model.zero,
        -1 if model.one is None else model.one,
    )


def canonical_form_two_op(model: TwoOpModel) -> TwoOpModel:
    """Least joint relabeling of both tables; zero (and one) stay pinned."""
    fixed = {model.zero}
    if model.one is not None:
        fixed.add(model.one)
    best = model
    best_key = two_op_key(model)
    for perm in _permutations_fixing(model.order, fixed):
        cand = TwoOpModel(
            model.order,
            apply_permutation(model.add, perm),
            apply_permutation(model.mul, perm),
            model.zero,
            model.one,
        )
        k = two_op_key(cand)
        if k < best_key:
            best, best_key = cand, k
    return best
