"""Dedicated row-staged search for the multiplicative-hyperring sweeps.

The generic cell-by-cell backtracker drowns at order 4 (16^16 raw cells), but
the premises factor through rows: left distributivity constrains each row in
isolation, the sign rule pairs row a with row -a and column b with column -b,
and right distributivity plus associativity couple assigned rows.  So the
search enumerates subadditive rows once, then extends the table row by row
with vectorized column checks over the whole row pool.

One further premise-implied cut: over an additive group, inclusion
distributivity makes a single empty product empty out everything (the empty
cell's row and column, then every cell through x = w + z'), so non-degenerate
premise models have no empty cells at all, and the all-empty table is the
only degenerate one.  The order-2/3 oracle sweeps certify both cuts.
"""

from itertools import product

import numpy as np

from . import axioms
from .model import HyperTable, TwoOpModel, complex_product, mask_image, singleton_value


def _sum_table(add: HyperTable):
    n = add.order
    return [[singleton_value(add.cell(b, c)) for c in range(n)] for b in range(n)]


def _complex_lut(add: HyperTable) -> np.ndarray:
    """cp[m1][m2] = complex sum of the two cell masks under the group."""
    n = add.order
    size = 1 << n
    lut = np.zeros((size, size), dtype=np.uint16)
    for m1 in range(size):
        for m2 in range(size):
            lut[m1][m2] = complex_product(add, m1, m2)
    return lut


def _valid_rows(add: HyperTable, neg) -> list[tuple[int, ...]]:
    """Nonempty rows satisfying row subadditivity and the in-row sign rule."""
    n = add.order
    sums = _sum_table(add)
    neg_lut = [mask_image(m, neg) for m in range(1 << n)]
    out = []
    for row in product(range(1, 1 << n), repeat=n):
        ok = all(row[neg[b]] == neg_lut[row[b]] for b in range(n))
        if ok:
            for b in range(n):
                for c in range(n):
                    if row[sums[b][c]] & ~complex_product(add, row[b], row[c]):
                        ok = False
                        break
                if not ok:
                    break
        if ok:
            out.append(row)
    return out


def _assoc_vector_mask(n, avail, val, mask):
    """Associativity pruning over the candidate vector.

    For every instance with x, y available the right side (x spread over the
    members of y*z) is fully determined; the left side's determined part must
    sit inside it, and when the left side is complete the two must be equal.
    """
    full = (1 << n) - 1
    avail_bits = 0
    for a in avail:
        avail_bits |= 1 << a
    unavail_bits = full & ~avail_bits
    for x in avail:
        for y in avail:
            cell_xy = val(x, y)
            scalar_cell = not isinstance(cell_xy, np.ndarray)
            if scalar_cell:
                det = not (cell_xy & unavail_bits)
            else:
                det = (cell_xy & unavail_bits) == 0
            for z in range(n):
                known_lhs = 0
                for a in avail:
                    known_lhs = known_lhs | ((cell_xy >> a) & 1) * val(a, z)
                cell_yz = val(y, z)
                rhs = 0
                for b in range(n):
                    rhs = rhs | ((cell_yz >> b) & 1) * val(x, b)
                mask = mask & ((known_lhs & (full ^ rhs)) == 0)
                if det is True:
                    mask = mask & (known_lhs == rhs)
                elif det is not False:
                    mask = mask & ((known_lhs == rhs) | ~det)
    return mask


def t6_search(add: HyperTable, zero: int, include_degenerate: bool):
    """Models over the fixed additive group satisfying associativity, both
    inclusion distributivities and the sign rule.

    Returns (model, degenerate) pairs; apart from the all-empty table, every
    emitted table has all cells non-empty.
    """
    n = add.order
    neg = axioms.group_inverse_map(add, zero)
    sums = _sum_table(add)
    pool = _valid_rows(add, neg)
    neg_lut = [mask_image(m, neg) for m in range(1 << n)]
    cp = _complex_lut(add)
    pool_arr = np.array(pool, dtype=np.uint16)  # R x n

    free_rows = sorted({min(a, neg[a]) for a in range(n)})
    derived_of = {a: neg[a] for a in free_rows if neg[a] != a}

    out = []

    def extend(rows_by_index, assigned, free_idx):
        if free_idx == len(free_rows):
            cells = []
            for a in range(n):
                cells.extend(rows_by_index[a])
            mul = HyperTable(n, tuple(cells))
            model = TwoOpModel(n, add, mul, zero)
            if (
                axioms.check_law(mul, "associative").holds
                and axioms.check_ring_axioms(model, "distributive-inclusion").holds
                and axioms.check_ring_axioms(model, "sign-rule").holds
            ):
                out.append((model, False))
            return

        r = free_rows[free_idx]
        # vectorized stage filter over the whole row pool: column
        # subadditivity plus every associativity instance the available rows
        # determine; the sign partner's column `col` equals the candidate's
        # column neg(col)
        partner = derived_of.get(r)
        new_rows = {r} | ({partner} if partner is not None else set())
        will_assign = set(assigned) | new_rows

        def val(a, col):
            if a in assigned:
                return rows_by_index[a][col]
            if a == r:
                return pool_arr[:, col]
            return pool_arr[:, neg[col]]

        mask = np.ones(len(pool), dtype=bool)
        for b in range(n):
            for c in range(n):
                s = sums[b][c]
                involved = {b, c, s}
                if not involved <= will_assign or not (involved & new_rows):
                    continue
                for col in range(n):
                    rhs = cp[val(b, col), val(c, col)]
                    mask = mask & ((val(s, col) & ~rhs) == 0)
            if not mask.any():
                return
        mask = _assoc_vector_mask(n, will_assign, val, mask)
        if not mask.any():
            return

        for idx in np.flatnonzero(mask):
            cand = tuple(int(v) for v in pool_arr[idx])
            rows_by_index[r] = cand
            if partner is not None:
                rows_by_index[partner] = tuple(neg_lut[v] for v in cand)
            extend(rows_by_index, will_assign, free_idx + 1)
            rows_by_index.pop(r, None)
            if partner is not None:
                rows_by_index.pop(partner, None)

    extend({}, set(), 0)
    out.sort(key=lambda md: md[0].mul.cells)

    if include_degenerate:
        empty = HyperTable(n, (0,) * (n * n))
        out.insert(0, (TwoOpModel(n, add, empty, zero), True))
    return out
