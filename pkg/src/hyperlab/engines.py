"""Exhaustive search engines over table spaces.

Three engines with one constraint vocabulary:

* pure      - filter every raw table through the axiom predicates; the
              reference oracle, feasible at order <= 2 (and compositions
              at order 3).
* vector    - numpy sweep of the full order-3 cell-set space (8^9 tables),
              unpruned; scan order equals the canonical table order.
* backtrack - row-major cell assignment with constraint propagation
              (the only engine that scales past toy spaces for strongly
              constrained jobs).

Constraints are serializable descriptors:

    ("law", <law-id>)             one of axioms.LAW_IDS
    ("identity-at", e)            x in e*x = x*e for all x
    ("polysymmetry-at", e, weak)  every x has a symmetric element wrt e
    ("unique-opposite-at", z)     every x has exactly one x' with z in x+x'
    ("reversibility-at", z)       canonical reversibility (needs opposites)
    ("opposite-additivity-at", z) -(x+y) = -x-y elementwise
    ("scalar-zero-at", z)         x+z = z+x = {x}

Every engine emits only tables that pass the authoritative axiom-module
predicates; pruning is a conservative accelerator, never the verdict.
"""

from functools import lru_cache
from itertools import product

import numpy as np

from . import axioms
from .model import HyperTable, cell_key, full_mask, mask_image

# -- constraint predicates (authoritative) ------------------------------------


def constraint_holds(table: HyperTable, c) -> bool:
    tag = c[0]
    if tag == "law":
        return axioms.check_law(table, c[1]).holds
    if tag == "identity-at":
        return axioms.check_identity_element(table, c[1]).holds
    if tag == "polysymmetry-at":
        return axioms.check_polysymmetry(table, c[1], weak=c[2]).holds
    if tag == "unique-opposite-at":
        return axioms.check_unique_opposite(table, c[1]).holds
    if tag == "reversibility-at":
        if axioms.opposite_map(table, c[1]) is None:
            return False
        return axioms.check_reversibility_canonical(table, c[1]).holds
    if tag == "opposite-additivity-at":
        if axioms.opposite_map(table, c[1]) is None:
            return False
        return axioms.check_opposite_additivity(table, c[1]).holds
    if tag == "scalar-zero-at":
        return axioms.check_scalar_zero(table, c[1]).holds
    raise ValueError(f"unknown constraint descriptor: {c!r}")


def satisfies_all(table: HyperTable, constraints) -> bool:
    return all(constraint_holds(table, c) for c in constraints)


@lru_cache(maxsize=None)
def key_sorted_masks(order: int) -> tuple[int, ...]:
    """All cell masks in canonical cell order: {} < {0} < {0,1} < ... < {n-1}."""
    return tuple(sorted(range(1 << order), key=cell_key))


def value_order(order: int, kind: str, allow_empty: bool) -> tuple[int, ...]:
    if kind == "composition":
        return tuple(1 << i for i in range(order))
    masks = key_sorted_masks(order)
    return masks if allow_empty else masks[1:]


def space_size(order: int, kind: str, allow_empty: bool) -> int:
    return len(value_order(order, kind, allow_empty)) ** (order * order)


# -- pure engine ---------------------------------------------------------------


def pure_sweep(order, kind, allow_empty, constraints):
    """Yield every constraint-satisfying table, in canonical table order."""
    values = value_order(order, kind, allow_empty)
    n2 = order * order
    for cells in product(values, repeat=n2):
        table = HyperTable(order, cells, kind)
        if satisfies_all(table, constraints):
            yield table


# -- vector engine (order 3, hyper kind, empty cells allowed) ------------------

_V3_CODE_TO_MASK = np.array(key_sorted_masks(3), dtype=np.uint8)  # digit -> mask
_V3_DIGITS = np.arange(8 ** 6, dtype=np.int64)
_V3_TAIL_CELLS = tuple(
    _V3_CODE_TO_MASK[(_V3_DIGITS >> (3 * (5 - k))) & 7] for k in range(6)
)

_VECTOR_LAWS = {
    "associative",
    "reproductive",
    "weakly-associative",
    "left-inverted-associative",
    "right-inverted-associative",
    "commutative",
    "cellwise-nonempty",
    "total",
    "degenerate",
}


def vectorizable(c) -> bool:
    tag = c[0]
    if tag == "law":
        return c[1] in _VECTOR_LAWS
    return tag in {
        "identity-at",
        "polysymmetry-at",
        "unique-opposite-at",
        "scalar-zero-at",
    }


def _v3_union_row(cells, mask, z):
    """Union over a in mask of cell[a][z]; mask and cells may be arrays."""
    out = 0
    for a in range(3):
        out = out | ((mask >> a) & 1) * cells[3 * a + z]
    return out


def _v3_union_col(cells, x, mask):
    out = 0
    for b in range(3):
        out = out | ((mask >> b) & 1) * cells[3 * x + b]
    return out


def _v3_predicate(cells, c):
    """Boolean array (or scalar) for one vectorizable constraint."""
    tag = c[0]
    true = np.True_

    def conj(parts):
        out = true
        for p in parts:
            out = out & p
        return out

    if tag == "law":
        law = c[1]
        if law == "cellwise-nonempty":
            return conj([cells[i] != 0 for i in range(9)])
        if law == "total":
            return conj([cells[i] == 7 for i in range(9)])
        if law == "degenerate":
            return conj([cells[i] == 0 for i in range(9)])
        if law == "commutative":
            return conj(
                [cells[3 * x + y] == cells[3 * y + x] for x in range(3) for y in range(x + 1, 3)]
            )
        if law == "reproductive":
            parts = []
            for x in range(3):
                row = cells[3 * x] | cells[3 * x + 1] | cells[3 * x + 2]
                col = cells[x] | cells[3 + x] | cells[6 + x]
                parts.append(row == 7)
                parts.append(col == 7)
            return conj(parts)
        if law == "associative":
            parts = []
            for x, y, z in product(range(3), repeat=3):
                lhs = _v3_union_row(cells, cells[3 * x + y], z)
                rhs = _v3_union_col(cells, x, cells[3 * y + z])
                parts.append(lhs == rhs)
            return conj(parts)
        if law == "weakly-associative":
            parts = []
            for x, y, z in product(range(3), repeat=3):
                lhs = _v3_union_row(cells, cells[3 * x + y], z)
                rhs = _v3_union_col(cells, x, cells[3 * y + z])
                parts.append((lhs & rhs) != 0)
            return conj(parts)
        if law == "left-inverted-associative":
            parts = []
            for x, y, z in product(range(3), repeat=3):
                lhs = _v3_union_row(cells, cells[3 * x + y], z)
                rhs = _v3_union_row(cells, cells[3 * z + y], x)
                parts.append(lhs == rhs)
            return conj(parts)
        if law == "right-inverted-associative":
            parts = []
            for x, y, z in product(range(3), repeat=3):
                lhs = _v3_union_col(cells, x, cells[3 * y + z])
                rhs = _v3_union_col(cells, z, cells[3 * y + x])
                parts.append(lhs == rhs)
            return conj(parts)
    if tag == "identity-at":
        e = c[1]
        parts = []
        for x in range(3):
            parts.append(cells[3 * e + x] == cells[3 * x + e])
            parts.append(((cells[3 * e + x] >> x) & 1) != 0)
        return conj(parts)
    if tag == "polysymmetry-at":
        e, weak = c[1], c[2]
        bit = 1 << e
        parts = []
        for x in range(3):
            found = np.False_
            for xp in range(3):
                a, b = cells[3 * x + xp], cells[3 * xp + x]
                if weak:
                    ok = (((a >> e) & 1) != 0) & (((b >> e) & 1) != 0)
                else:
                    ok = (a == bit) & (b == bit)
                found = found | ok
            parts.append(found)
        return conj(parts)
    if tag == "unique-opposite-at":
        z = c[1]
        parts = []
        for x in range(3):
            cnt = 0
            for xp in range(3):
                cnt = cnt + ((cells[3 * x + xp] >> z) & 1)
            parts.append(cnt == 1)
        return conj(parts)
    if tag == "scalar-zero-at":
        z = c[1]
        parts = []
        for x in range(3):
            parts.append(cells[3 * x + z] == 1 << x)
            parts.append(cells[3 * z + x] == 1 << x)
        return conj(parts)
    raise ValueError(f"constraint not vectorizable: {c!r}")


_TRIPLE_LAWS = {
    ("law", law)
    for law in (
        "associative",
        "weakly-associative",
        "left-inverted-associative",
        "right-inverted-associative",
    )
}


def v3_chunk_cells(head_digits):
    """Cell views for one chunk: the first row as ints, 8^6 vectorized tails."""
    head = tuple(int(_V3_CODE_TO_MASK[d]) for d in head_digits)
    return list(head) + list(_V3_TAIL_CELLS)


def v3_eval(cells, constraints):
    """Conjunction of vectorizable constraints; triple laws evaluated last."""
    ordered = [c for c in constraints if c not in _TRIPLE_LAWS] + [
        c for c in constraints if c in _TRIPLE_LAWS
    ]
    mask = np.True_
    for c in ordered:
        mask = mask & _v3_predicate(cells, c)
        dead = (not mask.any()) if isinstance(mask, np.ndarray) else not mask
        if dead:
            return np.False_
    return mask


def v3_divisions_nonempty(cells):
    """Every right and left division non-empty, computed membership-wise
    (independent of the reproductive row/column-union formulation)."""
    out = np.True_
    for x in range(3):
        for y in range(3):
            rd = np.False_
            ld = np.False_
            for z in range(3):
                rd = rd | (((cells[3 * z + y] >> x) & 1) != 0)
                ld = ld | (((cells[3 * y + z] >> x) & 1) != 0)
            out = out & rd & ld
    return out


def v3_mul_premises(cells, add: HyperTable, neg) -> object:
    """Mask for the multiplicative-hyperring premises over a varying mul and
    a fixed additive group: sign rule, inclusion distributivity (both sides)
    and non-degeneracy.  Associativity comes from v3_eval separately."""
    neg_lut = np.array([mask_image(m, neg) for m in range(8)], dtype=np.uint8)
    addc = np.zeros((8, 8), dtype=np.uint8)
    for m1 in range(8):
        for m2 in range(8):
            out = 0
            for i in range(3):
                if m1 >> i & 1:
                    for j in range(3):
                        if m2 >> j & 1:
                            out |= add.cell(i, j)
            addc[m1][m2] = out
    mask = np.True_
    for a in range(3):
        for b in range(3):
            image = neg_lut[cells[3 * a + b]]
            mask = mask & (cells[3 * a + neg[b]] == image)
            mask = mask & (cells[3 * neg[a] + b] == image)
    for a in range(3):
        for b in range(3):
            for c in range(3):
                d = (add.cell(b, c)).bit_length() - 1
                rhs = addc[cells[3 * a + b], cells[3 * a + c]]
                mask = mask & ((cells[3 * a + d] & ~rhs) == 0)
                rhs = addc[cells[3 * b + a], cells[3 * c + a]]
                mask = mask & ((cells[3 * d + a] & ~rhs) == 0)
    nondeg = np.False_
    for i in range(9):
        nondeg = nondeg | (cells[i] != 0)
    return mask & nondeg


def v3_mask_to_indices(mask):
    if isinstance(mask, np.ndarray):
        return np.flatnonzero(mask)
    return np.arange(8 ** 6) if mask else np.arange(0)


def v3_decode(head_digits, i) -> tuple:
    head = tuple(int(_V3_CODE_TO_MASK[d]) for d in head_digits)
    return head + tuple(int(_V3_TAIL_CELLS[k][i]) for k in range(6))


def vector_sweep3_chunk(head_digits, constraints, collect):
    """One chunk of the order-3 sweep: the first row fixed, 8^6 tails.

    Returns (satisfying-count, cell tuples if collect else None); tail scan
    order is the canonical table order.
    """
    vec = [c for c in constraints if vectorizable(c)]
    final = [c for c in constraints if not vectorizable(c)]
    cells = v3_chunk_cells(head_digits)
    head = tuple(cells[:3])

    mask = v3_eval(cells, vec)
    idx = v3_mask_to_indices(mask)
    if idx.size == 0:
        return 0, ([] if collect else None)

    survivors = []
    count = 0
    if final or collect:
        for i in idx:
            cell_tuple = head + tuple(int(_V3_TAIL_CELLS[k][i]) for k in range(6))
            table = HyperTable(3, cell_tuple)
            if all(constraint_holds(table, c) for c in final):
                count += 1
                if collect:
                    survivors.append(table.cells)
    else:
        count = int(idx.size)
    return count, (survivors if collect else None)


def vector_sweep3_tasks():
    """Chunk task list in canonical head order."""
    return list(product(range(8), repeat=3))


# -- backtracking engine -------------------------------------------------------


@lru_cache(maxsize=None)
def _image_lut(order: int, perm: tuple) -> tuple[int, ...]:
    return tuple(mask_image(m, perm) for m in range(1 << order))


def identity_lut(order: int) -> tuple[int, ...]:
    return tuple(range(1 << order))


class SearchSpec:
    """Declarative input to the backtracker; picklable for worker processes."""

    def __init__(
        self,
        order,
        kind="hyper",
        allow_empty=True,
        constraints=(),
        link_generators=(),   # ((src, dst, perm), ...): writing src forces dst
        forced=(),            # ((pos, mask), ...)
        required_bits=(),     # ((pos, bits), ...)
        final_check=None,     # extra callable(HyperTable) -> bool
        watcher_factory=None, # callable(spec) -> extra watchers {pos: [fn]}
    ):
        self.order = order
        self.kind = kind
        self.allow_empty = allow_empty
        self.constraints = tuple(constraints)
        self.link_generators = tuple(link_generators)
        self.forced = tuple(forced)
        self.required_bits = tuple(required_bits)
        self.final_check = final_check
        self.watcher_factory = watcher_factory


def _triple_positions(law, x, y, z, n):
    if law in ("associative", "weakly-associative"):
        pos = {x * n + y, y * n + z}
        pos.update(a * n + z for a in range(n))
        pos.update(x * n + b for b in range(n))
    elif law == "left-inverted-associative":
        pos = {x * n + y, z * n + y}
        pos.update(a * n + z for a in range(n))
        pos.update(a * n + x for a in range(n))
    else:  # right-inverted-associative
        pos = {y * n + z, y * n + x}
        pos.update(x * n + b for b in range(n))
        pos.update(z * n + b for b in range(n))
    return pos


class Backtracker:
    """Row-major DFS over orbit representatives with watcher-based pruning."""

    def __init__(self, spec: SearchSpec):
        self.spec = spec
        n = spec.order
        self.n = n
        self.n2 = n * n
        self.values = value_order(n, spec.kind, spec.allow_empty)
        self.full = full_mask(n)

        forced = dict(spec.forced)
        required = {}
        for pos, bits in spec.required_bits:
            required[pos] = required.get(pos, 0) | bits

        links = {}
        for c in spec.constraints:
            if c == ("law", "commutative"):
                for x in range(n):
                    for y in range(n):
                        links.setdefault(x * n + y, []).append(
                            (y * n + x, identity_lut(n))
                        )
            elif c[0] == "identity-at":
                e = c[1]
                for x in range(n):
                    links.setdefault(e * n + x, []).append(
                        (x * n + e, identity_lut(n))
                    )
                    links.setdefault(x * n + e, []).append(
                        (e * n + x, identity_lut(n))
                    )
                    bit = 1 << x
                    required[e * n + x] = required.get(e * n + x, 0) | bit
                    required[x * n + e] = required.get(x * n + e, 0) | bit
            elif c[0] == "scalar-zero-at":
                z = c[1]
                for x in range(n):
                    forced[x * n + z] = 1 << x
                    forced[z * n + x] = 1 << x
                forced[z * n + z] = 1 << z
            elif c == ("law", "total"):
                for pos in range(self.n2):
                    forced[pos] = self.full
            elif c == ("law", "degenerate"):
                for pos in range(self.n2):
                    forced[pos] = 0
        for src, dst, perm in spec.link_generators:
            links.setdefault(src, []).append((dst, _image_lut(n, tuple(perm))))

        # orbit closure: every position reachable from its representative
        self.orbits = self._close_orbits(links)
        self.forced = forced
        self.required = required
        self._build_domains()
        self._build_watchers()

    def _close_orbits(self, links):
        n2 = self.n2
        seen = [False] * n2
        orbits = []
        ident = identity_lut(self.n)
        for start in range(n2):
            if seen[start]:
                continue
            members = {start: [ident]}
            frontier = [(start, ident)]
            while frontier:
                pos, lut = frontier.pop()
                for dst, gen_lut in links.get(pos, ()):
                    new_lut = tuple(gen_lut[lut[v]] for v in range(len(lut)))
                    luts = members.setdefault(dst, [])
                    if new_lut not in luts:
                        luts.append(new_lut)
                        frontier.append((dst, new_lut))
            rep = min(members)
            if rep != start:
                # restart from the true minimum so reps come first row-major;
                # generator sets must be symmetric for this to re-cover the
                # orbit (commutativity, involutions and group actions are)
                members2 = {rep: [ident]}
                frontier = [(rep, ident)]
                while frontier:
                    pos, lut = frontier.pop()
                    for dst, gen_lut in links.get(pos, ()):
                        new_lut = tuple(gen_lut[lut[v]] for v in range(len(lut)))
                        luts = members2.setdefault(dst, [])
                        if new_lut not in luts:
                            luts.append(new_lut)
                            frontier.append((dst, new_lut))
                if set(members2) != set(members):
                    raise ValueError("link generators must be symmetric")
                members = members2
            for pos in members:
                seen[pos] = True
            orbits.append((rep, sorted(members.items())))
        orbits.sort()
        return orbits

    def _build_domains(self):
        self.slots = []
        self.slot_writes = []  # per slot: list of (pos, lut)
        self.domains = []
        self.prefill = {}
        for rep, members in self.orbits:
            writes = []
            for pos, luts in members:
                for lut in luts:
                    writes.append((pos, lut))
            dom = []
            for v in self.values:
                ok = True
                out = {}
                for pos, lut in writes:
                    w = lut[v]
                    if pos in out and out[pos] != w:
                        ok = False
                        break
                    out[pos] = w
                    req = self.required.get(pos, 0)
                    if w & req != req:
                        ok = False
                        break
                    if pos in self.forced and self.forced[pos] != w:
                        ok = False
                        break
                    if self.spec.kind == "composition" and w.bit_count() != 1:
                        ok = False
                        break
                    if not self.spec.allow_empty and w == 0:
                        ok = False
                        break
                if ok:
                    dom.append(v)
            all_forced = all(pos in self.forced for pos, _ in writes)
            if all_forced:
                v = self.forced[rep]
                # the rep's own lut is the identity, so v must be in values
                chosen = [val for val in dom if val == v]
                if not chosen:
                    self.domains.append([])  # contradictory pins: empty search
                    self.slots.append(rep)
                    self.slot_writes.append(writes)
                    continue
                for pos, lut in writes:
                    self.prefill[pos] = lut[v]
                continue
            self.slots.append(rep)
            self.slot_writes.append(writes)
            self.domains.append(dom)

    def _build_watchers(self):
        n = self.n
        n2 = self.n2
        spec = self.spec
        self.watchers = {pos: [] for pos in range(n2)}

        def add(pos, fn):
            self.watchers[pos].append(fn)

        for c in spec.constraints:
            if c[0] == "law" and c[1] in (
                "associative",
                "weakly-associative",
                "left-inverted-associative",
                "right-inverted-associative",
            ):
                law = c[1]
                by_pos = {}
                for x, y, z in product(range(n), repeat=3):
                    for pos in _triple_positions(law, x, y, z, n):
                        by_pos.setdefault(pos, []).append((x, y, z))
                for pos, triples in by_pos.items():
                    add(pos, self._triple_watcher(law, triples))
            elif c == ("law", "reproductive"):
                for pos in range(n2):
                    add(pos, self._reproductive_watcher(pos))
            elif c[0] == "unique-opposite-at":
                z = c[1]
                for pos in range(n2):
                    add(pos, self._opposite_watcher(pos // n, z))
            elif c[0] == "polysymmetry-at":
                e, weak = c[1], c[2]
                for pos in range(n2):
                    r, cc = divmod(pos, n)
                    for x in {r, cc}:
                        add(pos, self._poly_watcher(x, e, weak))

        if spec.watcher_factory is not None:
            for pos, fns in spec.watcher_factory(spec).items():
                for fn in fns:
                    add(pos, fn)

    # watcher builders return closures over (cur) -> bool

    def _triple_watcher(self, law, triples):
        n = self.n

        def outer_union(cur, outer_pos, col, transpose):
            m = cur[outer_pos]
            if m is None:
                return 0, False
            known, complete = 0, True
            i = 0
            while m:
                if m & 1:
                    c = cur[i * n + col] if not transpose else cur[col * n + i]
                    if c is None:
                        complete = False
                    else:
                        known |= c
                m >>= 1
                i += 1
            return known, complete

        weak = law == "weakly-associative"

        def watch(cur):
            for x, y, z in triples:
                if law in ("associative", "weakly-associative"):
                    la, ca = outer_union(cur, x * n + y, z, False)
                    lb, cb = outer_union(cur, y * n + z, x, True)
                elif law == "left-inverted-associative":
                    la, ca = outer_union(cur, x * n + y, z, False)
                    lb, cb = outer_union(cur, z * n + y, x, False)
                else:
                    la, ca = outer_union(cur, y * n + z, x, True)
                    lb, cb = outer_union(cur, y * n + x, z, True)
                if weak:
                    if la & lb:
                        continue
                    if (ca and cb) or (ca and not la) or (cb and not lb):
                        return False
                    continue
                if ca and cb:
                    if la != lb:
                        return False
                elif ca:
                    if lb & ~la:
                        return False
                elif cb:
                    if la & ~lb:
                        return False
            return True

        return watch

    def _reproductive_watcher(self, pos):
        n = self.n
        r, c = divmod(pos, n)
        full = self.full
        row_idx = [r * n + i for i in range(n)]
        col_idx = [i * n + c for i in range(n)]

        def watch(cur):
            union = 0
            for i in row_idx:
                v = cur[i]
                if v is None:
                    break
                union |= v
            else:
                if union != full:
                    return False
            union = 0
            for i in col_idx:
                v = cur[i]
                if v is None:
                    break
                union |= v
            else:
                if union != full:
                    return False
            return True

        return watch

    def _opposite_watcher(self, row, z):
        n = self.n
        idx = [row * n + i for i in range(n)]
        bit = 1 << z

        def watch(cur):
            count = 0
            complete = True
            for i in idx:
                v = cur[i]
                if v is None:
                    complete = False
                elif v & bit:
                    count += 1
                    if count > 1:
                        return False
            return not (complete and count != 1)

        return watch

    def _poly_watcher(self, x, e, weak):
        n = self.n
        bit = 1 << e

        def watch(cur):
            witness_possible = False
            for xp in range(n):
                a = cur[x * n + xp]
                b = cur[xp * n + x]
                if weak:
                    ok_a = a is None or (a & bit)
                    ok_b = b is None or (b & bit)
                else:
                    ok_a = a is None or a == bit
                    ok_b = b is None or b == bit
                if ok_a and ok_b:
                    witness_possible = True
                    break
            return witness_possible

        return watch

    # -- search ----------------------------------------------------------------

    def search(self, first_value_index=None):
        """Yield satisfying cell tuples; also counts pruned nodes in self.pruned."""
        self.pruned = 0
        self.nodes = 0
        cur = [None] * self.n2
        for pos, v in self.prefill.items():
            cur[pos] = v
        for pos, v in self.prefill.items():
            for fn in self.watchers[pos]:
                if not fn(cur):
                    self.pruned += 1
                    return
        if not self.slots:
            yield from self._emit(cur)
            return
        yield from self._dfs(cur, 0, first_value_index)

    def _dfs(self, cur, depth, first_value_index):
        if depth == len(self.slots):
            yield from self._emit(cur)
            return
        writes = self.slot_writes[depth]
        domain = self.domains[depth]
        if depth == 0 and first_value_index is not None:
            if first_value_index >= len(domain):
                return
            domain = domain[first_value_index : first_value_index + 1]
        watchers = self.watchers
        for v in domain:
            self.nodes += 1
            written = []
            ok = True
            for pos, lut in writes:
                w = lut[v]
                if cur[pos] is None:
                    cur[pos] = w
                    written.append(pos)
                elif cur[pos] != w:
                    ok = False
                    break
            if ok:
                for pos in written:
                    for fn in watchers[pos]:
                        if not fn(cur):
                            ok = False
                            break
                    if not ok:
                        break
            if ok:
                yield from self._dfs(cur, depth + 1, None)
            else:
                self.pruned += 1
            for pos in written:
                cur[pos] = None

    def _emit(self, cur):
        table = HyperTable(self.n, tuple(cur), self.spec.kind)
        if not satisfies_all(table, self.spec.constraints):
            return
        if self.spec.final_check is not None and not self.spec.final_check(table):
            return
        yield table.cells

    def first_domain_size(self) -> int:
        return len(self.domains[0]) if self.slots else 1


def backtrack_count_and_collect(spec: SearchSpec, first_value_index=None):
    bt = Backtracker(spec)
    out = list(bt.search(first_value_index))
    return out, bt.pruned, bt.nodes
