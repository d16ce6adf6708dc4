"""Exhaustive enumeration of models satisfying a constraint set.

A job names its constraints with public ids: any law id from
axioms.LAW_IDS, or a structure id from the classify module.  Structures
quantified over a candidate element (canonical-hypergroup and friends) sweep
every candidate unless the job pins one.  Models are emitted exactly once, in
canonical table order; with up_to_iso each isomorphism class is emitted once,
represented by its canonical form.

Oracle mode ignores every pruning device and filters the raw space (pure
Python at order <= 2 and for compositions, the vectorized full-space engine
at order 3); it is the certification path for the backtracking generator.
"""

import json
import time
from dataclasses import dataclass
from functools import partial
from itertools import product

from . import axioms, classify, engines
from .model import (
    HyperTable,
    TwoOpModel,
    canonical_form,
    canonical_form_two_op,
    singleton_value,
    table_key,
    two_op_key,
)
from .parallel import parallel_map

SINGLE_OP_CAP = 5
TWO_OP_CAP = 4

SINGLE_STRUCTURES = {
    "partial-hypergroupoid": (),  # final label check only
    "hypergroupoid": (("law", "cellwise-nonempty"),),
    "semihypergroup": (("law", "cellwise-nonempty"), ("law", "associative")),
    "quasihypergroup": (("law", "cellwise-nonempty"), ("law", "reproductive")),
    "hypergroup": (("law", "associative"), ("law", "reproductive")),
    "group": (("law", "associative"), ("law", "reproductive")),
    "hv-group": (("law", "reproductive"), ("law", "weakly-associative")),
    "la-hypergroup": (("law", "reproductive"), ("law", "left-inverted-associative")),
    "ra-hypergroup": (("law", "reproductive"), ("law", "right-inverted-associative")),
}

# structures quantified over a candidate element: id -> constraints(candidate)
SINGLE_QUANTIFIED = {
    "qmp-hypergroup": lambda e: (
        ("law", "associative"),
        ("identity-at", e),
        ("polysymmetry-at", e, False),
    ),
    "m-polysymmetrical-hypergroup": lambda e: (
        ("law", "associative"),
        ("law", "commutative"),
        ("identity-at", e),
        ("polysymmetry-at", e, False),
    ),
    "canonical-hypergroup": lambda z: (
        ("law", "associative"),
        ("law", "commutative"),
        ("unique-opposite-at", z),
        ("reversibility-at", z),
    ),
    "quasicanonical-hypergroup": lambda z: (
        ("law", "associative"),
        ("unique-opposite-at", z),
        ("reversibility-at", z),
    ),
    "normal-hypergroup": lambda z: (
        ("law", "associative"),
        ("law", "reproductive"),
        ("scalar-zero-at", z),
        ("unique-opposite-at", z),
    ),
}

TWO_OP_STRUCTURES = frozenset(classify.TWO_OP_LABELS)


@dataclass
class EnumerationJob:
    order: int
    constraints: tuple
    up_to_iso: bool = False
    zero: int | None = None
    one: int | None = None
    oracle: bool = False
    emit: object = None  # optional callable(model)

    def __post_init__(self):
        self.constraints = tuple(self.constraints)


@dataclass
class EnumerationSummary:
    raw_count: int
    canonical_count: int
    pruned_nodes: int
    wall_time: float

    def to_json(self, include_wall_time=True) -> dict:
        out = {
            "raw_count": self.raw_count,
            "canonical_count": self.canonical_count,
            "pruned_nodes": self.pruned_nodes,
        }
        if include_wall_time:
            out["wall_time"] = self.wall_time
        return out


def job_is_two_op(job: EnumerationJob) -> bool:
    return any(c in TWO_OP_STRUCTURES for c in job.constraints)


def _check_job(job: EnumerationJob):
    two_op = job_is_two_op(job)
    cap = TWO_OP_CAP if two_op else SINGLE_OP_CAP
    if not 1 <= job.order <= cap:
        raise ValueError(f"order {job.order} above the cap {cap} for this job")
    for c in job.constraints:
        known = (
            c in axioms.LAW_IDS
            or c in SINGLE_STRUCTURES
            or c in SINGLE_QUANTIFIED
            or c in TWO_OP_STRUCTURES
        )
        if not known:
            raise ValueError(f"unknown constraint id: {c!r}")
    if two_op and any(
        c in SINGLE_STRUCTURES or c in SINGLE_QUANTIFIED for c in job.constraints
    ):
        raise ValueError("cannot mix single-operation and two-operation structures")
    for pin in (job.zero, job.one):
        if pin is not None and not 0 <= pin < job.order:
            raise ValueError("pinned constant out of range")
    if job.zero is not None and job.zero == job.one and job.order > 1:
        raise ValueError("contradictory constant pins: zero = one")


# -- single-operation jobs -------------------------------------------------------


def _single_final_predicate(job: EnumerationJob):
    struct_ids = [
        c for c in job.constraints if c in SINGLE_STRUCTURES or c in SINGLE_QUANTIFIED
    ]
    law_ids = [c for c in job.constraints if c in axioms.LAW_IDS]

    def ok(table: HyperTable) -> bool:
        for law in law_ids:
            if not axioms.check_law(table, law).holds:
                return False
        if struct_ids:
            labels = classify.classify_single(table).labels
            if any(s not in labels for s in struct_ids):
                return False
        return True

    return ok


def _candidates(job: EnumerationJob):
    return range(job.order) if job.zero is None else (job.zero,)


def _single_runs(job: EnumerationJob):
    """(constraint-descriptor sets, singleton_only): the union of the runs'
    model sets covers the job's model set."""
    base = [("law", c) for c in job.constraints if c in axioms.LAW_IDS]
    singleton_only = "group" in job.constraints
    for c in job.constraints:
        if c in SINGLE_STRUCTURES:
            base.extend(SINGLE_STRUCTURES[c])
    quantified = [c for c in job.constraints if c in SINGLE_QUANTIFIED]
    if not quantified:
        return [tuple(base)], singleton_only
    return [
        tuple(base) + SINGLE_QUANTIFIED[quantified[0]](cand) for cand in _candidates(job)
    ], singleton_only


def _run_backtrack_task(args):
    spec_args, first_index = args
    spec = engines.SearchSpec(**spec_args)
    cells, pruned, _nodes = engines.backtrack_count_and_collect(spec, first_index)
    return cells, pruned


def _vector_oracle_chunk(task, constraints):
    _, collected = engines.vector_sweep3_chunk(task, list(constraints), collect=True)
    return collected


def _cells_key(cells):
    return tuple(engines.cell_key(m) for m in cells)


def _enumerate_single(job: EnumerationJob, workers: int):
    final_ok = _single_final_predicate(job)
    runs, singleton_only = _single_runs(job)
    kind = "composition" if singleton_only else "hyper"
    pruned_total = 0
    seen = set()

    if job.oracle:
        if job.order <= 2 or kind == "composition":
            if kind == "composition" and job.order > 3:
                raise ValueError("oracle mode caps composition jobs at order 3")
            for cells in product(
                engines.value_order(job.order, kind, True),
                repeat=job.order * job.order,
            ):
                if final_ok(HyperTable(job.order, cells, kind)):
                    seen.add(cells)
        elif job.order == 3:
            for run in runs:
                vec = tuple(c for c in run if engines.vectorizable(c))
                fn = partial(_vector_oracle_chunk, constraints=vec)
                for chunk in parallel_map(fn, engines.vector_sweep3_tasks(), workers):
                    for cells in chunk:
                        if cells not in seen and final_ok(HyperTable(3, cells)):
                            seen.add(cells)
        else:
            raise ValueError("oracle mode caps single-operation jobs at order 3")
    else:
        for run in runs:
            spec_args = dict(
                order=job.order,
                kind=kind,
                allow_empty=kind == "hyper",
                constraints=run,
            )
            probe = engines.Backtracker(engines.SearchSpec(**spec_args))
            tasks = [(spec_args, i) for i in range(probe.first_domain_size())]
            for cells, pruned in parallel_map(_run_backtrack_task, tasks, workers):
                pruned_total += pruned
                for cc in cells:
                    if cc not in seen and final_ok(HyperTable(job.order, cc, kind)):
                        seen.add(cc)

    tables = [HyperTable(job.order, cc, kind) for cc in sorted(seen, key=_cells_key)]
    return tables, pruned_total


# -- two-operation jobs -----------------------------------------------------------


def _mul_candidates(job: EnumerationJob, want_group: bool):
    """(zero, mul) pairs: composition tables with absorbing zero and a
    semigroup (or group) on the nonzero elements."""
    n = job.order
    out = []
    for zero in _candidates(job):
        forced = {}
        for x in range(n):
            forced[x * n + zero] = 1 << zero
            forced[zero * n + x] = 1 << zero
        if job.one is not None and n > 1:
            for x in range(n):
                if x != zero:
                    forced[job.one * n + x] = 1 << x
                    forced[x * n + job.one] = 1 << x
        spec = engines.SearchSpec(
            n,
            kind="composition",
            constraints=(("law", "associative"),),
            forced=tuple(forced.items()),
        )
        variant = (
            "multiplicative-group-on-H*" if want_group
            else "multiplicative-semigroup-on-H*"
        )
        for cells in engines.Backtracker(spec).search():
            mul = HyperTable(n, cells, "composition")
            probe = TwoOpModel(n, mul, mul, zero)  # star checks read only mul
            if axioms.check_ring_axioms(probe, variant).holds:
                out.append((zero, mul))
    return out


def _group_action_links(mul: HyperTable, zero: int, n: int):
    """Left-multiplication relabelings: distributive equality forces the
    additive table to be equivariant under every invertible g."""
    links = []
    for g in range(n):
        if g == zero:
            continue
        perm = tuple(singleton_value(mul.cell(g, x)) for x in range(n))
        if sorted(perm) != list(range(n)):
            continue
        for x in range(n):
            for y in range(n):
                links.append((x * n + y, perm[x] * n + perm[y], perm))
    return links


def _sign_links(neg, n):
    perm = tuple(neg)
    if perm == tuple(range(n)):
        return []
    links = []
    for x in range(n):
        for y in range(n):
            links.append((x * n + y, perm[x] * n + y, perm))
            links.append((x * n + y, x * n + perm[y], perm))
    return links


def _distributive_watchers(spec, add: HyperTable):
    """Inclusion-distributivity pruning over a fixed additive group, plus the
    rule that one empty product empties its whole row and column."""
    n = add.order
    watchers = {}

    def register(pos, fn):
        watchers.setdefault(pos, []).append(fn)

    def add_complex(ab, ac):
        out = 0
        m = ab
        i = 0
        while m:
            if m & 1:
                mm = ac
                j = 0
                while mm:
                    if mm & 1:
                        out |= add.cell(i, j)
                    mm >>= 1
                    j += 1
            m >>= 1
            i += 1
        return out

    def incl_watch(lhs_pos, left_pos, right_pos):
        def watch(cur):
            lhs, left, right = cur[lhs_pos], cur[left_pos], cur[right_pos]
            if lhs is None or left is None or right is None:
                return True
            return not (lhs & ~add_complex(left, right))

        return watch

    for a in range(n):
        for b in range(n):
            for c in range(n):
                d = singleton_value(add.cell(b, c))
                w = incl_watch(a * n + d, a * n + b, a * n + c)
                for pos in {a * n + d, a * n + b, a * n + c}:
                    register(pos, w)
                w = incl_watch(d * n + a, b * n + a, c * n + a)
                for pos in {d * n + a, b * n + a, c * n + a}:
                    register(pos, w)

    def row_col_mix(pos):
        r, c = divmod(pos, n)

        def watch(cur):
            states = [cur[r * n + i] for i in range(n)]
            if any(v == 0 for v in states) and any(v for v in states if v is not None):
                return False
            states = [cur[i * n + c] for i in range(n)]
            return not (
                any(v == 0 for v in states) and any(v for v in states if v is not None)
            )

        return watch

    for pos in range(n * n):
        register(pos, row_col_mix(pos))
    return watchers


def _abelian_group_tables(job: EnumerationJob):
    """(zero, add) for every labeled abelian group table of the job's order."""
    n = job.order
    out = []
    spec = engines.SearchSpec(
        n,
        kind="composition",
        constraints=(
            ("law", "associative"),
            ("law", "reproductive"),
            ("law", "commutative"),
        ),
    )
    for cells in engines.Backtracker(spec).search():
        add = HyperTable(n, cells, "composition")
        scalars = axioms.find_identities(add).scalar
        if not scalars:
            continue
        zero = scalars.bit_length() - 1
        if job.zero is not None and zero != job.zero:
            continue
        out.append((zero, add))
    return out


_GROUP_FAMILY = {"hyperfield", "hyperfield-def15"}
_SEMIGROUP_FAMILY = {
    "krasner-hyperring",
    "unitary-hyperring",
    "m-polysymmetrical-hyperring",
}
_ADDGROUP_FAMILY = {"multiplicative-hyperring-def6", "multiplicative-hyperring-def7"}


def _enumerate_two_op(job: EnumerationJob, workers: int):
    structures = [c for c in job.constraints if c in TWO_OP_STRUCTURES]
    extra_laws = [c for c in job.constraints if c in axioms.LAW_IDS]
    n = job.order

    def final_ok(model: TwoOpModel) -> bool:
        for law in extra_laws:
            if not axioms.check_law(model.add, law).holds:
                return False
        labels = classify.classify_two_op(model).labels
        return all(s in labels for s in structures)

    seen = {}
    pruned_total = 0

    if job.oracle:
        if n > 2:
            raise ValueError("two-operation oracle mode is limited to order 2")
        masks = engines.key_sorted_masks(n)
        n2 = n * n
        for zero in _candidates(job):
            for add_cells in product(masks, repeat=n2):
                add = HyperTable(n, add_cells)
                # every two-operation structure requires a commutative
                # associative addition; screening here keeps the inner loop
                # honest (same predicates) but 20x cheaper
                if structures and not (
                    axioms.check_law(add, "associative").holds
                    and axioms.check_law(add, "commutative").holds
                ):
                    continue
                for mul_cells in product(masks, repeat=n2):
                    model = _with_detected_one(
                        n, add, HyperTable(n, mul_cells), zero, job
                    )
                    if model is not None and final_ok(model):
                        seen[two_op_key(model)] = model
        return [seen[k] for k in sorted(seen)], 0

    want_group = any(s in _GROUP_FAMILY for s in structures)
    if want_group or any(s in _SEMIGROUP_FAMILY for s in structures):
        for zero, mul in _mul_candidates(job, want_group):
            links = _group_action_links(mul, zero, n) if want_group else ()
            if "m-polysymmetrical-hyperring" in structures:
                add_constraints = (
                    ("law", "associative"),
                    ("law", "commutative"),
                    ("identity-at", zero),
                    ("polysymmetry-at", zero, False),
                )
            else:
                add_constraints = (
                    ("law", "associative"),
                    ("law", "commutative"),
                    ("unique-opposite-at", zero),
                )
            spec = engines.SearchSpec(
                n,
                constraints=add_constraints,
                link_generators=tuple(links),
            )
            bt = engines.Backtracker(spec)
            for add_cells in bt.search():
                model = _with_detected_one(n, HyperTable(n, add_cells), mul, zero, job)
                if model is not None and final_ok(model):
                    seen[two_op_key(model)] = model
            pruned_total += bt.pruned
    elif any(s in _ADDGROUP_FAMILY for s in structures):
        allow_empty = "multiplicative-hyperring-def6" not in structures
        for zero, add in _abelian_group_tables(job):
            neg = axioms.group_inverse_map(add, zero)
            spec = engines.SearchSpec(
                n,
                allow_empty=allow_empty,
                constraints=(("law", "associative"),),
                link_generators=tuple(_sign_links(neg, n)),
                watcher_factory=partial(_distributive_watchers, add=add),
            )
            bt = engines.Backtracker(spec)
            for mul_cells in bt.search():
                model = _with_detected_one(n, add, HyperTable(n, mul_cells), zero, job)
                if model is not None and final_ok(model):
                    seen[two_op_key(model)] = model
            pruned_total += bt.pruned
    else:
        raise ValueError("two-operation jobs need at least one structure id")

    return [seen[k] for k in sorted(seen)], pruned_total


def _with_detected_one(n, add, mul, zero, job):
    """Assemble the model with `one` = the detected multiplicative identity.

    The identity is derived data, so two-operation models are counted by
    (add, mul, zero) alone; a pinned `one` filters to models whose detected
    identity matches it.
    """
    one = axioms.multiplicative_identity(TwoOpModel(n, add, mul, zero))
    if job.one is not None and one != job.one:
        return None
    if one is not None and one == zero and n > 1:
        one = None
    return TwoOpModel(n, add, mul, zero, one)


# -- public API -------------------------------------------------------------------


def enumerate_models(job: EnumerationJob, workers: int = 1) -> EnumerationSummary:
    """Run the job, stream models to job.emit, return exact counts."""
    _check_job(job)
    start = time.perf_counter()
    if job_is_two_op(job):
        models, pruned = _enumerate_two_op(job, workers)
        canonical = {}
        for m in models:
            cm = canonical_form_two_op(m)
            canonical.setdefault(two_op_key(cm), cm)
        reps = [canonical[k] for k in sorted(canonical)]
    else:
        models, pruned = _enumerate_single(job, workers)
        fixed = [p for p in (job.zero, job.one) if p is not None]
        canonical = {}
        for m in models:
            cm = canonical_form(m, fixed)
            canonical.setdefault(table_key(cm), cm)
        reps = [canonical[k] for k in sorted(canonical)]

    emitted = reps if job.up_to_iso else models
    if job.emit is not None:
        for m in emitted:
            job.emit(m)
    return EnumerationSummary(
        raw_count=len(models),
        canonical_count=len(canonical),
        pruned_nodes=pruned,
        wall_time=time.perf_counter() - start,
    )


# -- golden catalog ----------------------------------------------------------------


def run_catalog_job(entry: dict, workers: int = 1):
    collected = []
    job = EnumerationJob(
        order=entry["order"],
        constraints=tuple(entry["constraints"]),
        up_to_iso=False,
        zero=entry.get("zero"),
        one=entry.get("one"),
        oracle=entry["order"] <= 2,
        emit=collected.append,
    )
    summary = enumerate_models(job, workers)
    return summary, collected


def golden_check(catalog_path, workers: int = 1) -> dict:
    """Re-run every catalog job (oracle mode at order <= 2, pruned above) and
    compare both counts bit-exactly."""
    try:
        with open(catalog_path, encoding="utf-8") as fh:
            catalog = json.load(fh)
        entries = catalog["jobs"]
    except (OSError, ValueError, KeyError) as exc:
        raise ValueError(f"catalog missing or corrupt: {exc}") from exc

    results = []
    for entry in entries:
        summary, _models = run_catalog_job(entry, workers)
        entry_result = {
            "name": entry["name"],
            "expected_raw": entry["expect_raw"],
            "actual_raw": summary.raw_count,
            "expected_canonical": entry["expect_canonical"],
            "actual_canonical": summary.canonical_count,
        }
        entry_result["ok"] = (
            entry_result["actual_raw"] == entry_result["expected_raw"]
            and entry_result["actual_canonical"] == entry_result["expected_canonical"]
        )
        results.append(entry_result)
    return {"pass": all(r["ok"] for r in results), "entries": results}
