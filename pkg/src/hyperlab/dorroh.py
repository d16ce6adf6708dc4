"""Adjoining integers to a finite hyperring: pairs (k, x) with exact integer
arithmetic in the first slot and hyperring arithmetic in the second.

Addition is (n,x) + (m,y) = {(n+m, z) : z in x+y}.  Multiplication is
(n,x)·(m,y) = {(nm, z) : z in ny + mx + xy}, which is set-valued, so the
probe checks both association orders of the product against each other and
against their common superset

    {(nmk, v) : v in (nm)z + (kn)y + (km)x + k(xy) + n(yz) + m(xz) + (xy)z}

over every triple with integer parts in a window [-N, N].  Integer parts are
exact Python ints, so products may leave the window without wrapping.
"""

from dataclasses import dataclass
from functools import partial

from . import axioms
from .classify import classify_two_op
from .model import TwoOpModel, complex_product, members_of, singleton_value
from .parallel import parallel_map


@dataclass(frozen=True, slots=True, order=True)
class DorrohPair:
    k: int
    x: int

    def to_json(self):
        return [self.k, self.x]


def normalize(pairs) -> tuple[DorrohPair, ...]:
    """Sorted, deduplicated pair set."""
    return tuple(sorted(set(pairs)))


@dataclass
class ProbeReport:
    base: str
    radius: int
    triples_checked: int
    assoc_equal_count: int
    weak_assoc_ok_count: int
    inclusion_ok: bool
    canonical_window_ok: bool
    first_assoc_violation: dict | None = None
    wall_time: float = 0.0

    def to_json(self, include_wall_time=True) -> dict:
        out = {
            "base": self.base,
            "radius": self.radius,
            "triples_checked": self.triples_checked,
            "assoc_equal_count": self.assoc_equal_count,
            "weak_assoc_ok_count": self.weak_assoc_ok_count,
            "inclusion_ok": self.inclusion_ok,
            "canonical_window_ok": self.canonical_window_ok,
            "first_assoc_violation": self.first_assoc_violation,
        }
        if include_wall_time:
            out["wall_time"] = self.wall_time
        return out


def require_krasner_base(model: TwoOpModel):
    """The probe needs a Krasner hyperring; raises otherwise."""
    labels = classify_two_op(model).labels
    if "krasner-hyperring" not in labels:
        raise axioms.PreconditionError(
            "the base model is not a Krasner hyperring"
        )


def _require_additive_axioms(model: TwoOpModel):
    for law in ("associative", "commutative"):
        if not axioms.check_law(model.add, law).holds:
            raise axioms.PreconditionError(f"base addition is not {law}")
    opp = axioms.opposite_map(model.add, model.zero)
    if opp is None:
        raise axioms.PreconditionError("base addition lacks unique opposites")
    return opp


def scaled_sum(model: TwoOpModel, k: int, y: int) -> int:
    """Cell set of k·y: the k-fold complex sum of {y}, with 0·y = {zero} and
    negative multiples folded through the opposite map."""
    opp = _require_additive_axioms(model)
    if k < 0:
        return scaled_sum(model, -k, opp[y])
    if k == 0:
        return 1 << model.zero
    out = 1 << y
    for _ in range(k - 1):
        out = complex_product(model.add, out, 1 << y)
    return out


def dorroh_add(model: TwoOpModel, p: DorrohPair, q: DorrohPair):
    _require_additive_axioms(model)
    return normalize(
        DorrohPair(p.k + q.k, z) for z in members_of(model.add.cell(p.x, q.x))
    )


def dorroh_mul(model: TwoOpModel, p: DorrohPair, q: DorrohPair):
    """{(nm, z) : z in n·y + m·x + x·y}; base multiplication must be
    single-valued."""
    opp = _require_additive_axioms(model)
    ny = scaled_sum(model, p.k, q.x)
    mx = scaled_sum(model, q.k, p.x)
    xy = 1 << singleton_value(model.mul.cell(p.x, q.x))
    spread = complex_product(model.add, complex_product(model.add, ny, mx), xy)
    return normalize(DorrohPair(p.k * q.k, z) for z in members_of(spread))


def _mul_set(model, pairs, q):
    out = set()
    for p in pairs:
        out.update(dorroh_mul(model, p, q))
    return normalize(out)


def _mul_set_right(model, p, pairs):
    out = set()
    for q in pairs:
        out.update(dorroh_mul(model, p, q))
    return normalize(out)


def _superset(model, p, q, r):
    """The displayed common superset of both association orders."""
    n, x = p.k, p.x
    m, y = q.k, q.x
    k, z = r.k, r.x
    mul = model.mul
    add = model.add
    xy = singleton_value(mul.cell(x, y))
    yz = singleton_value(mul.cell(y, z))
    xz = singleton_value(mul.cell(x, z))
    terms = [
        scaled_sum(model, n * m, z),
        scaled_sum(model, k * n, y),
        scaled_sum(model, k * m, x),
        scaled_sum(model, k, xy),
        scaled_sum(model, n, yz),
        scaled_sum(model, m, xz),
        1 << singleton_value(mul.cell(xy, z)),
    ]
    spread = terms[0]
    for t in terms[1:]:
        spread = complex_product(add, spread, t)
    return normalize(DorrohPair(n * m * k, v) for v in members_of(spread))


def _window(model: TwoOpModel, radius: int):
    return [
        DorrohPair(k, x)
        for k in range(-radius, radius + 1)
        for x in range(model.order)
    ]


def _probe_triple(args, model):
    p, q, r = args
    left = _mul_set(model, dorroh_mul(model, p, q), r)
    right = _mul_set_right(model, p, dorroh_mul(model, q, r))
    sup = set(_superset(model, p, q, r))
    equal = left == right
    weak = bool(set(left) & set(right))
    included = set(left) <= sup and set(right) <= sup
    return equal, weak, included, left, right


def _check_canonical_window(model, window, opp):
    zero_pair = DorrohPair(0, model.zero)
    for p in window:
        if dorroh_add(model, zero_pair, p) != (p,):
            return False
        if dorroh_add(model, p, zero_pair) != (p,):
            return False
        opposite = DorrohPair(-p.k, opp[p.x])
        if zero_pair not in dorroh_add(model, p, opposite):
            return False
    for p in window:
        for q in window:
            if dorroh_add(model, p, q) != dorroh_add(model, q, p):
                return False
            for r in window:
                left = set()
                for s in dorroh_add(model, p, q):
                    left.update(dorroh_add(model, s, r))
                right = set()
                for s in dorroh_add(model, q, r):
                    right.update(dorroh_add(model, p, s))
                if normalize(left) != normalize(right):
                    return False
    return True


def associativity_probe(
    model: TwoOpModel, radius: int, workers: int = 1, base_name: str = "base"
) -> ProbeReport:
    """Check both association orders of the product on the window, their
    membership in the common superset, and that the window addition behaves
    like a canonical hypergroup."""
    import time

    if radius < 1:
        raise ValueError("window radius must be at least 1")
    require_krasner_base(model)
    opp = _require_additive_axioms(model)
    start = time.perf_counter()

    window = _window(model, radius)
    triples = [(p, q, r) for p in window for q in window for r in window]
    fn = partial(_probe_triple, model=model)
    equal_count = 0
    weak_count = 0
    inclusion_ok = True
    first_violation = None
    for (p, q, r), (equal, weak, included, left, right) in zip(
        triples, parallel_map(fn, triples, workers)
    ):
        equal_count += equal
        weak_count += weak
        inclusion_ok = inclusion_ok and included
        if not equal and first_violation is None:
            first_violation = {
                "triple": [p.to_json(), q.to_json(), r.to_json()],
                "left": [s.to_json() for s in left],
                "right": [s.to_json() for s in right],
            }

    canonical_ok = _check_canonical_window(model, _window(model, min(radius, 2)), opp)
    return ProbeReport(
        base=base_name,
        radius=radius,
        triples_checked=len(triples),
        assoc_equal_count=equal_count,
        weak_assoc_ok_count=weak_count,
        inclusion_ok=inclusion_ok,
        canonical_window_ok=canonical_ok,
        first_assoc_violation=first_violation,
        wall_time=time.perf_counter() - start,
    )
