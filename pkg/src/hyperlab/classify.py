"""Compose axiom verdicts into named structure labels.

A classification never raises on a negative verdict: every tested structure
gets an evidence trail of axiom results, and the label set is closed under
the implication lattice (a hypergroup is also a quasihypergroup, a
semihypergroup and a hypergroupoid, and so on).
"""

from dataclasses import dataclass, field

from . import axioms
from .axioms import PreconditionError, check_law, check_ring_axioms
from .model import HyperTable, HypermoduleModel, TwoOpModel, members_of

SINGLE_LABELS = (
    "partial-hypergroupoid",
    "hypergroupoid",
    "semihypergroup",
    "quasihypergroup",
    "hypergroup",
    "group",
    "hv-group",
    "la-hypergroup",
    "ra-hypergroup",
    "qmp-hypergroup",
    "m-polysymmetrical-hypergroup",
    "normal-hypergroup",
    "canonical-hypergroup",
    "quasicanonical-hypergroup",
)

TWO_OP_LABELS = (
    "krasner-hyperring",
    "unitary-hyperring",
    "hyperfield",
    "hyperfield-def15",
    "multiplicative-hyperring-def6",
    "multiplicative-hyperring-def7",
    "m-polysymmetrical-hyperring",
)


@dataclass(frozen=True)
class ClassificationReport:
    labels: frozenset
    evidence: dict = field(default_factory=dict)
    constants: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "labels": sorted(self.labels),
            "evidence": self.evidence,
            "constants": self.constants,
        }


def _entry(axiom_id: str, result, candidate=None) -> dict:
    out = {"axiom": axiom_id, "holds": result.holds}
    if result.witness is not None:
        out["witness"] = result.witness.to_json()
    if candidate is not None:
        out.update(candidate)
    return out


def _all_hold(evidence_list) -> bool:
    return all(e["holds"] for e in evidence_list)


def _canonical_axioms(table, zero, with_reversibility: bool):
    """Additive axiom trail at a fixed zero: associativity, commutativity,
    unique opposite and (optionally) reversibility."""
    tag = {"zero": zero}
    trail = [
        _entry("associative", check_law(table, "associative"), tag),
        _entry("commutative", check_law(table, "commutative"), tag),
        _entry("unique-opposite", axioms.check_unique_opposite(table, zero), tag),
    ]
    if with_reversibility:
        if trail[-1]["holds"]:
            trail.append(
                _entry(
                    "reversibility-canonical",
                    axioms.check_reversibility_canonical(table, zero),
                    tag,
                )
            )
        else:
            trail.append(
                {
                    "axiom": "reversibility-canonical",
                    "holds": False,
                    "precondition": "opposite map undefined",
                    "zero": zero,
                }
            )
    return trail


def _quasicanonical_axioms(table, zero):
    tag = {"zero": zero}
    trail = [
        _entry("associative", check_law(table, "associative"), tag),
        _entry("unique-opposite", axioms.check_unique_opposite(table, zero), tag),
    ]
    if trail[-1]["holds"]:
        trail.append(
            _entry(
                "reversibility-canonical",
                axioms.check_reversibility_canonical(table, zero),
                tag,
            )
        )
    else:
        trail.append(
            {
                "axiom": "reversibility-canonical",
                "holds": False,
                "precondition": "opposite map undefined",
                "zero": zero,
            }
        )
    return trail


def _search_candidates(table, candidates, trail_fn, evidence, structure):
    """Try each candidate element; the structure holds if any candidate works.

    All candidates' trails are recorded (tagged with the candidate) so a
    negative verdict still shows why each choice failed.
    """
    evidence.setdefault(structure, [])
    winner = None
    for cand in candidates:
        trail = trail_fn(cand)
        evidence[structure].extend(trail)
        if winner is None and _all_hold(trail):
            winner = cand
    return winner


def classify_single(table: HyperTable) -> ClassificationReport:
    """Full label set for one hyperoperation table."""
    labels = set()
    evidence = {}
    constants = {}
    n = table.order

    law = {law_id: check_law(table, law_id) for law_id in axioms.LAW_IDS}
    nonempty = law["cellwise-nonempty"].holds

    labels.add("hypergroupoid" if nonempty else "partial-hypergroupoid")
    evidence["hypergroupoid"] = [_entry("cellwise-nonempty", law["cellwise-nonempty"])]

    if nonempty and law["associative"].holds:
        labels.add("semihypergroup")
    evidence["semihypergroup"] = [
        _entry("cellwise-nonempty", law["cellwise-nonempty"]),
        _entry("associative", law["associative"]),
    ]
    if nonempty and law["reproductive"].holds:
        labels.add("quasihypergroup")
    evidence["quasihypergroup"] = [
        _entry("cellwise-nonempty", law["cellwise-nonempty"]),
        _entry("reproductive", law["reproductive"]),
    ]

    is_hypergroup = law["associative"].holds and law["reproductive"].holds
    if is_hypergroup:
        labels.add("hypergroup")
        labels.update(("hypergroupoid", "semihypergroup", "quasihypergroup"))
        labels.discard("partial-hypergroupoid")
    evidence["hypergroup"] = [
        _entry("associative", law["associative"]),
        _entry("reproductive", law["reproductive"]),
    ]

    all_singleton = all(c.bit_count() == 1 for c in table.cells)
    if is_hypergroup and all_singleton:
        labels.add("group")

    if law["reproductive"].holds and law["weakly-associative"].holds:
        labels.add("hv-group")
    evidence["hv-group"] = [
        _entry("reproductive", law["reproductive"]),
        _entry("weakly-associative", law["weakly-associative"]),
    ]
    if law["reproductive"].holds and law["left-inverted-associative"].holds:
        labels.add("la-hypergroup")
    if law["reproductive"].holds and law["right-inverted-associative"].holds:
        labels.add("ra-hypergroup")

    # qMp: associative with some e satisfying the neutral and polysymmetry axioms
    identities = axioms.find_identities(table)

    def qmp_trail(e):
        tag = {"identity": e}
        return [
            _entry("associative", law["associative"], tag),
            _entry("identity-element", axioms.check_identity_element(table, e), tag),
            _entry("polysymmetry", axioms.check_polysymmetry(table, e), tag),
        ]

    qmp_e = _search_candidates(
        table, members_of(identities.two_sided), qmp_trail, evidence, "qmp-hypergroup"
    )
    if qmp_e is not None:
        labels.add("qmp-hypergroup")
        constants["qmp-identity"] = qmp_e
        if law["commutative"].holds:
            labels.add("m-polysymmetrical-hypergroup")
    evidence["m-polysymmetrical-hypergroup"] = [
        _entry("commutative", law["commutative"])
    ]

    zero_candidates = range(n)
    canonical_zero = _search_candidates(
        table,
        zero_candidates,
        lambda z: _canonical_axioms(table, z, with_reversibility=True),
        evidence,
        "canonical-hypergroup",
    )
    if canonical_zero is not None:
        labels.add("canonical-hypergroup")
        constants["canonical-zero"] = canonical_zero

    quasi_zero = _search_candidates(
        table, zero_candidates, lambda z: _quasicanonical_axioms(table, z),
        evidence, "quasicanonical-hypergroup",
    )
    if quasi_zero is not None:
        labels.add("quasicanonical-hypergroup")
        constants["quasicanonical-zero"] = quasi_zero

    def normal_trail(z):
        tag = {"zero": z}
        return [
            _entry("associative", law["associative"], tag),
            _entry("reproductive", law["reproductive"], tag),
            _entry("scalar-zero", axioms.check_scalar_zero(table, z), tag),
            _entry("unique-opposite", axioms.check_unique_opposite(table, z), tag),
        ]

    normal_zero = _search_candidates(
        table, zero_candidates, normal_trail, evidence, "normal-hypergroup"
    )
    if normal_zero is not None:
        labels.add("normal-hypergroup")
        constants["normal-zero"] = normal_zero

    if identities.two_sided:
        constants["identities"] = list(members_of(identities.two_sided))
    if identities.scalar:
        constants["scalar-identities"] = list(members_of(identities.scalar))

    return ClassificationReport(frozenset(labels), evidence, constants)


def _two_op_trail(model, variants, tag=None):
    trail = []
    for variant in variants:
        try:
            trail.append(_entry(variant, check_ring_axioms(model, variant), tag))
        except PreconditionError as exc:
            entry = {"axiom": variant, "holds": False, "precondition": str(exc)}
            if tag:
                entry.update(tag)
            trail.append(entry)
    return trail


def classify_two_op(model: TwoOpModel) -> ClassificationReport:
    """Label set for a two-operation model with a distinguished zero."""
    labels = set()
    evidence = {}
    constants = {"zero": model.zero}
    add = model.add

    krasner_trail = _canonical_axioms(add, model.zero, with_reversibility=True)
    krasner_trail += _two_op_trail(
        model, ("multiplicative-semigroup-on-H*", "absorbing-zero", "distributive-equal")
    )
    evidence["krasner-hyperring"] = krasner_trail
    if _all_hold(krasner_trail):
        labels.add("krasner-hyperring")

    one = axioms.multiplicative_identity(model)
    if one is not None:
        constants["one"] = one
    unitary_trail = list(krasner_trail)
    unitary_trail.append(
        {"axiom": "multiplicative-identity", "holds": one is not None}
    )
    evidence["unitary-hyperring"] = unitary_trail
    if _all_hold(unitary_trail):
        labels.add("unitary-hyperring")

    field_trail = _canonical_axioms(add, model.zero, with_reversibility=True)
    field_trail += _two_op_trail(
        model, ("multiplicative-group-on-H*", "absorbing-zero", "distributive-equal")
    )
    evidence["hyperfield"] = field_trail
    if _all_hold(field_trail):
        labels.add("hyperfield")

    field15_trail = _canonical_axioms(add, model.zero, with_reversibility=False)
    field15_trail += _two_op_trail(
        model, ("multiplicative-group-on-H*", "absorbing-zero", "distributive-equal")
    )
    evidence["hyperfield-def15"] = field15_trail
    if _all_hold(field15_trail):
        labels.add("hyperfield-def15")

    def6_trail = _two_op_trail(
        model,
        (
            "additive-abelian-group",
            "mul-nondegenerate-associative",
            "distributive-inclusion",
            "sign-rule",
        ),
    )
    def6_trail.append(
        _entry("mul-cellwise-nonempty", check_law(model.mul, "cellwise-nonempty"))
    )
    evidence["multiplicative-hyperring-def6"] = def6_trail
    if _all_hold(def6_trail):
        labels.add("multiplicative-hyperring-def6")

    def7_trail = _two_op_trail(
        model,
        (
            "additive-abelian-group",
            "mul-nondegenerate-associative",
            "distributive-inclusion",
            "sign-rule",
        ),
    )
    evidence["multiplicative-hyperring-def7"] = def7_trail
    if _all_hold(def7_trail):
        labels.add("multiplicative-hyperring-def7")

    mp_trail = [
        _entry("associative", check_law(add, "associative"), {"zero": model.zero}),
        _entry("commutative", check_law(add, "commutative"), {"zero": model.zero}),
        _entry(
            "identity-element",
            axioms.check_identity_element(add, model.zero),
            {"zero": model.zero},
        ),
        _entry(
            "polysymmetry",
            axioms.check_polysymmetry(add, model.zero),
            {"zero": model.zero},
        ),
    ]
    mp_trail += _two_op_trail(
        model, ("multiplicative-semigroup-on-H*", "absorbing-zero", "distributive-equal")
    )
    evidence["m-polysymmetrical-hyperring"] = mp_trail
    if _all_hold(mp_trail):
        labels.add("m-polysymmetrical-hyperring")

    return ClassificationReport(frozenset(labels), evidence, constants)


def _action_image(hm: HypermoduleModel, scalars_mask: int, m_set: int) -> int:
    """Image set of (A)·(B) under the single-valued action, unions over both."""
    out = 0
    a = scalars_mask
    ia = 0
    while a:
        if a & 1:
            b = m_set
            ib = 0
            while b:
                if b & 1:
                    out |= 1 << hm.action[ia][ib]
                b >>= 1
                ib += 1
        a >>= 1
        ia += 1
    return out


def check_hypermodule(hm: HypermoduleModel, weak: bool = False) -> ClassificationReport:
    """Action axioms over a unitary scalar hyperring, plus the structure of
    the module's addition (normal and canonical verdicts)."""
    scalar_report = classify_two_op(hm.scalars)
    if "unitary-hyperring" not in scalar_report.labels:
        raise PreconditionError("the scalar model is not a unitary hyperring")

    labels = set()
    evidence = {}
    constants = {"zerom": hm.zero_m, "zero": hm.scalars.zero, "one": hm.scalars.one}
    madd = hm.madd
    p_add = hm.scalars.add
    p_mul = hm.scalars.mul
    p_n = hm.scalars.order
    m_n = madd.order

    trail = []
    ok = True

    def record(axiom_id, holds, elements=None, lhs=None, rhs=None):
        nonlocal ok
        entry = {"axiom": axiom_id, "holds": holds}
        if not holds:
            entry["witness"] = {
                "axiom": axiom_id,
                "elements": list(elements or ()),
                "lhs": list(members_of(lhs or 0)),
                "rhs": list(members_of(rhs or 0)),
            }
            ok = False
        trail.append(entry)

    # i: a(m + n) = am + an
    holds, info = True, None
    for a in range(p_n):
        for m in range(m_n):
            for k in range(m_n):
                lhs = _action_image(hm, 1 << a, madd.cell(m, k))
                rhs = madd.cell(hm.act(a, m), hm.act(a, k))
                if lhs != rhs:
                    holds, info = False, ((a, m, k), lhs, rhs)
                    break
            if not holds:
                break
        if not holds:
            break
    record("action-distributes-over-module-add", holds, *(info or ()))

    # ii: (a + b)m = am + bm, or inclusion for the weak variant
    axiom_ii = "scalar-add-distributes" + ("-inclusion" if weak else "")
    holds, info = True, None
    for a in range(p_n):
        for b in range(p_n):
            for m in range(m_n):
                lhs = _action_image(hm, p_add.cell(a, b), 1 << m)
                rhs = madd.cell(hm.act(a, m), hm.act(b, m))
                bad = bool(lhs & ~rhs) if weak else lhs != rhs
                if bad:
                    holds, info = False, ((a, b, m), lhs, rhs)
                    break
            if not holds:
                break
        if not holds:
            break
    record(axiom_ii, holds, *(info or ()))

    # iii: (ab)m = a(bm); scalar mul is single valued
    holds, info = True, None
    for a in range(p_n):
        for b in range(p_n):
            ab = p_mul.cell(a, b).bit_length() - 1
            for m in range(m_n):
                lhs = hm.act(ab, m)
                rhs = hm.act(a, hm.act(b, m))
                if lhs != rhs:
                    holds, info = False, ((a, b, m), 1 << lhs, 1 << rhs)
                    break
            if not holds:
                break
        if not holds:
            break
    record("scalar-mul-associates-with-action", holds, *(info or ()))

    # iv: 1m = m and 0m = 0
    holds, info = True, None
    for m in range(m_n):
        if hm.act(hm.scalars.one, m) != m:
            holds, info = False, ((m,), 1 << hm.act(hm.scalars.one, m), 1 << m)
            break
        if hm.act(hm.scalars.zero, m) != hm.zero_m:
            holds, info = False, (
                (m,),
                1 << hm.act(hm.scalars.zero, m),
                1 << hm.zero_m,
            )
            break
    record("unit-and-zero-action", holds, *(info or ()))

    evidence["action-axioms"] = trail

    madd_trail = [
        _entry("associative", check_law(madd, "associative")),
        _entry("reproductive", check_law(madd, "reproductive")),
        _entry("commutative", check_law(madd, "commutative")),
        _entry("scalar-zero", axioms.check_scalar_zero(madd, hm.zero_m)),
        _entry("unique-opposite", axioms.check_unique_opposite(madd, hm.zero_m)),
    ]
    evidence["madd-normal-hypergroup"] = madd_trail
    normal = all(
        e["holds"] for e in madd_trail if e["axiom"] != "commutative"
    )
    commutative = madd_trail[2]["holds"]
    if normal:
        labels.add("madd-normal-hypergroup")
    if normal and commutative:
        labels.add("madd-commutative-normal-hypergroup")

    canonical_trail = _canonical_axioms(madd, hm.zero_m, with_reversibility=True)
    evidence["madd-canonical-hypergroup"] = canonical_trail
    if _all_hold(canonical_trail):
        labels.add("madd-canonical-hypergroup")

    if ok and normal and commutative:
        labels.add("weak-hypermodule" if weak else "hypermodule")

    return ClassificationReport(frozenset(labels), evidence, constants)
