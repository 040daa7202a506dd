"""Sampled, exact verification of the double constructions.

Every check draws tuples of basis elements (plus a few two-term combinations)
from a :class:`SamplePlan`, evaluates both sides of one or more identities and
records every mismatch.  All comparisons are exact equality of normalized
combinations.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Callable, Sequence

from . import mha
from .doubles import (
    HeisenbergYD,
    RestrictedA,
    RestrictedB,
    braided_mul,
    build_doubles,
    diagonal_action,
    product_coaction_left,
)
from .errors import ConfigError, MhaError
from .groups import GroupSpec, group_pairing, parse_group
from .lincomb import Accumulator, LinComb
from .mha import Variant
from .pairing import ActionVariant
from .scalars import QQ, Field
from .taft import TaftParams, multiplier_apply, omega_times_y_power, taft_pairing

FAILURE_CAP = 20
EXHAUSTIVE_LIMIT = 60000
CORRUPTIONS = ("drop_antipode", "a_chirality", "swap_b", "trivial_action")


# -- plans and reports ---------------------------------------------------------------


@dataclass(frozen=True)
class SamplePlan:
    """``exhaustive`` enumerates all basis tuples in sorted order (finite
    instances); ``randomized`` draws ``count`` tuples from ``random.Random``
    seeded by (seed, check name)."""

    mode: str = "randomized"
    count: int = 200
    seed: int = 0
    window: int = 8

    def __post_init__(self):
        if self.mode not in ("exhaustive", "randomized"):
            raise ConfigError(f"unknown sample mode {self.mode!r}")
        if self.mode == "randomized" and self.count < 1:
            raise ConfigError("randomized plans need at least one sample")
        if self.window < 1:
            raise ConfigError("window must be >= 1")

    def tuples(self, name: str, pools: Sequence[Sequence], make: Sequence[Callable], field: Field):
        """(tuples of LinCombs, note or None)."""
        size = 1
        for p in pools:
            size *= len(p)
        if self.mode == "exhaustive" and size <= EXHAUSTIVE_LIMIT:
            out = [tuple(mk(l) for mk, l in zip(make, combo)) for combo in itertools.product(*pools)]
            return out, None
        note = None
        if self.mode == "exhaustive":
            note = f"exhaustive enumeration would need {size} tuples; used {self.count} seeded random samples"
        rng = random.Random(f"{self.seed}/{name}")
        two = field(2)
        out = []
        for idx in range(self.count):
            combo = idx % 10 == 9
            tup = []
            for pool, mk in zip(pools, make):
                x = mk(rng.choice(pool))
                if combo:
                    x = x + mk(rng.choice(pool)).scale(two)
                tup.append(x)
            out.append(tuple(tup))
        return out, note


@dataclass
class CheckReport:
    name: str
    instance: str
    samples: int = 0
    failures: list = field(default_factory=list)
    failure_count: int = 0
    notes: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.failure_count == 0 and self.samples > 0

    def record(self, inputs, identity, lhs, rhs):
        self.failure_count += 1
        if len(self.failures) < FAILURE_CAP:
            self.failures.append({"inputs": list(inputs), "identity": identity, "lhs": lhs, "rhs": rhs})

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "samples": self.samples,
            "pass": self.passed,
            "failure_count": self.failure_count,
            "failures": [dict(f) for f in self.failures],
            "notes": list(self.notes),
        }

    @classmethod
    def from_dict(cls, d: dict, instance: str = "") -> "CheckReport":
        return cls(
            name=d["name"], instance=instance, samples=d["samples"],
            failures=[dict(f) for f in d["failures"]], failure_count=d["failure_count"],
            notes=list(d.get("notes", [])),
        )


def render_value(x, fmt) -> str:
    if isinstance(x, LinComb):
        return x.render(fmt)
    return str(x)


# -- instances ---------------------------------------------------------------------------


@dataclass
class Instance:
    kind: str
    description: str
    pairing: object
    D: object
    H: object
    field: Field
    window: int
    params: dict
    group: GroupSpec | None = None
    taft: TaftParams | None = None
    corrupt: str | None = None

    @property
    def A(self):
        return self.pairing.A

    @property
    def B(self):
        return self.pairing.B

    @property
    def finite(self) -> bool:
        return self.group is not None and self.group.finite

    def labels(self, which: str) -> list:
        alg = {"A": self.A, "B": self.B, "D": self.D, "H": self.H}[which]
        return alg.sample_labels(self.window)

    def fmt(self, which: str) -> Callable:
        """Label formatter for a space or a tensor of spaces, e.g. ``"DH"``."""
        single = {
            "A": self.A.format_label, "B": self.B.format_label,
            "D": self.D.format_label, "H": self.H.format_label,
        }
        if len(which) == 1:
            return single[which]
        fs = [single[c] for c in which]
        return lambda lab: " ⊗ ".join(f(l) for f, l in zip(fs, lab))

    def yd_structures(self) -> dict:
        return {"H": HeisenbergYD(self.H), "A": RestrictedA(self.H), "B": RestrictedB(self.H)}


def build_instance(
    kind: str = "group",
    group: str = "zn:6",
    field: Field = QQ,
    taft_m: int = 2,
    taft_i: int = 1,
    lam=None,
    window: int = 8,
    corrupt: str | None = None,
) -> Instance:
    if corrupt is not None and corrupt not in CORRUPTIONS:
        raise ConfigError(f"unknown corruption {corrupt!r}; choose from {', '.join(CORRUPTIONS)}")
    if kind == "group":
        G = parse_group(group)
        if not G.finite:
            G = GroupSpec(G.kind, G.n, G.op, G.inv, G.e, None, G.fmt, window)
        P = group_pairing(G, field)
        D, H = build_doubles(P, corrupt)
        desc = f"K({G.descriptor}) / K[{G.descriptor}] over {field.name}"
        params = {"group": G.descriptor}
        return Instance("group", desc, P, D, H, field, window, params, group=G, corrupt=corrupt)
    if kind == "qtaft":
        tp = TaftParams.resolve(taft_m, taft_i, field, lam)
        P = taft_pairing(tp)
        D, H = build_doubles(P, corrupt)
        desc = f"Taft pair m={tp.m} i={tp.i} λ={tp.lam} over {field.name}"
        return Instance("qtaft", desc, P, D, H, field, window, tp.describe(), taft=tp, corrupt=corrupt)
    raise ConfigError(f"unknown instance kind {kind!r}; use 'group' or 'qtaft'")


# -- the generic runner ------------------------------------------------------------------


def _run(inst: Instance, plan: SamplePlan, name: str, spaces: str, evaluate: Callable, out_fmt) -> CheckReport:
    """Evaluate ``evaluate(*tuple)`` -> [(identity, lhs, rhs)] over the plan.

    ``spaces`` names the space of each tuple position (e.g. ``"DDH"``).
    """
    pools = [inst.labels(c) for c in spaces]
    makers = []
    for c in spaces:
        makers.append(lambda l, c=c: LinComb.basis(l, inst.field.one))
    tuples, note = plan.tuples(name, pools, makers, inst.field)
    rep = CheckReport(name, inst.description)
    if note:
        rep.notes.append(note)
    in_fmts = [inst.fmt(c) for c in spaces]
    for tup in tuples:
        rep.samples += 1
        try:
            sides = evaluate(*tup)
        except MhaError as e:
            rep.record([x.render(f) for x, f in zip(tup, in_fmts)], "evaluation", f"error: {e}", "")
            continue
        for side in sides:
            ident, lhs, rhs = side[:3]
            fmt = side[3] if len(side) > 3 else out_fmt
            if lhs != rhs:
                rep.record(
                    [x.render(f) for x, f in zip(tup, in_fmts)], ident,
                    render_value(lhs, fmt), render_value(rhs, fmt),
                )
    return rep


# -- axioms --------------------------------------------------------------------------------


def check_axioms(inst: Instance, plan: SamplePlan, which: str) -> list:
    alg = {"A": inst.A, "B": inst.B, "D": inst.D}[which]
    f1, f2, f3 = inst.fmt(which), inst.fmt(which * 2), inst.fmt(which * 3)

    def singles(x):
        return mha.antipode_inverse_sides(alg, x)

    def pairs(x, y):
        return [s + (f1,) for s in mha.counit_sides(alg, x, y) + mha.antipode_sides(alg, x, y)]

    def triples(x, y, z):
        out = [s + (f1,) for s in mha.associativity_sides(alg, x, y, z)]
        out += [s + (f3,) for s in mha.coassociativity_sides(alg, x, y, z)]
        out += [s + (f2,) for s in mha.delta_multiplicative_sides(alg, x, y, z)]
        return out

    return [
        _run(inst, plan, f"axioms.{which}.antipode_inverse", which, singles, f1),
        _run(inst, plan, f"axioms.{which}.pairs", which * 2, pairs, f1),
        _run(inst, plan, f"axioms.{which}.triples", which * 3, triples, f1),
    ]


# -- pairing ----------------------------------------------------------------------------------


def check_pairing(inst: Instance, plan: SamplePlan) -> list:
    P = inst.pairing
    reports = [
        _run(inst, plan, "pairing.duality", "AABB", lambda a, a2, b, b2: P.duality_sides(a, a2, b, b2), str),
        _run(inst, plan, "pairing.mixed_associativity", "BBA",
             lambda b, b2, a: P.mixed_associativity_sides(b, b2, a), inst.fmt("A")),
    ]

    def actions(a, b):
        out = []
        for v in ActionVariant:
            on_a = v in (ActionVariant.B_ON_A_LEFT, ActionVariant.B_ON_A_RIGHT)
            actor, target = (b, a) if on_a else (a, b)
            fmt = inst.fmt("A" if on_a else "B")
            out.append((f"{v.value}: closed form = defining formula",
                        P.act(v, actor, target), P.act_defining(v, actor, target), fmt))
            value, covered = P.act_cover_sides(v, actor, target)
            side = "right" if v in (ActionVariant.B_ON_A_LEFT, ActionVariant.A_ON_B_LEFT) else "left"
            out.append((f"{v.value}: value = covered defining equation ({side} local-unit cover)",
                        value, covered, fmt))
        return out

    reports.append(_run(inst, plan, "pairing.actions", "AB", actions, str))
    rep = CheckReport("pairing.nondegeneracy", inst.description)
    a_labels, b_labels = inst.labels("A"), inst.labels("B")
    rep.samples = len(a_labels) + len(b_labels)
    for side, lab in P.nondegenerate_on(a_labels, b_labels):
        rep.record([repr(lab)], f"{side}-label pairs trivially with the window", "0", "nonzero")
    reports.append(rep)
    return reports


# -- twists and the double product ----------------------------------------------------------


def check_twists(inst: Instance, plan: SamplePlan) -> list:
    D, ops = inst.D, inst.D.ops
    one = inst.field.one

    def t_maps(b, a):
        z = _tensor(b, a)
        za = _tensor(a, b)
        fab, fba = inst.fmt("AB"), inst.fmt("BA")
        return [
            ("T⁻¹∘T = id", ops.twist_T_inv(ops.twist_T(z)), z, fba),
            ("T∘T⁻¹ = id", ops.twist_T(ops.twist_T_inv(za)), za, fab),
            ("R⁻¹∘R = id", ops.twist_R_inv(ops.twist_R(z)), z, fba),
            ("R∘R⁻¹ = id", ops.twist_R(ops.twist_R_inv(za)), za, fab),
        ]

    def products(x, y):
        out = [("product: twist route = direct formula", D.mul_via_twist(x, y), D.mul(x, y))]
        if D.A.unit() is not None:
            for (a, b), c in x.raw_items():
                ea = D.embed_a(D.A.basis(a))
                eb = D.embed_b(D.B.basis(b))
                out.append(("(a⋈1)(1⋈b) = a⋈b", D.mul(ea, eb), LinComb.basis((a, b), one)))
        return out

    reports = [
        _run(inst, plan, "twists.round_trips", "BA", t_maps, str),
        _run(inst, plan, "twists.double_product", "DD", products, inst.fmt("D")),
    ]
    for which in ("A", "B", "D"):
        alg = {"A": inst.A, "B": inst.B, "D": inst.D}[which]
        reports.append(_run(
            inst, plan, f"twists.t_maps.{which}", which * 2,
            lambda x, y, alg=alg: mha.t_roundtrip_sides(alg, x, y), inst.fmt(which * 2),
        ))
    return reports


def _tensor(x: LinComb, y: LinComb) -> LinComb:
    acc = Accumulator()
    for k1, c1 in x.raw_items():
        for k2, c2 in y.raw_items():
            acc.add((k1, k2), c1 * c2)
    return acc.result()


# -- Yetter-Drinfel'd structure checks ----------------------------------------------------------


class _Units:
    """Memoized local units u with u·v = v for basis elements of a structure."""

    def __init__(self, V):
        self.V = V
        self.cache = {}

    def __call__(self, v: LinComb) -> LinComb:
        key = v
        u = self.cache.get(key)
        if u is None:
            u = self.cache[key] = self.V.module_unit(v)
        return u


def _units(V):
    u = getattr(V, "_unit_finder", None)
    if u is None:
        u = V._unit_finder = _Units(V)
    return u


def module_sides(D, V, d1, d2, v):
    return [("(dd')·v = d·(d'·v)", V.act(D.mul(d1, d2), v), V.act(d1, V.act(d2, v)))]


def unitality_sides(D, V, v):
    one = D.field.one
    out = []
    u = _units(V)(v)
    out.append(("u·v = v for the found local unit", V.act(u, v), v))
    # a strictly larger local unit must act the same way
    seeds = V.module_seeds(v) | {la for (la, _lb), _ in u.raw_items()}
    big = D.embed_a(D.A.local_unit(seeds, 1))
    out.append(("u'·v = v for an enlarged local unit", V.act(big, v), v))
    if D.unit() is not None:
        out.append(("1·v = v", V.act(D.unit(), v), v))
    del one
    return out


def module_algebra_sides(D, V, d, v, v2):
    u = _units(V)(v2)
    lhs = V.act(d, V.mul(v, v2))
    acc = Accumulator()
    for (d1, d2u), c in D.delta_slice(Variant.CAN1, d, u).raw_items():
        left = V.act(D.basis(d1), v)
        if left:
            acc.add_lc(V.mul(left, V.act(D.basis(d2u), v2)), c)
    return [("d·(vv') = (d_(1)·v)(d_(2)·v')", lhs, acc.result())]


def comodule_coassoc_sides(D, V, d, d2, v):
    rhs = Accumulator()
    for (y, vj), c in V.coact_left(d, v).raw_items():
        for (y2, w), c2 in V.coact_left(d2, V.basis(vj)).raw_items():
            rhs.add((y, y2, w), c * c2)
    lhs = Accumulator()
    for (p, q), c in D.t_map_inv("T2", _tensor(d, d2)).raw_items():
        for (y, vv), c2 in V.coact_left(D.basis(q), v).raw_items():
            for (r, s), c3 in D._slice_b(Variant.CAN2, p, y).raw_items():
                lhs.add((r, s, vv), c * c2 * c3)
    return [("(Δ⊗ι)Γ = (ι⊗Γ)Γ, covered by d⊗d'⊗1", lhs.result(), rhs.result())]


def comodule_counit_sides(D, V, d, v):
    left = Accumulator()
    for (y, vj), c in V.coact_left(d, v).raw_items():
        e = D.counit_basis(y)
        if e:
            left.add(vj, c * e)
    right = Accumulator()
    for (y, vj), c in V.coact_right(v, d).raw_items():
        e = D.counit_basis(y)
        if e:
            right.add(vj, c * e)
    ev = v.scale(D.counit(d))
    return [
        ("(ε⊗ι)((d⊗1)Γ(v)) = ε(d)v", left.result(), ev),
        ("(ε⊗ι)(Γ(v)(d⊗1)) = ε(d)v", right.result(), ev),
    ]


def comodule_mult_sides(D, V, d, v, v2):
    lhs = V.coact_left(d, V.mul(v, v2))
    acc = Accumulator()
    for (y, h), c in V.coact_left(d, v).raw_items():
        for (x, g), c2 in V.coact_left(D.basis(y), v2).raw_items():
            for k, c3 in V.mul(V.basis(h), V.basis(g)).raw_items():
                acc.add((x, k), c * c2 * c3)
    return [("(d⊗1)Γ(vv') = (d⊗1)Γ(v)Γ(v')", lhs, acc.result())]


def yd_sides(D, V, d, d2, v):
    lhs = Accumulator()
    for (p, y), c in D.delta_slice(Variant.CAN1, d, d2).raw_items():
        pv = V.act(D.basis(p), v)
        if pv:
            lhs.add_lc(V.coact_right(pv, D.basis(y)), c)
    rhs = Accumulator()
    for (w, h), c in V.coact_right(v, d2).raw_items():
        hl = V.basis(h)
        u = _units(V)(hl)
        for (d1, d2u), c2 in D.delta_slice(Variant.CAN1, d, u).raw_items():
            left = D._mul_b(d1, w)
            if not left:
                continue
            right = V.act(D.basis(d2u), hl)
            for k1, v1 in left.raw_items():
                for k2, v2_ in right.raw_items():
                    rhs.add((k1, k2), c * c2 * v1 * v2_)
    return [("(d_(1)·v)_(-1)d_(2)d' ⊗ (d_(1)·v)_(0) = d_(1)v_(-1)d' ⊗ d_(2)·v_(0)", lhs.result(), rhs.result())]


def braided_comm_sides(D, V, x, y):
    lhs = V.mul(y, x)
    u = _units(V)(x)
    acc = Accumulator()
    for (w, yi), c in V.coact_right(y, u).raw_items():
        wx = V.act(D.basis(w), x)
        if wx:
            acc.add_lc(V.mul(wx, V.basis(yi)), c)
    out = [("yx = (y_(-1)·x)y_(0)", lhs, acc.result())]
    if D.unit() is not None:
        # cross-check the covered evaluation against the full coaction
        full = Accumulator()
        for (w, yi), c in V.coact_right(y, D.unit()).raw_items():
            wx = V.act(D.basis(w), x)
            if wx:
                full.add_lc(V.mul(wx, V.basis(yi)), c)
        out.append(("covered evaluation = full coaction evaluation", acc.result(), full.result()))
    return out


def _yd_reports(inst: Instance, plan: SamplePlan, key: str, prefix: str, parts: Sequence[str]) -> list:
    D = inst.D
    V = inst.yd_structures()[key]
    fv = V.format_label
    fdv = lambda lab: f"{D.format_label(lab[0])} ⊗ {fv(lab[1])}"
    fddv = lambda lab: f"{D.format_label(lab[0])} ⊗ {D.format_label(lab[1])} ⊗ {fv(lab[2])}"
    sp = {"H": "H", "A": "A", "B": "B"}[key]
    reps = []
    if "module" in parts:
        reps.append(_run(inst, plan, f"{prefix}module.law", "DD" + sp, lambda a, b, v: module_sides(D, V, a, b, v), fv))
        reps.append(_run(inst, plan, f"{prefix}module.unitality", sp, lambda v: unitality_sides(D, V, v), fv))
    if "module_algebra" in parts:
        reps.append(_run(inst, plan, f"{prefix}module_algebra", "D" + sp * 2,
                         lambda d, v, v2: module_algebra_sides(D, V, d, v, v2), fv))
    if "comodule" in parts:
        reps.append(_run(inst, plan, f"{prefix}comodule.coassociativity", "DD" + sp,
                         lambda d, d2, v: comodule_coassoc_sides(D, V, d, d2, v), fddv))
        reps.append(_run(inst, plan, f"{prefix}comodule.counit", "D" + sp,
                         lambda d, v: comodule_counit_sides(D, V, d, v), fv))
        reps.append(_run(inst, plan, f"{prefix}comodule.multiplicativity", "D" + sp * 2,
                         lambda d, v, v2: comodule_mult_sides(D, V, d, v, v2), fdv))
    if "yd" in parts:
        reps.append(_run(inst, plan, f"{prefix}yd.compatibility", "DD" + sp,
                         lambda d, d2, v: yd_sides(D, V, d, d2, v), fdv))
    if "commutativity" in parts:
        reps.append(_run(inst, plan, f"{prefix}braided_commutativity", sp * 2,
                         lambda x, y: braided_comm_sides(D, V, x, y), fv))
    return reps


def check_module(inst, plan):
    return _yd_reports(inst, plan, "H", "", ["module"])


def check_module_algebra(inst, plan):
    return _yd_reports(inst, plan, "H", "", ["module_algebra"])


def check_comodule_algebra(inst, plan):
    reps = _yd_reports(inst, plan, "H", "", ["comodule"])
    H = inst.H
    if H.corrupt is None:
        fdh = inst.fmt("DH")
        reps.append(_run(
            inst, plan, "comodule.slice_routes", "DH",
            lambda d, h: [("(d⊗1)Γ(a#b) via D-slices = via B legs", H.coact_left(d, h), H.coact_left_via_b_legs(d, h))],
            fdh,
        ))
    return reps


def check_yd_compatibility(inst, plan):
    return _yd_reports(inst, plan, "H", "", ["yd"])


def check_braided_commutativity(inst, plan):
    return _yd_reports(inst, plan, "H", "", ["commutativity"])


def check_braided_factorization(inst, plan):
    H, D = inst.H, inst.D
    fh = inst.fmt("H")
    reps = [_run(inst, plan, "factorization.braided_product", "HH",
                 lambda x, y: [("(a∝b)(a'∝b') = (a#b)(a'#b')", braided_mul(H, x, y), H.mul(x, y))], fh)]
    everything = ["module", "module_algebra", "comodule", "yd", "commutativity"]
    reps += _yd_reports(inst, plan, "A", "factorization.A.", everything)
    reps += _yd_reports(inst, plan, "B", "factorization.B.", everything)
    reps.append(_run(inst, plan, "factorization.product_action", "DH",
                     lambda d, h: [("(d_(1)·a)∝(d_(2)·b) = d·(a#b)", diagonal_action(H, d, h), H.act(d, h))], fh))
    reps.append(_run(inst, plan, "factorization.product_coaction", "DH",
                     lambda d, h: [("(d⊗1)ρ(a)ρ(b) = (d⊗1)Γ(a#b)", product_coaction_left(H, d, h), H.coact_left(d, h))],
                     inst.fmt("DH")))
    del D
    return reps


# -- Taft-specific checks ------------------------------------------------------------------------


def check_taft_heisenberg_relations(inst: Instance, window: int | None = None) -> CheckReport:
    """The four defining relations of the Taft Heisenberg double, on covers ω_{k,l}#1.

    The ε in the left factors is read as the unit multiplier of M(A), so
    (ε#b) acts by b_(1)▸ on the A-part.
    """
    if inst.taft is None:
        raise ConfigError("Heisenberg relations need the qtaft instance")
    H, A = inst.H, inst.A
    tp = inst.taft
    i, one = tp.i, inst.field.one
    w = inst.window if window is None else window
    unit_b = (0, 0)
    ci, X = (i, 0), (0, 1)
    rep = CheckReport("taft.heisenberg_relations", inst.description)
    fh = inst.fmt("H")

    def Y(x):
        return multiplier_apply(A, "Y", "left", x)

    def Dm(x):
        return multiplier_apply(A, "D", "left", x)

    def cmp(inputs, ident, lhs, rhs):
        rep.samples += 1
        if lhs != rhs:
            rep.record(inputs, ident, lhs.render(fh), rhs.render(fh))

    covers = [LinComb.basis(((k, l), unit_b), one) for k in range(-w, w + 1) for l in range(tp.m)]
    for p in range(-w, w + 1):
        elem = LinComb.basis(((p, 0), unit_b), one)
        tag = [f"p={p}"]
        r1 = LinComb.basis(((p - i, 0), ci), one)
        r3 = LinComb.basis(((p - i, 0), X), one)
        cmp(tag, "(ε#c^i)(ω_{p,0}#1) = ω_{p-i,0}#c^i", H.mul_with_multiplier(None, ci, elem), r1)
        cmp(tag, "(ε#X)(ω_{p,0}#1) = ω_{p-i,0}#X", H.mul_with_multiplier(None, X, elem), r3)
        for cov in covers[:: max(1, len(covers) // 6)]:
            ctag = tag + [cov.render(fh)]
            cmp(ctag, "(ε#c^i)(ω_{p,0}#1)·cover", H.mul(H.mul_with_multiplier(None, ci, elem), cov), H.mul(r1, cov))
            cmp(ctag, "(ε#X)(ω_{p,0}#1)·cover", H.mul(H.mul_with_multiplier(None, X, elem), cov), H.mul(r3, cov))
    for cov in covers:
        tag = [cov.render(fh)]
        y_cov = H.mul_with_multiplier(Y, unit_b, cov)  # (Y#1)·cover
        cmp(tag, "(ε#c^i)(Y#1) = Y#c^i on the cover",
            H.mul_with_multiplier(None, ci, y_cov), H.mul_with_multiplier(Y, ci, cov))
        cmp(tag, "(ε#X)(Y#1) = Y#X + D#1 on the cover",
            H.mul_with_multiplier(None, X, y_cov),
            H.mul_with_multiplier(Y, X, cov) + H.mul_with_multiplier(Dm, unit_b, cov))
    return rep


def check_taft_multipliers(inst: Instance) -> CheckReport:
    """D, Y as multipliers: commutation, nilpotency, coproduct and antipode of Y."""
    A, tp = inst.A, inst.taft
    one, lam, i, m = inst.field.one, tp.lam, tp.i, tp.m
    rep = CheckReport("taft.multipliers", inst.description)
    fa = inst.fmt("A")
    fa2 = inst.fmt("AA")

    def cmp(inputs, ident, lhs, rhs, fmt=fa):
        rep.samples += 1
        if lhs != rhs:
            rep.record(inputs, ident, render_value(lhs, fmt), render_value(rhs, fmt))

    def ap(rule, side, x):
        return multiplier_apply(A, rule, side, x)

    labels = A.sample_labels(inst.window)
    for lab in labels:
        x = LinComb.basis(lab, one)
        tag = [fa(lab)]
        k, l = lab
        if l == 0:
            cmp(tag, "Dω_{k,0} = λ^k ω_{k,0}", ap("D", "left", x), x.scale(lam**k))
            cmp(tag, "ω_{k,0}D = λ^k ω_{k,0}", ap("D", "right", x), x.scale(lam**k))
            cmp(tag, "Yω_{k,0} = λ^k ω_{k,1}", ap("Y", "left", x),
                LinComb.basis((k, 1), lam**k) if m > 1 else LinComb.zero())
        cmp(tag, "D(Yx) = λ^i Y(Dx)", ap("D", "left", ap("Y", "left", x)),
            ap("Y", "left", ap("D", "left", x)).scale(lam**i))
        cmp(tag, "(xD)Y = λ^i (xY)D", ap("Y", "right", ap("D", "right", x)),
            ap("D", "right", ap("Y", "right", x)).scale(lam**i))
        cmp(tag, "D(D⁻¹x) = x", ap("D", "left", ap("Dinv", "left", x)), x)
        y = x
        for _ in range(m):
            y = ap("Y", "left", y)
        cmp(tag, "Y^m x = 0", y, LinComb.zero())
        cmp(tag, "(Yx)y-associativity: Y(xx') = (Yx)x'",
            ap("Y", "left", A.mul(x, x)), A.mul(ap("Y", "left", x), x))
        # S(Y) = -D^{-1}Y as left multipliers: Σ_s λ^s S(ω_{s,1}) x
        s_y = Accumulator()
        for (p, q) in A.left_partners(lab):
            if q != 1:
                continue
            s = -i - p  # S(ω_{s,1}) is proportional to ω_{-i-s,1}
            s_y.add_lc(A.mul(A.antipode(LinComb.basis((s, 1), one)), x), lam**s)
        cmp(tag, "S(Y)x = -D⁻¹(Yx)", s_y.result(), -ap("Dinv", "left", ap("Y", "left", x)))
    # Δ(Y)(x⊗x') = Dx ⊗ Yx' + Yx ⊗ x'
    for lab in labels[:: max(1, len(labels) // 8)]:
        for lab2 in labels[:: max(1, len(labels) // 8)]:
            x, x2 = LinComb.basis(lab, one), LinComb.basis(lab2, one)
            acc = Accumulator()
            ss = {p + p2 for (p, _q) in A.left_partners(lab) for (p2, _q2) in A.left_partners(lab2)}
            for s in sorted(ss):
                sl = A.delta_slice(Variant.CAN1, LinComb.basis((s, 1), one), x2)
                acc.add_lc(mha.right_mul_first_leg(A, sl, x), lam**s)
            rhs = _tensor(ap("D", "left", x), ap("Y", "left", x2)) + _tensor(ap("Y", "left", x), x2)
            cmp([fa(lab), fa(lab2)], "Δ(Y)(x⊗x') = Dx⊗Yx' + Yx⊗x'", acc.result(), rhs, fa2)
    return rep


def change_of_basis_scalars(A, p_values, m) -> dict:
    """ω_{p,0}·Y^l = κ(p, l) ω_{p-il, l}; returns {(p, l): κ}."""
    out = {}
    for p in p_values:
        for l in range(m):
            x = omega_times_y_power(A, p, l)
            supp = x.support()
            if supp != [(p - A.i * l, l)]:
                raise MhaError(f"ω_{{{p},0}}Y^{l} is not a multiple of a single basis element: {x!r}")
            out[(p, l)] = x.coeff(supp[0])
    return out


def check_taft_change_of_basis(inst: Instance) -> CheckReport:
    rep = CheckReport("taft.change_of_basis", inst.description)
    A = inst.A
    ps = range(-inst.window, inst.window + 1)
    try:
        table = change_of_basis_scalars(A, ps, inst.taft.m)
    except MhaError as e:
        rep.samples = 1
        rep.record([], "single-term change of basis", str(e), "")
        return rep
    rep.samples = len(table)
    for (p, l), k in sorted(table.items()):
        if not k:
            rep.record([f"p={p}", f"l={l}"], "nonzero change-of-basis scalar", "0", "nonzero")
    sample = ", ".join(f"κ({p},{l})={table[(p, l)]}" for p, l in sorted(table) if p in (0, 1))
    rep.notes.append(f"ω_(p,0)·Y^l = κ(p,l) ω_(p-il,l); {sample}")
    return rep


# -- suites ----------------------------------------------------------------------------------------

SUITES = (
    "axioms", "pairing", "twists", "module", "module_algebra", "comodule",
    "yd", "commutativity", "factorization", "taft", "displays",
)
ALIASES = {"braided": ("commutativity", "factorization")}


def parse_suite(text: str) -> tuple:
    names = []
    for part in (p.strip().lower() for p in text.split(",")):
        if not part:
            continue
        if part == "all":
            names.extend(SUITES)
        elif part in ALIASES:
            names.extend(ALIASES[part])
        elif part in SUITES:
            names.append(part)
        else:
            raise ConfigError(
                f"unknown suite {part!r}; choose from all, braided, {', '.join(SUITES)}"
            )
    if not names:
        raise ConfigError("empty suite selection")
    seen = []
    for n in names:
        if n not in seen:
            seen.append(n)
    return tuple(seen)


@dataclass
class SuiteResult:
    instance: Instance
    plan: SamplePlan
    reports: list

    @property
    def all_pass(self) -> bool:
        return bool(self.reports) and all(r.passed for r in self.reports)


def run_suite(inst: Instance, plan: SamplePlan, suite="all") -> SuiteResult:
    """Run the named checks (plus the axiom checks when ``axioms`` is selected)."""
    from .displays import check_group_displays

    names = parse_suite(suite) if isinstance(suite, str) else tuple(suite)
    if plan.mode == "exhaustive" and not inst.finite:
        raise ConfigError("exhaustive sampling needs a finite group; use a sample count instead")
    reports = []
    for name in names:
        if name == "axioms":
            for which in ("A", "B", "D"):
                reports += check_axioms(inst, plan, which)
        elif name == "pairing":
            reports += check_pairing(inst, plan)
        elif name == "twists":
            reports += check_twists(inst, plan)
        elif name == "module":
            reports += check_module(inst, plan)
        elif name == "module_algebra":
            reports += check_module_algebra(inst, plan)
        elif name == "comodule":
            reports += check_comodule_algebra(inst, plan)
        elif name == "yd":
            reports += check_yd_compatibility(inst, plan)
        elif name == "commutativity":
            reports += check_braided_commutativity(inst, plan)
        elif name == "factorization":
            reports += check_braided_factorization(inst, plan)
        elif name == "taft":
            if inst.taft is not None:
                reports.append(check_taft_heisenberg_relations(inst))
                reports.append(check_taft_multipliers(inst))
                reports.append(check_taft_change_of_basis(inst))
        elif name == "displays":
            if inst.finite:
                reports += check_group_displays(inst)
    return SuiteResult(inst, plan, reports)


# -- negative controls ------------------------------------------------------------------------------

NEGATIVE_CONTROLS = {
    # corruption -> (instance kwargs, check that must fail)
    "drop_antipode": (dict(kind="group", group="sym:3"), "module"),
    "a_chirality": (dict(kind="group", group="sym:3"), "module_algebra"),
    "swap_b": (dict(kind="qtaft", taft_m=2, taft_i=1, window=3), "comodule"),
    "trivial_action": (dict(kind="group", group="sym:3"), "commutativity"),
}


def run_negative_control(corruption: str, plan: SamplePlan | None = None) -> SuiteResult:
    """Run the check a corruption is meant to break, on an instance where it is visible."""
    kwargs, suite = NEGATIVE_CONTROLS[corruption]
    inst = build_instance(corrupt=corruption, **kwargs)
    if plan is None:
        mode = "exhaustive" if inst.finite else "randomized"
        plan = SamplePlan(mode, 200, 42, inst.window)
    return run_suite(inst, plan, suite)
