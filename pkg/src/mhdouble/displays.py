"""Closed-form group-case formulas, regression-checked against the general machinery.

For G finite, the doubles of K(G) and K[G] have short closed forms.  Several
of them are written with products of δ's whose meaning is ambiguous: δ_Xδ_Y
may be the product in K(G) (= [X = Y] δ_Y) or only the displayed index may be
meant.  Each such formula lists its candidate readings; the report states
which reading agrees with the general formula on every basis input.
Formulas without ambiguity must match exactly and fail the check otherwise.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable

from .doubles import RestrictedA, RestrictedB
from .lincomb import Accumulator, LinComb
from .mha import Variant
from .verify import CheckReport, Instance


@dataclass
class Display:
    name: str
    formula: str
    arity: int  # number of D/H basis inputs drawn from G×G, or G for single-group inputs
    space: str  # "pairs" (G×G labels) or "group" (G labels)
    oracle: Callable
    readings: dict  # reading name -> callable
    ambiguous: bool = False


def _delta(cond: bool, label, one) -> LinComb:
    return LinComb.basis(label, one) if cond else LinComb.zero()


def group_displays(inst: Instance) -> list:
    G, D, H = inst.group, inst.D, inst.H
    one = inst.field.one
    op, inv, e = G.op, G.inv, G.e
    RA, RB = RestrictedA(H), RestrictedB(H)
    uD = D.unit()

    def m(*xs):
        r = e
        for x in xs:
            r = op(r, x)
        return r

    def b(label):
        return LinComb.basis(label, one)

    out = []

    # (δ_p # q)(δ_p' # q')
    out.append(Display(
        "smash product", "(δ_p#q)(δ_p'#q') = δ_{p'q⁻¹} # qq'", 2, "pairs",
        lambda x, y: H.mul(b(x), b(y)),
        {
            "literal index δ_{p'q⁻¹}#qq'":
                lambda x, y: b((m(y[0], inv(x[1])), m(x[1], y[1]))),
            "element product δ_p·δ_{p'q⁻¹}#qq'":
                lambda x, y: _delta(x[0] == m(y[0], inv(x[1])), (x[0], m(x[1], y[1])), one),
        },
        ambiguous=True,
    ))
    # (δ_g ⋈ h)(δ_p ⋈ q)
    out.append(Display(
        "double product", "(δ_g⋈h)(δ_p⋈q) = δ_gδ_{hph⁻¹} ⋈ hq", 2, "pairs",
        lambda x, y: D.mul(b(x), b(y)),
        {"element product": lambda x, y: _delta(x[0] == m(x[1], y[0], inv(x[1])), (x[0], m(x[1], y[1])), one)},
    ))
    out.append(Display(
        "double antipode", "S(δ_g⋈h) = δ_{h⁻¹g⁻¹h} ⋈ h⁻¹", 1, "pairs",
        lambda x: D.antipode(b(x)),
        {"as written": lambda x: b((m(inv(x[1]), inv(x[0]), x[1]), inv(x[1])))},
    ))
    out.append(Display(
        "double counit", "ε(δ_g⋈h) = [g = e]", 1, "pairs",
        lambda x: D.counit(b(x)),
        {"as written": lambda x: one if x[0] == e else inst.field.zero},
    ))

    def dd_coproduct(x):
        g, h = x
        acc = Accumulator()
        for p in G.elements:
            acc.add(((m(inv(p), g), h), (p, h)), one)
        return acc.result()

    out.append(Display(
        "double coproduct", "Δ(δ_g⋈h) = Σ_p (δ_{p⁻¹g}⋈h) ⊗ (δ_p⋈h)", 1, "pairs",
        lambda x: D.delta_slice(Variant.CAN2, uD, b(x)),
        {"as written": dd_coproduct},
    ))
    # (δ_p ⋈ q)·(δ_p' # q')
    out.append(Display(
        "Heisenberg action", "(δ_p⋈q)·(δ_p'#q') = δ_{p'q'q⁻¹p}δ_{p'q⁻¹} # qq'q⁻¹", 2, "pairs",
        lambda x, y: H.act(b(x), b(y)),
        {
            "element product":
                lambda x, y: _delta(m(y[0], y[1], inv(x[1]), x[0]) == m(y[0], inv(x[1])),
                                    (m(y[0], inv(x[1])), m(x[1], y[1], inv(x[1]))), one),
            "first factor as Kronecker [p'q'q⁻¹p = e]":
                lambda x, y: _delta(m(y[0], y[1], inv(x[1]), x[0]) == e,
                                    (m(y[0], inv(x[1])), m(x[1], y[1], inv(x[1]))), one),
            "literal second index only":
                lambda x, y: b((m(y[0], inv(x[1])), m(x[1], y[1], inv(x[1])))),
        },
        ambiguous=True,
    ))

    def coaction(x):
        p, q = x
        acc = Accumulator()
        for s in G.elements:
            acc.add(((m(inv(s), p), q), (s, q)), one)
        return acc.result()

    out.append(Display(
        "Heisenberg coaction", "Γ(δ_p#q) = Σ_s (δ_{s⁻¹p}⋈q) ⊗ (δ_s#q)", 1, "pairs",
        lambda x: H.coact_right(b(x), uD),
        {"as written": coaction},
    ))
    # (δ_p ⋈ q)·δ_p'
    out.append(Display(
        "restricted A action", "(δ_p⋈q)·δ_p' = δ_{qp'⁻¹p}δ_{p'q⁻¹}", 2, "pair-group",
        lambda x, y: RA.act(b(x), b(y)),
        {
            "element product":
                lambda x, y: _delta(m(x[1], inv(y), x[0]) == m(y, inv(x[1])), m(y, inv(x[1])), one),
            "first factor as Kronecker [qp'⁻¹p = e]":
                lambda x, y: _delta(m(x[1], inv(y), x[0]) == e, m(y, inv(x[1])), one),
            "literal second index only":
                lambda x, y: b(m(y, inv(x[1]))),
            "counit collapse [p = e]δ_{p'q⁻¹}":
                lambda x, y: _delta(x[0] == e, m(y, inv(x[1])), one),
        },
        ambiguous=True,
    ))
    out.append(Display(
        "restricted B action", "(δ_p⋈q)·q' = δ_{p⁻¹,qq'q⁻¹} qq'q⁻¹", 2, "pair-group",
        lambda x, y: RB.act(b(x), b(y)),
        {"Kronecker": lambda x, y: _delta(inv(x[0]) == m(x[1], y, inv(x[1])), m(x[1], y, inv(x[1])), one)},
    ))

    def rho_a(p):
        acc = Accumulator()
        for t in G.elements:
            acc.add(((m(inv(t), p), e), t), one)
        return acc.result()

    def rho_b(q):
        acc = Accumulator()
        for t in G.elements:
            acc.add(((t, q), q), one)
        return acc.result()

    out.append(Display(
        "A coaction", "ρ(δ_p) = Σ_t (δ_{t⁻¹p}⋈e) ⊗ δ_t", 1, "group",
        lambda x: RA.coact_right(b(x), uD), {"as written": rho_a},
    ))
    out.append(Display(
        "B coaction", "ρ(q) = Σ_t (δ_t⋈q) ⊗ q", 1, "group",
        lambda x: RB.coact_right(b(x), uD), {"as written": rho_b},
    ))
    return out


def _inputs(G, disp: Display) -> list:
    pairs = [(g, h) for g in G.elements for h in G.elements]
    if disp.space == "pairs":
        return list(itertools.product(pairs, repeat=disp.arity))
    if disp.space == "group":
        return [(g,) for g in G.elements]
    return [(x, y) for x in pairs for y in G.elements]


def check_group_displays(inst: Instance) -> list:
    """One report per closed-form formula, exhaustive over the finite group."""
    if not inst.finite or inst.D.unit() is None:
        raise ValueError("closed-form group formulas need a finite group instance")
    reports = []
    for disp in group_displays(inst):
        rep = CheckReport(f"displays.{disp.name.replace(' ', '_')}", inst.description)
        rep.notes.append(disp.formula)
        mismatches = {name: 0 for name in disp.readings}
        for args in _inputs(inst.group, disp):
            rep.samples += 1
            want = disp.oracle(*args)
            for name, reading in disp.readings.items():
                got = reading(*args)
                if got == want:
                    continue
                mismatches[name] += 1
                if not disp.ambiguous:
                    rep.record([repr(a) for a in args], f"{name} = general formula", repr(got), repr(want))
        if disp.ambiguous:
            matching = [n for n, c in mismatches.items() if c == 0]
            for n, c in mismatches.items():
                status = "matches" if c == 0 else f"differs on {c} of {rep.samples} inputs"
                rep.notes.append(f"reading '{n}': {status}")
            rep.notes.append(
                "matching reading: " + (", ".join(matching) if matching else "none")
            )
        reports.append(rep)
    return reports


def display_verdicts(reports) -> dict:
    """{display name: [matching readings]} parsed from ambiguous-display notes."""
    out = {}
    for r in reports:
        for n in r.notes:
            if n.startswith("matching reading: "):
                rest = n[len("matching reading: "):]
                out[r.name] = [] if rest == "none" else rest.split(", ")
    return out
