"""Registry of every checkable statement about S4, its K-ring and lens spaces.

Each check carries the formula it verifies as its anchor.  A check never
raises: unexpected exceptions are reported as failures with the message
as detail.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from . import cohomology, kring, lens, repring, symchars


@dataclass(frozen=True)
class Check:
    name: str
    anchor: str
    run: Callable[[], tuple[bool, str]]


@dataclass(frozen=True)
class CheckResult:
    name: str
    anchor: str
    status: str
    detail: str

    def as_dict(self) -> dict:
        return {"name": self.name, "anchor": self.anchor, "status": self.status, "detail": self.detail}


@dataclass(frozen=True)
class VerificationReport:
    checks: tuple[CheckResult, ...]

    @property
    def passed(self) -> int:
        return sum(c.status == "pass" for c in self.checks)

    @property
    def failed(self) -> int:
        return len(self.checks) - self.passed

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def as_dict(self) -> dict:
        return {
            "checks": [c.as_dict() for c in self.checks],
            "summary": {"total": len(self.checks), "passed": self.passed, "failed": self.failed},
        }


def _classes():
    t = symchars.character_table(4)
    order = symchars.s4_class_order(t)
    sizes = tuple(t.class_sizes[i] for i in order)
    return sizes == (1, 6, 8, 6, 3), f"class sizes C1..C5 = {sizes}"


def _dimensions():
    t = symchars.character_table(4)
    ids = symchars.identify_s4_irreps(t)
    dims = tuple(t.dimensions[ids[n]] for n in symchars.S4_NAMES)
    return dims == (1, 1, 2, 3, 3), f"dimensions of {', '.join(symchars.S4_NAMES)} = {dims}"


def _d3_on_c2():
    value = repring.s4_irreducibles()["d3"].at((2, 1, 1))
    return value == 1, f"d3((12)) = {value}"


def _relation(lhs, rhs):
    def run():
        el = repring.s4_elements()
        a, b = repring.evaluate(lhs, el), repring.evaluate(rhs, el)
        return a.values == b.values, f"lhs {a.values}, rhs {b.values}"
    return run


def _restriction(group, rep, expected):
    def run():
        got = repring.restrict_to_cyclic(repring.s4_irreducibles()[rep], repring.S4_CYCLIC[group])
        want = repring.CyclicDecomposition(got.n, expected)
        return got.multiplicities == expected, f"computed {got}, claimed {want}"
    return run


def _generation():
    el = repring.s4_elements()
    a = repring.generates_ring([el["d1"], el["d3"]])
    b = repring.generates_ring([el["d2"]])
    return a and not b, f"<d1, d3> generates: {a}; <d2> generates: {b}"


def _hooks_generate(n):
    def run():
        t = symchars.character_table(n)
        hooks = [repring.VirtualCharacter.irreducible(t, i) for i, h in enumerate(t.hooks) if h]
        index = repring.subring_index(hooks)
        return index == 1, f"index of the subring generated by hooks of S{n}: {index}"
    return run


def _cohomology_row_2():
    got = cohomology.format_summands(cohomology.even_cohomology(2))
    return got == "Z2(a2^2) + Z4(a4) + Z3(b4)", got


def _primary_separation():
    for j in range(31):
        for s in cohomology.even_cohomology(j):
            e = s.exponents
            if e[3] and any(e[:3]):
                return False, f"mixed monomial {s} in degree {2 * j}"
            if s.degree != 2 * j:
                return False, f"{s} has degree {s.degree}, expected {2 * j}"
    return True, "no monomial mixes b4 with a2, a3, a4 for 2j <= 60"


def _power_identity():
    bad = [j for j in range(1, 11) if not kring.power_identity_check(j)]
    return not bad, "v^j = (-2)^(j-1) v for j = 1..10" if not bad else f"fails for j = {bad}"


EINF_CLAIMS = {
    1: (2,),
    2: (2, 12),
    3: (2, 2),
    4: (2, 2, 12),
    5: (2, 2, 2),
    6: (2, 2, 2, 12),
}

EINF_ANCHORS = {
    1: "E_inf^{2,-2} = Z2(v)",
    2: "E_inf^{4,-4} = Z2(v^2) + Z12(x)",
    3: "E_inf^{6,-6} = Z2(v^3) + Z2(v phi)",
    4: "E_inf^{8,-8} = Z2(v^4) + Z2(v^2 phi) + Z12(x^2)",
    5: "E_inf^{10,-10} = Z2(v^5) + Z2(v^3 phi) + Z2(v phi^2)",
    6: "E_inf^{12,-12} = Z2(v^6) + Z2(v^4 phi) + Z2(v^2 phi^2) + Z12(x^3)",
}


def _einf(j):
    def run():
        a = kring.einfinity(j, j + 2)
        b = kring.einfinity(j, j + 3)
        want = cohomology.isomorphism_type(EINF_CLAIMS[j])
        got = cohomology.isomorphism_type(a.orders)
        stable = a.orders == b.orders
        ok = got == want and stable
        return ok, f"computed {a} (N={j + 2}), {b} (N={j + 3}); claimed {'+'.join(f'Z{o}' for o in EINF_CLAIMS[j])}"
    return run


def _theorem1(rel):
    def run():
        ch = kring.to_character(rel)
        return ch.is_zero(), f"character {ch.values}"
    return run


def _x_order():
    o = kring.build_truncation(4).order_in_quotient("x", 2)
    return o == 12, f"order of x in F4/F6 = {o}"


def _phi_order():
    o = kring.element_order_in_skeleton("phi", 2)
    return o == 24, f"order of phi in the 4-skeleton model = {o}"


def _survival(j):
    def run():
        r = cohomology.survival_compare(j)
        only_a3 = all(s.involves_a3() for s in r.dying)
        detail = (
            f"dying: {cohomology.format_summands(r.dying)}; surviving: "
            f"{cohomology.format_summands(r.surviving)}; E_inf orders {r.einf_orders}"
        )
        return r.einf_match and only_a3, detail
    return run


def _lens_pullback(n, expect_leading, expect_order):
    def run():
        e = lens.pullback_from_s4("phi", n, 2)
        red = e.reduced()
        lead_ok = red.coeffs[: len(expect_leading)] == expect_leading
        return lead_ok and e.order() == expect_order, f"raw {e}, reduced {red}, order {e.order()}"
    return run


def _x_pullbacks():
    forms = {n: lens.pullback_from_s4("x", n, 2).reduced() for n in (3, 4)}
    ok = all(f.coeffs[:2] == (0, 1) for f in forms.values())
    return ok, "; ".join(f"over BZ{n}: {f}" for n, f in forms.items())


def _naturality():
    o3, o4 = lens.pullback_order("phi", 3, 2), lens.pullback_order("phi", 4, 2)
    up = kring.element_order_in_skeleton("phi", 2)
    l = math.lcm(o3, o4)
    return up % l == 0 and l == 12, f"lcm({o3}, {o4}) = {l} divides {up}"


def _lens_groups():
    a, b = lens.build_lens(3, 2).structure(), lens.build_lens(4, 2).structure()
    return a == (3, 3) and b == (2, 8), f"K(BZ3^(4)) = {a}, K(BZ4^(4)) = {b}"


def all_checks() -> list[Check]:
    checks = [
        Check("s4-classes", "5 conjugacy classes C1..C5 of sizes 1, 6, 8, 6, 3", _classes),
        Check("s4-irreducibles", "irreducibles 1, d1, d2, d3, d1d3 of dimensions 1, 1, 2, 3, 3", _dimensions),
        Check("d3-on-C2", "d3 takes value +1 on C2", _d3_on_c2),
    ]
    for lhs, rhs in repring.S4_RELATIONS:
        checks.append(Check(f"rring:{lhs}={rhs}", f"{lhs} = {rhs}", _relation(lhs, rhs)))
    checks.append(Check("rring-generators", "R(S4) is generated by d1 and d3", _generation))
    checks.append(Check("hooks-generate-S5", "hooks generate R(S5)", _hooks_generate(5)))
    for (group, rep), mult in repring.S4_RESTRICTIONS.items():
        claim = repring.CyclicDecomposition(len(mult), mult)
        checks.append(Check(f"res:{rep}->Z{len(mult)}", f"res(Z{len(mult)}, {rep}) = {claim}", _restriction(group, rep, mult)))
    checks += [
        Check("cohomology-H4", "H^4 = Z2(a2^2) + Z4(a4) + Z3(b4)", _cohomology_row_2),
        Check("cohomology-primary-separation", "2-primary and 3-primary parts are separate", _primary_separation),
    ]
    for lhs, rhs in repring.S4_REDUCED_RELATIONS:
        checks.append(Check(f"reduced:{lhs}={rhs}", f"{lhs} = {rhs}", _relation(lhs, rhs)))
    checks.append(Check("v-powers", "v^j = (-2)^(j-1) v", _power_identity))
    for rel in kring.THEOREM1_RELATIONS:
        checks.append(Check(f"theorem1:{rel}", f"{rel} = 0 in K(BS4)", _theorem1(rel)))
    for j in EINF_ANCHORS:
        checks.append(Check(f"einf-{2 * j}", EINF_ANCHORS[j], _einf(j)))
    checks.append(Check("order-x-E4", "x has order 12 in E_inf^{4,-4}", _x_order))
    for j in range(1, 7):
        checks.append(Check(f"survive-{2 * j}", f"only a3-classes of H^{2 * j} die", _survival(j)))
    checks += [
        Check("order-phi-4-skeleton", "phi has order 24 over the 4-skeleton", _phi_order),
        Check("lens-groups", "K(BZ3^(4)) = Z3 + Z3, K(BZ4^(4)) = Z2 + Z8", _lens_groups),
        Check("x-pullback-mu2", "x pulls back to mu^2 + ... over BZ3 and BZ4", _x_pullbacks),
        Check("phi-pullback-Z3", "phi pulls back to mu^2 over BZ3^(4), order 3", _lens_pullback(3, (0, 1), 3)),
        Check("phi-pullback-Z4", "phi pulls back to 2mu + h.o.t. over BZ4^(4), order 4", _lens_pullback(4, (2,), 4)),
        Check("lens-naturality", "lcm(3, 4) = 12 divides the order of phi over the 4-skeleton", _naturality),
    ]
    return checks


def run_checks(checks: list[Check] | None = None) -> VerificationReport:
    results = []
    for c in checks if checks is not None else all_checks():
        try:
            ok, detail = c.run()
        except Exception as exc:  # reported, not raised
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        results.append(CheckResult(c.name, c.anchor, "pass" if ok else "fail", detail))
    return VerificationReport(tuple(results))
