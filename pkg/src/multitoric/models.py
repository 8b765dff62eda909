"""Flat models of the HK -> CY -> G2 -> Spin(7) hierarchy and their multi-moment maps.

All models live in R^8 with coordinates ``x0 .. x7``; each geometry uses the
trailing block of coordinates (HK: x4..x7, CY: x2..x7, G2: x1..x7, Spin(7):
x0..x7) and is oriented by the wedge of its coframe in increasing order.
"""

from __future__ import annotations

import enum
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from itertools import permutations

from .exterior import (
    Form,
    VectorField,
    d,
    evaluate_on,
    hodge,
    solve_potential,
    wedge,
)
from .poly import Poly

NVARS = 8
HALF = Fraction(1, 2)


class Geometry(enum.Enum):
    HK = ("hk", 4, 1)
    CY = ("cy", 6, 2)
    G2 = ("g2", 7, 3)
    SPIN7 = ("spin7", 8, 4)

    def __init__(self, label: str, dim: int, rank: int):
        self.label = label
        self.dim = dim
        self.rank = rank

    @property
    def frame(self) -> tuple[int, ...]:
        return tuple(range(NVARS - self.dim, NVARS))

    @classmethod
    def from_label(cls, label: str) -> Geometry:
        for g in cls:
            if g.label == label.lower():
                return g
        raise ValueError(f"unknown geometry {label!r}; choose from hk, cy, g2, spin7")


# Real coordinate pairs of the complex coordinates, z = x[a] + i*s*x[b].
# The printed HK and CY coordinates contain e/x slips ("x4 + ie5", "z6 - iz7");
# they are read as x-coordinates throughout.
COMPLEX_COORDS = {
    "hk": {"z": (4, 5, 1), "w": (6, 7, 1)},
    "cy": {"z1": (2, 3, 1), "z2": (4, 5, -1), "z3": (6, 7, -1)},
}
TYPO_NOTES = [
    "HK coordinates printed as z = x4 + i e5, w = e6 + i e7; used z = x4 + i x5, w = x6 + i x7",
    "CY coordinate printed as z3 = z6 - i z7; used z3 = x6 - i x7",
]


def e(*idx: int) -> Form:
    return Form.basis(NVARS, *idx)


X = Poly.variables(NVARS)


# -- small complex helpers (pairs of real objects) ------------------------

@dataclass(frozen=True)
class CPoly:
    re: Poly
    im: Poly

    def __mul__(self, o: CPoly) -> CPoly:
        return CPoly(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    def __neg__(self) -> CPoly:
        return CPoly(-self.re, -self.im)

    def conj(self) -> CPoly:
        return CPoly(self.re, -self.im)

    def times_i(self) -> CPoly:
        return CPoly(-self.im, self.re)

    def abs2(self) -> Poly:
        return self.re * self.re + self.im * self.im


def complex_coord(a: int, b: int, s: int) -> CPoly:
    return CPoly(X[a], X[b] * s)


def complex_differential(a: int, b: int, s: int) -> tuple[Form, Form]:
    return e(a), e(b) * s


def cwedge(p: tuple[Form, Form], q: tuple[Form, Form]) -> tuple[Form, Form]:
    return (
        wedge(p[0], q[0]) - wedge(p[1], q[1]),
        wedge(p[0], q[1]) + wedge(p[1], q[0]),
    )


# -- structure forms ------------------------------------------------------

def hk_forms() -> tuple[Form, Form, Form]:
    w1 = e(4, 5) + e(6, 7)
    w2 = e(4, 6) + e(7, 5)
    w3 = e(4, 7) + e(5, 6)
    return w1, w2, w3


def cy_forms() -> tuple[Form, Form, Form]:
    """``(omega, Omega_+, Omega_-)`` with Omega_C = (e2 + i e3) ^ (omega2 - i omega3)."""
    w1, w2, w3 = hk_forms()
    omega = e(2, 3) - w1
    re, im = cwedge((e(2), e(3)), (w2, -w3))
    return omega, re, im


def g2_forms() -> tuple[Form, Form]:
    """``(phi, *phi)`` assembled from the CY forms."""
    omega, op, om = cy_forms()
    phi = wedge(e(1), omega) - op
    psi = wedge(e(1), om) + wedge(omega, omega) * HALF
    return phi, psi


def spin7_form_printed() -> Form:
    """The Cayley form written out term by term."""
    return (
        e(0, 1, 2, 3)
        - wedge(e(0, 1) + e(2, 3), e(4, 5) + e(6, 7))
        - wedge(e(0, 2) + e(3, 1), e(4, 6) + e(7, 5))
        - wedge(e(0, 3) + e(1, 2), e(4, 7) + e(5, 6))
        + e(4, 5, 6, 7)
    )


def spin7_form() -> Form:
    phi, psi = g2_forms()
    return wedge(e(0), phi) + psi


def structure_forms(g: Geometry) -> list[Form]:
    if g is Geometry.HK:
        return list(hk_forms())
    if g is Geometry.CY:
        return list(cy_forms())
    if g is Geometry.G2:
        return list(g2_forms())
    return [spin7_form_printed()]


# -- torus actions --------------------------------------------------------

@dataclass(frozen=True)
class TorusAction:
    """Linear torus action: coordinate translations plus weighted rotations.

    ``translations`` lists, per generator, a coordinate index or ``None``;
    ``weights[k][c]`` is the weight of generator ``k`` on complex coordinate ``c``.
    """

    coords: tuple[tuple[int, int, int], ...]
    weights: tuple[tuple[int, ...], ...]
    translations: tuple[int | None, ...]

    def generators(self) -> list[VectorField]:
        fields = []
        for shift, wts in zip(self.translations, self.weights):
            m = [[0] * NVARS for _ in range(NVARS)]
            for (a, b, s), w in zip(self.coords, wts):
                # z = x_a + i s x_b, z' = i w z
                m[a][b] += -w * s
                m[b][a] += w * s
            comps = list(VectorField.linear(m).components)
            if shift is not None:
                comps[shift] = comps[shift] + 1
            fields.append(VectorField(comps))
        return fields


def torus_action(g: Geometry) -> TorusAction:
    if g is Geometry.HK:
        c = COMPLEX_COORDS["hk"]
        return TorusAction((c["z"], c["w"]), ((1, -1),), (None,))
    c = COMPLEX_COORDS["cy"]
    coords = (c["z1"], c["z2"], c["z3"])
    cy_w = ((1, 0, -1), (0, 1, -1))
    flat = {Geometry.CY: (), Geometry.G2: (1,), Geometry.SPIN7: (0, 1)}[g]
    weights = tuple((0, 0, 0) for _ in flat) + cy_w
    translations = tuple(flat) + (None, None)
    return TorusAction(coords, weights, translations)


def torus_generators(g: Geometry) -> list[VectorField]:
    return torus_action(g).generators()


# -- multi-moment maps ----------------------------------------------------

def moment_maps(g: Geometry) -> list[Poly]:
    if g is Geometry.HK:
        z = complex_coord(*COMPLEX_COORDS["hk"]["z"])
        w = complex_coord(*COMPLEX_COORDS["hk"]["w"])
        nu1 = (w.abs2() - z.abs2()) * HALF
        zw = (z * w).times_i()
        return [nu1, zw.re, zw.im]
    c = COMPLEX_COORDS["cy"]
    z1, z2, z3 = (complex_coord(*c[k]) for k in ("z1", "z2", "z3"))
    prod = z1 * z2 * z3
    if g is Geometry.CY:
        m = -prod
        return [(z3.abs2() - z1.abs2()) * HALF, (z3.abs2() - z2.abs2()) * HALF, m.re, m.im]
    if g is Geometry.G2:
        m = prod.conj()
        return [m.re, (z2.abs2() - z3.abs2()) * HALF, (z3.abs2() - z1.abs2()) * HALF, m.im]
    m = prod.times_i().conj()
    return [m.re, m.im, (z3.abs2() - z2.abs2()) * HALF, (z1.abs2() - z3.abs2()) * HALF]


# -- verification ---------------------------------------------------------

@dataclass
class IdentityCheck:
    name: str
    passed: bool
    lhs_terms: int
    rhs_terms: int
    discrepancy: str = ""

    @property
    def status(self) -> str:
        return "PASS" if self.passed else "FAIL"

    def to_dict(self) -> dict:
        out = asdict(self)
        out["status"] = self.status
        return out


@dataclass
class ModelReport:
    geometry: str
    checks: list[IdentityCheck] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "geometry": self.geometry,
            "passed": self.passed,
            "checks": [c.to_dict() for c in self.checks],
            "notes": list(self.notes),
        }


def _compare_potential(name: str, nu: Poly, rhs: Form) -> IdentityCheck:
    lhs = d(Form.scalar(nu))
    if lhs == rhs:
        return IdentityCheck(name, True, lhs.num_terms(), rhs.num_terms())
    try:
        corrected = solve_potential(rhs)
    except ValueError as exc:
        return IdentityCheck(name, False, lhs.num_terms(), rhs.num_terms(), f"right side not exact: {exc}")
    if corrected == -nu:
        why = f"sign flip: potential of right side is -nu = {corrected}"
    else:
        why = f"potential of right side is {corrected}; difference {corrected - nu}"
    return IdentityCheck(name, False, lhs.num_terms(), rhs.num_terms(), why)


def spin7_slots(i: int, convention: str = "cyclic") -> tuple[int, int, int]:
    """Generators (1-based) filling ``Phi(U_j, U_k, U_l, .)`` for the i-th component.

    ``cyclic``: (i j k l) is a cyclic shift of (1 2 3 4).
    ``even``: (i j k l) is the even permutation with (j, k) increasing.
    """
    if convention == "cyclic":
        return tuple(((i - 1 + s) % 4) + 1 for s in (1, 2, 3))
    if convention == "even":
        for p in permutations(range(1, 5)):
            if p[0] == i and p[1] < p[2] and _parity(p) == 0:
                return p[1:]
    raise ValueError(f"unknown convention {convention!r}")


def _parity(p) -> int:
    p = list(p)
    inv = sum(1 for a in range(len(p)) for b in range(a + 1, len(p)) if p[a] > p[b])
    return inv % 2


def multi_moment_rhs(g: Geometry, convention: str = "cyclic") -> list[tuple[str, Form]]:
    """Named right-hand sides ``alpha(U_j, ..., .)`` whose potentials are the nu_i."""
    U = torus_generators(g)
    if g is Geometry.HK:
        return [(f"d nu{i + 1} = omega{i + 1}(U, .)", evaluate_on(w, U[0])) for i, w in enumerate(hk_forms())]
    if g is Geometry.CY:
        omega, op, om = cy_forms()
        return [
            ("d nu1 = omega(U1, .)", evaluate_on(omega, U[0])),
            ("d nu2 = omega(U2, .)", evaluate_on(omega, U[1])),
            ("d nu3 = Omega+(U1, U2, .)", evaluate_on(op, U[0], U[1])),
            ("d nu4 = Omega-(U1, U2, .)", evaluate_on(om, U[0], U[1])),
        ]
    if g is Geometry.G2:
        phi, psi = g2_forms()
        out = []
        for i, (j, k) in enumerate(((2, 3), (3, 1), (1, 2)), start=1):
            out.append((f"d nu{i} = phi(U{j}, U{k}, .)", evaluate_on(phi, U[j - 1], U[k - 1])))
        out.append(("d nu4 = *phi(U1, U2, U3, .)", evaluate_on(psi, U[0], U[1], U[2])))
        return out
    Phi = spin7_form_printed()
    out = []
    for i in range(1, 5):
        j, k, l = spin7_slots(i, convention)
        sign = 1 if i % 2 else -1
        rhs = evaluate_on(Phi, U[j - 1], U[k - 1], U[l - 1]) * sign
        s = "+" if sign > 0 else "-"
        out.append((f"d nu{i} = {s}Phi(U{j}, U{k}, U{l}, .)", rhs))
    return out


def verify_multi_moment(g: Geometry, convention: str = "cyclic") -> ModelReport:
    report = ModelReport(g.label)
    nus = moment_maps(g)
    for nu, (name, rhs) in zip(nus, multi_moment_rhs(g, convention)):
        report.checks.append(_compare_potential(name, nu, rhs))
    if g in (Geometry.HK, Geometry.CY):
        report.notes.append(TYPO_NOTES[0] if g is Geometry.HK else TYPO_NOTES[1])
    if g is Geometry.SPIN7:
        report.notes.append(f"permutation convention: {convention}")
        U = torus_generators(g)
        rhs = -evaluate_on(spin7_form_printed(), U[0], U[1], U[2])
        report.checks.append(_compare_potential("d nu4 = -Phi(U1, U2, U3, .) (T3 form)", nus[3], rhs))
    return report


def spin7_convention_scan() -> dict[str, bool]:
    """Which slot conventions make all four Spin(7) identities hold."""
    return {c: verify_multi_moment(Geometry.SPIN7, c).passed for c in ("cyclic", "even")}


def _form_check(name: str, lhs: Form, rhs: Form) -> IdentityCheck:
    ok = lhs == rhs
    why = "" if ok else f"difference: {lhs - rhs}"
    return IdentityCheck(name, ok, lhs.num_terms(), rhs.num_terms(), why)


def hierarchy_check() -> ModelReport:
    """Exact identities tying the four structures together."""
    report = ModelReport("hierarchy")
    add = report.checks.append
    w1, w2, w3 = hk_forms()

    hk = COMPLEX_COORDS["hk"]
    dz = complex_differential(*hk["z"])
    dw = complex_differential(*hk["w"])
    kahler = Form.zero(NVARS, 2)
    for dq in (dz, dw):
        # (i/2) dq ^ d(conj q) is real
        re, im = cwedge(dq, (dq[0], -dq[1]))
        kahler = kahler - im * HALF
        assert re.is_zero()
    add(_form_check("omega1 = (i/2)(dz^dzbar + dw^dwbar)", w1, kahler))
    re, im = cwedge(dz, dw)
    add(_form_check("omega2 = Re(dz ^ dw)", w2, re))
    add(_form_check("omega3 = Im(dz ^ dw)", w3, im))

    omega, op, om = cy_forms()
    cy = COMPLEX_COORDS["cy"]
    dzs = [complex_differential(*cy[k]) for k in ("z1", "z2", "z3")]
    kahler = Form.zero(NVARS, 2)
    for dq in dzs:
        kahler = kahler - cwedge(dq, (dq[0], -dq[1]))[1] * HALF
    add(_form_check("omega = e23 - omega1 = (i/2) sum dz^dzbar", omega, kahler))
    re, im = cwedge(cwedge(dzs[0], dzs[1]), dzs[2])
    add(_form_check("Omega+ = Re(dz1 ^ dz2 ^ dz3)", op, re))
    add(_form_check("Omega- = Im(dz1 ^ dz2 ^ dz3)", om, im))

    phi, psi = g2_forms()
    g2_frame = Geometry.G2.frame
    star_phi = hodge(phi, g2_frame)
    add(_form_check("*7 phi (formula) = hodge(phi)", psi, star_phi))
    add(_form_check(
        "hodge(phi) - e1 ^ Omega- = (1/2) omega^2",
        star_phi - wedge(e(1), om),
        wedge(omega, omega) * HALF,
    ))

    Phi = spin7_form_printed()
    add(_form_check("e0 ^ phi + *7 phi = Phi (printed)", spin7_form(), Phi))
    add(_form_check("*8 Phi = Phi", hodge(Phi, Geometry.SPIN7.frame), Phi))

    for label, form in (("omega1", w1), ("omega2", w2), ("omega3", w3), ("omega", omega),
                        ("Omega+", op), ("Omega-", om), ("phi", phi), ("*phi", psi), ("Phi", Phi)):
        add(_form_check(f"d {label} = 0", d(form), Form.zero(NVARS, form.degree + 1)))
    return report


# -- stabiliser table -----------------------------------------------------

@dataclass(frozen=True)
class StabilizerType:
    group: str
    representation: str
    tangent: str


def admissible_stabilizer(k_trivial: int) -> StabilizerType:
    """Largest stabiliser in Spin(7) whose tangent representation has a trivial R^k summand."""
    if not isinstance(k_trivial, int) or not 1 <= k_trivial <= 8:
        raise ValueError(f"trivial summand dimension must lie in 1..8, got {k_trivial}")
    if k_trivial == 1:
        return StabilizerType("G2", "R^7", "R + R^7")
    if k_trivial == 2:
        return StabilizerType("SU(3)", "C^3", "R^2 + C^3")
    if k_trivial <= 4:
        return StabilizerType("SU(2)", "C^2", "R^4 + C^2")
    return StabilizerType("trivial", "R^8", "R^8")
