"""Metric groups: the pointed sector, where everything is decidable.

A finite abelian group A carrying a quadratic form q : A -> Q/Z whose
associated bilinear pairing is nondegenerate is the same data as a
pointed modular category: S_{ab} is the exponentiated pairing over
sqrt(|A|), twists are e^(2 pi i q(a)), fusion is the group law.  This module builds that data exactly,
enumerates Lagrangian subgroups (|L|^2 = |A|, q trivial on L) by brute
force, and computes the Gauss-Milgram signature as an independent route
to the central charge.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .cyclotomic import cyc_sum, from_angle, sqrt_int
from .errors import Degenerate, InputError, SizeLimit
from .fusion import FusionRing
from .modular import ModularData
from .report import ValidationReport

SUBGROUP_SIZE_CAP = 4096


def _element_label(a: tuple) -> str:
    return ",".join(str(c) for c in a) if a else "0"


@dataclass(frozen=True)
class MetricGroup:
    orders: tuple
    q: dict

    def __post_init__(self):
        orders = tuple(self.orders)
        if any(not isinstance(n, int) or n < 1 for n in orders):
            raise InputError("orders must be positive integers")
        elements = tuple(product(*(range(n) for n in orders)))
        table = {}
        for a in elements:
            if a not in self.q:
                raise InputError(f"q is missing element {a}")
            table[a] = Fraction(self.q[a]) % 1
        if len(self.q) != len(elements):
            raise InputError("q lists elements outside the group")
        object.__setattr__(self, "orders", orders)
        object.__setattr__(self, "q", table)
        object.__setattr__(self, "_elements", elements)
        object.__setattr__(self, "_index", {a: i for i, a in enumerate(elements)})

    # -- group structure -----------------------------------------------------

    @property
    def size(self) -> int:
        return len(self._elements)

    @property
    def elements(self) -> tuple:
        return self._elements

    def index(self, a: tuple) -> int:
        return self._index[a]

    def add(self, a: tuple, b: tuple) -> tuple:
        return tuple((x + y) % n for x, y, n in zip(a, b, self.orders))

    def neg(self, a: tuple) -> tuple:
        return tuple((-x) % n for x, n in zip(a, self.orders))

    def qval(self, a: tuple) -> Fraction:
        return self.q[a]

    def bilinear(self, a: tuple, b: tuple) -> Fraction:
        return (self.q[self.add(a, b)] - self.q[a] - self.q[b]) % 1

    def generators(self) -> list:
        """Canonical generators of the cyclic factors, reduced mod orders."""
        return [
            tuple(1 % self.orders[j] if i == j else 0 for j in range(len(self.orders)))
            for i in range(len(self.orders))
        ]

    def radical(self) -> list:
        """Elements pairing trivially with everything."""
        gens = self.generators()
        return [
            a
            for a in self._elements
            if all(self.bilinear(a, g) == 0 for g in gens)
        ]

    # -- serialization ---------------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "orders": list(self.orders),
            "q": {_element_label(a): str(self.q[a]) for a in self._elements},
        }

    @staticmethod
    def from_json_dict(obj) -> "MetricGroup":
        if not isinstance(obj, dict) or "orders" not in obj or "q" not in obj:
            raise InputError("metric section needs 'orders' and 'q'")
        orders = obj["orders"]
        if not isinstance(orders, list):
            raise InputError("orders must be a list")
        if not isinstance(obj["q"], dict):
            raise InputError("q must be an object")
        table = {}
        for key, value in obj["q"].items():
            if key == "0" and not orders:
                a: tuple = ()
            else:
                try:
                    a = tuple(int(c) for c in key.split(","))
                except ValueError as exc:
                    raise InputError(f"bad element key {key!r}") from exc
            try:
                table[a] = Fraction(value)
            except (ValueError, ZeroDivisionError) as exc:
                raise InputError(f"bad rational {value!r} for element {key!r}") from exc
        return MetricGroup(orders=tuple(orders), q=table)


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------


def validate_metric(mg: MetricGroup) -> ValidationReport:
    """Quadratic-form axioms via the Gram presentation.

    q is quadratic iff it agrees with the polynomial built from its
    values on generators (and generator pairs) and that polynomial
    descends to the quotient; nondegeneracy is a radical computation.
    """
    report = ValidationReport("metric group")
    zero = tuple(0 for _ in mg.orders)
    report.add("q_zero_at_zero", mg.qval(zero) == 0, (zero,) if mg.qval(zero) else None)

    s = len(mg.orders)
    gens = mg.generators()
    diag = [mg.qval(g) for g in gens]
    off = {}
    for u in range(s):
        for v in range(u + 1, s):
            off[(u, v)] = mg.bilinear(gens[u], gens[v])

    ok, where = True, None
    for u in range(s):
        n = mg.orders[u]
        if (n * n * diag[u]) % 1 != 0 or (2 * n * diag[u]) % 1 != 0:
            ok, where = False, (u,)
            break
        for v in range(s):
            if v == u:
                continue
            key = (min(u, v), max(u, v))
            if (n * off[key]) % 1 != 0:
                ok, where = False, (u, v)
                break
        if not ok:
            break
    report.add("q_descends_to_quotient", ok, where)

    ok, where = True, None
    for a in mg.elements:
        want = sum(
            (a[u] * a[u] * diag[u] for u in range(s)), Fraction(0)
        ) + sum(
            (a[u] * a[v] * off[(u, v)] for u in range(s) for v in range(u + 1, s)),
            Fraction(0),
        )
        if want % 1 != mg.qval(a):
            ok, where = False, (a,)
            break
    report.add("q_is_quadratic", ok, where)

    rad = mg.radical()
    report.add(
        "nondegenerate",
        len(rad) == 1,
        None if len(rad) == 1 else (rad[1] if len(rad) > 1 else None,),
    )
    return report


# ---------------------------------------------------------------------------
# modular data
# ---------------------------------------------------------------------------


def metric_modular_data(mg: MetricGroup) -> ModularData:
    """Pointed modular data; raises Degenerate when the form is degenerate."""
    if len(mg.radical()) != 1:
        raise Degenerate("bilinear form has a nonzero radical")
    n = mg.size
    elements = mg.elements
    inv_sqrt = sqrt_int(n).inverse()
    s = tuple(
        tuple(from_angle(-mg.bilinear(a, b)) * inv_sqrt for b in elements)
        for a in elements
    )
    t = tuple(from_angle(mg.qval(a)) for a in elements)
    labels = tuple(_element_label(a) for a in elements)
    index = mg.index
    fusion = {
        (index(a), index(b), index(mg.add(a, b))): 1
        for a in elements
        for b in elements
    }
    zero = tuple(0 for _ in mg.orders)
    ring = FusionRing(
        labels=labels,
        unit=(index(zero),),
        dual=tuple(index(mg.neg(a)) for a in elements),
        fusion=fusion,
    )
    return ModularData(s=s, t=t, unit_index=index(zero), ring=ring)


def matches_modular_data(mg: MetricGroup, md: ModularData) -> bool:
    """Does md equal the data regenerated from mg (labels aside)?"""
    try:
        regenerated = metric_modular_data(mg)
    except Degenerate:
        return False
    if regenerated.rank != md.rank or regenerated.unit_index != md.unit_index:
        return False
    if any(
        regenerated.s[i][j] != md.s[i][j]
        for i in range(md.rank)
        for j in range(md.rank)
    ):
        return False
    if any(regenerated.t[i] != md.t[i] for i in range(md.rank)):
        return False
    if md.ring is not None:
        ring = regenerated.ring
        if md.ring.fusion != ring.fusion or md.ring.dual != ring.dual:
            return False
        if md.ring.unit != ring.unit:
            return False
    return True


def abelian_double(orders: tuple) -> MetricGroup:
    """Hyperbolic form on G + G-hat: q(g, chi) = chi(g) = sum g_u chi_u / n_u."""
    orders = tuple(orders)
    doubled = orders + orders
    s = len(orders)
    q = {}
    for a in product(*(range(n) for n in doubled)):
        g, chi = a[:s], a[s:]
        q[a] = sum(
            (Fraction(gu * cu, nu) for gu, cu, nu in zip(g, chi, orders)),
            Fraction(0),
        ) % 1
    return MetricGroup(orders=doubled, q=q)


# ---------------------------------------------------------------------------
# Gauss-Milgram signature
# ---------------------------------------------------------------------------


def milgram_signature(mg: MetricGroup) -> Fraction:
    """sigma mod 8 with sum_a e^(2 pi i q(a)) = sqrt(|A|) e^(2 pi i sigma/8).

    Independent of the S/T route: extracts the root of unity from the
    squared Gauss sum and fixes the mod-4 branch numerically.
    """
    g = cyc_sum(from_angle(mg.qval(a)) for a in mg.elements)
    if g * g.conj() != mg.size:
        raise Degenerate("Gauss sum magnitude differs from sqrt(|A|)")
    square = g * g / mg.size
    root = square.as_root_of_unity()
    if root is None:  # pragma: no cover - magnitude check rules this out
        raise Degenerate("squared Gauss sum is not a root of unity")
    k, m = root
    base = Fraction(4 * k, m) % 8
    candidates = [base, (base + 4) % 8]
    val = g.approx()
    want = math.atan2(val.imag, val.real)
    tau = 2 * math.pi

    def dist(c: Fraction) -> float:
        ang = tau * float(c) / 8
        return min(abs(want - ang), abs(want - ang + tau), abs(want - ang - tau))

    return min(candidates, key=dist)


# ---------------------------------------------------------------------------
# Lagrangian subgroups
# ---------------------------------------------------------------------------


def lagrangian_subgroups(mg: MetricGroup) -> list:
    """All subgroups L with |L|^2 = |A| and q|_L = 0, sorted canonically.

    Brute-force closure growth over the isotropic elements with
    lexicographic canonical generating chains; capped at |A| = 4096.
    """
    n = mg.size
    if n > SUBGROUP_SIZE_CAP:
        raise SizeLimit(f"|A| = {n} exceeds the subgroup enumeration cap {SUBGROUP_SIZE_CAP}")
    root = math.isqrt(n)
    if root * root != n:
        return []
    target = root
    iso = [a for a in mg.elements if mg.qval(a) == 0]
    zero = tuple(0 for _ in mg.orders)
    if zero not in iso:
        return []
    iso_set = set(iso)

    found: set = set()
    seen: set = set()

    def grow(current: frozenset, start: int) -> None:
        if len(current) == target:
            found.add(current)
            return
        for idx in range(start, len(iso)):
            a = iso[idx]
            if a in current:
                continue
            new = set(current)
            shift = a
            while shift not in current:
                new.update(mg.add(c, shift) for c in current)
                shift = mg.add(shift, a)
            if len(new) > target or target % len(new) != 0:
                continue
            if not new <= iso_set:
                continue
            fz = frozenset(new)
            if fz in seen:
                continue
            seen.add(fz)
            grow(fz, idx + 1)

    grow(frozenset([zero]), 0)
    return sorted(tuple(sorted(l)) for l in found)


def subgroup_indicator(mg: MetricGroup, subgroup) -> tuple:
    members = set(subgroup)
    return tuple(1 if a in members else 0 for a in mg.elements)
