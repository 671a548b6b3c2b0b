"""Exact S/T-matrix layer: validation, Verlinde fusion, Gauss sums,
central charge, and the reverse/box-tensor/double constructions.

Conventions are unitary: S is symmetric with S = S^(-1) conjugate,
d_i = S_{ui}/S_{uu} > 0 for the unit row u, D = 1/S_{uu} > 0, and the
T vector is diagonal with twists theta_i = T_i/T_u.  Everything is
checked exactly except positivity, which is certified numerically.

The only r^4 hot spot, the Verlinde sum, gets an exact integer numpy
fast path when every S entry is rational (conductor 1); the general
object path is kept both as the fallback and as the cross-check route.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .cyclotomic import Cyclotomic, ONE, ZERO, _lcm
from .errors import (
    GaussIdentityFailure,
    InputError,
    NonIntegralVerlinde,
    NonModular,
    NotRootOfUnity,
)
from .fusion import FusionRing, ring_product
from .report import ValidationReport

Matrix = tuple  # tuple of tuple of Cyclotomic


@dataclass(frozen=True)
class ModularData:
    s: Matrix
    t: tuple
    unit_index: int = 0
    ring: FusionRing | None = None

    def __post_init__(self):
        r = len(self.s)
        if r == 0:
            raise InputError("empty S matrix")
        s = tuple(tuple(row) for row in self.s)
        if any(len(row) != r for row in s):
            raise InputError("S must be square")
        if any(not isinstance(e, Cyclotomic) for row in s for e in row):
            raise InputError("S entries must be cyclotomic scalars")
        t = tuple(self.t)
        if len(t) != r or any(not isinstance(e, Cyclotomic) for e in t):
            raise InputError("T must be a length-r vector of cyclotomic scalars")
        if not 0 <= self.unit_index < r:
            raise InputError(f"unit index {self.unit_index} out of range")
        if self.ring is not None:
            if self.ring.rank != r:
                raise InputError("ring rank does not match S")
            if self.ring.unit != (self.unit_index,):
                raise InputError("modular data needs the ring's simple unit at unit_index")
        object.__setattr__(self, "s", s)
        object.__setattr__(self, "t", t)

    # -- derived quantities ---------------------------------------------------

    @property
    def rank(self) -> int:
        return len(self.s)

    @property
    def s_unit(self) -> Cyclotomic:
        return self.s[self.unit_index][self.unit_index]

    def total_dim(self) -> Cyclotomic:
        """D = 1/S_{uu}, exact."""
        if self.s_unit.is_zero():
            raise NonModular("S_{uu} = 0")
        return self.s_unit.inverse()

    def dims(self) -> tuple:
        """Quantum dimensions d_i = S_{ui}/S_{uu}."""
        inv = self.total_dim()
        u = self.unit_index
        return tuple(self.s[u][i] * inv for i in range(self.rank))

    def theta(self) -> tuple:
        """Twists theta_i = T_i/T_u."""
        tu = self.t[self.unit_index]
        if tu.is_zero():
            raise NonModular("T_u = 0, twists undefined")
        inv = tu.inverse()
        return tuple(x * inv for x in self.t)

    def dual_permutation(self) -> tuple | None:
        """The permutation C with S^2 = C, or None if S^2 is no permutation."""
        s2 = _matmul(self.s, self.s)
        perm = []
        for i, row in enumerate(s2):
            hit = None
            for j, v in enumerate(row):
                if not v.is_zero():
                    if hit is not None or v != ONE:
                        return None
                    hit = j
            if hit is None:
                return None
            perm.append(hit)
        if sorted(perm) != list(range(self.rank)):
            return None
        return tuple(perm)

    def conductor(self) -> int:
        n = 1
        for row in self.s:
            for e in row:
                n = _lcm(n, e.conductor)
        for e in self.t:
            n = _lcm(n, e.conductor)
        return n

    # -- serialization ----------------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "ring": self.ring.to_json_dict() if self.ring is not None else None,
            "unit": self.unit_index,
            "conductor": self.conductor(),
            "S": [[e.to_json_dict() for e in row] for row in self.s],
            "T": [e.to_json_dict() for e in self.t],
        }

    @staticmethod
    def from_json_dict(obj) -> "ModularData":
        if not isinstance(obj, dict):
            raise InputError("modular section must be an object")
        for key in ("ring", "unit", "conductor", "S", "T"):
            if key not in obj:
                raise InputError(f"modular section missing key {key!r}")
        ring = None if obj["ring"] is None else FusionRing.from_json_dict(obj["ring"])
        if not isinstance(obj["S"], list) or not isinstance(obj["T"], list):
            raise InputError("S and T must be arrays")
        s = tuple(
            tuple(Cyclotomic.from_json_dict(e) for e in row) for row in obj["S"]
        )
        t = tuple(Cyclotomic.from_json_dict(e) for e in obj["T"])
        md = ModularData(s=s, t=t, unit_index=obj["unit"], ring=ring)
        if md.conductor() != obj["conductor"]:
            raise InputError(
                f"conductor field {obj['conductor']} does not match entries ({md.conductor()})"
            )
        return md


# ---------------------------------------------------------------------------
# matrix helpers
# ---------------------------------------------------------------------------


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    r = len(a)
    cols = range(len(b[0]))
    out = []
    for i in range(r):
        arow = a[i]
        orow = []
        for j in cols:
            acc = ZERO
            for m in range(len(b)):
                av = arow[m]
                if not av.is_zero():
                    bv = b[m][j]
                    if not bv.is_zero():
                        acc = acc + av * bv
            orow.append(acc)
        out.append(tuple(orow))
    return tuple(out)


def _scale_columns(a: Matrix, diag: tuple) -> Matrix:
    return tuple(tuple(v * diag[j] for j, v in enumerate(row)) for row in a)


def _rational_int_matrix(md: ModularData) -> tuple[np.ndarray, int] | None:
    """S as (integer matrix, common denominator) when fully rational."""
    if any(e.conductor != 1 for row in md.s for e in row):
        return None
    den = 1
    for row in md.s:
        for e in row:
            den = _lcm(den, e.den)
    a = np.array(
        [[e.nums[0] * (den // e.den) for e in row] for row in md.s], dtype=object
    )
    return a, den


# ---------------------------------------------------------------------------
# Verlinde fusion
# ---------------------------------------------------------------------------


def verlinde(md: ModularData) -> dict:
    """Exact fusion tensor N_{ij}^k = sum_m S_im S_jm conj(S_km) / S_um.

    Raises NonIntegralVerlinde when any coefficient fails to be a
    non-negative integer, and NonModular when the unit row has a zero.
    """
    u = md.unit_index
    if any(md.s[u][m].is_zero() for m in range(md.rank)):
        raise NonModular("unit row of S has a zero entry")
    fast = _verlinde_rational(md)
    if fast is not None:
        return fast
    return _verlinde_object(md)


def _verlinde_object(md: ModularData) -> dict:
    r = md.rank
    u = md.unit_index
    s = md.s
    inv_unit_row = [s[u][m].inverse() for m in range(r)]
    conj_s = [[s[k][m].conj() for m in range(r)] for k in range(r)]
    out: dict = {}
    for i in range(r):
        for j in range(r):
            weights = [s[i][m] * s[j][m] * inv_unit_row[m] for m in range(r)]
            for k in range(r):
                acc = ZERO
                ck = conj_s[k]
                for m in range(r):
                    acc = acc + weights[m] * ck[m]
                val = acc.as_rational()
                if val is None or val.denominator != 1 or val < 0:
                    raise NonIntegralVerlinde(f"N[{i},{j},{k}] = {acc}")
                if val:
                    out[(i, j, k)] = int(val)
    return out


def _verlinde_rational(md: ModularData) -> dict | None:
    """Integer einsum route for conductor-1 S matrices; exact, no rounding.

    Uses int64 when a worst-case bound on the summands proves no
    overflow is possible, and Python ints in an object array otherwise;
    numpy only supplies the loop machinery.
    """
    packed = _rational_int_matrix(md)
    if packed is None:
        return None
    a, den = packed
    u = md.unit_index
    unit_row = [int(v) for v in a[u]]
    if any(v == 0 for v in unit_row):
        raise NonModular("unit row of S has a zero entry")
    scale = 1
    for v in unit_row:
        scale = _lcm(scale, abs(v))
    weights = np.array([scale // v for v in unit_row], dtype=object)
    amax = max(1, max(abs(int(v)) for row in a for v in row))
    wmax = max(1, max(abs(int(w)) for w in weights))
    if md.rank * amax**3 * wmax < 2**62:
        a = a.astype(np.int64)
        weights = weights.astype(np.int64)
    tensor = np.einsum("im,jm,km,m->ijk", a, a, a, weights)
    denominator = den * den * scale
    out: dict = {}
    r = md.rank
    for i in range(r):
        for j in range(r):
            for k in range(r):
                num = int(tensor[i, j, k])
                if num % denominator != 0 or num < 0:
                    raise NonIntegralVerlinde(
                        f"N[{i},{j},{k}] = {Fraction(num, denominator)}"
                    )
                if num:
                    out[(i, j, k)] = num // denominator
    return out


def ring_from_verlinde(md: ModularData, labels: tuple | None = None) -> FusionRing:
    """Build the fusion ring from S; dual comes from S^2."""
    perm = md.dual_permutation()
    if perm is None:
        raise NonModular("S^2 is not a permutation matrix")
    fusion = verlinde(md)
    if labels is None:
        labels = md.ring.labels if md.ring is not None else tuple(
            f"x{i}" for i in range(md.rank)
        )
    return FusionRing(labels=tuple(labels), unit=(md.unit_index,), dual=perm, fusion=fusion)


def with_ring(md: ModularData, ring: FusionRing | None = None) -> ModularData:
    """Attach a ring (derived via Verlinde when not supplied)."""
    if ring is None:
        if md.ring is not None:
            return md
        ring = ring_from_verlinde(md)
    return ModularData(s=md.s, t=md.t, unit_index=md.unit_index, ring=ring)


# ---------------------------------------------------------------------------
# Gauss sums and central charge
# ---------------------------------------------------------------------------


def gauss_sums(md: ModularData) -> tuple[Cyclotomic, Cyclotomic, Cyclotomic]:
    """(tau_plus, tau_minus, D) with the identity tau+ tau- = D^2 enforced."""
    dims = md.dims()
    theta = md.theta()
    tau_plus = ZERO
    tau_minus = ZERO
    for d, th in zip(dims, theta):
        d2 = d * d
        tau_plus = tau_plus + d2 * th
        tau_minus = tau_minus + d2 * th.inverse()
    total = md.total_dim()
    if tau_plus * tau_minus != total * total:
        raise GaussIdentityFailure("tau+ tau- differs from D^2")
    return tau_plus, tau_minus, total


def central_charge(md: ModularData) -> Fraction:
    """c mod 8, from tau+/D = e^(2 pi i c/8); exact."""
    tau_plus = ZERO
    dims = md.dims()
    for d, th in zip(dims, md.theta()):
        tau_plus = tau_plus + d * d * th
    u = tau_plus * md.s_unit  # tau+ / D
    root = u.as_root_of_unity()
    if root is None:
        raise NotRootOfUnity(f"tau+/D = {u} is not a root of unity")
    k, m = root
    return Fraction(8 * k, m) % 8


def central_charge_via_square(md: ModularData) -> Fraction:
    """Secondary route: (tau+/D)^2 = tau+/tau- exactly, branch fixed by
    the floating-point argument of tau+.  Used as a cross-check."""
    tau_plus, tau_minus, _ = gauss_sums(md)
    square = tau_plus / tau_minus
    root = square.as_root_of_unity()
    if root is None:
        raise NotRootOfUnity(f"tau+/tau- = {square} is not a root of unity")
    k, m = root
    base = Fraction(4 * k, m) % 8
    candidates = [base, (base + 4) % 8]
    import cmath
    import math

    val = tau_plus.approx()
    want = cmath.phase(val) % (2 * math.pi)
    best = min(
        candidates,
        key=lambda c: min(
            abs(want - 2 * math.pi * float(c) / 8),
            abs(want - 2 * math.pi * float(c) / 8 + 2 * math.pi),
            abs(want - 2 * math.pi * float(c) / 8 - 2 * math.pi),
        ),
    )
    return best


def central_charge_float_oracle(md: ModularData) -> float:
    """arg(tau+) * 8 / 2pi mod 8, pure floating point; diagnostic only."""
    import cmath
    import math

    total = 0j
    dims = md.dims()
    theta = md.theta()
    for d, th in zip(dims, theta):
        dv = d.approx()
        total += dv * dv * th.approx()
    return (cmath.phase(total) * 8 / (2 * math.pi)) % 8


# ---------------------------------------------------------------------------
# constructions
# ---------------------------------------------------------------------------


def reverse(md: ModularData) -> ModularData:
    """Mirror braiding: S and T entrywise conjugated, same ring."""
    s = tuple(tuple(e.conj() for e in row) for row in md.s)
    t = tuple(e.conj() for e in md.t)
    return ModularData(s=s, t=t, unit_index=md.unit_index, ring=md.ring)


def box_tensor(a: ModularData, b: ModularData) -> ModularData:
    """Deligne-product data: Kronecker S, entrywise product T."""
    rb = b.rank
    s = tuple(
        tuple(a.s[i][j] * b.s[x][y] for j in range(a.rank) for y in range(rb))
        for i in range(a.rank)
        for x in range(rb)
    )
    t = tuple(a.t[i] * b.t[x] for i in range(a.rank) for x in range(rb))
    ring = None
    if a.ring is not None and b.ring is not None:
        ring = ring_product(a.ring, b.ring)
    return ModularData(
        s=s, t=t, unit_index=a.unit_index * rb + b.unit_index, ring=ring
    )


def double(md: ModularData) -> ModularData:
    """md box-tensor its reverse; always passes the central-charge gate."""
    return box_tensor(md, reverse(md))


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------


def validate_modular(
    md: ModularData, tolerance: float = 1e-9, check_verlinde: bool = True
) -> ValidationReport:
    """Exact check of every modular axiom; names are stable API.

    Only positivity statements use floating point, with the given
    tolerance.  Verlinde integrality (the r^4 part) can be switched off
    for large inputs whose fusion is already known by construction.
    """
    report = ValidationReport("modular data")
    r = md.rank
    u = md.unit_index

    ok, where = True, None
    for i in range(r):
        for j in range(i + 1, r):
            if md.s[i][j] != md.s[j][i]:
                ok, where = False, (i, j)
                break
        if not ok:
            break
    report.add("s_symmetric", ok, where)

    dims = None
    if md.s_unit.is_zero():
        report.add("dims_real_positive", False, (u, u), "S_{uu} = 0")
    else:
        dims = md.dims()
        ok, where, detail = True, None, ""
        for i, d in enumerate(dims):
            if d.conj() != d:
                ok, where, detail = False, (i,), "not fixed by conjugation"
                break
            val = d.approx()
            if val.real <= tolerance:
                ok, where, detail = False, (i,), f"approx {val.real:.3g} not positive"
                break
        report.add("dims_real_positive", ok, where, detail)

    if dims is not None:
        total = md.total_dim()
        square_sum = ZERO
        for d in dims:
            square_sum = square_sum + d * d
        ok = total * total == square_sum
        detail = "" if ok else "1/S_uu squared differs from sum of d_i^2"
        if ok and total.approx().real <= tolerance:
            ok, detail = False, "D not positive"
        report.add("total_dim", ok, None, detail)
    else:
        report.add("total_dim", False, None, "dims unavailable")

    perm = md.dual_permutation()
    if perm is None:
        report.add("s_squared_dual_permutation", False, None, "S^2 is not a permutation matrix")
    else:
        ok = all(perm[perm[i]] == i for i in range(r)) and perm[u] == u
        report.add(
            "s_squared_dual_permutation",
            ok,
            None if ok else (u,),
            "" if ok else "S^2 permutation is not an involution fixing the unit",
        )
        if not ok:
            perm = None

    if md.ring is not None:
        ok = perm is not None and perm == md.ring.dual
        report.add(
            "dual_matches_ring",
            ok,
            None,
            "" if ok else "S^2 permutation differs from the declared dual",
        )

    theta = None
    if md.t[u].is_zero():
        report.add("theta_normalized", False, (u,), "T_u = 0")
    else:
        theta = md.theta()
        report.add("theta_normalized", theta[u] == ONE, None)

    if theta is not None:
        ok, where = True, None
        for i, th in enumerate(theta):
            if th.as_root_of_unity() is None:
                ok, where = False, (i,)
                break
        report.add("theta_root_of_unity", ok, where)

        if perm is not None:
            ok, where = True, None
            for i in range(r):
                if theta[perm[i]] != theta[i]:
                    ok, where = False, (i,)
                    break
            report.add("theta_dual_invariant", ok, where)
        else:
            report.add("theta_dual_invariant", False, None, "dual permutation unavailable")

        # (S T)^3 = (tau+/D) S^2 with T the normalized twist diagonal
        if dims is not None:
            tau_plus = ZERO
            for d, th in zip(dims, theta):
                tau_plus = tau_plus + d * d * th
            st = _scale_columns(md.s, theta)
            st3 = _matmul(_matmul(st, st), st)
            s2 = _matmul(md.s, md.s)
            factor = tau_plus * md.s_unit
            ok, where = True, None
            for i in range(r):
                for j in range(r):
                    if st3[i][j] != factor * s2[i][j]:
                        ok, where = False, (i, j)
                        break
                if not ok:
                    break
            report.add("balancing", ok, where)

            tau_minus = ZERO
            for d, th in zip(dims, theta):
                tau_minus = tau_minus + d * d * th.inverse()
            total = md.total_dim()
            report.add("gauss_identity", tau_plus * tau_minus == total * total, None)
    else:
        report.add("theta_root_of_unity", False, None, "twists unavailable")
        report.add("theta_dual_invariant", False, None, "twists unavailable")
        report.add("balancing", False, None, "twists unavailable")
        report.add("gauss_identity", False, None, "twists unavailable")

    if check_verlinde:
        try:
            fusion = verlinde(md)
        except NonIntegralVerlinde as exc:
            report.add("verlinde_integral", False, None, str(exc))
            fusion = None
        except NonModular as exc:
            report.add("verlinde_integral", False, None, str(exc))
            fusion = None
        else:
            report.add("verlinde_integral", True, None)
        if md.ring is not None:
            if fusion is None:
                report.add("verlinde_matches_ring", False, None, "verlinde unavailable")
            else:
                ok = fusion == md.ring.fusion
                where = None
                if not ok:
                    keys = set(fusion) | set(md.ring.fusion)
                    where = min(
                        k for k in keys if fusion.get(k, 0) != md.ring.fusion.get(k, 0)
                    )
                report.add("verlinde_matches_ring", ok, where)
    return report
