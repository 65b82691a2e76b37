"""Weight-lattice combinatorics: saturated supports, Freudenthal multiplicities,
the inadmissible-highest-weight list, and the admissibility decision.

The multiplicity engine works on integer fundamental-coordinate tuples; the
public API speaks WeightVec (simple-root coordinates) throughout.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Set, Tuple

from .errors import OrbitBudgetExceeded, PreconditionViolated
from .rootsys import (
    RootSystem,
    SimpleType,
    WeightVec,
    build_root_system,
    dominance_leq,
    dominant_representative,
    is_dominant,
    orbit_cap,
    weyl_orbit,
)

Q = Fraction

Fund = Tuple[int, ...]


# --- fundamental-coordinate engine ------------------------------------------

def fund_of(rs: RootSystem, lam: WeightVec) -> Fund:
    r = rs.to_fundamental(lam)
    if any(x.denominator != 1 for x in r):
        raise PreconditionViolated(f"{lam} is not in the weight lattice")
    return tuple(int(x) for x in r)


def weight_of(rs: RootSystem, fund: Fund) -> WeightVec:
    return rs.from_fundamental(fund)


class _Engine:
    """Per-root-system integer tables used by the multiplicity recursion."""

    def __init__(self, rs: RootSystem):
        self.rs = rs
        n = rs.rank
        self.n = n
        self.d = rs.d
        self.cartan = rs.cartan
        # positive roots: (fund coords, root coords, half-length d_alpha)
        self.pos: List[Tuple[Fund, Tuple[int, ...], Fraction]] = []
        for w in rs.positive_roots:
            fund = tuple(int(x) for x in rs.to_fundamental(w))
            rootc = tuple(int(c) for c in w.coords)
            self.pos.append((fund, rootc, rs.bilinear(w, w) / 2))
        # (omega_i, omega_j) matrix for norms
        self.omega_form = [
            [rs.inv_cartan[i][j] * rs.d[j] for j in range(n)] for i in range(n)
        ]

    def form(self, a: Fund, b: Fund) -> Fraction:
        of = self.omega_form
        return sum(
            (a[i] * b[j] * of[i][j] for i in range(self.n) for j in range(self.n)
             if a[i] and b[j]),
            Q(0),
        )

    def form_with_root(self, a: Fund, rootc: Tuple[int, ...]) -> Fraction:
        # (sum r_i omega_i, sum m_k alpha_k) = sum r_i m_i d_i
        return Q(sum(a[i] * rootc[i] * self.d[i] for i in range(self.n)))

    def domrep(self, a: Fund) -> Fund:
        w = list(a)
        c = self.cartan
        while True:
            i = next((k for k in range(self.n) if w[k] < 0), None)
            if i is None:
                return tuple(w)
            ri = w[i]
            for j in range(self.n):
                w[j] -= ri * c[i][j]

    def dominant_weights_below(self, lam: Fund) -> List[Fund]:
        """All dominant mu with mu <= lam in the same root-lattice coset.

        Steps subtract single positive roots; covers in the dominance order
        of dominant weights differ by a positive root, so this is complete.
        """
        seen = {lam}
        frontier = [lam]
        while frontier:
            nxt = []
            for nu in frontier:
                for pf, _, _ in self.pos:
                    cand = tuple(a - b for a, b in zip(nu, pf))
                    if all(x >= 0 for x in cand) and cand not in seen:
                        seen.add(cand)
                        nxt.append(cand)
            frontier = nxt
        return sorted(seen, key=lambda f: (-sum(f), f))

    def freudenthal_table(self, lam: Fund) -> Dict[Fund, int]:
        """Multiplicities of all dominant weights of V(lam)."""
        if any(x < 0 for x in lam):
            raise PreconditionViolated("highest weight must be dominant")
        dom = self.dominant_weights_below(lam)
        depth = {}
        lam_w = weight_of(self.rs, lam)
        for f in dom:
            diff = lam_w - weight_of(self.rs, f)
            depth[f] = sum(diff.coords, Q(0))
        order = sorted(dom, key=lambda f: (depth[f], f))
        delta = (1,) * self.n
        lam_delta = tuple(a + b for a, b in zip(lam, delta))
        top = self.form(lam_delta, lam_delta)
        mult: Dict[Fund, int] = {lam: 1}
        for mu in order:
            if mu == lam:
                continue
            rhs = Q(0)
            for pf, rootc, _ in self.pos:
                k = 1
                while True:
                    nu = tuple(a + k * b for a, b in zip(mu, pf))
                    m = mult.get(self.domrep(nu), 0)
                    if m == 0:
                        break
                    rhs += m * self.form_with_root(nu, rootc)
                    k += 1
            mu_delta = tuple(a + b for a, b in zip(mu, delta))
            c = top - self.form(mu_delta, mu_delta)
            if c == 0:
                raise PreconditionViolated("degenerate Freudenthal denominator")
            val = 2 * rhs / c
            if val.denominator != 1 or val < 0:
                raise PreconditionViolated("non-integer multiplicity; engine bug")
            if val:
                mult[mu] = int(val)
        return mult

    def weyl_dimension(self, lam: Fund) -> int:
        delta = (1,) * self.n
        lam_delta = tuple(a + b for a, b in zip(lam, delta))
        num = Q(1)
        den = Q(1)
        for _, rootc, _ in self.pos:
            num *= self.form_with_root(lam_delta, rootc)
            den *= self.form_with_root(delta, rootc)
        val = num / den
        assert val.denominator == 1
        return int(val)


@lru_cache(maxsize=None)
def _engine_cached(stype: SimpleType) -> _Engine:
    return _Engine(build_root_system(stype))


def _engine(rs: RootSystem) -> _Engine:
    return _engine_cached(rs.stype)


@lru_cache(maxsize=None)
def _table_cached(stype: SimpleType, lam: Fund) -> Dict[Fund, int]:
    return _engine_cached(stype).freudenthal_table(lam)


# --- public operations --------------------------------------------------------

def saturated_weights(rs: RootSystem, lam: WeightVec) -> Set[WeightVec]:
    """Weight support of V(lam): dominant mu <= lam plus their Weyl orbits."""
    if not is_dominant(rs, lam):
        raise PreconditionViolated(f"{lam} is not dominant")
    eng = _engine(rs)
    cap = orbit_cap()
    out: Set[WeightVec] = set()
    for f in eng.dominant_weights_below(fund_of(rs, lam)):
        out |= weyl_orbit(rs, weight_of(rs, f), cap=cap)
        if len(out) > cap:
            raise OrbitBudgetExceeded(f"support of {lam} exceeds cap {cap}")
    return out


def freudenthal_multiplicity(rs: RootSystem, lam: WeightVec, mu: WeightVec) -> int:
    """Exact multiplicity of mu in V(lam) (0 outside the support)."""
    if not is_dominant(rs, lam):
        raise PreconditionViolated(f"{lam} is not dominant")
    lam_f = fund_of(rs, lam)
    try:
        mu_f = fund_of(rs, mu)
    except PreconditionViolated:
        return 0
    diff = lam - mu
    if any(c.denominator != 1 for c in diff.coords):
        return 0
    table = _table_cached(rs.stype, lam_f)
    eng = _engine(rs)
    return table.get(eng.domrep(mu_f), 0)


def dominant_multiplicities(rs: RootSystem, lam: WeightVec) -> Dict[WeightVec, int]:
    table = _table_cached(rs.stype, fund_of(rs, lam))
    return {weight_of(rs, f): m for f, m in table.items()}


def weyl_dimension(rs: RootSystem, lam: WeightVec) -> int:
    if not is_dominant(rs, lam):
        raise PreconditionViolated(f"{lam} is not dominant")
    return _engine(rs).weyl_dimension(fund_of(rs, lam))


def _check_root_lattice_positive(rs: RootSystem, lam: WeightVec) -> None:
    if not is_dominant(rs, lam):
        raise PreconditionViolated(f"{lam} is not dominant")
    if any(c.denominator != 1 or c <= 0 for c in lam.coords):
        raise PreconditionViolated(
            f"{lam} must lie in the root lattice with positive coordinates"
        )


def roots_are_weights(rs: RootSystem, lam: WeightVec) -> Tuple[bool, Optional[WeightVec]]:
    """Whether every root is a weight of V(lam); witness mu2 on failure.

    Fast per-type case split, cross-validated against the dominance test
    mu2 <= lam (the short roots are always weights here).
    """
    _check_root_lattice_positive(rs, lam)
    fam = rs.stype.family
    m = lam.coords
    if fam in ("A", "D", "E"):
        fast = True
    elif fam in ("B", "F", "G"):
        fast = lam != rs.mu1
    else:  # C_n: m_1 >= 2 forces lam >= mu2; m_1 = 1 never reaches mu2
        fast = m[0] >= 2
    slow = dominance_leq(rs, rs.mu2, lam)
    if fast != slow:
        raise AssertionError(
            f"fast path disagrees with dominance test at {lam} ({rs.stype})"
        )
    if not dominance_leq(rs, rs.mu1, lam):
        raise AssertionError(f"short root fails to be a weight at {lam} ({rs.stype})")
    return (True, None) if fast else (False, rs.mu2)


def is_primitive_pair(rs: RootSystem, lam: WeightVec, mu: WeightVec) -> bool:
    diff = lam - mu
    return all(c.denominator == 1 and c > 0 for c in diff.coords)


def bz_primitive_K1(rs: RootSystem, lam: WeightVec, mu: WeightVec) -> bool:
    """Closed-form decision of multiplicity one for a primitive pair.

    Covers the exhaustive list: A_n with lam a multiple of omega_1 (or of
    omega_n via the diagram flip), B_n with even fundamental coordinates of
    mu, and the two G_2 cases.  Everything else has multiplicity >= 2.
    """
    if not is_primitive_pair(rs, lam, mu):
        raise PreconditionViolated("pair is not primitive")
    if not is_dominant(rs, mu):
        raise PreconditionViolated("mu must be dominant")
    fam = rs.stype.family
    n = rs.rank
    lam_f = fund_of(rs, lam)
    mu_f = fund_of(rs, mu)

    if fam == "A":
        def cond(lf: Fund, mf: Fund) -> bool:
            if any(lf[i] for i in range(1, n)):
                return False
            l = lf[0]
            s = sum((i + 1) * mf[i] for i in range(n))
            return l > s and (l - s) % (n + 1) == 0
        return cond(lam_f, mu_f) or cond(lam_f[::-1], mu_f[::-1])
    if fam == "B":
        if any(lam_f[i] for i in range(1, n)):
            return False
        if any(a % 2 for a in mu_f):
            return False
        l = lam_f[0]
        return l - 1 == sum((i + 1) * mu_f[i] for i in range(n - 1)) + n * mu_f[n - 1] // 2
    if fam == "G":
        if lam_f == (1, 0) and mu.is_zero():
            return True
        if lam_f[0] != 0:
            return False
        l = lam_f[1]
        a1, a2 = mu_f
        return 3 * l - 1 == 2 * a1 + 3 * a2
    return False


class LPrimeReason(Enum):
    ROOT_NOT_WEIGHT = "RootNotWeight"
    ROOT_MULT_ONE = "RootMultOne"
    ADMISSIBLE = "Admissible"


@dataclass(frozen=True)
class LPrimeVerdict:
    lam: WeightVec
    in_Lprime: bool
    reason: LPrimeReason
    witness: Optional[WeightVec]

    def __post_init__(self):
        assert (self.reason is LPrimeReason.ADMISSIBLE) == (not self.in_Lprime)


def in_L_prime(rs: RootSystem, lam: WeightVec) -> LPrimeVerdict:
    """Oracle verdict: some root fails to be a weight, or has multiplicity one.

    Checking mu1 and mu2 suffices since every root is Weyl-conjugate to one
    of them and multiplicities are Weyl-invariant.
    """
    ok, witness = roots_are_weights(rs, lam)
    if not ok:
        return LPrimeVerdict(lam, True, LPrimeReason.ROOT_NOT_WEIGHT, witness)
    for mu in ([rs.mu1, rs.mu2] if rs.mu1 != rs.mu2 else [rs.mu2]):
        if freudenthal_multiplicity(rs, lam, mu) == 1:
            return LPrimeVerdict(lam, True, LPrimeReason.ROOT_MULT_ONE, mu)
    return LPrimeVerdict(lam, False, LPrimeReason.ADMISSIBLE, None)


def table1_predicate(rs: RootSystem, lam: WeightVec) -> bool:
    """Parametric encoding of the inadmissible-highest-weight table.

    The A_n geometric-progression row is taken for every k >= 1 and closed
    under the diagram flip; the C_n staircase row ranges over all N with
    2N <= n-1.  The oracle is authoritative; tests fail hard on mismatch.
    """
    n = rs.rank
    fam = rs.stype.family
    m = tuple(int(c) for c in lam.coords)

    if fam == "A":
        if m == (1,) * n:
            return True
        prog = tuple(range(n, 0, -1))
        k = m[0] // prog[0] if prog[0] else 0
        if k >= 1 and (m == tuple(k * p for p in prog) or m == tuple(k * p for p in prog[::-1])):
            return True
        if n == 2 and m in ((1, 2), (2, 1)):
            return True
        if n == 3 and m == (1, 2, 1):
            return True
        return False
    if fam == "B":
        if m == (1,) * n:
            return True
        if m == (1,) + (2,) * (n - 1):
            return True
        if n == 3 and m[:2] == (1, 2) and m[2] >= 3:
            return True
        if m == (2,) * n:
            return True
        if n >= 3 and m == (1, 2) + (3,) * (n - 2):
            return True
        return False
    if fam == "C":
        if m == (1,) + (2,) * (n - 2) + (1,):
            return True
        if m == (2,) * (n - 1) + (1,):
            return True
        if m == tuple(range(1, n)) + (n // 2,):
            return True
        for bigN in range(1, (n - 1) // 2 + 1):
            row = tuple(range(1, 2 * bigN + 1)) + (2 * bigN,) * (n - 1 - 2 * bigN) + (bigN,)
            if m == row:
                return True
        return False
    if fam == "D":
        if m == (1,) + (2,) * (n - 3) + (1, 1):
            return True
        if m == (2,) * (n - 2) + (1, 1):
            return True
        if n == 4 and m in ((1, 2, 2, 1), (1, 2, 1, 2)):
            return True
        return False
    if fam == "E":
        rows = {
            6: (1, 2, 2, 3, 2, 1),
            7: (2, 2, 3, 4, 3, 2, 1),
            8: (2, 3, 4, 6, 5, 4, 3, 2),
        }
        return m == rows[n]
    if fam == "F":
        return m in ((2, 3, 4, 2), (1, 2, 3, 2))
    if fam == "G":
        return m in ((2, 1), (3, 2), (4, 2))
    return False


@dataclass(frozen=True)
class IdealReport:
    stype: SimpleType
    verdicts: Tuple[LPrimeVerdict, ...]
    admissible: bool


def is_admissible(decomp: Sequence[Tuple[SimpleType, Sequence[WeightVec]]]
                  ) -> Tuple[bool, List[IdealReport]]:
    """True iff each simple ideal has a highest weight outside the list.

    One witness per ideal suffices; the weight family is treated as a set.
    """
    reports = []
    for stype, lams in decomp:
        rs = build_root_system(stype)
        verdicts = tuple(in_L_prime(rs, lam) for lam in lams)
        reports.append(IdealReport(
            stype=stype,
            verdicts=verdicts,
            admissible=any(not v.in_Lprime for v in verdicts),
        ))
    return all(r.admissible for r in reports), reports


def enumerate_dominant_zero_weight(rs: RootSystem, bound: int) -> List[WeightVec]:
    """Dominant root-lattice weights with every coordinate in 1..bound."""
    if bound < 1:
        raise PreconditionViolated("bound must be >= 1")
    n = rs.rank
    out = []
    idx = [1] * n
    while True:
        w = WeightVec.of(idx)
        if is_dominant(rs, w):
            out.append(w)
        k = n - 1
        while k >= 0 and idx[k] == bound:
            idx[k] = 1
            k -= 1
        if k < 0:
            break
        idx[k] += 1
    return sorted(out, key=lambda w: (sum(w.coords), w.coords))


def classify_report(rs: RootSystem, bound: int) -> List[dict]:
    """JSON-ready classification rows for the enumeration at `bound`."""
    rows = []
    for lam in enumerate_dominant_zero_weight(rs, bound):
        v = in_L_prime(rs, lam)
        rows.append({
            "type": rs.stype.family,
            "rank": rs.stype.rank,
            "lambda": [int(c) for c in lam.coords],
            "in_Lprime": v.in_Lprime,
            "reason": v.reason.value,
            "witness": [int(c) for c in v.witness.coords] if v.witness else None,
        })
    return rows
