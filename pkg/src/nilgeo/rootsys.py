"""Root systems of the simple types with exact rational weight arithmetic.

Weights live in the simple-root basis; fundamental-weight coordinates are
derived through the exact inverse Cartan matrix.  Positive roots are grown
from the simple roots by root-string closure, and the highest short/long
roots are read off from the dominant roots.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Set, Tuple

from .errors import InvalidRank, NotARoot, OrbitBudgetExceeded
from . import linalg

Q = Fraction

_RANK_BOUNDS = {
    "A": (1, None),
    "B": (2, None),
    "C": (3, None),
    "D": (4, None),
    "E": (6, 8),
    "F": (4, 4),
    "G": (2, 2),
}

DEFAULT_ORBIT_CAP = 10 ** 6


def orbit_cap() -> int:
    return int(os.environ.get("NILGEO_ORBIT_CAP", DEFAULT_ORBIT_CAP))


@dataclass(frozen=True)
class SimpleType:
    family: str
    rank: int

    def __post_init__(self):
        lo, hi = _RANK_BOUNDS.get(self.family, (None, None))
        if lo is None:
            raise InvalidRank(f"unknown family {self.family!r}")
        if self.rank < lo or (hi is not None and self.rank > hi):
            raise InvalidRank(f"{self.family}_{self.rank} is out of range")

    def __str__(self):
        return f"{self.family}{self.rank}"

    @staticmethod
    def parse(text: str) -> "SimpleType":
        text = text.strip()
        fam = text[0].upper()
        try:
            rk = int(text[1:])
        except ValueError as e:
            raise InvalidRank(f"cannot parse type {text!r}") from e
        return SimpleType(fam, rk)


@dataclass(frozen=True)
class WeightVec:
    """Exact weight in simple-root coordinates."""

    coords: Tuple[Fraction, ...]

    @staticmethod
    def of(xs: Iterable) -> "WeightVec":
        return WeightVec(tuple(linalg.frac(x) for x in xs))

    def __add__(self, other: "WeightVec") -> "WeightVec":
        return WeightVec(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "WeightVec") -> "WeightVec":
        return WeightVec(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def scale(self, c) -> "WeightVec":
        c = linalg.frac(c)
        return WeightVec(tuple(c * a for a in self.coords))

    def __neg__(self) -> "WeightVec":
        return WeightVec(tuple(-a for a in self.coords))

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.coords)

    def height(self) -> Fraction:
        return sum(self.coords, Q(0))


def _grlex_key(coords: Sequence[Fraction]):
    return (sum(coords, Q(0)), tuple(coords))


def cartan_matrix(stype: SimpleType) -> List[List[int]]:
    """Integer Cartan matrix C[i][j] = <alpha_i, alpha_j> (Humphreys tables)."""
    n = stype.rank
    f = stype.family
    c = [[2 if i == j else 0 for j in range(n)] for i in range(n)]

    def link(i, j, cij=-1, cji=-1):
        c[i][j] = cij
        c[j][i] = cji

    if f in ("A", "B", "C"):
        for i in range(n - 1):
            link(i, i + 1)
        if f == "B" and n >= 2:
            link(n - 2, n - 1, -2, -1)
        if f == "C" and n >= 2:
            link(n - 2, n - 1, -1, -2)
    elif f == "D":
        for i in range(n - 3):
            link(i, i + 1)
        link(n - 3, n - 2)
        link(n - 3, n - 1)
    elif f == "E":
        # Bourbaki numbering: chain 1-3-4-5-..., node 2 hangs off node 4.
        chain = [0, 2, 3, 4, 5, 6, 7][: n - 1]
        for a, b in zip(chain, chain[1:]):
            link(a, b)
        link(1, 3)
    elif f == "F":
        link(0, 1)
        link(1, 2, -2, -1)
        link(2, 3)
    elif f == "G":
        link(0, 1, -1, -3)
    return c


def symmetrizers(stype: SimpleType) -> List[int]:
    """Positive integers d_i with d_j C_ij = d_i C_ji; (alpha_i, alpha_i) = 2 d_i."""
    n = stype.rank
    f = stype.family
    if f in ("A", "D", "E"):
        return [1] * n
    if f == "B":
        return [2] * (n - 1) + [1]
    if f == "C":
        return [1] * (n - 1) + [2]
    if f == "F":
        return [2, 2, 1, 1]
    if f == "G":
        return [1, 3]
    raise InvalidRank(f.family)


@dataclass(frozen=True)
class RootSystem:
    stype: SimpleType
    cartan: Tuple[Tuple[int, ...], ...]
    inv_cartan: Tuple[Tuple[Fraction, ...], ...]
    d: Tuple[int, ...]
    positive_roots: Tuple[WeightVec, ...]
    mu1: WeightVec
    mu2: WeightVec
    root_set: FrozenSet[Tuple[Fraction, ...]]

    @property
    def rank(self) -> int:
        return self.stype.rank

    @property
    def num_roots(self) -> int:
        return 2 * len(self.positive_roots)

    def simple_root(self, i: int) -> WeightVec:
        coords = [Q(0)] * self.rank
        coords[i] = Q(1)
        return WeightVec(tuple(coords))

    def simple_roots(self) -> List[WeightVec]:
        return [self.simple_root(i) for i in range(self.rank)]

    def is_root(self, lam: WeightVec) -> bool:
        return lam.coords in self.root_set

    def bilinear(self, lam: WeightVec, mu: WeightVec) -> Fraction:
        """W-invariant form with (alpha_i, alpha_i) = 2 d_i."""
        total = Q(0)
        for i, a in enumerate(lam.coords):
            if a == 0:
                continue
            for j, b in enumerate(mu.coords):
                if b == 0:
                    continue
                total += a * b * self.d[j] * self.cartan[i][j]
        return total

    def to_fundamental(self, lam: WeightVec) -> Tuple[Fraction, ...]:
        """Coordinates r with lam = sum r_i omega_i; r_j = <lam, alpha_j>."""
        n = self.rank
        return tuple(
            sum((lam.coords[i] * self.cartan[i][j] for i in range(n)), Q(0))
            for j in range(n)
        )

    def from_fundamental(self, r: Sequence) -> WeightVec:
        n = self.rank
        rr = [linalg.frac(x) for x in r]
        return WeightVec(tuple(
            sum((rr[j] * self.inv_cartan[j][i] for j in range(n)), Q(0))
            for i in range(n)
        ))


def build_root_system(stype: SimpleType) -> RootSystem:
    """Grow the positive roots by root-string closure from the simple roots."""
    n = stype.rank
    cart = cartan_matrix(stype)
    d = symmetrizers(stype)

    def pair_simple(coords: Tuple[int, ...], i: int) -> int:
        return sum(coords[k] * cart[k][i] for k in range(n))

    simple = [tuple(1 if k == i else 0 for k in range(n)) for i in range(n)]
    known: Set[Tuple[int, ...]] = set(simple)
    frontier = list(simple)
    positives: List[Tuple[int, ...]] = list(simple)
    while frontier:
        nxt: List[Tuple[int, ...]] = []
        for beta in frontier:
            for i in range(n):
                # alpha_i-string through beta: beta - p a_i .. beta + q a_i,
                # q = p - <beta, alpha_i>
                p = 0
                back = beta
                while True:
                    back = tuple(b - s for b, s in zip(back, simple[i]))
                    if back in known or back == (0,) * n:
                        if back == (0,) * n:
                            break
                        p += 1
                    else:
                        break
                q = p - pair_simple(beta, i)
                if q > 0:
                    cand = tuple(b + s for b, s in zip(beta, simple[i]))
                    if cand not in known:
                        known.add(cand)
                        positives.append(cand)
                        nxt.append(cand)
        frontier = nxt

    pos_sorted = sorted(positives, key=lambda c: (sum(c), c))
    pos_weights = tuple(WeightVec(tuple(Q(x) for x in c)) for c in pos_sorted)
    root_set = frozenset(w.coords for w in pos_weights) | frozenset(
        (-w).coords for w in pos_weights
    )

    inv = linalg.inv([[Q(x) for x in row] for row in cart])
    rs = RootSystem(
        stype=stype,
        cartan=tuple(tuple(row) for row in cart),
        inv_cartan=tuple(tuple(row) for row in inv),
        d=tuple(d),
        positive_roots=pos_weights,
        mu1=pos_weights[0],  # placeholder, fixed below
        mu2=pos_weights[0],
        root_set=root_set,
    )
    dominant = [w for w in pos_weights if is_dominant(rs, w)]
    if len(dominant) == 1:
        mu1 = mu2 = dominant[0]
    else:
        lengths = {w: rs.bilinear(w, w) for w in dominant}
        mu1 = min(dominant, key=lambda w: lengths[w])
        mu2 = max(dominant, key=lambda w: lengths[w])
    object.__setattr__(rs, "mu1", mu1)
    object.__setattr__(rs, "mu2", mu2)
    return rs


def pairing(rs: RootSystem, lam: WeightVec, alpha: WeightVec) -> Fraction:
    """<lam, alpha> = 2 (lam, alpha) / (alpha, alpha); alpha must be a root."""
    if not rs.is_root(alpha):
        raise NotARoot(f"{alpha} is not a root of {rs.stype}")
    return 2 * rs.bilinear(lam, alpha) / rs.bilinear(alpha, alpha)


def reflect(rs: RootSystem, lam: WeightVec, alpha: WeightVec) -> WeightVec:
    return lam - alpha.scale(pairing(rs, lam, alpha))


def weyl_orbit(rs: RootSystem, lam: WeightVec, cap: Optional[int] = None) -> Set[WeightVec]:
    """Closure of {lam} under the simple reflections."""
    if cap is None:
        cap = orbit_cap()
    seen = {lam}
    frontier = [lam]
    while frontier:
        nxt = []
        for w in frontier:
            fund = rs.to_fundamental(w)
            for i in range(rs.rank):
                if fund[i] == 0:
                    continue
                img = w - rs.simple_root(i).scale(fund[i])
                if img not in seen:
                    seen.add(img)
                    nxt.append(img)
        if len(seen) > cap:
            raise OrbitBudgetExceeded(f"orbit of {lam} exceeds cap {cap}")
        frontier = nxt
    return seen


def dominance_leq(rs: RootSystem, mu: WeightVec, lam: WeightVec) -> bool:
    """mu <= lam iff lam - mu is a nonnegative-integer sum of simple roots."""
    diff = lam - mu
    return all(c.denominator == 1 and c >= 0 for c in diff.coords)


def is_dominant(rs: RootSystem, lam: WeightVec) -> bool:
    return all(r >= 0 for r in rs.to_fundamental(lam))


def dominant_representative(rs: RootSystem, lam: WeightVec) -> WeightVec:
    """The unique dominant Weyl conjugate of lam."""
    w = lam
    while True:
        fund = rs.to_fundamental(w)
        i = next((k for k, r in enumerate(fund) if r < 0), None)
        if i is None:
            return w
        w = w - rs.simple_root(i).scale(fund[i])


def highest_roots(rs: RootSystem) -> Tuple[WeightVec, WeightVec]:
    return rs.mu1, rs.mu2


def short_roots(rs: RootSystem) -> Set[WeightVec]:
    orb = weyl_orbit(rs, rs.mu1)
    return orb


def long_roots(rs: RootSystem) -> Set[WeightVec]:
    return weyl_orbit(rs, rs.mu2)


# --- serialization ----------------------------------------------------------

def _frac_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def root_system_to_json(rs: RootSystem) -> str:
    roots = sorted(rs.positive_roots, key=lambda w: _grlex_key(w.coords))
    payload = {
        "family": rs.stype.family,
        "rank": rs.stype.rank,
        "cartan": [list(row) for row in rs.cartan],
        "inv_cartan": [[_frac_str(x) for x in row] for row in rs.inv_cartan],
        "num_positive_roots": len(rs.positive_roots),
        "positive_roots": [[int(c) for c in w.coords] for w in roots],
        "mu1": [int(c) for c in rs.mu1.coords],
        "mu2": [int(c) for c in rs.mu2.coords],
    }
    return json.dumps(payload, sort_keys=False)
