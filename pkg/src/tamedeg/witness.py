"""Construction of explicit tame automorphisms realizing a target multidegree.

Each builder returns a Witness: a chain of certified generators (elementary /
affine factors with exact inverses) whose left-to-right composition has
exactly the requested multidegree.  Builders verify the multidegree by exact
composition before returning; a mismatch is an implementation bug and raises.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, gcd, lcm
from typing import Optional, Sequence

from .maps import Factor, PolyMap, compose_all, elementary, gallery
from .poly import Polynomial


class ConstructionError(ValueError):
    pass


@dataclass(frozen=True)
class WitnessRecipe:
    """A deterministic, JSON-able description of how to build a witness."""
    kind: str
    params: dict

    def to_json(self) -> dict:
        return {"kind": self.kind, **self.params}

    @classmethod
    def from_json(cls, data: dict) -> "WitnessRecipe":
        params = {k: v for k, v in data.items() if k != "kind"}
        return cls(data["kind"], params)


@dataclass
class Witness:
    target: tuple[int, ...]
    recipe: WitnessRecipe
    factors: list[Factor]
    composed: PolyMap
    cancellation_degree: Optional[int] = None

    @property
    def verified_mdeg(self) -> tuple:
        return self.composed.mdeg()

    def to_json(self) -> dict:
        return {
            "target": list(self.target),
            "recipe": self.recipe.to_json(),
            "factors": [f.map.to_json() for f in self.factors],
        }


def _finish(target, recipe, factors, cancellation_degree=None) -> Witness:
    composed = compose_all([f.map for f in factors])
    w = Witness(tuple(target), recipe, list(factors), composed, cancellation_degree)
    if w.verified_mdeg != tuple(target):
        raise ConstructionError(
            f"witness verification failed: built mdeg {w.verified_mdeg}, "
            f"target {tuple(target)} (recipe {recipe})")
    return w


# ---------------------------------------------------------------------------
# sum rule: d_i = sum_{j<i} k_j d_j
# ---------------------------------------------------------------------------

def build_sum_rule(degrees: Sequence[int], i: int, coeffs: Sequence[int]) -> Witness:
    """Witness for a sorted degree tuple where d_i = sum_{j<i} coeffs[j]*d_j.

    Index i is 0-based; coeffs has length i with nonnegative entries.  The
    chain is: for each k != i an elementary map adding x_i^{d_k} to x_k, then
    an elementary map adding prod_{j<i} x_j^{coeffs[j]} to x_i.
    """
    d = tuple(degrees)
    n = len(d)
    if not 0 <= i < n:
        raise ConstructionError("index out of range")
    if len(coeffs) != i or any(c < 0 for c in coeffs):
        raise ConstructionError("need one nonnegative coefficient per earlier degree")
    if any(dk < 1 for dk in d):
        raise ConstructionError("degrees must be positive")
    if sum(c * dj for c, dj in zip(coeffs, d)) != d[i]:
        raise ConstructionError(f"{d[i]} != sum of coeffs * earlier degrees")
    exps = [0] * n
    for j, c in enumerate(coeffs):
        exps[j] = c
    head = elementary(n, i, Polynomial.monomial(n, exps))
    tail = [elementary(n, k, Polynomial.monomial(
        n, tuple(d[k] if t == i else 0 for t in range(n))))
        for k in range(n) if k != i]
    recipe = WitnessRecipe("sum_rule",
                           {"degrees": list(d), "index": i, "coeffs": list(coeffs)})
    return _finish(d, recipe, [head] + tail)


def find_sum_rule(degrees: Sequence[int]) -> Optional[WitnessRecipe]:
    """A sum-rule recipe for a sorted degree tuple, if one exists (n=3)."""
    from .semigroup import SemigroupPair
    d = tuple(degrees)
    if len(d) >= 2 and d[1] % d[0] == 0:
        return WitnessRecipe("sum_rule",
                             {"degrees": list(d), "index": 1,
                              "coeffs": [d[1] // d[0]]})
    if len(d) >= 3:
        dec = SemigroupPair(d[0], d[1]).member(d[2])
        if dec is not None:
            return WitnessRecipe("sum_rule",
                                 {"degrees": list(d), "index": 2,
                                  "coeffs": [dec[0], dec[1]]})
    return None


# ---------------------------------------------------------------------------
# padding: embed an m-dimensional witness into n dimensions
# ---------------------------------------------------------------------------

def _embed_poly(p: Polynomial, n: int, positions: Sequence[int]) -> Polynomial:
    out = {}
    for exps, c in p.terms.items():
        new = [0] * n
        for j, e in enumerate(exps):
            new[positions[j]] = e
        out[tuple(new)] = c
    return Polynomial(n, out)


def _lift_factor(f: Factor, n: int, positions: Sequence[int]) -> Factor:
    def lift_map(pm: PolyMap) -> PolyMap:
        comps = [Polynomial.variable(n, i) for i in range(n)]
        for j, comp in enumerate(pm.components):
            comps[positions[j]] = _embed_poly(comp, n, positions)
        return PolyMap(tuple(comps))
    return Factor(f.kind, lift_map(f.map), lift_map(f.inverse))


def plane_witness(d1: int, d2: int) -> Witness:
    """A 2-dimensional witness with mdeg (d1, d2); requires d1 | d2."""
    if d1 < 1 or d2 < d1 or d2 % d1:
        raise ConstructionError("requires 1 <= d1 <= d2 with d1 | d2")
    recipe = WitnessRecipe("plane", {"d1": d1, "d2": d2})
    if d1 == 1:
        factors = [elementary(2, 1, Polynomial.monomial(2, (d2, 0)))]
    else:
        t1 = elementary(2, 0, Polynomial.monomial(2, (0, d1)))
        t2 = elementary(2, 1, Polynomial.monomial(2, (d2 // d1, 0)))
        factors = [t2, t1]
    return _finish((d1, d2), recipe, factors)


def build_padding(sub: Witness, degrees: Sequence[int],
                  positions: Sequence[int]) -> Witness:
    """Embed an m-dim witness at the given 0-based positions of an n-tuple.

    Every non-embedded coordinate k picks up x_{i1}^{d_k} where i1 is the
    first embedded position, so its degree becomes d_k exactly.
    """
    d = tuple(degrees)
    n = len(d)
    positions = list(positions)
    if len(positions) != len(sub.target) or len(set(positions)) != len(positions):
        raise ConstructionError("positions must be distinct, one per embedded degree")
    if tuple(d[p] for p in positions) != tuple(sub.target):
        raise ConstructionError("embedded degrees disagree with sub-witness target")
    i1 = positions[0]
    pad = []
    for k in range(n):
        if k in positions:
            continue
        if d[k] < 1:
            raise ConstructionError("degrees must be positive")
        exps = [0] * n
        exps[i1] = d[k]
        pad.append(elementary(n, k, Polynomial.monomial(n, tuple(exps))))
    lifted = [_lift_factor(f, n, positions) for f in sub.factors]
    recipe = WitnessRecipe("padding", {"degrees": list(d),
                                       "positions": positions,
                                       "sub": sub.recipe.to_json()})
    return _finish(d, recipe, lifted + pad)


# ---------------------------------------------------------------------------
# the (4,6,*) family
# ---------------------------------------------------------------------------

def build_469_family(k: int, variant: int) -> Witness:
    """Witness with mdeg (4, 6, variant + 4k), variant in {9, 7}, k >= 0.

    F = (x + z^4, y + z^6, z) -- the 7-variant corrects the middle component
    to y + 3/2 x z^2 + z^6 -- followed by G = (u, v, w + (v^2 - u^3) u^k).
    """
    if k < 0 or variant not in (9, 7):
        raise ConstructionError("k >= 0 and variant in {9, 7} required")
    n = 3
    z4 = Polynomial.monomial(n, (0, 0, 4))
    e1 = elementary(n, 0, z4)
    mid = Polynomial.monomial(n, (0, 0, 6))
    if variant == 7:
        mid = mid + Polynomial.monomial(n, (1, 0, 2), Fraction(3, 2))
    e2 = elementary(n, 1, mid)
    u = Polynomial.variable(n, 0)
    v = Polynomial.variable(n, 1)
    g = elementary(n, 2, (v ** 2 - u ** 3) * u ** k)
    f1 = Polynomial.variable(n, 0) + z4
    f2 = Polynomial.variable(n, 1) + mid
    cancel = int((f2 ** 2 - f1 ** 3).total_degree())
    recipe = WitnessRecipe("four_six", {"k": k, "variant": variant})
    return _finish((4, 6, variant + 4 * k), recipe, [g, e1, e2], cancel)


# ---------------------------------------------------------------------------
# the (4, 4k+2, *) family, k >= 3
# ---------------------------------------------------------------------------

def build_4k2(k: int, d3: int) -> Witness:
    """Witness with mdeg (4, 4k+2, d3) for k >= 3 and d3 >= 5k+1.

    Picks minimal r in {k-1, k, k+1, k+2} with d3 = 4k+2+r+4q, q >= 0;
    solves the coefficient system C(2k+1, s) = sum_{l+m=s} a_l a_m (a_0 = 1)
    so that (x+z^4)^{2k+1} - (y + z^r + sum a_l x^l z^{4k+2-4l})^2 collapses
    to degree 4k+2+r exactly.
    """
    if k < 3 or d3 < 5 * k + 1:
        raise ConstructionError("requires k >= 3 and d3 >= 5k+1")
    d2 = 4 * k + 2
    choice = None
    for r in range(k - 1, k + 3):
        rest = d3 - d2 - r
        if rest >= 0 and rest % 4 == 0:
            choice = (r, rest // 4)
            break
    if choice is None:
        raise ConstructionError(f"no (r, q) decomposition of d3={d3} for k={k}")
    r, q = choice
    a = [Fraction(1)]
    for s in range(1, k + 1):
        cross = sum(a[l] * a[s - l] for l in range(1, s))
        a.append((Fraction(comb(2 * k + 1, s)) - cross) / 2)
    n = 3
    mid = Polynomial.monomial(n, (0, 0, r))
    for l, al in enumerate(a):
        mid = mid + Polynomial.monomial(n, (l, 0, d2 - 4 * l), al)
    e1 = elementary(n, 0, Polynomial.monomial(n, (0, 0, 4)))
    e2 = elementary(n, 1, mid)
    u = Polynomial.variable(n, 0)
    v = Polynomial.variable(n, 1)
    g = elementary(n, 2, (u ** (2 * k + 1) - v ** 2) * u ** q)
    f1 = Polynomial.variable(n, 0) + Polynomial.monomial(n, (0, 0, 4))
    f2 = Polynomial.variable(n, 1) + mid
    cancel = int((f1 ** (2 * k + 1) - f2 ** 2).total_degree())
    if cancel != d2 + r:
        raise ConstructionError(
            f"cancellation failed: got degree {cancel}, expected {d2 + r}")
    recipe = WitnessRecipe("four_k2", {"k": k, "d3": d3})
    return _finish((4, d2, d3), recipe, [g, e1, e2], cancel)


# ---------------------------------------------------------------------------
# the lcm-tail construction
# ---------------------------------------------------------------------------

def build_tab_tail(a: int, b: int, d3: int) -> Witness:
    """Witness with mdeg (a, b, d3) for 1 < a < b and d3 in the covered tail
    d3 >= lcm(a,b) - r, r = min(b-1, (a-1)(floor(b/a)+1)).

    With at = a/g, bt = b/g (g = gcd), coefficients a_0..a_{floor(b/a)} are
    chosen so that (x+z^a)^{bt} - (y + z^p + sum a_l x^l z^{b-l a})^{at} drops
    to degree p + b(at-1); the last factor adds (u^{bt} - v^{at}) u^q.
    """
    if not 1 < a < b:
        raise ConstructionError("requires 1 < a < b")
    g = gcd(a, b)
    at, bt = a // g, b // g
    big_l = b // a
    r = min(b - 1, (a - 1) * (big_l + 1))
    low = lcm(a, b) - r
    if d3 < low:
        raise ConstructionError(f"d3={d3} below covered tail (starts at {low})")
    base = b * (at - 1)
    m = next((m for m in range(low, low + a) if (d3 - m) % a == 0), None)
    q = (d3 - m) // a
    p = m - base
    if not 1 <= p <= b - 1 or q < 0:
        raise ConstructionError(f"no valid (p, q) for (a, b, d3)=({a}, {b}, {d3})")
    # univariate forward substitution: [X^s](P^at) = C(bt, s) for s <= floor(b/a)
    coeffs = [Fraction(1)]
    for s in range(1, big_l + 1):
        partial = Polynomial(1, {(l,): c for l, c in enumerate(coeffs)})
        got = (partial ** at).coefficient((s,))
        coeffs.append((comb(bt, s) - got) / at)
    n = 3
    mid = Polynomial.monomial(n, (0, 0, p))
    for l, al in enumerate(coeffs):
        mid = mid + Polynomial.monomial(n, (l, 0, b - l * a), al)
    e1 = elementary(n, 0, Polynomial.monomial(n, (0, 0, a)))
    e2 = elementary(n, 1, mid)
    u = Polynomial.variable(n, 0)
    v = Polynomial.variable(n, 1)
    gf = elementary(n, 2, (u ** bt - v ** at) * u ** q)
    f1 = Polynomial.variable(n, 0) + Polynomial.monomial(n, (0, 0, a))
    f2 = Polynomial.variable(n, 1) + mid
    cancel = int((f1 ** bt - f2 ** at).total_degree())
    if cancel != p + base:
        raise ConstructionError(
            f"cancellation failed: got degree {cancel}, expected {p + base}")
    recipe = WitnessRecipe("tab_tail", {"a": a, "b": b, "d3": d3})
    return _finish((a, b, d3), recipe, [gf, e1, e2], cancel)


def tab_tail_start(a: int, b: int) -> int:
    """First d3 covered by build_tab_tail for the pair (a, b)."""
    r = min(b - 1, (a - 1) * (b // a + 1))
    return lcm(a, b) - r


# ---------------------------------------------------------------------------
# dispatcher
# ---------------------------------------------------------------------------

def build(recipe: WitnessRecipe) -> Witness:
    p = recipe.params
    if recipe.kind == "sum_rule":
        return build_sum_rule(p["degrees"], p["index"], p["coeffs"])
    if recipe.kind == "padding":
        return build_padding(build(WitnessRecipe.from_json(p["sub"])),
                             p["degrees"], p["positions"])
    if recipe.kind == "plane":
        return plane_witness(p["d1"], p["d2"])
    if recipe.kind == "four_six":
        return build_469_family(p["k"], p["variant"])
    if recipe.kind == "four_k2":
        return build_4k2(p["k"], p["d3"])
    if recipe.kind == "tab_tail":
        return build_tab_tail(p["a"], p["b"], p["d3"])
    if recipe.kind == "gallery":
        m = gallery(p["name"])
        w = Witness(m.mdeg(), recipe, [], m)
        return w
    raise ConstructionError(f"unknown recipe kind {recipe.kind!r}")


# ---------------------------------------------------------------------------
# persistence
# ---------------------------------------------------------------------------

def verify_witness_json(data: dict) -> bool:
    """Recompose the persisted factor chain and re-measure its multidegree."""
    target = tuple(data["target"])
    factors = [PolyMap.from_json(f) for f in data["factors"]]
    if not factors:
        return False
    return compose_all(factors).mdeg() == target


def load_witness_file(path: str) -> dict:
    with open(path) as fh:
        return json.load(fh)
