"""Polynomial endomorphisms of affine n-space.

PolyMap is an ordered tuple of n polynomials in n variables.  Constructors
for the standard generator types (elementary, triangular, de Jonquieres,
affine) return a Factor carrying the map together with its exact inverse,
which doubles as a tameness certificate for witness chains.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from . import linalg
from .poly import DimensionMismatch, Polynomial, default_varnames, format_poly, parse_poly
from .linalg import SingularMatrixError


@dataclass(frozen=True)
class PolyMap:
    components: tuple[Polynomial, ...]

    def __post_init__(self):
        comps = tuple(self.components)
        object.__setattr__(self, "components", comps)
        n = len(comps)
        for c in comps:
            if c.n != n:
                raise DimensionMismatch(
                    f"component has {c.n} variables, expected {n}")

    @property
    def n(self) -> int:
        return len(self.components)

    def compose(self, other: "PolyMap") -> "PolyMap":
        """self after other: (self . other)(x) = self(other(x))."""
        if self.n != other.n:
            raise DimensionMismatch("dimension mismatch in composition")
        return PolyMap(tuple(c.substitute(other.components) for c in self.components))

    def mdeg(self) -> tuple:
        return tuple(c.total_degree() for c in self.components)

    def deg(self):
        return max(self.mdeg())

    def linear_part(self) -> "PolyMap":
        return PolyMap(tuple(c.homogeneous_part(1) for c in self.components))

    def jacobian_determinant(self) -> Polynomial:
        n = self.n
        partials = [[c.partial_derivative(j) for j in range(n)]
                    for c in self.components]
        # permutation expansion; n <= 3 in practice
        import itertools
        det = Polynomial.zero(n)
        for perm in itertools.permutations(range(n)):
            sign = 1
            p = list(perm)
            for i in range(n):
                while p[i] != i:
                    j = p[i]
                    p[i], p[j] = p[j], p[i]
                    sign = -sign
            term = Polynomial.constant(n, sign)
            for i, j in enumerate(perm):
                term = term * partials[i][j]
            det = det + term
        return det

    def to_json(self, varnames: Sequence[str] | None = None) -> dict:
        if varnames is None:
            varnames = default_varnames(self.n)
        return {
            "n": self.n,
            "vars": list(varnames),
            "components": [format_poly(c, varnames) for c in self.components],
        }

    @classmethod
    def from_json(cls, data: dict) -> "PolyMap":
        n = data["n"]
        varnames = data.get("vars") or default_varnames(n)
        comps = [parse_poly(s, varnames) for s in data["components"]]
        if len(comps) != n:
            raise ValueError("component count differs from declared n")
        return cls(tuple(comps))

    def __str__(self):
        names = default_varnames(self.n)
        return "(" + ", ".join(format_poly(c, names) for c in self.components) + ")"


def identity(n: int) -> PolyMap:
    return PolyMap(tuple(Polynomial.variable(n, i) for i in range(n)))


def compose_all(maps: Sequence[PolyMap]) -> PolyMap:
    """Left-to-right composition: maps[0] . maps[1] . ... . maps[-1]."""
    if not maps:
        raise ValueError("need at least one map")
    result = maps[-1]
    for m in reversed(maps[:-1]):
        result = m.compose(result)
    return result


# ---------------------------------------------------------------------------
# certified generators
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class Factor:
    """A generator with a precomputed exact inverse."""
    kind: str
    map: PolyMap
    inverse: PolyMap


def elementary(n: int, i: int, f: Polynomial) -> Factor:
    """x_i -> x_i + f(other variables), 0-based i; f must not involve x_i."""
    if f.n != n:
        raise DimensionMismatch("f has wrong variable count")
    if not 0 <= i < n:
        raise IndexError("coordinate index out of range")
    if f.involves(i):
        raise ValueError(f"f may not involve variable {i}")
    comps = list(identity(n).components)
    inv = list(comps)
    comps[i] = comps[i] + f
    inv[i] = inv[i] - f
    return Factor("elementary", PolyMap(tuple(comps)), PolyMap(tuple(inv)))


def triangular(fs: Sequence[Polynomial], perm: Sequence[int] | None = None) -> Factor:
    """Triangular map: in the order given by perm, the first variable is fixed
    and each later one is shifted by a polynomial in the strictly earlier ones.

    fs has length n-1; fs[k] may only involve the first k+1 variables of the
    order.  perm defaults to the natural order 0..n-1.
    """
    n = len(fs) + 1
    order = list(range(n)) if perm is None else list(perm)
    if sorted(order) != list(range(n)):
        raise ValueError("perm must be a permutation of 0..n-1")
    comps = list(identity(n).components)
    for k, f in enumerate(fs, start=1):
        if f.n != n:
            raise DimensionMismatch("f has wrong variable count")
        allowed = set(order[:k])
        if not f.variables() <= allowed:
            raise ValueError(f"fs[{k-1}] involves forbidden variables")
        comps[order[k]] = comps[order[k]] + f
    fwd = PolyMap(tuple(comps))
    # back-substitution for the inverse
    inv = list(identity(n).components)
    for k, f in enumerate(fs, start=1):
        inv[order[k]] = Polynomial.variable(n, order[k]) - f.substitute(inv)
    return Factor("triangular", fwd, PolyMap(tuple(inv)))


def de_jonquieres(scalars: Sequence, fs: Sequence[Polynomial]) -> Factor:
    """x_i -> a_i x_i + f_i(x_{i+1},...,x_n), with f_n constant, a_i != 0."""
    n = len(scalars)
    if len(fs) != n:
        raise ValueError("need one f per coordinate")
    a = [Fraction(s) for s in scalars]
    if any(not s for s in a):
        raise ValueError("scalars must be nonzero")
    comps = []
    for i, f in enumerate(fs):
        if f.n != n:
            raise DimensionMismatch("f has wrong variable count")
        if not f.variables() <= set(range(i + 1, n)):
            raise ValueError(f"fs[{i}] involves forbidden variables")
        comps.append(Polynomial.variable(n, i).scale(a[i]) + f)
    fwd = PolyMap(tuple(comps))
    inv = list(identity(n).components)
    for i in range(n - 1, -1, -1):
        inv[i] = (Polynomial.variable(n, i) - fs[i].substitute(inv)).scale(1 / a[i])
    return Factor("de_jonquieres", fwd, PolyMap(tuple(inv)))


def affine(matrix: Sequence[Sequence], vector: Sequence | None = None) -> Factor:
    """x -> M x + v with invertible M; raises SingularMatrixError otherwise."""
    n = len(matrix)
    m_inv = linalg.invert_matrix(matrix)
    v = [Fraction(0)] * n if vector is None else [Fraction(x) for x in vector]
    if len(v) != n:
        raise ValueError("vector length differs from matrix size")
    xs = [Polynomial.variable(n, j) for j in range(n)]

    def rows_to_map(rows, shift):
        comps = []
        for i in range(n):
            c = Polynomial.constant(n, shift[i])
            for j in range(n):
                if rows[i][j]:
                    c = c + xs[j].scale(Fraction(rows[i][j]))
            comps.append(c)
        return PolyMap(tuple(comps))

    fwd = rows_to_map(matrix, v)
    inv_shift = [-x for x in linalg.mat_vec(m_inv, v)]
    inv = rows_to_map(m_inv, inv_shift)
    return Factor("affine", fwd, inv)


def linear_map(matrix: Sequence[Sequence]) -> Factor:
    return affine(matrix)


def permutation(n: int, perm: Sequence[int]) -> Factor:
    """Map sending x_{perm[i]} to position i: components (x_perm[0], ...)."""
    if sorted(perm) != list(range(n)):
        raise ValueError("not a permutation")
    rows = [[int(perm[i] == j) for j in range(n)] for i in range(n)]
    f = affine(rows)
    return Factor("permutation", f.map, f.inverse)


def swap(n: int, i: int, j: int) -> Factor:
    perm = list(range(n))
    perm[i], perm[j] = perm[j], perm[i]
    return permutation(n, perm)


# ---------------------------------------------------------------------------
# gallery
# ---------------------------------------------------------------------------

# Each entry is a canonical text form, so loading the gallery exercises the
# parser and the algebra at the same time.
_GALLERY_TEXT: dict[str, list[str]] = {
    "nagata": [
        "-x^2*z^3 - 2*x*y^2*z^2 - y^4*z + 2*x*y*z + 2*y^3 + x",
        "-x*z^2 - y^2*z + y",
        "z",
    ],
    "swap13": ["z", "y", "x"],
    "su_t1": ["x", "x^2 + y", "x^3 + 2*x*y + z"],
    "su_t2": ["z^3 + 6*y*z + 6*x", "z^2 + 4*y", "z"],
    "su_t3": ["x", "y", "-y^3 + x^2 + z"],
    "su_l": ["x + z", "y", "z"],
}

_GALLERY_COMPOSITES = {
    # left-to-right composition order
    "su_example": ["su_l", "su_t3", "su_t2", "su_t1"],
}


def gallery_names() -> list[str]:
    return sorted(_GALLERY_TEXT) + sorted(_GALLERY_COMPOSITES)


def gallery(name: str) -> PolyMap:
    if name in _GALLERY_TEXT:
        comps = tuple(parse_poly(s, ("x", "y", "z")) for s in _GALLERY_TEXT[name])
        return PolyMap(comps)
    if name in _GALLERY_COMPOSITES:
        return compose_all([gallery(part) for part in _GALLERY_COMPOSITES[name]])
    raise KeyError(f"unknown gallery map {name!r}")


def nagata_power(m: int) -> PolyMap:
    """(T . N)^m for the Nagata map N and the swap T=(z,y,x), m >= 1.

    Asserts the exact invariant g^2 + h*f = y^2 + z*x after every step.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    n = 3
    x, y, z = (Polynomial.variable(n, i) for i in range(n))
    key = y * y + z * x
    f, g, h = x, y, z
    for _ in range(m):
        # substituting (f,g,h) into T.N = (z, y - z(y^2+zx), x + 2y(y^2+zx) - z(y^2+zx)^2)
        k = g * g + h * f
        f, g, h = h, g - h * k, f + 2 * g * k - h * (k * k)
        if g * g + h * f != key:
            raise AssertionError("nagata power invariant violated")
    return PolyMap((f, g, h))
