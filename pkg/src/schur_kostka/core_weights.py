"""Algebra metadata, weight/partition conversions and Weyl group actions.

Weights are stored by their Dynkin labels (components in the basis of
fundamental weights) as exact :class:`fractions.Fraction` values.  For the
A-type algebras a weight ``{l_1, ..., l_{n-1}}`` is paired with a length-n
vector of "Young components"; for B2 the orthogonal coordinates are
``x = a*w1 + b*w2`` with ``w1 = e1`` and ``w2 = (e1 + e2)/2``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

Rational = Fraction


def to_fraction(x) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction (no floats)."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, float):
        raise TypeError(f"refusing to convert float {x!r} to an exact rational")
    # numpy integers and friends
    if hasattr(x, "__index__"):
        return Fraction(int(x))
    raise TypeError(f"cannot convert {x!r} to Fraction")


def fractions(xs: Iterable) -> tuple[Fraction, ...]:
    return tuple(to_fraction(x) for x in xs)


def format_rational(x: Fraction) -> str:
    x = to_fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class AlgebraId:
    tag: str
    rank: int
    weyl_order: int
    positive_root_count: int

    @property
    def is_a_type(self) -> bool:
        return self.tag.startswith("A")

    @property
    def n(self) -> int:
        """Matrix size for A-type (rank + 1)."""
        if not self.is_a_type:
            raise ValueError(f"{self.tag} is not of type A")
        return self.rank + 1

    def __str__(self) -> str:
        return self.tag


A1 = AlgebraId("A1", 1, 2, 1)
A2 = AlgebraId("A2", 2, 6, 3)
A3 = AlgebraId("A3", 3, 24, 6)
B2 = AlgebraId("B2", 2, 8, 4)

ALGEBRAS = {a.tag: a for a in (A1, A2, A3, B2)}


def algebra(tag) -> AlgebraId:
    if isinstance(tag, AlgebraId):
        return tag
    key = str(tag).strip().upper()
    aliases = {"SU2": "A1", "SU3": "A2", "SU4": "A3", "SO5": "B2", "SP4": "B2"}
    key = aliases.get(key.replace("(", "").replace(")", ""), key)
    try:
        return ALGEBRAS[key]
    except KeyError:
        raise ValueError(f"unsupported algebra {tag!r}; expected one of {sorted(ALGEBRAS)}") from None


def cartan_matrix(alg: AlgebraId) -> tuple[tuple[int, ...], ...]:
    """Rows are the simple roots written in Dynkin labels."""
    if alg.is_a_type:
        r = alg.rank
        return tuple(
            tuple(2 if i == j else (-1 if abs(i - j) == 1 else 0) for j in range(r))
            for i in range(r)
        )
    if alg.tag == "B2":
        # alpha_1 long = e1 - e2, alpha_2 short = e2
        return ((2, -2), (-1, 2))
    raise ValueError(f"no Cartan matrix for {alg}")


@lru_cache(maxsize=None)
def _kac_matrix(alg: AlgebraId) -> tuple[tuple[Fraction, ...], ...]:
    # Dynkin d = C^T k, so k = (C^T)^{-1} d
    c = cartan_matrix(alg)
    r = alg.rank
    ct = [[Fraction(c[j][i]) for j in range(r)] for i in range(r)]
    return tuple(tuple(row) for row in _invert(ct))


def _invert(m: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(m)
    a = [row[:] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


@dataclass(frozen=True)
class Weight:
    algebra: AlgebraId
    dynkin: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "algebra", algebra(self.algebra))
        object.__setattr__(self, "dynkin", fractions(self.dynkin))
        if len(self.dynkin) != self.algebra.rank:
            raise ValueError(
                f"{self.algebra} weights have {self.algebra.rank} Dynkin labels, got {len(self.dynkin)}"
            )

    def __add__(self, other: "Weight") -> "Weight":
        _same_algebra(self, other)
        return Weight(self.algebra, tuple(a + b for a, b in zip(self.dynkin, other.dynkin)))

    def __sub__(self, other: "Weight") -> "Weight":
        _same_algebra(self, other)
        return Weight(self.algebra, tuple(a - b for a, b in zip(self.dynkin, other.dynkin)))

    def __neg__(self) -> "Weight":
        return Weight(self.algebra, tuple(-a for a in self.dynkin))

    def scale(self, t) -> "Weight":
        t = to_fraction(t)
        return Weight(self.algebra, tuple(t * a for a in self.dynkin))

    @property
    def is_integral(self) -> bool:
        return all(a.denominator == 1 for a in self.dynkin)

    @property
    def is_dominant(self) -> bool:
        return all(a >= 0 for a in self.dynkin)

    def kac(self) -> tuple[Fraction, ...]:
        """Components in the basis of simple roots."""
        m = _kac_matrix(self.algebra)
        return tuple(sum((row[j] * self.dynkin[j] for j in range(len(row))), Fraction(0)) for row in m)

    def orthogonal(self) -> tuple[Fraction, ...]:
        """B2 only: coordinates in the orthonormal basis e1, e2."""
        if self.algebra.tag != "B2":
            raise ValueError("orthogonal coordinates are defined here for B2 only")
        a, b = self.dynkin
        return (a + b / 2, b / 2)

    def to_json(self) -> dict:
        return {"algebra": self.algebra.tag, "dynkin": [format_rational(x) for x in self.dynkin]}

    def __str__(self) -> str:
        return "{" + ",".join(format_rational(x) for x in self.dynkin) + "}"


def _same_algebra(a: Weight, b: Weight) -> None:
    if a.algebra != b.algebra:
        raise ValueError(f"algebra mismatch: {a.algebra} vs {b.algebra}")


def weight(alg, dynkin: Sequence) -> Weight:
    return Weight(algebra(alg), fractions(dynkin))


def zero(alg) -> Weight:
    alg = algebra(alg)
    return Weight(alg, (Fraction(0),) * alg.rank)


def rho(alg) -> Weight:
    alg = algebra(alg)
    return Weight(alg, (Fraction(1),) * alg.rank)


def from_orthogonal(x: Sequence) -> Weight:
    """B2 weight from orthogonal coordinates (x1, x2)."""
    x1, x2 = fractions(x)
    return Weight(B2, (x1 - x2, 2 * x2))


def simple_roots(alg) -> tuple[Weight, ...]:
    alg = algebra(alg)
    return tuple(Weight(alg, row) for row in cartan_matrix(alg))


def positive_roots(alg) -> tuple[Weight, ...]:
    """Positive roots, listed by their Kac labels in a fixed order."""
    alg = algebra(alg)
    return tuple(from_kac(alg, k) for k in positive_roots_kac(alg))


@lru_cache(maxsize=None)
def positive_roots_kac(alg: AlgebraId) -> tuple[tuple[int, ...], ...]:
    alg = algebra(alg)
    if alg.is_a_type:
        r = alg.rank
        return tuple(
            tuple(1 if i <= t < j else 0 for t in range(r))
            for i in range(r)
            for j in range(i + 1, r + 1)
        )
    if alg.tag == "B2":
        return ((1, 0), (0, 1), (1, 1), (1, 2))
    raise ValueError(f"unsupported algebra {alg}")


def from_kac(alg, k: Sequence) -> Weight:
    alg = algebra(alg)
    c = cartan_matrix(alg)
    k = fractions(k)
    r = alg.rank
    return Weight(alg, tuple(sum((k[i] * c[i][j] for i in range(r)), Fraction(0)) for j in range(r)))


# ---------------------------------------------------------------------------
# Partitions (Young components)


@dataclass(frozen=True)
class PartitionVec:
    algebra: AlgebraId
    parts: tuple[Fraction, ...]

    def __post_init__(self):
        alg = algebra(self.algebra)
        if not alg.is_a_type:
            raise ValueError("partitions are only defined for A-type algebras")
        object.__setattr__(self, "algebra", alg)
        object.__setattr__(self, "parts", fractions(self.parts))
        if len(self.parts) != alg.n:
            raise ValueError(f"{alg} partitions have {alg.n} parts, got {len(self.parts)}")

    def __iter__(self):
        return iter(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    @property
    def total(self) -> Fraction:
        return sum(self.parts, Fraction(0))

    def is_integral(self) -> bool:
        return all(p.denominator == 1 for p in self.parts)

    def to_weight(self) -> Weight:
        """Dynkin labels are differences of consecutive parts."""
        p = self.parts
        return Weight(self.algebra, tuple(p[i] - p[i + 1] for i in range(len(p) - 1)))

    def __str__(self) -> str:
        return "(" + ",".join(format_rational(x) for x in self.parts) + ")"


def partition(parts: Sequence, alg=None) -> PartitionVec:
    parts = fractions(parts)
    if alg is None:
        alg = {2: A1, 3: A2, 4: A3}.get(len(parts))
        if alg is None:
            raise ValueError(f"no A-type algebra with {len(parts)} Young components")
    return PartitionVec(algebra(alg), parts)


def weight_to_partition(lam: Weight) -> PartitionVec:
    """Young components of a highest weight: ``a_i = sum_{j>=i} l_j``, ``a_n = 0``."""
    if not lam.algebra.is_a_type:
        raise ValueError(f"weight_to_partition needs an A-type weight, got {lam.algebra}")
    d = lam.dynkin
    parts = [sum(d[i:], Fraction(0)) for i in range(len(d))] + [Fraction(0)]
    return PartitionVec(lam.algebra, tuple(parts))


def xi_shift(lam: Weight, delta: Weight) -> Fraction:
    """The constant ``c`` making the Young components of delta sum like those of lam."""
    _same_algebra(lam, delta)
    n = lam.algebra.n
    return sum(((i + 1) * (a - b) for i, (a, b) in enumerate(zip(lam.dynkin, delta.dynkin))), Fraction(0)) / n


def weight_pair_to_xi(lam: Weight, delta: Weight, integral: bool = False) -> PartitionVec:
    """Young components xi of a weight delta relative to the highest weight lam.

    With ``integral=True`` a ValueError is raised when the shift ``c`` is not an
    integer, i.e. when ``lam - delta`` is outside the root lattice.
    """
    if not lam.algebra.is_a_type:
        raise ValueError(f"weight_pair_to_xi needs A-type weights, got {lam.algebra}")
    c = xi_shift(lam, delta)
    if integral and c.denominator != 1:
        raise ValueError(f"shift c = {c} is not an integer: lambda - delta is not in the root lattice")
    d = delta.dynkin
    parts = [sum(d[i:], Fraction(0)) + c for i in range(len(d))] + [c]
    return PartitionVec(lam.algebra, tuple(parts))


def partition_pair_to_weights(alpha: Sequence, xi: Sequence) -> tuple[Weight, Weight]:
    a = partition(alpha)
    x = partition(xi, a.algebra)
    if a.total != x.total:
        raise ValueError(f"sum(alpha) = {a.total} differs from sum(xi) = {x.total}")
    return a.to_weight(), x.to_weight()


def in_root_lattice(kappa: Weight) -> bool:
    alg = kappa.algebra
    if any(x.denominator != 1 for x in kappa.dynkin):
        return False
    if alg.is_a_type:
        n = alg.n
        return sum((i + 1) * int(x) for i, x in enumerate(kappa.dynkin)) % n == 0
    if alg.tag == "B2":
        return int(kappa.dynkin[1]) % 2 == 0
    raise ValueError(f"unsupported algebra {alg}")


# ---------------------------------------------------------------------------
# Weyl groups


@dataclass(frozen=True)
class WeylElement:
    """An element of the Weyl group.

    ``action`` is a permutation ``p`` of the Young components for A-type
    (``(w v)_i = v_{p[i]}``) and a signed permutation ``((p0, s0), (p1, s1))``
    of the orthogonal coordinates for B2 (``(w x)_i = s_i * x_{p_i}``).
    ``matrix`` is the same action on Dynkin labels (row-vector convention).
    """

    algebra: AlgebraId
    action: tuple
    signature: int
    matrix: tuple[tuple[int, ...], ...]

    def __call__(self, w: Weight) -> Weight:
        return self.act(w)

    def act(self, w: Weight) -> Weight:
        if w.algebra != self.algebra:
            raise ValueError("algebra mismatch")
        d = w.dynkin
        r = len(d)
        return Weight(self.algebra, tuple(sum((d[i] * self.matrix[i][j] for i in range(r)), Fraction(0)) for j in range(r)))

    def compose(self, other: "WeylElement") -> "WeylElement":
        """``(self * other)(v) = self(other(v))``."""
        if self.algebra.is_a_type:
            # (s o)(v)_i = o(v)_{s[i]} = v_{o[s[i]]}
            act = tuple(other.action[self.action[i]] for i in range(len(self.action)))
        else:
            act = tuple(
                (other.action[p][0], s * other.action[p][1]) for p, s in self.action
            )
        return _weyl_by_action(self.algebra)[act]


def _perm_sign(p: Sequence[int]) -> int:
    sign = 1
    seen = [False] * len(p)
    for i in range(len(p)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _dynkin_matrix(alg: AlgebraId, act) -> tuple[tuple[int, ...], ...]:
    rows = []
    for i in range(alg.rank):
        e = [0] * alg.rank
        e[i] = 1
        img = _act_raw(alg, act, Weight(alg, e))
        rows.append(tuple(int(x) for x in img.dynkin))
    return tuple(rows)


def _act_raw(alg: AlgebraId, act, w: Weight) -> Weight:
    if alg.is_a_type:
        v = list(weight_to_partition(w).parts)
        u = [v[act[i]] for i in range(len(v))]
        return Weight(alg, tuple(u[i] - u[i + 1] for i in range(len(u) - 1)))
    x = w.orthogonal()
    y = tuple(s * x[p] for p, s in act)
    return from_orthogonal(y)


@lru_cache(maxsize=None)
def _weyl_by_action(alg: AlgebraId) -> dict:
    out = {}
    if alg.is_a_type:
        for p in itertools.permutations(range(alg.n)):
            out[p] = WeylElement(alg, p, _perm_sign(p), _dynkin_matrix(alg, p))
    elif alg.tag == "B2":
        for p in itertools.permutations(range(2)):
            for signs in itertools.product((1, -1), repeat=2):
                act = tuple((p[i], signs[i]) for i in range(2))
                sig = _perm_sign(p) * signs[0] * signs[1]
                out[act] = WeylElement(alg, act, sig, _dynkin_matrix(alg, act))
    else:
        raise ValueError(f"unsupported algebra {alg}")
    return out


@lru_cache(maxsize=None)
def weyl_group(alg) -> tuple[WeylElement, ...]:
    """All Weyl group elements, identity first."""
    alg = algebra(alg)
    elems = list(_weyl_by_action(alg).values())
    assert len(elems) == alg.weyl_order
    return tuple(elems)


def weyl_orbit(v: Weight) -> frozenset[Weight]:
    return frozenset(w.act(v) for w in weyl_group(v.algebra))


def dominant_representative(v: Weight) -> Weight:
    for w in weyl_group(v.algebra):
        u = w.act(v)
        if u.is_dominant:
            return u
    raise AssertionError("every Weyl orbit meets the dominant chamber")


# ---------------------------------------------------------------------------
# Positive-root products


def vandermonde(alpha: Sequence) -> Fraction:
    a = fractions(alpha)
    out = Fraction(1)
    for i in range(len(a)):
        for j in range(i + 1, len(a)):
            out *= a[i] - a[j]
    return out


def delta_b2(alpha: Sequence) -> Fraction:
    """Product of the positive roots of B2 paired with orthogonal coordinates."""
    a1, a2 = fractions(alpha)
    return a1 * a2 * (a1 * a1 - a2 * a2)


def delta_rho(alg) -> Fraction:
    alg = algebra(alg)
    if alg.is_a_type:
        return Fraction(math.prod(math.factorial(j) for j in range(1, alg.n)))
    if alg.tag == "B2":
        return delta_b2(rho(B2).orthogonal())
    raise ValueError(f"unsupported algebra {alg}")


def delta(alg, coords: Sequence) -> Fraction:
    """Positive-root product: Vandermonde of Young components, or the B2 product."""
    alg = algebra(alg)
    if alg.is_a_type:
        return vandermonde(coords)
    return delta_b2(coords)


def weyl_dimension(lam: Weight) -> int:
    alg = lam.algebra
    lr = lam + rho(alg)
    if alg.is_a_type:
        num = vandermonde(weight_to_partition(lr).parts)
    else:
        num = delta_b2(lr.orthogonal())
    d = num / delta_rho(alg)
    assert d.denominator == 1
    return int(d)
