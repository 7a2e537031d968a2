"""Constant-coefficient exterior forms on the standard symplectic model space.

Covector indices run over ``1..2n``.  The complex structure acts on the basis
by ``J e_{2i-1} = e_{2i}`` and ``J e_{2i} = -e_{2i-1}``, so on covectors
``J* e^{2i-1} = -e^{2i}`` and ``J* e^{2i} = e^{2i-1}``.  The symplectic form is
``omega = sum_i e^{2i-1} ^ e^{2i}`` and the volume form is
``sigma = e^1 ^ ... ^ e^{2n} = omega^n / n!``.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Dict, Iterable, Iterator, Mapping, Tuple, Union

from ..errors import MismatchedModelSpace
from ..exact.scalars import GaussianRational

Index = Tuple[int, ...]
Scalar = Union[int, Fraction, GaussianRational]

MAX_DEFAULT_N = 6

_ZERO = GaussianRational(0)


def _merge_sign(left: Index, right: Index) -> int:
    """Sign of the permutation sorting ``left + right`` (0 if they overlap)."""
    inversions = 0
    j = 0
    for a in left:
        while j < len(right) and right[j] < a:
            j += 1
        if j < len(right) and right[j] == a:
            return 0
        inversions += j
    return -1 if inversions % 2 else 1


class MultiVector:
    """An element of the complexified exterior algebra of ``R^{2n}``.

    Terms are stored as ``{increasing index tuple: GaussianRational}`` with
    zero coefficients dropped.
    """

    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms: Mapping[Index, Scalar] | None = None) -> None:
        self.n = n
        clean: Dict[Index, GaussianRational] = {}
        for idx, c in (terms or {}).items():
            idx = tuple(idx)
            if list(idx) != sorted(set(idx)):
                raise ValueError(f"index tuple must be strictly increasing: {idx}")
            if idx and (idx[0] < 1 or idx[-1] > 2 * n):
                raise ValueError(f"index out of range for n={n}: {idx}")
            c = GaussianRational.coerce(c)
            if c:
                clean[idx] = clean.get(idx, _ZERO) + c
        self._terms = {k: v for k, v in clean.items() if v}

    # -- access -----------------------------------------------------------
    @property
    def terms(self) -> Dict[Index, GaussianRational]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[Index, GaussianRational]]:
        return iter(sorted(self._terms.items()))

    def __getitem__(self, idx: Iterable[int]) -> GaussianRational:
        return self._terms.get(tuple(idx), _ZERO)

    def __bool__(self) -> bool:
        return bool(self._terms)

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def degrees(self) -> set[int]:
        return {len(k) for k in self._terms}

    def is_homogeneous(self, degree: int) -> bool:
        return all(len(k) == degree for k in self._terms)

    @property
    def is_real(self) -> bool:
        return all(c.is_real for c in self._terms.values())

    def grade(self, k: int) -> "MultiVector":
        return MultiVector(self.n, {i: c for i, c in self._terms.items() if len(i) == k})

    def top_coefficient(self) -> GaussianRational:
        """Coefficient of ``e^1 ^ ... ^ e^{2n}``."""
        return self._terms.get(tuple(range(1, 2 * self.n + 1)), _ZERO)

    # -- algebra ----------------------------------------------------------
    def _check(self, other: "MultiVector") -> None:
        if not isinstance(other, MultiVector):
            raise TypeError(f"expected MultiVector, got {type(other).__name__}")
        if other.n != self.n:
            raise MismatchedModelSpace(f"n={self.n} vs n={other.n}")

    def __add__(self, other: "MultiVector") -> "MultiVector":
        self._check(other)
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, _ZERO) + c
        return MultiVector(self.n, out)

    def __neg__(self) -> "MultiVector":
        return MultiVector(self.n, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "MultiVector") -> "MultiVector":
        return self + (-other)

    def scale(self, s: Scalar) -> "MultiVector":
        s = GaussianRational.coerce(s)
        return MultiVector(self.n, {k: c * s for k, c in self._terms.items()})

    def __mul__(self, s: Scalar) -> "MultiVector":
        if isinstance(s, MultiVector):
            return NotImplemented
        return self.scale(s)

    __rmul__ = __mul__

    def wedge(self, other: "MultiVector") -> "MultiVector":
        self._check(other)
        out: Dict[Index, GaussianRational] = {}
        top = 2 * self.n
        for i, a in self._terms.items():
            for j, b in other._terms.items():
                if len(i) + len(j) > top:
                    continue
                sign = _merge_sign(i, j)
                if not sign:
                    continue
                key = tuple(sorted(i + j))
                c = a * b if sign > 0 else -(a * b)
                out[key] = out.get(key, _ZERO) + c
        return MultiVector(self.n, out)

    __xor__ = wedge

    def power(self, k: int) -> "MultiVector":
        result = MultiVector(self.n, {(): 1})
        for _ in range(k):
            result = result.wedge(self)
        return result

    def conjugate(self) -> "MultiVector":
        return MultiVector(self.n, {k: c.conjugate() for k, c in self._terms.items()})

    def substitute(self, images: Mapping[int, "MultiVector"]) -> "MultiVector":
        """Apply the algebra map sending each covector ``e^i`` to ``images[i]``."""
        out = MultiVector(self.n)
        for idx, c in self._terms.items():
            term = MultiVector(self.n, {(): c})
            for i in idx:
                term = term.wedge(images[i])
            out = out + term
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiVector):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        return f"MultiVector(n={self.n}, {self})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for idx, c in self.items():
            basis = "^".join(f"e{i}" for i in idx) if idx else "1"
            parts.append(f"({c})*{basis}")
        return " + ".join(parts)


@dataclass(frozen=True)
class ModelSpace:
    """``R^{2n}`` with its standard metric, complex structure and symplectic form."""

    n: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise ValueError("model space needs n >= 1")

    @property
    def dim(self) -> int:
        return 2 * self.n

    def form(self, terms: Mapping[Index, Scalar] | None = None) -> MultiVector:
        return MultiVector(self.n, terms)

    def zero(self) -> MultiVector:
        return MultiVector(self.n)

    def one(self) -> MultiVector:
        return MultiVector(self.n, {(): 1})

    def e(self, *indices: int) -> MultiVector:
        """``e^{i1} ^ e^{i2} ^ ...`` in the given order (sign included)."""
        out = self.one()
        for i in indices:
            out = out.wedge(MultiVector(self.n, {(i,): 1}))
        return out

    def epsilon(self, j: int) -> MultiVector:
        """Complex (1,0)-covector ``e^{2j-1} + i e^{2j}``."""
        return MultiVector(self.n, {(2 * j - 1,): 1, (2 * j,): GaussianRational(0, 1)})

    def epsilon_bar(self, j: int) -> MultiVector:
        return self.epsilon(j).conjugate()

    def omega(self) -> MultiVector:
        return _omega(self.n)

    def omega_power(self, k: int) -> MultiVector:
        return _omega_power(self.n, k)

    def sigma(self) -> MultiVector:
        return MultiVector(self.n, {tuple(range(1, 2 * self.n + 1)): 1})

    def j_pullback(self, form: MultiVector) -> MultiVector:
        """``(J* xi)(X, Y, ...) = xi(JX, JY, ...)``."""
        self._own(form)
        return form.substitute(_j_images(self.n))

    def to_complex_basis(self, form: MultiVector) -> Dict[Tuple[Tuple[str, int], ...], GaussianRational]:
        """Coefficients of ``form`` on wedge monomials of ``epsilon`` / ``epsilon_bar``.

        The result is keyed by tuples like ``(("e", 1), ("b", 2))`` meaning
        ``epsilon^1 ^ epsilon_bar^2``.  Internally the covectors are
        relabelled ``epsilon^j -> 2j-1`` and ``epsilon_bar^j -> 2j``.
        """
        self._own(form)
        converted = form.substitute(_complex_images(self.n))
        out = {}
        for idx, c in converted.items():
            key = tuple(("e", (i + 1) // 2) if i % 2 else ("b", i // 2) for i in idx)
            out[key] = c
        return out

    def inner(self, a: MultiVector, b: MultiVector) -> GaussianRational:
        """Bilinear pairing making ``{e^I}`` orthonormal (so ``(omega, omega) = n``)."""
        self._own(a)
        self._own(b)
        small, big = (a, b) if len(a._terms) <= len(b._terms) else (b, a)
        acc = GaussianRational(0)
        for k, c in small._terms.items():
            d = big._terms.get(k)
            if d is not None:
                acc = acc + c * d
        return acc

    def norm_sq(self, a: MultiVector) -> Fraction:
        """Hermitian norm ``sum_I |a_I|^2`` in the orthonormal real basis."""
        self._own(a)
        return sum((c.abs2() for c in a._terms.values()), Fraction(0))

    def two_form_basis(self) -> list[Index]:
        return list(combinations(range(1, 2 * self.n + 1), 2))

    def random_two_form(self, rng: random.Random, bound: int = 9, denominators: int = 5) -> MultiVector:
        terms = {}
        for idx in self.two_form_basis():
            terms[idx] = Fraction(rng.randint(-bound, bound), rng.randint(1, denominators))
        return MultiVector(self.n, terms)

    def _own(self, form: MultiVector) -> None:
        if form.n != self.n:
            raise MismatchedModelSpace(f"form lives on n={form.n}, model space has n={self.n}")


@lru_cache(maxsize=None)
def _omega(n: int) -> MultiVector:
    return MultiVector(n, {(2 * i - 1, 2 * i): 1 for i in range(1, n + 1)})


@lru_cache(maxsize=None)
def _omega_power(n: int, k: int) -> MultiVector:
    # omega^k = k! * sum over k-subsets S of prod_{i in S} e^{2i-1} ^ e^{2i}
    if k > n:
        return MultiVector(n)
    f = math.factorial(k)
    terms = {}
    for subset in combinations(range(1, n + 1), k):
        idx = tuple(x for i in subset for x in (2 * i - 1, 2 * i))
        terms[idx] = f
    return MultiVector(n, terms)


@lru_cache(maxsize=None)
def _j_images(n: int) -> Dict[int, MultiVector]:
    images = {}
    for i in range(1, n + 1):
        images[2 * i - 1] = MultiVector(n, {(2 * i,): -1})
        images[2 * i] = MultiVector(n, {(2 * i - 1,): 1})
    return images


@lru_cache(maxsize=None)
def _complex_images(n: int) -> Dict[int, MultiVector]:
    # e^{2j-1} = (eps^j + epsbar^j)/2,  e^{2j} = (eps^j - epsbar^j)/(2i)
    half = Fraction(1, 2)
    images = {}
    for j in range(1, n + 1):
        images[2 * j - 1] = MultiVector(n, {(2 * j - 1,): half, (2 * j,): half})
        images[2 * j] = MultiVector(
            n, {(2 * j - 1,): GaussianRational(0, -half), (2 * j,): GaussianRational(0, half)}
        )
    return images
