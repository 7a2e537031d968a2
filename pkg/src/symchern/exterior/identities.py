"""Pointwise wedge identities for 2-forms and (2l,0)-forms, checked exactly."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Optional

from ..errors import DimensionTooSmall, NonRealForm, WrongDegree, WrongType
from ..exact.scalars import GaussianRational
from .forms import ModelSpace, MultiVector


@dataclass(frozen=True)
class TypeDecomposition:
    omega_part: MultiVector
    primitive_11: MultiVector
    anti_invariant: MultiVector

    @property
    def invariant_part(self) -> MultiVector:
        return self.omega_part + self.primitive_11

    def total(self) -> MultiVector:
        return self.omega_part + self.primitive_11 + self.anti_invariant


@dataclass(frozen=True)
class IdentityCheck:
    holds: bool
    residual: MultiVector
    variant_residual: Optional[MultiVector] = None


@dataclass(frozen=True)
class HodgeRiemannCheck:
    holds: bool
    norm_sq: Fraction
    lhs: MultiVector
    rhs: MultiVector


def _real_two_form(xi: MultiVector) -> ModelSpace:
    if not xi.is_homogeneous(2):
        raise WrongDegree(f"expected a 2-form, got degrees {sorted(xi.degrees())}")
    if not xi.is_real:
        raise NonRealForm("2-form has non-real coefficients")
    return ModelSpace(xi.n)


def _real(z: GaussianRational) -> Fraction:
    assert z.im == 0
    return z.re


def decompose(xi: MultiVector) -> TypeDecomposition:
    """Split a real 2-form into its omega, primitive (1,1) and J-anti-invariant parts."""
    space = _real_two_form(xi)
    pulled = space.j_pullback(xi)
    half = Fraction(1, 2)
    invariant = (xi + pulled).scale(half)
    anti = (xi - pulled).scale(half)
    omega = space.omega()
    omega_part = omega.scale(_real(space.inner(xi, omega)) / space.n)
    return TypeDecomposition(omega_part, invariant - omega_part, anti)


def verify_wedge_identity_6(xi: MultiVector) -> IdentityCheck:
    """``xi ^ omega^{n-1} == (n-1)! (xi, omega) sigma``."""
    space = _real_two_form(xi)
    n = space.n
    lhs = xi.wedge(space.omega_power(n - 1))
    pairing = _real(space.inner(xi, space.omega()))
    rhs = space.sigma().scale(math.factorial(n - 1) * pairing)
    residual = lhs - rhs
    return IdentityCheck(residual.is_zero, residual)


def verify_wedge_identity_7(xi: MultiVector) -> IdentityCheck:
    """``xi ^ xi ^ omega^{n-2}`` against both forms of the quadratic identity.

    ``(n-2)! [ (n-1)/n (xi,omega)^2 - |xi_0'|^2 + |xi''|^2 ] sigma`` and
    ``(n-2)! [ (xi,omega)^2 - |xi'|^2 + |xi''|^2 ] sigma`` must both match.
    """
    space = _real_two_form(xi)
    n = space.n
    if n < 2:
        raise DimensionTooSmall("the quadratic wedge identity needs n >= 2")
    parts = decompose(xi)
    lhs = xi.wedge(xi).wedge(space.omega_power(n - 2))
    pairing = _real(space.inner(xi, space.omega()))
    inv_sq = space.norm_sq(parts.invariant_part)
    prim_sq = space.norm_sq(parts.primitive_11)
    anti_sq = space.norm_sq(parts.anti_invariant)
    f = math.factorial(n - 2)
    sigma = space.sigma()
    rhs = sigma.scale(f * (pairing**2 - inv_sq + anti_sq))
    rhs_variant = sigma.scale(f * (Fraction(n - 1, n) * pairing**2 - prim_sq + anti_sq))
    residual = lhs - rhs
    variant = lhs - rhs_variant
    return IdentityCheck(residual.is_zero and variant.is_zero, residual, variant)


def holomorphic_degree(alpha: MultiVector) -> int:
    """Degree ``p`` of a (p, 0)-form; raises WrongType if any conjugate covector appears."""
    space = ModelSpace(alpha.n)
    degrees = alpha.degrees()
    if len(degrees) > 1:
        raise WrongDegree(f"form is not homogeneous: degrees {sorted(degrees)}")
    for key in space.to_complex_basis(alpha):
        if any(kind == "b" for kind, _ in key):
            raise WrongType("form has a component containing a conjugate covector")
    return degrees.pop() if degrees else 0


def verify_hodge_riemann_16(alpha: MultiVector, l: Optional[int] = None) -> HodgeRiemannCheck:
    """``omega^{n-2l} ^ alpha ^ conj(alpha) == (n-2l)! |alpha|^2 sigma`` for a (2l,0)-form.

    ``|alpha|^2`` is the Hermitian norm ``sum_I |alpha_I|^2`` over the
    orthonormal real basis ``e^I``.  ``l`` may be omitted unless ``alpha`` is 0.
    """
    space = ModelSpace(alpha.n)
    n = space.n
    p = holomorphic_degree(alpha)
    if alpha.is_zero:
        if l is None:
            l = 0
    else:
        if p % 2:
            raise WrongDegree(f"(p,0)-form of odd degree {p}")
        if l is not None and 2 * l != p:
            raise WrongDegree(f"form has degree {p}, expected {2 * l}")
        l = p // 2
    if 2 * l > n:
        raise WrongDegree(f"2l = {2 * l} exceeds n = {n}")
    norm_sq = space.norm_sq(alpha)
    lhs = space.omega_power(n - 2 * l).wedge(alpha).wedge(alpha.conjugate())
    rhs = space.sigma().scale(math.factorial(n - 2 * l) * norm_sq)
    return HodgeRiemannCheck(lhs == rhs and norm_sq >= 0, norm_sq, lhs, rhs)


def holomorphic_monomial(space: ModelSpace, indices) -> MultiVector:
    out = space.one()
    for j in indices:
        out = out.wedge(space.epsilon(j))
    return out


def random_holomorphic_form(
    space: ModelSpace, l: int, rng: random.Random, bound: int = 6, density: float = 0.7
) -> MultiVector:
    """Random constant (2l, 0)-form with Gaussian-rational coefficients."""
    out = space.zero()
    for subset in combinations(range(1, space.n + 1), 2 * l):
        if rng.random() > density:
            continue
        c = GaussianRational(
            Fraction(rng.randint(-bound, bound), rng.randint(1, 4)),
            Fraction(rng.randint(-bound, bound), rng.randint(1, 4)),
        )
        out = out + holomorphic_monomial(space, subset).scale(c)
    return out
