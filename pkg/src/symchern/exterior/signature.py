"""Signature of the pairing ``(xi, eta) -> xi ^ eta ^ omega^{n-2}`` on J-invariant 2-forms."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from ..errors import DimensionTooSmall
from ..exact.linalg import inertia
from .forms import ModelSpace, MultiVector


def j_invariant_basis(space: ModelSpace) -> List[MultiVector]:
    """A basis of the real J-invariant 2-forms (dimension n^2).

    ``e^{2i-1}^e^{2i}`` for each i, then for each i < j the pair
    ``e^{2i-1}^e^{2j-1} + e^{2i}^e^{2j}`` and ``e^{2i-1}^e^{2j} - e^{2i}^e^{2j-1}``.
    """
    n = space.n
    basis = [space.form({(2 * i - 1, 2 * i): 1}) for i in range(1, n + 1)]
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            a, b, c, d = 2 * i - 1, 2 * i, 2 * j - 1, 2 * j
            basis.append(space.e(a, c) + space.e(b, d))
            basis.append(space.e(a, d) - space.e(b, c))
    return basis


def pairing(space: ModelSpace, xi: MultiVector, eta: MultiVector) -> Fraction:
    """``(xi ^ eta ^ omega^{n-2}) / ((n-2)! sigma)``."""
    n = space.n
    top = xi.wedge(eta).wedge(space.omega_power(n - 2)).top_coefficient()
    if top.im != 0:
        raise ValueError("pairing of real forms came out non-real")
    return top.re / math.factorial(n - 2)


def gram_matrix(space: ModelSpace, forms: Sequence[MultiVector]) -> List[List[Fraction]]:
    wn = space.omega_power(space.n - 2)
    scale = math.factorial(space.n - 2)
    rows = [[Fraction(0)] * len(forms) for _ in forms]
    partial = [f.wedge(wn) for f in forms]
    for i, fi in enumerate(forms):
        for j in range(i, len(forms)):
            v = fi.wedge(partial[j]).top_coefficient().re / scale
            rows[i][j] = rows[j][i] = v
    return rows


def signature_of_pairing(
    space: ModelSpace | int, forms: Optional[Sequence[MultiVector]] = None
) -> Tuple[int, int, int]:
    """Inertia ``(positives, negatives, zeros)`` of the pairing.

    Defaults to the full J-invariant subspace; pass ``forms`` to restrict to
    their span.
    """
    if isinstance(space, int):
        space = ModelSpace(space)
    if space.n < 2:
        raise DimensionTooSmall("the pairing needs n >= 2")
    if forms is None:
        forms = j_invariant_basis(space)
    return inertia(gram_matrix(space, forms))
