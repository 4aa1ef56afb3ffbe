"""Divided differences, their isobaric deformations, and word application.

All operators act on one alphabet (x by default, y on request) and are
exact: the division by x_i - x_{i+1} is performed term by term on the
antisymmetrized input, so no rational arithmetic ever appears.

Conventions, pinned by the printed rank-3 tables and enforced by tests:

* ``apply_word(kind, [a1, ..., ap], f)`` applies the rightmost letter
  first (operator product order), so the word of a permutation and the
  word of its operator agree.
* ``isobaric`` with sign +1 sends 1 to -b and x_1 to 1; the squares obey
  pi+^2 = -b pi+ and pi-^2 = +b pi- (measured, and asserted in tests).

>>> from .poly import xvar, one
>>> print(divdiff(1, xvar(1) ** 2))
x1 + x2
>>> print(isobaric(1, one()))
-b
"""

from __future__ import annotations

from typing import Iterable

from . import _backend
from ._packing import BETA, Var, adjacent_pair, unit
from .perms import Permutation, bruhat_lower, first_reduced_word
from .poly import MultiPoly

DEL = "del"
PI_PLUS = "pi+"
PI_MINUS = "pi-"
OPERATOR_KINDS = (DEL, PI_PLUS, PI_MINUS)

_B_UNIT = unit(BETA)


def transpose(i: int, f: MultiPoly, alphabet: str = "x") -> MultiPoly:
    """Swap the i-th and (i+1)-st variables of one alphabet."""
    sh_i, sh_j, ui, uj = adjacent_pair(alphabet, i)
    return MultiPoly._raw(_backend.kernel.swap(f._t, sh_i, sh_j, ui, uj))


def divdiff(i: int, f: MultiPoly, alphabet: str = "x") -> MultiPoly:
    """(f - transpose(i, f)) / (v_i - v_{i+1}), computed exactly."""
    sh_i, sh_j, ui, uj = adjacent_pair(alphabet, i)
    return MultiPoly._raw(_backend.kernel.divdiff(f._t, sh_i, sh_j, ui, uj))


def isobaric(i: int, f: MultiPoly, alphabet: str = "x", sign: int = 1) -> MultiPoly:
    """divdiff(i, f) + sign * b * divdiff(i, v_{i+1} * f)."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    shifted = f.times_var(Var(alphabet, i + 1))
    d = divdiff(i, f, alphabet)
    d2 = divdiff(i, shifted, alphabet)
    acc = dict(d._t)
    _backend.kernel.addmul(acc, d2._t, _B_UNIT, sign)
    return MultiPoly._raw(_backend.kernel.prune(acc))


def apply_op(kind: str, i: int, f: MultiPoly, alphabet: str = "x") -> MultiPoly:
    if kind == DEL:
        return divdiff(i, f, alphabet)
    if kind == PI_PLUS:
        return isobaric(i, f, alphabet, 1)
    if kind == PI_MINUS:
        return isobaric(i, f, alphabet, -1)
    raise ValueError(f"unknown operator kind {kind!r}")


def apply_word(
    kind: str, word: Iterable[int], f: MultiPoly, alphabet: str = "x"
) -> MultiPoly:
    """Compose single-site operators along a word, rightmost letter first.

    Words need not be reduced; non-reduced words simply compose (for the
    plain divided difference the result is then 0).
    """
    for a in reversed(tuple(word)):
        f = apply_op(kind, a, f, alphabet)
    return f


def apply_perm(kind: str, w: Permutation, f: MultiPoly, alphabet: str = "x") -> MultiPoly:
    """Operator indexed by a permutation, via any reduced word."""
    return apply_word(kind, first_reduced_word(w), f, alphabet)


def apply_psi(w: Permutation, f: MultiPoly, alphabet: str = "x") -> MultiPoly:
    """sum over v <= w of b^(l(w)-l(v)) * pi+_v, applied to f.

    >>> from .perms import from_word
    >>> from .poly import one
    >>> apply_psi(from_word([1], 2), one()).is_zero()
    True
    """
    lw = w.length()
    b = MultiPoly.variable(BETA)
    total = MultiPoly.constant(0)
    for v in bruhat_lower(w):
        total = total + b ** (lw - v.length()) * apply_perm(PI_PLUS, v, f, alphabet)
    return total
