"""Bit-packed monomial layout shared by every polynomial in the package.

A monomial is a single Python int made of 33 fields of 16 bits each.  From
the least significant field upwards:

    q1..q7 | b | z1..z8 | y1..y8 | x1..x8 | xdeg

where ``xdeg`` is the redundant total degree in the x alphabet.  Two
consequences drive the whole design:

* multiplying monomials is integer addition (fields are wide enough that
  no exponent reachable here can carry into a neighbour), and
* comparing packed ints compares total x-degree first, then the exponents
  of x8 down to x1, then the remaining fields in a fixed order.  That is
  exactly the graded order the quotient-ring division needs: ``max`` of a
  term map is the leading monomial, and the leading monomial of
  h_k(x1..xi) is xi^k.

Eight indices per alphabet is deliberate headroom; the verification
routines cap the rank well below that.
"""

from typing import Iterable, NamedTuple

FIELD_BITS = 16
FIELD_MASK = (1 << FIELD_BITS) - 1
N_MAX = 8

_Q_SLOT0 = 0  # q_i sits in slot i-1, i = 1..7
_B_SLOT = 7
_Z_SLOT0 = 8  # z_i sits in slot 7+i
_Y_SLOT0 = 16  # y_i sits in slot 15+i
_X_SLOT0 = 24  # x_i sits in slot 23+i
_XDEG_SLOT = 32
NUM_SLOTS = 33

XDEG_SHIFT = _XDEG_SLOT * FIELD_BITS
XDEG_UNIT = 1 << XDEG_SHIFT

KINDS = ("x", "y", "z", "b", "q")
# display order inside a term: deformation parameters first, then alphabets
_KIND_RANK = {"b": 0, "q": 1, "x": 2, "y": 3, "z": 4}


class Var(NamedTuple):
    """A formal variable: kind in {x,y,z,b,q}, 1-based index (0 for b)."""

    kind: str
    index: int

    def name(self) -> str:
        return "b" if self.kind == "b" else f"{self.kind}{self.index}"


BETA = Var("b", 0)


def var_from_name(name: str) -> Var:
    """Inverse of Var.name; raises ValueError on anything unrecognised."""
    if name == "b":
        return BETA
    kind, tail = name[:1], name[1:]
    if kind not in ("x", "y", "z", "q") or not tail.isdigit():
        raise ValueError(f"unknown variable name: {name!r}")
    v = Var(kind, int(tail))
    _slot(v)  # range check
    return v


def _slot(var: Var) -> int:
    kind, i = var
    if kind == "x":
        if not 1 <= i <= N_MAX:
            raise ValueError(f"x index out of range: {i}")
        return _X_SLOT0 + (i - 1)
    if kind == "y":
        if not 1 <= i <= N_MAX:
            raise ValueError(f"y index out of range: {i}")
        return _Y_SLOT0 + (i - 1)
    if kind == "z":
        if not 1 <= i <= N_MAX:
            raise ValueError(f"z index out of range: {i}")
        return _Z_SLOT0 + (i - 1)
    if kind == "b":
        return _B_SLOT
    if kind == "q":
        if not 1 <= i <= N_MAX - 1:
            raise ValueError(f"q index out of range: {i}")
        return _Q_SLOT0 + (i - 1)
    raise ValueError(f"unknown variable kind: {kind!r}")


def shift(var: Var) -> int:
    return _slot(var) * FIELD_BITS


def unit(var: Var) -> int:
    """Packed monomial of the bare variable (x units carry the xdeg field)."""
    u = 1 << shift(var)
    if var.kind == "x":
        u |= XDEG_UNIT
    return u


def exponent(mono: int, var: Var) -> int:
    return (mono >> shift(var)) & FIELD_MASK


def pack(exps: dict[Var, int]) -> int:
    m = 0
    for var, e in exps.items():
        if e < 0:
            raise ValueError(f"negative exponent for {var.name()}")
        if e > FIELD_MASK:
            raise ValueError(f"exponent too large for {var.name()}: {e}")
        m += e * unit(var)
    return m


def unpack(mono: int) -> dict[Var, int]:
    """Nonzero exponents, keyed by Var, in display order (x<y<z<b<q)."""
    out: dict[Var, int] = {}
    for var in VARS_DISPLAY:
        e = (mono >> shift(var)) & FIELD_MASK
        if e:
            out[var] = e
    return out


def display_sort_key(var: Var) -> tuple[int, int]:
    return (_KIND_RANK[var.kind], var.index)


def all_vars() -> list[Var]:
    vs = [Var("x", i) for i in range(1, N_MAX + 1)]
    vs += [Var("y", i) for i in range(1, N_MAX + 1)]
    vs += [Var("z", i) for i in range(1, N_MAX + 1)]
    vs.append(BETA)
    vs += [Var("q", i) for i in range(1, N_MAX)]
    return vs


VARS_DISPLAY = all_vars()


def kind_mask(kind: str) -> int:
    """OR of the field masks of every slot holding the given kind."""
    m = 0
    if kind == "x":
        slots = range(_X_SLOT0, _X_SLOT0 + N_MAX)
    elif kind == "y":
        slots = range(_Y_SLOT0, _Y_SLOT0 + N_MAX)
    elif kind == "z":
        slots = range(_Z_SLOT0, _Z_SLOT0 + N_MAX)
    elif kind == "b":
        slots = range(_B_SLOT, _B_SLOT + 1)
    elif kind == "q":
        slots = range(_Q_SLOT0, _Q_SLOT0 + N_MAX - 1)
    else:
        raise ValueError(f"unknown variable kind: {kind!r}")
    for s in slots:
        m |= FIELD_MASK << (s * FIELD_BITS)
    return m


MASK_X = kind_mask("x")
MASK_Y = kind_mask("y")
MASK_Z = kind_mask("z")
MASK_B = kind_mask("b")
MASK_Q = kind_mask("q")
_KIND_MASKS = {"x": MASK_X, "y": MASK_Y, "z": MASK_Z, "b": MASK_B, "q": MASK_Q}


def has_kind(mono: int, kind: str) -> bool:
    return bool(mono & _KIND_MASKS[kind])


def kind_degree(mono: int, kind: str) -> int:
    """Total degree of the monomial in one alphabet."""
    if kind == "x":
        return (mono >> XDEG_SHIFT) & FIELD_MASK
    total, m = 0, mono & _KIND_MASKS[kind]
    while m:
        total += m & FIELD_MASK
        m >>= FIELD_BITS
    return total


def adjacent_pair(kind: str, i: int) -> tuple[int, int, int, int]:
    """(shift_i, shift_{i+1}, unit_i, unit_{i+1}) for a transposition site.

    Only the x and y alphabets are ever acted on by operators.
    """
    if kind not in ("x", "y"):
        raise ValueError(f"operators act on x or y, not {kind!r}")
    vi, vj = Var(kind, i), Var(kind, i + 1)
    return shift(vi), shift(vj), unit(vi), unit(vj)


def mono_divides(d: int, m: int) -> bool:
    """Field-wise <= test: does monomial d divide monomial m."""
    for s in range(NUM_SLOTS):
        sh = s * FIELD_BITS
        if (d >> sh) & FIELD_MASK > (m >> sh) & FIELD_MASK:
            return False
    return True
