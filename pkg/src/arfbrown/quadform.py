"""Quadratic enhancements of mod-2 intersection forms and their invariants.

A Z/4-valued quadratic enhancement q of an intersection form I satisfies
q(x + y) = q(x) + q(y) + 2 I(x, y).  Setting y = x forces q(x) = I(x, x)
mod 2 on every class.  The Arf-Brown invariant is the eighth root of unity
zeta8^k determined exactly by the Gauss sum

    S = sum over H_1 of i^q(x) = zeta8^k * (zeta8 - zeta8^3)^dim,

computed in the cyclotomic integers Z[zeta8] with no floating point;
(zeta8 - zeta8^3)^2 = 2, so the right factor is a chosen square root of
2^dim.  Z/2-valued enhancements (spin structures on orientable surfaces)
are carried as even-valued Z/4 enhancements, value 2q.
"""

from __future__ import annotations

from itertools import product
from typing import Iterator, Mapping

from .errors import CapExceeded
from .f2 import F2Vector, NotAlternating, symplectic_basis
from .surface import IntersectionForm

__all__ = [
    "Cyc8",
    "RootOfUnity8",
    "Enhancement",
    "evaluate",
    "enumerate_enhancements",
    "arf",
    "gauss_sum",
    "arf_brown",
    "DimensionMismatch",
    "NotSpin",
    "NotRootOfUnity",
    "ParityViolation",
    "CapExceeded",
]


class DimensionMismatch(ValueError):
    """A vector's length differs from the form's dimension."""


class NotSpin(ValueError):
    """The enhancement takes an odd value, so it is not even-valued."""


class NotRootOfUnity(ArithmeticError):
    """A Gauss sum failed to match zeta8^k * sqrt(2)^dim for every k."""


class ParityViolation(ValueError):
    """A basis value disagrees mod 2 with the form's diagonal."""


class Cyc8:
    """An element of Z[zeta8] = Z[x]/(x^4 + 1).

    Stored as four integer coefficients (c0, c1, c2, c3) representing
    c0 + c1 zeta8 + c2 zeta8^2 + c3 zeta8^3.  Note zeta8^2 = i and
    conjugation (zeta8 -> zeta8^-1 = -zeta8^3) is an automorphism.
    """

    __slots__ = ("_c",)

    def __init__(self, c0: int = 0, c1: int = 0, c2: int = 0, c3: int = 0):
        self._c = (int(c0), int(c1), int(c2), int(c3))

    @classmethod
    def zero(cls) -> Cyc8:
        return cls()

    @classmethod
    def one(cls) -> Cyc8:
        return cls(1)

    @classmethod
    def from_int(cls, n: int) -> Cyc8:
        return cls(n)

    @classmethod
    def zeta(cls, k: int = 1) -> Cyc8:
        """zeta8^k for any integer k."""
        k %= 8
        sign = 1 if k < 4 else -1
        coeffs = [0, 0, 0, 0]
        coeffs[k % 4] = sign
        return cls(*coeffs)

    @classmethod
    def i_power(cls, k: int) -> Cyc8:
        """i^k, with i = zeta8^2."""
        return cls.zeta(2 * k)

    @classmethod
    def sqrt2(cls) -> Cyc8:
        """zeta8 - zeta8^3, a square root of 2."""
        return cls(0, 1, 0, -1)

    @property
    def coefficients(self) -> tuple[int, int, int, int]:
        return self._c

    def __add__(self, other: Cyc8) -> Cyc8:
        if not isinstance(other, Cyc8):
            return NotImplemented
        return Cyc8(*(a + b for a, b in zip(self._c, other._c)))

    def __sub__(self, other: Cyc8) -> Cyc8:
        if not isinstance(other, Cyc8):
            return NotImplemented
        return Cyc8(*(a - b for a, b in zip(self._c, other._c)))

    def __neg__(self) -> Cyc8:
        return Cyc8(*(-a for a in self._c))

    def __mul__(self, other: Cyc8 | int) -> Cyc8:
        if isinstance(other, int):
            return Cyc8(*(a * other for a in self._c))
        if not isinstance(other, Cyc8):
            return NotImplemented
        out = [0, 0, 0, 0]
        for i, a in enumerate(self._c):
            if a == 0:
                continue
            for j, b in enumerate(other._c):
                if b == 0:
                    continue
                k = i + j
                if k < 4:
                    out[k] += a * b
                else:
                    out[k - 4] -= a * b  # zeta8^4 = -1
        return Cyc8(*out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Cyc8:
        if n < 0:
            raise ValueError("negative powers are not in Z[zeta8]")
        result = Cyc8.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conj(self) -> Cyc8:
        """Complex conjugation, zeta8 -> zeta8^-1."""
        c0, c1, c2, c3 = self._c
        return Cyc8(c0, -c3, -c2, -c1)

    def is_zero(self) -> bool:
        return self._c == (0, 0, 0, 0)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Cyc8) and self._c == other._c

    def __hash__(self) -> int:
        return hash(self._c)

    def __repr__(self) -> str:
        return f"Cyc8{self._c}"


class RootOfUnity8:
    """The group of eighth roots of unity, as exponents mod 8."""

    __slots__ = ("_exp",)

    def __init__(self, exponent: int):
        self._exp = int(exponent) % 8

    @property
    def exponent(self) -> int:
        return self._exp

    def __mul__(self, other: RootOfUnity8) -> RootOfUnity8:
        if not isinstance(other, RootOfUnity8):
            return NotImplemented
        return RootOfUnity8(self._exp + other._exp)

    def __pow__(self, n: int) -> RootOfUnity8:
        return RootOfUnity8(self._exp * n)

    def inverse(self) -> RootOfUnity8:
        return RootOfUnity8(-self._exp)

    def cyc8(self) -> Cyc8:
        return Cyc8.zeta(self._exp)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RootOfUnity8) and self._exp == other._exp

    def __hash__(self) -> int:
        return hash(("RootOfUnity8", self._exp))

    def __repr__(self) -> str:
        return f"RootOfUnity8({self._exp})"


class Enhancement:
    """A Z/4 quadratic enhancement, stored by its values on the basis.

    values maps each basis label of the form to an element of Z/4 whose
    parity matches the form's diagonal; evaluation extends to all of H_1 by
    the quadratic law and is independent of the expansion order.
    """

    __slots__ = ("_form", "_values")

    def __init__(self, form: IntersectionForm, values: Mapping[str, int]):
        if set(values) != set(form.basis_labels):
            missing = set(form.basis_labels) - set(values)
            extra = set(values) - set(form.basis_labels)
            raise ValueError(
                f"values must cover the basis exactly; missing {sorted(missing)},"
                f" unexpected {sorted(extra)}"
            )
        normalized: dict[str, int] = {}
        for i, label in enumerate(form.basis_labels):
            v = int(values[label]) % 4
            if v % 2 != form.gram.entry(i, i):
                raise ParityViolation(
                    f"q({label}) = {v} has the wrong parity; the self-pairing"
                    f" is {form.gram.entry(i, i)} so q({label}) must be"
                    f" {form.gram.entry(i, i)} mod 2"
                )
            normalized[label] = v
        self._form = form
        self._values = normalized

    @property
    def form(self) -> IntersectionForm:
        return self._form

    @property
    def values(self) -> dict[str, int]:
        return dict(self._values)

    @property
    def dim(self) -> int:
        return self._form.dim

    def basis_value(self, label: str) -> int:
        return self._values[label]

    def is_even_valued(self) -> bool:
        return all(v % 2 == 0 for v in self._values.values())

    def evaluate(self, x: F2Vector) -> int:
        return evaluate(self, x)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Enhancement)
            and self._form == other._form
            and self._values == other._values
        )

    def __hash__(self) -> int:
        return hash((self._form, tuple(sorted(self._values.items()))))

    def __repr__(self) -> str:
        vals = " ".join(f"{k}={v}" for k, v in self._values.items())
        return f"Enhancement({vals})"


def evaluate(q: Enhancement, x: F2Vector) -> int:
    """q(x) in Z/4, by expanding x over the basis with the quadratic law."""
    form = q.form
    if len(x) != form.dim:
        raise DimensionMismatch(
            f"vector of length {len(x)} against a form of dimension {form.dim}"
        )
    total = 0
    support = [i for i in range(form.dim) if x[i]]
    for pos, i in enumerate(support):
        total += q.basis_value(form.basis_labels[i])
        for j in support[pos + 1 :]:
            total += 2 * form.gram.entry(i, j)
    return total % 4


def enumerate_enhancements(form: IntersectionForm) -> list[Enhancement]:
    """All 2^dim enhancements of the form, in lexicographic value order.

    Each basis label admits exactly the two values with the parity forced by
    its self-pairing; the torsor over H^1 is enumerated as their product.
    """
    choices = []
    for i in range(form.dim):
        base = form.gram.entry(i, i)
        choices.append((base, base + 2))
    out = []
    for combo in product(*choices):
        out.append(
            Enhancement(form, dict(zip(form.basis_labels, combo)))
        )
    return out


def arf(q: Enhancement) -> int:
    """The Arf invariant in Z/2 of an even-valued enhancement.

    Requires an alternating form (orientable surface).  The Z/2 enhancement
    is q/2; the invariant is the sum of (q(e_i)/2)(q(f_i)/2) over a
    symplectic basis.
    """
    if not q.is_even_valued():
        raise NotSpin("enhancement takes odd values; no Z/2 refinement")
    pairs = symplectic_basis(q.form.gram)
    total = 0
    for e, f in pairs:
        total += (evaluate(q, e) // 2) * (evaluate(q, f) // 2)
    return total % 2


def _q_table(q: Enhancement) -> list[int]:
    """q on every class, indexed by the support bitmask over the basis."""
    form = q.form
    dim = form.dim
    row_masks = [form.gram.rows[i].mask for i in range(dim)]
    qb = [q.basis_value(form.basis_labels[i]) for i in range(dim)]
    table = [0] * (1 << dim)
    for j in range(dim):
        bit = 1 << j
        for mask in range(bit):
            cross = (mask & row_masks[j]).bit_count() & 1
            table[mask | bit] = (table[mask] + qb[j] + 2 * cross) % 4
    return table


def gauss_sum(q: Enhancement, cap: int = 20) -> Cyc8:
    """S = sum of i^q(x) over all of H_1, exactly in Z[i] inside Z[zeta8]."""
    if q.dim > cap:
        raise CapExceeded(
            f"Gauss sum over 2^{q.dim} classes exceeds the cap of 2^{cap}"
        )
    counts = [0, 0, 0, 0]
    for val in _q_table(q):
        counts[val] += 1
    total = Cyc8.zero()
    for residue, count in enumerate(counts):
        if count:
            total = total + Cyc8.i_power(residue) * count
    return total


def arf_brown(q: Enhancement, cap: int = 20) -> RootOfUnity8:
    """The Arf-Brown invariant: the unique k with S = zeta8^k sqrt(2)^dim."""
    s = gauss_sum(q, cap=cap)
    target = Cyc8.sqrt2() ** q.dim
    for k in range(8):
        if Cyc8.zeta(k) * target == s:
            return RootOfUnity8(k)
    raise NotRootOfUnity(
        f"Gauss sum {s!r} is not zeta8^k * sqrt(2)^{q.dim} for any k"
    )
