"""Laurent polynomials in one variable ``t`` with integer coefficients."""

from __future__ import annotations

import json
from functools import lru_cache
from typing import Iterable, Mapping


class LaurentPoly:
    """Immutable finitely supported map exponent -> nonzero int coefficient."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[int, int] = {}
        for e, c in items:
            acc[int(e)] = acc.get(int(e), 0) + int(c)
        self._terms = {e: acc[e] for e in sorted(acc) if acc[e] != 0}
        self._hash = None

    @classmethod
    def const(cls, c: int) -> LaurentPoly:
        return cls({0: c})

    @classmethod
    def monomial(cls, e: int, c: int = 1) -> LaurentPoly:
        return cls({e: c})

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coeff(self, e: int) -> int:
        return self._terms.get(e, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def min_exp(self) -> int | None:
        return next(iter(self._terms), None)

    def max_exp(self) -> int | None:
        return next(reversed(self._terms), None) if self._terms else None

    def __add__(self, other: LaurentPoly | int) -> LaurentPoly:
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        acc = dict(self._terms)
        for e, c in other._terms.items():
            acc[e] = acc.get(e, 0) + c
        return LaurentPoly(acc)

    __radd__ = __add__

    def __neg__(self) -> LaurentPoly:
        return LaurentPoly({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: LaurentPoly | int) -> LaurentPoly:
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        return self + (-other)

    def __mul__(self, other: LaurentPoly | int) -> LaurentPoly:
        if isinstance(other, int):
            return LaurentPoly({e: c * other for e, c in self._terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        acc: dict[int, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                acc[e1 + e2] = acc.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly(acc)

    __rmul__ = __mul__

    def shift(self, e: int) -> LaurentPoly:
        """Multiply by t**e."""
        return LaurentPoly({k + e: c for k, c in self._terms.items()})

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = LaurentPoly.const(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    def __repr__(self) -> str:
        return f"LaurentPoly({self._terms!r})"

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for e, c in self._terms.items():
            if e == 0:
                mono = str(abs(c))
            else:
                var = "t" if e == 1 else f"t^{e}"
                mono = var if abs(c) == 1 else f"{abs(c)}*{var}"
            if not out:
                out.append(mono if c > 0 else f"-{mono}")
            else:
                out.append(("+ " if c > 0 else "- ") + mono)
        return " ".join(out)

    def to_json(self) -> dict:
        return {
            "var": "t",
            "terms": [{"exp": e, "coef": str(c)} for e, c in self._terms.items()],
        }

    @classmethod
    def from_json(cls, obj: dict | str) -> LaurentPoly:
        if isinstance(obj, str):
            obj = json.loads(obj)
        if obj.get("var") != "t":
            raise ValueError(f"unexpected polynomial variable {obj.get('var')!r}")
        return cls((int(term["exp"]), int(term["coef"])) for term in obj["terms"])


ZERO = LaurentPoly()
ONE = LaurentPoly.const(1)


def add(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p + q


def mul(p: LaurentPoly, q: LaurentPoly) -> LaurentPoly:
    return p * q


def substitute_power(p: LaurentPoly, s: int) -> LaurentPoly:
    """Substitute t -> t**s."""
    if s == 0:
        raise ValueError("substitution exponent must be nonzero")
    return LaurentPoly({e * s: c for e, c in p.items()})


def eval_at_one(p: LaurentPoly) -> int:
    return sum(c for _, c in p.items())


@lru_cache(maxsize=None)
def gauss_binomial(a: int, b: int) -> LaurentPoly:
    """The t-binomial [a choose b]_t, zero whenever a < b or b < 0.

    Built row by row from [a, b] = [a-1, b-1] + t^b [a-1, b], so only
    integer polynomial additions are involved.
    """
    if b < 0 or a < b:
        return ZERO
    b = min(b, a - b)
    row = [ONE] + [ZERO] * b
    for _ in range(a):
        row = [ONE] + [row[k - 1] + row[k].shift(k) for k in range(1, b + 1)]
    return row[b]
