"""Sparse multivariate polynomials with exact integer coefficients.

A monomial is a tuple of ``(variable index, exponent)`` pairs with strictly
increasing indices and positive exponents.  Variable indices refer to a
:class:`VarRegistry`, which also decides how variables are printed.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .errors import InvalidPermutationError, ParseError, RegistryError

Monomial = tuple[tuple[int, int], ...]
Descriptor = tuple  # ("v", vertex_id) or ("s", sorted_subset_tuple)

ONE: Monomial = ()


def vertex_var(vid: int) -> Descriptor:
    return ("v", vid)


def subset_var(subset: Iterable[int]) -> Descriptor:
    return ("s", tuple(sorted(subset)))


def descriptor_name(desc: Descriptor) -> str:
    kind, val = desc
    if kind == "v":
        return f"x{val}"
    if len(val) == 1:
        return f"x{val[0]}"
    return "x{" + ",".join(map(str, val)) + "}"


@dataclass(frozen=True)
class VarRegistry:
    descriptors: tuple[Descriptor, ...]

    def __post_init__(self):
        object.__setattr__(self, "descriptors", tuple(self.descriptors))
        if len(set(self.descriptors)) != len(self.descriptors):
            raise RegistryError("duplicate variable descriptors")

    @classmethod
    def vertices(cls, ids: Iterable[int]) -> VarRegistry:
        return cls(tuple(vertex_var(i) for i in ids))

    @classmethod
    def subsets(cls, subsets: Iterable[Iterable[int]]) -> VarRegistry:
        return cls(tuple(subset_var(s) for s in subsets))

    def __len__(self) -> int:
        return len(self.descriptors)

    @cached_property
    def _index(self) -> dict[Descriptor, int]:
        return {d: i for i, d in enumerate(self.descriptors)}

    @cached_property
    def _by_name(self) -> dict[str, int]:
        return {descriptor_name(d): i for i, d in enumerate(self.descriptors)}

    def index(self, desc: Descriptor) -> int:
        try:
            return self._index[desc]
        except KeyError:
            raise RegistryError(f"variable {descriptor_name(desc)} is not in the registry") from None

    def index_of_name(self, name: str) -> int:
        try:
            return self._by_name[name]
        except KeyError:
            raise RegistryError(f"variable {name} is not in the registry") from None

    def name(self, idx: int) -> str:
        return descriptor_name(self.descriptors[idx])

    def to_json(self) -> list[dict]:
        out = []
        for kind, val in self.descriptors:
            out.append({"vertex": val} if kind == "v" else {"subset": list(val)})
        return out

    @classmethod
    def from_json(cls, data: Sequence[Mapping]) -> VarRegistry:
        descs = []
        for d in data:
            if "vertex" in d:
                descs.append(vertex_var(int(d["vertex"])))
            elif "subset" in d:
                descs.append(subset_var(int(x) for x in d["subset"]))
            else:
                raise ParseError(f"bad registry entry {d!r}")
        return cls(tuple(descs))


# ---------------------------------------------------------------------------
# monomials


def mono_from_exponents(exps: Mapping[int, int]) -> Monomial:
    return tuple(sorted((i, e) for i, e in exps.items() if e))


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    exps = dict(a)
    for i, e in b:
        exps[i] = exps.get(i, 0) + e
    return tuple(sorted(exps.items()))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    """True when every exponent of ``a`` is at most the matching one in ``b``."""
    eb = dict(b)
    return all(e <= eb.get(i, 0) for i, e in a)


def mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


def mono_sort_key(m: Monomial):
    # graded, then lexicographic on exponent vectors with x_0 > x_1 > ...
    return (-mono_degree(m), tuple((i, -e) for i, e in m))


# ---------------------------------------------------------------------------
# polynomials


class Poly:
    __slots__ = ("reg", "terms")

    def __init__(self, reg: VarRegistry, terms: Mapping[Monomial, int] | None = None):
        self.reg = reg
        self.terms: dict[Monomial, int] = {m: c for m, c in (terms or {}).items() if c}

    @classmethod
    def zero(cls, reg: VarRegistry) -> Poly:
        return cls(reg)

    @classmethod
    def one(cls, reg: VarRegistry) -> Poly:
        return cls(reg, {ONE: 1})

    @classmethod
    def var(cls, reg: VarRegistry, idx: int, exp: int = 1) -> Poly:
        if not 0 <= idx < len(reg):
            raise RegistryError(f"variable index {idx} out of range")
        return cls(reg, {((idx, exp),): 1})

    def _check(self, other: Poly) -> None:
        if self.reg is not other.reg and self.reg != other.reg:
            raise RegistryError("polynomials live over different variable registries")

    def __add__(self, other: Poly) -> Poly:
        self._check(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            terms[m] = terms.get(m, 0) + c
        return Poly(self.reg, terms)

    def __neg__(self) -> Poly:
        return Poly(self.reg, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: Poly) -> Poly:
        return self + (-other)

    def __mul__(self, other: Poly) -> Poly:
        self._check(other)
        terms: dict[Monomial, int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                terms[m] = terms.get(m, 0) + c1 * c2
        return Poly(self.reg, terms)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.reg == other.reg and self.terms == other.terms

    def __hash__(self):
        return hash((self.reg, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __repr__(self) -> str:
        return f"Poly({render(self)!r})"

    def __str__(self) -> str:
        return render(self)

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        return sorted(self.terms.items(), key=lambda t: mono_sort_key(t[0]))

    def coefficient(self, m: Monomial) -> int:
        return self.terms.get(m, 0)

    def degrees(self) -> set[int]:
        return {mono_degree(m) for m in self.terms}

    def evaluate(self, values: Mapping[int, int] | None = None, default: int = 1) -> int:
        """Substitute integers for variables; unspecified ones take ``default``."""
        values = values or {}
        total = 0
        for m, c in self.terms.items():
            term = c
            for i, e in m:
                term *= values.get(i, default) ** e
            total += term
        return total


def add(p: Poly, q: Poly) -> Poly:
    return p + q


def mul(p: Poly, q: Poly) -> Poly:
    return p * q


def scale(p: Poly, c: int) -> Poly:
    return Poly(p.reg, {m: c * v for m, v in p.terms.items()})


def gamma_extract(p: Poly, target: Monomial) -> int:
    """Sum of the coefficients of the monomials of ``p`` that divide ``target``."""
    return sum(c for m, c in p.terms.items() if mono_divides(m, target))


def permute_variables(p: Poly, sigma: Sequence[int]) -> Poly:
    """Replace variable ``i`` by ``sigma[i]`` throughout."""
    if sorted(sigma) != list(range(len(p.reg))):
        raise InvalidPermutationError("sigma must be a bijection on the registry indices")
    terms: dict[Monomial, int] = {}
    for m, c in p.terms.items():
        nm = tuple(sorted((sigma[i], e) for i, e in m))
        terms[nm] = terms.get(nm, 0) + c
    return Poly(p.reg, terms)


# ---------------------------------------------------------------------------
# text and JSON forms


def render_monomial(m: Monomial, reg: VarRegistry) -> str:
    parts = []
    for i, e in m:
        name = reg.name(i)
        parts.append(name if e == 1 else f"{name}^{e}")
    return "·".join(parts)


def render(p: Poly) -> str:
    if not p.terms:
        return "0"
    out = []
    for k, (m, c) in enumerate(p.sorted_terms()):
        body = render_monomial(m, p.reg)
        mag = abs(c)
        if not body:
            text = str(mag)
        elif mag == 1:
            text = body
        else:
            text = f"{mag}·{body}"
        if k == 0:
            out.append(("-" if c < 0 else "") + text)
        else:
            out.append(("- " if c < 0 else "+ ") + text)
    return " ".join(out)


_FACTOR = re.compile(r"^(x(?:\d+|\{\d+(?:,\d+)*\}))(?:\^(\d+))?$")


def parse(text: str, reg: VarRegistry) -> Poly:
    s = "".join(text.split())
    if s in ("", "0"):
        return Poly.zero(reg)
    pieces = re.split(r"(?=[+-])", s)
    terms: dict[Monomial, int] = {}
    for piece in pieces:
        if not piece:
            continue
        sign = 1
        if piece[0] in "+-":
            sign = -1 if piece[0] == "-" else 1
            piece = piece[1:]
        if not piece:
            raise ParseError(f"dangling sign in {text!r}")
        coef = 1
        exps: dict[int, int] = {}
        for factor in re.split(r"[·*]", piece):
            if factor.isdigit():
                coef *= int(factor)
                continue
            match = _FACTOR.match(factor)
            if not match:
                raise ParseError(f"cannot parse factor {factor!r}")
            idx = reg.index_of_name(match.group(1))
            exps[idx] = exps.get(idx, 0) + int(match.group(2) or 1)
        m = mono_from_exponents(exps)
        terms[m] = terms.get(m, 0) + sign * coef
    return Poly(reg, terms)


def to_json(p: Poly) -> dict:
    return {
        "registry": p.reg.to_json(),
        "terms": [
            {"coef": str(c), "vars": [[i, e] for i, e in m]} for m, c in p.sorted_terms()
        ],
    }


def from_json(data: Mapping, reg: VarRegistry | None = None) -> Poly:
    if reg is None:
        reg = VarRegistry.from_json(data["registry"])
    terms: dict[Monomial, int] = {}
    for t in data["terms"]:
        m = mono_from_exponents({int(i): int(e) for i, e in t["vars"]})
        terms[m] = terms.get(m, 0) + int(t["coef"])
    return Poly(reg, terms)
