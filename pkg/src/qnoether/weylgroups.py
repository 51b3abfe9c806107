"""Classical Weyl groups A/B/D as signed permutations acting on skew elements.

A SignedPerm of rank n sends index i to perm[i] with sign (-1)^signs[i];
type A has no signs, type D only even sign vectors.  Two action conventions
are supported on a rank-n SkewSpec with v = m = n:

  standard  -- signs flip both the base variable and the matching monoid
               unit (the natural action on 2n q-commuting coordinates);
  y-fixed   -- signs flip base variables only (the convention reached after
               the change of variables y_i -> x_i y_i, under which the sign
               subgroup fixes every y_i).

Both conventions agree on the permutation part.  The Reynolds operator
averages over the full group, which is affordable for n <= 7.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce

from .scalars import RatFn
from .skewring import SkewElem, SkewSpec

ENUMERATION_BOUND = 7

GROUP_TYPES = ("A", "B", "D")


@dataclass(frozen=True)
class SignedPerm:
    """perm[i] is the 0-based image of index i; signs[i] in {0, 1}."""

    perm: tuple[int, ...]
    signs: tuple[int, ...]
    gtype: str

    def __post_init__(self):
        n = len(self.perm)
        if sorted(self.perm) != list(range(n)) or len(self.signs) != n:
            raise ValueError("not a signed permutation")
        if self.gtype not in GROUP_TYPES:
            raise ValueError(f"unknown group type {self.gtype!r}")
        if self.gtype == "A" and any(self.signs):
            raise ValueError("type A elements carry no signs")
        if self.gtype == "D" and sum(self.signs) % 2:
            raise ValueError("type D elements need an even number of signs")

    @property
    def n(self) -> int:
        return len(self.perm)

    @classmethod
    def identity(cls, n: int, gtype: str = "A") -> SignedPerm:
        return cls(tuple(range(n)), (0,) * n, gtype)

    def compose(self, other: SignedPerm) -> SignedPerm:
        """(self o other): apply other first.  Group types must match."""
        if self.gtype != other.gtype or self.n != other.n:
            raise ValueError("mismatched group elements")
        perm = tuple(self.perm[other.perm[i]] for i in range(self.n))
        signs = tuple(
            (other.signs[i] + self.signs[other.perm[i]]) % 2 for i in range(self.n)
        )
        return SignedPerm(perm, signs, self.gtype)

    def inverse(self) -> SignedPerm:
        inv = [0] * self.n
        for i, p in enumerate(self.perm):
            inv[p] = i
        signs = tuple(self.signs[inv[j]] for j in range(self.n))
        return SignedPerm(tuple(inv), signs, self.gtype)


def enumerate_group(gtype: str, n: int) -> list[SignedPerm]:
    """All elements; |A| = n!, |B| = 2^n n!, |D| = 2^(n-1) n!."""
    if n < 1:
        raise ValueError("rank must be positive")
    if n > ENUMERATION_BOUND:
        raise ValueError(f"full enumeration limited to n <= {ENUMERATION_BOUND}")
    if gtype not in GROUP_TYPES:
        raise ValueError(f"unknown group type {gtype!r}")
    out = []
    for perm in itertools.permutations(range(n)):
        if gtype == "A":
            out.append(SignedPerm(perm, (0,) * n, gtype))
            continue
        for signs in itertools.product((0, 1), repeat=n):
            if gtype == "D" and sum(signs) % 2:
                continue
            out.append(SignedPerm(perm, signs, gtype))
    return out


def generators(gtype: str, n: int) -> list[SignedPerm]:
    """A generating set: adjacent transpositions plus one sign pattern."""
    gens = []
    for i in range(n - 1):
        perm = list(range(n))
        perm[i], perm[i + 1] = perm[i + 1], perm[i]
        gens.append(SignedPerm(tuple(perm), (0,) * n, gtype))
    if gtype == "B":
        signs = tuple(1 if i == 0 else 0 for i in range(n))
        gens.append(SignedPerm(tuple(range(n)), signs, gtype))
    elif gtype == "D" and n >= 2:
        signs = tuple(1 if i < 2 else 0 for i in range(n))
        gens.append(SignedPerm(tuple(range(n)), signs, gtype))
    if not gens:  # rank 1, types A and D are trivial
        gens.append(SignedPerm.identity(n, gtype))
    return gens


def act(g: SignedPerm, a: SkewElem, convention: str = "standard") -> SkewElem:
    """Apply x_i -> (-1)^signs[i] x_{perm(i)} (and likewise the units) to a."""
    spec = a.spec
    if spec.v != g.n or spec.m != g.n:
        raise ValueError("rank does not match the spec's variable arrangement")
    if convention not in ("standard", "y-fixed"):
        raise ValueError(f"unknown convention {convention!r}")
    sign_units = convention == "standard"
    out: dict = {}
    for e, f in a.terms.items():
        ne = [0] * spec.m
        flips = 0
        for k, b in enumerate(e):
            ne[g.perm[k]] = b
            if sign_units and g.signs[k] and b % 2:
                flips ^= 1
        fnew = _act_coeff(f, g)
        if flips:
            fnew = -fnew
        key = tuple(ne)
        if key in out:
            out[key] = out[key] + fnew
        else:
            out[key] = fnew
    return SkewElem(spec, out)


def _act_coeff(f, g: SignedPerm):
    return f.relabel(g.perm, g.signs)


def is_invariant(
    a: SkewElem, gtype: str, n: int, convention: str = "standard",
    use_generators: bool = True,
) -> bool:
    """act(g, a) == a for all g; generator invariance suffices for a group."""
    gs = generators(gtype, n) if use_generators else enumerate_group(gtype, n)
    return all(act(g, a, convention) == a for g in gs)


def reynolds(a: SkewElem, gtype: str, n: int, convention: str = "standard") -> SkewElem:
    """|G|^-1 sum_g g(a), the averaging projection onto the invariants."""
    group = enumerate_group(gtype, n)
    total = reduce(lambda s, g: s + act(g, a, convention), group, a.spec.zero())
    return total.scale(RatFn.const(Fraction(1, len(group)), a.spec.v))


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_signed_perm(text: str, n: int, gtype: str = "A") -> SignedPerm:
    """Parse compact cycle notation with an optional sign string, e.g. "(1 2)(3)++-".

    Cycles use 1-based indices; the trailing string of '+'/'-' characters
    (length n) gives the signs, defaulting to all '+'.
    """
    text = text.strip()
    cycles = _CYCLE_RE.findall(text)
    rest = _CYCLE_RE.sub("", text).strip()
    perm = list(range(n))
    for cyc in cycles:
        idx = [int(t) - 1 for t in cyc.replace(",", " ").split()]
        if any(i < 0 or i >= n for i in idx):
            raise ValueError(f"cycle index out of range in {text!r}")
        for a, b in zip(idx, idx[1:] + idx[:1]):
            perm[a] = b
    signs = [0] * n
    if rest:
        rest = rest.lstrip("|:")
        if len(rest) != n or any(c not in "+-" for c in rest):
            raise ValueError(f"sign string must be {n} characters of +/-")
        signs = [1 if c == "-" else 0 for c in rest]
    return SignedPerm(tuple(perm), tuple(signs), gtype)
