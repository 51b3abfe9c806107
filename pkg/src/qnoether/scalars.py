"""Exact arithmetic in Q(q) and in rational-function fields Q(q)(x_1..x_v).

A scalar is kept in partially factored form

    q^e * nc * P_1^{a_1} ... P_r^{a_r}  /  (dc * Q_1^{b_1} ... Q_s^{b_s})

with integer contents nc, dc (dc > 0) and canonical primitive polynomial
factors P_i, Q_j over Z in q and the v base variables.  Canonical factors
are primitive, have positive leading coefficient and per-slot minimum
exponent 0 (extracted q-powers move into the unit e, monomial and content
parts into their own slots).

Polynomials are dicts from packed exponent keys to nonzero ints.  A key
packs the exponents (e_q, e_x1, ..., e_xv) into one int, 16 bits per slot
with the q-slot lowest and biased by 2^15 so q-shift substitutions can pass
through negative powers; monomial multiplication is then a single integer
addition.  Public constructors and the .num/.den views speak ordinary
exponent-tuple dicts.

Products, powers, inverses and q-shift substitutions are multiset
operations on the factor lists and never expand anything; sums group
pieces that agree up to a q-power (where q-commutator arithmetic cancels),
expand once over each distinct denominator, and meet in a final factored
lcm.  No multivariate gcd is computed: denominator factors are cancelled
by cheap exact-division attempts, and equality falls back to
cross-multiplication.

q is a formal transcendental and is never specialized in symbolic mode.
"""

from __future__ import annotations

import heapq
from fractions import Fraction
from math import gcd

SLOT = 16
MASK = (1 << SLOT) - 1
QBIAS = 1 << (SLOT - 1)

Key = int  # packed exponents
Poly = dict  # Key -> int, no zero values


def pack(exps: tuple[int, ...]) -> Key:
    """Pack (e_q, e_x1, ..., e_xv) into one int key."""
    k = exps[0] + QBIAS
    for i in range(1, len(exps)):
        k |= exps[i] << (SLOT * i)
    return k


def unpack(k: Key, width: int) -> tuple[int, ...]:
    out = [(k & MASK) - QBIAS]
    for _ in range(width - 1):
        k >>= SLOT
        out.append(k & MASK)
    return tuple(out)


def encode_poly(p: dict, width: int | None = None) -> Poly:
    return {pack(e): c for e, c in p.items()}


def decode_poly(p: Poly, width: int) -> dict:
    return {unpack(k, width): c for k, c in p.items()}


def padd(a: Poly, b: Poly) -> Poly:
    if not a:
        return dict(b)
    if not b:
        return dict(a)
    out = dict(a)
    for e, c in b.items():
        s = out.get(e, 0) + c
        if s:
            out[e] = s
        else:
            del out[e]
    return out


def pneg(a: Poly) -> Poly:
    return {e: -c for e, c in a.items()}


def pmul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return {}
    if len(a) > len(b):
        a, b = b, a
    out: Poly = {}
    get = out.get
    bitems = list(b.items())
    for ea, ca in a.items():
        base = ea - QBIAS
        for eb, cb in bitems:
            k = base + eb
            s = get(k, 0) + ca * cb
            if s:
                out[k] = s
            else:
                del out[k]
    return out


def pscale(a: Poly, c: int) -> Poly:
    if c == 0:
        return {}
    if c == 1:
        return dict(a)
    return {e: cc * c for e, cc in a.items()}


def _qshift_key(k: Key, d: int) -> Key:
    return k + d  # the q-slot is the lowest field


def _slots_ge(ka: Key, kb: Key, width: int) -> bool:
    for _ in range(width):
        if (ka & MASK) < (kb & MASK):
            return False
        ka >>= SLOT
        kb >>= SLOT
    return True


def pdiv_exact(a: Poly, b: Poly, width: int) -> Poly | None:
    """Quotient a/b when b divides a exactly over Z, else None.

    Long division in the packed-key order (lex from the highest variable
    down, an admissible monomial order), driven by a lazy max-heap; fresh
    keys from a subtraction are always smaller than the term that produced
    them.  Bails out on the first failing leading term.
    """
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if not a:
        return {}
    lead_b = max(b)
    cb = b[lead_b]
    bi = [(e, c) for e, c in b.items() if e != lead_b]
    rem = dict(a)
    quot: Poly = {}
    heap = [-k for k in rem]
    heapq.heapify(heap)
    pop = heapq.heappop
    push = heapq.heappush
    while heap:
        lt = -pop(heap)
        c = rem.get(lt)
        if c is None:
            continue
        if not _slots_ge(lt, lead_b, width):
            return None
        if c % cb:
            return None
        diff = lt - lead_b + QBIAS
        k = c // cb
        quot[diff] = k
        del rem[lt]
        base = diff - QBIAS
        for e, cc in bi:
            ne = base + e
            old = rem.get(ne)
            nv = (old if old is not None else 0) - k * cc
            if nv:
                rem[ne] = nv
                if old is None:
                    push(heap, -ne)
            else:
                del rem[ne]
    return quot if not rem else None


def _content(a: Poly) -> int:
    g = 0
    for c in a.values():
        g = gcd(g, c)
        if g == 1:
            return 1
    return g


_INTERN: dict = {}
_NODIV: set = set()
_DIVCACHE: dict = {}


def _freeze(p: Poly):
    fr = tuple(sorted(p.items()))
    return _INTERN.setdefault(fr, fr)


def _thaw(fr) -> Poly:
    return dict(fr)


def _try_factor_div(nfr, dfr, width: int):
    """Memoized exact division of one interned factor by another.

    Divisibility is a mathematical fact about the pair, so both failures and
    quotients are cached for the lifetime of the process (factor tuples are
    interned, making id-based keys stable).
    """
    key = (id(nfr), id(dfr))
    if key in _NODIV:
        return None
    hit = _DIVCACHE.get(key)
    if hit is not None:
        return hit
    # frozen factors are sorted, so the leading key is the last entry
    if not _slots_ge(nfr[-1][0], dfr[-1][0], width):
        _NODIV.add(key)
        return None
    if len(dfr) == 2 and dfr[1][1] == 1 and not _binomial_divides(nfr, dfr, width):
        _NODIV.add(key)
        return None
    quot = pdiv_exact(_thaw(nfr), _thaw(dfr), width)
    if quot is None:
        _NODIV.add(key)
        return None
    _DIVCACHE[key] = quot
    return quot


def _binomial_divides(nfr, dfr, width: int) -> bool:
    """Divisibility by a monic binomial via the rewrite x^a -> -c2 x^b.

    Canonical binomial factors have disjoint monomial supports, so each term
    rewrites in one step: linear in the size of the candidate numerator.
    """
    (k2, c2), (k1, _) = dfr
    delta = k1 - k2
    lead = unpack(k1, width)
    supp = [(SLOT * s, a_s, QBIAS if s == 0 else 0) for s, a_s in enumerate(lead) if a_s > 0]
    acc: dict = {}
    for k, c in nfr:
        t = min(
            (((k >> sh) & MASK) - bias) // a_s for sh, a_s, bias in supp
        )
        if t <= 0:
            nv = acc.get(k, 0) + c
            nk = k
        else:
            nk = k - t * delta
            nv = acc.get(nk, 0) + c * (-c2) ** t
        if nv:
            acc[nk] = nv
        else:
            del acc[nk]
    return not acc


def _grlex_key(e: tuple) -> tuple:
    return (sum(e), e)


def _canon_factor(p: Poly, width: int):
    """Split a nonzero poly into (q-power, monomial key or None, content, canonical).

    canonical is None when nothing but a monomial remains.  The content
    carries the sign; the canonical factor has positive leading coefficient,
    content 1 and per-slot minimum exponent 0.
    """
    mins = None
    for k in p:
        e = unpack(k, width)
        if mins is None:
            mins = list(e)
        else:
            for i, x in enumerate(e):
                if x < mins[i]:
                    mins[i] = x
    shift = pack(tuple(mins)) - QBIAS
    if shift:
        p = {k - shift: c for k, c in p.items()}
    qext = mins[0]
    mono_key = None
    if any(mins[1:]):
        mono_key = pack((0,) + tuple(mins[1:]))
    content = _content(p)
    if p[max(p)] < 0:
        content = -content
    if content != 1:
        p = {e: c // content for e, c in p.items()}
    if p == {QBIAS: 1}:
        return qext, mono_key, content, None
    return qext, mono_key, content, p


class RatFn:
    """A rational function over Q(q) in partially factored normal form."""

    __slots__ = ("varcount", "e", "nc", "dc", "nf", "df", "_numview", "_denview")

    def __init__(self, num: dict | None, den: dict | None, varcount: int, _raw=None):
        if _raw is not None:
            self.varcount, self.e, self.nc, self.dc, self.nf, self.df = _raw
            self._numview = None
            self._denview = None
            return
        if den is not None and not den:
            raise ZeroDivisionError("zero denominator")
        nfac = [(encode_poly(num), 1)] if num else []
        dfac = [(encode_poly(den), 1)] if den else []
        built = _assemble(varcount, 0, 1 if num else 0, 1, nfac, dfac, divcancel=True)
        self.varcount, self.e, self.nc, self.dc, self.nf, self.df = built
        self._numview = None
        self._denview = None

    # -- constructors ------------------------------------------------------

    @classmethod
    def _build(cls, varcount, e, nc, dc, nfac, dfac, divcancel=False) -> RatFn:
        return cls(
            None, None, varcount,
            _raw=_assemble(varcount, e, nc, dc, nfac, dfac, divcancel=divcancel),
        )

    @classmethod
    def const(cls, c: int | Fraction, varcount: int = 0) -> RatFn:
        c = Fraction(c)
        if c.numerator == 0:
            return cls(None, None, varcount, _raw=(varcount, 0, 0, 1, (), ()))
        return cls(
            None, None, varcount, _raw=(varcount, 0, c.numerator, c.denominator, (), ())
        )

    @classmethod
    def qpow(cls, k: int, varcount: int = 0) -> RatFn:
        return cls(None, None, varcount, _raw=(varcount, k, 1, 1, (), ()))

    @classmethod
    def var(cls, j: int, varcount: int) -> RatFn:
        """The base variable x_j, 1-based."""
        if not 1 <= j <= varcount:
            raise ValueError(f"variable index {j} out of range for varcount {varcount}")
        key = QBIAS | (1 << (SLOT * j))
        fr = ((key, 1),)
        return cls(None, None, varcount, _raw=(varcount, 0, 1, 1, ((fr, 1),), ()))

    @classmethod
    def monomial(cls, exps: tuple[int, ...], varcount: int, coeff: int = 1, qexp: int = 0) -> RatFn:
        """coeff * q^qexp * x^exps with exps of length varcount (may be negative)."""
        if len(exps) != varcount:
            raise ValueError("exponent vector length mismatch")
        up = tuple(max(x, 0) for x in exps)
        down = tuple(max(-x, 0) for x in exps)
        nfac = [({pack((0,) + up): 1}, 1)] if any(up) else []
        dfac = [({pack((0,) + down): 1}, 1)] if any(down) else []
        return cls._build(varcount, qexp, coeff, 1, nfac, dfac)

    def lift(self, varcount: int) -> RatFn:
        """Embed a value into a ring with more base variables (keys extend by zeros)."""
        if varcount == self.varcount:
            return self
        if varcount < self.varcount:
            raise ValueError("cannot lower varcount")
        return RatFn(
            None,
            None,
            varcount,
            _raw=(varcount, self.e, self.nc, self.dc, self.nf, self.df),
        )

    # -- expanded views ------------------------------------------------------

    def _expanded(self, fs, unit_q: int, content: int) -> dict:
        p = {QBIAS: content}
        for fr, m in sorted(fs, key=lambda fm: len(fm[0])):
            fp = _thaw(fr)
            for _ in range(m):
                p = pmul(p, fp)
        if unit_q:
            p = {k + unit_q: c for k, c in p.items()}
        return decode_poly(p, self.varcount + 1)

    @property
    def num(self) -> dict:
        """Expanded numerator as an exponent-tuple dict (q^e folded in when e >= 0)."""
        if self._numview is None:
            if self.nc == 0:
                self._numview = {}
            else:
                self._numview = self._expanded(self.nf, max(self.e, 0), self.nc)
        return self._numview

    @property
    def den(self) -> dict:
        """Expanded denominator as an exponent-tuple dict (q^-e folded in when e < 0)."""
        if self._denview is None:
            self._denview = self._expanded(self.df, max(-self.e, 0), self.dc)
        return self._denview

    # -- predicates --------------------------------------------------------

    def is_zero(self) -> bool:
        return self.nc == 0

    def vanishes_at_base(self) -> bool:
        return self.nc == 0

    def is_one(self) -> bool:
        return (
            self.e == 0 and self.nc == 1 and self.dc == 1 and not self.nf and not self.df
        )

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, RatFn):
            if other.varcount == self.varcount:
                return other
            if other.varcount == 0:
                return other.lift(self.varcount)
            if self.varcount == 0:
                return other
            raise ValueError(
                f"varcount mismatch: {self.varcount} vs {other.varcount}"
            )
        if isinstance(other, (int, Fraction)):
            return RatFn.const(other, self.varcount)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.varcount == 0 and other.varcount > 0:
            return other + self
        if self.nc == 0:
            return other
        if other.nc == 0:
            return self
        return rat_sum([self, other])

    __radd__ = __add__

    def __neg__(self):
        return RatFn(
            None,
            None,
            self.varcount,
            _raw=(self.varcount, self.e, -self.nc, self.dc, self.nf, self.df),
        )

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.varcount == 0 and other.varcount > 0:
            return other * self
        if self.nc == 0 or other.nc == 0:
            return RatFn.const(0, self.varcount)
        if not other.nf and not other.df:
            # scalar: only the unit data changes
            g = gcd(self.nc * other.nc, self.dc * other.dc)
            return RatFn(
                None,
                None,
                self.varcount,
                _raw=(
                    self.varcount,
                    self.e + other.e,
                    self.nc * other.nc // g,
                    self.dc * other.dc // g,
                    self.nf,
                    self.df,
                ),
            )
        nfac = _ms_merge(dict(self.nf), dict(other.nf))
        dfac = _ms_merge(dict(self.df), dict(other.df))
        return RatFn._build(
            self.varcount,
            self.e + other.e,
            self.nc * other.nc,
            self.dc * other.dc,
            [(_thaw(fr), m) for fr, m in nfac.items()],
            [(_thaw(fr), m) for fr, m in dfac.items()],
        )

    __rmul__ = __mul__

    def inverse(self) -> RatFn:
        if self.nc == 0:
            raise ZeroDivisionError("inverse of zero rational function")
        nc, dc = self.dc, self.nc
        if dc < 0:
            nc, dc = -nc, -dc
        return RatFn(
            None,
            None,
            self.varcount,
            _raw=(self.varcount, -self.e, nc, dc, self.df, self.nf),
        )

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        if self.varcount == 0 and other.varcount > 0:
            return self.lift(other.varcount) / other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other / self

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        if k == 0:
            return RatFn.const(1, self.varcount)
        if self.nc == 0:
            return self
        return RatFn._build(
            self.varcount,
            self.e * k,
            self.nc**k,
            self.dc**k,
            [(_thaw(fr), m * k) for fr, m in self.nf],
            [(_thaw(fr), m * k) for fr, m in self.df],
        )

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = RatFn.const(other, self.varcount)
        if not isinstance(other, RatFn):
            return NotImplemented
        if other.varcount != self.varcount:
            if other.varcount == 0:
                other = other.lift(self.varcount)
            elif self.varcount == 0:
                return other == self
            else:
                raise ValueError("varcount mismatch in equality test")
        if (
            self.e == other.e
            and self.nc == other.nc
            and self.dc == other.dc
            and self.nf == other.nf
            and self.df == other.df
        ):
            return True
        return (self - other).nc == 0

    __hash__ = None  # mathematical equality is not hash-compatible

    # -- q-shift substitution ---------------------------------------------

    def qshift(self, alpha: tuple[int, ...]) -> RatFn:
        """Substitute x_j -> q^alpha_j * x_j for every base variable."""
        if len(alpha) != self.varcount:
            raise ValueError("shift vector length mismatch")
        if not any(alpha) or self.nc == 0:
            return self
        live = [(j, a) for j, a in enumerate(alpha, start=1) if a]

        def shift_poly(p: Poly) -> Poly:
            out = {}
            for k, c in p.items():
                d = 0
                for j, a in live:
                    d += a * ((k >> (SLOT * j)) & MASK)
                out[k + d] = c
            return out

        def shift_factors(fs):
            out = []
            e_delta = 0
            for fr, m in fs:
                # factors keep per-slot minimum 0; extract the shifted q-power
                p = shift_poly(_thaw(fr))
                mq = min(k & MASK for k in p) - QBIAS
                if mq:
                    p = {k - mq: c for k, c in p.items()}
                e_delta += mq * m
                out.append((_freeze(p), m))
            return tuple(sorted(out)), e_delta

        nf, d1 = shift_factors(self.nf)
        df, d2 = shift_factors(self.df)
        return RatFn(
            None,
            None,
            self.varcount,
            _raw=(self.varcount, self.e + d1 - d2, self.nc, self.dc, nf, df),
        )

    # -- relabeling and monomial substitution --------------------------------

    def relabel(self, perm, signs) -> RatFn:
        """x_j -> (-1)^signs[j] x_{perm(j)} (0-based argument arrays)."""
        width = self.varcount + 1

        def conv(p: Poly) -> Poly:
            out = {}
            for k, c in p.items():
                e = unpack(k, width)
                ne = [0] * width
                ne[0] = e[0]
                neg = 0
                for j, xe in enumerate(e[1:]):
                    ne[perm[j] + 1] = xe
                    if signs[j] and xe % 2:
                        neg ^= 1
                key = pack(tuple(ne))
                out[key] = out.get(key, 0) + (-c if neg else c)
            return {e: c for e, c in out.items() if c}

        nfac = [(conv(_thaw(fr)), m) for fr, m in self.nf]
        dfac = [(conv(_thaw(fr)), m) for fr, m in self.df]
        return RatFn._build(self.varcount, self.e, self.nc, self.dc, nfac, dfac)

    def substitute_monomials(self, target_v: int, xmap) -> RatFn:
        """x_j -> sign * x_sigma(j)^power with xmap[j-1] = (sigma(j), power, sign)."""
        width = self.varcount + 1

        def conv(p: Poly) -> Poly:
            out = {}
            for k, c in p.items():
                e = unpack(k, width)
                ne = [0] * (target_v + 1)
                ne[0] = e[0]
                neg = 0
                for j, xe in enumerate(e[1:]):
                    if xe:
                        sj, pw, s = xmap[j]
                        ne[sj] += pw * xe
                        if s < 0 and xe % 2:
                            neg ^= 1
                key = pack(tuple(ne))
                out[key] = out.get(key, 0) + (-c if neg else c)
            return {e: c for e, c in out.items() if c}

        nfac = [(conv(_thaw(fr)), m) for fr, m in self.nf]
        dfac = [(conv(_thaw(fr)), m) for fr, m in self.df]
        return RatFn._build(target_v, self.e, self.nc, self.dc, nfac, dfac)

    # -- evaluation (random-eval mode support) ------------------------------

    def eval_at(self, qval: Fraction, xvals: tuple[Fraction, ...]) -> Fraction:
        if len(xvals) != self.varcount:
            raise ValueError("evaluation point length mismatch")
        width = self.varcount + 1
        den = Fraction(self.dc)
        for fr, m in self.df:
            v = _peval(_thaw(fr), qval, xvals, width)
            if v == 0:
                raise ZeroDivisionError("denominator vanishes at sample point")
            den *= v**m
        num = Fraction(self.nc)
        for fr, m in self.nf:
            num *= _peval(_thaw(fr), qval, xvals, width) ** m
        return qval**self.e * num / den

    # -- printing / serialization -------------------------------------------

    def qrat_str(self) -> str:
        """Serialize a varcount-0 value as "(num)/(den)" in ascending q powers."""
        if self.varcount != 0:
            raise ValueError("qrat_str requires varcount 0")
        return f"({_qpoly_str(self.num)})/({_qpoly_str(self.den)})"

    def to_json(self) -> dict:
        """x-grouped form {num: [{exp, coeff}], den: [...]} with QRat coeff strings."""
        return {"num": _poly_json(self.num), "den": _poly_json(self.den)}

    def text(self, names: list[str] | None = None) -> str:
        names = names or [f"x{j}" for j in range(1, self.varcount + 1)]
        n = _poly_str(self.num, names)
        if self.den == {(0,) * (self.varcount + 1): 1}:
            return n
        return f"({n})/({_poly_str(self.den, names)})"

    def __repr__(self):
        return f"RatFn({self.text()})"


# The spec-facing names: QRat is the varcount-0 case of the same structure.
QRat = RatFn
MultiRat = RatFn


def rat_sum(values: list[RatFn]) -> RatFn:
    """Sum many fractions at once, exploiting shared structure.

    Pieces differing only by sign and a q-power collapse into a single piece
    with a small q-polynomial cofactor (this is where q-commutator identities
    cancel, without ever expanding); pieces over the same denominator are
    expanded once and added; the few surviving denominators meet in a final
    factored lcm.
    """
    values = [v for v in values if v.nc != 0]
    if not values:
        raise ValueError("rat_sum needs at least one value to know the ring")
    v = values[0].varcount
    if len(values) == 1:
        return values[0]
    # phase 1: identical factor data up to q-power and content
    groups: dict = {}
    for f in values:
        groups.setdefault((f.nf, f.df), []).append(f)
    pieces = []
    for (nf, df), members in groups.items():
        if len(members) == 1:
            pieces.append(members[0])
            continue
        emin = min(f.e for f in members)
        dc_l = 1
        for f in members:
            dc_l = dc_l * f.dc // gcd(dc_l, f.dc)
        qpoly: Poly = {}
        for f in members:
            key = QBIAS + f.e - emin
            c = qpoly.get(key, 0) + f.nc * (dc_l // f.dc)
            if c:
                qpoly[key] = c
            else:
                del qpoly[key]
        if not qpoly:
            continue
        pieces.append(
            RatFn._build(
                v,
                emin,
                1,
                dc_l,
                [(_thaw(fr), m) for fr, m in nf] + [(qpoly, 1)],
                [(_thaw(fr), m) for fr, m in df],
            )
        )
    if not pieces:
        return RatFn.const(0, v)
    if len(pieces) == 1:
        return pieces[0]
    # phase 2: expand numerators over each distinct denominator
    bydf: dict = {}
    for f in pieces:
        bydf.setdefault((f.df, f.dc), []).append(f)
    merged = []
    for (df, dc), members in bydf.items():
        emin = min(f.e for f in members)
        total: Poly = {}
        for f in members:
            total = padd(total, _expand_num(f, emin))
        if total:
            merged.append((emin, dc, total, df))
    if not merged:
        return RatFn.const(0, v)
    # phase 3: lcm of the surviving denominators
    dlcm: dict = {}
    dc_lcm = 1
    for emin, dc, total, df in merged:
        dlcm = _ms_max(dlcm, dict(df))
        dc_lcm = dc_lcm * dc // gcd(dc_lcm, dc)
    emin_all = min(m[0] for m in merged)
    grand: Poly = {}
    for emin, dc, total, df in merged:
        p = total
        scale = dc_lcm // dc
        if scale != 1:
            p = pscale(p, scale)
        own = dict(df)
        for fr, m in sorted(dlcm.items(), key=lambda fm: len(fm[0])):
            extra = m - own.get(fr, 0)
            if extra:
                fp = _thaw(fr)
                for _ in range(extra):
                    p = pmul(p, fp)
        if emin != emin_all:
            d = emin - emin_all
            p = {k + d: c for k, c in p.items()}
        grand = padd(grand, p)
    if not grand:
        return RatFn.const(0, v)
    return RatFn._build(
        v, emin_all, 1, dc_lcm, [(grand, 1)],
        [(_thaw(fr), m) for fr, m in dlcm.items()], divcancel=True,
    )


def _expand_num(f: RatFn, emin: int) -> Poly:
    """Expanded numerator of f, with its q-unit taken relative to emin."""
    p = {QBIAS: f.nc}
    for fr, m in sorted(f.nf, key=lambda fm: len(fm[0])):
        fp = _thaw(fr)
        for _ in range(m):
            p = pmul(p, fp)
    if f.e != emin:
        d = f.e - emin
        p = {k + d: c for k, c in p.items()}
    return p


def _ms_merge(a: dict, b: dict) -> dict:
    out = dict(a)
    for k, m in b.items():
        out[k] = out.get(k, 0) + m
    return out


def _ms_max(a: dict, b: dict) -> dict:
    out = dict(a)
    for k, m in b.items():
        if out.get(k, 0) < m:
            out[k] = m
    return out


def _assemble(varcount, e, nc, dc, nfac, dfac, divcancel=False):
    """Normalize raw factor data into the canonical tuple."""
    if nc == 0:
        return (varcount, 0, 0, 1, (), ())
    width = varcount + 1
    nset: dict = {}
    dset: dict = {}
    for raw, m in nfac:
        if m == 0:
            continue
        if not raw:
            return (varcount, 0, 0, 1, (), ())
        qext, mono, content, canon = _canon_factor(raw, width)
        e += qext * m
        nc *= content**m
        if mono is not None:
            key = _freeze({mono: 1})
            nset[key] = nset.get(key, 0) + m
        if canon is not None:
            fr = _freeze(canon)
            nset[fr] = nset.get(fr, 0) + m
    for raw, m in dfac:
        if m == 0:
            continue
        if not raw:
            raise ZeroDivisionError("zero denominator factor")
        qext, mono, content, canon = _canon_factor(raw, width)
        e -= qext * m
        dc *= content**m
        if mono is not None:
            key = _freeze({mono: 1})
            dset[key] = dset.get(key, 0) + m
        if canon is not None:
            fr = _freeze(canon)
            dset[fr] = dset.get(fr, 0) + m
    # structural cancellation
    for fr in list(nset):
        if fr in dset:
            m = min(nset[fr], dset[fr])
            nset[fr] -= m
            dset[fr] -= m
            if not nset[fr]:
                del nset[fr]
            if not dset[fr]:
                del dset[fr]
    # exact-division cancellation of the remaining denominator factors
    if divcancel and dset and nset:
        e_delta, nc_mult = _cross_cancel(nset, dset, width)
        e += e_delta
        nc *= nc_mult
    if dc < 0:
        nc, dc = -nc, -dc
    g = gcd(nc, dc)
    if g > 1:
        nc //= g
        dc //= g
    return (
        varcount,
        e,
        nc,
        dc,
        tuple(sorted(nset.items())),
        tuple(sorted(dset.items())),
    )


def _cross_cancel(nset: dict, dset: dict, width: int) -> tuple[int, int]:
    """Divide numerator factors by denominator factors where exact, in place.

    One copy is cancelled per round and the quotient's canonical pieces are
    fed back, so higher multiplicities are handled by iteration.  Returns
    the (q-power, integer content) adjustments extracted along the way.
    """
    e_delta = 0
    nc_mult = 1
    progress = True
    while progress and nset and dset:
        progress = False
        for dfr in list(dset):
            if dfr not in dset:
                continue
            for nfr in list(nset):
                if nfr not in nset:
                    continue
                if len(nfr) < len(dfr):
                    continue
                quot = _try_factor_div(nfr, dfr, width)
                if quot is None:
                    continue
                nset[nfr] -= 1
                if not nset[nfr]:
                    del nset[nfr]
                dset[dfr] -= 1
                if not dset[dfr]:
                    del dset[dfr]
                qext, mono, content, canon = _canon_factor(quot, width)
                e_delta += qext
                nc_mult *= content
                if mono is not None:
                    key = _freeze({mono: 1})
                    nset[key] = nset.get(key, 0) + 1
                if canon is not None:
                    key = _freeze(canon)
                    nset[key] = nset.get(key, 0) + 1
                progress = True
                break
            if progress:
                break
    return e_delta, nc_mult


def _peval(p: Poly, qval: Fraction, xvals: tuple[Fraction, ...], width: int) -> Fraction:
    total = Fraction(0)
    for k, c in p.items():
        e = unpack(k, width)
        term = Fraction(c) * qval ** e[0]
        for j, xe in enumerate(e[1:]):
            if xe:
                term *= xvals[j] ** xe
        total += term
    return total


def _qpoly_str(p: dict) -> str:
    if not p:
        return "0"
    parts = []
    for e in sorted(p, key=_grlex_key):
        c = p[e]
        k = e[0]
        if k == 0:
            text = str(abs(c))
        else:
            base = "q" if k == 1 else f"q^{k}"
            text = base if abs(c) == 1 else f"{abs(c)}*{base}"
        if not parts:
            parts.append(("-" if c < 0 else "") + text)
        else:
            parts.append(("-" if c < 0 else "+") + text)
    return "".join(parts)


def _poly_str(p: dict, names: list[str]) -> str:
    if not p:
        return "0"
    parts = []
    for e in sorted(p, key=lambda k: (sum(k[1:]), k[1:], k[0])):
        c = p[e]
        factors = []
        if e[0]:
            factors.append("q" if e[0] == 1 else f"q^{e[0]}")
        for j, xe in enumerate(e[1:]):
            if xe:
                factors.append(names[j] if xe == 1 else f"{names[j]}^{xe}")
        if not factors:
            text = str(abs(c))
        elif abs(c) == 1:
            text = "*".join(factors)
        else:
            text = "*".join([str(abs(c))] + factors)
        if not parts:
            parts.append(("-" if c < 0 else "") + text)
        else:
            parts.append((" - " if c < 0 else " + ") + text)
    return "".join(parts)


def _poly_json(p: dict) -> list[dict]:
    groups: dict[tuple, dict] = {}
    for e, c in p.items():
        groups.setdefault(e[1:], {})[(e[0],)] = c
    out = []
    for xe in sorted(groups, key=lambda k: (sum(k), k)):
        qp = groups[xe]
        out.append({"exp": list(xe), "coeff": f"({_qpoly_str(qp)})/(1)"})
    return out


# -- spec-level operation wrappers ------------------------------------------


def qrat_arith(op: str, a: RatFn, b: RatFn) -> RatFn:
    """Field arithmetic in Q(q); op is one of add, sub, mul, div."""
    return mrat_arith(op, a, b)


def mrat_arith(op: str, f: RatFn, g: RatFn | None = None) -> RatFn:
    if op == "neg":
        return -f
    if g is None:
        raise ValueError("binary operation needs two operands")
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    if op == "div":
        if g.is_zero():
            raise ZeroDivisionError("division by zero rational function")
        return f / g
    raise ValueError(f"unknown operation {op!r}")


def mrat_eq(f: RatFn, g: RatFn) -> bool:
    """Exact equality of rational functions via cross-multiplication."""
    return f == g


def qshift_substitute(f, alpha: tuple[int, ...]):
    """x_j -> q^alpha_j x_j applied to any value exposing .qshift()."""
    return f.qshift(tuple(alpha))


def div_exact(a: dict, b: dict) -> dict | None:
    """Exact division of exponent-tuple polynomials (None when not a factor)."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if not a:
        return {}
    width = len(next(iter(a)))
    out = pdiv_exact(encode_poly(a), encode_poly(b), width)
    return None if out is None else decode_poly(out, width)


def parse_qrat(text: str) -> RatFn:
    """Parse simple q-power expressions: "q", "q^4", "q^-2", "1", "3"."""
    text = text.strip()
    if text in ("q", "+q"):
        return RatFn.qpow(1)
    if text.startswith("q^"):
        return RatFn.qpow(int(text[2:]))
    return RatFn.const(int(text))
