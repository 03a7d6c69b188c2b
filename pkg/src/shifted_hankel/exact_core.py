"""Exact arithmetic substrate: rationals, bivariate polynomials in {b, x},
truncated power series, and fraction-free determinants.

Matrices are plain sequences of rows; squareness is validated by the
determinant routines and the empty 0x0 determinant is 1 by convention.
All scalars are arbitrary-precision rationals (fractions.Fraction); floats
are rejected everywhere so no inexact value can enter a computation.
"""

from fractions import Fraction
from math import factorial, lcm
from typing import Iterable, Mapping, Sequence, Union

__all__ = [
    "B",
    "X",
    "Poly",
    "PowerSeries",
    "binom_poly",
    "det_exact",
    "det_poly",
    "series_mul",
    "series_reciprocal",
]

Scalar = Union[int, Fraction]


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"exact scalar required, got {type(value).__name__}")


class Poly:
    """Polynomial in the commuting variables b and x over the rationals.

    Immutable. Stored as a sparse map (x_degree, b_degree) -> coefficient
    with zero coefficients stripped, so equality is support equality.
    """

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs: Mapping = ()):
        c = {}
        for key, value in dict(coeffs).items():
            dx, db = key
            if not (isinstance(dx, int) and isinstance(db, int) and dx >= 0 and db >= 0):
                raise ValueError(f"bad exponent pair {key!r}")
            v = _as_fraction(value)
            if v:
                c[(dx, db)] = v
        self._c = c
        self._hash = None

    @classmethod
    def const(cls, value) -> "Poly":
        return cls({(0, 0): _as_fraction(value)})

    @classmethod
    def _raw(cls, c: dict) -> "Poly":
        p = object.__new__(cls)
        p._c = c
        p._hash = None
        return p

    # -- queries ---------------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._c

    @property
    def deg_x(self) -> int:
        return max((k[0] for k in self._c), default=-1)

    @property
    def deg_b(self) -> int:
        return max((k[1] for k in self._c), default=-1)

    def coeff(self, dx: int, db: int) -> Fraction:
        return self._c.get((dx, db), Fraction(0))

    def x_coefficient(self, dx: int) -> "Poly":
        """Coefficient of x^dx as a polynomial in b."""
        return Poly._raw(
            {(0, db): v for (d, db), v in self._c.items() if d == dx}
        )

    def terms(self):
        """Iterate (x_degree, b_degree, coefficient) in canonical order."""
        for dx, db in sorted(self._c, key=lambda k: (-k[0], -k[1])):
            yield dx, db, self._c[(dx, db)]

    def constant(self) -> Fraction:
        """The value of a constant polynomial; error if any variable occurs."""
        if not self._c:
            return Fraction(0)
        if set(self._c) != {(0, 0)}:
            raise ValueError(f"not a constant polynomial: {self.render()}")
        return self._c[(0, 0)]

    # -- ring operations -------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.const(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        c = dict(self._c)
        for key, value in other._c.items():
            s = c.get(key, 0) + value
            if s:
                c[key] = s
            else:
                c.pop(key, None)
        return Poly._raw(c)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw({k: -v for k, v in self._c.items()})

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
        out: dict = {}
        get = out.get
        for (xa, ba), va in self._c.items():
            for (xb, bb), vb in other._c.items():
                key = (xa + xb, ba + bb)
                s = get(key, 0) + va * vb
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        return Poly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = Poly.const(1)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self._c == other._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._c.items()))
        return self._hash

    def __bool__(self):
        return bool(self._c)

    # -- substitution ----------------------------------------------------

    def _x_slices(self):
        rows: dict = {}
        for (dx, db), v in self._c.items():
            rows.setdefault(dx, {})[(0, db)] = v
        return rows

    def subs(self, x=None, b=None) -> "Poly":
        """Substitute polynomials or exact scalars for x and/or b."""
        result = self
        if x is not None:
            result = result._subs_var(0, x)
        if b is not None:
            result = result._subs_var(1, b)
        return result

    def _subs_var(self, axis: int, value) -> "Poly":
        value = self._coerce(value)
        if value is None:
            raise TypeError("substitution value must be a Poly or exact scalar")
        slices: dict = {}
        for key, v in self._c.items():
            d = key[axis]
            other = key[1 - axis]
            rest_key = (0, other) if axis == 0 else (other, 0)
            slices.setdefault(d, {})[rest_key] = v
        if not slices:
            return Poly.const(0)
        acc = Poly.const(0)
        for d in range(max(slices), -1, -1):
            acc = acc * value
            if d in slices:
                acc = acc + Poly._raw(dict(slices[d]))
        return acc

    def shift_x(self, beta) -> "Poly":
        """x -> x + beta for an exact scalar beta."""
        return self._subs_var(0, _X + _as_fraction(beta))

    def compress_even_x(self) -> "Poly":
        """x^(2i) -> x^i; error if any odd-degree-in-x term is present."""
        out = {}
        for (dx, db), v in self._c.items():
            if dx % 2:
                raise ValueError("polynomial has odd-degree terms in x")
            out[(dx // 2, db)] = v
        return Poly._raw(out)

    def compress_odd_x(self) -> "Poly":
        """x^(2i+1) -> x^i; error if any even-degree-in-x term is present."""
        out = {}
        for (dx, db), v in self._c.items():
            if dx % 2 == 0:
                raise ValueError("polynomial has even-degree terms in x")
            out[((dx - 1) // 2, db)] = v
        return Poly._raw(out)

    def exact_div(self, divisor) -> "Poly":
        """Quotient self/divisor when the division is exact; error otherwise."""
        divisor = self._coerce(divisor)
        if divisor is None or divisor.is_zero:
            raise ZeroDivisionError("division by zero polynomial")
        if self.is_zero:
            return self
        quotient = _frac_div_exact(self._c, divisor._c)
        if quotient is None:
            raise ValueError("polynomial division is not exact")
        return Poly._raw(quotient)

    # -- rendering -------------------------------------------------------

    def render(self) -> str:
        """Canonical text form: descending x-degree, then descending b-degree."""
        if not self._c:
            return "0"
        pieces = []
        for dx, db in sorted(self._c, key=lambda k: (-k[0], -k[1])):
            coeff = self._c[(dx, db)]
            vars_part = "*".join(
                (f"{name}^{d}" if d > 1 else name)
                for name, d in (("b", db), ("x", dx))
                if d > 0
            )
            mag = abs(coeff)
            if not vars_part:
                body = str(mag)
            elif mag == 1:
                body = vars_part
            else:
                body = f"{mag}*{vars_part}"
            if not pieces:
                pieces.append(f"-{body}" if coeff < 0 else body)
            else:
                pieces.append(f"{' - ' if coeff < 0 else ' + '}{body}")
        return "".join(pieces)

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"Poly({self.render()})"


_X = Poly({(1, 0): 1})
X = _X
B = Poly({(0, 1): 1})


def _frac_div_exact(f: dict, g: dict):
    """Exact division of coefficient maps over Q; None if not exact.

    Dense synthetic division along x with coefficients in Q[b].
    """

    def by_xdeg(c):
        rows: dict = {}
        for (dx, db), v in c.items():
            rows.setdefault(dx, {})[db] = v
        return rows

    fx = by_xdeg(f)
    gx = by_xdeg(g)
    g_top = max(gx)
    g_lead = gx[g_top]
    f_top = max(fx)
    if f_top < g_top:
        return None
    rem = {dx: dict(cs) for dx, cs in fx.items()}
    quotient: dict = {}
    for dq in range(f_top - g_top, -1, -1):
        num = rem.get(dq + g_top)
        if not num:
            continue
        qb = _frac_div_exact_b(num, g_lead)
        if qb is None:
            return None
        for db, v in qb.items():
            quotient[(dq, db)] = v
        for dgx, gcs in gx.items():
            target = rem.setdefault(dq + dgx, {})
            for dgb, gv in gcs.items():
                for db, qv in qb.items():
                    key = dgb + db
                    s = target.get(key, 0) - qv * gv
                    if s:
                        target[key] = s
                    else:
                        target.pop(key, None)
    if any(cs for cs in rem.values()):
        return None
    return quotient


def _frac_div_exact_b(num: dict, den: dict):
    """Exact division of univariate b-coefficient maps over Q; None if not exact."""
    d_top = max(den)
    d_lead = den[d_top]
    rem = dict(num)
    quotient: dict = {}
    while rem:
        n_top = max(rem)
        if n_top < d_top:
            return None
        qc = rem[n_top] / d_lead
        dq = n_top - d_top
        quotient[dq] = qc
        for dd, dv in den.items():
            key = dq + dd
            s = rem.get(key, 0) - qc * dv
            if s:
                rem[key] = s
            else:
                rem.pop(key, None)
    return quotient


def binom_poly(argument, r: int) -> Poly:
    """Binomial coefficient C(argument, r) as a polynomial: the falling
    factorial argument*(argument-1)*...*(argument-r+1) divided by r!."""
    if not isinstance(r, int) or r < 0:
        raise ValueError("r must be a nonnegative integer")
    arg = argument if isinstance(argument, Poly) else Poly.const(argument)
    prod = Poly.const(1)
    for t in range(r):
        prod = prod * (arg - t)
    return prod * Fraction(1, factorial(r))


# ---------------------------------------------------------------------------
# determinants


def _validated_square(rows) -> list:
    out = [list(row) for row in rows]
    k = len(out)
    for row in out:
        if len(row) != k:
            raise ValueError("matrix is not square")
    return out


def det_exact(rows: Sequence[Sequence[Scalar]]) -> Fraction:
    """Exact determinant of a rational matrix via fraction-free Bareiss
    elimination after clearing row denominators."""
    m = _validated_square(rows)
    k = len(m)
    if k == 0:
        return Fraction(1)
    scale = 1
    im = []
    for row in m:
        fracs = [_as_fraction(v) for v in row]
        d = lcm(*(f.denominator for f in fracs)) if fracs else 1
        scale *= d
        im.append([int(f * d) for f in fracs])
    return Fraction(_bareiss_int(im), scale)


def _bareiss_int(m: list) -> int:
    k = len(m)
    sign = 1
    prev = 1
    for r in range(k - 1):
        if m[r][r] == 0:
            for i in range(r + 1, k):
                if m[i][r] != 0:
                    m[r], m[i] = m[i], m[r]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[r][r]
        for i in range(r + 1, k):
            head = m[i][r]
            row_i = m[i]
            row_r = m[r]
            for j in range(r + 1, k):
                row_i[j] = (pivot * row_i[j] - head * row_r[j]) // prev
            row_i[r] = 0
        prev = pivot
    return sign * m[k - 1][k - 1]


def det_poly(rows: Sequence[Sequence]) -> Poly:
    """Exact determinant of a polynomial matrix.

    Cofactor (Laplace) expansion with memoized column subsets for size <= 6;
    fraction-free Bareiss elimination over the polynomial ring, with exact
    division and column-swap pivoting, above that. Rows are scaled to integer
    coefficients first so the hot path works on integer maps.
    """
    m = _validated_square(rows)
    k = len(m)
    if k == 0:
        return Poly.const(1)
    scale = 1
    im = []
    for row in m:
        polys = []
        for entry in row:
            if isinstance(entry, Poly):
                polys.append(entry)
            else:
                polys.append(Poly.const(entry))
        denoms = [v.denominator for p in polys for v in p._c.values()]
        d = lcm(*denoms) if denoms else 1
        scale *= d
        im.append([{key: int(v * d) for key, v in p._c.items()} for p in polys])
    result = _det_ip_laplace(im) if k <= 6 else _det_ip_bareiss(im)
    return Poly({key: Fraction(v, scale) for key, v in result.items()})


def _ip_mul(a: dict, b: dict) -> dict:
    if len(a) < len(b):
        a, b = b, a
    out: dict = {}
    get = out.get
    b_items = list(b.items())
    for (xa, ba), va in a.items():
        for (xb, bb), vb in b_items:
            key = (xa + xb, ba + bb)
            s = get(key, 0) + va * vb
            if s:
                out[key] = s
            else:
                del out[key]
    return out


def _ip_sub(a: dict, b: dict) -> dict:
    out = dict(a)
    for key, v in b.items():
        s = out.get(key, 0) - v
        if s:
            out[key] = s
        else:
            out.pop(key, None)
    return out


def _ip_iadd(target: dict, term: dict) -> None:
    for key, v in term.items():
        s = target.get(key, 0) + v
        if s:
            target[key] = s
        else:
            target.pop(key, None)


def _det_ip_laplace(m: list) -> dict:
    k = len(m)
    states = {0: {(0, 0): 1}}
    for r in range(k):
        new_states: dict = {}
        for mask, minor in states.items():
            for j in range(k):
                bit = 1 << j
                if mask & bit:
                    continue
                entry = m[r][j]
                if not entry:
                    continue
                term = _ip_mul(minor, entry)
                if bin(mask >> (j + 1)).count("1") % 2:
                    term = {key: -v for key, v in term.items()}
                target = new_states.get(mask | bit)
                if target is None:
                    new_states[mask | bit] = term
                else:
                    _ip_iadd(target, term)
        states = new_states
        if not states:
            return {}
    return states.get((1 << k) - 1, {})


def _det_ip_bareiss(m: list) -> dict:
    k = len(m)
    sign = 1
    prev: dict = {(0, 0): 1}
    for r in range(k - 1):
        if not m[r][r]:
            for c in range(r + 1, k):
                if m[r][c]:
                    for row in m:
                        row[r], row[c] = row[c], row[r]
                    sign = -sign
                    break
            else:
                return {}
        pivot = m[r][r]
        trivial_prev = prev == {(0, 0): 1}
        for i in range(r + 1, k):
            head = m[i][r]
            for j in range(r + 1, k):
                num = _ip_mul(pivot, m[i][j])
                if head:
                    num = _ip_sub(num, _ip_mul(head, m[r][j]))
                m[i][j] = num if trivial_prev else _ip_div_exact(num, prev)
            m[i][r] = {}
        prev = pivot
    last = m[k - 1][k - 1]
    if sign < 0:
        last = {key: -v for key, v in last.items()}
    return last


def _ip_div_exact(f: dict, g: dict) -> dict:
    """Exact division in Z[b,x]; exactness is guaranteed by Bareiss theory
    and verified, with any violation reported as an internal error."""
    if not f:
        return {}
    fx: dict = {}
    for (dx, db), v in f.items():
        fx.setdefault(dx, {})[db] = v
    gx: dict = {}
    for (dx, db), v in g.items():
        gx.setdefault(dx, {})[db] = v
    g_top = max(gx)
    g_lead = gx[g_top]
    f_top = max(fx)
    quotient: dict = {}
    g_items = list(gx.items())
    for dq in range(f_top - g_top, -1, -1):
        num = fx.get(dq + g_top)
        if not num:
            continue
        qb = _ib_div_exact(num, g_lead)
        for db, v in qb.items():
            quotient[(dq, db)] = v
        for dgx, gcs in g_items:
            target = fx.setdefault(dq + dgx, {})
            for dgb, gv in gcs.items():
                for db, qv in qb.items():
                    key = dgb + db
                    s = target.get(key, 0) - qv * gv
                    if s:
                        target[key] = s
                    else:
                        del target[key]
    if any(cs for cs in fx.values()):
        raise ArithmeticError("internal error: polynomial division not exact")
    return quotient


def _ib_div_exact(num: dict, den: dict) -> dict:
    d_top = max(den)
    d_lead = den[d_top]
    rem = dict(num)
    quotient: dict = {}
    den_items = list(den.items())
    while rem:
        n_top = max(rem)
        if n_top < d_top:
            raise ArithmeticError("internal error: polynomial division not exact")
        qc, leftover = divmod(rem[n_top], d_lead)
        if leftover:
            raise ArithmeticError("internal error: polynomial division not exact")
        dq = n_top - d_top
        quotient[dq] = qc
        for dd, dv in den_items:
            key = dq + dd
            s = rem.get(key, 0) - qc * dv
            if s:
                rem[key] = s
            else:
                rem.pop(key, None)
    return quotient


# ---------------------------------------------------------------------------
# truncated power series


class PowerSeries:
    """Power series truncated at a fixed order N: coefficients of x^0..x^(N-1).

    Operations require matching orders; mismatches are errors, never silent
    retruncation.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Scalar]):
        cs = tuple(_as_fraction(c) for c in coeffs)
        if not cs:
            raise ValueError("series order must be at least 1")
        self._coeffs = cs

    @property
    def order(self) -> int:
        return len(self._coeffs)

    @property
    def coeffs(self) -> tuple:
        return self._coeffs

    def coeff(self, i: int) -> Fraction:
        return self._coeffs[i]

    def _check_order(self, other: "PowerSeries"):
        if self.order != other.order:
            raise ValueError(
                f"series order mismatch: {self.order} vs {other.order}"
            )

    def __add__(self, other):
        if isinstance(other, PowerSeries):
            self._check_order(other)
            return PowerSeries(a + b for a, b in zip(self._coeffs, other._coeffs))
        return NotImplemented

    def __sub__(self, other):
        if isinstance(other, PowerSeries):
            self._check_order(other)
            return PowerSeries(a - b for a, b in zip(self._coeffs, other._coeffs))
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, PowerSeries):
            self._check_order(other)
            n = self.order
            out = [Fraction(0)] * n
            for i, a in enumerate(self._coeffs):
                if not a:
                    continue
                for j in range(n - i):
                    bj = other._coeffs[j]
                    if bj:
                        out[i + j] += a * bj
            return PowerSeries(out)
        if isinstance(other, (int, Fraction)):
            s = _as_fraction(other)
            return PowerSeries(s * c for c in self._coeffs)
        return NotImplemented

    __rmul__ = __mul__

    def reciprocal(self) -> "PowerSeries":
        if self._coeffs[0] == 0:
            raise ValueError("non-unit series has no reciprocal")
        inv0 = 1 / self._coeffs[0]
        out = [inv0]
        for n in range(1, self.order):
            acc = Fraction(0)
            for i in range(1, n + 1):
                if self._coeffs[i]:
                    acc += self._coeffs[i] * out[n - i]
            out.append(-inv0 * acc)
        return PowerSeries(out)

    def __eq__(self, other):
        if isinstance(other, PowerSeries):
            return self._coeffs == other._coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self._coeffs)

    def __repr__(self):
        return f"PowerSeries({list(self._coeffs)!r})"


def series_mul(a: PowerSeries, b: PowerSeries) -> PowerSeries:
    """Cauchy product truncated at the shared order."""
    return a * b


def series_reciprocal(a: PowerSeries) -> PowerSeries:
    """Multiplicative inverse of a unit series, same order."""
    return a.reciprocal()
