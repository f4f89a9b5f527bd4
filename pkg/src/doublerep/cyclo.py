"""Exact scalars in cyclotomic fields Q(zeta_N).

An element is stored in the power basis 1, z, ..., z^(phi(N)-1) of
Q(zeta_N), z = primitive N-th root of unity, with Fraction coefficients
reduced modulo the N-th cyclotomic polynomial.  Arithmetic coerces mixed
orders to the lcm.  No floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd

ZERO = Fraction(0)
ONE = Fraction(1)


def _poly_divide_exact(num: list[int], den: tuple[int, ...]) -> list[int]:
    # den is monic; division is exact by construction
    num = list(num)
    dd = len(den) - 1
    out = [0] * (len(num) - dd)
    for k in range(len(out) - 1, -1, -1):
        c = num[k + dd]
        out[k] = c
        if c:
            for j in range(dd + 1):
                num[k + j] -= c * den[j]
    assert all(v == 0 for v in num[: dd]), "non-exact cyclotomic division"
    return out


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Integer coefficients of Phi_n, constant term first, monic."""
    if n < 1:
        raise ValueError(f"order must be positive, got {n}")
    if n == 1:
        return (-1, 1)
    num = [0] * (n + 1)
    num[0], num[n] = -1, 1
    for d in range(1, n):
        if n % d == 0:
            num = _poly_divide_exact(num, cyclotomic_poly(d))
    return tuple(num)


@lru_cache(maxsize=None)
def euler_phi(n: int) -> int:
    return len(cyclotomic_poly(n)) - 1


@lru_cache(maxsize=None)
def _power_rows(n: int) -> tuple[tuple[int, ...], ...]:
    """Row k = power-basis coordinates of z^k, for 0 <= k < n + phi(n)."""
    phi = euler_phi(n)
    top = cyclotomic_poly(n)  # monic
    rows: list[tuple[int, ...]] = []
    for k in range(phi):
        rows.append(tuple(1 if j == k else 0 for j in range(phi)))
    for k in range(phi, n + phi):
        prev = rows[k - 1]
        shifted = [0] + list(prev[: phi - 1])
        lead = prev[phi - 1]
        if lead:
            for j in range(phi):
                shifted[j] -= lead * top[j]
        rows.append(tuple(shifted))
    return tuple(rows)


def _reduce_power_product(n: int, conv: list[Fraction]) -> tuple[Fraction, ...]:
    """Reduce a raw coefficient list in powers of z modulo Phi_n."""
    phi = euler_phi(n)
    rows = _power_rows(n)
    out = [ZERO] * phi
    for k, c in enumerate(conv):
        if c:
            row = rows[k]
            for j in range(phi):
                if row[j]:
                    out[j] += c * row[j]
    return tuple(out)


def _poly_xgcd(a: list[Fraction], b: list[Fraction]) -> tuple[list[Fraction], list[Fraction]]:
    """Return (g, u) with u*a = g (mod b) and g a nonzero constant, for a invertible mod b."""

    def deg(p: list[Fraction]) -> int:
        for i in range(len(p) - 1, -1, -1):
            if p[i]:
                return i
        return -1

    def trim(p: list[Fraction]) -> list[Fraction]:
        d = deg(p)
        return p[: d + 1] if d >= 0 else []

    r0, r1 = trim(a), trim(b)
    u0, u1 = [ONE], []
    while r1:
        d0, d1 = deg(r0), deg(r1)
        if d0 < d1:
            r0, r1, u0, u1 = r1, r0, u1, u0
            continue
        # one long-division pass
        q = [ZERO] * (d0 - d1 + 1)
        rem = list(r0)
        for k in range(d0 - d1, -1, -1):
            c = rem[k + d1] / r1[d1]
            q[k] = c
            if c:
                for j in range(d1 + 1):
                    rem[k + j] -= c * r1[j]
        rem = trim(rem)
        # u_new = u0 - q*u1
        qu = [ZERO] * (len(q) + len(u1))
        for i, qi in enumerate(q):
            if qi:
                for j, uj in enumerate(u1):
                    if uj:
                        qu[i + j] += qi * uj
        un = [ZERO] * max(len(u0), len(qu))
        for i, v in enumerate(u0):
            un[i] += v
        for i, v in enumerate(qu):
            un[i] -= v
        r0, r1, u0, u1 = r1, rem, u1, trim(un)
    if deg(r0) != 0:
        raise ZeroDivisionError("element is not invertible")
    return r0, u0


class CycScalar:
    """Immutable exact element of Q(zeta_order)."""

    __slots__ = ("order", "coeffs", "_min")

    def __init__(self, order: int, coeffs: tuple[Fraction, ...]):
        phi = euler_phi(order)
        if len(coeffs) != phi:
            raise ValueError(f"need {phi} coefficients for order {order}, got {len(coeffs)}")
        object.__setattr__(self, "order", order)
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "_min", None)

    def __setattr__(self, name, value):
        raise AttributeError("CycScalar is immutable")

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero(order: int = 1) -> CycScalar:
        return CycScalar(order, tuple([ZERO] * euler_phi(order)))

    @staticmethod
    def one(order: int = 1) -> CycScalar:
        c = [ZERO] * euler_phi(order)
        c[0] = ONE
        return CycScalar(order, tuple(c))

    @staticmethod
    def rational(value, order: int = 1) -> CycScalar:
        c = [ZERO] * euler_phi(order)
        c[0] = Fraction(value)
        return CycScalar(order, tuple(c))

    # -- basic predicates ---------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_one(self) -> bool:
        return self.coeffs[0] == 1 and all(c == 0 for c in self.coeffs[1:])

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def __bool__(self) -> bool:
        return not self.is_zero()

    # -- coercion ------------------------------------------------------

    def to_order(self, n: int) -> CycScalar:
        """Rewrite in Q(zeta_n); requires order | n."""
        if n == self.order:
            return self
        if n % self.order != 0:
            raise ValueError(f"cannot embed order {self.order} into order {n}")
        rows = _power_rows(n)
        step = n // self.order
        phi = euler_phi(n)
        out = [ZERO] * phi
        for k, c in enumerate(self.coeffs):
            if c:
                # k*step <= (order-1)*step < n, inside the precomputed table
                row = rows[k * step]
                for j in range(phi):
                    if row[j]:
                        out[j] += c * row[j]
        return CycScalar(n, tuple(out))

    @staticmethod
    def _common(a: CycScalar, b: CycScalar) -> tuple[CycScalar, CycScalar]:
        if a.order == b.order:
            return a, b
        n = a.order * b.order // gcd(a.order, b.order)
        return a.to_order(n), b.to_order(n)

    @staticmethod
    def _co(x) -> CycScalar | None:
        if isinstance(x, CycScalar):
            return x
        if isinstance(x, (int, Fraction)):
            return CycScalar.rational(x)
        return None

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other) -> CycScalar:
        o = CycScalar._co(other)
        if o is None:
            return NotImplemented
        a, b = CycScalar._common(self, o)
        return CycScalar(a.order, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> CycScalar:
        return CycScalar(self.order, tuple(-c for c in self.coeffs))

    def __sub__(self, other) -> CycScalar:
        o = CycScalar._co(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> CycScalar:
        o = CycScalar._co(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other) -> CycScalar:
        o = CycScalar._co(other)
        if o is None:
            return NotImplemented
        a, b = CycScalar._common(self, o)
        phi = euler_phi(a.order)
        conv = [ZERO] * (2 * phi - 1 if phi > 0 else 1)
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        conv[i + j] += x * y
        return CycScalar(a.order, _reduce_power_product(a.order, conv))

    __rmul__ = __mul__

    def inv(self) -> CycScalar:
        if self.is_zero():
            raise ZeroDivisionError("division by zero scalar")
        if self.is_rational():
            return CycScalar.rational(1 / self.coeffs[0], self.order)
        phi_poly = [Fraction(c) for c in cyclotomic_poly(self.order)]
        g, u = _poly_xgcd(list(self.coeffs), phi_poly)
        scale = 1 / g[0]
        out = _reduce_power_product(self.order, [c * scale for c in u])
        return CycScalar(self.order, out)

    def __truediv__(self, other) -> CycScalar:
        o = CycScalar._co(other)
        if o is None:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other) -> CycScalar:
        o = CycScalar._co(other)
        if o is None:
            return NotImplemented
        return o * self.inv()

    def __pow__(self, k: int) -> CycScalar:
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inv() ** (-k)
        result = CycScalar.one(self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- canonical form, equality, hashing ------------------------------

    def reduced(self) -> CycScalar:
        """Equal scalar rewritten at the smallest possible order dividing order."""
        if self._min is not None:
            return self._min
        best = self
        if self.is_rational():
            best = CycScalar(1, (self.coeffs[0],))
        else:
            for d in sorted(_divisors(self.order)):
                if d == self.order:
                    break
                cand = _try_descend(self, d)
                if cand is not None:
                    best = cand
                    break
        object.__setattr__(self, "_min", best)
        return best

    def __eq__(self, other) -> bool:
        o = CycScalar._co(other)
        if o is None:
            return NotImplemented
        a, b = CycScalar._common(self, o)
        return a.coeffs == b.coeffs

    def __ne__(self, other) -> bool:
        r = self.__eq__(other)
        return NotImplemented if r is NotImplemented else not r

    def __hash__(self) -> int:
        r = self.reduced()
        return hash((r.order, r.coeffs))

    # -- presentation ---------------------------------------------------

    def __repr__(self) -> str:
        return f"CycScalar({self.order}, {self})"

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                mono = f"z{self.order}" if k == 1 else f"z{self.order}^{k}"
                if c == 1:
                    terms.append(mono)
                elif c == -1:
                    terms.append(f"-{mono}")
                else:
                    terms.append(f"{c}*{mono}")
        if not terms:
            return "0"
        s = terms[0]
        for t in terms[1:]:
            s += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
        return s

    # -- serialization ----------------------------------------------------

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "coeffs": [_frac_str(c) for c in self.coeffs],
        }

    @staticmethod
    def from_json(obj: dict) -> CycScalar:
        if not isinstance(obj, dict) or "order" not in obj or "coeffs" not in obj:
            raise ValueError("scalar JSON needs 'order' and 'coeffs'")
        order = obj["order"]
        if not isinstance(order, int) or order < 1:
            raise ValueError(f"bad scalar order: {order!r}")
        coeffs = tuple(Fraction(str(c)) for c in obj["coeffs"])
        return CycScalar(order, coeffs)


def _frac_str(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


@lru_cache(maxsize=None)
def _divisors(n: int) -> tuple[int, ...]:
    return tuple(d for d in range(1, n + 1) if n % d == 0)


def _try_descend(x: CycScalar, d: int) -> CycScalar | None:
    """Rewrite x in Q(zeta_d) if possible, else None."""
    n = x.order
    phid = euler_phi(d)
    phin = euler_phi(n)
    step = n // d
    rows = _power_rows(n)
    # columns: embedding of z_d^k, solve small rational system by elimination
    cols = [rows[(k * step)] for k in range(phid)]
    aug = [[Fraction(cols[k][j]) for k in range(phid)] + [x.coeffs[j]] for j in range(phin)]
    sol = _solve_rational(aug, phid)
    if sol is None:
        return None
    return CycScalar(d, tuple(sol))


def _solve_rational(aug: list[list[Fraction]], ncols: int) -> list[Fraction] | None:
    """Solve the overdetermined system given as [A | b] rows; None if inconsistent."""
    rows = [r[:] for r in aug]
    piv: list[tuple[int, int]] = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        pv = rows[r][c]
        rows[r] = [v / pv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        piv.append((r, c))
        r += 1
    for i in range(r, len(rows)):
        if rows[i][ncols] != 0:
            return None
    sol = [ZERO] * ncols
    for pr, pc in piv:
        sol[pc] = rows[pr][ncols]
    return sol


def root_of_unity(order: int, k: int = 1) -> CycScalar:
    """zeta_order^k as an exact scalar."""
    k %= order
    rows = _power_rows(order)
    return CycScalar(order, tuple(Fraction(v) for v in rows[k]))


def q_number(i: int, q: CycScalar) -> CycScalar:
    """(i)_q = 1 + q + ... + q^(i-1)."""
    if i < 0:
        raise ValueError(f"q-number index must be >= 0, got {i}")
    total = CycScalar.zero(q.order)
    power = CycScalar.one(q.order)
    for _ in range(i):
        total = total + power
        power = power * q
    return total


def q_factorial(i: int, q: CycScalar) -> CycScalar:
    """(i)!_q = (1)_q (2)_q ... (i)_q, with (0)!_q = 1."""
    if i < 0:
        raise ValueError(f"q-factorial index must be >= 0, got {i}")
    total = CycScalar.one(q.order)
    for j in range(1, i + 1):
        total = total * q_number(j, q)
    return total
