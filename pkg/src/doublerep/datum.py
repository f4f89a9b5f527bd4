"""Group data and weight combinatorics for rank-one double modules.

A datum is (G, chi, a, alpha): a finite abelian group given by cyclic
factor orders, a character chi of G, an element a, and a scalar alpha
subject to alpha*(a^n - 1) = 0 or chi^n = 1, where n is the order of
rho = chi(a).  Weights are characters of G x G-hat; the second factor is
recorded as a group element h via double duality.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd

from .cyclo import CycScalar, q_factorial, q_number, root_of_unity


class DatumError(ValueError):
    """Raised when a datum or weight fails validation."""


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


@dataclass(frozen=True)
class FinAbGroup:
    """Finite abelian group as a product of cyclic factors."""

    orders: tuple[int, ...]

    def __post_init__(self):
        if not self.orders or any(d < 1 for d in self.orders):
            raise DatumError(f"cyclic factor orders must be positive: {self.orders}")

    @property
    def rank(self) -> int:
        return len(self.orders)

    @property
    def size(self) -> int:
        out = 1
        for d in self.orders:
            out *= d
        return out

    @property
    def exponent(self) -> int:
        return reduce(_lcm, self.orders, 1)

    def identity(self) -> tuple[int, ...]:
        return tuple(0 for _ in self.orders)

    def normalize(self, g) -> tuple[int, ...]:
        g = tuple(int(v) for v in g)
        if len(g) != self.rank:
            raise DatumError(f"element {g} has wrong rank for orders {self.orders}")
        return tuple(v % d for v, d in zip(g, self.orders))

    def mul(self, g, h) -> tuple[int, ...]:
        return tuple((x + y) % d for x, y, d in zip(self.normalize(g), self.normalize(h), self.orders))

    def inverse(self, g) -> tuple[int, ...]:
        return tuple((-x) % d for x, d in zip(self.normalize(g), self.orders))

    def power(self, g, k: int) -> tuple[int, ...]:
        return tuple((x * k) % d for x, d in zip(self.normalize(g), self.orders))

    def element_order(self, g) -> int:
        g = self.normalize(g)
        return reduce(_lcm, (d // gcd(d, x) for x, d in zip(g, self.orders)), 1)

    def elements(self):
        return itertools.product(*(range(d) for d in self.orders))


@dataclass(frozen=True)
class GroupChar:
    """Character of a FinAbGroup, by exponents against the cyclic generators."""

    group: FinAbGroup
    exps: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "exps", self.group.normalize(self.exps))

    def value(self, g) -> CycScalar:
        g = self.group.normalize(g)
        n = self.group.exponent
        k = sum(e * x * (n // d) for e, x, d in zip(self.exps, g, self.group.orders))
        return root_of_unity(n, k % n)

    def order(self) -> int:
        return self.group.element_order(self.exps)

    def is_trivial(self) -> bool:
        return all(e == 0 for e in self.exps)

    def power(self, k: int) -> GroupChar:
        return GroupChar(self.group, self.group.power(self.exps, k))


@dataclass(frozen=True)
class Weight:
    """Character of G x G-hat: gexps define a character of G, h is the
    group element representing the G-hat part by double duality."""

    group: FinAbGroup
    gexps: tuple[int, ...]
    hexps: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "gexps", self.group.normalize(self.gexps))
        object.__setattr__(self, "hexps", self.group.normalize(self.hexps))

    def value_g(self, g) -> CycScalar:
        return GroupChar(self.group, self.gexps).value(g)

    def value_gamma_gen(self, i: int) -> CycScalar:
        # value at the i-th standard character generator gamma_i
        n = self.group.exponent
        d = self.group.orders[i]
        return root_of_unity(n, (self.hexps[i] * (n // d)) % n)

    def value_gamma_exps(self, cexps) -> CycScalar:
        # value at prod_i gamma_i^{c_i}
        n = self.group.exponent
        k = sum(c * h * (n // d) for c, h, d in zip(self.group.normalize(cexps), self.hexps, self.group.orders))
        return root_of_unity(n, k % n)

    def mul(self, other: Weight) -> Weight:
        return Weight(self.group, self.group.mul(self.gexps, other.gexps), self.group.mul(self.hexps, other.hexps))

    def power(self, k: int) -> Weight:
        return Weight(self.group, self.group.power(self.gexps, k), self.group.power(self.hexps, k))

    def order(self) -> int:
        return _lcm(self.group.element_order(self.gexps), self.group.element_order(self.hexps))

    def sort_key(self):
        return (self.gexps, self.hexps)

    def label(self) -> str:
        return f"({','.join(map(str, self.gexps))};{','.join(map(str, self.hexps))})"

    def to_json(self) -> dict:
        return {"gpart": list(self.gexps), "h": list(self.hexps)}

    @staticmethod
    def from_json(group: FinAbGroup, obj: dict) -> Weight:
        if not isinstance(obj, dict) or "gpart" not in obj or "h" not in obj:
            raise DatumError("weight JSON needs 'gpart' and 'h'")
        return Weight(group, tuple(obj["gpart"]), tuple(obj["h"]))


@dataclass(frozen=True)
class WeightClass:
    """Classification of a weight: l in 1..n, d = l-1 for regular weights,
    branch is 'regular' (l <= n-1), 'n_generic', or 'n_boundary'."""

    l: int
    d: int | None
    branch: str

    @property
    def regular(self) -> bool:
        return self.branch == "regular"


NILPOTENT = "nilpotent"
NON_NILPOTENT = "non-nilpotent"


class ValidatedDatum:
    """A validated datum with its derived constants and weight machinery."""

    def __init__(self, group: FinAbGroup, chi: GroupChar, a: tuple[int, ...], alpha: CycScalar,
                 kind: str, rho: CycScalar, n: int, m: int, alpha_normalized: bool):
        self.group = group
        self.chi = chi
        self.a = a
        self.alpha = alpha
        self.kind = kind
        self.rho = rho
        self.n = n
        self.m = m
        self.N = group.exponent
        self.alpha_normalized = alpha_normalized
        # phi = chi^{-1} (x) a-hat as a weight
        self.phi_weight = Weight(group, group.inverse(chi.exps), a)
        self._cache: dict = {}

    # -- scalars --------------------------------------------------------

    def zero(self) -> CycScalar:
        return CycScalar.zero(self.N)

    def one(self) -> CycScalar:
        return CycScalar.one(self.N)

    def scalar(self, v) -> CycScalar:
        if isinstance(v, CycScalar):
            return v.to_order(self.N) if self.N % v.order == 0 else v
        return CycScalar.rational(Fraction(v), self.N)

    def rho_power(self, k: int) -> CycScalar:
        return self.rho ** (k % self.n)

    # -- weights ----------------------------------------------------------

    def weight(self, gexps, hexps) -> Weight:
        return Weight(self.group, tuple(gexps), tuple(hexps))

    def enumerate_weights(self) -> list[Weight]:
        if "weights" not in self._cache:
            ws = [Weight(self.group, g, h)
                  for g in self.group.elements() for h in self.group.elements()]
            ws.sort(key=Weight.sort_key)
            self._cache["weights"] = ws
        return self._cache["weights"]

    def _eval_ratio(self, lam: Weight) -> CycScalar:
        # lambda(a) / lambda(chi)
        return lam.value_g(self.a) * lam.value_gamma_exps(self.chi.exps).inv()

    def classify_weight(self, lam: Weight) -> WeightClass:
        e = self._eval_ratio(lam)
        p = self.one()
        for d in range(self.n):
            if e == p:
                if d <= self.n - 2:
                    return WeightClass(d + 1, d, "regular")
                return WeightClass(self.n, None, "n_boundary")
            p = p * self.rho
        return WeightClass(self.n, None, "n_generic")

    def weights_in_class(self, l: int) -> list[Weight]:
        key = ("class", l)
        if key not in self._cache:
            self._cache[key] = [w for w in self.enumerate_weights() if self.classify_weight(w).l == l]
        return self._cache[key]

    def kernel_K(self) -> list[Weight]:
        # weights with lambda(a) = lambda(chi)
        return [w for w in self.enumerate_weights() if self._eval_ratio(w).is_one()]

    def simple_counts(self) -> dict[int, int]:
        counts = {l: len(self.weights_in_class(l)) for l in range(1, self.n + 1)}
        k = len(self.kernel_K())
        for l in range(1, self.n):
            assert counts[l] == k, f"|I_{l}| = {counts[l]} != |K| = {k}"
        assert counts[self.n] == self.group.size ** 2 - (self.n - 1) * k
        return counts

    # -- translations -----------------------------------------------------

    def phi_shift(self, lam: Weight, k: int = 1) -> Weight:
        return lam.mul(self.phi_weight.power(k))

    def tau(self, lam: Weight, k: int = 1) -> Weight:
        return self.phi_shift(lam, self.n * k)

    def sigma(self, lam: Weight) -> Weight:
        cls = self.classify_weight(lam)
        if not cls.regular:
            return lam
        return self.phi_shift(lam, cls.d + 1)

    def sigma_inv(self, lam: Weight) -> Weight:
        cls = self.classify_weight(lam)
        if not cls.regular:
            return lam
        return self.phi_shift(lam, cls.l - self.n)

    def tau_orbit(self, lam: Weight) -> list[Weight]:
        out = [lam]
        cur = self.tau(lam)
        while cur != lam:
            out.append(cur)
            cur = self.tau(cur)
        return out

    def linkage_blocks(self) -> list[tuple[tuple[int, Weight], ...]]:
        """Partition of simple parameters (l, lambda) into linkage classes."""
        blocks: list[tuple[tuple[int, Weight], ...]] = []
        seen: set[tuple[int, tuple]] = set()
        for lam in self.enumerate_weights():
            cls = self.classify_weight(lam)
            key = (cls.l, lam.sort_key())
            if key in seen:
                continue
            if not cls.regular:
                blocks.append(((self.n, lam),))
                seen.add(key)
                continue
            l = cls.l
            slam = self.sigma(lam)
            members = {(l, t) for t in self.tau_orbit(lam)}
            members |= {(self.n - l, t) for t in self.tau_orbit(slam)}
            assert len(members) == 2 * self.m, \
                f"linkage block of (l={l}, {lam.label()}) has {len(members)} members, expected {2 * self.m}"
            block = tuple(sorted(members, key=lambda p: (p[0], p[1].sort_key())))
            for p in block:
                seen.add((p[0], p[1].sort_key()))
            blocks.append(block)
        blocks.sort(key=lambda b: (b[0][0], b[0][1].sort_key()))
        return blocks

    # -- structure coefficients --------------------------------------------

    def _check_in_class(self, l: int, lam: Weight) -> None:
        cls = self.classify_weight(lam)
        if cls.l != l:
            raise DatumError(f"weight {lam.label()} lies in class l={cls.l}, not l={l}")

    def alpha_value(self, i: int, lam: Weight) -> CycScalar:
        """Coefficient alpha_i(lambda) = (i)_rho (lambda(chi) - rho^(1-i) lambda(a)),
        defined for every weight."""
        if not 1 <= i <= self.n:
            raise DatumError(f"alpha index {i} out of range 1..{self.n}")
        la = lam.value_g(self.a)
        lchi = lam.value_gamma_exps(self.chi.exps)
        return q_number(i, self.rho) * (lchi - self.rho_power(1 - i) * la)

    def alpha_coeff(self, i: int, l: int, lam: Weight) -> CycScalar:
        """alpha_i(lambda) with the membership check lambda in I_l."""
        self._check_in_class(l, lam)
        return self.alpha_value(i, lam)

    def beta_coeff(self, l: int, lam: Weight) -> CycScalar:
        """Product alpha_1 ... alpha_(l-1)."""
        self._check_in_class(l, lam)
        out = self.one()
        for i in range(1, l):
            out = out * self.alpha_coeff(i, l, lam)
        return out

    def yz_coeff(self, l: int, lam: Weight) -> tuple[CycScalar, CycScalar]:
        """(y, z) pair for the weight lambda in class l <= n-1."""
        if not 1 <= l <= self.n - 1:
            raise DatumError(f"yz coefficients need l <= n-1, got l={l}")
        self._check_in_class(l, lam)
        la = lam.value_g(self.a)
        lchi = lam.value_gamma_exps(self.chi.exps)
        denom = q_factorial(self.n - 1, self.rho)
        y = (self.rho_power(1 - l) * la - self.rho_power(l) * lchi) * denom.inv()
        z = (self.rho * la - lchi) * denom.inv()
        return y, z

    # -- element/character values used by module relations ------------------

    def a_matrix_value(self, lam: Weight) -> CycScalar:
        return lam.value_g(self.a)

    def gamma_gen_at_a(self, i: int) -> CycScalar:
        # gamma_i(a)
        d = self.group.orders[i]
        return root_of_unity(self.N, (self.a[i] * (self.N // d)) % self.N)

    # -- serialization -------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "orders": list(self.group.orders),
            "chi": list(self.chi.exps),
            "a": list(self.a),
            "alpha": self.alpha.to_json(),
        }

    def describe(self) -> dict:
        counts = self.simple_counts()
        return {
            "orders": list(self.group.orders),
            "kind": self.kind,
            "n": self.n,
            "m": self.m,
            "exponent": self.N,
            "rho": str(self.rho),
            "alpha": str(self.alpha),
            "alpha_normalized": self.alpha_normalized,
            "simple_counts": {str(k): v for k, v in sorted(counts.items())},
            "kernel_size": len(self.kernel_K()),
        }


def validate_datum(group: FinAbGroup, chi: GroupChar, a, alpha) -> ValidatedDatum:
    """Check the datum axioms and derive (kind, rho, n, m)."""
    a = group.normalize(a)
    if chi.group != group:
        raise DatumError("character belongs to a different group")
    N = group.exponent
    if isinstance(alpha, CycScalar):
        if N % alpha.order != 0:
            raise DatumError(f"alpha order {alpha.order} does not divide group exponent {N}")
        alpha = alpha.to_order(N)
    else:
        alpha = CycScalar.rational(Fraction(alpha), N)

    rho = chi.value(a)
    n = 1
    p = rho
    while not p.is_one():
        p = p * rho
        n += 1
        if n > N:
            raise DatumError("rho is not a root of unity (impossible)")

    ord_a = group.element_order(a)
    ord_chi = chi.order()
    assert ord_a % n == 0 and ord_chi % n == 0, "order of rho must divide ord(a) and ord(chi)"

    # alpha (a^n - 1) vanishes iff alpha = 0 or a^n = identity
    a_pow_n = group.power(a, n)
    vanishes = alpha.is_zero() or a_pow_n == group.identity()

    alpha_normalized = False
    if vanishes:
        kind = NILPOTENT
        m = _lcm(ord_a, ord_chi) // n
    else:
        chi_n = chi.power(n)
        if not chi_n.is_trivial():
            g_wit = next(g for g in group.elements() if not chi_n.value(g).is_one())
            raise DatumError(
                f"invalid datum: alpha*(a^n - 1) != 0 (alpha = {alpha}, "
                f"a^n = {a_pow_n} is not the identity) and chi^n != 1 "
                f"(chi^n at {g_wit} equals {chi_n.value(g_wit)})")
        kind = NON_NILPOTENT
        if not alpha.is_one():
            alpha = CycScalar.one(N)
            alpha_normalized = True
        m = ord_a // n
        assert m > 1, "non-nilpotent datum forces m > 1"

    D = ValidatedDatum(group, chi, a, alpha, kind, rho, n, m, alpha_normalized)
    assert D.phi_weight.order() == m * n, \
        f"phi has order {D.phi_weight.order()}, expected m*n = {m * n}"
    return D


def datum_from_json(obj: dict) -> ValidatedDatum:
    if not isinstance(obj, dict):
        raise DatumError("datum JSON must be an object")
    for key in ("orders", "chi", "a", "alpha"):
        if key not in obj:
            raise DatumError(f"datum JSON missing '{key}'")
    group = FinAbGroup(tuple(int(v) for v in obj["orders"]))
    chi = GroupChar(group, tuple(int(v) for v in obj["chi"]))
    a = tuple(int(v) for v in obj["a"])
    alpha = CycScalar.from_json(obj["alpha"]) if isinstance(obj["alpha"], dict) \
        else CycScalar.rational(Fraction(str(obj["alpha"])))
    return validate_datum(group, chi, a, alpha)
