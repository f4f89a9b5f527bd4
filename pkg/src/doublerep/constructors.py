"""Constructors for the classified indecomposable module families.

Each function emits a ModuleRep on an explicit weight-tagged basis:

* ``verma``        -- the n-dimensional induced module at any weight;
* ``simple``       -- the simple module V(l, lambda), natural or standard basis;
* ``projective``   -- the 2n-dimensional projective cover P(l, lambda);
* ``t_chain``      -- the chain module T_t with socle V(l, lambda) copies
                      shifted down the tau-orbit and a rising linking edge;
* ``t_chain_bar``  -- the dual chain Tbar_t with rising tau-orbit and a
                      falling linking edge;
* ``band``         -- the band module M_t(l, lambda, eta) of (tm, tm)-type,
                      with a Jordan closing edge across the t copies;
* ``w_band``       -- the one-parameter family W_t(l, lambda, eta) that
                      replaces the bands when m = 1 (eta may be infinite).
"""

from __future__ import annotations

from fractions import Fraction

from .cyclo import CycScalar
from .datum import NILPOTENT, DatumError, ValidatedDatum, Weight
from .linalg import Mat
from .repmod import ModuleRep, spin_submodule


# ---------------------------------------------------------------------------
# band parameter


class EtaParam:
    """Band parameter: an exact scalar or the symbol for infinity."""

    __slots__ = ("value",)

    def __init__(self, value):
        if value is not None and not isinstance(value, CycScalar):
            value = CycScalar.rational(Fraction(value))
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, v):
        raise AttributeError("EtaParam is immutable")

    @staticmethod
    def infinite() -> EtaParam:
        return EtaParam(None)

    @staticmethod
    def of(v) -> EtaParam:
        if isinstance(v, EtaParam):
            return v
        if isinstance(v, str):
            return EtaParam.parse(v)
        return EtaParam(v)

    @staticmethod
    def parse(text: str) -> EtaParam:
        t = str(text).strip().lower()
        if t in ("inf", "infinity", "oo"):
            return EtaParam(None)
        try:
            return EtaParam(CycScalar.rational(Fraction(t)))
        except (ValueError, ZeroDivisionError) as exc:
            raise DatumError(f"cannot parse eta value {text!r}") from exc

    @property
    def is_inf(self) -> bool:
        return self.value is None

    def scalar(self, datum: ValidatedDatum) -> CycScalar:
        if self.value is None:
            raise DatumError("eta is infinite; no scalar value")
        return datum.scalar(self.value)

    def neg(self) -> EtaParam:
        return self if self.value is None else EtaParam(-self.value)

    def __eq__(self, other) -> bool:
        if not isinstance(other, EtaParam):
            other = EtaParam.of(other)
        if self.value is None or other.value is None:
            return self.value is None and other.value is None
        return self.value == other.value

    def __hash__(self):
        return hash(None) if self.value is None else hash(self.value)

    def __str__(self) -> str:
        return "inf" if self.value is None else str(self.value)

    def __repr__(self) -> str:
        return f"EtaParam({self})"


# ---------------------------------------------------------------------------
# shared helpers


def _require_regular(datum: ValidatedDatum, l: int, lam: Weight) -> None:
    if not 1 <= l <= datum.n - 1:
        raise DatumError(f"l={l} outside 1..{datum.n - 1}")
    cls = datum.classify_weight(lam)
    if cls.l != l:
        raise DatumError(f"weight {lam.label()} lies in class l={cls.l}, not l={l}")


def _put(entries: dict, i: int, j: int, val: CycScalar) -> None:
    if not val.is_zero():
        entries[(i, j)] = val


# ---------------------------------------------------------------------------
# simple and induced modules


def verma(datum: ValidatedDatum, lam: Weight) -> ModuleRep:
    """The n-dimensional induced module at an arbitrary weight.

    The closing coefficient alpha * (lambda(a)^n - 1) vanishes automatically
    except at generic weights over a non-nilpotent datum.
    """
    n = datum.n
    weights = [datum.phi_shift(lam, i) for i in range(n)]
    closing = datum.alpha * (lam.value_g(datum.a) ** n - datum.one())
    x: dict = {}
    xi: dict = {}
    for i in range(n - 1):
        _put(x, i + 1, i, datum.one())
    _put(x, 0, n - 1, closing)
    for i in range(1, n):
        _put(xi, i - 1, i, datum.alpha_value(i, lam))
    labels = [f"v{i}" for i in range(n)]
    return ModuleRep.from_weight_action(datum, weights, x, xi, labels)


def simple(datum: ValidatedDatum, l: int, lam: Weight, basis: str = "natural") -> ModuleRep:
    """The simple module V(l, lambda); requires lambda in class l."""
    n = datum.n
    if not 1 <= l <= n:
        raise DatumError(f"l={l} outside 1..{n}")
    cls = datum.classify_weight(lam)
    if cls.l != l:
        raise DatumError(f"weight {lam.label()} lies in class l={cls.l}, not l={l}")
    if l == n:
        closing = datum.alpha * (lam.value_g(datum.a) ** n - datum.one())
    else:
        closing = datum.zero()
    weights = [datum.phi_shift(lam, i) for i in range(l)]
    x: dict = {}
    xi: dict = {}
    if basis == "natural":
        for i in range(l - 1):
            _put(x, i + 1, i, datum.one())
        _put(x, 0, l - 1, closing)
        for i in range(1, l):
            _put(xi, i - 1, i, datum.alpha_value(i, lam))
        labels = [f"v{i}" for i in range(l)]
    elif basis == "standard":
        for i in range(l - 1):
            _put(x, i + 1, i, datum.alpha_value(i + 1, lam))
        _put(x, 0, l - 1, closing / datum.beta_coeff(l, lam))
        for i in range(1, l):
            _put(xi, i - 1, i, datum.one())
        labels = [f"m{i}" for i in range(l)]
    else:
        raise DatumError(f"unknown basis {basis!r}; use 'natural' or 'standard'")
    mod = ModuleRep.from_weight_action(datum, weights, x, xi, labels)
    if basis == "standard":
        _assert_basis_change(datum, l, lam, mod)
    return mod


def _assert_basis_change(datum: ValidatedDatum, l: int, lam: Weight,
                         std: ModuleRep) -> None:
    """The standard basis is m_i = alpha_{i+1}...alpha_{l-1} v_i; check that
    this diagonal change of basis intertwines the two constructions."""
    nat = simple(datum, l, lam, "natural")
    diag = []
    for i in range(l):
        c = datum.one()
        for k in range(i + 1, l):
            c = c * datum.alpha_value(k, lam)
        diag.append(c)
    change = Mat(datum.N, [[diag[j] if i == j else datum.zero()
                            for j in range(l)] for i in range(l)], l)
    pairs = [(nat.act_x, std.act_x), (nat.act_xi, std.act_xi)]
    pairs += list(zip(nat.act_group, std.act_group))
    pairs += list(zip(nat.act_gamma, std.act_gamma))
    for big, small in pairs:
        if big * change != change * small:
            raise DatumError("natural/standard bases of the simple module "
                             "are not intertwined by the diagonal change")


# ---------------------------------------------------------------------------
# projective covers


def projective(datum: ValidatedDatum, l: int, lam: Weight) -> ModuleRep:
    """The projective cover P(l, lambda) of V(l, lambda), dimension 2n."""
    _require_regular(datum, l, lam)
    n = datum.n
    one = datum.one()

    def V(i: int) -> int:
        return i

    def U(i: int) -> int:
        return n + i

    slam = datum.sigma(lam)
    silam = datum.sigma_inv(lam)
    x: dict = {}
    xi: dict = {}
    if datum.kind == NILPOTENT:
        weights = ([datum.phi_shift(lam, i) for i in range(n)]
                   + [datum.phi_shift(lam, i - n + l) for i in range(n)])
        for i in range(n - 1):
            _put(x, V(i + 1), V(i), one)
            _put(x, U(i + 1), U(i), one)
        _put(xi, U(n - l - 1), V(0), one)
        for i in range(1, l):
            _put(xi, V(i - 1), V(i), datum.alpha_coeff(i, l, lam))
            _put(xi, U(n - l + i - 1), V(i), one)
        _put(xi, U(n - 1), V(l), one)
        for i in range(l + 1, n):
            _put(xi, V(i - 1), V(i), datum.alpha_coeff(i - l, n - l, slam))
        for i in range(1, n - l):
            _put(xi, U(i - 1), U(i), datum.alpha_coeff(i, n - l, silam))
        for i in range(n - l + 1, n):
            _put(xi, U(i - 1), U(i), datum.alpha_coeff(i - n + l, l, lam))
    else:
        weights = ([datum.phi_shift(lam, i - n + l) for i in range(n)]
                   + [datum.phi_shift(lam, i) for i in range(n)])
        y, z = datum.yz_coeff(l, lam)
        for i in range(n - l - 1):
            _put(x, V(i + 1), V(i), datum.alpha_coeff(i + 1, n - l, silam))
        _put(x, U(0), V(n - l - 1), one)
        for i in range(n - l, n - 1):
            _put(x, V(i + 1), V(i), datum.alpha_coeff(i + 1 - n + l, l, lam))
            _put(x, U(i + 1 - n + l), V(i), one)
        _put(x, V(0), V(n - 1), y)
        _put(x, U(l), V(n - 1), one)
        for i in range(l - 1):
            _put(x, U(i + 1), U(i), datum.alpha_coeff(i + 1, l, lam))
        for i in range(l, n - 1):
            _put(x, U(i + 1), U(i), datum.alpha_coeff(i + 1 - l, n - l, slam))
        _put(x, U(0), U(n - 1), z)
        for i in range(1, n):
            _put(xi, V(i - 1), V(i), one)
            _put(xi, U(i - 1), U(i), one)
    labels = [f"v{i}" for i in range(n)] + [f"u{i}" for i in range(n)]
    return ModuleRep.from_weight_action(datum, weights, x, xi, labels)


# ---------------------------------------------------------------------------
# chain modules


def _t_table(datum: ValidatedDatum, l: int, lam: Weight, t: int):
    """Table for the chain T_t: segments c = 0..t-1 with base weights
    tau^(c-(t-1))(lambda), x linking segment c into segment c+1."""
    n = datum.n
    one = datum.one()
    slam = datum.sigma(lam)
    mus = [datum.tau(lam, c - (t - 1)) for c in range(t)]

    def idx(c: int, j: int) -> int:
        return c * n + j

    weights = []
    x: dict = {}
    xi: dict = {}
    if datum.kind == NILPOTENT:
        for c in range(t):
            for j in range(n):
                shift = j + l if j <= n - l - 1 else j - n + l
                weights.append(datum.phi_shift(mus[c], shift))
        for c in range(t):
            for j in range(n):
                if j <= n - l - 2:
                    _put(x, idx(c, j + 1), idx(c, j), one)
                elif j == n - l - 1:
                    if c < t - 1:
                        _put(x, idx(c + 1, n - l), idx(c, j), one)
                elif j <= n - 2:
                    _put(x, idx(c, j + 1), idx(c, j), one)
                if j == 0:
                    _put(xi, idx(c, n - 1), idx(c, 0), one)
                elif j <= n - l - 1:
                    _put(xi, idx(c, j - 1), idx(c, j), datum.alpha_coeff(j, n - l, slam))
                elif j >= n - l + 1:
                    _put(xi, idx(c, j - 1), idx(c, j), datum.alpha_coeff(j - n + l, l, lam))
    else:
        z = datum.yz_coeff(l, lam)[1]
        for c in range(t):
            for j in range(n):
                weights.append(datum.phi_shift(mus[c], j))
        for c in range(t):
            for j in range(n):
                if j <= l - 2:
                    _put(x, idx(c, j + 1), idx(c, j), datum.alpha_coeff(j + 1, l, lam))
                elif l <= j <= n - 2:
                    _put(x, idx(c, j + 1), idx(c, j), datum.alpha_coeff(j + 1 - l, n - l, slam))
                elif j == n - 1:
                    _put(x, idx(c, 0), idx(c, j), z)
                    if c < t - 1:
                        _put(x, idx(c + 1, 0), idx(c, j), one)
                if j >= 1:
                    _put(xi, idx(c, j - 1), idx(c, j), one)
    return weights, x, xi


def t_chain(datum: ValidatedDatum, l: int, lam: Weight, t: int = 1) -> ModuleRep:
    """The chain module T_t(l, lambda) of (t, t)-type, dimension nt."""
    _require_regular(datum, l, lam)
    if t < 1:
        raise DatumError(f"chain length t={t} must be >= 1")
    weights, x, xi = _t_table(datum, l, lam, t)
    labels = [f"w{j}^{c}" for c in range(t) for j in range(datum.n)]
    return ModuleRep.from_weight_action(datum, weights, x, xi, labels)


def _tbar_table(datum: ValidatedDatum, l: int, lam: Weight, t: int,
                eta: CycScalar | None):
    """Table for the dual chain Tbar_t: segments c = 0..t-1 with base
    weights tau^c(lambda), xi linking segment c into segment c-1.  When
    ``eta`` is given (only meaningful at m = 1) the xi-edge also closes each
    segment onto itself with coefficient eta, giving the W family."""
    n = datum.n
    one = datum.one()
    silam = datum.sigma_inv(lam)
    nus = [datum.tau(lam, c) for c in range(t)]

    def idx(c: int, j: int) -> int:
        return c * n + j

    weights = []
    x: dict = {}
    xi: dict = {}
    if datum.kind == NILPOTENT:
        for c in range(t):
            for j in range(n):
                weights.append(datum.phi_shift(nus[c], j - n + l))
        for c in range(t):
            for j in range(n):
                if j <= n - 2:
                    _put(x, idx(c, j + 1), idx(c, j), one)
                if j == 0:
                    if eta is not None:
                        _put(xi, idx(c, n - 1), idx(c, 0), eta)
                    if c >= 1:
                        _put(xi, idx(c - 1, n - 1), idx(c, 0), one)
                elif j <= n - l - 1:
                    _put(xi, idx(c, j - 1), idx(c, j), datum.alpha_coeff(j, n - l, silam))
                elif j >= n - l + 1:
                    _put(xi, idx(c, j - 1), idx(c, j), datum.alpha_coeff(j - n + l, l, lam))
    else:
        z = datum.yz_coeff(l, lam)[1]
        slam = datum.sigma(lam)
        for c in range(t):
            for j in range(n):
                weights.append(datum.phi_shift(nus[c], j - n + l))
        for c in range(t):
            for j in range(n):
                if j <= n - l - 2:
                    _put(x, idx(c, j + 1), idx(c, j), datum.alpha_coeff(j + 1, n - l, silam))
                elif j == n - l - 1:
                    _put(x, idx(c, n - l), idx(c, j), one)
                    if c >= 1:
                        _put(x, idx(c - 1, n - l), idx(c, j), z)
                elif j <= n - 2:
                    _put(x, idx(c, j + 1), idx(c, j), datum.alpha_coeff(j + 1 - n + l, l, lam))
                if j == 0:
                    if c >= 1:
                        _put(xi, idx(c - 1, n - 1), idx(c, 0), one)
                elif j != n - l:
                    _put(xi, idx(c, j - 1), idx(c, j), one)
    return weights, x, xi


def t_chain_bar(datum: ValidatedDatum, l: int, lam: Weight, t: int = 1) -> ModuleRep:
    """The dual chain module Tbar_t(l, lambda) of (t, t)-type, dimension nt."""
    _require_regular(datum, l, lam)
    if t < 1:
        raise DatumError(f"chain length t={t} must be >= 1")
    weights, x, xi = _tbar_table(datum, l, lam, t, None)
    labels = [f"z{j}^{c}" for c in range(t) for j in range(datum.n)]
    return ModuleRep.from_weight_action(datum, weights, x, xi, labels)


# ---------------------------------------------------------------------------
# band modules


def band(datum: ValidatedDatum, l: int, lam: Weight, eta, t: int = 1) -> ModuleRep:
    """The band module M_t(l, lambda, eta) of (tm, tm)-type, dimension nmt.

    ``eta`` must be a nonzero finite scalar.  The t copies are glued by a
    Jordan closing edge: the wrap-around of copy i adds eta times the head
    of copy i plus (for i >= 1) the head of copy i-1.
    """
    _require_regular(datum, l, lam)
    if datum.m == 1:
        raise DatumError("band modules need m > 1; at m = 1 use the W family")
    if t < 1:
        raise DatumError(f"band length t={t} must be >= 1")
    eta = EtaParam.of(eta)
    if eta.is_inf:
        raise DatumError("band modules need a finite nonzero eta")
    eta_s = eta.scalar(datum)
    if eta_s.is_zero():
        raise DatumError("band modules need a finite nonzero eta")
    n, m = datum.n, datum.m
    one = datum.one()
    slam = datum.sigma(lam)

    def idx(i: int, k: int, j: int) -> int:
        return (i * m + k) * n + j

    weights = []
    x: dict = {}
    xi: dict = {}
    if datum.kind == NILPOTENT:
        for i in range(t):
            for k in range(m):
                base = datum.tau(lam, k)
                for j in range(n):
                    shift = j + l if j <= n - l - 1 else j - n + l
                    weights.append(datum.phi_shift(base, shift))
        for i in range(t):
            for k in range(m):
                for j in range(n):
                    if j <= n - l - 2:
                        _put(x, idx(i, k, j + 1), idx(i, k, j), one)
                    elif j == n - l - 1:
                        if k < m - 1:
                            _put(x, idx(i, k + 1, n - l), idx(i, k, j), one)
                        else:
                            _put(x, idx(i, 0, n - l), idx(i, k, j), eta_s)
                            if i >= 1:
                                _put(x, idx(i - 1, 0, n - l), idx(i, k, j), one)
                    elif j <= n - 2:
                        _put(x, idx(i, k, j + 1), idx(i, k, j), one)
                    if j == 0:
                        _put(xi, idx(i, k, n - 1), idx(i, k, 0), one)
                    elif j <= n - l - 1:
                        _put(xi, idx(i, k, j - 1), idx(i, k, j), datum.alpha_coeff(j, n - l, slam))
                    elif j >= n - l + 1:
                        _put(xi, idx(i, k, j - 1), idx(i, k, j), datum.alpha_coeff(j - n + l, l, lam))
    else:
        z = datum.yz_coeff(l, lam)[1]
        for i in range(t):
            for k in range(m):
                base = datum.tau(lam, k)
                for j in range(n):
                    weights.append(datum.phi_shift(base, j))
        for i in range(t):
            for k in range(m):
                for j in range(n):
                    if j <= l - 2:
                        _put(x, idx(i, k, j + 1), idx(i, k, j), datum.alpha_coeff(j + 1, l, lam))
                    elif l <= j <= n - 2:
                        _put(x, idx(i, k, j + 1), idx(i, k, j), datum.alpha_coeff(j + 1 - l, n - l, slam))
                    elif j == n - 1:
                        _put(x, idx(i, k, 0), idx(i, k, j), z)
                        if k < m - 1:
                            _put(x, idx(i, k + 1, 0), idx(i, k, j), one)
                        else:
                            _put(x, idx(i, 0, 0), idx(i, k, j), eta_s)
                            if i >= 1:
                                _put(x, idx(i - 1, 0, 0), idx(i, k, j), one)
                    if j >= 1:
                        _put(xi, idx(i, k, j - 1), idx(i, k, j), one)
    labels = [f"b{j}^{k}.{i}" for i in range(t) for k in range(m) for j in range(n)]
    return ModuleRep.from_weight_action(datum, weights, x, xi, labels)


def w_band(datum: ValidatedDatum, l: int, lam: Weight, eta, t: int = 1) -> ModuleRep:
    """The family W_t(l, lambda, eta) of (t, t)-type at m = 1 (nilpotent).

    ``eta`` ranges over all scalars plus infinity.  Finite eta closes the
    xi-edge of the dual chain shape; eta = infinity is the chain shape with
    an open xi-edge and a Jordan x-edge instead.
    """
    _require_regular(datum, l, lam)
    if datum.m != 1:
        raise DatumError(f"W family needs m = 1; this datum has m = {datum.m}")
    if t < 1:
        raise DatumError(f"band length t={t} must be >= 1")
    eta = EtaParam.of(eta)
    n = datum.n
    if eta.is_inf:
        weights, x, xi = _t_table(datum, l, lam, t)
        labels = [f"w{j}^{c}" for c in range(t) for j in range(n)]
    else:
        weights, x, xi = _tbar_table(datum, l, lam, t, eta.scalar(datum))
        labels = [f"z{j}^{c}" for c in range(t) for j in range(n)]
    return ModuleRep.from_weight_action(datum, weights, x, xi, labels)


# ---------------------------------------------------------------------------
# verified restrictions of the projective cover (t = 1 families)


def _restricted_copy(p: ModuleRep, span_cols: list[list[tuple[int, CycScalar]]],
                     table: ModuleRep, what: str) -> ModuleRep:
    """Spin the listed span inside ``p``, assert it was already invariant, and
    assert that the restricted action in the listed basis is matrix-identical
    to ``table``; returns ``table``."""
    datum = p.datum
    zero = datum.zero()
    seeds = []
    for col in span_cols:
        v = [zero] * p.dim
        for r, c in col:
            v[r] = c
        seeds.append(tuple(v))
    facts = spin_submodule(p, seeds)
    if facts.module.dim != len(seeds):
        raise DatumError(f"{what}: the listed span inside the projective cover "
                         f"is not invariant (spins up to dim {facts.module.dim})")
    incl = Mat.from_cols(datum.N, seeds, nrows=p.dim)
    pairs = [(p.act_x, table.act_x), (p.act_xi, table.act_xi)]
    pairs += list(zip(p.act_group, table.act_group))
    pairs += list(zip(p.act_gamma, table.act_gamma))
    for big, small in pairs:
        if big * incl != incl * small:
            raise DatumError(f"{what}: restriction of the projective cover "
                             "does not reproduce the chain table")
    return table


def _assert_chain_ends(datum: ValidatedDatum, mod: ModuleRep, l: int,
                       lam: Weight, head_lam: Weight, what: str) -> None:
    from . import homology
    n = datum.n
    soc = homology.socle_multiset(mod)
    if soc != [{"l": l, "lambda": lam.label(), "mult": 1}]:
        raise DatumError(f"{what}: socle is not V({l},{lam.label()})")
    hd = homology.head_multiset(mod)
    if hd != [{"l": n - l, "lambda": head_lam.label(), "mult": 1}]:
        raise DatumError(f"{what}: head is not V({n - l},{head_lam.label()})")


def t1(datum: ValidatedDatum, l: int, lam: Weight) -> ModuleRep:
    """T_1(l, lambda) realized as a verified restriction of P(l, lambda);
    matrix-identical to t_chain(..., t=1)."""
    p = projective(datum, l, lam)
    table = t_chain(datum, l, lam, 1)
    n = datum.n
    one = datum.one()
    if datum.kind == NILPOTENT:
        cols = ([[(j + l, one)] for j in range(n - l)]
                + [[(n + j, one)] for j in range(n - l, n)])
    else:
        cols = [[(n + j, one)] for j in range(n)]
    mod = _restricted_copy(p, cols, table, "t1")
    _assert_chain_ends(datum, mod, l, lam, datum.sigma(lam), "t1")
    return mod


def t1bar(datum: ValidatedDatum, l: int, lam: Weight) -> ModuleRep:
    """Tbar_1(l, lambda) realized as a verified restriction of P(l, lambda);
    matrix-identical to t_chain_bar(..., t=1)."""
    p = projective(datum, l, lam)
    table = t_chain_bar(datum, l, lam, 1)
    n = datum.n
    one = datum.one()
    if datum.kind == NILPOTENT:
        cols = [[(n + j, one)] for j in range(n)]
    else:
        cols = ([[(j, one)] for j in range(n - l)]
                + [[(j + l, one)] for j in range(n - l, n)])
    mod = _restricted_copy(p, cols, table, "t1bar")
    _assert_chain_ends(datum, mod, l, lam, datum.sigma_inv(lam), "t1bar")
    return mod


def w1(datum: ValidatedDatum, l: int, lam: Weight, eta) -> ModuleRep:
    """W_1(l, lambda, eta) realized as a verified restriction of P(l, lambda);
    matrix-identical to w_band(..., t=1)."""
    eta = EtaParam.of(eta)
    p = projective(datum, l, lam)
    table = w_band(datum, l, lam, eta, 1)
    n = datum.n
    one = datum.one()
    if eta.is_inf:
        cols = ([[(j + l, one)] for j in range(n - l)]
                + [[(n + j, one)] for j in range(n - l, n)])
    else:
        ev = eta.scalar(datum)
        cols = []
        for j in range(n - l):
            col = [(n + j, one)]
            if not ev.is_zero():
                col.append((j + l, ev))
            cols.append(col)
        cols += [[(n + j, one)] for j in range(n - l, n)]
    return _restricted_copy(p, cols, table, "w1")


# ---------------------------------------------------------------------------
# family dispatcher (names used by the command-line interface)


FAMILY_TOKENS = ("verma", "simple", "projective", "t1", "t1bar", "string_tt",
                 "string_ttbar", "band_m1", "band_mt", "w1", "w_t", "omega")


def build_family(datum: ValidatedDatum, family: str, l: int | None = None,
                 lam: Weight | None = None, t: int | None = None, eta=None,
                 basis: str = "natural") -> ModuleRep:
    """Build a module by family token.  The 'omega' token is resolved by the
    caller through the homological layer, not here."""
    if family not in FAMILY_TOKENS:
        raise DatumError(f"unknown family {family!r}; expected one of {', '.join(FAMILY_TOKENS)}")
    if family == "omega":
        raise DatumError("family 'omega' is built from a simple module by the syzygy operator")
    if lam is None:
        raise DatumError("family construction needs a weight")
    if family == "verma":
        if l is not None:
            cls = datum.classify_weight(lam)
            if cls.l != l:
                raise DatumError(f"weight {lam.label()} lies in class l={cls.l}, not l={l}")
        return verma(datum, lam)
    if l is None:
        raise DatumError(f"family {family!r} needs l")
    if family == "simple":
        return simple(datum, l, lam, basis)
    if family == "projective":
        return projective(datum, l, lam)
    if family == "t1":
        return t1(datum, l, lam)
    if family == "string_tt":
        return t_chain(datum, l, lam, t if t is not None else 1)
    if family == "t1bar":
        return t1bar(datum, l, lam)
    if family == "string_ttbar":
        return t_chain_bar(datum, l, lam, t if t is not None else 1)
    if family in ("band_m1", "band_mt"):
        if eta is None:
            raise DatumError(f"family {family!r} needs eta")
        tt = 1 if family == "band_m1" else (t if t is not None else 1)
        return band(datum, l, lam, eta, tt)
    if family == "w1":
        if eta is None:
            raise DatumError("family 'w1' needs eta")
        return w1(datum, l, lam, eta)
    if family == "w_t":
        if eta is None:
            raise DatumError("family 'w_t' needs eta")
        return w_band(datum, l, lam, eta, t if t is not None else 1)
    raise DatumError(f"unhandled family {family!r}")
