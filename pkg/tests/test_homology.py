"""Homological layer: Hom spaces, socle/radical, syzygies, isomorphism
certification, and almost-split sequence candidates."""

import pytest

from doublerep import homology
from doublerep.constructors import (band, projective, simple, t1, t1bar,
                                    t_chain, t_chain_bar, verma, w_band)
from doublerep.datum import DatumError
from doublerep.linalg import Mat, column_space_basis, in_span, solve_right
from doublerep.repmod import direct_sum, quotient_module, spin_submodule

from .conftest import first_weight


# ---------------------------------------------------------------------------
# hom spaces


def test_hom_space_of_simples(datum_b):
    lam, mu = datum_b.weights_in_class(1)[:2]
    v = simple(datum_b, 1, lam)
    assert len(homology.hom_space(v, v)) == 1
    assert homology.hom_space(v, v)[0].is_valid()
    assert homology.hom_dim(v, simple(datum_b, 1, mu)) == 0


def test_hom_space_members_are_morphisms(datum_b):
    lam = first_weight(datum_b, 1)
    p = projective(datum_b, 1, lam)
    t2 = t_chain(datum_b, 1, lam, 2)
    for f in homology.hom_space(p, t2):
        assert f.is_valid()
    for f in homology.hom_space(t2, p):
        assert f.is_valid()


def test_hom_vanishes_off_tau_orbit_step(datum_b):
    # Hom(T_1(l, lam), T_1(l, tau^k lam)) = 0 unless m | k
    lam = first_weight(datum_b, 1)
    a = t1(datum_b, 1, lam)
    b = t1(datum_b, 1, datum_b.tau(lam))
    assert homology.hom_dim(a, b) == 0
    assert homology.hom_dim(a, a) == 1


def test_compose_and_identity(datum_b):
    lam = first_weight(datum_b, 1)
    v = simple(datum_b, 1, lam)
    ident = homology.identity_morphism(v)
    f = homology.hom_space(v, v)[0]
    assert homology.compose(f, ident).matrix == f.matrix
    assert homology.compose(ident, f).matrix == f.matrix


# ---------------------------------------------------------------------------
# local endomorphism rank


def test_end_local_dim_of_families(datum_b, datum_a):
    lam = first_weight(datum_b, 1)
    assert homology.end_local_dim(simple(datum_b, 1, lam)) == 1
    assert homology.end_local_dim(projective(datum_b, 1, lam)) == 1
    assert homology.end_local_dim(t_chain(datum_b, 1, lam, 2)) == 1
    assert homology.end_local_dim(band(datum_b, 1, lam, 2, 1)) == 1
    lam_a = first_weight(datum_a, 1)
    assert homology.end_local_dim(w_band(datum_a, 1, lam_a, 1, 2)) == 1


def test_end_local_dim_of_direct_sums(datum_b):
    lam, mu = datum_b.weights_in_class(1)[:2]
    v = simple(datum_b, 1, lam)
    w = simple(datum_b, 1, mu)
    same = direct_sum([v, v])
    mixed = direct_sum([v, w])
    assert homology.end_local_dim(same) == 4
    assert homology.end_local_dim(mixed) == 2
    # the pair formula agrees with the direct computation
    homs_ab = homology.hom_space(v, v)
    homs_ba = homology.hom_space(v, v)
    assert homology.end_local_dim_of_sum(v, v, 1, 1, homs_ab, homs_ba) == 4
    assert homology.end_local_dim_of_sum(v, w, 1, 1, [], []) == 2


# ---------------------------------------------------------------------------
# socle / radical / head / composition series


def ambient_rows_of_inner(outer_facts, inner_facts):
    """Rows of a submodule-of-a-submodule written in ambient coordinates."""
    return [tuple(outer_facts.inclusion.matvec(row)) for row in inner_facts.rows]


def same_span(rows_a, rows_b, order):
    basis = column_space_basis(list(rows_a), order)
    if len(basis) != len(column_space_basis(list(rows_b), order)):
        return False
    return all(in_span(basis, v, order) for v in rows_b)


def second_socle_rows(mod, soc_facts):
    """Basis (ambient coordinates) of soc^2 = preimage of soc(M/soc M)."""
    q, proj = quotient_module(mod, soc_facts)
    socq = homology.socle(q)
    rows = list(soc_facts.rows)
    for w in socq.rows:
        lift = solve_right(proj, Mat.from_cols(mod.datum.N, [w], nrows=q.dim))
        assert lift is not None
        rows.append(tuple(lift.col(0)))
    return rows


def test_projective_loewy_structure(datum_b, datum_c):
    for d in (datum_b, datum_c):
        n = d.n
        for l in range(1, n):
            lam = first_weight(d, l)
            p = projective(d, l, lam)
            soc = homology.socle(p)
            assert soc.dim == l
            assert homology.is_isomorphic(soc.module, simple(d, l, lam)).verdict == "yes"
            h, _ = homology.head(p)
            assert homology.is_isomorphic(h, simple(d, l, lam)).verdict == "yes"
            lt = homology.loewy_type(p)
            assert (lt.s, lt.t, lt.rl) == (1, 1, 3)
            series = homology.radical_series(p)
            assert len(series) == 3
            assert [layer.dim for layer in series] == [l, 2 * (n - l), l]
            factors = homology.composition_factors(p)
            assert sum(f["mult"] for f in factors) == 4


def test_projective_socle_radical_coincidences(datum_b, datum_c):
    # rad P = soc^2 P and rad^2 P = soc P, as subspaces
    for d in (datum_b, datum_c):
        lam = first_weight(d, 1)
        p = projective(d, 1, lam)
        soc = homology.socle(p)
        rad = homology.radical(p)
        rad2 = homology.radical(rad.module)
        rad2_rows = ambient_rows_of_inner(rad, rad2)
        assert same_span(rad2_rows, soc.rows, d.N)
        soc2_rows = second_socle_rows(p, soc)
        assert same_span(soc2_rows, rad.rows, d.N)


def test_projective_middle_layer(datum_b):
    lam = first_weight(datum_b, 1)
    p = projective(datum_b, 1, lam)
    n = datum_b.n
    series = homology.radical_series(p)
    middle = series[1]
    got = sorted((e["l"], e["lambda"]) for e in homology.socle_multiset(middle))
    slam = datum_b.sigma(lam).label()
    silam = datum_b.sigma_inv(lam).label()
    assert got == sorted({(n - 1, slam), (n - 1, silam)})


def test_semisimple_factor_exhaustiveness_guard(datum_b):
    lam = first_weight(datum_b, 1)
    p = projective(datum_b, 1, lam)
    with pytest.raises(DatumError):
        homology.semisimple_factors(p)  # P is not semisimple


# ---------------------------------------------------------------------------
# projective covers, injective hulls, syzygies


def test_cover_and_hull_of_simple(datum_b):
    lam = first_weight(datum_b, 1)
    v = simple(datum_b, 1, lam)
    cover, f = homology.projective_cover_map(v)
    assert cover.dim == 2 * datum_b.n
    assert f.matrix.nrows == v.dim and f.rank() == v.dim
    hull, g = homology.injective_hull_map(v)
    assert hull.dim == 2 * datum_b.n
    assert g.is_injective()
    assert homology.syzygy(v).dim == cover.dim - v.dim
    assert homology.cosyzygy(v).dim == hull.dim - v.dim


def test_omega_kills_projectives(datum_b):
    lam = first_weight(datum_b, 1)
    p = projective(datum_b, 1, lam)
    assert homology.syzygy(p).dim == 0
    z = verma(datum_b, first_weight(datum_b, 2))  # projective simple
    assert homology.syzygy(z).dim == 0


def test_omega_power_types(datum_b):
    lam = first_weight(datum_b, 1)
    v = homology.omega_power(datum_b, 1, lam, 0)
    assert v.dim == 1
    for s in (1, 2):
        up = homology.omega_power(datum_b, 1, lam, s)
        assert homology.type_of(up) == (s + 1, s)
        down = homology.omega_power(datum_b, 1, lam, -s)
        assert homology.type_of(down) == (s, s + 1)
    assert homology.omega_power(datum_b, 1, lam, 1).dim == 2 * datum_b.n - 1
    with pytest.raises(DatumError):
        homology.omega_power(datum_b, datum_b.n, first_weight(datum_b, 2), 1)


# ---------------------------------------------------------------------------
# isomorphism certification


def test_is_isomorphic_yes_with_witness(datum_b):
    lam = first_weight(datum_b, 1)
    a = t1bar(datum_b, 1, lam)
    p = projective(datum_b, 1, lam)
    # spin the u-block of the nilpotent P: a copy of Tbar_1 whose
    # weight-sorted basis differs from the table's ordering
    one = datum_b.one()
    zero = datum_b.zero()
    seeds = []
    for j in range(datum_b.n):
        vcol = [zero] * p.dim
        vcol[datum_b.n + j] = one
        seeds.append(vcol)
    facts = spin_submodule(p, seeds)
    verdict = homology.is_isomorphic(a, facts.module)
    assert verdict.verdict == "yes"
    assert verdict.witness is not None
    assert verdict.witness.is_valid()
    assert verdict.witness.rank() == a.dim


def test_is_isomorphic_no_cases(datum_b):
    lam, mu = datum_b.weights_in_class(1)[:2]
    assert homology.is_isomorphic(simple(datum_b, 1, lam),
                                  simple(datum_b, 1, mu)).verdict == "no"
    assert homology.is_isomorphic(t1(datum_b, 1, lam),
                                  t1bar(datum_b, 1, lam)).verdict == "no"
    assert homology.is_isomorphic(band(datum_b, 1, lam, 1, 1),
                                  band(datum_b, 1, lam, 2, 1)).verdict == "no"
    assert homology.is_isomorphic(simple(datum_b, 1, lam),
                                  projective(datum_b, 1, lam)).verdict == "no"


def test_is_isomorphic_band_tau_shift(datum_b):
    lam = first_weight(datum_b, 1)
    a = band(datum_b, 1, lam, 2, 1)
    b = band(datum_b, 1, datum_b.tau(lam), 2, 1)
    assert homology.is_isomorphic(a, b).verdict == "yes"


def test_is_isomorphic_decomposable_pair(datum_b):
    lam, mu = datum_b.weights_in_class(1)[:2]
    v = simple(datum_b, 1, lam)
    w = simple(datum_b, 1, mu)
    s1 = direct_sum([v, w])
    s2 = direct_sum([w, v])
    assert homology.is_isomorphic(s1, s2).verdict == "yes"
    s3 = direct_sum([v, v])
    assert homology.is_isomorphic(s1, s3).verdict == "no"


# ---------------------------------------------------------------------------
# short exact sequences and AR candidates


def test_split_sequence_detected(datum_b):
    lam = first_weight(datum_b, 1)
    v = simple(datum_b, 1, lam)
    p = projective(datum_b, 1, lam)
    s = direct_sum([v, p])
    N = datum_b.N
    one = datum_b.one()
    zero = datum_b.zero()
    inc_cols = []
    for j in range(v.dim):
        col = [zero] * s.dim
        col[j] = one
        inc_cols.append(col)
    f = homology.Morphism(v, s, Mat.from_cols(N, inc_cols, nrows=s.dim))
    proj_cols = []
    for j in range(s.dim):
        col = [zero] * p.dim
        if j >= v.dim:
            col[j - v.dim] = one
        proj_cols.append(col)
    g = homology.Morphism(s, p, Mat.from_cols(N, proj_cols, nrows=p.dim))
    report = homology.ses_check(f, g)
    assert report.exact
    assert report.split
    assert not homology.ar_candidate_check(f, g).ar_ok


@pytest.mark.parametrize("lemma,datum_key,max_t", [
    ("4.5", "B", 1), ("4.5", "C", 1),
    ("4.9", "B", 2), ("4.10", "C", 2),
    ("4.20", "B", 2), ("4.28", "A", 2),
])
def test_ar_sequences(lemma, datum_key, max_t):
    from .conftest import make_datum
    d = make_datum(datum_key)
    seqs = homology.ar_sequences_for_lemma(d, lemma, max_t=max_t)
    assert seqs
    for name, a, mids, c in seqs:
        found = homology.ses_candidate(a, mids, c)
        assert found is not None, f"{name}: no exact sequence realized"
        _, f, g = found
        report = homology.ar_candidate_check(f, g)
        assert report.ar_ok, f"{name}: {report.to_json()}"


def test_ar_lemma_kind_guards(datum_a, datum_b):
    with pytest.raises(DatumError):
        homology.ar_sequences_for_lemma(datum_b, "4.28", max_t=1)
    with pytest.raises(DatumError):
        homology.ar_sequences_for_lemma(datum_a, "4.20", max_t=1)
    with pytest.raises(DatumError):
        homology.ar_sequences_for_lemma(datum_b, "9.99", max_t=1)


# ---------------------------------------------------------------------------
# family recognition


def test_match_family_tags(datum_b, datum_a):
    lam = first_weight(datum_b, 1)
    assert homology.match_family(simple(datum_b, 1, lam)).startswith("V(")
    assert homology.match_family(projective(datum_b, 1, lam)).startswith("P(")
    assert homology.match_family(t_chain(datum_b, 1, lam, 2)).startswith("T_2(")
    assert homology.match_family(band(datum_b, 1, lam, 2, 1)).startswith("M_1(")
    omega2 = homology.omega_power(datum_b, 1, lam, 2)
    tag = homology.match_family(omega2, max_s=3)
    assert tag is not None and "Omega" in tag
    lam_a = first_weight(datum_a, 1)
    wtag = homology.match_family(w_band(datum_a, 1, lam_a, 2, 1))
    assert wtag is not None and wtag.startswith("W_1(")
    # a decomposable module matches nothing
    v = simple(datum_b, 1, lam)
    assert homology.match_family(direct_sum([v, v])) is None


def test_zero_module(datum_b):
    z = homology.zero_module(datum_b)
    assert z.dim == 0
    assert z.verify_relations().ok
