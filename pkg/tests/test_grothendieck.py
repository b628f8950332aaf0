import pytest

from quivalg import grothendieck as gk, homology, repmod


def test_class_vector_examples(exB):
    reg = exB.registry()
    assert gk.class_vector(exB.projective("1")) == {}
    s1 = repmod.simple(exB, "1")
    assert gk.class_vector(repmod.power(s1, 2)) == {reg.simple_ids["1"]: 2}
    mix = repmod.direct_sum([s1, exB.projective("1")])[0]
    assert gk.class_vector(mix) == {reg.simple_ids["1"]: 1}


def test_omega_bar_examples(exB, a2):
    regB = exB.registry()
    v = gk.class_vector(repmod.simple(exB, "1"))
    img = gk.omega_bar(exB, v)
    assert img == {regB.simple_ids["1"]: 1, regB.simple_ids["2"]: 1}
    rega = a2.registry()
    v2 = gk.class_vector(repmod.simple(a2, "1"))
    assert gk.omega_bar(a2, v2) == {}  # the syzygy is projective
    assert gk.omega_bar(a2, {}) == {}


def test_subgroup_add(exB):
    s1 = repmod.simple(exB, "1")
    s2 = repmod.simple(exB, "2")
    assert gk.lattice_rank_of(gk.subgroup_add(repmod.direct_sum([s1, s2])[0])) == 2
    assert gk.lattice_rank_of(gk.subgroup_add(repmod.power(s1, 5))) == 1
    assert gk.lattice_rank_of(gk.subgroup_add(exB.projective("1"))) == 0


def test_rank_traces(exB, a2):
    both = repmod.direct_sum([repmod.simple(exB, "1"), repmod.simple(exB, "2")])[0]
    trace = gk.rank_trace(both)
    assert trace[:3] == [2, 1, 1]
    assert gk.rank_trace(repmod.simple(a2, "1")) == [1, 0]
    assert gk.rank_trace(a2.projective("1")) == [0]


def test_phi_examples(exA, exB, a2):
    both = repmod.direct_sum([repmod.simple(exB, "1"), repmod.simple(exB, "2")])[0]
    r = gk.phi(both)
    assert (r.value, r.certified, r.certificate) == (1, True, "orbit_cycle")
    r2 = gk.phi(repmod.simple(a2, "1"))
    assert (r2.value, r2.certificate) == (1, "finite_pd")
    assert homology.pd(repmod.simple(a2, "1")).value == 1
    r3 = gk.phi(repmod.random_module(exA, 8, 10))
    assert r3.value == 0 and r3.certified


def test_phi_trace_non_increasing(exB):
    for seed in range(20):
        r = gk.phi(repmod.random_module(exB, seed, 10))
        assert all(r.trace[i + 1] <= r.trace[i] for i in range(len(r.trace) - 1))


def test_plateau_implies_injectivity(exB):
    # consecutive equal ranks mean the map between those lattices is injective:
    # verified here by checking image rank equals source rank at the plateau
    both = repmod.direct_sum([repmod.simple(exB, "1"), repmod.simple(exB, "2")])[0]
    gens = gk.subgroup_add(both)
    img = [gk.omega_bar(exB, g) for g in gens]
    img2 = [gk.omega_bar(exB, g) for g in img]
    assert gk.lattice_rank_of(img) == gk.lattice_rank_of(img2) == 1


def test_phi_dim_over(exB, a2):
    s1, s2 = repmod.simple(exB, "1"), repmod.simple(exB, "2")
    both = repmod.direct_sum([s1, s2])[0]
    r = gk.phi_dim_over([s1, s2, both])
    assert r.value == 1 and r.all_certified
    projs = [a2.projective(v) for v in a2.quiver.vertices]
    assert gk.phi_dim_over(projs).value == 0
    simples = [repmod.simple(a2, v) for v in a2.quiver.vertices]
    assert gk.phi_dim_over(simples).value == 1


def test_eta_bound_examples(exB, a2):
    both = repmod.direct_sum([repmod.simple(exB, "1"), repmod.simple(exB, "2")])[0]
    e = gk.eta_bound_check(exB, gk.subgroup_add(both))
    assert e.status == "ok" and e.eta == 1 and e.rank == 2
    e2 = gk.eta_bound_check(a2, gk.subgroup_add(repmod.simple(a2, "1")))
    assert e2.status == "ok" and e2.eta == 1 and e2.rank == 1
    e3 = gk.eta_bound_check(exB, [])
    assert e3.status == "ok" and e3.eta == 0


def test_trace_against_module_level_oracle(exB, a2):
    # dual route: rebuild each trace entry from actual syzygy modules
    # Omega^k(S) of the distinct summands, bypassing the class-level cache
    for alg in (exB, a2):
        reg = alg.registry()
        for seed in range(8):
            m = repmod.random_module(alg, seed, 8)
            res = gk.phi(m)
            gens = [reg.rep(i) for i in sorted(gk.class_vector(m))]
            if not gens:
                assert res.trace == [0]
                continue
            mods = list(gens)
            for depth in range(1, min(len(res.trace), 4)):
                mods = [homology.syzygy(x) for x in mods]
                vecs = [gk.class_vector(x.strip()) for x in mods]
                assert gk.lattice_rank_of(vecs) == res.trace[depth], \
                    (alg.name, seed, depth)


def test_vanishing_index_matches_phi_when_finite(a2, nak_a3):
    for alg in (a2, nak_a3):
        for seed in range(10):
            m = repmod.random_module(alg, seed, 8)
            res = gk.phi(m)
            if res.certificate not in ("finite_pd", "rank_zero"):
                continue
            vec = gk.class_vector(m)
            if not vec:
                assert res.value == 0
                continue
            indices = [gk.vanishing_index(alg, {i: 1}) for i in vec]
            assert None not in indices
            assert res.value == max(indices)


def test_eta_not_applicable_when_unstable(remark54):
    alg = remark54.algebra
    # <[S_0]> is not stable: its image involves the radical class of P0
    vec = gk.subgroup_add(repmod.simple(alg, "0"))
    e = gk.eta_bound_check(alg, vec)
    assert e.status == "not_applicable"
