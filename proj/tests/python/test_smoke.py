"""Smoke tests for the python bindings, plus an independent pure-python
recomputation of the enveloping-group order."""

import pytest

moufang = pytest.importorskip("moufang")


@pytest.fixture(scope="module")
def m12():
    return moufang.chein_double(moufang.symmetric3())


def test_classification(m12):
    c = moufang.classify(m12)
    assert c.is_loop and c.is_moufang
    assert not c.is_group and not c.is_commutative
    assert moufang.classify(moufang.cyclic(6)).is_group


def test_catalog():
    names = moufang.catalog_names()
    assert "Z4" in names and "M_S3_2" in names and len(names) == 20
    assert moufang.catalog_table("M_S3_2").order == 12


def test_permutations():
    a = moufang.Permutation([1, 2, 0])
    b = moufang.Permutation([0, 2, 1])
    assert (a * b).image == [1, 0, 2]
    assert moufang.inverse_perm(a).image == [2, 0, 1]
    assert moufang.closure([a]).order == 3


def test_regular_birepresentation(m12):
    b = moufang.regular_birepresentation(m12)
    for report in moufang.validate_birepresentation(m12, b.s_family, b.t_family):
        assert report.ok(), report.relation
    assert moufang.kernel(b) == {0}
    assert moufang.is_faithful(b)
    assert not moufang.is_associative_birep(b)


def test_triality(m12):
    t = moufang.quadratic_family(moufang.regular_birepresentation(m12))
    assert t.P(0).is_identity()
    for report in moufang.shifted_relation_check(t):
        assert report.ok(), report.relation
    for report in moufang.minimality_check(t):
        assert report.ok(), report.relation
    rho = moufang.triality_substitute(t, "rho")
    assert rho.base.s_family == t.base.t_family
    assert len(moufang.triality_pairs(t)) == 6


def test_quotient():
    s3 = moufang.symmetric3()
    q = moufang.quotient(s3, {0, 1, 2})
    assert q.quotient_table.rows == [[0, 1], [1, 0]]
    b = moufang.pulled_back_birepresentation(s3, {0, 1, 2})
    assert moufang.kernel(b) == {0, 1, 2}
    induced = moufang.induced_birepresentation(b)
    assert moufang.is_faithful(induced.birep)
    assert moufang.kernel_is_normal_check(b)


def test_reconstruction(m12):
    verdict = moufang.check_conditions(moufang.reconstruct_from_regular(m12))
    assert verdict.is_moufang_loop
    assert verdict.unit == 0
    assert verdict.inverse_map[1] == moufang.inverse(m12, 1)

    mutated = moufang.reconstruct_from_regular(m12)
    s = mutated.s
    s[3] = s[3][:5] + [s[3][6], s[3][5]] + s[3][7:]
    mutated.s = s
    bad = moufang.check_conditions(mutated)
    assert not bad.is_moufang_loop
    assert bad.failed is not None


def test_file_round_trip(tmp_path, m12):
    path = tmp_path / "m12.tbl"
    moufang.save_file(m12, str(path))
    assert moufang.load_file(str(path)) == m12
    text = moufang.format_cayley_table(m12)
    assert moufang.parse_cayley_table(text) == m12


def test_enveloping_order_matches_independent_bfs(m12):
    b = moufang.regular_birepresentation(m12)
    assert moufang.enveloping_group(b).order == 2592

    # independent pure-python closure over the raw table
    rows = m12.rows
    n = m12.order
    gens = {tuple(rows[g]) for g in range(n)}
    gens |= {tuple(rows[h][g] for h in range(n)) for g in range(n)}
    gens = list(gens)
    identity = tuple(range(n))
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for p in frontier:
            for q in gens:
                r = tuple(p[q[x]] for x in range(n))
                if r not in seen:
                    seen.add(r)
                    nxt.append(r)
        frontier = nxt
    assert len(seen) == 2592
