"""Smoke tests for the python extension module (1-based surface)."""

import pytest

import hqp


def test_operation_roundtrip():
    op = hqp.Operation(arity=2, order=2, entries=[1, 2, 2, 1])
    assert op.arity == 2
    assert op.order == 2
    assert op.entries == [1, 2, 2, 1]
    assert op([1, 2]) == 2
    assert op([2, 2]) == 1
    assert op.is_quasigroup()
    assert op.image() == [1, 2]
    assert "arity=2" in repr(op)


def test_validation_raises():
    with pytest.raises(hqp.Error):
        hqp.Operation(arity=2, order=2, entries=[1, 2, 2])
    with pytest.raises(hqp.Error):
        hqp.Operation(arity=2, order=2, entries=[1, 2, 2, 3])
    with pytest.raises(hqp.Error):
        hqp.load_fixture("nonsense")


def test_fixtures_and_indices():
    names = hqp.fixture_names()
    assert "example-2.1-f" in names and "z3" in names
    z2 = hqp.load_fixture("z2")
    assert hqp.canonical_index(z2) == 6
    assert hqp.operation_from_index(2, 2, 6) == z2


def test_identities_and_inverses():
    f = hqp.load_fixture("example-2.1-f")
    report = hqp.identity_report(f)
    assert report["per_position"] == [[1, 2], [1, 2], [1, 2]]
    assert report["intersection"] == [1, 2]
    assert hqp.inverses(f, 1) == [1, 2]
    assert hqp.inverses(f, 3) == [1, 3]
    assert not hqp.has_unique_inverses(f)
    g = hqp.load_fixture("example-2.1-g")
    assert hqp.identity_set(g) == [2]
    assert hqp.has_unique_inverses(g)


def test_superposition_products():
    g = [hqp.operation_from_index(2, 2, k) for k in range(16)]
    assert hqp.superpose(g[6], [g[1], g[2]]) == g[3]
    prod, certified = hqp.hadamard_product(g[6], g[6], g[6])
    assert certified
    assert prod == g[0]
    assert hqp.tri_right(g[6], g[6]) == g[3]
    assert hqp.tri_symmetric(g[6], g[6]) == g[0]
    assert hqp.self_superpose(g[6], hqp.constant_map(2, 2, 1)) == g[0]


def test_lift():
    z2 = hqp.load_fixture("z2")
    lifted = hqp.lift_operation(z2, 2)
    assert lifted.carrier_size == 16
    assert lifted.table.order == 16
    assert lifted.label(1) == "g_1"
    assert lifted.element(7) == z2
    for r in range(16):
        for c in range(16):
            assert lifted.table([r + 1, c + 1]) == (r ^ c) + 1
    with pytest.raises(hqp.Error):
        hqp.lift_operation(hqp.load_fixture("z3"), 2)


def test_transforms():
    star = hqp.load_fixture("example-5.2-star")
    star_t = hqp.conjugate(star, [2, 1, 3])
    prod, certified = hqp.hadamard_product(star, star, star_t)
    assert certified
    assert prod == hqp.load_fixture("example-5.2-circ")

    p = hqp.parse_permutation("(235)", 5)
    assert p == [1, 3, 5, 4, 2]
    bullet = hqp.apply_isotopism(star, [p, p, p])
    assert hqp.is_isomorphism(star, bullet, p)
    witness = hqp.find_isomorphism(bullet, star)
    assert witness is not None
    assert hqp.is_isomorphism(bullet, star, witness)
    assert hqp.find_isomorphism(
        hqp.load_fixture("z3"), hqp.load_fixture("proj1")) is None

    with pytest.raises(hqp.Error):
        hqp.conjugate(hqp.constant_map(2, 2, 1), [3, 2, 1])


def test_identity_checks():
    star = hqp.load_fixture("example-3.3-star")
    r = hqp.satisfies_identity(star, "{x1,x2} = {x2,x1}")
    assert not r["holds"]
    assert r["counterexample"] == [1, 2]
    z3 = hqp.load_fixture("z3")
    assert hqp.satisfies_identity(z3, "{x1,x2} = {x2,x1}")["holds"]

    lifted = hqp.lifted_identity_check(star, 2, "{x1,x2} = {x2,x1}")
    assert not lifted["holds"]
    assert not lifted["exhaustive"]
    assert lifted["counterexample"][0] == hqp.constant_map(2, 3, 1)
    assert lifted["counterexample"][1] == hqp.constant_map(2, 3, 2)


def test_distributivity_and_cycles():
    z3 = hqp.load_fixture("z3")
    hull = hqp.mult_set(z3, side="both")
    assert len(hull) == 3
    assert len(hqp.mult_set(z3, side="left")) == 27
    mul = hqp.Operation(arity=2, order=3, entries=[1, 1, 1, 1, 2, 3, 1, 3, 2])
    assert hqp.is_distributive_over(mul, z3)

    cycle = hqp.iterate_hadamard_cycle(z3)
    assert cycle["preperiod"] == 0
    assert cycle["period"] == 2
    assert cycle["trajectory"] == [4069, 5681]


def test_orthogonality():
    p1 = hqp.load_fixture("proj1")
    p2 = hqp.load_fixture("proj2")
    assert hqp.is_orthogonal_set([p1, p2])
    hull = hqp.enumerate_ort([p1, p2])
    assert len(hull) == 12
    assert all(q.is_quasigroup() for q in hull)
    assert hqp.quasigroup_count(2, 3) == 12
    assert hqp.quasigroup_count(2, 4, jobs=2) == 576

    z3 = hqp.load_fixture("z3")
    assert hqp.ort_contains([p1, p2], z3)
    assert hqp.solve_for_f(z3, [p1, p2]) == z3

    report = hqp.verify_bijection([p1, p2])
    assert report["verified"]
    assert report["quasigroup_count"] == 12
    assert report["ort_count"] == 12

    family = hqp.transversal_family(z3, [z3, z3])
    assert family["all_transversal"]
    assert len(family["lines"]) == 6


def test_file_format():
    z3 = hqp.load_fixture("z3")
    text = hqp.write_operation_file(z3)
    assert text.splitlines()[0] == "2 3"
    assert hqp.parse_operation_file(text) == z3
    assert hqp.parse_operation_file("# c\n2 2\n1 2\n2 1\n") == hqp.load_fixture("z2")
    with pytest.raises(hqp.Error):
        hqp.parse_operation_file("2 2\n1 2 2\n")
