"""The glued total space: objects, decorated chains, the rewrite closure
behind morphism equality, lifts, and local trivializations."""

import pytest

from catbundle.bundle import (
    BundleMorphism,
    BundleObject,
    BundleSpace,
    LocalTrivialization,
    QuiverEdge,
    check_bundle_axioms,
    enumerate_chains,
)
from catbundle.errors import (
    CompositionError,
    PreconditionError,
    SchemaError,
)
from catbundle.functorial import FunctorialCocycle
from catbundle.gerbal import generate_gerbal
from catbundle.presets import cover_line5w
from catbundle.quotient import build_quotient, variant_for


def one_step(space, chart, charts, start, step, phi):
    walk = space.cover.walk(start, [step])
    return BundleMorphism.chain([QuiverEdge(chart, tuple(charts), walk, phi)])


def test_object_count_line5w(space_line5w):
    # 5 vertices, 2 fiber object cosets
    assert len(space_line5w.objects_all()) == 10


def test_object_count_formula(space_line5):
    space = space_line5
    want = len(space.cover.vertex_set) * len(space.q.objects.reps)
    assert len(space.objects_all()) == want == 10


def test_canonical_obj_lands_in_smallest_chart(space_line5):
    space = space_line5
    for fiber in space.q.objects.reps:
        x = space.canonical_obj("2", "2", fiber)
        assert x.chart == "1"
        # already-canonical objects are fixed points
        y = space.canonical_obj(x.chart, x.vertex, x.fiber)
        assert y == x


def test_canonical_obj_respects_glue(space_line5):
    space, q = space_line5, space_line5.q
    for fiber in q.objects.reps:
        via_2 = space.canonical_obj("2", "2", fiber)
        transported = q.obj_product(space.gbar("1", "2", "2"), fiber)
        via_1 = space.canonical_obj("1", "2", transported)
        assert via_2 == via_1


def test_glue_relation_report(space_line5w):
    rep = space_line5w.check_glue_relation()
    assert rep.ok, rep.failures()


def test_act_obj_is_a_free_right_action(space_line5):
    space, q = space_line5, space_line5.q
    for x in space.objects_all():
        for a in q.objects.reps:
            y = space.act_obj(x, a)
            assert y.vertex == x.vertex and y.chart == x.chart
            if y == x:
                assert a == q.identity_obj()
            for b in q.objects.reps:
                assert space.act_obj(y, b) == \
                    space.act_obj(x, q.obj_product(a, b))


def test_identity_markers_compare_by_object(space_line5):
    space = space_line5
    xs = space.objects_all()
    a, b = xs[0], xs[1]
    assert space.mor_equal(BundleMorphism.identity(a), BundleMorphism.identity(a))
    assert not space.mor_equal(BundleMorphism.identity(a), BundleMorphism.identity(b))


def test_marker_equals_neutral_zero_length_edge(space_line5):
    space, q = space_line5, space_line5.q
    x = space.canonical_obj("1", "1", q.identity_obj())
    marker = BundleMorphism.identity(x)
    edge = QuiverEdge(x.chart, (x.chart,), space.cover.identity_walk("1"),
                      q.identity_mor_at(x.fiber))
    assert space.mor_equal(marker, BundleMorphism.chain([edge]))


def test_single_edge_equals_its_reindexing(space_line5):
    space, q = space_line5, space_line5.q
    walk = space.cover.walk("1", [("e12", 1)])
    for phi in q.morphisms.reps:
        m1 = one_step(space, "1", ("1",), "1", ("e12", 1), phi)
        moved = q.mor_product(space.thetabar("2", "1", walk), phi)
        m2 = one_step(space, "2", ("2",), "1", ("e12", 1), moved)
        assert space.mor_equal(m1, m2)
        assert space.mor_equal(m2, m1)


def test_distinct_decorations_stay_distinct(space_line5):
    space, q = space_line5, space_line5.q
    reps = q.morphisms.reps
    m1 = one_step(space, "1", ("1",), "1", ("e12", 1), reps[0])
    m2 = one_step(space, "1", ("1",), "1", ("e12", 1), reps[1])
    assert not space.mor_equal(m1, m2)


def test_walk_mismatch_short_circuits(space_line5):
    space, q = space_line5, space_line5.q
    phi = q.morphisms.reps[0]
    m1 = one_step(space, "1", ("1",), "1", ("e12", 1), phi)
    m2 = one_step(space, "1", ("1",), "1", ("e01", -1), phi)
    assert not space.mor_equal(m1, m2)


def test_act_mor_projection_invariant(space_line5):
    space, q = space_line5, space_line5.q
    m = one_step(space, "1", ("1",), "0", ("e01", 1), q.morphisms.reps[2])
    for psi in q.morphisms.reps:
        acted = space.act_mor(m, psi)
        assert space.project(acted).steps == space.project(m).steps


def test_act_mor_on_marker_roundtrip(space_line5):
    space, q = space_line5, space_line5.q
    x = space.canonical_obj("1", "0", q.identity_obj())
    marker = BundleMorphism.identity(x)
    for psi in q.morphisms.reps:
        acted = space.act_mor(marker, psi)
        back = space.act_mor(acted, q.mor_inverse(psi))
        assert space.mor_equal(back, marker)


def test_act_mor_by_identity_fixes(space_line5):
    space, q = space_line5, space_line5.q
    m = one_step(space, "1", ("1",), "1", ("e12", 1), q.morphisms.reps[1])
    unit = q.identity_mor_at(q.identity_obj())
    assert space.mor_equal(space.act_mor(m, unit), m)


def test_mor_compose_requires_matching_endpoints(space_line5):
    space, q = space_line5, space_line5.q
    phi = q.morphisms.reps[0]
    m1 = one_step(space, "1", ("1",), "0", ("e01", 1), phi)
    m2 = one_step(space, "1", ("1",), "0", ("e01", 1), phi)
    t1 = space.mor_endpoints(m1)[1]
    if space.mor_endpoints(m2)[0] != t1:
        with pytest.raises(CompositionError):
            space.mor_compose(m1, m2)


def test_mor_compose_concatenates_walks(space_line5):
    space, q = space_line5, space_line5.q
    m1 = one_step(space, "1", ("1",), "0", ("e01", 1),
                  q.identity_mor_at(q.identity_obj()))
    t = space.mor_endpoints(m1)[1]
    m2 = one_step(space, "1", ("1",), "1", ("e12", 1),
                  q.identity_mor_at(t.fiber))
    out = space.mor_compose(m1, m2)
    assert space.project(out).steps == (("e01", 1), ("e12", 1))


def test_lift_walk_projects_back(space_line5):
    space = space_line5
    for steps in ([("e01", 1)], [("e01", 1), ("e12", 1)],
                  [("e12", 1), ("e12", -1)]):
        walk = space.cover.walk("0" if steps[0][0] == "e01" else "1", steps)
        m, err = space.lift_walk(walk)
        assert err is None
        got = space.project(m)
        assert (got.start, got.steps) == (walk.start, walk.steps)


def test_lift_identity_walk_is_marker(space_line5):
    space = space_line5
    m, err = space.lift_walk(space.cover.identity_walk("2"))
    assert err is None and m.is_identity
    assert m.at.fiber == space.q.identity_obj()


def test_unit_split_then_compact_is_walk_length(space_line5w):
    space, q = space_line5w, space_line5w.q
    for st in enumerate_chains(space, 2, frozenset({"1", "2", "3"}))[:400]:
        m = space.to_chain(st)
        compacted = space._compact(space.unit_split(m))
        walk = space.project(m)
        assert len(compacted) == max(1, len(walk.steps))
        assert space._walk_sig(compacted) == space._walk_sig(st)


def test_zero_length_edges_rejected_on_directed_base(space_dirline3):
    space, q = space_dirline3, space_dirline3.q
    edge = QuiverEdge("1", ("1",), space.cover.identity_walk("1"),
                      q.identity_mor_at(q.identity_obj()))
    with pytest.raises(SchemaError):
        space.validate_edge(edge)


def test_empty_chain_rejected():
    with pytest.raises(SchemaError):
        BundleMorphism.chain([])


def test_corrupted_data_fails_precondition(chain_s3):
    cover = cover_line5w()
    gc = generate_gerbal(chain_s3, cover, 7, noise=True)
    key = next(k for k in sorted(gc.h) if k[0] != k[1])
    gc.h[key] = next(x for x in chain_s3.H.elements if x != gc.h[key])
    fc_bad = FunctorialCocycle.from_cocycle(gc, verify=False)
    q = build_quotient(chain_s3, variant_for(chain_s3))
    with pytest.raises(PreconditionError):
        BundleSpace(fc_bad, q)


def test_trivialization_needs_identity_edges(space_dirline3):
    with pytest.raises(PreconditionError):
        LocalTrivialization(space_dirline3, "1", ("1",))


def test_trivialization_checks_pass_on_line5(space_line5):
    triv = LocalTrivialization(space_line5, "1", ("1", "2"))
    rep = triv.check(max_len=2, max_units=2)
    assert rep.ok, rep.failures()


def test_trivialization_on_pair_identity_case(space_line5):
    space, q = space_line5, space_line5.q
    triv = LocalTrivialization(space_line5, "1", ("1",))
    m = triv.on_pair(space.cover.identity_walk("1"),
                     q.identity_mor_at(q.identity_obj()))
    assert m.is_identity


def test_bundle_axioms_on_line5(space_line5):
    rep = check_bundle_axioms(space_line5, max_len=2, max_units=2)
    assert rep.ok, rep.failures()
    ids = {c.check_id for c in rep.checks}
    assert "bundle.proj.obj_surjective" in ids
    assert "bundle.action.obj_free" in ids
    assert "bundle.compose.representative_free" in ids
