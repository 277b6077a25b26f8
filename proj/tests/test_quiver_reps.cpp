#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <clusterforge/errors.hpp>
#include <clusterforge/invariants.hpp>
#include <clusterforge/json_io.hpp>
#include <clusterforge/quiver_rep.hpp>

#include <string>

using namespace clusterforge;

namespace {

IceQuiver a2q() { return make_quiver(2, 2, {{1, 2}}); }
IceQuiver a3q() { return make_quiver(3, 3, {{1, 2}, {2, 3}}); }

QuiverRep rep(const IceQuiver& q, std::vector<int> dim,
              std::vector<std::vector<std::vector<int64_t>>> maps) {
    QuiverRep r{q, std::move(dim), std::move(maps)};
    validate(r);
    return r;
}

QuiverRep s1() { return rep(a2q(), {1, 0}, {{}}); }
QuiverRep s2() { return rep(a2q(), {0, 1}, {{{}}}); }
QuiverRep p1() { return rep(a2q(), {1, 1}, {{{1}}}); }
// P1 + S1, the direct sum
QuiverRep p1s1() { return rep(a2q(), {2, 1}, {{{1, 0}}}); }

QuiverRep from_fixture(const std::string& name) {
    return rep_from_json(load_text_file(std::string(CLUSTERFORGE_DATA_DIR) +
                                        "/" + name));
}

} // namespace

TEST_CASE("rep_validate_test") {
    CHECK_NOTHROW(validate(zero_rep(a3q())));
    // matrix shape must be dim[target] x dim[source]
    CHECK_THROWS_AS(rep(a2q(), {1, 1}, {{}}), schema_error);
    CHECK_THROWS_AS(rep(a2q(), {1, 1}, {{{1, 1}}}), schema_error);
    CHECK_THROWS_AS(rep(a2q(), {1}, {{{1}}}), schema_error);
    CHECK_THROWS_AS(rep(a2q(), {1, -1}, {{{}}}), schema_error);
    // no frozen vertices, no cycles
    CHECK_THROWS_AS(validate(QuiverRep{make_quiver(2, 1, {}), {1, 1}, {}}),
                    schema_error);
    IceQuiver cyc = make_quiver(3, 3, {{1, 2}, {2, 3}, {3, 1}});
    CHECK_THROWS_AS(validate(zero_rep(cyc)), schema_error);
}

TEST_CASE("standard_reps_test") {
    QuiverRep s = simple_rep(a2q(), 1);
    CHECK(s.dim == std::vector<int>{1, 0});
    CHECK(s.maps == s1().maps);

    QuiverRep p = projective_rep(a2q(), 1);
    CHECK(p.dim == p1().dim);
    CHECK(p.maps == p1().maps);
    // vertex 2 is a sink, so its projective is the simple
    CHECK(projective_rep(a2q(), 2).dim == std::vector<int>{0, 1});

    // over A3, the projective at 1 is the full interval
    CHECK(projective_rep(a3q(), 1).dim == std::vector<int>{1, 1, 1});

    CHECK_THROWS_AS(simple_rep(a2q(), 3), schema_error);
    CHECK_THROWS_AS(projective_rep(a2q(), 0), schema_error);
}

TEST_CASE("euler_form_test") {
    CHECK(euler_form(a2q(), {1, 0}, {0, 1}) == -1);
    CHECK(euler_form(a2q(), {0, 1}, {1, 0}) == 0);
    CHECK(euler_form(a2q(), {1, 1}, {1, 1}) == 1);
    CHECK(euler_form(a3q(), {1, 1, 1}, {1, 1, 1}) == 1);
    CHECK_THROWS_AS(euler_form(a2q(), {1}, {0, 1}), schema_error);
}

TEST_CASE("hom_ext_test") {
    // Hom(P_i, M) is the fiber of M over vertex i
    CHECK(hom_dim(p1(), s2()) == 0);
    CHECK(hom_dim(p1(), s1()) == 1);
    CHECK(hom_dim(p1(), p1()) == 1);
    CHECK(hom_dim(s1(), s2()) == 0);
    CHECK(hom_dim(s2(), p1()) == 1);

    CHECK(ext1_dim(s1(), s2()) == 1);
    CHECK(ext1_dim(s2(), s1()) == 0);
    CHECK(ext1_dim(p1(), p1()) == 0);

    CHECK(is_rigid(s1()));
    CHECK(is_rigid(s2()));
    CHECK(is_rigid(p1()));
    // S1 + S2 deforms to P1, so the sum is not rigid
    QuiverRep sum = rep(a2q(), {1, 1}, {{{0}}});
    CHECK(ext1_dim(sum, sum) == 1);
    CHECK_FALSE(is_rigid(sum));
    CHECK(is_rigid(p1s1()));

    CHECK_THROWS_AS(hom_dim(s1(), zero_rep(a3q())), schema_error);
}

TEST_CASE("g_from_presentation_test") {
    // projectives sit in degree zero: g(P_i) = e_i
    CHECK(g_from_presentation(projective_rep(a2q(), 1)) ==
          std::vector<int64_t>{1, 0});
    CHECK(g_from_presentation(projective_rep(a2q(), 2)) ==
          std::vector<int64_t>{0, 1});
    CHECK(g_from_presentation(projective_rep(a3q(), 1)) ==
          std::vector<int64_t>{1, 0, 0});
    // S1 has presentation P2 -> P1: g = e_1 - e_2
    CHECK(g_from_presentation(s1()) == std::vector<int64_t>{1, -1});
    CHECK(g_from_presentation(zero_rep(a2q())) == std::vector<int64_t>{0, 0});
    CHECK(g_from_presentation(p1s1()) == std::vector<int64_t>{2, -1});
}

TEST_CASE("submodule_count_test") {
    CHECK(count_submodules_mod_p(p1(), {0, 0}, 2) == 1);
    CHECK(count_submodules_mod_p(p1(), {0, 1}, 2) == 1);
    CHECK(count_submodules_mod_p(p1(), {1, 1}, 2) == 1);
    // the image of a subspace must land inside the chosen subspace
    CHECK(count_submodules_mod_p(p1(), {1, 0}, 2) == 0);
    // dimension vectors outside the rep count zero
    CHECK(count_submodules_mod_p(p1(), {2, 0}, 2) == 0);

    // P1 + S1 at e = (1,1): one line in a plane is free, so p + 1 choices
    for (int64_t p : {2, 3, 5, 7}) {
        CHECK(count_submodules_mod_p(p1s1(), {1, 1}, p) == p + 1);
    }

    CHECK_THROWS_AS(count_submodules_mod_p(p1(), {1, 1}, 6), schema_error);
    CHECK_THROWS_AS(count_submodules_mod_p(p1(), {1}, 2), schema_error);

    QuiverRep big = rep(a3q(), {3, 3, 3},
                        {std::vector<std::vector<int64_t>>(3, {0, 0, 0}),
                         std::vector<std::vector<int64_t>>(3, {0, 0, 0})});
    CHECK_THROWS_AS(count_submodules_mod_p(big, {1, 1, 1}, 2), bound_exceeded);
    QuiverRep wide = rep(a2q(), {4, 0}, {{}});
    CHECK_THROWS_AS(count_submodules_mod_p(wide, {1, 0}, 2), bound_exceeded);
}

TEST_CASE("euler_char_test") {
    CHECK(grassmannian_euler_char(p1(), {0, 1}) == 1);
    CHECK(grassmannian_euler_char(p1(), {1, 0}) == 0);
    // Gr_(1,1) of P1 + S1 is a projective line
    CHECK(grassmannian_euler_char(p1s1(), {1, 1}) == 2);
    CHECK(grassmannian_euler_char(zero_rep(a2q()), {0, 0}) == 1);
}

TEST_CASE("module_f_polynomial_test") {
    CHECK(module_F_polynomial(zero_rep(a2q())).str("y") == "1");
    CHECK(module_F_polynomial(s1()).str("y") == "1 + y1");
    CHECK(module_F_polynomial(s2()).str("y") == "1 + y2");
    CHECK(module_F_polynomial(p1()).str("y") == "1 + y2 + y1*y2");
    // direct sums multiply
    CHECK(module_F_polynomial(p1s1()) ==
          module_F_polynomial(p1()) * module_F_polynomial(s1()));
    CHECK(module_F_polynomial(from_fixture("rep_a3_m13.json")).str("y") ==
          "1 + y3 + y2*y3 + y1*y2*y3");
    // the f-vector of a module's F-polynomial is its dimension vector
    for (const QuiverRep& m : {s1(), s2(), p1(), p1s1()}) {
        std::vector<int64_t> d(m.dim.begin(), m.dim.end());
        CHECK(f_vector(module_F_polynomial(m)) == d);
    }
}

TEST_CASE("match_test") {
    // the three indecomposables of A2 account for all non-initial variables
    MatchReport m = match_against_traversal(a2q(), {s1(), s2(), p1()});
    CHECK(m.matched);
    CHECK(m.variables == 3);
    CHECK(m.reps == 3);
    CHECK(m.mismatches.empty());

    // likewise the six interval modules of A3
    std::vector<QuiverRep> intervals;
    for (const char* name : {"rep_a3_s1.json", "rep_a3_s2.json", "rep_a3_s3.json",
                             "rep_a3_m12.json", "rep_a3_m23.json",
                             "rep_a3_m13.json"})
        intervals.push_back(from_fixture(name));
    MatchReport m3 = match_against_traversal(a3q(), intervals);
    CHECK(m3.matched);
    CHECK(m3.variables == 6);

    // dropping a rep leaves an unexplained pattern variable
    MatchReport bad = match_against_traversal(a2q(), {s1(), s2()});
    CHECK_FALSE(bad.matched);
    REQUIRE(bad.mismatches.size() == 1);
    CHECK(bad.mismatches[0] == "pattern only: 1 + y2 + y1*y2");

    // the empty statement about the empty quiver holds
    MatchReport trivial = match_against_traversal(make_quiver(0, 0, {}), {});
    CHECK(trivial.matched);
    CHECK(trivial.variables == 0);

    // a starved budget is reported, not mistaken for a mismatch in substance
    MatchReport starved = match_against_traversal(a2q(), {s1()}, 2);
    CHECK_FALSE(starved.matched);
    REQUIRE(starved.mismatches.size() == 1);
    CHECK(starved.mismatches[0] == "traversal budget exhausted before closure");

    CHECK_THROWS_AS(match_against_traversal(make_quiver(2, 1, {}), {}),
                    schema_error);
    CHECK_THROWS_AS(match_against_traversal(a3q(), {s1()}), schema_error);
}

TEST_CASE("rep_json_test") {
    QuiverRep p = from_fixture("rep_a2_p1.json");
    CHECK(p.quiver == p1().quiver);
    CHECK(p.dim == p1().dim);
    CHECK(p.maps == p1().maps);
    CHECK(from_fixture("rep_a2_s1.json").maps == s1().maps);
    CHECK(from_fixture("rep_a2_s2.json").maps == s2().maps);

    // writer and reader are mutually inverse
    QuiverRep back = rep_from_json(rep_to_json(p1s1()));
    CHECK(back.quiver == p1s1().quiver);
    CHECK(back.dim == p1s1().dim);
    CHECK(back.maps == p1s1().maps);

    CHECK_THROWS_AS(rep_from_json("{\"quiver\": 3}"), schema_error);
    CHECK_THROWS_AS(rep_from_json("not json"), schema_error);
    // arrows in the file must match arrows of the quiver
    CHECK_THROWS_AS(
        rep_from_json("{\"quiver\": {\"vertices\": 2, \"frozen\": [], "
                      "\"arrows\": [[1,2]]}, \"dim\": [1,1], \"arrows\": "
                      "[{\"from\": 2, \"to\": 1, \"matrix\": [[1]]}]}"),
        schema_error);
    // every quiver arrow needs its matrix
    CHECK_THROWS_AS(
        rep_from_json("{\"quiver\": {\"vertices\": 2, \"frozen\": [], "
                      "\"arrows\": [[1,2]]}, \"dim\": [1,1], \"arrows\": []}"),
        schema_error);
}
