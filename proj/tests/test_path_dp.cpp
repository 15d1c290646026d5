#include <doctest.h>

#include <array>
#include <stdexcept>
#include <vector>

#include "cwcount/expression_io.hpp"
#include "cwcount/generators.hpp"
#include "cwcount/labeled_graph.hpp"
#include "cwcount/oracle.hpp"
#include "cwcount/path_dp.hpp"

using namespace cwcount;

namespace {

PairVector pv(int width, std::initializer_list<std::array<int, 3>> entries) {
    PairVector k(width);
    for (const auto& e : entries) k.set(e[0], e[1], e[2]);
    return k;
}

}  // namespace

// ---- leaf and small graphs --------------------------------------------------

TEST_CASE("singleton path table") {
    PMNodeResult r = pm_singleton(2, 3);
    CHECK(r.vertex_count == 1);
    REQUIRE(r.table.size() == 1);
    CHECK(lookup(r.table, PairVector::delta(0, 2, 3)) == 1);
}

TEST_CASE("two vertex clique path classes") {
    PMNodeResult root = run_pm(gen_clique(2));
    CHECK(table_mass(root.table) == 2);
    CHECK(lookup(root.table, pv(2, {{{0, 1, 2}}})) == 1);
    CHECK(lookup(root.table, pv(2, {{{1, 1, 1}}})) == 1);
}

TEST_CASE("path matchings of a path are its edge subsets") {
    for (int n = 2; n <= 12; ++n) {
        PMNodeResult root = run_pm(gen_path(n));
        BigCount expect = 1;
        expect <<= (n - 1);
        CHECK(table_mass(root.table) == expect);
    }
}

TEST_CASE("path counts on small graphs") {
    CHECK(count_paths(gen_path(4)) == 6);
    CHECK(count_paths(gen_clique(4)) == 30);
    CHECK(count_paths(gen_clique(5)) == 160);
    CHECK(count_paths(gen_complete_bipartite(1, 3)) == 6);
    CHECK(count_paths(Expr::singleton(1)) == 0);
}

TEST_CASE("path matching totals") {
    PathMatchingTotals k4 = count_path_matchings(gen_clique(4));
    CHECK(k4.including_empty == 34);
    CHECK(k4.excluding_empty == 33);

    PathMatchingTotals star = count_path_matchings(gen_complete_bipartite(1, 3));
    CHECK(star.including_empty == 7);
    CHECK(star.excluding_empty == 6);
}

// ---- edge creation from a source class --------------------------------------

TEST_CASE("remaining extremities of one label") {
    PairVector source = pv(2, {{{0, 1, 2}}, {{1, 1, 1}}, {{1, 2, 3}}, {{0, 2, 5}}});
    std::vector<int> x = remaining_from_source(1, source);
    REQUIRE(x.size() == 3);
    CHECK(x[0] == 2);
    CHECK(x[1] == 2);
    CHECK(x[2] == 3);
}

TEST_CASE("extension counts between two uncovered vertices") {
    PairVector source = pv(2, {{{0, 1, 1}}, {{0, 2, 1}}});
    CHECK(derive_N(1, 2, source, source) == 1);
    CHECK(derive_N(1, 2, source, pv(2, {{{1, 2, 1}}})) == 1);
    CHECK(derive_N(1, 2, source, pv(2, {{{1, 1, 1}}})) == 0);
    CHECK(derive_N(2, 1, source, pv(2, {{{1, 2, 1}}})) == 1);
}

TEST_CASE("extension counts with two vertices of the joined label") {
    // Two uncovered label 1 vertices and one uncovered label 2 vertex; the
    // new edges form a star around the label 2 vertex.
    PairVector source = pv(2, {{{0, 1, 2}}, {{0, 2, 1}}});
    CHECK(derive_N(1, 2, source, source) == 1);
    CHECK(derive_N(1, 2, source, pv(2, {{{0, 1, 1}}, {{1, 2, 1}}})) == 2);
    CHECK(derive_N(1, 2, source, pv(2, {{{1, 1, 1}}})) == 1);
    CHECK(derive_N(1, 2, source, pv(2, {{{0, 1, 2}}, {{1, 2, 1}}})) == 0);
}

TEST_CASE("distribution over a path plus two loose vertices") {
    // Source: one path with both extremities label 1, one uncovered label 1
    // vertex, one uncovered label 2 vertex.  The label 2 vertex can absorb
    // up to two new edges; closing the path into a cycle is excluded.
    PairVector source = pv(2, {{{1, 1, 1}}, {{0, 1, 1}}, {{0, 2, 1}}});
    ExtensionEngine engine(1, 2, 2);
    const PMTable& dist = engine.distribution(source);
    CHECK(table_mass(dist) == 6);
    CHECK(engine.count(source, source) == 1);
    CHECK(engine.count(source, pv(2, {{{1, 1, 1}}, {{1, 2, 1}}})) == 1);
    CHECK(engine.count(source, pv(2, {{{1, 2, 1}}, {{0, 1, 1}}})) == 2);
    CHECK(engine.count(source, pv(2, {{{1, 1, 1}}})) == 2);
}

TEST_CASE("engine distribution matches enumeration and ignores the witness") {
    // Two disjoint label 1 edges plus an isolated label 2 vertex; the two
    // single edge path matchings fall in the same class.
    ParseResult r = parse_expression(
        "(u (u (ren 2 1 (e 1 2 (u (v 1) (v 2)))) (ren 2 1 (e 1 2 (u (v 1) (v 2))))) (v 2))");
    LabeledGraph g = evaluate(r.expr, r.width);
    REQUIRE(g.vertex_count() == 5);
    REQUIRE(g.edge_count() == 2);

    EdgeSubset first = {g.edges[0]};
    EdgeSubset second = {g.edges[1]};
    PairVector cls = classify_path_matching(g, first);
    REQUIRE(cls == classify_path_matching(g, second));

    PMTable via_first = enumerate_extensions(g, first, 1, 2);
    PMTable via_second = enumerate_extensions(g, second, 1, 2);
    CHECK_FALSE(first_difference(via_first, via_second).has_value());

    ExtensionEngine engine(1, 2, r.width);
    CHECK_FALSE(first_difference(engine.distribution(cls), via_first).has_value());
}

TEST_CASE("odd extremity counts are rejected") {
    PairVector zero(2);
    std::vector<int> x = {0, 1, 0};
    TMemo memo;
    CHECK_THROWS_AS(t_value(1, 2, zero, zero, x, memo), std::logic_error);
}

TEST_CASE("engine labels must differ") {
    CHECK_THROWS_AS(ExtensionEngine(1, 1, 2), std::invalid_argument);
}

// ---- structural properties over the random corpus ---------------------------

TEST_CASE("class keys stay inside the vertex budget") {
    for (std::uint64_t seed = 700; seed < 740; ++seed) {
        CorpusInstance inst = random_corpus_instance(seed, 7, 3);
        PMNodeResult root = run_pm(inst.expr, inst.width);
        CHECK(root.vertex_count == inst.expr->leaf_count());
        for (const auto& [key, cnt] : root.table) {
            CHECK(cnt > 0);
            CHECK_FALSE(key.has_negative());
            CHECK(key.uncovered_total() + 2 * key.path_total() <= root.vertex_count);
        }
    }
}

TEST_CASE("mass laws for the three path table constructors") {
    CHECK(table_mass(pm_singleton(1, 3).table) == 1);

    PMNodeResult k3 = run_pm(gen_clique(3), 3);
    PMNodeResult p3 = run_pm(gen_path(3), 3);
    CHECK(table_mass(pm_rename(k3, 1, 2).table) == table_mass(k3.table));
    CHECK(table_mass(pm_union(k3, p3).table) == table_mass(k3.table) * table_mass(p3.table));
}

namespace {

void check_pm_at_every_node(const ExprPtr& e, int width) {
    auto diff = first_difference(run_pm(e, width).table, enumerate_pm(evaluate(e, width)));
    CHECK_FALSE(diff.has_value());
    if (e->left()) check_pm_at_every_node(e->left(), width);
    if (e->right()) check_pm_at_every_node(e->right(), width);
}

}  // namespace

TEST_CASE("path tables equal enumeration at every node of random terms") {
    for (std::uint64_t seed = 800; seed < 820; ++seed) {
        CorpusInstance inst = random_corpus_instance(seed, 7, 3);
        check_pm_at_every_node(inst.expr, inst.width);
    }
}

// ---- spot agreement with enumeration ---------------------------------------

TEST_CASE("path tables equal enumeration on assorted small graphs") {
    std::vector<ExprPtr> terms = {
        gen_path(7),
        gen_clique(5),
        gen_complete_bipartite(2, 3),
        gen_cograph(7, 19),
        parse_expression("(e 1 3 (u (v 3) (e 1 2 (u (u (v 2) (v 2)) "
                         "(ren 2 1 (e 1 2 (u (v 1) (v 2))))))))")
            .expr,
    };
    for (const ExprPtr& t : terms) {
        LabeledGraph g = evaluate(t);
        auto diff = first_difference(run_pm(t).table, enumerate_pm(g));
        CHECK_FALSE(diff.has_value());
        CHECK(count_paths(t) == enumerate_paths(g));
    }
}
