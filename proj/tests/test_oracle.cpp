#include <doctest.h>

#include "planemf/errors.hpp"
#include "planemf/generators.hpp"
#include "planemf/io.hpp"
#include "planemf/multicut.hpp"
#include "planemf/oracle.hpp"

using namespace planemf;

namespace {

Instance parallel_bundle(int supply_edges, long long cap) {
    // two vertices joined by a fan of parallel supply edges plus one demand
    EmbeddingBuilder b;
    b.add_vertex();
    b.add_vertex();
    std::vector<EdgeRole> role;
    std::vector<long long> capacity;
    for (int i = 0; i < supply_edges; ++i) {
        b.add_edge_raw(0, 1);
        role.push_back(EdgeRole::supply);
        capacity.push_back(cap);
    }
    b.add_edge_raw(0, 1);
    role.push_back(EdgeRole::demand);
    capacity.push_back(0);
    int m = supply_edges + 1;
    for (int e = 0; e < m; ++e) b.rotation[0].push_back(2 * e);
    for (int e = m - 1; e >= 0; --e) b.rotation[1].push_back(2 * e + 1);
    return make_instance(std::move(b), std::move(role), std::move(capacity), 0);
}

}  // namespace

TEST_CASE("minimum multicut on the ladder family") {
    for (int k = 3; k <= 6; ++k) {
        Instance inst = gen_gk(k);
        auto r = exact_min_multicut(inst);
        CHECK(r.value == k - 1);
        CHECK(verify_multicut(inst, r.multicut));
    }
    CHECK(exact_min_multicut(gen_c4_2k2_overline()).value == 2);
}

TEST_CASE("minimum multicut trivial and oversized cases") {
    std::string text =
        "planemf 1\nvertices 3\nedge 0 1 supply 1\nedge 1 2 supply 1\nedge 2 0 supply 1\n"
        "rotation 0 0 2\nrotation 1 1 0\nrotation 2 2 1\nouter 0\n";
    Instance tri = parse(text);
    auto r = exact_min_multicut(tri);
    CHECK(r.value == 0);
    CHECK(r.multicut.empty());
    CHECK_THROWS_AS(exact_min_multicut(parallel_bundle(23, 1)), too_large&);
}

TEST_CASE("maximum integer flow on the ladder family") {
    for (int k = 3; k <= 6; ++k) {
        Instance inst = gen_gk(k);
        PathSet ps = enumerate_paths(inst);
        auto r = exact_max_integer_flow(inst, ps);
        CHECK(r.value == Rational(k / 2));
        CHECK(r.flow.is_integer());
        CHECK(check_feasible(inst, r.flow).feasible);
    }
    Instance c4 = gen_c4_2k2_overline();
    CHECK(exact_max_integer_flow(c4, enumerate_paths(c4)).value == Rational(1));
}

TEST_CASE("a single parallel path of capacity three carries three units") {
    Instance inst = parallel_bundle(1, 3);
    PathSet ps = enumerate_paths(inst);
    REQUIRE(ps.size() == 1);
    auto r = exact_max_integer_flow(inst, ps);
    CHECK(r.value == Rational(3));
}

TEST_CASE("maximum half-integer flow on the ladder family") {
    for (int k = 3; k <= 6; ++k) {
        Instance inst = gen_gk(k);
        PathSet ps = enumerate_paths(inst);
        auto r = exact_max_half_integer_flow(inst, ps);
        CHECK(r.value == Rational(k, 2));
        CHECK(r.flow.is_half_integer());
        CHECK(check_feasible(inst, r.flow).feasible);
    }
    Instance c4 = gen_c4_2k2_overline();
    CHECK(exact_max_half_integer_flow(c4, enumerate_paths(c4)).value == Rational(2));
    // demand-free
    std::string text =
        "planemf 1\nvertices 3\nedge 0 1 supply 1\nedge 1 2 supply 1\nedge 2 0 supply 1\n"
        "rotation 0 0 2\nrotation 1 1 0\nrotation 2 2 1\nouter 0\n";
    Instance tri = parse(text);
    CHECK(exact_max_half_integer_flow(tri, enumerate_paths(tri)).value.is_zero());
}

TEST_CASE("oracle sandwich on small instances") {
    std::vector<Instance> corpus;
    for (int k = 3; k <= 6; ++k) corpus.push_back(gen_gk(k));
    corpus.push_back(gen_c4_2k2_overline());
    for (uint64_t seed = 1; seed <= 10; ++seed) corpus.push_back(gen_fuzz(seed));
    for (const Instance& inst : corpus) {
        PathSet ps = enumerate_paths(inst, 400);
        Rational frac = max_multiflow(inst, ps).value;
        try {
            auto oi = exact_max_integer_flow(inst, ps);
            auto oh = exact_max_half_integer_flow(inst, ps);
            auto om = exact_min_multicut(inst);
            CHECK(!(oi.value > oh.value));
            CHECK(!(oh.value > frac));
            CHECK(!(frac > Rational(om.value)));
            // the doubling equivalence is exact
            Instance doubled = inst;
            for (auto& c : doubled.capacity) c *= 2;
            auto oi2 = exact_max_integer_flow(doubled, ps);
            CHECK(oh.value * Rational(2) == oi2.value);
        } catch (const too_large&) {
            // oversized fuzz instances are allowed to skip the oracles
        }
    }
}
