#include <doctest.h>

#include <set>

#include "sekine/lattice.hpp"

using namespace sekine;

namespace {

const Catalog& catalog_of(int k) {
    static std::map<int, Catalog> cache;
    auto it = cache.find(k);
    if (it == cache.end()) it = cache.emplace(k, enumerate_catalog(k)).first;
    return it->second;
}

std::size_t index_of(const Catalog& cat, const std::string& name) {
    for (std::size_t i = 0; i < cat.size(); ++i)
        if (descriptor_name(cat.members[i].descriptor) == name) return i;
    REQUIRE(false);
    return 0;
}

} // namespace

TEST_CASE("extremal elements") {
    for (int k : {2, 3, 4}) {
        const Catalog& cat = catalog_of(k);
        const Functional& eps = cat.members[cat.counit_index()].state;
        const Functional& h = cat.members[cat.haar_index()].state;
        for (const auto& m : cat.members) {
            CHECK(precedes(eps, m.state));
            CHECK(precedes(m.state, h));
            CHECK(precedes(m.state, m.state)); // reflexive
        }
    }
}

TEST_CASE("order on the k=2 diagonal-kappa pair") {
    const Catalog& cat = catalog_of(2);
    const Functional& hplus = cat.members[index_of(cat, "h_G[1,0;0,2]")].state;
    const Functional& h20 = cat.members[index_of(cat, "h_{2,0}")].state;
    const Functional& h21 = cat.members[index_of(cat, "h_{2,1}")].state;
    CHECK(precedes(hplus, h21));
    CHECK(precedes(hplus, h20));
    CHECK_FALSE(precedes(h21, h20));
    CHECK_FALSE(precedes(h20, h21));
}

TEST_CASE("fourier criterion matches the convolution order") {
    for (int k : {2, 3, 4, 5}) {
        const Catalog& cat = catalog_of(k);
        for (const auto& a : cat.members)
            for (const auto& b : cat.members)
                CHECK(precedes(a.state, b.state) == precedes_fourier(a.state, b.state));
    }
}

TEST_CASE("descriptor rules match the convolution order") {
    for (int k : {2, 3, 4, 5, 6}) {
        const Catalog& cat = catalog_of(k);
        for (const auto& a : cat.members)
            for (const auto& b : cat.members)
                CHECK(precedes(a.state, b.state) ==
                      theoretic_precedes(a.descriptor, b.descriptor, k));
    }
}

TEST_CASE("descriptor rule details at k=4") {
    const int k = 4;
    const TypeIIDesc t2_q4_l1{4, 1};
    const TypeIIDesc t2_q2_l1{2, 1};
    const TypeIIDesc t2_q2_l0{2, 0};
    // finer congruence class sits below the coarser one matching mod 2
    CHECK(theoretic_precedes(t2_q4_l1, t2_q2_l1, k));
    CHECK(theoretic_precedes(t2_q4_l1, IdempotentDescriptor(TypeIIDesc{4, 3}), k) == false);
    CHECK_FALSE(theoretic_precedes(t2_q4_l1, t2_q2_l0, k));
    CHECK_FALSE(theoretic_precedes(t2_q2_l1, t2_q4_l1, k));

    // both sign patterns at (p,q)=(2,2) sit below the matching diagonal state
    const auto taus = enumerate_tau(k, 2);
    REQUIRE(taus.size() == 2);
    for (const TauVector& tau : taus) {
        const TypeIIIDesc t3{2, 2, 1, tau};
        CHECK(theoretic_precedes(t3, t2_q2_l1, k));
        CHECK_FALSE(theoretic_precedes(t3, t2_q2_l0, k));
        CHECK_FALSE(theoretic_precedes(t2_q2_l1, t3, k)); // never downward
        CHECK_FALSE(theoretic_precedes(t3, IdempotentDescriptor(TypeIIDesc{4, 1}), k));
    }
    // distinct signed states never compare
    const TypeIIIDesc a{2, 2, 0, taus[0]};
    const TypeIIIDesc b{2, 2, 0, taus[1]};
    CHECK(theoretic_precedes(a, a, k));
    CHECK_FALSE(theoretic_precedes(a, b, k));
    CHECK_FALSE(theoretic_precedes(b, a, k));
}

TEST_CASE("build_order asserts the axioms and the two routes agree") {
    for (int k : {2, 3, 4}) {
        const Catalog& cat = catalog_of(k);
        const OrderRelation rel = build_order(cat);
        const OrderRelation theo = build_order_theoretic(cat);
        CHECK(rel.bits == theo.bits);
        for (int i = 0; i < rel.n; ++i) CHECK(rel.at(i, i));
    }
}

TEST_CASE("hasse diagram for k=2 matches the reference") {
    const Catalog& cat = catalog_of(2);
    const HasseDiagram hd = hasse(cat, build_order(cat));
    CHECK(hd.node_count() == 10);
    CHECK(hd.covers.size() == 15);

    std::set<std::pair<std::string, std::string>> got;
    for (const auto& [lo, hi] : hd.covers)
        got.insert({hd.labels[static_cast<std::size_t>(lo)],
                    hd.labels[static_cast<std::size_t>(hi)]});
    const std::set<std::pair<std::string, std::string>> want = {
        {"eps", "h_G[1,0;0,2]"},      {"eps", "h_G[2,0;0,1]"},
        {"eps", "h_G[1,1;0,2]"},      {"h_G[1,0;0,2]", "h_G[1,0;0,1]"},
        {"h_G[1,0;0,2]", "h_{2,0}"},  {"h_G[1,0;0,2]", "h_{2,1}"},
        {"h_G[2,0;0,1]", "h_G[1,0;0,1]"}, {"h_G[2,0;0,1]", "h_{2,0,++}"},
        {"h_G[2,0;0,1]", "h_{2,0,+-}"},   {"h_G[1,1;0,2]", "h_G[1,0;0,1]"},
        {"h_G[1,0;0,1]", "h"},        {"h_{2,0}", "h"},
        {"h_{2,1}", "h"},             {"h_{2,0,++}", "h"},
        {"h_{2,0,+-}", "h"}};
    CHECK(got == want);
}

TEST_CASE("prime orders have the three-layer diagram") {
    for (int k : {3, 5}) {
        const Catalog& cat = catalog_of(k);
        const HasseDiagram hd = hasse(cat, build_order(cat));
        const std::size_t eps = cat.counit_index();
        const std::size_t haar = cat.haar_index();
        int from_eps = 0, to_haar = 0;
        for (const auto& [lo, hi] : hd.covers) {
            const auto& lo_d = cat.members[static_cast<std::size_t>(lo)].descriptor;
            const auto& hi_d = cat.members[static_cast<std::size_t>(hi)].descriptor;
            if (static_cast<std::size_t>(lo) == eps) {
                ++from_eps;
                // the middle layer consists of the order-k subgroups
                const auto* g = std::get_if<HaarSubDesc>(&hi_d);
                REQUIRE(g != nullptr);
                CHECK(g->gamma.order() == k);
            }
            if (static_cast<std::size_t>(hi) == haar) {
                ++to_haar;
                CHECK_FALSE(std::holds_alternative<HaarDesc>(lo_d));
                if (const auto* g = std::get_if<HaarSubDesc>(&lo_d))
                    CHECK(g->gamma.order() == k * k);
            }
        }
        CHECK(from_eps == k + 1);
    }
}

TEST_CASE("transitive reduction on hand-built relations") {
    // chain of three: only two cover edges survive
    OrderRelation chain(3);
    for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) chain.set(i, j, true);
    CHECK(cover_edges(chain) == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});

    OrderRelation cyclic(2);
    cyclic.set(0, 0, true);
    cyclic.set(1, 1, true);
    cyclic.set(0, 1, true);
    cyclic.set(1, 0, true);
    CHECK_THROWS_AS(cover_edges(cyclic), std::invalid_argument);

    OrderRelation not_transitive(3);
    for (int i = 0; i < 3; ++i) not_transitive.set(i, i, true);
    not_transitive.set(0, 1, true);
    not_transitive.set(1, 2, true);
    CHECK_THROWS_AS(cover_edges(not_transitive), std::invalid_argument);

    OrderRelation single(1);
    single.set(0, 0, true);
    const HasseDiagram hd = hasse(single, {"only"});
    CHECK(hd.covers.empty());
    const std::string dot = export_dot(hd);
    CHECK(dot.find("->") == std::string::npos);
}

TEST_CASE("dot export is deterministic") {
    const Catalog& cat = catalog_of(2);
    const std::string one = export_dot(hasse(cat, build_order(cat)));
    const Catalog again = enumerate_catalog(2);
    const std::string two = export_dot(hasse(again, build_order(again)));
    CHECK(one == two);

    int nodes = 0, edges = 0;
    std::istringstream is(one);
    for (std::string line; std::getline(is, line);) {
        if (line.find("label=") != std::string::npos) ++nodes;
        if (line.find("->") != std::string::npos) ++edges;
    }
    CHECK(nodes == 10);
    CHECK(edges == 15);
}

TEST_CASE("fourier support monotonicity along the order") {
    for (int k : {2, 3, 4}) {
        const Catalog& cat = catalog_of(k);
        const OrderRelation rel = build_order(cat);
        std::vector<std::vector<FourierMatrix>> fts;
        for (const auto& m : cat.members) fts.push_back(fourier_all(m.state));
        for (std::size_t i = 0; i < cat.size(); ++i)
            for (std::size_t j = 0; j < cat.size(); ++j) {
                if (!rel.at(static_cast<int>(i), static_cast<int>(j))) continue;
                for (std::size_t t = 0; t < fts[i].size(); ++t) {
                    // zero set grows upward, identity set grows downward
                    if (fts[i][t].m.cwiseAbs().maxCoeff() < 1e-12)
                        CHECK(fts[j][t].m.cwiseAbs().maxCoeff() < 1e-9);
                    if ((fts[j][t].m - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() <
                        1e-12)
                        CHECK((fts[i][t].m - Eigen::Matrix2cd::Identity())
                                  .cwiseAbs()
                                  .maxCoeff() < 1e-9);
                }
            }
    }
}
