#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <numeric>
#include <set>

#include "sekine/idempotents.hpp"
#include "sekine/walks.hpp"

using namespace sekine;

namespace {

// number of subgroups of Z_k x Z_k, independently of the closure sweep
long subgroup_count_formula(int k) {
    long total = 0;
    for (int a = 1; a <= k; ++a) {
        if (k % a != 0) continue;
        for (int b = 1; b <= k; ++b) {
            if (k % b != 0) continue;
            total += std::gcd(a, b);
        }
    }
    return total;
}

} // namespace

TEST_CASE("subgroup enumeration") {
    for (int k : {2, 3, 5, 7, 11})
        CHECK(static_cast<int>(enumerate_subgroups(k).size()) == k + 3);
    for (int k = 2; k <= 10; ++k)
        CHECK(static_cast<long>(enumerate_subgroups(k).size()) == subgroup_count_formula(k));

    const auto subs2 = enumerate_subgroups(2);
    REQUIRE(subs2.size() == 5);
    using E = std::vector<std::pair<int, int>>;
    CHECK(subs2[0].elements == E{{0, 0}});
    std::set<E> order2;
    for (int i = 1; i <= 3; ++i) order2.insert(subs2[static_cast<std::size_t>(i)].elements);
    CHECK(order2 == std::set<E>{E{{0, 0}, {0, 1}}, E{{0, 0}, {1, 0}}, E{{0, 0}, {1, 1}}});
    CHECK(subs2[4].elements.size() == 4);

    for (int k = 2; k <= 8; ++k)
        for (const Subgroup& g : enumerate_subgroups(k)) {
            CHECK(g.contains(0, 0));
            for (const auto& [a, b] : g.elements) {
                CHECK(g.contains(-a, -b));
                for (const auto& [c, d] : g.elements) CHECK(g.contains(a + c, b + d));
            }
            CHECK(k * k % g.order() == 0);
        }
}

TEST_CASE("span_subgroup") {
    const Subgroup g = span_subgroup(4, {{1, 0}});
    CHECK(g.elements == std::vector<std::pair<int, int>>{{0, 0}, {1, 0}, {2, 0}, {3, 0}});
    const Subgroup full = span_subgroup(3, {{1, 0}, {0, 1}});
    CHECK(full.order() == 9);
}

TEST_CASE("hermite basis of the lifted lattice") {
    const auto subs = enumerate_subgroups(2);
    CHECK(subs[0].hermite_basis() == std::array<int, 4>{2, 0, 0, 2});
    CHECK(subs[4].hermite_basis() == std::array<int, 4>{1, 0, 0, 1});
    for (int k = 2; k <= 8; ++k)
        for (const Subgroup& g : enumerate_subgroups(k)) {
            const auto [a, b, c, d] = g.hermite_basis();
            CHECK(c == 0);
            CHECK(a >= 1);
            CHECK(d >= 1);
            CHECK(b >= 0);
            CHECK(b < d);
            // index of the lattice in Z^2 is a*d, so the subgroup has k^2/(a*d) points
            CHECK(g.order() * a * d == k * k);
        }
}

TEST_CASE("uniform subgroup states") {
    for (int k : {2, 3, 4, 5, 6}) {
        for (const Subgroup& g : enumerate_subgroups(k)) {
            const Functional f = build_haar_sub(g);
            CHECK(std::abs(f.alpha.sum().real() - 1.0) < 1e-12);
            CHECK(std::abs(f.kappa.trace()) < 1e-15);
            CHECK(idempotency_report(f).pass);
        }
        // the trivial subgroup carries the counit
        CHECK(linf_distance(build_haar_sub(enumerate_subgroups(k)[0]),
                            counit_functional(k)) == 0);
        // the full group carries the uniform state on the d-part
        const Functional uniform = build_haar_sub(enumerate_subgroups(k).back());
        CHECK(std::abs(uniform.alpha(k - 1, k - 1).real() - 1.0 / (k * k)) < 1e-15);
    }
}

TEST_CASE("diagonal-kappa states") {
    const Functional phi0 = build_type2(2, 2, 0);
    Functional want = Functional::zero(2);
    want.alpha(0, 0) = want.alpha(1, 0) = 0.25;
    want.kappa(0, 0) = 0.5;
    CHECK(linf_distance(phi0, want) < 1e-15);

    for (int k : {2, 3, 4, 6, 8})
        for (int q = 2; q <= k; ++q) {
            if (k % q != 0) continue;
            for (int l = 0; l < q; ++l) {
                const Functional f = build_type2(k, q, l);
                CHECK(std::abs(f.alpha.sum().real() - 0.5) < 1e-12);
                CHECK(std::abs(f.kappa.trace().real() - 0.5) < 1e-12);
                CHECK(idempotency_report(f).pass);
            }
        }

    CHECK_THROWS_AS(build_type2(4, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(build_type2(4, 3, 0), std::invalid_argument);
    CHECK_THROWS_AS(build_type2(4, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(build_type2(4, 2, -1), std::invalid_argument);
}

TEST_CASE("tau enumeration") {
    // k=2: both sign patterns produce a positive circulant
    const auto taus2 = enumerate_tau(2, 1);
    REQUIRE(taus2.size() == 2);
    CHECK(taus2[0].signs == std::vector<int>{1, 1});
    CHECK(taus2[1].signs == std::vector<int>{1, -1});

    // k=3: the alternating patterns produce complex or negative spectra
    const auto taus3 = enumerate_tau(3, 1);
    REQUIRE(taus3.size() == 1);
    CHECK(taus3[0].signs == std::vector<int>{1, 1, 1});

    CHECK_THROWS_AS(enumerate_tau(4, 4), std::invalid_argument); // k/q = 1
    CHECK_THROWS_AS(enumerate_tau(4, 3), std::invalid_argument);

    for (int k = 2; k <= 8; ++k)
        for (int q = 1; q < k; ++q) {
            if (k % q != 0) continue;
            const int p = k / q;
            const auto accepted = enumerate_tau(k, q);
            CHECK(!accepted.empty());
            CHECK(accepted[0].signs == std::vector<int>(static_cast<std::size_t>(p), 1));
            std::set<std::vector<int>> accepted_set;
            for (const TauVector& t : accepted) {
                accepted_set.insert(t.signs);
                for (int j = 0; j < k; j += q) CHECK(t.at(j) == t.at(-j));
            }

            // independent route: positive semi-definiteness of the circulant
            // block each sign pattern induces
            const Roots w(k);
            for (unsigned long mask = 0; mask < (1ul << (p - 1)); ++mask) {
                std::vector<int> signs(static_cast<std::size_t>(p), 1);
                for (int t = 1; t < p; ++t)
                    if (mask >> (t - 1) & 1) signs[static_cast<std::size_t>(t)] = -1;
                Matrix block(p, p);
                for (int r = 0; r < p; ++r)
                    for (int s = 0; s < p; ++s)
                        block(r, s) = signs[static_cast<std::size_t>(mod_reduce(s - r, p))];
                const bool hermitian = (block - block.adjoint().eval()).norm() < 1e-12;
                bool psd = false;
                if (hermitian) {
                    Eigen::SelfAdjointEigenSolver<Matrix> es(block, Eigen::EigenvaluesOnly);
                    psd = es.eigenvalues().minCoeff() >= -1e-9;
                }
                CHECK((hermitian && psd) == (accepted_set.count(signs) > 0));
            }
        }
}

TEST_CASE("signed circulant states") {
    // k=2, l=0, tau' = (+,-)
    TauVector tau_prime{2, 1, {1, -1}};
    const Functional f = build_type3(2, 2, 0, tau_prime);
    Functional want = Functional::zero(2);
    want.alpha(0, 0) = want.alpha(0, 1) = 0.25;
    want.kappa(0, 0) = want.kappa(1, 1) = 0.25;
    want.kappa(0, 1) = want.kappa(1, 0) = -0.25;
    CHECK(linf_distance(f, want) < 1e-15);
    CHECK(idempotency_report(f).pass);

    for (int k : {2, 3, 4, 6})
        for (int p = 2; p <= k; ++p) {
            if (k % p != 0) continue;
            const int q = k / p;
            for (int l = 0; l < q; ++l)
                for (const TauVector& tau : enumerate_tau(k, q)) {
                    const Functional g = build_type3(k, p, l, tau);
                    CHECK(std::abs(g.alpha.sum().real() - 0.5) < 1e-12);
                    CHECK(std::abs(g.kappa.trace().real() - 0.5) < 1e-12);
                    const StateReport st = is_state(g);
                    CHECK(st.kappa_hermitian);
                    CHECK(st.kappa_psd);
                    CHECK(idempotency_report(g).pass);
                }
        }

    CHECK_THROWS_AS(build_type3(4, 1, 0, TauVector{4, 4, {1}}), std::invalid_argument);
    CHECK_THROWS_AS(build_type3(4, 3, 0, TauVector{4, 1, {1, 1, 1, 1}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(build_type3(4, 2, 2, TauVector{4, 2, {1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(build_type3(4, 2, 0, TauVector{4, 2, {-1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(build_type3(4, 2, 0, TauVector{4, 1, {1, 1, 1, 1}}),
                    std::invalid_argument);
}

TEST_CASE("haar functional") {
    for (int k : {2, 3, 4}) {
        const Functional h = haar_functional(k);
        CHECK(idempotency_report(h).pass);
        for (const auto& m : enumerate_catalog(k).members) {
            CHECK(linf_distance(convolve(h, m.state), h) < 1e-12);
            CHECK(linf_distance(convolve(m.state, h), h) < 1e-12);
        }
    }
}

TEST_CASE("catalog enumeration") {
    const Catalog c2 = enumerate_catalog(2);
    CHECK(c2.size() == 10);
    std::multiset<std::string> names;
    for (const auto& m : c2.members) names.insert(descriptor_name(m.descriptor));
    CHECK(names == std::multiset<std::string>{"h", "eps", "h_G[2,0;0,1]", "h_G[1,0;0,2]",
                                              "h_G[1,1;0,2]", "h_G[1,0;0,1]", "h_{2,0}",
                                              "h_{2,1}", "h_{2,0,++}", "h_{2,0,+-}"});

    const Catalog c3 = enumerate_catalog(3);
    CHECK(c3.size() == 11);
    int n_haar = 0, n_sub = 0, n_t2 = 0, n_t3 = 0;
    for (const auto& m : c3.members) {
        if (std::holds_alternative<HaarDesc>(m.descriptor)) ++n_haar;
        if (std::holds_alternative<HaarSubDesc>(m.descriptor)) ++n_sub;
        if (std::holds_alternative<TypeIIDesc>(m.descriptor)) ++n_t2;
        if (std::holds_alternative<TypeIIIDesc>(m.descriptor)) ++n_t3;
    }
    CHECK(n_haar == 1);
    CHECK(n_sub == 6);
    CHECK(n_t2 == 3);
    CHECK(n_t3 == 1);

    // prime orders: the signed-circulant family only occurs at p=k
    for (int k : {5, 7})
        for (const auto& m : enumerate_catalog(k).members)
            if (const auto* t3 = std::get_if<TypeIIIDesc>(&m.descriptor)) {
                CHECK(t3->p == k);
                CHECK(t3->q == 1);
                CHECK(t3->l == 0);
            }

    // members stay well separated
    for (int k = 2; k <= 6; ++k) {
        const Catalog cat = enumerate_catalog(k);
        for (std::size_t i = 0; i < cat.size(); ++i)
            for (std::size_t j = i + 1; j < cat.size(); ++j)
                CHECK(linf_distance(cat.members[i].state, cat.members[j].state) > 1e-6);
    }

    CHECK_THROWS_AS(enumerate_catalog(1), std::invalid_argument);
}

TEST_CASE("classification against the catalog") {
    const Catalog cat = enumerate_catalog(3);
    const auto eps_desc = classify(counit_functional(3), cat);
    REQUIRE(eps_desc.has_value());
    const auto* sub = std::get_if<HaarSubDesc>(&*eps_desc);
    REQUIRE(sub != nullptr);
    CHECK(sub->gamma.order() == 1);

    for (int l = 0; l < 3; ++l) {
        const auto got = classify(build_type2(3, 3, l), cat);
        REQUIRE(got.has_value());
        const auto* t2 = std::get_if<TypeIIDesc>(&*got);
        REQUIRE(t2 != nullptr);
        CHECK(t2->q == 3);
        CHECK(t2->l == l);
    }

    // a generic state is far from every idempotent
    CHECK_FALSE(classify(random_state(3, 4242), cat).has_value());
    CHECK_THROWS_AS(classify(random_state(2, 1), cat), std::invalid_argument);
}
