#include "sekine/lattice.hpp"

#include <sstream>
#include <stdexcept>

#include "sekine/parallel.hpp"

namespace sekine {

bool precedes(const Functional& mu, const Functional& nu, double tol) {
    return linf_distance(convolve(mu, nu), nu) < tol;
}

bool precedes_fourier(const Functional& mu, const Functional& nu, double tol) {
    if (mu.k != nu.k) throw std::invalid_argument("sekine: mismatched group orders");
    for (int p = 0; p < mu.k; ++p)
        for (int q = 0; q < mu.k; ++q) {
            const Eigen::Matrix2cd a = fourier(mu, p, q).m;
            const Eigen::Matrix2cd b = fourier(nu, p, q).m;
            if (((a * b - b).cwiseAbs().maxCoeff()) >= tol) return false;
        }
    return true;
}

namespace {

bool gamma_inside_type2(const Subgroup& g, int q) {
    for (const auto& [i, j] : g.elements) {
        (void)i;
        if (j % q != 0) return false;
    }
    return true;
}

bool gamma_inside_type3(const Subgroup& g, int p, int q) {
    for (const auto& [i, j] : g.elements)
        if (i % p != 0 || j % q != 0) return false;
    return true;
}

bool congruent(int a, int b, int m) { return ((a - b) % m + m) % m == 0; }

} // namespace

bool theoretic_precedes(const IdempotentDescriptor& a, const IdempotentDescriptor& b,
                        int k) {
    if (std::holds_alternative<HaarDesc>(b)) return true;
    if (std::holds_alternative<HaarDesc>(a)) return false;

    if (const auto* ga = std::get_if<HaarSubDesc>(&a)) {
        if (const auto* gb = std::get_if<HaarSubDesc>(&b))
            return ga->gamma.subset_of(gb->gamma);
        if (const auto* tb = std::get_if<TypeIIDesc>(&b))
            return gamma_inside_type2(ga->gamma, tb->q);
        const auto& tb = std::get<TypeIIIDesc>(b);
        return gamma_inside_type3(ga->gamma, tb.p, tb.q);
    }

    if (const auto* ta = std::get_if<TypeIIDesc>(&a)) {
        if (const auto* tb = std::get_if<TypeIIDesc>(&b))
            return ta->q % tb->q == 0 && congruent(ta->l, tb->l, tb->q);
        return false;
    }

    const auto& ta = std::get<TypeIIIDesc>(a);
    if (const auto* tb = std::get_if<TypeIIDesc>(&b)) {
        const int pb = k / tb->q;
        return pb % ta.p == 0 && congruent(ta.l, tb->l, tb->q);
    }
    if (const auto* tb = std::get_if<TypeIIIDesc>(&b))
        return ta.p == tb->p && ta.l == tb->l && ta.tau == tb->tau;
    return false;
}

namespace {

void assert_partial_order(const OrderRelation& rel, const char* who) {
    const int n = rel.n;
    for (int i = 0; i < n; ++i)
        if (!rel.at(i, i))
            throw std::logic_error(std::string(who) + ": relation not reflexive");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && rel.at(i, j) && rel.at(j, i))
                throw std::logic_error(std::string(who) + ": relation not antisymmetric");
    for (int i = 0; i < n; ++i)
        for (int m = 0; m < n; ++m) {
            if (!rel.at(i, m)) continue;
            for (int j = 0; j < n; ++j)
                if (rel.at(m, j) && !rel.at(i, j))
                    throw std::logic_error(std::string(who) + ": relation not transitive");
        }
}

} // namespace

OrderRelation build_order(const Catalog& catalog, double tol) {
    const int n = static_cast<int>(catalog.size());
    OrderRelation rel(n);
    // pairwise convolutions are independent; sweep rows in parallel
    parallel_for(static_cast<std::size_t>(n), [&](std::size_t i) {
        for (int j = 0; j < n; ++j)
            rel.set(static_cast<int>(i), j,
                    precedes(catalog.members[i].state,
                             catalog.members[static_cast<std::size_t>(j)].state, tol));
    });
    assert_partial_order(rel, "sekine: build_order");

    const int eps = static_cast<int>(catalog.counit_index());
    const int haar = static_cast<int>(catalog.haar_index());
    for (int j = 0; j < n; ++j) {
        if (!rel.at(eps, j))
            throw std::logic_error("sekine: counit is not the minimum");
        if (!rel.at(j, haar))
            throw std::logic_error("sekine: Haar state is not the maximum");
    }
    return rel;
}

OrderRelation build_order_theoretic(const Catalog& catalog) {
    const int n = static_cast<int>(catalog.size());
    OrderRelation rel(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            rel.set(i, j,
                    theoretic_precedes(catalog.members[static_cast<std::size_t>(i)].descriptor,
                                       catalog.members[static_cast<std::size_t>(j)].descriptor,
                                       catalog.k));
    assert_partial_order(rel, "sekine: build_order_theoretic");
    return rel;
}

std::vector<std::pair<int, int>> cover_edges(const OrderRelation& rel) {
    const int n = rel.n;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && rel.at(i, j) && rel.at(j, i))
                throw std::invalid_argument("sekine: cover_edges given a cyclic relation");
    for (int i = 0; i < n; ++i)
        for (int m = 0; m < n; ++m) {
            if (!rel.at(i, m)) continue;
            for (int j = 0; j < n; ++j)
                if (rel.at(m, j) && !rel.at(i, j))
                    throw std::invalid_argument(
                        "sekine: cover_edges given a non-transitive relation");
        }

    std::vector<std::pair<int, int>> covers;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j || !rel.at(i, j)) continue;
            bool direct = true;
            for (int m = 0; m < n && direct; ++m)
                if (m != i && m != j && rel.at(i, m) && rel.at(m, j)) direct = false;
            if (direct) covers.push_back({i, j});
        }
    return covers;
}

HasseDiagram hasse(const OrderRelation& rel, std::vector<std::string> labels) {
    if (static_cast<int>(labels.size()) != rel.n)
        throw std::invalid_argument("sekine: hasse label count mismatch");
    return {std::move(labels), cover_edges(rel)};
}

HasseDiagram hasse(const Catalog& catalog, const OrderRelation& rel) {
    std::vector<std::string> labels;
    labels.reserve(catalog.size());
    for (const auto& m : catalog.members)
        labels.push_back(descriptor_name(m.descriptor));
    return hasse(rel, std::move(labels));
}

std::string export_dot(const HasseDiagram& hd) {
    std::ostringstream os;
    os << "digraph idempotent_order {\n";
    os << "  rankdir=BT;\n";
    for (int i = 0; i < hd.node_count(); ++i)
        os << "  n" << i << " [label=\"" << hd.labels[static_cast<std::size_t>(i)]
           << "\"];\n";
    for (const auto& [lo, hi] : hd.covers) os << "  n" << lo << " -> n" << hi << ";\n";
    os << "}\n";
    return os.str();
}

} // namespace sekine
