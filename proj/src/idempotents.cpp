#include "sekine/idempotents.hpp"

#include <algorithm>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "sekine/parallel.hpp"

namespace sekine {

bool Subgroup::contains(int i, int j) const {
    return std::binary_search(elements.begin(), elements.end(),
                              std::make_pair(mod_reduce(i, k), mod_reduce(j, k)));
}

bool Subgroup::subset_of(const Subgroup& other) const {
    if (k != other.k) return false;
    return std::includes(other.elements.begin(), other.elements.end(),
                         elements.begin(), elements.end());
}

namespace {

// g = u*a + v*b with g = gcd(a,b) >= 0
std::array<long, 3> extended_gcd(long a, long b) {
    long old_r = a, r = b, old_u = 1, u = 0, old_v = 0, v = 1;
    while (r != 0) {
        const long q = old_r / r;
        long t = old_r - q * r;
        old_r = r;
        r = t;
        t = old_u - q * u;
        old_u = u;
        u = t;
        t = old_v - q * v;
        old_v = v;
        v = t;
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_u = -old_u;
        old_v = -old_v;
    }
    return {old_r, old_u, old_v};
}

} // namespace

std::array<int, 4> Subgroup::hermite_basis() const {
    // Generators of the lifted lattice: the elements plus (k,0),(0,k).
    std::vector<std::array<long, 2>> rows;
    rows.push_back({static_cast<long>(k), 0});
    rows.push_back({0, static_cast<long>(k)});
    for (const auto& [i, j] : elements) rows.push_back({i, j});

    // a = gcd of first coordinates, with a witness row (a, b0) in the lattice.
    long a = 0, b0 = 0;
    for (const auto& r : rows) {
        const auto [g, u, v] = extended_gcd(a, r[0]);
        b0 = u * b0 + v * r[1];
        b0 = ((b0 % k) + k) % k; // (0,k) is in the lattice, keep b0 small
        a = g;
    }

    // d = gcd of the second coordinates once the first is eliminated.
    long d = 0;
    for (const auto& r : rows) d = std::gcd(d, r[1] - (r[0] / a) * b0);
    if (d < 0) d = -d;
    b0 = ((b0 % d) + d) % d;
    return {static_cast<int>(a), static_cast<int>(b0), 0, static_cast<int>(d)};
}

Subgroup span_subgroup(int k, const std::vector<std::pair<int, int>>& gens) {
    if (k < 2) throw std::invalid_argument("sekine: group order k must be >= 2");
    std::set<std::pair<int, int>> closed{{0, 0}};
    // abelian & every element has order dividing k, so coefficient ranges
    // [0,k) per generator exhaust the span
    std::vector<std::pair<int, int>> frontier{{0, 0}};
    for (const auto& [gi, gj] : gens) {
        std::set<std::pair<int, int>> next;
        for (const auto& [i, j] : closed)
            for (int t = 0; t < k; ++t)
                next.insert({mod_reduce(i + static_cast<long long>(t) * gi, k),
                             mod_reduce(j + static_cast<long long>(t) * gj, k)});
        closed = std::move(next);
    }
    Subgroup g{k, {closed.begin(), closed.end()}};
    return g;
}

std::vector<Subgroup> enumerate_subgroups(int k) {
    if (k < 2) throw std::invalid_argument("sekine: group order k must be >= 2");
    std::set<std::vector<std::pair<int, int>>> seen;
    std::vector<Subgroup> out;
    std::vector<std::pair<int, int>> pts;
    pts.reserve(static_cast<std::size_t>(k) * k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) pts.push_back({i, j});

    std::vector<char> mark(static_cast<std::size_t>(k) * k);
    for (std::size_t ia = 0; ia < pts.size(); ++ia)
        for (std::size_t ib = ia; ib < pts.size(); ++ib) {
            std::fill(mark.begin(), mark.end(), 0);
            const auto [ax, ay] = pts[ia];
            const auto [bx, by] = pts[ib];
            for (int s = 0; s < k; ++s)
                for (int t = 0; t < k; ++t)
                    mark[static_cast<std::size_t>(
                        mod_reduce(static_cast<long long>(s) * ax +
                                       static_cast<long long>(t) * bx,
                                   k) *
                            k +
                        mod_reduce(static_cast<long long>(s) * ay +
                                       static_cast<long long>(t) * by,
                                   k))] = 1;
            std::vector<std::pair<int, int>> members;
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j)
                    if (mark[static_cast<std::size_t>(i) * k + j])
                        members.push_back({i, j});
            if (seen.insert(members).second)
                out.push_back(Subgroup{k, std::move(members)});
        }

    std::sort(out.begin(), out.end(), [](const Subgroup& x, const Subgroup& y) {
        if (x.order() != y.order()) return x.order() < y.order();
        return x.elements < y.elements;
    });
    return out;
}

int TauVector::at(long long j) const {
    const int jj = mod_reduce(j, k);
    if (jj % q != 0)
        throw std::invalid_argument("sekine: tau index must be a multiple of q");
    return signs[static_cast<std::size_t>(jj / q)];
}

std::vector<TauVector> enumerate_tau(int k, int q, double tol) {
    if (k < 2 || q < 1 || k % q != 0 || k / q < 2)
        throw std::invalid_argument("sekine: enumerate_tau needs q|k with k/q > 1");
    const int p = k / q;
    if (p > 20)
        std::cerr << "sekine: enumerate_tau sweeping 2^" << (p - 1)
                  << " sign patterns (k/q = " << p << ")\n";
    const Roots w(k);
    std::vector<TauVector> out;
    for (unsigned long mask = 0; mask < (1ul << (p - 1)); ++mask) {
        TauVector tau{k, q, std::vector<int>(static_cast<std::size_t>(p), 1)};
        for (int t = 1; t < p; ++t)
            if (mask >> (t - 1) & 1) tau.signs[static_cast<std::size_t>(t)] = -1;
        bool ok = true;
        for (int i = 0; i < p && ok; ++i) {
            Complex sum = 0.0;
            for (int t = 0; t < p; ++t)
                sum += double(tau.signs[static_cast<std::size_t>(t)]) *
                       w(static_cast<long long>(i) * t * q);
            ok = sum.real() >= -tol && std::abs(sum.imag()) <= tol;
        }
        if (ok) out.push_back(std::move(tau));
    }
    return out;
}

namespace {

struct NameVisitor {
    std::string operator()(const HaarDesc&) const { return "h"; }
    std::string operator()(const HaarSubDesc& d) const {
        if (d.gamma.order() == 1) return "eps";
        const auto [a, b, c, dd] = d.gamma.hermite_basis();
        std::ostringstream os;
        os << "h_G[" << a << "," << b << ";" << c << "," << dd << "]";
        return os.str();
    }
    std::string operator()(const TypeIIDesc& d) const {
        std::ostringstream os;
        os << "h_{" << d.q << "," << d.l << "}";
        return os.str();
    }
    std::string operator()(const TypeIIIDesc& d) const {
        std::ostringstream os;
        os << "h_{" << d.p << "," << d.l << ",";
        for (int s : d.tau.signs) os << (s > 0 ? '+' : '-');
        os << "}";
        return os.str();
    }
};

} // namespace

std::string descriptor_name(const IdempotentDescriptor& d) {
    return std::visit(NameVisitor{}, d);
}

bool same_descriptor(const IdempotentDescriptor& a, const IdempotentDescriptor& b) {
    if (a.index() != b.index()) return false;
    if (std::holds_alternative<HaarDesc>(a)) return true;
    if (const auto* ga = std::get_if<HaarSubDesc>(&a))
        return ga->gamma == std::get<HaarSubDesc>(b).gamma;
    if (const auto* ta = std::get_if<TypeIIDesc>(&a)) {
        const auto& tb = std::get<TypeIIDesc>(b);
        return ta->q == tb.q && ta->l == tb.l;
    }
    const auto& ta = std::get<TypeIIIDesc>(a);
    const auto& tb = std::get<TypeIIIDesc>(b);
    return ta.p == tb.p && ta.l == tb.l && ta.tau == tb.tau;
}

Functional build_haar_sub(const Subgroup& gamma) {
    Functional f = Functional::zero(gamma.k);
    const double w = 1.0 / gamma.order();
    for (const auto& [i, j] : gamma.elements) f.alpha(i, j) = w;
    return f;
}

Functional build_type2(int k, int q, int l) {
    if (k < 2 || q <= 1 || k % q != 0 || l < 0 || l >= q)
        throw std::invalid_argument("sekine: build_type2 needs q|k, q>1, 0<=l<q");
    Functional f = Functional::zero(k);
    const double kd = k;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; j += q) f.alpha(i, j) = q / (2.0 * kd * kd);
    for (int r = l; r < k; r += q) f.kappa(r, r) = q / (2.0 * kd);
    return f;
}

Functional build_type3(int k, int p, int l, const TauVector& tau) {
    if (k < 2 || p <= 1 || k % p != 0)
        throw std::invalid_argument("sekine: build_type3 needs p|k with p>1");
    const int q = k / p;
    if (l < 0 || l >= q)
        throw std::invalid_argument("sekine: build_type3 needs 0<=l<q");
    if (tau.k != k || tau.q != q || tau.span() != p || tau.signs.empty() ||
        tau.signs[0] != 1)
        throw std::invalid_argument("sekine: build_type3 given incompatible tau");
    for (int s : tau.signs)
        if (s != 1 && s != -1)
            throw std::invalid_argument("sekine: tau signs must be +-1");

    Functional f = Functional::zero(k);
    for (int i = 0; i < k; i += p)
        for (int j = 0; j < k; j += q) f.alpha(i, j) = 1.0 / (2.0 * k);
    for (int r = l; r < k; r += q)
        for (int s = l; s < k; s += q)
            f.kappa(r, s) = q / (2.0 * k) * tau.at(s - r);
    return f;
}

std::size_t Catalog::counit_index() const {
    for (std::size_t i = 0; i < members.size(); ++i)
        if (const auto* g = std::get_if<HaarSubDesc>(&members[i].descriptor))
            if (g->gamma.order() == 1) return i;
    throw std::logic_error("sekine: catalog misses the counit");
}

std::size_t Catalog::haar_index() const {
    for (std::size_t i = 0; i < members.size(); ++i)
        if (std::holds_alternative<HaarDesc>(members[i].descriptor)) return i;
    throw std::logic_error("sekine: catalog misses the Haar state");
}

Catalog enumerate_catalog(int k) {
    if (k < 2) throw std::invalid_argument("sekine: group order k must be >= 2");
    Catalog cat;
    cat.k = k;
    cat.members.push_back({HaarDesc{}, haar_functional(k)});
    for (auto& g : enumerate_subgroups(k)) {
        Functional f = build_haar_sub(g);
        cat.members.push_back({HaarSubDesc{std::move(g)}, std::move(f)});
    }
    for (int q = 2; q <= k; ++q) {
        if (k % q != 0) continue;
        for (int l = 0; l < q; ++l)
            cat.members.push_back({TypeIIDesc{q, l}, build_type2(k, q, l)});
    }
    for (int p = 2; p <= k; ++p) {
        if (k % p != 0) continue;
        const int q = k / p;
        for (int l = 0; l < q; ++l)
            for (auto& tau : enumerate_tau(k, q))
                cat.members.push_back(
                    {TypeIIIDesc{p, q, l, tau}, build_type3(k, p, l, tau)});
    }

    // Every member must verify; candidates are independent, sweep in parallel.
    std::vector<char> ok(cat.members.size(), 0);
    parallel_for(cat.members.size(), [&](std::size_t i) {
        ok[i] = idempotency_report(cat.members[i].state, 1e-9).pass;
    });
    for (std::size_t i = 0; i < ok.size(); ++i)
        if (!ok[i])
            throw std::logic_error("sekine: catalog member fails idempotency: " +
                                   descriptor_name(cat.members[i].descriptor));

    for (std::size_t i = 0; i < cat.members.size(); ++i)
        for (std::size_t j = i + 1; j < cat.members.size(); ++j)
            if (linf_distance(cat.members[i].state, cat.members[j].state) <= 1e-6)
                throw std::logic_error(
                    "sekine: catalog members numerically collide: " +
                    descriptor_name(cat.members[i].descriptor) + " vs " +
                    descriptor_name(cat.members[j].descriptor));
    return cat;
}

std::optional<std::size_t> classify_index(const Functional& f, const Catalog& catalog,
                                          double tol) {
    if (f.k != catalog.k)
        throw std::invalid_argument("sekine: mismatched group orders");
    std::optional<std::size_t> best;
    double best_dist = tol;
    for (std::size_t i = 0; i < catalog.members.size(); ++i) {
        const double d = linf_distance(f, catalog.members[i].state);
        if (d <= best_dist) {
            best = i;
            best_dist = d;
        }
    }
    return best;
}

std::optional<IdempotentDescriptor> classify(const Functional& f,
                                             const Catalog& catalog, double tol) {
    const auto idx = classify_index(f, catalog, tol);
    if (!idx) return std::nullopt;
    return catalog.members[*idx].descriptor;
}

} // namespace sekine
