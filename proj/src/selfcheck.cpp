#include "sekine/selfcheck.hpp"

#include <map>
#include <random>
#include <tuple>

#include "sekine/lattice.hpp"
#include "sekine/walks.hpp"

namespace sekine {

namespace {

using TripleTensor = std::map<std::tuple<int, int, int>, Complex>;

TripleTensor expand_left(const TensorElement& t) {
    TripleTensor out;
    for (const auto& [key, c] : t.coef) {
        const BasisLabel left{t.k, key.first};
        const TensorElement inner = comultiply(basis_element(left));
        for (const auto& [ik, ic] : inner.coef) {
            const auto triple = std::make_tuple(ik.first, ik.second, key.second);
            out[triple] += c * ic;
        }
    }
    return out;
}

TripleTensor expand_right(const TensorElement& t) {
    TripleTensor out;
    for (const auto& [key, c] : t.coef) {
        const BasisLabel right{t.k, key.second};
        const TensorElement inner = comultiply(basis_element(right));
        for (const auto& [ik, ic] : inner.coef) {
            const auto triple = std::make_tuple(key.first, ik.first, ik.second);
            out[triple] += c * ic;
        }
    }
    return out;
}

double triple_distance(const TripleTensor& a, const TripleTensor& b) {
    double d = 0.0;
    for (const auto& [key, c] : a) {
        auto it = b.find(key);
        d = std::max(d, std::abs(c - (it == b.end() ? Complex{} : it->second)));
    }
    for (const auto& [key, c] : b)
        if (!a.count(key)) d = std::max(d, std::abs(c));
    return d;
}

AlgebraElement random_element(int k, std::mt19937_64& gen) {
    std::normal_distribution<double> g(0.0, 1.0);
    AlgebraElement a = AlgebraElement::zero(k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            a.dcoef(i, j) = Complex(g(gen), g(gen));
            a.mcoef(i, j) = Complex(g(gen), g(gen));
        }
    return a;
}

Functional random_functional(int k, std::mt19937_64& gen) {
    std::normal_distribution<double> g(0.0, 1.0);
    Functional f = Functional::zero(k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            f.alpha(i, j) = Complex(g(gen), g(gen));
            f.kappa(i, j) = Complex(g(gen), g(gen));
        }
    return f;
}

} // namespace

std::vector<CheckResult> selfcheck(int k, const SelfcheckOptions& opts) {
    std::vector<CheckResult> results;
    auto record = [&](const std::string& name, double residual, double tol) {
        results.push_back({name, residual <= tol, residual});
    };
    std::mt19937_64 gen(opts.seed);

    const AlgebraElement one = unit(k);
    const Functional eps = counit_functional(k);
    const Functional h = haar_functional(k);

    // coassociativity and both counit laws, every basis element
    {
        double coassoc = 0.0, counit_law = 0.0;
        for (int code = 0; code < 2 * k * k; ++code) {
            const AlgebraElement b = basis_element(BasisLabel{k, code});
            const TensorElement t = comultiply(b);
            coassoc = std::max(coassoc, triple_distance(expand_left(t), expand_right(t)));
            counit_law = std::max({counit_law, linf_distance(apply_left(eps, t), b),
                                   linf_distance(apply_right(t, eps), b)});
        }
        record("algebra.coassociativity", coassoc, 1e-12);
        record("algebra.counit_laws", counit_law, 1e-12);
    }

    // Delta is a unital *-homomorphism
    {
        double hom = linf_distance(comultiply(one), tensor_product(one, one));
        for (int s = 0; s < opts.samples; ++s) {
            const AlgebraElement a = random_element(k, gen);
            const AlgebraElement b = random_element(k, gen);
            const TensorElement da = comultiply(a), db = comultiply(b);
            hom = std::max(hom, linf_distance(comultiply(a * b), tensor_multiply(da, db)));
            hom = std::max(hom, linf_distance(comultiply(adjoint(a)), tensor_adjoint(da)));
        }
        record("algebra.delta_star_homomorphism", hom, 1e-9);
    }

    // Haar bi-invariance on the basis, trace property on random pairs
    {
        double inv = 0.0;
        for (int code = 0; code < 2 * k * k; ++code) {
            const AlgebraElement b = basis_element(BasisLabel{k, code});
            const TensorElement t = comultiply(b);
            const AlgebraElement want = haar_state(b) * one;
            inv = std::max({inv, linf_distance(apply_left(h, t), want),
                            linf_distance(apply_right(t, h), want)});
        }
        record("algebra.haar_invariance", inv, 1e-12);

        double tr = 0.0;
        for (int s = 0; s < opts.samples; ++s) {
            const AlgebraElement a = random_element(k, gen);
            const AlgebraElement b = random_element(k, gen);
            tr = std::max(tr, std::abs(haar_state(a * b) - haar_state(b * a)));
        }
        record("algebra.haar_trace", tr, 1e-9);
    }

    // representation relations, unitarity, swap equivalence, characters
    {
        const Roots w(k);
        double rel = 0.0;
        for (int p = 0; p < k; ++p)
            for (int q = 0; q < k; ++q) {
                rel = std::max(rel, linf_distance(adjoint(rho(k, p, q)), rho(k, -p, -q)));
                rel = std::max(
                    rel, linf_distance(adjoint(sigma(k, p, q)),
                                       w(static_cast<long long>(p) * q) * sigma(k, -p, -q)));
                for (int r = 0; r < k; ++r)
                    for (int s = 0; s < k; ++s) {
                        rel = std::max(rel, linf_distance(rho(k, p, q) * rho(k, r, s),
                                                          rho(k, p + r, q + s)));
                        rel = std::max(
                            rel, linf_distance(sigma(k, p, q) * sigma(k, r, s),
                                               w(static_cast<long long>(p) * s) *
                                                   sigma(k, p + r, q + s)));
                        const AlgebraElement zero = AlgebraElement::zero(k);
                        rel = std::max(rel,
                                       linf_distance(rho(k, p, q) * sigma(k, r, s), zero));
                        rel = std::max(rel,
                                       linf_distance(sigma(k, r, s) * rho(k, p, q), zero));
                    }
            }
        record("representations.relations", rel, 1e-12);

        double unitary = 0.0, swap = 0.0;
        for (int p = 0; p < k; ++p)
            for (int q = 0; q < k; ++q) {
                const RepMatrix u = pi(k, p, q);
                const RepMatrix v = pi(k, p, -q);
                unitary = std::max(unitary, unitarity_residual(u));
                swap = std::max({swap, linf_distance(u.at(0, 0), v.at(1, 1)),
                                 linf_distance(u.at(0, 1), v.at(1, 0)),
                                 linf_distance(u.at(1, 0), v.at(0, 1)),
                                 linf_distance(u.at(1, 1), v.at(0, 0))});
            }
        record("representations.unitarity", unitary, 1e-12);
        record("representations.swap_equivalence", swap, 1e-12);

        double chi_res = 0.0;
        long count = 0;
        for (int p = 0; p < k; ++p)
            for (const AlgebraElement& chi : decompose_characters(k, p)) {
                chi_res = std::max(
                    chi_res, linf_distance(comultiply(chi), tensor_product(chi, chi)));
                chi_res = std::max(chi_res, linf_distance(adjoint(chi) * chi, one));
                ++count;
            }
        const IrrepInventory inv = irrep_inventory(k);
        record("representations.characters", chi_res, 1e-12);
        record("representations.dimension_identity",
               count == inv.one_dim_count &&
                       inv.one_dim_count + 4 * inv.two_dim_count == 2L * k * k
                   ? 0.0
                   : 1.0,
               0.5);
    }

    // closed-form convolution against the tensor oracle
    {
        double res = 0.0;
        const int sign = opts.inject_eta_sign_bug ? -1 : +1;
        for (int s = 0; s < opts.samples; ++s) {
            const Functional mu = random_functional(k, gen);
            const Functional nu = random_functional(k, gen);
            res = std::max(res, linf_distance(detail::convolve_with_eta_sign(mu, nu, sign),
                                              convolve_oracle(mu, nu)));
        }
        record("convolution.oracle_equivalence", res, 1e-9);
    }

    // associativity and Fourier multiplicativity on random functionals
    {
        double assoc = 0.0, four = 0.0;
        for (int s = 0; s < opts.samples; ++s) {
            const Functional a = random_functional(k, gen);
            const Functional b = random_functional(k, gen);
            const Functional c = random_functional(k, gen);
            assoc = std::max(assoc, linf_distance(convolve(convolve(a, b), c),
                                                  convolve(a, convolve(b, c))));
            const Functional ab = convolve(a, b);
            for (int p = 0; p < k; ++p)
                for (int q = 0; q < k; ++q) {
                    const Eigen::Matrix2cd lhs = fourier(ab, p, q).m;
                    const Eigen::Matrix2cd rhs = fourier(a, p, q).m * fourier(b, p, q).m;
                    four = std::max(four, (lhs - rhs).cwiseAbs().maxCoeff());
                }
        }
        record("convolution.associativity", assoc, 1e-8);
        record("fourier.multiplicativity", four, 1e-8);
    }

    // catalog verification, dichotomy, order cross-check
    {
        bool catalog_ok = true;
        double dichotomy = 1.0;
        try {
            const Catalog cat = enumerate_catalog(k);
            dichotomy = 0.0;
            for (const auto& m : cat.members) {
                const double sa = m.state.alpha.sum().real();
                const double tk = m.state.kappa.trace().real();
                const double case1 = std::max(std::abs(sa - 1.0), std::abs(tk));
                const double case2 = std::max(std::abs(sa - 0.5), std::abs(tk - 0.5));
                dichotomy = std::max(dichotomy, std::min(case1, case2));
            }
            if (opts.include_order_cross_check) {
                const OrderRelation by_conv = build_order(cat);
                double mism = 0.0;
                const int n = static_cast<int>(cat.size());
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) {
                        const auto& mi = cat.members[static_cast<std::size_t>(i)];
                        const auto& mj = cat.members[static_cast<std::size_t>(j)];
                        if (by_conv.at(i, j) !=
                            theoretic_precedes(mi.descriptor, mj.descriptor, k))
                            mism += 1.0;
                        if (by_conv.at(i, j) != precedes_fourier(mi.state, mj.state))
                            mism += 1.0;
                    }
                record("order.cross_check", mism, 0.5);
            }
        } catch (const std::exception&) {
            catalog_ok = false;
        }
        record("catalog.verification", catalog_ok ? 0.0 : 1.0, 0.5);
        record("catalog.dichotomy", dichotomy, 1e-9);
    }

    return results;
}

bool all_pass(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (!r.pass) return false;
    return true;
}

} // namespace sekine
