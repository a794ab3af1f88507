#include "sekine/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <numeric>
#include <stdexcept>

namespace sekine {

using nlohmann::json;

namespace {

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

json matrix_to_json(const Matrix& m) {
    json rows = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const json& j, int k, const char* field) {
    const std::string where = std::string("sekine: state file field '") + field + "'";
    if (!j.is_array() || static_cast<int>(j.size()) != k)
        throw std::invalid_argument(where + " must be a " + std::to_string(k) + "-row array");
    Matrix m(k, k);
    for (int i = 0; i < k; ++i) {
        const json& row = j[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<int>(row.size()) != k)
            throw std::invalid_argument(where + " has a row of wrong length");
        for (int c = 0; c < k; ++c) {
            const json& z = row[static_cast<std::size_t>(c)];
            if (!z.is_array() || z.size() != 2 || !z[0].is_number() || !z[1].is_number())
                throw std::invalid_argument(where + " entries must be [re, im] pairs");
            m(i, c) = Complex(z[0].get<double>(), z[1].get<double>());
        }
    }
    return m;
}

} // namespace

json state_to_json(const Functional& f) {
    return {{"k", f.k}, {"alpha", matrix_to_json(f.alpha)}, {"kappa", matrix_to_json(f.kappa)}};
}

Functional state_from_json(const json& j) {
    if (!j.is_object() || !j.contains("k") || !j["k"].is_number_integer())
        throw std::invalid_argument("sekine: state file needs an integer field 'k'");
    const int k = j["k"].get<int>();
    if (k < 2) throw std::invalid_argument("sekine: state file needs k >= 2");
    if (!j.contains("alpha") || !j.contains("kappa"))
        throw std::invalid_argument("sekine: state file needs 'alpha' and 'kappa'");
    Functional f = Functional::zero(k);
    f.alpha = matrix_from_json(j["alpha"], k, "alpha");
    f.kappa = matrix_from_json(j["kappa"], k, "kappa");
    return f;
}

json descriptor_to_json(const IdempotentDescriptor& d) {
    json out;
    out["name"] = descriptor_name(d);
    if (std::holds_alternative<HaarDesc>(d)) {
        out["type"] = "haar";
    } else if (const auto* g = std::get_if<HaarSubDesc>(&d)) {
        out["type"] = "haar_subgroup";
        json els = json::array();
        for (const auto& [i, j] : g->gamma.elements) els.push_back(json::array({i, j}));
        out["gamma"] = std::move(els);
    } else if (const auto* t2 = std::get_if<TypeIIDesc>(&d)) {
        out["type"] = "type2";
        out["q"] = t2->q;
        out["l"] = t2->l;
    } else {
        const auto& t3 = std::get<TypeIIIDesc>(d);
        out["type"] = "type3";
        out["p"] = t3.p;
        out["q"] = t3.q;
        out["l"] = t3.l;
        out["tau"] = t3.tau.signs;
    }
    return out;
}

json report_to_json(const IdempotencyReport& rep) {
    return {{"residual_a", rep.residual_a},
            {"residual_b", rep.residual_b},
            {"residual_c", rep.residual_c},
            {"fixed_point", rep.fixed_point},
            {"alpha_nonnegative", rep.state.alpha_nonnegative},
            {"kappa_hermitian", rep.state.kappa_hermitian},
            {"kappa_psd", rep.state.kappa_psd},
            {"normalized", rep.state.normalized},
            {"min_kappa_eigenvalue", rep.state.min_kappa_eigenvalue},
            {"tol", rep.tol},
            {"pass", rep.pass}};
}

json catalog_to_json(const Catalog& catalog) {
    json members = json::array();
    for (const auto& m : catalog.members) {
        json entry;
        entry["descriptor"] = descriptor_to_json(m.descriptor);
        entry["state"] = state_to_json(m.state);
        entry["sum_alpha"] = m.state.alpha.sum().real();
        entry["trace_kappa"] = m.state.kappa.trace().real();
        entry["report"] = report_to_json(idempotency_report(m.state));
        members.push_back(std::move(entry));
    }
    return {{"k", catalog.k}, {"size", catalog.size()}, {"members", std::move(members)}};
}

json lattice_to_json(const Catalog& catalog, const HasseDiagram& hd) {
    json nodes = json::array();
    for (std::size_t i = 0; i < catalog.members.size(); ++i) {
        json n = descriptor_to_json(catalog.members[i].descriptor);
        n["index"] = i;
        nodes.push_back(std::move(n));
    }
    json covers = json::array();
    for (const auto& [lo, hi] : hd.covers) covers.push_back(json::array({lo, hi}));
    return {{"k", catalog.k}, {"nodes", std::move(nodes)}, {"covers", std::move(covers)}};
}

json spectral_to_json(const SpectralReport& rep) {
    json entries = json::array();
    for (const auto& e : rep.entries)
        entries.push_back({{"p", e.p},
                           {"q", e.q},
                           {"eigenvalues", json::array({complex_to_json(e.lambda1),
                                                        complex_to_json(e.lambda2)})}});
    return {{"entries", std::move(entries)},
            {"max_modulus", rep.max_modulus},
            {"contractive_or_one", rep.contractive_or_one}};
}

json walk_report_to_json(const WalkReport& rep, std::size_t max_trace) {
    json out;
    out["converged"] = rep.converged;
    out["steps_used"] = rep.steps_used;
    if (rep.limit) out["limit"] = state_to_json(*rep.limit);
    if (rep.limit_descriptor)
        out["limit_descriptor"] = descriptor_to_json(*rep.limit_descriptor);
    json trace = json::array();
    const std::size_t stride =
        rep.trace.size() <= max_trace ? 1 : (rep.trace.size() + max_trace - 1) / max_trace;
    for (std::size_t i = 0; i < rep.trace.size(); i += stride)
        trace.push_back(rep.trace[i]);
    out["trace"] = std::move(trace);
    out["trace_stride"] = stride;
    out["spectral"] = spectral_to_json(rep.spectral);
    return out;
}

json fourier_table_to_json(const Functional& f) {
    json labels = json::array();
    for (const FourierMatrix& fm : fourier_all(f)) {
        json m = json::array();
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) m.push_back(complex_to_json(fm.m(i, j)));
        labels.push_back({{"p", fm.p}, {"q", fm.q}, {"matrix", std::move(m)}});
    }
    return {{"k", f.k}, {"labels", std::move(labels)}};
}

std::string format_rational(double x, long max_den) {
    for (long den = 1; den <= max_den; ++den) {
        const double scaled = x * static_cast<double>(den);
        const long long num = std::llround(scaled);
        if (std::abs(scaled - static_cast<double>(num)) <= 1e-9 * den) {
            if (num == 0) return "0";
            const long long g = std::gcd(std::abs(num), static_cast<long long>(den));
            const long long n = num / g, d = den / g;
            if (d == 1) return std::to_string(n);
            return std::to_string(n) + "/" + std::to_string(d);
        }
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.10g", x);
    return buf;
}

std::string format_scalar(Complex z, long max_den) {
    const bool has_re = std::abs(z.real()) > 1e-9;
    const bool has_im = std::abs(z.imag()) > 1e-9;
    if (!has_im) return format_rational(z.real(), max_den);
    const std::string im = format_rational(z.imag(), max_den) + "i";
    if (!has_re) return im;
    const std::string re = format_rational(z.real(), max_den);
    return z.imag() > 0 ? re + "+" + im : re + im;
}

} // namespace sekine
