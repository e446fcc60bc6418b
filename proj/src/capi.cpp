// SPDX-License-Identifier: Apache-2.0

#include "satstat.h"

#include <cstring>
#include <new>
#include <string>

#include "satstat/experiments.hpp"
#include "satstat/form.hpp"
#include "satstat/hecke.hpp"
#include "satstat/measures.hpp"
#include "satstat/schur.hpp"

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

int fail(int status, const char* what) {
    g_last_error = what;
    return status;
}

// Maps C++ exceptions from the core onto status codes.
template <typename Fn>
int guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const satstat::DegeneratePointError& e) {
        return fail(SATSTAT_EDEGENERATE, e.what());
    } catch (const std::invalid_argument& e) {
        return fail(SATSTAT_EINVAL, e.what());
    } catch (const std::out_of_range& e) {
        return fail(SATSTAT_ERANGE, e.what());
    } catch (const std::exception& e) {
        return fail(SATSTAT_EINTERNAL, e.what());
    } catch (...) {
        return fail(SATSTAT_EINTERNAL, "unknown error");
    }
}

satstat::KappaIndex make_kappa(int n, const uint32_t* kappa) {
    if (n < 2 || kappa == nullptr) throw std::invalid_argument("kappa: need rank >= 2 and a tuple");
    return satstat::KappaIndex(n, std::vector<std::uint32_t>(kappa, kappa + n - 1));
}

// n-1 angles: constrained completion; n angles: free torus point
std::vector<satstat::cplx> point_values(int n, const double* angles, int n_angles) {
    if (angles == nullptr) throw std::invalid_argument("angles: null");
    std::vector<satstat::cplx> xs(n);
    if (n_angles == n - 1) {
        const satstat::SatakePoint pt = satstat::SatakePoint::constrained(
            n, {angles, static_cast<std::size_t>(n - 1)});
        for (int j = 0; j < n; ++j) xs[j] = pt.value(j);
    } else if (n_angles == n) {
        for (int j = 0; j < n; ++j) xs[j] = std::polar(1.0, angles[j]);
    } else {
        throw std::invalid_argument("angles: need n-1 (constrained) or n (free) entries");
    }
    return xs;
}

satstat::MeasureSpec make_measure(int n, int kind, uint64_t p) {
    satstat::MeasureSpec spec;
    spec.n = n;
    switch (kind) {
        case SATSTAT_MEASURE_SATO_TATE: spec.kind = satstat::MeasureKind::SatoTate; break;
        case SATSTAT_MEASURE_PLANCHEREL:
            spec.kind = satstat::MeasureKind::Plancherel;
            spec.p = p;
            break;
        default: throw std::invalid_argument("measure_kind: unknown value");
    }
    spec.validate();
    return spec;
}

}  // namespace

struct satstat_form {
    satstat::SyntheticForm form;
};

struct satstat_expansion {
    int n;
    std::vector<std::pair<satstat::KappaIndex, satstat::BigInt>> terms;
    std::string csv;
};

extern "C" {

const char* satstat_version(void) { return "0.1.0"; }

const char* satstat_status_name(int status) {
    switch (status) {
        case SATSTAT_OK: return "ok";
        case SATSTAT_EINVAL: return "invalid argument";
        case SATSTAT_EDEGENERATE: return "degenerate point";
        case SATSTAT_ERANGE: return "out of range";
        default: return "internal error";
    }
}

const char* satstat_last_error(void) { return g_last_error.c_str(); }

void satstat_string_free(char* s) { delete[] s; }

int satstat_schur_eval_tableaux(int n, const uint32_t* kappa, const double* angles, int n_angles,
                                double* out_re, double* out_im) {
    return guarded([&]() {
        if (!out_re || !out_im) throw std::invalid_argument("output pointers are null");
        const auto k = make_kappa(n, kappa);
        const auto xs = point_values(n, angles, n_angles);
        const satstat::cplx v = satstat::schur_eval_tableaux(k, {xs.data(), xs.size()});
        *out_re = v.real();
        *out_im = v.imag();
        return SATSTAT_OK;
    });
}

int satstat_schur_eval_determinant(int n, const uint32_t* kappa, const double* angles,
                                   int n_angles, double* out_re, double* out_im) {
    return guarded([&]() {
        if (!out_re || !out_im) throw std::invalid_argument("output pointers are null");
        const auto k = make_kappa(n, kappa);
        const auto xs = point_values(n, angles, n_angles);
        const satstat::cplx v = satstat::schur_eval_determinant(
            satstat::partition_from_kappa(k), {xs.data(), xs.size()});
        *out_re = v.real();
        *out_im = v.imag();
        return SATSTAT_OK;
    });
}

int satstat_dimension(int n, const uint32_t* kappa, char** out_decimal) {
    return guarded([&]() {
        if (!out_decimal) throw std::invalid_argument("output pointer is null");
        const auto k = make_kappa(n, kappa);
        *out_decimal = dup_string(satstat::schur_dimension(k).to_string());
        return SATSTAT_OK;
    });
}

int satstat_kappa_dual(int n, const uint32_t* kappa, uint32_t* out_kappa) {
    return guarded([&]() {
        if (!out_kappa) throw std::invalid_argument("output pointer is null");
        const auto dual = make_kappa(n, kappa).dual();
        for (int j = 0; j < n - 1; ++j) out_kappa[j] = dual.entry(j);
        return SATSTAT_OK;
    });
}

int satstat_hecke_expand(int n, const uint32_t* kappa, const uint32_t* kappa2,
                         satstat_expansion** out) {
    return guarded([&]() {
        if (!out) throw std::invalid_argument("output pointer is null");
        const auto a = make_kappa(n, kappa);
        const auto b = make_kappa(n, kappa2);
        const satstat::SchurExpansion& e = satstat::hecke_product_expansion(a, b);
        auto* handle = new satstat_expansion{n, satstat::expansion_kappa_terms(e),
                                             satstat::expansion_to_csv(e)};
        *out = handle;
        return SATSTAT_OK;
    });
}

size_t satstat_expansion_size(const satstat_expansion* e) { return e ? e->terms.size() : 0; }

int satstat_expansion_entry(const satstat_expansion* e, size_t i, uint32_t* out_xi,
                            char** out_coefficient) {
    return guarded([&]() {
        if (!e || !out_xi || !out_coefficient) throw std::invalid_argument("null argument");
        if (i >= e->terms.size()) throw std::out_of_range("expansion entry index");
        const auto& [xi, coeff] = e->terms[i];
        for (int j = 0; j < e->n - 1; ++j) out_xi[j] = xi.entry(j);
        *out_coefficient = dup_string(coeff.to_string());
        return SATSTAT_OK;
    });
}

int satstat_expansion_csv(const satstat_expansion* e, char** out_csv) {
    return guarded([&]() {
        if (!e || !out_csv) throw std::invalid_argument("null argument");
        *out_csv = dup_string(e->csv);
        return SATSTAT_OK;
    });
}

void satstat_expansion_free(satstat_expansion* e) { delete e; }

int satstat_form_create(int n, int measure_kind, uint64_t plancherel_p, uint64_t seed,
                        uint64_t prime_bound, const char* forced_zeros, satstat_form** out) {
    return guarded([&]() {
        if (!out) throw std::invalid_argument("output pointer is null");
        const auto spec = make_measure(n, measure_kind, plancherel_p);
        const auto forced =
            satstat::ForcedZeroSpec::parse(forced_zeros ? forced_zeros : "none");
        *out = new satstat_form{satstat::build_form(spec, seed, prime_bound, forced)};
        return SATSTAT_OK;
    });
}

int satstat_form_coefficient(const satstat_form* form, uint64_t m, const uint32_t* kappa,
                             double* out_re, double* out_im) {
    return guarded([&]() {
        if (!form || !out_re || !out_im) throw std::invalid_argument("null argument");
        const auto k = make_kappa(form->form.rank(), kappa);
        const auto v = form->form.coefficient_at_m(m, k);
        *out_re = v.real();
        *out_im = v.imag();
        return SATSTAT_OK;
    });
}

int satstat_form_satake_angles(const satstat_form* form, uint64_t p, double* out_angles) {
    return guarded([&]() {
        if (!form || !out_angles) throw std::invalid_argument("null argument");
        const satstat::SatakePoint pt = form->form.satake_at(p);
        for (int j = 0; j < pt.rank(); ++j) out_angles[j] = pt.angle(j);
        return SATSTAT_OK;
    });
}

void satstat_form_free(satstat_form* form) { delete form; }

int satstat_sample_angles(int n, int measure_kind, uint64_t plancherel_p, uint64_t seed,
                          uint64_t count, double* out_angles) {
    return guarded([&]() {
        if (!out_angles) throw std::invalid_argument("output pointer is null");
        const auto spec = make_measure(n, measure_kind, plancherel_p);
        for (uint64_t i = 0; i < count; ++i) {
            satstat::RngStream rng(seed, satstat::RngDomain::Sample, i);
            const satstat::SatakePoint pt = satstat::sample_measure(spec, rng);
            for (int j = 0; j < n; ++j) out_angles[i * n + j] = pt.angle(j);
        }
        return SATSTAT_OK;
    });
}

int satstat_sample_csv(int n, int measure_kind, uint64_t plancherel_p, uint64_t seed,
                       uint64_t count, char** out_csv) {
    return guarded([&]() {
        if (!out_csv) throw std::invalid_argument("output pointer is null");
        const auto spec = make_measure(n, measure_kind, plancherel_p);
        std::string csv = "seed,index";
        for (int j = 1; j <= n; ++j) csv += ",theta_" + std::to_string(j);
        csv += "\n";
        for (uint64_t i = 0; i < count; ++i) {
            satstat::RngStream rng(seed, satstat::RngDomain::Sample, i);
            const satstat::SatakePoint pt = satstat::sample_measure(spec, rng);
            csv += std::to_string(seed) + "," + std::to_string(i);
            for (int j = 0; j < n; ++j) csv += "," + satstat::format_double(pt.angle(j));
            csv += "\n";
        }
        *out_csv = dup_string(csv);
        return SATSTAT_OK;
    });
}

int satstat_experiment_run(const char* config_json, char** out_report_json, char** out_csv,
                           int* out_pass) {
    return guarded([&]() {
        if (!config_json || !out_report_json)
            throw std::invalid_argument("config/report pointers are null");
        satstat::ordered_json parsed;
        try {
            parsed = satstat::ordered_json::parse(config_json);
        } catch (const std::exception& e) {
            throw std::invalid_argument(std::string("config JSON parse error: ") + e.what());
        }
        const satstat::RunConfig config = satstat::RunConfig::from_json(parsed);
        const satstat::RunResult result = satstat::run_experiment(config);
        *out_report_json = dup_string(result.report.dump(2) + "\n");
        if (out_csv) *out_csv = result.csv.empty() ? nullptr : dup_string(result.csv);
        if (out_pass) *out_pass = result.pass ? 1 : 0;
        return SATSTAT_OK;
    });
}

}  // extern "C"
