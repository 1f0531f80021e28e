// Copyright 2026 The bellport authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "bellport/bellport.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <utility>

#include "core/analysis.hpp"
#include "core/complex_matrix.hpp"
#include "core/permanent.hpp"
#include "core/scattering.hpp"
#include "core/serialize.hpp"
#include "core/sweep.hpp"
#include "core/verify.hpp"

struct bp_matrix {
    bellport::ComplexMatrix m;
};

struct bp_input {
    bellport::InputConfiguration input;
};

struct bp_state {
    bellport::PostselectedState state;
};

namespace {

thread_local std::string g_last_error;

bp_status status_of(bellport::ErrorCode code) {
    using bellport::ErrorCode;
    switch (code) {
        case ErrorCode::invalid_dimension:
            return BP_ERROR_INVALID_DIMENSION;
        case ErrorCode::invalid_index:
            return BP_ERROR_INVALID_INDEX;
        case ErrorCode::size_limit:
            return BP_ERROR_SIZE_LIMIT;
        case ErrorCode::configuration:
            return BP_ERROR_CONFIGURATION;
        case ErrorCode::empty_state:
            return BP_ERROR_EMPTY_STATE;
        case ErrorCode::insufficient_data:
            return BP_ERROR_INSUFFICIENT_DATA;
        case ErrorCode::parse:
            return BP_ERROR_PARSE;
    }
    return BP_ERROR_INTERNAL;
}

bp_status fail(bp_status status, const char *message) {
    g_last_error = message;
    return status;
}

template <typename F>
bp_status wrap(F &&body) {
    try {
        body();
        return BP_OK;
    } catch (const bellport::Error &e) {
        g_last_error = e.what();
        return status_of(e.code());
    } catch (const std::bad_alloc &) {
        g_last_error = "out of memory";
        return BP_ERROR_INTERNAL;
    } catch (const std::exception &e) {
        g_last_error = e.what();
        return BP_ERROR_INTERNAL;
    }
}

char *copy_string(const std::string &s) {
    char *out = static_cast<char *>(std::malloc(s.size() + 1));
    if (out == nullptr) {
        throw std::bad_alloc();
    }
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void fill_pair(double out[2], const bellport::Amp &a) {
    out[0] = a.real();
    out[1] = a.imag();
}

bellport::DecompositionResult to_core(const bp_decomposition &d) {
    bellport::DecompositionResult r;
    r.c_double_singlet = {d.c_double_singlet[0], d.c_double_singlet[1]};
    r.c_ghz = {d.c_ghz[0], d.c_ghz[1]};
    r.c_w = {d.c_w[0], d.c_w[1]};
    r.c_w_prime = {d.c_w_prime[0], d.c_w_prime[1]};
    for (size_t k = 0; k < r.gammas.size(); k++) {
        r.gammas[k] = {d.gammas[k][0], d.gammas[k][1]};
    }
    return r;
}

bellport::FitResult to_core(const bp_fit_result &f) {
    bellport::FitResult r{f.a, f.b, f.residual, {}};
    for (int32_t k = 0; k < f.point_count && k < 64; k++) {
        r.points_used.push_back(f.points_used[k]);
    }
    return r;
}

void from_core(const bellport::FitResult &fit, bp_fit_result *out) {
    out->a = fit.a;
    out->b = fit.b;
    out->residual = fit.residual;
    out->point_count = static_cast<int32_t>(fit.points_used.size());
    for (size_t k = 0; k < fit.points_used.size() && k < 64; k++) {
        out->points_used[k] = fit.points_used[k];
    }
}

}  // namespace

extern "C" {

const char *bp_status_name(bp_status status) {
    switch (status) {
        case BP_OK:
            return "ok";
        case BP_ERROR_NULL_ARGUMENT:
            return "null argument";
        case BP_ERROR_INVALID_DIMENSION:
            return "invalid dimension";
        case BP_ERROR_INVALID_INDEX:
            return "invalid index";
        case BP_ERROR_SIZE_LIMIT:
            return "size limit exceeded";
        case BP_ERROR_CONFIGURATION:
            return "configuration error";
        case BP_ERROR_EMPTY_STATE:
            return "empty state";
        case BP_ERROR_INSUFFICIENT_DATA:
            return "insufficient data";
        case BP_ERROR_PARSE:
            return "parse error";
        case BP_ERROR_INTERNAL:
            return "internal error";
    }
    return "unknown status";
}

const char *bp_last_error_message(void) {
    return g_last_error.c_str();
}

void bp_string_free(char *s) {
    std::free(s);
}

bp_status bp_matrix_bell(int32_t n, bp_matrix **out) {
    if (out == nullptr) {
        return fail(BP_ERROR_NULL_ARGUMENT, "out must not be NULL");
    }
    return wrap([&] { *out = new bp_matrix{bellport::TransitionMatrix::bell(n).matrix()}; });
}

bp_status bp_matrix_create(int32_t n, const double *entries, bp_matrix **out) {
    if (out == nullptr || entries == nullptr) {
        return fail(BP_ERROR_NULL_ARGUMENT, "entries and out must not be NULL");
    }
    return wrap([&] {
        if (n < 1) {
            throw bellport::InvalidDimensionError("matrix dimension must be positive");
        }
        std::vector<bellport::Amp> values;
        values.reserve(static_cast<size_t>(n) * n);
        for (int64_t k = 0; k < int64_t{n} * n; k++) {
            values.emplace_back(entries[2 * k], entries[2 * k + 1]);
        }
        *out = new bp_matrix{bellport::ComplexMatrix(n, std::move(values))};
    });
}

void bp_matrix_free(bp_matrix *m) {
    delete m;
}

bp_status bp_matrix_dim(const bp_matrix *m, int32_t *n) {
    if (m == nullptr || n == nullptr) {
        return fail(BP_ERROR_NULL_ARGUMENT, "matrix and out must not be NULL");
    }
    *n = m->m.dim();
    return BP_OK;
}

bp_status bp_matrix_entry(const bp_matrix *m, int32_t row, int32_t col, double *re, double *im) {
    if (m == nullptr || re == nullptr || im == nullptr) {
        return fail(BP_ERROR_NULL_ARGUMENT, "matrix and outs must not be NULL");
    }
    if (row < 0 || row >= m->m.dim() || col < 0 || col >= m->m.dim()) {
        return fail(BP_ERROR_INVALID_INDEX, "matrix entry index out of range");
    }
    const bellport::Amp a = m->m(row, col);
    *re = a.real();
    *im = a.imag();
    return BP_OK;
}

bp_status bp_matrix_is_unitary(const bp_matrix *m, double tol, int32_t *result) {
    if (m == nullptr || result == nullptr) {
        return fail(BP_ERROR_NULL_ARGUMENT, "matrix and out must not be NULL");
    }
    return wrap([&] { *result = bellport::check_unitary(m->m, tol) ? 1 : 0; });
}

bp_status bp_matrix_reduced(const bp_matrix *m, int32_t drop_row, int32_t drop_col, bp_matrix **out) {
    if (m == nullptr || out == nullptr) {
        return fail(BP_ERROR_NULL_ARGUMENT, "matrix and out must not be NULL");
    }
    return wrap([&] { *out = new bp_matrix{bellport::reduced_matrix(m->m, drop_row, drop_col)}; });
}

bp_status bp_matrix_to_json(const bp_matrix *m, char **json) {
    if (m == nullptr || json == nullptr) {
        return fail(BP_ERROR_NULL_ARGUMENT, "matrix and out must not be NULL");
    }
    return wrap([&] { *json = copy_string(bellport::matrix_to_json(m->m)); });
}

bp_status bp_matrix_from_json(const char *json, bp_matrix **out) {
    if (json == nullptr || out == nullptr) {
        return fail(BP_ERROR_NULL_ARGUMENT, "json and out must not be NULL");
    }
    return wrap([&] { *out = new bp_matrix{bellport::matrix_from_json(json)}; });
}

bp_status bp_permanent(const bp_matrix *m, double *re, double *im) {
    if (m == nullptr || re == nullptr || im == nullptr) {
        return fail(BP_ERROR_NULL_ARGUMENT, "matrix and outs must not be NULL");
    }
    return wrap([&] {
        const bellport::Amp p = bellport::permanent(m->m);
        *re = p.real();
        *im = p.imag();
    });
}

bp_status bp_permanent_naive(const bp_matrix *m, double *re, double *im) {
    if (m == nullptr || re == nullptr || im == nullptr) {
        return fail(BP_ERROR_NULL_ARGUMENT, "matrix and outs must not be NULL");
    }
    return wrap([&] {
        const bellport::Amp p = bellport::permanent_naive(m->m);
        *re = p.real();
        *im = p.imag();
    });
}

bp_status bp_input_create(int32_t n, const double *amplitudes, bp_input **out) {
    if (amplitudes == nullptr || out == nullptr) {
        return fail(BP_ERROR_NULL_ARGUMENT, "amplitudes and out must not be NULL");
    }
    return wrap([&] {
        if (n < 1) {
            throw bellport::ConfigurationError("input needs at least one port");
        }
        std::vector<bellport::PhotonState> photons;
        photons.reserve(static_cast<size_t>(n));
        for (int32_t i = 0; i < n; i++) {
            photons.emplace_back(bellport::Amp{amplitudes[4 * i], amplitudes[4 * i + 1]},
                                 bellport::Amp{amplitudes[4 * i + 2], amplitudes[4 * i + 3]});
        }
        *out = new bp_input{bellport::InputConfiguration(std::move(photons))};
    });
}

bp_status bp_input_basis(const char *labels, bp_input **out) {
    if (labels == nullptr || out == nullptr) {
        return fail(BP_ERROR_NULL_ARGUMENT, "labels and out must not be NULL");
    }
    return wrap([&] { *out = new bp_input{bellport::InputConfiguration::from_label_string(labels)}; });
}

void bp_input_free(bp_input *input) {
    delete input;
}

bp_status bp_postselect(const bp_matrix *u, const bp_input *input, bp_state **out) {
    if (u == nullptr || input == nullptr || out == nullptr) {
        return fail(BP_ERROR_NULL_ARGUMENT, "matrix, input and out must not be NULL");
    }
    return wrap([&] {
        const bellport::TransitionMatrix t(u->m);
        *out = new bp_state{bellport::postselect(t, input->input)};
    });
}

void bp_state_free(bp_state *s) {
    delete s;
}

bp_status bp_state_ports(const bp_state *s, int32_t *n) {
    if (s == nullptr || n == nullptr) {
        return fail(BP_ERROR_NULL_ARGUMENT, "state and out must not be NULL");
    }
    *n = s->state.ports();
    return BP_OK;
}

bp_status bp_state_term_count(const bp_state *s, int32_t *count) {
    if (s == nullptr || count == nullptr) {
        return fail(BP_ERROR_NULL_ARGUMENT, "state and out must not be NULL");
    }
    *count = static_cast<int32_t>(s->state.terms().size());
    return BP_OK;
}

bp_status bp_state_term(const bp_state *s, int32_t index, char *labels, int32_t labels_len, double *re, double *im) {
    if (s == nullptr || labels == nullptr || re == nullptr || im == nullptr) {
        return fail(BP_ERROR_NULL_ARGUMENT, "state and outs must not be NULL");
    }
    if (index < 0 || index >= static_cast<int32_t>(s->state.terms().size())) {
        return fail(BP_ERROR_INVALID_INDEX, "term index out of range");
    }
    if (labels_len < s->state.ports() + 1) {
        return fail(BP_ERROR_INVALID_INDEX, "labels buffer too small");
    }
    auto it = s->state.terms().begin();
    std::advance(it, index);
    const std::string text = bellport::label_string(it->first, s->state.ports());
    std::memcpy(labels, text.c_str(), text.size() + 1);
    *re = it->second.real();
    *im = it->second.imag();
    return BP_OK;
}

bp_status bp_state_success_probability(const bp_state *s, double *p) {
    if (s == nullptr || p == nullptr) {
        return fail(BP_ERROR_NULL_ARGUMENT, "state and out must not be NULL");
    }
    *p = bellport::success_probability(s->state);
    return BP_OK;
}

bp_status bp_state_normalized(const bp_state *s, bp_state **out) {
    if (s == nullptr || out == nullptr) {
        return fail(BP_ERROR_NULL_ARGUMENT, "state and out must not be NULL");
    }
    return wrap([&] { *out = new bp_state{bellport::normalize(s->state)}; });
}

bp_status bp_state_apply_pauli(const bp_state *s, int32_t port, char axis, bp_state **out) {
    if (s == nullptr || out == nullptr) {
        return fail(BP_ERROR_NULL_ARGUMENT, "state and out must not be NULL");
    }
    return wrap([&] {
        bellport::PauliAxis a;
        switch (axis) {
            case 'x':
                a = bellport::PauliAxis::x;
                break;
            case 'y':
                a = bellport::PauliAxis::y;
                break;
            case 'z':
                a = bellport::PauliAxis::z;
                break;
            default:
                throw bellport::ConfigurationError("Pauli axis must be 'x', 'y' or 'z'");
        }
        *out = new bp_state{bellport::apply_local_pauli(s->state, port, a)};
    });
}

bp_status bp_state_fidelity(const bp_state *a, const bp_state *b, double *fidelity) {
    if (a == nullptr || b == nullptr || fidelity == nullptr) {
        return fail(BP_ERROR_NULL_ARGUMENT, "states and out must not be NULL");
    }
    return wrap([&] { *fidelity = bellport::fidelity(a->state, b->state); });
}

bp_status bp_state_to_json(const bp_state *s, char **json) {
    if (s == nullptr || json == nullptr) {
        return fail(BP_ERROR_NULL_ARGUMENT, "state and out must not be NULL");
    }
    return wrap([&] { *json = copy_string(bellport::state_to_json(s->state)); });
}

bp_status bp_state_from_json(const char *json, bp_state **out) {
    if (json == nullptr || out == nullptr) {
        return fail(BP_ERROR_NULL_ARGUMENT, "json and out must not be NULL");
    }
    return wrap([&] { *out = new bp_state{bellport::state_from_json(json)}; });
}

bp_status bp_canonical_state(bp_canonical_kind kind, int32_t n, bp_state **out) {
    if (out == nullptr) {
        return fail(BP_ERROR_NULL_ARGUMENT, "out must not be NULL");
    }
    return wrap([&] {
        bellport::CanonicalKind k;
        switch (kind) {
            case BP_CANONICAL_W:
                k = bellport::CanonicalKind::w;
                break;
            case BP_CANONICAL_W_PRIME:
                k = bellport::CanonicalKind::w_prime;
                break;
            case BP_CANONICAL_GHZ4:
                k = bellport::CanonicalKind::ghz4;
                break;
            case BP_CANONICAL_DOUBLE_SINGLET4:
                k = bellport::CanonicalKind::double_singlet4;
                break;
            default:
                throw bellport::ConfigurationError("unknown canonical state kind");
        }
        *out = new bp_state{bellport::canonical_state(k, n)};
    });
}

bp_status bp_decompose4(const bp_input *input, bp_decomposition *out) {
    if (input == nullptr || out == nullptr) {
        return fail(BP_ERROR_NULL_ARGUMENT, "input and out must not be NULL");
    }
    return wrap([&] {
        const bellport::DecompositionResult r = bellport::decompose_general4(input->input);
        fill_pair(out->c_double_singlet, r.c_double_singlet);
        fill_pair(out->c_ghz, r.c_ghz);
        fill_pair(out->c_w, r.c_w);
        fill_pair(out->c_w_prime, r.c_w_prime);
        for (size_t k = 0; k < r.gammas.size(); k++) {
            fill_pair(out->gammas[k], r.gammas[k]);
        }
    });
}

bp_status bp_decomposition_to_json(const bp_decomposition *d, char **json) {
    if (d == nullptr || json == nullptr) {
        return fail(BP_ERROR_NULL_ARGUMENT, "decomposition and out must not be NULL");
    }
    return wrap([&] { *json = copy_string(bellport::decomposition_to_json(to_core(*d))); });
}

bp_status bp_sweep_w(int32_t n_min, int32_t n_max, double *p_out) {
    if (p_out == nullptr) {
        return fail(BP_ERROR_NULL_ARGUMENT, "out must not be NULL");
    }
    return wrap([&] {
        const auto records = bellport::sweep_w_success(n_min, n_max);
        for (size_t k = 0; k < records.size(); k++) {
            p_out[k] = records[k].p_suc;
        }
    });
}

bp_status bp_sweep_w_csv(int32_t n_min, int32_t n_max, char **csv) {
    if (csv == nullptr) {
        return fail(BP_ERROR_NULL_ARGUMENT, "out must not be NULL");
    }
    return wrap([&] { *csv = copy_string(bellport::sweep_to_csv(bellport::sweep_w_success(n_min, n_max))); });
}

bp_status bp_fit_exponential(const int32_t *ns, const double *ps, int32_t count, bp_fit_result *out) {
    if (ns == nullptr || ps == nullptr || out == nullptr) {
        return fail(BP_ERROR_NULL_ARGUMENT, "points and out must not be NULL");
    }
    return wrap([&] {
        std::vector<bellport::SweepRecord> records;
        records.reserve(static_cast<size_t>(count > 0 ? count : 0));
        for (int32_t k = 0; k < count; k++) {
            records.push_back({ns[k], ps[k]});
        }
        from_core(bellport::fit_exponential(records), out);
    });
}

bp_status bp_fit_csv(const char *csv, bp_fit_result *out) {
    if (csv == nullptr || out == nullptr) {
        return fail(BP_ERROR_NULL_ARGUMENT, "csv and out must not be NULL");
    }
    return wrap([&] { from_core(bellport::fit_exponential(bellport::sweep_from_csv(csv)), out); });
}

bp_status bp_fit_to_json(const bp_fit_result *fit, char **json) {
    if (fit == nullptr || json == nullptr) {
        return fail(BP_ERROR_NULL_ARGUMENT, "fit and out must not be NULL");
    }
    return wrap([&] { *json = copy_string(bellport::fit_to_json(to_core(*fit))); });
}

bp_status bp_verify(int32_t max_n, const bp_matrix *configured_unitary, char **report, int32_t *all_passed) {
    if (report == nullptr || all_passed == nullptr) {
        return fail(BP_ERROR_NULL_ARGUMENT, "report and all_passed must not be NULL");
    }
    return wrap([&] {
        const bellport::VerifyReport r =
            bellport::run_verification(max_n, configured_unitary ? &configured_unitary->m : nullptr);
        *report = copy_string(r.to_text());
        *all_passed = r.all_passed() ? 1 : 0;
    });
}

bp_status bp_rational_label(double value, int32_t max_den, char **label) {
    if (label == nullptr) {
        return fail(BP_ERROR_NULL_ARGUMENT, "out must not be NULL");
    }
    return wrap([&] {
        if (max_den < 1) {
            throw bellport::ConfigurationError("max_den must be at least 1");
        }
        const auto text = bellport::as_small_rational(value, max_den);
        *label = text ? copy_string(*text) : nullptr;
    });
}

}  // extern "C"
