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

#include "serialize.hpp"

#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace bellport {

using nlohmann::json;

namespace {

json amp_to_json(const Amp &a) {
    return json::array({a.real(), a.imag()});
}

Amp amp_from_json(const json &j, const char *what) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw ParseError(std::string(what) + " must be a [re, im] pair");
    }
    return Amp{j[0].get<double>(), j[1].get<double>()};
}

json parse_or_throw(const std::string &text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) {
        throw ParseError("invalid JSON");
    }
    return j;
}

}  // namespace

std::string matrix_to_json(const ComplexMatrix &m) {
    const int n = m.dim();
    json rows = json::array();
    for (int r = 0; r < n; r++) {
        json row = json::array();
        for (int c = 0; c < n; c++) {
            row.push_back(amp_to_json(m(r, c)));
        }
        rows.push_back(std::move(row));
    }
    return json{{"n", n}, {"entries", std::move(rows)}}.dump();
}

ComplexMatrix matrix_from_json(const std::string &text) {
    const json j = parse_or_throw(text);
    if (!j.is_object() || !j.contains("n") || !j.contains("entries") || !j["n"].is_number_integer()) {
        throw ParseError("matrix JSON needs integer \"n\" and array \"entries\"");
    }
    const int n = j["n"].get<int>();
    if (n < 1) {
        throw InvalidDimensionError("matrix dimension must be positive");
    }
    const json &rows = j["entries"];
    if (!rows.is_array() || rows.size() != static_cast<size_t>(n)) {
        throw ParseError("matrix \"entries\" must have n rows");
    }
    std::vector<Amp> entries;
    entries.reserve(static_cast<size_t>(n) * n);
    for (const json &row : rows) {
        if (!row.is_array() || row.size() != static_cast<size_t>(n)) {
            throw ParseError("matrix rows must each have n entries");
        }
        for (const json &e : row) {
            entries.push_back(amp_from_json(e, "matrix entry"));
        }
    }
    return ComplexMatrix(n, std::move(entries));
}

std::string state_to_json(const PostselectedState &state) {
    json terms = json::array();
    for (const auto &[mask, amp] : state.terms()) {
        terms.push_back(json{{"labels", label_string(mask, state.ports())}, {"amp", amp_to_json(amp)}});
    }
    return json{{"n", state.ports()}, {"terms", std::move(terms)}}.dump();
}

PostselectedState state_from_json(const std::string &text) {
    const json j = parse_or_throw(text);
    if (!j.is_object() || !j.contains("n") || !j.contains("terms") || !j["n"].is_number_integer() ||
        !j["terms"].is_array()) {
        throw ParseError("state JSON needs integer \"n\" and array \"terms\"");
    }
    const int n = j["n"].get<int>();
    std::map<LabelMask, Amp> terms;
    for (const json &term : j["terms"]) {
        if (!term.is_object() || !term.contains("labels") || !term.contains("amp") || !term["labels"].is_string()) {
            throw ParseError("state terms need \"labels\" and \"amp\"");
        }
        const std::string labels = term["labels"].get<std::string>();
        if (static_cast<int>(labels.size()) != n) {
            throw ParseError("term labels \"" + labels + "\" do not match n=" + std::to_string(n));
        }
        const LabelMask mask = parse_label_string(labels);
        if (!terms.emplace(mask, amp_from_json(term["amp"], "term amplitude")).second) {
            throw ParseError("duplicate term labels \"" + labels + "\"");
        }
    }
    return PostselectedState(n, std::move(terms));
}

std::string decomposition_to_json(const DecompositionResult &d) {
    json gammas = json::array();
    for (const Amp &g : d.gammas) {
        gammas.push_back(amp_to_json(g));
    }
    return json{{"c_double_singlet", amp_to_json(d.c_double_singlet)},
                {"c_ghz", amp_to_json(d.c_ghz)},
                {"c_w", amp_to_json(d.c_w)},
                {"c_w_prime", amp_to_json(d.c_w_prime)},
                {"gammas", std::move(gammas)}}
        .dump();
}

std::string fit_to_json(const FitResult &fit) {
    return json{{"a", fit.a}, {"b", fit.b}, {"residual", fit.residual}, {"points_used", fit.points_used}}.dump();
}

std::string sweep_to_csv(const std::vector<SweepRecord> &records) {
    std::string out = "n,p_suc\n";
    char buf[64];
    for (const auto &rec : records) {
        std::snprintf(buf, sizeof buf, "%d,%.15g\n", rec.n, rec.p_suc);
        out += buf;
    }
    return out;
}

std::vector<SweepRecord> sweep_from_csv(const std::string &csv) {
    std::istringstream in(csv);
    std::string line;
    auto strip = [](std::string s) {
        while (!s.empty() && (s.back() == '\r' || s.back() == ' ')) {
            s.pop_back();
        }
        return s;
    };
    if (!std::getline(in, line) || strip(line) != "n,p_suc") {
        throw ParseError("sweep CSV must start with header \"n,p_suc\"");
    }
    std::vector<SweepRecord> records;
    int line_no = 1;
    while (std::getline(in, line)) {
        line_no++;
        line = strip(line);
        if (line.empty()) {
            continue;
        }
        int n = 0;
        double p = 0.0;
        int consumed = 0;
        if (std::sscanf(line.c_str(), "%d,%lf%n", &n, &p, &consumed) != 2 ||
            consumed != static_cast<int>(line.size())) {
            throw ParseError("sweep CSV line " + std::to_string(line_no) + " is not \"n,p_suc\": " + line);
        }
        records.push_back({n, p});
    }
    return records;
}

std::optional<std::string> as_small_rational(double value, int max_den) {
    if (!std::isfinite(value)) {
        return std::nullopt;
    }
    for (int q = 1; q <= max_den; q++) {
        const double scaled = value * q;
        const double p = std::round(scaled);
        if (std::abs(p) > 1e15) {
            return std::nullopt;
        }
        if (std::abs(value - p / q) <= 1e-12) {
            const auto ip = static_cast<long long>(p);
            const long long g = std::gcd(ip, static_cast<long long>(q));
            const long long num = g ? ip / g : ip;
            const long long den = g ? q / g : q;
            if (den == 1) {
                return std::to_string(num);
            }
            return std::to_string(num) + "/" + std::to_string(den);
        }
    }
    return std::nullopt;
}

}  // namespace bellport
