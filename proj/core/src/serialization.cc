// Copyright 2026 The qlll Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qlll/serialization.h"

#include <string>

#include "qlll/errors.h"

namespace qlll {

using nlohmann::json;

namespace {

[[noreturn]] void parse_fail(const std::string &what) {
    throw Error(ErrorKind::ParseError, what);
}

const json &require(const json &obj, const char *key) {
    if (!obj.is_object() || !obj.contains(key)) {
        parse_fail(std::string("missing field '") + key + "'");
    }
    return obj.at(key);
}

double as_number(const json &j, const std::string &where) {
    if (!j.is_number()) {
        parse_fail(where + ": expected a number");
    }
    return j.get<double>();
}

}  // namespace

json matrix_to_json(const ComplexMatrix &m) {
    json rows = json::array();
    for (size_t r = 0; r < m.dim(); ++r) {
        json row = json::array();
        for (size_t c = 0; c < m.dim(); ++c) {
            const Complex v = m(r, c);
            row.push_back(json::array({v.real(), v.imag()}));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

ComplexMatrix matrix_from_json(const json &j) {
    if (!j.is_array() || j.empty()) {
        parse_fail("matrix must be a non-empty array of rows");
    }
    const auto n = static_cast<Eigen::Index>(j.size());
    Eigen::MatrixXcd m(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
        const json &row = j[static_cast<size_t>(r)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) {
            parse_fail("matrix row " + std::to_string(r) + " does not have " + std::to_string(n) + " entries");
        }
        for (Eigen::Index c = 0; c < n; ++c) {
            const json &entry = row[static_cast<size_t>(c)];
            if (!entry.is_array() || entry.size() != 2) {
                parse_fail("matrix entry (" + std::to_string(r) + "," + std::to_string(c) + ") must be [re, im]");
            }
            const std::string where = "matrix entry (" + std::to_string(r) + "," + std::to_string(c) + ")";
            m(r, c) = Complex(as_number(entry[0], where), as_number(entry[1], where));
        }
    }
    return ComplexMatrix(std::move(m));
}

Test InstanceFile::test(const ToleranceConfig &tol) const {
    return Test(validate_density(state, DensityKind::Full, tol), measurements);
}

TestEventAssignment InstanceFile::assignment(const ToleranceConfig &tol) const {
    std::map<size_t, Event> assigned;
    for (const auto &ie : events) {
        Event e = resolve(ie, measurements);
        if (!assigned.emplace(ie.measurement_index, std::move(e)).second) {
            throw Error(ErrorKind::InvalidEvent,
                        "two events assigned to measurement " + std::to_string(ie.measurement_index));
        }
    }
    return TestEventAssignment(test(tol), std::move(assigned));
}

InstanceFile InstanceFile::from_assignment(const TestEventAssignment &a, std::optional<std::vector<double>> x) {
    InstanceFile f;
    f.state = a.test().rho().matrix();
    f.measurements = a.test().measurements();
    for (const auto &[i, e] : a.events()) {
        f.events.push_back(IndexedEvent{i, e.outcomes(), false});
    }
    f.x = std::move(x);
    return f;
}

bool operator==(const InstanceFile &a, const InstanceFile &b) {
    if (a.version != b.version || !(a.state == b.state) || a.events != b.events || a.x != b.x ||
        a.measurements.size() != b.measurements.size()) {
        return false;
    }
    for (size_t i = 0; i < a.measurements.size(); ++i) {
        if (!(*a.measurements[i] == *b.measurements[i])) {
            return false;
        }
    }
    return true;
}

InstanceFile parse_instance(const json &j, const ToleranceConfig &tol) {
    if (!j.is_object()) {
        parse_fail("instance must be a JSON object");
    }
    InstanceFile f;
    const json &version = require(j, "version");
    if (!version.is_number_integer() || version.get<int>() != kInstanceFormatVersion) {
        parse_fail("unsupported instance version " + version.dump());
    }
    f.version = version.get<int>();
    const json &dim = require(j, "dim");
    if (!dim.is_number_integer() || dim.get<long long>() < 1) {
        parse_fail("dim must be a positive integer");
    }
    const auto d = static_cast<size_t>(dim.get<long long>());
    if (d > dimension_cap()) {
        throw Error(ErrorKind::DimensionCapExceeded,
                    "dimension " + std::to_string(d) + " exceeds cap " + std::to_string(dimension_cap()));
    }
    f.state = matrix_from_json(require(j, "state"));
    if (f.state.dim() != d) {
        throw Error(ErrorKind::DimensionMismatch, "state is " + std::to_string(f.state.dim()) + "-dimensional, dim is " +
                                                      std::to_string(d));
    }
    const json &ms = require(j, "measurements");
    if (!ms.is_array() || ms.empty()) {
        parse_fail("measurements must be a non-empty array");
    }
    for (size_t i = 0; i < ms.size(); ++i) {
        const json &mj = ms[i];
        const json &name = require(mj, "name");
        const json &outcomes = require(mj, "outcomes");
        const json &kraus = require(mj, "kraus");
        if (!name.is_string() || !outcomes.is_array() || !kraus.is_array()) {
            parse_fail("measurement " + std::to_string(i + 1) + ": name, outcomes and kraus have the wrong type");
        }
        std::vector<OutcomeLabel> labels;
        for (const auto &l : outcomes) {
            if (!l.is_string()) {
                parse_fail("measurement " + std::to_string(i + 1) + ": outcome labels must be strings");
            }
            labels.push_back(l.get<std::string>());
        }
        if (kraus.size() != labels.size()) {
            throw Error(ErrorKind::InvalidMeasurement, "measurement " + std::to_string(i + 1) + " lists " +
                                                           std::to_string(labels.size()) + " outcomes but " +
                                                           std::to_string(kraus.size()) + " Kraus matrices");
        }
        std::vector<ComplexMatrix> ops;
        for (const auto &kj : kraus) {
            ops.push_back(matrix_from_json(kj));
            if (ops.back().dim() != d) {
                throw Error(ErrorKind::DimensionMismatch,
                            "measurement " + std::to_string(i + 1) + " has a Kraus matrix of dimension " +
                                std::to_string(ops.back().dim()));
            }
        }
        f.measurements.push_back(make_measurement(Measurement(name.get<std::string>(), labels, ops, tol)));
    }
    if (j.contains("events") && !j.at("events").is_null()) {
        const json &evs = j.at("events");
        if (!evs.is_array()) {
            parse_fail("events must be an array");
        }
        for (const auto &ej : evs) {
            const json &idx = require(ej, "measurement");
            const json &in = require(ej, "in");
            if (!idx.is_number_integer() || idx.get<long long>() < 1 || !in.is_array()) {
                parse_fail("event needs a positive integer 'measurement' and an 'in' array");
            }
            IndexedEvent ie;
            ie.measurement_index = static_cast<size_t>(idx.get<long long>());
            for (const auto &l : in) {
                if (!l.is_string()) {
                    parse_fail("event labels must be strings");
                }
                ie.outcomes.push_back(l.get<std::string>());
            }
            resolve(ie, f.measurements);
            f.events.push_back(std::move(ie));
        }
    }
    if (j.contains("x") && !j.at("x").is_null()) {
        const json &xs = j.at("x");
        if (!xs.is_array()) {
            parse_fail("x must be an array of numbers");
        }
        std::vector<double> x;
        for (const auto &v : xs) {
            x.push_back(as_number(v, "x"));
        }
        f.x = std::move(x);
    }
    f.test(tol);
    f.assignment(tol);
    return f;
}

InstanceFile parse_instance_text(std::string_view text, const ToleranceConfig &tol) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error &e) {
        parse_fail(std::string("invalid JSON: ") + e.what());
    }
    return parse_instance(j, tol);
}

json instance_to_json(const InstanceFile &f) {
    json j;
    j["version"] = f.version;
    j["dim"] = f.dim();
    j["state"] = matrix_to_json(f.state);
    json ms = json::array();
    for (const auto &m : f.measurements) {
        json kraus = json::array();
        for (const auto &k : m->kraus()) {
            kraus.push_back(matrix_to_json(k));
        }
        ms.push_back({{"name", m->name()}, {"outcomes", m->labels()}, {"kraus", std::move(kraus)}});
    }
    j["measurements"] = std::move(ms);
    json evs = json::array();
    for (const auto &e : f.events) {
        const auto labels =
            e.complete ? resolve(e, f.measurements).outcomes() : e.outcomes;
        evs.push_back({{"measurement", e.measurement_index}, {"in", labels}});
    }
    j["events"] = std::move(evs);
    if (f.x) {
        j["x"] = *f.x;
    }
    return j;
}

std::string serialize_instance(const InstanceFile &f) {
    return instance_to_json(f).dump();
}

json profile_to_json(const DependenceProfile &p) {
    json table = json::array();
    for (const auto &[kl, rel] : p.nind_table()) {
        json entry = json::array({kl.first, kl.second});
        if (rel == Relation::Undefined) {
            entry.push_back("undefined");
        } else {
            entry.push_back(rel == Relation::Independent);
        }
        table.push_back(std::move(entry));
    }
    return {{"n", p.n()}, {"s", p.s_values()}, {"d_min", p.d_min()}, {"nind_table", std::move(table)}};
}

json symmetric_to_json(const SymmetricReport &r) {
    return {{"p", r.p},
            {"p_measured", r.p_measured},
            {"d_min", r.d_min},
            {"condition_value", r.condition_value},
            {"condition", std::string(to_string(r.condition))},
            {"lhs", r.lhs},
            {"lower_bound", r.lower_bound},
            {"chain_ok", r.chain_ok},
            {"positivity", std::string(to_string(r.positivity))}};
}

json report_to_json(const LLLReport &r) {
    json lemma = json::array();
    for (const auto &b : r.lemma_bounds) {
        lemma.push_back({{"conditional", b.conditional ? json(*b.conditional) : json(nullptr)},
                         {"x", b.x},
                         {"holds", b.holds()}});
    }
    json assumption = json::array();
    for (bool b : r.assumption_ok) {
        assumption.push_back(b);
    }
    json j = {{"marginals", r.marginals},
              {"s", r.s},
              {"assumption_bounds", r.assumption_bounds},
              {"assumption_ok", std::move(assumption)},
              {"lemma_bounds", std::move(lemma)},
              {"lhs", r.lhs},
              {"rhs", r.rhs},
              {"bound_ok", r.bound_ok}};
    if (r.symmetric) {
        j["symmetric"] = symmetric_to_json(*r.symmetric);
    }
    return j;
}

json sample_to_json(const SampleEstimate &s) {
    return {{"estimate", s.estimate}, {"n_samples", s.n_samples}, {"std_error", s.std_error},
            {"hits", s.hits},         {"seed", s.seed},           {"rng", s.rng}};
}

json error_to_json(const Error &e) {
    json err = {{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}};
    if (e.residual()) {
        err["residual"] = *e.residual();
    }
    if (e.index()) {
        err["index"] = *e.index();
    }
    return {{"error", std::move(err)}};
}

}  // namespace qlll
