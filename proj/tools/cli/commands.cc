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

#include "commands.h"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "qlll/errors.h"
#include "qlll/independence.h"
#include "qlll/instance_gen.h"
#include "qlll/lll.h"
#include "qlll/oracle.h"
#include "qlll/serialization.h"

namespace qlll::cli {

using nlohmann::json;

namespace {

InstanceFile load(const Options &o) {
    if (o.instance.empty()) {
        throw Error(ErrorKind::InvalidArgument, "--instance is required");
    }
    std::ifstream in(o.instance);
    if (!in) {
        throw Error(ErrorKind::InvalidArgument, "cannot open " + o.instance);
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_instance_text(buf.str(), o.tol);
}

json read_json_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorKind::InvalidArgument, "cannot open " + path);
    }
    try {
        return json::parse(in);
    } catch (const json::parse_error &e) {
        throw Error(ErrorKind::ParseError, std::string("invalid JSON in ") + path + ": " + e.what());
    }
}

void require_mode(const Options &o) {
    if (o.mode != "state" && o.mode != "test") {
        throw Error(ErrorKind::InvalidArgument, "--mode must be state or test");
    }
}

std::vector<Event> resolve_all(const std::vector<IndexedEvent> &events, const InstanceFile &f) {
    std::vector<Event> out;
    for (const auto &e : events) {
        out.push_back(resolve(e, f.measurements));
    }
    return out;
}

json formatted(const std::vector<IndexedEvent> &events) {
    json out = json::array();
    for (const auto &e : events) {
        out.push_back(format_event(e));
    }
    return out;
}

/// File events, with any event named in the query replacing the file's
/// event at the same position.
TestEventAssignment assignment_with(const InstanceFile &f, const std::vector<IndexedEvent> &overrides,
                                    const ToleranceConfig &tol) {
    TestEventAssignment a = f.assignment(tol);
    for (const auto &e : overrides) {
        a = a.with_event(e.measurement_index, resolve(e, f.measurements));
    }
    return a;
}

IndexSet indices_of(const std::vector<IndexedEvent> &events) {
    std::vector<size_t> idx;
    for (const auto &e : events) {
        idx.push_back(e.measurement_index);
    }
    std::sort(idx.begin(), idx.end());
    return IndexSet(std::move(idx));
}

IndexSet assigned_indices(const TestEventAssignment &a) {
    std::vector<size_t> idx;
    for (const auto &[i, e] : a.events()) {
        idx.push_back(i);
    }
    return IndexSet(std::move(idx));
}

std::vector<IndexedEvent> events_flag(const std::optional<std::string> &text) {
    return text ? parse_event_sequence(*text) : std::vector<IndexedEvent>{};
}

}  // namespace

std::vector<double> parse_csv(const std::string &text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception &) {
            throw Error(ErrorKind::ParseError, "not a number: '" + item + "'");
        }
        if (item.find_first_not_of(" \t", used) != std::string::npos) {
            throw Error(ErrorKind::ParseError, "not a number: '" + item + "'");
        }
        out.push_back(v);
    }
    return out;
}

Result cmd_prob(const Options &o) {
    require_mode(o);
    const InstanceFile f = load(o);
    const auto seq = events_flag(o.seq);
    if (o.mode == "state") {
        if (!o.seq) {
            throw Error(ErrorKind::InvalidArgument, "state mode needs --seq");
        }
        const double v = pr_state(f.test(o.tol).rho(), resolve_all(seq, f), o.tol);
        return {{{"value", v}, {"mode", "state"}, {"query", {{"seq", formatted(seq)}}}}, 0};
    }
    const TestEventAssignment a = assignment_with(f, seq, o.tol);
    const IndexSet k = o.k ? parse_index_set(*o.k) : (o.seq ? indices_of(seq) : assigned_indices(a));
    const double v = pr_test_marginal(a, k, o.tol);
    return {{{"value", v}, {"mode", "test"}, {"query", {{"K", k.indices()}, {"seq", formatted(seq)}}}}, 0};
}

Result cmd_cond(const Options &o) {
    require_mode(o);
    const InstanceFile f = load(o);
    const auto given = events_flag(o.given);
    const auto then = events_flag(o.seq);
    if (o.mode == "state") {
        if (!o.seq) {
            throw Error(ErrorKind::InvalidArgument, "state mode needs --seq (and optionally --given)");
        }
        const double v = pr_state_cond(f.test(o.tol).rho(), resolve_all(given, f), resolve_all(then, f), o.tol);
        return {{{"value", v}, {"mode", "state"}, {"query", {{"given", formatted(given)}, {"seq", formatted(then)}}}},
                0};
    }
    std::vector<IndexedEvent> overrides = given;
    overrides.insert(overrides.end(), then.begin(), then.end());
    const TestEventAssignment a = assignment_with(f, overrides, o.tol);
    const IndexSet k = o.k ? parse_index_set(*o.k) : indices_of(given);
    if (!o.l && !o.seq) {
        throw Error(ErrorKind::InvalidArgument, "test mode needs --L or --seq");
    }
    const IndexSet l = o.l ? parse_index_set(*o.l) : indices_of(then);
    const double v = pr_test_cond(a, k, l, o.tol);
    return {{{"value", v}, {"mode", "test"}, {"query", {{"K", k.indices()}, {"L", l.indices()}}}}, 0};
}

Result cmd_indep(const Options &o) {
    const InstanceFile f = load(o);
    const TestEventAssignment a = assignment_with(f, events_flag(o.seq), o.tol);
    if (o.i == 0) {
        throw Error(ErrorKind::InvalidArgument, "--i is required");
    }
    const IndexSet k = o.k ? parse_index_set(*o.k) : IndexSet::prefix(o.i - 1);
    IndependenceValues v;
    bool independent = false;
    json query = {{"i", o.i}, {"K", k.indices()}, {"negative", o.negative}};
    if (o.negative) {
        v = negative_independence_values(a, o.i, k, o.tol);
        independent = v.difference() <= o.tol.ind;
    } else {
        const IndexSet j = o.j ? parse_index_set(*o.j) : k;
        const IndependenceQuery q{a, o.i, k, j};
        v = independence_values(q, o.tol);
        independent = v.difference() <= o.tol.ind;
        query["J"] = j.indices();
    }
    return {{{"independent", independent},
             {"conditioned", v.conditioned},
             {"reference", v.reference},
             {"difference", v.difference()},
             {"query", std::move(query)}},
            0};
}

Result cmd_profile(const Options &o) {
    const InstanceFile f = load(o);
    const DependenceProfile p = compute_profile(f.assignment(o.tol), o.tol);
    json out = profile_to_json(p);
    if (p.all_undefined()) {
        throw Error(ErrorKind::ConditionOnZero, "every entry of the profile is undefined");
    }
    return {std::move(out), 0};
}

Result cmd_check(const Options &o) {
    const InstanceFile f = load(o);
    const TestEventAssignment a = f.assignment(o.tol);
    if (o.variant == "general") {
        std::vector<double> x;
        if (o.x) {
            x = parse_csv(*o.x);
        } else if (f.x) {
            x = *f.x;
        } else {
            throw Error(ErrorKind::InvalidArgument, "general check needs x (--x or the file's x field)");
        }
        const LLLReport r = check_general(LLLInstance(a, std::move(x)), o.tol);
        int code = 0;
        if (r.inconsistent()) {
            code = 2;
        } else if (!r.assumption_holds()) {
            code = 1;
        }
        return {{{"variant", "general"}, {"report", report_to_json(r)}}, code};
    }
    if (o.variant != "symmetric") {
        throw Error(ErrorKind::InvalidArgument, "--variant must be general or symmetric");
    }
    double p = 0.0;
    if (o.p) {
        p = *o.p;
    } else {
        for (size_t i = 1; i <= a.size(); ++i) {
            p = std::max(p, pr_test_marginal(a, IndexSet{i}, o.tol));
        }
    }
    const SymmetricReport s = check_symmetric(a, p, o.tol);
    // The symmetric statement is the general one at x_i = 1/(d+1).
    LLLReport r = check_general(
        LLLInstance(a, std::vector<double>(a.size(), 1.0 / (static_cast<double>(s.d_min) + 1.0))), o.tol);
    r.symmetric = s;
    int code = 0;
    switch (s.positivity) {
        case PositivityStatus::Pass:
            code = 0;
            break;
        case PositivityStatus::Fail:
            code = 2;
            break;
        case PositivityStatus::Inconclusive:
        case PositivityStatus::NotClaimed:
            code = 1;
            break;
    }
    if (s.condition == ConditionStatus::Satisfied && (!s.chain_ok || r.inconsistent())) {
        code = 2;
    }
    return {{{"variant", "symmetric"}, {"report", report_to_json(r)}}, code};
}

Result cmd_sample(const Options &o) {
    if (!o.seed) {
        throw Error(ErrorKind::InvalidArgument, "sample needs an explicit --seed");
    }
    if (o.n < 1) {
        throw Error(ErrorKind::InvalidArgument, "--n must be at least 1");
    }
    const InstanceFile f = load(o);
    const TestEventAssignment a = assignment_with(f, events_flag(o.seq), o.tol);
    const IndexSet k = o.k ? parse_index_set(*o.k) : assigned_indices(a);
    const SampleEstimate s = sample_trajectories(a, k, o.n, *o.seed, o.workers);
    json out = sample_to_json(s);
    out["K"] = k.indices();
    try {
        const double exact = enumerate_probability(a, k, o.cap);
        out["exact"] = exact;
        const double diff = std::abs(s.estimate - exact);
        if (s.std_error > 0.0) {
            out["discrepancy_sigma"] = diff / s.std_error;
        } else {
            out["discrepancy_sigma"] = diff == 0.0 ? json(0.0) : json(nullptr);
        }
    } catch (const Error &e) {
        if (e.kind() != ErrorKind::EnumerationCapExceeded || o.exact) {
            throw;
        }
        out["exact"] = nullptr;
        out["discrepancy_sigma"] = nullptr;
    }
    return {std::move(out), 0};
}

Result cmd_paper_examples(const Options &o) {
    json overrides = json::object();
    if (o.expectations) {
        overrides = read_json_file(*o.expectations);
        if (!overrides.is_object()) {
            throw Error(ErrorKind::ParseError, "expectation overrides must be an object");
        }
    }
    json examples = json::array();
    bool all_pass = true;
    size_t checked = 0;
    for (const auto &ex : paper_examples()) {
        json rows = json::array();
        for (const auto &e : ex.expectations) {
            double expected = e.expected;
            if (overrides.contains(ex.name) && overrides[ex.name].contains(e.description)) {
                expected = overrides[ex.name][e.description].get<double>();
            }
            const double actual = e.compute();
            const bool pass = std::abs(actual - expected) <= 1e-9;
            all_pass = all_pass && pass;
            ++checked;
            json row = {{"description", e.description},
                        {"claim", e.claim},
                        {"expected", expected},
                        {"actual", actual},
                        {"pass", pass}};
            if (e.stated) {
                row["stated"] = *e.stated;
            }
            rows.push_back(std::move(row));
        }
        examples.push_back({{"name", ex.name}, {"expectations", std::move(rows)}});
    }
    return {{{"examples", std::move(examples)}, {"checked", checked}, {"all_pass", all_pass}}, all_pass ? 0 : 2};
}

Result cmd_gen(const Options &o) {
    if (!o.seed) {
        throw Error(ErrorKind::InvalidArgument, "gen needs an explicit --seed");
    }
    GeneratorSpec spec;
    spec.kind = parse_generator_kind(o.kind);
    spec.n = o.n_events;
    spec.local_dim = o.local_dim;
    spec.window = o.window;
    spec.seed = *o.seed;
    spec.outcomes = o.outcomes;
    spec.validate();
    InstanceFile f;
    json meta = {{"kind", std::string(to_string(spec.kind))}, {"seed", spec.seed}};
    if (o.x) {
        std::vector<double> x = parse_csv(*o.x);
        if (x.size() == 1 && spec.n > 1) {
            x.assign(spec.n, x.front());
        }
        const GeneratedLLL g = generate_assumption_satisfying(spec, x, 1000, o.tol);
        f = InstanceFile::from_assignment(g.instance.assignment(), g.instance.x());
        meta["rejections"] = g.rejections;
    } else if (o.symmetric_satisfying) {
        f = InstanceFile::from_assignment(generate_symmetric_satisfying(spec, 1000, o.tol));
    } else {
        f = InstanceFile::from_assignment(generate(spec));
    }
    const std::string text = serialize_instance(f);
    if (o.out) {
        std::ofstream out(*o.out);
        if (!out) {
            throw Error(ErrorKind::InvalidArgument, "cannot write " + *o.out);
        }
        out << text << '\n';
        meta["written"] = *o.out;
        return {std::move(meta), 0};
    }
    return {instance_to_json(f), 0};
}

Result run(const std::string &verb, const Options &o) {
    try {
        o.tol.validate();
        if (verb == "prob") {
            return cmd_prob(o);
        }
        if (verb == "cond") {
            return cmd_cond(o);
        }
        if (verb == "indep") {
            return cmd_indep(o);
        }
        if (verb == "profile") {
            return cmd_profile(o);
        }
        if (verb == "check") {
            return cmd_check(o);
        }
        if (verb == "sample") {
            return cmd_sample(o);
        }
        if (verb == "paper-examples") {
            return cmd_paper_examples(o);
        }
        if (verb == "gen") {
            return cmd_gen(o);
        }
        throw Error(ErrorKind::InvalidArgument, "unknown command '" + verb + "'");
    } catch (const Error &e) {
        const bool on_zero = e.kind() == ErrorKind::ConditionOnZero && verb != "profile";
        return {error_to_json(e), on_zero ? 1 : 2};
    } catch (const json::exception &e) {
        return {error_to_json(Error(ErrorKind::ParseError, e.what())), 2};
    }
}

}  // namespace qlll::cli
