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

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "commands.h"
#include "qlll/errors.h"
#include "qlll/serialization.h"

namespace {

using qlll::cli::Options;

void add_instance(CLI::App *cmd, Options &o) {
    cmd->add_option("--instance", o.instance, "Instance file (JSON)")->required();
}

void add_mode(CLI::App *cmd, Options &o) {
    cmd->add_option("--mode", o.mode, "state or test")->check(CLI::IsMember({"state", "test"}));
}

}  // namespace

int main(int argc, char **argv) {
    Options o;
    bool pretty = false;
    CLI::App app{"Probabilities, independence and local-lemma checks for sequences of quantum measurements"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--json", "Compact JSON output (default)");
    app.add_flag("--pretty", pretty, "Indented JSON output");

    auto *prob = app.add_subcommand("prob", "Probability of an event sequence or of E_K");
    add_instance(prob, o);
    add_mode(prob, o);
    prob->add_option("--seq", o.seq, "Events, e.g. 'M1=1;M2 in {0}'");
    prob->add_option("--K", o.k, "Index set, e.g. 1,3");

    auto *cond = app.add_subcommand("cond", "Conditional probability");
    add_instance(cond, o);
    add_mode(cond, o);
    cond->add_option("--given", o.given, "Conditioning events");
    cond->add_option("--seq", o.seq, "Conditioned events");
    cond->add_option("--K", o.k, "Conditioning index set (test mode)");
    cond->add_option("--L", o.l, "Conditioned index set (test mode)");

    auto *indep = app.add_subcommand("indep", "Independence of E_i from E_J given E_{K\\J}");
    add_instance(indep, o);
    indep->add_option("--i", o.i, "Target index")->required();
    indep->add_option("--K", o.k, "Conditioning index set (default 1..i-1)");
    indep->add_option("--J", o.j, "Subsequence of K (default K)");
    indep->add_option("--seq", o.seq, "Event overrides");
    indep->add_flag("--negative", o.negative, "Condition on the complements of E_K");

    auto *profile = app.add_subcommand("profile", "s_i, the NInd table and the minimal dependence radius");
    add_instance(profile, o);

    auto *check = app.add_subcommand("check", "General or symmetric local-lemma check");
    add_instance(check, o);
    check->add_option("variant", o.variant, "general or symmetric")->check(CLI::IsMember({"general", "symmetric"}));
    check->add_option("--x", o.x, "Weights as CSV (overrides the file)");
    check->add_option("--p", o.p, "Symmetric bound p (default: measured max)");

    auto *sample = app.add_subcommand("sample", "Monte Carlo estimate of Pr[E_K]");
    add_instance(sample, o);
    sample->add_option("--K", o.k, "Index set (default: every assigned event)");
    sample->add_option("--seq", o.seq, "Event overrides");
    sample->add_option("--n", o.n, "Number of samples");
    sample->add_option("--seed", o.seed, "RNG seed")->required();
    sample->add_option("--workers", o.workers, "Worker threads (0 = hardware)");
    sample->add_option("--cap", o.cap, "Enumeration cap for the exact comparison");
    sample->add_flag("--exact", o.exact, "Fail when the exact comparison cannot be made");

    auto *paper = app.add_subcommand("paper-examples", "Reproduce the bundled worked examples");
    paper->add_option("--expectations", o.expectations, "JSON overrides {example: {description: value}}");

    auto *gen = app.add_subcommand("gen", "Generate an instance file");
    gen->add_option("--kind", o.kind, "Generator kind");
    gen->add_option("--n", o.n_events, "Number of measurements");
    gen->add_option("--local-dim", o.local_dim, "Local dimension");
    gen->add_option("--window", o.window, "Window width (sliding-window)");
    gen->add_option("--outcomes", o.outcomes, "Spectrum size for random kinds (0 = random)");
    gen->add_option("--seed", o.seed, "RNG seed")->required();
    gen->add_option("--x", o.x, "Shrink events until the general assumption holds for these weights");
    gen->add_flag("--symmetric-satisfying", o.symmetric_satisfying, "Shrink events until p*e*(d+1) < 1");
    gen->add_option("--out", o.out, "Output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        std::cout << qlll::error_to_json(qlll::Error(qlll::ErrorKind::ParseError, e.what())).dump() << '\n';
        return 2;
    }

    const std::string verb = app.get_subcommands().front()->get_name();
    const qlll::cli::Result r = qlll::cli::run(verb, o);
    std::cout << (pretty ? r.output.dump(2) : r.output.dump()) << '\n';
    return r.exit_code;
}
