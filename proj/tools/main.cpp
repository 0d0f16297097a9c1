// vldl: command-line front end over project files.
// Exit status: 0 positive verdict, 1 negative verdict, 2 usage or input error.

#include "vldl/analysis.hpp"
#include "vldl/difftest.hpp"
#include "vldl/error.hpp"
#include "vldl/logic.hpp"
#include "vldl/project.hpp"
#include "vldl/semantics.hpp"
#include "vldl/translate.hpp"
#include "vldl/validate.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace vldl;

constexpr int positive = 0;
constexpr int negative = 1;
constexpr int input_error = 2;

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot write '" + path + "'");
    out << content;
}

int run_eval(const std::string& file, const std::string& formula_id, const std::string& word_id) {
    const Project p = load_project(file);
    const Formula& f = p.formula(formula_id);
    const LassoWord& w = p.word(word_id);
    const SatTable table = evaluate(f, p.guards, p.alphabet, w);
    std::cout << "word: " << format_lasso(p.alphabet, w) << "\n";
    for (std::size_t c = 0; c < w.classes(); ++c)
        std::cout << "class " << c << (c < w.prefix.size() ? " (prefix " : " (period ")
                  << p.alphabet.letter(w.at(c)).id << "): " << (table.at_class(c) ? "true" : "false") << "\n";
    const bool verdict = table.at_class(0);
    std::cout << "verdict: " << (verdict ? "satisfied" : "violated") << "\n";
    return verdict ? positive : negative;
}

int run_translate(const std::string& file, const std::string& formula_id, const std::string& emit,
                  const std::string& output) {
    const Project p = load_project(file);
    const OneAja a = vldl_to_aja(p.formula(formula_id), p.guards, p.alphabet);
    write_output(output, emit == "dot" ? to_dot(a, formula_id) : dump_aja(formula_id, a));
    return positive;
}

SearchBounds bounds_of(unsigned max_u, unsigned max_v) {
    if (max_v == 0) throw InputError("--max-v must be at least 1");
    return {max_u, max_v, std::nullopt};
}

void report_verdict(const PushdownAlphabet& alphabet, const Verdict& v) {
    std::cout << "outcome: " << to_string(v.outcome) << "\n";
    if (v.word) std::cout << "word: " << format_lasso(alphabet, *v.word) << "\n";
    std::cout << "examined: " << v.examined << "\n";
}

int run_sat(const std::string& file, const std::string& formula_id, unsigned max_u, unsigned max_v) {
    const Project p = load_project(file);
    const Verdict v = bounded_sat(p.formula(formula_id), p.guards, p.alphabet, bounds_of(max_u, max_v));
    report_verdict(p.alphabet, v);
    return v.outcome == Outcome::witness_found ? positive : negative;
}

int run_mc(const std::string& file, const std::string& system_id, const std::string& formula_id,
           const std::string& bad_id, unsigned max_u, unsigned max_v) {
    const Project p = load_project(file);
    const auto sys = p.systems.find(system_id);
    if (sys == p.systems.end()) throw InputError("unknown system '" + system_id + "'");
    const auto start_it = p.system_start.find(system_id);
    const StateId start = start_it == p.system_start.end() ? 0 : start_it->second;
    Verdict v;
    if (!bad_id.empty()) {
        const auto bad = p.bvpas.find(bad_id);
        if (bad == p.bvpas.end()) throw InputError("unknown BVPA '" + bad_id + "'");
        v = intersect_empty(sys->second, start, bad->second);
    } else {
        v = bounded_refute(sys->second, start, p.formula(formula_id), p.guards, bounds_of(max_u, max_v));
    }
    report_verdict(p.alphabet, v);
    std::cout << "verdict: "
              << (v.outcome == Outcome::counterexample ? "violated"
                  : v.outcome == Outcome::holds        ? "holds"
                                                       : "holds within bounds")
              << "\n";
    return v.outcome == Outcome::counterexample ? negative : positive;
}

int run_difftest(std::uint64_t seed, unsigned count, unsigned max_size, const std::vector<std::string>& suites,
                 const std::string& dump) {
    bool ok = true;
    std::optional<difftest::Failure> smallest;
    for (const auto& suite : suites) {
        difftest::SuiteReport r;
        if (suite == "translation") r = difftest::aja_translation(seed, count, max_size);
        else if (suite == "stairs") r = difftest::stair_translation(seed, count);
        else if (suite == "ltl") r = difftest::ltl_embedding(seed, count);
        else throw InputError("unknown suite '" + suite + "'");
        std::cout << r.name << ": " << r.checked - r.failed << "/" << r.checked << " passed"
                  << (r.passed() ? "" : " FAIL") << "\n";
        ok = ok && r.passed();
        if (r.smallest && (!smallest || r.smallest->weight < smallest->weight)) smallest = r.smallest;
    }
    if (smallest) {
        std::cout << "smallest failing instance (" << smallest->note << "):\n" << dump_project(smallest->instance);
        if (!dump.empty()) write_output(dump, dump_project(smallest->instance));
    }
    return ok ? positive : negative;
}

std::string counter_project(unsigned n) {
    Project p;
    const Property prop = counter_formula(n);
    p.alphabet = counter_alphabet();
    p.guards = prop.automata;
    p.formula_text["counter"] = to_string(prop.formula);
    p.formulas.emplace("counter", prop.formula);
    LassoWord model;
    const LetterId hash = p.alphabet.require("#");
    for (unsigned value = 0; value < (1u << n); ++value) {
        model.prefix.push_back(hash);
        for (unsigned bit = n; bit-- > 0;) model.prefix.push_back(p.alphabet.require((value >> bit) & 1u ? "1" : "0"));
    }
    model.period.push_back(hash);
    p.words.emplace("model", model);
    return dump_project(p);
}

int run_check(const std::string& file) {
    const Project p = load_project(file);
    std::size_t problems = 0;
    auto show = [&](const std::string& id, const std::vector<Diagnostic>& ds) {
        for (const auto& d : ds) {
            std::cout << id << ": " << d.message << "\n";
            ++problems;
        }
    };
    for (const auto& [id, g] : p.guards.entries()) show(id, validate(g));
    for (const auto& [id, b] : p.bvpas) show(id, validate(b));
    for (const auto& [id, d] : p.dpsas) show(id, validate(d));
    for (const auto& [id, a] : p.ajas) show(id, validate(a));
    for (const auto& [id, s] : p.systems) show(id, validate(s));
    std::cout << (problems == 0 ? "ok" : std::to_string(problems) + " problem(s)") << "\n";
    return problems == 0 ? positive : negative;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Visibly linear dynamic logic toolkit"};
    app.require_subcommand(1);

    std::string file, formula_id, word_id, emit = "aja", output, system_id, bad_id;
    unsigned max_u = 3, max_v = 2, count = 500, max_size = 12, n = 2;
    std::uint64_t seed = 7;
    std::vector<std::string> suites{"translation", "stairs", "ltl"};

    auto* eval = app.add_subcommand("eval", "Evaluate a formula on a lasso word");
    eval->add_option("project", file, "Project file")->required();
    eval->add_option("--formula", formula_id)->required();
    eval->add_option("--word", word_id)->required();

    auto* translate = app.add_subcommand("translate", "Translate a formula into a 1-AJA");
    translate->add_option("project", file, "Project file")->required();
    translate->add_option("--formula", formula_id)->required();
    translate->add_option("--emit", emit)->check(CLI::IsMember({"aja", "dot"}));
    translate->add_option("-o,--output", output, "Output file (default stdout)");

    auto* sat = app.add_subcommand("sat", "Bounded satisfiability over lasso words");
    sat->add_option("project", file, "Project file")->required();
    sat->add_option("--formula", formula_id)->required();
    sat->add_option("--max-u", max_u);
    sat->add_option("--max-v", max_v);

    auto* mc = app.add_subcommand("mc", "Model check a visibly pushdown system");
    mc->add_option("project", file, "Project file")->required();
    mc->add_option("--system", system_id)->required();
    auto* formula_opt = mc->add_option("--formula", formula_id, "Specification (bounded search)");
    auto* bad_opt = mc->add_option("--bad", bad_id, "BVPA of bad behaviour (exact)");
    formula_opt->excludes(bad_opt);
    mc->add_option("--max-u", max_u);
    mc->add_option("--max-v", max_v);

    auto* diff = app.add_subcommand("difftest", "Run the differential suites");
    diff->add_option("--seed", seed);
    diff->add_option("--count", count);
    diff->add_option("--max-size", max_size);
    diff->add_option("--suite", suites, "Comma separated subset of translation,stairs,ltl")->delimiter(',');
    diff->add_option("--dump", output, "Also write the smallest failing instance to this file");

    auto* gen = app.add_subcommand("gen", "Generate a project");
    auto* counter = gen->add_subcommand("counter", "Binary counter formula");
    counter->add_option("-n", n)->required()->check(CLI::Range(1u, 16u));
    counter->add_option("-o,--output", output, "Output file (default stdout)");
    gen->require_subcommand(1);

    auto* check = app.add_subcommand("check", "Validate every automaton in a project");
    check->add_option("project", file, "Project file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : input_error;
    }

    try {
        if (eval->parsed()) return run_eval(file, formula_id, word_id);
        if (translate->parsed()) return run_translate(file, formula_id, emit, output);
        if (sat->parsed()) return run_sat(file, formula_id, max_u, max_v);
        if (mc->parsed()) {
            if (formula_id.empty() && bad_id.empty()) throw InputError("mc needs --formula or --bad");
            return run_mc(file, system_id, formula_id, bad_id, max_u, max_v);
        }
        if (diff->parsed()) return run_difftest(seed, count, max_size, suites, output);
        if (counter->parsed()) {
            write_output(output, counter_project(n));
            return positive;
        }
        if (check->parsed()) return run_check(file);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return input_error;
    } catch (const ContractViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return input_error;
    } catch (const Unsupported& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return input_error;
    }
    return input_error;
}
