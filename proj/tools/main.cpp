#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "choral/json_io.hpp"
#include "choral/oracles.hpp"

namespace {

using namespace choral;
using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SemanticError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct Options {
    std::string file;
    bool json_out = false;
    std::string op;
    std::string flavor = "minimal";
    std::string set;
    std::string notion;
    std::string pair;
    bool totals_only = false;
    bool traces = false;
    bool to_d2c = false;
    unsigned max_atoms = 0;
    unsigned max_interval = 0;
    unsigned jobs = 1;  // accepted for interface stability; dispatch is serial
};

Limits effective_limits(const Options& opt) {
    Limits limits = default_limits();
    if (opt.max_atoms) {
        limits.max_sweep_atoms = opt.max_atoms;
        limits.max_dom_atoms = opt.max_atoms;
    }
    if (opt.max_interval) limits.max_interval_atoms = opt.max_interval;
    if (const char* env = std::getenv("CHOICE_AFT_MAX_STATES"))
        limits.max_states = std::strtoull(env, nullptr, 10);
    return limits;
}

ChoiceProgram to_choice(const ParsedProgram& parsed) {
    if (const auto* d = std::get_if<DisjunctiveProgram>(&parsed)) return d2c(*d);
    return std::get<ChoiceProgram>(parsed);
}

void emit(const Options& opt, const json& j, const std::string& text) {
    if (opt.json_out)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
}

std::vector<OperatorKind> selected_kinds(const Options& opt) {
    if (opt.op.empty()) return all_operator_kinds();
    return {operator_kind_from_string(opt.op)};
}

int cmd_models(const Options& opt) {
    Limits limits = effective_limits(opt);
    ChoiceProgram p = to_choice(parse_program(read_file(opt.file), limits));
    const SignaturePtr& sig = p.signature();
    if (sig->size() > limits.max_sweep_atoms)
        throw CapError("exhaustive sweep over " + std::to_string(sig->size()) +
                       " atoms exceeds the cap of " +
                       std::to_string(limits.max_sweep_atoms));
    // Surface Assumption violations up front: every set must have a
    // non-empty operator image.
    std::uint64_t universe = sig->universe_mask();
    for (std::uint64_t x = 0;; ++x) {
        ic(p, AtomSet(sig, x), limits);
        if (x == universe) break;
    }
    std::vector<AtomSet> supported = supported_models(p, limits);

    json out;
    std::ostringstream text;
    json sup = json::array();
    text << "supported models:" << (supported.empty() ? " none" : "") << "\n";
    for (const auto& m : supported) {
        sup.push_back(to_json(m));
        text << "  " << m.to_string() << "\n";
    }
    out["supported"] = sup;
    out["fixpoints"] = json::object();
    for (OperatorKind kind : selected_kinds(opt)) {
        std::vector<Pair> fps = fixpoints(kind, p, opt.totals_only, limits);
        json list = json::array();
        text << "fixpoints (" << to_string(kind) << "):" << (fps.empty() ? " none" : "")
             << "\n";
        for (const auto& pair : fps) {
            list.push_back(to_json(pair));
            text << "  " << pair.to_string() << "\n";
        }
        out["fixpoints"][to_string(kind)] = list;
    }
    emit(opt, out, text.str());
    return 0;
}

int cmd_stable(const Options& opt) {
    Limits limits = effective_limits(opt);
    ChoiceProgram p = to_choice(parse_program(read_file(opt.file), limits));
    OperatorKind kind = operator_kind_from_string(opt.op);
    StableResult result;
    if (opt.flavor == "minimal")
        result = stable_fixpoints(kind, p, opt.totals_only, limits);
    else if (opt.flavor == "constructive")
        result = c_stable_fixpoints(kind, p, opt.totals_only, limits);
    else
        throw SemanticError("unknown flavor '" + opt.flavor +
                            "' (expected minimal|constructive)");

    std::ostringstream text;
    text << opt.flavor << " stable fixpoints (" << to_string(kind)
         << "):" << (result.pairs.empty() ? " none" : "") << "\n";
    for (const auto& sp : result.pairs) {
        text << "  " << sp.pair.to_string() << "\n";
        if (opt.traces && sp.lower_trace) {
            text << "    lower trace:";
            for (const auto& step : sp.lower_trace->steps) text << " " << step.to_string();
            text << "\n";
        }
        if (opt.traces && sp.upper_trace) {
            text << "    upper trace:";
            for (const auto& step : sp.upper_trace->steps) text << " " << step.to_string();
            text << "\n";
        }
    }
    json out = to_json(result);
    if (!opt.traces)
        for (auto& entry : out["pairs"]) {
            entry.erase("lower_trace");
            entry.erase("upper_trace");
        }
    emit(opt, out, text.str());
    return 0;
}

int cmd_grounded(const Options& opt) {
    Limits limits = effective_limits(opt);
    ChoiceProgram p = to_choice(parse_program(read_file(opt.file), limits));
    AtomSet set = parse_atom_list(p.signature(), opt.set);
    GroundednessReport report =
        check_grounded(ground_notion_from_string(opt.notion), set, p, limits);

    std::ostringstream text;
    text << to_string(report.notion) << "-grounded: " << (report.holds ? "yes" : "no")
         << "\n";
    json levels = json::object();
    if (report.holds) {
        for (const auto& [id, level] : report.levels) {
            text << "  kappa(" << p.signature()->name(id) << ") = " << level << "\n";
            levels[p.signature()->name(id)] = level;
        }
    } else if (report.blocking) {
        text << "  blocked on " << report.blocking->to_string() << "\n";
    }
    json out{{"notion", to_string(report.notion)},
             {"holds", report.holds},
             {"levels", levels},
             {"blocking", report.blocking ? to_json(*report.blocking) : json(nullptr)}};
    emit(opt, out, text.str());
    return 0;
}

int cmd_translate(const Options& opt) {
    Limits limits = effective_limits(opt);
    ParsedProgram parsed = parse_program(read_file(opt.file), limits);
    if (opt.to_d2c) {
        const auto* d = std::get_if<DisjunctiveProgram>(&parsed);
        if (!d) throw SemanticError("--d2c needs a disjunctive program as input");
        ChoiceProgram translated = d2c(*d);
        emit(opt, to_json(translated), print_program(translated));
        return 0;
    }
    json out = std::holds_alternative<ChoiceProgram>(parsed)
                   ? to_json(std::get<ChoiceProgram>(parsed))
                   : to_json(std::get<DisjunctiveProgram>(parsed));
    emit(opt, out, print_program(parsed));
    return 0;
}

int cmd_eval(const Options& opt) {
    Limits limits = effective_limits(opt);
    ChoiceProgram p = to_choice(parse_program(read_file(opt.file), limits));
    Pair pair = parse_pair(p.signature(), opt.pair);

    std::ostringstream text;
    text << "pair " << pair.to_string() << "\n";
    json ops = json::object();
    for (OperatorKind kind : all_operator_kinds()) {
        NdaoOutput image = apply_ndao(kind, p, pair, limits);
        text << "  " << to_string(kind) << ": lower " << image.lower.to_string()
             << " upper " << image.upper.to_string() << "\n";
        ops[to_string(kind)] = to_json(image);
    }
    json out{{"pair", to_json(pair)}, {"operators", ops}};
    emit(opt, out, text.str());
    return 0;
}

int cmd_classify(const Options& opt) {
    Limits limits = effective_limits(opt);
    ParsedProgram parsed = parse_program(read_file(opt.file), limits);
    std::ostringstream text;
    json out;
    if (std::holds_alternative<DisjunctiveProgram>(parsed)) {
        out["dialect"] = "disjunctive";
        text << "dialect: disjunctive\n";
        emit(opt, out, text.str());
        return 0;
    }
    const ChoiceProgram& p = std::get<ChoiceProgram>(parsed);
    out["dialect"] = "choice";
    out["normal"] = is_normal(p, limits);
    out["aggregate"] = is_aggregate(p);
    out["normal_logic"] = is_normal_logic(p, limits);
    text << "dialect: choice\n"
         << "normal: " << (is_normal(p, limits) ? "yes" : "no") << "\n"
         << "aggregate: " << (is_aggregate(p) ? "yes" : "no") << "\n"
         << "normal logic: " << (is_normal_logic(p, limits) ? "yes" : "no") << "\n";
    json atoms = json::array();
    for (const auto& rule : p.rules()) {
        std::vector<const ChoiceAtom*> in_rule{&rule.head};
        for (const auto& atom : rule.body) in_rule.push_back(&atom);
        for (const ChoiceAtom* atom : in_rule) {
            bool mono = is_monotone(*atom, limits);
            bool convex = is_convex(*atom, limits);
            auto lit = literal_shape(*atom, limits);
            text << "  " << atom->to_string() << ": monotone=" << (mono ? "yes" : "no")
                 << " convex=" << (convex ? "yes" : "no");
            if (lit)
                text << " literal=" << (lit->second ? "" : "not ")
                     << p.signature()->name(lit->first);
            text << "\n";
            json entry{{"atom", atom->to_string()}, {"monotone", mono}, {"convex", convex}};
            entry["literal"] =
                lit ? json{{"atom", p.signature()->name(lit->first)},
                           {"positive", lit->second}}
                    : json(nullptr);
            atoms.push_back(entry);
        }
    }
    out["atoms"] = atoms;
    emit(opt, out, text.str());
    return 0;
}

void add_common(CLI::App* cmd, Options& opt) {
    cmd->add_option("file", opt.file, "program file")->required();
    cmd->add_flag("--json", opt.json_out, "canonical JSON output");
    cmd->add_option("--max-atoms", opt.max_atoms, "cap on exhaustive sweep size");
    cmd->add_option("--max-interval", opt.max_interval, "cap on interval enumeration");
    cmd->add_option("--jobs", opt.jobs, "worker count (accepted, dispatch is serial)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"choral: choice-program semantics workbench"};
    app.require_subcommand(1);
    Options opt;

    CLI::App* models = app.add_subcommand("models", "supported models and fixpoints");
    add_common(models, opt);
    models->add_option("--operator", opt.op, "gz|lpst|mr|ult (default: all)");
    models->add_flag("--totals-only", opt.totals_only, "restrict to total pairs");

    CLI::App* stable = app.add_subcommand("stable", "stable fixpoints");
    add_common(stable, opt);
    stable->add_option("--operator", opt.op, "gz|lpst|mr|ult")->required();
    stable->add_option("--flavor", opt.flavor, "minimal|constructive");
    stable->add_flag("--totals-only", opt.totals_only, "restrict to total pairs");
    stable->add_flag("--traces", opt.traces, "print well-founded sequences");

    CLI::App* grounded = app.add_subcommand("grounded", "groundedness check");
    add_common(grounded, opt);
    grounded->add_option("--set", opt.set, "comma-separated atom set")->required();
    grounded->add_option("--notion", opt.notion, "d|s|a|erdem")->required();

    CLI::App* translate = app.add_subcommand("translate", "canonical form / d2c");
    add_common(translate, opt);
    translate->add_flag("--d2c", opt.to_d2c, "translate a disjunctive program");

    CLI::App* eval = app.add_subcommand("eval", "operator images at a pair");
    add_common(eval, opt);
    eval->add_option("--pair", opt.pair, "\"lower;upper\" atom lists")->required();

    CLI::App* classify = app.add_subcommand("classify", "program and atom classes");
    add_common(classify, opt);

    CLI11_PARSE(app, argc, argv);

    try {
        if (models->parsed()) return cmd_models(opt);
        if (stable->parsed()) return cmd_stable(opt);
        if (grounded->parsed()) return cmd_grounded(opt);
        if (translate->parsed()) return cmd_translate(opt);
        if (eval->parsed()) return cmd_eval(opt);
        if (classify->parsed()) return cmd_classify(opt);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const CapError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const SemanticError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
