#include "replab/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "replab/discovery.hpp"
#include "replab/enumeration.hpp"
#include "replab/error.hpp"
#include "replab/json_io.hpp"
#include "replab/registry.hpp"
#include "replab/repro.hpp"
#include "replab/treesearch.hpp"

namespace replab::cli {

namespace {

using json_io::json;

constexpr std::size_t kMaxListedCounterexamples = 20;

class UsageError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct GlobalOptions {
    std::string format = "json";
    unsigned threads = 1;
    std::string registry;
};

struct SpecArgs {
    std::optional<std::size_t> min_square;
    std::optional<std::string> power;

    void attach(CLI::App* cmd, bool required) {
        auto* l = cmd->add_option("--min-square", min_square, "minimum period l of forbidden squares");
        auto* p = cmd->add_option("--power", power, "exponent threshold: inf | N | N+ | P/Q | P/Q+");
        if (required) {
            l->required();
            p->required();
        }
    }

    bool given() const { return min_square.has_value() || power.has_value(); }

    AvoidanceSpec build() const {
        if (!min_square) throw UsageError("--min-square: required");
        if (!power) throw UsageError("--power: required");
        if (*min_square < 1) throw UsageError("--min-square: must be >= 1");
        try {
            return AvoidanceSpec(*min_square, ExponentThreshold::parse(*power));
        } catch (const Error& e) {
            throw UsageError("--power: '" + *power + "': " + e.what());
        }
    }
};

Word parse_word_flag(const std::string& text, int alphabet, const char* flag) {
    if (text == "ε") return Word(alphabet);
    try {
        return Word::parse(text, alphabet);
    } catch (const Error& e) {
        throw UsageError(std::string(flag) + ": " + e.what());
    }
}

void emit(std::ostream& out, const json& doc) { out << doc.dump(2) << "\n"; }

json limited(const auto& items) {
    json out = json::array();
    for (std::size_t i = 0; i < std::min(items.size(), kMaxListedCounterexamples); ++i) {
        out.push_back(json_io::to_json(items[i]));
    }
    return out;
}

MorphismRegistry load_registry(const GlobalOptions& global) {
    std::string path = global.registry;
    if (path.empty()) {
        if (const char* env = std::getenv("REPLAB_REGISTRY"); env && *env) path = env;
    }
    if (path.empty()) return MorphismRegistry::builtin();
    return MorphismRegistry::load(path);
}

class Runner {
  public:
    Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

    int run(const std::vector<std::string>& args);

  private:
    void build(CLI::App& app);

    int detect();
    int tree();
    int enumerate();
    int forbidden();
    int growth_upper_cmd();
    int growth_lower_cmd();
    int morphism_list();
    int morphism_apply();
    int morphism_verify();
    int morphism_generate();
    int discover_blocks();
    int discover_avoided();
    int discover_propose();
    int repro();

    std::ostream& out_;
    std::ostream& err_;
    GlobalOptions global_;
    std::function<int()> action_;

    SpecArgs spec_;
    std::string word_;
    int alphabet_ = 2;
    std::size_t max_depth_ = kDefaultMaxDepth;
    std::size_t max_n_ = 25;
    std::size_t max_forbidden_len_ = 12;
    std::string forbidden_list_;
    std::string forbidden_file_;
    std::optional<std::size_t> width_;
    double base_ = 1.109999;
    std::string morphism_;
    std::size_t length_ = 0;
    std::size_t source_len_ = 5;
    std::size_t k_ = 10;
    std::size_t max_blocks_ = 3;
    std::size_t max_len_ = 60;
    std::size_t window_ = 2;
    int target_alphabet_ = 3;
    std::string registry_out_;
};

void Runner::build(CLI::App& app) {
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", global_.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--threads", global_.threads, "worker threads for tree searches")
        ->check(CLI::Range(1u, 256u));
    app.add_option("--registry", global_.registry,
                   "morphism registry JSON (default: $REPLAB_REGISTRY, then built-in)");

    auto on = [this](CLI::App* cmd, int (Runner::*fn)()) {
        cmd->callback([this, fn] { action_ = [this, fn] { return (this->*fn)(); }; });
    };

    auto* detect = app.add_subcommand("detect", "report the earliest violation in a word");
    detect->add_option("--word", word_, "digit string")->required();
    detect->add_option("--alphabet", alphabet_, "alphabet size")->check(CLI::Range(1, 10));
    spec_.attach(detect, true);
    on(detect, &Runner::detect);

    auto* tree = app.add_subcommand("tree", "exhaustively search the tree of avoiding words");
    spec_.attach(tree, true);
    tree->add_option("--max-depth", max_depth_, "depth cutoff")->check(CLI::PositiveNumber);
    on(tree, &Runner::tree);

    auto* enumerate = app.add_subcommand("enumerate", "count avoiding words of each length");
    spec_.attach(enumerate, true);
    enumerate->add_option("--max-n", max_n_, "largest length");
    on(enumerate, &Runner::enumerate);

    auto* forbidden = app.add_subcommand("forbidden", "list minimal forbidden words");
    spec_.attach(forbidden, true);
    forbidden->add_option("--max-forbidden-len", max_forbidden_len_, "longest word")
        ->check(CLI::Range(1, 62));
    on(forbidden, &Runner::forbidden);

    auto* growth = app.add_subcommand("growth", "growth-rate bounds");
    growth->require_subcommand(1);
    auto* upper = growth->add_subcommand("upper", "dominant eigenvalue of a forbidden-factor automaton");
    spec_.attach(upper, false);
    upper->add_option("--max-forbidden-len", max_forbidden_len_, "longest forbidden word")
        ->check(CLI::Range(1, 62));
    upper->add_option("--forbidden", forbidden_list_, "comma-separated forbidden words");
    upper->add_option("--forbidden-file", forbidden_file_, "newline-separated forbidden words");
    on(upper, &Runner::growth_upper_cmd);
    auto* lower = growth->add_subcommand("lower", "base^(1/width) through a uniform morphism");
    lower->add_option("--width", width_, "morphism width")->check(CLI::PositiveNumber);
    lower->add_option("--morphism", morphism_, "take the width from a registry entry");
    lower->add_option("--base", base_, "growth of the source language");
    on(lower, &Runner::growth_lower_cmd);

    auto* morphism = app.add_subcommand("morphism", "uniform morphisms");
    morphism->require_subcommand(1);
    on(morphism->add_subcommand("list", "print the registry"), &Runner::morphism_list);
    auto* apply_cmd = morphism->add_subcommand("apply", "apply a morphism to a word");
    apply_cmd->add_option("--morphism", morphism_)->required();
    apply_cmd->add_option("--word", word_)->required();
    on(apply_cmd, &Runner::morphism_apply);
    auto* verify = morphism->add_subcommand("verify", "run every finite check on a morphism");
    verify->add_option("name", morphism_, "registry name");
    verify->add_option("--morphism", morphism_, "registry name");
    spec_.attach(verify, false);
    verify->add_option("--source-len", source_len_, "longest squarefree source word")
        ->check(CLI::PositiveNumber);
    on(verify, &Runner::morphism_verify);
    auto* generate = morphism->add_subcommand("generate", "prefix of the image of the squarefree ternary word");
    generate->add_option("--morphism", morphism_)->required();
    generate->add_option("--length", length_)->required();
    on(generate, &Runner::morphism_generate);

    auto* discover = app.add_subcommand("discover", "heuristic morphism discovery");
    discover->require_subcommand(1);
    auto* blocks = discover->add_subcommand("blocks", "filter avoiding words by aligned k-blocks");
    spec_.attach(blocks, true);
    blocks->add_option("--k", k_)->check(CLI::PositiveNumber);
    blocks->add_option("--max-blocks", max_blocks_)->check(CLI::PositiveNumber);
    blocks->add_option("--max-len", max_len_)->check(CLI::PositiveNumber);
    on(blocks, &Runner::discover_blocks);
    auto* avoided = discover->add_subcommand("avoided", "source blocks whose images violate a spec");
    avoided->add_option("--morphism", morphism_)->required();
    spec_.attach(avoided, true);
    avoided->add_option("--window", window_)->check(CLI::Range(2, 32));
    on(avoided, &Runner::discover_avoided);
    auto* propose = discover->add_subcommand("propose", "candidate morphisms passing every check");
    spec_.attach(propose, true);
    propose->add_option("--k", k_)->check(CLI::PositiveNumber);
    propose->add_option("--alphabet", target_alphabet_)->check(CLI::Range(2, 10));
    propose->add_option("--corpus-len", max_len_)->check(CLI::PositiveNumber);
    propose->add_option("--registry-out", registry_out_, "write candidates as a registry file");
    on(propose, &Runner::discover_propose);

    on(app.add_subcommand("repro", "recompute every reference result"), &Runner::repro);
}

int Runner::run(const std::vector<std::string>& args) {
    CLI::App app{"Repetition-avoidance toolkit for binary words", "replab"};
    build(app);
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        out_ << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out_ << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err_ << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    if (!action_) {
        err_ << "error: no command given\n";
        return kExitUsage;
    }
    try {
        return action_();
    } catch (const UsageError& e) {
        err_ << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        err_ << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
        return e.code() == ErrorCode::NotFinite ? kExitCheckFailed : kExitUsage;
    }
}

int Runner::detect() {
    const auto spec = spec_.build();
    const Word w = parse_word_flag(word_, alphabet_, "--word");
    const auto violation = find_violation(w, spec);
    json doc = {{"word", w.to_string()},
                {"l", spec.min_square_period()},
                {"power", spec.power().to_string()},
                {"avoids", !violation.has_value()},
                {"violation", violation ? json_io::to_json(*violation) : json(nullptr)}};
    emit(out_, doc);
    return violation ? kExitCheckFailed : kExitOk;
}

int Runner::tree() {
    const auto spec = spec_.build();
    const auto outcome = explore(spec, SearchOptions{max_depth_, global_.threads});
    emit(out_, json_io::to_json(spec, outcome));
    return std::holds_alternative<TreeReport>(outcome) ? kExitOk : kExitCheckFailed;
}

int Runner::enumerate() {
    const auto table = count_avoiding(spec_.build(), max_n_, global_.threads);
    if (global_.format == "json") {
        emit(out_, json_io::to_json(table));
    } else {
        const char* sep = global_.format == "csv" ? "," : " ";
        out_ << "n" << sep << "count\n";
        for (std::size_t n = 0; n < table.counts.size(); ++n) {
            out_ << n << sep << table.counts[n] << "\n";
        }
    }
    return kExitOk;
}

int Runner::forbidden() {
    const auto spec = spec_.build();
    const auto set = minimal_forbidden(spec, max_forbidden_len_);
    if (global_.format == "json") {
        emit(out_, {{"l", spec.min_square_period()},
                    {"power", spec.power().to_string()},
                    {"max_len", set.max_len()},
                    {"count", set.size()},
                    {"complement_classes", set.complement_classes()},
                    {"words", json_io::words_to_json(set.words())}});
    } else {
        out_ << set.to_lines();
    }
    return kExitOk;
}

int Runner::growth_upper_cmd() {
    ForbiddenSet set;
    const int sources = int{!forbidden_list_.empty()} + int{!forbidden_file_.empty()} + int{spec_.given()};
    if (sources != 1) {
        throw UsageError("growth upper: give exactly one of --forbidden, --forbidden-file, or --min-square/--power");
    }
    if (!forbidden_list_.empty()) {
        try {
            set = ForbiddenSet::parse_lines(forbidden_list_);
        } catch (const Error& e) {
            throw UsageError(std::string("--forbidden: ") + e.what());
        }
    } else if (!forbidden_file_.empty()) {
        std::ifstream in(forbidden_file_);
        if (!in) throw UsageError("--forbidden-file: cannot open " + forbidden_file_);
        std::stringstream buffer;
        buffer << in.rdbuf();
        set = ForbiddenSet::parse_lines(buffer.str());
    } else {
        set = minimal_forbidden(spec_.build(), max_forbidden_len_);
    }
    if (set.empty()) throw UsageError("growth upper: the forbidden set is empty");
    json doc = json_io::to_json(growth_upper(set));
    doc["forbidden_count"] = set.size();
    doc["complement_classes"] = set.complement_classes();
    doc["max_len"] = set.max_len();
    emit(out_, doc);
    return kExitOk;
}

int Runner::growth_lower_cmd() {
    if (width_.has_value() == !morphism_.empty()) {
        throw UsageError("growth lower: give exactly one of --width or --morphism");
    }
    std::size_t width = width_.value_or(0);
    if (!morphism_.empty()) width = load_registry(global_).find(morphism_).width();
    if (!(base_ > 1.0)) throw UsageError("--base: must exceed 1");
    json doc = json_io::to_json(growth_lower_from_morphism(width, base_));
    doc["width"] = width;
    doc["base"] = base_;
    emit(out_, doc);
    return kExitOk;
}

int Runner::morphism_list() {
    json doc = json::array();
    const auto registry = load_registry(global_);
    for (const auto& m : registry.entries()) doc.push_back(json_io::to_json(m));
    emit(out_, doc);
    return kExitOk;
}

int Runner::morphism_apply() {
    const auto registry = load_registry(global_);
    const auto& m = registry.find(morphism_);
    const Word input = parse_word_flag(word_, m.source_alphabet(), "--word");
    const Word output = apply(m, input);
    if (global_.format == "json") {
        emit(out_, {{"morphism", m.name()}, {"input", input.to_string()}, {"output", output.to_string()}});
    } else {
        out_ << output.to_string() << "\n";
    }
    return kExitOk;
}

int Runner::morphism_verify() {
    if (morphism_.empty()) throw UsageError("morphism verify: name required");
    const auto registry = load_registry(global_);
    const auto& m = registry.find(morphism_);
    const std::optional<AvoidanceSpec> spec = spec_.given() ? spec_.build() : target_spec(m.name());
    if (!spec) {
        throw UsageError("morphism verify: no default spec for '" + m.name() +
                         "'; pass --min-square and --power");
    }

    bool all_pass = true;
    auto verdict = [&](const std::string& check, const auto& counterexamples, json extra) {
        const bool pass = counterexamples.empty();
        all_pass = all_pass && pass;
        extra["morphism"] = m.name();
        extra["check"] = check;
        extra["pass"] = pass;
        extra["counterexample_count"] = counterexamples.size();
        extra["counterexamples"] = limited(counterexamples);
        out_ << extra.dump() << "\n";
    };
    verdict("distinct", check_distinct(m), json::object());
    const auto dist = distinguishability(m);
    verdict("inclusion", check_inclusion(m), json::object());
    verdict("interchange", check_interchange(m),
            {{"prefix_length", dist.prefix_length}, {"suffix_length", dist.suffix_length}});
    const auto images = check_images_avoid(m, *spec, source_len_);
    verdict("images_avoid", images.counterexamples,
            {{"l", spec->min_square_period()},
             {"power", spec->power().to_string()},
             {"words_checked_by_length", images.words_checked_by_length}});
    return all_pass ? kExitOk : kExitCheckFailed;
}

int Runner::morphism_generate() {
    const auto registry = load_registry(global_);
    const Word w = generate_avoiding(morphism_, length_, registry);
    if (global_.format == "json") {
        emit(out_, {{"morphism", morphism_}, {"length", w.size()}, {"word", w.to_string()}});
    } else {
        out_ << w.to_string() << "\n";
    }
    return kExitOk;
}

int Runner::discover_blocks() {
    emit(out_, json_io::to_json(block_filter(spec_.build(), k_, max_blocks_, max_len_)));
    return kExitOk;
}

int Runner::discover_avoided() {
    const auto registry = load_registry(global_);
    emit(out_, json_io::to_json(infer_avoided_blocks(registry.find(morphism_), spec_.build(), window_)));
    return kExitOk;
}

int Runner::discover_propose() {
    const auto spec = spec_.build();
    const auto analysis = block_filter(spec, k_, static_cast<std::size_t>(target_alphabet_), max_len_);
    const auto candidates = propose_morphisms(spec, analysis, target_alphabet_);
    json list = json::array();
    for (const auto& m : candidates) list.push_back(json_io::to_json(m));
    if (!registry_out_.empty()) {
        std::ofstream file(registry_out_);
        if (!file) throw UsageError("--registry-out: cannot write " + registry_out_);
        file << list.dump(2) << "\n";
    }
    emit(out_, {{"analysis", json_io::to_json(analysis)}, {"candidates", list}});
    return kExitOk;
}

int Runner::repro() {
    const auto checks = run_repro(global_.threads);
    const bool pass = std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
    if (global_.format == "json") {
        json list = json::array();
        for (const auto& c : checks) {
            list.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        }
        emit(out_, {{"checks", list}, {"pass", pass}});
    } else {
        for (const auto& c : checks) {
            out_ << (c.pass ? "PASS  " : "FAIL  ") << c.name << "  " << c.detail << "\n";
        }
        out_ << (pass ? "all checks passed" : "some checks FAILED") << "\n";
    }
    return pass ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Runner runner(out, err);
    return runner.run(args);
}

}  // namespace replab::cli
