// Command-line front end. Exit codes: 0 success (and verified-true),
// 1 verified-false or infinite complement, 2 argument or domain error,
// 3 guard exceeded. Errors go to stderr as single-line JSON.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "msdb/counting.hpp"
#include "msdb/errors.hpp"
#include "msdb/frobenius.hpp"
#include "msdb/generate.hpp"
#include "msdb/graph.hpp"
#include "msdb/limits.hpp"
#include "msdb/verify.hpp"
#include "msdb/word.hpp"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitDomain = 2;
constexpr int kExitGuard = 3;

void emit_error(const std::string& kind, const std::string& message) {
    std::cerr << json{{"kind", kind}, {"error", message}}.dump() << "\n";
}

msdb::Algorithm parse_algorithm(const std::string& name) {
    if (name == "auto")
        return msdb::Algorithm::Auto;
    if (name == "block")
        return msdb::Algorithm::Block;
    if (name == "multiple")
        return msdb::Algorithm::Multiple;
    if (name == "interleave")
        return msdb::Algorithm::Interleave;
    if (name == "greedy")
        return msdb::Algorithm::Greedy;
    throw msdb::DomainError("unknown algorithm: " + name);
}

std::string read_stdin_token() {
    std::string token;
    if (!(std::cin >> token))
        return "";
    return token;
}

struct CommonOptions {
    std::uint32_t alphabet = 2;
    std::uint32_t shift = 1;
    std::uint32_t order = 1;
    std::string format = "plain";

    void attach(CLI::App* cmd) {
        cmd->add_option("-a,--alphabet", alphabet, "alphabet size")->required();
        cmd->add_option("-m,--shift", shift, "shift")->required();
        cmd->add_option("-n,--order", order, "order")->required();
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"plain", "json"}));
    }
    msdb::DbParams params() const { return {alphabet, shift, order}; }
};

int run_generate(const CommonOptions& common, const std::string& algorithm,
                 const std::string& prefer, std::uint64_t max_symbols) {
    const auto preference = prefer == "smallest" ? msdb::GreedyPreference::Smallest
                                                 : msdb::GreedyPreference::Largest;
    const msdb::Word word =
        msdb::generate(common.params(), parse_algorithm(algorithm), preference, max_symbols);
    const std::string text = msdb::to_string(word, common.alphabet);
    if (common.format == "json") {
        std::cout << json{{"alphabet", common.alphabet},
                          {"shift", common.shift},
                          {"order", common.order},
                          {"algorithm", algorithm},
                          {"length", word.size()},
                          {"word", text}}
                         .dump()
                  << "\n";
    } else {
        std::cout << text << "\n";
    }
    return kExitOk;
}

int run_verify(const CommonOptions& common, const std::string& word_arg,
               std::uint64_t max_windows) {
    const std::string text = word_arg == "-" ? read_stdin_token() : word_arg;
    const msdb::Word word = msdb::parse_word(text, common.alphabet);
    const msdb::VerifyReport report =
        msdb::is_multishift_db(word, common.params(), max_windows);
    if (common.format == "json") {
        std::cout << report.to_json(common.alphabet).dump() << "\n";
    } else {
        std::cout << "ok: " << (report.ok ? "true" : "false") << "\n"
                  << "length_ok: " << (report.length_ok ? "true" : "false") << "\n"
                  << "missing: " << report.missing_count << "\n"
                  << "duplicated: " << report.duplicated_count << "\n";
    }
    return report.ok ? kExitOk : kExitNegative;
}

int run_count(const CommonOptions& common, std::uint64_t max_digits) {
    const msdb::CountResult result = msdb::count_formula(common.params(), max_digits);
    const char* branch = result.branch == msdb::CountBranch::OrderAtMostShift
                             ? "order_at_most_shift"
                             : "shift_at_most_order";
    if (common.format == "json") {
        json j{{"branch", branch}, {"log10", result.log10}, {"digits", result.digits}};
        j["exact"] = result.exact ? json(result.exact->str()) : json(nullptr);
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "branch: " << branch << "\n";
        if (result.exact)
            std::cout << "exact: " << result.exact->str() << "\n";
        else
            std::cout << "exact: omitted (digit guard)\n";
        std::cout << "log10: " << result.log10 << "\n"
                  << "digits: " << result.digits << "\n";
    }
    return kExitOk;
}

int run_enumerate(const CommonOptions& common, std::uint64_t cap, bool list_words) {
    const msdb::EnumerationResult result = msdb::enumerate_all(common.params(), cap);
    if (common.format == "json") {
        json j{{"count", result.count.str()}};
        if (list_words) {
            if (result.words) {
                auto arr = json::array();
                for (const msdb::Word& w : *result.words)
                    arr.push_back(msdb::to_string(w, common.alphabet));
                j["words"] = std::move(arr);
            } else {
                j["words_omitted"] = true;
            }
        }
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "count: " << result.count.str() << "\n";
        if (list_words) {
            if (result.words) {
                for (const msdb::Word& w : *result.words)
                    std::cout << msdb::to_string(w, common.alphabet) << "\n";
            } else {
                std::cout << "(word list omitted, more than 1024 sequences)\n";
            }
        }
    }
    return kExitOk;
}

int run_graph(const CommonOptions& common, std::uint64_t max_vertices) {
    const msdb::WordGraph graph =
        msdb::build_word_graph(common.alphabet, common.shift, common.order, max_vertices);
    const msdb::BigCount arborescences = msdb::arborescence_count(graph);
    const msdb::BigCount tours = msdb::euler_count_best(graph);
    std::cout << json{{"vertices", graph.vertex_count()},
                      {"arcs", graph.arc_count()},
                      {"degree", graph.degree()},
                      {"connected", graph.connected()},
                      {"arborescences", arborescences.str()},
                      {"euler_tours", tours.str()}}
                     .dump()
              << "\n";
    return kExitOk;
}

int run_frobenius(const CommonOptions& common, const std::string& tau_text, bool list_words,
                  bool dump_generators, std::uint64_t max_states) {
    std::optional<msdb::Word> tau;
    if (!tau_text.empty())
        tau = msdb::parse_word(tau_text, common.alphabet);
    const msdb::FrobeniusInstance instance =
        msdb::build_instance(common.alphabet, common.shift, common.order, std::move(tau));

    if (dump_generators) {
        // S = Sigma^m plus Sigma^n minus the excluded windows, one per line.
        const auto total = msdb::checked_pow(common.alphabet, common.order, 1u << 20);
        if (!total)
            throw msdb::GuardError("generator dump exceeds 2^20 words");
        const auto shorts = *msdb::checked_pow(common.alphabet, common.shift, 1u << 20);
        for (std::uint64_t code = 0; code < shorts; ++code)
            std::cout << msdb::to_string(msdb::unrank(code, common.shift, common.alphabet),
                                         common.alphabet)
                      << "\n";
        for (std::uint64_t code = 0; code < *total; ++code)
            if (!instance.excluded_ranks.contains(code))
                std::cout << msdb::to_string(msdb::unrank(code, common.order, common.alphabet),
                                             common.alphabet)
                          << "\n";
        return kExitOk;
    }

    const msdb::LongestReport report = msdb::longest_nonrepresentable(instance, max_states);
    json j{{"m", common.shift},
           {"n", common.order},
           {"l", instance.generator_count()},
           {"g", msdb::frobenius_number(common.shift, instance.generator_count())},
           {"excluded_count", instance.excluded.size()},
           {"finite", report.finite},
           {"longest_length", report.max_length},
           {"longest_count", report.word_count.str()}};
    if (list_words && report.words) {
        auto arr = json::array();
        for (const msdb::Word& w : *report.words)
            arr.push_back(msdb::to_string(w, common.alphabet));
        j["longest_words"] = std::move(arr);
    }
    std::cout << j.dump() << "\n";
    return report.finite ? kExitOk : kExitNegative;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"multi-shift de Bruijn sequence toolkit"};
    app.require_subcommand(1);

    CommonOptions gen_common, ver_common, cnt_common, enu_common, gra_common, fro_common;

    auto* gen = app.add_subcommand("generate", "generate an m-shift de Bruijn sequence");
    gen_common.attach(gen);
    std::string algorithm = "auto";
    std::string prefer = "largest";
    std::uint64_t max_symbols = msdb::limits::kMaxSequenceSymbols;
    gen->add_option("--algorithm", algorithm, "construction to use")
        ->check(CLI::IsMember({"auto", "block", "multiple", "interleave", "greedy"}));
    gen->add_option("--prefer", prefer, "greedy preference")
        ->check(CLI::IsMember({"largest", "smallest"}));
    gen->add_option("--max-symbols", max_symbols, "output length guard");

    auto* ver = app.add_subcommand("verify", "check the defining property of a word");
    ver_common.attach(ver);
    std::string word_arg;
    std::uint64_t max_windows = msdb::limits::kMaxTallyWindows;
    ver->add_option("word", word_arg, "word to check, or - for stdin")->required();
    ver->add_option("--max-windows", max_windows, "tally size guard");

    auto* cnt = app.add_subcommand("count", "count all sequences for the parameters");
    cnt_common.attach(cnt);
    std::uint64_t max_digits = msdb::limits::kMaxExactDigits;
    cnt->add_option("--max-digits", max_digits, "exact evaluation digit guard");

    auto* enu = app.add_subcommand("enumerate", "enumerate sequences by brute force");
    enu_common.attach(enu);
    std::uint64_t cap = msdb::limits::kDefaultEnumerationCap;
    bool list_words = false;
    enu->add_option("--cap", cap, "enumeration count cap");
    enu->add_flag("--words", list_words, "also print the sequences, one per line");

    auto* gra = app.add_subcommand("graph", "word graph statistics and tour counts");
    gra_common.attach(gra);
    std::uint64_t max_vertices = msdb::limits::kMaxGraphVertices;
    gra->add_option("--max-vertices", max_vertices, "graph construction guard");

    auto* fro = app.add_subcommand("frobenius", "longest words outside S*");
    fro_common.attach(fro);
    std::string tau_text;
    bool fro_words = false;
    bool dump_generators = false;
    std::uint64_t max_states = msdb::limits::kMaxAutomatonStates;
    fro->add_option("--tau", tau_text, "seed sequence (generated when omitted)");
    fro->add_flag("--words", fro_words, "include the longest words in the output");
    fro->add_flag("--dump-s", dump_generators, "print the generator set S and nothing else");
    fro->add_option("--max-states", max_states, "automaton state guard");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        emit_error("argument", e.what());
        return kExitDomain;
    }

    try {
        if (gen->parsed())
            return run_generate(gen_common, algorithm, prefer, max_symbols);
        if (ver->parsed())
            return run_verify(ver_common, word_arg, max_windows);
        if (cnt->parsed())
            return run_count(cnt_common, max_digits);
        if (enu->parsed())
            return run_enumerate(enu_common, cap, list_words);
        if (gra->parsed())
            return run_graph(gra_common, max_vertices);
        if (fro->parsed())
            return run_frobenius(fro_common, tau_text, fro_words, dump_generators, max_states);
    } catch (const msdb::GuardError& e) {
        emit_error("guard", e.what());
        return kExitGuard;
    } catch (const msdb::DomainError& e) {
        emit_error("domain", e.what());
        return kExitDomain;
    } catch (const std::exception& e) {
        emit_error("internal", e.what());
        return kExitDomain;
    }
    return kExitDomain;
}
