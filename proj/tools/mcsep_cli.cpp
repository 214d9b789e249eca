// mcsep command-line tool. Talks to the library only through the C API.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mcsep/mcsep.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

// Default census profile stops at 9-vertex graphs; larger sizes take hours.
constexpr int kDefaultMaxOrder = 9;

struct Failure {
    int exit_code;
    std::string message;
};

void check(mcsep_status status) {
    if (status == MCSEP_OK) return;
    const int code = (status == MCSEP_ERR_INVARIANT || status == MCSEP_ERR_INTERNAL) ? kExitInternal : kExitUsage;
    throw Failure{code, std::string(mcsep_status_name(status)) + ": " + mcsep_last_error()};
}

struct GraphDeleter {
    void operator()(mcsep_graph* g) const { mcsep_graph_free(g); }
};
struct FamilyDeleter {
    void operator()(mcsep_family* f) const { mcsep_family_free(f); }
};
struct StringDeleter {
    void operator()(char* s) const { mcsep_string_free(s); }
};
using GraphPtr = std::unique_ptr<mcsep_graph, GraphDeleter>;
using FamilyPtr = std::unique_ptr<mcsep_family, FamilyDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

std::string trim(std::string s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
    return s;
}

// "-" reads stdin, an existing path reads its first non-empty line, anything
// else is taken as graph6 text.
std::string read_graph_text(const std::string& source) {
    auto first_line = [](std::istream& in) {
        std::string line;
        while (std::getline(in, line))
            if (!trim(line).empty()) return trim(line);
        throw Failure{kExitUsage, "no graph6 line found in input"};
    };
    if (source == "-") return first_line(std::cin);
    std::error_code ec;
    if (std::filesystem::is_regular_file(source, ec)) {
        std::ifstream in(source);
        return first_line(in);
    }
    return trim(source);
}

GraphPtr load_graph(const std::string& source) {
    mcsep_graph* g = nullptr;
    check(mcsep_graph_from_graph6(read_graph_text(source).c_str(), &g));
    return GraphPtr(g);
}

std::string graph6_of(const mcsep_graph* g) {
    char* text = nullptr;
    check(mcsep_graph_to_graph6(g, &text));
    return StringPtr(text).get();
}

std::string format_set(std::uint64_t mask) {
    if (mask == 0) return "{}";
    std::string out;
    for (int v = 0; v < 64; ++v)
        if ((mask >> v) & 1U) {
            if (!out.empty()) out += ' ';
            out += std::to_string(v);
        }
    return out;
}

std::string json_set(std::uint64_t mask) {
    std::string out = "[";
    for (int v = 0; v < 64; ++v)
        if ((mask >> v) & 1U) {
            if (out.size() > 1) out += ',';
            out += std::to_string(v);
        }
    return out + "]";
}

void print_family(const mcsep_family* family, std::uint64_t count, bool list, const std::string& format) {
    const std::size_t size = mcsep_family_size(family);
    if (format == "json") {
        std::cout << "{\"count\":" << count;
        if (list) {
            std::cout << ",\"sets\":[";
            for (std::size_t i = 0; i < size; ++i)
                std::cout << (i ? "," : "") << json_set(mcsep_family_member(family, i));
            std::cout << ']';
        }
        std::cout << "}\n";
        return;
    }
    std::cout << count << '\n';
    if (list)
        for (std::size_t i = 0; i < size; ++i) std::cout << format_set(mcsep_family_member(family, i)) << '\n';
}

// Accepts "7", "3-7" or "3..7".
std::pair<int, int> parse_range(const std::string& text) {
    try {
        std::size_t used = 0;
        const int lo = std::stoi(text, &used);
        if (used == text.size()) return {lo, lo};
        std::string rest = text.substr(used);
        if (rest.rfind("..", 0) == 0) rest = rest.substr(2);
        else if (rest.rfind('-', 0) == 0) rest = rest.substr(1);
        else throw std::invalid_argument(text);
        std::size_t used_hi = 0;
        const int hi = std::stoi(rest, &used_hi);
        if (used_hi != rest.size()) throw std::invalid_argument(text);
        return {lo, hi};
    } catch (const std::logic_error&) {
        throw Failure{kExitUsage, "invalid size or range '" + text + "'"};
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Minimal vertex separators and cuts: counts, constructions, bounds and census"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(mcsep_version()));

    std::string graph_source;
    int u = 0, v = 1;
    bool list = false;
    std::string format = "plain";

    auto* count = app.add_subcommand("count", "Count minimal u,v-separators of a graph6 graph");
    count->add_option("graph", graph_source, "graph6 text, a file holding it, or - for stdin")->required();
    count->add_option("u", u, "first terminal")->required();
    count->add_option("v", v, "second terminal")->required();
    count->add_flag("--list", list, "also print each separator as sorted vertex indices");
    count->add_option("--format", format, "plain or json")->check(CLI::IsMember({"plain", "json"}));

    auto* cuts = app.add_subcommand("cuts", "Count inclusion-minimal vertex cuts of a graph6 graph");
    cuts->add_option("graph", graph_source, "graph6 text, a file holding it, or - for stdin")->required();
    cuts->add_flag("--list", list, "also print each cut");
    cuts->add_option("--format", format, "plain or json")->check(CLI::IsMember({"plain", "json"}));

    auto* construct = app.add_subcommand("construct", "Emit a construction as graph6");
    construct->require_subcommand(1);
    int seymour_m = 1;
    auto* seymour = construct->add_subcommand("seymour", "m length-4 paths between terminals 0 and 1");
    seymour->add_option("m", seymour_m, "number of paths (1..20)")->required();
    std::string glue_a, glue_b;
    std::vector<int> a_terms{0, 1}, b_terms{0, 1};
    auto* glue = construct->add_subcommand("glue", "Identify the terminals of two graphs");
    glue->add_option("a", glue_a, "first graph (graph6 text or file)")->required();
    glue->add_option("b", glue_b, "second graph (graph6 text or file)")->required();
    glue->add_option("--a-terminals", a_terms, "terminals of a (default 0 1)")->expected(2);
    glue->add_option("--b-terminals", b_terms, "terminals of b (default 0 1)")->expected(2);
    std::string named_name;
    int named_n = 1;
    auto* named = construct->add_subcommand("named", "path, cycle, complete, empty, star, complete-bipartite");
    named->add_option("name", named_name, "graph family")->required();
    named->add_option("n", named_n, "vertex count")->required();

    int bounds_n = 0;
    std::string bounds_census;
    std::string bounds_format = "plain";
    auto* bounds = app.add_subcommand("bounds", "Tabulate lower and upper bounds on g(n)");
    bounds->add_option("n_max", bounds_n, "largest n (1..200)")->required();
    bounds->add_option("--format", bounds_format, "csv, json or plain")
        ->check(CLI::IsMember({"csv", "json", "plain"}));
    bounds->add_option("--census", bounds_census, "census JSON-lines file supplying exact g values");

    std::string census_kind, census_sizes;
    int workers = 1;
    std::string checkpoint, out_path, witness_path;
    std::uint64_t checkpoint_every = 1000;
    bool allow_large = false;
    auto* census = app.add_subcommand("census", "Exhaustive census of g(k) or c(n) over small graphs");
    census->add_option("kind", census_kind, "g or c")->required()->check(CLI::IsMember({"g", "c"}));
    census->add_option("size", census_sizes, "size k (g) or n (c), or a range like 3-7")->required();
    census->add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber);
    census->add_option("--checkpoint", checkpoint, "checkpoint file; resumed when present");
    census->add_option("--checkpoint-every", checkpoint_every, "parent subtrees between checkpoints")
        ->check(CLI::PositiveNumber);
    census->add_option("--out", out_path, "append records as JSON lines (default: stdout)");
    census->add_option("--witnesses", witness_path, "append witness graph6 lines");
    census->add_flag("--allow-large", allow_large, "permit 10- and 11-vertex graphs");

    int conj_k = 0;
    auto* verify = app.add_subcommand("verify-conjecture", "Check g(k)^(1/k) <= 3^(1/3) for k <= k_max");
    verify->add_option("k_max", conj_k, "largest k")->required();
    verify->add_option("--workers", workers, "worker threads")->check(CLI::PositiveNumber);
    verify->add_flag("--allow-large", allow_large, "permit k_max of 8 or 9");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*count) {
            const GraphPtr g = load_graph(graph_source);
            mcsep_family* family = nullptr;
            check(mcsep_enumerate_separators(g.get(), u, v, &family));
            const FamilyPtr owned(family);
            std::uint64_t n = 0;
            check(mcsep_count_separators(g.get(), u, v, &n));
            if (n != mcsep_family_size(family))
                throw Failure{kExitInternal, "streamed count disagrees with the enumerated family"};
            print_family(family, n, list, format);
        } else if (*cuts) {
            const GraphPtr g = load_graph(graph_source);
            mcsep_family* family = nullptr;
            check(mcsep_enumerate_vertex_cuts(g.get(), &family));
            const FamilyPtr owned(family);
            print_family(family, mcsep_family_size(family), list, format);
        } else if (*construct) {
            mcsep_graph* g = nullptr;
            if (*seymour) {
                check(mcsep_construct_seymour(seymour_m, &g, nullptr, nullptr));
            } else if (*glue) {
                const GraphPtr a = load_graph(glue_a);
                const GraphPtr b = load_graph(glue_b);
                check(mcsep_construct_glue(a.get(), a_terms[0], a_terms[1], b.get(), b_terms[0], b_terms[1], &g,
                                           nullptr, nullptr));
            } else {
                check(mcsep_construct_named(named_name.c_str(), named_n, &g));
            }
            const GraphPtr owned(g);
            std::cout << graph6_of(g) << '\n';
        } else if (*bounds) {
            char* table = nullptr;
            check(mcsep_bounds_table(bounds_n, bounds_format.c_str(),
                                     bounds_census.empty() ? nullptr : bounds_census.c_str(), &table));
            std::cout << StringPtr(table).get();
        } else if (*census) {
            const auto [lo, hi] = parse_range(census_sizes);
            const int largest_order = census_kind == "g" ? hi + 2 : hi;
            if (largest_order > kDefaultMaxOrder && !allow_large)
                throw Failure{kExitUsage, "graphs on " + std::to_string(largest_order) +
                                              " vertices need --allow-large (runs take hours)"};
            mcsep_census_config config{};
            config.kind = census_kind.c_str();
            config.size_min = lo;
            config.size_max = hi;
            config.workers = workers;
            config.checkpoint_path = checkpoint.empty() ? nullptr : checkpoint.c_str();
            config.checkpoint_every = checkpoint_every;
            config.output_path = out_path.empty() ? nullptr : out_path.c_str();
            config.witness_path = witness_path.empty() ? nullptr : witness_path.c_str();
            char* records = nullptr;
            check(mcsep_census_run(&config, &records));
            const StringPtr owned(records);
            if (out_path.empty()) std::cout << records;
        } else if (*verify) {
            if (conj_k + 2 > kDefaultMaxOrder && !allow_large)
                throw Failure{kExitUsage, "k_max " + std::to_string(conj_k) + " needs --allow-large"};
            char* report = nullptr;
            int violated = 0;
            check(mcsep_verify_conjecture(conj_k, workers, &report, &violated));
            const StringPtr owned(report);
            std::cout << report;
            if (violated) {
                std::cerr << "mcsep: g(k)^(1/k) exceeds 3^(1/3) for some k; see witnesses above\n";
                return kExitViolation;
            }
        }
    } catch (const Failure& f) {
        std::cerr << "mcsep: " << f.message << '\n';
        return f.exit_code;
    }
    return kExitOk;
}
