#include "mcsep/census.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "mcsep/canon.hpp"
#include "mcsep/error.hpp"
#include "mcsep/generate.hpp"
#include "mcsep/separators.hpp"

namespace mcsep {

namespace {

using nlohmann::json;

constexpr const char* kCheckpointMagic = "MCCENSUS1";

// Running maximum with every configuration that attains it.
struct Tally {
    std::uint64_t value = 0;
    std::set<std::string> witnesses;
    std::uint64_t examined = 0;

    template <class MakeWitness>
    void offer(std::uint64_t count, MakeWitness&& make) {
        if (count < value) return;
        if (count > value) {
            value = count;
            witnesses.clear();
        }
        witnesses.insert(make());
    }

    void merge(Tally&& other) {
        examined += other.examined;
        if (other.value > value) {
            value = other.value;
            witnesses = std::move(other.witnesses);
        } else if (other.value == value) {
            witnesses.merge(other.witnesses);
        }
    }
};

// Canonical form of (g, {u, v}) with the pair placed at vertices 0 and 1.
std::string pair_witness(const Graph& g, int u, int v) {
    std::vector<int> colors(g.order(), 1);
    colors[u] = colors[v] = 0;
    return to_graph6(canonical_labeling(g, colors).graph) + " 0 1";
}

void scan_parent(CensusKind kind, const Graph& parent, Tally& tally) {
    augment(parent, [&](const Graph& g) {
        ++tally.examined;
        if (kind == CensusKind::Separators) {
            for (int u = 0; u < g.order(); ++u)
                for (int v = u + 1; v < g.order(); ++v) {
                    if (g.has_edge(u, v)) continue;
                    tally.offer(count_minimal_separators(g, u, v),
                                [&] { return pair_witness(g, u, v); });
                }
        } else {
            tally.offer(enumerate_minimal_vertex_cuts(g).size(), [&] { return to_graph6(g); });
        }
    });
}

Tally scan_parents(CensusKind kind, const std::vector<std::uint64_t>& parents, int parent_order,
                   std::size_t begin, std::size_t end, int workers) {
    std::atomic<std::size_t> next{begin};
    std::vector<Tally> local(workers);
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&](int id) {
        try {
            for (std::size_t i = next++; i < end; i = next++)
                scan_parent(kind, from_triangle_code(parent_order, parents[i]), local[id]);
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next = end;
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (int id = 0; id < workers; ++id) pool.emplace_back(work, id);
        for (auto& t : pool) t.join();
    }
    if (failure) std::rethrow_exception(failure);
    Tally total;
    for (auto& t : local) total.merge(std::move(t));
    return total;
}

CensusRecord finish(CensusKind kind, int size, Tally&& tally, double elapsed) {
    CensusRecord r;
    r.kind = kind;
    r.size = size;
    r.value = tally.value;
    r.witnesses.assign(tally.witnesses.begin(), tally.witnesses.end());
    r.graphs_examined = tally.examined;
    r.elapsed = elapsed;
    r.root = std::pow(static_cast<double>(tally.value), 1.0 / size);
    r.exceeds_conjecture = exceeds_conjectured_growth(tally.value, size);
    return r;
}

struct Checkpoint {
    CensusKind kind = CensusKind::Separators;
    int size_min = 0;
    int size_max = 0;
    int size = 0;
    std::uint64_t cursor = 0;
    std::uint64_t parents = 0;
    Tally tally;
    double elapsed = 0.0;
};

void write_atomically(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error(ErrorCode::Io, "cannot write checkpoint " + tmp);
        out << content;
        out.flush();
        if (!out) throw Error(ErrorCode::Io, "failed writing checkpoint " + tmp);
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw Error(ErrorCode::Io, "cannot replace checkpoint " + path + ": " + ec.message());
}

void save_checkpoint(const std::string& path, const Checkpoint& cp) {
    json body = {
        {"version", 1},
        {"kind", census_kind_name(cp.kind)},
        {"size_min", cp.size_min},
        {"size_max", cp.size_max},
        {"size", cp.size},
        {"cursor", cp.cursor},
        {"parents", cp.parents},
        {"value", cp.tally.value},
        {"witnesses", cp.tally.witnesses},
        {"graphs_examined", cp.tally.examined},
        {"elapsed", cp.elapsed},
    };
    write_atomically(path, std::string(kCheckpointMagic) + "\n" + body.dump() + "\n");
}

std::optional<Checkpoint> load_checkpoint(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::stringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();
    const std::string header = std::string(kCheckpointMagic) + "\n";
    if (text.compare(0, header.size(), header) != 0)
        throw Error(ErrorCode::Checkpoint,
                    "corrupt checkpoint " + path + " at byte offset 0: missing MCCENSUS1 header");
    Checkpoint cp;
    try {
        const json body = json::parse(text.begin() + static_cast<std::ptrdiff_t>(header.size()), text.end());
        cp.kind = parse_census_kind(body.at("kind").get<std::string>());
        cp.size_min = body.at("size_min").get<int>();
        cp.size_max = body.at("size_max").get<int>();
        cp.size = body.at("size").get<int>();
        cp.cursor = body.at("cursor").get<std::uint64_t>();
        cp.parents = body.at("parents").get<std::uint64_t>();
        cp.tally.value = body.at("value").get<std::uint64_t>();
        for (const auto& w : body.at("witnesses")) cp.tally.witnesses.insert(w.get<std::string>());
        cp.tally.examined = body.at("graphs_examined").get<std::uint64_t>();
        cp.elapsed = body.at("elapsed").get<double>();
        if (body.at("version").get<int>() != 1)
            throw Error(ErrorCode::Checkpoint, "unsupported checkpoint version in " + path);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::Checkpoint, "corrupt checkpoint " + path + " at byte offset " +
                                               std::to_string(header.size() + e.byte - 1) + ": " +
                                               e.what());
    } catch (const json::exception& e) {
        throw Error(ErrorCode::Checkpoint, "corrupt checkpoint " + path + ": " + e.what());
    }
    if (cp.cursor > cp.parents)
        throw Error(ErrorCode::Checkpoint, "corrupt checkpoint " + path + ": cursor past end");
    return cp;
}

bool output_has_record(const std::string& path, CensusKind kind, int size) {
    std::ifstream in(path);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        try {
            const CensusRecord r = record_from_json(line);
            if (r.kind == kind && r.size == size) return true;
        } catch (const std::exception&) {
        }
    }
    return false;
}

void append_line(const std::string& path, const std::string& line) {
    std::ofstream out(path, std::ios::app);
    if (!out) throw Error(ErrorCode::Io, "cannot append to " + path);
    out << line << '\n';
    if (!out) throw Error(ErrorCode::Io, "failed writing " + path);
}

void check_writable(const std::string& path) {
    if (path.empty()) return;
    std::ofstream out(path, std::ios::app);
    if (!out) throw Error(ErrorCode::Io, "cannot open " + path + " for writing");
}

}  // namespace

const char* census_kind_name(CensusKind kind) {
    return kind == CensusKind::Separators ? "g" : "c";
}

CensusKind parse_census_kind(const std::string& name) {
    if (name == "g") return CensusKind::Separators;
    if (name == "c") return CensusKind::VertexCuts;
    throw Error(ErrorCode::InvalidArgument, "census kind must be 'g' or 'c', got '" + name + "'");
}

int CensusRecord::graph_order() const {
    return kind == CensusKind::Separators ? size + 2 : size;
}

bool exceeds_conjectured_growth(std::uint64_t value, int size) {
    return std::pow(static_cast<double>(value), 1.0 / size) > std::cbrt(3.0) + 1e-12;
}

std::string record_to_json(const CensusRecord& r, bool with_timing) {
    json j = {
        {"kind", census_kind_name(r.kind)},
        {"size", r.size},
        {"value", r.value},
        {"witnesses", r.witnesses},
        {"graphs_examined", r.graphs_examined},
    };
    if (with_timing) j["elapsed"] = r.elapsed;
    j["root"] = r.root;
    j["exceeds_conjecture"] = r.exceeds_conjecture;
    return j.dump();
}

CensusRecord record_from_json(const std::string& line) {
    try {
        const json j = json::parse(line);
        CensusRecord r;
        r.kind = parse_census_kind(j.at("kind").get<std::string>());
        r.size = j.at("size").get<int>();
        r.value = j.at("value").get<std::uint64_t>();
        r.witnesses = j.at("witnesses").get<std::vector<std::string>>();
        r.graphs_examined = j.at("graphs_examined").get<std::uint64_t>();
        r.elapsed = j.value("elapsed", 0.0);
        r.root = j.at("root").get<double>();
        r.exceeds_conjecture = j.at("exceeds_conjecture").get<bool>();
        return r;
    } catch (const json::exception& e) {
        throw Error(ErrorCode::Parse, std::string("malformed census record: ") + e.what());
    }
}

void check_census_size(CensusKind kind, int size) {
    if (kind == CensusKind::Separators && (size < 1 || size + 2 > kMaxGenerateOrder))
        throw Error(ErrorCode::OutOfRange, "g census needs 1 <= k <= 9, got " + std::to_string(size));
    if (kind == CensusKind::VertexCuts && (size < 3 || size > kMaxGenerateOrder))
        throw Error(ErrorCode::OutOfRange, "c census needs 3 <= n <= 11, got " + std::to_string(size));
}

void verify_witnesses(const CensusRecord& record) {
    auto fail = [&](const std::string& witness, const std::string& why) {
        throw Error(ErrorCode::Invariant, std::string("witness ") + witness + " of " +
                                              census_kind_name(record.kind) + "(" +
                                              std::to_string(record.size) + ") " + why);
    };
    for (const std::string& w : record.witnesses) {
        std::istringstream fields(w);
        std::string g6;
        fields >> g6;
        const Graph g = from_graph6(g6);
        if (g.order() != record.graph_order()) fail(w, "has the wrong order");
        if (record.kind == CensusKind::Separators) {
            int u = -1, v = -1;
            if (!(fields >> u >> v)) fail(w, "lacks a vertex pair");
            if (count_minimal_separators(g, u, v) != record.value)
                fail(w, "does not reproduce the recorded value");
            if (g.order() <= 12 && enumerate_minimal_separators_bruteforce(g, u, v).size() != record.value)
                fail(w, "disagrees with the brute-force oracle");
        } else if (enumerate_minimal_vertex_cuts(g).size() != record.value) {
            fail(w, "does not reproduce the recorded value");
        }
    }
}

CensusRunResult census_run(const CensusConfig& config) {
    if (config.size_min > config.size_max)
        throw Error(ErrorCode::InvalidArgument, "census size range is empty");
    check_census_size(config.kind, config.size_min);
    check_census_size(config.kind, config.size_max);
    if (config.workers < 1) throw Error(ErrorCode::InvalidArgument, "worker count must be positive");
    if (config.checkpoint_every < 1)
        throw Error(ErrorCode::InvalidArgument, "checkpoint interval must be positive");
    check_writable(config.output_path);
    check_writable(config.witness_path);

    const bool checkpointing = !config.checkpoint_path.empty();
    std::optional<Checkpoint> resume;
    if (checkpointing) {
        resume = load_checkpoint(config.checkpoint_path);
        if (resume && (resume->kind != config.kind || resume->size_min != config.size_min ||
                       resume->size_max != config.size_max))
            throw Error(ErrorCode::Checkpoint, "checkpoint " + config.checkpoint_path +
                                                   " belongs to a different census run");
    }

    CensusRunResult result;
    int written = 0;
    for (int size = config.size_min; size <= config.size_max; ++size) {
        if (resume && size < resume->size) continue;
        const auto started = std::chrono::steady_clock::now();
        const int order = config.kind == CensusKind::Separators ? size + 2 : size;
        const std::vector<std::uint64_t> parents = generate_graph_codes(order - 1);

        Checkpoint cp{config.kind, config.size_min, config.size_max, size, 0, parents.size(), {}, 0.0};
        const bool resumed = resume && size == resume->size;
        if (resumed) {
            if (resume->cursor > 0 && resume->parents != parents.size())
                throw Error(ErrorCode::Checkpoint, "corrupt checkpoint " + config.checkpoint_path +
                                                       ": parent count does not match");
            cp.cursor = resume->cursor;
            cp.tally = std::move(resume->tally);
        }
        const double prior = resumed ? resume->elapsed : 0.0;
        auto elapsed = [&] {
            return prior + std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
        };

        while (cp.cursor < parents.size()) {
            const std::size_t end =
                std::min<std::uint64_t>(parents.size(), cp.cursor + config.checkpoint_every);
            cp.tally.merge(scan_parents(config.kind, parents, order - 1, cp.cursor, end, config.workers));
            cp.cursor = end;
            if (checkpointing) {
                cp.elapsed = elapsed();
                save_checkpoint(config.checkpoint_path, cp);
                if (++written == config.stop_after_checkpoints) {
                    result.interrupted = true;
                    return result;
                }
            }
        }

        CensusRecord record = finish(config.kind, size, std::move(cp.tally), elapsed());
        verify_witnesses(record);
        const bool already_written =
            resumed && !config.output_path.empty() && output_has_record(config.output_path, config.kind, size);
        if (!already_written) {
            if (!config.output_path.empty()) append_line(config.output_path, record_to_json(record));
            if (!config.witness_path.empty())
                for (const auto& w : record.witnesses) append_line(config.witness_path, w);
        }
        result.records.push_back(std::move(record));

        if (checkpointing) {
            if (size < config.size_max) {
                save_checkpoint(config.checkpoint_path,
                                Checkpoint{config.kind, config.size_min, config.size_max, size + 1, 0, 0, {}, 0.0});
            } else {
                std::filesystem::remove(config.checkpoint_path);
            }
        }
    }
    return result;
}

CensusRecord compute_g(int k, int workers) {
    check_census_size(CensusKind::Separators, k);
    CensusConfig config;
    config.kind = CensusKind::Separators;
    config.size_min = config.size_max = k;
    config.workers = workers;
    config.checkpoint_every = ~std::uint64_t{0} >> 1;
    return census_run(config).records.front();
}

CensusRecord compute_c(int n, int workers) {
    check_census_size(CensusKind::VertexCuts, n);
    CensusConfig config;
    config.kind = CensusKind::VertexCuts;
    config.size_min = config.size_max = n;
    config.workers = workers;
    config.checkpoint_every = ~std::uint64_t{0} >> 1;
    return census_run(config).records.front();
}

std::string ConjectureReport::to_text() const {
    std::ostringstream os;
    os << std::setw(3) << "k" << std::setw(8) << "g(k)" << std::setw(14) << "3^floor(k/3)" << std::setw(14)
       << "g(k)^(1/k)" << "  status\n";
    for (const auto& row : rows) {
        os << std::setw(3) << row.k << std::setw(8) << row.g << std::setw(14) << row.lower
           << std::setw(14) << std::fixed << std::setprecision(10) << row.root << "  "
           << (row.pass ? "ok" : "VIOLATION") << '\n';
        if (!row.pass)
            for (const auto& w : row.witnesses) os << "    witness " << w << '\n';
    }
    os << "bound 3^(1/3) = " << std::fixed << std::setprecision(10) << std::cbrt(3.0) << '\n';
    os << (all_pass ? "no size exceeds 3^(1/3)\n"
                    : "VIOLATION: some g(k)^(1/k) exceeds 3^(1/3); witnesses listed above\n");
    return os.str();
}

ConjectureReport verify_conjecture(int k_max, int workers) {
    check_census_size(CensusKind::Separators, k_max);
    ConjectureReport report;
    for (int k = 1; k <= k_max; ++k) {
        const CensusRecord r = compute_g(k, workers);
        ConjectureRow row;
        row.k = k;
        row.g = r.value;
        row.lower = static_cast<std::uint64_t>(std::llround(std::pow(3.0, k / 3)));
        row.root = r.root;
        row.pass = !r.exceeds_conjecture;
        row.witnesses = r.witnesses;
        report.all_pass = report.all_pass && row.pass;
        report.rows.push_back(std::move(row));
    }
    return report;
}

}  // namespace mcsep
