#include "mcsep/mcsep.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <map>
#include <string>

#include "mcsep/bounds.hpp"
#include "mcsep/census.hpp"
#include "mcsep/constructions.hpp"
#include "mcsep/error.hpp"
#include "mcsep/graph.hpp"
#include "mcsep/separators.hpp"

struct mcsep_graph {
    mcsep::Graph graph;
};

struct mcsep_family {
    std::vector<mcsep::VertexSet> members;
};

namespace {

thread_local std::string last_error;

mcsep_status status_for(mcsep::ErrorCode code) {
    switch (code) {
        case mcsep::ErrorCode::InvalidArgument: return MCSEP_ERR_INVALID_ARGUMENT;
        case mcsep::ErrorCode::Parse: return MCSEP_ERR_PARSE;
        case mcsep::ErrorCode::OutOfRange: return MCSEP_ERR_RANGE;
        case mcsep::ErrorCode::Io: return MCSEP_ERR_IO;
        case mcsep::ErrorCode::Checkpoint: return MCSEP_ERR_CHECKPOINT;
        case mcsep::ErrorCode::Invariant: return MCSEP_ERR_INVARIANT;
    }
    return MCSEP_ERR_INTERNAL;
}

template <class Body>
mcsep_status guarded(Body&& body) {
    try {
        body();
        last_error.clear();
        return MCSEP_OK;
    } catch (const mcsep::Error& e) {
        last_error = e.what();
        return status_for(e.code());
    } catch (const std::exception& e) {
        last_error = e.what();
        return MCSEP_ERR_INTERNAL;
    } catch (...) {
        last_error = "unknown failure";
        return MCSEP_ERR_INTERNAL;
    }
}

void require(bool ok, const char* what) {
    if (!ok) throw mcsep::Error(mcsep::ErrorCode::InvalidArgument, what);
}

char* copy_out(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr) throw std::bad_alloc();
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

std::map<int, mcsep::BigInt> exact_g_from(const char* path) {
    std::map<int, mcsep::BigInt> out;
    if (path == nullptr || *path == '\0') return out;
    std::ifstream in(path);
    if (!in) throw mcsep::Error(mcsep::ErrorCode::Io, std::string("cannot read ") + path);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto record = mcsep::record_from_json(line);
        if (record.kind == mcsep::CensusKind::Separators) out[record.size] = record.value;
    }
    return out;
}

}  // namespace

extern "C" {

const char* mcsep_version(void) { return "1.0.0"; }

const char* mcsep_last_error(void) { return last_error.c_str(); }

const char* mcsep_status_name(mcsep_status status) {
    switch (status) {
        case MCSEP_OK: return "ok";
        case MCSEP_ERR_INVALID_ARGUMENT: return "invalid argument";
        case MCSEP_ERR_PARSE: return "parse error";
        case MCSEP_ERR_RANGE: return "out of range";
        case MCSEP_ERR_IO: return "i/o error";
        case MCSEP_ERR_CHECKPOINT: return "checkpoint error";
        case MCSEP_ERR_INVARIANT: return "invariant violation";
        case MCSEP_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

void mcsep_string_free(char* text) { std::free(text); }

mcsep_status mcsep_graph_from_graph6(const char* text, mcsep_graph** out) {
    return guarded([&] {
        require(text != nullptr && out != nullptr, "null argument");
        *out = new mcsep_graph{mcsep::from_graph6(text)};
    });
}

mcsep_status mcsep_graph_to_graph6(const mcsep_graph* graph, char** out) {
    return guarded([&] {
        require(graph != nullptr && out != nullptr, "null argument");
        *out = copy_out(mcsep::to_graph6(graph->graph));
    });
}

mcsep_status mcsep_graph_from_edges(int n, const int* endpoints, size_t edge_count, mcsep_graph** out) {
    return guarded([&] {
        require(out != nullptr && (endpoints != nullptr || edge_count == 0), "null argument");
        mcsep::Graph g(n);
        for (size_t i = 0; i < edge_count; ++i) g.add_edge(endpoints[2 * i], endpoints[2 * i + 1]);
        *out = new mcsep_graph{g};
    });
}

int mcsep_graph_order(const mcsep_graph* graph) { return graph ? graph->graph.order() : 0; }

uint64_t mcsep_graph_neighbors(const mcsep_graph* graph, int vertex) {
    if (graph == nullptr || vertex < 0 || vertex >= graph->graph.order()) return 0;
    return graph->graph.neighbors(vertex).bits();
}

void mcsep_graph_free(mcsep_graph* graph) { delete graph; }

mcsep_status mcsep_is_minimal_separator(const mcsep_graph* graph, int u, int v, uint64_t set, int* out) {
    return guarded([&] {
        require(graph != nullptr && out != nullptr, "null argument");
        *out = mcsep::is_minimal_separator(graph->graph, u, v, mcsep::VertexSet(set)) ? 1 : 0;
    });
}

mcsep_status mcsep_count_separators(const mcsep_graph* graph, int u, int v, uint64_t* out) {
    return guarded([&] {
        require(graph != nullptr && out != nullptr, "null argument");
        *out = mcsep::count_minimal_separators(graph->graph, u, v);
    });
}

mcsep_status mcsep_enumerate_separators(const mcsep_graph* graph, int u, int v, mcsep_family** out) {
    return guarded([&] {
        require(graph != nullptr && out != nullptr, "null argument");
        const auto family = mcsep::minimal_separator_family(graph->graph, u, v);
        for (mcsep::VertexSet t : family)
            if (!mcsep::is_minimal_separator_full(graph->graph, u, v, t))
                throw mcsep::Error(mcsep::ErrorCode::Invariant,
                                   "separator {" + t.to_string() + "} fails the full-component check");
        *out = new mcsep_family{family.members()};
    });
}

mcsep_status mcsep_enumerate_vertex_cuts(const mcsep_graph* graph, mcsep_family** out) {
    return guarded([&] {
        require(graph != nullptr && out != nullptr, "null argument");
        *out = new mcsep_family{mcsep::enumerate_minimal_vertex_cuts(graph->graph).members()};
    });
}

size_t mcsep_family_size(const mcsep_family* family) { return family ? family->members.size() : 0; }

uint64_t mcsep_family_member(const mcsep_family* family, size_t index) {
    if (family == nullptr || index >= family->members.size()) return 0;
    return family->members[index].bits();
}

void mcsep_family_free(mcsep_family* family) { delete family; }

mcsep_status mcsep_construct_seymour(int m, mcsep_graph** out, int* u, int* v) {
    return guarded([&] {
        require(out != nullptr, "null argument");
        auto tg = mcsep::seymour(m);
        if (u) *u = tg.u;
        if (v) *v = tg.v;
        *out = new mcsep_graph{std::move(tg.g)};
    });
}

mcsep_status mcsep_construct_glue(const mcsep_graph* a, int a_u, int a_v, const mcsep_graph* b, int b_u,
                                  int b_v, mcsep_graph** out, int* u, int* v) {
    return guarded([&] {
        require(a != nullptr && b != nullptr && out != nullptr, "null argument");
        auto tg = mcsep::glue({a->graph, a_u, a_v}, {b->graph, b_u, b_v});
        if (u) *u = tg.u;
        if (v) *v = tg.v;
        *out = new mcsep_graph{std::move(tg.g)};
    });
}

mcsep_status mcsep_construct_named(const char* name, int n, mcsep_graph** out) {
    return guarded([&] {
        require(name != nullptr && out != nullptr, "null argument");
        *out = new mcsep_graph{mcsep::named_graph(name, n)};
    });
}

mcsep_status mcsep_bounds_table(int n_max, const char* format, const char* census_jsonl_path, char** out) {
    return guarded([&] {
        require(format != nullptr && out != nullptr, "null argument");
        const auto rows = mcsep::bounds_table(n_max, exact_g_from(census_jsonl_path));
        const std::string fmt = format;
        if (fmt == "csv") *out = copy_out(mcsep::bounds_to_csv(rows));
        else if (fmt == "json") *out = copy_out(mcsep::bounds_to_json(rows));
        else if (fmt == "plain") *out = copy_out(mcsep::bounds_to_plain(rows));
        else throw mcsep::Error(mcsep::ErrorCode::InvalidArgument, "unknown format '" + fmt + "'");
    });
}

double mcsep_binary_entropy(double x) { return mcsep::binary_entropy_total(x); }

mcsep_status mcsep_census_run(const mcsep_census_config* config, char** records_jsonl) {
    return guarded([&] {
        require(config != nullptr && config->kind != nullptr && records_jsonl != nullptr, "null argument");
        mcsep::CensusConfig c;
        c.kind = mcsep::parse_census_kind(config->kind);
        c.size_min = config->size_min;
        c.size_max = config->size_max;
        c.workers = config->workers;
        if (config->checkpoint_path) c.checkpoint_path = config->checkpoint_path;
        if (config->checkpoint_every > 0) c.checkpoint_every = config->checkpoint_every;
        if (config->output_path) c.output_path = config->output_path;
        if (config->witness_path) c.witness_path = config->witness_path;
        const auto result = mcsep::census_run(c);
        std::string lines;
        for (const auto& r : result.records) lines += mcsep::record_to_json(r) + "\n";
        *records_jsonl = copy_out(lines);
    });
}

mcsep_status mcsep_verify_conjecture(int k_max, int workers, char** report, int* violated) {
    return guarded([&] {
        require(report != nullptr && violated != nullptr, "null argument");
        const auto r = mcsep::verify_conjecture(k_max, workers);
        *violated = r.all_pass ? 0 : 1;
        *report = copy_out(r.to_text());
    });
}

}  // extern "C"
