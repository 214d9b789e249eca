#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mcsep/graph.hpp"

namespace mcsep {

enum class CensusKind {
    /// max over graphs on k+2 vertices and vertex pairs of the separator count
    Separators,
    /// max over graphs on n vertices of the number of minimal vertex cuts
    VertexCuts,
};

const char* census_kind_name(CensusKind kind);  // "g" or "c"
CensusKind parse_census_kind(const std::string& name);

struct CensusRecord {
    CensusKind kind = CensusKind::Separators;
    int size = 0;
    std::uint64_t value = 0;
    /// Sorted. "graph6" for vertex cuts, "graph6 u v" for separators.
    std::vector<std::string> witnesses;
    std::uint64_t graphs_examined = 0;
    double elapsed = 0.0;
    double root = 0.0;
    bool exceeds_conjecture = false;

    /// Graphs in this census have size + 2 vertices for separators, size otherwise.
    int graph_order() const;
};

/// value^(1/size) > 3^(1/3) + 1e-12
bool exceeds_conjectured_growth(std::uint64_t value, int size);

/// One JSON object, no trailing newline. Elapsed time is left out when
/// `with_timing` is false so that records of separate runs compare byte-for-byte.
std::string record_to_json(const CensusRecord& record, bool with_timing = true);
CensusRecord record_from_json(const std::string& line);

/// Valid sizes: separators 1 <= k <= 9, vertex cuts 3 <= n <= 11.
void check_census_size(CensusKind kind, int size);

CensusRecord compute_g(int k, int workers = 1);
CensusRecord compute_c(int n, int workers = 1);

/// Re-evaluates every witness with the fast enumerator and, up to 12 vertices,
/// the brute-force oracle. Throws Error(Invariant) on any mismatch.
void verify_witnesses(const CensusRecord& record);

struct CensusConfig {
    CensusKind kind = CensusKind::Separators;
    int size_min = 1;
    int size_max = 1;
    int workers = 1;
    /// Empty disables checkpointing. Written atomically every `checkpoint_every` parent subtrees.
    std::string checkpoint_path;
    std::uint64_t checkpoint_every = 1000;
    /// JSON-lines output, appended. Empty: no file.
    std::string output_path;
    /// graph6 witness lines, appended. Empty: no file.
    std::string witness_path;
    /// Testing hook: stop (as if killed) after writing this many checkpoints.
    int stop_after_checkpoints = -1;
};

struct CensusRunResult {
    std::vector<CensusRecord> records;
    bool interrupted = false;
};

/// Runs every size in [size_min, size_max], resuming from `checkpoint_path`
/// when it holds a matching checkpoint. Results do not depend on the worker
/// count or on interruptions. The checkpoint file is removed once all sizes
/// finish.
CensusRunResult census_run(const CensusConfig& config);

struct ConjectureRow {
    int k = 0;
    std::uint64_t g = 0;
    std::uint64_t lower = 0;  ///< 3^floor(k/3)
    double root = 0.0;
    bool pass = false;
    std::vector<std::string> witnesses;
};

struct ConjectureReport {
    std::vector<ConjectureRow> rows;
    bool all_pass = true;

    std::string to_text() const;
};

/// g(k)^(1/k) <= 3^(1/3) + 1e-12 for k = 1..k_max (k_max + 2 <= 11).
ConjectureReport verify_conjecture(int k_max, int workers = 1);

}  // namespace mcsep
