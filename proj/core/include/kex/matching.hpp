#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kex/config.hpp"
#include "kex/registry.hpp"
#include "kex/scoring.hpp"

namespace kex {

/// Per-iteration pointer graph: each patient points at the vertex whose donor
/// attains the row maximum of that patient's weights, provided the weight
/// exceeds F_star. Out-degree is at most one, so every cycle through a vertex
/// is unique.
struct SuccessorGraph {
    int n = 0;
    std::vector<int> succ;            // -1 = no successor
    std::vector<double> edge_weight;  // weight of the chosen edge, 0 when none
};

/// Ordered vertex list describing one proposed exchange. vertices[k] receives
/// the kidney of vertices[k+1]'s donor (wrapping); received_weight aligns
/// with vertices. A 1-cycle is a pair taking its own donor's kidney and is
/// flagged internal so consumers can exclude it from exchange counts.
struct ProposedCycle {
    std::string id;
    std::vector<std::string> vertices;
    std::vector<double> received_weight;
    bool internal = false;
};

/// NDD-initiated open sequence: the NDD's kidney goes to vertices[0], each
/// pair's donor gives to the next, and the last pair's donor is left over as
/// the bridge donor.
struct ProposedChain {
    std::string id;
    std::string ndd_uid;
    std::vector<std::string> vertices;
    std::vector<double> received_weight;
    std::string bridge_pair_uid;
    DonorProfile bridge_donor;
};

enum class UnmatchedReason { no_compatible_donor, filtered_by_f_star, no_closing_cycle };

std::string to_string(UnmatchedReason reason);

struct UnmatchedPair {
    std::string uid;
    UnmatchedReason reason;
};

/// One outer-loop pass: the survivors it saw, the successor graph built for
/// cycle search (after any chains were carved out), and what got removed.
struct IterationLog {
    int index = 0;
    std::vector<std::string> survivors;   // pair vertices at cycle-search time
    std::vector<int> succ;                // successor per survivor, -1 = none
    std::vector<double> succ_weight;      // chosen-edge weight per survivor
    std::vector<int> removed_chains;      // indexes into MatchResult::chains
    int removed_cycle = -1;               // index into MatchResult::cycles
};

struct MatchResult {
    std::vector<ProposedCycle> cycles;
    std::vector<ProposedChain> chains;
    std::vector<UnmatchedPair> unmatched;
    std::vector<IterationLog> iterations;

    bool matched(const std::string& uid) const;
};

/// Pair vertices sorted for queue polling: priority descending, then
/// enrollment order, then uid. Returns indexes into pool.pairs.
std::vector<int> order_queue(const Pool& pool);

/// Candidate identity used by tie-breaks.
struct TieKey {
    double priority = 0.0;
    std::uint64_t enrolled_at = 0;
    const std::string* uid = nullptr;
};

/// Index of the best weight, or -1 when the maximum does not exceed f_star.
/// Ties on the maximum go to the highest-priority candidate (then earliest
/// enrolled, then smallest uid) in priority mode, and to the earliest
/// enrolled candidate in lexicographic mode.
int argmax_with_tiebreak(const std::vector<double>& weights, const std::vector<TieKey>& keys,
                         TiebreakMode mode, double f_star);

/// Builds the successor graph over the matrix's pair vertices. NDD vertices
/// get no successor and, having no patient column, never win a row maximum
/// above a non-negative F_star.
SuccessorGraph gen_successor_graph(const WeightMatrix& matrix, const Pool& pool,
                                   const EngineConfig& cfg);

/// Walks successor pointers from start, recording visit order. Returns the
/// walk when it comes back to start within l_max vertices; nothing when the
/// walk dies, revisits a non-start vertex, or hits the length cap first.
std::optional<std::vector<int>> dfs_cycle(const SuccessorGraph& graph, int start, int l_max);

/// Builds the successor graph once and polls queue vertices in order,
/// returning the first cycle found.
std::optional<std::vector<int>> find_cycle(const WeightMatrix& matrix,
                                           const std::vector<int>& queue, const Pool& pool,
                                           const EngineConfig& cfg);

/// Greedy chain construction from one NDD: repeatedly hand the current kidney
/// to the surviving patient who values it most (same tie-break as row
/// argmax), requiring every hop to exceed F_star, until no patient accepts or
/// the chain holds l_max pairs. Returns nothing when no patient accepts the
/// NDD kidney.
std::optional<ProposedChain> build_chain(const Pool& pool, const NddDonor& ndd,
                                         const EngineConfig& cfg);

/// The full engine run. Assigns priorities once up front (mutating the
/// pool's wt_score / is_initial / priority fields), then repeats
/// {rebuild weights, extract chains when enabled, order the queue, find and
/// remove one cycle} until the pool empties or nothing more can be removed.
/// Bridge donors are reported in the result for later runs; they do not
/// re-enter the current one.
MatchResult run_matching(Pool& pool, const EngineConfig& cfg);

}  // namespace kex
