// The word graph G+(R,L), the SL2(Z) conjugacy graph, BFS balls,
// four-point hyperbolicity estimates, exports and the on-disk ball cache.
#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "suspflow/rlword.hpp"
#include "suspflow/sl2z.hpp"

namespace suspflow::ghys_graph {

using sl2z::ConjClass;
using sl2z::Group;

// Canonical class key of a mixed word: least rotation, and in GL2 mode
// also the letter swap.
RLWord word_class_rep(const RLWord& w, Group group);

// All mixed classes reachable by inserting or deleting one letter.
std::set<RLWord> word_neighbors(const RLWord& w, Group group);

struct ConjNeighbors {
    std::set<ConjClass> classes;
    bool pruned;  // some products exceeded the trace cap
};

// Classes of rep * s for s in {R, R^-1, L, L^-1}, where rep is the
// canonical representative; products with |trace| > trace_cap are pruned.
ConjNeighbors conj_neighbors(const ConjClass& node, const Zint& trace_cap);

enum class GraphKind { Word, Conjugacy };

constexpr std::size_t kDefaultNodeBudget = 1000000;
constexpr long kDefaultTraceCap = 200;

struct ExploredBall {
    GraphKind kind{GraphKind::Word};
    Group group{Group::GL2};
    std::string center;
    int radius{0};
    long trace_cap{kDefaultTraceCap};
    std::size_t node_budget{kDefaultNodeBudget};
    std::vector<std::string> nodes;  // sorted keys
    std::map<std::string, int> distance;           // from center, exact
    std::map<std::string, std::set<std::string>> adjacency;
    std::map<std::string, bool> complete;  // full neighbor set recorded
};

ExploredBall explore_word_ball(const RLWord& center, int radius, Group group,
                               std::size_t node_budget = kDefaultNodeBudget);
ExploredBall explore_conj_ball(const ConjClass& center, int radius,
                               const Zint& trace_cap = kDefaultTraceCap,
                               std::size_t node_budget = kDefaultNodeBudget);

// 3 x BFS distance between the GL2 word classes, nullopt when the
// distance exceeds max_radius. Upper-bounds the Ghys distance between
// the corresponding suspension flows.
std::optional<Zint> ghys_distance_upper_bound(const RLWord& w1, const RLWord& w2,
                                              int max_radius);

struct DeltaEstimate {
    Qrat value;        // max four-point defect /2 over core quadruples
    int usable_radius; // radius - margin
    std::size_t core_size;
};

// Four-point hyperbolicity estimate over nodes at distance
// <= radius - margin, using within-ball distances (upper bounds).
DeltaEstimate delta_hyperbolicity(const ExploredBall& ball, int margin);

enum class ExportFormat { DOT, JSON };
std::string export_graph(const ExploredBall& ball, ExportFormat format);

// JSON-lines ball cache; records carry a format version and the full
// exploration parameters. Stale-version records are ignored.
class BallCache {
  public:
    // Empty dir resolves GHYS_CACHE_DIR, falling back to ./.ghys-cache.
    explicit BallCache(std::string dir = "");

    const std::string& dir() const { return dir_; }
    std::optional<ExploredBall> lookup(GraphKind kind, Group group,
                                       const std::string& center, int radius,
                                       long trace_cap, std::size_t node_budget) const;
    void store(const ExploredBall& ball) const;

    static constexpr int kFormatVersion = 1;

  private:
    std::string file_path() const;
    std::string dir_;
};

}  // namespace suspflow::ghys_graph
