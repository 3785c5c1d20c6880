#include "suspflow/ghys_graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <filesystem>
#include <fstream>

#include "json.hpp"

namespace suspflow::ghys_graph {

RLWord word_class_rep(const RLWord& w, Group group) {
    if (!w.mixed()) throw DomainError(Err::NotMixed, "word " + w.letters());
    RLWord canon = w.canonical();
    if (group == Group::SL2) return canon;
    RLWord swapped = w.swapped().canonical();
    return std::min(canon, swapped);
}

std::set<RLWord> word_neighbors(const RLWord& w, Group group) {
    RLWord rep = word_class_rep(w, group);
    std::set<RLWord> out;
    const std::string& s = rep.letters();
    for (std::size_t i = 0; i <= s.size(); ++i) {
        for (char ch : {'R', 'L'}) {
            RLWord inserted(s.substr(0, i) + ch + s.substr(i));
            out.insert(word_class_rep(inserted, group));
        }
    }
    for (std::size_t i = 0; i < s.size(); ++i) {
        std::string del = s.substr(0, i) + s.substr(i + 1);
        if (del.find('R') == std::string::npos || del.find('L') == std::string::npos)
            continue;
        out.insert(word_class_rep(RLWord(del), group));
    }
    out.erase(rep);  // insertions/deletions change the length, kept defensive
    return out;
}

ConjNeighbors conj_neighbors(const ConjClass& node, const Zint& trace_cap) {
    if (trace_cap < 3) throw std::invalid_argument("trace cap must be >= 3");
    Mat2 rep = node.representative();
    ConjNeighbors out{{}, false};
    const Mat2 gens[4] = {gen_r(), inverse_unimodular(gen_r()), gen_l(),
                          inverse_unimodular(gen_l())};
    for (const Mat2& s : gens) {
        Mat2 prod = rep * s;
        if (abs(prod.trace()) > trace_cap) {
            out.pruned = true;
            continue;
        }
        out.classes.insert(sl2z::classify_conjugacy(prod));
    }
    return out;
}

namespace {

// Neighbor expansion returns (neighbor keys, complete flag).
template <class Expand>
ExploredBall bfs_ball(const std::string& center_key, int radius,
                      std::size_t node_budget, Expand expand) {
    if (radius < 0) throw std::invalid_argument("radius must be >= 0");
    ExploredBall ball;
    ball.center = center_key;
    ball.radius = radius;
    ball.node_budget = node_budget;
    ball.distance[center_key] = 0;
    std::vector<std::string> frontier{center_key};
    for (int d = 0; d < radius && !frontier.empty(); ++d) {
        std::vector<std::string> next;
        for (const std::string& u : frontier) {
            auto [nbrs, complete] = expand(u);
            ball.complete[u] = complete;
            for (const std::string& v : nbrs) {
                ball.adjacency[u].insert(v);
                ball.adjacency[v].insert(u);
                if (!ball.distance.count(v)) {
                    ball.distance[v] = d + 1;
                    next.push_back(v);
                    if (ball.distance.size() > node_budget)
                        throw DomainError(Err::CapExceeded,
                                          "ball exceeds the node budget");
                }
            }
        }
        std::sort(next.begin(), next.end());
        frontier = std::move(next);
    }
    for (const auto& [key, dist] : ball.distance) {
        (void)dist;
        if (!ball.complete.count(key)) ball.complete[key] = false;
        ball.nodes.push_back(key);
    }
    return ball;
}

}  // namespace

ExploredBall explore_word_ball(const RLWord& center, int radius, Group group,
                               std::size_t node_budget) {
    RLWord rep = word_class_rep(center, group);
    ExploredBall ball = bfs_ball(
        rep.letters(), radius, node_budget,
        [&](const std::string& key) {
            std::set<std::string> nbrs;
            for (const RLWord& v : word_neighbors(RLWord(key), group))
                nbrs.insert(v.letters());
            return std::pair{nbrs, true};
        });
    ball.kind = GraphKind::Word;
    ball.group = group;
    return ball;
}

ExploredBall explore_conj_ball(const ConjClass& center, int radius,
                               const Zint& trace_cap, std::size_t node_budget) {
    std::map<std::string, ConjClass> classes;
    classes.emplace(center.key(), center);
    ExploredBall ball = bfs_ball(
        center.key(), radius, node_budget,
        [&](const std::string& key) {
            ConjNeighbors cn = conj_neighbors(classes.at(key), trace_cap);
            std::set<std::string> nbrs;
            for (const ConjClass& c : cn.classes) {
                nbrs.insert(c.key());
                classes.emplace(c.key(), c);
            }
            return std::pair{nbrs, !cn.pruned};
        });
    ball.kind = GraphKind::Conjugacy;
    ball.group = Group::SL2;
    ball.trace_cap = static_cast<long>(trace_cap);
    return ball;
}

std::optional<Zint> ghys_distance_upper_bound(const RLWord& w1, const RLWord& w2,
                                              int max_radius) {
    RLWord start = word_class_rep(w1, Group::GL2);
    RLWord target = word_class_rep(w2, Group::GL2);
    if (start == target) return Zint(0);
    std::map<RLWord, int> dist;
    dist.emplace(start, 0);
    std::deque<RLWord> queue{start};
    while (!queue.empty()) {
        RLWord u = queue.front();
        queue.pop_front();
        int du = dist.at(u);
        if (du >= max_radius) continue;
        for (const RLWord& v : word_neighbors(u, Group::GL2)) {
            if (dist.count(v)) continue;
            if (v == target) return Zint(3) * (du + 1);
            dist.emplace(v, du + 1);
            if (dist.size() > kDefaultNodeBudget)
                throw DomainError(Err::CapExceeded, "search exceeds the node budget");
            queue.push_back(v);
        }
    }
    return std::nullopt;
}

DeltaEstimate delta_hyperbolicity(const ExploredBall& ball, int margin) {
    if (margin < 0) throw std::invalid_argument("margin must be >= 0");
    if (ball.radius < margin)
        throw DomainError(Err::BallTooSmall,
                          "radius " + std::to_string(ball.radius) + " < margin " +
                              std::to_string(margin));
    int core_radius = ball.radius - margin;
    std::vector<std::string> core;
    for (const auto& [key, d] : ball.distance)
        if (d <= core_radius) core.push_back(key);
    std::sort(core.begin(), core.end());

    // Within-ball BFS from each core node; ball distances only upper-bound
    // the global metric, which is the documented caveat of the estimate.
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < ball.nodes.size(); ++i) index[ball.nodes[i]] = i;
    const int unreached = -1;
    std::vector<std::vector<int>> dist(core.size(),
                                       std::vector<int>(ball.nodes.size(), unreached));
    for (std::size_t i = 0; i < core.size(); ++i) {
        auto& row = dist[i];
        std::deque<std::string> queue{core[i]};
        row[index.at(core[i])] = 0;
        while (!queue.empty()) {
            std::string u = queue.front();
            queue.pop_front();
            int du = row[index.at(u)];
            auto it = ball.adjacency.find(u);
            if (it == ball.adjacency.end()) continue;
            for (const std::string& v : it->second) {
                int& dv = row[index.at(v)];
                if (dv != unreached) continue;
                dv = du + 1;
                queue.push_back(v);
            }
        }
    }
    auto pair_dist = [&](std::size_t i, std::size_t j) {
        int d = dist[i][index.at(core[j])];
        if (d == unreached)
            throw DomainError(Err::BallTooSmall, "core nodes disconnected in the ball");
        return d;
    };

    int max_defect = 0;
    std::size_t n = core.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            for (std::size_t k = j; k < n; ++k)
                for (std::size_t l = k; l < n; ++l) {
                    int s1 = pair_dist(i, j) + pair_dist(k, l);
                    int s2 = pair_dist(i, k) + pair_dist(j, l);
                    int s3 = pair_dist(i, l) + pair_dist(j, k);
                    int hi = std::max({s1, s2, s3});
                    int lo = std::min({s1, s2, s3});
                    int mid = s1 + s2 + s3 - hi - lo;
                    max_defect = std::max(max_defect, hi - mid);
                }
    return DeltaEstimate{Qrat(max_defect, 2), core_radius, core.size()};
}

namespace {

const char* kind_name(GraphKind k) { return k == GraphKind::Word ? "word" : "conj"; }
const char* group_name(Group g) { return g == Group::SL2 ? "sl2" : "gl2"; }

std::vector<std::pair<std::size_t, std::size_t>> edge_list(const ExploredBall& ball) {
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < ball.nodes.size(); ++i) index[ball.nodes[i]] = i;
    std::set<std::pair<std::size_t, std::size_t>> edges;
    for (const auto& [u, nbrs] : ball.adjacency)
        for (const auto& v : nbrs) {
            std::size_t i = index.at(u), j = index.at(v);
            edges.insert({std::min(i, j), std::max(i, j)});
        }
    return {edges.begin(), edges.end()};
}

}  // namespace

std::string export_graph(const ExploredBall& ball, ExportFormat format) {
    auto edges = edge_list(ball);
    if (format == ExportFormat::DOT) {
        std::string out = "graph {\n";
        out += "  // " + std::string(kind_name(ball.kind)) + " ball, center=\"" +
               ball.center + "\", radius=" + std::to_string(ball.radius) + "\n";
        for (const auto& n : ball.nodes) out += "  \"" + n + "\";\n";
        for (const auto& [i, j] : edges)
            out += "  \"" + ball.nodes[i] + "\" -- \"" + ball.nodes[j] + "\";\n";
        out += "}\n";
        return out;
    }
    nlohmann::json j;
    j["kind"] = kind_name(ball.kind);
    j["group"] = group_name(ball.group);
    j["center"] = ball.center;
    j["radius"] = ball.radius;
    j["nodes"] = ball.nodes;
    auto earr = nlohmann::json::array();
    for (const auto& [a, b] : edges) earr.push_back({a, b});
    j["edges"] = earr;
    return j.dump(2) + "\n";
}

BallCache::BallCache(std::string dir) : dir_(std::move(dir)) {
    if (dir_.empty()) {
        if (const char* env = std::getenv("GHYS_CACHE_DIR"))
            dir_ = env;
        else
            dir_ = ".ghys-cache";
    }
}

std::string BallCache::file_path() const { return dir_ + "/balls.jsonl"; }

namespace {

nlohmann::json ball_to_json(const ExploredBall& ball) {
    nlohmann::json j;
    j["version"] = BallCache::kFormatVersion;
    j["kind"] = kind_name(ball.kind);
    j["group"] = group_name(ball.group);
    j["center"] = ball.center;
    j["radius"] = ball.radius;
    j["trace_cap"] = ball.trace_cap;
    j["budget"] = ball.node_budget;
    j["nodes"] = ball.nodes;
    std::vector<int> dist, complete;
    for (const auto& n : ball.nodes) {
        dist.push_back(ball.distance.at(n));
        complete.push_back(ball.complete.at(n) ? 1 : 0);
    }
    j["dist"] = dist;
    j["complete"] = complete;
    auto earr = nlohmann::json::array();
    for (const auto& [a, b] : edge_list(ball)) earr.push_back({a, b});
    j["edges"] = earr;
    return j;
}

ExploredBall ball_from_json(const nlohmann::json& j) {
    ExploredBall ball;
    ball.kind = j.at("kind").get<std::string>() == "word" ? GraphKind::Word
                                                          : GraphKind::Conjugacy;
    ball.group = j.at("group").get<std::string>() == "sl2" ? Group::SL2 : Group::GL2;
    ball.center = j.at("center").get<std::string>();
    ball.radius = j.at("radius").get<int>();
    ball.trace_cap = j.at("trace_cap").get<long>();
    ball.node_budget = j.at("budget").get<std::size_t>();
    ball.nodes = j.at("nodes").get<std::vector<std::string>>();
    auto dist = j.at("dist").get<std::vector<int>>();
    auto complete = j.at("complete").get<std::vector<int>>();
    for (std::size_t i = 0; i < ball.nodes.size(); ++i) {
        ball.distance[ball.nodes[i]] = dist.at(i);
        ball.complete[ball.nodes[i]] = complete.at(i) != 0;
    }
    for (const auto& e : j.at("edges")) {
        const std::string& u = ball.nodes.at(e.at(0).get<std::size_t>());
        const std::string& v = ball.nodes.at(e.at(1).get<std::size_t>());
        ball.adjacency[u].insert(v);
        ball.adjacency[v].insert(u);
    }
    return ball;
}

}  // namespace

std::optional<ExploredBall> BallCache::lookup(GraphKind kind, Group group,
                                              const std::string& center, int radius,
                                              long trace_cap,
                                              std::size_t node_budget) const {
    std::ifstream in(file_path());
    if (!in) return std::nullopt;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
        if (j.is_discarded()) continue;
        if (!j.contains("version") || j["version"] != kFormatVersion) continue;
        if (j.value("kind", "") != kind_name(kind)) continue;
        if (j.value("group", "") != group_name(group)) continue;
        if (j.value("center", "") != center) continue;
        if (j.value("radius", -1) != radius) continue;
        if (j.value("trace_cap", -1L) != trace_cap) continue;
        if (j.value("budget", std::size_t{0}) != node_budget) continue;
        try {
            return ball_from_json(j);
        } catch (const std::exception&) {
            continue;  // malformed record, treat as stale
        }
    }
    return std::nullopt;
}

void BallCache::store(const ExploredBall& ball) const {
    std::filesystem::create_directories(dir_);
    std::ofstream out(file_path(), std::ios::app);
    out << ball_to_json(ball).dump() << "\n";
}

}  // namespace suspflow::ghys_graph
