#include "freezetag/oracle.hpp"

#include <algorithm>
#include <string>
#include <tuple>

namespace freezetag {

SizeCapExceeded::SizeCapExceeded(int requested, int cap)
    : std::invalid_argument("size cap exceeded: " + std::to_string(requested) +
                            " robots, exhaustive search handles at most " + std::to_string(cap)) {}

namespace {

constexpr double kPruneEps = 1e-12;

struct Move {
  double arrival;
  int waker;
  int target;
  auto key() const { return std::tie(arrival, waker, target); }
};

// Branch and bound over wake sequences with nondecreasing wake times. Every
// schedule sorts into exactly such a sequence, so the search is complete.
class WakeSearch {
 public:
  WakeSearch(const TravelTable& table, int source)
      : table_(table), n_(table.robot_count()), avail_(n_, 0.0), pos_(n_), awake_(n_, false) {
    for (int v = 0; v < n_; ++v) pos_[v] = v;
    awake_[source] = true;
  }

  void greedy_incumbent() {
    std::vector<double> avail = avail_;
    std::vector<int> pos = pos_;
    std::vector<bool> awake = awake_;
    std::vector<std::pair<int, int>> seq;
    double last = 0.0;
    for (int step = 1; step < n_; ++step) {
      Move best{kInfinity, -1, -1};
      for (int a = 0; a < n_; ++a) {
        if (!awake[a]) continue;
        for (int u = 0; u < n_; ++u) {
          if (awake[u]) continue;
          const Move m{avail[a] + table_.cost(pos[a], u), a, u};
          if (m.key() < best.key()) best = m;
        }
      }
      awake[best.target] = true;
      avail[best.target] = best.arrival;
      avail[best.waker] = best.arrival;
      pos[best.waker] = table_.endpoint(pos[best.waker], best.target);
      seq.emplace_back(best.waker, best.target);
      last = std::max(last, best.arrival);
    }
    best_ = last;
    best_seq_ = std::move(seq);
  }

  void run() { dfs(0.0, 1); }

  double best() const { return best_; }
  const std::vector<std::pair<int, int>>& best_sequence() const { return best_seq_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  double lower_bound(double last) const {
    if (table_.metric() != Metric::Geodesic) return last;
    double lb = last;
    for (int u = 0; u < n_; ++u) {
      if (awake_[u]) continue;
      double reach = kInfinity;
      for (int a = 0; a < n_; ++a) {
        if (awake_[a]) reach = std::min(reach, avail_[a] + table_.geodesic(pos_[a], u));
        else if (a != u) reach = std::min(reach, last + table_.geodesic(a, u));
      }
      lb = std::max(lb, reach);
    }
    return lb;
  }

  void dfs(double last, int awake_count) {
    ++nodes_;
    if (awake_count == n_) {
      if (last < best_) {
        best_ = last;
        best_seq_ = seq_;
      }
      return;
    }
    if (lower_bound(last) >= best_ - kPruneEps) return;

    std::vector<Move> moves;
    for (int a = 0; a < n_; ++a) {
      if (!awake_[a]) continue;
      for (int u = 0; u < n_; ++u) {
        if (awake_[u]) continue;
        const double arrival = avail_[a] + table_.cost(pos_[a], u);
        if (arrival < last - kPruneEps || arrival >= best_ - kPruneEps) continue;
        moves.push_back({arrival, a, u});
      }
    }
    std::sort(moves.begin(), moves.end(), [](const Move& x, const Move& y) { return x.key() < y.key(); });

    for (const Move& m : moves) {
      if (m.arrival >= best_ - kPruneEps) break;
      const double saved_avail = avail_[m.waker];
      const int saved_pos = pos_[m.waker];
      awake_[m.target] = true;
      avail_[m.target] = m.arrival;
      pos_[m.target] = m.target;
      avail_[m.waker] = m.arrival;
      pos_[m.waker] = table_.endpoint(saved_pos, m.target);
      seq_.emplace_back(m.waker, m.target);

      dfs(std::max(last, m.arrival), awake_count + 1);

      seq_.pop_back();
      avail_[m.waker] = saved_avail;
      pos_[m.waker] = saved_pos;
      awake_[m.target] = false;
      avail_[m.target] = 0.0;
      pos_[m.target] = m.target;
    }
  }

  const TravelTable& table_;
  int n_;
  std::vector<double> avail_;
  std::vector<int> pos_;
  std::vector<bool> awake_;
  std::vector<std::pair<int, int>> seq_;
  std::vector<std::pair<int, int>> best_seq_;
  double best_ = kInfinity;
  std::uint64_t nodes_ = 0;
};

}  // namespace

OracleResult optimal_makespan(const RobotSet& s, Metric metric, const PolygonDomain& d) {
  if (s.size() > kOracleMaxRobots) throw SizeCapExceeded(s.size(), kOracleMaxRobots);
  return optimal_makespan(s, TravelTable(s, d, metric));
}

OracleResult optimal_makespan(const RobotSet& s, const TravelTable& table) {
  if (s.size() > kOracleMaxRobots) throw SizeCapExceeded(s.size(), kOracleMaxRobots);
  WakeSearch search(table, s.source_id);
  search.greedy_incumbent();
  search.run();

  OracleResult r;
  r.nodes_explored = search.nodes();
  r.witness = singleton_tree(s.source_id, s.size());
  for (const auto& [waker, target] : search.best_sequence()) {
    r.witness.parent[target] = waker;
    r.witness.children[waker].push_back(target);
    r.witness.nodes.push_back(target);
  }
  evaluate_tree(r.witness, table);
  r.makespan = r.witness.makespan;
  return r;
}

}  // namespace freezetag
