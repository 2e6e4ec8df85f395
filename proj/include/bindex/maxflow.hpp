#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <queue>
#include <vector>

#include "errors.hpp"

namespace bindex {

// Dinic max-flow on integer capacities. Arcs are stored in pairs (forward,
// reverse) so arc ^ 1 is the residual twin.
class FlowNetwork {
public:
  using capacity_t = std::int64_t;

  explicit FlowNetwork(std::size_t nodes) : head_(nodes, npos) {}

  std::size_t nodes() const noexcept { return head_.size(); }

  void add_arc(std::size_t from, std::size_t to, capacity_t capacity) {
    if (capacity < 0)
      throw domain_error("negative arc capacity");
    push(from, to, capacity);
    push(to, from, 0);
  }

  capacity_t max_flow(std::size_t source, std::size_t sink) {
    capacity_t total = 0;
    while (build_levels(source, sink)) {
      cursor_ = head_;
      while (capacity_t pushed = augment(source, sink, std::numeric_limits<capacity_t>::max()))
        total += pushed;
    }
    return total;
  }

  // Nodes reachable from source in the residual network after max_flow.
  std::vector<bool> source_side(std::size_t source) const {
    std::vector<bool> seen(nodes(), false);
    std::vector<std::size_t> stack{source};
    seen[source] = true;
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t a = head_[u]; a != npos; a = arcs_[a].next) {
        if (arcs_[a].residual > 0 && !seen[arcs_[a].to]) {
          seen[arcs_[a].to] = true;
          stack.push_back(arcs_[a].to);
        }
      }
    }
    return seen;
  }

private:
  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

  struct Arc {
    std::size_t to;
    std::size_t next;
    capacity_t residual;
  };

  void push(std::size_t from, std::size_t to, capacity_t capacity) {
    arcs_.push_back({to, head_.at(from), capacity});
    head_[from] = arcs_.size() - 1;
  }

  bool build_levels(std::size_t source, std::size_t sink) {
    level_.assign(nodes(), -1);
    std::queue<std::size_t> queue;
    level_[source] = 0;
    queue.push(source);
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop();
      for (std::size_t a = head_[u]; a != npos; a = arcs_[a].next) {
        if (arcs_[a].residual > 0 && level_[arcs_[a].to] < 0) {
          level_[arcs_[a].to] = level_[u] + 1;
          queue.push(arcs_[a].to);
        }
      }
    }
    return level_[sink] >= 0;
  }

  capacity_t augment(std::size_t u, std::size_t sink, capacity_t limit) {
    if (u == sink)
      return limit;
    for (std::size_t& a = cursor_[u]; a != npos; a = arcs_[a].next) {
      Arc& arc = arcs_[a];
      if (arc.residual <= 0 || level_[arc.to] != level_[u] + 1)
        continue;
      const capacity_t pushed = augment(arc.to, sink, std::min(limit, arc.residual));
      if (pushed > 0) {
        arc.residual -= pushed;
        arcs_[a ^ 1].residual += pushed;
        return pushed;
      }
    }
    return 0;
  }

  std::vector<std::size_t> head_;
  std::vector<std::size_t> cursor_;
  std::vector<Arc> arcs_;
  std::vector<int> level_;
};

} // namespace bindex
