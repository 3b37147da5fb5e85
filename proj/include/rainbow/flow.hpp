#pragma once

#include <cstdint>
#include <vector>

namespace rainbow {

/// Dinic max-flow on a small integer-capacity network.
class FlowNetwork {
 public:
  explicit FlowNetwork(int nodes);

  /// Returns the index of the forward arc, usable with flow_on().
  int add_arc(int from, int to, std::int64_t capacity);
  std::int64_t max_flow(int source, int sink);
  std::int64_t flow_on(int arc) const;
  int from(int arc) const { return arcs_[static_cast<std::size_t>(arc ^ 1)].to; }
  int to(int arc) const { return arcs_[static_cast<std::size_t>(arc)].to; }

 private:
  struct Arc {
    int to;
    std::int64_t capacity;
  };

  bool build_levels(int source, int sink);
  std::int64_t push(int node, int sink, std::int64_t limit);

  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> out_;
  std::vector<int> level_;
  std::vector<std::size_t> next_;
  std::vector<std::int64_t> initial_capacity_;
};

}  // namespace rainbow
