#include "rainbow/flow.hpp"

#include <algorithm>
#include <limits>
#include <queue>

namespace rainbow {

FlowNetwork::FlowNetwork(int nodes) : out_(static_cast<std::size_t>(nodes)) {}

int FlowNetwork::add_arc(int from, int to, std::int64_t capacity) {
  const int id = static_cast<int>(arcs_.size());
  arcs_.push_back({to, capacity});
  arcs_.push_back({from, 0});
  initial_capacity_.push_back(capacity);
  initial_capacity_.push_back(0);
  out_[static_cast<std::size_t>(from)].push_back(id);
  out_[static_cast<std::size_t>(to)].push_back(id + 1);
  return id;
}

std::int64_t FlowNetwork::flow_on(int arc) const {
  return initial_capacity_[static_cast<std::size_t>(arc)] - arcs_[static_cast<std::size_t>(arc)].capacity;
}

bool FlowNetwork::build_levels(int source, int sink) {
  level_.assign(out_.size(), -1);
  std::queue<int> frontier;
  level_[static_cast<std::size_t>(source)] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    const int node = frontier.front();
    frontier.pop();
    for (const int id : out_[static_cast<std::size_t>(node)]) {
      const auto& arc = arcs_[static_cast<std::size_t>(id)];
      if (arc.capacity > 0 && level_[static_cast<std::size_t>(arc.to)] < 0) {
        level_[static_cast<std::size_t>(arc.to)] = level_[static_cast<std::size_t>(node)] + 1;
        frontier.push(arc.to);
      }
    }
  }
  return level_[static_cast<std::size_t>(sink)] >= 0;
}

std::int64_t FlowNetwork::push(int node, int sink, std::int64_t limit) {
  if (node == sink) return limit;
  auto& cursor = next_[static_cast<std::size_t>(node)];
  const auto& outs = out_[static_cast<std::size_t>(node)];
  for (; cursor < outs.size(); ++cursor) {
    const int id = outs[cursor];
    auto& arc = arcs_[static_cast<std::size_t>(id)];
    if (arc.capacity <= 0 ||
        level_[static_cast<std::size_t>(arc.to)] != level_[static_cast<std::size_t>(node)] + 1) {
      continue;
    }
    const auto pushed = push(arc.to, sink, std::min(limit, arc.capacity));
    if (pushed > 0) {
      arc.capacity -= pushed;
      arcs_[static_cast<std::size_t>(id ^ 1)].capacity += pushed;
      return pushed;
    }
  }
  return 0;
}

std::int64_t FlowNetwork::max_flow(int source, int sink) {
  std::int64_t total = 0;
  while (build_levels(source, sink)) {
    next_.assign(out_.size(), 0);
    while (const auto pushed = push(source, sink, std::numeric_limits<std::int64_t>::max())) {
      total += pushed;
    }
  }
  return total;
}

}  // namespace rainbow
