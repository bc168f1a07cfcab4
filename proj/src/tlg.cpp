#include "newcomb/tlg.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <string>

#include "newcomb/error.hpp"

namespace newcomb::tlg {

namespace {

// Union-find over node indices. Union by smaller root index keeps the
// representative deterministic.
class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

std::string node_name(NodeId id) { return "(" + std::to_string(id) + ")"; }

}  // namespace

std::string_view to_string(EventKind kind) {
  switch (kind) {
    case EventKind::kOracleStart:
      return "OracleStart";
    case EventKind::kSChoice:
      return "SChoice";
    case EventKind::kCChoice:
      return "CChoice";
    case EventKind::kOutcome:
      return "Outcome";
    case EventKind::kElaboration:
      return "Elaboration";
    case EventKind::kAction:
      return "Action";
  }
  return "?";
}

std::string_view to_string(Player player) {
  switch (player) {
    case Player::kC:
      return "C";
    case Player::kS:
      return "S";
    case Player::kOmega:
      return "Omega";
  }
  return "?";
}

TLGraph::TLGraph(std::vector<EventNode> nodes, std::vector<Edge> edges,
                 const std::vector<std::vector<NodeId>>& entangled_groups)
    : nodes_(std::move(nodes)), edges_(std::move(edges)) {
  std::sort(nodes_.begin(), nodes_.end(),
            [](const EventNode& a, const EventNode& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (nodes_[i].id <= 0) {
      throw StructureError("node ids must be positive, got " +
                           std::to_string(nodes_[i].id));
    }
    if (i > 0 && nodes_[i].id == nodes_[i - 1].id) {
      throw StructureError("duplicate node " + node_name(nodes_[i].id));
    }
  }
  for (const auto& n : nodes_) {
    if (!n.copy_of) continue;
    if (*n.copy_of == n.id || !has_node(*n.copy_of)) {
      throw StructureError("node " + node_name(n.id) +
                           " is a copy of a missing node");
    }
    if (node(*n.copy_of).kind != n.kind) {
      throw StructureError("copy " + node_name(n.id) +
                           " differs in kind from its original");
    }
  }

  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (const auto& [from, to] : edges_) {
    if (!has_node(from) || !has_node(to)) {
      throw StructureError("edge " + node_name(from) + "->" + node_name(to) +
                           " references a missing node");
    }
    if (from == to) {
      throw StructureError("self-loop on " + node_name(from));
    }
  }

  DisjointSets sets(nodes_.size());
  for (const auto& group : entangled_groups) {
    for (NodeId id : group) {
      if (!has_node(id)) {
        throw StructureError("entanglement references missing node " +
                             node_name(id));
      }
    }
    for (std::size_t i = 1; i < group.size(); ++i) {
      sets.unite(index_of(group[0]), index_of(group[i]));
    }
  }
  class_rep_.resize(nodes_.size());
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const std::size_t root = sets.find(i);
    if (nodes_[root].kind != nodes_[i].kind) {
      throw StructureError("entangled nodes " + node_name(nodes_[root].id) +
                           " and " + node_name(nodes_[i].id) +
                           " differ in kind");
    }
    // Roots are the smallest index of their set, hence the smallest id.
    class_rep_[i] = nodes_[root].id;
  }
}

std::size_t TLGraph::index_of(NodeId id) const {
  auto it = std::lower_bound(
      nodes_.begin(), nodes_.end(), id,
      [](const EventNode& n, NodeId key) { return n.id < key; });
  if (it == nodes_.end() || it->id != id) {
    throw ArgumentError("unknown node " + node_name(id));
  }
  return static_cast<std::size_t>(it - nodes_.begin());
}

bool TLGraph::has_node(NodeId id) const {
  return std::binary_search(
      nodes_.begin(), nodes_.end(), EventNode{id, EventKind::kAction, {}},
      [](const EventNode& a, const EventNode& b) { return a.id < b.id; });
}

const EventNode& TLGraph::node(NodeId id) const { return nodes_[index_of(id)]; }

bool TLGraph::has_edge(NodeId from, NodeId to) const {
  return std::binary_search(edges_.begin(), edges_.end(), Edge{from, to});
}

EdgeRole TLGraph::edge_role(const Edge& e) const {
  const EventNode& from = node(e.first);
  const EventNode& to = node(e.second);
  if (from.kind == EventKind::kElaboration ||
      to.kind == EventKind::kElaboration) {
    return EdgeRole::kDetour;
  }
  if (from.is_original() && to.is_original()) return EdgeRole::kChain;
  return EdgeRole::kBranch;
}

std::vector<NodeId> TLGraph::successors(NodeId id) const {
  std::vector<NodeId> out;
  for (const auto& [from, to] : edges_) {
    if (from == id) out.push_back(to);
  }
  return out;
}

std::vector<NodeId> TLGraph::predecessors(NodeId id) const {
  std::vector<NodeId> out;
  for (const auto& [from, to] : edges_) {
    if (to == id) out.push_back(from);
  }
  return out;
}

int TLGraph::in_degree(NodeId id) const {
  return static_cast<int>(predecessors(id).size());
}

int TLGraph::out_degree(NodeId id) const {
  return static_cast<int>(successors(id).size());
}

std::vector<std::vector<NodeId>> TLGraph::entanglement_classes() const {
  std::map<NodeId, std::vector<NodeId>> by_rep;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    by_rep[class_rep_[i]].push_back(nodes_[i].id);
  }
  std::vector<std::vector<NodeId>> classes;
  classes.reserve(by_rep.size());
  for (auto& [rep, members] : by_rep) classes.push_back(std::move(members));
  return classes;
}

std::vector<std::vector<NodeId>> TLGraph::entangled_groups() const {
  auto classes = entanglement_classes();
  std::erase_if(classes, [](const auto& c) { return c.size() < 2; });
  return classes;
}

bool TLGraph::entangled(NodeId a, NodeId b) const {
  return class_rep_[index_of(a)] == class_rep_[index_of(b)];
}

std::optional<NodeId> TLGraph::original_of(NodeId id) const {
  const EventNode* n = &node(id);
  // copy_of chains are acyclic in practice; bound the walk anyway.
  for (std::size_t hops = 0; n->copy_of && hops <= nodes_.size(); ++hops) {
    n = &node(*n->copy_of);
  }
  if (n->copy_of || n->kind == EventKind::kElaboration) return std::nullopt;
  return n->id;
}

bool TLGraph::chain_reaches(NodeId a, NodeId b) const {
  std::set<NodeId> seen{a};
  std::queue<NodeId> frontier;
  frontier.push(a);
  while (!frontier.empty()) {
    const NodeId cur = frontier.front();
    frontier.pop();
    for (NodeId next : successors(cur)) {
      if (edge_role({cur, next}) != EdgeRole::kChain) continue;
      if (next == b) return true;
      if (seen.insert(next).second) frontier.push(next);
    }
  }
  return false;
}

std::vector<NodeId> TLGraph::base_order() const {
  // Kahn's algorithm over chain edges, smallest id first on ties.
  std::map<NodeId, int> pending;
  for (const auto& n : nodes_) {
    if (n.is_original()) pending[n.id] = 0;
  }
  for (const auto& e : edges_) {
    if (edge_role(e) == EdgeRole::kChain) ++pending[e.second];
  }
  std::set<NodeId> ready;
  for (const auto& [id, deg] : pending) {
    if (deg == 0) ready.insert(id);
  }
  std::vector<NodeId> order;
  while (!ready.empty()) {
    const NodeId cur = *ready.begin();
    ready.erase(ready.begin());
    order.push_back(cur);
    for (NodeId next : successors(cur)) {
      if (edge_role({cur, next}) == EdgeRole::kChain && --pending[next] == 0) {
        ready.insert(next);
      }
    }
  }
  if (order.size() != pending.size()) {
    throw StructureError("chain edges contain a cycle");
  }
  return order;
}

bool TLGraph::is_chain() const {
  if (nodes_.empty() || edges_.size() + 1 != nodes_.size()) return false;
  std::optional<NodeId> start;
  for (const auto& n : nodes_) {
    const int in = in_degree(n.id);
    if (in > 1 || out_degree(n.id) > 1) return false;
    if (in == 0) {
      if (start) return false;
      start = n.id;
    }
  }
  if (!start) return false;
  std::size_t visited = 1;
  for (auto next = successors(*start); !next.empty();
       next = successors(next.front())) {
    if (++visited > nodes_.size()) return false;
  }
  return visited == nodes_.size();
}

TLGraph base_chain(int n) {
  if (n < 1) {
    throw ArgumentError("chain length must be >= 1, got " + std::to_string(n));
  }
  static constexpr EventKind kGameKinds[] = {
      EventKind::kOracleStart, EventKind::kSChoice, EventKind::kCChoice,
      EventKind::kOutcome};
  std::vector<EventNode> nodes;
  std::vector<Edge> edges;
  for (int i = 1; i <= n; ++i) {
    nodes.push_back({i, n == 4 ? kGameKinds[i - 1] : EventKind::kAction, {}});
    if (i > 1) edges.emplace_back(i - 1, i);
  }
  return TLGraph(std::move(nodes), std::move(edges));
}

TLGraph unfold(const TLGraph& chain, const UnfoldSpec& spec) {
  const int n = spec.chain_length;
  const int k = spec.query_at;
  const int m = spec.target;
  if (!(1 <= k && k < m && m <= n)) {
    throw ArgumentError("unfold requires 1 <= query_at < target <= length, got "
                        "length=" + std::to_string(n) +
                        " query_at=" + std::to_string(k) +
                        " target=" + std::to_string(m));
  }
  if (static_cast<int>(chain.nodes().size()) != n) {
    throw ArgumentError("unfold spec length " + std::to_string(n) +
                        " does not match a chain of " +
                        std::to_string(chain.nodes().size()) + " events");
  }
  if (!chain.is_chain()) {
    throw StructureError("unfold input is not a chain");
  }
  for (int i = 1; i <= n; ++i) {
    if (!chain.has_node(i) || !chain.node(i).is_original() ||
        (i < n && !chain.has_edge(i, i + 1))) {
      throw StructureError("unfold input must be the chain (1) -> ... -> (" +
                           std::to_string(n) + ") of original events");
    }
  }

  std::vector<EventNode> nodes = chain.nodes();
  std::vector<Edge> edges = chain.edges();
  std::vector<std::vector<NodeId>> seeds;

  const NodeId elaboration = n + 1;
  nodes.push_back({elaboration, EventKind::kElaboration, {}});
  edges.emplace_back(m, elaboration);
  edges.emplace_back(elaboration, k);

  // Copies of everything after the answer point.
  NodeId prev = k;
  for (int j = k + 1; j <= n; ++j) {
    const NodeId copy = n + 1 + (j - k);
    nodes.push_back({copy, chain.node(j).kind, j});
    edges.emplace_back(prev, copy);
    seeds.push_back({j, copy});
    prev = copy;
  }

  return entanglement_closure(
      TLGraph(std::move(nodes), std::move(edges), seeds));
}

const TLGraph& game_tlg() {
  static const TLGraph graph = unfold(base_chain(4), kGameUnfold);
  return graph;
}

Timeline player_timeline(const TLGraph& tlg, Player player) {
  if (!(tlg == game_tlg())) {
    throw UnsupportedGraphError(
        "player timelines are only defined on the game graph");
  }
  switch (player) {
    case Player::kC:
      return {player, {1, 2, 3, 4}};
    case Player::kS:
      return {player, {1, 2, 6, 7}};
    case Player::kOmega:
      return {player, {1, 3, 5, 2, 6, 7}};
  }
  throw ArgumentError("unknown player");
}

bool validate_linearity(const Timeline& timeline, const TLGraph& tlg) {
  const auto& seq = timeline.sequence;
  for (NodeId id : seq) {
    if (!tlg.has_node(id)) {
      throw ArgumentError("timeline visits unknown node " + node_name(id));
    }
  }
  if (seq.empty()) return false;
  if (std::set<NodeId>(seq.begin(), seq.end()).size() != seq.size()) {
    return false;
  }

  std::map<NodeId, int> in;
  std::map<NodeId, int> out;
  for (NodeId id : seq) in[id] = out[id] = 0;
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    const NodeId a = seq[i];
    const NodeId b = seq[i + 1];
    if (!tlg.has_edge(a, b) && !tlg.chain_reaches(a, b)) return false;
    ++out[a];
    ++in[b];
  }

  int starts = 0;
  int ends = 0;
  for (NodeId id : seq) {
    if (in[id] > 1 || out[id] > 1) return false;
    starts += in[id] == 0;
    ends += out[id] == 0;
  }
  return starts == 1 && ends == 1;
}

TLGraph entanglement_closure(const TLGraph& tlg) {
  const auto& nodes = tlg.nodes();
  std::map<NodeId, std::size_t> index;
  for (std::size_t i = 0; i < nodes.size(); ++i) index[nodes[i].id] = i;

  DisjointSets sets(nodes.size());
  for (const auto& group : tlg.entangled_groups()) {
    for (std::size_t i = 1; i < group.size(); ++i) {
      sets.unite(index[group[0]], index[group[i]]);
    }
  }

  std::vector<std::vector<NodeId>> succ(nodes.size());
  for (const auto& [from, to] : tlg.edges()) succ[index[from]].push_back(to);

  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t a = 0; a < nodes.size(); ++a) {
      for (std::size_t b = a + 1; b < nodes.size(); ++b) {
        if (sets.find(a) != sets.find(b)) continue;
        for (NodeId c : succ[a]) {
          for (NodeId d : succ[b]) {
            if (tlg.node(c).kind != tlg.node(d).kind) continue;
            changed |= sets.unite(index[c], index[d]);
          }
        }
      }
    }
  }

  std::map<std::size_t, std::vector<NodeId>> groups;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    groups[sets.find(i)].push_back(nodes[i].id);
  }
  std::vector<std::vector<NodeId>> merged;
  for (auto& [root, members] : groups) {
    if (members.size() > 1) merged.push_back(std::move(members));
  }
  return TLGraph(nodes, tlg.edges(), merged);
}

std::vector<Edge> detect_twist(const TLGraph& tlg, const Timeline& timeline,
                               std::span<const NodeId> base_order) {
  std::map<NodeId, std::size_t> position;
  for (std::size_t i = 0; i < base_order.size(); ++i) {
    position[base_order[i]] = i;
  }

  struct Visit {
    NodeId node;
    std::size_t base_position;
  };
  std::vector<Visit> visits;
  for (NodeId id : timeline.sequence) {
    if (!tlg.has_node(id)) {
      throw ArgumentError("timeline visits unknown node " + node_name(id));
    }
    if (tlg.node(id).kind == EventKind::kElaboration) continue;
    const auto original = tlg.original_of(id);
    const auto it = original ? position.find(*original) : position.end();
    if (it == position.end()) {
      throw ArgumentError("node " + node_name(id) +
                          " has no position in the base order");
    }
    visits.push_back({id, it->second});
  }

  std::vector<Edge> twists;
  for (std::size_t x = 0; x < visits.size(); ++x) {
    for (std::size_t y = x + 1; y < visits.size(); ++y) {
      if (visits[y].base_position < visits[x].base_position) {
        twists.emplace_back(visits[x].node, visits[y].node);
      }
    }
  }
  return twists;
}

}  // namespace newcomb::tlg
