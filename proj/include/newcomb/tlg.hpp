#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace newcomb::tlg {

using NodeId = int;
using Edge = std::pair<NodeId, NodeId>;

enum class EventKind {
  kOracleStart,
  kSChoice,
  kCChoice,
  kOutcome,
  kElaboration,
  kAction,  // generic chain event, used for chains other than the game's
};

std::string_view to_string(EventKind kind);

struct EventNode {
  NodeId id = 0;
  EventKind kind = EventKind::kAction;
  // Set iff the node is a retrocausal copy of another node.
  std::optional<NodeId> copy_of;

  bool is_copy() const { return copy_of.has_value(); }
  bool is_original() const { return !copy_of && kind != EventKind::kElaboration; }

  friend bool operator==(const EventNode&, const EventNode&) = default;
};

// How an edge came into the graph. Chain edges join two original events,
// detour edges touch an elaboration node, branch edges end on a copy.
enum class EdgeRole { kChain, kDetour, kBranch };

// Time-lines graph: events, directed cause -> effect edges, and an
// entanglement partition of the events.
//
// Immutable once built. The constructor checks every structural invariant
// and throws StructureError on violation.
class TLGraph {
 public:
  TLGraph(std::vector<EventNode> nodes, std::vector<Edge> edges,
          const std::vector<std::vector<NodeId>>& entangled_groups = {});

  // Sorted by id.
  const std::vector<EventNode>& nodes() const { return nodes_; }
  // Sorted lexicographically, no duplicates.
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_node(NodeId id) const;
  const EventNode& node(NodeId id) const;
  bool has_edge(NodeId from, NodeId to) const;
  EdgeRole edge_role(const Edge& e) const;

  std::vector<NodeId> successors(NodeId id) const;
  std::vector<NodeId> predecessors(NodeId id) const;
  int in_degree(NodeId id) const;
  int out_degree(NodeId id) const;

  // Every class (singletons included), each sorted, ordered by smallest id.
  std::vector<std::vector<NodeId>> entanglement_classes() const;
  // Only the classes with two or more members.
  std::vector<std::vector<NodeId>> entangled_groups() const;
  bool entangled(NodeId a, NodeId b) const;

  // Follows copy_of links back to the original event. Elaboration nodes
  // have no original and yield nullopt.
  std::optional<NodeId> original_of(NodeId id) const;

  // True iff b is reachable from a using chain edges only.
  bool chain_reaches(NodeId a, NodeId b) const;

  // Original events in causal order (the base chain the graph grew from).
  std::vector<NodeId> base_order() const;

  // True iff the whole graph is a single simple path.
  bool is_chain() const;

  friend bool operator==(const TLGraph&, const TLGraph&) = default;

 private:
  std::size_t index_of(NodeId id) const;

  std::vector<EventNode> nodes_;
  std::vector<Edge> edges_;
  // Smallest id of the class each node (by index) belongs to.
  std::vector<NodeId> class_rep_;
};

// Where the oracle is inserted into a chain of `chain_length` events: it
// inspects event `target` and delivers its answer at event `query_at`.
struct UnfoldSpec {
  int chain_length = 0;
  int query_at = 0;
  int target = 0;
};

// The game's own parameters: 4 events, answer delivered at (2), oracle
// looks ahead to (3).
inline constexpr UnfoldSpec kGameUnfold{4, 2, 3};

TLGraph base_chain(int n);
TLGraph unfold(const TLGraph& chain, const UnfoldSpec& spec);

// unfold(base_chain(4), kGameUnfold), built once.
const TLGraph& game_tlg();

enum class Player { kC, kS, kOmega };

std::string_view to_string(Player player);

struct Timeline {
  Player player = Player::kC;
  std::vector<NodeId> sequence;
};

// Only defined for the game graph; anything else is UnsupportedGraphError.
Timeline player_timeline(const TLGraph& tlg, Player player);

// A timeline is linear when it visits distinct events, each step follows
// a causal link, and the steps form one path from a single starting cause
// to a single final effect. A causal link is an edge of the graph, or a
// forward jump along the original chain (an observer may skip ordinary
// events it does not take part in; it cannot skip backwards in time).
bool validate_linearity(const Timeline& timeline, const TLGraph& tlg);

// Entanglement transmission: whenever a <-> b (a != b), a -> c, b -> d and
// c, d have the same kind, merge c and d. Repeated to a fixed point.
TLGraph entanglement_closure(const TLGraph& tlg);

// Pairs (a, b) where a precedes b in the timeline but b's original precedes
// a's original in `base_order`. Elaboration nodes take no part.
std::vector<Edge> detect_twist(const TLGraph& tlg, const Timeline& timeline,
                               std::span<const NodeId> base_order);

// Graphviz rendering. Chain and detour edges are solid, branch edges
// dashed, entanglement drawn as undirected dotted edges.
std::string to_dot(const TLGraph& tlg);

}  // namespace newcomb::tlg
