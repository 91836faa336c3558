#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "leafsearch/forcing.hpp"
#include "leafsearch/graph.hpp"
#include "leafsearch/tree_decomposition.hpp"

namespace leafsearch::ztw {

enum class GammaType : std::uint8_t { Zstar, Bot };
enum class PhiType : std::uint8_t { Zstar, E, Bot };

// Event-node digraph over bag slots: node 2s is gamma of slot s, 2s+1 is phi.
// Always kept transitively closed, so removing nodes never loses an order
// constraint between the remaining ones. At most 16 slots.
class DependencyGraph {
 public:
  static constexpr int kMaxSlots = 16;
  static int gamma(int slot) { return 2 * slot; }
  static int phi(int slot) { return 2 * slot + 1; }

  // False (and the graph is left unspecified) if the arc closes a cycle.
  bool add_arc(int from, int to);
  bool reaches(int from, int to) const { return rows_[from] >> to & 1u; }
  // Union with closure; false on a cycle.
  bool merge(const DependencyGraph& other);
  void insert_slot(int slot);
  void remove_slot(int slot);

  const std::array<std::uint32_t, 2 * kMaxSlots>& rows() const { return rows_; }
  bool operator==(const DependencyGraph&) const = default;

 private:
  std::array<std::uint32_t, 2 * kMaxSlots> rows_{};
};

// Plain digraph for the standalone bypass operation.
struct Digraph {
  std::set<std::pair<int, int>> arcs;
};

// Adds the transitive closure of the subgraph induced by gamma_v, phi_v (or
// -1) and their in- and out-neighbours. The caller deletes v's nodes.
Digraph bypass(const Digraph& d, int gamma_v, int phi_v);

// Per-slot data as bitmasks over the bag, slots sorted by vertex id.
struct Signature {
  std::uint16_t gamma_bot = 0;  // Gamma = Bot
  std::uint16_t phi_z = 0;      // Phi = Z*
  std::uint16_t phi_e = 0;      // Phi = E
  std::uint16_t b_gamma = 0;
  std::uint16_t b_phi = 0;
  std::uint16_t b_pi = 0;
  bool lambda = false;
  DependencyGraph d;
  int omega = 0;

  GammaType gamma_of(int slot) const { return gamma_bot >> slot & 1 ? GammaType::Bot : GammaType::Zstar; }
  PhiType phi_of(int slot) const {
    return phi_z >> slot & 1 ? PhiType::Zstar : (phi_e >> slot & 1 ? PhiType::E : PhiType::Bot);
  }
  bool same_key(const Signature& o) const;
};

using SignatureTable = std::vector<Signature>;

struct Options {
  int threads = 1;
  std::size_t max_signatures = std::size_t{1} << 22;  // per node
  // Signatures whose committed Bot count exceeds this are dropped; -1 = off.
  int upper_bound = -1;
  // Alternative readings of two rules, off by default.
  bool join_rejects_shared_lambda = false;  // reject lambda1 && lambda2 even when the E vertex is in the bag
  bool white_witness_any_bag_vertex = false;  // R4 may pick W outside N_t(v)
};

using Constraints = std::map<Vertex, GammaType>;

// Signatures of one node from its children's tables.
SignatureTable process_node(const Graph& g, const NiceTD& nice, int node, const std::vector<SignatureTable>& children,
                            const Constraints& constraints = {}, const Options& options = {});

// Minimum weight over valid root signatures; empty if none.
std::optional<int> min_weight(const Graph& g, const NiceTD& nice, const Constraints& constraints = {},
                              const Options& options = {});

struct ZstarResult {
  int size = 0;
  std::vector<Vertex> set;
  RuleSequence rules;
};

// Smallest Z*-forcing set. The witness comes from tracing the optimal root
// signature back to the introduce choices and is replayed before returning.
// Size -1 when the constraints admit no forcing set.
ZstarResult min_zstar_tw(const Graph& g, const TreeDecomposition& td, const Constraints& constraints = {},
                         const Options& options = {});

}  // namespace leafsearch::ztw
