#include "leafsearch/search.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace leafsearch {

SearchState::SearchState(const Graph& g, Paradigm paradigm)
    : g_(&g),
      paradigm_(paradigm),
      pos_(g.n(), -1),
      parent_(g.n(), -1),
      child_count_(g.n(), 0),
      labels_(paradigm == Paradigm::LBFS ? g.n() : 0),
      orphans_(g.n()) {
  prefix_.reserve(g.n());
  adopted_.reserve(g.n());
}

int SearchState::compare_labels(Vertex a, Vertex b) const {
  const auto& la = labels_[a];
  const auto& lb = labels_[b];
  const size_t common = std::min(la.size(), lb.size());
  for (size_t i = 0; i < common; ++i) {
    // An earlier visited neighbour carries a larger value in the textbook labels.
    if (la[i] != lb[i]) return la[i] < lb[i] ? 1 : -1;
  }
  if (la.size() == lb.size()) return 0;
  return la.size() > lb.size() ? 1 : -1;
}

std::vector<Vertex> SearchState::candidates() const {
  const int n = g_->n();
  std::vector<Vertex> out;
  if (prefix_.empty()) {
    out.resize(n);
    for (int v = 0; v < n; ++v) out[v] = v;
    return out;
  }
  switch (paradigm_) {
    case Paradigm::GS:
      for (int v = 0; v < n; ++v)
        if (pos_[v] < 0 && parent_[v] >= 0) out.push_back(v);
      break;
    case Paradigm::BFS: {
      int best = std::numeric_limits<int>::max();
      for (int v = 0; v < n; ++v) {
        if (pos_[v] >= 0 || parent_[v] < 0) continue;
        const int key = pos_[parent_[v]];
        if (key < best) {
          best = key;
          out.clear();
        }
        if (key == best) out.push_back(v);
      }
      break;
    }
    case Paradigm::LBFS: {
      Vertex best = -1;
      for (int v = 0; v < n; ++v) {
        if (pos_[v] >= 0 || labels_[v].empty()) continue;
        const int cmp = best < 0 ? 1 : compare_labels(v, best);
        if (cmp > 0) {
          best = v;
          out.clear();
        }
        if (cmp >= 0) out.push_back(v);
      }
      break;
    }
  }
  return out;
}

bool SearchState::is_candidate(Vertex v) const {
  if (v < 0 || v >= g_->n() || pos_[v] >= 0) return false;
  const auto c = candidates();
  return std::binary_search(c.begin(), c.end(), v);
}

void SearchState::push(Vertex v) {
  const int p = visited_count();
  pos_[v] = p;
  prefix_.push_back(v);
  if (parent_[v] < 0) {
    --orphans_;  // only the root is visited without a parent
    ++internal_;
  }
  std::vector<Vertex> adopted;
  for (Vertex w : g_->neighbors(v)) {
    if (pos_[w] >= 0) continue;
    if (paradigm_ == Paradigm::LBFS) labels_[w].push_back(p);
    if (parent_[w] < 0) {
      parent_[w] = v;
      adopted.push_back(w);
      --orphans_;
    }
  }
  if (!adopted.empty()) {
    if (child_count_[v] == 0 && p > 0) ++internal_;
    child_count_[v] += static_cast<int>(adopted.size());
  }
  adopted_.push_back(std::move(adopted));
}

void SearchState::pop() {
  const Vertex v = prefix_.back();
  const int p = visited_count() - 1;
  auto adopted = std::move(adopted_.back());
  adopted_.pop_back();
  if (!adopted.empty()) {
    child_count_[v] -= static_cast<int>(adopted.size());
    if (child_count_[v] == 0 && p > 0) --internal_;
    for (Vertex w : adopted) {
      parent_[w] = -1;
      ++orphans_;
    }
  }
  if (paradigm_ == Paradigm::LBFS) {
    for (Vertex w : g_->neighbors(v))
      if (pos_[w] < 0) labels_[w].pop_back();
  }
  if (parent_[v] < 0) {
    ++orphans_;
    --internal_;
  }
  prefix_.pop_back();
  pos_[v] = -1;
}

Ordering run_plus(const Graph& g, Paradigm paradigm, const Ordering& rho) {
  if (rho.size() != g.n()) throw Error(ErrorKind::NotAPermutation, "tie-break ordering has wrong size");
  SearchState state(g, paradigm);
  state.push(rho[0]);
  while (!state.complete()) {
    const auto cand = state.candidates();
    Vertex best = cand.front();
    for (Vertex v : cand)
      if (rho.position(v) < rho.position(best)) best = v;
    state.push(best);
  }
  return Ordering(state.prefix());
}

Ordering complete_search(SearchState& state) {
  while (!state.complete()) state.push(state.candidates().front());
  return Ordering(state.prefix());
}

Ordering complete_from_clique_prefix(const Graph& g, Paradigm paradigm, const std::vector<Vertex>& prefix) {
  const int n = g.n();
  std::vector<bool> used(n, false);
  for (size_t i = 0; i < prefix.size(); ++i) {
    const Vertex v = prefix[i];
    if (v < 0 || v >= n || used[v]) throw Error(ErrorKind::NotAClique, "prefix repeats or leaves the vertex range");
    used[v] = true;
    for (size_t j = 0; j < i; ++j) {
      if (!g.adjacent(v, prefix[j])) {
        throw Error(ErrorKind::NotAClique,
                    "prefix vertices " + std::to_string(prefix[j]) + " and " + std::to_string(v) + " are not adjacent");
      }
    }
  }
  std::vector<Vertex> rho = prefix;
  for (int v = 0; v < n; ++v)
    if (!used[v]) rho.push_back(v);
  if (prefix.empty()) return run_plus(g, paradigm, Ordering(rho));
  Ordering result = run_plus(g, paradigm, Ordering(rho));
  for (size_t i = 0; i < prefix.size(); ++i) {
    if (result[static_cast<int>(i)] != prefix[i]) {
      throw Error(ErrorKind::PrefixNotRealized, "search did not start with the requested clique");
    }
  }
  return result;
}

namespace {

bool enumerate_rec(SearchState& state, const OrderingVisitor& visitor) {
  if (state.complete()) return visitor(state.prefix());
  for (Vertex v : state.candidates()) {
    state.push(v);
    const bool keep_going = enumerate_rec(state, visitor);
    state.pop();
    if (!keep_going) return false;
  }
  return true;
}

}  // namespace

bool enumerate_orderings(const Graph& g, Paradigm paradigm, const OrderingVisitor& visitor) {
  SearchState state(g, paradigm);
  return enumerate_rec(state, visitor);
}

bool validate_ordering(const Graph& g, const Ordering& order, Paradigm paradigm) {
  if (order.size() != g.n()) return false;
  SearchState state(g, paradigm);
  for (int i = 0; i < order.size(); ++i) {
    if (!state.is_candidate(order[i])) return false;
    state.push(order[i]);
  }
  return true;
}

}  // namespace leafsearch
