#include "hallq/tame_type.hpp"

#include <algorithm>
#include <map>

#include "hallq/errors.hpp"

namespace hallq {

std::string TameType::name() const {
  switch (family) {
    case TameFamily::A:
      return "A~(" + std::to_string(params[0]) + "," + std::to_string(params[1]) + ")";
    case TameFamily::D:
      return "D~" + std::to_string(params[0]);
    case TameFamily::E6:
      return "E~6";
    case TameFamily::E7:
      return "E~7";
    case TameFamily::E8:
      return "E~8";
  }
  return "?";
}

namespace {

// Arm from a branch vertex: the path through degree-2 vertices to a leaf.
std::vector<int> arm(const std::vector<std::vector<int>>& adj, int from, int first) {
  std::vector<int> path{first};
  int prev = from, cur = first;
  while (adj[cur].size() == 2) {
    int nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
    prev = cur;
    cur = nxt;
    path.push_back(cur);
  }
  if (adj[cur].size() != 1) return {};
  return path;
}

void finish(TameType& t, const Quiver& Q) {
  for (int r : t.periods)
    if (r > 1) t.l++;
  t.periods.erase(std::remove(t.periods.begin(), t.periods.end(), 1), t.periods.end());
  std::sort(t.periods.begin(), t.periods.end());
  int n = Q.num_vertices();
  t.extending_vertex = -1;
  for (int i = 0; i < n && t.extending_vertex < 0; ++i)
    if (t.delta[i] == 1) t.extending_vertex = i;
  // delta spans the radical of the symmetric form.
  for (int i = 0; i < n; ++i)
    if (Q.symmetric_form(t.delta, DimVector::unit(n, i)) != 0)
      throw TheoryViolation("tame table delta is not in the radical for " + t.name());
  int s = 0;
  for (int r : t.periods) s += r - 1;
  if (s != n - 2) throw TheoryViolation("tube periods of " + t.name() + " violate sum(r_i - 1) = |I| - 2");
}

}  // namespace

std::optional<TameType> recognize_tame(const Quiver& Q) {
  int n = Q.num_vertices();
  if (n == 0) return std::nullopt;
  if (!Q.connected()) throw InputError("tame recognition needs a connected quiver");
  auto adj = Q.adjacency();
  int m = Q.num_arrows();
  TameType t;
  t.delta = DimVector::zero(n);
  t.relabel.assign(n, -1);

  if (m == n) {
    // A cycle: every vertex has degree 2 (the Kronecker quiver is the 2-cycle).
    for (int i = 0; i < n; ++i)
      if (adj[i].size() != 2) return std::nullopt;
    // Walk the cycle along arrows, counting orientation.
    std::vector<char> used(m, 0);
    int cur = 0, p = 0, qq = 0;
    for (int step = 0; step < n; ++step) {
      t.relabel[cur] = step;
      int pick = -1;
      for (int r = 0; r < m && pick < 0; ++r)
        if (!used[r] && (Q.arrows()[r].src == cur || Q.arrows()[r].tgt == cur)) pick = r;
      if (pick < 0) return std::nullopt;
      used[pick] = 1;
      const auto& a = Q.arrows()[pick];
      if (a.src == cur) {
        ++p;
        cur = a.tgt;
      } else {
        ++qq;
        cur = a.src;
      }
    }
    if (cur != 0) return std::nullopt;
    t.family = TameFamily::A;
    t.params = {std::max(p, qq), std::min(p, qq)};
    t.periods = {t.params[0], t.params[1]};
    for (int i = 0; i < n; ++i) t.delta[i] = 1;
    finish(t, Q);
    return t;
  }
  if (m != n - 1) return std::nullopt;
  // Trees: no multiple edges.
  for (int i = 0; i < n; ++i) {
    auto a = adj[i];
    std::sort(a.begin(), a.end());
    if (std::adjacent_find(a.begin(), a.end()) != a.end()) return std::nullopt;
  }
  std::vector<int> branch;
  for (int i = 0; i < n; ++i) {
    if (adj[i].size() > 4) return std::nullopt;
    if (adj[i].size() >= 3) branch.push_back(i);
  }
  if (branch.size() == 1 && adj[branch[0]].size() == 4) {
    int c = branch[0];
    if (n != 5) return std::nullopt;
    t.family = TameFamily::D;
    t.params = {4};
    t.periods = {2, 2, 2};
    t.relabel[c] = 0;
    t.delta[c] = 2;
    int k = 1;
    for (int w : adj[c]) {
      t.delta[w] = 1;
      t.relabel[w] = k++;
    }
    finish(t, Q);
    return t;
  }
  if (branch.size() == 2) {
    // D~_{n-1}: two branch points of degree 3, each with two leaf neighbours.
    for (int b : branch) {
      if (adj[b].size() != 3) return std::nullopt;
      int leaves = 0;
      for (int w : adj[b]) leaves += adj[w].size() == 1;
      if (leaves != 2) return std::nullopt;
    }
    t.family = TameFamily::D;
    t.params = {n - 1};
    t.periods = {2, 2, n - 3};
    int k = 0;
    for (int i = 0; i < n; ++i) {
      t.delta[i] = adj[i].size() == 1 ? 1 : 2;
    }
    for (int b : branch) t.relabel[b] = k++;
    for (int i = 0; i < n; ++i)
      if (t.relabel[i] < 0) t.relabel[i] = k++;
    finish(t, Q);
    return t;
  }
  if (branch.size() != 1 || adj[branch[0]].size() != 3) return std::nullopt;
  int c = branch[0];
  std::vector<std::vector<int>> arms;
  for (int w : adj[c]) {
    auto a = arm(adj, c, w);
    if (a.empty()) return std::nullopt;
    arms.push_back(a);
  }
  std::sort(arms.begin(), arms.end(), [](const auto& x, const auto& y) { return x.size() < y.size(); });
  std::vector<int> len{static_cast<int>(arms[0].size()), static_cast<int>(arms[1].size()),
                       static_cast<int>(arms[2].size())};
  int center;
  if (len == std::vector<int>{2, 2, 2}) {
    t.family = TameFamily::E6;
    t.periods = {2, 3, 3};
    center = 3;
  } else if (len == std::vector<int>{1, 3, 3}) {
    t.family = TameFamily::E7;
    t.periods = {2, 3, 4};
    center = 4;
  } else if (len == std::vector<int>{1, 2, 5}) {
    t.family = TameFamily::E8;
    t.periods = {2, 3, 5};
    center = 6;
  } else {
    return std::nullopt;
  }
  // Along an arm of length L the entries drop linearly from the centre to
  // center / (L + 1) at the leaf.
  t.delta[c] = center;
  t.relabel[c] = 0;
  int k = 1;
  for (const auto& a : arms) {
    int L = static_cast<int>(a.size());
    for (int j = 0; j < L; ++j) {
      t.delta[a[j]] = center * (L - j) / (L + 1);
      t.relabel[a[j]] = k++;
    }
  }
  finish(t, Q);
  return t;
}

}  // namespace hallq
