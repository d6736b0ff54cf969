#include "prodstruct/colouring.h"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <set>

#include "prodstruct/errors.h"
#include "prodstruct/treewidth.h"

namespace prodstruct {

int num_colours(const Colouring& c) {
  return static_cast<int>(std::set<int>(c.begin(), c.end()).size());
}

ProductColouring lift_p_centered(const Graph& g, const HPartition& part, const Layering& l,
                                 int ell, int p, const Colouring& gamma_h) {
  if (p < 1) throw MalformedInput("p must be at least 1");
  if (static_cast<int>(gamma_h.size()) != part.num_parts())
    throw MalformedInput("colouring of H does not match the partition");
  ProductColouring pc;
  pc.triple.assign(g.n(), {0, 0, 0});
  std::map<std::pair<int, int>, std::vector<int>> cells;
  for (int v = 0; v < g.n(); ++v) cells[{l.layer_of[v], part.part_of[v]}].push_back(v);
  for (auto& [key, vs] : cells) {
    if (static_cast<int>(vs.size()) > ell)
      throw SizeLimit("a (layer, part) cell has more than ell vertices");
    std::sort(vs.begin(), vs.end());
    for (std::size_t i = 0; i < vs.size(); ++i)
      pc.triple[vs[i]] = {static_cast<int>(i) + 1, key.first % (p + 1), gamma_h[key.second]};
  }
  std::map<std::array<int, 3>, int> id;
  for (const auto& t : pc.triple) id.emplace(t, 0);
  int k = 0;
  for (auto& [t, i] : id) i = k++;
  pc.flat.resize(g.n());
  for (int v = 0; v < g.n(); ++v) pc.flat[v] = id[pc.triple[v]];
  pc.colours = k;
  pc.cap = 1LL * ell * (p + 1) * num_colours(gamma_h);
  return pc;
}

// ---------------------------------------------------------------------------

namespace {

using Mask = std::uint64_t;

Mask bit(int v) { return Mask{1} << v; }

std::vector<Mask> masks_of(const Graph& g) {
  std::vector<Mask> nb(g.n(), 0);
  for (auto [u, v] : g.edges()) {
    nb[u] |= bit(v);
    nb[v] |= bit(u);
  }
  return nb;
}

std::vector<int> dense(const Colouring& c) {
  std::map<int, int> id;
  for (int x : c) id.emplace(x, 0);
  int k = 0;
  for (auto& [x, i] : id) i = k++;
  std::vector<int> out(c.size());
  for (std::size_t v = 0; v < c.size(); ++v) out[v] = id[c[v]];
  return out;
}

std::vector<int> members(Mask m) {
  std::vector<int> out;
  for (int v = 0; m; ++v, m >>= 1)
    if (m & 1) out.push_back(v);
  return out;
}

/// Colour multiplicities of the current vertex set.
struct Tally {
  const std::vector<int>* col;
  std::vector<int> cnt;
  int distinct = 0, uniques = 0;

  Tally(const std::vector<int>& c, int k) : col(&c), cnt(k, 0) {}
  void add(int v) {
    int k = ++cnt[(*col)[v]];
    if (k == 1) ++distinct, ++uniques;
    else if (k == 2) --uniques;
  }
  void remove(int v) {
    int k = cnt[(*col)[v]]--;
    if (k == 1) --distinct, --uniques;
    else if (k == 2) ++uniques;
  }
  bool bad(int p) const { return distinct <= p && uniques == 0; }
};

// ESU-style enumeration of connected sets whose lowest vertex is root.
struct Expander {
  const std::vector<Mask>& nb;
  Tally tally;
  int p;
  Mask witness = 0;

  bool rec(Mask sub, Mask ext, Mask closed, Mask above) {
    if (tally.bad(p)) {
      witness = sub;
      return true;
    }
    if (tally.distinct > p) return false;  // supersets keep more than p colours
    while (ext) {
      int w = __builtin_ctzll(ext);
      ext &= ext - 1;
      Mask ext2 = ext | (nb[w] & ~closed & above);
      tally.add(w);
      if (rec(sub | bit(w), ext2, closed | nb[w] | bit(w), above)) return true;
      tally.remove(w);
    }
    return false;
  }
};

Mask witness_from_root(const std::vector<Mask>& nb, const std::vector<int>& col, int k, int p,
                       int r) {
  const int n = static_cast<int>(nb.size());
  Mask above = (n == 64 ? ~Mask{0} : (bit(n) - 1)) & ~((bit(r) << 1) - 1);
  Expander ex{nb, Tally(col, k), p};
  ex.tally.add(r);
  ex.rec(bit(r), nb[r] & above, nb[r] | bit(r), above);
  return ex.witness;
}

}  // namespace

PCenteredCheck check_p_centered(const Graph& g, int p, const Colouring& c, int cap, Exec exec) {
  const int n = g.n();
  if (n > cap || n > 63) throw SizeLimit("check_p_centered: graph exceeds the checker cap");
  if (static_cast<int>(c.size()) != n) throw MalformedInput("colouring size mismatch");
  auto nb = masks_of(g);
  auto col = dense(c);
  const int k = num_colours(c);
  std::vector<Mask> found(n, 0);
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 1)
    for (int r = 0; r < n; ++r) found[r] = witness_from_root(nb, col, k, p, r);
  } else {
    for (int r = 0; r < n; ++r) {
      found[r] = witness_from_root(nb, col, k, p, r);
      if (found[r]) break;
    }
  }
  PCenteredCheck out;
  for (int r = 0; r < n; ++r)
    if (found[r]) {
      out.valid = false;
      out.witness = members(found[r]);
      break;
    }
  return out;
}

PCenteredCheck check_p_centered_subsets(const Graph& g, int p, const Colouring& c, int cap) {
  const int n = g.n();
  if (n > cap || n > 30) throw SizeLimit("check_p_centered_subsets: graph exceeds the cap");
  if (static_cast<int>(c.size()) != n) throw MalformedInput("colouring size mismatch");
  auto nb = masks_of(g);
  PCenteredCheck out;
  std::map<int, int> count;
  for (Mask m = 1; m < bit(n); ++m) {
    count.clear();
    for (int v : members(m)) ++count[c[v]];
    if (static_cast<int>(count.size()) > p) continue;
    bool unique = false;
    for (auto& [col, k] : count)
      if (k == 1) unique = true;
    if (unique) continue;
    Mask reach = m & (~m + 1);
    for (;;) {
      Mask next = reach;
      for (int v : members(reach)) next |= nb[v] & m;
      if (next == reach) break;
      reach = next;
    }
    if (reach != m) continue;
    out.valid = false;
    out.witness = members(m);
    return out;
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

// Is there a connected set inside `allowed`, containing v, with <= p colours
// and no unique colour? Include/exclude branching over the frontier.
bool bad_with(const std::vector<Mask>& nb, Tally& t, int p, Mask allowed, Mask set, Mask frontier,
              Mask excluded) {
  if (t.bad(p)) return true;
  if (t.distinct > p || !frontier) return false;
  int w = __builtin_ctzll(frontier);
  t.add(w);
  Mask set2 = set | bit(w);
  Mask f2 = (frontier | (nb[w] & allowed)) & ~set2 & ~excluded;
  bool r = bad_with(nb, t, p, allowed, set2, f2, excluded);
  t.remove(w);
  if (r) return true;
  return bad_with(nb, t, p, allowed, set, frontier & ~bit(w), excluded | bit(w));
}

bool creates_violation(const std::vector<Mask>& nb, const std::vector<int>& col, int k, int p,
                       Mask coloured, int v) {
  Tally t(col, k);
  t.add(v);
  return bad_with(nb, t, p, coloured, bit(v), nb[v] & coloured, 0);
}

struct ExactSearch {
  const std::vector<Mask>& nb;
  const std::vector<int>& order;
  int p, colours;
  std::vector<int> col;

  bool rec(std::size_t i, Mask coloured, int used) {
    if (i == order.size()) return true;
    int v = order[i];
    for (int c = 0; c < std::min(colours, used + 1); ++c) {
      col[v] = c;
      if (creates_violation(nb, col, colours, p, coloured | bit(v), v)) continue;
      if (rec(i + 1, coloured | bit(v), std::max(used, c + 1))) return true;
    }
    col[v] = 0;
    return false;
  }
};

}  // namespace

ChiResult chi_p_small(const Graph& g, int p, ChiMode mode, int cap) {
  const int n = g.n();
  if (p < 1) throw MalformedInput("p must be at least 1");
  if (n > 63) throw SizeLimit("chi_p_small supports at most 63 vertices");
  if (mode == ChiMode::exact && n > cap) throw SizeLimit("chi_p_small: graph exceeds the exact cap");
  ChiResult res;
  if (n == 0) return res;
  auto nb = masks_of(g);
  std::vector<int> order = min_fill_order(g);
  std::reverse(order.begin(), order.end());

  // greedy: smallest colour creating no violation among coloured vertices
  std::vector<int> col(n, 0);
  Mask coloured = 0;
  int used = 0;
  for (int v : order) {
    coloured |= bit(v);
    for (int c = 0;; ++c) {
      col[v] = c;
      if (!creates_violation(nb, col, std::max(used, c + 1), p, coloured, v)) {
        used = std::max(used, c + 1);
        break;
      }
    }
  }
  res.colouring = col;
  res.colours = used;
  if (n <= kDefaultCheckerCap && !check_p_centered(g, p, col, kDefaultCheckerCap).valid)
    throw ConsistencyError("greedy p-centered colouring failed its check");
  if (mode == ChiMode::heuristic) return res;

  for (int c = used - 1; c >= 1; --c) {
    ExactSearch s{nb, order, p, c, std::vector<int>(n, 0)};
    if (!s.rec(0, 0, 0)) break;
    res.colouring = s.col;
    res.colours = num_colours(s.col);
  }
  res.exact = true;
  return res;
}

// ---------------------------------------------------------------------------

NonrepetitiveCheck check_nonrepetitive(const Graph& g, const Colouring& c, int max_half) {
  NonrepetitiveCheck out;
  if (static_cast<int>(c.size()) != g.n()) throw MalformedInput("colouring size mismatch");
  if (max_half < 1) return out;
  std::vector<int> path;
  std::vector<char> on(g.n(), 0);
  auto square = [&]() {
    int h = static_cast<int>(path.size()) / 2;
    for (int i = 0; i < h; ++i)
      if (c[path[i]] != c[path[i + h]]) return false;
    return true;
  };
  // iterative DFS over simple paths with at most 2*max_half vertices
  std::vector<std::size_t> next;
  for (int s = 0; s < g.n(); ++s) {
    path = {s};
    on[s] = 1;
    next = {0};
    while (!path.empty()) {
      int u = path.back();
      std::size_t& i = next.back();
      if (i < g.neighbours(u).size() && static_cast<int>(path.size()) < 2 * max_half) {
        int w = g.neighbours(u)[i++];
        if (on[w]) continue;
        path.push_back(w);
        on[w] = 1;
        next.push_back(0);
        if (path.size() % 2 == 0 && square()) {
          out.valid = false;
          out.witness = path;
          return out;
        }
      } else {
        on[u] = 0;
        path.pop_back();
        next.pop_back();
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

int QueueLayout::num_queues() const {
  int q = 0;
  for (int x : queue_of) q = std::max(q, x + 1);
  return q;
}

QueueCheck check_queue_layout(const Graph& g, const QueueLayout& q) {
  const int n = g.n();
  if (static_cast<int>(q.order.size()) != n) throw MalformedInput("order is not a permutation");
  std::vector<int> pos(n, -1);
  for (int i = 0; i < n; ++i) {
    int v = q.order[i];
    if (v < 0 || v >= n || pos[v] >= 0) throw MalformedInput("order is not a permutation");
    pos[v] = i;
  }
  if (q.queue_of.size() != g.m()) throw MalformedInput("queue assignment is not total on the edges");
  std::map<int, std::vector<std::pair<int, int>>> by_queue;  // (left, right) positions
  for (std::size_t e = 0; e < g.m(); ++e) {
    if (q.queue_of[e] < 0) throw MalformedInput("negative queue index");
    auto [u, v] = g.edges()[e];
    by_queue[q.queue_of[e]].push_back(std::minmax(pos[u], pos[v]));
  }
  QueueCheck out;
  for (auto& [qi, es] : by_queue) {
    std::sort(es.begin(), es.end());
    // outer = edge with the largest right end among strictly smaller lefts
    std::pair<int, int> outer{-1, -1};
    std::size_t i = 0;
    while (i < es.size()) {
      std::size_t j = i;
      while (j < es.size() && es[j].first == es[i].first) {
        if (outer.second > es[j].second) {
          out.valid = false;
          out.witness = {Edge{q.order[outer.first], q.order[outer.second]},
                         Edge{q.order[es[j].first], q.order[es[j].second]}};
          return out;
        }
        ++j;
      }
      for (std::size_t h = i; h < j; ++h)
        if (es[h].second > outer.second) outer = es[h];
      i = j;
    }
  }
  return out;
}

QueueLayout greedy_queue_layout(const Graph& g, const std::vector<int>* order) {
  const int n = g.n();
  QueueLayout q;
  if (order) {
    q.order = *order;
  } else {
    std::vector<char> seen(n, 0);
    for (int s = 0; s < n; ++s) {
      if (seen[s]) continue;
      seen[s] = 1;
      std::deque<int> dq{s};
      while (!dq.empty()) {
        int u = dq.front();
        dq.pop_front();
        q.order.push_back(u);
        for (int w : g.neighbours(u))
          if (!seen[w]) {
            seen[w] = 1;
            dq.push_back(w);
          }
      }
    }
  }
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[q.order[i]] = i;
  std::vector<std::pair<std::pair<int, int>, int>> es;
  for (std::size_t e = 0; e < g.m(); ++e) {
    auto [u, v] = g.edges()[e];
    es.push_back({std::minmax(pos[u], pos[v]), static_cast<int>(e)});
  }
  std::sort(es.begin(), es.end());
  q.queue_of.assign(g.m(), -1);
  std::vector<std::vector<std::pair<int, int>>> queues;
  auto nested = [](std::pair<int, int> a, std::pair<int, int> b) {
    return (a.first < b.first && b.second < a.second) || (b.first < a.first && a.second < b.second);
  };
  for (auto& [lr, e] : es) {
    std::size_t qi = 0;
    for (; qi < queues.size(); ++qi) {
      bool ok = true;
      for (auto& o : queues[qi])
        if (nested(o, lr)) {
          ok = false;
          break;
        }
      if (ok) break;
    }
    if (qi == queues.size()) queues.emplace_back();
    queues[qi].push_back(lr);
    q.queue_of[e] = static_cast<int>(qi);
  }
  return q;
}

}  // namespace prodstruct
