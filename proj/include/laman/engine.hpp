#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <limits>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "laman/bigint.hpp"
#include "laman/bigraph.hpp"
#include "laman/canonical.hpp"
#include "laman/errors.hpp"
#include "laman/graph.hpp"
#include "laman/sparsity.hpp"

namespace laman {

/// Overflow-checked nonnegative 64-bit realization count.
class LamanCount {
 public:
  LamanCount(std::uint64_t v = 0) : v_(v) {}

  std::uint64_t value() const noexcept { return v_; }
  bool is_zero() const noexcept { return v_ == 0; }

  LamanCount& operator+=(const LamanCount& o) {
    if (__builtin_add_overflow(v_, o.v_, &v_)) throw overflow_error("realization count overflows 64 bits");
    return *this;
  }

  friend LamanCount operator+(LamanCount a, const LamanCount& b) { return a += b; }

  friend LamanCount operator*(const LamanCount& a, const LamanCount& b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a.v_, b.v_, &r)) throw overflow_error("realization count overflows 64 bits");
    return LamanCount(r);
  }

  friend bool operator==(const LamanCount& a, const LamanCount& b) { return a.v_ == b.v_; }
  friend bool operator!=(const LamanCount& a, const LamanCount& b) { return a.v_ != b.v_; }

  std::string to_string() const { return std::to_string(v_); }

 private:
  std::uint64_t v_;
};

struct ComputationStats {
  std::atomic<std::uint64_t> nodes_visited{0};
  std::atomic<std::uint64_t> memo_hits{0};
  std::atomic<std::uint64_t> splits_examined{0};
  std::atomic<int> max_depth{0};
  double seconds = 0;

  void note_depth(int d) {
    int cur = max_depth.load(std::memory_order_relaxed);
    while (d > cur && !max_depth.compare_exchange_weak(cur, d, std::memory_order_relaxed)) {
    }
  }
};

enum class BiedgeStrategy { auto_estimate, first_id };

struct EngineOptions {
  BiedgeStrategy strategy = BiedgeStrategy::auto_estimate;
  bool use_memo = true;
  double timeout_seconds = 0;           // 0 disables the cooperative timeout
  std::optional<EdgeId> root_biedge;    // force the top-level biedge choice
  // Fork the root recursion node across this many threads. Results stay
  // deterministic; nodes_visited/memo_hits may vary run to run because
  // threads can race to compute the same memoized subtree.
  int tree_jobs = 1;
};

namespace detail {

inline std::string base64_encode(const std::string& in) {
  static const char* tab = "ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789+/";
  std::string out;
  out.reserve((in.size() + 2) / 3 * 4);
  std::size_t i = 0;
  while (i + 3 <= in.size()) {
    std::uint32_t x = (std::uint8_t(in[i]) << 16) | (std::uint8_t(in[i + 1]) << 8) | std::uint8_t(in[i + 2]);
    out.push_back(tab[(x >> 18) & 63]);
    out.push_back(tab[(x >> 12) & 63]);
    out.push_back(tab[(x >> 6) & 63]);
    out.push_back(tab[x & 63]);
    i += 3;
  }
  if (i + 1 == in.size()) {
    std::uint32_t x = std::uint8_t(in[i]) << 16;
    out.push_back(tab[(x >> 18) & 63]);
    out.push_back(tab[(x >> 12) & 63]);
    out.push_back('=');
    out.push_back('=');
  } else if (i + 2 == in.size()) {
    std::uint32_t x = (std::uint8_t(in[i]) << 16) | (std::uint8_t(in[i + 1]) << 8);
    out.push_back(tab[(x >> 18) & 63]);
    out.push_back(tab[(x >> 12) & 63]);
    out.push_back(tab[(x >> 6) & 63]);
    out.push_back('=');
  }
  return out;
}

inline std::optional<std::string> base64_decode(const std::string& in) {
  if (in.size() % 4 != 0) return std::nullopt;
  auto val = [](char c) -> int {
    if (c >= 'A' && c <= 'Z') return c - 'A';
    if (c >= 'a' && c <= 'z') return c - 'a' + 26;
    if (c >= '0' && c <= '9') return c - '0' + 52;
    if (c == '+') return 62;
    if (c == '/') return 63;
    return -1;
  };
  std::string out;
  out.reserve(in.size() / 4 * 3);
  for (std::size_t i = 0; i < in.size(); i += 4) {
    int pad = 0;
    std::uint32_t x = 0;
    for (int j = 0; j < 4; ++j) {
      char c = in[i + j];
      if (c == '=') {
        if (i + 4 != in.size() || j < 2) return std::nullopt;
        ++pad;
        x <<= 6;
        continue;
      }
      if (pad > 0) return std::nullopt;
      int v = val(c);
      if (v < 0) return std::nullopt;
      x = (x << 6) | std::uint32_t(v);
    }
    out.push_back(char((x >> 16) & 0xff));
    if (pad < 2) out.push_back(char((x >> 8) & 0xff));
    if (pad < 1) out.push_back(char(x & 0xff));
  }
  return out;
}

template <class Count>
std::string count_to_decimal(const Count& c) {
  return c.to_string();
}

inline std::optional<LamanCount> count_from_decimal(const std::string& s, LamanCount*) {
  if (s.empty() || s.size() > 20) return std::nullopt;
  std::uint64_t v = 0;
  for (char ch : s) {
    if (ch < '0' || ch > '9') return std::nullopt;
    if (__builtin_mul_overflow(v, std::uint64_t(10), &v)) return std::nullopt;
    if (__builtin_add_overflow(v, std::uint64_t(ch - '0'), &v)) return std::nullopt;
  }
  return LamanCount(v);
}

inline std::optional<BigUint> count_from_decimal(const std::string& s, BigUint*) {
  try {
    return BigUint::from_string(s);
  } catch (const parse_error&) {
    return std::nullopt;
  }
}

}  // namespace detail

struct CacheLoadReport {
  std::size_t loaded = 0;
  std::size_t skipped = 0;
  bool file_found = false;
};

/// Process-wide memo table: canonical state key to realization count.
/// Sharded so concurrent workers can share it; inserts are last-writer-wins,
/// which is harmless because values are deterministic.
template <class Count>
class MemoTable {
 public:
  std::optional<Count> get(const std::string& key) const {
    Shard& s = shard(key);
    std::lock_guard<std::mutex> lock(s.mu);
    auto it = s.map.find(key);
    if (it == s.map.end()) return std::nullopt;
    return it->second;
  }

  void put(const std::string& key, const Count& value) {
    Shard& s = shard(key);
    std::lock_guard<std::mutex> lock(s.mu);
    s.map[key] = value;
  }

  std::size_t size() const {
    std::size_t total = 0;
    for (const Shard& s : shards_) {
      std::lock_guard<std::mutex> lock(s.mu);
      total += s.map.size();
    }
    return total;
  }

  /// Cache file: a version header line, then one "base64(key) TAB decimal
  /// count" record per line. Unreadable lines are skipped, not fatal.
  CacheLoadReport load_file(const std::string& path) {
    CacheLoadReport report;
    std::ifstream in(path, std::ios::binary);
    if (!in) return report;
    report.file_found = true;
    std::string line;
    if (!std::getline(in, line) || line != cache_header()) {
      ++report.skipped;
      return report;
    }
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      auto tab = line.find('\t');
      if (tab == std::string::npos) {
        ++report.skipped;
        continue;
      }
      auto key = detail::base64_decode(line.substr(0, tab));
      auto value = detail::count_from_decimal(line.substr(tab + 1), static_cast<Count*>(nullptr));
      if (!key || !value) {
        ++report.skipped;
        continue;
      }
      put(*key, *value);
      ++report.loaded;
    }
    return report;
  }

  bool save_file(const std::string& path) const {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) return false;
    out << cache_header() << '\n';
    for (const Shard& s : shards_) {
      std::lock_guard<std::mutex> lock(s.mu);
      for (const auto& [key, value] : s.map) {
        out << detail::base64_encode(key) << '\t' << detail::count_to_decimal(value) << '\n';
      }
    }
    return static_cast<bool>(out);
  }

  static const char* cache_header() { return "laman-memo-cache 1"; }

 private:
  struct Shard {
    mutable std::mutex mu;
    std::unordered_map<std::string, Count> map;
  };

  Shard& shard(const std::string& key) const {
    return shards_[std::hash<std::string>{}(key) & (kShards - 1)];
  }

  static constexpr std::size_t kShards = 64;
  mutable std::array<Shard, kShards> shards_;
};

namespace detail {

/// Engine-internal bigraph state: dense vertex ids per side, biedges indexed
/// by position. Isolated vertices are dropped on construction, so states that
/// differ only by them share a memo entry.
struct BG {
  int ng = 0;
  int nh = 0;
  struct BE {
    std::int16_t ga, gb, ha, hb;
  };
  std::vector<BE> e;
};

class FlatUF {
 public:
  explicit FlatUF(int n) : parent_(n) {
    for (int i = 0; i < n; ++i) parent_[i] = i;
  }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    parent_[y] = x;
    return true;
  }

 private:
  std::vector<int> parent_;
};

inline int bg_dim_g(const BG& b) {
  FlatUF uf(b.ng);
  int rank = 0;
  for (const auto& be : b.e) rank += uf.unite(be.ga, be.gb) ? 1 : 0;
  return rank;
}

inline int bg_dim_h(const BG& b) {
  FlatUF uf(b.nh);
  int rank = 0;
  for (const auto& be : b.e) rank += uf.unite(be.ha, be.hb) ? 1 : 0;
  return rank;
}

inline bool bg_pseudo_laman(const BG& b) {
  return bg_dim_g(b) + bg_dim_h(b) == static_cast<int>(b.e.size()) + 1;
}

inline bool bg_has_loop(const BG& b) {
  for (const auto& be : b.e) {
    if (be.ga == be.gb || be.ha == be.hb) return true;
  }
  return false;
}

/// Left quotient by the masked biedges: contract on the g-side, delete on the
/// h-side, drop isolated vertices, renumber densely.
inline BG bg_left_quot(const BG& b, std::uint64_t mask) {
  FlatUF uf(b.ng);
  for (std::size_t i = 0; i < b.e.size(); ++i) {
    if (mask >> i & 1) uf.unite(b.e[i].ga, b.e[i].gb);
  }
  BG out;
  std::vector<int> gmap(b.ng, -1), hmap(b.nh, -1);
  out.e.reserve(b.e.size());
  for (std::size_t i = 0; i < b.e.size(); ++i) {
    if (mask >> i & 1) continue;
    int ga = uf.find(b.e[i].ga), gb = uf.find(b.e[i].gb);
    if (gmap[ga] < 0) gmap[ga] = out.ng++;
    if (gmap[gb] < 0) gmap[gb] = out.ng++;
    if (hmap[b.e[i].ha] < 0) hmap[b.e[i].ha] = out.nh++;
    if (hmap[b.e[i].hb] < 0) hmap[b.e[i].hb] = out.nh++;
    out.e.push_back({static_cast<std::int16_t>(gmap[ga]), static_cast<std::int16_t>(gmap[gb]),
                     static_cast<std::int16_t>(hmap[b.e[i].ha]), static_cast<std::int16_t>(hmap[b.e[i].hb])});
  }
  return out;
}

inline BG bg_swap(const BG& b) {
  BG out;
  out.ng = b.nh;
  out.nh = b.ng;
  out.e.reserve(b.e.size());
  for (const auto& be : b.e) out.e.push_back({be.ha, be.hb, be.ga, be.gb});
  return out;
}

inline BG bg_right_quot(const BG& b, std::uint64_t mask) {
  return bg_swap(bg_left_quot(bg_swap(b), mask));
}

inline ColoredGraph bg_incidence(const BG& b) {
  ColoredGraph cg;
  for (int i = 0; i < b.ng; ++i) cg.add_node({0});
  for (int i = 0; i < b.nh; ++i) cg.add_node({1});
  std::map<std::array<int, 4>, int> twins;
  for (const auto& be : b.e) {
    ++twins[{std::min(be.ga, be.gb), std::max(be.ga, be.gb), std::min(be.ha, be.hb),
             std::max(be.ha, be.hb)}];
  }
  for (const auto& [ends, mult] : twins) {
    int node = cg.n;
    cg.add_node({2, mult, ends[0] == ends[1] ? 1 : 0, ends[2] == ends[3] ? 1 : 0});
    cg.add_edge(node, ends[0]);
    if (ends[1] != ends[0]) cg.add_edge(node, ends[1]);
    cg.add_edge(node, b.ng + ends[2]);
    if (ends[3] != ends[2]) cg.add_edge(node, b.ng + ends[3]);
  }
  return cg;
}

/// Isomorphism-invariant per-side summary used to orient a state before
/// canonicalization, so most memo keys need a single certificate.
inline std::vector<std::int64_t> bg_side_profile(const BG& b, bool g_side) {
  int n = g_side ? b.ng : b.nh;
  std::vector<std::pair<int, int>> deg(n, {0, 0});  // (degree with loops twice, loop count)
  for (const auto& be : b.e) {
    int a = g_side ? be.ga : be.ha;
    int c = g_side ? be.gb : be.hb;
    deg[a].first += 1;
    deg[c].first += 1;
    if (a == c) deg[a].second += 1;
  }
  std::sort(deg.begin(), deg.end());
  std::vector<std::int64_t> out;
  out.reserve(1 + 2 * n);
  out.push_back(n);
  for (auto [d, l] : deg) {
    out.push_back(d);
    out.push_back(l);
  }
  return out;
}

/// Memo key: canonical certificate, taken over both side orders since
/// exchanging the sides of a bigraph leaves its Laman number unchanged.
inline std::string bg_memo_key(const BG& b) {
  auto pg = bg_side_profile(b, true);
  auto ph = bg_side_profile(b, false);
  if (pg < ph) return colored_certificate(bg_incidence(b));
  if (ph < pg) return colored_certificate(bg_incidence(bg_swap(b)));
  std::string a = colored_certificate(bg_incidence(b));
  std::string s = colored_certificate(bg_incidence(bg_swap(b)));
  return a < s ? a : s;
}

/// Shortest alternative path between the endpoints of biedge `skip` on one
/// side, i.e. the smallest number of other biedges whose contraction can
/// reconnect them; -1 when the biedge is a bridge on that side.
inline int bg_reconnect_distance(const BG& b, std::size_t skip, bool g_side) {
  int n = g_side ? b.ng : b.nh;
  int from = g_side ? b.e[skip].ga : b.e[skip].ha;
  int to = g_side ? b.e[skip].gb : b.e[skip].hb;
  if (from == to) return 0;
  std::vector<std::vector<int>> adj(n);
  for (std::size_t i = 0; i < b.e.size(); ++i) {
    if (i == skip) continue;
    int a = g_side ? b.e[i].ga : b.e[i].ha;
    int c = g_side ? b.e[i].gb : b.e[i].hb;
    if (a != c) {
      adj[a].push_back(c);
      adj[c].push_back(a);
    }
  }
  std::vector<int> dist(n, -1);
  dist[from] = 0;
  std::vector<int> queue{from};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    int v = queue[head];
    if (v == to) return dist[v];
    for (int w : adj[v]) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return -1;
}

/// Picks the recursion biedge. The estimate favors biedges whose endpoints
/// are hard (or impossible) to reconnect on either side: every valid split
/// must reconnect them on both sides, so a bridge admits no splits at all and
/// long detours admit few.
inline int bg_choose_index(const BG& b, BiedgeStrategy strategy) {
  if (strategy == BiedgeStrategy::first_id || b.e.size() == 1) return 0;
  int best = 0;
  long best_score = -1;
  for (std::size_t i = 0; i < b.e.size(); ++i) {
    int dg = bg_reconnect_distance(b, i, true);
    int dh = bg_reconnect_distance(b, i, false);
    long score;
    if (dg < 0 || dh < 0) {
      score = std::numeric_limits<long>::max();  // bridge: zero surviving splits
    } else {
      score = dg + dh;
    }
    if (score > best_score) {
      best_score = score;
      best = static_cast<int>(i);
      if (score == std::numeric_limits<long>::max()) break;
    }
  }
  return best;
}

/// Enumerates all valid split pairs around biedge `ebar`.
///
/// Each other biedge is assigned to the M side (contracted in G) or the N
/// side (contracted in H). Writing M' and N' for the assigned sets, a
/// complete assignment is a valid split exactly when
///   - ebar's endpoints are reconnected by M' in G and by N' in H, and
///   - phi := dim(G) - rank_G(M') - 1 - (|N'| - rank_H(N')) reaches 0.
/// phi never increases as edges are assigned (an M-edge that merges two
/// G-classes or an N-edge that closes an H-cycle each lower it by one), so a
/// branch dies as soon as phi exceeds the number of unassigned edges, and at
/// phi = 0 every assignment that would lower it further can be skipped.
template <class Yield>
void bg_for_each_split(const BG& b, int ebar, Yield&& yield) {
  const int m = static_cast<int>(b.e.size());
  if (m - 1 < 2) return;  // need at least one edge on each side besides ebar

  std::vector<int> order;
  order.reserve(m - 1);
  for (int i = 0; i < m; ++i) {
    if (i != ebar) order.push_back(i);
  }

  UnionFind uf_g(b.ng);
  UnionFind uf_h(b.nh);
  const int dim_g = bg_dim_g(b);

  std::uint64_t mask_m = std::uint64_t(1) << ebar;
  const std::uint64_t mask_all = (m == 64) ? ~std::uint64_t(0) : ((std::uint64_t(1) << m) - 1);

  // phi, cnt_m, cnt_n evolve along the DFS; recursion depth is |order|.
  auto walk = [&](auto&& self, std::size_t pos, int phi, int cnt_m, int cnt_n) -> void {
    int remaining = static_cast<int>(order.size() - pos);
    if (phi > remaining) return;
    if (pos == order.size()) {
      if (phi != 0 || cnt_m == 0 || cnt_n == 0) return;
      if (!uf_g.connected(b.e[ebar].ga, b.e[ebar].gb)) return;
      if (!uf_h.connected(b.e[ebar].ha, b.e[ebar].hb)) return;
      yield(mask_m, (mask_all & ~mask_m) | (std::uint64_t(1) << ebar));
      return;
    }
    const auto& be = b.e[order[pos]];

    // Assign to M: contributes rank in G when it merges two classes.
    bool merged = uf_g.unite(be.ga, be.gb);
    if (!merged || phi > 0) {
      mask_m |= std::uint64_t(1) << order[pos];
      self(self, pos + 1, merged ? phi - 1 : phi, cnt_m + 1, cnt_n);
      mask_m &= ~(std::uint64_t(1) << order[pos]);
    }
    if (merged) uf_g.undo();

    // Assign to N: contributes nullity in H when it closes a cycle.
    bool h_merged = uf_h.unite(be.ha, be.hb);
    if (h_merged || phi > 0) {
      self(self, pos + 1, h_merged ? phi : phi - 1, cnt_m, cnt_n + 1);
    }
    if (h_merged) uf_h.undo();
  };

  walk(walk, 0, dim_g - 1, 0, 0);
}

}  // namespace detail

/// Deterministic biedge selection: `first_id` takes the smallest id, the
/// default estimates which biedge admits the fewest splits. The computed
/// Laman number does not depend on the choice.
inline EdgeId choose_biedge(const Bigraph& b, BiedgeStrategy strategy = BiedgeStrategy::auto_estimate);

namespace detail {

struct RootState {
  BG bg;
  std::vector<EdgeId> ids;  // biedge index -> public edge id
};

inline RootState bg_from_bigraph(const Bigraph& b) {
  if (b.biedge_count() > 64) throw computation_error("bigraphs with more than 64 biedges are not supported");
  RootState root;
  root.ids = b.biedges();

  auto dense = [](const Multigraph& side) {
    std::unordered_map<Vertex, int> map;
    int next = 0;
    for (const MultiEdge& e : side.edges()) {
      if (map.emplace(e.a, next).second) ++next;
      if (map.emplace(e.b, next).second) ++next;
    }
    return std::pair{map, next};
  };
  auto [gmap, ng] = dense(b.g());
  auto [hmap, nh] = dense(b.h());
  root.bg.ng = ng;
  root.bg.nh = nh;

  std::unordered_map<EdgeId, std::pair<int, int>> g_ends, h_ends;
  for (const MultiEdge& e : b.g().edges()) g_ends[e.id] = {gmap.at(e.a), gmap.at(e.b)};
  for (const MultiEdge& e : b.h().edges()) h_ends[e.id] = {hmap.at(e.a), hmap.at(e.b)};
  root.bg.e.reserve(root.ids.size());
  for (EdgeId id : root.ids) {
    auto [ga, gb] = g_ends.at(id);
    auto [ha, hb] = h_ends.at(id);
    root.bg.e.push_back({static_cast<std::int16_t>(ga), static_cast<std::int16_t>(gb),
                         static_cast<std::int16_t>(ha), static_cast<std::int16_t>(hb)});
  }
  return root;
}

template <class Count>
struct EngineCtx {
  MemoTable<Count>* memo;
  ComputationStats* stats;
  const EngineOptions* opts;
  std::optional<std::chrono::steady_clock::time_point> deadline;
  int root_index = -1;
};

template <class Count>
Count lam_rec(const BG& b, EngineCtx<Count>& ctx, int depth) {
  ctx.stats->nodes_visited.fetch_add(1, std::memory_order_relaxed);
  ctx.stats->note_depth(depth);
  if (ctx.deadline && std::chrono::steady_clock::now() > *ctx.deadline) {
    throw timeout_error("laman computation exceeded its time budget");
  }

  if (!bg_pseudo_laman(b)) return Count(0);
  if (bg_has_loop(b)) return Count(0);
  if (b.e.size() == 1) return Count(1);

  std::string key;
  if (ctx.opts->use_memo) {
    key = bg_memo_key(b);
    if (auto hit = ctx.memo->get(key)) {
      ctx.stats->memo_hits.fetch_add(1, std::memory_order_relaxed);
      return *hit;
    }
  }

  int ebar = (depth == 0 && ctx.root_index >= 0) ? ctx.root_index
                                                 : bg_choose_index(b, ctx.opts->strategy);
  std::uint64_t ebit = std::uint64_t(1) << ebar;

  if (depth == 0 && ctx.opts->tree_jobs > 1) {
    // Mask pair conventions: (m, 0) is the plain left quotient, (0, n) the
    // plain right quotient, anything else a split product.
    std::vector<std::pair<std::uint64_t, std::uint64_t>> parts{{ebit, 0}, {0, ebit}};
    bg_for_each_split(b, ebar, [&](std::uint64_t mask_m, std::uint64_t mask_n) {
      parts.emplace_back(mask_m, mask_n);
    });
    ctx.stats->splits_examined.fetch_add(parts.size() - 2, std::memory_order_relaxed);

    std::atomic<std::size_t> next{0};
    std::mutex sum_mutex;
    Count total(0);
    std::exception_ptr fail;
    auto run = [&] {
      try {
        for (;;) {
          std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
          if (i >= parts.size()) return;
          auto [mask_m, mask_n] = parts[i];
          Count part(0);
          if (mask_n == 0) {
            part = lam_rec(bg_left_quot(b, mask_m), ctx, 1);
          } else if (mask_m == 0) {
            part = lam_rec(bg_right_quot(b, mask_n), ctx, 1);
          } else {
            Count left = lam_rec(bg_left_quot(b, mask_m), ctx, 1);
            if (!left.is_zero()) part = left * lam_rec(bg_right_quot(b, mask_n), ctx, 1);
          }
          if (!part.is_zero()) {
            std::lock_guard<std::mutex> lock(sum_mutex);
            total += part;
          }
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(sum_mutex);
        if (!fail) fail = std::current_exception();
        next.store(parts.size(), std::memory_order_relaxed);
      }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < ctx.opts->tree_jobs && static_cast<std::size_t>(t) < parts.size(); ++t) {
      pool.emplace_back(run);
    }
    run();
    for (auto& th : pool) th.join();
    if (fail) std::rethrow_exception(fail);
    if (ctx.opts->use_memo) ctx.memo->put(key, total);
    return total;
  }

  Count total = lam_rec(bg_left_quot(b, ebit), ctx, depth + 1);
  total += lam_rec(bg_right_quot(b, ebit), ctx, depth + 1);
  bg_for_each_split(b, ebar, [&](std::uint64_t mask_m, std::uint64_t mask_n) {
    ctx.stats->splits_examined.fetch_add(1, std::memory_order_relaxed);
    Count left = lam_rec(bg_left_quot(b, mask_m), ctx, depth + 1);
    if (!left.is_zero()) {
      Count right = lam_rec(bg_right_quot(b, mask_n), ctx, depth + 1);
      total += left * right;
    }
  });

  if (ctx.opts->use_memo) ctx.memo->put(key, total);
  return total;
}

template <class Count>
Count lam_bigraph_impl(const Bigraph& b, MemoTable<Count>& memo, ComputationStats& stats,
                       const EngineOptions& opts) {
  RootState root = bg_from_bigraph(b);
  EngineCtx<Count> ctx{&memo, &stats, &opts, std::nullopt, -1};
  if (opts.timeout_seconds > 0) {
    ctx.deadline = std::chrono::steady_clock::now() +
                   std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                       std::chrono::duration<double>(opts.timeout_seconds));
  }
  if (opts.root_biedge) {
    auto it = std::find(root.ids.begin(), root.ids.end(), *opts.root_biedge);
    if (it == root.ids.end()) throw invalid_input_error("forced root biedge is not a biedge");
    ctx.root_index = static_cast<int>(it - root.ids.begin());
  }
  auto start = std::chrono::steady_clock::now();
  Count result = lam_rec(root.bg, ctx, 0);
  stats.seconds += std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace detail

inline EdgeId choose_biedge(const Bigraph& b, BiedgeStrategy strategy) {
  if (b.biedge_count() < 1) throw invalid_input_error("choose_biedge needs at least one biedge");
  detail::RootState root = detail::bg_from_bigraph(b);
  return root.ids[detail::bg_choose_index(root.bg, strategy)];
}

/// All split pairs (M, N) around `ebar`: M and N cover the biedges, meet
/// exactly in ebar, have at least two edges each, and both quotients are
/// pseudo-Laman. Deterministic order; (M, N) and (N, M) are distinct pairs.
inline std::vector<SplitPair> enumerate_splits(const Bigraph& b, EdgeId ebar) {
  if (!is_pseudo_laman(b)) throw invalid_input_error("enumerate_splits requires a pseudo-Laman bigraph");
  detail::RootState root = detail::bg_from_bigraph(b);
  auto it = std::find(root.ids.begin(), root.ids.end(), ebar);
  if (it == root.ids.end()) throw invalid_input_error("chosen biedge is not in the bigraph");
  int ebar_index = static_cast<int>(it - root.ids.begin());

  std::vector<SplitPair> out;
  detail::bg_for_each_split(root.bg, ebar_index, [&](std::uint64_t mask_m, std::uint64_t mask_n) {
    std::vector<EdgeId> m_ids, n_ids;
    for (std::size_t i = 0; i < root.ids.size(); ++i) {
      if (mask_m >> i & 1) m_ids.push_back(root.ids[i]);
      if (mask_n >> i & 1) n_ids.push_back(root.ids[i]);
    }
    out.push_back({EdgeSubset(std::move(m_ids)), EdgeSubset(std::move(n_ids))});
  });
  return out;
}

/// Laman number of a bigraph by the quotient recursion: 0 for non-pseudo-
/// Laman states, 0 on a self-loop, 1 on a single shared edge, otherwise the
/// two single-edge quotients plus the sum over split products.
inline LamanCount lam_bigraph(const Bigraph& b, MemoTable<LamanCount>& memo,
                              ComputationStats& stats, const EngineOptions& opts = {}) {
  return detail::lam_bigraph_impl(b, memo, stats, opts);
}

/// Arbitrary-precision variant behind the same recursion.
inline BigUint lam_bigraph_big(const Bigraph& b, MemoTable<BigUint>& memo,
                               ComputationStats& stats, const EngineOptions& opts = {}) {
  return detail::lam_bigraph_impl(b, memo, stats, opts);
}

inline LamanCount laman_number(const SimpleGraph& g, MemoTable<LamanCount>& memo,
                               ComputationStats& stats, const EngineOptions& opts = {}) {
  if (!is_laman(g)) {
    throw invalid_input_error("laman_number requires a Laman graph; input is " +
                              to_string(laman_defect(g)));
  }
  return lam_bigraph(bigraph_of(g), memo, stats, opts);
}

/// Number of complex-plane realizations of a Laman graph, up to direct
/// isometries. Convenience overload with a private memo table.
inline LamanCount laman_number(const SimpleGraph& g) {
  MemoTable<LamanCount> memo;
  ComputationStats stats;
  return laman_number(g, memo, stats);
}

}  // namespace laman
