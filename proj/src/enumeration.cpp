#include "tdp/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <numeric>
#include <thread>

namespace tdp {

namespace {

using u64 = std::uint64_t;
using i64 = std::int64_t;

// Pascal table in machine words; C(n,k) fits u64 for n <= 63.
std::vector<std::vector<u64>> binomial_table(int n) {
  std::vector<std::vector<u64>> c(n + 1);
  for (int i = 0; i <= n; ++i) {
    c[i].assign(i + 1, 1);
    for (int j = 1; j < i; ++j) c[i][j] = c[i - 1][j - 1] + c[i - 1][j];
  }
  return c;
}

struct SearchContext {
  int n = 0;
  u64 full = 0;
  std::vector<u64> adj;          // degree-descending vertex order
  std::vector<u64> suffix_cover; // OR of adj[p..n-1]
  std::vector<std::vector<u64>> binom;
};

void check_enumerable(const Graph& g, const EnumOptions& opts) {
  int n = g.order();
  if (n < 1) throw std::invalid_argument("enumeration: empty graph");
  if (n > opts.cap)
    throw CapExceeded("enumeration: order " + std::to_string(n) + " exceeds cap " +
                      std::to_string(opts.cap));
  if (n > kMaxEnumerableOrder)
    throw CapExceeded("enumeration: order " + std::to_string(n) + " exceeds the word limit " +
                      std::to_string(kMaxEnumerableOrder));
}

SearchContext make_context(const Graph& g) {
  SearchContext cx;
  cx.n = g.order();
  cx.full = cx.n == 64 ? ~u64{0} : (u64{1} << cx.n) - 1;

  std::vector<int> order(cx.n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return g.degree(a) > g.degree(b); });
  std::vector<int> pos(cx.n);
  for (int i = 0; i < cx.n; ++i) pos[order[i]] = i;

  cx.adj.assign(cx.n, 0);
  for (int i = 0; i < cx.n; ++i)
    for (int v : g.neighbors(order[i]).to_vertices()) cx.adj[i] |= u64{1} << pos[v];

  cx.suffix_cover.assign(cx.n + 1, 0);
  for (int p = cx.n - 1; p >= 0; --p) cx.suffix_cover[p] = cx.suffix_cover[p + 1] | cx.adj[p];

  cx.binom = binomial_table(cx.n);
  return cx;
}

// Include/exclude search over the remaining vertices. Once coverage is
// complete every extension dominates, so the tail collapses to binomials;
// the branch is cut when even the whole suffix cannot finish the cover.
void search(const SearchContext& cx, int pos, int chosen, u64 covered,
            std::vector<u64>& counts) {
  if (covered == cx.full) {
    int rem = cx.n - pos;
    for (int j = 0; j <= rem; ++j) counts[chosen + j] += cx.binom[rem][j];
    return;
  }
  if (pos == cx.n) return;
  if ((covered | cx.suffix_cover[pos]) != cx.full) return;
  search(cx, pos + 1, chosen + 1, covered | cx.adj[pos], counts);
  search(cx, pos + 1, chosen, covered, counts);
}

// Alternating walk for the subset-sum identity: every leaf S contributes
// (-1)^{|S|} to the bucket of exponent n - |N(S)|.
void walk_ie(const SearchContext& cx, int pos, int parity, u64 nbhd,
             std::vector<i64>& buckets) {
  if (pos == cx.n) {
    buckets[cx.n - std::popcount(nbhd)] += parity;
    return;
  }
  walk_ie(cx, pos + 1, -parity, nbhd | cx.adj[pos], buckets);
  walk_ie(cx, pos + 1, parity, nbhd, buckets);
}

struct PrefixTask {
  int chosen = 0;
  int parity = 1;
  u64 mask = 0;  // covered (direct path) or N(S) so far (identity path)
};

// Seeds one task per include/exclude pattern of the first `k` vertices;
// workers pull tasks and write into private slots, so any schedule yields
// the same exact totals.
template <typename Cell, typename Body>
std::vector<Cell> run_tasks(const SearchContext& cx, const EnumOptions& opts, Body body) {
  int k = opts.prefix_bits >= 0 ? std::min(opts.prefix_bits, cx.n) : std::min(8, cx.n);
  int threads = opts.threads > 0 ? opts.threads
                                 : std::max(1u, std::thread::hardware_concurrency());
  if (cx.n <= 16 || threads == 1) k = 0;

  std::vector<PrefixTask> tasks;
  tasks.reserve(std::size_t{1} << k);
  for (u64 m = 0; m < (u64{1} << k); ++m) {
    PrefixTask t;
    for (int i = 0; i < k; ++i)
      if ((m >> i) & 1) {
        ++t.chosen;
        t.parity = -t.parity;
        t.mask |= cx.adj[i];
      }
    tasks.push_back(t);
  }

  std::vector<std::vector<Cell>> slots(tasks.size(), std::vector<Cell>(cx.n + 1, 0));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < tasks.size(); i = next.fetch_add(1))
      body(tasks[i], k, slots[i]);
  };
  if (tasks.size() == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  std::vector<Cell> total(cx.n + 1, 0);
  for (const auto& slot : slots)
    for (int i = 0; i <= cx.n; ++i) total[i] += slot[i];
  return total;
}

}  // namespace

CountTable count_total_dominating_sets(const Graph& g, const EnumOptions& opts) {
  check_enumerable(g, opts);
  SearchContext cx = make_context(g);
  CountTable table;
  table.n = cx.n;
  table.counts.assign(cx.n + 1, 0);
  // suffix_cover[0] = N(V); a vertex outside it is isolated and can never
  // be dominated.
  if (cx.suffix_cover[0] != cx.full) return table;

  auto totals = run_tasks<u64>(cx, opts, [&](const PrefixTask& t, int k, std::vector<u64>& out) {
    search(cx, k, t.chosen, t.mask, out);
  });
  for (int i = 0; i <= cx.n; ++i) table.counts[i] = totals[i];
  return table;
}

Polynomial total_domination_polynomial(const Graph& g, const EnumOptions& opts) {
  return Polynomial(count_total_dominating_sets(g, opts).counts);
}

Polynomial total_domination_polynomial_ie(const Graph& g, const EnumOptions& opts) {
  check_enumerable(g, opts);
  SearchContext cx = make_context(g);
  auto buckets = run_tasks<i64>(cx, opts, [&](const PrefixTask& t, int k, std::vector<i64>& out) {
    walk_ie(cx, k, t.parity, t.mask, out);
  });
  Polynomial result;
  for (int e = 0; e <= cx.n; ++e)
    if (buckets[e] != 0) result += BigInt(buckets[e]) * Polynomial::binomial_shift(e);
  return result;
}

std::optional<int> total_domination_number(const Graph& g, const EnumOptions& opts) {
  CountTable t = count_total_dominating_sets(g, opts);
  for (int i = 0; i <= t.n; ++i)
    if (t.counts[i] != 0) return i;
  return std::nullopt;
}

nlohmann::ordered_json CountTable::to_json() const {
  auto j = nlohmann::ordered_json::array();
  for (const auto& c : counts) j.push_back(c.str());
  return j;
}

CountTable CountTable::from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("count table JSON: expected array");
  CountTable t;
  t.n = static_cast<int>(j.size()) - 1;
  for (const auto& e : j) t.counts.emplace_back(e.get<std::string>());
  return t;
}

}  // namespace tdp
