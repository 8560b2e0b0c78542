#include "kpfree/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "kpfree/generators.hpp"

namespace kpfree {
namespace {

using Signature = std::pair<int, std::vector<int>>;

// One shared dictionary so that colors are comparable across graphs.
std::vector<std::vector<int>> refine_jointly(const std::vector<const Graph*>& graphs) {
  std::vector<std::vector<int>> colors;
  for (const Graph* g : graphs) {
    std::vector<int> c(static_cast<std::size_t>(g->order()));
    for (Vertex v = 0; v < g->order(); ++v) c[static_cast<std::size_t>(v)] = g->degree(v);
    colors.push_back(std::move(c));
  }
  std::size_t classes = 0;
  while (true) {
    std::vector<std::vector<Signature>> sigs(graphs.size());
    std::vector<Signature> all;
    for (std::size_t k = 0; k < graphs.size(); ++k) {
      const Graph& g = *graphs[k];
      for (Vertex v = 0; v < g.order(); ++v) {
        Signature s{colors[k][static_cast<std::size_t>(v)], {}};
        for (Vertex u : g.neighbors(v)) s.second.push_back(colors[k][static_cast<std::size_t>(u)]);
        std::sort(s.second.begin(), s.second.end());
        sigs[k].push_back(s);
        all.push_back(std::move(s));
      }
    }
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    for (std::size_t k = 0; k < graphs.size(); ++k)
      for (std::size_t v = 0; v < sigs[k].size(); ++v)
        colors[k][v] = static_cast<int>(std::lower_bound(all.begin(), all.end(), sigs[k][v]) - all.begin());
    if (all.size() == classes) break;
    classes = all.size();
  }
  return colors;
}

class IsoSearch {
 public:
  IsoSearch(const Graph& a, const Graph& b, std::vector<int> ca, std::vector<int> cb)
      : a_(a), b_(b), ca_(std::move(ca)), cb_(std::move(cb)),
        map_(static_cast<std::size_t>(a.order()), -1), used_(static_cast<std::size_t>(b.order()), false) {
    // Visit a's vertices rarest color first, then keep each next vertex
    // adjacent to something already placed when possible.
    std::map<int, int> freq;
    for (int c : ca_) ++freq[c];
    std::vector<bool> placed(static_cast<std::size_t>(a.order()), false);
    for (int step = 0; step < a.order(); ++step) {
      int best = -1;
      std::pair<int, int> best_key{0, 0};
      for (Vertex v = 0; v < a.order(); ++v) {
        if (placed[static_cast<std::size_t>(v)]) continue;
        int links = 0;
        for (Vertex u : a.neighbors(v)) links += placed[static_cast<std::size_t>(u)] ? 1 : 0;
        const std::pair<int, int> key{-links, freq[ca_[static_cast<std::size_t>(v)]]};
        if (best == -1 || key < best_key) {
          best = v;
          best_key = key;
        }
      }
      placed[static_cast<std::size_t>(best)] = true;
      order_.push_back(best);
    }
  }

  std::optional<std::vector<Vertex>> run() {
    if (extend(0)) return map_;
    return std::nullopt;
  }

 private:
  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Vertex v = order_[depth];
    for (Vertex w = 0; w < b_.order(); ++w) {
      if (used_[static_cast<std::size_t>(w)] || cb_[static_cast<std::size_t>(w)] != ca_[static_cast<std::size_t>(v)])
        continue;
      bool ok = true;
      for (std::size_t i = 0; i < depth && ok; ++i) {
        const Vertex u = order_[i];
        ok = a_.adjacent(u, v) == b_.adjacent(map_[static_cast<std::size_t>(u)], w);
      }
      if (!ok) continue;
      map_[static_cast<std::size_t>(v)] = w;
      used_[static_cast<std::size_t>(w)] = true;
      if (extend(depth + 1)) return true;
      used_[static_cast<std::size_t>(w)] = false;
      map_[static_cast<std::size_t>(v)] = -1;
    }
    return false;
  }

  const Graph& a_;
  const Graph& b_;
  std::vector<int> ca_;
  std::vector<int> cb_;
  std::vector<Vertex> order_;
  std::vector<Vertex> map_;
  std::vector<bool> used_;
};

// Lexicographically largest upper-triangle string over all labelings that
// respect the refined color order. Pairs are emitted column by column, so a
// prefix of placed vertices fixes a prefix of the string.
class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : g_(g) {
    const std::vector<int> colors = refine_colors(g);
    std::vector<Vertex> vs(static_cast<std::size_t>(g.order()));
    std::iota(vs.begin(), vs.end(), 0);
    std::stable_sort(vs.begin(), vs.end(), [&](Vertex x, Vertex y) {
      return colors[static_cast<std::size_t>(x)] < colors[static_cast<std::size_t>(y)];
    });
    for (Vertex v : vs) slot_color_.push_back(colors[static_cast<std::size_t>(v)]);
    color_of_ = colors;
  }

  std::string run() {
    used_.assign(static_cast<std::size_t>(g_.order()), false);
    current_.clear();
    best_.clear();
    have_best_ = false;
    place(0);
    return std::to_string(g_.order()) + ":" + best_;
  }

 private:
  void place(std::size_t slot) {
    if (slot == slot_color_.size()) {
      if (!have_best_ || current_ > best_) {
        best_ = current_;
        have_best_ = true;
      }
      return;
    }
    for (Vertex v = 0; v < g_.order(); ++v) {
      if (used_[static_cast<std::size_t>(v)] || color_of_[static_cast<std::size_t>(v)] != slot_color_[slot]) continue;
      const std::size_t mark = current_.size();
      for (std::size_t i = 0; i < slot; ++i) current_.push_back(g_.adjacent(labeled_[i], v) ? '1' : '0');
      // Prune when this prefix already loses against the best string.
      const int cmp = have_best_ ? best_.compare(0, current_.size(), current_) : -1;
      if (cmp <= 0) {
        used_[static_cast<std::size_t>(v)] = true;
        labeled_.push_back(v);
        if (cmp < 0) have_best_ = false;
        place(slot + 1);
        labeled_.pop_back();
        used_[static_cast<std::size_t>(v)] = false;
      }
      current_.resize(mark);
    }
  }

  const Graph& g_;
  std::vector<int> slot_color_;
  std::vector<int> color_of_;
  std::vector<bool> used_;
  std::vector<Vertex> labeled_;
  std::string current_;
  std::string best_;
  bool have_best_ = false;
};

}  // namespace

std::vector<int> refine_colors(const Graph& g) { return refine_jointly({&g}).front(); }

std::optional<std::vector<Vertex>> find_isomorphism(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.num_edges() != b.num_edges()) return std::nullopt;
  auto colors = refine_jointly({&a, &b});
  std::vector<int> sa = colors[0], sb = colors[1];
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return std::nullopt;
  IsoSearch search(a, b, std::move(colors[0]), std::move(colors[1]));
  return search.run();
}

bool are_isomorphic(const Graph& a, const Graph& b) { return find_isomorphism(a, b).has_value(); }

std::string canonical_form(const Graph& g) {
  Canonizer c(g);
  return c.run();
}

std::optional<StrongProductWitness> match_odd_cycle_strong_product(const Graph& g) {
  const int n = g.order();
  if (n < 5) return std::nullopt;
  const GraphStats stats = degree_stats(g);
  if (stats.max_degree != stats.min_degree) return std::nullopt;
  const int d = stats.max_degree;
  if ((d + 1) % 3 != 0) return std::nullopt;
  const int m = (d + 1) / 3;
  if (m < 1 || n % m != 0) return std::nullopt;
  const int len = n / m;
  if (len < 5 || len % 2 == 0) return std::nullopt;
  const Graph model = strong_product(cycle_graph(len), complete_graph(m));
  const auto map = find_isomorphism(model, g);
  if (!map) return std::nullopt;
  StrongProductWitness w;
  w.cycle_length = len;
  w.clique_size = m;
  w.coords.assign(static_cast<std::size_t>(n), {0, 0});
  for (Vertex x = 0; x < n; ++x) w.coords[static_cast<std::size_t>((*map)[static_cast<std::size_t>(x)])] = {x / m, x % m};
  return w;
}

}  // namespace kpfree
