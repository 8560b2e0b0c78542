#include "kpfree/exchange.hpp"

#include <algorithm>
#include <string>

#include "kpfree/cliques.hpp"
#include "kpfree/errors.hpp"

namespace kpfree {
namespace {

std::string where(const ExchangeState& st) { return " (step " + std::to_string(st.step()) + ")"; }

std::vector<VertexSet> kq_through(const Graph& g, const VertexSet& within, Vertex v, int q) {
  std::vector<VertexSet> out;
  for (Clique& c : cliques_through_vertex(g, within, v, q)) out.push_back(std::move(c.vertices));
  return out;
}

}  // namespace

ExchangeState::ExchangeState(const Graph& g, VertexSet s, int p, int q, int iteration_cap)
    : g_(&g), s_(std::move(s)), p_(p), q_(q), iteration_cap_(iteration_cap) {
  require_universe(g, s_);
  if (p < 2 || q < 2) throw InputError("exchange needs p, q >= 2");
  if (contains_clique(g, s_, p)) throw ContractViolation("exchange seed contains K_" + std::to_string(p));
  complement_ = s_.complement();
  size_ = s_.size();
  kp1_count_ = count_cliques_in(g, s_, p - 1);
  kq_count_ = count_cliques_in(g, complement_, q);
}

VertexSet ExchangeState::build_A(Vertex v) const {
  if (!complement_.contains(v)) throw InputError("build_A: vertex " + std::to_string(v) + " is not in the complement");
  const Graph& g = *g_;
  if (g.neighborhood(v).intersection_size(s_) < p_ - 1)
    throw ContractViolation("build_A: vertex " + std::to_string(v) + " has fewer than p-1 neighbours in S" + where(*this));
  const auto cliques = cliques_through_vertex(g, s_, v, p_);
  if (cliques.empty())
    throw ContractViolation("build_A: no K_" + std::to_string(p_) + " through " + std::to_string(v) +
                            "; S is not maximal" + where(*this));
  VertexSet a = cliques.front().vertices;
  for (const Clique& c : cliques) {
    a &= c.vertices;
    for (Vertex u : s_) {
      if (c.vertices.contains(u)) continue;
      bool all = true;
      for (Vertex w : c.vertices)
        if (!g.adjacent(u, w)) {
          all = false;
          break;
        }
      if (all) throw ContractViolation("internal contradiction: K_" + std::to_string(p_ + 1) + " found" + where(*this));
    }
  }
  if (a.size() < p_ - 1)
    throw ContractViolation("build_A: |A_" + std::to_string(v) + "| = " + std::to_string(a.size()) + " < p-1" +
                            where(*this));
  return a;
}

VertexSet ExchangeState::build_B(Vertex y) const {
  if (!complement_.contains(y)) throw InputError("build_B: vertex " + std::to_string(y) + " is not in the complement");
  const Graph& g = *g_;
  const auto copies = kq_through(g, complement_, y, q_);
  const int c = static_cast<int>(copies.size());
  if (c == 0) throw ContractViolation("build_B: y=" + std::to_string(y) + " lies in no K_q" + where(*this));
  VertexSet b(g.order());
  if (c <= 2) {
    b = copies.front();
    for (const VertexSet& k : copies) b &= k;
  } else {
    VertexSet closed = g.neighborhood(y) & complement_;
    closed.insert(y);
    bool component = c == q_ && closed.size() == q_ + 1;
    for (Vertex u : closed) {
      if (!component) break;
      VertexSet outside = g.neighborhood(u) & complement_;
      outside -= closed;
      if (!outside.empty() || (g.neighborhood(u) & closed).size() != q_) component = false;
    }
    if (!component)
      throw ContractViolation("build_B: y=" + std::to_string(y) + " lies in " + std::to_string(c) +
                              " copies of K_q without a K_{q+1} component" + where(*this));
    b = closed;
  }
  if (b.size() < q_ - 1 || b.size() > q_ + 1)
    throw ContractViolation("build_B: |B| = " + std::to_string(b.size()) + " outside [q-1, q+1]" + where(*this));
  return b;
}

std::uint64_t ExchangeState::kp1_after_swap(Vertex v, Vertex y) const {
  VertexSet next = s_;
  next.insert(v);
  next.erase(y);
  return count_cliques_in(*g_, next, p_ - 1);
}

void ExchangeState::swap(Vertex v, Vertex y, SwapRecord record) {
  if (!complement_.contains(v) || !s_.contains(y))
    throw ContractViolation("swap: v must be outside S and y inside" + where(*this));
  s_.insert(v);
  s_.erase(y);
  complement_.erase(v);
  complement_.insert(y);
  if (s_.size() != size_) throw ContractViolation("swap changed |S|" + where(*this));
  if (contains_clique(*g_, s_, p_)) throw ContractViolation("swap created K_" + std::to_string(p_) + where(*this));
  const auto kp1 = count_cliques_in(*g_, s_, p_ - 1);
  if (kp1 != kp1_count_)
    throw ContractViolation("swap changed #K_{p-1} from " + std::to_string(kp1_count_) + " to " +
                            std::to_string(kp1) + where(*this));
  kq_count_ = count_cliques_in(*g_, complement_, q_);
  record.step = step_;
  record.v = v;
  record.y = y;
  record.kp1_count = kp1;
  record.kq_count = kq_count_;
  history_.push_back(std::move(record));
  ++step_;
}

ExchangeOutcome run_exchange(const Graph& g, const VertexSet& seed, int p, int q, int iteration_cap) {
  ExchangeState st(g, seed, p, q, iteration_cap);
  ExchangeTrace trace;
  trace.p = p;
  trace.q = q;
  trace.seed = seed;
  trace.seed_kp1_count = st.kp1_count();
  trace.seed_kq_count = st.kq_count();

  // Swap partners of v that keep #K_{p-1}, in increasing id order.
  auto keepers = [&](Vertex v, const VertexSet& a) {
    std::vector<Vertex> out;
    for (Vertex y : a)
      if (y != v && st.kp1_after_swap(v, y) == st.kp1_count()) out.push_back(y);
    return out;
  };

  while (st.kq_count() > 0 && !trace.cap_hit) {
    ++trace.segments;
    // v_0: a vertex of S̄ in the most copies of K_q that admits a swap; among
    // equals the lowest id.
    std::vector<std::pair<std::uint64_t, Vertex>> ranked;
    for (Vertex u : st.complement())
      if (const auto c = count_cliques_through(g, st.complement(), u, q); c > 0) ranked.emplace_back(c, u);
    std::stable_sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
    Vertex v = -1;
    for (const auto& [count, u] : ranked) {
      if (!keepers(u, st.build_A(u)).empty()) {
        v = u;
        break;
      }
      trace.events.push_back("no swap keeps #K_{p-1} for v=" + std::to_string(u) + " at step " +
                             std::to_string(st.step()));
    }
    if (v == -1) {
      trace.stalled = true;
      break;
    }
    const VertexSet first_copy = kq_through(g, st.complement(), v, q).front();
    VertexSet used(g.order());
    VertexSet b_prev(g.order());
    std::vector<VertexSet> a_sets;
    bool first_step = true;

    while (true) {
      if (st.step() >= iteration_cap) {
        trace.cap_hit = true;
        trace.events.push_back("iteration cap " + std::to_string(iteration_cap) + " reached");
        break;
      }
      const VertexSet a = st.build_A(v);
      for (std::size_t j = 0; j < a_sets.size(); ++j)
        if (a_sets[j].intersects(a)) {
          trace.events.push_back("A sets meet at step " + std::to_string(st.step()));
          break;
        }
      a_sets.push_back(a);

      const auto before_v = kq_through(g, st.complement(), v, q);
      const auto keep = keepers(v, a);
      Vertex chosen = -1;
      bool disjoint = false;
      for (Vertex y : keep) {
        if (!first_step) {
          chosen = y;
          break;
        }
        VertexSet next_complement = st.complement();
        next_complement.erase(v);
        next_complement.insert(y);
        bool avoids = true;
        for (const VertexSet& k : kq_through(g, next_complement, y, q))
          if (k.intersects(first_copy)) avoids = false;
        if (avoids) {
          chosen = y;
          disjoint = true;
          break;
        }
        if (chosen == -1) chosen = y;
      }
      if (chosen == -1) {
        trace.events.push_back("no swap keeps #K_{p-1} for v=" + std::to_string(v) + " at step " +
                               std::to_string(st.step()));
        break;
      }

      const auto residual_before = [&] {
        VertexSet r = st.complement();
        r.erase(v);
        return count_cliques_in(g, r, q);
      }();

      SwapRecord rec;
      rec.segment = trace.segments;
      rec.a_v = a;
      rec.b_prev = b_prev;
      rec.disjoint_choice = disjoint;
      rec.all_keep_kp1 = static_cast<int>(keep.size()) == a.size() - 1;
      st.swap(v, chosen, std::move(rec));
      used.insert(chosen);
      first_step = false;
      SwapRecord& done = st.last_record();

      const auto after_y = kq_through(g, st.complement(), chosen, q);
      done.kq_through_y = static_cast<int>(after_y.size());
      for (const VertexSet& ky : after_y)
        for (const VertexSet& kv : before_v) {
          VertexSet rest = kv;
          rest.erase(v);
          const int overlap = ky.intersection_size(rest);
          if (overlap == 0) continue;
          if (overlap < q - 2)
            throw ContractViolation("K_q copies through v=" + std::to_string(v) + " and y=" +
                                    std::to_string(chosen) + " overlap in " + std::to_string(overlap) +
                                    " < q-2 vertices");
          if (done.min_overlap == -1 || overlap < done.min_overlap) done.min_overlap = overlap;
        }

      if (st.kq_count() == 0) break;
      if (after_y.empty()) {
        trace.events.push_back("K_q count dropped to " + std::to_string(st.kq_count()) + " at step " +
                               std::to_string(done.step));
        break;
      }
      const VertexSet b = st.build_B(chosen);
      VertexSet options = b;
      options.erase(chosen);
      options -= used;
      if (options.empty()) {
        trace.events.push_back("B exhausted at step " + std::to_string(done.step));
        break;
      }
      const Vertex next = options.first();
      VertexSet r = st.complement();
      r.erase(next);
      done.has_next = true;
      done.residual_kq_preserved = count_cliques_in(g, r, q) == residual_before;
      b_prev = b;
      v = next;
    }
  }
  trace.swaps = st.history();
  trace.complement_kq_free = st.kq_count() == 0;
  return {st.s(), std::move(trace)};
}

}  // namespace kpfree
