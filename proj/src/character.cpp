#include "wfree/character.hpp"

#include <algorithm>

namespace wfree {

std::vector<StrongGenerator> strong_generators(const GoodGrading& gr) {
  std::vector<StrongGenerator> out;
  for (const auto& c : centralizer_f(gr)) out.push_back({2 - c.deg2, c.parity});
  std::sort(out.begin(), out.end(), [](const StrongGenerator& a, const StrongGenerator& b) {
    return std::tie(a.weight2, a.parity) < std::tie(b.weight2, b.parity);
  });
  return out;
}

std::vector<long> free_character(const std::vector<StrongGenerator>& gens, int max_weight2) {
  std::vector<long> ch(max_weight2 + 1, 0);
  ch[0] = 1;
  for (const auto& g : gens) {
    if (g.weight2 <= 0) throw std::invalid_argument("generator of non-positive weight");
    for (int d = g.weight2; d <= max_weight2; d += 2) {
      if (g.parity == 0) {
        for (int w = d; w <= max_weight2; ++w) ch[w] += ch[w - d];  // 1/(1-q^d)
      } else {
        for (int w = max_weight2; w >= d; --w) ch[w] += ch[w - d];  // 1+q^d
      }
    }
  }
  return ch;
}

std::vector<long> expected_character(const GoodGrading& gr, int max_weight2) {
  return free_character(strong_generators(gr), max_weight2);
}

namespace {

struct Slot {
  Mode mode;
  int cost;
  int odd;
  int charge;
};

void enumerate(const std::vector<Slot>& slots, size_t start, int left, int charge,
               std::optional<int> want, std::vector<Mode>& cur, const Top& top,
               std::vector<Monomial>& out) {
  if (left == 0) {
    if (!want || *want == charge) out.push_back(Monomial{cur, top});
    return;
  }
  for (size_t i = start; i < slots.size(); ++i) {
    const Slot& s = slots[i];
    if (s.cost > left) continue;
    cur.push_back(s.mode);
    enumerate(slots, s.odd ? i + 1 : i, left - s.cost, charge + s.charge, want, cur, top, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Monomial> graded_basis(const ConformalAlgebra& alg, int depth2, std::optional<int> charge,
                                   const Top& top) {
  std::vector<Monomial> out;
  if (depth2 < 0) return out;
  std::vector<Slot> slots;
  for (int g = 0; g < alg.size(); ++g) {
    const auto& G = alg.gen(g);
    if (G.weight2 <= 0) throw std::invalid_argument("generator of non-positive weight: " + G.name);
    // cost of g_(n) is weight2 - 2n - 2; n runs upward so that lists stay sorted
    for (int n = -((depth2 - G.weight2) / 2) - 1; n <= -1; ++n) {
      int cost = G.weight2 - 2 * n - 2;
      if (cost > depth2) continue;
      slots.push_back({Mode{static_cast<int16_t>(g), static_cast<int16_t>(n)}, cost, G.parity, G.charge});
    }
  }
  std::vector<Mode> cur;
  enumerate(slots, 0, depth2, 0, charge, cur, top, out);
  return out;
}

}  // namespace wfree
