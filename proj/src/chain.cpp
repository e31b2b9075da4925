#include "ctcodes/detail/chain.hpp"

#include "ctcodes/errors.hpp"

namespace ctc::detail {

const Permutation& StabilizerChain::transversal(std::size_t level, Point p) const {
  const int s = levels_[level].slot[p];
  if (s < 0) throw DomainError("point outside the basic orbit");
  return levels_[level].reps[static_cast<std::size_t>(s)];
}

std::pair<Permutation, std::size_t> StabilizerChain::strip(Permutation g, std::size_t from) const {
  for (std::size_t l = from; l < levels_.size(); ++l) {
    const Level& L = levels_[l];
    const Point beta = g(L.base);
    const int s = L.slot[beta];
    if (s < 0) return {std::move(g), l};
    g = g * L.inv_reps[static_cast<std::size_t>(s)];
  }
  return {std::move(g), levels_.size()};
}

bool StabilizerChain::contains(const Permutation& g) const {
  if (g.degree() != degree_) throw DomainError("degree mismatch in membership test");
  auto [h, j] = strip(g, 0);
  return j == levels_.size() && h.is_identity();
}

BigInt StabilizerChain::order() const {
  BigInt result = 1;
  for (const auto& L : levels_) result *= L.orbit.size();
  return result;
}

void StabilizerChain::rebuild_orbit(std::size_t level) {
  Level& L = levels_[level];
  L.orbit.assign(1, L.base);
  L.slot.assign(degree_, -1);
  L.reps.assign(1, Permutation(degree_));
  L.inv_reps.assign(1, Permutation(degree_));
  L.slot[L.base] = 0;
  for (std::size_t head = 0; head < L.orbit.size(); ++head) {
    const Point p = L.orbit[head];
    for (const auto& s : L.gens) {
      const Point q = s(p);
      if (L.slot[q] >= 0) continue;
      L.slot[q] = static_cast<int>(L.orbit.size());
      L.orbit.push_back(q);
      Permutation rep = L.reps[head] * s;
      L.inv_reps.push_back(rep.inverse());
      L.reps.push_back(std::move(rep));
    }
  }
}

void StabilizerChain::append_level(Point base) {
  Level L;
  L.base = base;
  levels_.push_back(std::move(L));
  rebuild_orbit(levels_.size() - 1);
}

bool StabilizerChain::add_generator(const Permutation& g) {
  if (g.degree() != degree_) throw DomainError("degree mismatch adding generator");
  auto [h, j] = strip(g, 0);
  if (j == levels_.size() && h.is_identity()) return false;
  if (j == levels_.size()) append_level(h.first_moved());
  for (std::size_t l = 0; l <= j; ++l) {
    levels_[l].gens.push_back(h);
    rebuild_orbit(l);
  }
  complete(j);
  return true;
}

void StabilizerChain::complete(std::size_t from_level) {
  long i = static_cast<long>(from_level);
  while (i >= 0) {
    bool restarted = false;
    const auto li = static_cast<std::size_t>(i);
    for (std::size_t idx = 0; idx < levels_[li].orbit.size() && !restarted; ++idx) {
      for (std::size_t gi = 0; gi < levels_[li].gens.size(); ++gi) {
        const Level& L = levels_[li];
        const Point beta = L.orbit[idx];
        const Permutation& s = L.gens[gi];
        const Point gamma = s(beta);
        Permutation schreier = L.reps[idx] * s * L.inv_reps[static_cast<std::size_t>(L.slot[gamma])];
        if (schreier.is_identity()) continue;
        auto [h, j] = strip(std::move(schreier), li + 1);
        if (j == levels_.size() && h.is_identity()) continue;
        if (j == levels_.size()) append_level(h.first_moved());
        for (std::size_t l = li + 1; l <= j; ++l) {
          levels_[l].gens.push_back(h);
          rebuild_orbit(l);
        }
        i = static_cast<long>(j);
        restarted = true;
        break;
      }
    }
    if (!restarted) --i;
  }
}

}  // namespace ctc::detail
