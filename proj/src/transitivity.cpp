#include "ctcodes/transitivity.hpp"

#include <algorithm>
#include <cstdint>

#include "ctcodes/errors.hpp"
#include "ctcodes/regularity.hpp"

namespace ctc {

namespace {

/// Orbit of `seed` as radix codes, marking `seen`. Stops past `budget`.
std::vector<std::uint64_t> closure(const HammingSpace& space, const std::vector<WreathElement>& gens,
                                   std::uint64_t seed, std::vector<bool>& seen, std::size_t budget) {
  std::vector<std::uint64_t> queue{seed};
  seen[seed] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex v = space.decode(queue[head]);
    for (const auto& g : gens) {
      const auto w = space.encode(g.apply(v));
      if (seen[w]) continue;
      if (queue.size() >= budget) throw ResourceError("orbit closure exceeds budget");
      seen[w] = true;
      queue.push_back(w);
    }
  }
  return queue;
}

void check_shape(const Code& code, const AutSubgroup& group) {
  if (code.length() != group.length() || code.alphabet_size() != group.alphabet_size())
    throw DomainError("group acts on H(" + std::to_string(group.length()) + "," +
                      std::to_string(group.alphabet_size()) + ") but the code lives in H(" +
                      std::to_string(code.length()) + "," + std::to_string(code.alphabet_size()) + ")");
}

}  // namespace

TransitivityVerdict transitivity(const Code& code, const AutSubgroup& group, const Limits& limits) {
  check_shape(code, group);
  const auto& partition = code.distance_partition(limits);
  const auto& space = code.space();
  const auto& gens = group.generators();

  TransitivityVerdict verdict;
  verdict.covering_radius = partition.covering_radius();
  verdict.code_invariant =
      std::all_of(gens.begin(), gens.end(), [&](const WreathElement& g) { return is_code_automorphism(g, code); });

  std::vector<bool> seen(space.vertex_count(), false);
  bool prefix = true;
  for (std::size_t i = 0; i < partition.parts.size(); ++i) {
    const auto& part = partition.parts[i];
    PartOrbitStatus status;
    status.part = static_cast<int>(i);
    status.part_size = part.size();
    if (verdict.code_invariant) {
      // Parts are X-invariant, so they split into whole orbits.
      for (auto v : part) {
        if (seen[v]) continue;
        status.orbit_sizes.push_back(closure(space, gens, v, seen, limits.max_orbit).size());
      }
      status.single_orbit = status.orbit_sizes.size() == 1;
    } else {
      std::vector<bool> local(space.vertex_count(), false);
      const auto orbit = closure(space, gens, part.front(), local, limits.max_orbit);
      status.single_orbit = orbit.size() == part.size() &&
                            std::all_of(orbit.begin(), orbit.end(), [&](std::uint64_t w) {
                              return partition.distance[w] == static_cast<std::uint8_t>(i);
                            });
    }
    if (!status.single_orbit) {
      std::vector<bool> local(space.vertex_count(), false);
      closure(space, gens, part.front(), local, limits.max_orbit);
      const auto out = std::find_if(part.begin(), part.end(), [&](std::uint64_t w) { return !local[w]; });
      if (out != part.end()) status.split_witness.emplace(space.decode(part.front()), space.decode(*out));
    }
    if (prefix && status.single_orbit)
      verdict.level = static_cast<int>(i);
    else
      prefix = false;
    verdict.parts.push_back(std::move(status));
  }
  verdict.completely_transitive = verdict.level == verdict.covering_radius;
  return verdict;
}

int neighbour_transitivity_level(const Code& code, const AutSubgroup& group, const Limits& limits) {
  return transitivity(code, group, limits).level;
}

bool is_completely_transitive(const Code& code, const AutSubgroup& group, const Limits& limits) {
  return transitivity(code, group, limits).completely_transitive;
}

std::vector<Check> check_stabilizer_homogeneity(const Code& code, const AutSubgroup& group, int s,
                                                const Limits& limits) {
  check_shape(code, group);
  if (code.size() < 2) throw PreconditionError("stabilizer homogeneity needs |C| >= 2");
  const int level = neighbour_transitivity_level(code, group, limits);
  if (s > level)
    throw PreconditionError("s = " + std::to_string(s) + " exceeds the verified level " + std::to_string(level));
  const int delta = min_distance(code);
  const int top = std::min(s, (delta - 1) / 2);

  std::vector<Check> checks;
  if (top < 1) {
    checks.push_back({"i=0", true, "vacuous"});
    return checks;
  }
  const Vertex& alpha = code.words().front();
  const auto stab = vertex_stabilizer(group, alpha, limits);
  for (int i = 1; i <= top; ++i) {
    const auto sphere_i = sphere(alpha, i, code.alphabet_size(), limits);
    const auto orbit = stab.orbit(sphere_i.front(), limits);
    checks.push_back({"stabilizer transitive on sphere " + std::to_string(i), orbit == sphere_i,
                      "orbit " + std::to_string(orbit.size()) + " of " + std::to_string(sphere_i.size())});
    const bool homogeneous = stab.mu_image().is_k_homogeneous(static_cast<std::size_t>(i), limits);
    checks.push_back({"entry action " + std::to_string(i) + "-homogeneous", homogeneous, ""});
  }
  return checks;
}

bool check_entry_stabilizer_transitive_on_code(const Code& code, const AutSubgroup& group, const PointSet& entries,
                                               const Limits& limits) {
  check_shape(code, group);
  const int level = neighbour_transitivity_level(code, group, limits);
  int cap = level;
  if (code.size() >= 2) cap = std::min(cap, (min_distance(code) - 1) / 2);
  if (level < 0 || static_cast<int>(entries.size()) > cap)
    throw PreconditionError("|I| = " + std::to_string(entries.size()) + " exceeds min(level, floor((delta-1)/2)) = " +
                            std::to_string(cap));
  const auto stab = entry_set_stabilizer(group, entries, limits);
  return stab.orbit(code.words().front(), limits) == code.words();
}

bool counting_bound_holds(int m, int q, const BigInt& order) {
  if (m < 1 || q < 2) throw DomainError("counting bound needs m >= 1, q >= 2");
  return power(q, m) <= order * (m + 1);
}

CountingBound counting_bound(const Code& code, const AutSubgroup& group, const Limits& limits) {
  check_shape(code, group);
  const int m = code.length();
  const int q = code.alphabet_size();
  CountingBound out;
  out.lower = Rational(power(q, m), BigInt(m + 1));
  out.order = group.order(limits);
  out.holds = counting_bound_holds(m, q, out.order);
  out.refinement_applies = m >= 5 && kernel_on_entries_trivial(group, limits);
  if (out.refinement_applies) out.refinement_holds = q <= m - 2;
  return out;
}

bool factorial_edge_holds(int m) {
  if (m < 2) throw DomainError("factorial edge needs m >= 2");
  return power(m - 1, m) <= factorial(m + 1);
}

}  // namespace ctc
