#pragma once

// Brute-force reference implementations used only by tests. They share no
// code with the library paths they check.

#include <algorithm>
#include <set>
#include <vector>

#include "rmcs/fca.hpp"
#include "rmcs/rng.hpp"

namespace oracle {

// Attributes common to all of objs, by direct membership scan.
inline std::vector<int> derive_objects(const rmcs::fca::FormalContext& ctx,
                                       const std::vector<int>& objs) {
  std::vector<int> out;
  for (int m = 0; m < ctx.attribute_count(); ++m) {
    bool all = true;
    for (int g : objs)
      if (!ctx.incident(g, m)) {
        all = false;
        break;
      }
    if (all) out.push_back(m);
  }
  return out;
}

inline std::vector<int> derive_attributes(const rmcs::fca::FormalContext& ctx,
                                          const std::vector<int>& attrs) {
  std::vector<int> out;
  for (int g = 0; g < ctx.object_count(); ++g) {
    bool all = true;
    for (int m : attrs)
      if (!ctx.incident(g, m)) {
        all = false;
        break;
      }
    if (all) out.push_back(g);
  }
  return out;
}

inline rmcs::fca::FormalConcept close_attributes(const rmcs::fca::FormalContext& ctx,
                                                 const std::vector<int>& attrs) {
  auto extent = derive_attributes(ctx, attrs);
  auto intent = derive_objects(ctx, extent);
  return {std::move(extent), std::move(intent)};
}

// Every formal concept of ctx, by closing all 2^|M| attribute subsets.
// Feasible for the small contexts the tests generate.
inline std::vector<rmcs::fca::FormalConcept> all_concepts(const rmcs::fca::FormalContext& ctx) {
  std::set<std::vector<int>> seen_extents;
  std::vector<rmcs::fca::FormalConcept> concepts;
  const int m_count = ctx.attribute_count();
  for (unsigned long mask = 0; mask < (1UL << m_count); ++mask) {
    std::vector<int> attrs;
    for (int m = 0; m < m_count; ++m)
      if (mask & (1UL << m)) attrs.push_back(m);
    auto c = close_attributes(ctx, attrs);
    if (seen_extents.insert(c.extent).second) concepts.push_back(std::move(c));
  }
  return concepts;
}

inline bool extent_strict_subset(const rmcs::fca::FormalConcept& a,
                                 const rmcs::fca::FormalConcept& b) {
  return a.extent != b.extent &&
         std::includes(b.extent.begin(), b.extent.end(), a.extent.begin(), a.extent.end());
}

// Top element of the concept lattice plus its covers, from the full
// enumeration, sorted with the same deterministic order top_cbo promises.
inline rmcs::fca::TopConcepts top_and_covers(const rmcs::fca::FormalContext& ctx) {
  auto concepts = all_concepts(ctx);
  const rmcs::fca::FormalConcept* top = nullptr;
  for (const auto& c : concepts)
    if (static_cast<int>(c.extent.size()) == ctx.object_count()) top = &c;

  std::vector<rmcs::fca::FormalConcept> covers;
  for (const auto& c : concepts) {
    if (&c == top) continue;
    bool covered_by_other = false;
    for (const auto& z : concepts) {
      if (&z == top || &z == &c) continue;
      if (extent_strict_subset(c, z)) {
        covered_by_other = true;
        break;
      }
    }
    if (!covered_by_other) covers.push_back(c);
  }
  std::sort(covers.begin(), covers.end(),
            [](const rmcs::fca::FormalConcept& a, const rmcs::fca::FormalConcept& b) {
              if (a.extent.size() != b.extent.size()) return a.extent.size() > b.extent.size();
              return a.intent.front() < b.intent.front();
            });
  return {*top, std::move(covers)};
}

// Random context with the given bounds; density varies per draw.
inline rmcs::fca::FormalContext random_context(rmcs::Rng& rng, int max_objects,
                                               int max_attributes) {
  const int n_g = 1 + static_cast<int>(rmcs::uniform_below(rng, static_cast<std::uint64_t>(max_objects)));
  const int n_m = 1 + static_cast<int>(rmcs::uniform_below(rng, static_cast<std::uint64_t>(max_attributes)));
  const double density = 0.1 + 0.8 * rmcs::uniform_double(rng);
  rmcs::fca::FormalContext ctx(n_g, n_m);
  for (int g = 0; g < n_g; ++g)
    for (int m = 0; m < n_m; ++m)
      if (rmcs::uniform_double(rng) < density) ctx.set_incidence(g, m);
  return ctx;
}

inline std::vector<int> random_subset(rmcs::Rng& rng, int universe) {
  std::vector<int> out;
  for (int i = 0; i < universe; ++i)
    if (rmcs::uniform_double(rng) < 0.5) out.push_back(i);
  return out;
}

}  // namespace oracle
