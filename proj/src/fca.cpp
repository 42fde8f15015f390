#include "rmcs/fca.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace rmcs::fca {

namespace {

std::vector<std::string> numbered_names(int n, const std::string& prefix, int base) {
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i + base));
  return names;
}

}  // namespace

FormalContext::FormalContext(int n_objects, int n_attributes)
    : FormalContext(n_objects, n_attributes, numbered_names(n_objects, "", 1),
                    numbered_names(n_attributes, "m", 1)) {}

FormalContext::FormalContext(int n_objects, int n_attributes,
                             std::vector<std::string> object_names,
                             std::vector<std::string> attribute_names)
    : n_objects_(n_objects),
      n_attributes_(n_attributes),
      object_names_(std::move(object_names)),
      attribute_names_(std::move(attribute_names)) {
  if (n_objects < 0 || n_attributes < 0)
    throw std::invalid_argument("FormalContext: negative dimension");
  if (static_cast<int>(object_names_.size()) != n_objects ||
      static_cast<int>(attribute_names_.size()) != n_attributes)
    throw std::invalid_argument("FormalContext: name count does not match dimension");
  rows_.assign(static_cast<std::size_t>(n_objects), Bitset(n_attributes));
  columns_.assign(static_cast<std::size_t>(n_attributes), Bitset(n_objects));
}

void FormalContext::check_object(int g) const {
  if (g < 0 || g >= n_objects_)
    throw std::invalid_argument("FormalContext: unknown object id " + std::to_string(g));
}

void FormalContext::check_attribute(int m) const {
  if (m < 0 || m >= n_attributes_)
    throw std::invalid_argument("FormalContext: unknown attribute id " + std::to_string(m));
}

void FormalContext::set_incidence(int object, int attribute) {
  check_object(object);
  check_attribute(attribute);
  rows_[static_cast<std::size_t>(object)].set(attribute);
  columns_[static_cast<std::size_t>(attribute)].set(object);
}

void FormalContext::clear_incidence(int object, int attribute) {
  check_object(object);
  check_attribute(attribute);
  rows_[static_cast<std::size_t>(object)].reset(attribute);
  columns_[static_cast<std::size_t>(attribute)].reset(object);
}

bool FormalContext::incident(int object, int attribute) const {
  check_object(object);
  check_attribute(attribute);
  return rows_[static_cast<std::size_t>(object)].test(attribute);
}

const Bitset& FormalContext::object_row(int object) const {
  check_object(object);
  return rows_[static_cast<std::size_t>(object)];
}

const Bitset& FormalContext::attribute_column(int attribute) const {
  check_attribute(attribute);
  return columns_[static_cast<std::size_t>(attribute)];
}

const std::string& FormalContext::object_name(int object) const {
  check_object(object);
  return object_names_[static_cast<std::size_t>(object)];
}

const std::string& FormalContext::attribute_name(int attribute) const {
  check_attribute(attribute);
  return attribute_names_[static_cast<std::size_t>(attribute)];
}

namespace {

Bitset derive_objects_bits(const FormalContext& ctx, const Bitset& objs) {
  Bitset common(ctx.attribute_count(), true);
  for (int g = 0; g < ctx.object_count(); ++g)
    if (objs.test(g)) common &= ctx.object_row(g);
  return common;
}

Bitset derive_attributes_bits(const FormalContext& ctx, const Bitset& attrs) {
  Bitset common(ctx.object_count(), true);
  for (int m = 0; m < ctx.attribute_count(); ++m)
    if (attrs.test(m)) common &= ctx.attribute_column(m);
  return common;
}

Bitset to_object_bits(const FormalContext& ctx, std::span<const int> objs) {
  Bitset bits(ctx.object_count());
  for (int g : objs) {
    if (g < 0 || g >= ctx.object_count())
      throw std::invalid_argument("derive: unknown object id " + std::to_string(g));
    bits.set(g);
  }
  return bits;
}

Bitset to_attribute_bits(const FormalContext& ctx, std::span<const int> attrs) {
  Bitset bits(ctx.attribute_count());
  for (int m : attrs) {
    if (m < 0 || m >= ctx.attribute_count())
      throw std::invalid_argument("derive: unknown attribute id " + std::to_string(m));
    bits.set(m);
  }
  return bits;
}

}  // namespace

std::vector<int> derive_objects(const FormalContext& ctx, std::span<const int> objs) {
  return derive_objects_bits(ctx, to_object_bits(ctx, objs)).to_indices();
}

std::vector<int> derive_attributes(const FormalContext& ctx, std::span<const int> attrs) {
  return derive_attributes_bits(ctx, to_attribute_bits(ctx, attrs)).to_indices();
}

FormalConcept closure_attributes(const FormalContext& ctx, std::span<const int> attrs) {
  const Bitset extent = derive_attributes_bits(ctx, to_attribute_bits(ctx, attrs));
  const Bitset intent = derive_objects_bits(ctx, extent);
  return {extent.to_indices(), intent.to_indices()};
}

TopConcepts top_cbo(const FormalContext& ctx) {
  if (ctx.object_count() == 0 || ctx.attribute_count() == 0)
    throw std::invalid_argument("top_cbo: context must have at least one object and one attribute");

  const Bitset all_objects(ctx.object_count(), true);
  const Bitset top_intent = derive_objects_bits(ctx, all_objects);

  // Candidate lower neighbors: the attribute concepts for attributes outside
  // G'. (G' u {m})' equals m' because G'' = G.
  struct Candidate {
    Bitset extent;
    Bitset intent;
  };
  std::vector<Candidate> candidates;
  for (int m = 0; m < ctx.attribute_count(); ++m) {
    if (top_intent.test(m)) continue;
    Bitset extent = ctx.attribute_column(m);
    bool seen = false;
    for (const auto& c : candidates)
      if (c.extent == extent) {
        seen = true;
        break;
      }
    if (seen) continue;
    Bitset intent = derive_objects_bits(ctx, extent);
    candidates.push_back({std::move(extent), std::move(intent)});
  }

  // Keep extent-maximal candidates; those are exactly the covers of top.
  std::vector<FormalConcept> lowers;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < candidates.size(); ++j)
      if (i != j && candidates[i].extent.is_subset_of(candidates[j].extent)) {
        dominated = true;
        break;
      }
    if (!dominated)
      lowers.push_back({candidates[i].extent.to_indices(), candidates[i].intent.to_indices()});
  }

  std::sort(lowers.begin(), lowers.end(), [](const FormalConcept& a, const FormalConcept& b) {
    if (a.extent.size() != b.extent.size()) return a.extent.size() > b.extent.size();
    return a.intent.front() < b.intent.front();
  });

  return {{all_objects.to_indices(), top_intent.to_indices()}, std::move(lowers)};
}

std::string to_string(const FormalContext& ctx, const FormalConcept& c) {
  std::string out = "({";
  for (std::size_t i = 0; i < c.extent.size(); ++i) {
    if (i) out += ",";
    out += ctx.object_name(c.extent[i]);
  }
  out += "}, {";
  for (std::size_t i = 0; i < c.intent.size(); ++i) {
    if (i) out += ",";
    out += ctx.attribute_name(c.intent[i]);
  }
  out += "})";
  return out;
}

}  // namespace rmcs::fca
