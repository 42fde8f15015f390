#pragma once

#include <span>
#include <string>
#include <vector>

#include "rmcs/bitset.hpp"

namespace rmcs::fca {

// A closed (extent, intent) pair of a formal context. Extent holds object
// ids, intent attribute ids; both are sorted ascending.
struct FormalConcept {
  std::vector<int> extent;
  std::vector<int> intent;

  friend bool operator==(const FormalConcept&, const FormalConcept&) = default;
};

// Binary incidence structure over objects x attributes. Incidence is stored
// twice, as per-object and per-attribute bitsets, so both derivation
// directions are linear scans. Immutable once populated; every operation on
// it is a pure function.
class FormalContext {
 public:
  FormalContext(int n_objects, int n_attributes);
  FormalContext(int n_objects, int n_attributes, std::vector<std::string> object_names,
                std::vector<std::string> attribute_names);

  int object_count() const { return n_objects_; }
  int attribute_count() const { return n_attributes_; }

  void set_incidence(int object, int attribute);
  void clear_incidence(int object, int attribute);
  bool incident(int object, int attribute) const;

  // Attributes of one object / objects of one attribute.
  const Bitset& object_row(int object) const;
  const Bitset& attribute_column(int attribute) const;

  const std::string& object_name(int object) const;
  const std::string& attribute_name(int attribute) const;
  const std::vector<std::string>& object_names() const { return object_names_; }
  const std::vector<std::string>& attribute_names() const { return attribute_names_; }

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

 private:
  void check_object(int g) const;
  void check_attribute(int m) const;

  int n_objects_ = 0;
  int n_attributes_ = 0;
  std::string name_;
  std::vector<std::string> object_names_;
  std::vector<std::string> attribute_names_;
  std::vector<Bitset> rows_;     // per object: its attributes
  std::vector<Bitset> columns_;  // per attribute: its objects
};

// Galois derivation: attributes common to every object in objs. The empty
// set derives to all attributes.
std::vector<int> derive_objects(const FormalContext& ctx, std::span<const int> objs);

// Dual derivation: objects possessing every attribute in attrs.
std::vector<int> derive_attributes(const FormalContext& ctx, std::span<const int> attrs);

// (attrs', attrs'') — always a formal concept.
FormalConcept closure_attributes(const FormalContext& ctx, std::span<const int> attrs);

struct TopConcepts {
  FormalConcept top;  // (G, G')
  // The concepts directly covered by top, sorted by descending extent size,
  // ties by ascending smallest intent attribute id.
  std::vector<FormalConcept> lower_neighbors;
};

// Top of the concept lattice and its lower neighbors, without building the
// rest of the lattice. Lower neighbors are the extent-maximal concepts among
// the attribute concepts ((G' u {m})', (G' u {m})'') for m outside G'.
TopConcepts top_cbo(const FormalContext& ctx);

std::string to_string(const FormalContext& ctx, const FormalConcept& c);

}  // namespace rmcs::fca
