#pragma once

// Finite strict partial orders: validation, closure and cover relations,
// joins/meets, semilattice detection, quotients and preorder collapse.
//
// Elements are addressed by their position in a GroundSet. Every set of
// elements returned by this module is sorted by that position, which is the
// declaration order of the ground set.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace relrisk {

using Element = std::size_t;
using ElementSet = std::vector<Element>;
using ElementPair = std::pair<Element, Element>;

class OrderError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownElement : public OrderError {
 public:
  explicit UnknownElement(std::string name);
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

class DuplicateElement : public OrderError {
 public:
  explicit DuplicateElement(std::string name);
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

class InvalidRelation : public OrderError {
 public:
  using OrderError::OrderError;
};

class InvalidPartition : public OrderError {
 public:
  using OrderError::OrderError;
};

// A declared order contains a directed cycle. The witness lists the cycle
// members in traversal order; the last element relates back to the first.
class CycleError : public OrderError {
 public:
  CycleError(ElementSet cycle, std::vector<std::string> names);
  const ElementSet& cycle() const { return cycle_; }
  const std::vector<std::string>& names() const { return names_; }

 private:
  ElementSet cycle_;
  std::vector<std::string> names_;
};

// The order induced on the blocks of a partition has a cycle. Each witness
// entry is one block of the partition.
class QuotientCycleError : public OrderError {
 public:
  QuotientCycleError(std::vector<ElementSet> blocks, std::vector<std::string> names);
  const std::vector<ElementSet>& blocks() const { return blocks_; }
  const std::vector<std::string>& names() const { return names_; }

 private:
  std::vector<ElementSet> blocks_;
  std::vector<std::string> names_;
};

/// Ordered list of unique element identifiers.
class GroundSet {
 public:
  GroundSet() = default;
  explicit GroundSet(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  bool empty() const { return names_.empty(); }
  const std::string& name(Element e) const { return names_.at(e); }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<Element> find(std::string_view name) const;
  /// Throws UnknownElement.
  Element at(std::string_view name) const;
  ElementSet resolve(std::span<const std::string> names) const;
  std::vector<std::string> names_of(std::span<const Element> elements) const;

  bool operator==(const GroundSet& other) const { return names_ == other.names_; }

 private:
  std::vector<std::string> names_;
  std::map<std::string, Element, std::less<>> index_;
};

/// Irreflexive binary relation over a ground set; (a, b) reads "a < b".
class StrictRelation {
 public:
  StrictRelation() = default;
  explicit StrictRelation(GroundSet ground);
  /// Throws InvalidRelation on a self pair or an out-of-range element.
  StrictRelation(GroundSet ground, std::span<const ElementPair> pairs);

  static StrictRelation from_names(
      GroundSet ground, std::span<const std::pair<std::string, std::string>> pairs);

  const GroundSet& ground() const { return ground_; }
  std::size_t ground_size() const { return ground_.size(); }
  bool holds(Element a, Element b) const { return bits_[a * ground_.size() + b] != 0; }
  /// Pairs in row-major declaration order.
  std::vector<ElementPair> pairs() const;
  std::size_t pair_count() const;

  bool operator==(const StrictRelation& other) const {
    return ground_ == other.ground_ && bits_ == other.bits_;
  }

 private:
  GroundSet ground_;
  std::vector<std::uint8_t> bits_;
};

/// Transitive closure of an acyclic relation. Throws CycleError otherwise.
StrictRelation transitive_closure(const StrictRelation& rel);

/// A validated finite strict partial order with its cover relation.
class Poset {
 public:
  Poset() = default;

  const GroundSet& ground() const { return closure_.ground(); }
  std::size_t size() const { return closure_.ground_size(); }
  const StrictRelation& closure() const { return closure_; }
  const StrictRelation& covers() const { return covers_; }

  bool less(Element a, Element b) const { return closure_.holds(a, b); }
  bool leq(Element a, Element b) const { return a == b || closure_.holds(a, b); }
  bool comparable(Element a, Element b) const { return leq(a, b) || leq(b, a); }

  Element at(std::string_view name) const { return ground().at(name); }
  const std::string& name(Element e) const { return ground().name(e); }

  /// Same ground set and same order.
  bool operator==(const Poset& other) const { return closure_ == other.closure_; }

 private:
  friend Poset validate_order(const StrictRelation& rel);

  StrictRelation closure_;
  StrictRelation covers_;
};

/// Disjoint nonempty blocks covering a ground set. Blocks are normalized:
/// each block sorted, blocks ordered by their first element.
class Partition {
 public:
  Partition() = default;
  /// Throws InvalidPartition.
  Partition(GroundSet ground, std::vector<ElementSet> blocks);

  static Partition identity(const GroundSet& ground);
  static Partition from_names(GroundSet ground,
                              const std::vector<std::vector<std::string>>& blocks);

  const GroundSet& ground() const { return ground_; }
  const std::vector<ElementSet>& blocks() const { return blocks_; }
  /// Index of the block containing e.
  std::size_t block_of(Element e) const { return block_of_.at(e); }
  /// Singleton blocks keep the element's name; larger ones read "{a,b}".
  std::string block_name(std::size_t block) const;

  bool operator==(const Partition& other) const {
    return ground_ == other.ground_ && blocks_ == other.blocks_;
  }

 private:
  GroundSet ground_;
  std::vector<ElementSet> blocks_;
  std::vector<std::size_t> block_of_;
};

struct Extremes {
  std::optional<Element> greatest;
  std::optional<Element> least;
  ElementSet maximal;
  ElementSet minimal;
};

struct StructureProfile {
  bool is_upper_semilattice = false;
  bool is_lower_semilattice = false;
  bool is_total_order = false;
  std::optional<Element> greatest;
  std::optional<Element> least;
  ElementSet maximal_set;
  ElementSet minimal_set;
};

struct PreorderReduction {
  Partition classes;
  Poset order;
};

/// Closes the relation transitively. Throws CycleError with a witness cycle.
Poset validate_order(const StrictRelation& rel);

/// Convenience: build and validate from element and cover names.
Poset make_poset(std::vector<std::string> elements,
                 std::span<const std::pair<std::string, std::string>> covers);

/// Transitive reduction of the order.
StrictRelation hasse(const Poset& poset);

std::optional<Element> join(const Poset& poset, Element a, Element b);
std::optional<Element> meet(const Poset& poset, Element a, Element b);

/// Least upper bound of a subset; none for the empty subset.
std::optional<Element> sup_set(const Poset& poset, std::span<const Element> subset);
std::optional<Element> inf_set(const Poset& poset, std::span<const Element> subset);

/// Greatest element of a subset under the inherited order, if any.
std::optional<Element> greatest_of(const Poset& poset, std::span<const Element> subset);

Extremes extremes(const Poset& poset);
StructureProfile structure_profile(const Poset& poset);

/// Sub-poset induced on `subset`, ordered by ground position.
Poset induced_subposet(const Poset& poset, std::span<const Element> subset);

/// Order on partition blocks: B1 < B2 iff some x in B1, y in B2 with x < y.
/// Throws QuotientCycleError when that relation has a cycle.
Poset quotient(const Poset& poset, const Partition& partition);

/// Collapses mutually related elements (strongly connected components of the
/// closure) into blocks and orders the blocks. Self pairs are ignored.
PreorderReduction preorder_reduce(const GroundSet& ground, std::span<const ElementPair> pairs);

}  // namespace relrisk
