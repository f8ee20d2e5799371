#include "relrisk/order.hpp"

#include <algorithm>
#include <numeric>

namespace relrisk {
namespace {

// Dense n*n boolean matrix used while computing closures.
class Matrix {
 public:
  explicit Matrix(std::size_t n) : n_(n), bits_(n * n, 0) {}
  std::size_t size() const { return n_; }
  bool get(std::size_t i, std::size_t j) const { return bits_[i * n_ + j] != 0; }
  void set(std::size_t i, std::size_t j) { bits_[i * n_ + j] = 1; }

  // Warshall.
  void close() {
    for (std::size_t k = 0; k < n_; ++k) {
      for (std::size_t i = 0; i < n_; ++i) {
        if (!get(i, k)) continue;
        for (std::size_t j = 0; j < n_; ++j) {
          if (get(k, j)) set(i, j);
        }
      }
    }
  }

  std::vector<ElementPair> pairs() const {
    std::vector<ElementPair> out;
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        if (i != j && get(i, j)) out.emplace_back(i, j);
      }
    }
    return out;
  }

 private:
  std::size_t n_;
  std::vector<std::uint8_t> bits_;
};

Matrix to_matrix(const StrictRelation& rel) {
  Matrix m(rel.ground_size());
  for (const auto& [a, b] : rel.pairs()) m.set(a, b);
  return m;
}

// Depth-first search for a directed cycle, visiting vertices and successors
// in ascending order so the witness is deterministic.
std::optional<ElementSet> find_cycle(const Matrix& m) {
  enum class Color : std::uint8_t { kWhite, kGray, kBlack };
  const std::size_t n = m.size();
  std::vector<Color> color(n, Color::kWhite);
  std::vector<Element> path;
  std::optional<ElementSet> found;

  auto visit = [&](auto&& self, Element u) -> void {
    color[u] = Color::kGray;
    path.push_back(u);
    for (Element v = 0; v < n && !found; ++v) {
      if (u == v || !m.get(u, v)) continue;
      if (color[v] == Color::kGray) {
        auto start = std::find(path.begin(), path.end(), v);
        found = ElementSet(start, path.end());
        return;
      }
      if (color[v] == Color::kWhite) self(self, v);
    }
    path.pop_back();
    color[u] = Color::kBlack;
  };

  for (Element s = 0; s < n && !found; ++s) {
    if (color[s] == Color::kWhite) visit(visit, s);
  }
  return found;
}

std::string join_names(const std::vector<std::string>& names, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += sep;
    out += names[i];
  }
  return out;
}

std::string cycle_message(const std::vector<std::string>& names) {
  std::string text = "order has a cycle: " + join_names(names, " < ");
  if (!names.empty()) text += " < " + names.front();
  return text;
}

ElementSet minimal_of(const Poset& poset, const ElementSet& set) {
  ElementSet out;
  for (Element x : set) {
    bool minimal = std::none_of(set.begin(), set.end(),
                                [&](Element y) { return poset.less(y, x); });
    if (minimal) out.push_back(x);
  }
  return out;
}

ElementSet maximal_of(const Poset& poset, const ElementSet& set) {
  ElementSet out;
  for (Element x : set) {
    bool maximal = std::none_of(set.begin(), set.end(),
                                [&](Element y) { return poset.less(x, y); });
    if (maximal) out.push_back(x);
  }
  return out;
}

void check_members(const Poset& poset, std::span<const Element> subset) {
  for (Element e : subset) {
    if (e >= poset.size()) throw UnknownElement("#" + std::to_string(e));
  }
}

}  // namespace

UnknownElement::UnknownElement(std::string name)
    : OrderError("unknown element '" + name + "'"), name_(std::move(name)) {}

DuplicateElement::DuplicateElement(std::string name)
    : OrderError("duplicate element '" + name + "'"), name_(std::move(name)) {}

CycleError::CycleError(ElementSet cycle, std::vector<std::string> names)
    : OrderError(cycle_message(names)), cycle_(std::move(cycle)), names_(std::move(names)) {}

QuotientCycleError::QuotientCycleError(std::vector<ElementSet> blocks,
                                       std::vector<std::string> names)
    : OrderError("quotient " + cycle_message(names)),
      blocks_(std::move(blocks)),
      names_(std::move(names)) {}

// ---------------------------------------------------------------------------
// GroundSet

GroundSet::GroundSet(std::vector<std::string> names) : names_(std::move(names)) {
  for (Element i = 0; i < names_.size(); ++i) {
    if (!index_.emplace(names_[i], i).second) throw DuplicateElement(names_[i]);
  }
}

std::optional<Element> GroundSet::find(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Element GroundSet::at(std::string_view name) const {
  auto found = find(name);
  if (!found) throw UnknownElement(std::string(name));
  return *found;
}

ElementSet GroundSet::resolve(std::span<const std::string> names) const {
  ElementSet out;
  out.reserve(names.size());
  for (const auto& n : names) out.push_back(at(n));
  return out;
}

std::vector<std::string> GroundSet::names_of(std::span<const Element> elements) const {
  std::vector<std::string> out;
  out.reserve(elements.size());
  for (Element e : elements) out.push_back(name(e));
  return out;
}

// ---------------------------------------------------------------------------
// StrictRelation

StrictRelation::StrictRelation(GroundSet ground)
    : ground_(std::move(ground)), bits_(ground_.size() * ground_.size(), 0) {}

StrictRelation::StrictRelation(GroundSet ground, std::span<const ElementPair> pairs)
    : StrictRelation(std::move(ground)) {
  const std::size_t n = ground_.size();
  for (const auto& [a, b] : pairs) {
    if (a >= n || b >= n) throw InvalidRelation("relation pair out of range");
    if (a == b) {
      throw InvalidRelation("self pair '" + ground_.name(a) + " < " + ground_.name(a) +
                            "' in a strict relation");
    }
    bits_[a * n + b] = 1;
  }
}

StrictRelation StrictRelation::from_names(
    GroundSet ground, std::span<const std::pair<std::string, std::string>> pairs) {
  std::vector<ElementPair> resolved;
  resolved.reserve(pairs.size());
  for (const auto& [a, b] : pairs) resolved.emplace_back(ground.at(a), ground.at(b));
  return StrictRelation(std::move(ground), resolved);
}

std::vector<ElementPair> StrictRelation::pairs() const {
  std::vector<ElementPair> out;
  const std::size_t n = ground_.size();
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (bits_[a * n + b]) out.emplace_back(a, b);
    }
  }
  return out;
}

std::size_t StrictRelation::pair_count() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1));
}

StrictRelation transitive_closure(const StrictRelation& rel) {
  Matrix m = to_matrix(rel);
  if (auto cycle = find_cycle(m)) {
    throw CycleError(*cycle, rel.ground().names_of(*cycle));
  }
  m.close();
  return StrictRelation(rel.ground(), m.pairs());
}

// ---------------------------------------------------------------------------
// Partition

Partition::Partition(GroundSet ground, std::vector<ElementSet> blocks)
    : ground_(std::move(ground)), block_of_(ground_.size(), ground_.size()) {
  for (auto& block : blocks) {
    if (block.empty()) throw InvalidPartition("partition has an empty block");
    std::sort(block.begin(), block.end());
  }
  std::sort(blocks.begin(), blocks.end(),
            [](const ElementSet& a, const ElementSet& b) { return a.front() < b.front(); });
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (Element e : blocks[i]) {
      if (e >= ground_.size()) throw InvalidPartition("partition element out of range");
      if (block_of_[e] != ground_.size()) {
        throw InvalidPartition("element '" + ground_.name(e) + "' appears in two blocks");
      }
      block_of_[e] = i;
    }
  }
  for (Element e = 0; e < ground_.size(); ++e) {
    if (block_of_[e] == ground_.size()) {
      throw InvalidPartition("element '" + ground_.name(e) + "' is in no block");
    }
  }
  blocks_ = std::move(blocks);
}

Partition Partition::identity(const GroundSet& ground) {
  std::vector<ElementSet> blocks;
  for (Element e = 0; e < ground.size(); ++e) blocks.push_back({e});
  return Partition(ground, std::move(blocks));
}

Partition Partition::from_names(GroundSet ground,
                                const std::vector<std::vector<std::string>>& blocks) {
  std::vector<ElementSet> resolved;
  for (const auto& block : blocks) resolved.push_back(ground.resolve(block));
  return Partition(std::move(ground), std::move(resolved));
}

std::string Partition::block_name(std::size_t block) const {
  const ElementSet& members = blocks_.at(block);
  if (members.size() == 1) return ground_.name(members.front());
  return "{" + join_names(ground_.names_of(members), ",") + "}";
}

// ---------------------------------------------------------------------------
// Poset construction

Poset validate_order(const StrictRelation& rel) {
  Poset poset;
  poset.closure_ = transitive_closure(rel);
  const std::size_t n = rel.ground_size();
  std::vector<ElementPair> covers;
  for (const auto& [a, b] : poset.closure_.pairs()) {
    bool between = false;
    for (Element c = 0; c < n && !between; ++c) {
      between = poset.closure_.holds(a, c) && poset.closure_.holds(c, b);
    }
    if (!between) covers.emplace_back(a, b);
  }
  poset.covers_ = StrictRelation(rel.ground(), covers);
  return poset;
}

Poset make_poset(std::vector<std::string> elements,
                 std::span<const std::pair<std::string, std::string>> covers) {
  return validate_order(StrictRelation::from_names(GroundSet(std::move(elements)), covers));
}

StrictRelation hasse(const Poset& poset) { return poset.covers(); }

// ---------------------------------------------------------------------------
// Bounds

std::optional<Element> join(const Poset& poset, Element a, Element b) {
  const Element pair[] = {a, b};
  return sup_set(poset, pair);
}

std::optional<Element> meet(const Poset& poset, Element a, Element b) {
  const Element pair[] = {a, b};
  return inf_set(poset, pair);
}

std::optional<Element> sup_set(const Poset& poset, std::span<const Element> subset) {
  check_members(poset, subset);
  if (subset.empty()) return std::nullopt;
  ElementSet upper;
  for (Element c = 0; c < poset.size(); ++c) {
    if (std::all_of(subset.begin(), subset.end(), [&](Element x) { return poset.leq(x, c); })) {
      upper.push_back(c);
    }
  }
  ElementSet least = minimal_of(poset, upper);
  if (least.size() != 1) return std::nullopt;
  return least.front();
}

std::optional<Element> inf_set(const Poset& poset, std::span<const Element> subset) {
  check_members(poset, subset);
  if (subset.empty()) return std::nullopt;
  ElementSet lower;
  for (Element c = 0; c < poset.size(); ++c) {
    if (std::all_of(subset.begin(), subset.end(), [&](Element x) { return poset.leq(c, x); })) {
      lower.push_back(c);
    }
  }
  ElementSet greatest = maximal_of(poset, lower);
  if (greatest.size() != 1) return std::nullopt;
  return greatest.front();
}

std::optional<Element> greatest_of(const Poset& poset, std::span<const Element> subset) {
  check_members(poset, subset);
  for (Element x : subset) {
    if (std::all_of(subset.begin(), subset.end(), [&](Element y) { return poset.leq(y, x); })) {
      return x;
    }
  }
  return std::nullopt;
}

Extremes extremes(const Poset& poset) {
  ElementSet all(poset.size());
  std::iota(all.begin(), all.end(), Element{0});
  Extremes out;
  out.maximal = maximal_of(poset, all);
  out.minimal = minimal_of(poset, all);
  if (out.maximal.size() == 1) out.greatest = out.maximal.front();
  if (out.minimal.size() == 1) out.least = out.minimal.front();
  return out;
}

StructureProfile structure_profile(const Poset& poset) {
  StructureProfile profile;
  profile.is_upper_semilattice = true;
  profile.is_lower_semilattice = true;
  profile.is_total_order = true;
  const std::size_t n = poset.size();
  for (Element a = 0; a < n; ++a) {
    for (Element b = a + 1; b < n; ++b) {
      if (!poset.comparable(a, b)) profile.is_total_order = false;
      if (profile.is_upper_semilattice && !join(poset, a, b)) profile.is_upper_semilattice = false;
      if (profile.is_lower_semilattice && !meet(poset, a, b)) profile.is_lower_semilattice = false;
    }
  }
  Extremes ext = extremes(poset);
  profile.greatest = ext.greatest;
  profile.least = ext.least;
  profile.maximal_set = std::move(ext.maximal);
  profile.minimal_set = std::move(ext.minimal);
  return profile;
}

// ---------------------------------------------------------------------------
// Derived orders

Poset induced_subposet(const Poset& poset, std::span<const Element> subset) {
  check_members(poset, subset);
  ElementSet members(subset.begin(), subset.end());
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  std::vector<ElementPair> pairs;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j < members.size(); ++j) {
      if (poset.less(members[i], members[j])) pairs.emplace_back(i, j);
    }
  }
  return validate_order(StrictRelation(GroundSet(poset.ground().names_of(members)), pairs));
}

Poset quotient(const Poset& poset, const Partition& partition) {
  if (!(partition.ground() == poset.ground())) {
    throw InvalidPartition("partition is over a different ground set");
  }
  const std::size_t k = partition.blocks().size();
  std::vector<std::string> names;
  for (std::size_t i = 0; i < k; ++i) names.push_back(partition.block_name(i));
  Matrix induced(k);
  for (const auto& [x, y] : poset.closure().pairs()) {
    std::size_t bx = partition.block_of(x);
    std::size_t by = partition.block_of(y);
    if (bx != by) induced.set(bx, by);
  }
  if (auto cycle = find_cycle(induced)) {
    std::vector<ElementSet> blocks;
    std::vector<std::string> witness;
    for (Element b : *cycle) {
      blocks.push_back(partition.blocks()[b]);
      witness.push_back(names[b]);
    }
    throw QuotientCycleError(std::move(blocks), std::move(witness));
  }
  return validate_order(StrictRelation(GroundSet(std::move(names)), induced.pairs()));
}

PreorderReduction preorder_reduce(const GroundSet& ground, std::span<const ElementPair> pairs) {
  const std::size_t n = ground.size();
  Matrix m(n);
  for (const auto& [a, b] : pairs) {
    if (a >= n || b >= n) throw InvalidRelation("relation pair out of range");
    if (a != b) m.set(a, b);
  }
  m.close();
  std::vector<ElementSet> blocks;
  std::vector<bool> assigned(n, false);
  for (Element a = 0; a < n; ++a) {
    if (assigned[a]) continue;
    ElementSet block{a};
    assigned[a] = true;
    for (Element b = a + 1; b < n; ++b) {
      if (!assigned[b] && m.get(a, b) && m.get(b, a)) {
        block.push_back(b);
        assigned[b] = true;
      }
    }
    blocks.push_back(std::move(block));
  }
  Partition classes(ground, std::move(blocks));

  std::vector<std::string> names;
  for (std::size_t i = 0; i < classes.blocks().size(); ++i) names.push_back(classes.block_name(i));
  Matrix induced(classes.blocks().size());
  for (const auto& [x, y] : m.pairs()) {
    std::size_t bx = classes.block_of(x);
    std::size_t by = classes.block_of(y);
    if (bx != by) induced.set(bx, by);
  }
  Poset order = validate_order(StrictRelation(GroundSet(std::move(names)), induced.pairs()));
  return {std::move(classes), std::move(order)};
}

}  // namespace relrisk
