#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace btw {

using Label = std::string;
using Index = std::size_t;
using Bits = boost::dynamic_bitset<>;
using LabelTriple = std::array<Label, 3>;
/// A violating tuple, spelled out in carrier labels.
using Witness = std::vector<Label>;

/// Finite set of labels kept in lexicographic order. Indices into a carrier
/// are positions in that order, so every iteration over a carrier is sorted.
class Carrier {
 public:
  Carrier() = default;
  /// Sorts the labels; throws duplicate_label if two coincide.
  explicit Carrier(std::vector<Label> labels);

  std::size_t size() const noexcept { return labels_.size(); }
  bool empty() const noexcept { return labels_.empty(); }
  const Label& operator[](Index i) const { return labels_[i]; }
  const std::vector<Label>& labels() const noexcept { return labels_; }
  auto begin() const noexcept { return labels_.begin(); }
  auto end() const noexcept { return labels_.end(); }

  std::optional<Index> find(std::string_view label) const;
  bool contains(std::string_view label) const { return find(label).has_value(); }
  /// Throws unknown_label.
  Index index_of(std::string_view label) const;

  friend bool operator==(const Carrier&, const Carrier&) = default;

 private:
  std::vector<Label> labels_;
};

struct Triple {
  Index a = 0;
  Index b = 0;
  Index c = 0;

  friend auto operator<=>(const Triple&, const Triple&) = default;
};

/// A set of ordered triples over a carrier; (a, b, c) reads "b lies between
/// a and c". Stored as a dense bit cube, which keeps set algebra cheap at the
/// carrier sizes this library targets.
class TernaryRelation {
 public:
  TernaryRelation() = default;
  explicit TernaryRelation(Carrier carrier);
  /// Builds from labelled triples; with `mirror` every (a,b,c) also adds (c,b,a).
  TernaryRelation(Carrier carrier, std::span<const LabelTriple> triples, bool mirror = false);

  const Carrier& carrier() const noexcept { return carrier_; }
  std::size_t order() const noexcept { return carrier_.size(); }
  std::size_t count() const { return bits_.count(); }
  const Bits& bits() const noexcept { return bits_; }

  bool contains(Index a, Index b, Index c) const { return bits_.test(position(a, b, c)); }
  bool contains(const Triple& t) const { return contains(t.a, t.b, t.c); }
  bool contains(std::string_view a, std::string_view b, std::string_view c) const;

  void insert(Index a, Index b, Index c) { bits_.set(position(a, b, c)); }
  void insert(const Triple& t) { insert(t.a, t.b, t.c); }
  void insert_mirrored(Index a, Index b, Index c) {
    insert(a, b, c);
    insert(c, b, a);
  }
  void erase(Index a, Index b, Index c) { bits_.reset(position(a, b, c)); }

  /// Sorted lexicographically (indices follow label order).
  std::vector<Triple> triples() const;
  std::vector<LabelTriple> labelled_triples() const;

  /// The interval {x | (a, x, c)} as a bitset over the carrier.
  Bits middles(Index a, Index c) const;

  /// Requires identical carriers.
  bool subset_of(const TernaryRelation& other) const;
  TernaryRelation& operator|=(const TernaryRelation& other);
  TernaryRelation& operator&=(const TernaryRelation& other);

  template <class F>
  void for_each_triple(F&& f) const {
    const std::size_t n = order();
    for (auto pos = bits_.find_first(); pos != Bits::npos; pos = bits_.find_next(pos)) {
      f(Triple{pos / (n * n), (pos / n) % n, pos % n});
    }
  }

  friend bool operator==(const TernaryRelation&, const TernaryRelation&) = default;

 private:
  std::size_t position(Index a, Index b, Index c) const {
    const std::size_t n = order();
    return (a * n + b) * n + c;
  }
  void require_same_carrier(const TernaryRelation& other) const;

  Carrier carrier_;
  Bits bits_;
};

/// X_bot = {(a,b,b), (b,b,a)}: the least R-relation on the carrier.
TernaryRelation bottom_relation(const Carrier& carrier);
/// X_top = X^3 minus {(a,b,a) | a != b}: the greatest R-relation.
TernaryRelation top_relation(const Carrier& carrier);

/// [a,b] = {c | (a,c,b)}, sorted. Throws unknown_label.
std::vector<Label> interval(const TernaryRelation& rel, std::string_view a, std::string_view b);

/// Induced substructure on the given points (indices into rel's carrier).
TernaryRelation induced(const TernaryRelation& rel, std::span<const Index> points);

/// Image of rel's triples under an assignment into `target` (a carrier).
TernaryRelation image(const TernaryRelation& rel, std::span<const Index> assignment,
                      const Carrier& target);

/// Holds/witnesses pair shared by every checking operation.
struct Report {
  bool holds = true;
  std::vector<Witness> witnesses;

  void add(Witness w) {
    holds = false;
    witnesses.push_back(std::move(w));
  }
};

enum class Axiom { r1, r2, r3, r4, antisymmetry, disjunctivity };

const char* to_string(Axiom axiom) noexcept;
/// Accepts R1..R4, ANTISYM, DISJ. Throws invalid_input.
Axiom parse_axiom(std::string_view name);

struct AxiomReport {
  Axiom axiom = Axiom::r1;
  bool holds = true;
  std::vector<Witness> witnesses;
};

/// A total function between the carriers of two relations. It is not
/// required to be monotone; is_monotone() decides that.
class RelMap {
 public:
  /// Throws invalid_map when the assignment is not total into the target.
  RelMap(TernaryRelation source, TernaryRelation target, std::vector<Index> assignment);

  static RelMap identity(const TernaryRelation& rel);

  const TernaryRelation& source() const noexcept { return source_; }
  const TernaryRelation& target() const noexcept { return target_; }
  const std::vector<Index>& assignment() const noexcept { return assignment_; }
  Index operator()(Index i) const { return assignment_[i]; }
  const Label& operator()(std::string_view label) const;

  bool is_identity() const;

 private:
  TernaryRelation source_;
  TernaryRelation target_;
  std::vector<Index> assignment_;
};

/// after ∘ first. Throws carrier_mismatch unless first.target() == after.source().
RelMap compose(const RelMap& first, const RelMap& after);

/// holds iff every source triple lands on a target triple; witnesses are the
/// source triples that do not.
Report is_monotone(const RelMap& f);

/// An equivalence relation on a carrier. Blocks are numbered by their least
/// element, and the least label of a block is its representative.
class Partition {
 public:
  Partition() = default;
  /// block_of[i] is an arbitrary block id for element i; ids are normalised.
  Partition(Carrier carrier, std::span<const std::size_t> block_of);

  static Partition discrete(Carrier carrier);
  /// Throws unknown_label / invalid_partition for overlapping blocks;
  /// unlisted labels become singletons.
  static Partition from_blocks(Carrier carrier, const std::vector<std::vector<Label>>& blocks);

  const Carrier& carrier() const noexcept { return carrier_; }
  std::size_t block_count() const noexcept { return representatives_.size(); }
  std::size_t block_of(Index i) const { return block_of_[i]; }
  bool same_block(Index i, Index j) const { return block_of_[i] == block_of_[j]; }
  Index representative(std::size_t block) const { return representatives_[block]; }
  std::vector<std::vector<Index>> blocks() const;
  /// Blocks with more than one element, as sorted label lists.
  std::vector<std::vector<Label>> nontrivial_blocks() const;
  bool is_discrete() const noexcept { return block_count() == carrier_.size(); }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  Carrier carrier_;
  std::vector<std::size_t> block_of_;
  std::vector<Index> representatives_;
};

struct Quotient {
  TernaryRelation relation;
  RelMap map;
};

/// [A,B,C] holds in the quotient iff some (x,y,z) with x∈A, y∈B, z∈C holds.
/// Throws carrier_mismatch if the partition is over a different carrier.
Quotient quotient_relation(const TernaryRelation& rel, const Partition& part);

}  // namespace btw
