#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "betweenness/relation.hpp"

namespace btw {

/// Injective map that preserves and reflects triples, so the source is an
/// induced substructure of the target.
struct StrongEmbedding {
  Carrier source;
  Carrier target;
  std::vector<Index> assignment;

  friend bool operator==(const StrongEmbedding&, const StrongEmbedding&) = default;
};

/// Triples of `rel` read in tuple order: bit (i*k+j)*k+l is set iff
/// (tuple[i], tuple[j], tuple[l]) is in rel, where k = tuple.size().
Bits pattern(const TernaryRelation& rel, std::span<const Index> tuple);

/// Witnesses are [u,v,w] source triples whose membership differs from that of
/// their image, or [x,y] for two points with the same image.
Report check_strong(const TernaryRelation& source, const TernaryRelation& target,
                    std::span<const Index> assignment);

/// Every strong embedding of u into v, in lexicographic order of assignments.
std::vector<StrongEmbedding> find_embeddings(const TernaryRelation& u, const TernaryRelation& v);

inline constexpr std::size_t max_canonical_points = 8;

/// The least relabelling onto "0".."n-1" over all permutations, comparing bit
/// cubes lexicographically. Throws carrier_too_large above 8 points.
TernaryRelation canonical_form(const TernaryRelation& rel);
bool isomorphic(const TernaryRelation& a, const TernaryRelation& b);

struct Joint {
  TernaryRelation result;
  StrongEmbedding e1;
  StrongEmbedding e2;
};

/// Disjoint union plus bottom. Labels of v that clash are primed until fresh.
/// Throws not_r_relation.
Joint jep(const TernaryRelation& u, const TernaryRelation& v);

struct Amalgam {
  TernaryRelation result;
  StrongEmbedding g1;
  StrongEmbedding g2;
  bool closure_applied = false;
};

/// Free amalgam of b1 and b2 over a: b1 keeps its labels, the rest of b2 is
/// added (primed on clashes), and the triples are both images plus bottom.
/// When that union is not an R-relation, r_closure is applied and both legs
/// are re-verified. Throws not_r_relation, invalid_map if f1 or f2 is not
/// strong, and amalgamation if a leg stops being strong after closure.
Amalgam amalgamate(const TernaryRelation& a, const TernaryRelation& b1,
                   const TernaryRelation& b2, std::span<const Index> f1,
                   std::span<const Index> f2);

/// A one-point extension asked of a structure: `extension` lives on the base
/// labels plus one new label and induces the structure's own triples on base.
struct ExtensionRequest {
  std::vector<Label> base;
  TernaryRelation extension;
  Label fresh;  ///< the added label inside `extension`

  friend bool operator==(const ExtensionRequest&, const ExtensionRequest&) = default;
};

/// A point of m realising the request over its base, if any.
std::optional<Label> realise(const TernaryRelation& m, const ExtensionRequest& request);

/// Every request over every base U with |U| < k and |U| + 1 <= k. Throws
/// carrier_too_large for k > 4.
std::vector<ExtensionRequest> extension_requests(const TernaryRelation& m, std::size_t k);

struct AuditReport {
  std::size_t k = 0;
  std::size_t requests = 0;
  std::vector<ExtensionRequest> unmet;

  bool holds() const noexcept { return unmet.empty(); }
};

AuditReport audit_extension_property(const TernaryRelation& m, std::size_t k);

struct SatisfiedRequest {
  std::size_t round = 0;
  ExtensionRequest request;
  Label witness;
  bool added = false;  ///< satisfied by amalgamating a new point
};

struct ChainReport {
  std::size_t size_bound = 0;
  std::size_t rounds = 0;
  std::uint64_t seed = 0;
  std::vector<TernaryRelation> stages;  ///< stages[0] is the one-point start
  std::vector<StrongEmbedding> links;   ///< stages[i] into stages[i+1]
  std::vector<SatisfiedRequest> satisfied;
  std::vector<ExtensionRequest> pending;  ///< unmet on the final stage

  const TernaryRelation& last() const { return stages.back(); }
};

/// Grows a finite approximation of the limit. Each round collects every
/// request on the current stage, shuffles them with the seed, and amalgamates
/// a new point for each one still unmet. Throws carrier_too_large for
/// size_bound > 4, invalid_input for rounds == 0, and propagates
/// amalgamation failures.
ChainReport fraisse_chain(std::size_t size_bound, std::size_t rounds, std::uint64_t seed);

struct HomogeneityFailure {
  std::vector<Label> from;
  std::vector<Label> to;
  Label point;  ///< has no image extending from -> to
};

struct HomogeneityReport {
  std::size_t k = 0;
  std::size_t isomorphisms = 0;
  std::size_t failure_count = 0;
  std::vector<HomogeneityFailure> failures;  ///< first 64

  bool holds() const noexcept { return failure_count == 0; }
};

/// Forth step for every isomorphism between induced substructures of size
/// 1..k. Throws carrier_too_large for k > 3 or more than 12 points.
HomogeneityReport check_partial_homogeneity(const TernaryRelation& m, std::size_t k);

}  // namespace btw
