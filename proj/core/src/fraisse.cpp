#include "betweenness/fraisse.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "betweenness/axioms.hpp"
#include "betweenness/closures.hpp"
#include "betweenness/error.hpp"
#include "betweenness/rlattice.hpp"

namespace btw {
namespace {

constexpr std::size_t max_extension_points = 4;
constexpr std::size_t max_homogeneity_k = 3;
constexpr std::size_t max_homogeneity_points = 12;
constexpr std::size_t homogeneity_failure_limit = 64;

void require_r(const TernaryRelation& rel, const char* what) {
  if (!is_r_relation(rel)) throw Error(ErrorCode::not_r_relation, std::string(what) + " is not an R-relation");
}

std::vector<Label> numbered_labels(std::size_t n) {
  std::vector<Label> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::to_string(i));
  return out;
}

/// R-relations on "0".."s" (new point "s"), grouped by what they induce on "0".."s-1".
using TypeTable = std::map<Bits, std::vector<TernaryRelation>>;

const TypeTable& extension_types(std::size_t s) {
  static const std::array<TypeTable, max_extension_points> tables = [] {
    std::array<TypeTable, max_extension_points> out;
    for (std::size_t size = 0; size < max_extension_points; ++size) {
      const Carrier carrier(numbered_labels(size + 1));
      std::vector<Index> base(size);
      std::iota(base.begin(), base.end(), Index{0});
      for (auto& w : enumerate_relations(carrier, RelationFilter::all_r, max_extension_points)) {
        Bits key = pattern(w, base);
        out[size][std::move(key)].push_back(std::move(w));
      }
    }
    return out;
  }();
  return tables.at(s);
}

Label fresh_marker(const std::vector<Label>& taken) {
  Label out = "*";
  while (std::find(taken.begin(), taken.end(), out) != taken.end()) out += "*";
  return out;
}

/// The request for type w over the given base of m, with the new point named `fresh`.
ExtensionRequest make_request(const std::vector<Label>& base, const TernaryRelation& w,
                              const Label& fresh) {
  std::vector<Label> labels = base;
  labels.push_back(fresh);
  // Position i of w is labels[i]; the carrier sorts them.
  const Carrier carrier(labels);
  std::vector<Index> to(labels.size());
  for (Index i = 0; i < labels.size(); ++i) to[i] = carrier.index_of(labels[i]);
  TernaryRelation ext = image(w, to, carrier);
  return ExtensionRequest{base, std::move(ext), fresh};
}

std::vector<ExtensionRequest> requests_over(const TernaryRelation& m, std::span<const Index> base) {
  const TypeTable& table = extension_types(base.size());
  const auto it = table.find(pattern(m, base));
  if (it == table.end()) return {};
  std::vector<Label> labels;
  for (Index i : base) labels.push_back(m.carrier()[i]);
  const Label fresh = fresh_marker(labels);
  std::vector<ExtensionRequest> out;
  for (const auto& w : it->second) out.push_back(make_request(labels, w, fresh));
  return out;
}

/// Calls f on every increasing index tuple of length `size` below n.
template <class F>
void for_each_subset(std::size_t n, std::size_t size, F&& f) {
  std::vector<Index> pick(size);
  std::iota(pick.begin(), pick.end(), Index{0});
  if (size > n) return;
  while (true) {
    f(std::span<const Index>(pick));
    std::size_t i = size;
    while (i > 0 && pick[i - 1] == n - size + i - 1) --i;
    if (i == 0) return;
    ++pick[i - 1];
    for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
  }
}

StrongEmbedding embedding(const TernaryRelation& source, const TernaryRelation& target,
                          std::vector<Index> assignment) {
  return StrongEmbedding{source.carrier(), target.carrier(), std::move(assignment)};
}

std::vector<Index> inclusion(const Carrier& small, const Carrier& big) {
  std::vector<Index> out;
  for (const Label& l : small) out.push_back(big.index_of(l));
  return out;
}

Label unique_label(Label label, const std::set<Label>& used) {
  while (used.contains(label)) label += "'";
  return label;
}

}  // namespace

Bits pattern(const TernaryRelation& rel, std::span<const Index> tuple) {
  const std::size_t k = tuple.size();
  Bits out(k * k * k);
  for (Index i = 0; i < k; ++i) {
    for (Index j = 0; j < k; ++j) {
      for (Index l = 0; l < k; ++l) {
        if (rel.contains(tuple[i], tuple[j], tuple[l])) out.set((i * k + j) * k + l);
      }
    }
  }
  return out;
}

Report check_strong(const TernaryRelation& source, const TernaryRelation& target,
                    std::span<const Index> assignment) {
  Report report;
  const Carrier& x = source.carrier();
  const std::size_t n = source.order();
  if (assignment.size() != n) throw Error(ErrorCode::invalid_map, "assignment is not total");
  for (Index v : assignment) {
    if (v >= target.order()) throw Error(ErrorCode::invalid_map, "assignment leaves the target");
  }
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      if (assignment[i] == assignment[j]) report.add({x[i], x[j]});
    }
  }
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      for (Index c = 0; c < n; ++c) {
        if (source.contains(a, b, c) != target.contains(assignment[a], assignment[b], assignment[c])) {
          report.add({x[a], x[b], x[c]});
        }
      }
    }
  }
  return report;
}

std::vector<StrongEmbedding> find_embeddings(const TernaryRelation& u, const TernaryRelation& v) {
  const std::size_t n = u.order();
  const std::size_t m = v.order();
  std::vector<StrongEmbedding> out;
  if (n > m) return out;
  std::vector<Index> assignment;
  std::vector<bool> used(m, false);
  // Extends a partial assignment, checking triples that involve the newest point.
  auto consistent = [&](Index last) {
    const Index fl = assignment[last];
    for (Index i = 0; i <= last; ++i) {
      for (Index j = 0; j <= last; ++j) {
        const Index fi = assignment[i];
        const Index fj = assignment[j];
        if (u.contains(last, i, j) != v.contains(fl, fi, fj)) return false;
        if (u.contains(i, last, j) != v.contains(fi, fl, fj)) return false;
        if (u.contains(i, j, last) != v.contains(fi, fj, fl)) return false;
      }
    }
    return true;
  };
  auto search = [&](auto&& self) -> void {
    const Index next = assignment.size();
    if (next == n) {
      out.push_back(embedding(u, v, assignment));
      return;
    }
    for (Index t = 0; t < m; ++t) {
      if (used[t]) continue;
      assignment.push_back(t);
      used[t] = true;
      if (consistent(next)) self(self);
      used[t] = false;
      assignment.pop_back();
    }
  };
  search(search);
  return out;
}

TernaryRelation canonical_form(const TernaryRelation& rel) {
  const std::size_t n = rel.order();
  if (n > max_canonical_points) {
    throw Error(ErrorCode::carrier_too_large, "canonical forms are limited to 8 points");
  }
  std::vector<Index> perm(n);
  std::iota(perm.begin(), perm.end(), Index{0});
  std::vector<Index> best = perm;
  std::string best_key;
  bool first = true;
  do {
    std::string key(n * n * n, '0');
    for (Index i = 0; i < n; ++i) {
      for (Index j = 0; j < n; ++j) {
        for (Index k = 0; k < n; ++k) {
          if (rel.contains(perm[i], perm[j], perm[k])) key[(i * n + j) * n + k] = '1';
        }
      }
    }
    if (first || key < best_key) {
      best_key = std::move(key);
      best = perm;
      first = false;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  // Label "i" must land on index i; "10" sorts before "2", hence n <= 8 keeps this exact.
  TernaryRelation out{Carrier(numbered_labels(n))};
  for (std::size_t pos = 0; pos < best_key.size(); ++pos) {
    if (best_key[pos] == '1') out.insert(pos / (n * n), (pos / n) % n, pos % n);
  }
  return out;
}

bool isomorphic(const TernaryRelation& a, const TernaryRelation& b) {
  if (a.order() != b.order() || a.count() != b.count()) return false;
  return canonical_form(a) == canonical_form(b);
}

Joint jep(const TernaryRelation& u, const TernaryRelation& v) {
  require_r(u, "first structure");
  require_r(v, "second structure");
  std::set<Label> used(u.carrier().begin(), u.carrier().end());
  used.insert(v.carrier().begin(), v.carrier().end());
  std::vector<Label> v_labels;
  for (const Label& l : v.carrier()) {
    if (u.carrier().contains(l)) {
      v_labels.push_back(unique_label(l, used));
      used.insert(v_labels.back());
    } else {
      v_labels.push_back(l);
    }
  }
  std::vector<Label> all = u.carrier().labels();
  all.insert(all.end(), v_labels.begin(), v_labels.end());
  const Carrier carrier(all);
  std::vector<Index> e1 = inclusion(u.carrier(), carrier);
  std::vector<Index> e2;
  for (const Label& l : v_labels) e2.push_back(carrier.index_of(l));
  TernaryRelation w = bottom_relation(carrier);
  w |= image(u, e1, carrier);
  w |= image(v, e2, carrier);
  return Joint{w, embedding(u, w, std::move(e1)), embedding(v, w, std::move(e2))};
}

Amalgam amalgamate(const TernaryRelation& a, const TernaryRelation& b1,
                   const TernaryRelation& b2, std::span<const Index> f1,
                   std::span<const Index> f2) {
  require_r(a, "base");
  require_r(b1, "first extension");
  require_r(b2, "second extension");
  if (!check_strong(a, b1, f1).holds) throw Error(ErrorCode::invalid_map, "f1 is not a strong embedding");
  if (!check_strong(a, b2, f2).holds) throw Error(ErrorCode::invalid_map, "f2 is not a strong embedding");

  // b2 points hit by f2 follow their base point into b1.
  std::vector<std::optional<Index>> from_base(b2.order());
  for (Index i = 0; i < a.order(); ++i) from_base[f2[i]] = f1[i];

  std::set<Label> used(b1.carrier().begin(), b1.carrier().end());
  used.insert(b2.carrier().begin(), b2.carrier().end());
  std::vector<Label> labels = b1.carrier().labels();
  std::vector<Label> b2_labels(b2.order());
  for (Index j = 0; j < b2.order(); ++j) {
    if (from_base[j]) {
      b2_labels[j] = b1.carrier()[*from_base[j]];
      continue;
    }
    const Label& own = b2.carrier()[j];
    b2_labels[j] = b1.carrier().contains(own) ? unique_label(own, used) : own;
    used.insert(b2_labels[j]);
    labels.push_back(b2_labels[j]);
  }
  const Carrier carrier(labels);
  std::vector<Index> g1 = inclusion(b1.carrier(), carrier);
  std::vector<Index> g2;
  for (const Label& l : b2_labels) g2.push_back(carrier.index_of(l));

  TernaryRelation glued = bottom_relation(carrier);
  glued |= image(b1, g1, carrier);
  glued |= image(b2, g2, carrier);
  if (is_r_relation(glued)) {
    return Amalgam{glued, embedding(b1, glued, std::move(g1)), embedding(b2, glued, std::move(g2)), false};
  }

  ClosureResult closed = r_closure(glued);
  for (Index& i : g1) i = closed.quotient(i);
  for (Index& i : g2) i = closed.quotient(i);
  const Report s1 = check_strong(b1, closed.relation, g1);
  const Report s2 = check_strong(b2, closed.relation, g2);
  if (!s1.holds || !s2.holds) {
    const Witness& w = !s1.holds ? s1.witnesses.front() : s2.witnesses.front();
    std::string tuple;
    for (const Label& l : w) tuple += (tuple.empty() ? "" : ",") + l;
    throw Error(ErrorCode::amalgamation,
                std::string("closing the free amalgam breaks the ") + (!s1.holds ? "first" : "second") +
                    " leg at (" + tuple + ")");
  }
  return Amalgam{closed.relation, embedding(b1, closed.relation, std::move(g1)),
                 embedding(b2, closed.relation, std::move(g2)), true};
}

std::optional<Label> realise(const TernaryRelation& m, const ExtensionRequest& request) {
  const Carrier& ext = request.extension.carrier();
  std::vector<Index> tuple(ext.size());
  std::optional<Index> slot;
  for (Index i = 0; i < ext.size(); ++i) {
    if (ext[i] == request.fresh) {
      slot = i;
      continue;
    }
    const auto at = m.carrier().find(ext[i]);
    if (!at) return std::nullopt;
    tuple[i] = *at;
  }
  if (!slot) throw Error(ErrorCode::invalid_input, "request has no fresh point");
  std::vector<bool> in_base(m.order(), false);
  for (Index i = 0; i < tuple.size(); ++i) {
    if (i != *slot) in_base[tuple[i]] = true;
  }
  for (Index p = 0; p < m.order(); ++p) {
    if (in_base[p]) continue;
    tuple[*slot] = p;
    if (pattern(m, tuple) == request.extension.bits()) return m.carrier()[p];
  }
  return std::nullopt;
}

std::vector<ExtensionRequest> extension_requests(const TernaryRelation& m, std::size_t k) {
  if (k > max_extension_points) {
    throw Error(ErrorCode::carrier_too_large, "extension types are enumerated up to 4 points");
  }
  std::vector<ExtensionRequest> out;
  for (std::size_t s = 0; s < k; ++s) {
    for_each_subset(m.order(), s, [&](std::span<const Index> base) {
      auto more = requests_over(m, base);
      out.insert(out.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
    });
  }
  return out;
}

AuditReport audit_extension_property(const TernaryRelation& m, std::size_t k) {
  AuditReport report;
  report.k = k;
  for (auto& request : extension_requests(m, k)) {
    ++report.requests;
    if (!realise(m, request)) report.unmet.push_back(std::move(request));
  }
  return report;
}

ChainReport fraisse_chain(std::size_t size_bound, std::size_t rounds, std::uint64_t seed) {
  if (size_bound > max_extension_points) {
    throw Error(ErrorCode::carrier_too_large, "size bound above 4");
  }
  if (rounds == 0) throw Error(ErrorCode::invalid_input, "at least one round is needed");
  std::size_t next_label = 0;
  auto fresh_label = [&next_label] {
    char buf[16];
    std::snprintf(buf, sizeof buf, "v%04zu", next_label++);
    return Label(buf);
  };

  ChainReport report;
  report.size_bound = size_bound;
  report.rounds = rounds;
  report.seed = seed;
  report.stages.push_back(bottom_relation(Carrier({fresh_label()})));
  std::mt19937_64 rng(seed);

  for (std::size_t round = 0; round < rounds; ++round) {
    TernaryRelation m = report.stages.back();
    std::vector<ExtensionRequest> queue = extension_requests(m, size_bound);
    std::shuffle(queue.begin(), queue.end(), rng);
    for (auto& request : queue) {
      if (auto witness = realise(m, request)) {
        report.satisfied.push_back({round, std::move(request), *witness, false});
        continue;
      }
      const Label point = fresh_label();
      std::vector<Label> labels = request.base;
      labels.push_back(point);
      const Carrier carrier(labels);
      const Index slot = request.extension.carrier().index_of(request.fresh);
      std::vector<Index> rename(request.extension.order());
      for (Index i = 0; i < rename.size(); ++i) {
        rename[i] = carrier.index_of(i == slot ? point : request.extension.carrier()[i]);
      }
      const TernaryRelation b2 = image(request.extension, rename, carrier);
      std::vector<Index> base_in_m;
      std::vector<Index> base_in_b2;
      for (const Label& l : request.base) {
        base_in_m.push_back(m.carrier().index_of(l));
        base_in_b2.push_back(carrier.index_of(l));
      }
      const TernaryRelation a = induced(m, base_in_m);
      // induced() sorts its points, and request.base is already label-sorted.
      Amalgam amalgam = amalgamate(a, m, b2, base_in_m, base_in_b2);
      m = std::move(amalgam.result);
      report.satisfied.push_back({round, std::move(request), point, true});
    }
    const TernaryRelation& previous = report.stages.back();
    report.links.push_back(embedding(previous, m, inclusion(previous.carrier(), m.carrier())));
    report.stages.push_back(std::move(m));
  }
  report.pending = audit_extension_property(report.last(), size_bound).unmet;
  return report;
}

HomogeneityReport check_partial_homogeneity(const TernaryRelation& m, std::size_t k) {
  if (k > max_homogeneity_k || m.order() > max_homogeneity_points) {
    throw Error(ErrorCode::carrier_too_large, "homogeneity scan is limited to k <= 3 and 12 points");
  }
  const std::size_t n = m.order();
  const Carrier& x = m.carrier();
  HomogeneityReport report;
  report.k = k;
  for (std::size_t s = 1; s <= std::min(k, n); ++s) {
    for_each_subset(n, s, [&](std::span<const Index> from) {
      const Bits shape = pattern(m, from);
      std::vector<Index> to(s);
      std::vector<bool> used(n, false);
      // All ordered tuples `to` with the same pattern.
      auto visit = [&](auto&& self, std::size_t depth) -> void {
        if (depth == s) {
          if (pattern(m, to) != shape) return;
          ++report.isomorphisms;
          std::vector<Index> src(from.begin(), from.end());
          src.push_back(0);
          std::vector<Index> dst = to;
          dst.push_back(0);
          for (Index p = 0; p < n; ++p) {
            if (std::find(from.begin(), from.end(), p) != from.end()) continue;
            src.back() = p;
            const Bits wanted = pattern(m, src);
            bool extends = false;
            for (Index q = 0; q < n && !extends; ++q) {
              if (used[q]) continue;
              dst.back() = q;
              extends = pattern(m, dst) == wanted;
            }
            if (!extends) {
              ++report.failure_count;
              if (report.failures.size() < homogeneity_failure_limit) {
                HomogeneityFailure failure;
                for (Index i : from) failure.from.push_back(x[i]);
                for (Index i : to) failure.to.push_back(x[i]);
                failure.point = x[p];
                report.failures.push_back(std::move(failure));
              }
            }
          }
          return;
        }
        for (Index q = 0; q < n; ++q) {
          if (used[q]) continue;
          used[q] = true;
          to[depth] = q;
          self(self, depth + 1);
          used[q] = false;
        }
      };
      visit(visit, 0);
    });
  }
  return report;
}

}  // namespace btw
