#pragma once

// Rooted minor search. A model of pattern P in host G is a pair of disjoint
// edge sets (C, D) with C a forest and G/C\D, after dropping isolated
// vertices, isomorphic to P; `iso` maps the surviving host vertices onto P.

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rminor/graph.hpp"

namespace rminor {

struct Pattern {
  std::string name;
  LabeledMultigraph graph;
};

/// Looks a pattern up in the catalog.
Pattern catalog_pattern(const std::string& name);

struct MinorModel {
  std::string pattern;
  std::set<EdgeId> contracted;
  std::set<EdgeId> deleted;
  VertexMap iso;

  bool operator==(const MinorModel&) const = default;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;
};

struct SearchOptions {
  /// Node-expansion cap per query; exceeding it raises SearchBudgetExceeded.
  std::uint64_t node_cap = 10'000'000;
  SearchStats* stats = nullptr;
};

struct RootedQuery {
  LabeledMultigraph host;
  std::vector<Pattern> family;
  std::set<EdgeId> required;
  /// Triangle mode: the three edges must survive as a triangle of the pattern.
  std::optional<std::array<EdgeId, 3>> triangle;
};

/// host/C\D with isolated vertices dropped. Throws if C contains a cycle,
/// C and D intersect, or an id is unknown.
LabeledMultigraph apply_model(const LabeledMultigraph& host, const MinorModel& m);

struct Verification {
  bool ok = false;
  std::string diagnostic;
  explicit operator bool() const { return ok; }
};

/// Re-derives the minor from (C, D) and checks `iso` edge by edge.
Verification verify_model(const LabeledMultigraph& host, const MinorModel& m,
                          const LabeledMultigraph& pattern);
/// As above, resolving the pattern by catalog name.
Verification verify_model(const LabeledMultigraph& host, const MinorModel& m);

/// Exhaustive branch-set search. Required edges must be kept (not in C or D).
std::optional<MinorModel> find_minor(const LabeledMultigraph& host, const Pattern& pattern,
                                     const std::set<EdgeId>& required = {},
                                     const SearchOptions& options = {});

/// First family member (in listed order) with a model satisfying the query.
std::optional<MinorModel> find_family_minor(const RootedQuery& query,
                                            const SearchOptions& options = {});

/// A K33^{1,1} model keeping the triangle T as a pattern triangle.
std::optional<MinorModel> preserve_triangle_k331(const LabeledMultigraph& host,
                                                 const std::array<EdgeId, 3>& triangle,
                                                 const SearchOptions& options = {});

/// A K5 model keeping T as a pattern triangle: identity on K5, otherwise a
/// triangle-preserving K33^{1,1} model with its u1v1 edge contracted.
std::optional<MinorModel> preserve_triangle_k5(const LabeledMultigraph& host,
                                               const std::array<EdgeId, 3>& triangle,
                                               const SearchOptions& options = {});

/// Boyer-Myrvold planarity of the underlying simple graph.
bool is_planar(const LabeledMultigraph& g);

/// A K33 model, else a K5 model, else nothing.
std::optional<MinorModel> obstruction(const LabeledMultigraph& g, const SearchOptions& options = {});

/// Whether "host has a K5-minor iff host has a K33^{1,1}-minor" holds.
/// Requires host simple, 3-connected and not isomorphic to K5.
bool k5_iff_k331(const LabeledMultigraph& host, const SearchOptions& options = {});

/// The family {K33, K33^{0,1}, K33^{0,2}, K33^{1,1}}, ascending edge count.
std::vector<Pattern> k33_family();
/// k33_family() with K5 appended.
std::vector<Pattern> k33_k5_family();

}  // namespace rminor
