#pragma once

// Verification of 2-roundedness by the single-element criterion: for every
// 3-connected simple graph G with an element e such that G\e or G/e is a
// family member, and every f != e, some family minor of G keeps both e and f.

#include <optional>
#include <string>
#include <vector>

#include "rminor/graph.hpp"
#include "rminor/minor.hpp"

namespace rminor {

enum class CandidateKind { Extension, Coextension };

struct Candidate {
  LabeledMultigraph graph;
  std::string parent;
  CandidateKind kind = CandidateKind::Extension;
  /// The added edge (extension) or the new edge of the vertex split.
  EdgeId element = 0;
  std::optional<VertexSplit> split;
};

/// Simple 3-connected graphs parent + one edge, one per isomorphism class of
/// (graph, added edge).
std::vector<Candidate> enumerate_extensions(const Pattern& parent);

/// Simple 3-connected vertex expansions of parent, one per isomorphism
/// class of (graph, split edge).
std::vector<Candidate> enumerate_coextensions(const Pattern& parent);

/// Same enumerations without isomorphism reduction.
std::vector<Candidate> enumerate_extensions_raw(const Pattern& parent);
std::vector<Candidate> enumerate_coextensions_raw(const Pattern& parent);

/// True when (a.graph, a.element) and (b.graph, b.element) are isomorphic.
bool same_rooted_class(const Candidate& a, const Candidate& b);

struct RoundnessCheck {
  EdgeId f = 0;
  std::optional<std::string> pattern;  // family member found, if any
};

struct Failure {
  std::size_t candidate = 0;
  EdgeId e = 0;
  EdgeId f = 0;
};

struct RoundednessReport {
  std::vector<std::string> family;
  std::vector<Candidate> candidates;
  std::vector<std::vector<RoundnessCheck>> checks;  // parallel to candidates
  std::vector<Failure> failures;
  bool pass = false;
};

RoundednessReport verify_two_rounded(const std::vector<Pattern>& family, const SearchOptions& options = {});

}  // namespace rminor
