#pragma once

// Binary matroids as GF(2) row spaces. Columns are addressed by integer
// labels; positions are an implementation detail and shift under minors.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "rminor/graph.hpp"

namespace rminor {

class BinaryMatroid {
 public:
  using Row = std::uint64_t;  // bit j = column j
  static constexpr int kMaxElements = 64;

  BinaryMatroid() = default;
  /// rows[i][j] is the entry in row i, column j. Rows may be dependent; the
  /// matrix is reduced to full row rank.
  BinaryMatroid(std::vector<int> elements, const std::vector<std::vector<int>>& rows);
  BinaryMatroid(std::vector<int> elements, std::vector<Row> rows);

  const std::vector<int>& elements() const { return elements_; }
  const std::vector<Row>& rows() const { return rows_; }
  int size() const { return static_cast<int>(elements_.size()); }
  int rank() const { return static_cast<int>(rows_.size()); }
  bool has(int label) const;
  int index_of(int label) const;  // throws on unknown label

  /// Column of `label` as a bitmask over rows.
  std::uint64_t column(int label) const;
  std::vector<std::vector<int>> matrix() const;

  /// Rank of a set of labels.
  int rank_of(const std::set<int>& labels) const;
  /// Rank of a set of column positions given as a bitmask.
  int rank_of_mask(std::uint64_t mask) const;

  /// Labels of the pivot columns of the reduced matrix, by row.
  std::vector<int> basis() const;

  bool operator==(const BinaryMatroid&) const = default;

 private:
  void reduce();
  std::vector<int> elements_;
  std::vector<Row> rows_;
};

BinaryMatroid r12();
BinaryMatroid r10();
/// Incidence matrix over GF(2), labels = edge ids. Loops are zero columns.
BinaryMatroid cycle_matroid(const LabeledMultigraph& g);

BinaryMatroid contract(const BinaryMatroid& m, int e);
BinaryMatroid delete_element(const BinaryMatroid& m, int e);
BinaryMatroid contract_delete(const BinaryMatroid& m, const std::set<int>& c, const std::set<int>& d);
BinaryMatroid dual(const BinaryMatroid& m);
/// Drops loops and keeps the smallest label of each parallel class.
BinaryMatroid simplify_matroid(const BinaryMatroid& m);

/// All circuits, as label sets in increasing bitmask order.
std::vector<std::set<int>> circuits(const BinaryMatroid& m);

using MatroidIso = std::map<int, int>;

/// Whether `map` is a bijection preserving the rank of every subset.
bool is_matroid_isomorphism(const BinaryMatroid& m1, const BinaryMatroid& m2, const MatroidIso& map);

/// An isomorphism m1 -> m2 extending `pinned`, if one exists.
std::optional<MatroidIso> matroid_isomorphic(const BinaryMatroid& m1, const BinaryMatroid& m2,
                                             const MatroidIso& pinned = {});

struct MatroidMinorWitness {
  std::set<int> contracted;
  std::set<int> deleted;
  std::size_t target = 0;  // index into the target list
  MatroidIso iso;
};

/// Some m/C\D isomorphic to a target with every required element kept.
/// Targets are tried in list order; the witness names the first that occurs.
std::optional<MatroidMinorWitness> matroid_has_minor(const BinaryMatroid& m,
                                                     const std::vector<BinaryMatroid>& targets,
                                                     const std::set<int>& required = {});
std::optional<MatroidMinorWitness> matroid_has_minor(const BinaryMatroid& m, const BinaryMatroid& target,
                                                     const std::set<int>& required = {});

/// {M(K33), M(K33^{0,1}), M(K33^{0,2}), M(K33^{1,1})}.
std::vector<BinaryMatroid> fc_family();

nlohmann::ordered_json to_json(const BinaryMatroid& m);
BinaryMatroid matroid_from_json(const nlohmann::json& j);

struct ClaimCheck {
  int id = 0;
  std::string title;
  bool pass = false;
  nlohmann::ordered_json witness;
};

struct R12Report {
  std::vector<ClaimCheck> checks;
  bool pass() const;
};

R12Report verify_r12_claims();
nlohmann::ordered_json to_json(const R12Report& r);

}  // namespace rminor
