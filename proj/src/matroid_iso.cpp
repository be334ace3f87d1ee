#include <algorithm>
#include <bit>

#include "rminor/error.hpp"
#include "rminor/matroid.hpp"

namespace rminor {

namespace {

using Row = BinaryMatroid::Row;

// Per-element count of circuits of each size through it, plus the global
// circuit-size histogram.
struct CircuitProfile {
  std::vector<int> histogram;
  std::map<int, std::vector<int>> element;
};

CircuitProfile profile(const BinaryMatroid& m) {
  CircuitProfile p;
  p.histogram.assign(m.size() + 1, 0);
  for (int l : m.elements()) p.element[l].assign(m.size() + 1, 0);
  for (const auto& c : circuits(m)) {
    ++p.histogram[c.size()];
    for (int l : c) ++p.element[l][c.size()];
  }
  return p;
}

// Coordinates of every column of m relative to the ordered basis `basis`.
std::map<int, std::uint64_t> coordinates(const BinaryMatroid& m, const std::vector<int>& basis) {
  std::vector<Row> rows = m.rows();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Row b = Row{1} << m.index_of(basis[i]);
    auto it = std::find_if(rows.begin() + i, rows.end(), [b](Row r) { return r & b; });
    std::iter_swap(rows.begin() + i, it);
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (k != i && (rows[k] & b)) rows[k] ^= rows[i];
    }
  }
  std::map<int, std::uint64_t> out;
  for (int j = 0; j < m.size(); ++j) {
    std::uint64_t c = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if ((rows[i] >> j) & 1) c |= std::uint64_t{1} << i;
    }
    out[m.elements()[j]] = c;
  }
  return out;
}

class IsoSearch {
 public:
  IsoSearch(const BinaryMatroid& m1, const BinaryMatroid& m2, const MatroidIso& pinned,
            const CircuitProfile& p1, const CircuitProfile& p2)
      : m1_(m1), m2_(m2), pinned_(pinned), p1_(p1), p2_(p2), basis1_(m1.basis()),
        coords1_(coordinates(m1, basis1_)) {
    for (const auto& [a, b] : pinned_) pin_targets_.insert(b);
  }

  std::optional<MatroidIso> run() {
    images_.clear();
    span_.clear();
    if (extend(0)) return result_;
    return std::nullopt;
  }

 private:
  bool same_profile(int a, int b) const { return p1_.element.at(a) == p2_.element.at(b); }

  bool extend(std::size_t i) {
    if (i == basis1_.size()) return complete();
    const int x = basis1_[i];
    auto pin = pinned_.find(x);
    for (int t : m2_.elements()) {
      if (pin != pinned_.end() ? t != pin->second : pin_targets_.count(t) > 0) continue;
      if (std::find(images_.begin(), images_.end(), t) != images_.end()) continue;
      if (!same_profile(x, t)) continue;
      // Keep the images independent. Each span_ vector is reduced against
      // the earlier ones, so one pass in insertion order suffices.
      Row v = m2_.column(t);
      for (Row s : span_) {
        if (v & (s & -s)) v ^= s;
      }
      if (!v) continue;
      span_.push_back(v);
      images_.push_back(t);
      if (extend(i + 1)) return true;
      images_.pop_back();
      span_.pop_back();
    }
    return false;
  }

  bool complete() {
    const auto coords2 = coordinates(m2_, images_);
    MatroidIso map;
    std::set<int> used;
    for (std::size_t i = 0; i < basis1_.size(); ++i) {
      map[basis1_[i]] = images_[i];
      used.insert(images_[i]);
    }
    auto take = [&](int y, int t) {
      if (used.count(t) || coords1_.at(y) != coords2.at(t) || !same_profile(y, t)) return false;
      map[y] = t;
      used.insert(t);
      return true;
    };
    for (const auto& [a, b] : pinned_) {
      if (map.count(a)) continue;
      if (!take(a, b)) return false;
    }
    for (int y : m1_.elements()) {
      if (map.count(y)) continue;
      bool ok = false;
      for (int t : m2_.elements()) {
        if (pin_targets_.count(t)) continue;
        if ((ok = take(y, t))) break;
      }
      if (!ok) return false;
    }
    if (!is_matroid_isomorphism(m1_, m2_, map)) return false;
    result_ = std::move(map);
    return true;
  }

  const BinaryMatroid& m1_;
  const BinaryMatroid& m2_;
  const MatroidIso& pinned_;
  const CircuitProfile& p1_;
  const CircuitProfile& p2_;
  std::vector<int> basis1_;
  std::map<int, std::uint64_t> coords1_;
  std::set<int> pin_targets_;
  std::vector<int> images_;
  std::vector<Row> span_;
  MatroidIso result_;
};

}  // namespace

bool is_matroid_isomorphism(const BinaryMatroid& m1, const BinaryMatroid& m2, const MatroidIso& map) {
  if (m1.size() != m2.size() || m1.rank() != m2.rank()) return false;
  if (static_cast<int>(map.size()) != m1.size()) return false;
  std::vector<int> pos(m1.size());
  std::set<int> targets;
  for (int j = 0; j < m1.size(); ++j) {
    auto it = map.find(m1.elements()[j]);
    if (it == map.end() || !m2.has(it->second) || !targets.insert(it->second).second) return false;
    pos[j] = m2.index_of(it->second);
  }
  const int n = m1.size();
  if (n <= 20) {
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
      std::uint64_t t = 0;
      for (std::uint64_t r = s; r; r &= r - 1) t |= std::uint64_t{1} << pos[std::countr_zero(r)];
      if (m1.rank_of_mask(s) != m2.rank_of_mask(t)) return false;
    }
    return true;
  }
  // Larger matroids: compare circuit sets.
  std::set<std::set<int>> c2;
  for (auto& c : circuits(m2)) c2.insert(std::move(c));
  auto c1 = circuits(m1);
  if (c1.size() != c2.size()) return false;
  for (const auto& c : c1) {
    std::set<int> img;
    for (int l : c) img.insert(map.at(l));
    if (!c2.count(img)) return false;
  }
  return true;
}

std::optional<MatroidIso> matroid_isomorphic(const BinaryMatroid& m1, const BinaryMatroid& m2,
                                             const MatroidIso& pinned) {
  for (const auto& [a, b] : pinned) {
    if (!m1.has(a) || !m2.has(b)) throw Error("pinned element is not in the ground set");
  }
  if (m1.size() != m2.size() || m1.rank() != m2.rank()) return std::nullopt;
  const auto p1 = profile(m1);
  const auto p2 = profile(m2);
  if (p1.histogram != p2.histogram) return std::nullopt;
  std::vector<std::vector<int>> s1, s2;
  for (const auto& [l, v] : p1.element) s1.push_back(v);
  for (const auto& [l, v] : p2.element) s2.push_back(v);
  std::sort(s1.begin(), s1.end());
  std::sort(s2.begin(), s2.end());
  if (s1 != s2) return std::nullopt;
  return IsoSearch(m1, m2, pinned, p1, p2).run();
}

namespace {

// Calls f on each k-subset of items (lexicographic), stopping when f is true.
template <class F>
bool for_each_subset(const std::vector<int>& items, int k, F&& f) {
  const int n = static_cast<int>(items.size());
  if (k < 0 || k > n) return false;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    std::set<int> s;
    for (int i : idx) s.insert(items[i]);
    if (f(s)) return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::optional<MatroidMinorWitness> matroid_has_minor(const BinaryMatroid& m,
                                                     const std::vector<BinaryMatroid>& targets,
                                                     const std::set<int>& required) {
  for (int e : required) {
    if (!m.has(e)) throw Error("required element " + std::to_string(e) + " is not in the ground set");
  }
  std::vector<int> removable;
  for (int e : m.elements()) {
    if (!required.count(e)) removable.push_back(e);
  }
  for (std::size_t t = 0; t < targets.size(); ++t) {
    const BinaryMatroid& target = targets[t];
    const int removed = m.size() - target.size();
    const int contracted = m.rank() - target.rank();
    if (removed < 0 || contracted < 0 || contracted > removed) continue;
    std::optional<MatroidMinorWitness> found;
    for_each_subset(removable, removed, [&](const std::set<int>& s) {
      const std::vector<int> sv(s.begin(), s.end());
      return for_each_subset(sv, contracted, [&](const std::set<int>& c) {
        if (m.rank_of(c) != contracted) return false;
        std::set<int> d;
        std::set_difference(s.begin(), s.end(), c.begin(), c.end(), std::inserter(d, d.end()));
        const BinaryMatroid minor = contract_delete(m, c, d);
        if (minor.rank() != target.rank()) return false;
        auto iso = matroid_isomorphic(minor, target);
        if (!iso) return false;
        found = MatroidMinorWitness{c, d, t, std::move(*iso)};
        return true;
      });
    });
    if (found) return found;
  }
  return std::nullopt;
}

std::optional<MatroidMinorWitness> matroid_has_minor(const BinaryMatroid& m, const BinaryMatroid& target,
                                                     const std::set<int>& required) {
  return matroid_has_minor(m, std::vector<BinaryMatroid>{target}, required);
}

}  // namespace rminor
