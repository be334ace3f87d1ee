#include "rminor/matroid.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "rminor/catalog.hpp"
#include "rminor/error.hpp"

namespace rminor {

namespace {

using Row = BinaryMatroid::Row;

Row drop_bit(Row r, int j) {
  const Row low = j == 0 ? 0 : (r & ((Row{1} << j) - 1));
  const Row high = j >= 63 ? 0 : ((r >> (j + 1)) << j);
  return low | high;
}

std::vector<int> without(const std::vector<int>& v, int pos) {
  std::vector<int> out = v;
  out.erase(out.begin() + pos);
  return out;
}

int xor_rank(std::vector<Row> vs) {
  int r = 0;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (!vs[i]) continue;
    ++r;
    const Row pivot = vs[i] & -vs[i];
    for (std::size_t k = i + 1; k < vs.size(); ++k) {
      if (vs[k] & pivot) vs[k] ^= vs[i];
    }
  }
  return r;
}

}  // namespace

BinaryMatroid::BinaryMatroid(std::vector<int> elements, std::vector<Row> rows)
    : elements_(std::move(elements)), rows_(std::move(rows)) {
  if (elements_.size() > static_cast<std::size_t>(kMaxElements)) throw Error("matroid has more than 64 elements");
  std::set<int> seen(elements_.begin(), elements_.end());
  if (seen.size() != elements_.size()) throw Error("duplicate matroid element label");
  const Row all = elements_.size() == 64 ? ~Row{0} : ((Row{1} << elements_.size()) - 1);
  for (Row r : rows_) {
    if (r & ~all) throw Error("matrix row longer than the element list");
  }
  reduce();
}

BinaryMatroid::BinaryMatroid(std::vector<int> elements, const std::vector<std::vector<int>>& rows) {
  std::vector<Row> packed;
  for (const auto& row : rows) {
    if (row.size() != elements.size()) throw Error("matrix row length differs from the element count");
    Row r = 0;
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (row[j] != 0 && row[j] != 1) throw Error("matrix entries must be 0 or 1");
      if (row[j]) r |= Row{1} << j;
    }
    packed.push_back(r);
  }
  *this = BinaryMatroid(std::move(elements), std::move(packed));
}

void BinaryMatroid::reduce() {
  std::size_t next = 0;
  for (std::size_t j = 0; j < elements_.size() && next < rows_.size(); ++j) {
    const Row b = Row{1} << j;
    auto it = std::find_if(rows_.begin() + next, rows_.end(), [b](Row r) { return r & b; });
    if (it == rows_.end()) continue;
    std::iter_swap(rows_.begin() + next, it);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      if (i != next && (rows_[i] & b)) rows_[i] ^= rows_[next];
    }
    ++next;
  }
  rows_.resize(next);
}

bool BinaryMatroid::has(int label) const {
  return std::find(elements_.begin(), elements_.end(), label) != elements_.end();
}

int BinaryMatroid::index_of(int label) const {
  auto it = std::find(elements_.begin(), elements_.end(), label);
  if (it == elements_.end()) throw Error("missing element " + std::to_string(label));
  return static_cast<int>(it - elements_.begin());
}

std::uint64_t BinaryMatroid::column(int label) const {
  const int j = index_of(label);
  std::uint64_t c = 0;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if ((rows_[i] >> j) & 1) c |= std::uint64_t{1} << i;
  }
  return c;
}

std::vector<std::vector<int>> BinaryMatroid::matrix() const {
  std::vector<std::vector<int>> out;
  for (Row r : rows_) {
    std::vector<int> row(elements_.size());
    for (std::size_t j = 0; j < elements_.size(); ++j) row[j] = static_cast<int>((r >> j) & 1);
    out.push_back(std::move(row));
  }
  return out;
}

int BinaryMatroid::rank_of_mask(std::uint64_t mask) const {
  std::vector<Row> vs;
  vs.reserve(rows_.size());
  for (Row r : rows_) vs.push_back(r & mask);
  return xor_rank(std::move(vs));
}

int BinaryMatroid::rank_of(const std::set<int>& labels) const {
  std::uint64_t mask = 0;
  for (int l : labels) mask |= std::uint64_t{1} << index_of(l);
  return rank_of_mask(mask);
}

std::vector<int> BinaryMatroid::basis() const {
  std::vector<int> out;
  for (Row r : rows_) out.push_back(elements_[std::countr_zero(r)]);
  return out;
}

BinaryMatroid r12() {
  static const char* const kRows[] = {
      "100000111000", "010000110100", "001000100010",
      "000100010001", "000010001011", "000001000111",
  };
  std::vector<std::vector<int>> rows;
  for (const char* s : kRows) {
    std::vector<int> row;
    for (const char* p = s; *p; ++p) row.push_back(*p - '0');
    rows.push_back(std::move(row));
  }
  std::vector<int> labels(12);
  std::iota(labels.begin(), labels.end(), 1);
  return BinaryMatroid(labels, rows);
}

BinaryMatroid r10() {
  // The ten weight-3 vectors of GF(2)^5, as columns.
  std::vector<std::vector<int>> rows(5);
  int label = 1;
  std::vector<int> labels;
  for (int a = 0; a < 5; ++a) {
    for (int b = a + 1; b < 5; ++b) {
      for (int c = b + 1; c < 5; ++c) {
        for (int i = 0; i < 5; ++i) rows[i].push_back(i == a || i == b || i == c);
        labels.push_back(label++);
      }
    }
  }
  return BinaryMatroid(labels, rows);
}

BinaryMatroid cycle_matroid(const LabeledMultigraph& g) {
  if (g.num_edges() > BinaryMatroid::kMaxElements) throw Error("graph has more than 64 edges");
  std::vector<int> labels;
  std::map<VertexId, Row> rows;
  for (VertexId v : g.vertices()) rows[v] = 0;
  int j = 0;
  for (const auto& [id, e] : g.edges()) {
    labels.push_back(id);
    if (!e.is_loop()) {
      rows[e.a] |= Row{1} << j;
      rows[e.b] |= Row{1} << j;
    }
    ++j;
  }
  std::vector<Row> packed;
  for (const auto& [v, r] : rows) packed.push_back(r);
  return BinaryMatroid(labels, std::move(packed));
}

BinaryMatroid contract(const BinaryMatroid& m, int e) {
  const int j = m.index_of(e);
  std::vector<Row> rows = m.rows();
  const Row b = Row{1} << j;
  auto it = std::find_if(rows.begin(), rows.end(), [b](Row r) { return r & b; });
  if (it != rows.end()) {
    const Row pivot = *it;
    rows.erase(it);
    for (Row& r : rows) {
      if (r & b) r ^= pivot;
    }
  }
  for (Row& r : rows) r = drop_bit(r, j);
  return BinaryMatroid(without(m.elements(), j), std::move(rows));
}

BinaryMatroid delete_element(const BinaryMatroid& m, int e) {
  const int j = m.index_of(e);
  std::vector<Row> rows = m.rows();
  for (Row& r : rows) r = drop_bit(r, j);
  return BinaryMatroid(without(m.elements(), j), std::move(rows));
}

BinaryMatroid contract_delete(const BinaryMatroid& m, const std::set<int>& c, const std::set<int>& d) {
  for (int e : c) {
    if (d.count(e)) throw Error("element " + std::to_string(e) + " is both contracted and deleted");
  }
  BinaryMatroid out = m;
  for (int e : c) out = contract(out, e);
  for (int e : d) out = delete_element(out, e);
  return out;
}

BinaryMatroid dual(const BinaryMatroid& m) {
  // With the reduced matrix in the form [I | D] up to column order, the dual
  // has one row per non-pivot column y: y itself plus the pivots of rows
  // that contain y.
  const auto& rows = m.rows();
  Row pivots = 0;
  for (Row r : rows) pivots |= r & -r;
  std::vector<Row> out;
  for (int y = 0; y < m.size(); ++y) {
    const Row b = Row{1} << y;
    if (pivots & b) continue;
    Row r = b;
    for (Row row : rows) {
      if (row & b) r |= row & -row;
    }
    out.push_back(r);
  }
  return BinaryMatroid(m.elements(), std::move(out));
}

BinaryMatroid simplify_matroid(const BinaryMatroid& m) {
  std::vector<int> order(m.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return m.elements()[a] < m.elements()[b]; });
  std::set<std::uint64_t> seen;
  Row drop = 0;
  for (int j : order) {
    const std::uint64_t col = m.column(m.elements()[j]);
    if (col == 0 || !seen.insert(col).second) drop |= Row{1} << j;
  }
  BinaryMatroid out = m;
  for (int j = m.size() - 1; j >= 0; --j) {
    if ((drop >> j) & 1) out = delete_element(out, m.elements()[j]);
  }
  return out;
}

std::vector<std::set<int>> circuits(const BinaryMatroid& m) {
  const int n = m.size();
  if (n > 24) throw Error("circuit enumeration is limited to 24 elements");
  std::vector<std::uint64_t> cols;
  for (int l : m.elements()) cols.push_back(m.column(l));
  std::vector<std::set<int>> out;
  for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
    std::uint64_t sum = 0;
    for (std::uint64_t t = s; t; t &= t - 1) sum ^= cols[std::countr_zero(t)];
    if (sum != 0) continue;
    // A zero-sum set is a circuit exactly when its only dependency is itself.
    if (m.rank_of_mask(s) != std::popcount(s) - 1) continue;
    std::set<int> c;
    for (std::uint64_t t = s; t; t &= t - 1) c.insert(m.elements()[std::countr_zero(t)]);
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<BinaryMatroid> fc_family() {
  std::vector<BinaryMatroid> out;
  for (const char* name : {"K33", "K33_01", "K33_02", "K33_11"}) {
    out.push_back(cycle_matroid(catalog::build(name).graph));
  }
  return out;
}

nlohmann::ordered_json to_json(const BinaryMatroid& m) {
  nlohmann::ordered_json j;
  j["elements"] = m.elements();
  j["rank"] = m.rank();
  j["rows"] = m.matrix();
  return j;
}

BinaryMatroid matroid_from_json(const nlohmann::json& j) {
  // Accepts {elements, rows} or a bare list of rows (labels 1..n).
  const nlohmann::json& rows = j.is_array() ? j : j.at("rows");
  if (!rows.is_array()) throw Error("matroid rows must be a list");
  std::vector<std::vector<int>> parsed = rows.get<std::vector<std::vector<int>>>();
  std::vector<int> labels;
  if (j.is_object() && j.contains("elements")) {
    labels = j.at("elements").get<std::vector<int>>();
  } else {
    labels.resize(parsed.empty() ? 0 : parsed.front().size());
    std::iota(labels.begin(), labels.end(), 1);
  }
  return BinaryMatroid(labels, parsed);
}

}  // namespace rminor
