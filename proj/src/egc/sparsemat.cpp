#include "egc/sparsemat.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace egc {

void SparseModMat::set_row(int r, std::vector<Entry> entries)
{
  std::sort(entries.begin(), entries.end());
  for (size_t i = 0; i + 1 < entries.size(); ++i)
    if (entries[i].first == entries[i + 1].first)
      throw std::invalid_argument("sparse row has duplicate column");
  for (auto& [c, v] : entries) {
    if (c < 0 || c >= cols_) throw std::out_of_range("sparse entry column out of range");
    if (v == 0 || v >= p()) throw std::invalid_argument("sparse entry not a reduced nonzero");
  }
  data_[r] = std::move(entries);
}

size_t SparseModMat::nnz() const
{
  size_t n = 0;
  for (const auto& r : data_) n += r.size();
  return n;
}

namespace {

struct UnionFind {
  std::vector<int32_t> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x)
  {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

using Row = std::vector<SparseModMat::Entry>;

uint64_t get_col(const Row& r, int32_t c)
{
  auto it = std::lower_bound(r.begin(), r.end(), c,
                             [](const auto& e, int32_t col) { return e.first < col; });
  return (it != r.end() && it->first == c) ? it->second : 0;
}

// r -= f * piv (sparse merge over GF(p))
Row row_axpy(const PrimeField& F, const Row& r, uint64_t f, const Row& piv)
{
  Row out;
  out.reserve(r.size() + piv.size());
  size_t i = 0, j = 0;
  while (i < r.size() && j < piv.size()) {
    if (r[i].first < piv[j].first) {
      out.push_back(r[i++]);
    } else if (r[i].first > piv[j].first) {
      uint64_t v = F.neg(F.mul(f, piv[j].second));
      if (v) out.emplace_back(piv[j].first, v);
      ++j;
    } else {
      uint64_t v = F.sub(r[i].second, F.mul(f, piv[j].second));
      if (v) out.emplace_back(r[i].first, v);
      ++i;
      ++j;
    }
  }
  for (; i < r.size(); ++i) out.push_back(r[i]);
  for (; j < piv.size(); ++j) {
    uint64_t v = F.neg(F.mul(f, piv[j].second));
    if (v) out.emplace_back(piv[j].first, v);
  }
  return out;
}

int component_rank(const PrimeField& F, std::vector<Row> rows)
{
  // local column ids, deterministic by global column index
  std::vector<int32_t> cols;
  for (const auto& r : rows)
    for (const auto& [c, v] : r) cols.push_back(c);
  std::sort(cols.begin(), cols.end());
  cols.erase(std::unique(cols.begin(), cols.end()), cols.end());

  std::vector<int> col_count(cols.size(), 0);
  auto local = [&](int32_t c) {
    return static_cast<int>(std::lower_bound(cols.begin(), cols.end(), c) - cols.begin());
  };
  std::vector<bool> row_active(rows.size(), true), col_active(cols.size(), true);
  for (const auto& r : rows)
    for (const auto& [c, v] : r) ++col_count[local(c)];

  int rank = 0;
  for (;;) {
    // pivot column: fewest active entries, then smallest index
    int best_col = -1;
    for (size_t lc = 0; lc < cols.size(); ++lc) {
      if (!col_active[lc] || col_count[lc] == 0) continue;
      if (best_col < 0 || col_count[lc] < col_count[best_col]) best_col = static_cast<int>(lc);
    }
    if (best_col < 0) break;
    int32_t pc = cols[best_col];
    // pivot row: fewest entries among rows hitting the column, then smallest index
    int best_row = -1;
    for (size_t r = 0; r < rows.size(); ++r) {
      if (!row_active[r] || get_col(rows[r], pc) == 0) continue;
      if (best_row < 0 || rows[r].size() < rows[best_row].size()) best_row = static_cast<int>(r);
    }
    const Row piv = rows[best_row];
    uint64_t pinv = F.inv(get_col(piv, pc));
    for (size_t r = 0; r < rows.size(); ++r) {
      if (!row_active[r] || static_cast<int>(r) == best_row) continue;
      uint64_t v = get_col(rows[r], pc);
      if (v == 0) continue;
      for (const auto& [c, _] : rows[r]) --col_count[local(c)];
      rows[r] = row_axpy(F, rows[r], F.mul(v, pinv), piv);
      for (const auto& [c, _] : rows[r]) ++col_count[local(c)];
    }
    for (const auto& [c, _] : piv) --col_count[local(c)];
    row_active[best_row] = false;
    col_active[best_col] = false;
    ++rank;
  }
  return rank;
}

} // namespace

int SparseModMat::rank() const
{
  UnionFind uf(cols_);
  for (const auto& r : data_)
    for (size_t i = 1; i < r.size(); ++i) uf.unite(r[0].first, r[i].first);

  // bucket rows by component, dropping empties and duplicate rows
  std::vector<std::pair<int, const Row*>> tagged;
  for (const auto& r : data_) {
    if (!r.empty()) tagged.emplace_back(uf.find(r[0].first), &r);
  }
  std::sort(tagged.begin(), tagged.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return *a.second < *b.second;
  });

  int total = 0;
  size_t i = 0;
  while (i < tagged.size()) {
    size_t j = i;
    std::vector<Row> comp;
    while (j < tagged.size() && tagged[j].first == tagged[i].first) {
      if (comp.empty() || comp.back() != *tagged[j].second) comp.push_back(*tagged[j].second);
      ++j;
    }
    total += component_rank(f_, std::move(comp));
    i = j;
  }
  return total;
}

std::string SparseModMat::to_csv() const
{
  std::ostringstream os;
  os << rows_ << "," << cols_ << "," << p() << "\n";
  for (int r = 0; r < rows_; ++r) {
    const auto& row = data_[r];
    size_t k = 0;
    for (int c = 0; c < cols_; ++c) {
      if (c) os << ",";
      if (k < row.size() && row[k].first == c)
        os << row[k++].second;
      else
        os << 0;
    }
    os << "\n";
  }
  return os.str();
}

} // namespace egc
