#include "egc/densemat.hpp"

#include <sstream>
#include <stdexcept>

namespace egc {

DenseIntMat DenseIntMat::transposed() const
{
  DenseIntMat t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

int DenseIntMat::rank_exact() const
{
  // Work on a copy; strip row contents as we go to keep entries small.
  std::vector<std::vector<BigInt>> m(rows_);
  for (int r = 0; r < rows_; ++r) {
    m[r].assign(a_.begin() + size_t(r) * cols_, a_.begin() + size_t(r + 1) * cols_);
  }
  auto strip = [&](std::vector<BigInt>& row) {
    BigInt g = 0;
    for (const auto& v : row) {
      g = gcd(g, v);
      if (g == 1) return;
    }
    if (g > 1)
      for (auto& v : row) v = divexact(v, g);
  };
  for (auto& row : m) strip(row);

  int rank = 0;
  int pr = 0;
  for (int c = 0; c < cols_ && pr < rows_; ++c) {
    int piv = -1;
    for (int r = pr; r < rows_; ++r)
      if (m[r][c] != 0) { piv = r; break; }
    if (piv < 0) continue;
    std::swap(m[pr], m[piv]);
    for (int r = pr + 1; r < rows_; ++r) {
      if (m[r][c] == 0) continue;
      BigInt g = gcd(m[pr][c], m[r][c]);
      BigInt fa = divexact(m[pr][c], g), fb = divexact(m[r][c], g);
      for (int j = c; j < cols_; ++j) m[r][j] = fa * m[r][j] - fb * m[pr][j];
      strip(m[r]);
    }
    ++pr;
    ++rank;
  }
  return rank;
}

std::vector<uint64_t> DenseIntMat::mod_p(uint64_t p) const
{
  std::vector<uint64_t> out(a_.size());
  for (size_t i = 0; i < a_.size(); ++i) out[i] = mod_ui(a_[i], p);
  return out;
}

DenseModMat::DenseModMat(const DenseIntMat& m, uint64_t p)
    : rows_(m.rows()), cols_(m.cols()), f_(p), a_(m.mod_p(p))
{
}

namespace {

// In-place elimination over GF(p); returns the rank.
int eliminate(std::vector<uint64_t>& a, int rows, int cols, const PrimeField& f)
{
  const uint64_t p = f.p();
  int rank = 0, pr = 0;
  for (int c = 0; c < cols && pr < rows; ++c) {
    int piv = -1;
    for (int r = pr; r < rows; ++r)
      if (a[size_t(r) * cols + c] != 0) { piv = r; break; }
    if (piv < 0) continue;
    if (piv != pr)
      for (int j = c; j < cols; ++j)
        std::swap(a[size_t(pr) * cols + j], a[size_t(piv) * cols + j]);
    uint64_t inv = f.inv(a[size_t(pr) * cols + c]);
    uint64_t* prow = &a[size_t(pr) * cols];
    for (int r = pr + 1; r < rows; ++r) {
      uint64_t* row = &a[size_t(r) * cols];
      if (row[c] == 0) continue;
      uint64_t factor = f.mul(row[c], inv);
      uint64_t neg = p - factor; // add neg * pivot row
      for (int j = c; j < cols; ++j) {
        row[j] = (row[j] + static_cast<uint64_t>((static_cast<__uint128_t>(neg) * prow[j]) % p)) % p;
      }
    }
    ++pr;
    ++rank;
  }
  return rank;
}

} // namespace

int DenseModMat::rank() const
{
  auto copy = a_;
  return eliminate(copy, rows_, cols_, f_);
}

bool DenseModMat::nonsingular() const
{
  if (rows_ != cols_) throw std::invalid_argument("nonsingular: matrix not square");
  return rank() == rows_;
}

std::string DenseModMat::to_csv() const
{
  std::ostringstream os;
  os << rows_ << "," << cols_ << "," << p() << "\n";
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) {
      if (c) os << ",";
      os << at(r, c);
    }
    os << "\n";
  }
  return os.str();
}

std::string dense_to_csv(const DenseIntMat& m)
{
  std::ostringstream os;
  os << m.rows() << "," << m.cols() << ",0\n";
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      if (c) os << ",";
      os << m.at(r, c).get_str();
    }
    os << "\n";
  }
  return os.str();
}

DenseIntMat dense_from_csv(const std::string& text, long* modulus_out)
{
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line)) throw std::invalid_argument("csv: empty input");
  int rows, cols;
  long modulus;
  if (sscanf(line.c_str(), "%d,%d,%ld", &rows, &cols, &modulus) != 3)
    throw std::invalid_argument("csv: bad header");
  if (modulus_out) *modulus_out = modulus;
  DenseIntMat m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    if (!std::getline(is, line)) throw std::invalid_argument("csv: missing row");
    std::istringstream ls(line);
    std::string cell;
    for (int c = 0; c < cols; ++c) {
      if (!std::getline(ls, cell, ',')) throw std::invalid_argument("csv: short row");
      m.at(r, c) = BigInt(cell);
    }
  }
  return m;
}

} // namespace egc
