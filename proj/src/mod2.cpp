#include "siegel/mod2.hpp"

#include <algorithm>
#include <future>
#include <optional>
#include <string>
#include <thread>

namespace siegel {

F2Matrix::F2Matrix(std::size_t n) : n_(n) {
  if (n > kMaxDim) throw Error(ErrorCode::UnsupportedDimension, "F2 matrices are limited to 16x16");
}

F2Matrix F2Matrix::identity(std::size_t n) {
  F2Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.rows_[i] = static_cast<std::uint16_t>(1u << i);
  return m;
}

F2Matrix F2Matrix::standard_J(std::size_t n) {
  if (n % 2 != 0) throw Error(ErrorCode::OddDimension, "J needs an even dimension");
  F2Matrix m(n);
  const std::size_t h = n / 2;
  for (std::size_t i = 0; i < h; ++i) {
    m.rows_[i] = static_cast<std::uint16_t>(1u << (h + i));
    m.rows_[h + i] = static_cast<std::uint16_t>(1u << i);
  }
  return m;
}

F2Matrix F2Matrix::from_pattern(std::size_t n, std::uint64_t pattern) {
  F2Matrix m(n);
  const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
  for (std::size_t i = 0; i < n; ++i) m.rows_[i] = static_cast<std::uint16_t>((pattern >> (i * n)) & mask);
  return m;
}

void F2Matrix::set(std::size_t i, std::size_t j, bool v) {
  if (v) {
    rows_[i] = static_cast<std::uint16_t>(rows_[i] | (1u << j));
  } else {
    rows_[i] = static_cast<std::uint16_t>(rows_[i] & ~(1u << j));
  }
}

F2Matrix F2Matrix::transpose() const {
  F2Matrix t(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j)
      if (get(i, j)) t.set(j, i, true);
  return t;
}

bool F2Matrix::is_invertible() const {
  auto r = rows_;
  for (std::size_t c = 0; c < n_; ++c) {
    std::size_t p = c;
    while (p < n_ && !((r[p] >> c) & 1u)) ++p;
    if (p == n_) return false;
    std::swap(r[c], r[p]);
    for (std::size_t i = 0; i < n_; ++i)
      if (i != c && ((r[i] >> c) & 1u)) r[i] ^= r[c];
  }
  return true;
}

F2Matrix operator*(const F2Matrix& a, const F2Matrix& b) {
  if (a.n_ != b.n_) throw Error(ErrorCode::DimensionMismatch, "F2 product: sizes differ");
  F2Matrix c(a.n_);
  for (std::size_t i = 0; i < a.n_; ++i) {
    std::uint16_t row = 0;
    for (std::size_t k = 0; k < a.n_; ++k)
      if ((a.rows_[i] >> k) & 1u) row ^= b.rows_[k];
    c.rows_[i] = row;
  }
  return c;
}

F2Matrix reduce_mod2(const Matrix& g) {
  if (!g.is_square()) throw Error(ErrorCode::DimensionMismatch, "reduce_mod2: not square");
  F2Matrix m(g.rows());
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) m.set(i, j, mpz_odd_p(g(i, j).to_integer().get_mpz_t()) != 0);
  return m;
}

bool is_symplectic_mod2(const F2Matrix& a) {
  const F2Matrix j = F2Matrix::standard_J(a.dim());
  return a.transpose() * j * a == j;
}

bool is_in_K(const Matrix& g) {
  if (!g.is_square()) throw Error(ErrorCode::DimensionMismatch, "is_in_K: not square");
  if (g.rows() % 2 != 0) throw Error(ErrorCode::OddDimension, "is_in_K needs an even dimension");
  if (!g.is_integral()) throw Error(ErrorCode::NonIntegerEntries, "is_in_K needs an integer matrix");
  const Scalar d = determinant(g);
  if (!(d == Scalar(1) || d == Scalar(-1))) return false;
  return is_symplectic_mod2(reduce_mod2(g));
}

GroupOrders group_orders(int g0, unsigned threads) {
  if (g0 != 1 && g0 != 2) throw Error(ErrorCode::UnsupportedDimension, "group orders are enumerated for g0 in {1, 2}");
  const std::size_t n = 2 * static_cast<std::size_t>(g0);
  const std::uint64_t total = std::uint64_t{1} << (n * n);
  if (threads == 0) threads = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
  if (total < 4096) threads = 1;

  auto count = [n](std::uint64_t lo, std::uint64_t hi) {
    GroupOrders part;
    for (std::uint64_t p = lo; p < hi; ++p) {
      const F2Matrix a = F2Matrix::from_pattern(n, p);
      if (!a.is_invertible()) continue;
      ++part.gl;
      if (is_symplectic_mod2(a)) ++part.sp;
    }
    return part;
  };

  std::vector<std::future<GroupOrders>> parts;
  const std::uint64_t chunk = (total + threads - 1) / threads;
  for (std::uint64_t lo = 0; lo < total; lo += chunk) {
    parts.push_back(std::async(std::launch::async, count, lo, std::min(total, lo + chunk)));
  }
  GroupOrders out;
  for (auto& f : parts) {
    const GroupOrders p = f.get();
    out.gl += p.gl;
    out.sp += p.sp;
  }
  if (out.sp == 0 || out.gl % out.sp != 0) {
    throw Error(ErrorCode::InternalInconsistency, "symplectic order does not divide the linear order");
  }
  out.index = out.gl / out.sp;
  return out;
}

std::size_t identify_coset(const F2Matrix& h, const std::vector<F2Matrix>& reps) {
  std::optional<std::size_t> found;
  for (std::size_t j = 0; j < reps.size(); ++j) {
    if (!is_symplectic_mod2(h * reps[j])) continue;
    if (found) {
      throw Error(ErrorCode::MultipleMatches, "representatives " + std::to_string(*found + 1) + " and " +
                                                  std::to_string(j + 1) + " share a coset");
    }
    found = j;
  }
  if (!found) throw Error(ErrorCode::NoMatch, "no representative matches the coset");
  return *found;
}

std::size_t identify_coset(const Matrix& h, const std::vector<Matrix>& reps) {
  if (!is_unimodular(h)) throw Error(ErrorCode::NotInGroup, "identify_coset needs a unimodular matrix");
  std::vector<F2Matrix> images;
  images.reserve(reps.size());
  for (const auto& r : reps) images.push_back(reduce_mod2(r));
  return identify_coset(reduce_mod2(h), images);
}

}  // namespace siegel
