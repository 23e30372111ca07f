#include "lightsout/zmod.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace lightsout {

Modulus::Modulus(std::int64_t ell) : ell_(ell) {
  if (ell < 2 || ell > kMax) {
    throw std::invalid_argument("modulus must lie in [2, 2^31 - 1], got " + std::to_string(ell));
  }
}

bool Modulus::is_unit(Residue a) const noexcept { return std::gcd(reduce(a), ell_) == 1; }

std::optional<Residue> Modulus::inverse(Residue a) const noexcept {
  std::int64_t old_r = reduce(a), r = ell_;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r = std::exchange(r, old_r - q * r);
    old_s = std::exchange(s, old_s - q * s);
  }
  if (old_r != 1) return std::nullopt;
  return reduce(old_s);
}

ZModMatrix::ZModMatrix(std::size_t rows, std::size_t cols, Modulus modulus)
    : rows_(rows), cols_(cols), modulus_(modulus), entries_(rows * cols, 0) {}

ZModMatrix ZModMatrix::identity(std::size_t n, Modulus modulus) {
  ZModMatrix m(n, n, modulus);
  for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = 1;
  return m;
}

ZModMatrix ZModMatrix::from_rows(const std::vector<std::vector<std::int64_t>>& rows,
                                 Modulus modulus) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  ZModMatrix m(rows.size(), cols, modulus);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

ZModMatrix ZModMatrix::transpose() const {
  ZModMatrix t(cols_, rows_, modulus_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.entries_[j * rows_ + i] = (*this)(i, j);
  return t;
}

ZModMatrix ZModMatrix::operator*(const ZModMatrix& rhs) const {
  if (cols_ != rhs.rows_ || !(modulus_ == rhs.modulus_)) {
    throw std::invalid_argument("matrix product: shape or modulus mismatch");
  }
  ZModMatrix out(rows_, rhs.cols_, modulus_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Residue a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) {
        Residue& e = out.entries_[i * rhs.cols_ + j];
        e = modulus_.add(e, modulus_.mul(a, rhs(k, j)));
      }
    }
  }
  return out;
}

ResidueVector ZModMatrix::operator*(std::span<const Residue> x) const {
  if (x.size() != cols_) throw std::invalid_argument("matrix-vector product: length mismatch");
  ResidueVector out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i) {
    Residue acc = 0;
    for (std::size_t j = 0; j < cols_; ++j) acc = modulus_.add(acc, modulus_.mul((*this)(i, j), modulus_.reduce(x[j])));
    out[i] = acc;
  }
  return out;
}

// Applies elementary operations to a working copy and keeps the four
// transformation matrices consistent with them:
//   left_inv * M * right_inv = work,  left * work * right = M.
class MatrixReducer {
 public:
  explicit MatrixReducer(const ZModMatrix& m)
      : mod_(m.modulus()),
        work_(m),
        left_inv_(ZModMatrix::identity(m.rows(), m.modulus())),
        left_(ZModMatrix::identity(m.rows(), m.modulus())),
        right_inv_(ZModMatrix::identity(m.cols(), m.modulus())),
        right_(ZModMatrix::identity(m.cols(), m.modulus())) {}

  Residue at(std::size_t i, std::size_t j) const { return work_(i, j); }

  // row_i += k * row_j
  void add_row(std::size_t i, std::size_t j, Residue k) {
    k = mod_.reduce(k);
    if (k == 0) return;
    add_row_raw(work_, i, j, k);
    add_row_raw(left_inv_, i, j, k);
    add_col_raw(left_, j, i, mod_.neg(k));
  }
  // col_i += k * col_j
  void add_col(std::size_t i, std::size_t j, Residue k) {
    k = mod_.reduce(k);
    if (k == 0) return;
    add_col_raw(work_, i, j, k);
    add_col_raw(right_inv_, i, j, k);
    add_row_raw(right_, j, i, mod_.neg(k));
  }
  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    swap_rows_raw(work_, i, j);
    swap_rows_raw(left_inv_, i, j);
    swap_cols_raw(left_, i, j);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    swap_cols_raw(work_, i, j);
    swap_cols_raw(right_inv_, i, j);
    swap_rows_raw(right_, i, j);
  }
  void scale_row(std::size_t i, Residue unit, Residue unit_inv) {
    scale_row_raw(work_, i, unit);
    scale_row_raw(left_inv_, i, unit);
    scale_col_raw(left_, i, unit_inv);
  }

  NormalForm finish() && {
    return NormalForm{std::move(left_), std::move(work_), std::move(right_), std::move(left_inv_),
                      std::move(right_inv_)};
  }

 private:
  void add_row_raw(ZModMatrix& a, std::size_t i, std::size_t j, Residue k) const {
    for (std::size_t c = 0; c < a.cols_; ++c) {
      Residue& e = a.entries_[i * a.cols_ + c];
      e = mod_.add(e, mod_.mul(k, a.entries_[j * a.cols_ + c]));
    }
  }
  void add_col_raw(ZModMatrix& a, std::size_t i, std::size_t j, Residue k) const {
    for (std::size_t r = 0; r < a.rows_; ++r) {
      Residue& e = a.entries_[r * a.cols_ + i];
      e = mod_.add(e, mod_.mul(k, a.entries_[r * a.cols_ + j]));
    }
  }
  static void swap_rows_raw(ZModMatrix& a, std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < a.cols_; ++c)
      std::swap(a.entries_[i * a.cols_ + c], a.entries_[j * a.cols_ + c]);
  }
  static void swap_cols_raw(ZModMatrix& a, std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < a.rows_; ++r)
      std::swap(a.entries_[r * a.cols_ + i], a.entries_[r * a.cols_ + j]);
  }
  void scale_row_raw(ZModMatrix& a, std::size_t i, Residue k) const {
    for (std::size_t c = 0; c < a.cols_; ++c) {
      Residue& e = a.entries_[i * a.cols_ + c];
      e = mod_.mul(e, k);
    }
  }
  void scale_col_raw(ZModMatrix& a, std::size_t i, Residue k) const {
    for (std::size_t r = 0; r < a.rows_; ++r) {
      Residue& e = a.entries_[r * a.cols_ + i];
      e = mod_.mul(e, k);
    }
  }

  Modulus mod_;
  ZModMatrix work_;
  ZModMatrix left_inv_;
  ZModMatrix left_;
  ZModMatrix right_inv_;
  ZModMatrix right_;
};

namespace {

// A unit u with p = u * gcd(p, ell) (mod ell). Such a unit always exists in Z_ell.
Residue associate_unit(Residue p, const Modulus& mod) {
  const std::int64_t ell = mod.value();
  const std::int64_t g = std::gcd(p, ell);
  const std::int64_t a = p / g;
  const std::int64_t step = ell / g;
  for (std::int64_t k = 0; k < g; ++k) {
    const std::int64_t u = a + k * step;
    if (std::gcd(u, ell) == 1) return u % ell;
  }
  throw std::logic_error("associate_unit: no unit found");
}

}  // namespace

ResidueVector NormalForm::diagonal() const {
  const std::size_t k = std::min(d.rows(), d.cols());
  ResidueVector out(k);
  for (std::size_t i = 0; i < k; ++i) out[i] = d(i, i);
  return out;
}

NormalForm normal_form(const ZModMatrix& m) {
  const Modulus& mod = m.modulus();
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  MatrixReducer red(m);

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    bool block_empty = false;
    for (;;) {
      // Pivot: smallest nonzero residue in the block, first in (row, col) order.
      std::size_t pr = rows, pc = cols;
      Residue best = 0;
      for (std::size_t i = t; i < rows; ++i) {
        for (std::size_t j = t; j < cols; ++j) {
          const Residue e = red.at(i, j);
          if (e != 0 && (best == 0 || e < best)) {
            best = e;
            pr = i;
            pc = j;
          }
        }
      }
      if (best == 0) {
        block_empty = true;
        break;
      }
      red.swap_rows(t, pr);
      red.swap_cols(t, pc);

      const Residue unit = associate_unit(best, mod);
      if (unit != 1) red.scale_row(t, *mod.inverse(unit), unit);
      const Residue g = red.at(t, t);

      bool remainder = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        const Residue e = red.at(i, t);
        if (e == 0) continue;
        red.add_row(i, t, -(e / g));
        remainder = remainder || red.at(i, t) != 0;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        const Residue e = red.at(t, j);
        if (e == 0) continue;
        red.add_col(j, t, -(e / g));
        remainder = remainder || red.at(t, j) != 0;
      }
      if (remainder) continue;

      // Divisibility: pull any entry that g does not divide into the pivot row.
      bool divides_all = true;
      for (std::size_t i = t + 1; i < rows && divides_all; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (red.at(i, j) % g != 0) {
            red.add_row(t, i, 1);
            divides_all = false;
            break;
          }
        }
      }
      if (divides_all) break;
    }
    if (block_empty) break;
  }
  return std::move(red).finish();
}

Residue det_mod(const ZModMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("det_mod: matrix is not square");
  const Modulus& mod = m.modulus();
  const std::size_t n = m.rows();
  if (n == 0) return mod.reduce(1);
  std::vector<Residue> a;
  a.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) a.insert(a.end(), m.row(i).begin(), m.row(i).end());
  bool negate = false;
  auto at = [&](std::size_t i, std::size_t j) -> Residue& { return a[i * n + j]; };
  for (std::size_t c = 0; c < n; ++c) {
    // Euclid on column c; every step is unimodular over the integers.
    for (std::size_t i = c + 1; i < n; ++i) {
      while (at(i, c) != 0) {
        const Residue q = at(c, c) / at(i, c);
        for (std::size_t j = c; j < n; ++j) at(c, j) = mod.sub(at(c, j), mod.mul(q, at(i, j)));
        for (std::size_t j = c; j < n; ++j) std::swap(at(c, j), at(i, j));
        negate = !negate;
      }
    }
    if (at(c, c) == 0) return 0;
  }
  Residue det = 1;
  for (std::size_t i = 0; i < n; ++i) det = mod.mul(det, at(i, i));
  return negate ? mod.neg(det) : det;
}

bool is_invertible(const ZModMatrix& m) {
  return m.modulus().is_unit(det_mod(m));
}

std::int64_t SolutionSet::count() const noexcept {
  std::int64_t total = 1;
  for (const std::int64_t order : generator_orders) {
    if (total > std::numeric_limits<std::int64_t>::max() / order) {
      return std::numeric_limits<std::int64_t>::max();
    }
    total *= order;
  }
  return total;
}

void SolutionSet::for_each(const std::function<void(std::span<const Residue>)>& visit) const {
  const std::size_t k = null_generators.size();
  std::vector<std::int64_t> digits(k, 0);
  ResidueVector x = particular;
  for (;;) {
    visit(x);
    std::size_t i = 0;
    for (; i < k; ++i) {
      for (std::size_t j = 0; j < x.size(); ++j) x[j] = modulus.add(x[j], null_generators[i][j]);
      if (++digits[i] < generator_orders[i]) break;
      // Wrapped around: order * generator = 0, so x is back to its previous value.
      digits[i] = 0;
    }
    if (i == k) return;
  }
}

std::vector<ResidueVector> SolutionSet::enumerate() const {
  std::vector<ResidueVector> out;
  for_each([&](std::span<const Residue> x) { out.emplace_back(x.begin(), x.end()); });
  return out;
}

LinearSystem::LinearSystem(ZModMatrix m)
    : m_(std::move(m)), nf_(lightsout::normal_form(m_)), diag_(nf_.diagonal()) {}

ResidueVector LinearSystem::transform_rhs(std::span<const Residue> c) const {
  if (c.size() != m_.rows()) throw std::invalid_argument("right-hand side length mismatch");
  return nf_.u_inv * c;
}

bool LinearSystem::is_solvable(std::span<const Residue> c) const {
  const ResidueVector ct = transform_rhs(c);
  for (std::size_t i = 0; i < ct.size(); ++i) {
    const Residue d = i < diag_.size() ? diag_[i] : 0;
    if (d == 0 ? ct[i] != 0 : ct[i] % d != 0) return false;
  }
  return true;
}

std::optional<SolutionSet> LinearSystem::solve(std::span<const Residue> c) const {
  const Modulus& mod = m_.modulus();
  const ResidueVector ct = transform_rhs(c);
  const std::size_t cols = m_.cols();

  ResidueVector y(cols, 0);
  std::vector<std::pair<std::size_t, std::int64_t>> free_coords;  // (index, step)
  for (std::size_t i = 0; i < ct.size(); ++i) {
    const Residue d = i < diag_.size() ? diag_[i] : 0;
    if (d == 0) {
      if (ct[i] != 0) return std::nullopt;
    } else {
      if (ct[i] % d != 0) return std::nullopt;
      y[i] = ct[i] / d;  // d is normalized to a divisor of ell
    }
  }
  std::vector<std::int64_t> orders;
  for (std::size_t j = 0; j < cols; ++j) {
    const Residue d = j < diag_.size() ? diag_[j] : 0;
    if (d == 1) continue;
    // d * y = c has solutions y0 + k * (ell / d); d = 0 leaves y free.
    const std::int64_t step = d == 0 ? 1 : mod.value() / d;
    free_coords.emplace_back(j, step);
    orders.push_back(d == 0 ? mod.value() : d);
  }

  SolutionSet out{nf_.v_inv * y, {}, std::move(orders), mod};
  for (const auto& [j, step] : free_coords) {
    ResidueVector e(cols, 0);
    e[j] = step;
    out.null_generators.push_back(nf_.v_inv * e);
  }
  return out;
}

std::vector<ResidueVector> LinearSystem::nullspace() const {
  const ResidueVector zero(m_.rows(), 0);
  return solve(zero)->null_generators;
}

std::optional<SolutionSet> solve(const ZModMatrix& m, std::span<const Residue> c) {
  return LinearSystem(m).solve(c);
}

std::vector<ResidueVector> nullspace(const ZModMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("nullspace: matrix is not square");
  return LinearSystem(m).nullspace();
}

}  // namespace lightsout
