#pragma once

// Exact linear algebra over the ring Z_ell for composite as well as prime ell.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace lightsout {

using Residue = std::int64_t;
using ResidueVector = std::vector<Residue>;

/// The label ring Z_ell. Any two reduced residues multiply without overflowing
/// a signed 64-bit integer.
class Modulus {
 public:
  static constexpr std::int64_t kMax = (std::int64_t{1} << 31) - 1;

  /// Throws std::invalid_argument unless 2 <= ell <= 2^31 - 1.
  explicit Modulus(std::int64_t ell);

  [[nodiscard]] std::int64_t value() const noexcept { return ell_; }

  [[nodiscard]] Residue reduce(std::int64_t x) const noexcept {
    const std::int64_t r = x % ell_;
    return r < 0 ? r + ell_ : r;
  }
  [[nodiscard]] Residue add(Residue a, Residue b) const noexcept { return reduce(a + b); }
  [[nodiscard]] Residue sub(Residue a, Residue b) const noexcept { return reduce(a - b); }
  [[nodiscard]] Residue mul(Residue a, Residue b) const noexcept { return reduce(a * b); }
  [[nodiscard]] Residue neg(Residue a) const noexcept { return reduce(-a); }

  [[nodiscard]] bool is_unit(Residue a) const noexcept;
  [[nodiscard]] std::optional<Residue> inverse(Residue a) const noexcept;

  friend bool operator==(const Modulus&, const Modulus&) = default;

 private:
  std::int64_t ell_;
};

/// Dense row-major matrix with entries reduced into [0, ell).
class ZModMatrix {
 public:
  ZModMatrix(std::size_t rows, std::size_t cols, Modulus modulus);

  static ZModMatrix identity(std::size_t n, Modulus modulus);
  /// Entries are reduced mod ell; ragged input throws std::invalid_argument.
  static ZModMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows,
                              Modulus modulus);

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }
  [[nodiscard]] const Modulus& modulus() const noexcept { return modulus_; }

  [[nodiscard]] Residue operator()(std::size_t i, std::size_t j) const noexcept {
    return entries_[i * cols_ + j];
  }
  void set(std::size_t i, std::size_t j, std::int64_t value) noexcept {
    entries_[i * cols_ + j] = modulus_.reduce(value);
  }
  [[nodiscard]] std::span<const Residue> row(std::size_t i) const noexcept {
    return {entries_.data() + i * cols_, cols_};
  }

  [[nodiscard]] ZModMatrix transpose() const;
  [[nodiscard]] ZModMatrix operator*(const ZModMatrix& rhs) const;
  [[nodiscard]] ResidueVector operator*(std::span<const Residue> x) const;

  friend bool operator==(const ZModMatrix&, const ZModMatrix&) = default;

 private:
  friend class MatrixReducer;

  std::size_t rows_;
  std::size_t cols_;
  Modulus modulus_;
  std::vector<Residue> entries_;
};

/// M = u * d * v with u, v invertible and d diagonal. Each nonzero diagonal
/// entry divides ell and divides the next one. u_inv * M * v_inv = d.
struct NormalForm {
  ZModMatrix u;
  ZModMatrix d;
  ZModMatrix v;
  ZModMatrix u_inv;
  ZModMatrix v_inv;

  /// Diagonal of d, length min(rows, cols).
  [[nodiscard]] ResidueVector diagonal() const;
};

/// Deterministic: pivots on the smallest nonzero residue of the remaining
/// block, ties broken by (row, col).
[[nodiscard]] NormalForm normal_form(const ZModMatrix& m);

/// Throws std::invalid_argument for non-square input.
[[nodiscard]] Residue det_mod(const ZModMatrix& m);
[[nodiscard]] bool is_invertible(const ZModMatrix& m);

/// The complete solution set of M x = c: particular + sum_i k_i * g_i with
/// 0 <= k_i < order_i, every combination distinct.
struct SolutionSet {
  ResidueVector particular;
  std::vector<ResidueVector> null_generators;
  std::vector<std::int64_t> generator_orders;
  Modulus modulus;

  /// Number of distinct solutions (saturates at INT64_MAX).
  [[nodiscard]] std::int64_t count() const noexcept;
  void for_each(const std::function<void(std::span<const Residue>)>& visit) const;
  [[nodiscard]] std::vector<ResidueVector> enumerate() const;
};

/// A matrix with its normal form cached so that many right-hand sides can be
/// tested cheaply.
class LinearSystem {
 public:
  explicit LinearSystem(ZModMatrix m);

  [[nodiscard]] const ZModMatrix& matrix() const noexcept { return m_; }
  [[nodiscard]] const NormalForm& normal_form() const noexcept { return nf_; }

  /// Throws std::invalid_argument on a length mismatch.
  [[nodiscard]] bool is_solvable(std::span<const Residue> c) const;
  [[nodiscard]] std::optional<SolutionSet> solve(std::span<const Residue> c) const;
  [[nodiscard]] std::vector<ResidueVector> nullspace() const;

 private:
  [[nodiscard]] ResidueVector transform_rhs(std::span<const Residue> c) const;

  ZModMatrix m_;
  NormalForm nf_;
  ResidueVector diag_;
};

[[nodiscard]] std::optional<SolutionSet> solve(const ZModMatrix& m, std::span<const Residue> c);
/// Generators of {x : M x = 0}; empty iff M is invertible. Throws for non-square input.
[[nodiscard]] std::vector<ResidueVector> nullspace(const ZModMatrix& m);

}  // namespace lightsout
