#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "orthocount/profile.hpp"

// Brute-force linear algebra over a small prime field, used as ground truth
// for the closed-form counts.
namespace orthocount::geometry {

inline constexpr int kMaxDim = 8;

using Vec = std::array<std::uint8_t, kMaxDim>;

/// Arithmetic modulo an odd prime p < 64.
class PrimeField {
 public:
  explicit PrimeField(int p);

  int p() const { return p_; }
  int nonsquare() const { return nonsquare_; }
  int half() const { return half_; }

  int add(int a, int b) const { return (a + b) % p_; }
  int sub(int a, int b) const { return (a - b + p_) % p_; }
  int mul(int a, int b) const { return (a * b) % p_; }
  int neg(int a) const { return (p_ - a) % p_; }
  int inv(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
  bool is_square(int a) const { return square_count_[static_cast<std::size_t>(a)] > 0; }
  /// Number of x with x^2 = a.
  int square_count(int a) const { return square_count_[static_cast<std::size_t>(a)]; }

 private:
  int p_;
  int nonsquare_ = 0;
  int half_ = 0;
  std::vector<int> inverse_;
  std::vector<int> square_count_;
};

bool is_odd_prime(long long p);

/// A j-dimensional subspace of F_p^n held in reduced row echelon form, so
/// equal subspaces compare equal.
class Subspace {
 public:
  Subspace() = default;

  /// Row-reduces an arbitrary spanning set.
  static Subspace span(const PrimeField& f, int n, const std::vector<Vec>& rows);
  static Subspace whole(const PrimeField& f, int n);

  int n() const { return n_; }
  int dim() const { return dim_; }
  const Vec& row(int r) const { return rows_[static_cast<std::size_t>(r)]; }
  std::vector<Vec> rows() const { return {rows_.begin(), rows_.begin() + dim_}; }
  int pivot(int r) const { return pivots_[static_cast<std::size_t>(r)]; }

  bool contains(const PrimeField& f, const Vec& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b);

  std::string str() const;

 private:
  friend class SubspaceCursor;
  int n_ = 0;
  int dim_ = 0;
  std::array<Vec, kMaxDim> rows_{};
  std::array<int, kMaxDim> pivots_{};
};

/// Rank of a list of vectors of length n.
int rank(const PrimeField& f, int n, std::vector<Vec> rows);

/// Non-degenerate symmetric bilinear form f with quadratic form Q(v) = f(v, v).
class GramForm {
 public:
  using Matrix = std::array<std::array<std::uint8_t, kMaxDim>, kMaxDim>;

  /// Accepts any symmetric non-degenerate Gram matrix; checks the declared type.
  GramForm(const PrimeField& f, int n, FormType eps, const Matrix& gram);

  /// Canonical representative: hyperbolic pairs with Q(x, y) = xy, plus
  /// diag(1, -nonsquare) for elliptic or (1) for parabolic.
  static GramForm standard(const PrimeField& f, int n, FormType eps);

  const PrimeField& field() const { return field_; }
  int n() const { return n_; }
  FormType eps() const { return eps_; }
  const Matrix& gram() const { return gram_; }

  int bilinear(const Vec& u, const Vec& v) const;
  int quad(const Vec& v) const { return bilinear(v, v); }

 private:
  PrimeField field_;
  int n_;
  FormType eps_;
  Matrix gram_{};
};

struct Classification {
  int radical_dim = 0;
  FormType type = kHyp;
  std::optional<FormType> perp_type;

  friend auto operator<=>(const Classification&, const Classification&) = default;
};

/// Radical dimension and type of the form restricted to span(rows); the rows
/// must be linearly independent.
Classification classify_rows(const GramForm& form, const Vec* rows, int count);

/// classify_rows plus the perp type (type of s^perp) when n(j - i) is odd.
Classification classify(const GramForm& form, const Subspace& s);

/// {x : f(x, y) = 0 for all y in s}
Subspace perp(const GramForm& form, const Subspace& s);

/// Basis of {x in span(ambient) : f(x, y) = 0 for every target y}.
std::vector<Vec> perp_within(const GramForm& form, const Vec* ambient, int ambient_count, const Vec* targets,
                             int target_count);

/// Nonzero vectors v of F_p^m with sum_t d_t v_t^2 = 0, for diagonal entries d.
long long count_singular_diagonal(const PrimeField& f, const std::vector<int>& diag);

/// Pivot columns of one RREF cell; enumeration is split along these.
using PivotPattern = std::vector<int>;

/// All pivot patterns for j-subspaces of F^n in lexicographic order.
std::vector<PivotPattern> pivot_patterns(int n, int j);

/// Streams the j-subspaces of F_p^n with the given pivot patterns, in order:
/// patterns lexicographically, then free entries as an odometer whose last
/// position moves fastest.
class SubspaceCursor {
 public:
  SubspaceCursor(const PrimeField& f, int n, int j);
  SubspaceCursor(const PrimeField& f, int n, int j, std::vector<PivotPattern> patterns);

  /// Writes the next subspace into out; false when exhausted.
  bool next(Subspace& out);

 private:
  void load_pattern();

  PrimeField field_;
  int n_;
  int j_;
  std::vector<PivotPattern> patterns_;
  std::size_t pattern_index_ = 0;
  bool started_ = false;
  std::vector<std::pair<int, int>> free_;  // (row, column)
  std::vector<int> digits_;
  Subspace current_;
};

/// Calls visit on every j-subspace of F_p^n.
void for_each_subspace(const PrimeField& f, int n, int j, const std::function<void(const Subspace&)>& visit);

/// Number of j-subspaces of F_p^n, counted by enumeration.
long long count_subspaces(const PrimeField& f, int n, int j);

/// Runs work(chunk) for `jobs` disjoint slices of the pivot patterns of
/// (n, j) and returns the per-slice results in slice order.
template <typename Result>
std::vector<Result> partitioned(int n, int j, int jobs,
                                const std::function<Result(const std::vector<PivotPattern>&)>& work);

}  // namespace orthocount::geometry

#include "orthocount/detail/partition.hpp"
