#include "orthocount/geometry.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace orthocount::geometry {

bool is_odd_prime(long long p) {
  if (p < 3 || p % 2 == 0) return false;
  for (long long d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

PrimeField::PrimeField(int p) : p_(p) {
  if (!is_odd_prime(p) || p >= 64) throw std::invalid_argument(std::to_string(p) + " is not an odd prime below 64");
  inverse_.assign(static_cast<std::size_t>(p), 0);
  square_count_.assign(static_cast<std::size_t>(p), 0);
  for (int a = 1; a < p; ++a)
    for (int b = 1; b < p; ++b)
      if (a * b % p == 1) inverse_[static_cast<std::size_t>(a)] = b;
  for (int x = 0; x < p; ++x) ++square_count_[static_cast<std::size_t>(x * x % p)];
  for (int a = 2; a < p; ++a) {
    if (square_count_[static_cast<std::size_t>(a)] == 0) {
      nonsquare_ = a;
      break;
    }
  }
  half_ = (p + 1) / 2;
}

namespace {

// In-place reduction to RREF; returns the pivot columns.
std::vector<int> row_reduce(const PrimeField& f, int n, std::vector<Vec>& rows) {
  std::vector<int> pivots;
  std::size_t r = 0;
  for (int col = 0; col < n && r < rows.size(); ++col) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][static_cast<std::size_t>(col)] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    const int inv = f.inv(rows[r][static_cast<std::size_t>(col)]);
    for (int c = 0; c < n; ++c)
      rows[r][static_cast<std::size_t>(c)] = static_cast<std::uint8_t>(f.mul(rows[r][static_cast<std::size_t>(c)], inv));
    for (std::size_t o = 0; o < rows.size(); ++o) {
      if (o == r) continue;
      const int factor = rows[o][static_cast<std::size_t>(col)];
      if (factor == 0) continue;
      for (int c = 0; c < n; ++c) {
        auto& x = rows[o][static_cast<std::size_t>(c)];
        x = static_cast<std::uint8_t>(f.sub(x, f.mul(factor, rows[r][static_cast<std::size_t>(c)])));
      }
    }
    pivots.push_back(col);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

}  // namespace

Subspace Subspace::span(const PrimeField& f, int n, const std::vector<Vec>& rows) {
  if (n < 0 || n > kMaxDim) throw std::invalid_argument("dimension out of range");
  std::vector<Vec> work = rows;
  std::vector<int> pivots = row_reduce(f, n, work);
  Subspace s;
  s.n_ = n;
  s.dim_ = static_cast<int>(work.size());
  for (std::size_t r = 0; r < work.size(); ++r) {
    s.rows_[r] = work[r];
    s.pivots_[r] = pivots[r];
  }
  return s;
}

Subspace Subspace::whole(const PrimeField& f, int n) {
  std::vector<Vec> rows(static_cast<std::size_t>(n), Vec{});
  for (int r = 0; r < n; ++r) rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(r)] = 1;
  return span(f, n, rows);
}

bool Subspace::contains(const PrimeField& f, const Vec& v) const {
  Vec w = v;
  for (int r = 0; r < dim_; ++r) {
    const int c = w[static_cast<std::size_t>(pivot(r))];
    if (c == 0) continue;
    for (int x = 0; x < n_; ++x) {
      auto& e = w[static_cast<std::size_t>(x)];
      e = static_cast<std::uint8_t>(f.sub(e, f.mul(c, row(r)[static_cast<std::size_t>(x)])));
    }
  }
  for (int x = 0; x < n_; ++x)
    if (w[static_cast<std::size_t>(x)] != 0) return false;
  return true;
}

bool operator==(const Subspace& a, const Subspace& b) {
  if (a.n_ != b.n_ || a.dim_ != b.dim_) return false;
  for (int r = 0; r < a.dim_; ++r)
    if (a.rows_[static_cast<std::size_t>(r)] != b.rows_[static_cast<std::size_t>(r)]) return false;
  return true;
}

std::string Subspace::str() const {
  std::ostringstream os;
  os << '[';
  for (int r = 0; r < dim_; ++r) {
    if (r) os << "; ";
    for (int c = 0; c < n_; ++c) os << (c ? " " : "") << int(row(r)[static_cast<std::size_t>(c)]);
  }
  os << ']';
  return os.str();
}

int rank(const PrimeField& f, int n, std::vector<Vec> rows) {
  return static_cast<int>(row_reduce(f, n, rows).size());
}

GramForm::GramForm(const PrimeField& f, int n, FormType eps, const Matrix& gram)
    : field_(f), n_(n), eps_(eps), gram_(gram) {
  if (n < 1 || n > kMaxDim) throw std::invalid_argument("form dimension out of range");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (gram_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] >= f.p())
        throw std::invalid_argument("Gram entry not reduced mod p");
      if (gram_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] !=
          gram_[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)])
        throw std::invalid_argument("Gram matrix not symmetric");
    }
  std::vector<Vec> basis(static_cast<std::size_t>(n), Vec{});
  for (int r = 0; r < n; ++r) basis[static_cast<std::size_t>(r)][static_cast<std::size_t>(r)] = 1;
  Classification c = classify_rows(*this, basis.data(), n);
  if (c.radical_dim != 0) throw std::invalid_argument("Gram matrix is degenerate");
  if (c.type != eps) throw std::invalid_argument("Gram matrix does not have the declared type");
}

GramForm GramForm::standard(const PrimeField& f, int n, FormType eps) {
  if (n < 1 || n > kMaxDim || (n - sign(eps)) % 2 == 0)
    throw std::invalid_argument("no form of type " + std::to_string(sign(eps)) + " in dimension " + std::to_string(n));
  Matrix g{};
  const int hyperbolic_pairs = eps == kHyp ? n / 2 : (n - 1) / 2;
  for (int t = 0; t < hyperbolic_pairs; ++t) {
    const auto a = static_cast<std::size_t>(2 * t);
    g[a][a + 1] = g[a + 1][a] = static_cast<std::uint8_t>(f.half());
  }
  if (eps == kEll) {
    g[static_cast<std::size_t>(n - 2)][static_cast<std::size_t>(n - 2)] = 1;
    g[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 1)] = static_cast<std::uint8_t>(f.neg(f.nonsquare()));
  } else if (eps == kPar) {
    g[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 1)] = 1;
  }
  return GramForm(f, n, eps, g);
}

int GramForm::bilinear(const Vec& u, const Vec& v) const {
  int total = 0;
  for (int a = 0; a < n_; ++a) {
    const int ua = u[static_cast<std::size_t>(a)];
    if (ua == 0) continue;
    int inner = 0;
    const auto& row = gram_[static_cast<std::size_t>(a)];
    for (int b = 0; b < n_; ++b) inner += row[static_cast<std::size_t>(b)] * v[static_cast<std::size_t>(b)];
    total += ua * (inner % field_.p());
  }
  return total % field_.p();
}

long long count_singular_diagonal(const PrimeField& f, const std::vector<int>& diag) {
  const int p = f.p();
  std::vector<long long> ways(static_cast<std::size_t>(p), 0);
  ways[0] = 1;
  std::vector<long long> next(static_cast<std::size_t>(p));
  for (int d : diag) {
    std::fill(next.begin(), next.end(), 0);
    for (int v = 0; v < p; ++v) {
      if (ways[static_cast<std::size_t>(v)] == 0) continue;
      for (int s = 0; s < p; ++s) {
        const int c = f.square_count(s);
        if (c == 0) continue;
        next[static_cast<std::size_t>((v + d * s) % p)] += ways[static_cast<std::size_t>(v)] * c;
      }
    }
    std::swap(ways, next);
  }
  return ways[0] - 1;
}

namespace {

long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// Type of a non-degenerate diagonal form from its number of singular vectors.
FormType type_of_diagonal(const PrimeField& f, const std::vector<int>& diag) {
  const int m = static_cast<int>(diag.size());
  if (m == 0) return kHyp;
  if (m % 2 == 1) return kPar;
  const long long q = f.p();
  const long long found = count_singular_diagonal(f, diag);
  const long long h = m / 2;
  if (found == (ipow(q, static_cast<int>(h - 1)) + 1) * (ipow(q, static_cast<int>(h)) - 1)) return kHyp;
  if (found == (ipow(q, static_cast<int>(h - 1)) - 1) * (ipow(q, static_cast<int>(h)) + 1)) return kEll;
  throw std::logic_error("singular vector count matches neither type");
}

}  // namespace

Classification classify_rows(const GramForm& form, const Vec* rows, int count) {
  const PrimeField& f = form.field();
  int m[kMaxDim][kMaxDim];
  for (int a = 0; a < count; ++a)
    for (int b = a; b < count; ++b) m[a][b] = m[b][a] = form.bilinear(rows[a], rows[b]);

  // Congruence diagonalisation: the zero block left over spans the radical
  // and the pivots give the form on a complement of it.
  std::vector<int> diag;
  for (int t = 0; t < count; ++t) {
    int s = t;
    while (s < count && m[s][s] == 0) ++s;
    if (s == count) {
      int a = -1;
      int b = -1;
      for (int x = t; x < count && a < 0; ++x)
        for (int y = x + 1; y < count; ++y)
          if (m[x][y] != 0) {
            a = x;
            b = y;
            break;
          }
      if (a < 0) break;
      // e_a <- e_a + e_b makes the diagonal entry 2 f(e_a, e_b) != 0.
      for (int c = 0; c < count; ++c) m[a][c] = f.add(m[a][c], m[b][c]);
      for (int c = 0; c < count; ++c) m[c][a] = f.add(m[c][a], m[c][b]);
      s = a;
    }
    if (s != t) {
      for (int c = 0; c < count; ++c) std::swap(m[s][c], m[t][c]);
      for (int c = 0; c < count; ++c) std::swap(m[c][s], m[c][t]);
    }
    const int inv = f.inv(m[t][t]);
    for (int r = t + 1; r < count; ++r) {
      const int factor = f.mul(m[r][t], inv);
      if (factor == 0) continue;
      for (int c = t; c < count; ++c) m[r][c] = f.sub(m[r][c], f.mul(factor, m[t][c]));
      for (int c = t; c < count; ++c) m[c][r] = f.sub(m[c][r], f.mul(factor, m[c][t]));
    }
    diag.push_back(m[t][t]);
  }
  Classification out;
  out.radical_dim = count - static_cast<int>(diag.size());
  out.type = type_of_diagonal(f, diag);
  return out;
}

std::vector<Vec> perp_within(const GramForm& form, const Vec* ambient, int ambient_count, const Vec* targets,
                             int target_count) {
  const PrimeField& f = form.field();
  // Coefficient system: x = sum_a c_a ambient_a with sum_a c_a f(ambient_a, y) = 0.
  std::vector<Vec> eq(static_cast<std::size_t>(target_count), Vec{});
  for (int t = 0; t < target_count; ++t)
    for (int a = 0; a < ambient_count; ++a)
      eq[static_cast<std::size_t>(t)][static_cast<std::size_t>(a)] =
          static_cast<std::uint8_t>(form.bilinear(ambient[a], targets[t]));
  std::vector<int> pivots = row_reduce(f, ambient_count, eq);
  std::vector<bool> is_pivot(static_cast<std::size_t>(ambient_count), false);
  for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;

  std::vector<Vec> out;
  for (int free_col = 0; free_col < ambient_count; ++free_col) {
    if (is_pivot[static_cast<std::size_t>(free_col)]) continue;
    Vec coeff{};
    coeff[static_cast<std::size_t>(free_col)] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      coeff[static_cast<std::size_t>(pivots[r])] = static_cast<std::uint8_t>(f.neg(eq[r][static_cast<std::size_t>(free_col)]));
    Vec x{};
    for (int a = 0; a < ambient_count; ++a) {
      const int c = coeff[static_cast<std::size_t>(a)];
      if (c == 0) continue;
      for (int col = 0; col < form.n(); ++col) {
        auto& e = x[static_cast<std::size_t>(col)];
        e = static_cast<std::uint8_t>(f.add(e, f.mul(c, ambient[a][static_cast<std::size_t>(col)])));
      }
    }
    out.push_back(x);
  }
  return out;
}

Subspace perp(const GramForm& form, const Subspace& s) {
  Subspace all = Subspace::whole(form.field(), form.n());
  std::vector<Vec> ambient = all.rows();
  std::vector<Vec> targets = s.rows();
  return Subspace::span(form.field(), form.n(),
                        perp_within(form, ambient.data(), form.n(), targets.data(), s.dim()));
}

Classification classify(const GramForm& form, const Subspace& s) {
  std::vector<Vec> rows = s.rows();
  Classification c = classify_rows(form, rows.data(), s.dim());
  if (form.n() % 2 == 1 && (s.dim() - c.radical_dim) % 2 == 1) {
    std::vector<Vec> other = perp(form, s).rows();
    c.perp_type = classify_rows(form, other.data(), static_cast<int>(other.size())).type;
  }
  return c;
}

std::vector<PivotPattern> pivot_patterns(int n, int j) {
  std::vector<PivotPattern> out;
  if (j < 0 || j > n) return out;
  PivotPattern cur(static_cast<std::size_t>(j));
  for (int t = 0; t < j; ++t) cur[static_cast<std::size_t>(t)] = t;
  while (true) {
    out.push_back(cur);
    int t = j - 1;
    while (t >= 0 && cur[static_cast<std::size_t>(t)] == n - j + t) --t;
    if (t < 0) break;
    ++cur[static_cast<std::size_t>(t)];
    for (int u = t + 1; u < j; ++u) cur[static_cast<std::size_t>(u)] = cur[static_cast<std::size_t>(u - 1)] + 1;
  }
  return out;
}

SubspaceCursor::SubspaceCursor(const PrimeField& f, int n, int j) : SubspaceCursor(f, n, j, pivot_patterns(n, j)) {}

SubspaceCursor::SubspaceCursor(const PrimeField& f, int n, int j, std::vector<PivotPattern> patterns)
    : field_(f), n_(n), j_(j), patterns_(std::move(patterns)) {
  if (n < 0 || n > kMaxDim) throw std::invalid_argument("dimension out of range");
}

void SubspaceCursor::load_pattern() {
  const PivotPattern& piv = patterns_[pattern_index_];
  current_ = Subspace{};
  current_.n_ = n_;
  current_.dim_ = j_;
  std::vector<bool> is_pivot(static_cast<std::size_t>(n_), false);
  for (int c : piv) is_pivot[static_cast<std::size_t>(c)] = true;
  free_.clear();
  for (int r = 0; r < j_; ++r) {
    const int pc = piv[static_cast<std::size_t>(r)];
    current_.pivots_[static_cast<std::size_t>(r)] = pc;
    current_.rows_[static_cast<std::size_t>(r)][static_cast<std::size_t>(pc)] = 1;
    for (int c = pc + 1; c < n_; ++c)
      if (!is_pivot[static_cast<std::size_t>(c)]) free_.emplace_back(r, c);
  }
  digits_.assign(free_.size(), 0);
}

bool SubspaceCursor::next(Subspace& out) {
  if (!started_) {
    started_ = true;
    if (patterns_.empty()) return false;
    load_pattern();
    out = current_;
    return true;
  }
  if (pattern_index_ >= patterns_.size()) return false;
  const int p = field_.p();
  for (std::size_t pos = free_.size(); pos-- > 0;) {
    auto [r, c] = free_[pos];
    auto& cell = current_.rows_[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    if (++digits_[pos] < p) {
      cell = static_cast<std::uint8_t>(digits_[pos]);
      out = current_;
      return true;
    }
    digits_[pos] = 0;
    cell = 0;
  }
  if (++pattern_index_ >= patterns_.size()) return false;
  load_pattern();
  out = current_;
  return true;
}

void for_each_subspace(const PrimeField& f, int n, int j, const std::function<void(const Subspace&)>& visit) {
  SubspaceCursor cursor(f, n, j);
  Subspace s;
  while (cursor.next(s)) visit(s);
}

long long count_subspaces(const PrimeField& f, int n, int j) {
  long long total = 0;
  for_each_subspace(f, n, j, [&](const Subspace&) { ++total; });
  return total;
}

}  // namespace orthocount::geometry
