#include <binsimplex/exact.hpp>

#include <binsimplex/errors.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <utility>

namespace binsimplex {

namespace {

__extension__ using Wide = __int128;

// Exact (a*b - c*d) / e for the machine-integer kernels. Callers guarantee
// the quotient fits and the division is exact.
struct SmallOps {
  using Int = std::int64_t;
  static Int cross(Int a, Int b, Int c, Int d, Int e) {
    Wide num = static_cast<Wide>(a) * b - static_cast<Wide>(c) * d;
    return static_cast<Int>(num / e);
  }
};

struct BigOps {
  using Int = mpz_class;
  static Int cross(const Int& a, const Int& b, const Int& c, const Int& d, const Int& e) {
    Int num = a * b - c * d;
    mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), e.get_mpz_t());
    return num;
  }
};

template <class Ops>
using Rows = std::vector<std::vector<typename Ops::Int>>;

template <class Ops>
typename Ops::Int bareiss_determinant(Rows<Ops> a) {
  using Int = typename Ops::Int;
  const std::size_t n = a.size();
  if (n == 0) return Int(1);
  Int prev(1);
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) return Int(0);
    if (p != k) {
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = Ops::cross(a[k][k], a[i][j], a[i][k], a[k][j], prev);
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  Int d = a[n - 1][n - 1];
  return sign < 0 ? Int(-d) : d;
}

// Fraction-free row echelon; returns the number of pivots.
template <class Ops>
std::size_t bareiss_rank(Rows<Ops> a, std::size_t cols) {
  using Int = typename Ops::Int;
  const std::size_t n = a.size();
  Int prev(1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < n; ++c) {
    std::size_t p = r;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < n; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) a[i][j] = Ops::cross(a[r][c], a[i][j], a[i][c], a[r][j], prev);
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

// Fraction-free Gauss-Jordan on [M | I]. On success the left half becomes
// d*I and the right half R satisfies M R = d I, where d = ±det(M) (the sign
// flips once per row swap). Returns false if M is singular.
template <class Ops>
bool bareiss_gauss_jordan(Rows<Ops>& a, typename Ops::Int& d, int& sign) {
  using Int = typename Ops::Int;
  const std::size_t n = a.size();
  const std::size_t width = 2 * n;
  for (std::size_t i = 0; i < n; ++i) {
    a[i].resize(width, Int(0));
    a[i][n + i] = 1;
  }
  Int prev(1);
  sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p][k] == 0) ++p;
    if (p == n) return false;
    if (p != k) {
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      for (std::size_t j = 0; j < width; ++j) {
        if (j == k) continue;
        a[i][j] = Ops::cross(a[k][k], a[i][j], a[i][k], a[k][j], prev);
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  d = n == 0 ? Int(1) : a[n - 1][n - 1];
  return true;
}

template <class Ops>
Rows<Ops> rows_of(const BinMatrix& m) {
  using Int = typename Ops::Int;
  Rows<Ops> a(m.rows(), std::vector<Int>(m.cols(), Int(0)));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j)) a[i][j] = 1;
  return a;
}

Rows<BigOps> rows_of(const IntMatrix& m) {
  Rows<BigOps> a(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j);
  return a;
}

void require_square(std::size_t rows, std::size_t cols, const char* what) {
  if (rows != cols) throw std::invalid_argument(std::string(what) + " requires a square matrix");
}

}  // namespace

IntMatrix to_int_matrix(const BinMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j)) out(i, j) = 1;
  return out;
}

ExactMatrix to_exact(const IntMatrix& m) {
  ExactMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = mpq_class(m(i, j));
  return out;
}

mpz_class determinant(const IntMatrix& m) {
  require_square(m.rows(), m.cols(), "determinant");
  return bareiss_determinant<BigOps>(rows_of(m));
}

mpz_class determinant(const BinMatrix& m) {
  require_square(m.rows(), m.cols(), "determinant");
  return bareiss_determinant<BigOps>(rows_of<BigOps>(m));
}

std::size_t rank(const BinMatrix& m) { return bareiss_rank<BigOps>(rows_of<BigOps>(m), m.cols()); }

IntMatrix gram(const BinMatrix& x) {
  const std::size_t k = x.cols();
  IntMatrix g(k, k);
  // columns as words make every entry a popcount of an AND
  std::vector<Word> cols(k);
  for (std::size_t j = 0; j < k; ++j) cols[j] = x.column(j).bits();
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a; b < k; ++b) {
      long v = std::popcount(cols[a] & cols[b]);
      g(a, b) = v;
      g(b, a) = v;
    }
  return g;
}

Adjugate adjugate(const IntMatrix& m) {
  require_square(m.rows(), m.cols(), "adjugate");
  const std::size_t n = m.rows();
  Rows<BigOps> a = rows_of(m);
  mpz_class d;
  int sign = 1;
  if (!bareiss_gauss_jordan<BigOps>(a, d, sign)) throw SingularMatrixError("matrix is singular");
  Adjugate out{IntMatrix(n, n), sign < 0 ? mpz_class(-d) : d};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.adj(i, j) = sign < 0 ? mpz_class(-a[i][n + j]) : a[i][n + j];
  return out;
}

ExactMatrix inverse(const IntMatrix& m) {
  Adjugate a = adjugate(m);
  ExactMatrix inv(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      inv(i, j) = mpq_class(a.adj(i, j), a.det);
      inv(i, j).canonicalize();
    }
  return inv;
}

ExactMatrix gram_inverse(const BinMatrix& x) {
  try {
    return inverse(gram(x));
  } catch (const SingularMatrixError&) {
    throw SingularMatrixError("Gram matrix is singular: columns are linearly dependent");
  }
}

ExactMatrix transposed_inverse(const BinMatrix& p) {
  require_square(p.rows(), p.cols(), "transposed_inverse");
  return inverse(to_int_matrix(p)).transpose();
}

std::string to_string(const mpq_class& value) {
  mpq_class x = value;
  x.canonicalize();
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

mpq_class parse_rational(const std::string& text) {
  mpq_class q;
  if (q.set_str(text, 10) != 0) throw std::invalid_argument("not a rational number: " + text);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
  q.canonicalize();
  return q;
}

namespace detail {

bool small_gram_inverse_signs(const BinMatrix& x, std::vector<int>& signs, std::vector<int>& row_sum_signs) {
  const std::size_t k = x.cols();
  if (k > kSmallGramLimit) throw std::invalid_argument("small_gram_inverse_signs: too many columns");
  std::vector<Word> cols(k);
  for (std::size_t j = 0; j < k; ++j) cols[j] = x.column(j).bits();
  Rows<SmallOps> a(k, std::vector<std::int64_t>(k, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) a[i][j] = std::popcount(cols[i] & cols[j]);
  std::int64_t d = 0;
  int sign = 1;
  if (!bareiss_gauss_jordan<SmallOps>(a, d, sign)) return false;
  // (XᵀX)⁻¹ = R / d, so entry signs are sign(R) * sign(d).
  const int ds = d > 0 ? 1 : -1;
  auto sgn = [](Wide v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); };
  signs.assign(k * k, 0);
  row_sum_signs.assign(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    Wide s = 0;
    for (std::size_t j = 0; j < k; ++j) {
      signs[i * k + j] = sgn(a[i][k + j]) * ds;
      s += a[i][k + j];
    }
    row_sum_signs[i] = sgn(s) * ds;
  }
  return true;
}

std::size_t small_rank(const BinMatrix& m) {
  if (std::min(m.rows(), m.cols()) > 32) return rank(m);
  // every intermediate is a minor of order <= 32, which fits in 64 bits
  return bareiss_rank<SmallOps>(rows_of<SmallOps>(m), m.cols());
}

}  // namespace detail

}  // namespace binsimplex
