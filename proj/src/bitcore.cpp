#include <binsimplex/bitcore.hpp>

#include <binsimplex/errors.hpp>

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace binsimplex {

namespace {

void check_dim(std::size_t n, const char* what) {
  if (n > kMaxDim) {
    throw std::invalid_argument(std::string(what) + " exceeds 64");
  }
}

Word parse_bits(std::string_view text, std::size_t& width) {
  width = text.size();
  check_dim(width, "row length");
  Word bits = 0;
  for (std::size_t j = 0; j < text.size(); ++j) {
    char c = text[j];
    if (c == '1') {
      bits |= Word{1} << j;
    } else if (c != '0') {
      throw MalformedMatrixError(std::string("unexpected character '") + c + "' in 0/1 row");
    }
  }
  return bits;
}

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r\n\f\v";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

}  // namespace

// ---------------------------------------------------------------- BinVector

BinVector::BinVector(std::size_t size, Word bits) : bits_(bits & low_mask(size)), size_(size) {
  check_dim(size, "vector length");
}

BinVector BinVector::unit(std::size_t size, std::size_t i) {
  if (i >= size) throw std::out_of_range("unit vector index out of range");
  return BinVector(size, Word{1} << i);
}

BinVector BinVector::from_string(std::string_view text) {
  std::size_t width = 0;
  Word bits = parse_bits(text, width);
  return BinVector(width, bits);
}

std::size_t BinVector::ones() const { return static_cast<std::size_t>(std::popcount(bits_)); }

BinVector BinVector::with(std::size_t i, bool value) const {
  if (i >= size_) throw std::out_of_range("vector index out of range");
  Word b = value ? (bits_ | (Word{1} << i)) : (bits_ & ~(Word{1} << i));
  return BinVector(size_, b);
}

std::string BinVector::to_string() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i) {
    if ((*this)[i]) s[i] = '1';
  }
  return s;
}

BinVector operator^(const BinVector& a, const BinVector& b) {
  if (a.size_ != b.size_) throw std::invalid_argument("vector length mismatch");
  return BinVector(a.size_, a.bits_ ^ b.bits_);
}

std::strong_ordering operator<=>(const BinVector& a, const BinVector& b) {
  if (auto c = a.size_ <=> b.size_; c != 0) return c;
  // coordinate 0 most significant
  for (std::size_t i = 0; i < a.size_; ++i) {
    if (a[i] != b[i]) return a[i] ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------- BinMatrix

BinMatrix::BinMatrix(std::size_t rows, std::size_t cols) : row_words_(rows, 0), cols_(cols) {
  check_dim(rows, "row count");
  check_dim(cols, "column count");
}

BinMatrix::BinMatrix(std::size_t cols, std::vector<Word> row_words)
    : row_words_(std::move(row_words)), cols_(cols) {
  check_dim(rows(), "row count");
  check_dim(cols, "column count");
  for (Word w : row_words_) {
    if (w & ~low_mask(cols)) throw std::invalid_argument("row word has bits beyond the column count");
  }
}

BinMatrix BinMatrix::identity(std::size_t n) {
  BinMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.row_words_[i] = Word{1} << i;
  return m;
}

BinMatrix BinMatrix::all_ones(std::size_t rows, std::size_t cols) {
  return BinMatrix(cols, std::vector<Word>(rows, low_mask(cols)));
}

BinMatrix BinMatrix::from_rows(std::span<const std::string_view> rows) {
  std::vector<Word> words;
  words.reserve(rows.size());
  std::size_t cols = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::size_t width = 0;
    words.push_back(parse_bits(rows[i], width));
    if (i == 0) {
      cols = width;
    } else if (width != cols) {
      throw MalformedMatrixError("rows have different lengths");
    }
  }
  return BinMatrix(cols, std::move(words));
}

BinMatrix BinMatrix::from_rows(std::initializer_list<std::string_view> rows) {
  return from_rows(std::span<const std::string_view>(rows.begin(), rows.size()));
}

BinMatrix BinMatrix::from_columns(std::span<const BinVector> columns) {
  if (columns.empty()) throw std::invalid_argument("from_columns needs at least one column");
  std::size_t n = columns.front().size();
  BinMatrix m(n, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != n) throw std::invalid_argument("column length mismatch");
    for (std::size_t i = 0; i < n; ++i) {
      if (columns[j][i]) m.row_words_[i] |= Word{1} << j;
    }
  }
  return m;
}

BinVector BinMatrix::column(std::size_t j) const {
  if (j >= cols_) throw std::out_of_range("column index out of range");
  Word bits = 0;
  for (std::size_t i = 0; i < rows(); ++i) bits |= ((row_words_[i] >> j) & 1U) << i;
  return BinVector(rows(), bits);
}

std::vector<BinVector> BinMatrix::columns() const {
  std::vector<BinVector> out;
  out.reserve(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
  return out;
}

std::size_t BinMatrix::ones() const {
  std::size_t total = 0;
  for (Word w : row_words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

std::vector<std::pair<std::size_t, std::size_t>> BinMatrix::support() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < rows(); ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if ((*this)(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

BinMatrix BinMatrix::transpose() const {
  BinMatrix t(cols_, rows());
  for (std::size_t i = 0; i < rows(); ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      if ((*this)(i, j)) t.row_words_[j] |= Word{1} << i;
    }
  }
  return t;
}

BinMatrix BinMatrix::with_column(std::size_t j, const BinVector& column) const {
  if (j >= cols_) throw std::out_of_range("column index out of range");
  if (column.size() != rows()) throw std::invalid_argument("column length mismatch");
  BinMatrix m = *this;
  for (std::size_t i = 0; i < rows(); ++i) {
    m.row_words_[i] = (m.row_words_[i] & ~(Word{1} << j)) | (Word{column[i]} << j);
  }
  return m;
}

BinMatrix BinMatrix::with_appended_column(const BinVector& column) const {
  if (column.size() != rows()) throw std::invalid_argument("column length mismatch");
  check_dim(cols_ + 1, "column count");
  BinMatrix m = *this;
  m.cols_ = cols_ + 1;
  for (std::size_t i = 0; i < rows(); ++i) m.row_words_[i] |= Word{column[i]} << cols_;
  return m;
}

BinMatrix BinMatrix::without_column(std::size_t j) const {
  if (j >= cols_) throw std::out_of_range("column index out of range");
  BinMatrix m(rows(), cols_ - 1);
  for (std::size_t i = 0; i < rows(); ++i) {
    Word w = row_words_[i];
    Word low = w & low_mask(j);
    Word high = (w >> (j + 1)) << j;
    m.row_words_[i] = low | high;
  }
  return m;
}

BinMatrix BinMatrix::submatrix(std::span<const std::size_t> row_index,
                               std::span<const std::size_t> col_index) const {
  BinMatrix m(row_index.size(), col_index.size());
  for (std::size_t a = 0; a < row_index.size(); ++a) {
    if (row_index[a] >= rows()) throw std::out_of_range("row index out of range");
    for (std::size_t b = 0; b < col_index.size(); ++b) {
      if (col_index[b] >= cols_) throw std::out_of_range("column index out of range");
      if ((*this)(row_index[a], col_index[b])) m.row_words_[a] |= Word{1} << b;
    }
  }
  return m;
}

std::vector<std::string> BinMatrix::to_strings() const {
  std::vector<std::string> out;
  out.reserve(rows());
  for (std::size_t i = 0; i < rows(); ++i) out.push_back(row(i).to_string());
  return out;
}

std::strong_ordering operator<=>(const BinMatrix& a, const BinMatrix& b) {
  if (auto c = a.rows() <=> b.rows(); c != 0) return c;
  if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (auto c = a.row(i) <=> b.row(i); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------- operations

BinMatrix antipode(const BinMatrix& x) {
  std::vector<Word> words(x.row_words());
  for (Word& w : words) w = ~w & low_mask(x.cols());
  return BinMatrix(x.cols(), std::move(words));
}

BinMatrix xor_reflect(const BinMatrix& p, std::size_t c) {
  if (c >= p.cols()) throw std::out_of_range("xor_reflect column out of range");
  const Word others = low_mask(p.cols()) & ~(Word{1} << c);
  std::vector<Word> words(p.row_words());
  for (Word& w : words) {
    if ((w >> c) & 1U) w ^= others;
  }
  return BinMatrix(p.cols(), std::move(words));
}

bool is_permutation(const Permutation& perm, std::size_t n) {
  if (perm.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (std::size_t v : perm) {
    if (v >= n || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

Permutation identity_permutation(std::size_t n) {
  Permutation p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  return p;
}

Permutation inverse_permutation(const Permutation& perm) {
  if (!is_permutation(perm, perm.size())) throw std::invalid_argument("not a permutation");
  Permutation inv(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) inv[perm[i]] = i;
  return inv;
}

BinMatrix permute(const BinMatrix& p, const Permutation& row_perm, const Permutation& col_perm) {
  if (!is_permutation(row_perm, p.rows())) throw std::invalid_argument("row permutation is not a bijection");
  if (!is_permutation(col_perm, p.cols())) throw std::invalid_argument("column permutation is not a bijection");
  std::vector<Word> words(p.rows(), 0);
  for (std::size_t i = 0; i < p.rows(); ++i) {
    Word src = p.row_word(row_perm[i]);
    Word w = 0;
    for (std::size_t j = 0; j < p.cols(); ++j) w |= ((src >> col_perm[j]) & 1U) << j;
    words[i] = w;
  }
  return BinMatrix(p.cols(), std::move(words));
}

BinMatrix parse_matrix(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    auto t = trim(line);
    if (t.empty()) {
      if (lines.empty()) continue;
      break;
    }
    lines.emplace_back(t);
  }
  if (lines.empty()) throw MalformedMatrixError("no matrix rows found");
  std::vector<std::string_view> views(lines.begin(), lines.end());
  return BinMatrix::from_rows(std::span<const std::string_view>(views));
}

BinMatrix parse_matrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_matrix(in);
}

std::string format_matrix(const BinMatrix& m) {
  std::string out;
  for (const auto& r : m.to_strings()) {
    out += r;
    out += '\n';
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const BinVector& v) { return os << v.to_string(); }

std::ostream& operator<<(std::ostream& os, const BinMatrix& m) { return os << format_matrix(m); }

}  // namespace binsimplex
