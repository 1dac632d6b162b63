#include <binsimplex/structure.hpp>

#include <binsimplex/errors.hpp>
#include <binsimplex/geometry.hpp>

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace binsimplex {

namespace {

// Kuhn augmenting paths on row words; match_col[c] = row or npos.
constexpr std::size_t npos = static_cast<std::size_t>(-1);

bool augment(const BinMatrix& a, std::size_t r, Word& seen, std::vector<std::size_t>& match_col) {
  Word cand = a.row_word(r) & ~seen;
  while (cand) {
    std::size_t c = static_cast<std::size_t>(std::countr_zero(cand));
    cand &= cand - 1;
    seen |= Word{1} << c;
    if (match_col[c] == npos || augment(a, match_col[c], seen, match_col)) {
      match_col[c] = r;
      return true;
    }
  }
  return false;
}

// Returns match_row (row -> column or npos).
std::vector<std::size_t> maximum_matching(const BinMatrix& a) {
  std::vector<std::size_t> match_col(a.cols(), npos);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Word seen = 0;
    augment(a, r, seen, match_col);
  }
  std::vector<std::size_t> match_row(a.rows(), npos);
  for (std::size_t c = 0; c < a.cols(); ++c)
    if (match_col[c] != npos) match_row[match_col[c]] = c;
  return match_row;
}

// Row digraph of a matrix with a perfect matching: i -> i' when A(i, m(i')) = 1.
std::vector<Word> row_digraph(const BinMatrix& a, const std::vector<std::size_t>& match) {
  const std::size_t n = a.rows();
  std::vector<std::size_t> owner(n);
  for (std::size_t i = 0; i < n; ++i) owner[match[i]] = i;
  std::vector<Word> out(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    Word w = a.row_word(i);
    while (w) {
      std::size_t c = static_cast<std::size_t>(std::countr_zero(w));
      w &= w - 1;
      if (owner[c] != i) out[i] |= Word{1} << owner[c];
    }
  }
  return out;
}

Word reach(const std::vector<Word>& adj, std::size_t start) {
  Word seen = Word{1} << start, frontier = seen;
  while (frontier) {
    Word next = 0;
    for (Word f = frontier; f; f &= f - 1) next |= adj[static_cast<std::size_t>(std::countr_zero(f))];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen;
}

std::vector<Word> reverse(const std::vector<Word>& adj) {
  std::vector<Word> rev(adj.size(), 0);
  for (std::size_t i = 0; i < adj.size(); ++i)
    for (Word w = adj[i]; w; w &= w - 1) rev[static_cast<std::size_t>(std::countr_zero(w))] |= Word{1} << i;
  return rev;
}

std::vector<std::size_t> bits_of(Word w) {
  std::vector<std::size_t> out;
  for (; w; w &= w - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(w)));
  return out;
}

void require_square(const BinMatrix& a, const char* what) {
  if (!a.is_square()) throw std::invalid_argument(std::string(what) + " requires a square matrix");
}

}  // namespace

std::optional<std::vector<std::size_t>> perfect_matching(const BinMatrix& a) {
  require_square(a, "perfect_matching");
  auto m = maximum_matching(a);
  if (std::find(m.begin(), m.end(), npos) != m.end()) return std::nullopt;
  return m;
}

std::optional<PartitionWitness> find_partition_witness(const BinMatrix& a) {
  require_square(a, "find_partition_witness");
  const std::size_t n = a.rows();
  if (n <= 1) return std::nullopt;
  const Word full = low_mask(n);
  auto match = maximum_matching(a);

  if (std::find(match.begin(), match.end(), npos) != match.end()) {
    // König: rows reachable from unmatched rows by alternating paths only see
    // columns that are themselves reachable.
    std::vector<std::size_t> owner(n, npos);
    for (std::size_t i = 0; i < n; ++i)
      if (match[i] != npos) owner[match[i]] = i;
    Word zrows = 0, zcols = 0;
    std::vector<std::size_t> stack;
    for (std::size_t i = 0; i < n; ++i)
      if (match[i] == npos) {
        zrows |= Word{1} << i;
        stack.push_back(i);
      }
    while (!stack.empty()) {
      std::size_t r = stack.back();
      stack.pop_back();
      for (Word w = a.row_word(r) & ~zcols; w; w &= w - 1) {
        std::size_t c = static_cast<std::size_t>(std::countr_zero(w));
        zcols |= Word{1} << c;
        std::size_t r2 = owner[c];
        if (r2 != npos && !((zrows >> r2) & 1U)) {
          zrows |= Word{1} << r2;
          stack.push_back(r2);
        }
      }
    }
    Word v = zrows, w = full & ~zcols;
    // |v| + |w| > n here; drop rows, then columns, keeping both nonempty
    while (std::popcount(v) + std::popcount(w) > static_cast<int>(n) && std::popcount(v) > 1) v &= v - 1;
    while (std::popcount(v) + std::popcount(w) > static_cast<int>(n)) w &= w - 1;
    return PartitionWitness{BinVector(n, v), BinVector(n, w)};
  }

  auto adj = row_digraph(a, match);
  Word closed = reach(adj, 0);
  if (closed == full) {
    Word to_zero = reach(reverse(adj), 0);
    if (to_zero == full) return std::nullopt;
    closed = full & ~to_zero;  // nothing here reaches row 0, so it is closed
  }
  Word w = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (!((closed >> i) & 1U)) w |= Word{1} << match[i];
  return PartitionWitness{BinVector(n, closed), BinVector(n, w)};
}

bool is_fully_indecomposable(const BinMatrix& a) { return !find_partition_witness(a).has_value(); }

std::vector<std::size_t> BlockDecomposition::block_sizes() const {
  std::vector<std::size_t> s;
  for (const auto& b : blocks) s.push_back(b.size());
  return s;
}

BlockDecomposition block_triangular_form(const BinMatrix& p) {
  require_square(p, "block_triangular_form");
  if (!is_nonobtuse(classify_verdict(p))) throw NotNonobtuseError("matrix does not represent a nonobtuse simplex");
  const std::size_t n = p.rows();
  auto match = perfect_matching(p);
  if (!match) throw SingularMatrixError("matrix is singular");
  auto adj = row_digraph(p, *match);
  auto rev = reverse(adj);

  // strongly connected components as row masks
  std::vector<Word> comp_of(n, 0);
  Word assigned = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if ((assigned >> i) & 1U) continue;
    Word c = reach(adj, i) & reach(rev, i);
    for (Word w = c; w; w &= w - 1) comp_of[static_cast<std::size_t>(std::countr_zero(w))] = c;
    assigned |= c;
  }

  // bottom-up placement of sink components
  std::vector<Word> order;
  Word remaining = low_mask(n);
  while (remaining) {
    Word pick = 0;
    for (std::size_t i = n; i-- > 0;) {
      if (!((remaining >> i) & 1U)) continue;
      Word c = comp_of[i];
      bool sink = true;
      for (Word w = c; w && sink; w &= w - 1)
        if (adj[static_cast<std::size_t>(std::countr_zero(w))] & remaining & ~c) sink = false;
      if (sink) {
        pick = c;
        break;
      }
    }
    order.push_back(pick);
    remaining &= ~pick;
  }
  std::reverse(order.begin(), order.end());

  BlockDecomposition d;
  std::size_t offset = 0;
  for (Word c : order) {
    Block b;
    b.rows = bits_of(c);
    for (std::size_t r : b.rows) b.cols.push_back((*match)[r]);
    std::sort(b.cols.begin(), b.cols.end());
    b.offset = offset;
    offset += b.size();
    d.row_perm.insert(d.row_perm.end(), b.rows.begin(), b.rows.end());
    d.col_perm.insert(d.col_perm.end(), b.cols.begin(), b.cols.end());
    d.blocks.push_back(std::move(b));
  }
  d.permuted = permute(p, d.row_perm, d.col_perm);

  // strips: all block columns agree above the block, and the common column is
  // zero or a column of the leading submatrix
  std::vector<std::size_t> block_of_col(n);
  for (std::size_t k = 0; k < d.blocks.size(); ++k)
    for (std::size_t c : d.blocks[k].cols) block_of_col[c] = k;
  for (std::size_t k = 0; k < d.blocks.size(); ++k) {
    Block& b = d.blocks[k];
    const Word above = low_mask(b.offset);
    const BinVector col0 = d.permuted.column(b.offset);
    for (std::size_t j = b.offset; j < b.offset + b.size(); ++j)
      if ((d.permuted.column(j).bits() & above) != (col0.bits() & above))
        throw std::logic_error("strip above a diagonal block is not rank one");
    b.strip = BinVector(b.offset, col0.bits() & above);
    if (b.strip.bits() != 0) {
      for (std::size_t j = 0; j < b.offset; ++j)
        if (d.permuted.column(j).bits() == b.strip.bits()) b.strip_column = d.col_perm[j];
      if (!b.strip_column) throw std::logic_error("strip column is not a column of the leading submatrix");
      d.attachments.push_back({k, block_of_col[*b.strip_column], *b.strip_column + 1});
    } else if (k > 0) {
      d.attachments.push_back({k, 0, 0});
    }
  }
  return d;
}

std::string describe(const Operation& op) {
  auto perm_text = [](const Permutation& p) {
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? " " : "") + std::to_string(p[i] + 1);
    return s;
  };
  switch (op.kind) {
    case Operation::Kind::PermuteRows: return "R(" + perm_text(op.perm) + ")";
    case Operation::Kind::PermuteColumns: return "C(" + perm_text(op.perm) + ")";
    case Operation::Kind::XorReflect: return "X(" + std::to_string(op.column + 1) + ")";
  }
  return "?";
}

BinMatrix apply(const BinMatrix& p, const Operation& op) {
  switch (op.kind) {
    case Operation::Kind::PermuteRows: return permute(p, op.perm, identity_permutation(p.cols()));
    case Operation::Kind::PermuteColumns: return permute(p, identity_permutation(p.rows()), op.perm);
    case Operation::Kind::XorReflect: return xor_reflect(p, op.column);
  }
  return p;
}

BinMatrix apply(const BinMatrix& p, const std::vector<Operation>& ops) {
  BinMatrix m = p;
  for (const auto& op : ops) m = apply(m, op);
  return m;
}

BlockDiagonalization block_diagonalize(const BinMatrix& p) {
  BlockDecomposition d = block_triangular_form(p);
  if (d.blocks.size() == 1) throw FullyIndecomposableError("matrix is fully indecomposable");
  const Block& last = d.blocks.back();
  const std::size_t n = p.rows(), o = last.offset;

  BlockDiagonalization out;
  out.trailing_offset = o;
  // already decoupled as given, at any cut with a fully indecomposable tail?
  for (std::size_t cut = n - 1; cut >= 1; --cut) {
    const Word tail = low_mask(n) & ~low_mask(cut);
    bool split = true;
    for (std::size_t i = 0; i < n && split; ++i) {
      Word w = p.row_word(i);
      split = i < cut ? (w & tail) == 0 : (w & ~tail) == 0;
    }
    if (!split) continue;
    std::vector<std::size_t> idx(n - cut);
    std::iota(idx.begin(), idx.end(), cut);
    if (is_fully_indecomposable(p.submatrix(idx, idx))) {
      out.matrix = p;
      out.trailing_offset = cut;
      return out;
    }
  }
  if (d.row_perm != identity_permutation(n)) out.operations.push_back({Operation::Kind::PermuteRows, d.row_perm, 0});
  if (d.col_perm != identity_permutation(n)) out.operations.push_back({Operation::Kind::PermuteColumns, d.col_perm, 0});
  if (last.strip_column) {
    auto pos = std::find(d.col_perm.begin(), d.col_perm.end(), *last.strip_column) - d.col_perm.begin();
    out.operations.push_back({Operation::Kind::XorReflect, {}, static_cast<std::size_t>(pos)});
  }
  out.matrix = binsimplex::apply(p, out.operations);
  return out;
}

ComponentComplex indecomposable_components(const BinMatrix& p) {
  BlockDecomposition d = block_triangular_form(p);
  ComponentComplex cc;
  cc.attachments = d.attachments;
  cc.vertex_multiplicity.assign(p.cols() + 1, 0);
  for (const auto& b : d.blocks) {
    cc.dimensions.push_back(b.size());
    for (std::size_t c : b.cols) ++cc.vertex_multiplicity[c + 1];
    ++cc.vertex_multiplicity[b.strip_column ? *b.strip_column + 1 : 0];
  }
  return cc;
}

BinMatrix antipodal_replace(const BinMatrix& p, std::size_t j) { return p.with_column(j, p.column(j).antipode()); }

std::size_t bipartite_components(const BinMatrix& a) {
  const std::size_t r = a.rows(), c = a.cols();
  std::vector<std::size_t> parent(r + c);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t count = r + c;
  for (std::size_t i = 0; i < r; ++i)
    for (Word w = a.row_word(i); w; w &= w - 1) {
      std::size_t x = find(i), y = find(r + static_cast<std::size_t>(std::countr_zero(w)));
      if (x != y) {
        parent[x] = y;
        --count;
      }
    }
  return count;
}

}  // namespace binsimplex
