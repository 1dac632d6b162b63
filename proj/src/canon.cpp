#include <binsimplex/canon.hpp>

#include <binsimplex/errors.hpp>
#include <binsimplex/exact.hpp>

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace binsimplex {

namespace {

Word shl(Word x, std::size_t s) { return s >= 64 ? 0 : x << s; }

// Partial row order together with the induced ordered partition of columns:
// columns in one cell agree on every chosen row, and cells are sorted by that
// common prefix.
struct State {
  Word used = 0;
  std::vector<Word> cells;
  std::vector<std::size_t> order;

  bool same(const State& o) const { return used == o.used && cells == o.cells; }
  bool operator<(const State& o) const { return used != o.used ? used < o.used : cells < o.cells; }
};

// Row written with column 0 as the most significant bit.
Word split_row(const std::vector<Word>& cells, Word r, std::vector<Word>* next) {
  Word key = 0;
  for (Word c : cells) {
    Word z = c & ~r, o = c & r;
    auto nz = static_cast<std::size_t>(std::popcount(z));
    auto no = static_cast<std::size_t>(std::popcount(o));
    key = shl(key, nz);
    key = shl(key, no) | low_mask(no);
    if (next) {
      if (z) next->push_back(z);
      if (o) next->push_back(o);
    }
  }
  return key;
}

enum class Cmp { Less, Equal, Greater };

// Best row order for one origin choice. `best` holds the keys of the current
// global optimum (empty if none); the search stops as soon as this choice
// falls behind it. Returns the final state when the choice is at least as good.
std::optional<State> search(const std::vector<Word>& rows, std::size_t k, const std::vector<Word>& best, Cmp& verdict,
                            std::vector<Word>& keys) {
  const std::size_t n = rows.size();
  std::vector<State> level(1);
  if (k > 0) level[0].cells.push_back(low_mask(k));
  bool tied = !best.empty();
  keys.clear();
  for (std::size_t t = 0; t < n; ++t) {
    Word min_key = ~Word{0};
    bool have = false;
    // first pass: the smallest reachable row
    for (const State& s : level) {
      Word seen_rows[64];
      std::size_t nseen = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if ((s.used >> i) & 1U) continue;
        if (std::find(seen_rows, seen_rows + nseen, rows[i]) != seen_rows + nseen) continue;
        seen_rows[nseen++] = rows[i];
        Word key = split_row(s.cells, rows[i], nullptr);
        if (!have || key < min_key) {
          min_key = key;
          have = true;
        }
      }
    }
    if (tied) {
      if (min_key > best[t]) {
        verdict = Cmp::Greater;
        return std::nullopt;
      }
      if (min_key < best[t]) tied = false;
    }
    keys.push_back(min_key);
    std::vector<State> next;
    for (const State& s : level) {
      Word seen_rows[64];
      std::size_t nseen = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if ((s.used >> i) & 1U) continue;
        if (std::find(seen_rows, seen_rows + nseen, rows[i]) != seen_rows + nseen) continue;
        seen_rows[nseen++] = rows[i];
        if (split_row(s.cells, rows[i], nullptr) != min_key) continue;
        State c;
        c.used = s.used | (Word{1} << i);
        split_row(s.cells, rows[i], &c.cells);
        c.order = s.order;
        c.order.push_back(i);
        next.push_back(std::move(c));
      }
    }
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end(), [](const State& a, const State& b) { return a.same(b); }),
               next.end());
    level = std::move(next);
  }
  verdict = tied ? Cmp::Equal : Cmp::Less;
  return level.front();
}

CanonicalForm canonicalize(const BinMatrix& p) {
  const std::size_t k = p.cols();
  std::vector<Word> best_keys;
  CanonicalForm out;
  bool found = false;
  for (std::size_t choice = 0; choice <= k; ++choice) {
    // choice 0 keeps the origin; choice c reflects column c-1 into it
    BinMatrix m = choice == 0 ? p : xor_reflect(p, choice - 1);
    Cmp verdict = Cmp::Greater;
    std::vector<Word> keys;
    auto st = search(m.row_words(), k, found ? best_keys : std::vector<Word>{}, verdict, keys);
    if (!st || (found && verdict != Cmp::Less)) continue;
    found = true;
    best_keys = keys;
    out.origin = choice == 0 ? std::nullopt : std::optional<std::size_t>(choice - 1);
    out.row_perm = st->order;
    out.col_perm.clear();
    for (Word c : st->cells)
      for (; c; c &= c - 1) out.col_perm.push_back(static_cast<std::size_t>(std::countr_zero(c)));
    out.matrix = permute(m, out.row_perm, out.col_perm);
  }
  return out;
}

}  // namespace

CanonicalForm canonical_form_rect(const BinMatrix& p) {
  if (p.rows() == 0) throw std::invalid_argument("canonical form of an empty matrix");
  return canonicalize(p);
}

CanonicalForm canonical_form(const BinMatrix& p) {
  if (!p.is_square()) throw std::invalid_argument("canonical_form requires a square matrix");
  if (detail::small_rank(p) != p.cols()) throw SingularMatrixError("matrix is singular");
  return canonicalize(p);
}

bool equivalent(const BinMatrix& p, const BinMatrix& r) {
  if (p.rows() != r.rows() || p.cols() != r.cols()) throw std::invalid_argument("equivalent: dimension mismatch");
  return canonical_form(p).matrix == canonical_form(r).matrix;
}

}  // namespace binsimplex
