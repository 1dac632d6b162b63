#include <binsimplex/enumerate.hpp>

#include <binsimplex/canon.hpp>
#include <binsimplex/errors.hpp>
#include <binsimplex/exact.hpp>
#include <binsimplex/neighbors.hpp>
#include <binsimplex/ortho.hpp>
#include <binsimplex/structure.hpp>

#include <algorithm>
#include <bit>
#include <functional>
#include <sstream>
#include <thread>

namespace binsimplex {

namespace {

std::size_t worker_count(std::size_t threads, std::size_t jobs) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  return std::max<std::size_t>(1, std::min(threads, jobs));
}

// Runs body(i, out) for i in [0, jobs) on contiguous chunks and concatenates
// the per-chunk outputs in index order.
template <class T>
std::vector<T> parallel_collect(std::size_t jobs, std::size_t threads,
                                const std::function<void(std::size_t, std::vector<T>&)>& body) {
  const std::size_t workers = worker_count(threads, jobs);
  std::vector<std::vector<T>> parts(workers);
  auto run = [&](std::size_t w) {
    const std::size_t lo = jobs * w / workers, hi = jobs * (w + 1) / workers;
    for (std::size_t i = lo; i < hi; ++i) body(i, parts[w]);
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(run, w);
    for (auto& t : pool) t.join();
  }
  std::vector<T> out;
  for (auto& p : parts) out.insert(out.end(), std::make_move_iterator(p.begin()), std::make_move_iterator(p.end()));
  return out;
}

void sort_unique(std::vector<BinMatrix>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

bool all_representations_fi(const BinMatrix& p) {
  for (const auto& r : origin_representations(p))
    if (!is_fully_indecomposable(r)) return false;
  return true;
}

}  // namespace

EnumerationFilter EnumerationFilter::parse(std::string_view text) {
  EnumerationFilter f;
  std::string item;
  std::istringstream in{std::string(text)};
  while (std::getline(in, item, ',')) {
    if (item.empty() || item == "all") continue;
    if (item == "acute") f.acute = true;
    else if (item == "nonobtuse") f.nonobtuse = true;
    else if (item == "fi") f.fully_indecomposable = true;
    else if (item == "orthogonal") f.orthogonal = true;
    else throw std::invalid_argument("unknown filter: " + item);
  }
  return f;
}

std::string EnumerationFilter::to_string() const {
  std::string s;
  auto add = [&](bool on, const char* name) {
    if (!on) return;
    if (!s.empty()) s += ',';
    s += name;
  };
  add(acute, "acute");
  add(nonobtuse, "nonobtuse");
  add(fully_indecomposable, "fi");
  add(orthogonal, "orthogonal");
  return s.empty() ? "all" : s;
}

bool EnumerationFilter::accepts(const BinMatrix& p) const {
  Verdict v = classify_verdict(p);
  if (v == Verdict::Degenerate) return false;
  if (acute && v != Verdict::Acute) return false;
  if (nonobtuse && !is_nonobtuse(v)) return false;
  if (orthogonal && !is_orthogonal_simplex(p)) return false;
  if (fully_indecomposable && !all_representations_fi(p)) return false;
  return true;
}

std::vector<BinMatrix> origin_representations(const BinMatrix& p) {
  std::vector<BinMatrix> out{p};
  for (std::size_t c = 0; c < p.cols(); ++c) out.push_back(xor_reflect(p, c));
  return out;
}

EnumerationResult enumerate_classes(std::size_t n, const EnumerationFilter& filter, std::size_t threads) {
  if (n > kMaxEnumerationDim) throw DimensionTooLargeError("enumeration is limited to n <= 6");
  if (n == 0) throw std::invalid_argument("enumeration needs n >= 1");

  // faces of nonobtuse (acute) simplices are nonobtuse (acute), so partial
  // vertex sets can be pruned by the same test
  enum class Prune { None, Nonobtuse, Acute } prune = Prune::None;
  if (filter.nonobtuse || filter.orthogonal) prune = Prune::Nonobtuse;
  if (filter.acute) prune = Prune::Acute;

  std::vector<BinMatrix> level{BinMatrix(n, 0)};
  for (std::size_t t = 0; t < n; ++t) {
    level = parallel_collect<BinMatrix>(level.size(), threads, [&](std::size_t i, std::vector<BinMatrix>& out) {
      const BinMatrix& m = level[i];
      std::vector<BinMatrix> local;
      for (Word bits = 1; bits <= low_mask(n); ++bits) {
        BinVector v(n, bits);
        bool present = false;
        for (std::size_t c = 0; c < m.cols() && !present; ++c) present = m.column(c) == v;
        if (present) continue;
        BinMatrix next = m.with_appended_column(v);
        if (detail::small_rank(next) != t + 1) continue;
        if (prune != Prune::None) {
          Verdict verdict = classify_verdict(next);
          if (prune == Prune::Acute ? verdict != Verdict::Acute : !is_nonobtuse(verdict)) continue;
        }
        local.push_back(canonical_form_rect(next).matrix);
      }
      sort_unique(local);
      out.insert(out.end(), local.begin(), local.end());
    });
    sort_unique(level);
  }

  EnumerationResult r;
  r.n = n;
  r.filter = filter;
  auto kept = parallel_collect<BinMatrix>(level.size(), threads, [&](std::size_t i, std::vector<BinMatrix>& out) {
    if (filter.accepts(level[i])) out.push_back(level[i]);
  });
  r.classes = std::move(kept);
  for (const auto& c : r.classes) ++r.verdict_counts[static_cast<std::size_t>(classify_verdict(c))];
  return r;
}

// ------------------------------------------------------------------ sweeps

namespace {

using Check = std::function<std::string(const BinMatrix&)>;  // empty string = pass

struct Property {
  std::string name;
  EnumerationFilter filter;
  Check check;
};

std::string check_sign_structure(const BinMatrix& class_rep) {
  for (const auto& p : origin_representations(class_rep)) {
    ExactMatrix q = transposed_inverse(p);
    if (!sign_pattern_check(p, q, SignMode::Strict).passed()) return "sign pattern of the transposed inverse differs from P";
    auto split = stochastic_split(q);
    if (!is_doubly_stochastic(split.positive)) return "positive part is not doubly stochastic";
    if (!is_row_substochastic(split.negative)) return "negative part is not row substochastic";
    if (support(split.positive) != p.support()) return "support of the positive part differs from P";
  }
  return {};
}

std::string check_strips(const BinMatrix& class_rep) {
  for (const auto& p : origin_representations(class_rep)) {
    BlockDecomposition d;
    try {
      d = block_triangular_form(p);
    } catch (const std::logic_error& e) {
      return e.what();
    }
    for (const auto& b : d.blocks) {
      std::vector<std::size_t> idx(b.size());
      for (std::size_t i = 0; i < b.size(); ++i) idx[i] = b.offset + i;
      if (!is_fully_indecomposable(d.permuted.submatrix(idx, idx))) return "diagonal block is not fully indecomposable";
      if (b.size() == 2) return "diagonal block of size 2";
    }
  }
  return {};
}

std::string check_gram_bound(const BinMatrix& class_rep) {
  const std::size_t n = class_rep.cols();
  if (n < 2) return {};
  for (const auto& p : origin_representations(class_rep)) {
    IntMatrix g = gram(p);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (g(i, j) < (i == j ? 2 : 1)) return "Gram matrix below I + all-ones";
        if (i != j && g(i, i) <= g(i, j)) return "Gram diagonal entry not larger than its row";
      }
    for (std::size_t j = 0; j < n; ++j) {
      IntMatrix h = gram(antipodal_replace(p, j));
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          if (h(a, b) <= 0) return "Gram matrix after antipodal replacement has a zero entry";
    }
  }
  return {};
}

std::string check_fi_acute(const BinMatrix& p) {
  return classify_verdict(p) == Verdict::Acute ? std::string() : "fully indecomposable nonobtuse simplex is not acute";
}

std::string check_facets(const BinMatrix& p) {
  const std::size_t n = p.cols();
  const bool acute = classify_verdict(p) == Verdict::Acute;
  // every vertex subset with at least two vertices, by bitmask over n+1 vertices
  for (Word mask = 1; mask <= low_mask(n + 1); ++mask) {
    if (std::popcount(mask) < 2) continue;
    std::vector<std::size_t> ids;
    for (std::size_t v = 0; v <= n; ++v)
      if ((mask >> v) & 1U) ids.push_back(v);
    Verdict v = classify_verdict(subsimplex(p, ids));
    if (!is_nonobtuse(v)) return "facet is not nonobtuse";
    if (acute && v != Verdict::Acute) return "facet of an acute simplex is not acute";
  }
  return {};
}

std::string check_one_neighbor_acute(const BinMatrix& p) {
  return verify_one_neighbor_acute(p) ? std::string() : "facet with more than one neighbor";
}

std::string check_one_neighbor_components(const BinMatrix& p) {
  auto d = block_triangular_form(p);
  for (const auto& b : d.blocks) {
    std::vector<std::size_t> idx(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) idx[i] = b.offset + i;
    if (classify_verdict(d.permuted.submatrix(idx, idx)) != Verdict::Acute) return {};  // outside the statement
  }
  return verify_one_neighbor_all_acute_components(p) ? std::string() : "interior facet with more than one neighbor";
}

const std::vector<Property>& registry() {
  static const std::vector<Property> props = [] {
    EnumerationFilter nonobtuse;
    nonobtuse.nonobtuse = true;
    EnumerationFilter acute;
    acute.acute = true;
    EnumerationFilter fi = nonobtuse;
    fi.fully_indecomposable = true;
    return std::vector<Property>{
        {"acute-sign-pattern", acute, check_sign_structure},
        {"strip-structure", nonobtuse, check_strips},
        {"gram-bound", fi, check_gram_bound},
        {"fi-implies-acute", fi, check_fi_acute},
        {"facet-heredity", nonobtuse, check_facets},
        {"one-neighbor-acute", acute, check_one_neighbor_acute},
        {"one-neighbor-all-acute-components", nonobtuse, check_one_neighbor_components},
    };
  }();
  return props;
}

}  // namespace

const std::vector<std::string>& sweep_properties() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& p : registry()) v.push_back(p.name);
    return v;
  }();
  return names;
}

SweepReport sweep_verify(std::size_t n, std::string_view property, std::size_t threads) {
  const auto& props = registry();
  auto it = std::find_if(props.begin(), props.end(), [&](const Property& p) { return p.name == property; });
  if (it == props.end()) throw UnknownPropertyError("unknown property: " + std::string(property));

  EnumerationResult classes = enumerate_classes(n, it->filter, threads);
  struct Failure {
    std::size_t index;
    std::string why;
  };
  auto failures = parallel_collect<Failure>(classes.classes.size(), threads, [&](std::size_t i, std::vector<Failure>& out) {
    std::string why = it->check(classes.classes[i]);
    if (!why.empty()) out.push_back({i, std::move(why)});
  });

  SweepReport r;
  r.property = it->name;
  r.n = n;
  r.classes_checked = classes.classes.size();
  r.passed = failures.empty();
  if (!failures.empty()) {
    r.counterexample = classes.classes[failures.front().index];
    r.detail = failures.front().why;
  }
  return r;
}

}  // namespace binsimplex
