#include <binsimplex/cli.hpp>

#include <binsimplex/canon.hpp>
#include <binsimplex/enumerate.hpp>
#include <binsimplex/errors.hpp>
#include <binsimplex/exact.hpp>
#include <binsimplex/geometry.hpp>
#include <binsimplex/golden.hpp>
#include <binsimplex/neighbors.hpp>
#include <binsimplex/ortho.hpp>
#include <binsimplex/structure.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>

namespace binsimplex::cli {

namespace {

using json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fnv1a(const std::string& text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

BinMatrix load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open matrix file: " + path);
  return parse_matrix(in);
}

json matrix_json(const BinMatrix& m) { return m.to_strings(); }

json rational_matrix_json(const ExactMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(to_string(m(i, j)));
    rows.push_back(r);
  }
  return rows;
}

json rational_vector_json(const ExactVector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

json one_based(const std::vector<std::size_t>& v) {
  json a = json::array();
  for (auto x : v) a.push_back(x + 1);
  return a;
}

json input_json(const std::string& path, const BinMatrix& m) {
  return {{"file", path}, {"rows", matrix_json(m)}, {"digest", "fnv1a:" + fnv1a(format_matrix(m))}};
}

json witness_json(const std::optional<Witness>& w) {
  if (!w) return nullptr;
  if (w->kind == Witness::Kind::RowSum) return {{"kind", "row-sum"}, {"row", w->i + 1}};
  return {{"kind", "off-diagonal"}, {"row", w->i + 1}, {"column", w->j + 1}};
}

std::size_t thread_setting(std::size_t flag) {
  if (flag != 0) return flag;
  if (const char* env = std::getenv("SIMPLEX_THREADS")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end && *end == '\0') return v;
  }
  return 0;
}

json classify_report(const BinMatrix& p) {
  Classification c = classify(p);
  json r;
  r["verdict"] = std::string(to_string(c.verdict));
  r["acute"] = c.verdict == Verdict::Acute;
  r["nonobtuse"] = is_nonobtuse(c.verdict);
  r["witness"] = witness_json(c.witness);
  r["fullyIndecomposable"] = p.is_square() ? json(is_fully_indecomposable(p)) : json(nullptr);
  if (!p.is_square()) return r;
  r["determinant"] = determinant(p).get_str();
  if (c.verdict == Verdict::Degenerate) return r;
  ExactMatrix q = transposed_inverse(p);
  r["transposedInverse"] = rational_matrix_json(q);
  r["gramInverse"] = rational_matrix_json(gram_inverse(p));
  r["normalOppositeOrigin"] = rational_vector_json(q.row_sums());
  auto split = stochastic_split(q);
  r["positivePartDoublyStochastic"] = is_doubly_stochastic(split.positive);
  r["negativePartRowSubstochastic"] = is_row_substochastic(split.negative);
  auto sp = sign_pattern_check(p, q, c.verdict == Verdict::Acute ? SignMode::Strict : SignMode::Weak);
  r["signPatternHolds"] = sp.passed();
  r["zeroEntries"] = sp.zero_entries.size();
  r["rightDihedralAngles"] = right_dihedral_count(p);
  r["orthogonal"] = is_orthogonal_simplex(p);
  return r;
}

json decompose_report(const BinMatrix& p) {
  json r;
  r["fullyIndecomposable"] = is_fully_indecomposable(p);
  if (auto w = find_partition_witness(p)) r["partitionWitness"] = {{"rows", w->v.to_string()}, {"columns", w->w.to_string()}};
  BlockDecomposition d = block_triangular_form(p);
  r["rowPermutation"] = one_based(d.row_perm);
  r["columnPermutation"] = one_based(d.col_perm);
  r["blockForm"] = matrix_json(d.permuted);
  r["blockSizes"] = d.block_sizes();
  json blocks = json::array();
  for (const auto& b : d.blocks) {
    json jb{{"rows", one_based(b.rows)}, {"columns", one_based(b.cols)}, {"size", b.size()}};
    jb["stripColumn"] = b.strip_column ? json(*b.strip_column + 1) : json(nullptr);
    blocks.push_back(jb);
  }
  r["blocks"] = blocks;
  auto cc = indecomposable_components(p);
  json att = json::array();
  for (const auto& a : cc.attachments) att.push_back({{"block", a.block + 1}, {"attachedTo", a.target + 1}, {"vertex", a.vertex}});
  r["attachments"] = att;
  r["vertexMultiplicity"] = cc.vertex_multiplicity;
  if (d.blocks.size() > 1) {
    auto bd = block_diagonalize(p);
    json ops = json::array();
    for (const auto& op : bd.operations) ops.push_back(describe(op));
    r["blockDiagonal"] = {{"operations", ops}, {"matrix", matrix_json(bd.matrix)}, {"trailingBlockSize", p.rows() - bd.trailing_offset}};
  }
  return r;
}

json neighbors_report(const BinMatrix& p, std::optional<std::size_t> facet, Target target, bool fast) {
  json facets = json::array();
  std::size_t lo = facet.value_or(0), hi = facet.value_or(p.cols());
  for (std::size_t f = lo; f <= hi; ++f) {
    auto rep = neighbor_search(p, f, {target, fast});
    json jf;
    jf["facet"] = f;
    jf["opposite"] = rep.opposite.to_string();
    jf["interior"] = rep.interior;
    json cands = json::array();
    for (const auto& c : rep.candidates) cands.push_back(c.to_string());
    jf["candidates"] = cands;
    jf["otherCandidates"] = rep.other_candidates();
    json feet = json::array();
    for (const auto& v : rep.altitude_feet) feet.push_back(v.to_string());
    if (!fast) jf["altitudeFeet"] = feet;
    jf["stoppedEarly"] = rep.stopped_early;
    facets.push_back(jf);
  }
  return {{"target", target == Target::Acute ? "acute" : "nonobtuse"}, {"facets", facets}};
}

json ortho_report(std::size_t n) {
  auto all = enumerate_upper_triangular_ortho(n);
  std::map<std::string, std::size_t> trees;
  bool all_orthogonal = true;
  std::size_t right_angles = n * (n - 1) / 2;
  bool right_ok = true;
  for (const auto& p : all) {
    all_orthogonal = all_orthogonal && is_orthogonal_simplex(p);
    right_ok = right_ok && right_dihedral_count(p) == right_angles;
    ++trees[spanning_tree(p).encoding];
  }
  json jt = json::array();
  for (const auto& [code, count] : trees) jt.push_back({{"encoding", code}, {"representations", count}});
  return {{"count", all.size()},
          {"allOrthogonal", all_orthogonal},
          {"rightDihedralAngles", right_angles},
          {"rightDihedralCountHolds", right_ok},
          {"treeClasses", trees.size()},
          {"trees", jt}};
}

void print_text(const json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) print_text(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
  } else if (j.is_array() && std::all_of(j.begin(), j.end(), [](const json& x) { return x.is_primitive(); })) {
    out << prefix << ":";
    for (const auto& x : j) out << ' ' << (x.is_string() ? x.get<std::string>() : x.dump());
    out << '\n';
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) print_text(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}

}  // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact analysis of 0/1-simplices"};
  app.require_subcommand(1);
  std::string format = "json";
  std::size_t threads_flag = 0;
  app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--threads", threads_flag, "worker threads (0 = SIMPLEX_THREADS or all cores)");

  std::string file;
  bool transpose = false;
  auto* classify_cmd = app.add_subcommand("classify", "classify the simplex represented by a matrix file");
  classify_cmd->add_option("file", file, "matrix file")->required();
  classify_cmd->add_flag("--transpose", transpose, "analyse the transposed matrix");

  auto* decompose_cmd = app.add_subcommand("decompose", "block triangular form and component complex");
  decompose_cmd->add_option("file", file, "matrix file")->required();
  decompose_cmd->add_flag("--transpose", transpose, "analyse the transposed matrix");

  std::optional<std::size_t> facet;
  std::string target_name = "nonobtuse";
  bool fast = false;
  auto* neighbors_cmd = app.add_subcommand("neighbors", "cube vertices completing a facet");
  neighbors_cmd->add_option("file", file, "matrix file")->required();
  neighbors_cmd->add_option("--facet", facet, "0 = facet opposite the origin, k = facet opposite column k (default: all)");
  neighbors_cmd->add_option("--target", target_name, "acute or nonobtuse")->check(CLI::IsMember({"acute", "nonobtuse"}));
  neighbors_cmd->add_flag("--fast", fast, "stop after two candidates besides the existing vertex");
  neighbors_cmd->add_flag("--transpose", transpose, "analyse the transposed matrix");

  std::size_t n = 0;
  std::string filter_text = "all";
  bool list = true;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "all classes of 0/1-simplices in I^n");
  enumerate_cmd->add_option("n", n, "dimension")->required();
  enumerate_cmd->add_option("--filter", filter_text, "comma separated: acute,nonobtuse,fi,orthogonal");
  enumerate_cmd->add_flag("!--no-list", list, "omit the class matrices");

  auto* ortho_cmd = app.add_subcommand("ortho", "upper triangular orthogonal simplices and their trees");
  ortho_cmd->add_option("n", n, "dimension")->required();

  auto* canon_cmd = app.add_subcommand("canon", "canonical representative of a matrix");
  canon_cmd->add_option("file", file, "matrix file")->required();
  canon_cmd->add_flag("--transpose", transpose, "analyse the transposed matrix");

  std::string property;
  auto* sweep_cmd = app.add_subcommand("sweep", "evaluate a registered statement over all classes in I^n");
  sweep_cmd->add_option("n", n, "dimension")->required();
  sweep_cmd->add_option("property", property, "property name")->required();

  auto* verify_cmd = app.add_subcommand("verify-paper", "run every reference check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  const std::size_t threads = thread_setting(threads_flag);
  json report;
  int status = 0;
  try {
    auto matrix_input = [&]() {
      BinMatrix m = load(file);
      return transpose ? m.transpose() : m;
    };
    if (*classify_cmd) {
      BinMatrix p = matrix_input();
      report = {{"command", "classify"}, {"input", input_json(file, p)}, {"results", classify_report(p)}};
    } else if (*decompose_cmd) {
      BinMatrix p = matrix_input();
      report = {{"command", "decompose"}, {"input", input_json(file, p)}, {"results", decompose_report(p)}};
    } else if (*neighbors_cmd) {
      BinMatrix p = matrix_input();
      if (facet && *facet > p.cols()) throw UsageError("--facet must be between 0 and " + std::to_string(p.cols()));
      Target target = target_name == "acute" ? Target::Acute : Target::Nonobtuse;
      report = {{"command", "neighbors"}, {"input", input_json(file, p)}, {"results", neighbors_report(p, facet, target, fast)}};
    } else if (*enumerate_cmd) {
      EnumerationFilter f;
      try {
        f = EnumerationFilter::parse(filter_text);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      auto res = enumerate_classes(n, f, threads);
      json counts;
      for (Verdict v : {Verdict::Obtuse, Verdict::Nonobtuse, Verdict::Acute}) counts[std::string(to_string(v))] = res.count(v);
      json results{{"classCount", res.classes.size()}, {"verdictCounts", counts}};
      if (list) {
        json cls = json::array();
        for (const auto& c : res.classes) cls.push_back(matrix_json(c));
        results["classes"] = cls;
      }
      report = {{"command", "enumerate"}, {"input", {{"n", n}, {"filter", f.to_string()}}}, {"results", results}};
    } else if (*ortho_cmd) {
      report = {{"command", "ortho"}, {"input", {{"n", n}}}, {"results", ortho_report(n)}};
    } else if (*canon_cmd) {
      BinMatrix p = matrix_input();
      auto c = canonical_form(p);
      json results{{"matrix", matrix_json(c.matrix)},
                   {"origin", c.origin ? json(*c.origin + 1) : json(0)},
                   {"rowPermutation", one_based(c.row_perm)},
                   {"columnPermutation", one_based(c.col_perm)}};
      report = {{"command", "canon"}, {"input", input_json(file, p)}, {"results", results}};
    } else if (*sweep_cmd) {
      auto s = sweep_verify(n, property, threads);
      json results{{"passed", s.passed}, {"classesChecked", s.classes_checked}};
      if (s.counterexample) results["counterexample"] = {{"rows", matrix_json(*s.counterexample)}, {"reason", s.detail}};
      report = {{"command", "sweep"}, {"input", {{"n", n}, {"property", property}}}, {"results", results}};
      status = s.passed ? 0 : 1;
    } else if (*verify_cmd) {
      auto checks = golden::verify_all(threads);
      json jc = json::array();
      bool all = true;
      for (const auto& c : checks) {
        all = all && c.passed;
        json one{{"name", c.name}, {"passed", c.passed}, {"seconds", c.seconds}};
        if (!c.passed) one["detail"] = c.detail;
        jc.push_back(one);
      }
      report = {{"command", "verify-paper"}, {"input", json::object()}, {"results", {{"passed", all}, {"checks", jc}}}};
      status = all ? 0 : 1;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const MalformedMatrixError& e) {
    err << "error: malformed matrix file: " << e.what() << '\n';
    return 2;
  } catch (const DimensionTooLargeError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const UnknownPropertyError& e) {
    err << "error: " << e.what() << "; known properties:";
    for (const auto& p : sweep_properties()) err << ' ' << p;
    err << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  report["exitStatus"] = status;
  if (format == "text") {
    print_text(report, "", out);
  } else {
    out << report.dump(2) << '\n';
  }
  return status;
}

}  // namespace binsimplex::cli
