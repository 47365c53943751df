#include "arbor/cli.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "arbor/battery.hpp"
#include "arbor/error.hpp"
#include "arbor/graph_io.hpp"
#include "arbor/incidence.hpp"
#include "arbor/matrix_tree.hpp"
#include "arbor/spectral.hpp"
#include "json.hpp"

namespace arbor::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string command;
  std::string graph_path;
  std::string root;
  std::string mode;
  std::uint64_t cap = kDefaultSubsetCap;
  std::string format = "table";
  bool approx = false;
  bool stationary = false;
};

/// Result payload, built once as JSON and once as aligned text.
struct Report {
  Json result = Json::object();
  std::ostringstream table;
};

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
  buf << in.rdbuf();
  return buf.str();
}

std::string decimal(double x) {
  std::ostringstream os;
  os << std::setprecision(10) << x;
  return os.str();
}

Json matrix_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

void add_matrix(Report& r, const std::string& name, const Matrix& m) {
  r.result[name] = matrix_json(m);
  r.table << name << " (" << m.rows() << "x" << m.cols() << ") =\n" << to_string(m);
}

void add_approx_matrix(Report& r, const std::string& name,
                       const std::vector<std::vector<double>>& m) {
  Json rows = Json::array();
  r.table << name << " (approximate) =\n";
  for (const auto& row : m) {
    Json jr = Json::array();
    r.table << "[";
    for (std::size_t j = 0; j < row.size(); ++j) {
      jr.push_back(row[j]);
      r.table << (j ? " " : "") << std::setw(12) << decimal(row[j]);
    }
    r.table << "]\n";
    rows.push_back(std::move(jr));
  }
  r.result[name] = std::move(rows);
}

Json subset_json(const EdgeSubset& s) {
  Json ids = Json::array();
  for (std::size_t id : s) ids.push_back("e" + std::to_string(id + 1));
  return ids;
}

VertexId root_of(const Digraph& g, const Options& o) { return g.vertex(o.root); }
Mode mode_of(const Options& o) { return *parse_mode(o.mode); }

void info(const Digraph& g, Report& r) {
  Json vertices = Json::array();
  r.table << "vertices:\n";
  for (std::size_t i = 0; i < g.vertex_count(); ++i) {
    const VertexId v{i};
    const std::size_t in = degree(g, v, Side::In);
    const std::size_t out = degree(g, v, Side::Out);
    vertices.push_back({{"label", g.label(v)}, {"in_degree", in}, {"out_degree", out}});
    r.table << "  " << g.label(v) << "  in-degree " << in << "  out-degree " << out << "\n";
  }
  Json edges = Json::array();
  r.table << "edges:\n";
  for (const Edge& e : g.edges()) {
    const std::string name = "e" + std::to_string(e.id + 1);
    edges.push_back({{"id", name},
                     {"from", g.label(e.from)},
                     {"to", g.label(e.to)},
                     {"weight", to_string(e.weight)}});
    r.table << "  " << name << ": " << g.label(e.from) << " -> " << g.label(e.to)
            << "  weight " << to_string(e.weight) << "\n";
  }
  const bool strong = is_strongly_connected(g);
  r.result["vertices"] = std::move(vertices);
  r.result["edges"] = std::move(edges);
  r.result["strongly_connected"] = strong;
  r.table << "strongly connected: " << (strong ? "yes" : "no") << "\n";
}

void laplacian(const Digraph& g, const Options& o, Report& r) {
  const LaplacianPair lp = laplacians(g);
  add_matrix(r, "D_in", lp.d_in);
  add_matrix(r, "D_out", lp.d_out);
  add_matrix(r, "A_v", lp.a_v);
  add_matrix(r, "L1", lp.l1);
  add_matrix(r, "L2", lp.l2);
  add_matrix(r, "N_in", incidence_in(g));
  add_matrix(r, "M_out", incidence_out(g));
  if (!o.root.empty()) {
    const VertexId root = root_of(g, o);
    r.result["root"] = g.label(root);
    add_matrix(r, "L1^r", reduced_laplacian(lp, Which::L1, root));
    add_matrix(r, "L2^r", reduced_laplacian(lp, Which::L2, root));
  }
  if (o.approx) {
    add_approx_matrix(r, "N_in,w", approx_weighted_incidence_in(g));
    add_approx_matrix(r, "M_out,w", approx_weighted_incidence_out(g));
  }
}

void count(const Digraph& g, const Options& o, Report& r) {
  const TreeSum sum = count_trees(g, root_of(g, o), mode_of(o));
  r.result["root"] = o.root;
  r.result["mode"] = o.mode;
  r.result["value"] = to_string(sum.value);
  r.table << o.mode << " spanning trees rooted at " << o.root << ": " << to_string(sum.value)
          << "\n";
  if (o.approx) {
    r.result["approx"] = sum.value.get_d();
    r.table << "approximately " << decimal(sum.value.get_d()) << "\n";
  }
}

void enumerate(const Digraph& g, const Options& o, Report& r) {
  const TreeReport report = enumerate_trees(g, root_of(g, o), mode_of(o), o.cap);
  Json trees = Json::array();
  r.table << o.mode << " spanning trees rooted at " << o.root << ":\n";
  for (const EdgeSubset& t : report.trees) {
    const Rational w = subset_weight(g, t);
    trees.push_back({{"edges", subset_json(t)}, {"weight", to_string(w)}});
    r.table << "  " << to_string(t) << "  weight " << to_string(w) << "\n";
  }
  r.result["root"] = o.root;
  r.result["mode"] = o.mode;
  r.result["trees"] = std::move(trees);
  r.result["tree_count"] = report.trees.size();
  r.result["total_weight"] = to_string(report.total_weight);
  r.result["subsets_examined"] = report.subsets_examined;
  r.table << "trees: " << report.trees.size() << "\n"
          << "total weight: " << to_string(report.total_weight) << "\n"
          << "subsets examined: " << report.subsets_examined << "\n";
}

void expand(const Digraph& g, const Options& o, Report& r) {
  const VertexId root = root_of(g, o);
  const Mode mode = mode_of(o);
  const BinetCauchyExpansion bc = binet_cauchy_expansion(g, root, mode, o.cap);
  const Rational determinant = count_trees(g, root, mode).value;

  Json terms = Json::array();
  std::vector<std::array<std::string, 5>> rows;
  rows.push_back({"subset", "classification", "det(B[S])", "det(C[S])", "term"});
  for (const BinetCauchyTerm& t : bc.terms) {
    Json jt = {{"subset", subset_json(t.subset)},
               {"classification", describe(g, t.classification)},
               {"term", to_string(t.term_value)}};
    if (t.det_b) jt["det_b"] = to_string(*t.det_b);
    if (t.det_c) jt["det_c"] = to_string(*t.det_c);
    terms.push_back(std::move(jt));
    rows.push_back({to_string(t.subset), describe(g, t.classification),
                    t.det_b ? to_string(*t.det_b) : "-", t.det_c ? to_string(*t.det_c) : "-",
                    to_string(t.term_value)});
  }
  std::array<std::size_t, 5> width{};
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  for (const auto& row : rows) {
    r.table << " ";
    for (std::size_t c = 0; c + 1 < row.size(); ++c) {
      r.table << " " << std::left << std::setw(static_cast<int>(width[c])) << row[c];
    }
    r.table << std::right << " " << row.back() << "\n";
  }
  const char* reduced = mode == Mode::Outgoing ? "det(L1^r)" : "det(L2^r)";
  r.result["root"] = o.root;
  r.result["mode"] = o.mode;
  r.result["terms"] = std::move(terms);
  r.result["sum"] = to_string(bc.sum);
  r.result["determinant"] = to_string(determinant);
  r.result["consistent"] = bc.sum == determinant;
  r.table << "sum of terms: " << to_string(bc.sum) << "\n"
          << reduced << ": " << to_string(determinant) << "\n";
}

void eigenvector(const Digraph& g, const Options& o, Report& r) {
  const Mode mode = mode_of(o);
  const char* vec = mode == Mode::Outgoing ? "x (kernel of L1)" : "y (kernel of L2)";
  std::vector<Rational> entries;
  r.result["mode"] = o.mode;
  if (o.stationary) {
    entries = stationary(g, mode).entries;
    r.result["normalization"] = "sum-to-one";
    r.table << vec << ", normalized to sum 1:\n";
  } else {
    const TreeVector v = tree_vector(g, mode);
    entries = v.entries;
    r.result["all_zero"] = v.all_zero;
    r.table << vec << (v.all_zero ? ", all zero:\n" : ":\n");
  }
  Json je = Json::array();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const std::string& label = g.label(VertexId{i});
    Json item = {{"vertex", label}, {"value", to_string(entries[i])}};
    r.table << "  " << label << "  " << to_string(entries[i]);
    if (o.approx) {
      item["approx"] = entries[i].get_d();
      r.table << "  (~" << decimal(entries[i].get_d()) << ")";
    }
    r.table << "\n";
    je.push_back(std::move(item));
  }
  r.result["entries"] = std::move(je);
}

bool verify(const Digraph& g, const Options& o, Report& r) {
  const std::vector<CheckResult> checks = verify_all(g, o.cap);
  Json jc = Json::array();
  bool all = true;
  for (const CheckResult& c : checks) {
    all = all && c.passed;
    jc.push_back({{"check", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    r.table << (c.passed ? "PASS  " : "FAIL  ") << c.name;
    if (!c.detail.empty()) r.table << "  [" << c.detail << "]";
    r.table << "\n";
  }
  r.result["checks"] = std::move(jc);
  r.result["all_passed"] = all;
  r.table << (all ? "all checks passed" : "verification FAILED") << "\n";
  return all;
}

std::string echo(const Options& o) {
  std::string s = o.command + " " + o.graph_path;
  if (!o.root.empty()) s += " --root " + o.root;
  if (!o.mode.empty()) s += " --mode " + o.mode;
  if (o.command == "enumerate" || o.command == "expand" || o.command == "verify") {
    s += " --cap " + std::to_string(o.cap);
  }
  if (o.stationary) s += " --stationary";
  if (o.approx) s += " --approx";
  return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact rooted spanning-tree counting for weighted digraphs", "arbor"};
  app.require_subcommand(1);

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"info", "vertex degrees, edges and strong connectivity"},
      {"laplacian", "degree, adjacency, incidence and Laplacian matrices"},
      {"count", "tree count (weight) as a reduced Laplacian determinant"},
      {"enumerate", "brute-force listing of rooted spanning trees"},
      {"expand", "Binet-Cauchy term table of the reduced Laplacian"},
      {"eigenvector", "kernel vector of L1 or L2 from per-root tree counts"},
      {"verify", "run every identity check on the graph"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("graph", o.graph_path, "graph file (JSON), '-' for stdin")->required();
    sub->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"json", "table"}));
    sub->add_flag("--approx", o.approx, "also print decimal approximations");
    const bool needs_root = name == "count" || name == "enumerate" || name == "expand";
    if (needs_root || name == "laplacian") {
      auto* opt = sub->add_option("--root", o.root, "root vertex label");
      if (needs_root) opt->required();
    }
    if (needs_root || name == "eigenvector") {
      sub->add_option("--mode", o.mode, "tree orientation")
          ->required()
          ->check(CLI::IsMember({"outgoing", "incoming"}));
    }
    if (name == "enumerate" || name == "expand" || name == "verify") {
      sub->add_option("--cap", o.cap, "maximum number of edge subsets to examine")
          ->capture_default_str();
    }
    if (name == "eigenvector") {
      sub->add_flag("--stationary", o.stationary, "normalize entries to sum 1");
    }
    sub->callback([&o, name = name] { o.command = name; });
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }

  int status = kOk;
  Report report;
  Json doc;
  try {
    const Digraph g = parse_graph(read_input(o.graph_path));
    if (o.command == "info") {
      info(g, report);
    } else if (o.command == "laplacian") {
      laplacian(g, o, report);
    } else if (o.command == "count") {
      count(g, o, report);
    } else if (o.command == "enumerate") {
      enumerate(g, o, report);
    } else if (o.command == "expand") {
      expand(g, o, report);
    } else if (o.command == "eigenvector") {
      eigenvector(g, o, report);
    } else if (o.command == "verify") {
      if (!verify(g, o, report)) status = kVerificationFailed;
    }
    doc["command"] = echo(o);
    doc["graph"] = {{"p", g.vertex_count()}, {"q", g.edge_count()}, {"weighted", g.weighted()}};
    doc["result"] = std::move(report.result);
    if (o.format == "json") {
      out << doc.dump(2) << "\n";
    } else {
      out << "command: " << echo(o) << "\n"
          << "graph: p=" << g.vertex_count() << " q=" << g.edge_count()
          << " weighted=" << (g.weighted() ? "yes" : "no") << "\n"
          << report.table.str();
    }
  } catch (const CapExceededError& e) {
    err << "error: " << e.what() << "\n";
    return kCapExceeded;
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return kInputError;
  }
  return status;
}

}  // namespace arbor::cli
