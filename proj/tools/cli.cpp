#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>
#include <stdexcept>

#include "gcat/corpus.hpp"
#include "gcat/enumerate.hpp"
#include "gcat/graph_io.hpp"
#include "gcat/growth.hpp"
#include "gcat/isomorphism.hpp"
#include "gcat/matroid.hpp"
#include "gcat/swiatkowski.hpp"
#include "gcat/trees.hpp"

#ifndef GCAT_VERSION
#define GCAT_VERSION "0.0.0"
#endif

namespace gcat::cli {

const char* version() { return GCAT_VERSION; }

namespace {

using json = nlohmann::ordered_json;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Report {
  std::string command;
  json parameters = json::object();
  std::vector<std::string> inputs;
  json result = json::object();
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  /// Extra "# key: value" lines in CSV output.
  std::vector<std::pair<std::string, std::string>> notes;
  json assertions = json::object();

  void add_input(std::string bytes) { inputs.push_back(std::move(bytes)); }
  void assert_that(const std::string& name, bool holds) { assertions[name] = holds; }
  bool assertions_hold() const {
    for (const auto& [k, v] : assertions.items()) {
      if (!v.get<bool>()) return false;
    }
    return true;
  }
  std::string input_hash() const {
    if (inputs.empty()) return "none";
    std::string all;
    for (const auto& s : inputs) {
      all += s;
      all.push_back('\0');
    }
    return fnv1a_hex(all);
  }
};

json to_json(const Integer& x) { return x.is_small() ? json(x.small()) : json(x.str()); }

json to_json(const std::vector<Integer>& xs) {
  json a = json::array();
  for (const auto& x : xs) a.push_back(to_json(x));
  return a;
}

template <class T>
std::string join(const std::vector<T>& xs, const std::string& sep) {
  std::ostringstream out;
  for (std::size_t k = 0; k < xs.size(); ++k) out << (k ? sep : "") << xs[k];
  return out.str();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

std::string render(const Report& r, const std::string& format) {
  if (format == "csv") {
    std::ostringstream out;
    out << "# tool: gcat " << version() << '\n';
    out << "# command: " << r.command << '\n';
    out << "# parameters: " << r.parameters.dump() << '\n';
    out << "# input_hash: " << r.input_hash() << '\n';
    for (const auto& [k, v] : r.notes) out << "# " << k << ": " << v << '\n';
    for (const auto& [k, v] : r.assertions.items()) out << "# assert " << k << ": " << (v.get<bool>() ? "pass" : "fail") << '\n';
    std::vector<std::string> header;
    for (const auto& c : r.columns) header.push_back(csv_field(c));
    out << join(header, ",") << '\n';
    for (const auto& row : r.rows) {
      std::vector<std::string> cells;
      for (const auto& c : row) cells.push_back(csv_field(c));
      out << join(cells, ",") << '\n';
    }
    return out.str();
  }
  json j;
  j["tool"] = "gcat";
  j["version"] = version();
  j["command"] = r.command;
  j["parameters"] = r.parameters;
  j["input_hash"] = r.input_hash();
  j["result"] = r.result;
  if (!r.assertions.empty()) j["assertions"] = r.assertions;
  return j.dump(2) + '\n';
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

struct LoadedGraph {
  std::string name;
  MultiGraph graph;
};

LoadedGraph load_graph(const std::string& path, Report& r) {
  auto bytes = read_file(path);
  r.add_input(bytes);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(bytes);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
  try {
    return {std::filesystem::path(path).stem().string(), graph_from_json(j)};
  } catch (const GraphFormatError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::size_t edge_by_name(const MultiGraph& g, const std::string& name) {
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    if (g.edge_name(e) == name) return e;
  }
  throw InputError("no edge named \"" + name + "\"");
}

std::size_t vertex_by_name(const MultiGraph& g, const std::string& name) {
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    if (g.vertex_name(v) == name) return v;
  }
  throw InputError("no vertex named \"" + name + "\"");
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  return out;
}

/// "a..b" for every coordinate, or one range per coordinate separated by commas.
void parse_grid(const std::string& text, std::size_t arity, std::vector<std::size_t>& lo, std::vector<std::size_t>& hi) {
  auto parts = split(text, ',');
  if (parts.size() != 1 && parts.size() != arity) {
    throw InputError("--grid: expected one range or " + std::to_string(arity) + " ranges, got " + std::to_string(parts.size()));
  }
  lo.clear();
  hi.clear();
  for (const auto& p : parts) {
    auto dots = p.find("..");
    if (dots == std::string::npos) throw InputError("--grid: range \"" + p + "\" is not of the form a..b");
    try {
      std::size_t used = 0;
      auto a = std::stoul(p.substr(0, dots), &used);
      if (used != dots) throw std::invalid_argument("");
      auto rest = p.substr(dots + 2);
      auto b = std::stoul(rest, &used);
      if (used != rest.size()) throw std::invalid_argument("");
      if (a > b) throw InputError("--grid: empty range \"" + p + "\"");
      lo.push_back(a);
      hi.push_back(b);
    } catch (const std::logic_error&) {
      throw InputError("--grid: range \"" + p + "\" is not of the form a..b");
    }
  }
  if (parts.size() == 1) {
    lo.assign(arity, lo[0]);
    hi.assign(arity, hi[0]);
  }
}

json typed(const std::string& s) {
  if (s == "true") return true;
  if (s == "false") return false;
  if (!s.empty() && s.size() < 19 && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    return std::stoll(s);
  }
  return s;
}

/// Every option of the subcommand, with defaults, in declaration order.
json collect_parameters(const CLI::App* sub) {
  json p = json::object();
  for (const auto* opt : sub->get_options()) {
    const auto& name = opt->get_single_name();
    if (name == "help") continue;
    if (opt->get_expected_max() == 0) {
      p[name] = opt->count() > 0;
    } else if (opt->count() > 0) {
      auto res = opt->results();
      if (opt->get_items_expected_max() > 1) {
        json a = json::array();
        for (const auto& x : res) a.push_back(typed(x));
        p[name] = a;
      } else {
        p[name] = typed(res.back());
      }
    } else if (!opt->get_default_str().empty()) {
      p[name] = typed(opt->get_default_str());
    } else {
      p[name] = nullptr;
    }
  }
  return p;
}

json homology_record(const std::string& name, std::size_t i, std::size_t n, const HomologySummary& h) {
  json j;
  j["graph"] = name;
  j["i"] = i;
  j["n"] = n;
  j["betti"] = h.betti;
  j["torsion"] = to_json(h.torsion);
  return j;
}

void homology_table(Report& r, const std::string& name, std::size_t i, std::size_t n, const HomologySummary& h) {
  r.columns = {"graph", "i", "n", "betti", "torsion"};
  std::vector<std::string> t;
  for (const auto& x : h.torsion) t.push_back(x.str());
  r.rows.push_back({name, std::to_string(i), std::to_string(n), std::to_string(h.betti), join(t, " ")});
}

void polynomial_result(Report& r, const std::string& name, const IntPolynomial& p) {
  r.result["graph"] = name;
  r.result["coefficients"] = to_json(p.coefficients());
  r.columns = {"k", "coefficient"};
  for (std::size_t k = 0; k < p.coefficients().size(); ++k) r.rows.push_back({std::to_string(k), p.coefficients()[k].str()});
}

std::string mpq_string(const mpq_class& q) { return q.get_str(); }

struct Options {
  std::string format = "json";
  std::string output;
  std::string graph, target, sites, grid, functional = "betti", corpus_dir, dir;
  std::size_t i = 1, n = 2, genus = 2, degree = 3, workers = 1;
  std::size_t scan_max_edges = 8, tree_max_edges = 6, relative_max_edges = 5;
  std::optional<std::size_t> i_opt;
  std::vector<std::string> trees;
  bool assert_bound = false, assert_agree = false, assert_fit = false, assert_planar_free = false;
};

void add_output_options(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"json", "csv"}));
  sub->add_option("--output", o.output, "Write the report here instead of stdout");
}

using Runner = std::function<void(Report&)>;

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"gcat: contraction categories of graphs, configuration-space homology, and matroid invariants"};
  app.option_defaults()->always_capture_default();
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(version()));

  std::vector<std::pair<CLI::App*, Runner>> leaves;
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, Runner fn) {
    auto* sub = parent->add_subcommand(name, help);
    add_output_options(sub, o);
    leaves.emplace_back(sub, std::move(fn));
    return sub;
  };

  // uconf
  auto* uconf = leaf(&app, "uconf", "H_i(UConf_n(G); Z) from the reduced Świątkowski complex", [&](Report& r) {
    auto g = load_graph(o.graph, r);
    auto h = uconf_homology(g.graph, o.i, o.n);
    r.result = homology_record(g.name, o.i, o.n, h);
    homology_table(r, g.name, o.i, o.n, h);
  });
  uconf->add_option("--graph", o.graph, "Graph JSON file")->required();
  uconf->add_option("--i", o.i, "Homological degree")->required()->check(CLI::Range(0, 64));
  uconf->add_option("--n", o.n, "Number of points")->required()->check(CLI::Range(1, 64));

  auto* abrams = leaf(&app, "oracle-abrams", "Same homology from the discretized configuration complex", [&](Report& r) {
    auto g = load_graph(o.graph, r);
    AbramsComplex cx(g.graph, o.n);
    auto h = cx.homology(o.i);
    r.result = homology_record(g.name, o.i, o.n, h);
    json cells = json::array();
    for (std::size_t k = 0; k <= o.n; ++k) cells.push_back(cx.num_cells(k));
    r.result["cells"] = cells;
    r.result["subdivided_edges"] = cx.subdivided().num_edges();
    homology_table(r, g.name, o.i, o.n, h);
    if (o.assert_agree) r.assert_that("agrees_with_uconf", uconf_homology(g.graph, o.i, o.n) == h);
  });
  abrams->add_option("--graph", o.graph, "Graph JSON file")->required();
  abrams->add_option("--i", o.i, "Homological degree")->required()->check(CLI::Range(0, 64));
  abrams->add_option("--n", o.n, "Number of points")->required()->check(CLI::Range(1, 8));
  abrams->add_flag("--assert-agree", o.assert_agree, "Fail unless the Świątkowski complex gives the same group");

  auto* kl = leaf(&app, "kl", "Kazhdan–Lusztig polynomial of the graphic matroid", [&](Report& r) {
    auto g = load_graph(o.graph, r);
    polynomial_result(r, g.name, kl_polynomial(g.graph));
  });
  kl->add_option("--graph", o.graph, "Graph JSON file")->required();

  auto* charpoly = leaf(&app, "charpoly", "Characteristic polynomial of the graphic matroid", [&](Report& r) {
    auto g = load_graph(o.graph, r);
    polynomial_result(r, g.name, characteristic_polynomial(g.graph));
  });
  charpoly->add_option("--graph", o.graph, "Graph JSON file")->required();

  auto* fl = leaf(&app, "flats", "Flats of the graphic matroid", [&](Report& r) {
    auto g = load_graph(o.graph, r);
    auto fs = flats(g.graph);
    json list = json::array();
    std::vector<std::size_t> by_rank;
    r.columns = {"rank", "corank", "edges"};
    for (const auto& f : fs) {
      std::vector<std::string> names;
      for (auto e : f.edge_list()) names.push_back(g.graph.edge_name(e));
      if (by_rank.size() <= f.rank) by_rank.resize(f.rank + 1);
      ++by_rank[f.rank];
      list.push_back({{"rank", f.rank}, {"corank", f.corank}, {"edges", names}});
      r.rows.push_back({std::to_string(f.rank), std::to_string(f.corank), join(names, " ")});
    }
    r.result["graph"] = g.name;
    r.result["count"] = fs.size();
    r.result["count_by_rank"] = by_rank;
    r.result["flats"] = list;
  });
  fl->add_option("--graph", o.graph, "Graph JSON file")->required();

  auto* os = leaf(&app, "os-dim", "Orlik–Solomon dimensions", [&](Report& r) {
    auto g = load_graph(o.graph, r);
    std::size_t top = g.graph.num_vertices();
    std::size_t from = o.i_opt ? *o.i_opt : 0, to = o.i_opt ? *o.i_opt : (top ? top - 1 : 0);
    json dims = json::array();
    r.columns = {"i", "dimension"};
    for (std::size_t i = from; i <= to; ++i) {
      auto d = os_dimension(g.graph, i);
      dims.push_back({{"i", i}, {"dimension", to_json(d)}});
      r.rows.push_back({std::to_string(i), d.str()});
    }
    r.result["graph"] = g.name;
    r.result["dimensions"] = dims;
  });
  os->add_option("--graph", o.graph, "Graph JSON file")->required();
  os->add_option("--i", o.i_opt, "Single degree (default: all)")->check(CLI::Range(0, 64));

  auto* cc = leaf(&app, "contract-count", "|Hom(G, G2)| in the contraction category", [&](Report& r) {
    auto g = load_graph(o.graph, r);
    auto t = load_graph(o.target, r);
    auto rep = principal_projective_growth(t.graph, {{g.name, g.graph}});
    std::uint64_t morphisms = rep.rows.empty() ? 0 : rep.rows[0].morphisms;
    Integer bound = rep.rows.empty() ? Integer(0) : rep.rows[0].bound;
    bool holds = rep.rows.empty() || rep.rows[0].holds;
    r.result["graph"] = g.name;
    r.result["target"] = t.name;
    r.result["same_genus"] = !rep.rows.empty();
    r.result["morphisms"] = morphisms;
    r.result["target_automorphisms"] = rep.automorphisms;
    r.result["bound"] = to_json(bound);
    r.result["bound_holds"] = holds;
    r.columns = {"graph", "target", "morphisms", "target_automorphisms", "bound", "bound_holds"};
    r.rows.push_back({g.name, t.name, std::to_string(morphisms), std::to_string(rep.automorphisms), bound.str(),
                      holds ? "true" : "false"});
    if (o.assert_bound) r.assert_that("bound", holds);
  });
  cc->add_option("--graph", o.graph, "Source graph JSON file")->required();
  cc->add_option("--target", o.target, "Target graph JSON file")->required();
  cc->add_flag("--assert-bound", o.assert_bound, "Fail unless |Hom| <= |Aut(G2)| * C(|G|, |G2|)");

  auto* er = leaf(&app, "enumerate-reduced", "Reduced graphs of a genus, up to isomorphism", [&](Report& r) {
    auto gs = enumerate_reduced_graphs(static_cast<int>(o.genus));
    json list = json::array();
    r.columns = {"index", "vertices", "edges", "automorphisms", "valences"};
    for (std::size_t k = 0; k < gs.size(); ++k) {
      auto aut = count_automorphisms(gs[k]);
      list.push_back({{"index", k},
                      {"vertices", gs[k].num_vertices()},
                      {"edges", gs[k].num_edges()},
                      {"automorphisms", aut},
                      {"graph", graph_to_json(gs[k])}});
      r.rows.push_back({std::to_string(k), std::to_string(gs[k].num_vertices()), std::to_string(gs[k].num_edges()),
                        std::to_string(aut), join(gs[k].valences(), " ")});
    }
    r.result["genus"] = o.genus;
    r.result["count"] = gs.size();
    r.result["graphs"] = list;
  });
  er->add_option("--genus", o.genus, "Genus")->required()->check(CLI::Range(1, 4));

  // growth subdivide | sprout
  auto* growth = app.add_subcommand("growth", "Dimension tables along subdivision or sprouting families");
  growth->require_subcommand(1);
  auto growth_run = [&](Family::Kind kind) {
    return [&, kind](Report& r) {
      auto g = load_graph(o.graph, r);
      auto names = split(o.sites, ',');
      if (names.empty()) throw InputError("--sites: no sites given");
      Family fam;
      if (kind == Family::Kind::Subdivide) {
        std::vector<DirectedEdge> sites;
        for (const auto& s : names) {
          bool rev = s.size() > 4 && s.compare(s.size() - 4, 4, ":rev") == 0;
          sites.push_back({edge_by_name(g.graph, rev ? s.substr(0, s.size() - 4) : s), rev});
        }
        fam = Family::subdivision(g.graph, sites);
      } else {
        std::vector<std::size_t> sites;
        for (const auto& s : names) sites.push_back(vertex_by_name(g.graph, s));
        fam = Family::sprouting(g.graph, sites);
      }
      std::vector<std::size_t> lo, hi;
      parse_grid(o.grid, fam.arity(), lo, hi);
      Functional f;
      if (o.functional == "betti") f = Functional::betti(o.i, o.n);
      else if (o.functional == "kl") f = Functional::kl_coefficient(o.i);
      else if (o.functional == "os") f = Functional::os_dimension(o.i);
      else {
        if (o.target.empty()) throw InputError("--functional hom needs --target");
        f = Functional::hom_count(load_graph(o.target, r).graph);
      }
      auto table = dimension_table(f, fam, lo, hi, o.workers);
      json cells = json::array();
      r.columns.clear();
      for (std::size_t j = 0; j < fam.arity(); ++j) r.columns.push_back("m" + std::to_string(j + 1));
      r.columns.push_back("value");
      for (std::size_t k = 0; k < table.points.size(); ++k) {
        const auto& v = table.values[k];
        cells.push_back({{"m", table.points[k]}, {"value", v ? to_json(*v) : json(nullptr)}});
        std::vector<std::string> row;
        for (auto x : table.points[k]) row.push_back(std::to_string(x));
        row.push_back(v ? v->str() : "NA");
        r.rows.push_back(std::move(row));
      }
      r.result["graph"] = g.name;
      r.result["functional"] = table.functional;
      r.result["lo"] = lo;
      r.result["hi"] = hi;
      r.result["table"] = cells;
      std::vector<std::string> vars;
      for (std::size_t j = 0; j < fam.arity(); ++j) vars.push_back("m" + std::to_string(j + 1));
      bool fit_ok = false;
      try {
        auto fit = fit_polynomial(table, o.degree);
        json terms = json::array();
        for (const auto& [e, c] : fit.polynomial.terms) terms.push_back({{"exponents", e}, {"coefficient", mpq_string(c)}});
        json residuals = json::array();
        for (const auto& [m, q] : fit.residuals) {
          residuals.push_back({{"m", m}, {"residual", q ? json(mpq_string(*q)) : json(nullptr)}});
        }
        r.result["fit"] = {{"degree_cap", fit.degree_cap},
                           {"polynomial", fit.polynomial.str(vars)},
                           {"total_degree", fit.polynomial.total_degree()},
                           {"terms", terms},
                           {"threshold", fit.threshold},
                           {"threshold_cells", fit.threshold_cells},
                           {"support_cells", fit.support_cells},
                           {"confirmed", fit.confirmed()},
                           {"residuals", residuals}};
        r.notes.emplace_back("fit", fit.polynomial.str(vars));
        r.notes.emplace_back("threshold", join(fit.threshold, " "));
        r.notes.emplace_back("confirmed", fit.confirmed() ? "true" : "false");
        fit_ok = fit.confirmed();
      } catch (const std::invalid_argument& e) {
        r.result["fit"] = {{"degree_cap", o.degree}, {"error", e.what()}};
        r.notes.emplace_back("fit", std::string("unavailable: ") + e.what());
      }
      if (o.assert_fit) r.assert_that("fit_confirmed", fit_ok);
    };
  };
  for (auto [name, kind, help] : {std::tuple{"subdivide", Family::Kind::Subdivide, "Subdivide the site edges into m_i pieces"},
                                  std::tuple{"sprout", Family::Kind::Sprout, "Attach m_i leaves at the site vertices"}}) {
    auto* sub = leaf(growth, name, help, growth_run(kind));
    sub->add_option("--graph", o.graph, "Base graph JSON file")->required();
    sub->add_option("--sites", o.sites,
                    kind == Family::Kind::Subdivide ? "Comma-separated edge ids; suffix :rev runs the path head to tail"
                                                    : "Comma-separated vertex names")
        ->required();
    sub->add_option("--grid", o.grid, "a..b, or one a..b per site separated by commas")->required();
    sub->add_option("--functional", o.functional, "betti, kl, os or hom")
        ->check(CLI::IsMember({"betti", "kl", "os", "hom"}));
    sub->add_option("--i", o.i, "Degree (betti, kl, os)")->check(CLI::Range(0, 64));
    sub->add_option("--n", o.n, "Number of points (betti)")->check(CLI::Range(1, 64));
    sub->add_option("--target", o.target, "Target graph JSON file (hom)");
    sub->add_option("--degree", o.degree, "Total degree cap of the fit")->check(CLI::Range(0, 16));
    sub->add_option("--workers", o.workers, "Worker threads")->check(CLI::Range(1, 256));
    sub->add_flag("--assert-fit", o.assert_fit, "Fail unless an exact fit is confirmed beyond its support");
  }

  // trees duality | leq
  auto* trees = app.add_subcommand("trees", "Planar rooted trees: duality checks and the labeled quasi-order");
  trees->require_subcommand(1);
  auto* duality = leaf(trees, "duality", "Exhaustive contraction/embedding duality and relative labelings", [&](Report& r) {
    auto d = duality_check(o.tree_max_edges);
    auto rl = relative_labeling_check(o.relative_max_edges, 0);
    r.result["duality"] = {{"max_edges", d.max_edges},       {"trees", d.trees},
                           {"pairs", d.pairs},               {"related_pairs", d.related_pairs},
                           {"contractions", d.contractions}, {"embeddings", d.embeddings},
                           {"mismatches", d.mismatches}};
    r.result["relative_labeling"] = {
        {"max_edges", rl.max_edges}, {"checked", rl.checked}, {"mismatches", rl.mismatches}};
    r.columns = {"check", "max_edges", "checked", "mismatches"};
    r.rows.push_back({"duality", std::to_string(d.max_edges), std::to_string(d.pairs), std::to_string(d.mismatches)});
    r.rows.push_back({"relative_labeling", std::to_string(rl.max_edges), std::to_string(rl.checked),
                      std::to_string(rl.mismatches)});
    r.assert_that("duality", d.holds());
    r.assert_that("relative_labeling", rl.holds());
  });
  duality->add_option("--max-edges", o.tree_max_edges, "Largest tree size for the duality check")->check(CLI::Range(0, 7));
  duality->add_option("--relative-max-edges", o.relative_max_edges, "Largest tree size for the labeling check")
      ->check(CLI::Range(0, 5));

  auto* leq = leaf(trees, "leq", "Decide a <= b: a labeled planar contraction b -> a", [&](Report& r) {
    if (o.trees.size() != 2) throw InputError("trees leq: pass --tree exactly twice (a, then b)");
    for (const auto& s : o.trees) r.add_input(s);
    auto a = PlanarRootedTree::parse(o.trees[0]);
    auto b = PlanarRootedTree::parse(o.trees[1]);
    auto w = labeled_contraction(b, a);
    r.result["a"] = a.str();
    r.result["b"] = b.str();
    r.result["leq"] = w.has_value();
    r.result["witness"] = w ? json(*w) : json(nullptr);
    r.columns = {"a", "b", "leq", "witness"};
    r.rows.push_back({a.str(), b.str(), w ? "true" : "false", w ? join(*w, " ") : ""});
  });
  leq->add_option("--tree", o.trees, "Tree in (v:l (child ...) ...) form; give a then b")->required();

  auto* scan = leaf(&app, "scan-torsion", "Torsion of H_i(UConf_n) across the corpus", [&](Report& r) {
    std::vector<CorpusEntry> corpus = o.corpus_dir.empty() ? acceptance_corpus() : read_corpus(o.corpus_dir);
    std::vector<NamedGraph> graphs;
    for (const auto& e : corpus) {
      if (e.graph.num_edges() == 0 || e.graph.num_edges() > o.scan_max_edges) continue;
      graphs.push_back({e.id, e.graph});
      r.add_input(graph_to_json(e.graph).dump());
    }
    auto s = torsion_scan(graphs, o.i, o.n);
    json rows = json::array();
    r.columns = {"graph", "genus", "planar", "betti", "torsion"};
    bool planar_free = true;
    for (const auto& row : s.rows) {
      rows.push_back({{"graph", row.id},
                      {"genus", row.genus},
                      {"planar", row.planar},
                      {"betti", row.betti},
                      {"torsion", to_json(row.torsion)}});
      std::vector<std::string> t;
      for (const auto& x : row.torsion) t.push_back(x.str());
      r.rows.push_back({row.id, std::to_string(row.genus), row.planar ? "true" : "false", std::to_string(row.betti),
                        join(t, " ")});
      if (row.planar && !row.torsion.empty()) planar_free = false;
    }
    json exps = json::array();
    for (const auto& [g, e] : s.max_exponent) {
      exps.push_back({{"genus", g}, {"exponent", to_json(e)}});
      r.notes.emplace_back("torsion exponent at genus " + std::to_string(g), e.str());
    }
    r.result["i"] = o.i;
    r.result["n"] = o.n;
    r.result["rows"] = rows;
    r.result["max_exponent"] = exps;
    if (o.assert_planar_free) r.assert_that("planar_torsion_free", planar_free);
  });
  scan->add_option("--i", o.i, "Homological degree")->check(CLI::Range(0, 64));
  scan->add_option("--n", o.n, "Number of points")->check(CLI::Range(1, 8));
  scan->add_option("--max-edges", o.scan_max_edges, "Skip corpus graphs with more edges")->check(CLI::Range(1, 64));
  scan->add_option("--corpus", o.corpus_dir, "Corpus directory (default: the built-in corpus)");
  scan->add_flag("--assert-planar-free", o.assert_planar_free, "Fail if a planar graph has torsion");

  auto* corpus = app.add_subcommand("corpus", "The acceptance corpus of graphs");
  corpus->require_subcommand(1);
  auto* build = leaf(corpus, "build", "Write the corpus as graph JSON files plus index.json", [&](Report& r) {
    auto c = acceptance_corpus();
    write_corpus(o.dir, c);
    r.result["dir"] = o.dir;
    r.result["count"] = c.size();
    r.columns = {"dir", "count"};
    r.rows.push_back({o.dir, std::to_string(c.size())});
  });
  build->add_option("--dir", o.dir, "Output directory")->required();
  auto* list = leaf(corpus, "list", "List corpus entries", [&](Report& r) {
    auto c = o.dir.empty() ? acceptance_corpus() : read_corpus(o.dir);
    json entries = json::array();
    r.columns = {"id", "family", "vertices", "edges", "genus"};
    for (const auto& e : c) {
      r.add_input(graph_to_json(e.graph).dump());
      long g = genus(e.graph);
      entries.push_back({{"id", e.id},
                         {"family", e.family},
                         {"vertices", e.graph.num_vertices()},
                         {"edges", e.graph.num_edges()},
                         {"genus", g}});
      r.rows.push_back({e.id, e.family, std::to_string(e.graph.num_vertices()), std::to_string(e.graph.num_edges()),
                        std::to_string(g)});
    }
    r.result["count"] = c.size();
    r.result["entries"] = entries;
  });
  list->add_option("--dir", o.dir, "Corpus directory (default: the built-in corpus)");

  std::vector<const char*> argv{"gcat"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kBadInput;
  }

  for (auto& [sub, fn] : leaves) {
    if (!sub->parsed()) continue;
    Report r;
    std::string path;
    for (const auto* s = sub; s && s != &app; s = s->get_parent()) path = s->get_name() + (path.empty() ? "" : " " + path);
    r.command = path;
    r.parameters = collect_parameters(sub);
    try {
      fn(r);
    } catch (const InputError& e) {
      err << "gcat " << r.command << ": " << e.what() << '\n';
      return kBadInput;
    } catch (const std::invalid_argument& e) {
      err << "gcat " << r.command << ": " << e.what() << '\n';
      return kBadInput;
    } catch (const std::runtime_error& e) {
      err << "gcat " << r.command << ": " << e.what() << '\n';
      return kBadInput;
    }
    auto text = render(r, o.format);
    if (o.output.empty()) {
      out << text;
    } else {
      std::ofstream f(o.output, std::ios::binary);
      if (!f) {
        err << "gcat: cannot write " << o.output << '\n';
        return kBadInput;
      }
      f << text;
    }
    return r.assertions_hold() ? kOk : kAssertionFailed;
  }
  err << app.help();
  return kBadInput;
}

}  // namespace gcat::cli
