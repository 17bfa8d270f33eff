// Command-line front end for the hypercube coloring toolkit.
//
// Exit codes: 0 ok, 2 usage error, 3 infeasible instance, 4 audit failure.

#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qcube/asymptotics.hpp"
#include "qcube/bounds.hpp"
#include "qcube/config.hpp"
#include "qcube/counting.hpp"
#include "qcube/entropy.hpp"
#include "qcube/phases.hpp"
#include "qcube/templates.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitAuditFail = 4;

std::string resolve_out(const std::string& path) {
  if (path.empty() || path[0] == '/') return path;
  const char* dir = std::getenv("QCUBE_OUT_DIR");
  if (!dir || !*dir) return path;
  return std::string(dir) + "/" + path;
}

void write_report(const std::string& path, const std::string& body,
                  bool timestamp) {
  std::ofstream os(resolve_out(path));
  if (!os) throw std::invalid_argument("cannot open output file: " + path);
  if (timestamp) {
    std::time_t now = std::time(nullptr);
    char buf[64];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    os << "# generated " << buf << "\n";
  }
  os << body;
  if (!body.empty() && body.back() != '\n') os << "\n";
}

std::vector<qcube::Vertex> parse_vertex_list(const std::string& s) {
  std::vector<qcube::Vertex> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) out.push_back(static_cast<qcube::Vertex>(std::stoul(tok)));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace qcube;

  CLI::App app{"exact hypercube coloring toolkit"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  std::string config_path;
  app.add_option("--config", config_path, "key = value configuration file");
  bool no_timestamp = false;
  app.add_flag("--no-timestamp", no_timestamp,
               "omit the timestamp line from report files");

  long double threshold_base = -1, zeta = -1, cutoff = -1, entropy_tol = -1,
              linkage_exponent = -1;
  int threads = 0;
  app.add_option("--threshold-base", threshold_base,
                 "main-phase admission base (threshold is base^d)");
  app.add_option("--cutoff", cutoff, "small/large component cutoff override");
  app.add_option("--zeta", zeta, "implied constant of the Omega terms");
  app.add_option("--linkage-exponent", linkage_exponent,
                 "exponent constant in the rooted-census bound");
  app.add_option("--entropy-tol", entropy_tol, "entropy inequality tolerance");
  app.add_option("--threads", threads, "shard count for parallel counters");

  // count
  auto* cmd_count = app.add_subcommand("count", "count proper q-colorings");
  int c_d = 0, c_q = 4;
  std::string c_method = "auto", c_out;
  cmd_count->add_option("--d", c_d, "cube dimension")->required();
  cmd_count->add_option("--q", c_q, "number of colors");
  cmd_count->add_option("--method", c_method, "brute | product | auto");
  cmd_count->add_option("--out", c_out, "JSON report path");

  // isets
  auto* cmd_isets = app.add_subcommand("isets", "count independent sets");
  int i_d = 0;
  std::string i_method = "auto", i_out;
  cmd_isets->add_option("--d", i_d, "cube dimension")->required();
  cmd_isets->add_option("--method", i_method, "exhaustive | product | auto");
  cmd_isets->add_option("--out", i_out, "JSON report path");

  // phases
  auto* cmd_phases =
      app.add_subcommand("phases", "main phase / flaw analysis of a coloring");
  int p_d = 0;
  std::string p_coloring, p_out;
  bool p_census = false;
  cmd_phases->add_option("--d", p_d, "cube dimension")->required();
  cmd_phases->add_option("--coloring", p_coloring,
                         "one line of 2^d color digits");
  cmd_phases->add_flag("--census", p_census,
                       "exhaustive ideal/F* census instead of one coloring");
  cmd_phases->add_option("--out", p_out, "JSON report path");

  // template
  auto* cmd_tmpl =
      app.add_subcommand("template", "template decomposition of an F* coloring");
  int t_d = 0, t_index = -1;
  std::string t_coloring, t_out;
  cmd_tmpl->add_option("--d", t_d, "cube dimension")->required();
  cmd_tmpl->add_option("--coloring", t_coloring, "2^d color digits");
  cmd_tmpl->add_option("--index", t_index, "index into the F* census");
  cmd_tmpl->add_option("--out", t_out, "JSON report path");

  // audit-entropy
  auto* cmd_audit =
      app.add_subcommand("audit-entropy", "entropy decomposition audit");
  int a_d = 0;
  std::string a_u, a_v, a_out;
  cmd_audit->add_option("--d", a_d, "cube dimension")->required();
  cmd_audit->add_option("--u", a_u, "comma-separated odd vertices (set U)");
  cmd_audit->add_option("--v", a_v, "comma-separated even vertices (set V)");
  cmd_audit->add_option("--out", a_out, "JSON report path");

  // bounds
  auto* cmd_bounds = app.add_subcommand("bounds", "combinatorial lemma checks");
  std::string b_lemma, b_out;
  int b_d = 3;
  uint64_t b_m = 10, b_b = 2, b_n = 3, b_a = 1, b_g = 3;
  int b_root = 0, b_side = 0;
  std::string b_linkage = "adjacency";
  bool b_has_b = false;
  cmd_bounds
      ->add_option("--lemma", b_lemma,
                   "compositions | compositions-bounded | connected | "
                   "isoperimetry | sapozhenko")
      ->required();
  cmd_bounds->add_option("--d", b_d, "cube dimension");
  cmd_bounds->add_option("--m", b_m, "composition total");
  cmd_bounds->add_option("--b", b_b, "part / interior bound")
      ->each([&](const std::string&) { b_has_b = true; });
  cmd_bounds->add_option("--n", b_n, "subset size");
  cmd_bounds->add_option("--root", b_root, "root vertex");
  cmd_bounds->add_option("--linkage", b_linkage, "adjacency | two-linked");
  cmd_bounds->add_option("--a", b_a, "one-sided set size");
  cmd_bounds->add_option("--side", b_side, "parity side (0 even, 1 odd)");
  cmd_bounds->add_option("--g", b_g, "neighborhood size");
  cmd_bounds->add_option("--out", b_out, "JSON report path");

  // census-fstar
  auto* cmd_fstar = app.add_subcommand("census-fstar", "exhaustive F* census");
  int f_d = 0;
  std::string f_out;
  cmd_fstar->add_option("--d", f_d, "cube dimension")->required();
  cmd_fstar->add_option("--out", f_out, "one digit line per member");

  // report
  auto* cmd_report =
      app.add_subcommand("report", "exact vs closed-form comparison table");
  std::string r_range = "1..3", r_out, r_format = "csv";
  int r_q = 4;
  cmd_report->add_option("--d", r_range, "dimension range lo..hi");
  cmd_report->add_option("--q", r_q, "number of colors");
  cmd_report->add_option("--format", r_format, "csv | json");
  cmd_report->add_option("--out", r_out, "report path");

  CLI11_PARSE(app, argc, argv);

  try {
    Config cfg = load_config(config_path);
    if (threshold_base > 0) cfg.threshold_base = threshold_base;
    if (cutoff > 0) cfg.cutoff_override = cutoff;
    if (zeta >= 0) cfg.zeta = zeta;
    if (linkage_exponent > 0) cfg.linkage_exponent = linkage_exponent;
    if (entropy_tol > 0) cfg.entropy_tol = entropy_tol;
    if (threads > 0) cfg.threads = threads;

    if (*cmd_count) {
      CubeDim dim(c_d);
      CountResult r;
      if (c_method == "brute")
        r = count_colorings_bruteforce(dim, c_q);
      else if (c_method == "product" || c_method == "auto")
        r = count_colorings_product(dim, c_q, cfg.threads);
      else
        throw std::invalid_argument("unknown method: " + c_method);
      std::cout << to_decimal(r.value) << "\n";
      if (no_timestamp) r.elapsed_ms = 0;  // timing is a timestamp too
      if (!c_out.empty()) write_report(c_out, r.to_json(), !no_timestamp);
    } else if (*cmd_isets) {
      CubeDim dim(i_d);
      CountResult r;
      if (i_method == "exhaustive")
        r = count_independent_sets(dim);
      else if (i_method == "product" || i_method == "auto")
        r = count_independent_sets_product(dim, cfg.threads);
      else
        throw std::invalid_argument("unknown method: " + i_method);
      std::cout << to_decimal(r.value) << "\n";
      if (no_timestamp) r.elapsed_ms = 0;
      if (!i_out.empty()) write_report(i_out, r.to_json(), !no_timestamp);
    } else if (*cmd_phases) {
      CubeDim dim(p_d);
      if (p_census) {
        IdealCensus ic = ideal_census(dim, cfg);
        auto fs = fstar_census(dim, cfg);
        std::ostringstream os;
        os << "{\"d\": " << p_d
           << ", \"ideal\": " << to_decimal(ic.census.value)
           << ", \"ideal_upper_bound\": " << to_decimal(ic.upper_bound)
           << ", \"fstar\": " << fs.size() << "}";
        std::cout << "ideal colorings: " << to_decimal(ic.census.value)
                  << "  (bound " << to_decimal(ic.upper_bound) << ")\n"
                  << "F* colorings:   " << fs.size() << "\n";
        if (!p_out.empty()) write_report(p_out, os.str(), !no_timestamp);
      } else {
        if (p_coloring.empty())
          throw std::invalid_argument("phases: need --coloring or --census");
        Coloring f = Coloring::from_digits(dim, 4, p_coloring);
        PhaseReport r = main_phase(f, cfg);
        std::cout << (r.phase ? "main phase " + r.phase->name()
                              : std::string("no main phase"))
                  << ", " << r.flaw_count << " flaw(s), "
                  << (r.ideal ? "ideal" : "non-ideal")
                  << (r.in_fstar ? ", in F*" : "") << "\n";
        if (!p_out.empty()) write_report(p_out, r.to_json(), !no_timestamp);
        else std::cout << r.to_json() << "\n";
      }
    } else if (*cmd_tmpl) {
      CubeDim dim(t_d);
      std::string digits = t_coloring;
      if (digits.empty()) {
        if (t_index < 0)
          throw std::invalid_argument("template: need --coloring or --index");
        auto fs = fstar_census(dim, cfg);
        if (t_index >= static_cast<int>(fs.size()))
          throw std::invalid_argument("template: census index out of range");
        digits = fs[t_index].to_digits();
      }
      Coloring f = Coloring::from_digits(dim, 4, digits);
      Template t = decompose(f, cfg);
      MonochromeReport mono = verify_monochromatic(f, t);
      std::ostringstream os;
      os << "{\"coloring\": \"" << digits << "\", \"template\": " << t.to_json()
         << ", \"monochromatic\": " << (mono.all_pass ? "true" : "false")
         << ", \"cost_ledger\": "
         << cost_ledger_json(template_cost_ledger(t, dim, cfg)) << "}";
      std::cout << "coloring " << digits << ": |X|=" << t.flaws.size()
                << " a-comps=" << t.A_comps.size()
                << " singleton-a=" << t.A_hat_comps.size()
                << " p=" << t.P_comps.size() << " pbar=" << t.Pbar_comps.size()
                << " phat=" << t.Phat_comps.size()
                << (t.exceptional ? " (exceptional)" : "") << "\n";
      if (!t_out.empty()) write_report(t_out, os.str(), !no_timestamp);
      else std::cout << os.str() << "\n";
      if (!mono.all_pass) return kExitAuditFail;
    } else if (*cmd_audit) {
      CubeDim dim(a_d);
      Ensemble e = Ensemble::uniform(dim, enumerate_colorings(dim, 4));
      VertexSet U(parse_vertex_list(a_u));
      VertexSet V(parse_vertex_list(a_v));
      AuditRecord r = decomposition_audit(e, U, V, dim, cfg);
      std::cout << "H(f) = " << static_cast<double>(r.lhs)
                << ", bound = " << static_cast<double>(r.rhs) << ", slack = "
                << static_cast<double>(r.slack)
                << (r.holds ? "  [holds]" : "  [VIOLATED]") << "\n";
      if (!a_out.empty()) write_report(a_out, r.to_json(), !no_timestamp);
      else std::cout << r.to_json() << "\n";
      if (!r.holds) return kExitAuditFail;
    } else if (*cmd_bounds) {
      CubeDim dim(b_d);
      std::ostringstream os;
      bool ok = true;
      if (b_lemma == "compositions") {
        BigCount closed = compositions_count(b_m);
        BigCount exhaustive = compositions_count_exhaustive(b_m);
        ok = closed == exhaustive;
        os << "{\"lemma\": \"compositions\", \"m\": " << b_m
           << ", \"count\": " << to_decimal(closed)
           << ", \"match\": " << (ok ? "true" : "false") << "}";
      } else if (b_lemma == "compositions-bounded") {
        BoundedCompositions r = compositions_bounded(b_m, b_b);
        ok = r.below_bound;
        os << "{\"lemma\": \"compositions-bounded\", \"m\": " << b_m
           << ", \"b\": " << b_b << ", \"count\": " << to_decimal(r.count)
           << ", \"bound_log2\": " << static_cast<double>(r.bound_log2)
           << ", \"below_bound\": " << (ok ? "true" : "false") << "}";
      } else if (b_lemma == "connected") {
        LinkageGraph lg = b_linkage == "two-linked" ? LinkageGraph::TwoLinked
                                                   : LinkageGraph::Adjacency;
        ConnectedSubsetReport r =
            connected_subsets(dim, static_cast<Vertex>(b_root), b_n, lg);
        ok = r.below_bound;
        os << "{\"lemma\": \"connected\", \"d\": " << b_d << ", \"n\": " << b_n
           << ", \"linkage\": \"" << b_linkage
           << "\", \"count\": " << to_decimal(r.count)
           << ", \"tree_bound_log2\": "
           << static_cast<double>(r.tree_bound_log2)
           << ", \"below_bound\": " << (ok ? "true" : "false") << "}";
      } else if (b_lemma == "isoperimetry") {
        MinBoundaryReport r = min_vertex_boundary(dim, b_a, b_side);
        ok = !r.min || *r.min == r.ball_value;
        os << "{\"lemma\": \"isoperimetry\", \"d\": " << b_d
           << ", \"a\": " << b_a << ", \"ball_value\": " << r.ball_value;
        if (r.min) os << ", \"min\": " << *r.min;
        os << ", \"ball_attains\": " << (ok ? "true" : "false") << "}";
      } else if (b_lemma == "sapozhenko") {
        std::optional<uint64_t> bb;
        if (b_has_b) bb = b_b;
        SapozhenkoCensus r = sapozhenko_census(dim, b_g, bb, cfg);
        os << "{\"lemma\": \"sapozhenko\", \"d\": " << b_d
           << ", \"g\": " << b_g << ", \"count_G\": " << to_decimal(r.count_G);
        if (r.count_H) os << ", \"count_H\": " << to_decimal(*r.count_H);
        os << ", \"g_bound_log2\": " << static_cast<double>(r.g_bound_log2)
           << "}";
      } else {
        throw std::invalid_argument("unknown lemma: " + b_lemma);
      }
      std::cout << os.str() << "\n";
      if (!b_out.empty()) write_report(b_out, os.str(), !no_timestamp);
      if (!ok) return kExitAuditFail;
    } else if (*cmd_fstar) {
      CubeDim dim(f_d);
      auto fs = fstar_census(dim, cfg);
      std::cout << fs.size() << " F* coloring(s) at d=" << f_d << "\n";
      std::ostringstream os;
      for (const auto& f : fs) os << f.to_digits() << "\n";
      if (!f_out.empty()) write_report(f_out, os.str(), !no_timestamp);
      else std::cout << os.str();
    } else if (*cmd_report) {
      auto dots = r_range.find("..");
      int lo, hi;
      if (dots == std::string::npos) {
        lo = hi = std::stoi(r_range);
      } else {
        lo = std::stoi(r_range.substr(0, dots));
        hi = std::stoi(r_range.substr(dots + 2));
      }
      auto rows = ratio_report(lo, hi, r_q, cfg);
      std::string body = r_format == "json" ? ratio_report_json(rows, r_q)
                                            : ratio_report_csv(rows, r_q);
      if (!r_out.empty()) {
        write_report(r_out, body, !no_timestamp);
        std::cout << "wrote " << rows.size() << " row(s) to " << r_out << "\n";
      } else {
        std::cout << body;
      }
    }
  } catch (const InstanceTooLarge& e) {
    std::cerr << e.what() << "\n";
    return kExitInfeasible;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}
