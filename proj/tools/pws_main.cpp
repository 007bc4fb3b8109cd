// pws: command-line front door for the twisted-polynomial solvability engine
#include <CLI11.hpp>

#include <complex>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "pws/estimates.hpp"
#include "pws/serialize.hpp"

namespace {

using pws::json;

constexpr int kExitOk = 0;        // success
constexpr int kExitNegative = 1;  // mathematically negative result
constexpr int kExitUsage = 2;     // usage / schema / parity errors

struct OutputMode {
  bool as_json = false;
  bool pretty = false;
};

void emit(const json& report, const OutputMode& mode, const std::string& human) {
  if (mode.as_json || mode.pretty)
    std::cout << report.dump(mode.pretty ? 2 : -1) << "\n";
  else
    std::cout << human;
}

// "4" (rank 1) or "0,0" (rank d) — rank inferred from the commas
pws::KType parse_ktype_arg(const std::string& s) {
  std::vector<int> w;
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t comma = s.find(',', pos);
    if (comma == std::string::npos) comma = s.size();
    w.push_back(std::stoi(s.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  return pws::KType(w);
}

// "a..b" or a single integer
std::pair<int, int> parse_l_range(const std::string& s) {
  const size_t dots = s.find("..");
  if (dots == std::string::npos) {
    const int l = std::stoi(s);
    return {l, l};
  }
  const int a = std::stoi(s.substr(0, dots));
  const int b = std::stoi(s.substr(dots + 2));
  if (a > b) throw std::invalid_argument("--l range must satisfy a <= b");
  return {a, b};
}

// "R:res"
pws::SampleGrid parse_grid(const std::string& s, int rank) {
  pws::SampleGrid g;
  g.dimension = rank;
  if (rank > 1) g.resolution = 21;  // keep res^{2d} sane by default
  if (s.empty()) return g;
  const size_t colon = s.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("--grid wants R:res, e.g. 10:101");
  g.r_max = std::stod(s.substr(0, colon));
  g.resolution = std::stoi(s.substr(colon + 1));
  if (g.r_max <= 0 || g.resolution < 1) throw std::invalid_argument("--grid values out of range");
  return g;
}

// "re[,im]" per complex variable, variables separated by ';'
std::vector<std::complex<double>> parse_lambda(const std::string& s) {
  std::vector<std::complex<double>> out;
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t semi = s.find(';', pos);
    if (semi == std::string::npos) semi = s.size();
    const std::string part = s.substr(pos, semi - pos);
    const size_t comma = part.find(',');
    if (comma == std::string::npos) {
      out.emplace_back(std::stod(part), 0.0);
    } else {
      out.emplace_back(std::stod(part.substr(0, comma)), std::stod(part.substr(comma + 1)));
    }
    pos = semi + 1;
  }
  return out;
}

std::vector<double> parse_theta(const std::string& s) {
  std::vector<double> out;
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t comma = s.find(',', pos);
    if (comma == std::string::npos) comma = s.size();
    out.push_back(std::stod(s.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  return out;
}

// parity advisories surfaced when an operator file is loaded
std::vector<std::string> load_diagnostics(const pws::Level3Operator& op) {
  std::vector<std::string> diags;
  for (int i = 0; i < op.rows(); ++i)
    for (int j = 0; j < op.cols(); ++j)
      if (!pws::parity_compatible(op.sources()[j], op.targets()[i])) {
        diags.push_back("sources/targets mix parity classes (Hom_M vanishes at source " +
                        op.sources()[j].str() + ", target " + op.targets()[i].str() +
                        "); the corresponding entries are zero");
        return diags;
      }
  return diags;
}

bool l_compatible(const pws::Level3Operator& op, const pws::KType& l) {
  for (const auto& k : op.sources())
    if (!pws::parity_compatible(l, k)) return false;
  for (const auto& k : op.targets())
    if (!pws::parity_compatible(l, k)) return false;
  return true;
}

void write_or_print(const json& j, const std::string& out_path, const OutputMode& mode,
                    const json& report, const std::string& human) {
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot write '" + out_path + "'");
    out << j.dump(2) << "\n";
  }
  emit(report, mode, human);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact solvability engine for twisted polynomial systems over K-types"};
  app.require_subcommand(1);

  OutputMode mode;
  int jobs = 0;
  app.add_flag("--json", mode.as_json, "emit the JSON report (compact)");
  app.add_flag("--pretty", mode.pretty, "emit the JSON report (indented)");
  app.add_option("--jobs", jobs, "worker threads for sweeps and grids");

  // ---- qpoly ----
  std::string q_n, q_m;
  auto* cmd_qpoly = app.add_subcommand("qpoly", "print the twist generator q_{n,m}");
  cmd_qpoly->add_option("n", q_n)->required();
  cmd_qpoly->add_option("m", q_m)->required();

  // ---- solve ----
  std::string s_op, s_rhs, s_l, s_strategy = "snf";
  int s_cap = -1;
  auto* cmd_solve = app.add_subcommand("solve", "solve P v = w at a K-type");
  cmd_solve->add_option("operator", s_op)->required();
  cmd_solve->add_option("rhs", s_rhs)->required();
  cmd_solve->add_option("--l", s_l, "K-type l")->required();
  cmd_solve->add_option("--strategy", s_strategy)->check(CLI::IsMember({"snf", "induction"}));
  cmd_solve->add_option("--degree-cap", s_cap, "total-degree cap (product groups)");

  // ---- kernel ----
  std::string k_op, k_l;
  auto* cmd_kernel = app.add_subcommand("kernel", "kernel generators at a K-type");
  cmd_kernel->add_option("operator", k_op)->required();
  cmd_kernel->add_option("--l", k_l)->required();

  // ---- check-exact ----
  std::string x_p, x_q, x_l;
  auto* cmd_check = app.add_subcommand("check-exact", "check Im(Q) = Ker(P) over a K-type range");
  cmd_check->add_option("P", x_p)->required();
  cmd_check->add_option("Q", x_q)->required();
  cmd_check->add_option("--l", x_l, "K-type or range a..b")->required();

  // ---- compose ----
  std::string c_p2, c_p1, c_out;
  auto* cmd_compose = app.add_subcommand("compose", "compose two operators (P2 after P1)");
  cmd_compose->add_option("P2", c_p2)->required();
  cmd_compose->add_option("P1", c_p1)->required();
  cmd_compose->add_option("-o,--output", c_out, "write the composite operator JSON here");

  // ---- verify-estimate ----
  std::string e_op, e_u, e_l, e_grid;
  double e_r = 0.0;
  int e_n = 1, e_m = 0;
  std::string e_strategy = "snf";
  auto* cmd_verify =
      app.add_subcommand("verify-estimate", "empirical solution-estimate ratios over l");
  cmd_verify->add_option("operator", e_op)->required();
  cmd_verify->add_option("u", e_u, "h-coordinates of the seed vector u")->required();
  cmd_verify->add_option("--l", e_l, "K-type or range a..b")->required();
  cmd_verify->add_option("--r", e_r, "support radius r");
  cmd_verify->add_option("--N", e_n, "weight order N");
  cmd_verify->add_option("--M", e_m, "weight bump M on the solution side");
  cmd_verify->add_option("--grid", e_grid, "sample grid R:res");
  cmd_verify->add_option("--strategy", e_strategy)->check(CLI::IsMember({"snf", "induction"}));

  // ---- assemble ----
  std::string a_in, a_out;
  auto* cmd_assemble = app.add_subcommand("assemble", "validate and canonicalize a section file");
  cmd_assemble->add_option("section", a_in)->required();
  cmd_assemble->add_option("-o,--output", a_out, "write the canonical section JSON here");

  // ---- eval ----
  std::string v_in, v_lambda, v_theta;
  auto* cmd_eval = app.add_subcommand("eval", "evaluate a section at (lambda, theta)");
  cmd_eval->add_option("section", v_in)->required();
  cmd_eval->add_option("--lambda", v_lambda, "complex point(s): re[,im][;re,im]")->required();
  cmd_eval->add_option("--theta", v_theta, "angle per factor: x[,y]")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

#ifdef _OPENMP
  if (jobs > 0) omp_set_num_threads(jobs);
#endif

  try {
    if (*cmd_qpoly) {
      const pws::KType n = parse_ktype_arg(q_n), m = parse_ktype_arg(q_m);
      const pws::TwistGenerator q = pws::q_poly(n, m);
      const json report = pws::make_report(
          "qpoly", json{{"n", pws::ktype_to_json(n)}, {"m", pws::ktype_to_json(m)}},
          json{{"q", q.poly.str()}, {"degree", q.poly.degree()}}, {});
      emit(report, mode, q.poly.str() + "\n");
      return kExitOk;
    }

    if (*cmd_solve) {
      const json jop = pws::load_json_file(s_op);
      const pws::Level3Operator op = pws::operator_from_json(jop);
      const pws::KType l = parse_ktype_arg(s_l);
      if (l.rank() != op.rank()) throw std::invalid_argument("--l rank does not match operator");
      const std::vector<pws::EvenPoly> h = pws::rhs_from_json(pws::load_json_file(s_rhs), op.rank());
      if (static_cast<int>(h.size()) != op.rows())
        throw std::invalid_argument("rhs length must equal the number of targets");
      const pws::Level3Vector w = pws::Level3Vector::make(l, op.targets(), h);
      pws::SolveOptions opt;
      opt.strategy = s_strategy == "snf" ? pws::Strategy::snf_direct : pws::Strategy::row_induction;
      opt.degree_cap = s_cap;
      const pws::SolveReport rep = pws::solve_system(op, w, l, opt);
      json inputs{{"operator", s_op}, {"rhs", s_rhs}, {"l", pws::ktype_to_json(l)},
                  {"strategy", s_strategy}};
      if (s_cap >= 0) inputs["degree_cap"] = s_cap;
      const json report =
          pws::make_report("solve", inputs, pws::solve_report_to_json(rep), load_diagnostics(op));
      std::string human = std::string(pws::to_string(rep.status)) + " (" +
                          pws::to_string(rep.method) + ")\n";
      if (rep.solution) {
        const auto hs = rep.solution->h_coords();
        for (size_t i = 0; i < hs.size(); ++i)
          human += "  v[" + std::to_string(i) + "] = " + hs[i].str() + "\n";
      } else if (!rep.certificate.empty()) {
        human += "  certificate: " + rep.certificate + "\n";
      }
      emit(report, mode, human);
      return rep.status == pws::SolveStatus::solved ? kExitOk : kExitNegative;
    }

    if (*cmd_kernel) {
      const pws::Level3Operator op = pws::operator_from_json(pws::load_json_file(k_op));
      const pws::KType l = parse_ktype_arg(k_l);
      if (l.rank() != op.rank()) throw std::invalid_argument("--l rank does not match operator");
      const std::vector<pws::Level3Vector> gens = pws::kernel_at_ktype(op, l);
      json jgens = json::array();
      std::string human = std::to_string(gens.size()) + " generator(s)\n";
      for (const auto& g : gens) {
        json hs = json::array();
        std::string line = "  (";
        const auto h = g.h_coords();
        for (size_t i = 0; i < h.size(); ++i) {
          hs.push_back(pws::poly_to_json(h[i]));
          line += (i ? ", " : "") + h[i].str();
        }
        jgens.push_back(json{{"h", std::move(hs)}});
        human += line + ")\n";
      }
      const json report = pws::make_report(
          "kernel", json{{"operator", k_op}, {"l", pws::ktype_to_json(l)}},
          json{{"generators", std::move(jgens)}, {"count", gens.size()}}, load_diagnostics(op));
      emit(report, mode, human);
      return kExitOk;
    }

    if (*cmd_check) {
      const pws::Level3Operator p = pws::operator_from_json(pws::load_json_file(x_p));
      const pws::Level3Operator q = pws::operator_from_json(pws::load_json_file(x_q));
      if (p.rank() != 1)
        throw std::invalid_argument("check-exact sweeps need rank-1 K-types");
      const auto [lo, hi] = parse_l_range(x_l);
      std::vector<std::string> diags = load_diagnostics(p);
      json per_l = json::array();
      std::string human;
      bool all_exact = true;
      std::vector<int> ls;
      for (int l = lo; l <= hi; ++l) {
        if (!l_compatible(p, pws::KType(l)) || !l_compatible(q, pws::KType(l))) {
          diags.push_back("skipping l = " + std::to_string(l) + ": parity-incompatible");
          continue;
        }
        ls.push_back(l);
      }
      std::vector<pws::Exactness> verdicts(ls.size());
#pragma omp parallel for schedule(dynamic)
      for (size_t i = 0; i < ls.size(); ++i)
        verdicts[i] = pws::check_exactness_at_ktype(p, q, pws::KType(ls[i]));
      for (size_t i = 0; i < ls.size(); ++i) {
        per_l.push_back(json{{"l", ls[i]}, {"verdict", pws::to_string(verdicts[i])}});
        human += "l = " + std::to_string(ls[i]) + ": " + pws::to_string(verdicts[i]) + "\n";
        if (verdicts[i] != pws::Exactness::exact) all_exact = false;
      }
      const json report = pws::make_report(
          "check-exact", json{{"P", x_p}, {"Q", x_q}, {"l", x_l}},
          json{{"per_l", std::move(per_l)}, {"all_exact", all_exact}}, diags);
      emit(report, mode, human);
      return all_exact ? kExitOk : kExitNegative;
    }

    if (*cmd_compose) {
      const pws::Level3Operator p2 = pws::operator_from_json(pws::load_json_file(c_p2));
      const pws::Level3Operator p1 = pws::operator_from_json(pws::load_json_file(c_p1));
      const pws::Level3Operator comp = pws::compose(p2, p1);
      const json jcomp = pws::operator_to_json(comp);
      const json report = pws::make_report("compose", json{{"P2", c_p2}, {"P1", c_p1}}, jcomp, {});
      write_or_print(jcomp, c_out, mode, report,
                     c_out.empty() ? jcomp.dump(2) + "\n" : "wrote " + c_out + "\n");
      return kExitOk;
    }

    if (*cmd_verify) {
      const pws::Level3Operator op = pws::operator_from_json(pws::load_json_file(e_op));
      if (op.rank() != 1)
        throw std::invalid_argument("verify-estimate sweeps need rank-1 K-types");
      const std::vector<pws::EvenPoly> u_h =
          pws::rhs_from_json(pws::load_json_file(e_u), op.rank());
      if (static_cast<int>(u_h.size()) != op.cols())
        throw std::invalid_argument("u length must equal the number of sources");
      const auto [lo, hi] = parse_l_range(e_l);
      const pws::SampleGrid grid = parse_grid(e_grid, op.rank());
      const pws::NormSpec spec{e_r, e_n};
      const pws::Strategy strat =
          e_strategy == "snf" ? pws::Strategy::snf_direct : pws::Strategy::row_induction;
      const pws::LUniformity rep =
          pws::l_uniformity_experiment(op, u_h, lo, hi, spec, e_m, grid, strat);
      json entries = json::array();
      std::string human;
      for (const auto& en : rep.entries) {
        entries.push_back(json{{"l", en.l},
                               {"ratio", en.ratio},
                               {"norm_v", en.norm_v},
                               {"norm_w", en.norm_w}});
        human += "l = " + std::to_string(en.l) + ": ratio " + std::to_string(en.ratio) + "\n";
      }
      human += "max/median = " + std::to_string(rep.max_over_median) + "\n";
      std::vector<std::string> diags = load_diagnostics(op);
      for (int l : rep.skipped)
        diags.push_back("skipping l = " + std::to_string(l) + ": parity-incompatible");
      diags.push_back("sampled evidence only: grid sup-norms approximate the true norms");
      const json report = pws::make_report(
          "verify-estimate",
          json{{"operator", e_op}, {"u", e_u}, {"l", e_l}, {"r", e_r}, {"N", e_n}, {"M", e_m}},
          json{{"ratios", std::move(entries)},
               {"max_ratio", rep.max_ratio},
               {"median_ratio", rep.median_ratio},
               {"max_over_median", rep.max_over_median}},
          diags);
      emit(report, mode, human);
      return kExitOk;
    }

    if (*cmd_assemble) {
      const pws::Level2Section s = pws::section_from_json(pws::load_json_file(a_in));
      const json js = pws::section_to_json(s);
      const json report = pws::make_report(
          "assemble", json{{"section", a_in}},
          json{{"section", js},
               {"components", s.components().size()},
               {"targets", js["targets"]}},
          {});
      write_or_print(js, a_out, mode, report,
                     a_out.empty() ? js.dump(2) + "\n" : "wrote " + a_out + "\n");
      return kExitOk;
    }

    if (*cmd_eval) {
      const pws::Level2Section s = pws::section_from_json(pws::load_json_file(v_in));
      const std::vector<std::complex<double>> lambda = parse_lambda(v_lambda);
      const std::vector<double> theta = parse_theta(v_theta);
      const std::vector<std::complex<double>> vals = pws::evaluate(s, lambda, theta);
      json jv = json::array();
      std::string human;
      for (const auto& c : vals) {
        jv.push_back(json::array({c.real(), c.imag()}));
        human += "(" + std::to_string(c.real()) + ", " + std::to_string(c.imag()) + ")\n";
      }
      const json report = pws::make_report(
          "eval", json{{"section", v_in}, {"lambda", v_lambda}, {"theta", v_theta}},
          json{{"value", std::move(jv)}}, {});
      emit(report, mode, human);
      return kExitOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
