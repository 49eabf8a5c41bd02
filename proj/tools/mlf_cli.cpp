// Command-line front end for the mlf library: point evaluation, derivatives,
// the h(alpha) boundary curve, real/complex zero location, modulus-inequality
// grid checks, complete-monotonicity probes, and parameter-plane figures.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mlf/mlf.hpp"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitEvalFailure = 3;
constexpr int kExitContour = 4;

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// Numbers enter JSON only when finite; callers guard error paths separately.
double finite_or_throw(double v, const char* what) {
  if (!std::isfinite(v)) {
    throw mlf::NonFiniteError(std::string(what) + " is not finite");
  }
  return v;
}

// RFC 4180: CRLF record separators, quote fields containing commas/quotes/CR/LF.
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  out += "\"";
  return out;
}

std::string csv_row(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ",";
    out += csv_field(fields[i]);
  }
  out += "\r\n";
  return out;
}

// Write to a temporary sibling and rename so readers never see partial files.
void write_file_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open output file: " + tmp.string());
    f << content;
    if (!f.flush()) throw std::runtime_error("write failed: " + tmp.string());
  }
  fs::rename(tmp, target);
}

void emit(const std::optional<std::string>& out_path, const std::string& content) {
  if (out_path) {
    write_file_atomic(*out_path, content);
  } else {
    std::cout << content;
  }
}

struct CommonOpts {
  std::string format = "json";
  std::optional<std::string> out;
  double tol = 1e-14;
};

void add_common(CLI::App* cmd, CommonOpts& c) {
  cmd->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  cmd->add_option("--out", c.out, "Write output to this file (atomic rename)");
  cmd->add_option("--tol", c.tol, "Evaluation tolerance")->check(CLI::PositiveNumber);
}

json json_header(const std::string& command) {
  json j;
  j["schema_version"] = "1";
  j["command"] = command;
  return j;
}

void emit_json(const CommonOpts& c, const json& j) { emit(c.out, j.dump(2) + "\n"); }

// ---------- eval ----------

struct EvalArgs {
  CommonOpts common;
  double alpha = 1.0, beta = 1.0, re = 0.0, im = 0.0;
  int deriv = 0;
};

int run_eval(const EvalArgs& a) {
  const mlf::Params p(a.alpha, a.beta);
  json j = json_header("eval");
  j["alpha"] = a.alpha;
  j["beta"] = a.beta;
  j["z"] = {{"re", a.re}, {"im", a.im}};

  if (a.deriv > 0) {
    if (a.im != 0.0) {
      throw std::invalid_argument("--deriv requires a real argument (--im 0)");
    }
    const mlf::RealResult d = mlf::eval_derivative_r(p, a.re, a.deriv, a.common.tol);
    finite_or_throw(d.value, "derivative");
    j["derivative_order"] = a.deriv;
    j["value"] = {{"re", d.value}, {"im", 0.0}};
    j["abs_err_est"] = d.abs_err_est;
    j["method"] = "derivative_decomposition";
    if (a.common.format == "csv") {
      std::string csv = csv_row({"value_re", "value_im", "abs_err_est", "method"});
      csv += csv_row({fmt17(d.value), fmt17(0.0), fmt17(d.abs_err_est),
                      "derivative_decomposition"});
      emit(a.common.out, csv);
    } else {
      emit_json(a.common, j);
    }
    return kExitOk;
  }

  const mlf::EvalResult r = mlf::eval(p, mlf::complex(a.re, a.im), a.common.tol);
  finite_or_throw(r.value.real(), "value");
  finite_or_throw(r.value.imag(), "value");
  j["value"] = {{"re", r.value.real()}, {"im", r.value.imag()}};
  j["abs_err_est"] = r.abs_err_est;
  j["method"] = mlf::method_name(r.method);
  if (a.common.format == "csv") {
    std::string csv = csv_row({"value_re", "value_im", "abs_err_est", "method"});
    csv += csv_row({fmt17(r.value.real()), fmt17(r.value.imag()), fmt17(r.abs_err_est),
                    mlf::method_name(r.method)});
    emit(a.common.out, csv);
  } else {
    emit_json(a.common, j);
  }
  return kExitOk;
}

// ---------- h ----------

struct HArgs {
  CommonOpts common;
  double x = 1.0;
};

int run_h(const HArgs& a) {
  CommonOpts c = a.common;
  if (c.tol == 1e-14) c.tol = 1e-12;  // solver default
  const mlf::HSample s = mlf::solve_h(a.x, c.tol);
  const double hp = a.x > 0.0 ? mlf::h_prime(a.x, c.tol) : 0.0;
  json j = json_header("h");
  j["x"] = a.x;
  j["h"] = finite_or_throw(s.h, "h");
  j["residual"] = s.residual;
  j["h_prime"] = finite_or_throw(hp, "h_prime");
  std::vector<std::string> head{"x", "h", "residual", "h_prime"};
  std::vector<std::string> row{fmt17(a.x), fmt17(s.h), fmt17(s.residual), fmt17(hp)};
  if (a.x >= 2.0) {
    const double gap = mlf::asymptote_gap(a.x, c.tol);
    j["quadratic_profile_gap"] = finite_or_throw(gap, "gap");
    head.push_back("quadratic_profile_gap");
    row.push_back(fmt17(gap));
  }
  if (c.format == "csv") {
    emit(c.out, csv_row(head) + csv_row(row));
  } else {
    emit_json(c, j);
  }
  return kExitOk;
}

// ---------- zeros ----------

struct ZerosArgs {
  CommonOpts common;
  double alpha = 2.0, beta = 1.0;
  double xmin = -50.0, xmax = -1e-9;
  double step = 0.0;
  std::vector<double> rect;  // re_min re_max im_min im_max
};

int run_zeros(const ZerosArgs& a) {
  const mlf::Params p(a.alpha, a.beta);
  json j = json_header("zeros");
  j["alpha"] = a.alpha;
  j["beta"] = a.beta;

  const auto zs = mlf::real_zero_scan(p, a.xmin, a.xmax, a.step);
  json zlist = json::array();
  std::string csv = csv_row({"location", "half_width", "multiplicity"});
  for (const auto& z : zs) {
    zlist.push_back({{"location", z.location},
                     {"half_width", z.half_width},
                     {"multiplicity", z.multiplicity}});
    csv += csv_row({fmt17(z.location), fmt17(z.half_width), std::to_string(z.multiplicity)});
  }
  j["scan"] = {{"x_min", a.xmin}, {"x_max", a.xmax}};
  j["real_zeros"] = zlist;

  if (!a.rect.empty()) {
    if (a.rect.size() != 4) {
      throw std::invalid_argument("--rect needs four values: re_min re_max im_min im_max");
    }
    mlf::Rect r{a.rect[0], a.rect[1], a.rect[2], a.rect[3]};
    const double cx = 0.5 * (r.re_min + r.re_max), cy = 0.5 * (r.im_min + r.im_max);
    bool counted = false;
    for (int attempt = 0; attempt < 4 && !counted; ++attempt) {
      const double s = 1.0 + 0.013 * attempt;
      mlf::Rect rs{cx + (r.re_min - cx) * s, cx + (r.re_max - cx) * s,
                   cy + (r.im_min - cy) * s, cy + (r.im_max - cy) * s};
      try {
        const mlf::ZeroClassification cls = mlf::classify_zero_reality(p, rs, a.step);
        j["rect"] = {{"re_min", rs.re_min},
                     {"re_max", rs.re_max},
                     {"im_min", rs.im_min},
                     {"im_max", rs.im_max}};
        j["rect_count"] = cls.rect_count;
        j["nonreal_count"] = cls.nonreal_count;
        json rz = json::array();
        for (const auto& z : cls.real_zeros) {
          rz.push_back({{"location", z.location},
                        {"half_width", z.half_width},
                        {"multiplicity", z.multiplicity}});
        }
        j["rect_real_zeros"] = rz;
        counted = true;
      } catch (const mlf::ContourThroughZeroError&) {
        if (attempt == 3) throw;
      }
    }
  }

  if (a.common.format == "csv") {
    emit(a.common.out, csv);
  } else {
    emit_json(a.common, j);
  }
  return kExitOk;
}

// ---------- check ----------

struct CheckArgs {
  CommonOpts common;
  std::string kind = "le";
  double alpha = 1.0, beta = 1.0;
  std::string grid = "-10:10:41,-10:10:41";
};

mlf::GridSpec parse_grid(const std::string& s) {
  mlf::GridSpec g{};
  const auto bad = [&] {
    throw std::invalid_argument("grid must look like re_min:re_max:n_re,im_min:im_max:n_im");
  };
  const auto comma = s.find(',');
  if (comma == std::string::npos) bad();
  const auto parse_axis = [&](const std::string& part, double& lo, double& hi, int& n) {
    const auto c1 = part.find(':');
    const auto c2 = part.find(':', c1 == std::string::npos ? 0 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos) bad();
    try {
      std::size_t used = 0;
      lo = std::stod(part.substr(0, c1), &used);
      hi = std::stod(part.substr(c1 + 1, c2 - c1 - 1), &used);
      n = std::stoi(part.substr(c2 + 1), &used);
    } catch (const std::exception&) {
      bad();
    }
    if (n < 1 || !(lo <= hi)) bad();
  };
  parse_axis(s.substr(0, comma), g.re_min, g.re_max, g.n_re);
  parse_axis(s.substr(comma + 1), g.im_min, g.im_max, g.n_im);
  return g;
}

int run_check(const CheckArgs& a) {
  const mlf::Params p(a.alpha, a.beta);
  const mlf::GridSpec g = parse_grid(a.grid);

  std::vector<mlf::ViolationRecord> v;
  if (a.kind == "le") {
    v = mlf::check_le(p, g, a.common.tol);
  } else if (a.kind == "ge") {
    v = mlf::check_ge(p, g, a.common.tol);
  } else {
    v = mlf::check_two_sided(p, g, a.common.tol);
  }

  json j = json_header("check");
  j["kind"] = a.kind;
  j["alpha"] = a.alpha;
  j["beta"] = a.beta;
  j["grid"] = {{"re_min", g.re_min}, {"re_max", g.re_max}, {"n_re", g.n_re},
               {"im_min", g.im_min}, {"im_max", g.im_max}, {"n_im", g.n_im}};
  j["total_points"] = static_cast<long long>(g.n_re) * g.n_im;
  j["violation_count"] = v.size();
  json arr = json::array();
  std::string csv = csv_row({"z_re", "z_im", "lhs", "rhs", "margin"});
  for (const auto& r : v) {
    arr.push_back({{"z", {{"re", r.z.real()}, {"im", r.z.imag()}}},
                   {"lhs", r.lhs},
                   {"rhs", r.rhs},
                   {"margin", r.margin}});
    csv += csv_row({fmt17(r.z.real()), fmt17(r.z.imag()), fmt17(r.lhs), fmt17(r.rhs),
                    fmt17(r.margin)});
  }
  j["violations"] = arr;
  if (a.common.format == "csv") {
    emit(a.common.out, csv);
  } else {
    emit_json(a.common, j);
  }
  return kExitOk;
}

// ---------- cm ----------

struct CmArgs {
  CommonOpts common;
  double alpha = 1.0, beta = 1.0;
  std::string target = "e-minus-x";
  int order = 12;
  std::vector<double> points{0.05, 0.2, 1.0, 5.0, 20.0};
};

int run_cm(const CmArgs& a) {
  const mlf::Params p(a.alpha, a.beta);
  const mlf::CmTarget t =
      a.target == "e-minus-x" ? mlf::CmTarget::e_of_minus_x : mlf::CmTarget::reciprocal_e;
  const mlf::CmVerdict verdict = mlf::is_cm_sampled(p, t, a.points, a.order, a.common.tol);

  json j = json_header("cm");
  j["alpha"] = a.alpha;
  j["beta"] = a.beta;
  j["target"] = mlf::cm_target_name(t);
  j["order"] = a.order;
  j["points"] = a.points;
  j["pass"] = verdict.pass;
  j["numerical_doubt"] = verdict.numerical_doubt;
  if (verdict.first_failure) {
    j["first_failure"] = {{"x", verdict.first_failure->x},
                          {"order", verdict.first_failure->order},
                          {"value", verdict.first_failure->value}};
  }
  json terms = json::array();
  std::string csv = csv_row({"x", "order", "value", "abs_err_est", "numerical_doubt"});
  for (const double x : a.points) {
    const auto signs = mlf::cm_signs(p, t, x, a.order, a.common.tol);
    for (int n = 0; n < static_cast<int>(signs.size()); ++n) {
      const auto& s = signs[static_cast<std::size_t>(n)];
      terms.push_back({{"x", x},
                       {"order", n},
                       {"value", s.value},
                       {"abs_err_est", s.abs_err_est},
                       {"numerical_doubt", s.numerical_doubt}});
      csv += csv_row({fmt17(x), std::to_string(n), fmt17(s.value), fmt17(s.abs_err_est),
                      s.numerical_doubt ? "true" : "false"});
    }
  }
  j["signed_terms"] = terms;
  if (a.common.format == "csv") {
    emit(a.common.out, csv);
  } else {
    emit_json(a.common, j);
  }
  return kExitOk;
}

// ---------- figure ----------

struct FigureArgs {
  std::string which = "1";
  int resolution = 200;
  std::string out_base = "figure";
  double a_min = 0.1, a_max = 4.0, b_min = 0.0, b_max = 8.0;
};

std::string fmt6(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

// Shared lattice classification -> one CSV + one SVG per figure.
int run_figure(const FigureArgs& a) {
  const int n = a.resolution;
  if (n < 2) throw std::invalid_argument("--resolution must be >= 2");
  const auto samples = mlf::region_map(a.a_min, a.a_max, n, a.b_min, a.b_max, n);

  // CSV: one row per lattice point.
  std::string csv =
      csv_row({"alpha", "beta", "ineq_label", "additivity_label", "h_of_alpha"});
  for (const auto& s : samples) {
    csv += csv_row({fmt17(s.alpha), fmt17(s.beta), mlf::ineq_label_name(s.ineq),
                    mlf::additivity_label_name(s.additivity), fmt17(s.h)});
  }
  write_file_atomic(a.out_base + ".csv", csv);

  // SVG: colored cells per label group plus the h(alpha) curve.
  const double W = 600.0, H = 600.0, M = 40.0;
  const auto px = [&](double alpha) { return M + (alpha - a.a_min) / (a.a_max - a.a_min) * W; };
  const auto py = [&](double beta) { return M + (a.b_max - beta) / (a.b_max - a.b_min) * H; };
  const double cw = W / (n - 1), ch = H / (n - 1);

  struct Group {
    std::string name, cls, color;
    std::string cells;
  };
  std::vector<Group> groups;
  const bool fig1 = (a.which == "1");
  if (fig1) {
    groups = {{"superadditive", "proved", "#e6a23c", ""},
              {"subadditive", "proved", "#7fbf7f", ""},
              {"neither", "none", "#e8e8e8", ""}};
  } else {
    groups = {{"le_holds", "proved", "#e6a23c", ""},
              {"ge_holds", "proved", "#2e8b57", ""},
              {"ge_conjectured", "conjectured", "#9fd89f", ""},
              {"neither_conjectured", "conjectured", "#c9b8e8", ""},
              {"neither", "none", "#e8e8e8", ""}};
  }
  const auto group_index = [&](const mlf::RegionSample& s) -> std::size_t {
    if (fig1) {
      switch (s.additivity) {
        case mlf::AdditivityLabel::superadditive: return 0;
        case mlf::AdditivityLabel::subadditive: return 1;
        case mlf::AdditivityLabel::neither: return 2;
      }
    } else {
      switch (s.ineq) {
        case mlf::IneqLabel::le_holds: return 0;
        case mlf::IneqLabel::ge_holds: return 1;
        case mlf::IneqLabel::ge_conjectured: return 2;
        case mlf::IneqLabel::neither_conjectured: return 3;
        case mlf::IneqLabel::neither: return 4;
      }
    }
    return groups.size() - 1;
  };

  for (const auto& s : samples) {
    auto& g = groups[group_index(s)];
    g.cells += "<rect x=\"" + fmt6(px(s.alpha) - 0.5 * cw) + "\" y=\"" +
               fmt6(py(s.beta) - 0.5 * ch) + "\" width=\"" + fmt6(cw) + "\" height=\"" +
               fmt6(ch) + "\"/>";
    g.cells += "\n";
  }

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         fmt6(W + 2 * M) + "\" height=\"" + fmt6(H + 2 * M) + "\" viewBox=\"0 0 " +
         fmt6(W + 2 * M) + " " + fmt6(H + 2 * M) + "\">\n";
  svg += fig1 ? "<title>Additivity of x -> E(x^alpha) on the parameter plane</title>\n"
              : "<title>Modulus inequality regions on the parameter plane</title>\n";
  svg += "<rect x=\"0\" y=\"0\" width=\"" + fmt6(W + 2 * M) + "\" height=\"" +
         fmt6(H + 2 * M) + "\" fill=\"#ffffff\"/>\n";
  for (const auto& g : groups) {
    svg += "<g id=\"" + g.name + "\" class=\"" + g.cls + "\" fill=\"" + g.color + "\">\n";
    svg += g.cells;
    svg += "</g>\n";
  }

  // h(alpha) curve across the lattice columns (clipped to the beta window).
  std::string pts;
  for (int ia = 0; ia < n; ++ia) {
    const auto& s = samples[static_cast<std::size_t>(ia) * n];
    if (s.h >= a.b_min && s.h <= a.b_max) {
      pts += fmt6(px(s.alpha)) + "," + fmt6(py(s.h)) + " ";
    }
  }
  svg += "<polyline class=\"h-curve\" fill=\"none\" stroke=\"#1a1a1a\" stroke-width=\"1.5\" "
         "points=\"" + pts + "\"/>\n";
  svg += "<text x=\"" + fmt6(M + W / 2) + "\" y=\"" + fmt6(2 * M + H - 8) +
         "\" text-anchor=\"middle\" font-size=\"14\">alpha</text>\n";
  svg += "<text x=\"12\" y=\"" + fmt6(M + H / 2) +
         "\" text-anchor=\"middle\" font-size=\"14\" transform=\"rotate(-90 12 " +
         fmt6(M + H / 2) + ")\">beta</text>\n";
  svg += "</svg>\n";
  write_file_atomic(a.out_base + ".svg", svg);

  std::cout << "wrote " << a.out_base << ".csv and " << a.out_base << ".svg\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mittag-Leffler function toolkit: evaluation, zeros, inequalities"};
  app.require_subcommand(1);

  EvalArgs ea;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate E_{alpha,beta}(z) or a derivative");
  eval_cmd->add_option("--alpha", ea.alpha, "alpha > 0")->required();
  eval_cmd->add_option("--beta", ea.beta, "beta (real)")->required();
  eval_cmd->add_option("--re", ea.re, "Re z")->required();
  eval_cmd->add_option("--im", ea.im, "Im z")->capture_default_str();
  eval_cmd->add_option("--deriv", ea.deriv, "Derivative order (real x only)")
      ->check(CLI::Range(0, 64));
  add_common(eval_cmd, ea.common);

  HArgs ha;
  auto* h_cmd = app.add_subcommand("h", "Boundary curve h(alpha) and its slope");
  h_cmd->add_option("--x", ha.x, "Abscissa (>= 0)")->required();
  add_common(h_cmd, ha.common);

  ZerosArgs za;
  auto* z_cmd = app.add_subcommand("zeros", "Real-axis zero scan and rectangle counts");
  z_cmd->add_option("--alpha", za.alpha)->required();
  z_cmd->add_option("--beta", za.beta)->required();
  z_cmd->add_option("--xmin", za.xmin, "Scan lower end (< 0)")->capture_default_str();
  z_cmd->add_option("--xmax", za.xmax, "Scan upper end (<= 0)")->capture_default_str();
  z_cmd->add_option("--step", za.step, "Scan step override");
  z_cmd->add_option("--rect", za.rect, "re_min re_max im_min im_max")->expected(4);
  add_common(z_cmd, za.common);

  CheckArgs ca;
  auto* c_cmd = app.add_subcommand("check", "Modulus inequality check over a grid");
  c_cmd->add_option("--kind", ca.kind, "le, ge, or 2s")
      ->check(CLI::IsMember({"le", "ge", "2s"}))
      ->required();
  c_cmd->add_option("--alpha", ca.alpha)->required();
  c_cmd->add_option("--beta", ca.beta)->required();
  c_cmd->add_option("--grid", ca.grid, "re_min:re_max:n_re,im_min:im_max:n_im")
      ->capture_default_str();
  add_common(c_cmd, ca.common);

  CmArgs ma;
  auto* m_cmd = app.add_subcommand("cm", "Signed derivative (complete monotonicity) probe");
  m_cmd->add_option("--alpha", ma.alpha)->required();
  m_cmd->add_option("--beta", ma.beta)->required();
  m_cmd->add_option("--target", ma.target, "e-minus-x or reciprocal")
      ->check(CLI::IsMember({"e-minus-x", "reciprocal"}))
      ->capture_default_str();
  m_cmd->add_option("--order", ma.order, "Highest derivative order")->check(CLI::Range(0, 24));
  m_cmd->add_option("--points", ma.points, "Sample abscissas (> 0)")->expected(-1);
  add_common(m_cmd, ma.common);

  FigureArgs fa;
  auto* f_cmd = app.add_subcommand("figure", "Parameter-plane region figures (CSV + SVG)");
  f_cmd->add_option("--which", fa.which, "1 = additivity map, 2 = inequality map")
      ->check(CLI::IsMember({"1", "2"}))
      ->required();
  f_cmd->add_option("--resolution", fa.resolution, "Lattice points per axis")
      ->check(CLI::Range(2, 2000))
      ->capture_default_str();
  f_cmd->add_option("--out", fa.out_base, "Output basename (.csv/.svg appended)")
      ->capture_default_str();
  f_cmd->add_option("--alpha-min", fa.a_min)->capture_default_str();
  f_cmd->add_option("--alpha-max", fa.a_max)->capture_default_str();
  f_cmd->add_option("--beta-min", fa.b_min)->capture_default_str();
  f_cmd->add_option("--beta-max", fa.b_max)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*eval_cmd) return run_eval(ea);
    if (*h_cmd) return run_h(ha);
    if (*z_cmd) return run_zeros(za);
    if (*c_cmd) return run_check(ca);
    if (*m_cmd) return run_cm(ma);
    if (*f_cmd) return run_figure(fa);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error (invalid parameters): " << e.what() << "\n";
    return kExitUsage;
  } catch (const mlf::ContourThroughZeroError& e) {
    std::cerr << "error (contour through zero): " << e.what() << "\n";
    return kExitContour;
  } catch (const mlf::NonFiniteError& e) {
    std::cerr << "error (non-finite): " << e.what() << "\n";
    return kExitEvalFailure;
  } catch (const mlf::DomainTooSmallError& e) {
    std::cerr << "error (domain): " << e.what() << "\n";
    return kExitEvalFailure;
  } catch (const mlf::BracketFailureError& e) {
    std::cerr << "error (bracket failure): " << e.what() << "\n";
    return kExitEvalFailure;
  } catch (const mlf::NoConvergenceError& e) {
    std::cerr << "error (no convergence): " << e.what() << "\n";
    return kExitEvalFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitEvalFailure;
  }
  return kExitUsage;
}
