#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "ahm/catalog.hpp"
#include "ahm/circulant.hpp"
#include "ahm/designs.hpp"
#include "ahm/io.hpp"
#include "ahm/json.hpp"
#include "ahm/linalg.hpp"
#include "ahm/optimizer.hpp"
#include "ahm/two_entry.hpp"
#include "ahm/verify.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kVerdictFail = 1;
constexpr int kUsage = 2;
constexpr int kIo = 3;

class UnknownName : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::uint64_t base_seed() {
  const char* env = std::getenv("AHM_SEED");
  if (env == nullptr || *env == '\0') return ahm::kDefaultBaseSeed;
  try {
    std::size_t used = 0;
    const auto seed = std::stoull(env, &used);
    if (used != std::string(env).size()) throw std::invalid_argument("trailing characters");
    return seed;
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string("AHM_SEED must be an unsigned integer, got '") + env + "'");
  }
}

void emit_matrix(const ahm::SquareMatrix& m, const std::string& out) {
  if (out.empty() || out == "-")
    ahm::write_matrix(std::cout, m);
  else
    ahm::save_matrix(out, m);
}

void emit_text(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream os(out);
  if (!os) throw ahm::IoError("cannot open '" + out + "' for writing");
  os << text;
  if (!os) throw ahm::IoError("write to '" + out + "' failed");
}

ahm::BlockDesign load_design(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ahm::IoError("cannot open '" + path + "'");
  ahm::Json j;
  try {
    j = ahm::Json::parse(is);
  } catch (const ahm::Json::parse_error& e) {
    throw ahm::ParseError(path + ": " + e.what());
  }
  return ahm::design_from_json(j);
}

ahm::SquareMatrix construct(const std::string& name) {
  try {
    return ahm::construct_named(name);
  } catch (const std::invalid_argument& e) {
    std::ostringstream os;
    os << e.what() << "\nknown names:";
    for (const auto& n : ahm::known_names()) os << ' ' << n;
    throw UnknownName(os.str());
  }
}

ahm::Json circulant_json(const ahm::CirculantAhmResult& r, std::size_t n) {
  const auto& d = r.diagnostics;
  ahm::Json nu = ahm::Json::array();
  for (const auto& v : d.nu) nu.push_back(v.real());
  return {{"n", n},
          {"verdict", ahm::to_string(r.verdict)},
          {"alpha_modulus_residual", d.alpha_modulus_residual},
          {"rho_symmetry_residual", d.rho_symmetry_residual},
          {"nu_symmetry_residual", d.nu_symmetry_residual},
          {"nu_imag_max", d.nu_imag_max},
          {"min_re_nu", d.min_re_nu},
          {"nu", nu}};
}

void print_table(const std::vector<ahm::Table1Row>& rows) {
  std::cout << std::left << std::setw(4) << "N" << std::setw(24) << "name" << std::setw(14) << "formula"
            << std::right << std::setw(10) << "norm" << std::setw(10) << "N^1.5" << "  " << std::left
            << std::setw(16) << "verdict" << "remarks\n";
  std::cout << std::fixed << std::setprecision(3);
  for (const auto& r : rows)
    std::cout << std::left << std::setw(4) << r.n << std::setw(24) << r.name << std::setw(14) << r.formula
              << std::right << std::setw(10) << r.norm << std::setw(10) << r.bound << "  " << std::left
              << std::setw(16) << r.verdict << r.remarks << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Construct, verify and optimize almost Hadamard matrices"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");

  int code = kOk;

  // construct
  std::string construct_name, construct_out;
  auto* construct_cmd = app.add_subcommand("construct", "Write a named matrix H in AHM-MAT v1 format");
  construct_cmd->add_option("name", construct_name, "Catalog name or family (K5, L7, I4, W3, K3xH2, ...)")
      ->required();
  construct_cmd->add_option("-o,--output", construct_out, "Output file (default stdout)");

  // check
  std::string check_file;
  double check_tol = ahm::kDefaultTol;
  auto* check_cmd = app.add_subcommand("check", "Print the almost Hadamard report of H as JSON");
  check_cmd->add_option("file", check_file, "AHM-MAT file")->required();
  check_cmd->add_option("--tol", check_tol, "Relative tolerance")->check(CLI::PositiveNumber);

  // norm
  std::string norm_file;
  double norm_p = 1.0;
  bool norm_raw = false;
  auto* norm_cmd = app.add_subcommand("norm", "Entrywise p-norm of U = H/sqrt(N)");
  norm_cmd->add_option("file", norm_file, "AHM-MAT file")->required();
  norm_cmd->add_option("--p", norm_p, "Exponent (>= 1, or inf)");
  norm_cmd->add_flag("--raw", norm_raw, "Use H itself instead of H/sqrt(N)");

  // circulant
  auto* circ_cmd = app.add_subcommand("circulant", "Circulant matrices");
  circ_cmd->require_subcommand(1);
  std::string circ_check_file;
  auto* circ_check = circ_cmd->add_subcommand("check", "Circulant almost Hadamard test of a circulant H");
  circ_check->add_option("file", circ_check_file, "AHM-MAT file")->required();
  std::size_t build_l_n = 0;
  std::string build_l_out;
  bool build_l_json = false;
  auto* build_l = circ_cmd->add_subcommand("build-L", "Write the circulant L_N (odd N)");
  build_l->add_option("N", build_l_n, "Order")->required();
  build_l->add_option("-o,--output", build_l_out, "Output file (default stdout)");
  build_l->add_flag("--json", build_l_json, "Print gamma and alpha as JSON instead of the matrix");
  std::size_t search_n = 0;
  auto* search = circ_cmd->add_subcommand("search", "All +-1 first rows giving a circulant Hadamard matrix");
  search->add_option("N", search_n, "Order")->required();

  // design
  auto* design_cmd = app.add_subcommand("design", "Symmetric block designs");
  design_cmd->require_subcommand(1);
  std::string design_format = "json";
  const auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", design_format, "json or bitrows")->check(CLI::IsMember({"json", "bitrows"}));
  };
  unsigned plane_p = 0, plane_k = 0;
  auto* plane = design_cmd->add_subcommand("plane", "Projective plane over GF(p^k)");
  plane->add_option("p", plane_p, "Characteristic")->required();
  plane->add_option("k", plane_k, "Degree")->required();
  add_format(plane);
  auto* paley = design_cmd->add_subcommand("paley", "The (11,5,2) biplane");
  add_format(paley);
  std::string verify_file;
  auto* verify = design_cmd->add_subcommand("verify", "Check the symmetric design axioms of a JSON design");
  verify->add_option("file", verify_file, "Design JSON file")->required();

  // optimize
  std::size_t opt_n = 0, opt_seeds = 20, opt_iters = 100000, opt_hops = ahm::AscentConfig{}.hops;
  unsigned opt_threads = 0;
  std::string opt_trace, opt_out;
  auto* opt_cmd = app.add_subcommand("optimize", "Multistart ascent of the 1-norm on O(N)");
  opt_cmd->add_option("N", opt_n, "Order")->required()->check(CLI::PositiveNumber);
  opt_cmd->add_option("--seeds", opt_seeds, "Number of seeds")->check(CLI::PositiveNumber);
  opt_cmd->add_option("--iters", opt_iters, "Gradient evaluations per ascent")->check(CLI::PositiveNumber);
  opt_cmd->add_option("--hops", opt_hops, "Basin hops per seed");
  opt_cmd->add_option("--threads", opt_threads, "Worker threads (0 = all cores)");
  opt_cmd->add_option("--trace", opt_trace, "Write the best run's norm sequence as CSV");
  opt_cmd->add_option("-o,--output", opt_out, "Write the best U as AHM-MAT");

  // table1
  std::string table_csv;
  std::size_t table_seeds = ahm::Table1Options{}.n9_seeds;
  auto* table_cmd = app.add_subcommand("table1", "Reproduce the table of large 1-norms for N = 2..13");
  table_cmd->add_option("--csv", table_csv, "Also write the table as CSV");
  table_cmd->add_option("--seeds", table_seeds, "Optimizer seeds for N = 9 (0 skips the row)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*construct_cmd) {
      emit_matrix(construct(construct_name), construct_out);
    } else if (*check_cmd) {
      const auto rep = ahm::check_ahm(ahm::load_matrix(check_file), check_tol);
      std::cout << ahm::to_json(rep).dump(2) << '\n';
      code = ahm::is_pass(rep.verdict) ? kOk : kVerdictFail;
    } else if (*norm_cmd) {
      auto m = ahm::load_matrix(norm_file);
      if (!norm_raw) m = (1.0 / std::sqrt(static_cast<double>(m.size()))) * m;
      std::cout << std::setprecision(17) << ahm::p_norm(m, norm_p) << '\n';
    } else if (*circ_check) {
      const auto h = ahm::load_matrix(circ_check_file);
      if (!ahm::is_fourier_diagonal(h, 1e-9 * (1.0 + h.max_abs()))) {
        std::cerr << "error: " << circ_check_file << " is not circulant\n";
        return kVerdictFail;
      }
      const auto row = h.row(0);
      const auto r = ahm::circulant_ahm_check(row);
      std::cout << circulant_json(r, h.size()).dump(2) << '\n';
      code = ahm::is_pass(r.verdict) ? kOk : kVerdictFail;
    } else if (*build_l) {
      const auto spec = ahm::construct_L(build_l_n);
      if (build_l_json)
        emit_text(ahm::to_json(spec).dump(2) + "\n", build_l_out);
      else
        emit_matrix(ahm::circulant_from_gamma(spec.gamma), build_l_out);
    } else if (*search) {
      for (const auto& g : ahm::search_circulant_hadamard(search_n)) {
        for (std::size_t i = 0; i < g.size(); ++i) std::cout << (i ? " " : "") << g[i];
        std::cout << '\n';
      }
    } else if (*plane || *paley) {
      const auto d = *plane ? ahm::projective_plane(ahm::build_field(plane_p, plane_k)) : ahm::paley_biplane();
      if (design_format == "bitrows")
        std::cout << ahm::design_bitrows(d);
      else
        std::cout << ahm::to_json(d).dump() << '\n';
    } else if (*verify) {
      const auto check = ahm::verify_bibd(load_design(verify_file));
      ahm::Json violations = ahm::Json::array();
      for (const auto& v : check.violations) {
        ahm::Json item{{"axiom", v.axiom}, {"detail", v.detail}};
        if (v.pair) item["pair"] = {v.pair->first, v.pair->second};
        if (v.axiom == "pair-count") item["observed"] = v.observed;
        violations.push_back(item);
      }
      std::cout << ahm::Json{{"valid", check.valid}, {"violations", violations}}.dump(2) << '\n';
      code = check.valid ? kOk : kVerdictFail;
    } else if (*opt_cmd) {
      ahm::AscentConfig cfg;
      cfg.seed = base_seed();
      cfg.max_iters = opt_iters;
      cfg.hops = opt_hops;
      const auto r = ahm::multistart(opt_n, opt_seeds, cfg, opt_threads);
      std::cout << ahm::to_json(r).dump(2) << '\n';
      if (!opt_trace.empty()) {
        std::ostringstream os;
        os << "step,one_norm\n" << std::setprecision(17);
        for (std::size_t i = 0; i < r.trace.size(); ++i) os << i << ',' << r.trace[i] << '\n';
        emit_text(os.str(), opt_trace);
      }
      if (!opt_out.empty()) ahm::save_matrix(opt_out, r.U_final);
      code = ahm::is_pass(r.report.verdict) ? kOk : kVerdictFail;
    } else if (*table_cmd) {
      ahm::Table1Options opts;
      opts.n9_seeds = table_seeds;
      opts.base_seed = base_seed();
      const auto rows = ahm::table1(opts);
      print_table(rows);
      if (!table_csv.empty()) emit_text(ahm::table1_csv(rows), table_csv);
    }
  } catch (const UnknownName& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ahm::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const ahm::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kVerdictFail;
  }
  return code;
}
