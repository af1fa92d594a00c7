#include "ahm/json.hpp"

#include <cmath>

#include "ahm/io.hpp"

namespace ahm {

namespace {

Json number_or_null(double v) { return std::isnan(v) ? Json(nullptr) : Json(v); }

}  // namespace

Json to_json(const AhmReport& r) {
  return Json{{"n", r.n},
              {"orthogonality_residual", r.orthogonality_residual},
              {"has_zero_entry", r.has_zero_entry},
              {"sut_min_eigenvalue", number_or_null(r.sut_min_eigenvalue)},
              {"sut_asymmetry", number_or_null(r.sut_asymmetry)},
              {"one_norm_of_U", r.one_norm_of_U},
              {"cauchy_schwarz_gap", r.cauchy_schwarz_gap},
              {"verdict", std::string(to_string(r.verdict))}};
}

Json to_json(const CirculantSpec& c) {
  Json alpha = Json::array();
  for (const auto& a : c.alpha) alpha.push_back({a.real(), a.imag()});
  return Json{{"n", c.n}, {"gamma", c.gamma}, {"alpha", alpha}};
}

Json to_json(const BlockDesign& d) {
  Json rows = Json::array();
  for (const auto& block : d.incidence) {
    Json row = Json::array();
    for (auto x : block) row.push_back(static_cast<int>(x));
    rows.push_back(std::move(row));
  }
  return Json{{"v", d.v}, {"k", d.k_blocksize}, {"lambda", d.lambda}, {"incidence", rows}};
}

Json to_json(const TwoEntrySolution& s) {
  return Json{{"a", s.params.a},
              {"b", s.params.b},
              {"c", s.params.c},
              {"n", s.params.n()},
              {"branch", std::string(to_string(s.branch))},
              {"t", s.t},
              {"x", s.x},
              {"y", s.y}};
}

Json to_json(const AscentResult& r) {
  Json j{{"seed", r.seed},
         {"iters", r.iters},
         {"one_norm", r.one_norm},
         {"converged", r.converged},
         {"verdict", std::string(to_string(r.report.verdict))},
         {"n", r.U_final.size()}};
  return j;
}

BlockDesign design_from_json(const Json& j) {
  try {
    BlockDesign d;
    d.v = j.at("v").get<unsigned>();
    d.k_blocksize = j.at("k").get<unsigned>();
    d.lambda = j.at("lambda").get<unsigned>();
    for (const auto& row : j.at("incidence")) {
      std::vector<std::uint8_t> block;
      for (const auto& x : row) {
        const int bit = x.get<int>();
        if (bit != 0 && bit != 1) throw ParseError("incidence entries must be 0 or 1");
        block.push_back(static_cast<std::uint8_t>(bit));
      }
      d.incidence.push_back(std::move(block));
    }
    return d;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed design JSON: ") + e.what());
  }
}

std::string design_bitrows(const BlockDesign& d) {
  std::string out;
  for (const auto& block : d.incidence) {
    for (auto x : block) out += x ? '1' : '0';
    out += '\n';
  }
  return out;
}

}  // namespace ahm
