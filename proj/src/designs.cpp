#include <array>
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>

#include "ahm/designs.hpp"

namespace ahm {

namespace {

constexpr unsigned kPlaneBudget = 9;
constexpr std::size_t kMaxReportedViolations = 16;

using Triple = std::array<FiniteField::Elem, 3>;

std::vector<Triple> projective_points(const FiniteField& f) {
  const unsigned q = f.order();
  std::vector<Triple> pts;
  for (unsigned a = 0; a < q; ++a)
    for (unsigned b = 0; b < q; ++b)
      for (unsigned c = 0; c < q; ++c) {
        const Triple t{a, b, c};
        unsigned lead = 0;
        for (auto x : t) {
          if (x != 0) {
            lead = x;
            break;
          }
        }
        if (lead == 1) pts.push_back(t);
      }
  return pts;
}

}  // namespace

BibdCheck verify_bibd(const BlockDesign& d) {
  BibdCheck out{true, {}};
  auto report = [&](BibdViolation v) {
    out.valid = false;
    if (out.violations.size() < kMaxReportedViolations) out.violations.push_back(std::move(v));
  };

  if (d.incidence.size() != d.v) {
    report({"size", "expected " + std::to_string(d.v) + " blocks, found " + std::to_string(d.incidence.size()), {}, 0});
    return out;
  }
  for (unsigned b = 0; b < d.v; ++b) {
    if (d.incidence[b].size() != d.v) {
      report({"size", "block " + std::to_string(b) + " has " + std::to_string(d.incidence[b].size()) +
                          " columns, expected " + std::to_string(d.v), {}, 0});
      return out;
    }
  }
  for (unsigned b = 0; b < d.v; ++b) {
    unsigned count = 0;
    for (unsigned x = 0; x < d.v; ++x) {
      const auto e = d.incidence[b][x];
      if (e > 1) report({"binary", "entry (" + std::to_string(b) + ", " + std::to_string(x) + ") is not 0/1", {}, e});
      count += e == 1;
    }
    if (count != d.k_blocksize) {
      report({"block-size", "block " + std::to_string(b) + " has " + std::to_string(count) + " points, expected " +
                                std::to_string(d.k_blocksize), {}, count});
    }
  }
  for (unsigned x = 0; x < d.v; ++x) {
    for (unsigned y = x + 1; y < d.v; ++y) {
      unsigned joint = 0;
      for (unsigned b = 0; b < d.v; ++b) joint += (d.incidence[b][x] == 1 && d.incidence[b][y] == 1);
      if (joint != d.lambda) {
        report({"pair-count",
                "points " + std::to_string(x) + " and " + std::to_string(y) + " share " + std::to_string(joint) +
                    " blocks, expected " + std::to_string(d.lambda),
                std::make_pair(x, y), joint});
      }
    }
  }
  return out;
}

BlockDesign projective_plane(const FiniteField& field) {
  const unsigned q = field.order();
  if (q > kPlaneBudget) {
    throw std::invalid_argument("projective plane limited to q <= " + std::to_string(kPlaneBudget) + ", got " +
                                std::to_string(q));
  }
  const auto pts = projective_points(field);
  const auto& lines = pts;
  BlockDesign d;
  d.v = static_cast<unsigned>(pts.size());
  d.k_blocksize = q + 1;
  d.lambda = 1;
  d.incidence.assign(d.v, std::vector<std::uint8_t>(d.v, 0));
  for (unsigned l = 0; l < d.v; ++l) {
    for (unsigned x = 0; x < d.v; ++x) {
      FiniteField::Elem dot = 0;
      for (int i = 0; i < 3; ++i) dot = field.add(dot, field.mul(lines[l][i], pts[x][i]));
      d.incidence[l][x] = dot == 0 ? 1 : 0;
    }
  }
  return d;
}

BlockDesign paley_biplane() {
  constexpr unsigned v = 11;
  std::array<bool, v> residue{};
  for (unsigned r = 1; r < v; ++r) residue[(r * r) % v] = true;
  BlockDesign d;
  d.v = v;
  d.k_blocksize = 5;
  d.lambda = 2;
  d.incidence.assign(v, std::vector<std::uint8_t>(v, 0));
  for (unsigned b = 0; b < v; ++b)
    for (unsigned x = 0; x < v; ++x) d.incidence[b][x] = residue[(x + v - b) % v] ? 1 : 0;
  return d;
}

bool is_pattern(const SymbolicMatrix& m, const PatternParams& params) {
  const std::size_t n = m.size();
  if (n != params.n()) return false;
  for (const auto& row : m)
    if (row.size() != n) return false;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      unsigned xx = 0, xy = 0, yx = 0, yy = 0;
      for (std::size_t col = 0; col < n; ++col) {
        const bool top = m[i][col] == Symbol::X;
        const bool bottom = m[j][col] == Symbol::X;
        if (top && bottom) ++xx;
        else if (top) ++xy;
        else if (bottom) ++yx;
        else ++yy;
      }
      if (xx != params.a || xy != params.b || yx != params.b || yy != params.c) return false;
    }
  }
  return true;
}

DesignPattern design_to_pattern(const BlockDesign& d) {
  if (d.k_blocksize < d.lambda || d.v + d.lambda < 2 * d.k_blocksize) {
    throw PatternViolation("design parameters (" + std::to_string(d.v) + ", " + std::to_string(d.k_blocksize) + ", " +
                           std::to_string(d.lambda) + ") give negative pattern counts");
  }
  DesignPattern out;
  out.params.a = d.lambda;
  out.params.b = d.k_blocksize - d.lambda;
  out.params.c = d.v - d.k_blocksize - out.params.b;
  out.symbolic.assign(d.incidence.size(), {});
  for (std::size_t r = 0; r < d.incidence.size(); ++r) {
    out.symbolic[r].reserve(d.incidence[r].size());
    for (auto e : d.incidence[r]) out.symbolic[r].push_back(e ? Symbol::X : Symbol::Y);
  }
  if (!is_pattern(out.symbolic, out.params)) {
    std::ostringstream os;
    os << "incidence matrix is not an (" << out.params.a << ", " << out.params.b << ", " << out.params.c
       << ") pattern";
    throw PatternViolation(os.str());
  }
  return out;
}

SymbolicMatrix parse_symbolic(const std::vector<std::string>& rows) {
  SymbolicMatrix m;
  m.reserve(rows.size());
  for (const auto& r : rows) {
    std::vector<Symbol> row;
    for (char ch : r) {
      const char c = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
      if (c == 'x') row.push_back(Symbol::X);
      else if (c == 'y') row.push_back(Symbol::Y);
      else if (!std::isspace(static_cast<unsigned char>(ch)))
        throw std::invalid_argument(std::string("unexpected symbol '") + ch + "'");
    }
    if (row.size() != rows.size())
      throw std::invalid_argument("symbolic matrix must be square: row of length " + std::to_string(row.size()) +
                                  " in a matrix with " + std::to_string(rows.size()) + " rows");
    m.push_back(std::move(row));
  }
  return m;
}

}  // namespace ahm
