#include <doctest.h>

#include <algorithm>
#include <random>

#include "ahm/designs.hpp"
#include "ahm/json.hpp"
#include "oracles.hpp"

using namespace ahm;

namespace {

const std::vector<std::string> kI7{"xxyyyxy", "yxxyyyx", "xyxxyyy", "yxyxxyy", "yyxyxxy", "yyyxyxx", "xyyyxyx"};

const std::vector<std::string> kP11{"yxyxxxyyyxy", "yyxyxxxyyyx", "xyyxyxxxyyy", "yxyyxyxxxyy",
                                    "yyxyyxyxxxy", "yyyxyyxyxxx", "xyyyxyyxyxx", "xxyyyxyyxyx",
                                    "xxxyyyxyyxy", "yxxxyyyxyyx", "xyxxxyyyxyy"};

const std::vector<std::string> kI13{"xxxxyyyyyyyyy", "xyyyxxxyyyyyy", "xyyyyyyxxxyyy", "xyyyyyyyyyxxx",
                                    "yxyyyyxyxyyyx", "yxyyyxyyyxxyy", "yxyyxyyxyyyxy", "yyxyyyxxyyxyy",
                                    "yyxyxyyyyxyyx", "yyxyyxyyxyyxy", "yyyxyxyxyyyyx", "yyyxyyxyyxyxy",
                                    "yyyxxyyyxyxyy"};

SymbolicMatrix flipped(SymbolicMatrix m, std::size_t i, std::size_t j) {
  m[i][j] = m[i][j] == Symbol::X ? Symbol::Y : Symbol::X;
  return m;
}

}  // namespace

TEST_CASE("primes") {
  std::vector<unsigned> primes;
  for (unsigned n = 0; n < 60; ++n)
    if (is_prime(n)) primes.push_back(n);
  CHECK(primes == std::vector<unsigned>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59});
}

TEST_CASE("irreducibility agrees with brute-force factorization") {
  for (unsigned p : {2u, 3u, 5u})
    for (unsigned d = 1; d <= (p == 2 ? 6u : 3u); ++d)
      for (const auto& f : oracle::monic_polys(d, p)) REQUIRE(is_irreducible(f, p) == oracle::irreducible_by_products(f, p));
}

TEST_CASE("field construction") {
  const auto f2 = build_field(2, 1);
  CHECK(f2.order() == 2);
  CHECK(f2.mul(1, 1) == 1);
  CHECK(f2.add(1, 1) == 0);

  const auto f4 = build_field(2, 2);
  CHECK(f4.modulus() == std::vector<unsigned>{1, 1, 1});

  const auto f9 = build_field(3, 2);
  CHECK(f9.order() == 9);
  CHECK(f9.modulus() == std::vector<unsigned>{1, 0, 1});
  const FiniteField::Elem x = 3;  // the class of x
  CHECK(f9.pow(x, 8) == 1);
  // Some element has multiplicative order exactly 8.
  bool has_generator = false;
  for (FiniteField::Elem g = 1; g < 9; ++g) {
    unsigned order = 1;
    for (auto a = g; a != 1; a = f9.mul(a, g)) ++order;
    has_generator |= order == 8;
  }
  CHECK(has_generator);

  CHECK_THROWS_AS(build_field(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(build_field(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(build_field(2, 7), std::invalid_argument);
  CHECK_THROWS_AS(f9.inv(0), std::domain_error);
}

TEST_CASE("field moduli are the smallest irreducibles") {
  for (auto [p, k] : std::vector<std::pair<unsigned, unsigned>>{{2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 2}, {3, 3}, {5, 2}, {7, 2}}) {
    const auto f = build_field(p, k);
    REQUIRE(oracle::irreducible_by_products(f.modulus(), p));
    // Candidates are enumerated with c_0 as the least significant digit.
    for (const auto& g : oracle::monic_polys(k, p)) {
      if (g == f.modulus()) break;
      REQUIRE_FALSE(oracle::irreducible_by_products(g, p));
    }
  }
}

TEST_CASE("field axioms") {
  for (auto [p, k] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {2, 2}, {3, 1}, {2, 3}, {7, 1}, {3, 2}, {2, 4}}) {
    const auto f = build_field(p, k);
    const unsigned q = f.order();
    for (unsigned a = 0; a < q; ++a) {
      REQUIRE(f.add(a, f.neg(a)) == 0);
      REQUIRE(f.mul(a, 1) == a);
      if (a) REQUIRE(f.mul(a, f.inv(a)) == 1);
      if (a) REQUIRE(f.pow(a, q - 1) == 1);
      for (unsigned b = 0; b < q; ++b) {
        REQUIRE(f.add(a, b) == f.add(b, a));
        REQUIRE(f.mul(a, b) == f.mul(b, a));
        for (unsigned c = 0; c < q; ++c) {
          REQUIRE(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
          REQUIRE(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
          REQUIRE(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        }
      }
    }
  }
  std::mt19937_64 rng(61);
  for (auto [p, k] : std::vector<std::pair<unsigned, unsigned>>{{2, 5}, {5, 2}, {7, 2}, {2, 6}, {3, 3}}) {
    const auto f = build_field(p, k);
    std::uniform_int_distribution<unsigned> pick(0, f.order() - 1);
    for (int t = 0; t < 2000; ++t) {
      const unsigned a = pick(rng), b = pick(rng), c = pick(rng);
      REQUIRE(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      REQUIRE(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
      if (a) REQUIRE(f.mul(a, f.inv(a)) == 1);
    }
  }
  // Prime fields are the integers mod p.
  const auto f7 = build_field(7, 1);
  for (unsigned a = 0; a < 7; ++a)
    for (unsigned b = 0; b < 7; ++b) {
      CHECK(f7.add(a, b) == (a + b) % 7);
      CHECK(f7.mul(a, b) == (a * b) % 7);
    }
}

TEST_CASE("projective planes") {
  for (auto [p, k] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2}}) {
    const auto f = build_field(p, k);
    const unsigned q = f.order();
    const auto d = projective_plane(f);
    CHECK(d.v == q * q + q + 1);
    CHECK(d.k_blocksize == q + 1);
    CHECK(d.lambda == 1);
    CHECK(verify_bibd(d).valid);
    for (unsigned i = 0; i < d.v; ++i) {
      unsigned row = 0, col = 0;
      for (unsigned j = 0; j < d.v; ++j) {
        row += d.incidence[i][j];
        col += d.incidence[j][i];
      }
      CHECK(row == q + 1);
      CHECK(col == q + 1);
      for (unsigned i2 = i + 1; i2 < d.v; ++i2) {
        unsigned common = 0;
        for (unsigned j = 0; j < d.v; ++j) common += d.incidence[i][j] & d.incidence[i2][j];
        REQUIRE(common == 1);
      }
    }
    const auto pattern = design_to_pattern(d);
    CHECK(pattern.params == PatternParams{1, q, q * q - q});
    const long long a = pattern.params.a, b = pattern.params.b, c = pattern.params.c;
    CHECK(b * b - a * c == b);
    CHECK(b * (b - 1) == a * c);
  }
  CHECK_THROWS_AS(projective_plane(build_field(11, 1)), std::invalid_argument);
}

TEST_CASE("Fano plane") {
  const auto fano = projective_plane(build_field(2, 1));
  CHECK(fano.v == 7);
  CHECK(design_to_pattern(fano).params == PatternParams{1, 2, 2});

  auto broken = fano;
  broken.incidence[0][0] ^= 1;
  const auto check = verify_bibd(broken);
  CHECK_FALSE(check.valid);
  bool pair_reported = false;
  for (const auto& v : check.violations) pair_reported |= v.axiom == "pair-count" && v.pair.has_value();
  CHECK(pair_reported);
  CHECK_THROWS_AS(design_to_pattern(broken), PatternViolation);
}

TEST_CASE("Paley biplane") {
  const auto d = paley_biplane();
  CHECK(d.v == 11);
  CHECK(d.k_blocksize == 5);
  CHECK(d.lambda == 2);
  CHECK(verify_bibd(d).valid);
  for (unsigned x = 0; x < 11; ++x) {
    unsigned blocks = 0;
    for (unsigned b = 0; b < 11; ++b) blocks += d.incidence[b][x];
    CHECK(blocks == 5);
  }
  const std::vector<std::uint8_t> first{0, 1, 0, 1, 1, 1, 0, 0, 0, 1, 0};
  CHECK(d.incidence[0] == first);
  CHECK(design_to_pattern(d).params == PatternParams{2, 3, 3});
}

TEST_CASE("verify_bibd reports shape problems") {
  BlockDesign d;
  d.v = 3;
  d.k_blocksize = 2;
  d.lambda = 1;
  d.incidence = {{1, 1, 0}, {0, 1, 1}};
  CHECK_FALSE(verify_bibd(d).valid);
  CHECK(verify_bibd(d).violations.front().axiom == "size");
  d.incidence = {{1, 1, 0}, {0, 1, 1}, {1, 0, 2}};
  CHECK_FALSE(verify_bibd(d).valid);
  // The trivial (3, 2, 1) design: all 2-subsets of a 3-set.
  d.incidence = {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}};
  CHECK(verify_bibd(d).valid);
}

TEST_CASE("displayed patterns") {
  const auto i7 = parse_symbolic(kI7);
  CHECK(is_pattern(i7, {1, 2, 2}));
  CHECK_FALSE(is_pattern(i7, {2, 1, 3}));
  CHECK_FALSE(is_pattern(flipped(i7, 3, 4), {1, 2, 2}));
  CHECK(is_pattern(parse_symbolic(kP11), {2, 3, 3}));
  CHECK(is_pattern(parse_symbolic(kI13), {1, 3, 6}));

  const auto all_x = parse_symbolic({"xxx", "XXX", "xxx"});
  CHECK(is_pattern(all_x, {3, 0, 0}));
  CHECK_FALSE(is_pattern(all_x, {1, 1, 0}));
  CHECK_THROWS_AS(parse_symbolic({"xy", "xz"}), std::invalid_argument);
  CHECK_THROWS_AS(parse_symbolic({"xy", "x"}), std::invalid_argument);
}

TEST_CASE("pattern counts do not depend on the row order") {
  std::mt19937_64 rng(71);
  const auto base = parse_symbolic(kP11);
  for (int t = 0; t < 50; ++t) {
    auto m = base;
    std::shuffle(m.begin(), m.end(), rng);
    CHECK(is_pattern(m, {2, 3, 3}));
    auto r = m;
    std::reverse(r.begin(), r.end());
    CHECK(is_pattern(r, {2, 3, 3}) == is_pattern(m, {2, 3, 3}));
    const auto f = flipped(m, t % 11, (t * 7) % 11);
    auto fr = f;
    std::reverse(fr.begin(), fr.end());
    CHECK(is_pattern(f, {2, 3, 3}) == is_pattern(fr, {2, 3, 3}));
  }
}

TEST_CASE("design JSON and bit rows") {
  const auto fano = projective_plane(build_field(2, 1));
  const Json j = to_json(fano);
  CHECK(j["v"] == 7);
  CHECK(j["k"] == 3);
  CHECK(j["lambda"] == 1);
  const auto back = design_from_json(j);
  CHECK(back.incidence == fano.incidence);
  const auto rows = design_bitrows(fano);
  CHECK(std::count(rows.begin(), rows.end(), '\n') == 7);
  CHECK(std::count(rows.begin(), rows.end(), '1') == 21);
}
