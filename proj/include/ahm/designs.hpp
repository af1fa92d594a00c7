#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ahm {

inline constexpr unsigned kFieldBudget = 64;

/// GF(p^k). Elements are integers 0..q-1 encoding coefficient vectors over F_p,
/// element e = sum_i c_i p^i standing for c_0 + c_1 x + ... + c_{k-1} x^{k-1}.
/// Arithmetic goes through full tables built at construction, so the object is
/// immutable and cheap to share.
class FiniteField {
 public:
  using Elem = std::uint32_t;

  /// Uses the smallest monic irreducible of degree k, ordering candidates by
  /// (c_{k-1}, ..., c_0) lexicographically. Requires p prime, k >= 1, p^k <= 64.
  FiniteField(unsigned p, unsigned k);

  unsigned characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return k_; }
  unsigned order() const noexcept { return q_; }
  /// Monic modulus, coefficients c_0..c_k (c_k = 1).
  const std::vector<unsigned>& modulus() const noexcept { return modulus_; }

  Elem add(Elem a, Elem b) const { return add_[a * q_ + b]; }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem mul(Elem a, Elem b) const { return mul_[a * q_ + b]; }
  /// Throws std::domain_error for 0.
  Elem inv(Elem a) const;
  Elem pow(Elem a, unsigned long long e) const;

  std::string to_string(Elem a) const;

 private:
  unsigned p_;
  unsigned k_;
  unsigned q_;
  std::vector<unsigned> modulus_;
  std::vector<Elem> add_;
  std::vector<Elem> mul_;
  std::vector<Elem> neg_;
  std::vector<Elem> inv_;
};

FiniteField build_field(unsigned p, unsigned k);

bool is_prime(unsigned n);

/// Irreducibility over F_p of the monic polynomial with coefficients c_0..c_d,
/// by trial division with every monic polynomial of degree 1..d/2.
bool is_irreducible(const std::vector<unsigned>& monic_coeffs, unsigned p);

/// Symmetric (v, k, lambda) design. incidence[b][x] = 1 iff point x lies in block b.
struct BlockDesign {
  unsigned v = 0;
  unsigned k_blocksize = 0;
  unsigned lambda = 0;
  std::vector<std::vector<std::uint8_t>> incidence;
};

struct BibdViolation {
  std::string axiom;  // "size", "block-size", "pair-count" or "binary"
  std::string detail;
  // For pair-count: the two point columns and their joint count.
  std::optional<std::pair<unsigned, unsigned>> pair;
  unsigned observed = 0;
};

struct BibdCheck {
  bool valid;
  std::vector<BibdViolation> violations;
};

/// Exhaustive check of the three symmetric-BIBD axioms. O(v^3).
BibdCheck verify_bibd(const BlockDesign& d);

/// Point-line incidence of the projective plane over F_q, q <= 9. Points and
/// lines are nonzero triples with first nonzero coordinate 1, in lexicographic
/// order of their coordinates; x lies on line l iff l . x = 0.
BlockDesign projective_plane(const FiniteField& field);

/// The (11,5,2) biplane: blocks are translates mod 11 of the quadratic residues {1,3,4,5,9}.
BlockDesign paley_biplane();

class PatternViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PatternParams {
  unsigned a = 0;
  unsigned b = 0;
  unsigned c = 0;
  unsigned n() const noexcept { return a + 2 * b + c; }
  bool operator==(const PatternParams&) const = default;
};

enum class Symbol : std::uint8_t { X, Y };

using SymbolicMatrix = std::vector<std::vector<Symbol>>;

struct DesignPattern {
  PatternParams params;
  SymbolicMatrix symbolic;  // X where incidence is 1, Y where 0
};

/// A (v, a+b, a) design is an (a, b, c) pattern with a = lambda, b = k - lambda,
/// c = v - k - b. Throws PatternViolation if the rows do not meet the counts.
DesignPattern design_to_pattern(const BlockDesign& d);

/// For every ordered pair of distinct rows, the number of (x,x), (x,y), (y,x),
/// (y,y) column alignments must be a, b, b, c.
bool is_pattern(const SymbolicMatrix& m, const PatternParams& params);

/// Parses rows like "xxyyyxy" (case-insensitive) into a square symbolic matrix.
SymbolicMatrix parse_symbolic(const std::vector<std::string>& rows);

}  // namespace ahm
