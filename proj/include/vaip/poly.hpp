#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "vaip/diagram.hpp"

namespace vaip {

using Int = std::int64_t;

// Overflow is reported as std::overflow_error, never wrapped.
Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);
Int checked_neg(Int a);

/// constant + sum_k coeffs[k] * X_k, where X_k is the uppercase starting
/// label of component k (A for k = 0, B for k = 1, ...). Zero coefficients
/// are never stored.
class AffineExponent {
 public:
  AffineExponent() = default;
  explicit AffineExponent(Int constant) : constant_(constant) {}
  static AffineExponent symbol(int index, Int coeff = 1);

  Int constant() const { return constant_; }
  const std::map<int, Int>& coeffs() const { return coeffs_; }
  Int coeff(int index) const;

  bool is_constant() const { return coeffs_.empty(); }
  bool is_zero() const { return coeffs_.empty() && constant_ == 0; }

  AffineExponent& operator+=(const AffineExponent& other);
  AffineExponent& operator-=(const AffineExponent& other);
  AffineExponent& add_constant(Int k);
  AffineExponent& add_symbol(int index, Int coeff);

  friend AffineExponent operator+(AffineExponent a, const AffineExponent& b) {
    return a += b;
  }
  friend AffineExponent operator-(AffineExponent a, const AffineExponent& b) {
    return a -= b;
  }
  friend AffineExponent operator-(const AffineExponent& a);
  friend AffineExponent operator*(Int k, const AffineExponent& a);

  friend bool operator==(const AffineExponent&, const AffineExponent&) = default;

 private:
  Int constant_ = 0;
  std::map<int, Int> coeffs_;
};

AffineExponent add(const AffineExponent& e, const AffineExponent& f);
AffineExponent negate(const AffineExponent& e);
/// Substitutes X_index := X_index + k.
AffineExponent shift_symbol(const AffineExponent& e, int index, Int k);
/// Substitutes X_index := replacement.
AffineExponent substitute(const AffineExponent& e, int index,
                          const AffineExponent& replacement);

/// Canonical exponent order: coefficient vectors compared lexicographically
/// by symbol index (missing entries are zero), then constants descending.
/// Returns <0, 0 or >0.
int compare(const AffineExponent& a, const AffineExponent& b);

struct MVTerm {
  int var = 0;  // 0-based; rendered t1, t2, ...
  AffineExponent exponent;
  Int coeff = 0;

  friend bool operator==(const MVTerm&, const MVTerm&) = default;
};

/// Finite sum of coeff * t_var^exponent plus an integer constant, kept in
/// canonical form: one entry per (var, exponent), no zero coefficients,
/// t^0 folded into the constant.
class MVPolynomial {
 public:
  MVPolynomial() = default;
  explicit MVPolynomial(Int constant) : constant_(constant) {}

  void add_term(int var, const AffineExponent& exponent, Int coeff);
  void add_constant(Int k);

  Int constant() const { return constant_; }
  /// Terms in canonical order.
  std::vector<MVTerm> terms() const;
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty() && constant_ == 0; }
  Int coeff(int var, const AffineExponent& exponent) const;

  MVPolynomial& operator+=(const MVPolynomial& other);
  friend MVPolynomial operator+(MVPolynomial a, const MVPolynomial& b) {
    return a += b;
  }
  friend MVPolynomial operator-(const MVPolynomial& p);
  friend MVPolynomial operator-(const MVPolynomial& a, const MVPolynomial& b) {
    return a + (-b);
  }
  friend MVPolynomial operator*(Int k, const MVPolynomial& p);

  friend bool operator==(const MVPolynomial& a, const MVPolynomial& b) {
    return a.constant_ == b.constant_ && a.terms_ == b.terms_;
  }

 private:
  struct KeyLess {
    bool operator()(const std::pair<int, AffineExponent>& a,
                    const std::pair<int, AffineExponent>& b) const;
  };
  std::map<std::pair<int, AffineExponent>, Int, KeyLess> terms_;
  Int constant_ = 0;
};

MVPolynomial poly_add(const MVPolynomial& p, const MVPolynomial& q);
MVPolynomial poly_negate(const MVPolynomial& p);

/// t_v^e -> t_v^(-e) for every term.
MVPolynomial negate_exponents(const MVPolynomial& p);

/// Relabels variables and symbols together: t_i -> t_perm[i], X_i -> X_perm[i].
MVPolynomial permute_components(const MVPolynomial& p,
                                std::span<const std::size_t> perm);

/// Exact substitution into a polynomial over `arity` components.
struct Collapse {
  std::size_t arity = 0;
  std::map<int, int> variables;                // t_i := t_j
  std::map<int, AffineExponent> symbols;       // X_i := expression

  /// t_i := t_1 for every i.
  static Collapse single_variable(std::size_t arity);
  /// Single variable plus X_plus := X_minus + N, where N is a fresh symbol
  /// with index `arity`. For two components this is A - B = N.
  static Collapse difference_form(std::size_t arity, int plus = 0, int minus = 1);
};

MVPolynomial collapse(const MVPolynomial& p, const Collapse& c);

/// Contribution of one crossing, kept so that "the term of crossing c" stays
/// meaningful when several crossings produce the same monomial.
struct CrossingTerm {
  int crossing = 0;
  int sign = 0;
  int var = 0;
  AffineExponent exponent;

  friend bool operator==(const CrossingTerm&, const CrossingTerm&) = default;
};

/// sum sign * (t_var^exponent - 1).
MVPolynomial assemble(std::span<const CrossingTerm> terms);

/// Multiplies the term of `crossing` by t_var^k: exponent += k, variable
/// becomes `var`. The -1 part is untouched.
std::vector<CrossingTerm> multiply_term(std::vector<CrossingTerm> terms,
                                        int crossing, int var, Int k);

enum class Format { Text, Latex, Json };

struct RenderOptions {
  bool single_variable = false;           // print t instead of t1, t2, ...
  std::map<int, std::string> symbol_names;  // overrides A, B, C, ...
};

std::string symbol_name(int index, const RenderOptions& opts = {});
std::string render_exponent(const AffineExponent& e, const RenderOptions& opts = {});
std::string render(const MVPolynomial& p, Format format = Format::Text,
                   const RenderOptions& opts = {});

}  // namespace vaip
