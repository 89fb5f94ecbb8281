#include "vaip/poly.hpp"

#include <stdexcept>

#include "vaip/poly_json.hpp"

namespace vaip {

Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
  return r;
}

Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in subtraction");
  return r;
}

Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
  return r;
}

Int checked_neg(Int a) { return checked_sub(0, a); }

// ---------------------------------------------------------------------------
// AffineExponent

AffineExponent AffineExponent::symbol(int index, Int coeff) {
  AffineExponent e;
  e.add_symbol(index, coeff);
  return e;
}

Int AffineExponent::coeff(int index) const {
  auto it = coeffs_.find(index);
  return it == coeffs_.end() ? 0 : it->second;
}

AffineExponent& AffineExponent::add_constant(Int k) {
  constant_ = checked_add(constant_, k);
  return *this;
}

AffineExponent& AffineExponent::add_symbol(int index, Int coeff) {
  if (coeff == 0) return *this;
  auto [it, inserted] = coeffs_.try_emplace(index, 0);
  it->second = checked_add(it->second, coeff);
  if (it->second == 0) coeffs_.erase(it);
  return *this;
}

AffineExponent& AffineExponent::operator+=(const AffineExponent& other) {
  add_constant(other.constant_);
  for (const auto& [k, c] : other.coeffs_) add_symbol(k, c);
  return *this;
}

AffineExponent& AffineExponent::operator-=(const AffineExponent& other) {
  return *this += -other;
}

AffineExponent operator-(const AffineExponent& a) { return Int{-1} * a; }

AffineExponent operator*(Int k, const AffineExponent& a) {
  AffineExponent out(checked_mul(k, a.constant_));
  for (const auto& [idx, c] : a.coeffs_) out.add_symbol(idx, checked_mul(k, c));
  return out;
}

AffineExponent add(const AffineExponent& e, const AffineExponent& f) { return e + f; }

AffineExponent negate(const AffineExponent& e) { return -e; }

AffineExponent shift_symbol(const AffineExponent& e, int index, Int k) {
  AffineExponent out = e;
  out.add_constant(checked_mul(e.coeff(index), k));
  return out;
}

AffineExponent substitute(const AffineExponent& e, int index,
                          const AffineExponent& replacement) {
  const Int c = e.coeff(index);
  if (c == 0) return e;
  AffineExponent out = e;
  out.add_symbol(index, checked_neg(c));
  out += c * replacement;
  return out;
}

int compare(const AffineExponent& a, const AffineExponent& b) {
  auto ia = a.coeffs().begin();
  auto ib = b.coeffs().begin();
  const auto ea = a.coeffs().end();
  const auto eb = b.coeffs().end();
  while (ia != ea || ib != eb) {
    Int ca = 0;
    Int cb = 0;
    if (ib == eb || (ia != ea && ia->first < ib->first)) {
      ca = ia->second;
      ++ia;
    } else if (ia == ea || ib->first < ia->first) {
      cb = ib->second;
      ++ib;
    } else {
      ca = ia->second;
      cb = ib->second;
      ++ia;
      ++ib;
    }
    if (ca != cb) return ca < cb ? -1 : 1;
  }
  if (a.constant() != b.constant()) return a.constant() > b.constant() ? -1 : 1;
  return 0;
}

// ---------------------------------------------------------------------------
// MVPolynomial

bool MVPolynomial::KeyLess::operator()(const std::pair<int, AffineExponent>& a,
                                       const std::pair<int, AffineExponent>& b) const {
  if (a.first != b.first) return a.first < b.first;
  return compare(a.second, b.second) < 0;
}

void MVPolynomial::add_term(int var, const AffineExponent& exponent, Int coeff) {
  if (coeff == 0) return;
  if (exponent.is_zero()) {
    add_constant(coeff);
    return;
  }
  auto [it, inserted] = terms_.try_emplace({var, exponent}, 0);
  it->second = checked_add(it->second, coeff);
  if (it->second == 0) terms_.erase(it);
}

void MVPolynomial::add_constant(Int k) { constant_ = checked_add(constant_, k); }

std::vector<MVTerm> MVPolynomial::terms() const {
  std::vector<MVTerm> out;
  out.reserve(terms_.size());
  for (const auto& [key, c] : terms_) out.push_back({key.first, key.second, c});
  return out;
}

Int MVPolynomial::coeff(int var, const AffineExponent& exponent) const {
  if (exponent.is_zero()) return constant_;
  auto it = terms_.find({var, exponent});
  return it == terms_.end() ? 0 : it->second;
}

MVPolynomial& MVPolynomial::operator+=(const MVPolynomial& other) {
  add_constant(other.constant_);
  for (const auto& [key, c] : other.terms_) add_term(key.first, key.second, c);
  return *this;
}

MVPolynomial operator-(const MVPolynomial& p) { return Int{-1} * p; }

MVPolynomial operator*(Int k, const MVPolynomial& p) {
  MVPolynomial out(checked_mul(k, p.constant_));
  for (const auto& [key, c] : p.terms_) out.add_term(key.first, key.second, checked_mul(k, c));
  return out;
}

MVPolynomial poly_add(const MVPolynomial& p, const MVPolynomial& q) { return p + q; }

MVPolynomial poly_negate(const MVPolynomial& p) { return -p; }

MVPolynomial negate_exponents(const MVPolynomial& p) {
  MVPolynomial out(p.constant());
  for (const auto& t : p.terms()) out.add_term(t.var, -t.exponent, t.coeff);
  return out;
}

MVPolynomial permute_components(const MVPolynomial& p,
                                std::span<const std::size_t> perm) {
  auto image = [&](int i) {
    if (i < 0 || static_cast<std::size_t>(i) >= perm.size())
      throw Error("permutation does not cover index " + std::to_string(i));
    return static_cast<int>(perm[static_cast<std::size_t>(i)]);
  };
  MVPolynomial out(p.constant());
  for (const auto& t : p.terms()) {
    AffineExponent e(t.exponent.constant());
    for (const auto& [k, c] : t.exponent.coeffs()) e.add_symbol(image(k), c);
    out.add_term(image(t.var), e, t.coeff);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Collapse

Collapse Collapse::single_variable(std::size_t arity) {
  Collapse c;
  c.arity = arity;
  for (std::size_t i = 0; i < arity; ++i) c.variables[static_cast<int>(i)] = 0;
  return c;
}

Collapse Collapse::difference_form(std::size_t arity, int plus, int minus) {
  Collapse c = single_variable(arity);
  c.symbols[plus] = AffineExponent::symbol(minus) +
                    AffineExponent::symbol(static_cast<int>(arity));
  return c;
}

MVPolynomial collapse(const MVPolynomial& p, const Collapse& c) {
  const auto in_range = [&](int i) {
    return i >= 0 && static_cast<std::size_t>(i) < c.arity;
  };
  for (const auto& [from, to] : c.variables)
    if (!in_range(from) || !in_range(to))
      throw Error("collapse references unknown variable t" + std::to_string(from + 1));
  for (const auto& [idx, repl] : c.symbols) {
    (void)repl;
    if (!in_range(idx)) throw Error("collapse references unknown symbol " + symbol_name(idx));
  }
  for (const auto& t : p.terms()) {
    if (!in_range(t.var))
      throw Error("polynomial variable t" + std::to_string(t.var + 1) + " outside collapse arity");
    for (const auto& [k, coeff] : t.exponent.coeffs()) {
      (void)coeff;
      if (!in_range(k))
        throw Error("polynomial symbol " + symbol_name(k) + " outside collapse arity");
    }
  }

  MVPolynomial out(p.constant());
  for (const auto& t : p.terms()) {
    AffineExponent e(t.exponent.constant());
    for (const auto& [k, coeff] : t.exponent.coeffs()) {
      auto it = c.symbols.find(k);
      if (it == c.symbols.end()) e.add_symbol(k, coeff);
      else e += coeff * it->second;
    }
    auto v = c.variables.find(t.var);
    out.add_term(v == c.variables.end() ? t.var : v->second, e, t.coeff);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Crossing provenance

MVPolynomial assemble(std::span<const CrossingTerm> terms) {
  MVPolynomial out;
  for (const auto& t : terms) {
    out.add_term(t.var, t.exponent, t.sign);
    out.add_constant(-t.sign);
  }
  return out;
}

std::vector<CrossingTerm> multiply_term(std::vector<CrossingTerm> terms,
                                        int crossing, int var, Int k) {
  for (auto& t : terms) {
    if (t.crossing != crossing) continue;
    t.exponent.add_constant(k);
    t.var = var;
    return terms;
  }
  throw Error("no term for crossing " + std::to_string(crossing));
}

// ---------------------------------------------------------------------------
// Rendering

std::string symbol_name(int index, const RenderOptions& opts) {
  if (auto it = opts.symbol_names.find(index); it != opts.symbol_names.end())
    return it->second;
  if (index >= 0 && index < 26) return std::string(1, static_cast<char>('A' + index));
  return "X" + std::to_string(index + 1);
}

std::string render_exponent(const AffineExponent& e, const RenderOptions& opts) {
  // Positive symbols first so that X_2 - X_1 prints as B-A.
  std::string out;
  for (bool positive : {true, false}) {
    for (const auto& [k, c] : e.coeffs()) {
      if ((c > 0) != positive) continue;
      if (c < 0) out += '-';
      else if (!out.empty()) out += '+';
      const Int mag = c < 0 ? checked_neg(c) : c;
      if (mag != 1) out += std::to_string(mag);
      out += symbol_name(k, opts);
    }
  }
  if (out.empty()) return std::to_string(e.constant());
  if (e.constant() > 0) out += '+' + std::to_string(e.constant());
  else if (e.constant() < 0) out += std::to_string(e.constant());
  return out;
}

namespace {

std::string render_monomial(const MVTerm& t, bool latex, const RenderOptions& opts) {
  std::string out;
  if (latex) {
    out = opts.single_variable ? "t" : "t_{" + std::to_string(t.var + 1) + "}";
  } else {
    out = opts.single_variable ? "t" : "t" + std::to_string(t.var + 1);
  }
  if (t.exponent == AffineExponent(1)) return out;
  const auto e = render_exponent(t.exponent, opts);
  return latex ? out + "^{" + e + "}" : out + "^(" + e + ")";
}

}  // namespace

std::string render(const MVPolynomial& p, Format format, const RenderOptions& opts) {
  if (format == Format::Json) return to_json(p).dump();
  const bool latex = format == Format::Latex;
  std::string out;
  auto emit = [&](Int coeff, const std::string& body) {
    const bool negative = coeff < 0;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    const Int mag = negative ? checked_neg(coeff) : coeff;
    if (body.empty()) {
      out += std::to_string(mag);
    } else {
      if (mag != 1) out += std::to_string(mag);
      out += body;
    }
  };
  for (const auto& t : p.terms()) emit(t.coeff, render_monomial(t, latex, opts));
  if (p.constant() != 0) emit(p.constant(), "");
  return out.empty() ? "0" : out;
}

}  // namespace vaip
