#pragma once

// Sparse Laurent polynomials in two commuting variables alpha, beta with
// arbitrary-precision integer coefficients. Terms are kept in a map ordered
// by exponent pair, so iteration (and serialization) is deterministic; zero
// coefficients are pruned on every operation.

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <utility>

namespace kbc {

class Laurent {
 public:
  using Exponents = std::pair<int, int>;  // (k, l) for alpha^k beta^l
  using TermMap = std::map<Exponents, mpz_class>;

  Laurent() = default;

  static Laurent constant(long c) { return monomial(0, 0, mpz_class(c)); }

  static Laurent monomial(int k, int l, mpz_class coeff = 1) {
    Laurent p;
    if (coeff != 0) p.terms_.emplace(Exponents{k, l}, std::move(coeff));
    return p;
  }

  const TermMap& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  bool is_constant(long c) const {
    if (c == 0) return is_zero();
    return terms_.size() == 1 && terms_.begin()->first == Exponents{0, 0} &&
           terms_.begin()->second == c;
  }

  // (k, l, +-1) when the polynomial is a single unit-coefficient monomial.
  std::optional<std::pair<Exponents, int>> as_unit_monomial() const {
    if (terms_.size() != 1) return std::nullopt;
    const auto& [exps, coeff] = *terms_.begin();
    if (coeff == 1) return std::make_pair(exps, 1);
    if (coeff == -1) return std::make_pair(exps, -1);
    return std::nullopt;
  }

  friend Laurent operator+(const Laurent& p, const Laurent& q) {
    Laurent r = p;
    for (const auto& [exps, coeff] : q.terms_) r.add_term(exps, coeff);
    return r;
  }

  friend Laurent operator-(const Laurent& p) {
    Laurent r;
    for (const auto& [exps, coeff] : p.terms_) r.terms_.emplace(exps, -coeff);
    return r;
  }

  friend Laurent operator-(const Laurent& p, const Laurent& q) { return p + (-q); }

  friend Laurent operator*(const Laurent& p, const Laurent& q) {
    Laurent r;
    for (const auto& [pe, pc] : p.terms_)
      for (const auto& [qe, qc] : q.terms_)
        r.add_term({pe.first + qe.first, pe.second + qe.second}, pc * qc);
    return r;
  }

  friend bool operator==(const Laurent&, const Laurent&) = default;

  // Readable form, e.g. "-alpha^2*beta - beta^-1"; "0" when empty.
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [exps, coeff] : terms_) {
      mpz_class abs_coeff = abs(coeff);
      if (out.empty())
        out += coeff < 0 ? "-" : "";
      else
        out += coeff < 0 ? " - " : " + ";
      std::string vars = var_str(exps);
      if (vars.empty())
        out += abs_coeff.get_str();
      else {
        if (abs_coeff != 1) out += abs_coeff.get_str() + "*";
        out += vars;
      }
    }
    return out;
  }

 private:
  static std::string var_str(const Exponents& e) {
    std::string out;
    auto piece = [&](const char* name, int exp) {
      if (exp == 0) return;
      if (!out.empty()) out += "*";
      out += name;
      if (exp != 1) out += "^" + std::to_string(exp);
    };
    piece("alpha", e.first);
    piece("beta", e.second);
    return out;
  }

  void add_term(const Exponents& exps, const mpz_class& coeff) {
    auto [it, inserted] = terms_.try_emplace(exps, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    } else if (it->second == 0) {
      terms_.erase(it);
    }
  }

  TermMap terms_;
};

}  // namespace kbc
