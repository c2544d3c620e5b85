#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "stabilis/scalar.hpp"

namespace stabilis {

using Exponent = std::vector<std::uint32_t>;

unsigned total_degree(const Exponent& e);
// Componentwise a <= b.
bool dominated(const Exponent& a, const Exponent& b);

// Graded lexicographic order, larger first.
struct GrlexGreater {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

class MPoly {
 public:
  using TermMap = std::map<Exponent, Scalar, GrlexGreater>;

  explicit MPoly(std::size_t nvars = 0) : nvars_(nvars) {}

  static MPoly constant(std::size_t nvars, const Scalar& c);
  static MPoly variable(std::size_t nvars, std::size_t index);
  static MPoly monomial(std::size_t nvars, const Exponent& e, const Scalar& c = Scalar(1));

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_real() const;

  Scalar coeff(const Exponent& e) const;
  void add_term(const Exponent& e, const Scalar& c);

  // -1 for the zero polynomial.
  long degree(std::size_t var) const;
  // Componentwise degree vector; rejects the zero polynomial.
  Exponent degrees() const;
  long total_degree() const;
  bool multi_affine() const;

  MPoly real_part() const;
  MPoly imag_part() const;
  MPoly conj() const;

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const Scalar& c);
  MPoly operator-() const;
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Scalar& c) { return a *= c; }
  friend MPoly operator*(const Scalar& c, MPoly a) { return a *= c; }
  friend bool operator==(const MPoly& a, const MPoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const MPoly& a, const MPoly& b) { return !(a == b); }

  MPoly pow(unsigned k) const;
  MPoly derivative(std::size_t var) const;
  Scalar evaluate(const std::vector<Scalar>& point) const;

  // Substitute polynomials (all in `target_nvars` variables) for every variable.
  MPoly compose(const std::vector<MPoly>& images, std::size_t target_nvars) const;
  // Move variable i to position map[i] of a ring with `target_nvars` variables.
  MPoly remap(const std::vector<std::size_t>& map, std::size_t target_nvars) const;
  // Multiply by z^e.
  MPoly shift(const Exponent& e) const;

 private:
  void check_same(const MPoly& o) const;

  std::size_t nvars_;
  TermMap terms_;
};

Exponent unit_exponent(std::size_t nvars, std::size_t index);

}  // namespace stabilis
