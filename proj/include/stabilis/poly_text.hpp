#pragma once

#include <string>
#include <vector>

#include "stabilis/mpoly.hpp"

namespace stabilis {

// Variable naming for parsing and printing.
class VarNames {
 public:
  VarNames() = default;
  explicit VarNames(std::vector<std::string> names) : names_(std::move(names)) {}

  static VarNames z(std::size_t n);
  // z1..zn followed by w1..wn.
  static VarNames zw(std::size_t n);
  static VarNames zw(std::size_t nz, std::size_t nw);
  // Block names z_i_j for i over blocks, j within block.
  static VarNames blocks(const Exponent& sizes, const std::string& prefix = "z");
  static VarNames concat(const VarNames& a, const VarNames& b);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& operator[](std::size_t k) const { return names_.at(k); }
  long index_of(const std::string& name) const;

 private:
  std::vector<std::string> names_;
};

// Variables z1..zN; the ring size is max(min_nvars, largest index seen).
MPoly parse_polynomial(const std::string& text, std::size_t min_nvars = 0);
MPoly parse_polynomial(const std::string& text, const VarNames& names);

std::string to_string(const MPoly& f, const VarNames& names);
std::string to_string(const MPoly& f);

}  // namespace stabilis
