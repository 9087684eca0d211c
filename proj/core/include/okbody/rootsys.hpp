#pragma once

// Root data, Weyl group words and the character ring.
//
// Convention: cartan(i, j) = <alpha_j, alpha_i^vee>. Weights are stored in
// fundamental-weight coordinates, so the simple root alpha_j has coordinates
// given by column j of the Cartan matrix.

#include "okbody/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace okbody {

using Weight = std::vector<long long>;

class CartanDatum {
 public:
  CartanDatum() = default;
  explicit CartanDatum(std::vector<std::vector<int>> matrix, std::string name = "custom");

  static CartanDatum type_A(int r);
  static CartanDatum type_B(int r);
  static CartanDatum type_C(int r);
  static CartanDatum type_D(int r);
  static CartanDatum type_G2();
  /// Parses "A2", "B3", "G2", or products such as "A1xA1".
  static CartanDatum parse(const std::string& text);

  int rank() const { return static_cast<int>(a_.size()); }
  int cartan(int i, int j) const { return a_[i][j]; }
  const std::vector<std::vector<int>>& matrix() const { return a_; }
  const std::string& name() const { return name_; }

  /// Simple root alpha_i in fundamental-weight coordinates (0-based index).
  Weight simple_root(int i) const;
  Weight fundamental_weight(int i) const;

  /// Positive roots as nonnegative integer combinations of simple roots.
  const std::vector<std::vector<int>>& positive_roots() const { return positive_; }
  /// Converts a root-coordinate vector to fundamental-weight coordinates.
  Weight root_to_weight(const std::vector<int>& beta) const;
  /// Pairing <beta, alpha_i^vee> for beta in root coordinates.
  int pairing(const std::vector<int>& beta, int i) const;

  friend bool operator==(const CartanDatum& a, const CartanDatum& b) { return a.a_ == b.a_; }

 private:
  void validate() const;
  void enumerate_positive_roots();

  std::vector<std::vector<int>> a_;
  std::string name_;
  std::vector<std::vector<int>> positive_;
};

/// A word of simple reflections; letters are 1-based as in the CLI.
struct WeylWord {
  std::vector<int> letters;

  size_t size() const { return letters.size(); }
  int operator[](size_t k) const { return letters[k]; }
  /// 0-based simple index of letter k.
  int index(size_t k) const { return letters[k] - 1; }
  WeylWord tail(size_t from) const;
  WeylWord head(size_t count) const;
  std::string to_string() const;
  static WeylWord parse(const std::string& text);
  friend bool operator==(const WeylWord& a, const WeylWord& b) { return a.letters == b.letters; }
  friend bool operator<(const WeylWord& a, const WeylWord& b) { return a.letters < b.letters; }
};

/// Finite formal sum of e^weight with nonzero integer multiplicities.
class Character {
 public:
  Character() = default;
  static Character monomial(const Weight& w, long long mult = 1);

  const std::map<Weight, long long>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  long long multiplicity(const Weight& w) const;
  long long dimension() const;
  bool all_nonnegative() const;

  void add(const Weight& w, long long mult);
  Character& operator+=(const Character& o);
  Character& operator-=(const Character& o);
  friend Character operator*(const Character& a, const Character& b);
  friend bool operator==(const Character& a, const Character& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Character& a, const Character& b) { return !(a == b); }
  /// Multiplies by e^shift.
  Character shifted(const Weight& shift) const;

  std::string to_string() const;

 private:
  std::map<Weight, long long> terms_;
};

/// s_i(lambda) for a 0-based index.
Weight simple_reflection(const CartanDatum& c, int i, const Weight& lambda);

/// True iff the product of the word's reflections has length equal to the word length.
bool is_reduced(const CartanDatum& c, const WeylWord& w);

/// Size of the Weyl group by orbit enumeration of rho (testing oracle; finite types only).
size_t weyl_group_order(const CartanDatum& c);

Character demazure_operator(const CartanDatum& c, int i, const Character& f);

/// Character of sections of O(m) on the Bott-Samelson variety, m in canonical coordinates.
Character bs_character(const CartanDatum& c, const WeylWord& w, const std::vector<long long>& m);

/// Demazure character Lambda_{i_1} ... Lambda_{i_n}(e^lambda).
Character demazure_character(const CartanDatum& c, const WeylWord& w, const Weight& lambda);

long long weyl_dimension(const CartanDatum& c, const Weight& lambda);

/// Expresses a weight difference as integer root coordinates, if it lies in the root lattice.
std::vector<Q> weight_to_root_coords(const CartanDatum& c, const Weight& mu);

}  // namespace okbody
