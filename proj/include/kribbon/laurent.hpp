#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace kribbon {

using Integer = boost::multiprecision::cpp_int;

/// Exact integer Laurent polynomial in a and z.  Terms are kept sorted by
/// (a-exponent, z-exponent) with no zero coefficients.
class Laurent {
 public:
  struct Term {
    int a = 0;
    int z = 0;
    Integer c;
    bool operator==(const Term&) const = default;
  };

  Laurent() = default;
  Laurent(long c);  // NOLINT: constants convert implicitly
  static Laurent monomial(Integer c, int a, int z);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t size() const { return terms_.size(); }

  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  friend Laurent operator+(Laurent x, const Laurent& y) { return x += y; }
  friend Laurent operator-(Laurent x, const Laurent& y) { return x -= y; }
  friend Laurent operator*(const Laurent& x, const Laurent& y);
  Laurent operator-() const;
  bool operator==(const Laurent& o) const { return terms_ == o.terms_; }

  // Multiply by c * a^da * z^dz.
  Laurent scaled(const Integer& c, int da, int dz) const;
  // this += c * a^da * z^dz * x
  void add_scaled(const Laurent& x, const Integer& c, int da, int dz);

  int max_a() const;
  int min_a() const;
  // Coefficient of a^e as (z-exponent, coefficient) pairs, ascending in z.
  std::vector<std::pair<int, Integer>> a_coefficient(int e) const;

  std::string to_string() const;
  // [[a_exp, z_exp, "coeff"], ...] in term order.
  std::string to_json() const;
  static Laurent from_json(std::string_view text);

 private:
  explicit Laurent(std::vector<Term> sorted) : terms_(std::move(sorted)) {}
  std::vector<Term> terms_;
};

// (a - a^-1) / z, the factor contributed by each split unknotted component.
Laurent delta();
Laurent delta_power(int n);
// a -> -a^-1, the effect of mirroring a diagram.
Laurent mirror_substitute(const Laurent& p);

}  // namespace kribbon
