#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace rotset {

// mpq_class keeps every value in lowest terms with a positive denominator.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "n", "-n", "p/q" (q != 0). The result is canonicalized, so "2/4"
/// and "1/2" parse to the same value. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// "p/q" with q > 0 in lowest terms, or "n" for integers.
std::string format_rational(const Rational& value);

bool is_integer(const Rational& value);

/// A homology class in H_1(S; Q), identified with Q^{2g}.
class HomologyVector {
public:
    HomologyVector() = default;
    explicit HomologyVector(std::size_t dim) : coords_(dim, Rational(0)) {}
    explicit HomologyVector(std::vector<Rational> coords);
    HomologyVector(std::initializer_list<Rational> coords);

    /// Convenience for tests and fixtures: every entry goes through parse_rational.
    static HomologyVector parse(std::initializer_list<std::string_view> coords);
    static HomologyVector unit(std::size_t dim, std::size_t axis);

    std::size_t dim() const { return coords_.size(); }
    const Rational& operator[](std::size_t i) const { return coords_[i]; }
    Rational& operator[](std::size_t i) { return coords_[i]; }
    const std::vector<Rational>& coords() const { return coords_; }

    bool is_zero() const;

    HomologyVector& operator+=(const HomologyVector& other);
    HomologyVector& operator-=(const HomologyVector& other);
    HomologyVector& operator*=(const Rational& scale);

    friend HomologyVector operator+(HomologyVector a, const HomologyVector& b) { return a += b; }
    friend HomologyVector operator-(HomologyVector a, const HomologyVector& b) { return a -= b; }
    friend HomologyVector operator*(const Rational& s, HomologyVector v) { return v *= s; }
    friend HomologyVector operator*(HomologyVector v, const Rational& s) { return v *= s; }

    friend bool operator==(const HomologyVector& a, const HomologyVector& b);
    /// Lexicographic; shorter vectors order first.
    friend std::strong_ordering operator<=>(const HomologyVector& a, const HomologyVector& b);

    Rational dot(const HomologyVector& other) const;

    /// "(p/q, n, ...)"
    std::string to_string() const;

private:
    std::vector<Rational> coords_;
};

std::ostream& operator<<(std::ostream& os, const HomologyVector& v);

}  // namespace rotset
