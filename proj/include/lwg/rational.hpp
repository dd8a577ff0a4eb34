#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace lwg {

using Rational = mpq_class;
using Vec = std::vector<Rational>;
using IntVec = std::vector<long>;

/// Thrown when an input cannot be parsed; carries a location hint.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when an internal consistency check fails.
class ContractError : public std::runtime_error {
 public:
  explicit ContractError(const std::string& what) : std::runtime_error(what) {}
};

Rational parse_rational(const std::string& s);
std::string to_string(const Rational& q);
std::string to_string(const Vec& v);
std::vector<std::string> to_strings(const Vec& v);
Vec parse_vec(const std::vector<std::string>& items);

Vec zeros(std::size_t n);
Vec unit(std::size_t n, std::size_t i);
bool is_zero(const Vec& v);
Rational dot(const Vec& a, const Vec& b);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Rational& c, const Vec& v);
void axpy(Vec& y, const Rational& c, const Vec& x);  // y += c x
Vec to_vec(const IntVec& v);

/// Positive multiple of v with coprime integer entries (zero stays zero).
Vec primitive(const Vec& v);
/// Converts an integral rational vector; throws if some entry is not an integer.
IntVec to_intvec(const Vec& v);

std::string format_intvec(const IntVec& v);

}  // namespace lwg
