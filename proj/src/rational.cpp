#include "entcat/rational.hpp"

#include <cctype>

#include "entcat/errors.hpp"

namespace entcat {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::NonPositiveEntry: return "NonPositiveEntry";
    case ErrorKind::NotNormalized: return "NotNormalized";
    case ErrorKind::MalformedNumber: return "MalformedNumber";
    case ErrorKind::ResourceLimit: return "ResourceLimit";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NoSearchNeeded: return "NoSearchNeeded";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void malformed(std::string_view text) {
  throw Error(ErrorKind::MalformedNumber, "cannot parse '" + std::string(text) + "'");
}

Integer parse_integer(std::string_view digits) {
  return Integer(std::string(digits), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view original = text;
  text = trim(text);
  if (text.empty()) malformed(original);

  bool negative = false;
  if (text.front() == '+' || text.front() == '-') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (text.empty()) malformed(original);

  Rational value;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    auto num = trim(text.substr(0, slash));
    auto den = trim(text.substr(slash + 1));
    if (num.empty() || den.empty() || !all_digits(num) || !all_digits(den)) malformed(original);
    Integer d = parse_integer(den);
    if (d == 0) malformed(original);
    value = Rational(parse_integer(num), d);
    value.canonicalize();
  } else {
    auto dot = text.find('.');
    auto int_part = text.substr(0, dot);
    auto frac_part = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) malformed(original);
    if (!all_digits(int_part) || !all_digits(frac_part)) malformed(original);
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac_part.size());
    Integer whole = int_part.empty() ? Integer(0) : parse_integer(int_part);
    Integer frac = frac_part.empty() ? Integer(0) : parse_integer(frac_part);
    value = Rational(whole * scale + frac, scale);
    value.canonicalize();
  }
  return negative ? Rational(-value) : value;
}

std::string to_fraction_string(const Rational& value) {
  return value.get_str(10);
}

std::string to_decimal_string(const Rational& value, int digits) {
  if (digits < 0) digits = 0;
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));

  const bool negative = sgn(value) < 0;
  Rational scaled = abs(value) * scale;
  Integer q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  // Round half to even on the scaled integer.
  Integer twice = 2 * r;
  int cmp_half = cmp(twice, scaled.get_den());
  if (cmp_half > 0 || (cmp_half == 0 && mpz_odd_p(q.get_mpz_t()))) q += 1;

  std::string digits_str = q.get_str(10);
  if (static_cast<int>(digits_str.size()) <= digits) {
    digits_str.insert(0, static_cast<std::size_t>(digits) + 1 - digits_str.size(), '0');
  }
  std::string out;
  if (negative && q != 0) out.push_back('-');
  out.append(digits_str, 0, digits_str.size() - static_cast<std::size_t>(digits));
  if (digits > 0) {
    out.push_back('.');
    out.append(digits_str, digits_str.size() - static_cast<std::size_t>(digits));
  }
  return out;
}

Rational pow(const Rational& base, std::uint64_t exponent) {
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  out.canonicalize();
  return out;
}

double to_double(const Rational& value) { return value.get_d(); }

}  // namespace entcat
