#include "arbor/rational.hpp"

#include <cctype>

#include "arbor/error.hpp"

namespace arbor {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DuplicateLabel: return "DuplicateLabel";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::ParallelEdge: return "ParallelEdge";
    case ErrorKind::NonPositiveWeight: return "NonPositiveWeight";
    case ErrorKind::UnknownEndpoint: return "UnknownEndpoint";
    case ErrorKind::EmptyGraph: return "EmptyGraph";
    case ErrorKind::WrongSubsetSize: return "WrongSubsetSize";
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::UnsortedSelector: return "UnsortedSelector";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::NotATree: return "NotATree";
    case ErrorKind::ColumnSumsNonzero: return "ColumnSumsNonzero";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

CapExceededError::CapExceededError(std::string subsets, std::uint64_t cap)
    : Error(ErrorKind::CapExceeded, "enumeration needs " + subsets +
                                        " subsets, cap is " + std::to_string(cap)),
      subsets_(std::move(subsets)),
      cap_(cap) {}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw Error(ErrorKind::ParseError, "malformed rational '" + std::string(text) + "'");
  }
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) {
    throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
  }
  Rational r(negative ? Integer(-n) : n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(); }

bool is_integer(const Rational& value) { return value.get_den() == 1; }

Integer binomial(unsigned long n, unsigned long k) {
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

}  // namespace arbor
