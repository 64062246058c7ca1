#include "rttkit/scalar.hpp"

#include "rttkit/errors.hpp"

namespace rttkit {

Scalar make_scalar(std::int64_t num, std::int64_t den) {
  if (den == 0) throw DomainError("make_scalar: zero denominator");
  // mpz_class has no portable int64 constructor.
  Scalar value(mpz_class(std::to_string(num)), mpz_class(std::to_string(den)));
  value.canonicalize();
  return value;
}

Scalar parse_scalar(std::string_view text) {
  std::string s(text);
  auto trim = [](std::string& t) {
    const auto first = t.find_first_not_of(" \t\r\n");
    const auto last = t.find_last_not_of(" \t\r\n");
    t = first == std::string::npos ? std::string() : t.substr(first, last - first + 1);
  };
  trim(s);
  if (s.empty()) throw DomainError("parse_scalar: empty string");
  Scalar value;
  if (value.set_str(s, 10) != 0) throw DomainError("parse_scalar: malformed rational '" + s + "'");
  if (value.get_den() == 0) throw DomainError("parse_scalar: zero denominator in '" + s + "'");
  value.canonicalize();
  return value;
}

std::string to_string(const Scalar& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_string(const std::vector<Scalar>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += to_string(values[i]);
  }
  return out + "]";
}

}  // namespace rttkit
