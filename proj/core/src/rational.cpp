#include "liecx/rational.hpp"

#include <cctype>

namespace liecx {

namespace {

bool all_digits(const std::string& s, size_t from, size_t to) {
  if (from >= to) return false;
  for (size_t i = from; i < to; ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

std::optional<Rat> parse_rational(const std::string& text) {
  size_t slash = text.find('/');
  std::string num = slash == std::string::npos ? text : text.substr(0, slash);
  size_t start = 0;
  if (!num.empty() && (num[0] == '+' || num[0] == '-')) start = 1;
  if (!all_digits(num, start, num.size())) return std::nullopt;
  if (slash != std::string::npos) {
    std::string den = text.substr(slash + 1);
    if (!all_digits(den, 0, den.size())) return std::nullopt;
    mpz_class d(den);
    if (d == 0) return std::nullopt;
    Rat r(mpz_class(num), d);
    r.canonicalize();
    return r;
  }
  return Rat(mpz_class(num));
}

std::string rat_str(const Rat& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

}  // namespace liecx
