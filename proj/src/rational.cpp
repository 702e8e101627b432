#include <lieshift/errors.hpp>
#include <lieshift/rational.hpp>

#include <cctype>

namespace lieshift {

namespace {

bool is_integer_text(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::string trimmed(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  std::string out(s);
  if (!out.empty() && out.front() == '+') out.erase(0, 1);
  return out;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string num = trimmed(text.substr(0, slash));
  std::string den = slash == std::string_view::npos ? "1" : trimmed(text.substr(slash + 1));
  if (!is_integer_text(num) || !is_integer_text(den) || den.front() == '-') {
    throw InputError("not a rational number: '" + std::string(text) + "'");
  }
  Integer n(num, 10);
  Integer d(den, 10);
  if (d == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& value) { return value.get_str(); }

}  // namespace lieshift
