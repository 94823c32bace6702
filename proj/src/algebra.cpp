#include "polylog/algebra.hpp"

#include <cctype>
#include <stdexcept>

namespace polylog {

std::string scalar_str(const Scalar& c) { return c.get_str(); }

Scalar parse_scalar(const std::string& s) {
  std::string t;
  for (char ch : s)
    if (!std::isspace(static_cast<unsigned char>(ch))) t += ch;
  if (t.empty()) throw std::invalid_argument("empty scalar");
  std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
  bool slash = false;
  bool digit = false;
  for (; i < t.size(); ++i) {
    if (t[i] == '/' && !slash && digit) {
      slash = true;
      digit = false;
    } else if (std::isdigit(static_cast<unsigned char>(t[i]))) {
      digit = true;
    } else {
      throw std::invalid_argument("bad scalar: " + s);
    }
  }
  if (!digit) throw std::invalid_argument("bad scalar: " + s);
  if (t[0] == '+') t.erase(0, 1);
  Scalar q;
  if (q.set_str(t, 10) != 0) throw std::invalid_argument("bad scalar: " + s);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

}  // namespace polylog
