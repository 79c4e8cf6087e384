#include "fibquiver/bigint.hpp"

#include <stdexcept>

namespace fibquiver {

BigInt parse_decimal(const std::string& text) {
  std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
  if (start == text.size()) throw std::invalid_argument("not an integer: '" + text + "'");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') throw std::invalid_argument("not an integer: '" + text + "'");
  }
  BigInt v;
  v.set_str(text[0] == '+' ? text.substr(1) : text, 10);
  return v;
}

BigInt pow2(unsigned long k) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, k);
  return r;
}

}  // namespace fibquiver
