#include "torcoh/numbers.hpp"

namespace torcoh {

std::size_t binom(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  Int r = 1;
  for (std::size_t i = 0; i < k; ++i) {
    r *= Int(static_cast<unsigned long>(n - i));
    r /= Int(static_cast<unsigned long>(i + 1));
  }
  return static_cast<std::size_t>(r.get_ui());
}

std::string rat_to_string(const Rat& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw InputError("empty rational literal");
  Rat r;
  if (r.set_str(s, 10) != 0) throw InputError("bad rational literal '" + s + "'");
  if (r.get_den() == 0) throw InputError("zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

}  // namespace torcoh
