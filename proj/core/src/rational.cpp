#include "vecdil/rational.hpp"

#include <sstream>

namespace vecdil {

Int rat_floor(const Rat& q) {
  Int f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return f;
}

Int rat_ceil(const Rat& q) {
  Int c;
  mpz_cdiv_q(c.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return c;
}

Rat frac_part(const Rat& q) { return q - Rat(rat_floor(q)); }

std::string rat_str(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::optional<Rat> parse_rat(const std::string& text) {
  auto is_int_token = [](const std::string& s) {
    if (s.empty()) return false;
    size_t i = (s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  size_t slash = text.find('/');
  std::string num = text.substr(0, slash);
  if (!is_int_token(num)) return std::nullopt;
  Int p(num);
  Int q = 1;
  if (slash != std::string::npos) {
    std::string den = text.substr(slash + 1);
    if (!is_int_token(den) || !den.empty() && den[0] == '-') return std::nullopt;
    q = Int(den);
    if (q <= 0) return std::nullopt;
  }
  Rat r(p, q);
  r.canonicalize();
  return r;
}

std::string vec_str(const RatVec& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << rat_str(v[i]);
  }
  os << ")";
  return os.str();
}

RatVec primitive(const RatVec& v) {
  Int lcm_den = 1;
  for (const Rat& x : v) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.get_den_mpz_t());
  Int g = 0;
  std::vector<Int> nums(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    nums[i] = v[i].get_num() * (lcm_den / v[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), nums[i].get_mpz_t());
  }
  if (g == 0) return RatVec(v.size(), Rat(0));
  RatVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = Rat(nums[i] / g);
  return out;
}

}  // namespace vecdil
