#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "laman/errors.hpp"

namespace laman {

/// Arbitrary-precision nonnegative integer. Only the operations the bound
/// formulas need: addition, multiplication, powers, binomials, exact division
/// by a machine word, decimal conversion, comparison.
///
/// Limbs are base 2^32, little-endian, no leading zero limb (zero = empty).
class BigUint {
 public:
  BigUint() = default;

  BigUint(std::uint64_t v) {  // NOLINT: implicit by design
    if (v != 0) {
      limbs_.push_back(static_cast<std::uint32_t>(v & 0xffffffffu));
      if (v >> 32) limbs_.push_back(static_cast<std::uint32_t>(v >> 32));
    }
  }

  bool is_zero() const noexcept { return limbs_.empty(); }

  bool fits_u64() const noexcept { return limbs_.size() <= 2; }

  std::uint64_t to_u64() const {
    if (!fits_u64()) throw overflow_error("BigUint does not fit in 64 bits");
    std::uint64_t v = 0;
    if (limbs_.size() > 1) v = static_cast<std::uint64_t>(limbs_[1]) << 32;
    if (!limbs_.empty()) v |= limbs_[0];
    return v;
  }

  friend bool operator==(const BigUint& a, const BigUint& b) { return a.limbs_ == b.limbs_; }
  friend bool operator!=(const BigUint& a, const BigUint& b) { return !(a == b); }

  friend bool operator<(const BigUint& a, const BigUint& b) {
    if (a.limbs_.size() != b.limbs_.size()) return a.limbs_.size() < b.limbs_.size();
    for (std::size_t i = a.limbs_.size(); i-- > 0;) {
      if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i];
    }
    return false;
  }
  friend bool operator<=(const BigUint& a, const BigUint& b) { return !(b < a); }
  friend bool operator>(const BigUint& a, const BigUint& b) { return b < a; }
  friend bool operator>=(const BigUint& a, const BigUint& b) { return !(a < b); }

  BigUint& operator+=(const BigUint& o) {
    if (limbs_.size() < o.limbs_.size()) limbs_.resize(o.limbs_.size(), 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
      std::uint64_t s = carry + limbs_[i] + (i < o.limbs_.size() ? o.limbs_[i] : 0);
      limbs_[i] = static_cast<std::uint32_t>(s);
      carry = s >> 32;
    }
    if (carry) limbs_.push_back(static_cast<std::uint32_t>(carry));
    return *this;
  }

  friend BigUint operator+(BigUint a, const BigUint& b) { return a += b; }

  friend BigUint operator*(const BigUint& a, const BigUint& b) {
    if (a.is_zero() || b.is_zero()) return {};
    BigUint r;
    r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
    for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
      std::uint64_t carry = 0;
      for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
        std::uint64_t cur = r.limbs_[i + j] +
                            static_cast<std::uint64_t>(a.limbs_[i]) * b.limbs_[j] + carry;
        r.limbs_[i + j] = static_cast<std::uint32_t>(cur);
        carry = cur >> 32;
      }
      r.limbs_[i + b.limbs_.size()] = static_cast<std::uint32_t>(carry);
    }
    r.trim();
    return r;
  }

  BigUint& operator*=(const BigUint& o) { return *this = *this * o; }

  /// Quotient of division by a nonzero machine word; stores the remainder.
  BigUint div_u64(std::uint64_t d, std::uint64_t& remainder) const {
    if (d == 0) throw computation_error("division by zero");
    BigUint q;
    q.limbs_.assign(limbs_.size(), 0);
    unsigned __int128 rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
      unsigned __int128 cur = (rem << 32) | limbs_[i];
      q.limbs_[i] = static_cast<std::uint32_t>(cur / d);
      rem = cur % d;
    }
    q.trim();
    remainder = static_cast<std::uint64_t>(rem);
    return q;
  }

  /// Exact division; throws if the remainder is nonzero.
  BigUint div_exact(std::uint64_t d) const {
    std::uint64_t rem = 0;
    BigUint q = div_u64(d, rem);
    if (rem != 0) throw computation_error("non-exact integer division");
    return q;
  }

  BigUint pow(std::uint64_t e) const {
    BigUint base = *this, result = 1;
    while (e > 0) {
      if (e & 1) result *= base;
      base *= base;
      e >>= 1;
    }
    return result;
  }

  static BigUint two_pow(std::uint64_t e) { return BigUint(2).pow(e); }

  /// Binomial coefficient via the incremental product; every intermediate
  /// division is exact.
  static BigUint binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return {};
    if (k > n - k) k = n - k;
    BigUint c = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
      c *= BigUint(n - k + i);
      c = c.div_exact(i);
    }
    return c;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    BigUint cur = *this;
    while (!cur.is_zero()) {
      std::uint64_t rem = 0;
      cur = cur.div_u64(1000000000u, rem);
      for (int i = 0; i < 9; ++i) {
        out.push_back(static_cast<char>('0' + rem % 10));
        rem /= 10;
      }
    }
    while (out.size() > 1 && out.back() == '0') out.pop_back();
    std::reverse(out.begin(), out.end());
    return out;
  }

  /// Parses a nonempty decimal string. Throws parse_error on junk.
  static BigUint from_string(const std::string& s) {
    if (s.empty()) throw parse_error("empty decimal literal", 0);
    BigUint r;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') throw parse_error("bad decimal digit", i);
      r *= BigUint(10);
      r += BigUint(static_cast<std::uint64_t>(s[i] - '0'));
    }
    return r;
  }

  /// Approximate value as a double (for growth-rate style diagnostics only).
  double to_double() const {
    double v = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) v = v * 4294967296.0 + limbs_[i];
    return v;
  }

 private:
  void trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
  }

  std::vector<std::uint32_t> limbs_;
};

}  // namespace laman
