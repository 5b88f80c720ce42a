#pragma once

#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>
#include <algorithm>
#include <stdexcept>

namespace ricci22 {

// Arbitrary-precision signed integer. Little-endian 64-bit limbs, no leading
// zero limb, zero has empty limb vector and sign 0.
class BigInt {
public:
    BigInt() : sign_(0) {}
    BigInt(long long v) { assign(v); }
    BigInt(int v) { assign(static_cast<long long>(v)); }

    static BigInt from_string(const std::string& s) {
        BigInt r;
        std::size_t i = 0;
        int sg = 1;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            if (s[i] == '-') sg = -1;
            ++i;
        }
        if (i == s.size()) throw std::invalid_argument("BigInt: empty numeral");
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("BigInt: bad digit");
            r.mul_small_inplace(10);
            r.add_small_inplace(static_cast<std::uint64_t>(s[i] - '0'));
        }
        if (!r.limbs_.empty()) r.sign_ = sg;
        return r;
    }

    bool is_zero() const { return sign_ == 0; }
    int sign() const { return sign_; }
    bool is_one() const { return sign_ == 1 && limbs_.size() == 1 && limbs_[0] == 1; }

    bool fits_ll() const {
        if (limbs_.size() > 1) return false;
        if (limbs_.empty()) return true;
        return limbs_[0] <= 0x7fffffffffffffffull;
    }
    long long to_ll() const {
        if (limbs_.empty()) return 0;
        return sign_ * static_cast<long long>(limbs_[0]);
    }
    double to_double() const {
        double v = 0;
        for (std::size_t i = limbs_.size(); i-- > 0;) v = v * 18446744073709551616.0 + static_cast<double>(limbs_[i]);
        return sign_ < 0 ? -v : v;
    }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.sign_ == b.sign_ && a.limbs_ == b.limbs_;
    }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b) { return cmp(a, b) < 0; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return cmp(a, b) <= 0; }
    friend bool operator>(const BigInt& a, const BigInt& b) { return cmp(a, b) > 0; }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return cmp(a, b) >= 0; }

    static int cmp(const BigInt& a, const BigInt& b) {
        if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
        int c = cmp_mag(a.limbs_, b.limbs_);
        return a.sign_ >= 0 ? c : -c;
    }

    BigInt operator-() const {
        BigInt r = *this;
        r.sign_ = -r.sign_;
        return r;
    }
    BigInt abs() const {
        BigInt r = *this;
        if (r.sign_ < 0) r.sign_ = 1;
        return r;
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0) return b;
        if (b.sign_ == 0) return a;
        BigInt r;
        if (a.sign_ == b.sign_) {
            r.limbs_ = add_mag(a.limbs_, b.limbs_);
            r.sign_ = a.sign_;
        } else {
            int c = cmp_mag(a.limbs_, b.limbs_);
            if (c == 0) return BigInt();
            if (c > 0) {
                r.limbs_ = sub_mag(a.limbs_, b.limbs_);
                r.sign_ = a.sign_;
            } else {
                r.limbs_ = sub_mag(b.limbs_, a.limbs_);
                r.sign_ = b.sign_;
            }
        }
        return r;
    }
    friend BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
        BigInt r;
        r.sign_ = a.sign_ * b.sign_;
        if (a.limbs_.size() == 1 && b.limbs_.size() == 1) {
            unsigned __int128 p = static_cast<unsigned __int128>(a.limbs_[0]) * b.limbs_[0];
            r.limbs_.push_back(static_cast<std::uint64_t>(p));
            std::uint64_t hi = static_cast<std::uint64_t>(p >> 64);
            if (hi) r.limbs_.push_back(hi);
            return r;
        }
        r.limbs_.assign(a.limbs_.size() + b.limbs_.size(), 0);
        for (std::size_t i = 0; i < a.limbs_.size(); ++i) {
            unsigned __int128 carry = 0;
            for (std::size_t j = 0; j < b.limbs_.size(); ++j) {
                unsigned __int128 cur = carry + r.limbs_[i + j] +
                                        static_cast<unsigned __int128>(a.limbs_[i]) * b.limbs_[j];
                r.limbs_[i + j] = static_cast<std::uint64_t>(cur);
                carry = cur >> 64;
            }
            std::size_t k = i + b.limbs_.size();
            while (carry) {
                unsigned __int128 cur = carry + r.limbs_[k];
                r.limbs_[k] = static_cast<std::uint64_t>(cur);
                carry = cur >> 64;
                ++k;
            }
        }
        r.trim();
        return r;
    }

    // Truncated toward zero; remainder has the sign of the dividend.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
        if (b.sign_ == 0) throw std::domain_error("BigInt: division by zero");
        int c = cmp_mag(a.limbs_, b.limbs_);
        if (c < 0) {
            q = BigInt();
            r = a;
            return;
        }
        if (b.limbs_.size() == 1) {
            std::uint64_t d = b.limbs_[0];
            std::vector<std::uint64_t> ql(a.limbs_.size(), 0);
            unsigned __int128 rem = 0;
            for (std::size_t i = a.limbs_.size(); i-- > 0;) {
                unsigned __int128 cur = (rem << 64) | a.limbs_[i];
                ql[i] = static_cast<std::uint64_t>(cur / d);
                rem = cur % d;
            }
            q.limbs_ = std::move(ql);
            q.trim();
            q.sign_ = q.limbs_.empty() ? 0 : a.sign_ * b.sign_;
            r = BigInt();
            if (rem) {
                r.limbs_.push_back(static_cast<std::uint64_t>(rem));
                r.sign_ = a.sign_;
            }
            return;
        }
        // Bitwise long division on magnitudes.
        std::vector<std::uint64_t> rem;
        std::vector<std::uint64_t> quo(a.limbs_.size(), 0);
        for (std::size_t bit = a.limbs_.size() * 64; bit-- > 0;) {
            shl1(rem);
            if ((a.limbs_[bit / 64] >> (bit % 64)) & 1) {
                if (rem.empty()) rem.push_back(1);
                else rem[0] |= 1;
            }
            if (cmp_mag(rem, b.limbs_) >= 0) {
                rem = sub_mag(rem, b.limbs_);
                quo[bit / 64] |= (1ull << (bit % 64));
            }
        }
        q.limbs_ = std::move(quo);
        q.trim();
        q.sign_ = q.limbs_.empty() ? 0 : a.sign_ * b.sign_;
        r.limbs_ = std::move(rem);
        r.trim();
        r.sign_ = r.limbs_.empty() ? 0 : a.sign_;
    }

    friend BigInt operator/(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return q;
    }
    friend BigInt operator%(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return r;
    }

    static BigInt gcd(BigInt a, BigInt b) {
        a.sign_ = a.limbs_.empty() ? 0 : 1;
        b.sign_ = b.limbs_.empty() ? 0 : 1;
        while (!b.is_zero()) {
            BigInt q, r;
            divmod(a, b, q, r);
            a = std::move(b);
            b = std::move(r);
        }
        return a;
    }

    // Floor of the square root of a nonnegative integer.
    static BigInt isqrt(const BigInt& n) {
        if (n.sign_ < 0) throw std::domain_error("BigInt: isqrt of negative");
        if (n.is_zero()) return BigInt();
        std::size_t bits = n.bit_length();
        BigInt x = BigInt(1);
        x.shl_bits((bits + 1) / 2);
        for (;;) {
            BigInt y = (x + n / x);
            y.shr1();
            if (y >= x) return x;
            x = std::move(y);
        }
    }

    static bool is_perfect_square(const BigInt& n, BigInt& root) {
        if (n.sign_ < 0) return false;
        root = isqrt(n);
        return root * root == n;
    }

    std::size_t bit_length() const {
        if (limbs_.empty()) return 0;
        std::uint64_t t = limbs_.back();
        std::size_t b = (limbs_.size() - 1) * 64;
        while (t) {
            ++b;
            t >>= 1;
        }
        return b;
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        BigInt t = abs();
        std::string out;
        while (!t.is_zero()) {
            BigInt q, r;
            divmod(t, BigInt(1000000000000000000LL), q, r);
            std::string chunk = std::to_string(r.limbs_.empty() ? 0ull : r.limbs_[0]);
            if (!q.is_zero()) chunk = std::string(18 - chunk.size(), '0') + chunk;
            out = chunk + out;
            t = std::move(q);
        }
        if (sign_ < 0) out = "-" + out;
        return out;
    }

private:
    void assign(long long v) {
        limbs_.clear();
        if (v == 0) {
            sign_ = 0;
            return;
        }
        sign_ = v > 0 ? 1 : -1;
        unsigned long long m = v > 0 ? static_cast<unsigned long long>(v)
                                     : 0ull - static_cast<unsigned long long>(v);
        limbs_.push_back(m);
    }
    void trim() {
        while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
        if (limbs_.empty()) sign_ = 0;
    }
    void mul_small_inplace(std::uint64_t m) {
        unsigned __int128 carry = 0;
        for (auto& l : limbs_) {
            unsigned __int128 cur = static_cast<unsigned __int128>(l) * m + carry;
            l = static_cast<std::uint64_t>(cur);
            carry = cur >> 64;
        }
        if (carry) limbs_.push_back(static_cast<std::uint64_t>(carry));
    }
    void add_small_inplace(std::uint64_t v) {
        if (limbs_.empty()) {
            if (v) {
                limbs_.push_back(v);
                sign_ = 1;
            }
            return;
        }
        unsigned __int128 cur = static_cast<unsigned __int128>(limbs_[0]) + v;
        limbs_[0] = static_cast<std::uint64_t>(cur);
        std::uint64_t carry = static_cast<std::uint64_t>(cur >> 64);
        std::size_t i = 1;
        while (carry) {
            if (i == limbs_.size()) {
                limbs_.push_back(carry);
                break;
            }
            cur = static_cast<unsigned __int128>(limbs_[i]) + carry;
            limbs_[i] = static_cast<std::uint64_t>(cur);
            carry = static_cast<std::uint64_t>(cur >> 64);
            ++i;
        }
    }
    void shl_bits(std::size_t k) {
        if (limbs_.empty()) return;
        std::size_t words = k / 64, bits = k % 64;
        if (bits) {
            std::uint64_t carry = 0;
            for (auto& l : limbs_) {
                std::uint64_t nl = (l << bits) | carry;
                carry = l >> (64 - bits);
                l = nl;
            }
            if (carry) limbs_.push_back(carry);
        }
        if (words) limbs_.insert(limbs_.begin(), words, 0);
    }
    void shr1() {
        for (std::size_t i = 0; i < limbs_.size(); ++i) {
            limbs_[i] >>= 1;
            if (i + 1 < limbs_.size()) limbs_[i] |= limbs_[i + 1] << 63;
        }
        trim();
    }
    static void shl1(std::vector<std::uint64_t>& v) {
        std::uint64_t carry = 0;
        for (auto& l : v) {
            std::uint64_t nl = (l << 1) | carry;
            carry = l >> 63;
            l = nl;
        }
        if (carry) v.push_back(carry);
    }
    static int cmp_mag(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (std::size_t i = a.size(); i-- > 0;) {
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        }
        return 0;
    }
    static std::vector<std::uint64_t> add_mag(const std::vector<std::uint64_t>& a,
                                              const std::vector<std::uint64_t>& b) {
        const auto& big = a.size() >= b.size() ? a : b;
        const auto& small = a.size() >= b.size() ? b : a;
        std::vector<std::uint64_t> r = big;
        unsigned __int128 carry = 0;
        for (std::size_t i = 0; i < r.size(); ++i) {
            unsigned __int128 cur = carry + r[i] + (i < small.size() ? small[i] : 0);
            r[i] = static_cast<std::uint64_t>(cur);
            carry = cur >> 64;
            if (!carry && i >= small.size()) break;
        }
        if (carry) r.push_back(static_cast<std::uint64_t>(carry));
        return r;
    }
    // Requires |a| >= |b|.
    static std::vector<std::uint64_t> sub_mag(const std::vector<std::uint64_t>& a,
                                              const std::vector<std::uint64_t>& b) {
        std::vector<std::uint64_t> r = a;
        std::int64_t borrow = 0;
        for (std::size_t i = 0; i < r.size(); ++i) {
            unsigned __int128 sub = (i < b.size() ? static_cast<unsigned __int128>(b[i]) : 0) + (borrow ? 1 : 0);
            if (static_cast<unsigned __int128>(r[i]) >= sub) {
                r[i] = static_cast<std::uint64_t>(r[i] - static_cast<std::uint64_t>(sub));
                borrow = 0;
            } else {
                unsigned __int128 cur = (static_cast<unsigned __int128>(1) << 64) + r[i] - sub;
                r[i] = static_cast<std::uint64_t>(cur);
                borrow = 1;
            }
            if (!borrow && i >= b.size()) break;
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    int sign_;
    std::vector<std::uint64_t> limbs_;
};

}  // namespace ricci22
