#pragma once

#include <string>
#include <utility>
#include <stdexcept>

#include "bigint.hpp"

namespace ricci22 {

// Rational number in lowest terms with positive denominator.
class Rat {
public:
    Rat() : num_(0), den_(1) {}
    Rat(long long n) : num_(n), den_(1) {}
    Rat(int n) : num_(n), den_(1) {}
    Rat(BigInt n) : num_(std::move(n)), den_(1) {}
    Rat(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }
    Rat(long long n, long long d) : num_(n), den_(d) { normalize(); }

    // Accepts "p", "p/q", and decimal notation "a.b".
    static Rat from_string(const std::string& s) {
        auto slash = s.find('/');
        if (slash != std::string::npos) {
            return Rat(BigInt::from_string(s.substr(0, slash)),
                       BigInt::from_string(s.substr(slash + 1)));
        }
        auto dot = s.find('.');
        if (dot != std::string::npos) {
            std::string head = s.substr(0, dot), tail = s.substr(dot + 1);
            if (tail.empty()) return Rat(BigInt::from_string(head));
            bool neg = !head.empty() && head[0] == '-';
            BigInt scale(1);
            for (std::size_t i = 0; i < tail.size(); ++i) scale = scale * BigInt(10);
            BigInt whole = BigInt::from_string(head.empty() || head == "-" || head == "+" ? (neg ? "-0" : "0") : head);
            BigInt frac = BigInt::from_string(tail);
            BigInt n = whole.abs() * scale + frac;
            if (neg) n = -n;
            return Rat(n, scale);
        }
        return Rat(BigInt::from_string(s));
    }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_.is_one(); }
    int sign() const { return num_.sign(); }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return Rat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rat operator-(const Rat& a, const Rat& b) {
        return Rat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rat operator*(const Rat& a, const Rat& b) { return Rat(a.num_ * b.num_, a.den_ * b.den_); }
    friend Rat operator/(const Rat& a, const Rat& b) {
        if (b.is_zero()) throw std::domain_error("Rat: division by zero");
        return Rat(a.num_ * b.den_, a.den_ * b.num_);
    }
    Rat operator-() const {
        Rat r = *this;
        r.num_ = -r.num_;
        return r;
    }
    Rat& operator+=(const Rat& b) { return *this = *this + b; }
    Rat& operator-=(const Rat& b) { return *this = *this - b; }
    Rat& operator*=(const Rat& b) { return *this = *this * b; }
    Rat& operator/=(const Rat& b) { return *this = *this / b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
    friend bool operator<(const Rat& a, const Rat& b) { return (a - b).sign() < 0; }
    friend bool operator<=(const Rat& a, const Rat& b) { return (a - b).sign() <= 0; }
    friend bool operator>(const Rat& a, const Rat& b) { return (a - b).sign() > 0; }
    friend bool operator>=(const Rat& a, const Rat& b) { return (a - b).sign() >= 0; }

    Rat abs() const { return sign() < 0 ? -*this : *this; }

    double to_double() const { return num_.to_double() / den_.to_double(); }

    // Exact square root when the value is the square of a rational.
    bool sqrt_exact(Rat& out) const {
        if (sign() < 0) return false;
        BigInt rn, rd;
        if (!BigInt::is_perfect_square(num_, rn)) return false;
        if (!BigInt::is_perfect_square(den_, rd)) return false;
        out = Rat(rn, rd);
        return true;
    }

    std::string to_string() const {
        if (den_.is_one()) return num_.to_string();
        return num_.to_string() + "/" + den_.to_string();
    }

private:
    void normalize() {
        if (den_.is_zero()) throw std::domain_error("Rat: zero denominator");
        if (num_.is_zero()) {
            den_ = BigInt(1);
            return;
        }
        if (den_.sign() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        BigInt g = BigInt::gcd(num_, den_);
        if (!g.is_one()) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
    }

    BigInt num_, den_;
};

}  // namespace ricci22
