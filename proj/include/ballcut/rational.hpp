#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ballcut {

// Arbitrary-precision rational, always kept in lowest terms with a positive
// denominator.
class Rat {
public:
    Rat() = default;
    Rat(long value) : q_(value) {}
    Rat(long num, long den);
    explicit Rat(mpq_class value);

    /// Accepts "p", "p/q" and terminating decimals such as "-1.25".
    static Rat parse(std::string_view text);

    const mpq_class& get() const noexcept { return q_; }
    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }

    int sign() const noexcept { return sgn(q_); }
    bool is_zero() const noexcept { return sgn(q_) == 0; }
    bool is_integer() const noexcept { return q_.get_den() == 1; }

    /// Rational n-th root if one exists (odd roots of negatives included).
    std::optional<Rat> exact_root(unsigned long n) const;

    /// Smallest integer >= *this.
    mpz_class ceil() const;

    std::string str() const { return q_.get_str(); }

    Rat operator-() const { return Rat(mpq_class(-q_)); }
    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b)
    {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class q_;
};

Rat abs(const Rat& r);
Rat pow(const Rat& r, unsigned long n);

} // namespace ballcut
