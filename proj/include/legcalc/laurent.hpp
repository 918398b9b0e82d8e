#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace legcalc {

using Int = boost::multiprecision::cpp_int;

// Integer Laurent polynomial in t, stored as coefficients of t^low, t^(low+1), ...
// with no zero coefficient at either end.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long long c);
    LaurentPoly(int low, std::vector<Int> coeffs);
    static LaurentPoly monomial(const Int& c, int e);
    static LaurentPoly parse(std::string_view text); // throws Error(SyntaxError)

    bool is_zero() const { return c_.empty(); }
    int low() const { return low_; }
    int high() const { return low_ + static_cast<int>(c_.size()) - 1; }
    int width() const { return is_zero() ? 0 : high() - low(); }
    const std::vector<Int>& coeffs() const { return c_; }
    Int coeff(int e) const;
    Int value_at_one() const;
    bool palindromic() const; // symmetric under t -> 1/t
    // Top exponent of the symmetrized form.
    int degree() const { return width() / 2; }

    LaurentPoly substitute(int w) const; // t -> t^w
    LaurentPoly shifted(int k) const;    // multiply by t^k

    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly operator-() const;
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.low_ == b.low_ && a.c_ == b.c_; }

    std::string to_string() const;

private:
    void trim();
    int low_ = 0;
    std::vector<Int> c_;
};

// Multiplies by +-t^k so the exponents are centered and the value at 1 is
// positive (the leading coefficient when the value at 1 vanishes).
LaurentPoly normalize_alexander(const LaurentPoly& p);

} // namespace legcalc
