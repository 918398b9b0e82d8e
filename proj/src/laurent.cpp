#include "legcalc/laurent.hpp"

#include "legcalc/front.hpp"

#include <algorithm>
#include <cctype>

namespace legcalc {

LaurentPoly::LaurentPoly(long long c) {
    if (c != 0) c_.push_back(Int(c));
}

LaurentPoly::LaurentPoly(int low, std::vector<Int> coeffs) : low_(low), c_(std::move(coeffs)) { trim(); }

LaurentPoly LaurentPoly::monomial(const Int& c, int e) { return LaurentPoly(e, {c}); }

void LaurentPoly::trim() {
    std::size_t a = 0;
    while (a < c_.size() && c_[a] == 0) ++a;
    if (a == c_.size()) {
        c_.clear();
        low_ = 0;
        return;
    }
    std::size_t b = c_.size();
    while (c_[b - 1] == 0) --b;
    c_ = std::vector<Int>(c_.begin() + a, c_.begin() + b);
    low_ += static_cast<int>(a);
}

Int LaurentPoly::coeff(int e) const {
    if (is_zero() || e < low() || e > high()) return 0;
    return c_[e - low_];
}

Int LaurentPoly::value_at_one() const {
    Int s = 0;
    for (const auto& c : c_) s += c;
    return s;
}

bool LaurentPoly::palindromic() const {
    if (is_zero()) return true;
    if (low() != -high()) return false;
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != c_[c_.size() - 1 - i]) return false;
    return true;
}

LaurentPoly LaurentPoly::substitute(int w) const {
    if (is_zero()) return {};
    if (w == 0) return LaurentPoly(0, {value_at_one()});
    int a = low() * w, b = high() * w;
    int lo = std::min(a, b), hi = std::max(a, b);
    std::vector<Int> out(hi - lo + 1);
    for (std::size_t i = 0; i < c_.size(); ++i) out[(low_ + static_cast<int>(i)) * w - lo] += c_[i];
    return LaurentPoly(lo, std::move(out));
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly p = *this;
    if (!p.is_zero()) p.low_ += k;
    return p;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    int lo = std::min(a.low(), b.low()), hi = std::max(a.high(), b.high());
    std::vector<Int> out(hi - lo + 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) out[a.low_ - lo + i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) out[b.low_ - lo + i] += b.c_[i];
    return LaurentPoly(lo, std::move(out));
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p = *this;
    for (auto& c : p.c_) c = -c;
    return p;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Int> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return LaurentPoly(a.low_ + b.low_, std::move(out));
}

std::string LaurentPoly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        const Int& c = c_[i];
        if (c == 0) continue;
        int e = low_ + static_cast<int>(i);
        Int mag = c < 0 ? Int(-c) : c;
        if (out.empty())
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        if (e == 0) {
            out += mag.str();
            continue;
        }
        if (mag != 1) out += mag.str();
        out += e == 1 ? "t" : "t^" + std::to_string(e);
    }
    return out;
}

namespace {

[[noreturn]] void bad(std::string_view text, std::size_t at, const std::string& what) {
    throw Error(ErrorCode::SyntaxError,
                "SyntaxError: polynomial '" + std::string(text) + "' at " + std::to_string(at) + ": " + what);
}

} // namespace

LaurentPoly LaurentPoly::parse(std::string_view text) {
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    auto integer = [&](std::string& digits) {
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) digits += text[i++];
    };
    LaurentPoly sum;
    bool first = true;
    skip();
    if (i == text.size()) bad(text, i, "empty");
    while (true) {
        skip();
        if (i == text.size()) break;
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip();
        } else if (!first) {
            bad(text, i, "expected + or -");
        }
        first = false;
        std::string digits;
        integer(digits);
        Int c = digits.empty() ? Int(1) : Int(digits);
        skip();
        if (i < text.size() && text[i] == '*') {
            ++i;
            skip();
        }
        int e = 0;
        if (i < text.size() && text[i] == 't') {
            ++i;
            e = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                int es = 1;
                if (i < text.size() && (text[i] == '-' || text[i] == '+')) es = text[i++] == '-' ? -1 : 1;
                std::string ed;
                integer(ed);
                if (ed.empty()) bad(text, i, "expected exponent");
                e = es * std::stoi(ed);
            }
        } else if (digits.empty()) {
            bad(text, i, "expected a coefficient or t");
        }
        sum = sum + monomial(sign * c, e);
    }
    return sum;
}

LaurentPoly normalize_alexander(const LaurentPoly& p) {
    if (p.is_zero()) return p;
    int w = p.width();
    LaurentPoly q = p.shifted(-p.low() - w / 2);
    Int one = q.value_at_one();
    bool negate = one != 0 ? one < 0 : q.coeffs().back() < 0;
    return negate ? -q : q;
}

} // namespace legcalc
