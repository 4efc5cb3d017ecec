#include "kricker/laurent.hpp"

#include <cctype>
#include <sstream>

namespace kricker {

Rational parse_rational(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

LaurentPoly::LaurentPoly(const Rational& c) { add_term(0, c); }

LaurentPoly::LaurentPoly(long c) {
    if (c != 0) terms_[0] = Rational(c);
}

LaurentPoly LaurentPoly::monomial(const Rational& c, int e) {
    LaurentPoly p;
    p.add_term(e, c);
    return p;
}

bool LaurentPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

Rational LaurentPoly::coeff(int e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

int LaurentPoly::low() const {
    if (terms_.empty()) throw std::logic_error("low() of zero polynomial");
    return terms_.begin()->first;
}

int LaurentPoly::high() const {
    if (terms_.empty()) throw std::logic_error("high() of zero polynomial");
    return terms_.rbegin()->first;
}

void LaurentPoly::add_term(int e, const Rational& c0) {
    Rational c = c0;
    c.canonicalize();
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
    return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

bool operator<(const LaurentPoly& a, const LaurentPoly& b) {
    auto ia = a.terms_.begin(), ib = b.terms_.begin();
    for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
        if (ia->first != ib->first) return ia->first < ib->first;
        if (ia->second != ib->second) return ia->second < ib->second;
    }
    return ia == a.terms_.end() && ib != b.terms_.end();
}

LaurentPoly LaurentPoly::bar() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[-e] = c;
    return r;
}

LaurentPoly LaurentPoly::shift(int k) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + k, c);
    return r;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
    if (c == 0) return {};
    LaurentPoly r = *this;
    for (auto& [e, v] : r.terms_) v *= c;
    return r;
}

Rational LaurentPoly::eval(const Rational& q) const {
    Rational r = 0;
    if (q == 0) {
        if (!terms_.empty() && low() < 0) throw std::domain_error("eval of negative power at 0");
        return coeff(0);
    }
    for (const auto& [e, c] : terms_) {
        Rational p = 1;
        Rational base = e >= 0 ? q : Rational(1) / q;
        for (int i = 0; i < (e >= 0 ? e : -e); ++i) p *= base;
        r += c * p;
    }
    return r;
}

LaurentPoly LaurentPoly::monic_normalized() const {
    if (is_zero()) return {};
    return shift(-low()).scaled(Rational(1) / lead());
}

LaurentPoly LaurentPoly::unit_normalized() const {
    if (is_zero()) return {};
    LaurentPoly r = shift(-low());
    if (r.lead() < 0) r = -r;
    int span = r.high();
    if (span % 2 == 0) {
        LaurentPoly s = r.shift(-span / 2);
        if (s.is_symmetric()) return s;
    }
    return r;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.get_str() << "*t^" << e;
    }
    return os.str();
}

namespace {

struct PolyLexer {
    const std::string& s;
    size_t i = 0;
    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eat(char c) {
        skip();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    bool at_digit() {
        skip();
        return i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]));
    }
    std::string number() {
        skip();
        size_t j = i;
        while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/')) ++i;
        return s.substr(j, i - j);
    }
    int integer() {
        skip();
        bool neg = false;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) neg = s[i++] == '-';
        std::string d = number();
        if (d.empty() || d.find('/') != std::string::npos) throw std::invalid_argument("bad exponent in: " + s);
        int v = std::stoi(d);
        return neg ? -v : v;
    }
};

}  // namespace

LaurentPoly LaurentPoly::parse(const std::string& text) {
    PolyLexer lx{text};
    LaurentPoly r;
    lx.skip();
    if (lx.i == text.size()) throw std::invalid_argument("empty polynomial");
    bool first = true;
    while (true) {
        lx.skip();
        if (lx.i == text.size()) break;
        Rational sign = 1;
        if (lx.eat('+')) {
        } else if (lx.eat('-')) {
            sign = -1;
        } else if (!first) {
            throw std::invalid_argument("bad polynomial: " + text);
        }
        if (lx.eat('-')) sign = -sign;
        first = false;
        Rational c = 1;
        bool have_coeff = false;
        if (lx.at_digit()) {
            c = parse_rational(lx.number());
            have_coeff = true;
        }
        int e = 0;
        bool star = lx.eat('*');
        if (lx.eat('t')) {
            e = 1;
            if (lx.eat('^')) {
                bool paren = lx.eat('(');
                e = lx.integer();
                if (paren && !lx.eat(')')) throw std::invalid_argument("bad polynomial: " + text);
            }
        } else if (star || !have_coeff) {
            throw std::invalid_argument("bad polynomial: " + text);
        }
        r.add_term(e, sign * c);
    }
    return r;
}

std::pair<LaurentPoly, LaurentPoly> poly_divmod(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    if (a.is_zero()) return {{}, {}};
    LaurentPoly bb = b.shift(-b.low());
    LaurentPoly r = a.shift(-a.low());
    LaurentPoly q;
    int db = bb.high();
    Rational lb = bb.lead();
    while (!r.is_zero() && r.high() >= db) {
        int e = r.high() - db;
        Rational c = r.lead() / lb;
        q.add_term(e, c);
        r -= bb.shift(e).scaled(c);
    }
    return {q, r};
}

LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero()) return {};
    auto [q, r] = poly_divmod(a, b);
    if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
    return q.shift(a.low() - b.low());
}

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly x = a.is_zero() ? a : a.shift(-a.low());
    LaurentPoly y = b.is_zero() ? b : b.shift(-b.low());
    while (!y.is_zero()) {
        LaurentPoly r = poly_divmod(x, y).second;
        x = y;
        y = r;
    }
    return x.monic_normalized();
}

LaurentPoly laurent_mod(const LaurentPoly& v, const LaurentPoly& p, LaurentPoly* quot) {
    if (p.is_zero() || p.low() != 0) throw std::domain_error("laurent_mod needs a modulus with lowest exponent 0");
    int d = p.high();
    Rational p0 = p.coeff(0), pl = p.lead();
    LaurentPoly r = v, q;
    while (!r.is_zero() && r.low() < 0) {
        int e = r.low();
        Rational c = r.coeff(e) / p0;
        q.add_term(e, c);
        r -= p.shift(e).scaled(c);
    }
    while (!r.is_zero() && r.high() >= d) {
        int e = r.high() - d;
        Rational c = r.lead() / pl;
        q.add_term(e, c);
        r -= p.shift(e).scaled(c);
    }
    if (quot) *quot = q;
    return r;
}

RationalFraction::RationalFraction(const LaurentPoly& n, const LaurentPoly& d) : num_(n), den_(d) {
    if (den_.is_zero()) throw std::domain_error("not a fraction");
    normalize();
}

void RationalFraction::normalize() {
    if (num_.is_zero()) {
        den_ = LaurentPoly(1);
        return;
    }
    LaurentPoly g = poly_gcd(num_, den_);
    if (g != LaurentPoly(1)) {
        num_ = exact_div(num_, g);
        den_ = exact_div(den_, g);
    }
    int s = den_.low();
    Rational l = den_.lead();
    den_ = den_.shift(-s).scaled(Rational(1) / l);
    num_ = num_.shift(-s).scaled(Rational(1) / l);
}

RationalFraction fraction_normalize(const LaurentPoly& num, const LaurentPoly& den) {
    return RationalFraction(num, den);
}

RationalFraction RationalFraction::operator-() const {
    RationalFraction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFraction operator+(const RationalFraction& a, const RationalFraction& b) {
    if (a.den_ == b.den_) return RationalFraction(a.num_ + b.num_, a.den_);
    return RationalFraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFraction operator-(const RationalFraction& a, const RationalFraction& b) { return a + (-b); }

RationalFraction operator*(const RationalFraction& a, const RationalFraction& b) {
    if (a.is_zero() || b.is_zero()) return {};
    return RationalFraction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFraction operator/(const RationalFraction& a, const RationalFraction& b) {
    if (b.is_zero()) throw std::domain_error("division by zero fraction");
    return RationalFraction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFraction RationalFraction::bar() const { return RationalFraction(num_.bar(), den_.bar()); }

Rational RationalFraction::eval(const Rational& q) const {
    Rational d = den_.eval(q);
    if (d == 0) throw std::domain_error("pole at evaluation point");
    return num_.eval(q) / d;
}

LaurentPoly RationalFraction::numerator_over(const LaurentPoly& d) const {
    return num_ * exact_div(d, den_);
}

RationalFraction RationalFraction::mod_polynomials() const {
    if (is_polynomial()) return {};
    return RationalFraction(laurent_mod(num_, den_), den_);
}

std::string RationalFraction::str() const {
    if (is_polynomial()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace kricker
