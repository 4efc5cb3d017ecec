#pragma once

#include "kricker/diagram.hpp"
#include "kricker/laurent.hpp"

#include <map>
#include <string>
#include <utility>

namespace kricker {

enum class Grading { IDegree, VertexDegree };

int key_degree(const Key& k, Grading g);

// Truncated formal series of canonical diagrams. Labels flip as k -> m - k.
class Series {
public:
    Series() = default;
    Series(int N, Grading g, int m = 0, bool gauge = false) : N_(N), g_(g), m_(m), gauge_(gauge) {}
    static Series one(int N, Grading g, int m = 0, bool gauge = false);

    int truncation() const { return N_; }
    Grading grading() const { return g_; }
    int flip() const { return m_; }
    bool gauge() const { return gauge_; }
    Series empty_like() const { return Series(N_, g_, m_, gauge_); }
    Series one_like() const { return one(N_, g_, m_, gauge_); }

    const std::map<Key, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coeff(const Key& k) const;
    Rational coeff(const Diagram& d) const;
    size_t size() const { return terms_.size(); }

    void add(const Diagram& d, const Rational& c);
    void add_key(const Key& k, const Rational& c);

    Series& operator+=(const Series& o);
    Series& operator-=(const Series& o);
    friend Series operator+(Series a, const Series& b) { return a += b; }
    friend Series operator-(Series a, const Series& b) { return a -= b; }
    Series scaled(const Rational& c) const;
    friend bool operator==(const Series& a, const Series& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Series& a, const Series& b) { return !(a == b); }

    Series truncated(int N) const;
    Series degree_part(int d) const;
    Series connected_part() const;

    // Disjoint union is the product.
    friend Series operator*(const Series& a, const Series& b);
    Series exp_disjoint() const;
    Series log_disjoint() const;

    // Coproduct as a map on pairs of keys, truncated by total degree.
    // compact: renumber interval positions on each side of a split.
    std::map<std::pair<Key, Key>, Rational> coproduct(bool compact = false) const;
    bool is_group_like(bool compact = false) const;

    std::string str() const;
    static Series parse(const std::string& text, int N, Grading g, int m = 0, bool gauge = false);

private:
    void check_compatible(const Series& o) const;

    int N_ = 0;
    Grading g_ = Grading::IDegree;
    int m_ = 0;
    bool gauge_ = false;
    std::map<Key, Rational> terms_;
};

Key empty_key();

}  // namespace kricker
