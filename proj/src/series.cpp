#include "fishcat/series.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace fishcat {

Poly::Poly(BigInt constant) {
    if (constant != 0) terms_[{0, 0, 0}] = std::move(constant);
}

Poly Poly::var(Var v, int exp) {
    std::array<int, 3> e{0, 0, 0};
    e[static_cast<int>(v)] = exp;
    Poly p;
    p.terms_[e] = 1;
    return p;
}

Poly Poly::monomial(int ex, int ey, int ez, BigInt coeff) {
    Poly p;
    if (coeff != 0) p.terms_[{ex, ey, ez}] = std::move(coeff);
    return p;
}

BigInt Poly::coeff(int ex, int ey, int ez) const {
    auto it = terms_.find({ex, ey, ez});
    return it == terms_.end() ? BigInt(0) : it->second;
}

void Poly::add_term(const std::array<int, 3>& e, const BigInt& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_[e] = c;
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Poly Poly::operator+(const Poly& o) const {
    Poly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, c);
    return out;
}

Poly Poly::operator-() const {
    Poly out;
    for (const auto& [e, c] : terms_) out.terms_[e] = -c;
    return out;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    Poly out;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_)
            out.add_term({e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]}, c1 * c2);
    return out;
}

Poly Poly::at_one(Var v) const {
    int i = static_cast<int>(v);
    Poly out;
    for (const auto& [e, c] : terms_) {
        std::array<int, 3> f = e;
        f[i] = 0;
        out.add_term(f, c);
    }
    return out;
}

Poly Poly::swapped(Var a, Var b) const {
    int i = static_cast<int>(a), j = static_cast<int>(b);
    Poly out;
    for (const auto& [e, c] : terms_) {
        std::array<int, 3> f = e;
        std::swap(f[i], f[j]);
        out.add_term(f, c);
    }
    return out;
}

namespace {

std::string monomial_str(const std::array<int, 3>& e) {
    static const char* names[3] = {"x", "y", "z"};
    std::string s;
    for (int i = 0; i < 3; ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += names[i];
        if (e[i] != 1) s += "^" + std::to_string(e[i]);
    }
    return s.empty() ? "1" : s;
}

}  // namespace

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        BigInt a = c;
        if (first) {
            if (a < 0) {
                out << "-";
                a = -a;
            }
        } else {
            out << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        std::string mon = monomial_str(e);
        if (a != 1 || mon == "1") {
            out << a.str();
            if (mon != "1") out << "*";
        }
        if (mon != "1") out << mon;
        first = false;
    }
    return out.str();
}

Series Series::constant(const Poly& p, int max_order) {
    Series s(max_order);
    s.coeff_[0] = p;
    return s;
}

Series Series::operator+(const Series& o) const {
    Series out(std::min(max_order(), o.max_order()));
    for (int d = 0; d <= out.max_order(); ++d) out.coeff_[d] = coeff_[d] + o.coeff_[d];
    return out;
}

Series Series::operator-(const Series& o) const {
    Series out(std::min(max_order(), o.max_order()));
    for (int d = 0; d <= out.max_order(); ++d) out.coeff_[d] = coeff_[d] - o.coeff_[d];
    return out;
}

Series Series::operator*(const Series& o) const {
    Series out(std::min(max_order(), o.max_order()));
    for (int d = 0; d <= out.max_order(); ++d)
        for (int i = 0; i <= d; ++i) out.coeff_[d] += coeff_[i] * o.coeff_[d - i];
    return out;
}

Series Series::shifted(int k) const {
    Series out(max_order());
    for (int d = k; d <= max_order(); ++d) out.coeff_[d] = coeff_[d - k];
    return out;
}

Series Series::scaled(const Poly& p) const {
    Series out(max_order());
    for (int d = 0; d <= max_order(); ++d) out.coeff_[d] = coeff_[d] * p;
    return out;
}

Series Series::reciprocal() const {
    const Poly& c0 = coeff_[0];
    if (c0 != Poly(1) && c0 != Poly(-1))
        throw Error("NonUnitConstantTerm",
                    "reciprocal needs constant term 1 or -1, got " + c0.str());
    Series out(max_order());
    out.coeff_[0] = c0;  // inverse of +-1 is itself
    for (int d = 1; d <= max_order(); ++d) {
        Poly acc;
        for (int i = 1; i <= d; ++i) acc += coeff_[i] * out.coeff_[d - i];
        out.coeff_[d] = -(c0 * acc);
    }
    return out;
}

Series Series::at_one(Var v) const {
    Series out(max_order());
    for (int d = 0; d <= max_order(); ++d) out.coeff_[d] = coeff_[d].at_one(v);
    return out;
}

Series Series::swapped(Var a, Var b) const {
    Series out(max_order());
    for (int d = 0; d <= max_order(); ++d) out.coeff_[d] = coeff_[d].swapped(a, b);
    return out;
}

std::string Series::str() const {
    std::ostringstream out;
    bool first = true;
    for (int d = 0; d <= max_order(); ++d) {
        if (coeff_[d].is_zero()) continue;
        if (!first) out << " + ";
        bool paren = coeff_[d].terms().size() > 1;
        if (d == 0) {
            out << coeff_[d].str();
        } else {
            if (paren)
                out << "(" << coeff_[d].str() << ")";
            else
                out << coeff_[d].str();
            out << "*t";
            if (d > 1) out << "^" << d;
        }
        first = false;
    }
    if (first) out << "0";
    out << " + O(t^" << max_order() + 1 << ")";
    return out.str();
}

std::string Series::json() const {
    nlohmann::json j = nlohmann::json::object();
    for (int d = 0; d <= max_order(); ++d) {
        if (coeff_[d].is_zero()) continue;
        nlohmann::json deg = nlohmann::json::object();
        for (const auto& [e, c] : coeff_[d].terms()) deg[monomial_str(e)] = c.str();
        j[std::to_string(d)] = deg;
    }
    return j.dump();
}

Series catalan_series(int max_order) {
    Series c(max_order);
    c.coeff(0) = Poly(1);
    for (int n = 1; n <= max_order; ++n) {
        Poly acc;
        for (int k = 1; k <= n; ++k) acc += c.coeff(k - 1) * c.coeff(n - k);
        c.coeff(n) = acc;
    }
    return c;
}

Series narayana_series(int max_order) {
    Poly xm1 = Poly::var(Var::X) - Poly(1);
    Series n(max_order);
    n.coeff(0) = Poly(1);
    for (int d = 1; d <= max_order; ++d) {
        Poly acc = xm1 * n.coeff(d - 1);
        for (int i = 0; i <= d - 1; ++i) acc += n.coeff(i) * n.coeff(d - 1 - i);
        n.coeff(d) = acc;
    }
    return n;
}

Series ballot_series(Var v, int max_order) {
    Series vtc = catalan_series(max_order).shifted(1).scaled(Poly::var(v));
    return (Series::one(max_order) - vtc).reciprocal();
}

Series fishburn_series(int max_order) {
    Series total = Series::zero(max_order);
    Series product = Series::one(max_order);
    // 1 - (1-t)^k has t-valuation 1, so terms with n > max_order vanish.
    Series one_minus_t(max_order);
    one_minus_t.coeff(0) = Poly(1);
    if (max_order >= 1) one_minus_t.coeff(1) = Poly(-1);
    Series power = Series::one(max_order);
    for (int n = 0; n <= max_order; ++n) {
        if (n > 0) {
            power = power * one_minus_t;  // (1-t)^n
            product = product * (Series::one(max_order) - power);
        }
        total = total + product;
    }
    return total;
}

Series ballot_pair_closed_form(int max_order) {
    Series prod = ballot_series(Var::Y, max_order) * ballot_series(Var::Z, max_order);
    Poly yz = Poly::var(Var::Y) * Poly::var(Var::Z);
    return Series::one(max_order) + prod.shifted(1).scaled(yz);
}

Series triple_joint_closed_form(int max_order) {
    Series n = narayana_series(max_order);
    Series one = Series::one(max_order);
    Poly x = Poly::var(Var::X), y = Poly::var(Var::Y), z = Poly::var(Var::Z);
    Series den1 = one - n.shifted(1).scaled(y);
    Series n_plus = n + Series::constant(x - Poly(1), max_order);
    Series den2 = one - n_plus.shifted(1).scaled(z);
    Series frac = den1.reciprocal() * den2.reciprocal();
    return one + frac.shifted(1).scaled(x * y * z);
}

Series distribution_series(const std::vector<std::array<int, 4>>& items, int max_order) {
    Series out(max_order);
    for (const auto& it : items) {
        if (it[0] > max_order) continue;
        out.coeff(it[0]).add_term({it[1], it[2], it[3]}, 1);
    }
    return out;
}

}  // namespace fishcat
