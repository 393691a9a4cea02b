#include "treestab/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace treestab {

Rational parse_rational(std::string_view text) {
    std::string s(text);
    auto valid_int = [](std::string_view t) {
        if (!t.empty() && t.front() == '-') t.remove_prefix(1);
        return !t.empty() && std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    };
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den) || den.front() == '-')
        throw PolyError("invalid rational '" + s + "'");
    Rational r;
    r.get_num() = mpz_class(std::string(num));
    r.get_den() = mpz_class(std::string(den));
    if (r.get_den() == 0) throw PolyError("zero denominator in '" + s + "'");
    r.canonicalize();
    return r;
}

std::string render_rational(const Rational& r) { return r.get_str(); }

bool GrlexGreater::operator()(const Exponent& a, const Exponent& b) const {
    unsigned da = std::accumulate(a.begin(), a.end(), 0U);
    unsigned db = std::accumulate(b.begin(), b.end(), 0U);
    if (da != db) return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

MultiPoly MultiPoly::constant(std::size_t nvars, const Rational& c) {
    MultiPoly p(nvars);
    p.add_term(Exponent(nvars, 0), c);
    return p;
}

MultiPoly MultiPoly::variable(std::size_t nvars, std::size_t var) {
    if (var >= nvars) throw PolyError("variable index out of range");
    Exponent e(nvars, 0);
    e[var] = 1;
    MultiPoly p(nvars);
    p.add_term(e, 1);
    return p;
}

MultiPoly MultiPoly::sum_of(std::size_t nvars, const std::vector<std::size_t>& vars) {
    MultiPoly p(nvars);
    for (std::size_t v : vars) p += variable(nvars, v);
    return p;
}

void MultiPoly::add_term(const Exponent& exp, const Rational& c) {
    if (exp.size() != nvars_) throw PolyError("exponent length does not match nvars");
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(exp, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

Rational MultiPoly::coefficient(const Exponent& exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Rational(0) : it->second;
}

unsigned MultiPoly::degree_in(std::size_t var) const {
    if (var >= nvars_) throw PolyError("variable index out of range");
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
}

unsigned MultiPoly::total_degree() const {
    if (is_zero()) throw PolyError("total degree of the zero polynomial");
    const Exponent& lead = terms_.begin()->first;
    return std::accumulate(lead.begin(), lead.end(), 0U);
}

bool MultiPoly::is_homogeneous() const {
    if (is_zero()) return true;
    unsigned d = total_degree();
    return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) {
        return std::accumulate(t.first.begin(), t.first.end(), 0U) == d;
    });
}

std::vector<std::size_t> MultiPoly::occurring_variables() const {
    std::vector<char> seen(nvars_, 0);
    for (const auto& [e, c] : terms_)
        for (std::size_t i = 0; i < nvars_; ++i)
            if (e[i] > 0) seen[i] = 1;
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < nvars_; ++i)
        if (seen[i]) out.push_back(i);
    return out;
}

void MultiPoly::require_same_nvars(const MultiPoly& q) const {
    if (nvars_ != q.nvars_)
        throw PolyError("nvars mismatch: " + std::to_string(nvars_) + " vs " + std::to_string(q.nvars_));
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& q) {
    require_same_nvars(q);
    for (const auto& [e, c] : q.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& q) {
    require_same_nvars(q);
    for (const auto& [e, c] : q.terms_) add_term(e, -c);
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, coeff] : terms_) coeff *= c;
    return *this;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

MultiPoly operator*(const MultiPoly& p, const MultiPoly& q) {
    p.require_same_nvars(q);
    MultiPoly out(p.nvars_);
    Exponent e(p.nvars_);
    for (const auto& [ea, ca] : p.terms_) {
        for (const auto& [eb, cb] : q.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

MultiPoly pow(const MultiPoly& p, unsigned k) {
    MultiPoly result = MultiPoly::constant(p.nvars(), 1);
    MultiPoly base = p;
    while (k > 0) {
        if (k & 1U) result = result * base;
        k >>= 1U;
        if (k > 0) base = base * base;
    }
    return result;
}

std::string render_gaussian(const GaussianRational& z) {
    std::ostringstream out;
    if (sgn(z.im) == 0) return render_rational(z.re);
    if (sgn(z.re) != 0) out << render_rational(z.re) << (sgn(z.im) > 0 ? "+" : "-");
    else if (sgn(z.im) < 0) out << "-";
    Rational a = abs(z.im);
    if (a != 1) out << render_rational(a) << "*";
    out << "i";
    return out.str();
}

MultiPoly substitute_real(const MultiPoly& p, std::size_t var, const Rational& a) {
    if (var >= p.nvars()) throw PolyError("variable index out of range");
    MultiPoly out(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        Exponent reduced = e;
        reduced[var] = 0;
        Rational factor;
        mpz_class num;
        mpz_class den;
        mpz_pow_ui(num.get_mpz_t(), a.get_num_mpz_t(), e[var]);
        mpz_pow_ui(den.get_mpz_t(), a.get_den_mpz_t(), e[var]);
        factor = Rational(num, den);
        factor.canonicalize();
        out.add_term(reduced, c * factor);
    }
    return out;
}

MultiPoly substitute_linear(const MultiPoly& p, std::size_t var, const LinearForm& form) {
    const std::size_t n = p.nvars();
    if (var >= n) throw PolyError("variable index out of range");
    if (form.coeffs.size() != n) throw PolyError("linear form length does not match nvars");

    MultiPoly linear = MultiPoly::constant(n, form.constant);
    for (std::size_t i = 0; i < n; ++i) linear += MultiPoly::variable(n, i) * form.coeffs[i];

    std::map<unsigned, MultiPoly> by_power;
    for (const auto& [e, c] : p.terms()) {
        Exponent rest = e;
        rest[var] = 0;
        auto [it, inserted] = by_power.try_emplace(e[var], n);
        it->second.add_term(rest, c);
    }

    MultiPoly out(n);
    MultiPoly power = MultiPoly::constant(n, 1);
    unsigned current = 0;
    for (const auto& [k, coeff] : by_power) {
        while (current < k) {
            power = power * linear;
            ++current;
        }
        out += coeff * power;
    }
    return out;
}

MultiPoly identify_variables(const MultiPoly& p, const std::vector<std::size_t>& map, std::size_t k) {
    if (map.size() != p.nvars()) throw PolyError("identification map must cover every variable");
    for (std::size_t target : map)
        if (target >= k) throw PolyError("identification target out of range");
    MultiPoly out(k);
    Exponent e(k);
    for (const auto& [src, c] : p.terms()) {
        std::fill(e.begin(), e.end(), 0U);
        for (std::size_t i = 0; i < src.size(); ++i) e[map[i]] += src[i];
        out.add_term(e, c);
    }
    return out;
}

MultiPoly reverse_variable(const MultiPoly& p, std::size_t var) {
    if (p.is_zero()) throw PolyError("reversal of the zero polynomial");
    const unsigned d = p.degree_in(var);
    MultiPoly out(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        Exponent r = e;
        r[var] = d - e[var];
        out.add_term(r, (e[var] % 2 == 0) ? c : Rational(-c));
    }
    return out;
}

MultiPoly partial_derivative(const MultiPoly& p, std::size_t var) {
    if (var >= p.nvars()) throw PolyError("variable index out of range");
    MultiPoly out(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        if (e[var] == 0) continue;
        Exponent r = e;
        --r[var];
        out.add_term(r, c * e[var]);
    }
    return out;
}

namespace {

template <typename T>
T eval_generic(const MultiPoly& p, const std::vector<T>& point) {
    if (point.size() != p.nvars()) throw PolyError("evaluation point length does not match nvars");
    // powers[i][k] = point[i]^k, filled lazily up to the degree in x_i
    std::vector<std::vector<T>> powers(point.size());
    for (std::size_t i = 0; i < point.size(); ++i) {
        unsigned d = p.degree_in(i);
        powers[i].reserve(d + 1);
        powers[i].push_back(T(Rational(1)));
        for (unsigned k = 1; k <= d; ++k) powers[i].push_back(powers[i].back() * point[i]);
    }
    T sum(Rational(0));
    for (const auto& [e, c] : p.terms()) {
        T term(c);
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) term = term * powers[i][e[i]];
        sum = sum + term;
    }
    return sum;
}

}  // namespace

Rational eval_rational(const MultiPoly& p, const std::vector<Rational>& point) { return eval_generic(p, point); }

GaussianRational eval_gaussian(const MultiPoly& p, const std::vector<GaussianRational>& point) {
    return eval_generic(p, point);
}

std::string render(const MultiPoly& p, std::string_view var_prefix) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        const bool negative = sgn(c) < 0;
        if (first) {
            if (negative) out << "-";
        } else {
            out << (negative ? " - " : " + ");
        }
        first = false;
        Rational a = abs(c);
        bool constant = std::all_of(e.begin(), e.end(), [](unsigned x) { return x == 0; });
        bool need_star = false;
        if (a != 1 || constant) {
            out << render_rational(a);
            need_star = true;
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (need_star) out << "*";
            out << var_prefix << i;
            if (e[i] > 1) out << "^" << e[i];
            need_star = true;
        }
    }
    return out.str();
}

namespace {

class PolyParser {
public:
    PolyParser(std::string_view text, std::string_view prefix) : text_(text), prefix_(prefix) {}

    struct RawTerm {
        Rational coeff;
        std::vector<std::pair<std::size_t, unsigned>> factors;
    };

    std::vector<RawTerm> parse() {
        std::vector<RawTerm> out;
        skip_ws();
        bool negative = false;
        if (peek() == '-') {
            negative = true;
            ++pos_;
        }
        while (true) {
            skip_ws();
            RawTerm t = term();
            if (negative) t.coeff = -t.coeff;
            out.push_back(std::move(t));
            skip_ws();
            if (pos_ == text_.size()) break;
            char op = text_[pos_];
            if (op != '+' && op != '-') fail("expected '+' or '-'");
            negative = op == '-';
            ++pos_;
        }
        return out;
    }

private:
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw PolyError("polynomial parse error at byte " + std::to_string(pos_) + ": " + what);
    }

    std::string_view digits() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected digits");
        return text_.substr(start, pos_ - start);
    }

    RawTerm term() {
        RawTerm t{Rational(1), {}};
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            std::size_t start = pos_;
            digits();
            if (peek() == '/') {
                ++pos_;
                digits();
            }
            t.coeff = parse_rational(text_.substr(start, pos_ - start));
            skip_ws();
            if (peek() != '*') return t;
            ++pos_;
            skip_ws();
        }
        while (true) {
            if (text_.substr(pos_, prefix_.size()) != prefix_) fail("expected variable");
            pos_ += prefix_.size();
            auto index = static_cast<std::size_t>(std::stoull(std::string(digits())));
            unsigned exp = 1;
            if (peek() == '^') {
                ++pos_;
                exp = static_cast<unsigned>(std::stoul(std::string(digits())));
            }
            t.factors.emplace_back(index, exp);
            skip_ws();
            if (peek() != '*') break;
            ++pos_;
            skip_ws();
        }
        return t;
    }

    std::string_view text_;
    std::string_view prefix_;
    std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(std::string_view text, std::optional<std::size_t> nvars, std::string_view var_prefix) {
    auto raw = PolyParser(text, var_prefix).parse();
    std::size_t needed = 0;
    for (const auto& t : raw)
        for (const auto& [i, e] : t.factors) needed = std::max(needed, i + 1);
    std::size_t n = nvars.value_or(needed);
    if (needed > n) throw PolyError("variable index exceeds nvars");
    MultiPoly p(n);
    for (const auto& t : raw) {
        Exponent e(n, 0);
        for (const auto& [i, x] : t.factors) e[i] += x;
        p.add_term(e, t.coeff);
    }
    return p;
}

}  // namespace treestab
