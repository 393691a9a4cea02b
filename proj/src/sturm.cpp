#include "treestab/sturm.hpp"

#include <utility>

namespace treestab {

namespace {

void trim(DenseUnivariate& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

int degree(const DenseUnivariate& p) { return static_cast<int>(p.size()) - 1; }

// Remainder of a modulo b (b nonzero), plus the quotient when requested.
DenseUnivariate divide(DenseUnivariate a, const DenseUnivariate& b, DenseUnivariate* quotient = nullptr) {
    if (quotient) quotient->assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
    while (degree(a) >= degree(b)) {
        const std::size_t shift = a.size() - b.size();
        Rational factor = a.back() / b.back();
        if (quotient) (*quotient)[shift] = factor;
        for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= factor * b[i];
        a.pop_back();
        trim(a);
    }
    if (quotient) trim(*quotient);
    return a;
}

DenseUnivariate derivative(const DenseUnivariate& p) {
    DenseUnivariate out;
    for (std::size_t i = 1; i < p.size(); ++i) out.push_back(p[i] * static_cast<unsigned long>(i));
    trim(out);
    return out;
}

int sign_changes(const std::vector<int>& signs) {
    int changes = 0;
    int last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

}  // namespace

DenseUnivariate to_dense(const MultiPoly& p) {
    if (p.nvars() != 1) throw PolyError("univariate polynomial expected (nvars == 1)");
    DenseUnivariate out(p.is_zero() ? 0 : p.degree_in(0) + 1, Rational(0));
    for (const auto& [e, c] : p.terms()) out[e[0]] = c;
    return out;
}

MultiPoly from_dense(const DenseUnivariate& p) {
    MultiPoly out(1);
    for (std::size_t i = 0; i < p.size(); ++i) out.add_term(Exponent{static_cast<unsigned>(i)}, p[i]);
    return out;
}

DenseUnivariate poly_gcd(DenseUnivariate a, DenseUnivariate b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        DenseUnivariate r = divide(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Rational lead = a.back();
        for (auto& c : a) c /= lead;
    }
    return a;
}

DenseUnivariate square_free_part(const DenseUnivariate& p) {
    DenseUnivariate q = p;
    trim(q);
    if (q.empty()) throw PolyError("square-free part of the zero polynomial");
    DenseUnivariate g = poly_gcd(q, derivative(q));
    DenseUnivariate quotient;
    divide(q, g, &quotient);
    return quotient;
}

int count_distinct_real_roots(const DenseUnivariate& p) {
    DenseUnivariate q = p;
    trim(q);
    if (q.empty()) throw PolyError("root count of the zero polynomial");
    if (degree(q) == 0) return 0;

    std::vector<DenseUnivariate> chain{q, derivative(q)};
    while (!chain.back().empty()) {
        DenseUnivariate r = divide(chain[chain.size() - 2], chain.back());
        for (auto& c : r) c = -c;
        chain.push_back(std::move(r));
    }
    chain.pop_back();

    std::vector<int> at_pos_inf;
    std::vector<int> at_neg_inf;
    for (const auto& f : chain) {
        int s = sgn(f.back());
        at_pos_inf.push_back(s);
        at_neg_inf.push_back(degree(f) % 2 == 0 ? s : -s);
    }
    return sign_changes(at_neg_inf) - sign_changes(at_pos_inf);
}

RootReality sturm_real_rooted(const MultiPoly& p) {
    if (p.is_zero()) throw PolyError("real-rootedness of the zero polynomial");
    DenseUnivariate q = square_free_part(to_dense(p));
    return count_distinct_real_roots(q) == degree(q) ? RootReality::RealRooted : RootReality::HasNonrealRoot;
}

}  // namespace treestab
