#ifndef CHARCALC_RATIONAL_CHAR_HPP
#define CHARCALC_RATIONAL_CHAR_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include <charcalc/laurent_poly.hpp>
#include <charcalc/rational.hpp>
#include <charcalc/root_system.hpp>

namespace charcalc
{

/// One numerator summand e^mu * f, with f in S.
struct CharTerm {
    Weight mu;
    LaurentPoly f;

    friend bool operator==(const CharTerm &a, const CharTerm &b)
    {
        return a.mu == b.mu && a.f == b.f;
    }
};

/// Denominator multiset: positive root beta -> exponent n_beta >= 1.
using Denominator = std::map<int_vector, int, root_less>;

/// Element of the character ring in rational form
///
///     sum_i e^{mu_i} f_i / prod_beta (1 - e^{-beta})^{n_beta}.
///
/// Every value is kept normalized: the mu_i lie in pairwise distinct cosets
/// of the root lattice, each f_i is non-zero with no common monomial factor,
/// and terms are sorted by mu_i. Under these conditions mu_i depends only on
/// the element, not on the chosen denominator. Cancellation of common
/// (1 - e^{-beta}) factors is done by reduce().
class RationalChar
{
public:
    explicit RationalChar(RootSystem rs) : rs_(std::move(rs)) {}

    RationalChar(RootSystem rs, std::vector<CharTerm> terms, Denominator denom = {})
        : rs_(std::move(rs)), terms_(std::move(terms)), denom_(std::move(denom))
    {
        normalize();
    }

    /// e^mu
    static RationalChar exponential(const RootSystem &rs, const Weight &mu)
    {
        return RationalChar(rs, {CharTerm{mu, LaurentPoly::one(rs.rank())}});
    }
    static RationalChar one(const RootSystem &rs)
    {
        return exponential(rs, Weight::zero(rs.rank()));
    }

    const RootSystem &root_system() const
    {
        return rs_;
    }
    const std::vector<CharTerm> &terms() const
    {
        return terms_;
    }
    const Denominator &denom() const
    {
        return denom_;
    }
    bool is_zero() const
    {
        return terms_.empty();
    }

    /// True when no (1 - e^{-beta}) in the denominator divides every f_i.
    bool is_reduced() const
    {
        for (const auto &[beta, n] : denom_) {
            const bool all_divisible = std::all_of(terms_.begin(), terms_.end(), [&](const CharTerm &t) {
                return divide_by_factor(t.f, beta).has_value();
            });
            if (all_divisible) {
                return false;
            }
        }
        return true;
    }

private:
    friend RationalChar reduce(const RationalChar &a);

    void normalize()
    {
        const auto n = rs_.rank();
        for (auto it = denom_.begin(); it != denom_.end();) {
            if (!rs_.is_positive_root(it->first)) {
                throw domain_error("denominator factor is not a positive root of " + rs_.label());
            }
            if (it->second < 0) {
                throw domain_error("denominator exponents must be positive");
            }
            it = it->second == 0 ? denom_.erase(it) : std::next(it);
        }

        std::map<CosetKey, CharTerm> groups;
        for (auto &t : terms_) {
            if (t.mu.rank() != n || t.f.nvars() != n) {
                throw domain_error("character term rank does not match the root system");
            }
            if (t.f.is_zero()) {
                continue;
            }
            auto key = rs_.coset_key(t.mu);
            auto it = groups.find(key);
            if (it == groups.end()) {
                groups.emplace(std::move(key), std::move(t));
                continue;
            }
            // Re-express both summands over the join of the two representatives.
            CharTerm &acc = it->second;
            const int_vector diff = *rs_.root_lattice_difference(t.mu, acc.mu);
            int_vector join(n), acc_shift(n), t_shift(n);
            for (std::size_t i = 0; i < n; ++i) {
                join[i] = std::max<std::int64_t>(0, diff[i]);
                acc_shift[i] = join[i];
                t_shift[i] = join[i] - diff[i];
                join[i] = -join[i];
            }
            acc.mu = rs_.lower(acc.mu, join);
            acc.f = acc.f.shifted(acc_shift) + t.f.shifted(t_shift);
        }

        terms_.clear();
        for (auto &[key, t] : groups) {
            if (t.f.is_zero()) {
                continue;
            }
            const int_vector m = t.f.gcm_exponent();
            if (height(m) > 0) {
                int_vector neg(n);
                for (std::size_t i = 0; i < n; ++i) {
                    neg[i] = -m[i];
                }
                t.mu = rs_.lower(t.mu, m);
                t.f = t.f.shifted(neg);
            }
            terms_.push_back(std::move(t));
        }
        std::sort(terms_.begin(), terms_.end(), [](const CharTerm &a, const CharTerm &b) { return a.mu < b.mu; });
        if (terms_.empty()) {
            denom_.clear();
        }
    }

    RootSystem rs_;
    std::vector<CharTerm> terms_;
    Denominator denom_;
};

namespace detail
{

inline void check_same(const RationalChar &a, const RationalChar &b)
{
    if (a.root_system() != b.root_system()) {
        throw domain_error("characters over mismatched root systems");
    }
}

inline LaurentPoly one_minus_power(const int_vector &beta, int n)
{
    LaurentPoly p = LaurentPoly::one(beta.size());
    const LaurentPoly factor = LaurentPoly::one_minus(beta);
    for (int k = 0; k < n; ++k) {
        p = p * factor;
    }
    return p;
}

} // namespace detail

/// Cancels every common (1 - e^{-beta}) factor. Factors are visited in
/// root_less order; the result does not depend on it since S is a UFD and
/// distinct positive roots give non-associate irreducible binomials.
inline RationalChar reduce(const RationalChar &a)
{
    RationalChar out = a;
    for (auto it = out.denom_.begin(); it != out.denom_.end();) {
        auto &[beta, n] = *it;
        while (n > 0) {
            std::vector<LaurentPoly> quotients;
            quotients.reserve(out.terms_.size());
            for (const auto &t : out.terms_) {
                auto q = divide_by_factor(t.f, beta);
                if (!q) {
                    break;
                }
                quotients.push_back(std::move(*q));
            }
            if (quotients.size() != out.terms_.size()) {
                break;
            }
            for (std::size_t i = 0; i < quotients.size(); ++i) {
                out.terms_[i].f = std::move(quotients[i]);
            }
            --n;
        }
        it = n == 0 ? out.denom_.erase(it) : std::next(it);
    }
    return out;
}

inline RationalChar negate(const RationalChar &a)
{
    std::vector<CharTerm> terms = a.terms();
    for (auto &t : terms) {
        t.f = -t.f;
    }
    return RationalChar(a.root_system(), std::move(terms), a.denom());
}

inline RationalChar add(const RationalChar &a, const RationalChar &b)
{
    detail::check_same(a, b);
    Denominator common = a.denom();
    for (const auto &[beta, n] : b.denom()) {
        auto &slot = common[beta];
        slot = std::max(slot, n);
    }
    std::vector<CharTerm> terms;
    for (const auto *x : {&a, &b}) {
        LaurentPoly lift = LaurentPoly::one(a.root_system().rank());
        for (const auto &[beta, n] : common) {
            const auto it = x->denom().find(beta);
            const int have = it == x->denom().end() ? 0 : it->second;
            if (n > have) {
                lift = lift * detail::one_minus_power(beta, n - have);
            }
        }
        for (const auto &t : x->terms()) {
            terms.push_back(CharTerm{t.mu, t.f * lift});
        }
    }
    return reduce(RationalChar(a.root_system(), std::move(terms), std::move(common)));
}

inline RationalChar subtract(const RationalChar &a, const RationalChar &b)
{
    return add(a, negate(b));
}

/// Convolution product with denominators merged by adding exponents and no
/// cancellation.
inline RationalChar multiply_unreduced(const RationalChar &a, const RationalChar &b)
{
    detail::check_same(a, b);
    Denominator denom = a.denom();
    for (const auto &[beta, n] : b.denom()) {
        denom[beta] += n;
    }
    std::vector<CharTerm> terms;
    terms.reserve(a.terms().size() * b.terms().size());
    for (const auto &x : a.terms()) {
        for (const auto &y : b.terms()) {
            terms.push_back(CharTerm{x.mu + y.mu, x.f * y.f});
        }
    }
    return RationalChar(a.root_system(), std::move(terms), std::move(denom));
}

inline RationalChar mul(const RationalChar &a, const RationalChar &b)
{
    return reduce(multiply_unreduced(a, b));
}

inline RationalChar scale(const RationalChar &a, const integer &k)
{
    std::vector<CharTerm> terms = a.terms();
    for (auto &t : terms) {
        t.f *= k;
    }
    return RationalChar(a.root_system(), std::move(terms), a.denom());
}

inline Denominator denominator_roots(const RationalChar &a)
{
    return reduce(a).denom();
}

/// Structural equality of reduced forms; by uniqueness of the reduced
/// rational form this is equality in the character ring.
inline bool equals(const RationalChar &a, const RationalChar &b)
{
    detail::check_same(a, b);
    const RationalChar ra = reduce(a), rb = reduce(b);
    return ra.terms() == rb.terms() && ra.denom() == rb.denom();
}

inline bool operator==(const RationalChar &a, const RationalChar &b)
{
    return equals(a, b);
}
inline bool operator!=(const RationalChar &a, const RationalChar &b)
{
    return !equals(a, b);
}
inline RationalChar operator+(const RationalChar &a, const RationalChar &b)
{
    return add(a, b);
}
inline RationalChar operator-(const RationalChar &a, const RationalChar &b)
{
    return subtract(a, b);
}
inline RationalChar operator*(const RationalChar &a, const RationalChar &b)
{
    return mul(a, b);
}

/// Truncated expansion: the coefficients at mu_i - m for |m| <= depth.
struct SeriesWindow {
    std::map<Weight, integer> coefficients;
    std::int64_t depth = 0;

    integer at(const Weight &w) const
    {
        const auto it = coefficients.find(w);
        return it == coefficients.end() ? integer(0) : it->second;
    }
    friend bool operator==(const SeriesWindow &a, const SeriesWindow &b)
    {
        return a.depth == b.depth && a.coefficients == b.coefficients;
    }
};

namespace detail
{

// s / (1 - x^beta) truncated at total degree depth.
inline LaurentPoly geometric_truncated(const LaurentPoly &s, const int_vector &beta, std::int64_t depth)
{
    LaurentPoly out(s.nvars());
    for (const auto &[m, c] : s) {
        int_vector e = m;
        while (height(e) <= depth) {
            out.add_term(e, c);
            for (std::size_t i = 0; i < e.size(); ++i) {
                e[i] += beta[i];
            }
        }
    }
    return out;
}

} // namespace detail

inline SeriesWindow series_expand(const RationalChar &a, std::int64_t depth)
{
    if (depth < 0) {
        throw domain_error("series depth must be non-negative");
    }
    const auto &rs = a.root_system();
    SeriesWindow out;
    out.depth = depth;
    for (const auto &t : a.terms()) {
        LaurentPoly s = t.f.truncated(depth);
        for (const auto &[beta, n] : a.denom()) {
            for (int k = 0; k < n; ++k) {
                s = detail::geometric_truncated(s, beta, depth);
            }
        }
        for (const auto &[m, c] : s) {
            integer &slot = out.coefficients[rs.lower(t.mu, m)];
            slot += c;
        }
    }
    for (auto it = out.coefficients.begin(); it != out.coefficients.end();) {
        it = it->second == 0 ? out.coefficients.erase(it) : std::next(it);
    }
    return out;
}

} // namespace charcalc

#endif
