#ifndef CHARCALC_LAURENT_POLY_HPP
#define CHARCALC_LAURENT_POLY_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include <charcalc/rational.hpp>
#include <charcalc/root_system.hpp>

namespace charcalc
{

/// Graded lexicographic order on exponent vectors.
struct grlex_less {
    bool operator()(const int_vector &a, const int_vector &b) const
    {
        const auto ha = height(a), hb = height(b);
        if (ha != hb) {
            return ha < hb;
        }
        return a < b;
    }
};

/// Integer polynomial in x_i = e^{-alpha_i}. The exponent vector m stands
/// for e^{-(m_1 alpha_1 + ... + m_N alpha_N)}; exponents are non-negative and
/// zero coefficients are never stored.
class LaurentPoly
{
public:
    using term_map = std::map<int_vector, integer, grlex_less>;

    LaurentPoly() = default;
    explicit LaurentPoly(std::size_t nvars) : nvars_(nvars) {}

    static LaurentPoly constant(std::size_t nvars, const integer &c)
    {
        LaurentPoly p(nvars);
        p.add_term(int_vector(nvars, 0), c);
        return p;
    }
    static LaurentPoly one(std::size_t nvars)
    {
        return constant(nvars, 1);
    }
    static LaurentPoly monomial(const int_vector &exp, const integer &c = 1)
    {
        LaurentPoly p(exp.size());
        p.add_term(exp, c);
        return p;
    }
    /// 1 - x^beta
    static LaurentPoly one_minus(const int_vector &beta)
    {
        LaurentPoly p = one(beta.size());
        p.add_term(beta, -1);
        return p;
    }

    std::size_t nvars() const
    {
        return nvars_;
    }
    bool is_zero() const
    {
        return terms_.empty();
    }
    std::size_t size() const
    {
        return terms_.size();
    }
    const term_map &terms() const
    {
        return terms_;
    }
    auto begin() const
    {
        return terms_.begin();
    }
    auto end() const
    {
        return terms_.end();
    }

    integer coefficient(const int_vector &exp) const
    {
        const auto it = terms_.find(exp);
        return it == terms_.end() ? integer(0) : it->second;
    }

    void add_term(const int_vector &exp, const integer &c)
    {
        if (exp.size() != nvars_) {
            throw domain_error("exponent vector has wrong length");
        }
        if (std::any_of(exp.begin(), exp.end(), [](auto e) { return e < 0; })) {
            throw domain_error("negative exponent in polynomial term");
        }
        if (c == 0) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(exp, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) {
                terms_.erase(it);
            }
        }
    }

    /// Largest total degree; -1 for the zero polynomial.
    std::int64_t degree() const
    {
        return terms_.empty() ? -1 : height(terms_.rbegin()->first);
    }

    /// Exponent of the greatest common monomial factor.
    int_vector gcm_exponent() const
    {
        if (terms_.empty()) {
            return int_vector(nvars_, 0);
        }
        int_vector m = terms_.begin()->first;
        for (const auto &[e, c] : terms_) {
            for (std::size_t i = 0; i < nvars_; ++i) {
                m[i] = std::min(m[i], e[i]);
            }
        }
        return m;
    }

    /// Multiplies by x^shift (shift may be negative if the result stays in S).
    LaurentPoly shifted(const int_vector &shift) const
    {
        LaurentPoly out(nvars_);
        for (const auto &[e, c] : terms_) {
            int_vector f = e;
            for (std::size_t i = 0; i < nvars_; ++i) {
                f[i] += shift[i];
            }
            out.add_term(f, c);
        }
        return out;
    }

    integer coefficient_sum() const
    {
        integer s = 0;
        for (const auto &[e, c] : terms_) {
            s += c;
        }
        return s;
    }

    LaurentPoly &operator+=(const LaurentPoly &o)
    {
        check(o);
        for (const auto &[e, c] : o.terms_) {
            add_term(e, c);
        }
        return *this;
    }
    LaurentPoly &operator-=(const LaurentPoly &o)
    {
        check(o);
        for (const auto &[e, c] : o.terms_) {
            add_term(e, -c);
        }
        return *this;
    }
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly &b)
    {
        return a += b;
    }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly &b)
    {
        return a -= b;
    }
    LaurentPoly operator-() const
    {
        LaurentPoly out(nvars_);
        for (const auto &[e, c] : terms_) {
            out.terms_.emplace_hint(out.terms_.end(), e, -c);
        }
        return out;
    }
    LaurentPoly &operator*=(const integer &k)
    {
        if (k == 0) {
            terms_.clear();
        } else {
            for (auto &[e, c] : terms_) {
                c *= k;
            }
        }
        return *this;
    }
    friend LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b)
    {
        a.check(b);
        LaurentPoly out(a.nvars_);
        int_vector e(a.nvars_);
        for (const auto &[ea, ca] : a.terms_) {
            for (const auto &[eb, cb] : b.terms_) {
                for (std::size_t i = 0; i < a.nvars_; ++i) {
                    e[i] = ea[i] + eb[i];
                }
                out.add_term(e, ca * cb);
            }
        }
        return out;
    }

    /// Terms of total degree <= depth.
    LaurentPoly truncated(std::int64_t depth) const
    {
        LaurentPoly out(nvars_);
        for (const auto &[e, c] : terms_) {
            if (height(e) > depth) {
                break;
            }
            out.terms_.emplace_hint(out.terms_.end(), e, c);
        }
        return out;
    }

    friend bool operator==(const LaurentPoly &a, const LaurentPoly &b)
    {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const LaurentPoly &a, const LaurentPoly &b)
    {
        return !(a == b);
    }

private:
    void check(const LaurentPoly &o) const
    {
        if (o.nvars_ != nvars_) {
            throw domain_error("polynomials over different numbers of variables");
        }
    }

    std::size_t nvars_ = 0;
    term_map terms_;
};

/// Exact division by 1 - x^beta for any non-zero beta with non-negative
/// entries. Returns nullopt when 1 - x^beta does not divide f in S.
///
/// Monomials split into beta-strings {m0 + k beta}. Along a string f is a
/// univariate polynomial in t = x^beta, divisible by 1 - t iff its
/// coefficients sum to zero; the quotient coefficients are the prefix sums.
inline std::optional<LaurentPoly> divide_by_factor(const LaurentPoly &f, const int_vector &beta)
{
    const auto n = f.nvars();
    if (beta.size() != n || height(beta) <= 0 || std::any_of(beta.begin(), beta.end(), [](auto b) { return b < 0; })) {
        throw domain_error("divide_by_factor: beta must be a non-zero non-negative vector");
    }
    // string base -> (position along string, coefficient), positions ascending
    // because grlex visits m before m + beta.
    std::map<int_vector, std::vector<std::pair<std::int64_t, integer>>> strings;
    for (const auto &[e, c] : f) {
        std::int64_t k = -1;
        for (std::size_t i = 0; i < n; ++i) {
            if (beta[i] > 0) {
                const auto q = e[i] / beta[i];
                k = k < 0 ? q : std::min(k, q);
            }
        }
        int_vector base = e;
        for (std::size_t i = 0; i < n; ++i) {
            base[i] -= k * beta[i];
        }
        strings[std::move(base)].emplace_back(k, c);
    }
    LaurentPoly q(n);
    for (const auto &[base, entries] : strings) {
        integer running = 0;
        for (std::size_t idx = 0; idx < entries.size(); ++idx) {
            running += entries[idx].second;
            const auto next = idx + 1 < entries.size() ? entries[idx + 1].first : entries[idx].first + 1;
            if (running == 0) {
                continue;
            }
            for (auto k = entries[idx].first; k < next; ++k) {
                int_vector e = base;
                for (std::size_t i = 0; i < n; ++i) {
                    e[i] += k * beta[i];
                }
                q.add_term(e, running);
            }
        }
        if (running != 0) {
            return std::nullopt;
        }
    }
    return q;
}

/// As above, additionally requiring beta to be a positive root of rs.
inline std::optional<LaurentPoly> divide_by_factor(const RootSystem &rs, const LaurentPoly &f, const int_vector &beta)
{
    if (!rs.is_positive_root(beta)) {
        throw domain_error("divide_by_factor: not a positive root of " + rs.label());
    }
    return divide_by_factor(f, beta);
}

} // namespace charcalc

#endif
