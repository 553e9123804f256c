#ifndef CHARCALC_RATIONAL_HPP
#define CHARCALC_RATIONAL_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace charcalc
{

using integer = mpz_class;
using rational = mpq_class;
using rat_vector = std::vector<rational>;

// Exponent vectors of monomials in e^{-alpha_i}, and positive roots in
// simple-root coordinates, share this representation.
using int_vector = std::vector<std::int64_t>;

/// Base class of every error raised by the library.
class error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input (type labels, weights, JSON payloads).
class parse_error : public error
{
public:
    using error::error;
};

/// A well-formed request that has no answer in the mathematical domain.
class domain_error : public error
{
public:
    using error::error;
};

/// Weyl group enumeration exceeded the configured cap.
class enumeration_limit_error : public domain_error
{
public:
    using domain_error::domain_error;
};

namespace detail
{

inline bool is_decimal_integer(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        s.remove_prefix(1);
    }
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (c < '0' || c > '9') {
            return false;
        }
    }
    return true;
}

inline std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
        s.remove_suffix(1);
    }
    return s;
}

} // namespace detail

/// Parses "p" or "p/q" with decimal integers p, q (q != 0). No floats.
inline rational parse_rational(std::string_view text)
{
    const std::string_view s = detail::trim(text);
    const auto slash = s.find('/');
    const std::string_view num = s.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : s.substr(slash + 1);
    if (!detail::is_decimal_integer(num) || !detail::is_decimal_integer(den) || den.front() == '-') {
        throw parse_error("not an exact rational: '" + std::string(text) + "'");
    }
    integer n(std::string(num.front() == '+' ? num.substr(1) : num), 10);
    integer d(std::string(den.front() == '+' ? den.substr(1) : den), 10);
    if (d == 0) {
        throw parse_error("zero denominator in '" + std::string(text) + "'");
    }
    rational r(n, d);
    r.canonicalize();
    return r;
}

inline std::string to_string(const rational &q)
{
    return q.get_str();
}

inline std::string to_string(const integer &z)
{
    return z.get_str();
}

inline bool is_integral(const rational &q)
{
    return q.get_den() == 1;
}

inline integer floor(const rational &q)
{
    integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

/// Fractional part in [0, 1).
inline rational frac(const rational &q)
{
    rational r = q - rational(floor(q));
    r.canonicalize();
    return r;
}

/// Converts an integral rational to int64, throwing if it does not fit.
inline std::int64_t to_int64(const rational &q)
{
    if (!is_integral(q) || !q.get_num().fits_slong_p()) {
        throw domain_error("value " + to_string(q) + " is not a machine integer");
    }
    return q.get_num().get_si();
}

inline bool lex_less(const rat_vector &a, const rat_vector &b)
{
    const auto n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] < b[i]) {
            return true;
        }
        if (b[i] < a[i]) {
            return false;
        }
    }
    return a.size() < b.size();
}

} // namespace charcalc

#endif
