#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace symca {

// Exact arbitrary-precision arithmetic. All census counts, function values
// and integrals in this library are exact; floating point appears only in
// human-readable report columns.
using BigInt = mpz_class;
using BigRat = mpq_class;

inline BigInt int_pow(unsigned long base, unsigned long exp) {
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

inline BigInt pow2(unsigned long k) { return int_pow(2, k); }
inline BigInt pow4(unsigned long k) { return int_pow(4, k); }

// num/den as a canonical rational; den must be nonzero.
inline BigRat make_rat(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("make_rat: zero denominator");
    BigRat q(num, den);
    q.canonicalize();
    return q;
}

// Division that must be exact; a remainder signals a transcription error in
// a closed form, so it is a hard error rather than a truncation.
inline BigInt exact_div(const BigInt& n, const BigInt& d) {
    if (d == 0) throw std::domain_error("exact_div: zero divisor");
    BigInt q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    if (r != 0) throw std::logic_error("exact_div: " + n.get_str() + " not divisible by " + d.get_str());
    return q;
}

// The integer value of q; hard error when q has a nontrivial denominator.
inline BigInt rat_to_int(const BigRat& q) {
    if (q.get_den() != 1) throw std::logic_error("rat_to_int: " + q.get_str() + " is not an integer");
    return q.get_num();
}

// Serialized "num/den", canonical form, always with an explicit denominator.
inline std::string rat_str(const BigRat& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Decimal rendering with a fixed number of significant digits.
inline std::string decimal_str(const BigRat& q, int significant = 17) {
    mpf_class f(0, 256);
    mpf_set_q(f.get_mpf_t(), q.get_mpq_t());
    char* buf = nullptr;
    gmp_asprintf(&buf, "%.*Fg", significant, f.get_mpf_t());
    std::string s(buf);
    void (*freefunc)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefunc);
    freefunc(buf, s.size() + 1);
    return s;
}

// Parses "a/b" or a plain integer. Decimal notation is rejected.
inline BigRat parse_fraction(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("parse_fraction: empty string");
    if (text.find('.') != std::string::npos)
        throw std::invalid_argument("parse_fraction: decimal input rejected, use a/b");
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return BigRat(BigInt(text));
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        return make_rat(num, den);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("parse_fraction: cannot parse '" + text + "'");
    }
}

}  // namespace symca
