#include "planemf/rational.hpp"

#include <ostream>

#include "planemf/errors.hpp"

namespace planemf {

Rational::Rational(long long num, long long den) {
    if (den == 0) throw bad_parameter("rational with zero denominator");
    v_ = mpq_class(static_cast<long>(num), static_cast<long>(den));
    v_.canonicalize();
}

Rational Rational::from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(mpq_class(mpz_class(s)));
        }
        mpz_class n(s.substr(0, slash)), d(s.substr(slash + 1));
        if (d == 0) throw bad_parameter("rational with zero denominator: " + s);
        mpq_class q(n, d);
        return Rational(q);
    } catch (const std::invalid_argument&) {
        throw bad_parameter("malformed rational: " + s);
    }
}

Rational Rational::operator/(const Rational& o) const {
    if (o.is_zero()) throw bad_parameter("rational division by zero");
    return Rational(mpq_class(v_ / o.v_));
}

Rational Rational::floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return Rational(mpq_class(q));
}

Rational Rational::ceil() const {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return Rational(mpq_class(q));
}

long long Rational::num_int64() const {
    if (!v_.get_num().fits_slong_p())
        throw internal_error("rational numerator out of int64 range: " + str());
    return v_.get_num().get_si();
}

long long Rational::den_int64() const {
    if (!v_.get_den().fits_slong_p())
        throw internal_error("rational denominator out of int64 range: " + str());
    return v_.get_den().get_si();
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace planemf
