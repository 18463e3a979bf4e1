#include "cremona/rational.hpp"

#include <cctype>
#include <ostream>

namespace cremona {

Rat::Rat(long num, long den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rat Rat::parse(const std::string& text) {
    if (text.empty()) throw StructuralError("empty rational literal");
    auto is_int = [](const std::string& s) {
        std::size_t i = (s[0] == '-') ? 1 : 0;
        if (i >= s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    const auto slash = text.find('/');
    std::string num = (slash == std::string::npos) ? text : text.substr(0, slash);
    std::string den = (slash == std::string::npos) ? "1" : text.substr(slash + 1);
    if (!is_int(num) || !is_int(den) || den[0] == '-')
        throw StructuralError("bad rational literal: '" + text + "'");
    mpz_class n(num, 10), d(den, 10);
    if (d == 0) throw StructuralError("zero denominator in '" + text + "'");
    Rat r;
    r.v_ = mpq_class(n, d);
    r.v_.canonicalize();
    return r;
}

Rat Rat::operator-() const {
    Rat r;
    r.v_ = -v_;
    return r;
}

Rat& Rat::operator+=(const Rat& o) {
    v_ += o.v_;
    return *this;
}

Rat& Rat::operator-=(const Rat& o) {
    v_ -= o.v_;
    return *this;
}

Rat& Rat::operator*=(const Rat& o) {
    v_ *= o.v_;
    return *this;
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw DomainError("rational division by zero");
    v_ /= o.v_;
    return *this;
}

Rat Rat::abs() const {
    Rat r;
    r.v_ = ::abs(v_);
    return r;
}

Rat Rat::inverse() const {
    if (is_zero()) throw DomainError("inverse of zero");
    Rat r;
    r.v_ = 1 / v_;
    return r;
}

std::string Rat::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_str();
}

Rat Rat::from_mpq(mpq_class q) {
    q.canonicalize();
    Rat r;
    r.v_ = std::move(q);
    return r;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

}  // namespace cremona
