#include "rational.hpp"

namespace lpadic {

void Rat::reduce() {
    if (den_ == 0) throw std::domain_error("Rat: zero denominator");
    if (den_ < 0) { num_ = -num_; den_ = -den_; }
    if (num_ == 0) { den_ = 1; return; }
    Int g = gcd(num_ < 0 ? Int(-num_) : num_, den_);
    if (g > 1) { num_ /= g; den_ /= g; }
}

Rat::Rat(Int n, Int d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }

Rat Rat::operator-() const {
    Rat r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rat& Rat::operator+=(const Rat& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    reduce();
    return *this;
}

Rat& Rat::operator-=(const Rat& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    reduce();
    return *this;
}

Rat& Rat::operator*=(const Rat& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    reduce();
    return *this;
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.num_ == 0) throw std::domain_error("Rat: division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    reduce();
    return *this;
}

std::string Rat::str() const {
    return num_.str() + "/" + den_.str();
}

Rat Rat::parse(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(Int(s));
    return Rat(Int(s.substr(0, slash)), Int(s.substr(slash + 1)));
}

Rat rat_pow(const Rat& b, long e) {
    if (e == 0) return Rat(1);
    if (e < 0) return Rat(1) / rat_pow(b, -e);
    Rat acc(1), sq = b;
    long k = e;
    while (k > 0) {
        if (k & 1) acc *= sq;
        k >>= 1;
        if (k) sq *= sq;
    }
    return acc;
}

Int rat_floor(const Rat& q) {
    Int quo = q.num() / q.den(); // truncates toward zero
    if (q.num() < 0 && quo * q.den() != q.num()) quo -= 1;
    return quo;
}

Int rat_ceil(const Rat& q) {
    Int quo = q.num() / q.den();
    if (q.num() > 0 && quo * q.den() != q.num()) quo += 1;
    return quo;
}

long vp_int(Int n, long p) {
    if (n == 0) throw std::domain_error("vp_int: zero");
    if (n < 0) n = -n;
    long v = 0;
    while (n % p == 0) { n /= p; ++v; }
    return v;
}

ValQ vp_rational(const Rat& q, long p) {
    if (q.is_zero()) return ValQ::infinity();
    return ValQ::of(Rat(vp_int(q.num(), p) - vp_int(q.den(), p)));
}

std::string ValQ::str() const {
    return inf ? "inf" : q.str();
}

std::string report_num(const Rat& q) {
    if (q.is_integer()) return q.num().str();
    return q.str();
}

std::string report_num(const ValQ& v) {
    if (v.inf) return "inf";
    return report_num(v.q);
}

} // namespace lpadic
