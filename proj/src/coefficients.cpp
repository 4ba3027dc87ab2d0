#include "clusterwp/coefficients.hpp"

#include <cctype>
#include <sstream>
#include <utility>

namespace clusterwp {

namespace {

std::size_t hash_mpz(const mpz_class& z) {
    std::size_t h = mpz_sgn(z.get_mpz_t()) < 0 ? 0x9e3779b9u : 0;
    const auto limbs = mpz_size(z.get_mpz_t());
    for (std::size_t k = 0; k < limbs; ++k) {
        h ^= static_cast<std::size_t>(mpz_getlimbn(z.get_mpz_t(), k)) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

Rational parse_rational(std::string_view s, std::string_view whole) {
    bool neg = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    auto slash = s.find('/');
    std::string_view num = s.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw ParseError("malformed number literal '" + std::string(whole) + "'");
    mpz_class n{std::string(num)}, d{std::string(den)};
    if (d == 0) throw ParseError("zero denominator in literal '" + std::string(whole) + "'");
    if (neg) n = -n;
    return Rational(n, d);
}

}  // namespace

Rational::Rational(const mpz_class& num, const mpz_class& den) : q_(num, den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DivisionByZero("rational division by zero");
    q_ /= o.q_;
    return *this;
}

std::string Rational::str() const {
    return q_.get_str();
}

std::size_t Rational::hash() const {
    return hash_mpz(q_.get_num()) * 31 + hash_mpz(q_.get_den());
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    if (im_.is_zero() && o.im_.is_zero()) {
        re_ *= o.re_;
        return *this;
    }
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussianRational GaussianRational::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    if (im_.is_zero()) return {Rational(1) / re_};
    Rational n = norm();
    return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    if (o.is_zero()) throw DivisionByZero("division by zero");
    if (o.im_.is_zero()) {
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    return *this *= o.inverse();
}

GaussianRational GaussianRational::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    GaussianRational result(1), base = *this;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

std::string GaussianRational::str() const {
    if (im_.is_zero()) return re_.str();
    if (re_.is_zero()) {
        if (im_.is_one()) return "i";
        if (im_ == Rational(-1)) return "-i";
    }
    std::string out = re_.str();
    out += im_.sign() < 0 ? "-" : "+";
    out += (im_.sign() < 0 ? -im_ : im_).str();
    out += "i";
    return out;
}

std::size_t GaussianRational::hash() const {
    return re_.hash() ^ (im_.hash() * 0x100000001b3ull);
}

GaussianRational GaussianRational::parse(std::string_view text) {
    if (text.empty()) throw ParseError("empty number literal");
    if (text.back() != 'i') return {parse_rational(text, text)};
    std::string_view body = text.substr(0, text.size() - 1);
    std::size_t split = std::string_view::npos;
    for (std::size_t k = body.size(); k-- > 1;) {
        if (body[k] == '+' || body[k] == '-') {
            split = k;
            break;
        }
    }
    Rational re;
    std::string_view im_text = body;
    if (split != std::string_view::npos) {
        re = parse_rational(body.substr(0, split), text);
        im_text = body.substr(split);
    }
    Rational im;
    if (im_text.empty() || im_text == "+")
        im = Rational(1);
    else if (im_text == "-")
        im = Rational(-1);
    else
        im = parse_rational(im_text, text);
    return {re, im};
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }
std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.str(); }

GaussianRational gr_arith(const GaussianRational& a, const GaussianRational& b, ArithOp op) {
    switch (op) {
        case ArithOp::add: return a + b;
        case ArithOp::sub: return a - b;
        case ArithOp::mul: return a * b;
        case ArithOp::div: return a / b;
    }
    throw std::invalid_argument("unknown arithmetic op");
}

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, std::vector<GaussianRational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows * cols) throw std::invalid_argument("matrix entry count != rows*cols");
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
    ExactMatrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) m(k, k) = 1;
    return m;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

std::size_t rank(ExactMatrix m) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t pivot = r;
        while (pivot < m.rows() && m(pivot, c).is_zero()) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != r)
            for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(pivot, k), m(r, k));
        const GaussianRational inv = m(r, c).inverse();
        for (std::size_t row = r + 1; row < m.rows(); ++row) {
            if (m(row, c).is_zero()) continue;
            const GaussianRational factor = m(row, c) * inv;
            for (std::size_t k = c; k < m.cols(); ++k) m(row, k) -= factor * m(r, k);
        }
        ++r;
    }
    return r;
}

}  // namespace clusterwp
