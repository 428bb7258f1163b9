#include "rotset/rational.hpp"

#include <stdexcept>

namespace rotset {

namespace {

bool is_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (c < '0' || c > '9') return false;
    }
    return true;
}

Integer parse_integer(std::string_view s, std::string_view whole) {
    std::string_view body = s;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) body.remove_prefix(1);
    if (!is_digits(body)) {
        throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
    }
    std::string buf(s.front() == '+' ? s.substr(1) : s);
    return Integer(buf, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text, text));
    }
    Integer num = parse_integer(text.substr(0, slash), text);
    std::string_view den_text = text.substr(slash + 1);
    if (!is_digits(den_text)) {
        throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
    }
    Integer den(std::string(den_text), 10);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string format_rational(const Rational& value) {
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

bool is_integer(const Rational& value) { return value.get_den() == 1; }

HomologyVector::HomologyVector(std::vector<Rational> coords) : coords_(std::move(coords)) {}

HomologyVector::HomologyVector(std::initializer_list<Rational> coords) : coords_(coords) {}

HomologyVector HomologyVector::parse(std::initializer_list<std::string_view> coords) {
    std::vector<Rational> out;
    out.reserve(coords.size());
    for (auto c : coords) out.push_back(parse_rational(c));
    return HomologyVector(std::move(out));
}

HomologyVector HomologyVector::unit(std::size_t dim, std::size_t axis) {
    HomologyVector v(dim);
    v.coords_.at(axis) = 1;
    return v;
}

bool HomologyVector::is_zero() const {
    for (const auto& c : coords_) {
        if (sgn(c) != 0) return false;
    }
    return true;
}

HomologyVector& HomologyVector::operator+=(const HomologyVector& other) {
    if (other.dim() != dim()) throw std::invalid_argument("vector dimension mismatch");
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += other.coords_[i];
    return *this;
}

HomologyVector& HomologyVector::operator-=(const HomologyVector& other) {
    if (other.dim() != dim()) throw std::invalid_argument("vector dimension mismatch");
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= other.coords_[i];
    return *this;
}

HomologyVector& HomologyVector::operator*=(const Rational& scale) {
    for (auto& c : coords_) c *= scale;
    return *this;
}

bool operator==(const HomologyVector& a, const HomologyVector& b) { return a.coords_ == b.coords_; }

std::strong_ordering operator<=>(const HomologyVector& a, const HomologyVector& b) {
    const std::size_t n = std::min(a.dim(), b.dim());
    for (std::size_t i = 0; i < n; ++i) {
        const int c = cmp(a.coords_[i], b.coords_[i]);
        if (c < 0) return std::strong_ordering::less;
        if (c > 0) return std::strong_ordering::greater;
    }
    return a.dim() <=> b.dim();
}

Rational HomologyVector::dot(const HomologyVector& other) const {
    if (other.dim() != dim()) throw std::invalid_argument("vector dimension mismatch");
    Rational acc = 0;
    for (std::size_t i = 0; i < coords_.size(); ++i) acc += coords_[i] * other.coords_[i];
    return acc;
}

std::string HomologyVector::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) out += ", ";
        out += format_rational(coords_[i]);
    }
    return out + ")";
}

std::ostream& operator<<(std::ostream& os, const HomologyVector& v) { return os << v.to_string(); }

}  // namespace rotset
