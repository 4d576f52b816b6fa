#include "molq/scalar.hpp"

#include <cctype>
#include <ostream>

namespace molq {

std::string field_name(Field f) { return f == Field::Q ? "Q" : "Qi"; }

Field field_from_name(const std::string& name) {
    if (name == "Q") return Field::Q;
    if (name == "Qi") return Field::Qi;
    throw std::invalid_argument("unknown field \"" + name + "\" (expected Q or Qi)");
}

Rational rational_from_string(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    // mpq accepts more than we want (whitespace, hex); keep the format strict.
    std::size_t i = 0;
    if (text[i] == '-' || text[i] == '+') ++i;
    bool digits = false, slash = false;
    for (; i < text.size(); ++i) {
        if (std::isdigit(static_cast<unsigned char>(text[i]))) {
            digits = true;
        } else if (text[i] == '/' && !slash && digits) {
            slash = true;
            digits = false;
        } else {
            throw std::invalid_argument("bad rational literal \"" + text + "\"");
        }
    }
    if (!digits) throw std::invalid_argument("bad rational literal \"" + text + "\"");
    // mpq_set_str rejects a leading '+'.
    Rational q(text[0] == '+' ? text.substr(1) : text);
    if (sgn(q.get_den()) == 0) throw std::invalid_argument("zero denominator in \"" + text + "\"");
    q.canonicalize();
    return q;
}

std::string to_string(const Scalar& s) {
    if (s.is_real()) return s.re().get_str();
    std::string out = s.re().get_str();
    if (sgn(s.im()) >= 0) {
        out += "+" + s.im().get_str();
    } else {
        out += "-" + Rational(-s.im()).get_str();
    }
    return out + "i";
}

Scalar scalar_from_string(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty scalar literal");
    if (text.back() != 'i') return {rational_from_string(text)};
    std::string body = text.substr(0, text.size() - 1);
    // Split at the last sign that is not the leading one; everything before it
    // is the real part, the rest (sign included) the imaginary coefficient.
    std::size_t split = std::string::npos;
    for (std::size_t i = body.size(); i-- > 1;) {
        if (body[i] == '+' || body[i] == '-') {
            split = i;
            break;
        }
    }
    std::string re_part = split == std::string::npos ? "0" : body.substr(0, split);
    std::string im_part = split == std::string::npos ? body : body.substr(split);
    if (im_part.empty() || im_part == "+") im_part = "1";
    if (im_part == "-") im_part = "-1";
    return {rational_from_string(re_part), rational_from_string(im_part)};
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << to_string(s); }

}  // namespace molq
