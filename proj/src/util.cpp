#include "idnls/util.hpp"

#include <cstdio>
#include <stdexcept>

namespace idnls {

std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return std::string(buf);
}

cplx parse_complex(const std::string& s) {
    std::string t;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (t.empty()) throw std::invalid_argument("empty complex literal");

    // split at the last +/- that is not an exponent sign and not leading
    size_t split = std::string::npos;
    for (size_t i = t.size(); i-- > 1;) {
        char c = t[i];
        if ((c == '+' || c == '-') && t[i - 1] != 'e' && t[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    auto parse_part = [](std::string p, bool expect_i) -> double {
        if (expect_i) {
            if (p.empty() || (p.back() != 'i' && p.back() != 'j'))
                throw std::invalid_argument("missing imaginary suffix");
            p.pop_back();
            if (p.empty() || p == "+") return 1.0;
            if (p == "-") return -1.0;
        }
        size_t used = 0;
        double v = std::stod(p, &used);
        if (used != p.size()) throw std::invalid_argument("bad complex literal part: " + p);
        return v;
    };

    bool has_i = (t.back() == 'i' || t.back() == 'j');
    if (split == std::string::npos) {
        if (has_i) return cplx(0.0, parse_part(t, true));
        return cplx(parse_part(t, false), 0.0);
    }
    if (!has_i) throw std::invalid_argument("bad complex literal: " + t);
    return cplx(parse_part(t.substr(0, split), false), parse_part(t.substr(split), true));
}

std::string format_complex(const cplx& z) {
    std::string s = fmt17(z.real());
    if (z.imag() >= 0 || std::isnan(z.imag())) s += "+";
    s += fmt17(z.imag()) + "i";
    return s;
}

}  // namespace idnls
