#include "dtj/poly_io.hpp"

#include <json.hpp>

#include <cctype>
#include <sstream>

namespace dtj {

std::string to_text(const LaurentPoly& f) {
    if (f.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : f.terms()) {
        const bool neg = c < 0;
        Int mag = neg ? Int(-c) : c;
        if (first) {
            if (neg) out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        if (mag != 1 || e == 0) out << mag.str();
        if (e != 0) {
            if (mag != 1) out << "*";
            out << "q^" << e;
        }
    }
    return out.str();
}

namespace {

[[noreturn]] void bad(const std::string& s) {
    throw std::invalid_argument("laurent_from_text: cannot parse \"" + s + "\"");
}

}  // namespace

LaurentPoly laurent_from_text(const std::string& s) {
    LaurentPoly f;
    std::size_t i = 0;
    const auto skip_ws = [&] { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; };
    skip_ws();
    if (i == s.size()) bad(s);
    bool any = false;
    while (i < s.size()) {
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
            skip_ws();
        } else if (any) {
            bad(s);  // terms after the first need a separator sign
        }
        std::string digits;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) digits += s[i++];
        Int coeff = digits.empty() ? Int(1) : Int(digits);
        if (sign < 0) coeff = -coeff;
        skip_ws();
        if (i < s.size() && s[i] == '*') {
            ++i;
            skip_ws();
        }
        Exp e = 0;
        if (i < s.size() && s[i] == 'q') {
            ++i;
            if (i < s.size() && s[i] == '^') {
                ++i;
                bool eneg = false;
                if (i < s.size() && (s[i] == '-' || s[i] == '+')) eneg = s[i++] == '-';
                std::string edig;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
                    edig += s[i++];
                if (edig.empty()) bad(s);
                e = std::stoll(edig);
                if (eneg) e = -e;
            } else {
                e = 1;  // bare q
            }
        } else if (digits.empty()) {
            bad(s);  // neither coefficient nor q-power
        }
        f += LaurentPoly::monomial(e, coeff);
        any = true;
        skip_ws();
    }
    return f;
}

std::string to_json(const LaurentPoly& f) {
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [e, c] : f.terms()) terms.push_back({e, c.str()});
    nlohmann::ordered_json j{{"variable", "q"}, {"terms", terms}};
    return j.dump();
}

LaurentPoly laurent_from_json(const std::string& s) {
    const auto j = nlohmann::ordered_json::parse(s);
    if (j.at("variable").get<std::string>() != "q")
        throw std::invalid_argument("laurent_from_json: unexpected variable");
    LaurentPoly f;
    for (const auto& t : j.at("terms"))
        f += LaurentPoly::monomial(t.at(0).get<long long>(), Int(t.at(1).get<std::string>()));
    return f;
}

std::string to_json(const CyclotomicElt& e) {
    nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
    for (const auto& c : e.coeffs()) coeffs.push_back(c.str());
    nlohmann::ordered_json j{{"level", e.level()}, {"coeffs", coeffs}};
    return j.dump();
}

CyclotomicElt cyclotomic_from_json(const std::string& s) {
    const auto j = nlohmann::ordered_json::parse(s);
    std::vector<Int> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.emplace_back(c.get<std::string>());
    return CyclotomicElt(j.at("level").get<int>(), std::move(coeffs));
}

}  // namespace dtj
