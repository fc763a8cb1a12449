#include "kcharge/polynomial.hpp"

#include "kcharge/cores.hpp"

#include <sstream>

namespace kcharge {

TPolynomial TPolynomial::monomial(int exponent, BigInt coefficient) {
    TPolynomial p;
    p.add_term(exponent, coefficient);
    return p;
}

void TPolynomial::add_term(int exponent, const BigInt& coefficient) {
    if (exponent < 0) throw DomainError("negative exponent in t-polynomial");
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponent, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) terms_.erase(it);
    }
}

TPolynomial& TPolynomial::operator+=(const TPolynomial& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

BigInt TPolynomial::coefficient(int exponent) const {
    const auto it = terms_.find(exponent);
    return it == terms_.end() ? BigInt(0) : it->second;
}

int TPolynomial::degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }

std::string TPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        BigInt magnitude = c < 0 ? BigInt(-c) : c;
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        if (e == 0) {
            os << magnitude;
            continue;
        }
        if (magnitude != 1) os << magnitude << '*';
        os << 't';
        if (e > 1) os << '^' << e;
    }
    return os.str();
}

}  // namespace kcharge
