#include "multibase/base_system.hpp"

#include "multibase/errors.hpp"

#include <numeric>
#include <sstream>

namespace multibase {

BaseSystem BaseSystem::validate(std::vector<std::uint64_t> bases, int digit_bound) {
    if (bases.size() < 2)
        throw domain_error("TooFewBases: need at least 2 bases, got " +
                           std::to_string(bases.size()));
    for (std::uint64_t p : bases)
        if (p < 2) throw domain_error("BaseTooSmall: base " + std::to_string(p) + " < 2");
    for (std::size_t i = 1; i < bases.size(); ++i)
        if (bases[i - 1] >= bases[i])
            throw domain_error("UnsortedBases: bases must be strictly increasing");
    for (std::size_t i = 0; i < bases.size(); ++i)
        for (std::size_t j = i + 1; j < bases.size(); ++j)
            if (std::gcd(bases[i], bases[j]) != 1)
                throw domain_error("NonCoprimeBases(" + std::to_string(i + 1) + "," +
                                   std::to_string(j + 1) + "): gcd(" + std::to_string(bases[i]) +
                                   "," + std::to_string(bases[j]) + ") > 1");
    if (digit_bound < 2)
        throw domain_error("DigitBoundTooSmall: d = " + std::to_string(digit_bound) + " < 2");
    return BaseSystem(std::move(bases), digit_bound);
}

std::string BaseSystem::to_string() const {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < bases_.size(); ++i) os << (i ? "," : "") << bases_[i];
    os << "} d=" << digit_bound_;
    return os.str();
}

Statistic Statistic::digit_count(int b) {
    if (b < 1) throw domain_error("DigitCount: digit b must be >= 1, got " + std::to_string(b));
    return {Kind::DigitCount, b};
}

void Statistic::check_against(const BaseSystem& system) const {
    if (kind_ == Kind::DigitCount && digit_ > system.digit_bound() - 1)
        throw domain_error("DigitCount: digit " + std::to_string(digit_) +
                           " exceeds d-1 = " + std::to_string(system.digit_bound() - 1));
}

std::string Statistic::name() const {
    switch (kind_) {
        case Kind::SumOfDigits: return "sum";
        case Kind::HammingWeight: return "weight";
        case Kind::DigitCount: return "digit:" + std::to_string(digit_);
    }
    return "?";
}

Statistic Statistic::parse(const std::string& name) {
    if (name == "sum") return sum_of_digits();
    if (name == "weight") return hamming_weight();
    if (name.rfind("digit:", 0) == 0) {
        const int b = std::stoi(name.substr(6));
        return digit_count(b);
    }
    throw domain_error("unknown statistic '" + name + "' (expected sum|weight|digit:b)");
}

bool in_hlp_set(const BaseSystem& system, std::uint64_t x) {
    if (x == 0) return false;
    for (std::uint64_t p : system.bases())
        while (x % p == 0) x /= p;
    return x == 1;
}

Representation Representation::from_terms(const BaseSystem& system, std::vector<Term> terms) {
    std::uint64_t value = 0;
    std::uint64_t prev = 0;
    for (const Term& t : terms) {
        if (t.element <= prev)
            throw domain_error("Representation: elements must be strictly increasing");
        if (t.digit < 1 || t.digit > system.digit_bound() - 1)
            throw domain_error("Representation: digit " + std::to_string(t.digit) +
                               " outside 1.." + std::to_string(system.digit_bound() - 1));
        if (!in_hlp_set(system, t.element))
            throw domain_error("Representation: element " + std::to_string(t.element) +
                               " is not a product of powers of the bases");
        value += static_cast<std::uint64_t>(t.digit) * t.element;
        prev = t.element;
    }
    return Representation(std::move(terms), value);
}

std::int64_t statistic_value(const Representation& rep, const Statistic& stat) {
    std::int64_t total = 0;
    for (const auto& t : rep.terms()) total += stat.weight(t.digit);
    return total;
}

} // namespace multibase
