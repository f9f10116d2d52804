#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace multibase {

// A multi-base numeral system: pairwise coprime bases p_1 < ... < p_m (m >= 2,
// each >= 2) and a digit bound d >= 2, i.e. digits 0..d-1.
class BaseSystem {
public:
    // Validates all constraints; throws domain_error naming the violated one
    // (TooFewBases, BaseTooSmall, UnsortedBases, NonCoprimeBases(i,j),
    // DigitBoundTooSmall).
    static BaseSystem validate(std::vector<std::uint64_t> bases, int digit_bound);

    const std::vector<std::uint64_t>& bases() const { return bases_; }
    int digit_bound() const { return digit_bound_; }
    int num_bases() const { return static_cast<int>(bases_.size()); }

    std::string to_string() const; // "{2,3} d=2"

private:
    BaseSystem(std::vector<std::uint64_t> bases, int digit_bound)
        : bases_(std::move(bases)), digit_bound_(digit_bound) {}

    std::vector<std::uint64_t> bases_;
    int digit_bound_;
};

// A digit statistic over representations.
class Statistic {
public:
    enum class Kind { SumOfDigits, HammingWeight, DigitCount };

    static Statistic sum_of_digits() { return {Kind::SumOfDigits, 0}; }
    static Statistic hamming_weight() { return {Kind::HammingWeight, 0}; }
    // b = 0 is rejected: the zero digit occurs at every unused element of the
    // infinite set S, so its count is not a finite statistic of a stored
    // representation.
    static Statistic digit_count(int b);

    Kind kind() const { return kind_; }
    int digit() const { return digit_; }

    // Contribution of one stored digit a (a in 0..d-1).
    std::int64_t weight(int a) const {
        switch (kind_) {
            case Kind::SumOfDigits: return a;
            case Kind::HammingWeight: return a > 0 ? 1 : 0;
            case Kind::DigitCount: return a == digit_ ? 1 : 0;
        }
        return 0;
    }

    // DigitCount(b) additionally requires b <= d-1 for the given system.
    void check_against(const BaseSystem& system) const;

    std::string name() const; // "sum" | "weight" | "digit:b"
    static Statistic parse(const std::string& name);

private:
    Statistic(Kind kind, int digit) : kind_(kind), digit_(digit) {}
    Kind kind_;
    int digit_;
};

// One expansion of `value`: strictly increasing elements of S with nonzero
// digits; zero digits are implicit everywhere else.
class Representation {
public:
    struct Term {
        std::uint64_t element; // member of S
        int digit;             // in 1..d-1
    };

    // Validates membership in S, digit range, strict ordering; computes value.
    static Representation from_terms(const BaseSystem& system, std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    std::uint64_t value() const { return value_; }
    std::size_t length() const { return terms_.size(); } // Hamming weight

private:
    Representation(std::vector<Term> terms, std::uint64_t value)
        : terms_(std::move(terms)), value_(value) {}

    std::vector<Term> terms_;
    std::uint64_t value_;
};

// Whether x factors completely over the system's bases (i.e. x is in S).
bool in_hlp_set(const BaseSystem& system, std::uint64_t x);

std::int64_t statistic_value(const Representation& rep, const Statistic& stat);

} // namespace multibase
