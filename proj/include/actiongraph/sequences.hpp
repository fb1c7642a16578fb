#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "actiongraph/bigint.hpp"
#include "actiongraph/errors.hpp"

namespace actiongraph {

// A finite prefix s_0..s_N of an exact non-negative integer sequence.
struct Sequence {
    std::string name;
    std::map<std::string, std::uint64_t> params;
    std::vector<BigInt> values; // indexed from 0; never empty

    std::size_t max_index() const { return values.size() - 1; }
    const BigInt& at(std::size_t n) const { return values.at(n); }
};

// C_n = binom(2n, n) / (n + 1)
inline BigInt catalan(std::uint64_t n) {
    return exact_div(binomial(2 * n, n), BigInt(n + 1), "catalan");
}

// C_{n,k} = binom(n(k+1), n) / (kn + 1), defined for k >= 1
inline BigInt fuss_catalan(std::uint64_t n, std::uint64_t k) {
    if (k == 0) {
        throw UnknownSequenceError("fuss-catalan requires k >= 1");
    }
    return exact_div(binomial(n * (k + 1), n), BigInt(k * n + 1), "fuss_catalan");
}

// S(m,n) = (2m)!(2n)! / (m! n! (m+n)!) = binom(2m,m) binom(2n,n) / binom(m+n,m)
inline BigInt super_catalan(std::uint64_t m, std::uint64_t n) {
    return exact_div(binomial(2 * m, m) * binomial(2 * n, n), binomial(m + n, m),
                     "super_catalan");
}

// Parsed form of the builtin family names "catalan", "fuss:<k>", "super:<m>",
// "custom:<comma-separated integers>".
struct SequenceFamily {
    enum class Kind { Catalan, Fuss, Super, Custom };

    Kind kind = Kind::Catalan;
    std::uint64_t param = 0;     // k for Fuss, m for Super
    std::vector<BigInt> custom;  // verbatim values for Kind::Custom

    std::string display_name() const {
        switch (kind) {
            case Kind::Catalan: return "catalan";
            case Kind::Fuss: return "fuss:" + std::to_string(param);
            case Kind::Super: return "super:" + std::to_string(param);
            case Kind::Custom: return "custom";
        }
        return "?";
    }
};

namespace detail {

inline std::uint64_t parse_small_uint(std::string_view text, const std::string& what) {
    if (text.empty()) throw UnknownSequenceError(what + ": missing integer parameter");
    std::uint64_t value = 0;
    for (char c : text) {
        if (c < '0' || c > '9') {
            throw UnknownSequenceError(what + ": bad integer parameter '" + std::string(text) +
                                       "'");
        }
        if (value > (UINT64_MAX - 9) / 10) {
            throw UnknownSequenceError(what + ": parameter out of range");
        }
        value = value * 10 + static_cast<std::uint64_t>(c - '0');
    }
    return value;
}

inline BigInt parse_custom_value(std::string_view item) {
    if (item.empty()) throw MalformedCustomError("custom list has an empty entry");
    for (char c : item) {
        if (c < '0' || c > '9') {
            throw MalformedCustomError("custom list entry '" + std::string(item) +
                                       "' is not a non-negative integer");
        }
    }
    return BigInt(std::string(item));
}

} // namespace detail

inline SequenceFamily parse_family(std::string_view text) {
    SequenceFamily family;
    if (text == "catalan") {
        family.kind = SequenceFamily::Kind::Catalan;
        return family;
    }
    if (text.rfind("fuss:", 0) == 0) {
        family.kind = SequenceFamily::Kind::Fuss;
        family.param = detail::parse_small_uint(text.substr(5), "fuss");
        if (family.param == 0) throw UnknownSequenceError("fuss requires k >= 1");
        return family;
    }
    if (text.rfind("super:", 0) == 0) {
        family.kind = SequenceFamily::Kind::Super;
        family.param = detail::parse_small_uint(text.substr(6), "super");
        return family;
    }
    if (text.rfind("custom:", 0) == 0) {
        family.kind = SequenceFamily::Kind::Custom;
        std::string_view rest = text.substr(7);
        if (rest.empty()) throw MalformedCustomError("custom list is empty");
        while (true) {
            std::size_t comma = rest.find(',');
            family.custom.push_back(detail::parse_custom_value(rest.substr(0, comma)));
            if (comma == std::string_view::npos) break;
            rest = rest.substr(comma + 1);
        }
        return family;
    }
    throw UnknownSequenceError("unknown sequence spec '" + std::string(text) +
                               "' (expected catalan, fuss:<k>, super:<m>, or custom:<list>)");
}

// Sequence with values[0..upto] from the chosen generator, or the supplied
// list verbatim. Custom values are not filtered here; admissibility is a
// separate concern.
inline Sequence sequence_prefix(const SequenceFamily& family, std::size_t upto) {
    Sequence s;
    s.name = family.display_name();
    s.values.reserve(upto + 1);
    switch (family.kind) {
        case SequenceFamily::Kind::Catalan:
            for (std::size_t n = 0; n <= upto; ++n) s.values.push_back(catalan(n));
            break;
        case SequenceFamily::Kind::Fuss:
            s.params["k"] = family.param;
            for (std::size_t n = 0; n <= upto; ++n)
                s.values.push_back(fuss_catalan(n, family.param));
            break;
        case SequenceFamily::Kind::Super:
            s.params["m"] = family.param;
            for (std::size_t n = 0; n <= upto; ++n)
                s.values.push_back(super_catalan(family.param, n));
            break;
        case SequenceFamily::Kind::Custom:
            if (family.custom.size() < upto + 1) {
                throw MalformedCustomError(
                    "custom list has " + std::to_string(family.custom.size()) +
                    " values but " + std::to_string(upto + 1) + " are required");
            }
            s.values.assign(family.custom.begin(), family.custom.begin() + upto + 1);
            break;
    }
    return s;
}

} // namespace actiongraph
