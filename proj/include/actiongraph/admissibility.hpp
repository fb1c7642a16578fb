#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "actiongraph/bigint.hpp"
#include "actiongraph/errors.hpp"
#include "actiongraph/sequences.hpp"

namespace actiongraph {

enum class Verdict { Admissible, Rejected };

enum class FailureReason { Nonpositive, S0NotOne, S2Lemma };

inline const char* failure_reason_name(FailureReason r) {
    switch (r) {
        case FailureReason::Nonpositive: return "nonpositive";
        case FailureReason::S0NotOne: return "s0_not_one";
        case FailureReason::S2Lemma: return "s2_lemma";
    }
    return "?";
}

struct AdmissibilityFailure {
    std::size_t index;  // index into s (0 for the s_0 check) or into z
    BigInt value;       // the offending value
    FailureReason reason;
};

// Outcome of solving s_n = z_n + sum_{i=1}^{n-1} z_i * s_{n-i} for z.
struct ZResult {
    std::vector<BigInt> z;  // z[j] holds z_{j+1}; displayed as z_1..z_N
    std::size_t admissible_upto = 0;  // largest N with z_1..z_N all >= 1
    Verdict verdict = Verdict::Rejected;
    std::optional<AdmissibilityFailure> failure;

    // 1-based accessor matching the z_i notation.
    const BigInt& z_value(std::size_t i) const { return z.at(i - 1); }
    std::size_t z_count() const { return z.size(); }
};

// Solves the recurrence for every index of s, even past a failure, so that
// rejected sequences still carry the offending value for diagnostics.
inline ZResult compute_z(const Sequence& s) {
    if (s.values.empty()) {
        throw MalformedCustomError("compute_z requires a sequence of length >= 1");
    }
    const std::size_t n_max = s.max_index();
    ZResult result;
    result.z.reserve(n_max);
    for (std::size_t n = 1; n <= n_max; ++n) {
        BigInt zn = s.at(n);
        for (std::size_t i = 1; i + 1 <= n; ++i) {
            zn -= result.z[i - 1] * s.at(n - i);
        }
        result.z.push_back(zn);
    }

    std::size_t upto = 0;
    while (upto < result.z.size() && result.z[upto] >= 1) ++upto;
    result.admissible_upto = upto;

    if (s.at(0) != 1) {
        result.verdict = Verdict::Rejected;
        result.failure = AdmissibilityFailure{0, s.at(0), FailureReason::S0NotOne};
    } else if (upto < result.z.size()) {
        const std::size_t bad = upto + 1;  // first failing z index, 1-based
        FailureReason reason = FailureReason::Nonpositive;
        // z_2 = s_2 - s_1^2, so a negative z_2 is exactly the s_2 >= s_1^2
        // lemma failing; z_2 = 0 satisfies the lemma yet is still rejected.
        if (bad == 2 && result.z[1] < 0) reason = FailureReason::S2Lemma;
        result.verdict = Verdict::Rejected;
        result.failure = AdmissibilityFailure{bad, result.z[bad - 1], reason};
    } else {
        result.verdict = Verdict::Admissible;
    }
    return result;
}

struct LemmaCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Necessary conditions checked directly on s: s_0 = 1, and s_2 >= s_1^2
// whenever the prefix is long enough. A lemma failure implies compute_z
// rejects.
inline std::vector<LemmaCheck> lemma_prefilter(const Sequence& s) {
    std::vector<LemmaCheck> checks;
    {
        LemmaCheck c;
        c.name = "s0_is_one";
        c.pass = !s.values.empty() && s.at(0) == 1;
        c.detail = "s_0 = " + (s.values.empty() ? std::string("<missing>") : s.at(0).str());
        checks.push_back(std::move(c));
    }
    if (s.values.size() >= 3) {
        LemmaCheck c;
        c.name = "s2_ge_s1_squared";
        BigInt s1sq = s.at(1) * s.at(1);
        c.pass = s.at(2) >= s1sq;
        c.detail = "s_2 = " + s.at(2).str() + ", s_1^2 = " + s1sq.str();
        checks.push_back(std::move(c));
    }
    return checks;
}

// Rebuilds s_0..s_upto from z via the recurrence (s_0 = 1 by definition).
// Requires z to cover indices 1..upto.
inline std::vector<BigInt> reconstruct_sequence(const std::vector<BigInt>& z, std::size_t upto) {
    std::vector<BigInt> s;
    s.reserve(upto + 1);
    s.push_back(1);
    for (std::size_t n = 1; n <= upto; ++n) {
        BigInt sn = z.at(n - 1);
        for (std::size_t i = 1; i + 1 <= n; ++i) {
            sn += z.at(i - 1) * s[n - i];
        }
        s.push_back(sn);
    }
    return s;
}

// True iff the z-sequence of the Catalan prefix equals C_{j-1} for all
// 1 <= j <= upto.
inline bool catalan_z_identity(std::size_t upto) {
    SequenceFamily family;
    family.kind = SequenceFamily::Kind::Catalan;
    ZResult zr = compute_z(sequence_prefix(family, upto));
    if (zr.z_count() < upto) return false;
    for (std::size_t j = 1; j <= upto; ++j) {
        if (zr.z_value(j) != catalan(j - 1)) return false;
    }
    return true;
}

} // namespace actiongraph
