#ifndef ONEPOINT_CLASSIFY_HPP
#define ONEPOINT_CLASSIFY_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <onepoint/derivation.hpp>

namespace onepoint
{

struct OracleBounds {
    long i_max = 3;
    long j_max = 8;
    long n_max = 10;
    long gen_span = 4;

    friend bool operator==(const OracleBounds &, const OracleBounds &) = default;
};

enum class Verdict { integrable, not_integrable, out_of_scope };
enum class Branch { lnd, non_lnd };

const char *verdict_name(Verdict v);
const char *branch_name(Branch b);

// Certificate of failure, checked with iterate and in_ideal.
//   p2: f in a_j and iterate(f, n) not in a_i.
//   p1: iterate(f, k) not in a_i for every k = 1..n (the iterates never enter a_i).
struct Witness {
    enum class Kind { p1, p2 };

    Kind kind;
    AlgebraElement element;
    long iterations;
    long level_i;
    // Unused (-1) for p1.
    long level_j;
};

bool verify_witness(const Derivation &d, const Witness &w);

struct IntegrabilityVerdict {
    Verdict verdict = Verdict::out_of_scope;
    std::optional<Branch> branch;
    std::optional<Witness> witness;
    // Which test decided the verdict, e.g. "-e not in S".
    std::string criterion;
    std::string note;
};

// d must live on C[S_inf] and have exactly one homogeneous component;
// otherwise the verdict is out_of_scope. Throws CarrierMismatch for
// derivations on C[S].
IntegrabilityVerdict classify_integrable(const Derivation &d);

struct P1Result {
    bool pass = true;
    long failing_level = -1;
    long escaping_n = -1;
};
P1Result oracle_p1(const Derivation &d, const AlgebraElement &f, const OracleBounds &bounds = {});

struct P2Result {
    bool pass = true;
    // Smallest working j on pass; j_max on fail.
    long j = -1;
    std::optional<Witness> witness;
};
P2Result oracle_p2(const Derivation &d, long i, const OracleBounds &bounds = {});

struct ContinuityResult {
    bool pass = true;
    // j found for each level i = 0..i_max (up to the failing one).
    std::vector<long> j_per_level;
    long failing_level = -1;
};
ContinuityResult oracle_continuity(const Derivation &d, const OracleBounds &bounds = {});

using Classifier = std::function<IntegrabilityVerdict(const Derivation &)>;

struct OracleReport {
    IntegrabilityVerdict verdict;
    OracleBounds bounds;
    bool continuity = false;
    bool p1 = false;
    bool p2 = false;
    bool oracle_integrable = false;
    // The closed-form verdict's witness (if any) verified.
    bool witness_verified = true;
    bool agree = false;
    std::optional<Witness> oracle_witness;
    std::vector<std::string> notes;
};

// Runs continuity, P.1 on x^a with s(a) <= gen_span and P.2 for i <= i_max,
// and compares the outcome with the classifier.
OracleReport oracle_verdict(const Derivation &d, const OracleBounds &bounds = {},
                            const Classifier &classifier = classify_integrable);

} // namespace onepoint

#endif
