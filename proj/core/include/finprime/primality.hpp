#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "finprime/classifier.hpp"
#include "finprime/dfa.hpp"

namespace finprime {

enum class Status { Prime, Composite };

struct Verdict {
    Status status = Status::Prime;
    std::string branch;
    std::optional<Word> witness;
    std::string notes;

    bool prime() const { return status == Status::Prime; }
};

std::string status_name(Status s);

enum class Mode { Intersection, Union, Dnf };
std::string mode_name(Mode m);

struct Factor {
    std::string family;
    std::string params;
    Dfa dfa;

    std::string file_name() const;
};

// Intersection: one term holding every factor. Union: one factor per term. DNF: a union of
// intersections, one term per conjunction.
struct Decomposition {
    Mode mode = Mode::Intersection;
    std::size_t bound = 0;
    std::vector<std::vector<Factor>> terms;

    std::size_t factor_count() const;
    std::vector<const Factor*> factors() const;
};

struct DecompositionLimits {
    std::size_t max_factors = 200000;
    std::size_t max_candidates = 1000000;  // extension words examined in the non-safety branch
    std::size_t max_witness_length = 1000000;
};

Verdict decide_intersection_primality(const Dfa& a, const DecompositionLimits& limits = {});
Word intersection_witness(const Dfa& a, const DecompositionLimits& limits = {});
Decomposition intersection_decomposition(const Dfa& a, const DecompositionLimits& limits = {});

Verdict decide_union_primality(const Dfa& a);
Decomposition union_decomposition(const Dfa& a, const DecompositionLimits& limits = {});

Verdict decide_dnf_primality(const Dfa& a);
Decomposition dnf_decomposition(const Dfa& a, const DecompositionLimits& limits = {});

Verdict decide_s_primality(const Dfa& a);

// Words of length n+1..2n-2 that extend an accepted length-n word, keep every length-n
// subsequence inside L and pass every letter-position factor.
std::vector<Word> extension_candidates(const LinearProfile& p, const DecompositionLimits& limits = {});

std::size_t lcm_up_to(std::size_t k);

}  // namespace finprime
