#pragma once

#include "modcomb/hypersimplex.hpp"

#include <optional>
#include <string>
#include <vector>

// Weighted points on the projective line: GIT stability of coincidence
// patterns, and the chamber structure of the weight domain
// D = {0 < a_i <= 1, sum a > 2} cut by the walls sum_S a = 1.
namespace modcomb::weights {

using hyper::Subset;

// Blocks sorted internally and ordered by least element; labels 1..n.
using Partition = std::vector<std::vector<int>>;

Partition parse_partition(const std::string& text, int n); // "{1,2}|{3}|{4}"
std::string to_string(const Partition& p);
Partition canonical(Partition p);

// 0 < t_i and sum t = 2; throws InputError otherwise.
void validate_linearisation(const RatVec& t);
// 0 < a_i <= 1 and sum a > 2; throws InputError otherwise.
void validate_weight(const RatVec& a);

enum class Stability { STABLE, STRICTLY_SEMISTABLE, UNSTABLE };
std::string to_string(Stability s);

struct StabilityResult {
    Stability verdict;
    Rat max_block_sum;
    std::vector<int> heaviest_block;
};

StabilityResult stability(const RatVec& t, const Partition& p);

struct Typicality {
    bool typical = true;
    Subset witness; // a subset with sum exactly 1 when atypical
};

// Searches subsets with 2 <= |S| <= n - 2 for sum exactly 1.
Typicality classify_linearisation(const RatVec& t);

constexpr int max_profile_n = 9;

// All partitions with every block sum <= 1, in canonical order.
std::vector<Partition> semistable_profile(const RatVec& t);
// Those with every block sum < 1.
std::vector<Partition> stable_profile(const RatVec& t);

// b_i = 2 a_i / sum a.
RatVec rescale_to_carrier(const RatVec& a);

// Deletes coordinate q (1-based) and renormalizes to sum 2.
RatVec forget_index(const RatVec& t, int q);
// Image of partitions under deletion of label q (labels above q shift down).
std::vector<Partition> forget_in_profile(const std::vector<Partition>& profile, int q);

// Subsets S with 2 <= |S| <= n-2 (fine) and 2 < |S| < n-2 (coarse), ordered by
// (|S|, lex). Each gives the wall sum_S a = 1.
std::vector<Subset> fine_walls(int n);
std::vector<Subset> coarse_walls(int n);

// Sign of sum_S a - 1 for every fine wall, as '-', '0', '+'.
std::string fine_signs(const RatVec& a);

struct FineCell {
    std::string id; // the sign string over fine_walls(n)
    RatVec witness;
    int dim = 0;
};

// Full-dimensional chambers of the fine decomposition, sorted by id.
std::vector<FineCell> fine_chambers(int n);

struct WeightLocation {
    std::string id;
    bool wall = false; // some wall sum equals 1 exactly
    int dim = 0;
};

WeightLocation locate_weight(const RatVec& a);

// Fine cells of the weight domain whose closure contains the chamber c of the
// hypersimplex arrangement; c must avoid the boundary of the hypersimplex.
std::vector<FineCell> xi(const hyper::Arrangement& a, const hyper::Chamber& c);

// Cells of dimension dim(c) + 1 in xi(c). k must equal the number of
// PI planes containing c.
int facet_cover_count(const hyper::Arrangement& a, const hyper::Chamber& c, int k);

} // namespace modcomb::weights
