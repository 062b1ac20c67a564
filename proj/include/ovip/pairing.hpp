#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ovip/types.hpp"

namespace ovip {

/// Index pairs (pos, neg) into the candidate list. When the ground-truth
/// fallback fires, the selection holds exactly one pair whose pos index is
/// kReferenceIndex and the positive response is the reference answer.
struct PairSelection {
    static constexpr int kReferenceIndex = -1;

    std::vector<std::pair<int, int>> pairs;
    bool used_reference_fallback = false;
};

/// Population standard deviation (divide by count). Throws on fewer than
/// two values.
double reward_stddev(std::span<const double> rewards);

/// Selects contrastive pairs from one prompt's scored candidates.
///
/// A feasible pair (pos, neg) must satisfy, strictly:
///   |r_pos - r_neg| > max(delta, 2*sigma_r),  r_pos > tau_pos,  r_neg < tau_neg
/// with sigma_r computed once over the full original reward list. Pairs are
/// extracted greedily by maximum reward gap (ties: lowest pos index, then
/// lowest neg index); both members leave the pool, so each candidate appears
/// in at most one pair. If no pair qualifies and the minimum reward is below
/// tau_neg, a single fallback pair is emitted with the reference answer as
/// positive and the lowest-reward candidate (ties: lowest index) as negative.
PairSelection select_pairs(std::span<const ScoredCandidate> candidates,
                           const std::string& reference_answer, const PipelineConfig& cfg);

/// Assembles the buffer record for one selected pair. The fallback positive
/// is the reference answer and its reward is recorded as 10, the scale
/// maximum. Throws if image_neg is empty; text-only degraded records are
/// assembled by the orchestrator instead.
ContrastiveRecord build_contrastive_record(const TrainSample& sample,
                                           std::span<const ScoredCandidate> candidates,
                                           std::pair<int, int> pair, bool pair_is_fallback,
                                           const std::string& image_neg);

}  // namespace ovip
