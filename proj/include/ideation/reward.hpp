#pragma once

#include <vector>

#include "ideation/checklist.hpp"

namespace ideation {

enum class RewardBranch { primary_only, full_sum };

struct StepReward {
    int value = 0;
    int primary_sum = 0;
    int total_sum = 0;
    RewardBranch branch = RewardBranch::full_sum;
};

// Lexicographic scalar reward. When at least n-1 of the n primary criteria
// hold, the reward is the primary sum alone; otherwise it is the full sum
// over all criteria. Integer-valued end to end.
//
// Note the scheme is deliberately non-monotone: a vector with 3 primaries
// and all secondaries satisfied scores 7, above the 5 of a fully satisfied
// vector. That is the defined behaviour, not a bug.
StepReward lexicographic_reward(const ScoreVector& sv, const Checklist& cl);

// Undiscounted sum of step rewards over a rollout. Throws
// std::invalid_argument on an empty trajectory.
int cumulative_return(const std::vector<StepReward>& step_rewards);

}  // namespace ideation
