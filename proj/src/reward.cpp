#include "ideation/reward.hpp"

#include <stdexcept>

namespace ideation {

StepReward lexicographic_reward(const ScoreVector& sv, const Checklist& cl) {
    const TierSums sums = tier_sums(sv, cl);
    StepReward reward;
    reward.primary_sum = sums.primary_sum;
    reward.total_sum = sums.total_sum;
    if (sums.primary_sum >= cl.n_primary() - 1) {
        reward.branch = RewardBranch::primary_only;
        reward.value = sums.primary_sum;
    } else {
        reward.branch = RewardBranch::full_sum;
        reward.value = sums.total_sum;
    }
    return reward;
}

int cumulative_return(const std::vector<StepReward>& step_rewards) {
    if (step_rewards.empty()) {
        throw std::invalid_argument("cumulative_return: empty trajectory");
    }
    int total = 0;
    for (const StepReward& r : step_rewards) {
        total += r.value;
    }
    return total;
}

}  // namespace ideation
