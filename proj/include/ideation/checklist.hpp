#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace ideation {

enum class Tier { primary, secondary };

std::string_view tier_name(Tier tier);
Tier tier_from_name(std::string_view name);

struct Criterion {
    std::string id;           // stable short key, e.g. "grounding"
    std::string title;        // display name
    std::string rubric_text;  // requirement sentence injected into judge prompts
    Tier tier = Tier::secondary;
    int position = 0;         // index fixing checklist order
};

// Ordered list of criteria. Immutable after construction; safe to share
// across threads.
class Checklist {
public:
    explicit Checklist(std::vector<Criterion> criteria);

    const std::vector<Criterion>& criteria() const { return criteria_; }
    const Criterion& at(int position) const;
    const Criterion* find(std::string_view id) const;

    int n_primary() const { return n_primary_; }
    int m_total() const { return static_cast<int>(criteria_.size()); }

private:
    std::vector<Criterion> criteria_;  // sorted by position
    int n_primary_ = 0;
};

// One binary verdict per checklist position.
struct ScoreVector {
    std::vector<int> entries;
};

// The shipped default checklist: 9 criteria, 5 primary.
const Checklist& builtin_checklist();

// Declarative config surface. One record per criterion
// {id, title, rubric_text, tier, position}, order-significant.
Checklist checklist_from_json(const nlohmann::json& doc);
nlohmann::json checklist_to_json(const Checklist& checklist);

// "builtin" or a path to a JSON config file.
Checklist load_checklist(const std::string& source);

struct TierSums {
    int primary_sum = 0;
    int total_sum = 0;
};

// Throws std::invalid_argument on length mismatch.
TierSums tier_sums(const ScoreVector& sv, const Checklist& cl);

}  // namespace ideation
