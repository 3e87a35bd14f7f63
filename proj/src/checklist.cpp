#include "ideation/checklist.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "ideation/util.hpp"

namespace ideation {

std::string_view tier_name(Tier tier) {
    return tier == Tier::primary ? "primary" : "secondary";
}

Tier tier_from_name(std::string_view name) {
    if (name == "primary") {
        return Tier::primary;
    }
    if (name == "secondary") {
        return Tier::secondary;
    }
    throw std::invalid_argument("unknown tier: " + std::string(name));
}

Checklist::Checklist(std::vector<Criterion> criteria)
    : criteria_(std::move(criteria)) {
    if (criteria_.empty()) {
        throw std::invalid_argument("checklist must not be empty");
    }
    std::sort(criteria_.begin(), criteria_.end(),
              [](const Criterion& a, const Criterion& b) {
                  return a.position < b.position;
              });
    std::set<std::string> ids;
    for (std::size_t i = 0; i < criteria_.size(); ++i) {
        const Criterion& c = criteria_[i];
        if (c.position != static_cast<int>(i)) {
            throw std::invalid_argument(
                "criterion positions must form a permutation of 0..n-1");
        }
        if (c.id.empty() || !ids.insert(c.id).second) {
            throw std::invalid_argument("criterion ids must be unique and non-empty");
        }
        if (c.tier == Tier::primary) {
            ++n_primary_;
        }
    }
    if (n_primary_ == 0) {
        throw std::invalid_argument("checklist needs at least one primary criterion");
    }
}

const Criterion& Checklist::at(int position) const {
    if (position < 0 || position >= m_total()) {
        throw std::out_of_range("criterion position out of range");
    }
    return criteria_[static_cast<std::size_t>(position)];
}

const Criterion* Checklist::find(std::string_view id) const {
    for (const Criterion& c : criteria_) {
        if (c.id == id) {
            return &c;
        }
    }
    return nullptr;
}

const Checklist& builtin_checklist() {
    static const Checklist instance{std::vector<Criterion>{
        {"layout", "Layout",
         "Starts with **Title** and uses exactly the required sections in "
         "order: Title, Core Problem, Approach, Experimental Plan / "
         "Evaluation, Expected Outcomes and Impact, Limitations and Risks, "
         "Related Work and Gap.",
         Tier::secondary, 0},
        {"grounding", "Grounding",
         "Grounds the idea in established principles / mechanisms / closest "
         "SOTA approaches, then articulates their limiting assumption or "
         "missing element that creates a real unsolved gap.",
         Tier::primary, 1},
        {"feasibility", "Feasibility",
         "Execution is practically feasible: required data / compute / "
         "equipment / access are realistic, key dependencies are stated, and "
         "the plan does not rely on 'heroic' assumptions.",
         Tier::primary, 2},
        {"problem", "Problem",
         "States a specific, scoped research question or falsifiable "
         "hypothesis and explains why it matters and what changes if it "
         "succeeds (scientific / technical / societal impact).",
         Tier::primary, 3},
        {"risk", "Risk",
         "Identifies key assumptions and failure modes and provides "
         "mitigation strategies or alternative paths (Plan B/off-ramps) if "
         "core components fail.",
         Tier::primary, 4},
        {"method", "Method",
         "Proposes a method that can actually test/falsify the claim and "
         "specifies a concrete evaluation plan: datasets / benchmarks / "
         "setup, baselines / controls, metrics, and at least one ablation / "
         "sanity check, with a validation / statistics / robustness plan "
         "where applicable.",
         Tier::primary, 5},
        {"writing", "Writing",
         "Reads as a professional, self-contained academic abstract/proposal "
         "with high specificity: uses concrete named methods / architectures "
         "/ datasets / formalisms and avoids vague placeholders and fluff.",
         Tier::secondary, 6},
        {"innovation", "Innovation",
         "Clearly states what is new (mechanism / theory / architecture / "
         "measurement / data / protocol), is non-obvious (surprising or "
         "assumption-challenging), and is expected to generalize beyond a "
         "single benchmark / case.",
         Tier::secondary, 7},
        {"length", "Length",
         "Respects length constraints: Title = 1 line; Core Problem / "
         "Outcomes / Related Work = 1–3 sentences each; Approach = 3 "
         "sentences; Experimental Plan / Evaluation = roughly 2 sentences; "
         "Limitations = exactly 3 bullet points.",
         Tier::secondary, 8},
    }};
    return instance;
}

Checklist checklist_from_json(const nlohmann::json& doc) {
    if (!doc.is_array()) {
        throw std::invalid_argument("checklist config must be a JSON array");
    }
    std::vector<Criterion> criteria;
    criteria.reserve(doc.size());
    for (const auto& item : doc) {
        Criterion c;
        c.id = item.at("id").get<std::string>();
        c.title = item.at("title").get<std::string>();
        c.rubric_text = item.at("rubric_text").get<std::string>();
        c.tier = tier_from_name(item.at("tier").get<std::string>());
        c.position = item.at("position").get<int>();
        criteria.push_back(std::move(c));
    }
    return Checklist(std::move(criteria));
}

nlohmann::json checklist_to_json(const Checklist& checklist) {
    nlohmann::json doc = nlohmann::json::array();
    for (const Criterion& c : checklist.criteria()) {
        doc.push_back({{"id", c.id},
                       {"title", c.title},
                       {"rubric_text", c.rubric_text},
                       {"tier", std::string(tier_name(c.tier))},
                       {"position", c.position}});
    }
    return doc;
}

Checklist load_checklist(const std::string& source) {
    if (source.empty() || source == "builtin") {
        return builtin_checklist();
    }
    return checklist_from_json(nlohmann::json::parse(read_file(source)));
}

TierSums tier_sums(const ScoreVector& sv, const Checklist& cl) {
    if (static_cast<int>(sv.entries.size()) != cl.m_total()) {
        throw std::invalid_argument("score vector length does not match checklist");
    }
    TierSums sums;
    for (const Criterion& c : cl.criteria()) {
        const int s = sv.entries[static_cast<std::size_t>(c.position)];
        if (s != 0 && s != 1) {
            throw std::invalid_argument("score entries must be 0 or 1");
        }
        sums.total_sum += s;
        if (c.tier == Tier::primary) {
            sums.primary_sum += s;
        }
    }
    return sums;
}

}  // namespace ideation
