#pragma once

#include <string>
#include <string_view>

namespace ideation::prompts {

// Judge side: one system prompt plus a per-criterion query. The query
// carries the idea under review and the rubric sentence of a single
// criterion.
const std::string& judge_system();
std::string judge_user(std::string_view generated_idea,
                       std::string_view requirement);

// Idea generation side: one system prompt for the whole rollout, an
// initial query, and a refinement query whose {feedback} slot receives the
// aggregated directives.
const std::string& idea_system();
std::string idea_initial_user(std::string_view query,
                              std::string_view literature_review);
std::string idea_refinement_user(std::string_view feedback);

// Dataset pipeline side: three system prompts and their queries.
const std::string& question_system();
std::string question_user(std::string_view title, std::string_view abstract);

const std::string& keyword_system();
std::string keyword_user(std::string_view title, std::string_view question);

const std::string& review_system();
std::string review_user(std::string_view question,
                        std::string_view papers_block);

}  // namespace ideation::prompts
