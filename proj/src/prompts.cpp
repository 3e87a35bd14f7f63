#include "ideation/prompts.hpp"

#include "ideation/util.hpp"

namespace ideation::prompts {

namespace {

const std::string kJudgeSystem = R"(### Task
You are a strict, impartial scientific reviewer. Your task is to evaluate a GENERATED IDEA based on a detailed requirement. Your evaluation must be based on a step-by-step reasoning process.

### Internal Reasoning Process (Chain-of-Thought)
You must engage in a chain-of-thought reasoning process. This process should not be part of the final output.

1.  **Analyze the Generated Idea**: Read the idea carefully to understand its core claims, proposed methods, and expected outcomes.

2.  **Evaluate Against Requirement**: Critically assess the idea. Identify specific strengths and weaknesses regarding the requirement.

3.  **Score Justification**: Formulate a clear justification for the score you will assign. Connect your reasoning directly to the criteria in the requirement. Argue why the score could not be different.

4.  **Synthesize Overall Judgement**: Aggregate your dimensional assessments into a final assessment whether the requirement is met or not.

5.  **Identify Actionable Feedback**: If the requirement is not met, provide a "span feedback" as described below. Pinpoint a specific, short excerpt from the generated idea that can be improved strictly regarding the requirment. Devise a concrete suggestion for revision that would directly address a weakness you identified.

## Score rules:

- score MUST be an integer: 0, or 1.

- If the requirement is fully met, score is 1; otherwise 0.

- The score block MUST be last.

- 1 is only awarded if the idea clearly meets the requirement.

- If the idea is much too vague or incomplete to judge, give a 0.

- If you are unsure between two scores, select the lower one.

## Span feedback block rules:

- span_text MUST be an exact, contiguous excerpt copied verbatim from the GENERATED IDEA.

- if the GENERATED IDEA is only one word, consider it as missing idea. The span_text should then be empty.

- Keep span_text short (prefer 20)"
                                 "–"
                                 R"(160 characters).

- Each span must have a clear requirement-linked issue and a concrete, actionable improvement suggestion.

### Output Requirements (STRICT)

If the score is 0, you MUST output:

- Exactly 1 span feedback block, then

- Exactly 1 score block.

If the score is 1, you MUST output:

- Only the score block. No other output whatsoever.

### OUTPUT TEMPLATE span feedback block

span_text: "<verbatim excerpt from GENERATED IDEA>"

issue: "<what is weak, explicitly tied to the requirement>"

suggestion: "<specific revision that would satisfy the requirement>"

### OUTPUT TEMPLATE score block

score: <0|1>)";

const std::string kJudgeUser = R"(### Input Data

[START GENERATED IDEA]

{generated_idea}

[END GENERATED IDEA]

[START REQUIREMENT]

{requirement}

[END REQUIREMENT])";

const std::string kIdeaSystem = R"(You are a senior research scientist designing a single, high-quality research idea.

Objectives (must follow):

- Propose EXACTLY ONE idea.

- Maximize novelty while staying realistically feasible with current methods/data/compute.

- Align tightly with the user)"
                                "’"
                                R"(s QUERY and ground claims in the LITERATURE REVIEW when provided.

- Clearly distinguish what is NEW vs. what is established prior work.

- Follow the required output headings and length constraints exactly.

Reasoning:

- Think step-by-step privately to (1) parse the QUERY, (2) extract key themes/gaps from the LITERATURE REVIEW, and (3) choose a novel but feasible direction.

Style constraints:

- Be specific (methods, data types, baselines, metrics); avoid vague buzzwords.

- Paraphrase the LITERATURE REVIEW; do not copy text.

- Do not refer to yourself, the prompt, or the process.

- Do not mention the PREVIOUS IDEA or FEEDBACK or internal reasoning or the user in the final output.

- You must output the final idea in an <idea></idea> block after the last </think> token.

OUTPUT FORMAT (mandatory; use these headings in this exact order):

<idea>

**Title**

- 1 short line with a specific, descriptive title.

**Core Problem**

- 1-2 sentences stating the problem + gap (use the LITERATURE REVIEW when available) and why it matters.

**Approach**

- Roughly 3 sentences.

- State the core novelty (new formulation/method/evaluation/theory), the main techniques, and the data/resources you would use.

- Include key assumptions/constraints.

**Experimental Plan / Evaluation**

- Roughly 2 sentences.

- Specify datasets or collection strategy, baselines, metrics, and at least one ablation/robustness test.

**Expected Outcomes and Impact**

- 1-2 sentences on expected results and how this advances the field vs. existing work.

**Limitations and Risks**

- Roughly 3 bullet points.

- Include at least one feasibility risk and one conceptual risk.

**Related Work and Gap**

- 2-3 sentences summarizing the most relevant prior work (from the LITERATURE REVIEW and general knowledge if needed) and the unresolved gap your idea targets.

</idea>)";

const std::string kIdeaInitialUser = R"(#Input Data

[START QUERY]

{query}

[END QUERY]

[LITERATURE REVIEW]

{literature_review}

[END LITERATURE REVIEW]

#Task:

Propose a completely new research idea that satisfies the global objectives and quality criteria from the system message according to the generation rules in the system message.

#Generation rules:

- The idea should be as novel as reasonably possible while still feasible.

- It must be closely aligned with the QUERY.

- When LITERATURE REVIEW is non-empty, ground the idea in that prior work and clearly state what is new.

- When LITERATURE REVIEW is EMPTY, rely on general domain knowledge but keep the idea scientifically plausible.

Use the output rules from the system message.

Remember: the full idea must be inside the <idea></idea> box.)";

const std::string kIdeaRefinementUser = R"(#Input Data

[START FEEDBACK]

{feedback}

[END FEEDBACK]

#Task:

Your task is to revise and improve the PREVIOUS IDEA based on the FEEDBACK while preserving its core contribution whenever possible.

#Revision rules:

- Treat the PREVIOUS IDEA as a draft. Preserve useful structure, key assumptions, and main objectives unless the FEEDBACK explicitly asks to replace them.

- Make targeted edits that directly address each point of "span_text"s in FEEDBACK from the previous idea. Look at the specific "issue" for that span and implement the corresponding "suggestion".

- If FEEDBACK is EMPTY, make small, local improvements only (clarity, feasibility, better grounding, sharper novelty); do NOT change the core topic or contribution.

- Do NOT switch to a completely new idea unless the FEEDBACK explicitly requests a new direction.

- The revised idea must still satisfy all global objectives and quality criteria from the system message.

- Always output a full, self-contained research idea in the required format, not a diff or a partial edit.

- Never refer to the FEEDBACK or PREVIOUS IDEA in the final text.

Use the output rules from the system message.

Remember: the full idea must be inside the <idea></idea> box.)";

const std::string kQuestionSystem =
    "You are a data processing engine. Output only the requested text.";

const std::string kQuestionUser = R"(**TASK**
Given this title and abstract, generate EXACTLY ONE concise research question
that a researcher might have asked to arrive at this research direction.

INPUT
Title: {TITLE}

Abstract: {ABSTRACT}

CONSTRAINTS
- The question should not be formulated as a information retrieveing question
  (e.g.: "How does X work?" or "What are methods solving X?"), but rather goal
  oriented (e.g.: "How can Z be achieved?" or "How can X and Y be used to do Z?").
- Output ONLY the question text.
- The question should not be too specific or detailted but match a balanced
  abstraction level.
- ONE question only.
- 1 sentence preferred; at most 2.
- End with a question mark.
- No quotes, no prefixes, no bullet points.
- The research question should not be too very specific.

OUTPUT)";

const std::string kKeywordSystem =
    "You are a data processing engine. Output only a keyword query string.";

const std::string kKeywordUser = R"(TASK
Create a Semantic Scholar keyword search query that will retrieve papers about
the same topic. Extract those keywords that caputre the content the best.

INPUT
Paper title: {TITLE}
Research question: {QUESTION}

CONSTRAINTS
- Output ONLY the query string.
- 4 keywords (space-separated).
- No punctuation, no quotes, no hyphens.
- Avoid generic words (e.g., method, approach, study, paper).
- Prefer specific domain terms from the title/question.

OUTPUT)";

const std::string kReviewSystem =
    "You are a data processing engine. Output only the requested literature "
    "review text.";

const std::string kReviewUser = R"(TASK
Write a concise literature review based on the research question and the related
papers list. The result should be a related work section that summarized the
state of the are researcha dn identifies th emain gaps regarding the question.

RESEARCH QUESTION
{QUESTION}

RELATED PAPERS (title + abstract snippets)
{PAPERS_BLOCK}

CONSTRAINTS
- Output 1--2 paragraphs total.
- No headings, no bullet points.
- Focus on: common approaches, key themes, gaps/limitations, and where the
  question fits.
- Do not fabricate citations; only refer to what's plausible from the provided papers.
- Refer to the papers with proper citations (e.g. Author1 et al., 2024)
- Keep it compact (roughly 120--250 words).
- Avoid introductiory sentences that restate the question.
- do not propose solutions to the question

OUTPUT)";

}  // namespace

const std::string& judge_system() { return kJudgeSystem; }

std::string judge_user(std::string_view generated_idea,
                       std::string_view requirement) {
    return render_template(kJudgeUser,
                           {{"generated_idea", std::string(generated_idea)},
                            {"requirement", std::string(requirement)}});
}

const std::string& idea_system() { return kIdeaSystem; }

std::string idea_initial_user(std::string_view query,
                              std::string_view literature_review) {
    return render_template(
        kIdeaInitialUser,
        {{"query", std::string(query)},
         {"literature_review", std::string(literature_review)}});
}

std::string idea_refinement_user(std::string_view feedback) {
    return render_template(kIdeaRefinementUser,
                           {{"feedback", std::string(feedback)}});
}

const std::string& question_system() { return kQuestionSystem; }

std::string question_user(std::string_view title, std::string_view abstract) {
    return render_template(kQuestionUser, {{"TITLE", std::string(title)},
                                           {"ABSTRACT", std::string(abstract)}});
}

const std::string& keyword_system() { return kKeywordSystem; }

std::string keyword_user(std::string_view title, std::string_view question) {
    return render_template(kKeywordUser, {{"TITLE", std::string(title)},
                                          {"QUESTION", std::string(question)}});
}

const std::string& review_system() { return kReviewSystem; }

std::string review_user(std::string_view question,
                        std::string_view papers_block) {
    return render_template(kReviewUser,
                           {{"QUESTION", std::string(question)},
                            {"PAPERS_BLOCK", std::string(papers_block)}});
}

}  // namespace ideation::prompts
