#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

namespace ovip {

/// One (image, query, reference answer) unit from the dataset.
/// Image handles are opaque strings: a file path in service mode, or a
/// synthetic "feat:<id>" in toy mode.
struct TrainSample {
    std::string id;
    std::string image_ref;
    std::string query;
    std::string reference_answer;

    bool operator==(const TrainSample&) const = default;
};

/// A sampled response together with its judge reward in [0, 10].
struct ScoredCandidate {
    std::string sample_id;
    std::string response;
    double reward = 0.0;

    bool operator==(const ScoredCandidate&) const = default;
};

/// The buffer/loss unit: (Q, I+, I-, A+, A-) plus rewards.
/// image_neg may be empty when negative-image synthesis failed; such records
/// carry text-side signal only and are excluded from image-side losses.
struct ContrastiveRecord {
    std::string sample_id;
    std::string query;
    std::string image_pos;
    std::string image_neg;
    std::string response_pos;
    std::string response_neg;
    double reward_pos = 0.0;
    double reward_neg = 0.0;
    bool pos_is_reference = false;

    bool has_image_neg() const { return !image_neg.empty(); }
    bool operator==(const ContrastiveRecord&) const = default;
};

/// The six policy-vs-reference log-probability ratios every loss consumes:
///   lr_<response>_<conditioning> = log pi_theta(A|.,Q) - log pi_ref(A|.,Q)
/// with response in {pos, neg} and conditioning in {imgpos, noimg, imgneg}.
/// lr_neg_imgneg is required only by the symmetric image loss.
struct LogRatioBundle {
    double lr_pos_imgpos = 0.0;
    double lr_neg_imgpos = 0.0;
    double lr_pos_noimg = 0.0;
    double lr_neg_noimg = 0.0;
    double lr_pos_imgneg = 0.0;
    double lr_neg_imgneg = 0.0;

    bool operator==(const LogRatioBundle&) const = default;
};

/// Pipeline parameters. Defaults follow the reference configuration:
/// k=16 candidates per prompt, margin delta=3, tau_pos=tau_neg=5,
/// beta=beta1=beta2=0.1, batches of N=16.
struct PipelineConfig {
    int k = 16;
    double delta = 3.0;
    double tau_pos = 5.0;
    double tau_neg = 5.0;
    double beta = 0.1;
    double beta1 = 0.1;
    double beta2 = 0.1;
    int batch_size_n = 16;
    double learning_rate_eta = 40.0;
    std::uint64_t seed = 7;
    // Candidate-generation temperature; no reference default exists, 1.0 is
    // this artifact's choice.
    double sampling_temperature = 1.0;
    int workers = 4;
    int max_retries = 2;

    std::string judge_endpoint;
    double judge_temperature = 0.1;

    std::string imagery_endpoint;
    double describe_temperature = 0.1;
    double describe_top_p = 0.9;
    int describe_max_new_tokens = 128;
    int image_width = 384;
    int image_height = 384;
    int num_inference_steps = 40;
    double guidance_scale = 7.5;

    bool operator==(const PipelineConfig&) const = default;
};

/// Returns cfg if every invariant holds, otherwise throws std::invalid_argument
/// listing each violated invariant with its field name.
PipelineConfig validate_config(const PipelineConfig& cfg);

void to_json(nlohmann::json& j, const TrainSample& s);
void from_json(const nlohmann::json& j, TrainSample& s);
void to_json(nlohmann::json& j, const ScoredCandidate& c);
void from_json(const nlohmann::json& j, ScoredCandidate& c);
void to_json(nlohmann::json& j, const ContrastiveRecord& r);
void from_json(const nlohmann::json& j, ContrastiveRecord& r);
void to_json(nlohmann::json& j, const LogRatioBundle& b);
void from_json(const nlohmann::json& j, LogRatioBundle& b);
void to_json(nlohmann::json& j, const PipelineConfig& c);
void from_json(const nlohmann::json& j, PipelineConfig& c);

}  // namespace ovip
