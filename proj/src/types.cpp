#include "ovip/types.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace ovip {

using nlohmann::json;

PipelineConfig validate_config(const PipelineConfig& cfg) {
    std::vector<std::string> errors;
    if (cfg.k < 2) errors.push_back("k: must satisfy k >= 2");
    if (!(cfg.tau_neg <= cfg.tau_pos)) errors.push_back("tau_neg: must satisfy tau_neg <= tau_pos");
    if (!(cfg.beta > 0.0)) errors.push_back("beta: must be > 0");
    if (!(cfg.beta1 > 0.0)) errors.push_back("beta1: must be > 0");
    if (!(cfg.beta2 > 0.0)) errors.push_back("beta2: must be > 0");
    if (cfg.batch_size_n < 1) errors.push_back("batch_size_n: must be >= 1");
    if (!(cfg.sampling_temperature > 0.0)) errors.push_back("sampling_temperature: must be > 0");
    if (cfg.workers < 1) errors.push_back("workers: must be >= 1");
    if (cfg.max_retries < 0) errors.push_back("max_retries: must be >= 0");
    if (!errors.empty()) {
        std::string msg = "invalid config:";
        for (const auto& e : errors) msg += " [" + e + "]";
        throw std::invalid_argument(msg);
    }
    return cfg;
}

void to_json(json& j, const TrainSample& s) {
    j = json{{"id", s.id},
             {"image", s.image_ref},
             {"query", s.query},
             {"answer", s.reference_answer}};
}

void from_json(const json& j, TrainSample& s) {
    j.at("id").get_to(s.id);
    j.at("image").get_to(s.image_ref);
    j.at("query").get_to(s.query);
    j.at("answer").get_to(s.reference_answer);
}

void to_json(json& j, const ScoredCandidate& c) {
    j = json{{"sample_id", c.sample_id}, {"response", c.response}, {"reward", c.reward}};
}

void from_json(const json& j, ScoredCandidate& c) {
    j.at("sample_id").get_to(c.sample_id);
    j.at("response").get_to(c.response);
    j.at("reward").get_to(c.reward);
}

void to_json(json& j, const ContrastiveRecord& r) {
    j = json{{"sample_id", r.sample_id},
             {"query", r.query},
             {"image_pos", r.image_pos},
             {"image_neg", r.image_neg},
             {"response_pos", r.response_pos},
             {"response_neg", r.response_neg},
             {"reward_pos", r.reward_pos},
             {"reward_neg", r.reward_neg},
             {"pos_is_reference", r.pos_is_reference}};
}

void from_json(const json& j, ContrastiveRecord& r) {
    j.at("sample_id").get_to(r.sample_id);
    j.at("query").get_to(r.query);
    j.at("image_pos").get_to(r.image_pos);
    j.at("image_neg").get_to(r.image_neg);
    j.at("response_pos").get_to(r.response_pos);
    j.at("response_neg").get_to(r.response_neg);
    j.at("reward_pos").get_to(r.reward_pos);
    j.at("reward_neg").get_to(r.reward_neg);
    j.at("pos_is_reference").get_to(r.pos_is_reference);
}

void to_json(json& j, const LogRatioBundle& b) {
    j = json{{"lr_pos_imgpos", b.lr_pos_imgpos}, {"lr_neg_imgpos", b.lr_neg_imgpos},
             {"lr_pos_noimg", b.lr_pos_noimg},   {"lr_neg_noimg", b.lr_neg_noimg},
             {"lr_pos_imgneg", b.lr_pos_imgneg}, {"lr_neg_imgneg", b.lr_neg_imgneg}};
}

void from_json(const json& j, LogRatioBundle& b) {
    j.at("lr_pos_imgpos").get_to(b.lr_pos_imgpos);
    j.at("lr_neg_imgpos").get_to(b.lr_neg_imgpos);
    j.at("lr_pos_noimg").get_to(b.lr_pos_noimg);
    j.at("lr_neg_noimg").get_to(b.lr_neg_noimg);
    // Only the symmetric image loss needs the imgneg ratios of both responses;
    // older bundle files may omit them.
    b.lr_pos_imgneg = j.value("lr_pos_imgneg", 0.0);
    b.lr_neg_imgneg = j.value("lr_neg_imgneg", 0.0);
}

void to_json(json& j, const PipelineConfig& c) {
    j = json{{"k", c.k},
             {"delta", c.delta},
             {"tau_pos", c.tau_pos},
             {"tau_neg", c.tau_neg},
             {"beta", c.beta},
             {"beta1", c.beta1},
             {"beta2", c.beta2},
             {"batch_size_n", c.batch_size_n},
             {"learning_rate_eta", c.learning_rate_eta},
             {"seed", c.seed},
             {"sampling_temperature", c.sampling_temperature},
             {"workers", c.workers},
             {"max_retries", c.max_retries},
             {"judge_endpoint", c.judge_endpoint},
             {"judge_temperature", c.judge_temperature},
             {"imagery_endpoint", c.imagery_endpoint},
             {"describe_temperature", c.describe_temperature},
             {"describe_top_p", c.describe_top_p},
             {"describe_max_new_tokens", c.describe_max_new_tokens},
             {"image_width", c.image_width},
             {"image_height", c.image_height},
             {"num_inference_steps", c.num_inference_steps},
             {"guidance_scale", c.guidance_scale}};
}

void from_json(const json& j, PipelineConfig& c) {
    PipelineConfig defaults;
    c.k = j.value("k", defaults.k);
    c.delta = j.value("delta", defaults.delta);
    c.tau_pos = j.value("tau_pos", defaults.tau_pos);
    c.tau_neg = j.value("tau_neg", defaults.tau_neg);
    c.beta = j.value("beta", defaults.beta);
    c.beta1 = j.value("beta1", defaults.beta1);
    c.beta2 = j.value("beta2", defaults.beta2);
    c.batch_size_n = j.value("batch_size_n", defaults.batch_size_n);
    c.learning_rate_eta = j.value("learning_rate_eta", defaults.learning_rate_eta);
    c.seed = j.value("seed", defaults.seed);
    c.sampling_temperature = j.value("sampling_temperature", defaults.sampling_temperature);
    c.workers = j.value("workers", defaults.workers);
    c.max_retries = j.value("max_retries", defaults.max_retries);
    c.judge_endpoint = j.value("judge_endpoint", defaults.judge_endpoint);
    c.judge_temperature = j.value("judge_temperature", defaults.judge_temperature);
    c.imagery_endpoint = j.value("imagery_endpoint", defaults.imagery_endpoint);
    c.describe_temperature = j.value("describe_temperature", defaults.describe_temperature);
    c.describe_top_p = j.value("describe_top_p", defaults.describe_top_p);
    c.describe_max_new_tokens = j.value("describe_max_new_tokens", defaults.describe_max_new_tokens);
    c.image_width = j.value("image_width", defaults.image_width);
    c.image_height = j.value("image_height", defaults.image_height);
    c.num_inference_steps = j.value("num_inference_steps", defaults.num_inference_steps);
    c.guidance_scale = j.value("guidance_scale", defaults.guidance_scale);
}

}  // namespace ovip
