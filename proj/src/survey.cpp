#include "g2end/survey.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <mutex>
#include <random>
#include <thread>

namespace g2end {

using nlohmann::json;

uint64_t survey_model_count(int box) {
    uint64_t w = 2 * static_cast<uint64_t>(box) + 1;
    return (static_cast<uint64_t>(box) + 1) * w * w * w * w;
}

std::vector<long> survey_model_coeffs(int box, uint64_t index) {
    uint64_t w = 2 * static_cast<uint64_t>(box) + 1;
    std::vector<long> a(5);
    for (int i = 0; i < 4; ++i) {
        a[static_cast<size_t>(i)] = static_cast<long>(index % w) - box;
        index /= w;
    }
    a[4] = static_cast<long>(index);  // a4 in [0, box]
    if (a[4] > box) throw Error("survey_model_coeffs: index out of range");
    return a;
}

std::string SurveyResult::to_json() const {
    json j;
    j["models_total"] = models_total;
    j["models_tested"] = models_tested;
    j["singular"] = singular;
    json c;
    for (const auto& [k, v] : counts) c[k] = v;
    j["counts"] = c;
    j["max_irreducibility_prime"] = max_irreducibility_prime;
    j["log_lines"] = log.size();
    return j.dump(2) + "\n";
}

namespace {

struct WorkItem {
    uint64_t index;
};

// classification of one model; returns (bucket, log line, step-4 prime)
std::tuple<std::string, std::string, long> classify_model(int box, uint64_t index,
                                                          const AnalysisConfig& cfg) {
    auto a = survey_model_coeffs(box, index);
    std::vector<Int> coeffs;
    for (long v : a) coeffs.emplace_back(v);
    coeffs.emplace_back(1);  // monic quintic
    IntPoly f{std::move(coeffs)};
    if (discriminant(f) == 0) return {"singular", std::to_string(index) + " singular", 0};
    CurveModel curve{f};
    AnalysisReport rep = analyze(curve, cfg);
    long step4 = rep.irreducibility.witness_prime;
    std::string bucket = to_string(rep.classification.kind);
    if (rep.classification.kind == Classification::Kind::RM)
        bucket += ":" + rep.classification.rm_disc.get_str();
    if (rep.classification.kind == Classification::Kind::Decomposable)
        bucket += ":" + std::to_string(rep.classification.decomposable_n);
    if (rep.overall != ProofStatus::ProvenBoth) bucket += " (unproven)";
    std::string line = std::to_string(index) + " " + bucket;
    return {bucket, line, step4};
}

}  // namespace

SurveyResult survey(const SurveyConfig& config) {
    SurveyResult res;
    res.models_total = survey_model_count(config.box);

    std::vector<uint64_t> indices;
    if (config.sample == 0) {
        indices.resize(res.models_total);
        for (uint64_t i = 0; i < res.models_total; ++i) indices[i] = i;
    } else {
        std::mt19937_64 rng(config.seed);
        uint64_t total = res.models_total;
        uint64_t limit = UINT64_MAX - UINT64_MAX % total;
        indices.reserve(config.sample);
        while (indices.size() < config.sample) {
            uint64_t u = rng();
            if (u >= limit) continue;
            indices.push_back(u % total);
        }
    }
    res.models_tested = indices.size();

    AnalysisConfig acfg;
    acfg.B_irred = config.B_irred;
    acfg.B_disc = config.B_disc;
    acfg.data_dir = config.data_dir;

    unsigned nthreads = config.threads ? config.threads : std::thread::hardware_concurrency();
    if (nthreads == 0) nthreads = 1;
    nthreads = std::min<unsigned>(nthreads, 64);

    std::atomic<uint64_t> next{0};
    std::mutex agg;
    std::vector<std::pair<uint64_t, std::string>> lines;
    std::exception_ptr first_error;

    auto worker = [&]() {
        std::map<std::string, uint64_t> local_counts;
        uint64_t local_singular = 0;
        long local_max_prime = 0;
        std::vector<std::pair<uint64_t, std::string>> local_lines;
        while (true) {
            uint64_t k = next.fetch_add(1);
            if (k >= indices.size()) break;
            try {
                auto [bucket, line, step4] = classify_model(config.box, indices[k], acfg);
                if (bucket == "singular")
                    ++local_singular;
                else
                    ++local_counts[bucket];
                local_max_prime = std::max(local_max_prime, step4);
                local_lines.emplace_back(indices[k], line);
            } catch (...) {
                std::lock_guard<std::mutex> g(agg);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
        std::lock_guard<std::mutex> g(agg);
        res.singular += local_singular;
        for (const auto& [k2, v] : local_counts) res.counts[k2] += v;
        res.max_irreducibility_prime = std::max(res.max_irreducibility_prime, local_max_prime);
        lines.insert(lines.end(), local_lines.begin(), local_lines.end());
    };

    std::vector<std::thread> pool;
    for (unsigned i = 0; i < nthreads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);

    std::sort(lines.begin(), lines.end());
    res.log.reserve(lines.size());
    for (auto& [idx, line] : lines) res.log.push_back(std::move(line));
    return res;
}

}  // namespace g2end
