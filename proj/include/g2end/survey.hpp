#ifndef G2END_SURVEY_HPP
#define G2END_SURVEY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "g2end/analysis.hpp"

namespace g2end {

/// Survey over the quintic models y^2 = x^5 + a4 x^4 + ... + a0 with
/// |a_i| <= box and a4 >= 0 (the sign normalization avoiding obvious
/// hyperelliptic twists).
struct SurveyConfig {
    int box = 10;
    long B_irred = 59;
    long B_disc = 200;
    uint64_t sample = 0;  // 0 = full enumeration
    uint64_t seed = 0;
    unsigned threads = 0;  // 0 = hardware concurrency
    std::string data_dir;
};

struct SurveyResult {
    uint64_t models_total = 0;    // size of the model space
    uint64_t models_tested = 0;   // enumerated or sampled
    uint64_t singular = 0;        // excluded (disc = 0)
    std::map<std::string, uint64_t> counts;  // classification tallies
    long max_irreducibility_prime = 0;       // largest prime step 4 needed
    std::vector<std::string> log;            // per-curve lines, sorted

    std::string to_json() const;
};

uint64_t survey_model_count(int box);

/// Decode a model index to the coefficient vector (a0..a4) of
/// x^5 + a4 x^4 + ... + a0.
std::vector<long> survey_model_coeffs(int box, uint64_t index);

SurveyResult survey(const SurveyConfig& config);

}  // namespace g2end

#endif
