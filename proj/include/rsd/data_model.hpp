#pragma once

#include <rsd/common.hpp>
#include <rsd/csv.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rsd {

// Response patterns; {z_a=0, z_b=1} cannot occur because wave-1
// nonresponders are never followed.
enum class Pattern : std::uint8_t { Both = 0, WaveOnly = 1, Unit = 2 };

struct ObservationRecord {
    std::optional<double> y_a;
    std::optional<double> y_b;
    bool z_a = false;
    bool z_b = false;
    double base_weight = 0.0;
    std::vector<double> replicate_weights;

    Pattern pattern() const {
        if (z_a && z_b) return Pattern::Both;
        if (z_a) return Pattern::WaveOnly;
        return Pattern::Unit;
    }
};

struct PairedSample {
    std::vector<ObservationRecord> records;
    std::vector<std::size_t> responder_index;  // U = {i : z_a = 1}
    Interval support_a;
    Interval support_b;
    std::size_t replicate_count = 0;  // G, shared across records (0 if none)

    std::size_t k() const { return records.size(); }
    std::size_t n() const { return responder_index.size(); }

    // Validates invariants and builds the responder index.
    static PairedSample make(std::vector<ObservationRecord> records,
                             Interval support_a, Interval support_b);
};

struct ResponderWeights {
    std::vector<double> w_prime;  // over U, sums to n
};

struct ResponseShares {
    double d11 = 0.0;
    double d10 = 0.0;
    double d00 = 0.0;
    // d01 is identically zero by design.
};

struct SampleSchema {
    std::string y_a = "y_a";
    std::string y_b = "y_b";
    std::string z_a = "z_a";
    std::string z_b = "z_b";
    std::string weight = "weight";
    std::string replicate_prefix = "rw_";  // rw_1..rw_G, G inferred from header
    Interval support_a;
    Interval support_b;
};

enum class ShareMode { Weighted, HildaPartial };

PairedSample load_sample(const std::string& path, const SampleSchema& schema);
PairedSample sample_from_csv(const CsvTable& table, const SampleSchema& schema,
                             const std::string& origin);

// W'_i/n = pi_i^{-1} / sum_U pi_j^{-1}: base weights restricted to U and
// rescaled to sum exactly n.
ResponderWeights responder_weights(const PairedSample& sample);

// `HildaPartial` reproduces the construction used when unit-nonresponder
// weights are withheld: d00 = (k-n)/k unweighted, d10 from responder weights
// rescaled to sum (n/k) of their total, d11 the remainder. `Weighted` takes
// Hajek shares of all three patterns over the full sample.
ResponseShares estimate_shares(const PairedSample& sample, ShareMode mode);

}  // namespace rsd
