#include <rsd/data_model.hpp>

#include <cmath>
#include <sstream>

namespace rsd {

PairedSample PairedSample::make(std::vector<ObservationRecord> records,
                                Interval support_a, Interval support_b) {
    PairedSample s;
    s.records = std::move(records);
    s.support_a = support_a;
    s.support_b = support_b;
    if (!(support_a.lower < support_a.upper) || !(support_b.lower < support_b.upper))
        throw config_error("declared supports must be nonempty intervals");

    std::vector<std::size_t> bad;
    for (std::size_t i = 0; i < s.records.size(); ++i) {
        const auto& r = s.records[i];
        if (!r.z_a && r.z_b) {
            bad.push_back(i);
            continue;
        }
        if (r.z_a != r.y_a.has_value() || r.z_b != r.y_b.has_value()) bad.push_back(i);
        if (r.base_weight < 0.0)
            throw data_error("record " + std::to_string(i) + ": negative design weight");
        for (double rw : r.replicate_weights)
            if (rw < 0.0)
                throw data_error("record " + std::to_string(i) + ": negative replicate weight");
        if (r.y_a && !s.support_a.contains(*r.y_a))
            throw data_error("record " + std::to_string(i) + ": y_a outside declared support");
        if (r.y_b && !s.support_b.contains(*r.y_b))
            throw data_error("record " + std::to_string(i) + ": y_b outside declared support");
    }
    if (!bad.empty()) {
        std::ostringstream msg;
        msg << "response-pattern violations in rows:";
        for (std::size_t i = 0; i < bad.size() && i < 20; ++i) msg << ' ' << bad[i];
        if (bad.size() > 20) msg << " (+" << bad.size() - 20 << " more)";
        throw data_error(msg.str());
    }

    std::size_t g = 0;
    bool first = true;
    for (std::size_t i = 0; i < s.records.size(); ++i) {
        if (s.records[i].z_a) s.responder_index.push_back(i);
        if (first) {
            g = s.records[i].replicate_weights.size();
            first = false;
        } else if (s.records[i].replicate_weights.size() != g) {
            throw data_error("replicate weight columns must be shared across all records");
        }
    }
    s.replicate_count = g;
    return s;
}

PairedSample sample_from_csv(const CsvTable& table, const SampleSchema& schema,
                             const std::string& origin) {
    const int cy_a = table.require_column(schema.y_a);
    const int cy_b = table.require_column(schema.y_b);
    const int cz_a = table.require_column(schema.z_a);
    const int cz_b = table.require_column(schema.z_b);
    const int cw = table.require_column(schema.weight);

    // Replicate columns prefix+1 .. prefix+G, G inferred from the header.
    std::vector<int> rep_cols;
    for (std::size_t g = 1;; ++g) {
        const int c = table.column(schema.replicate_prefix + std::to_string(g));
        if (c < 0) break;
        rep_cols.push_back(c);
    }

    auto as_flag = [&](const std::optional<double>& v, const char* what, std::size_t row) {
        if (!v || (*v != 0.0 && *v != 1.0))
            throw data_error(origin + ": row " + std::to_string(row + 1) + ": " + what +
                             " must be 0 or 1");
        return *v == 1.0;
    };

    std::vector<ObservationRecord> records;
    records.reserve(table.rows.size());
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        const auto& row = table.rows[i];
        ObservationRecord r;
        r.z_a = as_flag(row[cz_a], "z_a", i);
        r.z_b = as_flag(row[cz_b], "z_b", i);
        r.y_a = row[cy_a];
        r.y_b = row[cy_b];
        r.base_weight = row[cw].value_or(0.0);
        for (int c : rep_cols) r.replicate_weights.push_back(row[c].value_or(0.0));
        records.push_back(std::move(r));
    }
    return PairedSample::make(std::move(records), schema.support_a, schema.support_b);
}

PairedSample load_sample(const std::string& path, const SampleSchema& schema) {
    return sample_from_csv(read_csv(path), schema, path);
}

ResponderWeights responder_weights(const PairedSample& sample) {
    const std::size_t n = sample.n();
    if (n == 0) throw data_error("responder_weights: no responders in sample");
    double total = 0.0;
    for (std::size_t i : sample.responder_index) total += sample.records[i].base_weight;
    if (!(total > 0.0)) throw data_error("responder_weights: all responder weights are zero");
    ResponderWeights w;
    w.w_prime.reserve(n);
    const double scale = static_cast<double>(n) / total;
    for (std::size_t i : sample.responder_index)
        w.w_prime.push_back(sample.records[i].base_weight * scale);
    return w;
}

ResponseShares estimate_shares(const PairedSample& sample, ShareMode mode) {
    const double k = static_cast<double>(sample.k());
    const double n = static_cast<double>(sample.n());
    if (sample.k() == 0) throw data_error("estimate_shares: empty sample");

    ResponseShares out;
    if (mode == ShareMode::HildaPartial) {
        out.d00 = (k - n) / k;
        double wu = 0.0, w10 = 0.0;
        for (std::size_t i : sample.responder_index) {
            const auto& r = sample.records[i];
            wu += r.base_weight;
            if (!r.z_b) w10 += r.base_weight;
        }
        if (n > 0 && !(wu > 0.0))
            throw data_error("estimate_shares: responder weights sum to zero");
        out.d10 = n > 0 ? (n / k) * (w10 / wu) : 0.0;
        out.d11 = 1.0 - out.d10 - out.d00;
        return out;
    }

    double w = 0.0, w11 = 0.0, w10 = 0.0, w00 = 0.0;
    for (const auto& r : sample.records) {
        w += r.base_weight;
        switch (r.pattern()) {
            case Pattern::Both: w11 += r.base_weight; break;
            case Pattern::WaveOnly: w10 += r.base_weight; break;
            case Pattern::Unit: w00 += r.base_weight; break;
        }
    }
    if (!(w > 0.0)) throw data_error("estimate_shares: design weights sum to zero");
    out.d11 = w11 / w;
    out.d10 = w10 / w;
    out.d00 = w00 / w;
    return out;
}

}  // namespace rsd
