#include "mixnum/sim_io.hpp"

#include "mixnum/channel.hpp"
#include "mixnum/errors.hpp"

#include "json.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>

static_assert(std::endian::native == std::endian::little,
              "IQ file layout assumes a little-endian host");

namespace mixnum {

using json = nlohmann::ordered_json;

const char* const kCsvHeader =
    "snr_db,trials,type_rate,loc_rate,joint_rate,ber_blind,ber_nonblind,"
    "ber_awgn_theory,ber_rayleigh_theory";

namespace {

template <typename T>
void read_key(const json& j, const char* key, T& out) {
    if (const auto it = j.find(key); it != j.end()) it->get_to(out);
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream body;
    body << in.rdbuf();
    return body.str();
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(sep, start);
        cells.push_back(line.substr(start, pos - start));
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    return cells;
}

json candidate_to_json(const CandidateReport& report) {
    json c;
    c["k"] = report.type.cfg.k;
    c["delta_f_hz"] = report.type.cfg.delta_f_hz;
    c["n_fft"] = report.type.cfg.n_fft;
    c["matched"] = report.type.matched;
    c["size_estimate"] = report.type.size_estimate;
    c["timing"] = report.type.timing;
    c["apex"] = report.type.apex_value;
    c["folds"] = report.type.folds;
    c["subband"] = report.subband;
    c["v"] = report.v_values;
    return c;
}

} // namespace

SimConfig parse_config_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw InputError(std::string("config is not valid JSON: ") + e.what());
    }
    if (j.contains("config")) j = j.at("config");
    if (!j.is_object()) throw InputError("config root must be a JSON object");

    SimConfig config;
    try {
        read_key(j, "scenario", config.scenario);
        if (const auto it = j.find("users"); it != j.end()) {
            config.users.clear();
            for (const auto& u : *it) {
                UserSpec spec;
                read_key(u, "k", spec.k);
                read_key(u, "subband", spec.subband);
                config.users.push_back(spec);
            }
        }
        read_key(j, "channel", config.channel);
        read_key(j, "pdp", config.pdp);
        read_key(j, "snr_db", config.snr_db);
        read_key(j, "trials", config.trials);
        read_key(j, "seed", config.seed);
        read_key(j, "record_frames", config.record_frames);
        read_key(j, "mode", config.mode);
        read_key(j, "jobs", config.jobs);
        if (const auto it = j.find("base"); it != j.end()) {
            read_key(*it, "delta_f0_hz", config.base.delta_f0_hz);
            read_key(*it, "n_fft0", config.base.n_fft0);
            read_key(*it, "m_active0", config.base.m_active0);
            if (const auto cp = it->find("cp_ratio"); cp != it->end()) {
                read_key(*cp, "num", config.base.cp_ratio.num);
                read_key(*cp, "den", config.base.cp_ratio.den);
            }
            read_key(*it, "frame_symbol_budget", config.base.frame_symbol_budget);
        }
    } catch (const json::exception& e) {
        throw InputError(std::string("config field has the wrong type: ") + e.what());
    }
    return config;
}

SimConfig load_config_file(const std::string& path) {
    return parse_config_json(read_text_file(path));
}

std::string config_to_json(const SimConfig& config) {
    json j;
    j["scenario"] = config.scenario;
    json users = json::array();
    const auto resolved =
        config.scenario == 0 ? config.users : reference_scenario(config.scenario);
    for (const auto& u : resolved) users.push_back({{"k", u.k}, {"subband", u.subband}});
    j["users"] = users;
    j["channel"] = config.channel;
    j["pdp"] = config.pdp.empty() && config.channel == "rayleigh"
                   ? reference_pdp().tap_powers
                   : config.pdp;
    j["snr_db"] = config.snr_db;
    j["trials"] = config.trials;
    j["seed"] = config.seed;
    j["record_frames"] = config.record_frames;
    j["mode"] = config.mode;
    j["jobs"] = config.jobs;
    j["base"] = {{"delta_f0_hz", config.base.delta_f0_hz},
                 {"n_fft0", config.base.n_fft0},
                 {"m_active0", config.base.m_active0},
                 {"cp_ratio", {{"num", config.base.cp_ratio.num},
                               {"den", config.base.cp_ratio.den}}},
                 {"frame_symbol_budget", config.base.frame_symbol_budget}};
    json wrapped;
    wrapped["config"] = std::move(j);
    return wrapped.dump(2) + "\n";
}

std::string rows_to_csv(const std::vector<SweepRow>& rows) {
    std::string out = kCsvHeader;
    out += '\n';
    for (const auto& r : rows) {
        out += format_double(r.snr_db);
        out += ',' + std::to_string(r.trials);
        out += ',' + format_double(r.type_rate);
        out += ',' + format_double(r.loc_rate);
        out += ',' + format_double(r.joint_rate);
        out += ',' + format_double(r.ber_blind);
        out += ',' + format_double(r.ber_nonblind);
        out += ',' + format_double(r.ber_awgn_theory);
        out += ',' + format_double(r.ber_rayleigh_theory);
        out += '\n';
    }
    return out;
}

std::vector<SweepRow> parse_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw InputError("CSV is empty");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != kCsvHeader) throw InputError("unexpected CSV header: " + line);

    std::vector<SweepRow> rows;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto cells = split(line, ',');
        if (cells.size() != 9)
            throw InputError("CSV row has " + std::to_string(cells.size()) +
                             " cells, expected 9");
        SweepRow r;
        try {
            r.snr_db = std::stod(cells[0]);
            r.trials = std::stol(cells[1]);
            r.type_rate = std::stod(cells[2]);
            r.loc_rate = std::stod(cells[3]);
            r.joint_rate = std::stod(cells[4]);
            r.ber_blind = std::stod(cells[5]);
            r.ber_nonblind = std::stod(cells[6]);
            r.ber_awgn_theory = std::stod(cells[7]);
            r.ber_rayleigh_theory = std::stod(cells[8]);
        } catch (const std::exception&) {
            throw InputError("CSV row is not numeric: " + line);
        }
        rows.push_back(r);
    }
    return rows;
}

void write_results(const std::string& out_dir, const std::vector<SweepRow>& rows,
                   const SimConfig& config) {
    if (rows.empty()) throw ParameterError("no rows to write");
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) throw IoError("cannot create " + out_dir + ": " + ec.message());

    const auto csv_path = std::filesystem::path(out_dir) / "results.csv";
    std::ofstream csv(csv_path, std::ios::binary);
    csv << rows_to_csv(rows);
    if (!csv) throw IoError("cannot write " + csv_path.string());

    const auto cfg_path = std::filesystem::path(out_dir) / "config.json";
    std::ofstream cfg(cfg_path, std::ios::binary);
    cfg << config_to_json(config);
    if (!cfg) throw IoError("cannot write " + cfg_path.string());
}

IqFormat parse_iq_format(const std::string& tag) {
    if (tag == "f32le") return IqFormat::f32le;
    if (tag == "i16le") return IqFormat::i16le;
    throw InputError("unknown IQ format '" + tag + "' (know f32le, i16le)");
}

std::string iq_format_tag(IqFormat format) {
    return format == IqFormat::f32le ? "f32le" : "i16le";
}

std::vector<cd> read_iq_file(const std::string& path, IqFormat format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::vector<char> raw((std::istreambuf_iterator<char>(in)),
                          std::istreambuf_iterator<char>());
    if (raw.empty()) throw InputError(path + " is empty");

    const std::size_t unit = format == IqFormat::f32le ? 2 * sizeof(float)
                                                       : 2 * sizeof(std::int16_t);
    if (raw.size() % unit != 0)
        throw InputError(path + " is truncated: " + std::to_string(raw.size()) +
                         " bytes is not a whole number of " + iq_format_tag(format) +
                         " sample pairs");

    std::vector<cd> samples(raw.size() / unit);
    if (format == IqFormat::f32le) {
        std::vector<float> pairs(samples.size() * 2);
        std::memcpy(pairs.data(), raw.data(), raw.size());
        for (std::size_t i = 0; i < samples.size(); ++i)
            samples[i] = cd(pairs[2 * i], pairs[2 * i + 1]);
    } else {
        std::vector<std::int16_t> pairs(samples.size() * 2);
        std::memcpy(pairs.data(), raw.data(), raw.size());
        for (std::size_t i = 0; i < samples.size(); ++i)
            samples[i] = cd(pairs[2 * i] / 32767.0, pairs[2 * i + 1] / 32767.0);
    }
    return samples;
}

void write_iq_file(const std::string& path, std::span<const cd> samples,
                   IqFormat format) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");
    if (format == IqFormat::f32le) {
        std::vector<float> pairs;
        pairs.reserve(samples.size() * 2);
        for (const auto& s : samples) {
            pairs.push_back(static_cast<float>(s.real()));
            pairs.push_back(static_cast<float>(s.imag()));
        }
        out.write(reinterpret_cast<const char*>(pairs.data()),
                  static_cast<std::streamsize>(pairs.size() * sizeof(float)));
    } else {
        const auto quantize = [](double v) {
            const double scaled = std::round(v * 32767.0);
            return static_cast<std::int16_t>(std::clamp(scaled, -32768.0, 32767.0));
        };
        std::vector<std::int16_t> pairs;
        pairs.reserve(samples.size() * 2);
        for (const auto& s : samples) {
            pairs.push_back(quantize(s.real()));
            pairs.push_back(quantize(s.imag()));
        }
        out.write(reinterpret_cast<const char*>(pairs.data()),
                  static_cast<std::streamsize>(pairs.size() * sizeof(std::int16_t)));
    }
    if (!out) throw IoError("short write to " + path);
}

ClassifyReport classify_iq_file(const ClassifyRequest& request) {
    if (request.candidate_ks.empty()) throw ParameterError("candidate list is empty");
    const auto samples = read_iq_file(request.path, request.format);

    std::vector<NumerologyConfig> candidates;
    candidates.reserve(request.candidate_ks.size());
    long min_len = 0;
    for (const int k : request.candidate_ks) {
        const auto cfg = derive_numerology(k, request.base);
        min_len = std::max(min_len, static_cast<long>(cfg.symbols_per_frame) *
                                        (cfg.n_fft + cfg.n_cp));
        candidates.push_back(cfg);
    }
    if (static_cast<long>(samples.size()) < min_len)
        throw InputError(request.path + " holds " + std::to_string(samples.size()) +
                         " samples, need at least one frame (" + std::to_string(min_len) +
                         ")");

    const int n_subbands = request.n_subbands > 0 ? request.n_subbands : 2;

    ClassifyReport report;
    report.candidates = identify_candidates(samples, candidates, n_subbands);

    std::ostringstream text;
    text << "record: " << samples.size() << " samples (" << iq_format_tag(request.format)
         << "), " << candidates.size() << " candidates, " << n_subbands << " subbands\n";
    for (const auto& c : report.candidates) {
        text << "  " << c.type.cfg.delta_f_hz / 1000.0 << " kHz (size " << c.type.cfg.n_fft
             << "): ";
        if (c.type.folds < 1) {
            text << "record too short\n";
            continue;
        }
        if (c.type.matched) {
            report.any_match = true;
            text << "matched, subband " << c.subband;
        } else {
            text << "no match";
        }
        text << " (size estimate " << c.type.size_estimate << ", apex "
             << format_double(c.type.apex_value) << ", V";
        for (const double v : c.v_values) text << ' ' << format_double(v);
        text << ")\n";
    }
    if (!report.any_match) text << "no numerology matched\n";

    json j;
    j["samples"] = samples.size();
    j["format"] = iq_format_tag(request.format);
    j["n_subbands"] = n_subbands;
    j["any_match"] = report.any_match;
    json cand = json::array();
    for (const auto& c : report.candidates) cand.push_back(candidate_to_json(c));
    j["candidates"] = std::move(cand);

    report.text = text.str();
    report.json = j.dump(2) + "\n";
    return report;
}

} // namespace mixnum
