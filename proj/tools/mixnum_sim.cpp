// Command line front end: Monte-Carlo sweeps over an SNR grid and offline
// classification of IQ captures.

#include "mixnum/errors.hpp"
#include "mixnum/sim.hpp"
#include "mixnum/sim_io.hpp"

#include "CLI11.hpp"

#include <cstdio>
#include <optional>
#include <string>
#include <vector>

namespace {

mixnum::BaseParams parse_base(const std::string& text) {
    std::vector<double> fields;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t pos = text.find(',', start);
        const std::string cell = text.substr(start, pos - start);
        try {
            fields.push_back(std::stod(cell));
        } catch (const std::exception&) {
            throw mixnum::InputError("bad base parameter '" + cell + "'");
        }
        if (pos == std::string::npos) break;
        start = pos + 1;
    }
    if (fields.size() < 3 || fields.size() > 6)
        throw mixnum::InputError(
            "base must be delta_f0_hz,n_fft0,m_active0[,cp_num,cp_den[,budget]]");
    mixnum::BaseParams base;
    base.delta_f0_hz = fields[0];
    base.n_fft0 = static_cast<int>(fields[1]);
    base.m_active0 = static_cast<int>(fields[2]);
    if (fields.size() >= 5) {
        base.cp_ratio.num = static_cast<long>(fields[3]);
        base.cp_ratio.den = static_cast<long>(fields[4]);
    }
    if (fields.size() == 6) base.frame_symbol_budget = static_cast<int>(fields[5]);
    return base;
}

int run_sweep_command(const std::string& config_path, const std::string& out_dir,
                      std::optional<long> trials, std::optional<std::uint64_t> seed,
                      std::optional<int> jobs, std::optional<std::string> mode,
                      std::optional<std::string> channel, std::optional<int> scenario,
                      std::optional<int> record_frames,
                      const std::vector<double>& snr_override) {
    auto config = mixnum::load_config_file(config_path);
    if (trials) config.trials = *trials;
    if (seed) config.seed = *seed;
    if (jobs) config.jobs = *jobs;
    if (mode) config.mode = *mode;
    if (channel) config.channel = *channel;
    if (scenario) config.scenario = *scenario;
    if (record_frames) config.record_frames = *record_frames;
    if (!snr_override.empty()) config.snr_db = snr_override;

    const auto rows = mixnum::run_sweep(config);
    mixnum::write_results(out_dir, rows, config);
    for (const auto& r : rows)
        std::printf("snr %+6.1f dB: type %.4f  joint %.4f  ber_blind %.3e  ber_nonblind %.3e\n",
                    r.snr_db, r.type_rate, r.joint_rate, r.ber_blind, r.ber_nonblind);
    std::printf("wrote %s/results.csv and %s/config.json\n", out_dir.c_str(),
                out_dir.c_str());
    return 0;
}

int run_classify_command(const std::string& in_path, const std::string& format_tag,
                         const std::string& base_text, const std::vector<int>& candidates,
                         int subbands, const std::string& json_out) {
    mixnum::ClassifyRequest request;
    request.path = in_path;
    request.format = mixnum::parse_iq_format(format_tag);
    request.base = parse_base(base_text);
    if (!candidates.empty()) request.candidate_ks = candidates;
    request.n_subbands = subbands;

    const auto report = mixnum::classify_iq_file(request);
    std::fputs(report.text.c_str(), stdout);
    if (!json_out.empty()) {
        std::FILE* f = std::fopen(json_out.c_str(), "wb");
        if (f == nullptr) throw mixnum::IoError("cannot write " + json_out);
        std::fputs(report.json.c_str(), f);
        std::fclose(f);
    } else {
        std::fputs(report.json.c_str(), stdout);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"mixed-numerology OFDM simulator and blind identifier"};
    app.require_subcommand(1);

    auto* sweep = app.add_subcommand("sweep", "run a Monte-Carlo SNR sweep");
    std::string config_path;
    std::string out_dir;
    std::optional<long> trials;
    std::optional<std::uint64_t> seed;
    std::optional<int> jobs;
    std::optional<std::string> mode;
    std::optional<std::string> channel;
    std::optional<int> scenario;
    std::optional<int> record_frames;
    std::vector<double> snr_override;
    sweep->add_option("--config", config_path, "JSON config file")->required();
    sweep->add_option("--out", out_dir, "output directory")->required();
    sweep->add_option("--trials", trials, "trials per SNR point");
    sweep->add_option("--seed", seed, "master seed");
    sweep->add_option("--jobs", jobs, "worker threads");
    sweep->add_option("--mode", mode, "blind | nonblind | both");
    sweep->add_option("--channel", channel, "awgn | rayleigh");
    sweep->add_option("--scenario", scenario, "0 (custom users), 1, or 2");
    sweep->add_option("--record-frames", record_frames, "frames observed per trial");
    sweep->add_option("--snr", snr_override, "SNR grid in dB")->delimiter(',');

    auto* classify = app.add_subcommand("classify", "identify numerologies in an IQ capture");
    std::string in_path;
    std::string format_tag;
    std::string base_text = "15000,4096,1024,1,16,1";
    std::vector<int> candidates;
    int subbands = 0;
    std::string json_out;
    classify->add_option("--in", in_path, "IQ sample file")->required();
    classify->add_option("--format", format_tag, "f32le | i16le")->required();
    classify->add_option("--base", base_text,
                         "delta_f0_hz,n_fft0,m_active0[,cp_num,cp_den[,budget]]");
    classify->add_option("--candidates", candidates, "candidate scaling indices")
        ->delimiter(',');
    classify->add_option("--subbands", subbands, "subband count (0 = the two-subband layout)");
    classify->add_option("--json", json_out, "write the JSON report here instead of stdout");

    CLI11_PARSE(app, argc, argv);

    try {
        if (sweep->parsed())
            return run_sweep_command(config_path, out_dir, trials, seed, jobs, mode,
                                     channel, scenario, record_frames, snr_override);
        return run_classify_command(in_path, format_tag, base_text, candidates, subbands,
                                    json_out);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
