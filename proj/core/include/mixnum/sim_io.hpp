#pragma once

#include "mixnum/blind_id.hpp"
#include "mixnum/sim.hpp"

#include <span>
#include <string>
#include <vector>

namespace mixnum {

// Config files are JSON, either the bare object or wrapped as
// {"config": {...}}, which is the shape of the emitted sidecar. Unknown
// keys are ignored; present keys must have the right type.
SimConfig parse_config_json(const std::string& text);
SimConfig load_config_file(const std::string& path);

// Full resolved echo (users and PDP expanded), suitable to feed back in.
std::string config_to_json(const SimConfig& config);

// CSV with a fixed header and one row per SNR point; doubles printed with
// %.17g so a parse round-trip is exact, lines end with '\n'.
extern const char* const kCsvHeader;
std::string rows_to_csv(const std::vector<SweepRow>& rows);
std::vector<SweepRow> parse_csv(const std::string& text);

// Writes <out_dir>/results.csv and the <out_dir>/config.json sidecar;
// creates the directory if needed.
void write_results(const std::string& out_dir, const std::vector<SweepRow>& rows,
                   const SimConfig& config);

// Interleaved complex sample files: re,im pairs, little endian.
enum class IqFormat {
    f32le, // 32-bit IEEE float pairs
    i16le, // 16-bit signed integer pairs, full scale 32767
};

IqFormat parse_iq_format(const std::string& tag); // InputError on unknown tags
std::string iq_format_tag(IqFormat format);

std::vector<cd> read_iq_file(const std::string& path, IqFormat format);
void write_iq_file(const std::string& path, std::span<const cd> samples,
                   IqFormat format);

struct ClassifyRequest {
    std::string path;
    IqFormat format = IqFormat::f32le;
    BaseParams base;
    std::vector<int> candidate_ks = {0, 1, 2};
    int n_subbands = 0; // 0 = the two-subband reference layout
};

struct ClassifyReport {
    std::vector<CandidateReport> candidates;
    bool any_match = false;
    std::string text; // human-readable summary
    std::string json; // the same report, machine-readable
};

// Reads the capture and runs both identification stages over the candidate
// set. The file must hold at least one frame of the largest candidate;
// candidates whose correlation needs more signal than the file holds are
// reported as unmatched.
ClassifyReport classify_iq_file(const ClassifyRequest& request);

} // namespace mixnum
