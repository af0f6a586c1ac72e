#include "primeray/cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "primeray/cyclicity.hpp"
#include "primeray/plot.hpp"
#include "primeray/primality.hpp"
#include "primeray/ray_geometry.hpp"
#include "primeray/spectrum.hpp"
#include "primeray/twin_candidates.hpp"
#include "primeray/wheel.hpp"

namespace primeray::cli {

namespace {

using nlohmann::json;

std::string fixed(double value, int precision) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::fixed, precision);
    return std::string(buf, res.ptr);
}

PrimalityOracle default_oracle() {
    return [](std::uint64_t n) { return is_prime(n); };
}

std::string join_rhythm(const std::vector<int>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i > 0) out += '-';
        out += std::to_string(values[i]);
    }
    return out;
}

void write_text_file(const std::string& path, const std::string& body) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open " + path);
    file.write(body.data(), static_cast<std::streamsize>(body.size()));
    if (!file) throw std::runtime_error("write failed for " + path);
}

int cmd_classify(std::ostream& out, std::uint64_t n, bool as_json) {
    const WheelClass wc = classify(n);
    const PolarPoint point = polar_coordinates(n);
    const bool thick = ray_kind(n) == RayKind::Thick;
    const bool prime = is_prime(n);

    if (as_json) {
        json j;
        j["n"] = n;
        if (holds_special_prime(wc)) {
            j["wheel"] = {{"class", "special_prime"}};
        } else if (const auto* cand = std::get_if<Candidate>(&wc)) {
            j["wheel"] = {{"class", "candidate"},
                          {"base_residue", cand->base.value()},
                          {"multiplier", cand->multiplier}};
        } else {
            j["wheel"] = {{"class", "certain_composite"}};
        }
        j["ray"] = {{"degree", point.ray_degree}, {"kind", thick ? "thick" : "thin"}};
        j["point"] = {{"x", point.x}, {"y", point.y}};
        j["prime"] = prime;
        out << j.dump(2) << '\n';
        return 0;
    }

    out << "n = " << n << '\n';
    if (holds_special_prime(wc)) {
        out << "wheel  : special prime (2, 3 and 5 lie off the wheel)\n";
    } else if (const auto* cand = std::get_if<Candidate>(&wc)) {
        out << "wheel  : candidate, " << n << " = " << cand->base.value() << " + 30 * " << cand->multiplier
            << '\n';
    } else {
        out << "wheel  : certain composite, shares a factor with 30; "
               "definitely a composite number\n";
    }
    out << "ray    : " << (thick ? "thick" : "thin") << ", degree " << point.ray_degree << '\n';
    out << "point  : (" << fixed(point.x, 2) << ", " << fixed(point.y, 2) << ")\n";
    out << "oracle : " << (prime ? "prime" : (n == 1 ? "neither prime nor composite" : "composite"))
        << '\n';
    return 0;
}

int cmd_verify(std::ostream& out, std::uint64_t max, bool as_json) {
    const PrimeSet primes = sieve(max);
    std::uint64_t primes_checked = 0;
    std::uint64_t necessity_violations = 0;
    std::uint64_t compositeness_violations = 0;
    for (std::uint64_t n = 1; n <= max; ++n) {
        const bool prime = primes.contains(n);
        const bool cand = is_candidate(n);
        if (prime && n > 5) {
            ++primes_checked;
            if (!cand) ++necessity_violations;
        }
        if (prime && !cand && n != 2 && n != 3 && n != 5) ++compositeness_violations;
    }
    const bool ok = necessity_violations == 0 && compositeness_violations == 0;

    if (as_json) {
        json j{{"max", max},
               {"primes_checked", primes_checked},
               {"necessity_violations", necessity_violations},
               {"compositeness_violations", compositeness_violations},
               {"ok", ok}};
        out << j.dump(2) << '\n';
    } else {
        out << "verify up to " << max << '\n';
        out << "  primes > 5 checked     : " << primes_checked << '\n';
        out << "  candidate misses       : " << necessity_violations << '\n';
        out << "  composite misclassings : " << compositeness_violations << '\n';
        out << "  result: " << (ok ? "OK" : "VIOLATIONS FOUND") << '\n';
    }
    return ok ? 0 : 1;
}

int cmd_rhythm(std::ostream& out, std::uint64_t blocks, bool as_json) {
    const RhythmReport report = verify_rhythm(blocks);
    const bool ok = !report.first_violation.has_value();

    if (as_json) {
        json j{{"blocks_checked", report.blocks_checked},
               {"parcel_rhythm", kParcelRhythm},
               {"candidate_rhythm", kCandidateGroupRhythm}};
        if (report.first_violation) {
            j["violation"] = {{"block_index", report.first_violation->block_index},
                              {"parcels", report.first_violation->parcels},
                              {"candidate_groups", report.first_violation->candidate_groups}};
        } else {
            j["violation"] = nullptr;
        }
        out << j.dump(2) << '\n';
    } else {
        out << "composite parcels : "
            << join_rhythm(std::vector<int>(kParcelRhythm.begin(), kParcelRhythm.end())) << '\n';
        out << "candidate groups  : "
            << join_rhythm(std::vector<int>(kCandidateGroupRhythm.begin(), kCandidateGroupRhythm.end()))
            << '\n';
        out << "blocks checked    : " << report.blocks_checked << " (starting at " << kBlockOrigin << ")\n";
        if (report.first_violation) {
            out << "violation at block " << report.first_violation->block_index << ": parcels "
                << join_rhythm(report.first_violation->parcels) << ", groups "
                << join_rhythm(report.first_violation->candidate_groups) << '\n';
        } else {
            out << "violations        : none\n";
        }
    }
    return ok ? 0 : 1;
}

int cmd_twins(std::ostream& out, std::uint64_t max, bool as_json) {
    const std::vector<TwinCandidate> positions = twin_positions(max);
    std::uint64_t realized = 0;
    std::vector<bool> twin_prime(positions.size());
    for (std::size_t i = 0; i < positions.size(); ++i) {
        twin_prime[i] = is_prime(positions[i].p) && is_prime(positions[i].p + 2);
        if (twin_prime[i]) ++realized;
    }

    if (as_json) {
        json list = json::array();
        for (std::size_t i = 0; i < positions.size(); ++i) {
            list.push_back({{"p", positions[i].p},
                            {"n", positions[i].n},
                            {"k", positions[i].k},
                            {"twin_prime", static_cast<bool>(twin_prime[i])}});
        }
        json j{{"max", max},
               {"count", positions.size()},
               {"realized", realized},
               {"positions", std::move(list)}};
        out << j.dump(2) << '\n';
    } else {
        out << "twin candidate positions up to " << max << ": " << positions.size() << " (" << realized
            << " realized as twin primes)\n";
        for (std::size_t i = 0; i < positions.size(); ++i) {
            out << "  p = " << positions[i].p << "  (n = " << positions[i].n << ", k = " << positions[i].k
                << ")  " << (twin_prime[i] ? "twin primes" : "-") << '\n';
        }
    }
    return 0;
}

int cmd_spectrum(std::ostream& out, std::uint64_t start, std::uint64_t count, std::uint64_t max_period,
                 const std::string& csv_path, bool as_json) {
    const IndicatorSequence seq = indicator(start, static_cast<std::size_t>(count), default_oracle());
    const std::vector<SpectrumBin> bins = power_spectrum(seq);
    if (!csv_path.empty()) write_spectrum_csv(bins, csv_path);

    std::uint64_t ones = 0;
    for (std::uint8_t v : seq.values) ones += v;

    std::optional<std::size_t> period;
    std::size_t effective_period = 0;
    if (count >= 4) {
        effective_period = max_period != 0
                               ? static_cast<std::size_t>(max_period)
                               : std::min<std::size_t>(512, static_cast<std::size_t>(count) / 2 - 1);
        period = aperiodicity_check(seq, effective_period);
    }

    if (as_json) {
        json j{{"start", start},
               {"count", count},
               {"primes", ones},
               {"bins", bins.size()},
               {"max_period_checked", effective_period}};
        j["period"] = period ? json(*period) : json(nullptr);
        j["csv"] = csv_path.empty() ? json(nullptr) : json(csv_path);
        out << j.dump(2) << '\n';
    } else {
        out << "indicator: " << count << " candidates from " << start << ", " << ones << " prime\n";
        if (!csv_path.empty()) out << "spectrum : " << bins.size() << " bins -> " << csv_path << '\n';
        if (count >= 4) {
            if (period) {
                out << "periodicity: exact period " << *period << " within the window\n";
            } else {
                out << "periodicity: none up to period " << effective_period << " (aperiodic window)\n";
            }
        }
    }
    return period.has_value() ? 1 : 0;
}

int cmd_plot(std::ostream& out, const std::string& kind, std::uint64_t max, std::uint64_t start,
             const std::string& path, int width, int height) {
    PlotConfig config;
    config.width_px = width;
    config.height_px = height;

    std::string doc;
    std::string described;
    if (kind == "rays") {
        config.max_n = max;
        doc = render_rays(config, default_oracle());
        described = "rays through n = " + std::to_string(max);
    } else {
        if (max < start) throw std::invalid_argument("plot: --max must be >= --start for strips");
        const std::uint64_t count = max - start + 1;
        const StripContent content = kind == "primes" ? StripContent::PrimesOnly : StripContent::All;
        doc = render_cycle_strip(start, count, default_oracle(), config, content);
        described = kind + " strip " + std::to_string(start) + ".." + std::to_string(max);
    }
    write_text_file(path, doc);
    out << "wrote " << path << " (" << described << ")\n";
    return 0;
}

int cmd_bench(std::ostream& out, std::uint64_t limit, bool as_json) {
    using clock = std::chrono::steady_clock;
    const auto seconds = [](clock::time_point a, clock::time_point b) {
        return std::chrono::duration<double>(b - a).count();
    };

    SieveStats plain_stats;
    SieveStats wheel_stats;
    const auto t0 = clock::now();
    const PrimeSet plain = sieve(limit, &plain_stats);
    const auto t1 = clock::now();
    const PrimeSet wheel = wheel_sieve(limit, &wheel_stats);
    const auto t2 = clock::now();
    std::uint64_t filtered = 0;
    for (std::uint64_t n = 1; n <= limit; ++n) {
        if (is_candidate(n)) ++filtered;
    }
    const auto t3 = clock::now();

    const bool identical = plain == wheel;
    const double cell_share = static_cast<double>(wheel_stats.cells_enumerated) / static_cast<double>(limit);

    if (as_json) {
        json j{{"limit", limit},
               {"sieve",
                {{"seconds", seconds(t0, t1)},
                 {"cells_enumerated", plain_stats.cells_enumerated},
                 {"composite_marks", plain_stats.composite_marks},
                 {"primes", plain.count()}}},
               {"wheel_sieve",
                {{"seconds", seconds(t1, t2)},
                 {"cells_enumerated", wheel_stats.cells_enumerated},
                 {"composite_marks", wheel_stats.composite_marks},
                 {"primes", wheel.count()}}},
               {"candidate_filter",
                {{"seconds", seconds(t2, t3)}, {"scanned", limit}, {"candidates", filtered}}},
               {"identical", identical},
               {"wheel_cell_share", cell_share}};
        out << j.dump(2) << '\n';
    } else {
        out << "bench, limit = " << limit << '\n';
        out << "  method            seconds    cells        marks        primes\n";
        out << "  sieve             " << fixed(seconds(t0, t1), 3) << "      " << plain_stats.cells_enumerated
            << "      " << plain_stats.composite_marks << "      " << plain.count() << '\n';
        out << "  wheel_sieve       " << fixed(seconds(t1, t2), 3) << "      " << wheel_stats.cells_enumerated
            << "      " << wheel_stats.composite_marks << "      " << wheel.count() << '\n';
        out << "  candidate filter  " << fixed(seconds(t2, t3), 3) << "      " << limit << " scanned, "
            << filtered << " candidates\n";
        out << "  membership identical : " << (identical ? "yes" : "NO") << '\n';
        out << "  wheel cells / limit  : " << fixed(cell_share, 5) << " (bound 8/30 = "
            << fixed(8.0 / 30.0, 5) << ")\n";
    }
    return identical ? 0 : 1;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"mod-30 wheel toolkit: candidate classification, polar rays, cycle rhythms, "
                 "twin positions, indicator spectrum, figures and sieve benchmarks"};
    app.name("primeray");
    app.require_subcommand(1);

    std::uint64_t classify_n = 0;
    bool classify_json = false;
    CLI::App* classify_cmd =
        app.add_subcommand("classify", "wheel verdict, plane position and oracle primality for one number");
    classify_cmd->add_option("n", classify_n, "number to classify (>= 1)")->required();
    classify_cmd->add_flag("--json", classify_json, "machine-readable output");

    std::uint64_t verify_max = 0;
    bool verify_json = false;
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "check candidate necessity and certain-composite soundness vs the oracle");
    verify_cmd->add_option("--max", verify_max, "verify every n up to this bound")->required();
    verify_cmd->add_flag("--json", verify_json, "machine-readable output");

    std::uint64_t rhythm_blocks = 0;
    bool rhythm_json = false;
    CLI::App* rhythm_cmd = app.add_subcommand("rhythm", "verify the 30-number cycle rhythms");
    rhythm_cmd->add_option("--blocks", rhythm_blocks, "highest block index to check")->required();
    rhythm_cmd->add_flag("--json", rhythm_json, "machine-readable output");

    std::uint64_t twins_max = 0;
    bool twins_json = false;
    CLI::App* twins_cmd = app.add_subcommand("twins", "list twin-candidate positions and realized twin primes");
    twins_cmd->add_option("--max", twins_max, "largest lower member p to list")->required();
    twins_cmd->add_flag("--json", twins_json, "machine-readable output");

    std::uint64_t spectrum_start = 50;
    std::uint64_t spectrum_count = 4096;
    std::uint64_t spectrum_max_period = 0;
    std::string spectrum_csv_path;
    bool spectrum_json = false;
    CLI::App* spectrum_cmd =
        app.add_subcommand("spectrum", "power spectrum and periodicity check of the prime indicator");
    spectrum_cmd->add_option("--start", spectrum_start, "first candidate at or after this value");
    spectrum_cmd->add_option("--count", spectrum_count, "number of candidates");
    spectrum_cmd->add_option("--max-period", spectrum_max_period,
                             "largest period to test (default min(512, count/2 - 1))");
    spectrum_cmd->add_option("-o,--output", spectrum_csv_path, "write bins as CSV to this path");
    spectrum_cmd->add_flag("--json", spectrum_json, "machine-readable output");

    std::string plot_kind;
    std::uint64_t plot_max = 3600;
    std::uint64_t plot_start = 50;
    std::string plot_path;
    int plot_width = 800;
    int plot_height = 800;
    CLI::App* plot_cmd = app.add_subcommand("plot", "emit an SVG figure");
    plot_cmd->add_option("--kind", plot_kind, "rays | cycle | primes")
        ->required()
        ->check(CLI::IsMember({"rays", "cycle", "primes"}));
    plot_cmd->add_option("--max", plot_max, "largest n drawn");
    plot_cmd->add_option("--start", plot_start, "strip start (cycle/primes kinds)");
    plot_cmd->add_option("-o,--output", plot_path, "output file")->required();
    plot_cmd->add_option("--width", plot_width, "viewport width in px");
    plot_cmd->add_option("--height", plot_height, "viewport height in px");

    std::uint64_t bench_limit = 0;
    bool bench_json = false;
    CLI::App* bench_cmd =
        app.add_subcommand("bench", "time plain sieve vs wheel sieve vs candidate filter");
    bench_cmd->add_option("--limit", bench_limit, "sieve bound")->required();
    bench_cmd->add_flag("--json", bench_json, "machine-readable output");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        err << app.help();
        return 2;
    }

    try {
        if (app.got_subcommand(classify_cmd)) return cmd_classify(out, classify_n, classify_json);
        if (app.got_subcommand(verify_cmd)) return cmd_verify(out, verify_max, verify_json);
        if (app.got_subcommand(rhythm_cmd)) return cmd_rhythm(out, rhythm_blocks, rhythm_json);
        if (app.got_subcommand(twins_cmd)) return cmd_twins(out, twins_max, twins_json);
        if (app.got_subcommand(spectrum_cmd)) {
            return cmd_spectrum(out, spectrum_start, spectrum_count, spectrum_max_period, spectrum_csv_path,
                                spectrum_json);
        }
        if (app.got_subcommand(plot_cmd)) {
            return cmd_plot(out, plot_kind, plot_max, plot_start, plot_path, plot_width, plot_height);
        }
        if (app.got_subcommand(bench_cmd)) return cmd_bench(out, bench_limit, bench_json);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}

}  // namespace primeray::cli
