/*
 * Copyright 2026 The bolz Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bolz/codec.hpp"
#include "bolz/errors.hpp"
#include "bolz/experiments.hpp"
#include "bolz/fsg.hpp"
#include "bolz/oracle_graph.hpp"
#include "bolz/parser.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr std::size_t kDotLimit = 256;

struct UsageFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ModelFlags {
    std::string f_code = "gamma";
    std::string g_code = "gamma";
    unsigned literal_bits = 8;
    std::size_t window = 0;
    std::string parser = "optimal";

    void attach(CLI::App& app, bool with_parser) {
        app.add_option("--f-code", f_code, "Distance code: gamma, delta, fib, fixedN")->capture_default_str();
        app.add_option("--g-code", g_code, "Length code: gamma, delta, fib, fixedN")->capture_default_str();
        app.add_option("--literal-bits", literal_bits, "Bits per raw symbol")->capture_default_str();
        app.add_option("--window", window, "Maximum copy distance, 0 = unbounded")->capture_default_str();
        if (with_parser)
            app.add_option("--parser", parser, "optimal or greedy")
                ->check(CLI::IsMember({"optimal", "greedy"}))
                ->capture_default_str();
    }

    bolz::CostModel model() const {
        const auto f = bolz::parse_code_name(f_code);
        const auto g = bolz::parse_code_name(g_code);
        if (!f) throw UsageFailure("unknown --f-code '" + f_code + "'");
        if (!g) throw UsageFailure("unknown --g-code '" + g_code + "'");
        if (literal_bits < bolz::kMinLiteralBits || literal_bits > bolz::kMaxLiteralBits)
            throw UsageFailure("--literal-bits must be in [1, 32]");
        bolz::CostModel m;
        m.distance_code = *f;
        m.length_code = *g;
        m.literal_bits = literal_bits;
        return m;
    }

    std::optional<std::size_t> max_distance() const {
        if (window == 0) return std::nullopt;
        return window;
    }

    bolz::ParserKind parser_kind() const {
        return parser == "greedy" ? bolz::ParserKind::Greedy : bolz::ParserKind::Optimal;
    }
};

std::vector<std::uint8_t> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, const std::vector<std::uint8_t>& bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot create '" + path + "'");
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

void run_compress(const ModelFlags& flags, const std::string& input, const std::string& output) {
    bolz::CompressOptions opt;
    opt.model = flags.model();
    opt.max_distance = flags.max_distance();
    opt.parser = flags.parser_kind();
    if (!bolz::code_id(opt.model.distance_code) || !bolz::code_id(opt.model.length_code))
        throw UsageFailure("the container only stores gamma, delta, fib and fixed32 codes");
    const auto text = read_file(input);
    const auto result = bolz::compress_detailed(text, opt);
    write_file(output, result.bytes);
    std::cerr << input << ": " << text.size() << " -> " << result.bytes.size() << " bytes, "
              << result.parsing.phrases.size() << " phrases, " << result.payload_bits << " payload bits\n";
}

void run_decompress(const std::string& input, const std::string& output) {
    write_file(output, bolz::decompress(read_file(input)));
}

void run_stats(const ModelFlags& flags, const std::string& input, const std::string& dot_path) {
    const auto model = flags.model();
    const auto text = read_file(input);
    const std::size_t n = text.size();
    bolz::ParseStats stats;
    const auto optimal = bolz::optimal_parse(text, model, flags.max_distance(), &stats);
    const auto greedy = bolz::greedy_parse(text, model, flags.max_distance());
    const std::size_t reach = n == 0 ? 0 : bolz::effective_max_distance(n, model, flags.max_distance());

    std::cout << "n " << n << '\n';
    std::cout << "f " << bolz::code_name(model.distance_code) << '\n';
    std::cout << "g " << bolz::code_name(model.length_code) << '\n';
    std::cout << "max_distance " << reach << '\n';
    if (n > 0) {
        std::cout << "Q_f " << bolz::class_count(model.distance_code, std::max<std::size_t>(reach, 1)) << '\n';
        std::cout << "Q_g " << bolz::class_count(model.length_code, n) << '\n';
    }
    std::cout << "distance_passes " << stats.distance_passes << '\n';
    std::cout << "max_copy_edges " << stats.max_copy_edges << '\n';
    std::cout << "copy_edge_histogram";
    for (std::size_t k = 0; k < stats.copy_edge_histogram.size(); ++k)
        if (stats.copy_edge_histogram[k] != 0) std::cout << ' ' << k << ':' << stats.copy_edge_histogram[k];
    std::cout << '\n';
    std::cout << "optimal_bits " << optimal.total_bits << '\n';
    std::cout << "optimal_phrases " << optimal.phrases.size() << '\n';
    std::cout << "greedy_bits " << greedy.total_bits << '\n';
    std::cout << "greedy_phrases " << greedy.phrases.size() << '\n';

    if (!dot_path.empty()) {
        if (n > kDotLimit) throw UsageFailure("--dot is limited to inputs of at most 256 bytes");
        const auto graph = bolz::build_full_graph(text, model, flags.max_distance());
        const auto dot = bolz::to_dot(bolz::enumerate_maximal_edges(graph), "maximal");
        write_file(dot_path, std::vector<std::uint8_t>(dot.begin(), dot.end()));
    }
}

void run_gapfamily(const ModelFlags& flags, unsigned l_min, unsigned l_max, const std::string& csv_path) {
    if (l_min < 1 || l_max > bolz::kMaxGapFamilyIndex || l_min > l_max)
        throw UsageFailure("need 1 <= --lmin <= --lmax <= 24");
    const auto rows = bolz::run_gap_experiment(l_min, l_max, flags.model());
    if (csv_path.empty()) {
        bolz::write_gap_csv(std::cout, rows);
        return;
    }
    std::ofstream out(csv_path, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot create '" + csv_path + "'");
    bolz::write_gap_csv(out, rows);
}

void run_bench(const ModelFlags& flags, std::size_t min_size, std::size_t max_size, unsigned runs,
               const std::string& input) {
    if (min_size == 0 || min_size > max_size || runs == 0) throw UsageFailure("need 0 < --min <= --max and --runs > 0");
    const auto model = flags.model();
    std::vector<std::uint8_t> source;
    if (!input.empty()) source = read_file(input);
    std::cout << "n,parser,median_seconds,bits\n";
    for (std::size_t n = min_size; n <= max_size; n *= 2) {
        std::vector<std::uint8_t> text;
        if (source.empty()) {
            text = bolz::generate_mixed_text(n);
        } else {
            for (std::size_t k = 0; k < n; ++k) text.push_back(source[k % source.size()]);
        }
        for (const bool optimal : {true, false}) {
            std::vector<double> times;
            std::uint64_t bits = 0;
            for (unsigned r = 0; r < runs; ++r) {
                const auto t0 = std::chrono::steady_clock::now();
                const auto p = optimal ? bolz::optimal_parse(text, model, flags.max_distance())
                                       : bolz::greedy_parse(text, model, flags.max_distance());
                times.push_back(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
                bits = p.total_bits;
            }
            std::sort(times.begin(), times.end());
            std::printf("%zu,%s,%.6f,%llu\n", n, optimal ? "optimal" : "greedy", times[times.size() / 2],
                        static_cast<unsigned long long>(bits));
        }
        if (n > max_size / 2) break;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bolz: bit-optimal LZ77 compressor"};
    app.require_subcommand(1);

    ModelFlags flags;
    std::string input, output, dot_path, csv_path;
    unsigned l_min = 1, l_max = 12, runs = 5;
    std::size_t min_size = std::size_t{1} << 16, max_size = std::size_t{1} << 20;

    auto* compress = app.add_subcommand("compress", "Compress a file");
    flags.attach(*compress, true);
    compress->add_option("input", input, "Input file")->required();
    compress->add_option("-o,--output", output, "Output file")->required();

    auto* decompress = app.add_subcommand("decompress", "Decompress a file");
    decompress->add_option("input", input, "Compressed file")->required();
    decompress->add_option("-o,--output", output, "Output file")->required();

    auto* stats = app.add_subcommand("stats", "Report parse statistics for a file");
    flags.attach(*stats, false);
    stats->add_option("input", input, "Input file")->required();
    stats->add_option("--dot", dot_path, "Write the maximal-edge graph as DOT (inputs up to 256 bytes)");

    auto* gap = app.add_subcommand("gapfamily", "Greedy versus optimal on the S_l family");
    flags.attach(*gap, false);
    gap->add_option("--lmin", l_min, "Smallest l")->capture_default_str();
    gap->add_option("--lmax", l_max, "Largest l")->capture_default_str();
    gap->add_option("--csv", csv_path, "Write CSV here instead of stdout");

    auto* bench = app.add_subcommand("bench", "Median parse time over doubling sizes");
    flags.attach(*bench, false);
    bench->add_option("--min", min_size, "Smallest size in bytes")->capture_default_str();
    bench->add_option("--max", max_size, "Largest size in bytes")->capture_default_str();
    bench->add_option("--runs", runs, "Runs per size")->capture_default_str();
    bench->add_option("--input", input, "Tile this file instead of generated text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*compress)
            run_compress(flags, input, output);
        else if (*decompress)
            run_decompress(input, output);
        else if (*stats)
            run_stats(flags, input, dot_path);
        else if (*gap)
            run_gapfamily(flags, l_min, l_max, csv_path);
        else if (*bench)
            run_bench(flags, min_size, max_size, runs, input);
    } catch (const UsageFailure& e) {
        std::cerr << "bolz: " << e.what() << '\n';
        return kExitUsage;
    } catch (const bolz::CorruptStreamError& e) {
        std::cerr << "bolz: corrupt stream (" << bolz::to_string(e.kind()) << "): " << e.what() << '\n';
        return kExitData;
    } catch (const std::exception& e) {
        std::cerr << "bolz: " << e.what() << '\n';
        return kExitData;
    }
    return kExitOk;
}
