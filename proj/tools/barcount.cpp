// barcount: count and enumerate barcodes with a given Betti curve, compute the
// type A Kostant partition function, and convert between barcodes and magic
// juggling sequences.

#include <omp.h>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "barcount/crosscheck.hpp"
#include "barcount/fiber.hpp"
#include "barcount/io.hpp"
#include "barcount/juggling.hpp"
#include "barcount/kostant.hpp"
#include "barcount/render.hpp"

using namespace barcount;

namespace {

constexpr int kDomainError = 1;
constexpr int kUsageError = 2;

std::string read_input(const std::string& source) {
    if (source.empty() || source == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    const auto first = source.find_first_not_of(" \t\n");
    if (first != std::string::npos && (source[first] == '[' || source[first] == '{')) return source;
    std::ifstream file(source);
    if (!file) throw ParseError("cannot open input file '" + source + "'");
    std::ostringstream text;
    text << file.rdbuf();
    return text.str();
}

std::string render_json_list(const std::vector<Json>& items) {
    std::string out = "[";
    for (std::size_t k = 0; k < items.size(); ++k) {
        out += k ? ",\n  " : "\n  ";
        out += items[k].dump();
    }
    out += items.empty() ? "]\n" : "\n]\n";
    return out;
}

std::size_t default_length(const Barcode& bc) { return static_cast<std::size_t>(bc.max_death() - 1); }

struct Options {
    bool serial = false;
    int threads = 0;
    std::uint64_t cap = kDefaultEnumerationCap;
    bool ascii = false;

    // count / enumerate
    std::string curve;
    std::string method = "recursion";
    std::string format = "json";

    // kostant
    std::string weight;
    std::string basis = "simple";
    bool list = false;

    // juggle / render
    std::string input;
    std::string to = "sequence";
    std::string kind = "barcode";
    std::int64_t length = -1;

    // crosscheck
    std::size_t max_n = 3;
    Entry max_entry = 3;

    Execution execution() const { return serial ? Execution::serial : Execution::parallel; }
    Glyphs glyphs() const { return ascii ? Glyphs::ascii() : Glyphs::unicode(); }
};

void require_under_cap(const BettiCurve& beta, std::uint64_t cap, const char* what) {
    const BigCount total = count_barcodes(beta);
    if (total > cap) throw CapExceeded(what, total, cap);
}

int run_count(const Options& opt) {
    const BettiCurve beta = parse_curve(opt.curve);
    BigCount result;
    if (opt.method == "recursion") {
        result = count_barcodes(beta, {.split_at_zeros = true, .execution = opt.execution()});
    } else if (opt.method == "brute") {
        require_under_cap(beta, opt.cap, "barcodes by brute force");
        result = brute_force_barcodes(beta).size();
    } else if (opt.method == "kostant") {
        result = kostant_count(weight_of_betti(beta));
    } else {
        result = enumerate_sequences(JugglingState(differential(beta).entries), JugglingState{}, beta.size(),
                                     opt.cap, opt.execution())
                     .size();
    }
    std::cout << result << '\n';
    return 0;
}

int run_enumerate(const Options& opt) {
    const BettiCurve beta = parse_curve(opt.curve);
    const auto fiber = enumerate_barcodes(beta, opt.cap);
    if (opt.format == "json") {
        std::vector<Json> items;
        for (const auto& bc : fiber) items.push_back(to_json(bc));
        std::cout << render_json_list(items);
        return 0;
    }
    std::cout << "Betti curve " << to_string(beta) << ": " << fiber.size() << " barcodes\n";
    for (std::size_t k = 0; k < fiber.size(); ++k) {
        std::cout << "\n#" << (k + 1) << ' ' << to_json(fiber[k]).dump() << '\n'
                  << render_barcode(fiber[k], beta.size(), opt.glyphs()).str();
    }
    return 0;
}

int run_kostant(const Options& opt) {
    const auto coords = parse_integers(opt.weight);
    Weight mu;
    if (opt.basis == "standard") {
        try {
            mu = Weight::from_standard(coords);
        } catch (const DomainError& e) {
            throw ParseError(e.what());
        }
    } else {
        mu = Weight::from_simple(coords);
    }
    std::cout << kostant_count(mu) << '\n';
    if (opt.list) {
        std::vector<Json> items;
        for (const auto& p : kostant_partitions(mu, opt.cap)) items.push_back(to_json(p));
        std::cout << render_json_list(items);
    }
    return 0;
}

int run_juggle(const Options& opt) {
    const Json data = parse_json(read_input(opt.input));
    if (opt.to == "sequence") {
        const Barcode bc = barcode_from_json(data);
        const std::size_t n = opt.length >= 0 ? static_cast<std::size_t>(opt.length) : default_length(bc);
        std::cout << to_json(sigma(bc, n)).dump() << '\n';
        return 0;
    }
    const JugglingSequence seq = sequence_from_json(data);
    if (opt.to == "validate") {
        const Validity verdict = is_valid(seq);
        std::cout << verdict.describe() << '\n';
        return verdict.valid() ? 0 : kDomainError;
    }
    if (opt.to == "barcode") {
        std::cout << to_json(sigma_inverse(seq)).dump() << '\n';
        return 0;
    }
    std::cout << render_buckets(seq, opt.glyphs()).str();
    return 0;
}

int run_render(const Options& opt) {
    const Json data = parse_json(read_input(opt.input));
    if (opt.kind == "barcode") {
        const Barcode bc = barcode_from_json(data);
        const std::size_t n = opt.length >= 0 ? static_cast<std::size_t>(opt.length) : default_length(bc);
        std::cout << render_barcode(bc, n, opt.glyphs()).str();
    } else {
        std::cout << render_buckets(sequence_from_json(data), opt.glyphs()).str();
    }
    return 0;
}

int run_crosscheck(const Options& opt) {
    const auto grid = curve_grid(1, opt.max_n, opt.max_entry);
    const auto rows = crosscheck_grid(grid, opt.execution());
    std::size_t failures = 0;
    for (const auto& row : rows) {
        std::cout << format_row(row) << '\n';
        failures += row.passed() ? 0 : 1;
    }
    std::cout << rows.size() - failures << "/" << rows.size() << " curves passed\n";
    return failures == 0 ? 0 : kDomainError;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Count and enumerate barcodes with a given Betti curve"};
    app.require_subcommand(1);
    Options opt;
    app.add_flag("--serial", opt.serial, "Use the serial reference kernels");
    app.add_option("--threads", opt.threads, "OpenMP thread count (0 = runtime default)")
        ->check(CLI::NonNegativeNumber);

    auto* count = app.add_subcommand("count", "Count the barcodes with a Betti curve");
    count->add_option("curve", opt.curve, "Betti curve, e.g. 2,3,2")->required();
    count->add_option("--method", opt.method, "Counting route")
        ->check(CLI::IsMember({"recursion", "brute", "kostant", "juggling"}));
    count->add_option("--cap", opt.cap, "Largest count the enumerating methods will attempt");

    auto* enumerate = app.add_subcommand("enumerate", "List the barcodes with a Betti curve");
    enumerate->add_option("curve", opt.curve, "Betti curve, e.g. 2,3,2")->required();
    enumerate->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "render"}));
    enumerate->add_option("--cap", opt.cap, "Refuse fibers larger than this");
    enumerate->add_flag("--ascii", opt.ascii, "Plain ASCII glyphs");

    auto* kostant = app.add_subcommand("kostant", "Kostant partition function of a type A weight");
    kostant->add_option("weight", opt.weight, "Comma-separated coordinates")->required();
    kostant->add_option("--basis", opt.basis, "Coordinate system of the weight")
        ->check(CLI::IsMember({"simple", "standard"}));
    kostant->add_flag("--list", opt.list, "Also print every root partition");
    kostant->add_option("--cap", opt.cap, "Refuse to list more partitions than this");

    auto* juggle = app.add_subcommand("juggle", "Convert between barcodes and juggling sequences");
    juggle->add_option("input", opt.input, "JSON literal, file, or - for stdin");
    juggle->add_option("--to", opt.to, "Conversion target")
        ->check(CLI::IsMember({"sequence", "barcode", "buckets", "validate"}));
    juggle->add_option("--n", opt.length, "Curve length n (default: largest death - 1)");
    juggle->add_flag("--ascii", opt.ascii, "Plain ASCII glyphs");

    auto* render = app.add_subcommand("render", "Draw a barcode or a bucket diagram");
    render->add_option("input", opt.input, "JSON literal, file, or - for stdin");
    render->add_option("--kind", opt.kind, "What the input holds")->check(CLI::IsMember({"barcode", "sequence"}));
    render->add_option("--n", opt.length, "Curve length n (default: largest death - 1)");
    render->add_flag("--ascii", opt.ascii, "Plain ASCII glyphs");

    auto* crosscheck = app.add_subcommand("crosscheck", "Compare every counting route over a grid of curves");
    crosscheck->add_option("--max-n", opt.max_n, "Longest curve")->check(CLI::PositiveNumber);
    crosscheck->add_option("--max-entry", opt.max_entry, "Largest entry")->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsageError;
    }

    if (opt.threads > 0) omp_set_num_threads(opt.threads);

    try {
        if (*count) return run_count(opt);
        if (*enumerate) return run_enumerate(opt);
        if (*kostant) return run_kostant(opt);
        if (*juggle) return run_juggle(opt);
        if (*render) return run_render(opt);
        return run_crosscheck(opt);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kDomainError;
    }
}
