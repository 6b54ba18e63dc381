#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "gnc/commands.hpp"
#include "gnc/errors.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Distances, decoders and property checks for generalized network codes"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string config_path;
    bool toy = false;
    std::uint64_t seed = 1;
    std::optional<std::uint64_t> budget;
    unsigned parallelism = 0;
    std::string format = "text";
    bool corrupt = false;

    auto* cfg = app.add_option("--config", config_path, "Channel configuration file")->check(CLI::ExistingFile);
    auto* toy_flag = app.add_flag("--toy-example", toy, "Use the built-in three-coordinate ternary network");
    cfg->excludes(toy_flag);
    app.add_option("--seed", seed, "Seed for sampled checks")->capture_default_str();
    app.add_option("--budget", budget, "Maximum number of (codeword, error) pairs");
    app.add_option("--parallelism", parallelism, "Worker threads, 0 = hardware concurrency")->capture_default_str();
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "structured"}))->capture_default_str();
    app.add_flag("--inject-fault", corrupt, "Corrupt one distance before verification")->group("");

    auto* distances = app.add_subcommand("distances", "Per-pair and minimum distances");
    auto* capability = app.add_subcommand("capability", "Correction and detection capability");
    std::size_t c = 0, cprime = 0;
    bool cross_check = false;
    auto* joint = app.add_subcommand("joint", "(c,c') joint error correction");
    joint->add_option("--c", c, "Correction radius")->required();
    joint->add_option("--cprime", cprime, "Additional detection radius")->required();
    joint->add_flag("--cross-check", cross_check, "Also run the decoding ball test");
    auto* verify = app.add_subcommand("verify", "Check every distance property on this code");
    std::string y;
    std::optional<std::size_t> bounded;
    auto* decode = app.add_subcommand("decode", "Decode a received word");
    decode->add_option("y", y, "Received word, comma-separated symbols (rows split by ';')")->required();
    decode->add_option("--bounded", bounded, "Bounded distance decoding with this radius");
    auto* classify = app.add_subcommand("classify", "Error-linearity and linearity of the channel");

    CLI11_PARSE(app, argc, argv);

    try {
        if (!toy && config_path.empty()) throw CLI::RequiredError("--config or --toy-example");
        const gnc::Config config = toy ? gnc::toy_config() : gnc::load_config(config_path);
        gnc::CommandOptions options;
        options.seed = seed;
        options.max_pairs = budget;
        options.parallelism = parallelism;
        options.corrupt_distances = corrupt;

        gnc::Report report;
        if (distances->parsed()) report = gnc::cmd_distances(config, options);
        if (capability->parsed()) report = gnc::cmd_capability(config, options);
        if (joint->parsed()) report = gnc::cmd_joint(config, c, cprime, cross_check, options);
        if (verify->parsed()) report = gnc::cmd_verify(config, options);
        if (decode->parsed()) report = gnc::cmd_decode(config, y, bounded, options);
        if (classify->parsed()) report = gnc::cmd_classify(config, options);

        std::cout << (format == "structured" ? gnc::render_structured(report) : gnc::render_text(report));
        return report.exit_code;
    } catch (const CLI::Error& e) {
        return app.exit(e);
    } catch (const gnc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
