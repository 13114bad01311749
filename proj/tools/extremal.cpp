// Command-line front end: analyze, classify, generate, verify, sequences.
//
// Exit codes: 0 success, 1 verification found a violation, 2 usage or parse
// error, 3 I/O error. Results go to stdout, diagnostics to stderr.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "extremal/extremal.hpp"

namespace {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_all(std::istream& in) {
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string read_input(const std::string& path) {
    if (path == "-") return read_all(std::cin);
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open input file: " + path);
    return read_all(in);
}

void write_output(const std::string& path, const std::string& data) {
    if (path.empty() || path == "-") {
        std::cout << data;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open output file: " + path);
    out << data;
    if (!out) throw IoError("write failed: " + path);
}

std::string strip_line_ending(std::string line) {
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.pop_back();
    return line;
}

// Loads one graph from an edge-list input or one graph per line from a
// graph6 input.
std::vector<extremal::Graph> load_graphs(const std::string& input, const std::string& inline_g6,
                                         const std::string& format) {
    std::vector<extremal::Graph> graphs;
    if (!inline_g6.empty()) {
        graphs.push_back(extremal::decode_graph6(strip_line_ending(inline_g6)));
        return graphs;
    }
    const std::string text = read_input(input);
    if (format == "edgelist") {
        graphs.push_back(extremal::parse_edge_list(text));
        return graphs;
    }
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        line = strip_line_ending(line);
        if (line.empty()) continue;
        graphs.push_back(extremal::decode_graph6(line));
    }
    if (graphs.empty()) throw extremal::ParseError("graph6 input contains no graphs");
    return graphs;
}

struct CommonInputOptions {
    std::string input = "-";
    std::string inline_g6;
    std::string format = "edgelist";
    std::string output = "text";
};

void add_input_options(CLI::App* cmd, CommonInputOptions& opts) {
    cmd->add_option("input", opts.input, "input file, or - for stdin")->default_val("-");
    cmd->add_option("--g6", opts.inline_g6, "inline graph6 string instead of a file");
    cmd->add_option("--format", opts.format, "input format")
        ->check(CLI::IsMember({"edgelist", "graph6"}))
        ->default_val("edgelist");
    cmd->add_option("--output", opts.output, "output style")
        ->check(CLI::IsMember({"text", "record"}))
        ->default_val("text");
}

int cmd_analyze(const CommonInputOptions& opts) {
    const auto graphs = load_graphs(opts.input, opts.inline_g6, opts.format);
    bool first = true;
    for (const auto& g : graphs) {
        const auto report = extremal::invariant_report(g);
        if (opts.output == "record") {
            std::cout << extremal::to_record(report) << '\n';
        } else {
            if (!first) std::cout << '\n';
            std::cout << extremal::to_text(report);
        }
        first = false;
    }
    return 0;
}

int cmd_classify(const CommonInputOptions& opts) {
    const auto graphs = load_graphs(opts.input, opts.inline_g6, opts.format);
    bool first = true;
    for (const auto& g : graphs) {
        const auto cls = extremal::classify(g);
        if (opts.output == "record") {
            std::cout << extremal::to_record(cls, g.vertex_count()) << '\n';
        } else {
            if (!first) std::cout << '\n';
            std::cout << extremal::to_text(cls) << '\n';
            if (const auto depth = extremal::predicted_depth(cls, g.vertex_count()))
                std::cout << "predicted_depth=" << *depth << '\n';
        }
        first = false;
    }
    return 0;
}

int emit_generated(const extremal::Graph& g, const std::string& format, const std::string& out) {
    if (format == "graph6")
        write_output(out, extremal::encode_graph6(g) + "\n");
    else
        write_output(out, extremal::write_edge_list(g));
    return 0;
}

int cmd_verify(int max_n, int jobs, bool allow_n8, const std::string& output,
               const std::string& violations_path) {
    bool all_clean = true;
    std::vector<std::string> violations;
    for (int n = 3; n <= max_n; ++n) {
        extremal::ProgressFn progress;
        if (n == 8 && allow_n8)
            progress = [](std::uint64_t done, std::uint64_t total) {
                std::cerr << "n=8: " << done << '/' << total << " masks\r" << (done == total ? "\n" : "");
            };
        const auto summary = extremal::verify_classification(n, jobs, progress);
        if (output == "record") {
            std::cout << extremal::to_record(summary) << '\n';
        } else {
            if (n > 3) std::cout << '\n';
            std::cout << extremal::to_text(summary);
        }
        const bool clean = summary.mismatches.empty() && summary.lemma_violations.empty() &&
                           summary.chordality_violations.empty();
        all_clean = all_clean && clean;
        for (const auto* list : {&summary.mismatches, &summary.lemma_violations, &summary.chordality_violations})
            violations.insert(violations.end(), list->begin(), list->end());
    }
    if (!violations_path.empty()) {
        std::sort(violations.begin(), violations.end());
        violations.erase(std::unique(violations.begin(), violations.end()), violations.end());
        std::string data;
        for (const auto& g6 : violations) data += g6 + "\n";
        write_output(violations_path, data);
    }
    return all_clean ? 0 : 1;
}

int cmd_sequences(int n, int jobs, const std::string& output) {
    const auto check = extremal::verify_sequences(n, jobs);
    if (output == "record")
        std::cout << extremal::to_record(check) << '\n';
    else
        std::cout << extremal::to_text(check);
    return check.agree ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graph invariants, extremal families and exhaustive verification"};
    app.require_subcommand(1);

    CommonInputOptions analyze_opts;
    auto* analyze = app.add_subcommand("analyze", "print the invariant report of a graph");
    add_input_options(analyze, analyze_opts);

    CommonInputOptions classify_opts;
    auto* classify = app.add_subcommand("classify", "classify a graph and print its certificate");
    add_input_options(classify, classify_opts);

    auto* generate = app.add_subcommand("generate", "build a family member");
    generate->require_subcommand(1);
    std::string gen_format = "edgelist";
    std::string gen_out;
    int gamma_d = 0, gamma_f = 0;
    auto* gen_gamma = generate->add_subcommand("gamma", "path of length d plus f-2 leaves");
    gen_gamma->add_option("--d", gamma_d, "diameter")->required();
    gen_gamma->add_option("--f", gamma_f, "number of free vertices")->required();
    int omega_q = 0, omega_s = 0, omega_t = 0;
    auto* gen_omega = generate->add_subcommand("omega", "two complete graphs sharing a K_q");
    gen_omega->add_option("--q", omega_q, "shared clique size")->required();
    gen_omega->add_option("--s", omega_s, "first private clique size")->required();
    gen_omega->add_option("--t", omega_t, "second private clique size")->required();
    std::string gd_spec;
    auto* gen_gd = generate->add_subcommand("gd", "Gd family member from a spec string");
    gen_gd->add_option("--spec", gd_spec, "e.g. \"d=3; hv=1; H1=2,1; H12=1\"")->required();
    std::string fq_spec;
    auto* gen_fq = generate->add_subcommand("fq", "Fq family member from a spec string");
    gen_fq->add_option("--spec", fq_spec, "e.g. \"q=3; parts=1,1,2\"")->required();
    for (auto* sub : {gen_gamma, gen_omega, gen_gd, gen_fq}) {
        sub->add_option("--format", gen_format, "output format")
            ->check(CLI::IsMember({"edgelist", "graph6"}))
            ->default_val("edgelist");
        sub->add_option("--out", gen_out, "output file (default stdout)");
    }

    int verify_max_n = 0, verify_jobs = 1;
    bool allow_n8 = false;
    std::string verify_output = "text", violations_path;
    auto* verify = app.add_subcommand("verify", "exhaustively check all connected graphs for n=3..max-n");
    verify->add_option("--max-n", verify_max_n, "largest vertex count to scan")
        ->required()
        ->check(CLI::Range(3, 8));
    verify->add_option("--jobs", verify_jobs, "worker count")->default_val(1)->check(CLI::Range(1, 256));
    verify->add_flag("--allow-n8", allow_n8, "permit the 2^28-mask n=8 scan");
    verify->add_option("--output", verify_output, "output style")
        ->check(CLI::IsMember({"text", "record"}))
        ->default_val("text");
    verify->add_option("--violations", violations_path, "side file for violating graphs (graph6 lines)");

    int seq_n = 0, seq_jobs = 1;
    std::string seq_output = "text";
    auto* sequences = app.add_subcommand("sequences", "compare realized and predicted invariant tuples");
    sequences->add_option("--n", seq_n, "vertex count")->required()->check(CLI::Range(3, 7));
    sequences->add_option("--jobs", seq_jobs, "worker count")->default_val(1)->check(CLI::Range(1, 256));
    sequences->add_option("--output", seq_output, "output style")
        ->check(CLI::IsMember({"text", "record"}))
        ->default_val("text");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*analyze) return cmd_analyze(analyze_opts);
        if (*classify) return cmd_classify(classify_opts);
        if (*generate) {
            if (*gen_gamma) return emit_generated(extremal::build_gamma(gamma_d, gamma_f), gen_format, gen_out);
            if (*gen_omega)
                return emit_generated(extremal::build_omega(omega_q, omega_s, omega_t), gen_format, gen_out);
            if (*gen_gd) return emit_generated(extremal::build_gd(extremal::parse_gd_spec(gd_spec)), gen_format, gen_out);
            if (*gen_fq) return emit_generated(extremal::build_fq(extremal::parse_fq_spec(fq_spec)), gen_format, gen_out);
        }
        if (*verify) {
            if (verify_max_n == 8 && !allow_n8) {
                std::cerr << "error: --max-n 8 requires --allow-n8\n";
                return 2;
            }
            return cmd_verify(verify_max_n, verify_jobs, allow_n8, verify_output, violations_path);
        }
        if (*sequences) return cmd_sequences(seq_n, seq_jobs, seq_output);
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const extremal::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
