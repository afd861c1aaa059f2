#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "pragval/extract.hpp"
#include "pragval/oracle.hpp"
#include "pragval/render.hpp"
#include "pragval/treeio.hpp"

using namespace pragval;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;   // well-formed input, negative verdict
constexpr int kExitMalformed = 2;  // unreadable or ill-formed input

struct MalformedInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MalformedInput("cannot read " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-") {
        std::cout << content;
        if (!content.empty() && content.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream out(path);
    if (!out) throw MalformedInput("cannot write " + path);
    out << content;
}

ArgPtr load_argument(const std::string& path) {
    ArgPtr arg = parse_argument(read_file(path));
    auto violations = validate(arg);
    if (!violations.empty()) {
        std::string msg = path + ": ill-formed argument tree";
        for (const auto& v : violations) msg += "\n  " + v;
        throw MalformedInput(msg);
    }
    return arg;
}

ValidityWitness load_witness(const std::string& path) {
    ValidityWitness w = parse_witness(read_file(path));
    auto violations = validate(w.argument);
    if (!violations.empty()) {
        std::string msg = path + ": ill-formed witness argument";
        for (const auto& v : violations) msg += "\n  " + v;
        throw MalformedInput(msg);
    }
    return w;
}

std::string format_tree(const ArgPtr& arg, const std::string& format) {
    if (format == "ascii") return render_ascii(arg);
    if (format == "latex") return render_latex(arg);
    return serialize_argument(arg, true) + "\n";
}

std::string join_formulas(const FormulaSet& set) {
    std::string out;
    for (const auto& f : set) {
        if (!out.empty()) out += ", ";
        out += to_string(f);
    }
    return out.empty() ? "(none)" : out;
}

int run_classify(const std::string& path) {
    ArgPtr arg = load_argument(path);
    bool proper = is_proper(arg);
    bool canonical = is_canonical(arg);
    std::cout << "proper: " << (proper ? "true" : "false") << "\n";
    std::cout << "canonical: " << (canonical ? "true" : "false") << "\n";
    std::cout << "degree: " << degree_of_argument(arg) << "\n";
    std::cout << "assumptions: " << join_formulas(assumption_set(arg)) << "\n";
    if (auto path_opt = principal_path(arg)) {
        std::cout << "principal assumption: "
                  << to_string(node_at(arg, path_opt->front()).conclusion()) << "\n";
        std::string coords, formulas;
        for (const auto& occ : *path_opt) {
            if (!coords.empty()) {
                coords += " ";
                formulas += " ; ";
            }
            coords += occ_to_string(occ);
            formulas += to_string(node_at(arg, occ).conclusion());
        }
        std::cout << "principal path: " << formulas << "\n";
        std::cout << "principal path occurrences: " << coords << "\n";
    } else {
        std::cout << "principal assumption: (none)\n";
    }
    auto crits = critical_subarguments(arg);
    std::cout << "critical subarguments: " << crits.size() << "\n";
    for (const auto& occ : crits)
        std::cout << "  critical at " << occ_to_string(occ) << ": "
                  << to_string(node_at(arg, occ).conclusion()) << "\n";
    if (canonical) {
        ProperPart pp = proper_part(arg);
        std::string names;
        for (const auto& occ : pp.proper_assumptions) {
            if (!names.empty()) names += ", ";
            names += to_string(node_at(pp.skeleton, occ).conclusion());
        }
        std::cout << "proper assumptions: " << (names.empty() ? "(none)" : names) << "\n";
    }
    return canonical ? kExitOk : kExitNegative;
}

int run_degree(const std::string& target) {
    if (std::filesystem::exists(target)) {
        std::cout << "degree: " << degree_of_argument(load_argument(target)) << "\n";
    } else {
        std::cout << "degree: " << parse_formula(target)->degree() << "\n";
    }
    return kExitOk;
}

int run_complement(const std::string& path, const std::string& prefix,
                   const std::string& out_path) {
    ArgPtr arg = load_argument(path);
    auto comps = proof_case_complementation(arg, prefix);
    std::string out;
    for (std::size_t i = 0; i < comps.size(); i++) {
        out += "; complementation " + std::to_string(i) + " concluding " +
               to_string(comps[i].conclusion()) + " key " + std::to_string(comps[i].key()) +
               "\n";
        out += comps[i].serialize(true) + "\n";
    }
    write_output(out_path, out);
    return kExitOk;
}

int run_check_witness(const std::string& path, const std::string& prefix) {
    ValidityWitness w = load_witness(path);
    // Check the proof-case set plus any extra complementations the file
    // declares beyond it.
    std::vector<Complementation> comps = proof_case_complementation(w.argument, prefix);
    for (const auto& entry : w.entries) {
        bool listed = false;
        for (const auto& comp : comps)
            if (complementations_equal(comp, entry.comp)) listed = true;
        if (!listed) comps.push_back(entry.comp);
    }
    ValidityReport report = check_validity(w.argument, w, comps, prefix);
    std::cout << "argument: " << join_formulas(assumption_set(w.argument)) << " |- "
              << to_string(w.argument->conclusion()) << "\n";
    for (const auto& msg : report.messages) std::cout << "problem: " << msg << "\n";
    for (const auto& v : report.verdicts) {
        std::cout << "complementation to " << v.conclusion << " [" << v.key
                  << "]: " << (v.ok ? "ok" : "invalid") << "\n";
        for (const auto& msg : v.messages) std::cout << "  " << msg << "\n";
    }
    std::cout << "witness: " << (report.valid ? "valid" : "invalid") << "\n";
    return report.valid ? kExitOk : kExitNegative;
}

int run_extract(const std::string& arg_path, const std::string& wit_path,
                const std::string& format, const std::string& out_path,
                const std::string& report_path, int fuel, const std::string& prefix) {
    ArgPtr arg = load_argument(arg_path);
    ValidityWitness w = load_witness(wit_path);
    if (!trees_equal(w.argument, arg))
        throw MalformedInput(wit_path + ": witness is for a different argument than " + arg_path);
    try {
        ExtractionResult result = extract(arg, w, fuel, prefix);
        std::string body = format == "tree" ? serialize_argument(result.derivation, true) + "\n"
                                            : format_tree(result.derivation, format);
        write_output(out_path, body);
        std::string report;
        for (const auto& line : result.report) report += line + "\n";
        write_output(report_path, report);
        return kExitOk;
    } catch (const ExtractionError& e) {
        std::cerr << "extraction failed: " << e.what() << "\n";
        return kExitNegative;
    }
}

int run_normalize(const std::string& path, int fuel, const std::string& format) {
    ArgPtr arg = load_argument(path);
    auto violations = check_nj(arg);
    if (!violations.empty()) {
        for (const auto& v : violations)
            std::cerr << occ_to_string(v.occ) << ": " << v.message << "\n";
        return kExitNegative;
    }
    NormalizeResult result = normalize(arg, fuel);
    std::cout << format_tree(result.derivation, format);
    std::cout << "steps: " << result.steps << "\n";
    return kExitOk;
}

int run_check_nj(const std::string& path) {
    ArgPtr arg = parse_argument(read_file(path));
    auto violations = check_nj(arg);
    if (violations.empty()) {
        std::cout << "ok\n";
        return kExitOk;
    }
    for (const auto& v : violations)
        std::cout << occ_to_string(v.occ) << ": " << v.message << "\n";
    return kExitNegative;
}

int run_prove(const std::string& text) {
    Sequent seq = parse_sequent(text);
    bool p = provable(seq.gamma, seq.goal);
    std::cout << (p ? "provable" : "unprovable") << "\n";
    return p ? kExitOk : kExitNegative;
}

int run_render(const std::string& path, const std::string& format) {
    ArgPtr arg = load_argument(path);
    std::cout << format_tree(arg, format);
    return kExitOk;
}

int run_search(const std::string& path, int depth, int atoms, const std::string& prefix,
               const std::string& out_path) {
    ArgPtr arg = load_argument(path);
    auto w = search_witness(arg, depth, atoms, prefix);
    if (!w) {
        std::cerr << "no witness found within bounds (depth " << depth << ")\n";
        return kExitNegative;
    }
    write_output(out_path, serialize_witness(*w) + "\n");
    return kExitOk;
}

// One manifest line: "<file> <expected-verdict>".
bool corpus_case(const std::filesystem::path& dir, const std::string& file,
                 const std::string& verdict, std::string& detail) {
    std::string path = (dir / file).string();
    if (verdict == "proper" || verdict == "improper") {
        return is_proper(load_argument(path)) == (verdict == "proper");
    }
    if (verdict == "canonical" || verdict == "non-canonical") {
        return is_canonical(load_argument(path)) == (verdict == "canonical");
    }
    if (verdict == "nj-ok" || verdict == "nj-bad") {
        auto violations = check_nj(parse_argument(read_file(path)));
        if (!violations.empty() && verdict == "nj-bad") return true;
        if (violations.empty() && verdict == "nj-ok") return true;
        for (const auto& v : violations) detail += occ_to_string(v.occ) + ": " + v.message + "; ";
        return false;
    }
    if (verdict == "normal" || verdict == "non-normal") {
        ArgPtr arg = load_argument(path);
        auto violations = check_nj(arg);
        if (!violations.empty()) {
            detail = "not an NJ derivation";
            return false;
        }
        return is_normal(arg) == (verdict == "normal");
    }
    if (verdict == "provable" || verdict == "unprovable") {
        Sequent seq = parse_sequent(read_file(path));
        return provable(seq.gamma, seq.goal) == (verdict == "provable");
    }
    if (verdict == "witness-ok") {
        ValidityWitness w = load_witness(path);
        ValidityReport report = check_validity(w.argument, w);
        if (!report.valid)
            for (const auto& m : report.flatten()) detail += m + "; ";
        return report.valid;
    }
    if (verdict == "extract-ok") {
        ValidityWitness w = load_witness(path);
        ArgPtr arg = w.argument;
        ExtractionResult result = extract(arg, w);
        auto violations = check_nj(result.derivation);
        if (!violations.empty()) {
            detail = "extracted tree rejected: " + violations.front().message;
            return false;
        }
        if (!equal(result.derivation->conclusion(), arg->conclusion())) {
            detail = "conclusion changed";
            return false;
        }
        FormulaSet gamma = assumption_set(arg);
        for (const auto& f : assumption_set(result.derivation))
            if (!gamma.count(f)) {
                detail = "assumption leak: " + to_string(f);
                return false;
            }
        std::vector<FormulaPtr> gvec(gamma.begin(), gamma.end());
        if (!provable(gvec, arg->conclusion())) {
            detail = "decision procedure disagrees";
            return false;
        }
        return true;
    }
    detail = "unknown verdict '" + verdict + "'";
    return false;
}

int run_corpus(const std::string& dir_flag) {
    std::filesystem::path dir(dir_flag);
    std::string manifest = read_file((dir / "manifest.txt").string());
    std::istringstream lines(manifest);
    std::string line;
    int passed = 0, failed = 0;
    while (std::getline(lines, line)) {
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream fields(line);
        std::string file, verdict;
        if (!(fields >> file >> verdict)) continue;
        std::string detail;
        bool ok;
        try {
            ok = corpus_case(dir, file, verdict, detail);
        } catch (const std::exception& e) {
            ok = false;
            detail = e.what();
        }
        std::cout << (ok ? "PASS" : "FAIL") << " " << file << " " << verdict;
        if (!ok && !detail.empty()) std::cout << " (" << detail << ")";
        std::cout << "\n";
        (ok ? passed : failed)++;
    }
    std::cout << "corpus: " << passed << " passed, " << failed << " failed\n";
    return failed == 0 ? kExitOk : kExitNegative;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"pragmatist proof-theoretic validity toolkit"};
    app.require_subcommand(1);

    std::string file, witness_file, out_path, report_path, target, sequent;
    std::string format = "tree";
    std::string prefix = "#c";
    std::string corpus_dir = "corpus";
    int fuel = 100000;
    int depth = 6, atoms = 64;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"ascii", "latex", "tree"}));
    };

    auto* classify = app.add_subcommand("classify", "structural classifiers for an argument");
    classify->add_option("file", file)->required();

    auto* degree = app.add_subcommand("degree", "degree of an argument file or formula");
    degree->add_option("target", target)->required();

    auto* complement = app.add_subcommand("complement", "emit proof-case complementations");
    complement->add_option("file", file)->required();
    complement->add_option("-o,--out", out_path, "output file (default stdout)");
    complement->add_option("--fresh-prefix", prefix, "fresh atom prefix");

    auto* checkw = app.add_subcommand("check-witness", "check a validity witness");
    checkw->add_option("file", witness_file)->required();
    checkw->add_option("--fresh-prefix", prefix, "fresh atom prefix");

    auto* extract_cmd = app.add_subcommand("extract", "derivation extraction from a witness");
    extract_cmd->add_option("file", file)->required();
    extract_cmd->add_option("--witness", witness_file)->required();
    extract_cmd->add_option("-o,--out", out_path, "derivation output file (default stdout)");
    extract_cmd->add_option("--report", report_path, "report output file (default stdout)");
    extract_cmd->add_option("--fuel", fuel, "normalization step cap");
    extract_cmd->add_option("--fresh-prefix", prefix, "fresh atom prefix");
    add_format(extract_cmd);

    auto* normalize_cmd = app.add_subcommand("normalize", "normalize an NJ derivation");
    normalize_cmd->add_option("file", file)->required();
    normalize_cmd->add_option("--fuel", fuel, "normalization step cap");
    add_format(normalize_cmd);

    auto* checknj = app.add_subcommand("check-nj", "check NJ rule instantiation");
    checknj->add_option("file", file)->required();

    auto* prove = app.add_subcommand("prove", "decide an intuitionistic sequent");
    prove->add_option("sequent", sequent)->required();

    auto* render = app.add_subcommand("render", "render an argument tree");
    render->add_option("file", file)->required();
    add_format(render);

    auto* search = app.add_subcommand("search-witness", "bounded brute-force witness search");
    search->add_option("file", file)->required();
    search->add_option("--depth", depth, "search depth bound");
    search->add_option("--atoms", atoms, "fresh atom bound");
    search->add_option("--fresh-prefix", prefix, "fresh atom prefix");
    search->add_option("-o,--out", out_path, "witness output file");

    auto* corpus = app.add_subcommand("corpus", "bundled corpus operations");
    auto* corpus_run = corpus->add_subcommand("run", "run the corpus manifest");
    corpus_run->add_option("--dir", corpus_dir, "corpus directory");
    corpus->require_subcommand(1);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*classify) return run_classify(file);
        if (*degree) return run_degree(target);
        if (*complement) return run_complement(file, prefix, out_path);
        if (*checkw) return run_check_witness(witness_file, prefix);
        if (*extract_cmd)
            return run_extract(file, witness_file, format, out_path, report_path, fuel, prefix);
        if (*normalize_cmd) return run_normalize(file, fuel, format);
        if (*checknj) return run_check_nj(file);
        if (*prove) return run_prove(sequent);
        if (*render) return run_render(file, format);
        if (*search) return run_search(file, depth, atoms, prefix, out_path);
        if (*corpus_run) return run_corpus(corpus_dir);
    } catch (const MalformedInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMalformed;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitMalformed;
    } catch (const InvalidArgumentTree& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMalformed;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return kExitMalformed;
}
