// qportrait: validate states, apply portrait maps, evaluate entropic
// inequalities, and run fuzz / minimization campaigns over them.
//
// Exit codes: 0 = success and every inequality holds, 1 = a violation was
// found (the witness is printed), 2 = usage or input errors.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "qportrait/json_io.hpp"

using namespace qportrait;
using nlohmann::json;

namespace {

constexpr uint64_t kDefaultSeed = 0xC0FFEE;

int parse_kv(const std::string& s, char key) {
    // accepts "m=2" / "n=3" or a bare integer
    std::string v = s;
    if (v.size() > 2 && v[0] == key && v[1] == '=') v = v.substr(2);
    try {
        size_t pos = 0;
        const int x = std::stoi(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(s);
        return x;
    } catch (...) {
        throw CLI::ValidationError(std::string("expected ") + key + "=<int>, got " + s);
    }
}

std::vector<double> load_vector(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    const json j = json::parse(in);
    if (!j.is_array()) throw std::invalid_argument(path + ": expected a JSON array");
    return j.get<std::vector<double>>();
}

struct PortraitChoice {
    PortraitKind kind = PortraitKind::FoldDiagonalBlocks;
    int m_for(int dim) const { return have_n ? dim - n_top : m; }
    int m = 1;
    int n_top = 0;
    bool have_n = false;
};

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"entropic inequalities for single-qudit density matrices"};
    app.require_subcommand(1);

    std::string rho_path, sigma_path, kind_name, target_name_, fold_arg, traceblocks_arg,
        csv_path;
    int dim = 2, samples = 1000, restarts = 10, iters = 1000;
    uint64_t seed = kDefaultSeed;
    bool json_out = true;

    if (const char* tol = std::getenv("QPORTRAIT_TOL")) {
        try {
            tolerances().gap = std::stod(tol);
        } catch (...) {
            std::cerr << "invalid QPORTRAIT_TOL: " << tol << "\n";
            return 2;
        }
    }

    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("--rho", rho_path);
        sub->add_option("--sigma", sigma_path);
        sub->add_option("--dim", dim);
        sub->add_option("--kind", kind_name);
        sub->add_option("--target", target_name_);
        sub->add_option("--fold", fold_arg);
        sub->add_option("--traceblocks", traceblocks_arg);
        sub->add_option("--samples", samples);
        sub->add_option("--seed", seed);
        sub->add_option("--restarts", restarts);
        sub->add_option("--iters", iters);
        sub->add_option("--csv", csv_path);
        sub->add_flag("--json", json_out);
    };

    CLI::App* cmd_validate = app.add_subcommand("validate", "check a density matrix");
    CLI::App* cmd_portrait = app.add_subcommand("portrait", "apply a portrait map");
    CLI::App* cmd_entropy = app.add_subcommand("entropy", "von Neumann or relative entropy");
    CLI::App* cmd_inequality = app.add_subcommand("inequality", "evaluate one inequality");
    CLI::App* cmd_chain = app.add_subcommand("chain", "chain of relative entropies");
    CLI::App* cmd_fuzz = app.add_subcommand("fuzz", "random-sampling campaign");
    CLI::App* cmd_minimize = app.add_subcommand("minimize", "derivative-free gap minimization");
    for (CLI::App* sub : {cmd_validate, cmd_portrait, cmd_entropy, cmd_inequality, cmd_chain,
                          cmd_fuzz, cmd_minimize})
        add_common(sub);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        PortraitChoice choice;
        if (!traceblocks_arg.empty()) {
            choice.kind = PortraitKind::TraceBlocks;
            choice.n_top = parse_kv(traceblocks_arg, 'n');
            choice.have_n = true;
        } else if (!fold_arg.empty()) {
            choice.m = parse_kv(fold_arg, 'm');
        }
        const auto partition = [&](int d) { return BlockPartition::for_dim(d, choice.m_for(d)); };

        if (app.got_subcommand(cmd_validate)) {
            const ComplexMatrix m = load_matrix(rho_path);
            const DensityCheck c = check_density(m);
            json j{{"valid", c.ok()}};
            switch (c.defect) {
                case DensityDefect::None: break;
                case DensityDefect::NotHermitian:
                    j["defect"] = "not-hermitian";
                    j["value"] = number_to_json(c.value);
                    break;
                case DensityDefect::TraceNotOne:
                    j["defect"] = "trace-not-one";
                    j["value"] = number_to_json(c.value);
                    break;
                case DensityDefect::NegativeEigenvalue:
                    j["defect"] = "negative-eigenvalue";
                    j["value"] = number_to_json(c.value);
                    break;
            }
            emit(j);
            return c.ok() ? 0 : 1;
        }

        if (app.got_subcommand(cmd_portrait)) {
            const DensityMatrix rho = DensityMatrix::validated(load_matrix(rho_path));
            const DensityMatrix out = apply_portrait(rho, choice.kind, partition(rho.dim()));
            emit(matrix_to_json(out.matrix()));
            return 0;
        }

        if (app.got_subcommand(cmd_entropy)) {
            const DensityMatrix rho = DensityMatrix::validated(load_matrix(rho_path));
            if (sigma_path.empty()) {
                emit(json{{"von_neumann", number_to_json(von_neumann(rho))}});
            } else {
                const DensityMatrix sigma = DensityMatrix::validated(load_matrix(sigma_path));
                emit(json{{"relative_entropy", number_to_json(relative_entropy(rho, sigma))}});
            }
            return 0;
        }

        if (app.got_subcommand(cmd_inequality)) {
            if (kind_name.empty()) kind_name = target_name_;
            if (kind_name.empty()) throw std::invalid_argument("inequality requires --kind");
            InequalityReport rep;
            const Target target = parse_target(kind_name);
            switch (target) {
                case Target::Klein: {
                    const DensityMatrix rho = DensityMatrix::validated(load_matrix(rho_path));
                    const DensityMatrix sigma = DensityMatrix::validated(load_matrix(sigma_path));
                    rep = make_report("klein", relative_entropy(rho, sigma), 0.0);
                    break;
                }
                case Target::Monotonicity: {
                    const DensityMatrix rho = DensityMatrix::validated(load_matrix(rho_path));
                    const DensityMatrix sigma = DensityMatrix::validated(load_matrix(sigma_path));
                    rep = monotonicity_gap(rho, sigma, choice.kind, partition(rho.dim()));
                    break;
                }
                case Target::Nonneg: {
                    const DensityMatrix rho = DensityMatrix::validated(load_matrix(rho_path));
                    rep = portrait_nonneg_gap(rho, choice.kind, partition(rho.dim()));
                    break;
                }
                case Target::ExpBound: {
                    const DensityMatrix rho = DensityMatrix::validated(load_matrix(rho_path));
                    rep = entropy_exp_bound(rho, load_matrix(sigma_path));
                    break;
                }
                case Target::Pairwise:
                    rep = pairwise_exp_sum(load_vector(rho_path));
                    break;
                case Target::Gibbs:
                    rep = gibbs_gap(load_vector(rho_path),
                                    ProbabilityVector(load_vector(sigma_path)));
                    break;
                case Target::Tomogram:
                    rep = tomogram_uncertainty(ProbabilityVector(load_vector(rho_path)));
                    break;
            }
            emit(report_to_json(rep));
            return rep.holds ? 0 : 1;
        }

        if (app.got_subcommand(cmd_chain)) {
            const DensityMatrix rho = DensityMatrix::validated(load_matrix(rho_path));
            const DensityMatrix sigma = DensityMatrix::validated(load_matrix(sigma_path));
            const std::vector<double> gaps = chain_gaps(rho, sigma);
            bool ok = gaps.back() >= -tolerances().gap;
            for (size_t i = 0; i + 1 < gaps.size(); ++i)
                if (gaps[i + 1] > gaps[i] + tolerances().gap) ok = false;
            json arr = json::array();
            for (double g : gaps) arr.push_back(number_to_json(g));
            emit(json{{"chain", arr}, {"holds", ok}});
            return ok ? 0 : 1;
        }

        // fuzz / minimize
        FuzzConfig cfg;
        if (target_name_.empty()) target_name_ = kind_name;
        if (target_name_.empty()) throw std::invalid_argument("missing --target");
        cfg.target = parse_target(target_name_);
        cfg.dim = dim;
        cfg.samples = samples;
        cfg.seed = seed;
        cfg.kind = choice.kind;
        cfg.fold_m = choice.m_for(dim);

        FuzzReport rep;
        if (app.got_subcommand(cmd_fuzz))
            rep = fuzz(cfg);
        else
            rep = minimize_gap(cfg, restarts, iters);
        if (!csv_path.empty()) write_histogram_csv(csv_path, rep.histogram);
        emit(fuzz_report_to_json(rep));
        return rep.violations == 0 ? 0 : 1;
    } catch (const json::parse_error& e) {
        std::cerr << "JSON parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
