// Command line front end. All computation goes through the shared library's
// C interface; this translation unit only parses flags, moves bytes between
// files and streams, and formats reports.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qinfo.h"
#include "report.hpp"

namespace {

int domain_error(qinfo_status status) {
    std::cerr << "error: " << qinfo_last_error() << " [" << qinfo_status_name(status) << "]\n";
    return 1;
}

#define QINFO_TRY(call)                                        \
    do {                                                       \
        const qinfo_status status_ = (call);                   \
        if (status_ != QINFO_OK) return domain_error(status_); \
    } while (0)

struct StateHandle {
    qinfo_state* ptr = nullptr;
    ~StateHandle() { qinfo_state_free(ptr); }
};

struct MubHandle {
    qinfo_mub* ptr = nullptr;
    ~MubHandle() { qinfo_mub_free(ptr); }
};

bool read_file(const std::string& path, std::string& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::ostringstream buf;
    buf << in.rdbuf();
    out = buf.str();
    return true;
}

// Empty path means stdout.
int emit(const std::string& data, const std::string& path) {
    if (path.empty()) {
        std::cout << data;
        return 0;
    }
    std::ofstream out(path, std::ios::binary);
    out << data;
    if (!out) {
        std::cerr << "error: cannot write " << path << "\n";
        return 1;
    }
    return 0;
}

std::optional<std::vector<double>> parse_double_list(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            size_t used = 0;
            out.push_back(std::stod(item, &used));
            if (used != item.size()) return std::nullopt;
        } catch (...) {
            return std::nullopt;
        }
    }
    if (out.empty()) return std::nullopt;
    return out;
}

struct Sweep {
    double start;
    double stop;
    int count;
};

std::optional<Sweep> parse_sweep(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (parts.size() != 3) return std::nullopt;
    try {
        size_t used = 0;
        Sweep sweep{};
        sweep.start = std::stod(parts[0], &used);
        if (used != parts[0].size()) return std::nullopt;
        sweep.stop = std::stod(parts[1], &used);
        if (used != parts[1].size()) return std::nullopt;
        sweep.count = std::stoi(parts[2], &used);
        if (used != parts[2].size()) return std::nullopt;
        return sweep;
    } catch (...) {
        return std::nullopt;
    }
}

int usage_error(const std::string& message) {
    std::cerr << "usage error: " << message << "\n";
    return 2;
}

int load_state(const std::string& path, StateHandle& handle) {
    std::string text;
    if (!read_file(path, text)) {
        std::cerr << "error: cannot read " << path << "\n";
        return 1;
    }
    QINFO_TRY(qinfo_state_from_json(text.c_str(), &handle.ptr));
    return 0;
}

report::Json state_matrix_json(const qinfo_state* state) {
    const int dim = qinfo_state_dim(state);
    std::vector<double> re(static_cast<size_t>(dim) * dim), im(re.size());
    qinfo_state_get(state, re.data(), im.data());
    report::Json j = report::Json::object();
    j.set("dim", report::Json::integer(dim));
    j.set("re", report::Json::matrix(re.data(), dim, dim));
    j.set("im", report::Json::matrix(im.data(), dim, dim));
    return j;
}

/* ---- subcommands ---- */

int cmd_info(const std::string& p_text, const std::string& scheme, const std::string& out_path) {
    const auto p = parse_double_list(p_text);
    if (!p) return usage_error("--p expects a comma-separated list of probabilities");
    const qinfo_norm norm = scheme == "bits" ? QINFO_NORM_BITS : QINFO_NORM_UNIT;

    double entropy = 0.0, lack = 0.0, measure = 0.0;
    const int n = static_cast<int>(p->size());
    QINFO_TRY(qinfo_shannon_entropy(p->data(), n, &entropy));
    QINFO_TRY(qinfo_uncertainty(p->data(), n, &lack));
    QINFO_TRY(qinfo_info_measure(p->data(), n, norm, &measure));

    report::Json j = report::Json::object();
    j.set("H", report::Json::number(entropy));
    j.set("U", report::Json::number(lack));
    j.set("I", report::Json::number(measure));
    if (n == 2) {
        double i = 0.0;
        QINFO_TRY(qinfo_binary_info(p->data(), n, &i, nullptr));
        j.set("i", report::Json::number(i));
    }
    return emit(j.dump(), out_path);
}

int cmd_state(const std::string& from_info, const std::string& from_density,
              const std::string& out_path, const std::string& density_out) {
    StateHandle state;
    if (!from_info.empty()) {
        const auto i = parse_double_list(from_info);
        if (!i || i->size() != 3) return usage_error("--from-info expects i1,i2,i3");
        QINFO_TRY(qinfo_state_from_info(i->data(), &state.ptr));
    } else {
        const int rc = load_state(from_density, state);
        if (rc != 0) return rc;
    }

    const int dim = qinfo_state_dim(state.ptr);
    double purity = 0.0;
    QINFO_TRY(qinfo_state_purity(state.ptr, &purity));

    report::Json j = report::Json::object();
    j.set("dim", report::Json::integer(dim));
    j.set("purity", report::Json::number(purity));
    if (dim == 2) {
        double i[3] = {0, 0, 0};
        QINFO_TRY(qinfo_state_to_info(state.ptr, i));
        j.set("i", report::Json::numbers(i, 3));
    }
    // total information over a complete unbiased basis set, where one exists
    MubHandle mub;
    if (qinfo_mub_construct(dim, &mub.ptr) == QINFO_OK) {
        double total = 0.0;
        QINFO_TRY(qinfo_total_info_general(state.ptr, mub.ptr, QINFO_NORM_UNIT, &total));
        j.set("total_info", report::Json::number(total));
        j.set("scheme", report::Json::string("unit"));
    }
    j.set("density", state_matrix_json(state.ptr));

    if (!density_out.empty()) {
        char* text = nullptr;
        QINFO_TRY(qinfo_state_to_json(state.ptr, &text));
        std::string data(text);
        qinfo_string_free(text);
        data.push_back('\n');
        const int rc = emit(data, density_out);
        if (rc != 0) return rc;
    }
    return emit(j.dump(), out_path);
}

int cmd_mub(int dim, const std::string& out_path) {
    MubHandle mub;
    QINFO_TRY(qinfo_mub_construct(dim, &mub.ptr));

    double orth = 0.0, unbias = 0.0;
    QINFO_TRY(qinfo_mub_verify(mub.ptr, &orth, &unbias));

    char* text = nullptr;
    QINFO_TRY(qinfo_mub_to_json(mub.ptr, &text));
    std::string data(text);
    qinfo_string_free(text);
    data.push_back('\n');
    const int rc = emit(data, out_path);
    if (rc != 0) return rc;

    if (orth >= 1e-9 || unbias >= 1e-9) {
        std::cerr << "error: verifier errors exceed 1e-9 (orthonormality " << orth
                  << ", unbiasedness " << unbias << ")\n";
        return 1;
    }
    return 0;
}

int cmd_malus(double n, const std::string& sweep_text, const std::string& out_path) {
    const auto sweep = parse_sweep(sweep_text);
    if (!sweep) return usage_error("--sweep expects start:stop:count");
    if (sweep->count < 2) return usage_error("--sweep count must be at least 2");

    std::vector<double> rows(static_cast<size_t>(sweep->count) * 6);
    QINFO_TRY(qinfo_malus_sweep(n, sweep->start, sweep->stop, sweep->count, rows.data()));

    report::Csv csv({"theta", "f_ode", "f_closed", "p_malus", "p_oracle", "abs_err"});
    for (int k = 0; k < sweep->count; ++k) csv.row(rows.data() + static_cast<size_t>(k) * 6, 6);
    return emit(csv.text(), out_path);
}

int cmd_entangle(const std::string& state_path, const std::string& planes_mode,
                 const std::string& method_name, const std::string& out_path) {
    StateHandle state;
    const int rc = load_state(state_path, state);
    if (rc != 0) return rc;

    double tensor[9];
    QINFO_TRY(qinfo_correlation_tensor(state.ptr, tensor));

    double m = 0.0, chsh = 0.0;
    int violates = 0, entangled = 0;
    QINFO_TRY(qinfo_chsh_report(state.ptr, &m, &chsh, &violates, &entangled));

    double planes[12] = {1, 0, 0, 0, 1, 0, 1, 0, 0, 0, 1, 0};
    double i_corr = 0.0;
    if (planes_mode == "optimize") {
        const qinfo_opt_method method =
            method_name == "numeric" ? QINFO_OPT_NUMERIC : QINFO_OPT_ANALYTIC;
        QINFO_TRY(qinfo_max_info_corr(state.ptr, method, &i_corr, planes));
    } else {
        QINFO_TRY(qinfo_info_corr(state.ptr, planes, &i_corr));
    }

    report::Json plane_obj = report::Json::object();
    plane_obj.set("mode", report::Json::string(planes_mode));
    if (planes_mode == "optimize") plane_obj.set("method", report::Json::string(method_name));
    plane_obj.set("a1", report::Json::numbers(planes + 0, 3));
    plane_obj.set("a2", report::Json::numbers(planes + 3, 3));
    plane_obj.set("b1", report::Json::numbers(planes + 6, 3));
    plane_obj.set("b2", report::Json::numbers(planes + 9, 3));

    report::Json j = report::Json::object();
    j.set("T", report::Json::matrix(tensor, 3, 3));
    j.set("M", report::Json::number(m));
    j.set("chsh_max", report::Json::number(chsh));
    j.set("i_corr", report::Json::number(i_corr));
    j.set("planes", std::move(plane_obj));
    j.set("violates_bell", report::Json::boolean(violates != 0));
    j.set("entangled_by_criterion", report::Json::boolean(entangled != 0));
    return emit(j.dump(), out_path);
}

int cmd_evolve(const std::string& state_path, const std::string& h_path, double t, double dt,
               const std::string& out_path) {
    StateHandle state;
    const int rc = load_state(state_path, state);
    if (rc != 0) return rc;

    std::string h_text;
    if (!read_file(h_path, h_text)) {
        std::cerr << "error: cannot read " << h_path << "\n";
        return 1;
    }
    double h_re[4], h_im[4];
    QINFO_TRY(qinfo_hamiltonian_from_json(h_text.c_str(), h_re, h_im));

    double i0[3];
    QINFO_TRY(qinfo_state_to_info(state.ptr, i0));
    double u[3];
    QINFO_TRY(qinfo_axis_from_hamiltonian(h_re, h_im, u));

    int rows_needed = 0;
    QINFO_TRY(qinfo_evolve_info(i0, u, t, dt, 0, nullptr, &rows_needed));
    std::vector<double> rows(static_cast<size_t>(rows_needed) * 5);
    QINFO_TRY(qinfo_evolve_info(i0, u, t, dt, rows_needed, rows.data(), nullptr));

    report::Csv csv({"t", "i1", "i2", "i3", "norm"});
    for (int k = 0; k < rows_needed; ++k) csv.row(rows.data() + static_cast<size_t>(k) * 5, 5);
    return emit(csv.text(), out_path);
}

int cmd_sg_sim(double theta, long long trials, std::uint64_t seed, double chebyshev_k, int runs,
               bool with_chebyshev) {
    double p = 0.0;
    long long yes = 0;
    QINFO_TRY(qinfo_simulate_sg(theta, trials, seed, &p, &yes));

    report::Json j = report::Json::object();
    j.set("theta", report::Json::number(theta));
    j.set("p", report::Json::number(p));
    j.set("trials", report::Json::integer(trials));
    j.set("seed", report::Json::unsigned_integer(seed));
    j.set("yes_count", report::Json::integer(yes));
    j.set("frequency",
          report::Json::number(static_cast<double>(yes) / static_cast<double>(trials)));

    if (with_chebyshev) {
        double sigma = 0.0, bound = 0.0, rate = 0.0;
        QINFO_TRY(qinfo_chebyshev_report(theta, trials, chebyshev_k, runs, seed, &sigma, &bound,
                                         &rate));
        report::Json c = report::Json::object();
        c.set("k", report::Json::number(chebyshev_k));
        c.set("runs", report::Json::integer(runs));
        c.set("sigma", report::Json::number(sigma));
        c.set("bound", report::Json::number(bound));
        c.set("empirical_violation_rate", report::Json::number(rate));
        j.set("chebyshev", std::move(c));
    }
    return emit(j.dump(), "");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"invariant-information calculus for small quantum systems"};
    app.require_subcommand(1);

    // info
    auto* info = app.add_subcommand("info", "measures of one outcome distribution");
    std::string info_p;
    std::string info_scheme = "unit";
    std::string info_out;
    info->add_option("--p", info_p, "comma-separated outcome probabilities")->required();
    info->add_option("--scheme", info_scheme, "normalization: unit or bits")
        ->check(CLI::IsMember({"unit", "bits"}));
    info->add_option("--json", info_out, "write the report to a file");

    // state
    auto* state = app.add_subcommand("state", "inspect and convert state representations");
    std::string state_info, state_density, state_out, state_density_out;
    auto* from_info = state->add_option("--from-info", state_info, "information vector i1,i2,i3");
    auto* from_density =
        state->add_option("--from-density", state_density, "state JSON file to load");
    from_info->excludes(from_density);
    state->add_option("--json", state_out, "write the report to a file");
    state->add_option("--density-out", state_density_out, "write the state file form");

    // mub
    auto* mub = app.add_subcommand("mub", "construct and verify a complete unbiased basis set");
    int mub_dim = 0;
    std::string mub_out;
    mub->add_option("--dim", mub_dim, "Hilbert space dimension")->required();
    mub->add_option("--json", mub_out, "write the basis family to a file");

    // malus
    auto* malus = app.add_subcommand("malus", "probability law against the magnet angle");
    double malus_n = 1.0;
    std::string malus_sweep = "0:6.283185307179586:1000";
    std::string malus_out;
    malus->add_option("--n", malus_n, "winding constant (0.5 electrons, 1 photons, 2 gravitons)");
    malus->add_option("--sweep", malus_sweep, "angle sweep start:stop:count");
    malus->add_option("--csv", malus_out, "write the sweep table to a file");

    // entangle
    auto* entangle = app.add_subcommand("entangle", "two-qubit correlation information report");
    std::string ent_state, ent_planes = "canonical", ent_method = "analytic", ent_out;
    entangle->add_option("--state", ent_state, "two-qubit state JSON file")->required();
    entangle->add_option("--planes", ent_planes, "canonical or optimize")
        ->check(CLI::IsMember({"canonical", "optimize"}));
    entangle->add_option("--method", ent_method, "optimizer for --planes optimize")
        ->check(CLI::IsMember({"analytic", "numeric"}));
    entangle->add_option("--json", ent_out, "write the report to a file");

    // evolve
    auto* evolve = app.add_subcommand("evolve", "integrate the information-vector dynamics");
    std::string evo_state, evo_h, evo_out;
    double evo_t = 0.0, evo_dt = 1e-3;
    evolve->add_option("--state", evo_state, "qubit state JSON file")->required();
    evolve->add_option("--hamiltonian", evo_h, "2x2 Hermitian operator JSON file")->required();
    evolve->add_option("--t", evo_t, "evolution time")->required();
    evolve->add_option("--dt", evo_dt, "integration step");
    evolve->add_option("--csv", evo_out, "write the trajectory to a file");

    // sg-sim
    auto* sg = app.add_subcommand("sg-sim", "seeded two-outcome trials at a magnet angle");
    double sg_theta = 0.0, sg_k = 0.0;
    long long sg_trials = 10000;
    std::uint64_t sg_seed = 42;
    int sg_runs = 1000;
    sg->add_option("--theta", sg_theta, "magnet angle in radians")->required();
    sg->add_option("--trials", sg_trials, "trials per run");
    sg->add_option("--seed", sg_seed, "64-bit generator seed");
    auto* sg_k_opt = sg->add_option("--chebyshev-k", sg_k, "add a k-sigma band report");
    sg->add_option("--runs", sg_runs, "independent runs for the band report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (info->parsed()) return cmd_info(info_p, info_scheme, info_out);
    if (state->parsed()) {
        if (state_info.empty() && state_density.empty())
            return usage_error("state needs --from-info or --from-density");
        return cmd_state(state_info, state_density, state_out, state_density_out);
    }
    if (mub->parsed()) return cmd_mub(mub_dim, mub_out);
    if (malus->parsed()) return cmd_malus(malus_n, malus_sweep, malus_out);
    if (entangle->parsed()) return cmd_entangle(ent_state, ent_planes, ent_method, ent_out);
    if (evolve->parsed()) return cmd_evolve(evo_state, evo_h, evo_t, evo_dt, evo_out);
    if (sg->parsed())
        return cmd_sg_sim(sg_theta, sg_trials, sg_seed, sg_k, sg_runs, sg_k_opt->count() > 0);
    return usage_error("no subcommand given");
}
