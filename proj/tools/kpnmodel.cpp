// Command-line front end: homology of the cubical K(pi,n) complex, homology
// of twisted tensor-product models over a finite base, and machine checks of
// the structural identities.

#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "kpn/algebra.hpp"
#include "kpn/checks.hpp"
#include "kpn/em.hpp"
#include "kpn/errors.hpp"
#include "kpn/json_io.hpp"
#include "kpn/model.hpp"

using namespace kpn;

namespace {

CoeffGroup parse_pi(const std::string& s) {
    if (s == "Z") return CoeffGroup::integers();
    if (s.rfind("Z/", 0) == 0) {
        long long m = std::stoll(s.substr(2));
        return CoeffGroup::mod(m);
    }
    throw FormatError("pi must be Z or Z/<m>, got " + s);
}

HomCoeff parse_coeff(const std::string& s) {
    if (s == "Z") return HomCoeff::integers();
    if (s.rfind("F_", 0) == 0) return HomCoeff::field(std::stoll(s.substr(2)));
    if (s.rfind("F", 0) == 0) return HomCoeff::field(std::stoll(s.substr(1)));
    throw FormatError("coeff must be Z or F_<p>, got " + s);
}

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double elapsed() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

void print_groups(const std::vector<HomologyGroup>& groups, const HomCoeff& coeff) {
    for (const auto& g : groups) {
        if (coeff.is_field())
            std::printf("dim H_%d = %lld\n", g.degree, g.betti);
        else
            std::printf("H_%d = %s\n", g.degree, g.to_string().c_str());
    }
}

int run(int argc, char** argv) {
    CLI::App app{"twisted tensor-product models of K(pi,n) fibrations"};
    app.require_subcommand(1);

    // em-homology
    std::string pi_spec = "Z/2", coeff_spec = "Z", output;
    int n = 1, max_deg = 3;
    long long cap = 1000000;
    bool serial = false;
    auto* em = app.add_subcommand("em-homology",
                                  "homology of the cubical K(pi,n) complex L(pi,n)");
    em->add_option("--pi", pi_spec, "coefficient group pi: Z or Z/<m>")->required();
    em->add_option("--n", n, "degree n of K(pi,n)")->check(CLI::PositiveNumber);
    em->add_option("--max-deg", max_deg, "top homology degree");
    em->add_option("--coeff", coeff_spec, "homology coefficients: Z or F_<p>");
    em->add_option("--cap", cap, "enumeration cap per dimension");
    em->add_flag("--serial", serial, "disable the parallel kernels");
    em->add_option("--output", output, "write a JSON report here");

    // model-homology
    std::string base_path, cocycle_path;
    auto* mh = app.add_subcommand("model-homology",
                                  "homology of the twisted model over a finite base");
    mh->add_option("--base", base_path, "base complex JSON")->required();
    mh->add_option("--cocycle", cocycle_path, "obstruction cocycle JSON")->required();
    mh->add_option("--pi", pi_spec, "coefficient group pi (cross-checked with the cocycle)");
    mh->add_option("--n", n, "degree n of the fiber")->check(CLI::PositiveNumber);
    mh->add_option("--max-deg", max_deg, "top homology degree");
    mh->add_option("--coeff", coeff_spec, "homology coefficients: Z or F_<p>");
    mh->add_option("--cap", cap, "enumeration cap per dimension");
    mh->add_flag("--serial", serial, "disable the parallel kernels");
    mh->add_option("--output", output, "write a JSON report here");

    // verify
    std::string check_name = "all";
    long long trials = 1000;
    unsigned seed = 1;
    bool corrupt = false;
    auto* vf = app.add_subcommand("verify", "machine checks of the structural identities");
    vf->add_option("check", check_name,
                   "twisting | lemma-4-2 | lemma-7-1 | route-equality | action-laws | "
                   "cubical-identities | kappa-properties | prism-identities | cup-product | all");
    vf->add_option("--base", base_path, "base complex JSON (default: boundary of a tetrahedron)");
    vf->add_option("--cocycle", cocycle_path, "cocycle JSON (default: one triangle mod 2)");
    vf->add_option("--pi", pi_spec, "coefficient group for the default instance");
    vf->add_option("--n", n, "degree n")->check(CLI::PositiveNumber);
    vf->add_option("--max-deg", max_deg, "model degree for route/action checks");
    vf->add_option("--trials", trials, "randomized trial count");
    vf->add_option("--seed", seed, "random seed");
    vf->add_option("--cap", cap, "enumeration cap per dimension");
    vf->add_flag("--corrupt-sign", corrupt, "negative control: corrupt one face sign");
    vf->add_option("--output", output, "write a JSON report here");

    CLI11_PARSE(app, argc, argv);

    Timer timer;
    Report report;

    if (em->parsed()) {
        CoeffGroup pi = parse_pi(pi_spec);
        HomCoeff coeff = parse_coeff(coeff_spec);
        if (!pi.is_modular())
            throw UnsupportedEnumeration("em-homology needs finite pi (Z/<m>)");
        EmContext L(pi, n, static_cast<size_t>(cap));
        L.set_parallel(!serial);
        report.job = {{"command", "em-homology"}, {"pi", pi_spec},     {"n", n},
                      {"coeff", coeff_spec},      {"max_deg", max_deg}, {"cap", cap}};
        report.groups = L.homology(max_deg, coeff);
        report.normalized_ranks = L.normalized_ranks(max_deg + 1);
        report.total_seconds = timer.elapsed();
        std::printf("L(%s,%d), coefficients %s\n", pi.to_string().c_str(), n,
                    coeff.to_string().c_str());
        print_groups(report.groups, coeff);
        std::printf("nondegenerate ranks:");
        for (long long v : report.normalized_ranks) std::printf(" %lld", v);
        std::printf("\ntime: %.2fs\n", report.total_seconds);
    } else if (mh->parsed()) {
        BaseComplex K = parse_base_complex(load_json_file(base_path));
        BaseCochain z = parse_cochain(load_json_file(cocycle_path), K);
        CoeffGroup pi = z.group;
        if (vf->count("--pi") || mh->count("--pi")) {
            CoeffGroup claimed = parse_pi(pi_spec);
            if (!(claimed == pi))
                throw FormatError("--pi disagrees with the cocycle modulus");
        }
        if (!pi.is_modular())
            throw UnsupportedEnumeration("model-homology needs finite pi (Z/<m>)");
        HomCoeff coeff = parse_coeff(coeff_spec);
        if (z.degree != n + 1)
            throw FormatError("cocycle degree " + std::to_string(z.degree) +
                              " does not equal n+1");
        if (!is_cocycle(K, z)) throw NotACocycle("input cochain is not a cocycle");
        EmContext L(pi, n, static_cast<size_t>(cap));
        L.set_parallel(!serial);
        report.job = {{"command", "model-homology"}, {"base", base_path},
                      {"cocycle", cocycle_path},     {"pi", pi.to_string()},
                      {"n", n},                      {"coeff", coeff_spec},
                      {"max_deg", max_deg},          {"cap", cap}};
        report.groups = model_homology(K, z, L, max_deg, coeff);
        auto witness = cohomologous(K, z, BaseCochain(z.degree, pi));
        report.cocycle_is_coboundary = witness.has_value();
        report.total_seconds = timer.elapsed();
        std::printf("model over %d vertices, pi = %s, n = %d, coefficients %s\n",
                    K.vertex_count(), pi.to_string().c_str(), n, coeff.to_string().c_str());
        std::printf("cocycle is %sa coboundary\n", witness ? "" : "not ");
        print_groups(report.groups, coeff);
        std::printf("time: %.2fs\n", report.total_seconds);
    } else {
        VerifyInstance inst = default_instance(2);
        inst.pi = parse_pi(pi_spec);
        if (!inst.pi.is_modular())
            throw UnsupportedEnumeration("verify needs finite pi (Z/<m>)");
        inst.n = n;
        inst.trials = trials;
        inst.seed = seed;
        inst.cap = static_cast<size_t>(cap);
        inst.corrupt_sign = corrupt;
        inst.max_degree = max_deg;
        if (!base_path.empty()) inst.K = parse_base_complex(load_json_file(base_path));
        if (!cocycle_path.empty()) {
            inst.z = parse_cochain(load_json_file(cocycle_path), inst.K);
            inst.pi = inst.z.group;
        } else {
            // default cocycle: the lexicographically first top simplex carries 1
            inst.z = BaseCochain(inst.n + 1, inst.pi);
            if (inst.K.count(inst.n + 1) > 0) inst.z.set(0, 1);
            if (!is_cocycle(inst.K, inst.z)) inst.z = BaseCochain(inst.n + 1, inst.pi);
        }
        if (!is_cocycle(inst.K, inst.z)) throw NotACocycle("verify input is not a cocycle");
        report.job = {{"command", "verify"},   {"check", check_name}, {"pi", inst.pi.to_string()},
                      {"n", inst.n},           {"trials", trials},    {"seed", seed},
                      {"max_deg", max_deg},    {"corrupt_sign", corrupt}};
        std::vector<std::string> names =
            (check_name == "all") ? all_check_names() : std::vector<std::string>{check_name};
        bool all_pass = true;
        for (const auto& nm : names) {
            CheckResult res = run_check(nm, inst);
            report.checks.push_back(res);
            all_pass = all_pass && res.pass;
            std::printf("%-20s %s  (%lld cases, %.2fs)%s%s\n", nm.c_str(),
                        res.pass ? "pass" : "FAIL", res.cases, res.seconds,
                        res.counterexample.empty() ? "" : "  first counterexample: ",
                        res.counterexample.c_str());
        }
        report.total_seconds = timer.elapsed();
        if (!output.empty()) save_json_file(output, emit_report(report));
        return all_pass ? 0 : 1;
    }

    if (!output.empty()) save_json_file(output, emit_report(report));
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const SizeLimitExceeded& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const ValidationError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const OverflowError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
