// Command-line interface: dimension tables, Gram matrices and kernels,
// generator matrices of the implemented representations, theorem
// verification reports, spectral reports for braid words, and the
// r -> infinity limit scan. All exact scalars are emitted as
// {order, coeffs[]} JSON objects with an approximate complex field.

#include <CLI11.hpp>
#include <iostream>
#include <sstream>
#include <string>

#include "skeinlab/amu.hpp"
#include "skeinlab/json_io.hpp"
#include "skeinlab/verify.hpp"

using namespace skeinlab;

namespace {

// parse "EXP/ORD" into a root of unity
QRoot parse_root(const std::string& s) {
    const auto slash = s.find('/');
    if (slash == std::string::npos)
        throw CLI::ValidationError("root", "expected EXP/ORD, e.g. 1/12");
    const int exp = std::stoi(s.substr(0, slash));
    const int ord = std::stoi(s.substr(slash + 1));
    return QRoot(ord, exp);
}

std::vector<int> parse_word(const std::string& s) {
    std::vector<int> letters;
    std::istringstream in(s);
    int x;
    while (in >> x) letters.push_back(x);
    return letters;
}

// q^{1/2} branch selection with optional override
QRoot pick_half(const QRoot& q, const std::string& branch) {
    const QRoot principal = sqrt_branch(q).half;
    if (branch == "flip") return flip_branch(principal);
    return principal;
}

json spectral_json(const SpectralReport& rep) {
    json moduli = json::array();
    for (double m : rep.moduli) moduli.push_back(m);
    return json{{"dim", rep.dim},
                {"moduli", moduli},
                {"spectral_radius", rep.radius},
                {"trace", to_json(rep.trace)},
                {"criterion", rep.criterion}};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact engine for quantum and homological braid representations "
                 "of the punctured sphere"};
    app.require_subcommand(1);

    int oracle_cap = kDefaultOracleCap;
    double tol = 1e-9;
    std::string branch = "auto";
    app.add_option("--oracle-cap", oracle_cap, "max strand count for diagrammatic evaluation");
    app.add_option("--tol", tol, "floating-point tolerance for spectral checks");
    app.add_option("--sqrt-branch", branch, "square-root branch: auto or flip")
        ->check(CLI::IsMember({"auto", "flip"}));

    int n = 6, N = 1, k = 0, r = 0;
    std::string root_str, q_str, side = "skein", word_str;
    int r_min = 0, r_max = 0, torelli_k = 1, torelli_l = 1;

    auto* dims = app.add_subcommand("dims", "dimension table of skein, quantum and kernel spaces");
    dims->add_option("--n", n)->required();
    dims->add_option("--N", N)->required();
    dims->add_option("--k", k);
    dims->add_option("--r", r);

    auto* gram = app.add_subcommand("gram", "Gram matrix and kernel basis at a root");
    gram->add_option("--n", n)->required();
    gram->add_option("--N", N)->required();
    gram->add_option("--root", root_str, "4r-th root as EXP/ORD");

    auto* rep_cmd = app.add_subcommand("rep", "generator matrices of a representation");
    rep_cmd->add_option("--side", side)->check(CLI::IsMember({"skein", "mcmullen", "burau", "rho-hom"}));
    rep_cmd->add_option("--n", n);
    rep_cmd->add_option("--N", N);
    rep_cmd->add_option("--q", q_str, "root of unity as EXP/ORD");
    rep_cmd->add_option("--root", root_str, "root of unity as EXP/ORD (skein side)");

    auto* verify_cmd = app.add_subcommand("verify", "verify the kernel/homology isomorphism");
    verify_cmd->add_option("--n", n)->required();
    verify_cmd->add_option("--N", N)->required();

    auto* spectral = app.add_subcommand("spectral", "spectral report of a braid word");
    spectral->add_option("--word", word_str, "letters, e.g. \"1 -2\"")->required();
    spectral->add_option("--side", side)->check(CLI::IsMember({"mcmullen", "rho-hom"}));
    spectral->add_option("--n", n);
    spectral->add_option("--q", q_str);

    auto* scan = app.add_subcommand("limit-scan", "limit experiment on the four-punctured sphere");
    scan->add_option("--N", N)->required();
    scan->add_option("--word", word_str)->required();
    scan->add_option("--r-min", r_min)->required();
    scan->add_option("--r-max", r_max)->required();
    scan->add_option("--target", root_str, "target root as EXP/ORD");

    CLI11_PARSE(app, argc, argv);

    try {
        json out;
        bool pass = true;

        if (*dims) {
            if (r == 0) r = N * n / 2;
            out = json{{"n", n},
                       {"N", N},
                       {"k", k},
                       {"r", r},
                       {"skein_dim", skein_dimension(n, N, k)},
                       {"quantum_dim", tqft_dimension(n, N, k, r)},
                       {"kernel_dim", kernel_dimension_count(n, N, k, r)}};
        } else if (*gram) {
            const QRoot a = root_str.empty() ? QRoot(2 * N * n, 1) : parse_root(root_str);
            ClusterBasis b = cluster_basis(n, N, k);
            auto g = gram_matrix(b, a, oracle_cap);
            auto ker = kernel_space(b, a, oracle_cap);
            out = json{{"n", n}, {"N", N}, {"root", to_json(a)},
                       {"dim", b.elements.size()}, {"gram", to_json(g)},
                       {"kernel_dim", ker.size()}, {"kernel", json::array()}};
            for (const auto& v : ker) out["kernel"].push_back(to_json(v));
        } else if (*rep_cmd) {
            out["side"] = side;
            if (side == "skein") {
                const QRoot a = root_str.empty() ? QRoot(2 * N * n, 1) : parse_root(root_str);
                ClusterBasis b = cluster_basis(n, N);
                out["root"] = to_json(a);
                out["generators"] = json::array();
                for (int i = 1; i <= n - 1; ++i)
                    out["generators"].push_back(to_json(sigma_matrix(b, i, a, +1, oracle_cap)));
            } else if (side == "mcmullen") {
                const QRoot q = parse_root(q_str);
                out["q"] = to_json(q);
                const bool q_pow_n = (static_cast<long long>(n) * q.exponent) % q.order == 0;
                auto gens = q_pow_n ? homological_matrices(n, q, pick_half(q, branch))
                                    : reflection_matrices(n, q);
                out["generators"] = json::array();
                for (const auto& m : gens) out["generators"].push_back(to_json(m));
            } else if (side == "burau") {
                const QRoot q = parse_root(q_str);
                out["q"] = to_json(q);
                auto gens = burau_reduced(n, CycloNum::from_root(q), CycloNum::one(q.order));
                out["generators"] = json::array();
                for (const auto& m : gens) out["generators"].push_back(to_json(m));
            } else {  // rho-hom: the integral 2x2 pair
                json g1 = {{"rows", {{1, 1}, {0, 1}}}}, g2 = {{"rows", {{1, 0}, {-1, 1}}}};
                out["generators"] = json::array({g1, g2, g1});
            }
        } else if (*verify_cmd) {
            TheoremReport rep = n == 4 ? verify_theorem_n4(N, oracle_cap)
                                       : verify_theorem_n6(n, N, oracle_cap);
            out = json{{"case", {{"n", rep.n}, {"N", rep.N}}},
                       {"matched", rep.matched},
                       {"root", to_json(rep.root)},
                       {"q", to_json(rep.q)},
                       {"lambda", to_json(rep.lambda)},
                       {"phase", to_json(rep.phase)},
                       {"expected_phase", to_json(rep.expected_phase)},
                       {"skein_sqrt_sign", rep.skein_sqrt_sign},
                       {"homological_half", to_json(rep.homological_half)},
                       {"sign_adjustment", rep.sign_adjustment}};
            pass = rep.matched;
        } else if (*spectral) {
            BraidWord w{n, parse_word(word_str)};
            if (side == "rho-hom") {
                w.n = 4;
                out = json{{"side", side}, {"pseudo_anosov", pa_test_n4(w)}};
            } else {
                const QRoot q = parse_root(q_str);
                auto rep = pa_criterion_homological(w, n, q, tol);
                out = spectral_json(rep);
                out["side"] = side;
                out["q"] = to_json(q);
            }
        } else if (*scan) {
            BraidWord w{4, parse_word(word_str)};
            const QRoot target = root_str.empty() ? QRoot(8 * N, 1) : parse_root(root_str);
            auto rows = limit_scan(N, w, r_min, r_max, target, oracle_cap);
            out = json{{"N", N}, {"target", to_json(target)}, {"rows", json::array()}};
            for (const auto& row : rows)
                out["rows"].push_back(json{{"r", row.r},
                                           {"root", to_json(row.root)},
                                           {"root_gap", row.root_gap},
                                           {"spectral_radius", row.radius},
                                           {"entry_gap", row.entry_gap}});
        }

        std::cout << out.dump(2) << "\n";
        return pass ? 0 : 1;
    } catch (const std::exception& e) {
        json err{{"error", e.what()}};
        std::cout << err.dump(2) << "\n";
        return 2;
    }
}
